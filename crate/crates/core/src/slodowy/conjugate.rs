use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::liecore::{Element, GroupElement};
use crate::QMatrix;

use super::SlodowySlice;

/// `y = Ad_u(s)` with `u` unipotent, `log u ∈ ⊕_{λ≤−2} g_λ`, and `s ∈ S_τ`.
#[derive(Clone, Debug, PartialEq)]
pub struct SliceConjugation {
    pub u: GroupElement,
    pub s: Element,
}

/// Moves `y ∈ ξ + p_τ` into the slice by graded elimination.
///
/// Degree by degree from `0` downwards, the degree-`d` part of `y − ξ` is split
/// as `[ξ, z] + s_d` with `z ∈ g_{d−2}` and `s_d ∈ g_η ∩ g_d`, and `y` is
/// replaced by `Ad_{exp z}(y)`, which only changes degrees `≤ d`.
pub fn conjugate_to_slice(slice: &SlodowySlice, y: &Element) -> Result<SliceConjugation> {
    let alg = slice.algebra();
    if !slice.in_xi_plus_parabolic(y) {
        return Err(Error::Precondition("element is not in xi + p_tau".into()));
    }
    let grading = slice.grading();
    let xi = slice.base();
    let mut current = y.clone();
    let mut u = QMatrix::identity(alg.n());
    let mut d = 0;
    while d >= grading.min_degree() {
        let defect = grading.component(&(&current - xi), d);
        let lower = grading.space(d - 2);
        if !defect.is_zero() && !lower.is_empty() {
            let slice_part: Vec<&Element> = slice
                .directions()
                .iter()
                .zip(slice.direction_degrees())
                .filter(|(_, deg)| **deg == d)
                .map(|(v, _)| v)
                .collect();
            let mut columns: Vec<Vec<Rational>> =
                lower.iter().map(|z| alg.bracket(xi, z).into_coords()).collect();
            columns.extend(slice_part.iter().map(|v| v.coords().to_vec()));
            let system = QMatrix::from_columns(&columns, alg.dim());
            let solution = system
                .solve(defect.coords())
                .ok_or_else(|| Error::Internal(format!("no graded split in degree {d}")))?;
            let z = lower.iter().zip(&solution).fold(alg.zero(), |acc, (b, c)| &acc + &b.scale(c));
            if !z.is_zero() {
                let step = alg.exp_nilpotent(&z)?;
                current = alg.adjoint(&step, &current);
                u = u.mul(&crate::liecore::exp_nilpotent_matrix(&alg.to_matrix(&(-&z)))?);
            }
        }
        d -= 1;
    }
    let u = GroupElement::new(u)?;
    let result = SliceConjugation { u, s: current };
    verify_conjugation(slice, y, &result)?;
    Ok(result)
}

/// The a-posteriori checks: `Ad_u(s) = y`, `s ∈ S_τ`, `log u ∈ ⊕_{λ≤−2} g_λ`.
pub(crate) fn verify_conjugation(slice: &SlodowySlice, y: &Element, c: &SliceConjugation) -> Result<()> {
    let alg = slice.algebra();
    if alg.adjoint(&c.u, &c.s) != *y {
        return Err(Error::Internal("Ad_u(s) differs from y".into()));
    }
    if !slice.contains(&c.s) {
        return Err(Error::Internal("s is not in the slice".into()));
    }
    let log = alg.log_unipotent(&c.u)?;
    if slice.grading().top_degree(&log).is_some_and(|top| top > -2) {
        return Err(Error::Internal("u is not in the stabilizer unipotent".into()));
    }
    Ok(())
}
