use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{Dual, Rational};
use crate::liecore::Element;

use super::SlodowySlice;

/// The point of the principal slice with the same invariants as `x`.
///
/// With directions ordered by degree `−2, −4, …`, the coefficient `c_{k+1}`
/// of `χ` restricted to the slice is affine in the `k`-th slice coordinate and
/// independent of the later ones, so the coordinates are solved in turn. The
/// slope is read off a dual-number evaluation.
pub fn chi_section(slice: &SlodowySlice, x: &Element) -> Result<Element> {
    if !slice.is_principal() {
        return Err(Error::NotPrincipal);
    }
    let alg = slice.algebra();
    let target = alg.chi(x);
    let r = slice.dim();
    let mut coords = vec![Rational::zero(); r];
    for k in 0..r {
        let duals: Vec<Dual<Rational>> = (0..r)
            .map(|j| if j == k { Dual::variable(Rational::zero()) } else { Dual::constant(coords[j].clone()) })
            .collect();
        let point: Vec<Dual<Rational>> = slice
            .directions()
            .iter()
            .zip(&duals)
            .fold(slice.base().coords().iter().cloned().map(Dual::constant).collect(), |acc: Vec<_>, (d, c)| {
                acc.into_iter()
                    .zip(d.coords())
                    .map(|(a, di)| a + c.clone() * &Dual::constant(di.clone()))
                    .collect()
            });
        let value = &alg.chi_of(&point)[k];
        if value.eps.is_zero() {
            return Err(Error::Internal(format!("slice coordinate {k} does not enter the invariants")));
        }
        coords[k] = (target[k].clone() - &value.value) / &value.eps;
    }
    let s = slice.point(&coords);
    if alg.chi(&s) != target {
        return Err(Error::Internal("section does not reproduce the invariants".into()));
    }
    Ok(s)
}

/// Closed forms for `n ≤ 3` with the standard principal triple:
/// `sl_2`: `e + c f` with `c = −c_2`;
/// `sl_3`: `ξ + a(E_21 + E_32) + b E_31` with `a = −c_2/2`, `b = −c_3`.
pub fn chi_section_closed_form(slice: &SlodowySlice, x: &Element) -> Result<Element> {
    if !slice.is_principal() {
        return Err(Error::NotPrincipal);
    }
    let chi = slice.algebra().chi(x);
    match chi.as_slice() {
        [c2] => Ok(slice.point(&[-c2.clone()])),
        [c2, c3] => Ok(slice.point(&[-c2.clone() / Rational::from_integer(2.into()), -c3.clone()])),
        _ => Err(Error::Unsupported("closed-form section only for n <= 3".into())),
    }
}
