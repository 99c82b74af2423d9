//! Fibres of the compactified universal centralizer for `PGL_2`, where
//! `Ḡ ≅ P(Mat₂)` through `A ↦ γ_A`.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::liecore::{normalize_projective, Element, LieAlgebra};
use crate::slodowy::{chi_section, SlodowySlice};
use crate::wonderful::pgl2_model;
use crate::QMatrix;

/// `P(span basis) ⊂ P(Mat₂)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectiveFibre {
    pub x: Element,
    pub x_tau: Element,
    pub basis: Vec<QMatrix>,
    /// Rank-one classes in the span, normalized; `None` when they are not
    /// rational.
    pub boundary: Option<Vec<QMatrix>>,
}

impl ProjectiveFibre {
    pub fn projective_dim(&self) -> isize {
        self.basis.len() as isize - 1
    }

    pub fn member(&self, coeffs: &[Rational]) -> QMatrix {
        self.basis.iter().zip(coeffs).fold(QMatrix::zeros(2, 2), |acc, (b, c)| acc.add(&b.scale(c)))
    }
}

/// `{γ ∈ Ḡ : (x, x_τ) ∈ γ} = P({A : xA = A x_τ})`.
pub fn compactified_fibre_pgl2(alg: &LieAlgebra, x: &Element, slice: &SlodowySlice) -> Result<ProjectiveFibre> {
    if alg.n() != 2 {
        return Err(Error::Unsupported("fibres are computed for pgl2 only".into()));
    }
    let x_tau = chi_section(slice, x)?;
    let (xm, tm) = (alg.to_matrix(x), alg.to_matrix(&x_tau));
    let units: Vec<QMatrix> = (0..4)
        .map(|k| QMatrix::from_fn(2, 2, |i, j| if 2 * i + j == k { Rational::from_integer(1.into()) } else { Rational::zero() }))
        .collect();
    let columns: Vec<Vec<Rational>> = units.iter().map(|u| xm.mul(u).sub(&u.mul(&tm)).row_vectors().concat()).collect();
    let kernel = QMatrix::from_columns(&columns, 4).kernel();
    let basis: Vec<QMatrix> = kernel
        .column_vectors()
        .iter()
        .map(|v| QMatrix::from_rows(&[v[..2].to_vec(), v[2..].to_vec()], 2))
        .collect();
    for a in &basis {
        let gamma = pgl2_model(alg, a)?;
        if !gamma.contains(x, &x_tau) {
            return Err(Error::Internal("fibre member does not contain the defining pair".into()));
        }
    }
    let boundary = match basis.as_slice() {
        [a0, a1] => rank_one_members(a0, a1),
        _ => None,
    };
    Ok(ProjectiveFibre { x: x.clone(), x_tau, basis, boundary })
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer().sqrt(), q.denom().sqrt());
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

/// Roots `[α : β]` of `det(αA₀ + βA₁)`, when rational.
fn rank_one_members(a0: &QMatrix, a1: &QMatrix) -> Option<Vec<QMatrix>> {
    let det = |a: &Rational, b: &Rational| a0.scale(a).add(&a1.scale(b)).determinant();
    let one = Rational::from_integer(1.into());
    let zero = Rational::zero();
    let two = &one + &one;
    // det(α, β) = p α² + r αβ + s β²
    let p = det(&one, &zero);
    let s = det(&zero, &one);
    let r = det(&one, &one) - &p - &s;
    let mut roots: Vec<(Rational, Rational)> = Vec::new();
    if p.is_zero() {
        roots.push((one.clone(), zero.clone()));
        if !r.is_zero() {
            roots.push((-s.clone(), r.clone()));
        }
        if r.is_zero() && s.is_zero() {
            return None;
        }
    } else {
        let disc = &r * &r - Rational::from_integer(4.into()) * &p * &s;
        let root = rational_sqrt(&disc)?;
        roots.push(((-&r + &root) / (&two * &p), one.clone()));
        if !root.is_zero() {
            roots.push(((-&r - &root) / (&two * &p), one.clone()));
        }
    }
    let mut points: Vec<QMatrix> = roots
        .iter()
        .map(|(a, b)| normalize_projective(&a0.scale(a).add(&a1.scale(b))).expect("independent basis"))
        .collect();
    points.sort_by_key(|m| m.row_vectors().concat());
    Some(points)
}
