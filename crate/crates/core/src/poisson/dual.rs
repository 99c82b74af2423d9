//! First-order computations with dual-number matrices.

use num_traits::Zero;

use crate::exactnum::{Dual, Matrix, Rational};
use crate::liecore::LieAlgebra;
use crate::{DualMatrix, DualQ, QMatrix};

pub(crate) fn lift(m: &QMatrix) -> DualMatrix {
    m.map(|c| Dual::constant(c.clone()))
}

pub(crate) fn lift_vec(v: &[Rational]) -> Vec<DualQ> {
    v.iter().cloned().map(Dual::constant).collect()
}

pub(crate) fn value_part(m: &DualMatrix) -> QMatrix {
    m.map(|c| c.value.clone())
}

pub(crate) fn eps_part(m: &DualMatrix) -> QMatrix {
    m.map(|c| c.eps.clone())
}

pub(crate) fn eps_vec(v: &[DualQ]) -> Vec<Rational> {
    v.iter().map(|c| c.eps.clone()).collect()
}

/// `(A + εB)⁻¹ = A⁻¹ − ε A⁻¹ B A⁻¹`.
pub(crate) fn inverse(m: &DualMatrix) -> DualMatrix {
    let a_inv = value_part(m).inverse().expect("invertible value part");
    let b = eps_part(m);
    let correction = a_inv.mul(&b).mul(&a_inv).neg();
    Matrix::from_fn(m.rows(), m.cols(), |i, j| Dual::new(a_inv[(i, j)].clone(), correction[(i, j)].clone()))
}

/// `1 + εb` as a matrix, the first-order part of `exp(εb)`.
pub(crate) fn infinitesimal(alg: &LieAlgebra, b: &[Rational]) -> DualMatrix {
    let bm = alg.to_matrix_of(b);
    Matrix::from_fn(alg.n(), alg.n(), |i, j| {
        Dual::new(if i == j { Rational::from_integer(1.into()) } else { Rational::zero() }, bm[(i, j)].clone())
    })
}

/// `g x g⁻¹` in coordinates.
pub(crate) fn adjoint(alg: &LieAlgebra, g: &DualMatrix, x: &[DualQ]) -> Vec<DualQ> {
    let xm = alg.to_matrix_of(x);
    alg.from_matrix_of(&g.mul(&xm).mul(&inverse(g)))
}

/// Left-trivialized tangent `g⁻¹ ġ` of a dual group curve, as coordinates.
pub(crate) fn left_trivialized(alg: &LieAlgebra, g: &DualMatrix) -> Vec<Rational> {
    let value = value_part(g);
    let tangent = value.inverse().expect("invertible").mul(&eps_part(g));
    // representatives are only defined up to scale; drop the scalar part
    let n = Rational::from_integer((alg.n() as i64).into());
    let shift = tangent.trace() / n;
    let trace_free = tangent.sub(&QMatrix::identity(alg.n()).scale(&shift));
    alg.from_matrix(&trace_free).expect("trace-free").into_coords()
}
