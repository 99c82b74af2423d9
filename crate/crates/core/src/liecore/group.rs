use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Sampler};
use crate::QMatrix;

/// A point of `PGL_n`: an invertible matrix up to scalars.
///
/// The stored representative has its first nonzero entry (row-major) equal
/// to `1`, so equality of values is equality of projective classes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    matrix: QMatrix,
}

/// Scales a nonzero matrix so that its first nonzero entry is `1`.
pub fn normalize_projective(m: &QMatrix) -> Option<QMatrix> {
    let lead = (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .map(|ij| &m[ij])
        .find(|x| !x.is_zero())?
        .clone();
    Some(m.scale(&(Rational::one() / lead)))
}

/// Proportionality test for two matrices of the same shape.
pub fn proportional(a: &QMatrix, b: &QMatrix) -> bool {
    match (normalize_projective(a), normalize_projective(b)) {
        (Some(x), Some(y)) => x == y,
        (None, None) => true,
        _ => false,
    }
}

impl GroupElement {
    pub fn new(matrix: QMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch { expected: matrix.rows(), found: matrix.cols() });
        }
        if matrix.determinant().is_zero() {
            return Err(Error::Singular);
        }
        Ok(GroupElement { matrix: normalize_projective(&matrix).expect("invertible") })
    }

    pub fn identity(n: usize) -> Self {
        GroupElement { matrix: QMatrix::identity(n) }
    }

    pub fn diagonal(entries: &[Rational]) -> Result<Self> {
        GroupElement::new(QMatrix::from_diagonal(entries))
    }

    /// Random invertible matrix with small-height entries.
    pub fn sample(n: usize, sampler: &mut Sampler) -> Self {
        loop {
            let m = QMatrix::from_fn(n, n, |_, _| sampler.next_rational());
            if let Ok(g) = GroupElement::new(m) {
                return g;
            }
        }
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement::new(self.matrix.mul(&other.matrix)).expect("product of invertibles")
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement::new(self.matrix.inverse().expect("invertible")).expect("invertible")
    }

    /// `g X g⁻¹` on matrices.
    pub fn conjugate(&self, x: &QMatrix) -> QMatrix {
        let inv = self.matrix.inverse().expect("invertible");
        self.matrix.mul(x).mul(&inv)
    }

    /// The representative `u` with `u − 1` nilpotent, if the class is unipotent.
    pub fn unipotent_representative(&self) -> Result<QMatrix> {
        let n = self.n();
        let trace = self.matrix.trace();
        if trace.is_zero() {
            return Err(Error::NotUnipotent);
        }
        let u = self.matrix.scale(&(Rational::from_integer((n as i64).into()) / trace));
        let nil = u.sub(&QMatrix::identity(n));
        if !nil.pow(n as u32).is_zero() {
            return Err(Error::NotUnipotent);
        }
        Ok(u)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement({})", self.matrix)
    }
}
