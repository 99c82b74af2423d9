//! Poisson bivectors at points: Lie–Poisson on `g`, the canonical structure
//! on `T*G`, products, moment maps and Poisson transversals.
//!
//! Covectors are coordinate vectors against the dual basis of the tangent
//! coordinates in use; a bivector is the matrix of `α ↦ P(α)`.
//!
//! Sign conventions: `P_y(α) = [κα, y]` on `g`, so that
//! `{f₁, f₂}(y) = df₁(P(df₂)) = ⟨y, [κdf₁, κdf₂]⟩`; Hamiltonian vector fields
//! are `H_f = −P(df)`; a `g ⊕ g`-valued moment map `(ν₁, ν₂)` pairs with
//! `(b₁, b₂)` as `⟨ν₁, b₁⟩ − ⟨ν₂, b₂⟩`.

pub(crate) mod dual;
mod moment;
mod transversal;

pub use moment::{
    check_moment_condition, moment_eval, rho, rho_bar_tau, rho_tau, Acting, Generator, MomentCheck, MomentValue,
    SpacePoint,
};
pub use transversal::{
    bivector_rank, orbit_tangent, orbit_transversal, slice_codimension, slice_transversal, transversal_check,
    SliceAmbient, TransversalDecomposition,
};

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::liecore::{Element, GroupElement, LieAlgebra};
use crate::QMatrix;

/// A point `(g, x)` of `T*G ≅ G × g` (left trivialization).
#[derive(Clone, Debug, PartialEq)]
pub struct CotangentPoint {
    pub g: GroupElement,
    pub x: Element,
}

impl CotangentPoint {
    pub fn new(g: GroupElement, x: Element) -> Self {
        CotangentPoint { g, x }
    }

    pub fn at_identity(alg: &LieAlgebra, x: Element) -> Self {
        CotangentPoint { g: GroupElement::identity(alg.n()), x }
    }
}

/// A Poisson bivector evaluated at a point.
#[derive(Clone, PartialEq)]
pub struct PointedBivector {
    matrix: QMatrix,
    point: String,
}

impl PointedBivector {
    pub fn new(matrix: QMatrix, point: impl Into<String>) -> Result<Self> {
        if !matrix.is_skew() {
            return Err(Error::Precondition("bivector matrix is not skew-symmetric".into()));
        }
        Ok(PointedBivector { matrix, point: point.into() })
    }

    /// Lie–Poisson structure on `g` at `y`.
    pub fn lie_poisson(alg: &LieAlgebra, y: &Element) -> Self {
        let matrix = alg.ad_matrix(y).mul(alg.killing_inverse()).neg();
        PointedBivector { matrix, point: format!("lie-poisson at {y}") }
    }

    /// Canonical structure on `T*G` at `(g, x)`, in left-trivialized
    /// coordinates `(y, z) ∈ g ⊕ g`; it does not depend on `g`.
    pub fn cotangent(alg: &LieAlgebra, x: &Element) -> Self {
        let d = alg.dim();
        let kinv = alg.killing_inverse();
        let corner = alg.ad_matrix(x).mul(kinv);
        let matrix = QMatrix::from_fn(2 * d, 2 * d, |i, j| match (i < d, j < d) {
            (true, true) => Rational::zero(),
            (true, false) => kinv[(i, j - d)].clone(),
            (false, true) => -kinv[(i - d, j)].clone(),
            (false, false) => corner[(i - d, j - d)].clone(),
        });
        PointedBivector { matrix, point: format!("cotangent at x = {x}") }
    }

    /// Bivector of `(X₁ × X₂, P₁ ⊕ (−P₂))`.
    pub fn product(first: &PointedBivector, second: &PointedBivector) -> Self {
        let (a, b) = (first.dim(), second.dim());
        let matrix = QMatrix::from_fn(a + b, a + b, |i, j| match (i < a, j < a) {
            (true, true) => first.matrix[(i, j)].clone(),
            (false, false) => -second.matrix[(i - a, j - a)].clone(),
            _ => Rational::zero(),
        });
        PointedBivector { matrix, point: format!("({}) x ({})", first.point, second.point) }
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn point(&self) -> &str {
        &self.point
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, alpha: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(alpha)
    }

    /// `β(P(α))`.
    pub fn pair(&self, alpha: &[Rational], beta: &[Rational]) -> Rational {
        beta.iter().zip(self.apply(alpha)).map(|(b, v)| b * v).sum()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

impl fmt::Debug for PointedBivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointedBivector({}; {})", self.point, self.matrix)
    }
}

/// `P_y(α) = [κα, y]`.
pub fn lie_poisson_apply(alg: &LieAlgebra, y: &Element, alpha: &Element) -> Element {
    alg.bracket(&alg.kappa(alpha), y)
}

/// `ω_{(g,x)}((y₁,z₁), (y₂,z₂)) = ⟨y₁,z₂⟩ − ⟨y₂,z₁⟩ + ⟨x,[y₁,y₂]⟩`.
pub fn cotangent_form(alg: &LieAlgebra, x: &Element, v1: (&Element, &Element), v2: (&Element, &Element)) -> Rational {
    let (y1, z1) = v1;
    let (y2, z2) = v2;
    alg.killing(y1, z2) - alg.killing(y2, z1) + alg.killing(x, &alg.bracket(y1, y2))
}

/// `P_{(e,x)}(α, β) = (κβ, [x, κβ] − κα)`.
pub fn cotangent_bivector_identity(alg: &LieAlgebra, x: &Element, alpha: &Element, beta: &Element) -> (Element, Element) {
    let kb = alg.kappa(beta);
    let second = &alg.bracket(x, &kb) - &alg.kappa(alpha);
    (kb, second)
}
