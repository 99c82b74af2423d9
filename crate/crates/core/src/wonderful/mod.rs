//! The wonderful compactification `Ḡ ⊂ Gr(dim g, g ⊕ g)` of `PGL_n`.
//!
//! Points are subspaces of `g ⊕ g` stored by their canonical reduced row
//! echelon basis; a vector of `g ⊕ g` is the concatenation of two coordinate
//! vectors.

mod curve;
mod plucker;

pub use curve::{parse_curve, CurveSubspace};
pub use plucker::{mask_columns, plucker_coordinates, subset_masks};

use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Sampler};
use crate::liecore::{Element, GroupElement, LieAlgebra};
use crate::slodowy::{chi_section, SlodowySlice};
use crate::QMatrix;

/// How a subspace is known to lie in `Ḡ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Certificate {
    /// `{(Ad_g y, y)}` for a group element.
    Graph,
    /// Limit at `t = 0` of a curve of graphs.
    Limit,
    /// `{(y₁, y₂) : y₁A = Ay₂}` for a nonzero 2×2 matrix.
    Pgl2Model,
    /// Image of a certified point under `G × G`.
    Translate,
    None,
}

#[derive(Clone, Debug)]
pub struct Subspace {
    basis: QMatrix,
    certificate: Certificate,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.basis.hash(state);
    }
}

pub fn pair_vector(y1: &Element, y2: &Element) -> Vec<Rational> {
    y1.coords().iter().chain(y2.coords()).cloned().collect()
}

fn split_pair(v: &[Rational]) -> (Element, Element) {
    let d = v.len() / 2;
    (Element::new(v[..d].to_vec()), Element::new(v[d..].to_vec()))
}

fn normalize_vector(v: &[Rational]) -> Vec<Rational> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let inv = Rational::one() / lead;
            v.iter().map(|x| x * &inv).collect()
        }
        None => v.to_vec(),
    }
}

impl Subspace {
    /// Row space of `rows`, without a membership certificate.
    pub fn from_spanning_rows(rows: &QMatrix) -> Self {
        let r = rows.rref();
        let keep: Vec<usize> = (0..r.rank).collect();
        Subspace { basis: r.reduced.select_rows(&keep), certificate: Certificate::None }
    }

    fn certified(rows: &QMatrix, certificate: Certificate) -> Self {
        Subspace { certificate, ..Subspace::from_spanning_rows(rows) }
    }

    /// The subspace with the given (not necessarily normalized) Plücker vector,
    /// indexed as in [`subset_masks`].
    pub fn from_plucker(coords: &[Rational], ambient: usize, dim: usize) -> Result<Self> {
        let masks = subset_masks(ambient, dim);
        if masks.len() != coords.len() {
            return Err(Error::DimensionMismatch { expected: masks.len(), found: coords.len() });
        }
        let (idx, lead) = coords
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .ok_or_else(|| Error::Precondition("zero Plucker vector".into()))?;
        let pivots = mask_columns(masks[idx]);
        let lookup = |mask: u32| masks.binary_search(&mask).map(|i| coords[i].clone()).unwrap_or_default();
        let basis = QMatrix::from_fn(dim, ambient, |i, j| {
            if pivots.contains(&j) {
                return if pivots[i] == j { Rational::one() } else { Rational::zero() };
            }
            let mask = (masks[idx] & !(1 << pivots[i])) | (1 << j);
            let (lo, hi) = if pivots[i] < j { (pivots[i], j) } else { (j, pivots[i]) };
            let between = pivots.iter().filter(|&&p| p > lo && p < hi).count();
            let value = lookup(mask) / lead;
            if between % 2 == 0 {
                value
            } else {
                -value
            }
        });
        Ok(Subspace::from_spanning_rows(&basis))
    }

    /// `g_Δ`, the graph of the identity.
    pub fn diagonal(alg: &LieAlgebra) -> Self {
        graph_subspace(alg, &GroupElement::identity(alg.n()))
    }

    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    pub fn certificate(&self) -> Certificate {
        self.certificate
    }

    pub fn is_certified(&self) -> bool {
        self.certificate != Certificate::None
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    /// Normalized Plücker vector (first nonzero coordinate `1`).
    pub fn plucker(&self) -> Vec<Rational> {
        normalize_vector(&plucker_coordinates(&self.basis))
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim());
        let mut rest = v.to_vec();
        for i in 0..self.dim() {
            let pivot = (0..self.ambient_dim()).find(|&j| !self.basis[(i, j)].is_zero()).expect("nonzero row");
            let c = rest[pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (j, r) in rest.iter_mut().enumerate() {
                *r -= c.clone() * &self.basis[(i, j)];
            }
        }
        rest.iter().all(Zero::is_zero)
    }

    pub fn contains(&self, y1: &Element, y2: &Element) -> bool {
        self.contains_vector(&pair_vector(y1, y2))
    }

    /// Basis pairs `(y₁, y₂)`.
    pub fn pairs(&self) -> Vec<(Element, Element)> {
        self.basis.row_vectors().iter().map(|r| split_pair(r)).collect()
    }

    /// `Σ c_i (row i)`.
    pub fn combination(&self, coeffs: &[Rational]) -> (Element, Element) {
        let v: Vec<Rational> = self.basis.transpose().mul_vec(coeffs);
        split_pair(&v)
    }

    pub fn sample_pair(&self, sampler: &mut Sampler) -> (Element, Element) {
        self.combination(&sampler.next_vec(self.dim()))
    }

    fn half(&self) -> usize {
        self.ambient_dim() / 2
    }

    pub fn left_rank(&self) -> usize {
        self.basis.select_columns(&(0..self.half()).collect::<Vec<_>>()).rank()
    }

    pub fn right_rank(&self) -> usize {
        self.basis.select_columns(&(self.half()..self.ambient_dim()).collect::<Vec<_>>()).rank()
    }

    /// A point of `Ḡ` is in `G` exactly when both projections to `g` are bijective.
    pub fn is_boundary(&self) -> bool {
        self.left_rank() < self.half() || self.right_rank() < self.half()
    }

    /// `(g₁, g₂)·γ = {(Ad_{g₁} y₁, Ad_{g₂} y₂)}`.
    pub fn act(&self, alg: &LieAlgebra, g1: &GroupElement, g2: &GroupElement) -> Subspace {
        let a1 = alg.adjoint_matrix(g1);
        let a2 = alg.adjoint_matrix(g2);
        let d = alg.dim();
        let block = QMatrix::from_fn(2 * d, 2 * d, |i, j| match (i < d, j < d) {
            (true, true) => a1[(i, j)].clone(),
            (false, false) => a2[(i - d, j - d)].clone(),
            _ => Rational::zero(),
        });
        let rows = self.basis.mul(&block.transpose());
        let certificate = if self.is_certified() { Certificate::Translate } else { Certificate::None };
        Subspace::certified(&rows, certificate)
    }

    pub fn format(&self, alg: &LieAlgebra) -> Vec<String> {
        self.pairs()
            .iter()
            .map(|(a, b)| format!("({}, {})", alg.format_element(a), alg.format_element(b)))
            .collect()
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.basis)
    }
}

/// `{(Ad_g y, y) : y ∈ g}`.
pub fn graph_subspace(alg: &LieAlgebra, g: &GroupElement) -> Subspace {
    let rows: Vec<Vec<Rational>> = alg
        .basis_elements()
        .iter()
        .map(|b| pair_vector(&alg.adjoint(g, b), b))
        .collect();
    Subspace::certified(&QMatrix::from_rows(&rows, 2 * alg.dim()), Certificate::Graph)
}

/// `γ_A = {(y₁, y₂) ∈ sl₂ ⊕ sl₂ : y₁A = Ay₂}`, the closed-form model of
/// `Ḡ ≅ P(Mat₂)` for `PGL_2`.
pub fn pgl2_model(alg: &LieAlgebra, a: &QMatrix) -> Result<Subspace> {
    if alg.n() != 2 {
        return Err(Error::Unsupported("the matrix model is only available for pgl2".into()));
    }
    if a.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let d = alg.dim();
    // columns: images of the basis of g ⊕ g under (y₁, y₂) ↦ y₁A − Ay₂
    let columns: Vec<Vec<Rational>> = (0..2 * d)
        .map(|k| {
            let image = if k < d {
                alg.basis_matrix(k).mul(a)
            } else {
                a.mul(alg.basis_matrix(k - d)).neg()
            };
            image.row_vectors().concat()
        })
        .collect();
    let kernel = QMatrix::from_columns(&columns, 4).kernel();
    if kernel.cols() != d {
        return Err(Error::Internal(format!("model space has dimension {}", kernel.cols())));
    }
    Ok(Subspace::certified(&kernel.transpose(), Certificate::Pgl2Model))
}

/// The first sampled pair `(y₁, y₂) ∈ γ` with `χ(y₁) ≠ χ(y₂)`, if any.
pub fn chi_witness(alg: &LieAlgebra, gamma: &Subspace, samples: usize, sampler: &mut Sampler) -> Option<(Element, Element)> {
    (0..samples).map(|_| gamma.sample_pair(sampler)).find(|(y1, y2)| alg.chi(y1) != alg.chi(y2))
}

/// `χ(y₁) = χ(y₂)` on `samples` sampled pairs of `γ`.
pub fn chi_compatible(alg: &LieAlgebra, gamma: &Subspace, samples: usize, sampler: &mut Sampler) -> bool {
    chi_witness(alg, gamma, samples, sampler).is_none()
}

/// `(x, y) ∈ γ` and `y ∈ S_τ`; for a principal slice `y` must also be the
/// section point of `x`, which a certified `γ` guarantees.
pub fn in_gbar_stau(gamma: &Subspace, x: &Element, y: &Element, slice: &SlodowySlice) -> Result<bool> {
    if !gamma.is_certified() {
        return Err(Error::Precondition("subspace is not a certified point of the compactification".into()));
    }
    if !gamma.contains(x, y) || !slice.contains(y) {
        return Ok(false);
    }
    if slice.is_principal() && chi_section(slice, x)? != *y {
        return Err(Error::Internal("pair in a compactification point with mismatched invariants".into()));
    }
    Ok(true)
}

/// A point `(γ, (y₁, y₂))` of the log cotangent bundle.
#[derive(Clone, Debug, PartialEq)]
pub struct LogCotangentPoint {
    gamma: Subspace,
    y1: Element,
    y2: Element,
}

impl LogCotangentPoint {
    pub fn new(gamma: Subspace, y1: Element, y2: Element) -> Result<Self> {
        if !gamma.contains(&y1, &y2) {
            return Err(Error::Precondition("pair is not in the subspace".into()));
        }
        Ok(LogCotangentPoint { gamma, y1, y2 })
    }

    pub fn gamma(&self) -> &Subspace {
        &self.gamma
    }

    pub fn y1(&self) -> &Element {
        &self.y1
    }

    pub fn y2(&self) -> &Element {
        &self.y2
    }

    /// `(g₁, g₂)·(γ, (y₁, y₂)) = ((g₁,g₂)·γ, (Ad_{g₁} y₁, Ad_{g₂} y₂))`.
    pub fn act(&self, alg: &LieAlgebra, g1: &GroupElement, g2: &GroupElement) -> LogCotangentPoint {
        LogCotangentPoint {
            gamma: self.gamma.act(alg, g1, g2),
            y1: alg.adjoint(g1, &self.y1),
            y2: alg.adjoint(g2, &self.y2),
        }
    }
}
