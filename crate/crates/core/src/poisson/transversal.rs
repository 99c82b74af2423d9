//! Poisson transversals `TX|_Y = TY ⊕ P(TY†)` and slice preimages.

use num_traits::Zero;

use super::moment::{gslice_tangent, Acting, SpacePoint};
use super::{CotangentPoint, PointedBivector};
use crate::error::{Error, Result};
use crate::exactnum::{Rational, Sampler};
use crate::liecore::{Element, LieAlgebra};
use crate::slodowy::SlodowySlice;
use crate::QMatrix;

#[derive(Clone, Debug)]
pub struct TransversalDecomposition {
    /// Basis of `T_yY`, as columns.
    pub tangent_basis: QMatrix,
    /// Basis of `P(T_yY†)`, as columns.
    pub complement_basis: QMatrix,
    /// Rank of `T_yY + P(T_yY†)`.
    pub rank: usize,
    pub ambient_dim: usize,
    induced: Option<PointedBivector>,
}

impl TransversalDecomposition {
    pub fn is_success(&self) -> bool {
        self.rank == self.ambient_dim
    }

    /// `P_Y` in the coordinates of `tangent_basis`, on success.
    pub fn induced(&self) -> Option<&PointedBivector> {
        self.induced.as_ref()
    }
}

fn column_basis(m: &QMatrix) -> QMatrix {
    let pivots = m.rref().pivots;
    m.select_columns(&pivots)
}

/// Decompose the tangent space at a point of `Y` given by the columns of `tangent`.
pub fn transversal_check(bivector: &PointedBivector, tangent: &QMatrix) -> TransversalDecomposition {
    let n = bivector.dim();
    let basis = column_basis(tangent);
    let r = basis.cols();
    let annihilator = basis.transpose().kernel();
    let image = bivector.matrix().mul(&annihilator);
    let complement_basis = column_basis(&image);
    let rank = basis.hstack(&image).rank();
    let induced = (rank == n).then(|| {
        let system = basis.transpose().vstack(&image.transpose());
        let columns: Vec<Vec<Rational>> = (0..r)
            .map(|i| {
                let mut rhs = vec![Rational::zero(); n];
                rhs[i] = Rational::from_integer(1.into());
                let extended = system.solve(&rhs).expect("invertible on success");
                let vector = bivector.apply(&extended);
                basis.solve(&vector).expect("P of the extension is tangent to Y")
            })
            .collect();
        let matrix = QMatrix::from_columns(&columns, r);
        PointedBivector::new(matrix, format!("induced on a transversal of {}", bivector.point()))
            .expect("induced bivector is skew")
    });
    TransversalDecomposition { tangent_basis: basis, complement_basis, rank, ambient_dim: n, induced }
}

pub fn bivector_rank(b: &PointedBivector) -> usize {
    b.rank()
}

/// Ambient Poisson varieties whose slice preimages are implemented.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SliceAmbient {
    /// `g` with `ν = id`; the preimage is `S_τ`.
    LiePoisson,
    /// `T*G` with `ν = ρ_R`; the preimage is `G × S_τ`.
    CotangentRight,
}

impl SliceAmbient {
    pub fn dim(self, alg: &LieAlgebra) -> usize {
        match self {
            SliceAmbient::LiePoisson => alg.dim(),
            SliceAmbient::CotangentRight => 2 * alg.dim(),
        }
    }

    /// Tangent basis of `ν⁻¹(S_τ)` at any of its points, as columns.
    pub fn preimage_tangent(self, alg: &LieAlgebra, slice: &SlodowySlice) -> QMatrix {
        match self {
            SliceAmbient::LiePoisson => {
                let cols: Vec<Vec<Rational>> = slice.directions().iter().map(|d| d.coords().to_vec()).collect();
                QMatrix::from_columns(&cols, alg.dim())
            }
            SliceAmbient::CotangentRight => gslice_tangent(alg, slice),
        }
    }

    pub fn bivector(self, alg: &LieAlgebra, point: &SpacePoint) -> Result<PointedBivector> {
        match (self, point) {
            (SliceAmbient::LiePoisson, SpacePoint::LiePoisson(y)) => Ok(PointedBivector::lie_poisson(alg, y)),
            (SliceAmbient::CotangentRight, SpacePoint::CotangentRight(p)) => Ok(PointedBivector::cotangent(alg, &p.x)),
            _ => Err(Error::Unsupported("point does not belong to this ambient space".into())),
        }
    }

    /// A sampled point of `ν⁻¹(S_τ)`.
    pub fn sample_point<'a>(self, alg: &LieAlgebra, slice: &SlodowySlice, sampler: &mut Sampler) -> SpacePoint<'a> {
        let coords = sampler.next_vec(slice.dim());
        let s = slice.point(&coords);
        match self {
            SliceAmbient::LiePoisson => SpacePoint::LiePoisson(s),
            SliceAmbient::CotangentRight => SpacePoint::CotangentRight(CotangentPoint::new(alg.sample_group(sampler), s)),
        }
    }
}

/// Transversal decomposition of `ν⁻¹(S_τ)` at one of its points.
pub fn slice_transversal(
    alg: &LieAlgebra,
    ambient: SliceAmbient,
    slice: &SlodowySlice,
    point: &SpacePoint,
) -> Result<TransversalDecomposition> {
    let bivector = ambient.bivector(alg, point)?;
    Ok(transversal_check(&bivector, &ambient.preimage_tangent(alg, slice)))
}

/// `dim g − dim g_η`, checked against the rank of `d(ν mod g_η)` at sampled
/// points of the preimage.
pub fn slice_codimension(
    alg: &LieAlgebra,
    slice: &SlodowySlice,
    ambient: SliceAmbient,
    samples: usize,
    sampler: &mut Sampler,
) -> Result<usize> {
    let expected = slice.codim();
    let directions: Vec<Vec<Rational>> = slice.directions().iter().map(|d| d.coords().to_vec()).collect();
    for _ in 0..samples {
        let point = ambient.sample_point(alg, slice, sampler);
        let jacobian = moment_jacobian(alg, &point)?;
        let mut columns = directions.clone();
        columns.extend(jacobian.column_vectors());
        let normal_rank = QMatrix::from_columns(&columns, alg.dim()).rank() - directions.len();
        let preimage_dim = ambient.preimage_tangent(alg, slice).rank();
        if normal_rank != expected || ambient.dim(alg) - preimage_dim != expected {
            return Err(Error::Internal(format!(
                "codimension {expected} disagrees with rank {normal_rank} of the normal derivative"
            )));
        }
    }
    Ok(expected)
}

/// Columns `dν(e_k)` over the tangent coordinates of the point.
fn moment_jacobian(alg: &LieAlgebra, point: &SpacePoint) -> Result<QMatrix> {
    let d = alg.dim();
    let dim = point.tangent_dim(alg)?;
    let mut paired = QMatrix::zeros(d, dim);
    for j in 0..d {
        let b = Acting::Single(alg.basis_element(j));
        for k in 0..dim {
            let mut dir = vec![Rational::zero(); dim];
            dir[k] = Rational::from_integer(1.into());
            paired[(j, k)] = point.moment_pairing_along(alg, &b, &dir)?.eps;
        }
    }
    // paired = ±G·dν
    Ok(alg.killing_inverse().mul(&paired))
}

/// `T(ν⁻¹(S_τ)) + T(orbit)` is the whole tangent space at the point.
pub fn orbit_transversal(alg: &LieAlgebra, ambient: SliceAmbient, slice: &SlodowySlice, point: &SpacePoint) -> Result<bool> {
    let mut columns = ambient.preimage_tangent(alg, slice).column_vectors();
    for b in alg.basis_elements() {
        columns.push(point.fundamental(alg, &Acting::Single(b))?);
    }
    let n = ambient.dim(alg);
    Ok(QMatrix::from_columns(&columns, n).rank() == n)
}

/// The orbit tangent `{[b, y]}` at a point of `g`.
pub fn orbit_tangent(alg: &LieAlgebra, y: &Element) -> Vec<Element> {
    alg.basis_elements().iter().map(|b| alg.bracket(b, y)).collect()
}
