//! Stabilizers of points of `X × (Ḡ × S_τ)` under the diagonal `G`-action.

use num_traits::Zero;

use super::SecondFactor;
use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::liecore::{Element, LieAlgebra};
use crate::poisson::dual::{adjoint, eps_vec, infinitesimal, lift, lift_vec, left_trivialized};
use crate::poisson::{Acting, SpacePoint};
use crate::wonderful::Subspace;
use crate::QMatrix;

/// Tangent vector of the second factor under `exp(εb)`. For `γ` only the
/// class in `Hom(γ, (g ⊕ g)/γ)` is recorded.
fn second_fundamental(alg: &LieAlgebra, second: &SecondFactor, b: &Element) -> Vec<Rational> {
    let h = infinitesimal(alg, b.coords());
    match second {
        SecondFactor::Group { g, .. } => left_trivialized(alg, &h.mul(&lift(g.matrix()))),
        SecondFactor::Compact { gamma, y1, .. } => {
            let d = alg.dim();
            let annihilator = gamma.basis().kernel();
            let mut v = Vec::new();
            for row in gamma.basis().row_vectors() {
                let mut moved = eps_vec(&adjoint(alg, &h, &lift_vec(&row[..d])));
                moved.extend(std::iter::repeat_n(Rational::zero(), d));
                v.extend(annihilator.transpose().mul_vec(&moved));
            }
            v.extend(eps_vec(&adjoint(alg, &h, &lift_vec(y1.coords()))));
            v
        }
    }
}

/// Basis of `{b ∈ g : V_b = 0}` at `(x, q)`; `x = None` drops the `X` factor.
pub fn stabilizer_infinitesimal(alg: &LieAlgebra, x: Option<&SpacePoint>, second: &SecondFactor) -> Result<Vec<Element>> {
    let columns: Vec<Vec<Rational>> = alg
        .basis_elements()
        .into_iter()
        .map(|b| {
            let mut v = match x {
                Some(x) => x.fundamental(alg, &Acting::Single(b.clone()))?,
                None => Vec::new(),
            };
            v.extend(second_fundamental(alg, second, &b));
            Ok(v)
        })
        .collect::<Result<_>>()?;
    let rows = columns.first().map_or(0, Vec::len);
    if rows == 0 {
        return Ok(alg.basis_elements());
    }
    let kernel = QMatrix::from_columns(&columns, rows).kernel();
    Ok(kernel.column_vectors().into_iter().map(Element::new).collect())
}

/// The matrix `A` with `γ = γ_A`.
pub fn pgl2_matrix_of(alg: &LieAlgebra, gamma: &Subspace) -> Result<QMatrix> {
    if alg.n() != 2 {
        return Err(Error::Unsupported("the matrix model is only available for pgl2".into()));
    }
    let units = unit_matrices();
    let pairs = gamma.pairs();
    let columns: Vec<Vec<Rational>> = units
        .iter()
        .map(|u| {
            pairs
                .iter()
                .flat_map(|(y1, y2)| alg.to_matrix(y1).mul(u).sub(&u.mul(&alg.to_matrix(y2))).row_vectors().concat())
                .collect()
        })
        .collect();
    let kernel = QMatrix::from_columns(&columns, 4 * pairs.len()).kernel();
    if kernel.cols() != 1 {
        return Err(Error::Precondition("subspace is not of the form {y1 A = A y2}".into()));
    }
    let v = kernel.column(0);
    Ok(QMatrix::from_rows(&[v[..2].to_vec(), v[2..].to_vec()], 2))
}

fn unit_matrices() -> Vec<QMatrix> {
    (0..4)
        .map(|k| QMatrix::from_fn(2, 2, |i, j| if 2 * i + j == k { Rational::from_integer(1.into()) } else { Rational::zero() }))
        .collect()
}

/// Dimension of the stabilizer in `PGL_2`, by solving the linear conditions
/// on `h ∈ Mat₂` (`hA ∝ A`, `h y₁ = y₁ h`, `h ∝ 1` for a free factor) and
/// discarding scalars.
pub fn stabilizer_group_pgl2(alg: &LieAlgebra, x: Option<&SpacePoint>, second: &SecondFactor) -> Result<usize> {
    if alg.n() != 2 {
        return Err(Error::Unsupported("group-level stabilizers are solved for pgl2 only".into()));
    }
    let units = unit_matrices();
    let zero = QMatrix::zeros(2, 2);
    let identity = QMatrix::identity(2);
    // unknowns: h (4 entries), λ, μ
    let mut blocks: Vec<[QMatrix; 6]> = Vec::new();
    let free = match x {
        Some(SpacePoint::CotangentRight(_)) | Some(SpacePoint::GSlice { .. }) => true,
        None => false,
        Some(_) => return Err(Error::Unsupported("X must be T*G with the right action or G x S_tau".into())),
    };
    let free = free || matches!(second, SecondFactor::Group { .. });
    if free {
        blocks.push([
            units[0].clone(),
            units[1].clone(),
            units[2].clone(),
            units[3].clone(),
            zero.clone(),
            identity.neg(),
        ]);
    }
    if let SecondFactor::Compact { gamma, y1, .. } = second {
        let a = pgl2_matrix_of(alg, gamma)?;
        blocks.push([
            units[0].mul(&a),
            units[1].mul(&a),
            units[2].mul(&a),
            units[3].mul(&a),
            a.neg(),
            zero.clone(),
        ]);
        let y = alg.to_matrix(y1);
        let c = |u: &QMatrix| u.mul(&y).sub(&y.mul(u));
        blocks.push([c(&units[0]), c(&units[1]), c(&units[2]), c(&units[3]), zero.clone(), zero.clone()]);
    }
    let columns: Vec<Vec<Rational>> =
        (0..6).map(|k| blocks.iter().flat_map(|b| b[k].row_vectors().concat()).collect()).collect();
    let kernel = QMatrix::from_columns(&columns, 4 * blocks.len()).kernel();
    let h_part = kernel.select_rows(&[0, 1, 2, 3]);
    Ok(h_part.rank() - 1)
}
