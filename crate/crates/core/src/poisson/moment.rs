//! Moment maps and the moment condition `H_{ν^b} = −V_b`.
//!
//! Tangent coordinates at each kind of point:
//! - `g`: the coordinates of `y`;
//! - `T*G` at `(g, x)`: `(y, z) ∈ g ⊕ g`, the curve `(g(1 + εy), x + εz)`;
//! - `G × S_τ` at `(g, s)`: `(y, c)`, the curve `(g(1 + εy), s + ε Σ c_j d_j)`;
//! - `X × T*G`: tangent coordinates of `X` followed by those of `T*G`.

use num_traits::Zero;

use super::dual::{adjoint, eps_vec, infinitesimal, inverse, lift, lift_vec, left_trivialized};
use super::{transversal_check, CotangentPoint, PointedBivector};
use crate::error::{Error, Result};
use crate::exactnum::{Dual, Rational};
use crate::liecore::{Element, GroupElement, LieAlgebra};
use crate::slodowy::SlodowySlice;
use crate::wonderful::{in_gbar_stau, LogCotangentPoint, Subspace};
use crate::{DualMatrix, DualQ, QMatrix};

/// A point of one of the Hamiltonian spaces, tagged with the acting group.
#[derive(Clone, Debug)]
pub enum SpacePoint<'a> {
    /// `g` with the coadjoint (= adjoint) action and `ν = id`.
    LiePoisson(Element),
    /// `T*G` with `G` acting by left translation, `ν = ρ_L`.
    CotangentLeft(CotangentPoint),
    /// `T*G` with `G` acting by `h·(g, y) = (g h⁻¹, Ad_h y)`, `ν = ρ_R`.
    CotangentRight(CotangentPoint),
    /// `T*G` with `G × G` acting on both sides, `ν = ρ`.
    CotangentBoth(CotangentPoint),
    /// `T*Ḡ(log D)` with `G × G`.
    LogCotangent(LogCotangentPoint),
    /// `X × T*G`, `G × G` acting by `(h₁, h₂)·(x, p) = (h₁·x, (h₁,h₂)·p)`.
    Product { x: Box<SpacePoint<'a>>, cotangent: CotangentPoint },
    /// `X × T*Ḡ(log D)` with the same action pattern.
    LogProduct { x: Box<SpacePoint<'a>>, log: LogCotangentPoint },
    /// `G × S_τ` with `G` acting on the left of the first factor.
    GSlice { g: GroupElement, s: Element, slice: &'a SlodowySlice },
    /// `Ḡ × S_τ = {(γ, (x, y)) : (x, y) ∈ γ, y ∈ S_τ}`.
    GbarSlice { gamma: Subspace, x: Element, y: Element, slice: &'a SlodowySlice },
}

/// A Lie algebra element (one acting copy of `G`) or a pair (`G × G`).
#[derive(Clone, Debug, PartialEq)]
pub enum Acting<T> {
    Single(T),
    Pair(T, T),
}

pub type Generator = Acting<Element>;

#[derive(Clone, Debug, PartialEq)]
pub enum MomentValue {
    Single(Element),
    /// `(left, right) ∈ g ⊕ g`.
    Pair(Element, Element),
}

impl MomentValue {
    pub fn single(&self) -> Option<&Element> {
        match self {
            MomentValue::Single(x) => Some(x),
            MomentValue::Pair(..) => None,
        }
    }

    pub fn pair(&self) -> Option<(&Element, &Element)> {
        match self {
            MomentValue::Pair(a, b) => Some((a, b)),
            MomentValue::Single(_) => None,
        }
    }
}

/// `ρ(g, y) = (Ad_g y, y)`.
pub fn rho(alg: &LieAlgebra, g: &GroupElement, y: &Element) -> (Element, Element) {
    (alg.adjoint(g, y), y.clone())
}

/// `ρ_τ(g, s) = Ad_g s` on `G × S_τ`.
pub fn rho_tau(alg: &LieAlgebra, g: &GroupElement, s: &Element, slice: &SlodowySlice) -> Result<Element> {
    if !slice.contains(s) {
        return Err(Error::Precondition("second factor is not in the slice".into()));
    }
    Ok(alg.adjoint(g, s))
}

/// `ρ̄_τ(γ, (x, y)) = x` on `Ḡ × S_τ`.
pub fn rho_bar_tau(gamma: &Subspace, x: &Element, y: &Element, slice: &SlodowySlice) -> Result<Element> {
    if !in_gbar_stau(gamma, x, y, slice)? {
        return Err(Error::Precondition("point is not in the compactified slice space".into()));
    }
    Ok(x.clone())
}

pub fn moment_eval(alg: &LieAlgebra, point: &SpacePoint) -> Result<MomentValue> {
    Ok(match point {
        SpacePoint::LiePoisson(y) => MomentValue::Single(y.clone()),
        SpacePoint::CotangentLeft(p) => MomentValue::Single(alg.adjoint(&p.g, &p.x)),
        SpacePoint::CotangentRight(p) => MomentValue::Single(p.x.clone()),
        SpacePoint::CotangentBoth(p) => {
            let (a, b) = rho(alg, &p.g, &p.x);
            MomentValue::Pair(a, b)
        }
        SpacePoint::LogCotangent(p) => MomentValue::Pair(p.y1().clone(), p.y2().clone()),
        SpacePoint::Product { x, cotangent } => {
            let nu = single_moment(alg, x)?;
            let (a, b) = rho(alg, &cotangent.g, &cotangent.x);
            MomentValue::Pair(&nu - &a, -&b)
        }
        SpacePoint::LogProduct { x, log } => {
            let nu = single_moment(alg, x)?;
            MomentValue::Pair(&nu - log.y1(), -log.y2())
        }
        SpacePoint::GSlice { g, s, slice } => MomentValue::Single(rho_tau(alg, g, s, slice)?),
        SpacePoint::GbarSlice { gamma, x, y, slice } => MomentValue::Single(rho_bar_tau(gamma, x, y, slice)?),
    })
}

fn single_moment(alg: &LieAlgebra, point: &SpacePoint) -> Result<Element> {
    match moment_eval(alg, point)? {
        MomentValue::Single(x) => Ok(x),
        MomentValue::Pair(..) => Err(Error::Unsupported("first factor must carry a single moment map".into())),
    }
}

impl SpacePoint<'_> {
    /// The action of a group element (or pair) on the point.
    pub fn act(&self, alg: &LieAlgebra, h: &Acting<GroupElement>) -> Result<Self> {
        let mismatch = || Error::Unsupported("group element does not match the acting group".into());
        Ok(match (self, h) {
            (SpacePoint::LiePoisson(y), Acting::Single(h)) => SpacePoint::LiePoisson(alg.adjoint(h, y)),
            (SpacePoint::CotangentLeft(p), Acting::Single(h)) => {
                SpacePoint::CotangentLeft(CotangentPoint::new(h.compose(&p.g), p.x.clone()))
            }
            (SpacePoint::CotangentRight(p), Acting::Single(h)) => {
                SpacePoint::CotangentRight(CotangentPoint::new(p.g.compose(&h.inverse()), alg.adjoint(h, &p.x)))
            }
            (SpacePoint::CotangentBoth(p), Acting::Pair(h1, h2)) => SpacePoint::CotangentBoth(CotangentPoint::new(
                h1.compose(&p.g).compose(&h2.inverse()),
                alg.adjoint(h2, &p.x),
            )),
            (SpacePoint::LogCotangent(p), Acting::Pair(h1, h2)) => SpacePoint::LogCotangent(p.act(alg, h1, h2)),
            (SpacePoint::Product { x, cotangent }, Acting::Pair(h1, h2)) => SpacePoint::Product {
                x: Box::new(x.act(alg, &Acting::Single(h1.clone()))?),
                cotangent: CotangentPoint::new(
                    h1.compose(&cotangent.g).compose(&h2.inverse()),
                    alg.adjoint(h2, &cotangent.x),
                ),
            },
            (SpacePoint::LogProduct { x, log }, Acting::Pair(h1, h2)) => SpacePoint::LogProduct {
                x: Box::new(x.act(alg, &Acting::Single(h1.clone()))?),
                log: log.act(alg, h1, h2),
            },
            (SpacePoint::GSlice { g, s, slice }, Acting::Single(h)) => {
                SpacePoint::GSlice { g: h.compose(g), s: s.clone(), slice }
            }
            (SpacePoint::GbarSlice { gamma, x, y, slice }, Acting::Single(h)) => SpacePoint::GbarSlice {
                gamma: gamma.act(alg, h, &GroupElement::identity(alg.n())),
                x: alg.adjoint(h, x),
                y: y.clone(),
                slice,
            },
            _ => return Err(mismatch()),
        })
    }

    /// Dimension of the tangent coordinates used by the moment check.
    pub(crate) fn tangent_dim(&self, alg: &LieAlgebra) -> Result<usize> {
        let d = alg.dim();
        Ok(match self {
            SpacePoint::LiePoisson(_) => d,
            SpacePoint::CotangentLeft(_) | SpacePoint::CotangentRight(_) | SpacePoint::CotangentBoth(_) => 2 * d,
            SpacePoint::GSlice { slice, .. } => d + slice.dim(),
            SpacePoint::Product { x, .. } => x.tangent_dim(alg)? + 2 * d,
            _ => return Err(unsupported_check(self)),
        })
    }

    /// The bivector in tangent coordinates.
    pub(crate) fn bivector(&self, alg: &LieAlgebra) -> Result<PointedBivector> {
        Ok(match self {
            SpacePoint::LiePoisson(y) => PointedBivector::lie_poisson(alg, y),
            SpacePoint::CotangentLeft(p) | SpacePoint::CotangentRight(p) | SpacePoint::CotangentBoth(p) => {
                PointedBivector::cotangent(alg, &p.x)
            }
            SpacePoint::GSlice { s, slice, .. } => {
                let ambient = PointedBivector::cotangent(alg, s);
                let decomposition = transversal_check(&ambient, &gslice_tangent(alg, slice));
                decomposition
                    .induced()
                    .cloned()
                    .ok_or_else(|| Error::Internal("G x S_tau is not a Poisson transversal".into()))?
            }
            SpacePoint::Product { x, cotangent } => {
                PointedBivector::product(&x.bivector(alg)?, &PointedBivector::cotangent(alg, &cotangent.x))
            }
            _ => return Err(unsupported_check(self)),
        })
    }

    /// `ν^b` along the curve through the point with tangent `dir`.
    pub(crate) fn moment_pairing_along(&self, alg: &LieAlgebra, b: &Generator, dir: &[Rational]) -> Result<DualQ> {
        let d = alg.dim();
        let pair = |x: &[DualQ], b: &Element| alg.killing_of(x, &lift_vec(b.coords()));
        Ok(match (self, b) {
            (SpacePoint::LiePoisson(y), Acting::Single(b)) => pair(&curve(y.coords(), dir), b),
            (SpacePoint::CotangentLeft(p), Acting::Single(b)) => {
                let (g, x) = cotangent_curve(alg, p, dir);
                pair(&adjoint(alg, &g, &x), b)
            }
            (SpacePoint::CotangentRight(p), Acting::Single(b)) => {
                let (_, x) = cotangent_curve(alg, p, dir);
                -pair(&x, b)
            }
            (SpacePoint::CotangentBoth(p), Acting::Pair(b1, b2)) => {
                let (g, x) = cotangent_curve(alg, p, dir);
                pair(&adjoint(alg, &g, &x), b1) - pair(&x, b2)
            }
            (SpacePoint::GSlice { g, s, slice }, Acting::Single(b)) => {
                let gd = lift(g.matrix()).mul(&infinitesimal(alg, &dir[..d]));
                let sd = slice_curve(s, slice, &dir[d..]);
                pair(&adjoint(alg, &gd, &sd), b)
            }
            (SpacePoint::Product { x, cotangent }, Acting::Pair(b1, b2)) => {
                let k = x.tangent_dim(alg)?;
                let nu = x.moment_pairing_along(alg, &Acting::Single(b1.clone()), &dir[..k])?;
                let (g, y) = cotangent_curve(alg, cotangent, &dir[k..]);
                nu - pair(&adjoint(alg, &g, &y), b1) + pair(&y, b2)
            }
            _ => return Err(unsupported_check(self)),
        })
    }

    /// Tangent coordinates of `d/dε exp(εb)·point`.
    pub(crate) fn fundamental(&self, alg: &LieAlgebra, b: &Generator) -> Result<Vec<Rational>> {
        Ok(match (self, b) {
            (SpacePoint::LiePoisson(y), Acting::Single(b)) => {
                eps_vec(&adjoint(alg, &infinitesimal(alg, b.coords()), &lift_vec(y.coords())))
            }
            (SpacePoint::CotangentLeft(p), Acting::Single(b)) => act_cotangent(alg, p, Some(b), None),
            (SpacePoint::CotangentRight(p), Acting::Single(b)) => act_cotangent(alg, p, None, Some(b)),
            (SpacePoint::CotangentBoth(p), Acting::Pair(b1, b2)) => act_cotangent(alg, p, Some(b1), Some(b2)),
            (SpacePoint::GSlice { g, slice, .. }, Acting::Single(b)) => {
                let moved = infinitesimal(alg, b.coords()).mul(&lift(g.matrix()));
                let mut v = left_trivialized(alg, &moved);
                v.extend(std::iter::repeat_n(Rational::zero(), slice.dim()));
                v
            }
            (SpacePoint::Product { x, cotangent }, Acting::Pair(b1, b2)) => {
                let mut v = x.fundamental(alg, &Acting::Single(b1.clone()))?;
                v.extend(act_cotangent(alg, cotangent, Some(b1), Some(b2)));
                v
            }
            _ => return Err(unsupported_check(self)),
        })
    }
}

fn unsupported_check(point: &SpacePoint) -> Error {
    let name = match point {
        SpacePoint::LiePoisson(_) => "lie-poisson",
        SpacePoint::CotangentLeft(_) => "tstarg-left",
        SpacePoint::CotangentRight(_) => "tstarg-right",
        SpacePoint::CotangentBoth(_) => "tstarg-both",
        SpacePoint::LogCotangent(_) => "log-cotangent",
        SpacePoint::Product { .. } => "product",
        SpacePoint::LogProduct { .. } => "log-product",
        SpacePoint::GSlice { .. } => "g-stau",
        SpacePoint::GbarSlice { .. } => "gbar-stau",
    };
    Error::Unsupported(format!("no bivector or matching action implemented for {name} with this generator"))
}

fn curve(base: &[Rational], dir: &[Rational]) -> Vec<DualQ> {
    base.iter().zip(dir).map(|(v, e)| Dual::new(v.clone(), e.clone())).collect()
}

fn cotangent_curve(alg: &LieAlgebra, p: &CotangentPoint, dir: &[Rational]) -> (DualMatrix, Vec<DualQ>) {
    let d = alg.dim();
    let g = lift(p.g.matrix()).mul(&infinitesimal(alg, &dir[..d]));
    (g, curve(p.x.coords(), &dir[d..]))
}

fn slice_curve(s: &Element, slice: &SlodowySlice, coeffs: &[Rational]) -> Vec<DualQ> {
    let offset = slice.directions().iter().zip(coeffs).fold(Element::zero(s.dim()), |acc, (d, c)| &acc + &d.scale(c));
    curve(s.coords(), offset.coords())
}

/// `(h₁ g h₂⁻¹, Ad_{h₂} x)` with `h_i = 1 + εb_i`, as a tangent vector.
fn act_cotangent(alg: &LieAlgebra, p: &CotangentPoint, b1: Option<&Element>, b2: Option<&Element>) -> Vec<Rational> {
    let one = |b: Option<&Element>| infinitesimal(alg, b.map_or(&vec![Rational::zero(); alg.dim()][..], |b| b.coords()));
    let (h1, h2) = (one(b1), one(b2));
    let g = h1.mul(&lift(p.g.matrix())).mul(&inverse(&h2));
    let x = adjoint(alg, &h2, &lift_vec(p.x.coords()));
    let mut v = left_trivialized(alg, &g);
    v.extend(eps_vec(&x));
    v
}

/// Tangent basis of `G × S_τ ⊂ T*G` at any point, as columns.
pub(crate) fn gslice_tangent(alg: &LieAlgebra, slice: &SlodowySlice) -> QMatrix {
    let d = alg.dim();
    let mut columns: Vec<Vec<Rational>> = (0..d)
        .map(|k| (0..2 * d).map(|i| if i == k { Rational::from_integer(1.into()) } else { Rational::zero() }).collect())
        .collect();
    for dir in slice.directions() {
        let mut v = vec![Rational::zero(); d];
        v.extend(dir.coords().iter().cloned());
        columns.push(v);
    }
    QMatrix::from_columns(&columns, 2 * d)
}

#[derive(Clone, Debug, PartialEq)]
pub struct MomentCheck {
    pub holds: bool,
    /// `H_{ν^b} = −P(dν^b)`.
    pub hamiltonian: Vec<Rational>,
    /// `−V_b`.
    pub negated_fundamental: Vec<Rational>,
}

/// Compare `H_{ν^b}` with `−V_b`, both in tangent coordinates at the point.
///
/// Supported: Lie–Poisson, `T*G` with the left, right or two-sided action,
/// `G × S_τ`, and `X × T*G` for those `X` with a single moment map.
pub fn check_moment_condition(alg: &LieAlgebra, point: &SpacePoint, b: &Generator) -> Result<MomentCheck> {
    let dim = point.tangent_dim(alg)?;
    let bivector = point.bivector(alg)?;
    let differential: Vec<Rational> = (0..dim)
        .map(|k| {
            let dir: Vec<Rational> =
                (0..dim).map(|i| if i == k { Rational::from_integer(1.into()) } else { Rational::zero() }).collect();
            point.moment_pairing_along(alg, b, &dir).map(|v| v.eps)
        })
        .collect::<Result<_>>()?;
    let hamiltonian: Vec<Rational> = bivector.apply(&differential).into_iter().map(|v| -v).collect();
    let negated_fundamental: Vec<Rational> = point.fundamental(alg, b)?.into_iter().map(|v| -v).collect();
    Ok(MomentCheck { holds: hamiltonian == negated_fundamental, hamiltonian, negated_fundamental })
}
