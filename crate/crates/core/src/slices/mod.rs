//! Poisson slices of Hamiltonian `G`-spaces and the (compactified) universal
//! centralizer.
//!
//! Quotients by `G` are represented by normalized orbit representatives.
//! The spaces `X` with explicit quotient models are `T*G` with the right
//! action (`G\T*G ≅ g` via `(g, y) ↦ Ad_g y`) and `G × S_τ` with the left
//! action (`(G × S_τ)/G ≅ S_τ` via `(g, s) ↦ s`).

mod fibre;
mod stabilizer;

pub use fibre::{compactified_fibre_pgl2, ProjectiveFibre};
pub use stabilizer::{pgl2_matrix_of, stabilizer_group_pgl2, stabilizer_infinitesimal};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Sampler};
use crate::liecore::{Element, GroupElement, LieAlgebra};
use crate::poisson::{moment_eval, Acting, CotangentPoint, MomentValue, SpacePoint};
use crate::slodowy::{chi_section, SlodowySlice};
use crate::wonderful::{in_gbar_stau, Subspace};
use crate::QMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceTag {
    CotangentRight,
    CotangentLeft,
    CotangentBoth,
    GSlice,
    GbarSlice,
    LogCotangent,
}

/// A point of one of the named Hamiltonian spaces, membership checked.
#[derive(Clone, Debug)]
pub struct HamiltonianSpacePoint<'a> {
    tag: SpaceTag,
    point: SpacePoint<'a>,
}

impl<'a> HamiltonianSpacePoint<'a> {
    pub fn new(alg: &LieAlgebra, point: SpacePoint<'a>) -> Result<Self> {
        let tag = match &point {
            SpacePoint::CotangentRight(_) => SpaceTag::CotangentRight,
            SpacePoint::CotangentLeft(_) => SpaceTag::CotangentLeft,
            SpacePoint::CotangentBoth(_) => SpaceTag::CotangentBoth,
            SpacePoint::GSlice { .. } => SpaceTag::GSlice,
            SpacePoint::GbarSlice { .. } => SpaceTag::GbarSlice,
            SpacePoint::LogCotangent(_) => SpaceTag::LogCotangent,
            _ => return Err(Error::Unsupported("not one of the named Hamiltonian spaces".into())),
        };
        // moment evaluation performs the membership checks
        moment_eval(alg, &point)?;
        Ok(HamiltonianSpacePoint { tag, point })
    }

    pub fn tag(&self) -> SpaceTag {
        self.tag
    }

    pub fn point(&self) -> &SpacePoint<'a> {
        &self.point
    }
}

/// `ν(p) ∈ S_τ` (both components for `g ⊕ g`-valued moment maps).
pub fn slice_membership(alg: &LieAlgebra, p: &HamiltonianSpacePoint, slice: &SlodowySlice) -> Result<bool> {
    Ok(match moment_eval(alg, p.point())? {
        MomentValue::Single(x) => slice.contains(&x),
        MomentValue::Pair(a, b) => slice.contains(&a) && slice.contains(&b),
    })
}

/// `(g, x) ∈ Z_g^τ`: `x ∈ S_τ` and `Ad_g x = x`.
pub fn universal_centralizer_contains(alg: &LieAlgebra, g: &GroupElement, x: &Element, slice: &SlodowySlice) -> Result<bool> {
    if !slice.is_principal() {
        return Err(Error::NotPrincipal);
    }
    Ok(slice.contains(x) && alg.adjoint(g, x) == *x)
}

/// A random element of the group centralizer of `x`: an invertible
/// polynomial in the matrix of `x`.
pub fn sample_centralizer(alg: &LieAlgebra, x: &Element, sampler: &mut Sampler) -> GroupElement {
    let m = alg.to_matrix(x);
    let n = alg.n();
    loop {
        let coeffs = sampler.next_vec(n);
        let mut power = QMatrix::identity(n);
        let mut sum = QMatrix::zeros(n, n);
        for c in &coeffs {
            sum = sum.add(&power.scale(c));
            power = power.mul(&m);
        }
        if let Ok(g) = GroupElement::new(sum) {
            return g;
        }
    }
}

/// The second factor of `X × (G × S_τ)` or `X × (Ḡ × S_τ)`.
#[derive(Clone, Debug, PartialEq)]
pub enum SecondFactor {
    /// `(g, s) ∈ G × S_τ`.
    Group { g: GroupElement, s: Element },
    /// `(γ, (y₁, y₂)) ∈ Ḡ × S_τ`.
    Compact { gamma: Subspace, y1: Element, y2: Element },
}

impl SecondFactor {
    /// The `G`-moment: `Ad_g s`, resp. `y₁`.
    pub fn moment(&self, alg: &LieAlgebra) -> Element {
        match self {
            SecondFactor::Group { g, s } => alg.adjoint(g, s),
            SecondFactor::Compact { y1, .. } => y1.clone(),
        }
    }

    pub fn act(&self, alg: &LieAlgebra, h: &GroupElement) -> SecondFactor {
        match self {
            SecondFactor::Group { g, s } => SecondFactor::Group { g: h.compose(g), s: s.clone() },
            SecondFactor::Compact { gamma, y1, y2 } => SecondFactor::Compact {
                gamma: gamma.act(alg, h, &GroupElement::identity(alg.n())),
                y1: alg.adjoint(h, y1),
                y2: y2.clone(),
            },
        }
    }

    fn check(&self, slice: &SlodowySlice) -> Result<()> {
        let ok = match self {
            SecondFactor::Group { s, .. } => slice.contains(s),
            SecondFactor::Compact { gamma, y1, y2 } => in_gbar_stau(gamma, y1, y2, slice)?,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Precondition("second factor is not in the slice space".into()))
        }
    }
}

/// Which component of a representative was moved to the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    Raw,
    /// The group component of `x`.
    First,
    /// The group component of a `G × S_τ` second factor.
    Second,
}

/// A point of a reduction `(X × Y)⫽G`, by a representative.
#[derive(Clone, Debug)]
pub struct ReductionClass<'a> {
    pub x: SpacePoint<'a>,
    pub second: SecondFactor,
    pub normalization: Normalization,
}

impl PartialEq for ReductionClass<'_> {
    fn eq(&self, other: &Self) -> bool {
        let same_x = match (&self.x, &other.x) {
            (SpacePoint::CotangentRight(a), SpacePoint::CotangentRight(b)) => a == b,
            (SpacePoint::GSlice { g: g1, s: s1, .. }, SpacePoint::GSlice { g: g2, s: s2, .. }) => g1 == g2 && s1 == s2,
            _ => false,
        };
        same_x && self.second == other.second && self.normalization == other.normalization
    }
}

impl<'a> ReductionClass<'a> {
    /// `μ(x, q) = ν(x) − ν₂(q)`.
    pub fn moment(&self, alg: &LieAlgebra) -> Result<Element> {
        Ok(&x_moment(alg, &self.x)? - &self.second.moment(alg))
    }

    pub fn satisfies_zero_moment(&self, alg: &LieAlgebra) -> Result<bool> {
        Ok(self.moment(alg)?.is_zero())
    }

    /// The diagonal action of `h` on the representative.
    pub fn act(&self, alg: &LieAlgebra, h: &GroupElement) -> Result<ReductionClass<'a>> {
        Ok(ReductionClass {
            x: self.x.act(alg, &Acting::Single(h.clone()))?,
            second: self.second.act(alg, h),
            normalization: Normalization::Raw,
        })
    }
}

fn x_moment(alg: &LieAlgebra, x: &SpacePoint) -> Result<Element> {
    match x {
        SpacePoint::CotangentRight(_) | SpacePoint::GSlice { .. } => {
            Ok(moment_eval(alg, x)?.single().expect("single moment").clone())
        }
        _ => Err(Error::Unsupported("X must be T*G with the right action or G x S_tau".into())),
    }
}

fn slice_point<'a>(alg: &LieAlgebra, x: &SpacePoint<'a>, slice: &SlodowySlice) -> Result<Element> {
    let nu = x_moment(alg, x)?;
    if !slice.contains(&nu) {
        return Err(Error::Precondition("point is not in the Poisson slice: moment value not in S_tau".into()));
    }
    Ok(nu)
}

/// `ψ_τ(x) = [x : (e, ν(x))]`.
pub fn psi_tau<'a>(alg: &LieAlgebra, x: &SpacePoint<'a>, slice: &SlodowySlice) -> Result<ReductionClass<'a>> {
    let nu = slice_point(alg, x, slice)?;
    Ok(ReductionClass {
        x: x.clone(),
        second: SecondFactor::Group { g: GroupElement::identity(alg.n()), s: nu },
        normalization: Normalization::Second,
    })
}

/// `k_τ(x) = [x : (g_Δ, (ν(x), ν(x)))]`.
pub fn k_tau<'a>(alg: &LieAlgebra, x: &SpacePoint<'a>, slice: &SlodowySlice) -> Result<ReductionClass<'a>> {
    let nu = slice_point(alg, x, slice)?;
    let gamma = Subspace::diagonal(alg);
    if slice.is_principal() && chi_section(slice, &nu)? != nu {
        return Err(Error::Internal("slice point is not its own section point".into()));
    }
    if !in_gbar_stau(&gamma, &nu, &nu, slice)? {
        return Err(Error::Internal("diagonal point outside the compactified slice space".into()));
    }
    Ok(ReductionClass {
        x: x.clone(),
        second: SecondFactor::Compact { gamma, y1: nu.clone(), y2: nu },
        normalization: Normalization::Raw,
    })
}

/// Move the group component named by `target` to the identity.
///
/// `T*G` (right action): `h = g`; `G × S_τ` (left action): `h = g⁻¹`;
/// second factor in `G × S_τ`: `h = g⁻¹`.
pub fn normalize_class<'a>(
    alg: &LieAlgebra,
    raw: &ReductionClass<'a>,
    target: Normalization,
    slice: &SlodowySlice,
) -> Result<ReductionClass<'a>> {
    if !raw.satisfies_zero_moment(alg)? {
        return Err(Error::Precondition("representative does not satisfy the zero-moment condition".into()));
    }
    raw.second.check(slice)?;
    let h = match (target, &raw.x, &raw.second) {
        (Normalization::First, SpacePoint::CotangentRight(p), _) => p.g.clone(),
        (Normalization::First, SpacePoint::GSlice { g, .. }, _) => g.inverse(),
        (Normalization::Second, _, SecondFactor::Group { g, .. }) => g.inverse(),
        (Normalization::Raw, ..) => return Ok(raw.clone()),
        _ => return Err(Error::Unsupported("no free group component to normalize".into())),
    };
    let mut moved = raw.act(alg, &h)?;
    moved.normalization = target;
    Ok(moved)
}

/// The explicit model of `X/G`.
pub fn quotient_model(alg: &LieAlgebra, x: &SpacePoint) -> Result<Element> {
    match x {
        SpacePoint::CotangentRight(p) => Ok(alg.adjoint(&p.g, &p.x)),
        SpacePoint::GSlice { s, .. } => Ok(s.clone()),
        _ => Err(Error::Unsupported("no quotient model for this space".into())),
    }
}

/// `π_τ(x) = [x]`.
pub fn pi_tau(alg: &LieAlgebra, x: &SpacePoint, slice: &SlodowySlice) -> Result<Element> {
    slice_point(alg, x, slice)?;
    quotient_model(alg, x)
}

/// `π̄_τ[x : (γ, (y₁, y₂))] = [x]`, evaluated on the normalized representative.
pub fn pi_bar_tau(alg: &LieAlgebra, class: &ReductionClass, slice: &SlodowySlice) -> Result<Element> {
    let normalized = normalize_class(alg, class, Normalization::First, slice)?;
    quotient_model(alg, &normalized.x)
}

/// `ν̄[x : (γ, (ν(x), y))] = y`.
pub fn nu_bar(alg: &LieAlgebra, class: &ReductionClass, slice: &SlodowySlice) -> Result<Element> {
    let normalized = normalize_class(alg, class, Normalization::First, slice)?;
    match normalized.second {
        SecondFactor::Compact { y2, .. } => Ok(y2),
        SecondFactor::Group { .. } => Err(Error::Unsupported("second factor is not in the compactification".into())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramCheck {
    /// `π̄_τ ∘ k_τ = π_τ`.
    pub pi_commutes: bool,
    /// `ν̄ ∘ k_τ = ν`.
    pub nu_commutes: bool,
}

impl DiagramCheck {
    pub fn holds(&self) -> bool {
        self.pi_commutes && self.nu_commutes
    }
}

pub fn pi_maps_commute(alg: &LieAlgebra, x: &SpacePoint, slice: &SlodowySlice) -> Result<DiagramCheck> {
    let class = k_tau(alg, x, slice)?;
    Ok(DiagramCheck {
        pi_commutes: pi_bar_tau(alg, &class, slice)? == pi_tau(alg, x, slice)?,
        nu_commutes: nu_bar(alg, &class, slice)? == x_moment(alg, x)?,
    })
}

/// Sampled points of `X_τ` for `X = T*G` (right action) and `X = G × S_τ`;
/// for the latter the group component centralizes the slice point.
pub fn sample_slice_point<'a>(
    alg: &LieAlgebra,
    tag: SpaceTag,
    slice: &'a SlodowySlice,
    sampler: &mut Sampler,
) -> Result<SpacePoint<'a>> {
    let s = slice.point(&sampler.next_vec(slice.dim()));
    match tag {
        SpaceTag::CotangentRight => Ok(SpacePoint::CotangentRight(CotangentPoint::new(alg.sample_group(sampler), s))),
        SpaceTag::GSlice => {
            let g = sample_centralizer(alg, &s, sampler);
            Ok(SpacePoint::GSlice { g, s, slice })
        }
        _ => Err(Error::Unsupported("slice points are sampled for T*G and G x S_tau only".into())),
    }
}

/// `s(c) = e + c f` on the principal `sl₂` slice.
pub fn sl2_slice_point(slice: &SlodowySlice, c: Rational) -> Element {
    slice.point(&[c])
}

#[cfg(test)]
mod tests;
