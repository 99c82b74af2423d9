//! sl2-triples, `ad_h`-gradings and Slodowy slices `S_τ = ξ + g_η`.

mod conjugate;
mod section;

pub use conjugate::{conjugate_to_slice, SliceConjugation};
pub use section::{chi_section, chi_section_closed_form};

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{qi, Rational};
use crate::liecore::{Element, LieAlgebra};
use crate::QMatrix;

#[derive(Clone, Debug, PartialEq)]
pub struct Sl2Triple {
    pub xi: Element,
    pub h: Element,
    pub eta: Element,
}

/// Checks `[ξ,η]=h`, `[h,ξ]=2ξ`, `[h,η]=−2η`; the error names the first
/// relation that fails.
pub fn verify_triple(alg: &LieAlgebra, xi: &Element, h: &Element, eta: &Element) -> Result<()> {
    if alg.bracket(xi, eta) != *h {
        return Err(Error::InvalidTriple("[xi,eta]=h".into()));
    }
    if alg.bracket(h, xi) != xi.scale(&qi(2)) {
        return Err(Error::InvalidTriple("[h,xi]=2xi".into()));
    }
    if alg.bracket(h, eta) != eta.scale(&qi(-2)) {
        return Err(Error::InvalidTriple("[h,eta]=-2eta".into()));
    }
    Ok(())
}

/// Parses `"2,1"` into a partition.
pub fn parse_partition(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition `{text}`"))))
        .collect()
}

impl Sl2Triple {
    pub fn new(alg: &LieAlgebra, xi: Element, h: Element, eta: Element) -> Result<Self> {
        verify_triple(alg, &xi, &h, &eta)?;
        Ok(Sl2Triple { xi, h, eta })
    }

    /// Jordan-block triple: one block of size `k` per part.
    ///
    /// On a block, `ξ = Σ E_{i,i+1}`, `h = diag(k−1, k−3, …, 1−k)` and
    /// `η = Σ i(k−i) E_{i+1,i}`.
    pub fn standard(alg: &LieAlgebra, partition: &[usize]) -> Result<Self> {
        let n = alg.n();
        if partition.iter().any(|&p| p == 0) || partition.iter().sum::<usize>() != n {
            return Err(Error::InvalidPartition { partition: partition.to_vec(), n });
        }
        let mut parts = partition.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut xi = QMatrix::zeros(n, n);
        let mut h = QMatrix::zeros(n, n);
        let mut eta = QMatrix::zeros(n, n);
        let mut offset = 0;
        for k in parts {
            for i in 0..k {
                h[(offset + i, offset + i)] = qi(k as i64 - 1 - 2 * i as i64);
                if i + 1 < k {
                    xi[(offset + i, offset + i + 1)] = qi(1);
                    eta[(offset + i + 1, offset + i)] = qi(((i + 1) * (k - i - 1)) as i64);
                }
            }
            offset += k;
        }
        Sl2Triple::new(alg, alg.from_matrix(&xi)?, alg.from_matrix(&h)?, alg.from_matrix(&eta)?)
    }

    pub fn zero(alg: &LieAlgebra) -> Self {
        Sl2Triple { xi: alg.zero(), h: alg.zero(), eta: alg.zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.xi.is_zero() && self.h.is_zero() && self.eta.is_zero()
    }
}

/// Eigenspace decomposition `g = ⊕ g_λ` of `ad_h`.
#[derive(Clone, Debug)]
pub struct Grading {
    spaces: BTreeMap<i64, Vec<Element>>,
    /// Columns: the eigenbasis, grouped by increasing degree.
    change_of_basis_inverse: QMatrix,
    column_degrees: Vec<i64>,
}

impl Grading {
    pub fn of(alg: &LieAlgebra, h: &Element) -> Result<Self> {
        let ad = alg.ad_matrix(h);
        let bound = 2 * alg.n() as i64;
        let mut spaces = BTreeMap::new();
        let mut columns = Vec::new();
        let mut column_degrees = Vec::new();
        for lambda in -bound..=bound {
            let shifted = ad.sub(&QMatrix::identity(alg.dim()).scale(&qi(lambda)));
            let kernel = shifted.kernel().column_vectors();
            if kernel.is_empty() {
                continue;
            }
            for v in &kernel {
                columns.push(v.clone());
                column_degrees.push(lambda);
            }
            spaces.insert(lambda, kernel.into_iter().map(Element::new).collect::<Vec<_>>());
        }
        if columns.len() != alg.dim() {
            return Err(Error::NonIntegerGrading);
        }
        let change = QMatrix::from_columns(&columns, alg.dim());
        let change_of_basis_inverse = change.inverse().ok_or(Error::NonIntegerGrading)?;
        Ok(Grading { spaces, change_of_basis_inverse, column_degrees })
    }

    pub fn eigenvalues(&self) -> Vec<i64> {
        self.spaces.keys().copied().collect()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.values().map(Vec::len).collect()
    }

    pub fn space(&self, lambda: i64) -> &[Element] {
        self.spaces.get(&lambda).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Union of the bases of `g_λ` for `λ` in the given range.
    pub fn sum_of(&self, mut keep: impl FnMut(i64) -> bool) -> Vec<Element> {
        self.spaces.iter().filter(|(l, _)| keep(**l)).flat_map(|(_, b)| b.iter().cloned()).collect()
    }

    pub fn min_degree(&self) -> i64 {
        *self.spaces.keys().next().expect("nonempty grading")
    }

    pub fn max_degree(&self) -> i64 {
        *self.spaces.keys().last().expect("nonempty grading")
    }

    /// The `g_λ`-component of `y`.
    pub fn component(&self, y: &Element, lambda: i64) -> Element {
        let weights = self.change_of_basis_inverse.mul_vec(y.coords());
        let mut out = Element::zero(y.dim());
        let mut col = 0;
        for (degree, basis) in &self.spaces {
            for v in basis {
                if *degree == lambda && !weights[col].is_zero() {
                    out = &out + &v.scale(&weights[col]);
                }
                col += 1;
            }
        }
        out
    }

    /// Largest `λ` with a nonzero component of `y`, or `None` for `y = 0`.
    pub fn top_degree(&self, y: &Element) -> Option<i64> {
        let weights = self.change_of_basis_inverse.mul_vec(y.coords());
        weights
            .iter()
            .zip(&self.column_degrees)
            .filter(|(w, _)| !w.is_zero())
            .map(|(_, d)| *d)
            .max()
    }

    /// Degree of a homogeneous element.
    pub fn degree_of(&self, y: &Element) -> Option<i64> {
        let top = self.top_degree(y)?;
        (self.component(y, top) == *y).then_some(top)
    }
}

/// Basis vectors scaled so the first nonzero coordinate is `1`.
fn normalize_direction(v: Element) -> Element {
    let lead = v.coords().iter().find(|c| !c.is_zero()).cloned().unwrap_or_else(Rational::one);
    v.scale(&(Rational::one() / lead))
}

#[derive(Clone, Debug)]
pub struct SlodowySlice {
    alg: LieAlgebra,
    triple: Sl2Triple,
    grading: Grading,
    /// Homogeneous basis of `g_η`, by decreasing degree.
    directions: Vec<Element>,
    direction_degrees: Vec<i64>,
    parabolic: Vec<Element>,
    nilradical: Vec<Element>,
    stabilizer_nilradical: Vec<Element>,
}

impl SlodowySlice {
    pub fn new(alg: &LieAlgebra, triple: Sl2Triple) -> Result<Self> {
        verify_triple(alg, &triple.xi, &triple.h, &triple.eta)?;
        let grading = Grading::of(alg, &triple.h)?;
        let mut directions = Vec::new();
        let mut direction_degrees = Vec::new();
        for lambda in grading.eigenvalues().into_iter().rev() {
            let basis = grading.space(lambda);
            let images: Vec<Vec<Rational>> =
                basis.iter().map(|v| alg.bracket(&triple.eta, v).into_coords()).collect();
            let kernel = QMatrix::from_columns(&images, alg.dim()).kernel();
            for combo in kernel.column_vectors() {
                let v = basis.iter().zip(&combo).fold(alg.zero(), |acc, (b, c)| &acc + &b.scale(c));
                directions.push(normalize_direction(v));
                direction_degrees.push(lambda);
            }
        }
        Ok(SlodowySlice {
            alg: alg.clone(),
            parabolic: grading.sum_of(|l| l <= 0),
            nilradical: grading.sum_of(|l| l < 0),
            stabilizer_nilradical: grading.sum_of(|l| l <= -2),
            triple,
            grading,
            directions,
            direction_degrees,
        })
    }

    pub fn standard(alg: &LieAlgebra, partition: &[usize]) -> Result<Self> {
        SlodowySlice::new(alg, Sl2Triple::standard(alg, partition)?)
    }

    /// The principal slice: partition `(n)`.
    pub fn principal(alg: &LieAlgebra) -> Result<Self> {
        SlodowySlice::standard(alg, &[alg.n()])
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.alg
    }

    pub fn triple(&self) -> &Sl2Triple {
        &self.triple
    }

    pub fn base(&self) -> &Element {
        &self.triple.xi
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn directions(&self) -> &[Element] {
        &self.directions
    }

    pub fn direction_degrees(&self) -> &[i64] {
        &self.direction_degrees
    }

    pub fn parabolic(&self) -> &[Element] {
        &self.parabolic
    }

    pub fn nilradical(&self) -> &[Element] {
        &self.nilradical
    }

    pub fn stabilizer_nilradical(&self) -> &[Element] {
        &self.stabilizer_nilradical
    }

    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    /// `dim g − dim g_η`.
    pub fn codim(&self) -> usize {
        self.alg.dim() - self.dim()
    }

    pub fn is_principal(&self) -> bool {
        let t = &self.triple;
        [&t.xi, &t.h, &t.eta].iter().all(|x| self.alg.is_regular(x))
    }

    /// `ξ + Σ c_i d_i`.
    pub fn point(&self, coords: &[Rational]) -> Element {
        assert_eq!(coords.len(), self.dim());
        self.directions.iter().zip(coords).fold(self.base().clone(), |acc, (d, c)| &acc + &d.scale(c))
    }

    /// Slice coordinates of `y`, if `y ∈ S_τ`.
    pub fn coordinates(&self, y: &Element) -> Option<Vec<Rational>> {
        let offset = y - self.base();
        if self.directions.is_empty() {
            return offset.is_zero().then(Vec::new);
        }
        let cols: Vec<Vec<Rational>> = self.directions.iter().map(|d| d.coords().to_vec()).collect();
        QMatrix::from_columns(&cols, self.alg.dim()).solve(offset.coords())
    }

    pub fn contains(&self, y: &Element) -> bool {
        self.coordinates(y).is_some()
    }

    /// `y ∈ ξ + p_τ`.
    pub fn in_xi_plus_parabolic(&self, y: &Element) -> bool {
        let offset = y - self.base();
        self.grading.top_degree(&offset).is_none_or(|d| d <= 0)
    }

    /// Basis of `T_y S_τ` inside `g`, which is `g_η` at every point.
    pub fn tangent_basis(&self) -> &[Element] {
        &self.directions
    }
}
