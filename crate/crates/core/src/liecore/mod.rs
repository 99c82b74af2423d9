//! `sl_n` with its adjoint group `PGL_n`.
//!
//! Basis order: root vectors `E_ij` with `i < j`, then `H_i = E_ii − E_{i+1,i+1}`,
//! then `E_ij` with `i > j`. For `sl_2` this is `(e, h, f)`.

mod element;
mod group;

pub use element::Element;
pub use group::{normalize_projective, proportional, GroupElement};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{qi, Matrix, Rational, Sampler, Scalar};
use crate::QMatrix;

/// Characteristic polynomial coefficients `c_2, …, c_n` of `det(λ − x)`.
pub type InvariantVector = Vec<Rational>;

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    n: usize,
    basis: Vec<QMatrix>,
    labels: Vec<String>,
    /// `structure[i][j]` holds the coordinates of `[b_i, b_j]`.
    structure: Vec<Vec<Vec<Rational>>>,
    killing_gram: QMatrix,
    killing_inverse: QMatrix,
}

fn unit(n: usize, i: usize, j: usize) -> QMatrix {
    QMatrix::from_fn(n, n, |a, b| if a == i && b == j { qi(1) } else { qi(0) })
}

impl LieAlgebra {
    pub fn sl(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::UnsupportedRank(n));
        }
        let mut basis = Vec::new();
        let mut labels = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                basis.push(unit(n, i, j));
                labels.push(format!("e{}{}", i + 1, j + 1));
            }
        }
        for i in 0..n - 1 {
            basis.push(unit(n, i, i).sub(&unit(n, i + 1, i + 1)));
            labels.push(format!("h{}", i + 1));
        }
        for i in 0..n {
            for j in 0..i {
                basis.push(unit(n, i, j));
                labels.push(format!("e{}{}", i + 1, j + 1));
            }
        }
        if n == 2 {
            labels = vec!["e".into(), "h".into(), "f".into()];
        }
        let mut alg = LieAlgebra {
            n,
            basis,
            labels,
            structure: Vec::new(),
            killing_gram: QMatrix::zeros(0, 0),
            killing_inverse: QMatrix::zeros(0, 0),
        };
        let d = alg.dim();
        alg.structure = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| alg.coords_of_matrix(&alg.basis[i].commutator(&alg.basis[j])))
                    .collect()
            })
            .collect();
        alg.killing_gram = alg.gram_from_structure();
        alg.killing_inverse = alg.killing_gram.inverse().ok_or(Error::Singular)?;
        Ok(alg)
    }

    /// `"a1"`/`"sl2"` or `"a2"`/`"sl3"`.
    pub fn from_name(name: &str) -> Result<Self> {
        match name.trim().to_ascii_lowercase().as_str() {
            "a1" | "sl2" => LieAlgebra::sl(2),
            "a2" | "sl3" => LieAlgebra::sl(3),
            _ => Err(Error::UnknownAlgebra(name.to_string())),
        }
    }

    /// Copy with one structure constant shifted by `delta`, leaving the
    /// cached Killing form untouched. Only meant for exercising failure paths.
    pub fn with_corrupted_structure_constant(&self, i: usize, j: usize, k: usize, delta: Rational) -> Self {
        let mut out = self.clone();
        out.structure[i][j][k] += delta;
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.n - 1
    }

    pub fn name(&self) -> String {
        format!("a{}", self.n - 1)
    }

    pub fn basis_matrix(&self, i: usize) -> &QMatrix {
        &self.basis[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut coords = vec![Rational::zero(); self.dim()];
        coords[i] = Rational::one();
        Element::new(coords)
    }

    pub fn basis_elements(&self) -> Vec<Element> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }

    /// Looks up a basis vector by label (`e`, `h`, `f`, `e12`, `h1`, …).
    pub fn named(&self, label: &str) -> Option<Element> {
        let idx = self.labels.iter().position(|l| l == label).or_else(|| {
            if self.n == 2 {
                ["e12", "h1", "e21"].iter().position(|l| *l == label)
            } else {
                None
            }
        })?;
        Some(self.basis_element(idx))
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.dim())
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<Element> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: coords.len() });
        }
        Ok(Element::new(coords))
    }

    pub fn sample_element(&self, sampler: &mut Sampler) -> Element {
        Element::new(sampler.next_vec(self.dim()))
    }

    pub fn sample_group(&self, sampler: &mut Sampler) -> GroupElement {
        GroupElement::sample(self.n, sampler)
    }

    pub fn to_matrix(&self, x: &Element) -> QMatrix {
        self.to_matrix_of(x.coords())
    }

    pub fn to_matrix_of<S: Scalar>(&self, coords: &[S]) -> Matrix<S> {
        assert_eq!(coords.len(), self.dim());
        let mut m = Matrix::<S>::zeros(self.n, self.n);
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for i in 0..self.n {
                for j in 0..self.n {
                    if !b[(i, j)].is_zero() {
                        m[(i, j)] = m[(i, j)].clone() + c.clone() * &S::from_rational(b[(i, j)].clone());
                    }
                }
            }
        }
        m
    }

    fn coords_of_matrix<S: Scalar>(&self, m: &Matrix<S>) -> Vec<S> {
        let n = self.n;
        let mut out = Vec::with_capacity(self.dim());
        for i in 0..n {
            for j in i + 1..n {
                out.push(m[(i, j)].clone());
            }
        }
        let mut partial = S::zero();
        for i in 0..n - 1 {
            partial = partial + &m[(i, i)];
            out.push(partial.clone());
        }
        for i in 0..n {
            for j in 0..i {
                out.push(m[(i, j)].clone());
            }
        }
        out
    }

    /// Coordinates of a trace-free matrix.
    pub fn from_matrix(&self, m: &QMatrix) -> Result<Element> {
        if m.rows() != self.n || m.cols() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: m.rows() });
        }
        if !m.trace().is_zero() {
            return Err(Error::NotTraceFree);
        }
        Ok(Element::new(self.coords_of_matrix(m)))
    }

    /// Coordinates of a matrix over any scalar ring; the trace is not checked.
    pub fn from_matrix_of<S: Scalar>(&self, m: &Matrix<S>) -> Vec<S> {
        self.coords_of_matrix(m)
    }

    /// Bracket through the structure constants.
    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        Element::new(self.bracket_of(x.coords(), y.coords()))
    }

    pub fn bracket_of<S: Scalar>(&self, x: &[S], y: &[S]) -> Vec<S> {
        let d = self.dim();
        let mut out = vec![S::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi.clone() * yj;
                for (k, c) in self.structure[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].clone() + w.clone() * &S::from_rational(c.clone());
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_x` on coordinates: column `k` is `[x, b_k]`.
    pub fn ad_matrix(&self, x: &Element) -> QMatrix {
        let columns: Vec<Vec<Rational>> =
            (0..self.dim()).map(|k| self.bracket(x, &self.basis_element(k)).into_coords()).collect();
        QMatrix::from_columns(&columns, self.dim())
    }

    fn gram_from_structure(&self) -> QMatrix {
        let ads: Vec<QMatrix> = (0..self.dim()).map(|i| self.ad_matrix(&self.basis_element(i))).collect();
        QMatrix::from_fn(self.dim(), self.dim(), |i, j| ads[i].mul(&ads[j]).trace())
    }

    pub fn killing_gram(&self) -> &QMatrix {
        &self.killing_gram
    }

    /// `tr(ad_x ∘ ad_y)` from the cached Gram matrix.
    pub fn killing(&self, x: &Element, y: &Element) -> Rational {
        self.killing_of(x.coords(), y.coords())
    }

    pub fn killing_of<S: Scalar>(&self, x: &[S], y: &[S]) -> S {
        let d = self.dim();
        let mut acc = S::zero();
        for i in 0..d {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..d {
                let g = &self.killing_gram[(i, j)];
                if g.is_zero() || y[j].is_zero() {
                    continue;
                }
                acc = acc + x[i].clone() * &y[j] * &S::from_rational(g.clone());
            }
        }
        acc
    }

    /// The covector `⟨x, ·⟩`, as coordinates against the dual basis.
    pub fn flat(&self, x: &Element) -> Element {
        Element::new(self.killing_gram.mul_vec(x.coords()))
    }

    /// Inverse of [`LieAlgebra::flat`].
    pub fn kappa(&self, alpha: &Element) -> Element {
        Element::new(self.killing_inverse.mul_vec(alpha.coords()))
    }

    pub fn kappa_of<S: Scalar>(&self, alpha: &[S]) -> Vec<S> {
        let g = self.killing_inverse.map(|c| S::from_rational(c.clone()));
        g.mul_vec(alpha)
    }

    pub fn killing_inverse(&self) -> &QMatrix {
        &self.killing_inverse
    }

    /// `Ad_g(x) = g x g⁻¹`.
    pub fn adjoint(&self, g: &GroupElement, x: &Element) -> Element {
        let m = g.conjugate(&self.to_matrix(x));
        Element::new(self.coords_of_matrix(&m))
    }

    /// Matrix of `Ad_g` on coordinates.
    pub fn adjoint_matrix(&self, g: &GroupElement) -> QMatrix {
        let columns: Vec<Vec<Rational>> =
            (0..self.dim()).map(|k| self.adjoint(g, &self.basis_element(k)).into_coords()).collect();
        QMatrix::from_columns(&columns, self.dim())
    }

    /// Basis of `g_x = ker ad_x`.
    pub fn centralizer(&self, x: &Element) -> Vec<Element> {
        self.ad_matrix(x).kernel().column_vectors().into_iter().map(Element::new).collect()
    }

    pub fn is_regular(&self, x: &Element) -> bool {
        self.centralizer(x).len() == self.rank()
    }

    pub fn chi(&self, x: &Element) -> InvariantVector {
        chi_of_matrix(&self.to_matrix(x))
    }

    pub fn chi_of<S: Scalar>(&self, coords: &[S]) -> Vec<S> {
        chi_of_matrix(&self.to_matrix_of(coords))
    }

    pub fn exp_nilpotent(&self, x: &Element) -> Result<GroupElement> {
        GroupElement::new(exp_nilpotent_matrix(&self.to_matrix(x))?)
    }

    /// `log u` for a unipotent class; inverse of [`LieAlgebra::exp_nilpotent`].
    pub fn log_unipotent(&self, g: &GroupElement) -> Result<Element> {
        let u = g.unipotent_representative()?;
        let nil = u.sub(&QMatrix::identity(self.n));
        let mut acc = QMatrix::zeros(self.n, self.n);
        let mut power = nil.clone();
        for k in 1..=self.n {
            let c = Rational::new(if k % 2 == 1 { 1.into() } else { (-1).into() }, (k as i64).into());
            acc = acc.add(&power.scale(&c));
            power = power.mul(&nil);
        }
        self.from_matrix(&acc)
    }

    /// Jacobi identity on basis triples of the structure table; returns the
    /// first failing triple.
    pub fn jacobi_witness(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let (x, y, z) = (self.basis_element(i), self.basis_element(j), self.basis_element(k));
                    if !self.jacobiator(&x, &y, &z).is_zero() {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// `[[x,y],z] + [[y,z],x] + [[z,x],y]`.
    pub fn jacobiator(&self, x: &Element, y: &Element, z: &Element) -> Element {
        let a = self.bracket(&self.bracket(x, y), z);
        let b = self.bracket(&self.bracket(y, z), x);
        let c = self.bracket(&self.bracket(z, x), y);
        &(&a + &b) + &c
    }

    pub fn format_element(&self, x: &Element) -> String {
        let mut parts = Vec::new();
        for (c, label) in x.coords().iter().zip(&self.labels) {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(label.clone());
            } else if *c == -Rational::one() {
                parts.push(format!("-{label}"));
            } else {
                parts.push(format!("{c}*{label}"));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ").replace("+ -", "- ")
        }
    }
}

/// `det(λ − m) = λⁿ + a_1 λⁿ⁻¹ + … + a_n`; returns `(a_2, …, a_n)`.
///
/// Faddeev–LeVerrier, so only division by small integers is needed.
pub fn chi_of_matrix<S: Scalar>(m: &Matrix<S>) -> Vec<S> {
    let n = m.rows();
    let mut coeffs = Vec::with_capacity(n);
    let mut mk = Matrix::<S>::identity(n);
    let mut ak = -m.trace();
    for k in 2..=n {
        mk = m.mul(&mk).add(&Matrix::identity(n).scale(&ak));
        let inv_k = S::from_rational(Rational::new(1.into(), (k as i64).into()));
        ak = -(m.mul(&mk).trace() * &inv_k);
        coeffs.push(ak.clone());
    }
    coeffs
}

pub fn exp_nilpotent_matrix(x: &QMatrix) -> Result<QMatrix> {
    let n = x.rows();
    if !x.pow(n as u32).is_zero() {
        return Err(Error::NotNilpotent);
    }
    let mut acc = QMatrix::identity(n);
    let mut term = QMatrix::identity(n);
    for k in 1..n {
        term = term.mul(x).scale(&Rational::new(1.into(), (k as i64).into()));
        acc = acc.add(&term);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests;
