use std::fmt;
use std::ops::{Index, IndexMut};

use super::rational::Rational;
use super::scalar::{ExactDiv, Field, Scalar};

/// Dense row-major matrix over a scalar ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

/// Result of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq)]
pub struct Rref<S> {
    pub reduced: Matrix<S>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Builds from row vectors; all rows must have length `cols`.
    pub fn from_rows(rows: &[Vec<S>], cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix { rows: rows.len(), cols, entries: rows.iter().flatten().cloned().collect() }
    }

    pub fn from_columns(columns: &[Vec<S>], rows: usize) -> Self {
        assert!(columns.iter().all(|c| c.len() == rows), "ragged columns");
        Matrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn from_diagonal(diag: &[S]) -> Self {
        let n = diag.len();
        Matrix::from_fn(n, n, |i, j| if i == j { diag[i].clone() } else { S::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> Vec<S> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vec<S>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn trace(&self) -> S {
        assert!(self.is_square());
        (0..self.rows).fold(S::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn mul(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out: Matrix<S> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] = out.entries[idx].clone() + a.clone() * b;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).fold(S::zero(), |acc, j| acc + self[(i, j)].clone() * &v[j]))
            .collect()
    }

    pub fn add(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.clone() + b).collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.clone() - b).collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, c: &S) -> Matrix<S> {
        self.map(|e| e.clone() * c)
    }

    pub fn neg(&self) -> Matrix<S> {
        self.map(|e| -e.clone())
    }

    /// `self·rhs − rhs·self`
    pub fn commutator(&self, rhs: &Matrix<S>) -> Matrix<S> {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn pow(&self, k: u32) -> Matrix<S> {
        (0..k).fold(Matrix::identity(self.rows), |acc, _| acc.mul(self))
    }

    /// Columns side by side.
    pub fn hstack(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.rows, rhs.rows);
        Matrix::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[(i, j - self.cols)].clone()
            }
        })
    }

    /// Rows stacked.
    pub fn vstack(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, rhs.cols);
        let mut entries = self.entries.clone();
        entries.extend(rhs.entries.iter().cloned());
        Matrix { rows: self.rows + rhs.rows, cols: self.cols, entries }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix<S> {
        Matrix::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix<S> {
        Matrix::from_fn(rows.len(), self.cols, |i, j| self[(rows[i], j)].clone())
    }

    pub fn is_skew(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self[(i, j)] == -self[(j, i)].clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<S: ExactDiv> Matrix<S> {
    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det_fraction_free(&self) -> S {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return S::one();
        }
        let mut m = self.clone();
        let mut sign_flip = false;
        let mut prev = S::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !m[(r, k)].is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign_flip = !sign_flip;
                    }
                    None => return S::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = m[(i, j)].clone() * &m[(k, k)] - m[(i, k)].clone() * &m[(k, j)];
                    m[(i, j)] = v.div_exact(&prev);
                }
                m[(i, k)] = S::zero();
            }
            prev = m[(k, k)].clone();
        }
        let det = m[(n - 1, n - 1)].clone();
        if sign_flip {
            -det
        } else {
            det
        }
    }
}

impl<F: Field> Matrix<F> {
    /// Reduced row echelon form; the pivot in each column is the first nonzero
    /// entry at or below the current row.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = F::one() / &m[(row, col)];
            for j in col..m.cols {
                m[(row, j)] = m[(row, j)].clone() * &inv;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in col..m.cols {
                    let v = m[(r, j)].clone() - factor.clone() * &m[(row, j)];
                    m[(r, j)] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        let rank = pivots.len();
        Rref { reduced: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{v : M v = 0}` as the columns of the returned matrix.
    pub fn kernel(&self) -> Matrix<F> {
        let Rref { reduced, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut columns = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![F::zero(); self.cols];
            v[f] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -reduced[(r, f)].clone();
            }
            columns.push(v);
        }
        Matrix::from_columns(&columns, self.cols)
    }

    /// Some solution of `M x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let augmented = self.hstack(&Matrix::from_columns(&[b.to_vec()], self.rows));
        let Rref { reduced, pivots, .. } = augmented.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = reduced[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert!(self.is_square());
        let n = self.rows;
        let Rref { reduced, rank, .. } = self.hstack(&Matrix::identity(n)).rref();
        if rank < n || (0..n).any(|i| reduced[(i, i)] != F::one()) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| reduced[(i, n + j)].clone()))
    }

    pub fn determinant(&self) -> F {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = self.rows;
        let mut det = F::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return F::zero();
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det = det * &pivot;
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone() / &pivot;
                for j in col..n {
                    let v = m[(r, j)].clone() - factor.clone() * &m[(col, j)];
                    m[(r, j)] = v;
                }
            }
        }
        det
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.entries[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.entries[i * self.cols + j]
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            f.debug_list().entries(&self.entries[i * self.cols..(i + 1) * self.cols]).finish()?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<S: Scalar> Matrix<S> {
    /// `true` when every entry is `1` on the diagonal and `0` elsewhere.
    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() })
            })
    }
}
