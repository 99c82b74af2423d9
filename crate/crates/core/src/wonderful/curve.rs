use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{parse_rational, Rational};
use crate::liecore::LieAlgebra;
use crate::{Laurent, LaurentMatrix, QMatrix};

use super::plucker::plucker_coordinates;
use super::{Certificate, Subspace};

/// A subspace of `g ⊕ g` over the Laurent polynomials in `t`, given by the
/// rows of a basis matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveSubspace {
    rows: LaurentMatrix,
}

fn adjugate(g: &LaurentMatrix) -> LaurentMatrix {
    let n = g.rows();
    if n == 1 {
        return LaurentMatrix::identity(1);
    }
    LaurentMatrix::from_fn(n, n, |i, j| {
        let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
        let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
        let minor = g.select_rows(&rows).select_columns(&cols).det_fraction_free();
        if (i + j) % 2 == 0 {
            minor
        } else {
            -minor
        }
    })
}

impl CurveSubspace {
    pub fn new(rows: LaurentMatrix) -> Self {
        CurveSubspace { rows }
    }

    /// Graphs of `Ad_{g(t)}` for a curve `g(t)` of invertible matrices, with
    /// rows `(g b adj(g), det(g) b)` so that every entry stays polynomial in `t^±1`.
    pub fn graph(alg: &LieAlgebra, g: &LaurentMatrix) -> Result<Self> {
        if g.rows() != alg.n() || g.cols() != alg.n() {
            return Err(Error::DimensionMismatch { expected: alg.n(), found: g.rows() });
        }
        let det = g.det_fraction_free();
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let adj = adjugate(g);
        let rows: Vec<Vec<Laurent>> = (0..alg.dim())
            .map(|k| {
                let b = alg.basis_matrix(k).map(|c| Laurent::constant(c.clone()));
                let left = alg.from_matrix_of(&g.mul(&b).mul(&adj));
                let right = alg.from_matrix_of(&b.scale(&det));
                left.into_iter().chain(right).collect()
            })
            .collect();
        Ok(CurveSubspace { rows: LaurentMatrix::from_rows(&rows, 2 * alg.dim()) })
    }

    pub fn constant(rows: &QMatrix) -> Self {
        CurveSubspace { rows: rows.map(|c| Laurent::constant(c.clone())) }
    }

    pub fn rows(&self) -> &LaurentMatrix {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.rows.rows()
    }

    /// `t ↦ t^k`.
    pub fn reparametrize(&self, k: u32) -> Self {
        CurveSubspace { rows: self.rows.map(|p| p.reparametrize(k)) }
    }

    /// Multiplies row `i` by `factor`.
    pub fn scale_row(&self, i: usize, factor: &Laurent) -> Self {
        let mut rows = self.rows.clone();
        for j in 0..rows.cols() {
            rows[(i, j)] = rows[(i, j)].clone() * factor;
        }
        CurveSubspace { rows }
    }

    /// The subspace at a nonzero value of `t`.
    pub fn at(&self, t: &Rational) -> Subspace {
        Subspace::from_spanning_rows(&self.rows.map(|p| p.eval(t)))
    }

    /// Plücker vector over the Laurent polynomials.
    pub fn plucker(&self) -> Vec<Laurent> {
        plucker_coordinates(&self.rows)
    }

    /// Limit at `t = 0`, computed by row operations and checked against the
    /// lowest-order Plücker coefficients.
    pub fn limit(&self) -> Result<Subspace> {
        let by_rows = self.limit_by_row_reduction()?;
        let by_plucker = self.limit_by_plucker()?;
        if by_rows != by_plucker {
            return Err(Error::Internal("limit methods disagree".into()));
        }
        Ok(by_rows)
    }

    fn degenerate(&self) -> Error {
        let samples = [2, 3, 5, 7, 11].map(|v| Rational::from_integer(v.into()));
        let rank = samples.iter().map(|t| self.rows.map(|p| p.eval(t)).rank()).max().unwrap_or(0);
        Error::DegenerateCurve { rank, expected: self.dim() }
    }

    /// Divide every row by its lowest power of `t` and evaluate at `0`; while
    /// the constant rows are dependent, replace one row by the dependent
    /// combination, which vanishes at `t = 0`, and repeat.
    pub fn limit_by_row_reduction(&self) -> Result<Subspace> {
        let mut rows: Vec<Vec<Laurent>> = self.rows.row_vectors();
        let k = rows.len();
        for _ in 0..10_000 {
            for row in rows.iter_mut() {
                let v = row
                    .iter()
                    .filter_map(Laurent::valuation)
                    .min()
                    .ok_or_else(|| self.degenerate())?;
                for p in row.iter_mut() {
                    *p = p.shift(-v);
                }
            }
            let constant: Vec<Vec<Rational>> =
                rows.iter().map(|r| r.iter().map(|p| p.coeff(0)).collect()).collect();
            let at_zero = QMatrix::from_rows(&constant, self.rows.cols());
            let dependencies = at_zero.transpose().kernel();
            if dependencies.cols() == 0 {
                return Ok(Subspace::certified(&at_zero, Certificate::Limit));
            }
            let c = dependencies.column(0);
            let i = (0..k).rev().find(|&i| !c[i].is_zero()).expect("nonzero dependency");
            let combined: Vec<Laurent> = (0..self.rows.cols())
                .map(|j| {
                    (0..k)
                        .filter(|&r| !c[r].is_zero())
                        .fold(Laurent::zero(), |acc, r| acc + rows[r][j].scale(&c[r]))
                })
                .collect();
            rows[i] = combined;
        }
        Err(Error::Internal("row reduction did not terminate".into()))
    }

    /// The normalized Plücker vector divided by its lowest power of `t`,
    /// evaluated at `t = 0`.
    ///
    /// Only the minors next to one column set `P` are formed: fraction-free
    /// Gauss–Jordan elimination on the columns of `P` leaves `Δ_P` on the
    /// pivots and `±Δ_{P−p_i+j}` at `(i, j)`. `P` is exchanged for a neighbour
    /// of lower valuation until none exists; Plücker vectors over a valued
    /// field form a valuated matroid, so this local minimum is the global
    /// lowest valuation. The limit is then the row space of the lowest-order
    /// coefficients.
    pub fn limit_by_plucker(&self) -> Result<Subspace> {
        let (k, m) = (self.rows.rows(), self.rows.cols());
        let mut pivots = self.generic_pivots().ok_or_else(|| self.degenerate())?;
        let rows = integral_rows(&self.rows);
        for _ in 0..10_000 {
            let reduced = fraction_free_jordan(&rows, &pivots);
            let delta = reduced[0][pivots[0]].clone();
            let lowest = delta.valuation().expect("nonzero pivot minor");
            let better = (0..k)
                .flat_map(|i| (0..m).map(move |j| (i, j)))
                .filter(|(_, j)| !pivots.contains(j))
                .filter_map(|(i, j)| reduced[i][j].valuation().map(|v| (v, i, j)))
                .filter(|(v, _, _)| *v < lowest)
                .min();
            if let Some((_, i, j)) = better {
                pivots[i] = j;
                pivots.sort_unstable();
                continue;
            }
            let lead = Rational::from_integer(delta.coeff(lowest));
            let limit = QMatrix::from_fn(k, m, |i, j| Rational::from_integer(reduced[i][j].coeff(lowest)) / &lead);
            let gamma = Subspace::from_spanning_rows(&limit);
            return Ok(Subspace { certificate: Certificate::Limit, ..gamma });
        }
        Err(Error::Internal("pivot exchange did not terminate".into()))
    }

    /// Pivot columns of the rows at a value of `t` where they have full rank.
    fn generic_pivots(&self) -> Option<Vec<usize>> {
        (2..40).map(|v| Rational::from_integer(v.into())).find_map(|t| {
            let r = self.rows.map(|p| p.eval(&t)).rref();
            (r.rank == self.dim()).then_some(r.pivots)
        })
    }
}

/// Laurent polynomial with integer coefficients; the elimination below stays
/// integral, so this avoids a gcd on every coefficient operation.
#[derive(Clone, Debug, PartialEq)]
struct IntLaurent {
    coeffs: Vec<BigInt>,
    low: i64,
}

impl IntLaurent {
    fn new(mut coeffs: Vec<BigInt>, mut low: i64) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        coeffs.drain(..lead);
        low += lead as i64;
        if coeffs.is_empty() {
            low = 0;
        }
        IntLaurent { coeffs, low }
    }

    fn one() -> Self {
        IntLaurent { coeffs: vec![BigInt::one()], low: 0 }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    fn coeff(&self, k: i64) -> BigInt {
        usize::try_from(k - self.low).ok().and_then(|i| self.coeffs.get(i).cloned()).unwrap_or_default()
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return IntLaurent::new(Vec::new(), 0);
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntLaurent::new(coeffs, self.low + rhs.low)
    }

    fn sub(&self, rhs: &Self) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return IntLaurent::new(rhs.coeffs.iter().map(|c| -c).collect(), rhs.low);
        }
        let low = self.low.min(rhs.low);
        let high = (self.low + self.coeffs.len() as i64).max(rhs.low + rhs.coeffs.len() as i64);
        let coeffs = (low..high).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        IntLaurent::new(coeffs, low)
    }

    /// Exact quotient by long division from the lowest term.
    fn div_exact(&self, divisor: &Self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let d0 = &divisor.coeffs[0];
        let len = self.coeffs.len() + 1 - divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        let mut quotient = Vec::with_capacity(len);
        for i in 0..len {
            let (q, r) = rem[i].div_rem(d0);
            assert!(r.is_zero(), "inexact division in fraction-free elimination");
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * d;
                }
            }
            quotient.push(q);
        }
        assert!(rem.iter().all(Zero::is_zero), "inexact division in fraction-free elimination");
        IntLaurent::new(quotient, self.low - divisor.low)
    }
}

/// Scales each row by the common denominator of its coefficients.
fn integral_rows(rows: &LaurentMatrix) -> Vec<Vec<IntLaurent>> {
    let coeffs = |p: &Laurent| -> Vec<Rational> {
        match (p.valuation(), p.degree()) {
            (Some(v), Some(d)) => (v..=d).map(|k| p.coeff(k)).collect(),
            _ => Vec::new(),
        }
    };
    (0..rows.rows())
        .map(|i| {
            let row = rows.row(i);
            let lcm = row.iter().flat_map(coeffs).fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            row.iter()
                .map(|p| {
                    let scaled: Vec<BigInt> = coeffs(p).iter().map(|c| (c * &lcm).to_integer()).collect();
                    IntLaurent::new(scaled, p.valuation().unwrap_or(0))
                })
                .collect()
        })
        .collect()
}

/// Fraction-free Gauss–Jordan elimination on the given columns (their minor
/// must be nonzero); every entry of the result is a maximal minor up to sign,
/// and each pivot entry is the minor of the pivot columns.
fn fraction_free_jordan(rows: &[Vec<IntLaurent>], pivots: &[usize]) -> Vec<Vec<IntLaurent>> {
    let k = rows.len();
    let mut a = rows.to_vec();
    let mut prev = IntLaurent::one();
    for (step, &col) in pivots.iter().enumerate() {
        let r = (step..k).find(|&r| !a[r][col].is_zero()).expect("pivot minor is nonzero");
        a.swap(r, step);
        let pivot = a[step][col].clone();
        let pivot_row = a[step].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == step {
                continue;
            }
            let factor = row[col].clone();
            for (entry, top) in row.iter_mut().zip(&pivot_row) {
                *entry = pivot.mul(entry).sub(&factor.mul(top)).div_exact(&prev);
            }
        }
        prev = pivot;
    }
    a
}

/// Parses a curve of `n × n` matrices.
///
/// A curve is a product (`*`) of factors `diag(a, b, …)` or `[[a, b], [c, d]]`
/// whose entries are expressions in `t` built from rationals, `t`, `t^k`
/// (`k` may be negative), `+`, `-`, `*`, `/` (by monomials) and parentheses.
pub fn parse_curve(text: &str, n: usize) -> Result<LaurentMatrix> {
    let factors = split_top_level(text.trim(), '*');
    let mut acc = LaurentMatrix::identity(n);
    for factor in factors {
        acc = acc.mul(&parse_matrix_factor(factor.trim(), n)?);
    }
    Ok(acc)
}

fn parse_error(text: &str) -> Error {
    Error::Parse(format!("cannot parse curve `{text}`"))
}

/// Splits on `sep` outside of brackets and parentheses.
fn split_top_level(text: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&text[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

fn parse_matrix_factor(text: &str, n: usize) -> Result<LaurentMatrix> {
    if let Some(inner) = text.strip_prefix("diag(").and_then(|r| r.strip_suffix(')')) {
        let entries = split_top_level(inner, ',');
        if entries.len() != n {
            return Err(Error::Parse(format!("diag needs {n} entries in `{text}`")));
        }
        let diag: Vec<Laurent> = entries.iter().map(|e| parse_laurent(e)).collect::<Result<_>>()?;
        return Ok(LaurentMatrix::from_fn(n, n, |i, j| if i == j { diag[i].clone() } else { Laurent::zero() }));
    }
    let inner = text
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| parse_error(text))?;
    let rows = split_top_level(inner, ',');
    if rows.len() != n {
        return Err(Error::Parse(format!("expected {n} rows in `{text}`")));
    }
    let mut entries = Vec::with_capacity(n);
    for row in rows {
        let row = row.trim();
        let body = row
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| parse_error(text))?;
        let cells: Vec<Laurent> = split_top_level(body, ',').iter().map(|e| parse_laurent(e)).collect::<Result<_>>()?;
        if cells.len() != n {
            return Err(Error::Parse(format!("expected {n} columns in `{text}`")));
        }
        entries.push(cells);
    }
    Ok(LaurentMatrix::from_rows(&entries, n))
}

/// Parses one Laurent polynomial expression in `t`.
pub fn parse_laurent(text: &str) -> Result<Laurent> {
    let tokens: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut parser = ExprParser { tokens: &tokens, pos: 0, source: text };
    let value = parser.expr()?;
    if parser.pos != tokens.len() {
        return Err(parse_error(text));
    }
    Ok(value)
}

struct ExprParser<'a> {
    tokens: &'a [char],
    pos: usize,
    source: &'a str,
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).copied()
    }

    fn fail(&self) -> Error {
        parse_error(self.source)
    }

    fn expr(&mut self) -> Result<Laurent> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -self.term()?
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Laurent> {
        let mut acc = self.factor()?;
        while let Some(op @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = if op == '*' {
                acc * rhs
            } else {
                acc.checked_div(&rhs).ok_or_else(|| self.fail())?
            };
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.tokens[start..self.pos].iter().collect::<String>().parse().map_err(|_| self.fail())
    }

    fn factor(&mut self) -> Result<Laurent> {
        match self.peek() {
            Some('t') => {
                self.pos += 1;
                let mut k = 1;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    if self.peek() == Some('(') {
                        self.pos += 1;
                        k = self.integer()?;
                        if self.peek() != Some(')') {
                            return Err(self.fail());
                        }
                        self.pos += 1;
                    } else {
                        k = self.integer()?;
                    }
                }
                Ok(Laurent::monomial(Rational::one(), k))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.fail());
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.tokens[start..self.pos].iter().collect();
                let value = parse_rational(&digits).ok_or_else(|| self.fail())?;
                Ok(Laurent::constant(value))
            }
            _ => Err(self.fail()),
        }
    }
}
