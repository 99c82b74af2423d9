use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;
use super::scalar::{ExactDiv, Field, Scalar};

/// A Laurent polynomial `Σ c_k t^k` with finitely many nonzero coefficients.
///
/// Stored densely from the lowest nonzero exponent; both ends of `coeffs` are
/// nonzero unless the polynomial is zero, in which case `coeffs` is empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<F> {
    coeffs: Vec<F>,
    lowest_exponent: i64,
}

impl<F: Field> LaurentPoly<F> {
    pub fn new(coeffs: Vec<F>, lowest_exponent: i64) -> Self {
        let mut poly = LaurentPoly { coeffs, lowest_exponent };
        poly.normalize();
        poly
    }

    /// `c · t^k`
    pub fn monomial(c: F, k: i64) -> Self {
        LaurentPoly::new(vec![c], k)
    }

    pub fn constant(c: F) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    /// The formal parameter `t`.
    pub fn t() -> Self {
        LaurentPoly::monomial(F::one(), 1)
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.lowest_exponent = 0;
            return;
        }
        self.coeffs.drain(..lead);
        self.lowest_exponent += lead as i64;
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Lowest exponent with a nonzero coefficient; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.lowest_exponent)
        }
    }

    pub fn degree(&self) -> Option<i64> {
        self.valuation().map(|v| v + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: i64) -> F {
        let offset = k - self.lowest_exponent;
        if offset < 0 || offset as usize >= self.coeffs.len() {
            F::zero()
        } else {
            self.coeffs[offset as usize].clone()
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { coeffs: self.coeffs.clone(), lowest_exponent: self.lowest_exponent + k }
    }

    pub fn scale(&self, c: &F) -> Self {
        LaurentPoly::new(self.coeffs.iter().map(|x| x.clone() * c).collect(), self.lowest_exponent)
    }

    /// Value at a nonzero point `t`.
    pub fn eval(&self, t: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        let mut power = F::one();
        let step = if self.lowest_exponent >= 0 { t.clone() } else { F::one() / t };
        for _ in 0..self.lowest_exponent.unsigned_abs() {
            power = power * &step;
        }
        acc * &power
    }

    /// Substitutes `t ↦ t^k` for `k ≥ 1`.
    pub fn reparametrize(&self, k: u32) -> Self {
        let k = i64::from(k);
        let mut coeffs = vec![F::zero(); (self.coeffs.len().max(1) - 1) * k as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k as usize] = c.clone();
        }
        LaurentPoly::new(coeffs, self.lowest_exponent * k)
    }

    /// Exact quotient; panics if `divisor` does not divide `self`.
    pub fn checked_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let len = rem.len() - divisor.coeffs.len() + 1;
        let lead = &divisor.coeffs[0];
        let mut quotient = Vec::with_capacity(len);
        for i in 0..len {
            let factor = rem[i].clone() / lead;
            if !factor.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] = rem[i + j].clone() - factor.clone() * d;
                }
            }
            quotient.push(factor);
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(LaurentPoly::new(quotient, self.lowest_exponent - divisor.lowest_exponent))
    }
}

impl<F: Field> Add<&LaurentPoly<F>> for LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn add(self, rhs: &LaurentPoly<F>) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self;
        }
        let low = self.lowest_exponent.min(rhs.lowest_exponent);
        let high = self.degree().unwrap().max(rhs.degree().unwrap());
        let coeffs = (low..=high).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        LaurentPoly::new(coeffs, low)
    }
}

impl<F: Field> Add for LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn add(self, rhs: Self) -> Self {
        self + &rhs
    }
}

impl<F: Field> Neg for LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn neg(self) -> Self {
        LaurentPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect(), lowest_exponent: self.lowest_exponent }
    }
}

impl<F: Field> Sub<&LaurentPoly<F>> for LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn sub(self, rhs: &LaurentPoly<F>) -> Self {
        self + &(-rhs.clone())
    }
}

impl<F: Field> Sub for LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn sub(self, rhs: Self) -> Self {
        self + &(-rhs)
    }
}

impl<F: Field> Mul<&LaurentPoly<F>> for LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn mul(self, rhs: &LaurentPoly<F>) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b;
            }
        }
        LaurentPoly::new(coeffs, self.lowest_exponent + rhs.lowest_exponent)
    }
}

impl<F: Field> Mul for LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn mul(self, rhs: Self) -> Self {
        self * &rhs
    }
}

impl<F: Field> Zero for LaurentPoly<F> {
    fn zero() -> Self {
        LaurentPoly { coeffs: Vec::new(), lowest_exponent: 0 }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<F: Field> One for LaurentPoly<F> {
    fn one() -> Self {
        LaurentPoly::constant(F::one())
    }
}

impl<F: Field> Scalar for LaurentPoly<F> {
    fn from_rational(q: Rational) -> Self {
        LaurentPoly::constant(F::from_rational(q))
    }
}

impl<F: Field> ExactDiv for LaurentPoly<F> {
    fn div_exact(&self, divisor: &Self) -> Self {
        self.checked_div(divisor).expect("inexact Laurent polynomial division")
    }
}

impl<F: Field + fmt::Display> fmt::Display for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.lowest_exponent + i as i64;
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly(t^{} * {:?})", self.lowest_exponent, self.coeffs)
    }
}
