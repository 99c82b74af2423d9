use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;
use super::scalar::Scalar;

/// An element `value + eps·ε` of `T[ε]/(ε²)`.
///
/// Evaluating a polynomial map at `a + 1·ε` yields its value at `a` together
/// with the exact derivative in the ε-slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dual<T> {
    pub value: T,
    pub eps: T,
}

impl<T: Scalar> Dual<T> {
    pub fn new(value: T, eps: T) -> Self {
        Dual { value, eps }
    }

    /// A constant (zero derivative).
    pub fn constant(value: T) -> Self {
        Dual { value, eps: T::zero() }
    }

    /// The independent variable at `value`.
    pub fn variable(value: T) -> Self {
        Dual { value, eps: T::one() }
    }
}

impl<T: Scalar> Add for Dual<T> {
    type Output = Dual<T>;
    fn add(self, rhs: Self) -> Self {
        Dual { value: self.value + rhs.value, eps: self.eps + rhs.eps }
    }
}

impl<'a, T: Scalar> Add<&'a Dual<T>> for Dual<T> {
    type Output = Dual<T>;
    fn add(self, rhs: &'a Dual<T>) -> Self {
        Dual { value: self.value + &rhs.value, eps: self.eps + &rhs.eps }
    }
}

impl<T: Scalar> Sub for Dual<T> {
    type Output = Dual<T>;
    fn sub(self, rhs: Self) -> Self {
        Dual { value: self.value - rhs.value, eps: self.eps - rhs.eps }
    }
}

impl<'a, T: Scalar> Sub<&'a Dual<T>> for Dual<T> {
    type Output = Dual<T>;
    fn sub(self, rhs: &'a Dual<T>) -> Self {
        Dual { value: self.value - &rhs.value, eps: self.eps - &rhs.eps }
    }
}

impl<T: Scalar> Mul for Dual<T> {
    type Output = Dual<T>;
    fn mul(self, rhs: Self) -> Self {
        self * &rhs
    }
}

impl<'a, T: Scalar> Mul<&'a Dual<T>> for Dual<T> {
    type Output = Dual<T>;
    fn mul(self, rhs: &'a Dual<T>) -> Self {
        let eps = self.value.clone() * &rhs.eps + self.eps * &rhs.value;
        Dual { value: self.value * &rhs.value, eps }
    }
}

impl<T: Scalar> Neg for Dual<T> {
    type Output = Dual<T>;
    fn neg(self) -> Self {
        Dual { value: -self.value, eps: -self.eps }
    }
}

impl<T: Scalar> Zero for Dual<T> {
    fn zero() -> Self {
        Dual { value: T::zero(), eps: T::zero() }
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.eps.is_zero()
    }
}

impl<T: Scalar> One for Dual<T> {
    fn one() -> Self {
        Dual::constant(T::one())
    }
}

impl<T: Scalar> Scalar for Dual<T> {
    fn from_rational(q: Rational) -> Self {
        Dual::constant(T::from_rational(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{qi, Sampler};

    #[test]
    fn product_rule() {
        let a = Dual::new(qi(2), qi(3));
        let b = Dual::new(qi(5), qi(7));
        assert_eq!(a * b, Dual::new(qi(10), qi(2 * 7 + 3 * 5)));
    }

    #[test]
    fn cubic_derivative_matches_closed_form() {
        // p(x) = x^3 - 2x, p'(x) = 3x^2 - 2
        let mut s = Sampler::new(4);
        for _ in 0..20 {
            let a = s.next_rational();
            let x = Dual::variable(a.clone());
            let two = Dual::constant(qi(2));
            let p = x.clone() * &x * &x - two * &x;
            assert_eq!(p.eps, qi(3) * &a * &a - qi(2));
            assert_eq!(p.value, &a * &a * &a - qi(2) * &a);
        }
    }
}
