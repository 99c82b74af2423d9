use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;

/// A commutative ring containing the rationals.
///
/// This is the bound every generic container in the crate works against.
/// Implemented for [`Rational`], [`super::Dual`] and [`super::LaurentPoly`].
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Send
    + Sync
{
    /// Embeds a rational constant.
    fn from_rational(q: Rational) -> Self;
}

/// A [`Scalar`] with division by nonzero elements.
pub trait Field: Scalar + Div<Output = Self> + for<'a> Div<&'a Self, Output = Self> {}

/// Division that is only required to succeed when the quotient lies in the ring.
///
/// Used by fraction-free elimination, where every division is exact.
pub trait ExactDiv: Scalar {
    fn div_exact(&self, divisor: &Self) -> Self;
}

impl Scalar for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }
}

impl Field for Rational {}

impl ExactDiv for Rational {
    fn div_exact(&self, divisor: &Self) -> Self {
        self / divisor
    }
}
