//! Exact scalars and dense linear algebra over them.
//!
//! Every computation in the crate is carried out over [`Rational`] or a ring
//! built on top of it: dual numbers for exact first derivatives and Laurent
//! polynomials for one-parameter curves. No floating point is used anywhere.

mod dual;
mod laurent;
mod matrix;
mod rational;
mod scalar;

pub use dual::Dual;
pub use laurent::LaurentPoly;
pub use matrix::{Matrix, Rref};
pub use rational::{format_rational, parse_rational, q, qi, sample_rational, Rational, Sampler};
pub use scalar::{ExactDiv, Field, Scalar};
