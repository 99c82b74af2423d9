//! Exact verification of Slodowy slices, moment maps on `T*G`, and the
//! wonderful compactification of `PGL_n`, at the scale of `sl_2` and `sl_3`.
//!
//! Everything is computed over the rationals (or rings built on them), so
//! every identity is checked with zero tolerance.

mod error;
pub mod exactnum;
pub mod liecore;
pub mod poisson;
pub mod slices;
pub mod slodowy;
pub mod suites;
pub mod wonderful;

pub use error::{Error, Result};

pub use exactnum::{Dual, LaurentPoly, Matrix, Rational};

/// Rational matrices.
pub type QMatrix = Matrix<Rational>;
/// Dual numbers over the rationals.
pub type DualQ = Dual<Rational>;
/// Laurent polynomials with rational coefficients.
pub type Laurent = LaurentPoly<Rational>;
/// Matrices over dual numbers, used for exact tangent computations.
pub type DualMatrix = Matrix<DualQ>;
/// Matrices over Laurent polynomials, used for one-parameter curves.
pub type LaurentMatrix = Matrix<Laurent>;
