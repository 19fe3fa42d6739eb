//! Exact and numeric coefficient calculus for normalized analytic functions
//! `f(z) = z + a2 z^2 + a3 z^3 + ...`.
//!
//! * [`algebra`]: sparse multivariate polynomials in `a2, a3, ...` with
//!   rational coefficients.
//! * [`series`]: truncated power series over any [`Coefficient`] ring, with
//!   exp/log, rational powers, composition and reversion.
//! * [`faber`]: Faber coefficients `K_n^p`, partition polynomials, inverse
//!   coefficients and the class operator.
//! * [`bounds`]: exact coefficient bounds with branch annotations.
//! * [`audit`]: symbolic display audits and seeded numerical falsifiers.
//!
//! The series layer is generic over the coefficient ring; the aliases below
//! fix the rings used in practice.

pub mod algebra;
pub mod audit;
pub mod bounds;
pub mod faber;
pub mod scalar;
pub mod series;

pub use algebra::{MPoly, Monomial};
pub use scalar::Coefficient;

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;

/// Normalized series with polynomial coefficients in `a2, a3, ...`.
pub type SymbolicSeries = series::NormalizedSeries<MPoly>;

/// Normalized series with exact rational coefficients.
pub type RationalSeries = series::NormalizedSeries<Rational>;

/// Normalized series with complex double coefficients.
pub type NumericSeries = series::NormalizedSeries<num_complex::Complex64>;
