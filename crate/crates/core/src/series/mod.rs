//! Truncated formal power series over any [`Coefficient`](crate::Coefficient) ring:
//! products, formal exp/log, rational powers, derivatives, composition and
//! compositional reversion.

mod json;
mod normalized;
mod power;
mod unit;

use thiserror::Error;

pub use json::SeriesJson;
pub use normalized::NormalizedSeries;
pub use power::PowerSeries;
pub use unit::{exp_unit, UnitSeries};

/// Default truncation order for symbolic work.
pub const DEFAULT_ORDER: usize = 10;
/// Largest supported truncation order.
pub const MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("constant term must be 1")]
    NonUnitConstant,
    #[error("constant term must be 0")]
    NonZeroConstant,
    #[error("series is not normalized (need f(0) = 0 and f'(0) = 1)")]
    NotNormalized,
    #[error("malformed series: {0}")]
    Format(String),
}
