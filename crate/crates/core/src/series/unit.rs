use num_rational::BigRational;

use super::{PowerSeries, SeriesError};
use crate::scalar::Coefficient;

/// A series `1 + u1 z + ... + uN z^N`, closed under products and arbitrary
/// rational powers.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitSeries<C> {
    inner: PowerSeries<C>,
}

impl<C: Coefficient> UnitSeries<C> {
    pub fn new(series: PowerSeries<C>) -> Result<Self, SeriesError> {
        if series.coeff(0).is_one() {
            Ok(Self { inner: series })
        } else {
            Err(SeriesError::NonUnitConstant)
        }
    }

    /// Builds `1 + Σ tail[i-1] z^i`.
    pub fn from_tail(tail: Vec<C>) -> Self {
        let mut coeffs = Vec::with_capacity(tail.len() + 1);
        coeffs.push(C::one());
        coeffs.extend(tail);
        Self {
            inner: PowerSeries::new(coeffs),
        }
    }

    pub fn one(order: usize) -> Self {
        Self {
            inner: PowerSeries::one(order),
        }
    }

    pub fn order(&self) -> usize {
        self.inner.order()
    }

    pub fn coeff(&self, n: usize) -> &C {
        self.inner.coeff(n)
    }

    pub fn as_series(&self) -> &PowerSeries<C> {
        &self.inner
    }

    pub fn into_series(self) -> PowerSeries<C> {
        self.inner
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(Self {
            inner: self.inner.mul(&other.inner)?,
        })
    }

    pub fn log(&self) -> PowerSeries<C> {
        self.inner.log().expect("unit series has constant term 1")
    }

    /// `exp(r · log u)`; valid for every rational `r`, including negative and
    /// fractional exponents.
    pub fn pow(&self, r: &BigRational) -> Self {
        let exponent = self.log().scale(r);
        Self {
            inner: exponent.exp().expect("scaled logarithm has zero constant term"),
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self {
            inner: self.inner.truncate(order),
        }
    }
}

/// `exp` of a zero-constant series is a unit series.
pub fn exp_unit<C: Coefficient>(v: &PowerSeries<C>) -> Result<UnitSeries<C>, SeriesError> {
    Ok(UnitSeries { inner: v.exp()? })
}
