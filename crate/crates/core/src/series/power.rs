use num_rational::BigRational;

use super::SeriesError;
use crate::scalar::{integer, rational, Coefficient};

/// A power series `c0 + c1 z + ... + cN z^N + O(z^{N+1})`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> PowerSeries<C> {
    /// Coefficients of `z^0 ..= z^N`; an empty vector is read as the zero
    /// series of order 0.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(C::zero());
        }
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = C::one();
        s
    }

    /// The series `z` truncated at `order` (which must be at least 1).
    pub fn z(order: usize) -> Self {
        let mut s = Self::zero(order.max(1));
        s.coeffs[1] = C::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<C> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, C::zero());
        Self { coeffs }
    }

    fn check_orders(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
    }

    pub fn scale_by(&self, c: &C) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x.mul_ref(c)).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        Ok(self.mul_truncated(other, self.order()))
    }

    /// Cauchy product truncated at `order`, with missing coefficients read as zero.
    pub(crate) fn mul_truncated(&self, other: &Self, order: usize) -> Self {
        let mut out = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j].add_product(a, b);
            }
        }
        Self { coeffs: out }
    }

    /// Term-wise derivative; the result has order `N - 1` (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c.scale(&integer(n as i64)))
                .collect(),
        }
    }

    /// Formal logarithm of a series with constant term 1, computed from
    /// `n·L_n = n·u_n − Σ_{k=1}^{n−1} k·L_k·u_{n−k}`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NonUnitConstant);
        }
        let n_max = self.order();
        let mut log = vec![C::zero(); n_max + 1];
        for n in 1..=n_max {
            let mut acc = self.coeffs[n].scale(&integer(n as i64));
            for (k, lk) in log.iter().enumerate().take(n).skip(1) {
                if lk.is_zero() || self.coeffs[n - k].is_zero() {
                    continue;
                }
                let term = lk.mul_ref(&self.coeffs[n - k]).scale(&integer(k as i64));
                acc -= &term;
            }
            log[n] = acc.scale(&rational(1, n as i64));
        }
        Ok(Self { coeffs: log })
    }

    /// Formal exponential of a series with constant term 0, computed from
    /// `n·E_n = Σ_{k=1}^{n} k·v_k·E_{n−k}`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonZeroConstant);
        }
        let n_max = self.order();
        let weighted: Vec<C> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, v)| v.scale(&integer(k as i64)))
            .collect();
        let mut out = vec![C::zero(); n_max + 1];
        out[0] = C::one();
        for n in 1..=n_max {
            let mut acc = C::zero();
            for k in 1..=n {
                if weighted[k].is_zero() {
                    continue;
                }
                acc.add_product(&weighted[k], &out[n - k]);
            }
            out[n] = acc.scale(&rational(1, n as i64));
        }
        Ok(Self { coeffs: out })
    }

    /// Horner evaluation of the truncated polynomial at `z`.
    pub fn evaluate(&self, z: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(z);
            acc += c;
        }
        acc
    }

    pub fn map<D: Coefficient, F: FnMut(&C) -> D>(&self, f: F) -> PowerSeries<D> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}
