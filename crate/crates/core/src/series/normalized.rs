use super::{PowerSeries, SeriesError, UnitSeries};
use crate::scalar::{integer, Coefficient};
use crate::MPoly;

/// A normalized series `f(z) = z + a2 z^2 + ... + aN z^N`, i.e. `f(0) = 0`
/// and `f'(0) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedSeries<C> {
    inner: PowerSeries<C>,
}

impl<C: Coefficient> NormalizedSeries<C> {
    pub fn new(series: PowerSeries<C>) -> Result<Self, SeriesError> {
        if series.order() < 1 || !series.coeff(0).is_zero() || !series.coeff(1).is_one() {
            return Err(SeriesError::NotNormalized);
        }
        Ok(Self { inner: series })
    }

    /// `z + Σ tail[i] z^{i+2}`; the order is `tail.len() + 1`.
    pub fn from_tail(tail: Vec<C>) -> Self {
        let mut coeffs = Vec::with_capacity(tail.len() + 2);
        coeffs.push(C::zero());
        coeffs.push(C::one());
        coeffs.extend(tail);
        Self {
            inner: PowerSeries::new(coeffs),
        }
    }

    pub fn identity(order: usize) -> Self {
        Self {
            inner: PowerSeries::z(order),
        }
    }

    pub fn order(&self) -> usize {
        self.inner.order()
    }

    /// The Taylor coefficient `a_n` (with `a_1 = 1`).
    pub fn coefficient(&self, n: usize) -> &C {
        self.inner.coeff(n)
    }

    /// `a2 ..= aN`
    pub fn tail(&self) -> &[C] {
        &self.inner.coeffs()[2..]
    }

    pub fn as_series(&self) -> &PowerSeries<C> {
        &self.inner
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self {
            inner: self.inner.truncate(order.max(1)),
        }
    }

    /// `f(z)/z = 1 + a2 z + ... + aN z^{N-1}`.
    pub fn over_z(&self) -> UnitSeries<C> {
        UnitSeries::from_tail(self.tail().to_vec())
    }

    /// `f'(z)`, known through `z^{N-1}`.
    pub fn derivative(&self) -> PowerSeries<C> {
        self.inner.derivative()
    }

    /// `z·f''(z) = Σ n(n-1) a_n z^{n-1}`, known through `z^{N-1}`.
    pub fn z_second_derivative(&self) -> PowerSeries<C> {
        let mut coeffs = vec![C::zero(); self.order()];
        for (n, a) in self.inner.coeffs().iter().enumerate().skip(2) {
            coeffs[n - 1] = a.scale(&integer((n * (n - 1)) as i64));
        }
        PowerSeries::new(coeffs)
    }

    /// `outer(inner(z))` truncated at the common order.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if self.order() != inner.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: inner.order(),
            });
        }
        let n = self.order();
        // Horner: outer(w) = w·(1 + a2 w + ... + aN w^{N-1})
        let mut acc = PowerSeries::zero(n);
        for c in self.inner.coeffs()[1..].iter().rev() {
            acc = acc.mul_truncated(&inner.inner, n);
            let mut head = acc.into_coeffs();
            head[0] += c;
            acc = PowerSeries::new(head);
        }
        let composed = acc.mul_truncated(&inner.inner, n);
        Ok(Self { inner: composed })
    }

    /// Compositional inverse `g` with `g(f(z)) = z` through `z^N`.
    ///
    /// The `z^n` coefficient of `Σ_k b_k f^k` is `b_n + Σ_{k<n} b_k [z^n] f^k`
    /// because `f^n = z^n + ...`, so each `b_n` is solved in turn from the
    /// already known `b_1, ..., b_{n-1}`.
    pub fn revert(&self) -> Self {
        let n_max = self.order();
        // powers[k] = f^k truncated at z^N, for k = 1 ..= N-1
        let mut powers: Vec<PowerSeries<C>> = Vec::with_capacity(n_max);
        powers.push(PowerSeries::one(n_max));
        for k in 1..n_max {
            let next = powers[k - 1].mul_truncated(&self.inner, n_max);
            powers.push(next);
        }
        let mut b = vec![C::zero(); n_max + 1];
        if n_max >= 1 {
            b[1] = C::one();
        }
        for n in 2..=n_max {
            let mut acc = C::zero();
            for k in 1..n {
                if b[k].is_zero() {
                    continue;
                }
                acc.add_product(&b[k], powers[k].coeff(n));
            }
            b[n] = -acc;
        }
        Self {
            inner: PowerSeries::new(b),
        }
    }

    pub fn map<D: Coefficient, F: FnMut(&C) -> D>(&self, f: F) -> NormalizedSeries<D> {
        NormalizedSeries {
            inner: self.inner.map(f),
        }
    }
}

impl NormalizedSeries<MPoly> {
    /// The fully symbolic series `z + a2 z^2 + ... + aN z^N`.
    pub fn generic(order: usize) -> Self {
        Self::from_tail((2..=order as u32).map(MPoly::var).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;
    use num_traits::{One, Zero};
    use num_rational::BigRational;

    fn a(k: u32) -> MPoly {
        MPoly::var(k)
    }

    fn q(n: i64) -> BigRational {
        rational(n, 1)
    }

    #[test]
    fn derivative_examples() {
        let f = NormalizedSeries::from_tail(vec![a(2)]);
        assert_eq!(f.derivative(), PowerSeries::new(vec![MPoly::one(), a(2).scale(&q(2))]));
        let f = NormalizedSeries::from_tail(vec![a(2), a(3)]);
        assert_eq!(
            f.z_second_derivative(),
            PowerSeries::new(vec![MPoly::zero(), a(2).scale(&q(2)), a(3).scale(&q(6))])
        );
        let id = NormalizedSeries::<BigRational>::identity(1);
        assert_eq!(id.derivative(), PowerSeries::new(vec![q(1)]));
    }

    #[test]
    fn revert_quadratic() {
        let f = NormalizedSeries::generic(4).map(|p| {
            p.substitute(|k| (k > 2).then(MPoly::zero))
        });
        let g = f.revert();
        assert_eq!(g.tail(), &[-a(2), a(2).pow(2).scale(&q(2)), a(2).pow(3).scale(&q(-5))]);
    }

    #[test]
    fn revert_identity_and_generic_cubic_term() {
        let id = NormalizedSeries::<BigRational>::identity(5);
        assert_eq!(id.revert(), id);
        let g = NormalizedSeries::generic(3).revert();
        assert_eq!(g.coefficient(3), &(&a(2).pow(2).scale(&q(2)) - &a(3)));
    }

    #[test]
    fn compose_examples() {
        let f = NormalizedSeries::from_tail(vec![q(1), q(0)]);
        assert_eq!(f.compose(&f).unwrap(), NormalizedSeries::from_tail(vec![q(2), q(2)]));
        let id = NormalizedSeries::identity(3);
        assert_eq!(id.compose(&f).unwrap(), f);
        let g = f.revert();
        assert_eq!(g.compose(&f).unwrap(), id);
        let err = f.compose(&NormalizedSeries::identity(4)).unwrap_err();
        assert_eq!(err, SeriesError::OrderMismatch { left: 3, right: 4 });
    }

    #[test]
    fn rejects_unnormalized() {
        let s = PowerSeries::new(vec![q(0), q(2), q(1)]);
        assert_eq!(NormalizedSeries::new(s).unwrap_err(), SeriesError::NotNormalized);
    }
}
