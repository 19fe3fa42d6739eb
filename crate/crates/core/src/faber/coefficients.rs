use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partition::{factorial, partition_polynomial};
use super::FaberError;
use crate::scalar::{integer, rational};
use crate::series::{NormalizedSeries, UnitSeries};
use crate::MPoly;

/// `(f(z)/z)^p` for the generic series, known through `z^order`.
pub fn faber_k_series(p: i64, order: usize) -> UnitSeries<MPoly> {
    NormalizedSeries::generic(order + 1).over_z().pow(&integer(p))
}

/// `K_n^p`: the `z^n` coefficient of `(f(z)/z)^p` for the generic normalized
/// series, for any integer `p`. `order` is the truncation order in force and
/// must be at least `n`.
pub fn faber_k(n: usize, p: i64, order: usize) -> Result<MPoly, FaberError> {
    if n > order {
        return Err(FaberError::OrderExceeded { n, order });
    }
    // the z^n coefficient only involves a2 ..= a_{n+1}
    Ok(faber_k_series(p, n).coeff(n).clone())
}

/// `K_n^p` from the partition sum
/// `Σ_{m=1}^{n} C(p, m) · D_n^m(a2, a3, ..., a_{n+1})`.
///
/// The arguments of `D_n^m` are the coefficients of `f(z)/z` after its
/// constant term, so the `j`-th argument is `a_{j+1}`. For `p ≥ 0` the terms
/// with `m > p` vanish with their binomial prefactor; negative `p` uses the
/// generalized binomial coefficient.
pub fn faber_k_partition_sum(n: u32, p: i64) -> MPoly {
    if n == 0 {
        return MPoly::one();
    }
    let mut total = MPoly::default();
    for m in 1..=n {
        let binom = generalized_binomial(p, m);
        if binom.is_zero() {
            continue;
        }
        let d = partition_polynomial(n, m, |j| MPoly::var(j + 1));
        total += &d.scale(&binom);
    }
    total
}

/// `A_n = K_{n-1}^{-n} / n`, the `w^n` coefficient of the inverse map.
pub fn inverse_coeff_a(n: usize) -> Result<MPoly, FaberError> {
    if n < 2 {
        return Err(FaberError::IndexTooSmall { n, min: 2 });
    }
    let k = faber_k(n - 1, -(n as i64), n - 1)?;
    Ok(k.scale(&rational(1, n as i64)))
}

/// Binomial coefficient `C(p, m)` for any integer `p`.
pub fn generalized_binomial(p: i64, m: u32) -> BigRational {
    let mut num = BigInt::one();
    for i in 0..m as i64 {
        num *= BigInt::from(p - i);
    }
    if num.is_zero() {
        return BigRational::zero();
    }
    BigRational::new(num, factorial(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(k: u32) -> MPoly {
        MPoly::var(k)
    }

    fn c(n: i64) -> BigRational {
        integer(n)
    }

    #[test]
    fn low_order_inverse_faber_coefficients() {
        assert_eq!(faber_k(1, -2, 10).unwrap(), a(2).scale(&c(-2)));
        assert_eq!(
            faber_k(2, -3, 10).unwrap(),
            &a(2).pow(2).scale(&c(6)) - &a(3).scale(&c(3))
        );
        let k3 = &(&a(2).pow(3).scale(&c(-20)) + &(&a(2) * &a(3)).scale(&c(20))) - &a(4).scale(&c(4));
        assert_eq!(faber_k(3, -4, 10).unwrap(), k3);
    }

    #[test]
    fn trivial_powers() {
        for n in 1..=5 {
            assert!(faber_k(n, 0, 5).unwrap().is_zero());
        }
        for p in -3..=5 {
            assert_eq!(faber_k(0, p, 5).unwrap(), MPoly::one());
        }
        assert_eq!(faber_k(1, 3, 3).unwrap(), a(2).scale(&c(3)));
    }

    #[test]
    fn order_is_enforced() {
        assert_eq!(
            faber_k(4, 2, 3).unwrap_err(),
            FaberError::OrderExceeded { n: 4, order: 3 }
        );
    }

    #[test]
    fn inverse_coefficients() {
        assert_eq!(inverse_coeff_a(2).unwrap(), -a(2));
        assert_eq!(inverse_coeff_a(3).unwrap(), &a(2).pow(2).scale(&c(2)) - &a(3));
        let a4 = -(&(&a(2).pow(3).scale(&c(5)) - &(&a(2) * &a(3)).scale(&c(5))) + &a(4));
        assert_eq!(inverse_coeff_a(4).unwrap(), a4);
        assert!(inverse_coeff_a(1).is_err());
    }

    #[test]
    fn partition_sum_small_cases() {
        assert_eq!(faber_k_partition_sum(1, 2), a(2).scale(&c(2)));
        // (1 + a2 z + a3 z^2)^2 at z^2: 2 a3 + a2^2
        assert_eq!(faber_k_partition_sum(2, 2), &a(3).scale(&c(2)) + &a(2).pow(2));
        assert_eq!(faber_k_partition_sum(0, 4), MPoly::one());
        assert_eq!(faber_k_partition_sum(2, -3), faber_k(2, -3, 2).unwrap());
    }

    #[test]
    fn binomials() {
        assert_eq!(generalized_binomial(5, 2), c(10));
        assert_eq!(generalized_binomial(2, 3), c(0));
        assert_eq!(generalized_binomial(-2, 2), c(3));
    }
}
