use num_rational::BigRational;
use num_traits::One;

use super::{ClassParams, FaberError};
use crate::scalar::Coefficient;
use crate::series::{NormalizedSeries, PowerSeries, UnitSeries};
use crate::{MPoly, Monomial};

/// The class operator
/// `L[f] = (1-λ)(f/z)^μ + λ f'(z) (f/z)^{μ-1} + ξδ z f''(z)`,
/// truncated at `z^{N-1}` for a series `f` of order `N`.
///
/// The constant term is exactly 1 for every admissible parameter set.
pub fn class_operator<C: Coefficient>(f: &NormalizedSeries<C>, params: &ClassParams) -> UnitSeries<C> {
    let u = f.over_z();
    let log_u = u.log();
    let mu = params.mu();
    let pow_mu = log_u.scale(mu).exp().expect("log has zero constant term");
    let pow_mu_1 = log_u
        .scale(&(mu - BigRational::one()))
        .exp()
        .expect("log has zero constant term");

    let lambda = params.lambda();
    let order = u.order();
    let first = pow_mu.scale(&(BigRational::one() - lambda));
    let second = f
        .derivative()
        .mul(&pow_mu_1)
        .expect("f' and (f/z)^(mu-1) share the order N-1")
        .scale(lambda);
    let third = f.z_second_derivative().scale(&params.xi_delta());

    let mut total = PowerSeries::zero(order).into_coeffs();
    for part in [&first, &second, &third] {
        for (acc, c) in total.iter_mut().zip(part.coeffs()) {
            *acc += c;
        }
    }
    // (1-λ) + λ = 1 exactly; pin it so floating rings keep the unit invariant
    UnitSeries::from_tail(total.split_off(1))
}

/// `L[f]` for the generic series of order `order`; its `z^{n-1}`
/// coefficient is `F_{n-1}(a2, ..., an)`.
pub fn operator_expansion(params: &ClassParams, order: usize) -> UnitSeries<MPoly> {
    class_operator(&NormalizedSeries::generic(order), params)
}

/// `F_{n-1}(a2, ..., an)`, read off the direct operator expansion.
pub fn f_coefficient(n: usize, params: &ClassParams) -> Result<MPoly, FaberError> {
    if n < 2 {
        return Err(FaberError::IndexTooSmall { n, min: 2 });
    }
    Ok(operator_expansion(params, n).coeff(n - 1).clone())
}

/// Coefficient of `a_n` in `F_{n-1}` once `a2 = ... = a_{n-1} = 0`.
pub fn leading_an_coefficient(n: usize, params: &ClassParams) -> Result<BigRational, FaberError> {
    let f = f_coefficient(n, params)?;
    let top = n as u32;
    let reduced = f.substitute(|k| (k < top).then(MPoly::default));
    Ok(reduced.coefficient(&Monomial::var(top)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{integer, rational};

    fn p(l: &str, m: &str, d: &str) -> ClassParams {
        ClassParams::parse(l, m, d, "0").unwrap()
    }

    #[test]
    fn degenerates_to_derivative() {
        let params = p("1", "1", "0");
        let f = NormalizedSeries::generic(2);
        let op = class_operator(&f, &params);
        assert_eq!(op.coeff(1), &MPoly::var(2).scale(&integer(2)));
        let f = NormalizedSeries::generic(6);
        assert_eq!(class_operator(&f, &params).into_series(), f.derivative());
    }

    #[test]
    fn identity_series_maps_to_one() {
        let params = p("3/2", "1/3", "2");
        let f = NormalizedSeries::<BigRational>::identity(6);
        assert_eq!(class_operator(&f, &params), UnitSeries::one(5));
    }

    #[test]
    fn first_two_coefficients() {
        let params = p("2", "1/2", "3");
        let xd = params.xi_delta();
        let (l, m) = (params.lambda().clone(), params.mu().clone());
        let f1 = f_coefficient(2, &params).unwrap();
        assert_eq!(f1, MPoly::var(2).scale(&(&m + &l + &xd * integer(2))));

        // F2 = (μ+2λ)(μ-1)/2 · a2^2 + (μ+2λ+6ξδ) · a3
        let f2 = f_coefficient(3, &params).unwrap();
        let a2sq = (&m + &l * integer(2)) * (&m - integer(1)) * rational(1, 2);
        let a3 = &m + &l * integer(2) + &xd * integer(6);
        assert_eq!(f2, &MPoly::var(2).pow(2).scale(&a2sq) + &MPoly::var(3).scale(&a3));
    }

    #[test]
    fn leading_coefficient_examples() {
        assert_eq!(leading_an_coefficient(4, &p("1", "1", "0")).unwrap(), integer(4));
        assert_eq!(leading_an_coefficient(3, &p("1", "0", "1")).unwrap(), integer(6));
        let params = p("3/2", "2", "1/2");
        let expected = params.mu() + params.lambda() + params.xi_delta() * integer(2);
        assert_eq!(leading_an_coefficient(2, &params).unwrap(), expected);
    }

    #[test]
    fn vanishing_lower_coefficients_leave_leading_term() {
        // F3 with a2 = a3 = 0 is (μ+3λ+12ξδ) a4
        let params = p("1", "1/2", "1");
        let f3 = f_coefficient(4, &params).unwrap();
        let reduced = f3.substitute(|k| (k < 4).then(MPoly::default));
        let c = params.mu() + params.lambda() * integer(3) + params.xi_delta() * integer(12);
        assert_eq!(reduced, MPoly::var(4).scale(&c));
    }
}
