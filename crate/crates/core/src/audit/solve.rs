use std::f64::consts::TAU;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::HarnessError;
use crate::bounds::general_denominator;
use crate::faber::{class_operator, ClassParams};
use crate::scalar::{rational_to_f64, Coefficient};
use crate::series::NormalizedSeries;

/// The normalized series with `L[f] = 1 + (1-α) Σ c_n z^n` through `z^order`.
///
/// `c` holds `c_1 ..= c_{order-1}`. Each `z^{n-1}` equation is linear in
/// `a_n` with coefficient `μ + (n-1)λ + n(n-1)ξδ`, so the coefficients are
/// found one at a time.
pub fn solve_f_from_p<C: Coefficient>(
    params: &ClassParams,
    c: &[C],
    order: usize,
) -> Result<NormalizedSeries<C>, HarnessError> {
    if order < 1 {
        return Err(HarnessError::InvalidArgument("order must be at least 1".into()));
    }
    if c.len() + 1 < order {
        return Err(HarnessError::InvalidArgument(format!(
            "order {order} needs {} Caratheodory coefficients, got {}",
            order - 1,
            c.len()
        )));
    }
    let one_minus_alpha = BigRational::one() - params.alpha();
    let mut tail: Vec<C> = Vec::with_capacity(order.saturating_sub(1));
    for n in 2..=order {
        let leading = general_denominator(n, params);
        if leading.is_zero() {
            return Err(HarnessError::Singular(n));
        }
        let mut trial = tail.clone();
        trial.push(C::zero());
        let op = class_operator(&NormalizedSeries::from_tail(trial), params);
        let rest = op.coeff(n - 1).clone();
        let rhs = c[n - 2].scale(&one_minus_alpha) - rest;
        tail.push(rhs.scale(&(BigRational::one() / leading)));
    }
    Ok(NormalizedSeries::from_tail(tail))
}

/// `max_n |[z^n] L[f] - (1-α) c_n|` over the stored coefficients.
pub fn operator_residual(f: &NormalizedSeries<Complex64>, params: &ClassParams, c: &[Complex64]) -> f64 {
    let op = class_operator(f, params);
    let oma = 1.0 - rational_to_f64(params.alpha());
    (1..=op.order())
        .map(|n| (op.coeff(n) - c[n - 1] * oma).norm())
        .fold(0.0, f64::max)
}

/// Diagnostic for the inverse map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarginReport {
    /// `min Re L[g](w) - α` over the sampled circle.
    pub min_margin: f64,
    /// Angle at which the minimum occurs.
    pub argmin_angle: f64,
    pub radius: f64,
    pub grid: usize,
}

/// Reverts `f`, evaluates the truncated `L[g]` on `grid` equally spaced
/// points of `|w| = radius`, and reports the smallest `Re L[g] - α`.
///
/// The margin is a diagnostic of the truncated series, not a membership proof.
pub fn numeric_invert_and_margin(
    f: &NormalizedSeries<Complex64>,
    params: &ClassParams,
    radius: f64,
    grid: usize,
) -> Result<MarginReport, HarnessError> {
    if !(radius > 0.0 && radius < 1.0) {
        return Err(HarnessError::InvalidArgument(format!("radius {radius} is outside (0, 1)")));
    }
    if grid == 0 {
        return Err(HarnessError::InvalidArgument("grid must be at least 1".into()));
    }
    check_finite(f)?;
    let g = f.revert();
    let op = class_operator(&g, params);
    let alpha = rational_to_f64(params.alpha());
    let mut best = (f64::INFINITY, 0.0);
    for k in 0..grid {
        let angle = TAU * k as f64 / grid as f64;
        let w = Complex64::from_polar(radius, angle);
        let margin = op.as_series().evaluate(&w).re - alpha;
        if margin < best.0 {
            best = (margin, angle);
        }
    }
    Ok(MarginReport {
        min_margin: best.0,
        argmin_angle: best.1,
        radius,
        grid,
    })
}

pub fn check_finite(f: &NormalizedSeries<Complex64>) -> Result<(), HarnessError> {
    match f.tail().iter().position(|c| !(c.re.is_finite() && c.im.is_finite())) {
        Some(i) => Err(HarnessError::NonFinite(i + 2)),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    fn params(l: &str, m: &str, d: &str, a: &str) -> ClassParams {
        ClassParams::parse(l, m, d, a).unwrap()
    }

    #[test]
    fn derivative_case_is_exact() {
        let p = params("1", "1", "0", "0");
        let c = vec![rational(2, 1); 9];
        let f = solve_f_from_p(&p, &c, 10).unwrap();
        for n in 2..=10 {
            assert_eq!(f.coefficient(n), &rational(2, n as i64));
        }
    }

    #[test]
    fn zero_data_gives_identity() {
        let p = params("3/2", "1/2", "1", "1/4");
        let c = vec![Complex64::zero(); 7];
        let f = solve_f_from_p(&p, &c, 8).unwrap();
        assert!(f.tail().iter().all(|a| a.norm() == 0.0));
    }

    #[test]
    fn residual_is_small() {
        let p = params("2", "1/3", "1/2", "1/2");
        let c: Vec<Complex64> = (1..16).map(|k| Complex64::from_polar(2.0, k as f64)).collect();
        let f = solve_f_from_p(&p, &c, 16).unwrap();
        assert!(operator_residual(&f, &p, &c) <= 1e-12);
        assert!(solve_f_from_p(&p, &c[..3], 16).is_err());
    }

    #[test]
    fn margin_examples() {
        let p = params("1", "1/2", "1", "1/4");
        let id = NormalizedSeries::<Complex64>::identity(8);
        let m = numeric_invert_and_margin(&id, &p, 0.5, 16).unwrap();
        assert!((m.min_margin - 0.75).abs() < 1e-15);
        assert!(numeric_invert_and_margin(&id, &p, 1.0, 16).is_err());
        assert!(numeric_invert_and_margin(&id, &p, 0.0, 16).is_err());

        let c = vec![Complex64::new(2.0, 0.0); 9];
        let f = solve_f_from_p(&p, &c, 10).unwrap();
        let m = numeric_invert_and_margin(&f, &p, 0.1, 32).unwrap();
        assert!(m.min_margin.is_finite());
        let tiny = numeric_invert_and_margin(&f, &p, 1e-9, 1).unwrap();
        assert!((tiny.min_margin - 0.75).abs() < 1e-6);
    }
}
