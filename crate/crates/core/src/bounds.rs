//! Exact evaluation of the coefficient bounds for the class: the general
//! `|a_n|` estimate under vanishing lower coefficients, the two-branch `|a2|`
//! estimate, the `|a3|` estimate and the Fekete-Szegő-type functional.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::faber::ClassParams;
use crate::scalar::{format_rational, integer, rational_to_f64};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("the general coefficient bound is stated for n >= 4 (got n = {0}); pass the unchecked flag for n = 2, 3")]
    OutsideStatedRange(usize),
    #[error("coefficient index must be at least 2 (got {0})")]
    IndexTooSmall(usize),
    #[error("unknown specialization {0:?}")]
    UnknownSpecialization(String),
}

/// A bound that is either a rational number or the square root of a
/// nonnegative rational. Comparisons are exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BoundValue {
    Rational(BigRational),
    Sqrt(BigRational),
}

impl BoundValue {
    pub fn sqrt(radicand: BigRational) -> Self {
        assert!(!radicand.is_negative(), "negative radicand");
        BoundValue::Sqrt(radicand)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            BoundValue::Rational(_) => "rational",
            BoundValue::Sqrt(_) => "sqrt",
        }
    }

    /// The square of the value and its sign (`Sqrt` values are nonnegative).
    fn signed_square(&self) -> (bool, BigRational) {
        match self {
            BoundValue::Rational(r) => (r.is_negative(), r * r),
            BoundValue::Sqrt(s) => (false, s.clone()),
        }
    }

    /// Exact comparison: signs first, then squares.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        let (neg_a, sq_a) = self.signed_square();
        let (neg_b, sq_b) = other.signed_square();
        match (neg_a, neg_b) {
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (false, false) => sq_a.cmp(&sq_b),
            (true, true) => sq_b.cmp(&sq_a),
        }
    }

    pub fn exact_eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }

    pub fn min_exact(self, other: Self) -> Self {
        if other.cmp_exact(&self) == Ordering::Less {
            other
        } else {
            self
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            BoundValue::Rational(r) => rational_to_f64(r),
            BoundValue::Sqrt(s) => rational_to_f64(s).sqrt(),
        }
    }
}

/// `num/den` for rationals, `sqrt:num/den` for square roots.
impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Rational(r) => write!(f, "{}", format_rational(r)),
            BoundValue::Sqrt(s) => write!(f, "sqrt:{}", format_rational(s)),
        }
    }
}

impl Serialize for BoundValue {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Which coefficient quantity a record bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    An(usize),
    A2,
    A3,
    Fekete,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::An(n) => write!(f, "a{n}"),
            Target::A2 => write!(f, "a2"),
            Target::A3 => write!(f, "a3"),
            Target::Fekete => write!(f, "fekete"),
        }
    }
}

/// The piecewise case that produced a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// Single closed-form expression.
    Formula,
    /// `|a2|` square-root branch (`α` strictly below the threshold).
    Sqrt,
    /// `|a2|` rational branch (`α` strictly above the threshold).
    Rational,
    /// `α` equals the threshold; records whether both branches agree exactly.
    Threshold { branches_equal: bool },
    /// `|a3|`: the first estimate is the smaller one.
    FirstEstimate,
    /// `|a3|`: the second estimate is the smaller one.
    SecondEstimate,
    /// `|a3|`: both estimates coincide.
    BothEstimates,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Branch::Formula => "formula",
            Branch::Sqrt => "sqrt",
            Branch::Rational => "rational",
            Branch::Threshold { branches_equal: true } => "threshold-equal",
            Branch::Threshold { branches_equal: false } => "threshold-unequal",
            Branch::FirstEstimate => "first-estimate",
            Branch::SecondEstimate => "second-estimate",
            Branch::BothEstimates => "both-estimates",
        };
        f.write_str(s)
    }
}

/// One evaluated bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRecord {
    pub params: ClassParams,
    pub target: Target,
    pub bound: BoundValue,
    pub branch: Branch,
    /// For `|a3|`: the value of the reference piecewise display, which can
    /// differ from the `min` of the two derived estimates.
    pub display: Option<BoundValue>,
}

impl BoundRecord {
    pub const CSV_HEADER: &'static str =
        "lambda,mu,delta,alpha,xi,target,branch,bound_kind,bound_value";

    pub fn display_matches(&self) -> Option<bool> {
        self.display.as_ref().map(|d| d.exact_eq(&self.bound))
    }

    pub fn to_csv_row(&self) -> String {
        let p = &self.params;
        format!(
            "{},{},{},{},{},{},{},{},{}",
            format_rational(p.lambda()),
            format_rational(p.mu()),
            format_rational(p.delta()),
            format_rational(p.alpha()),
            format_rational(&p.xi()),
            self.target,
            self.branch,
            self.bound.kind(),
            self.bound
        )
    }
}

fn one_minus_alpha(p: &ClassParams) -> BigRational {
    BigRational::one() - p.alpha()
}

/// `μ + λ + 2ξδ`
pub fn first_denominator(p: &ClassParams) -> BigRational {
    p.mu() + p.lambda() + p.xi_delta() * integer(2)
}

/// `μ + 2λ + 6ξδ`
pub fn second_denominator(p: &ClassParams) -> BigRational {
    p.mu() + p.lambda() * integer(2) + p.xi_delta() * integer(6)
}

/// `μ + (n-1)λ + n(n-1)ξδ`
pub fn general_denominator(n: usize, p: &ClassParams) -> BigRational {
    let n = n as i64;
    p.mu() + p.lambda() * integer(n - 1) + p.xi_delta() * integer(n * (n - 1))
}

/// `|a_n| ≤ 2(1-α) / (μ + (n-1)λ + n(n-1)ξδ)` when `a2 = ... = a_{n-1} = 0`.
///
/// The estimate is stated for `n ≥ 4`; `unchecked` admits `n = 2, 3`.
pub fn bound_general_an(n: usize, params: &ClassParams, unchecked: bool) -> Result<BoundValue, BoundError> {
    if n < 2 {
        return Err(BoundError::IndexTooSmall(n));
    }
    if n < 4 && !unchecked {
        return Err(BoundError::OutsideStatedRange(n));
    }
    let value = one_minus_alpha(params) * integer(2) / general_denominator(n, params);
    Ok(BoundValue::Rational(value))
}

pub fn general_an_record(n: usize, params: &ClassParams, unchecked: bool) -> Result<BoundRecord, BoundError> {
    Ok(BoundRecord {
        params: params.clone(),
        target: Target::An(n),
        bound: bound_general_an(n, params, unchecked)?,
        branch: Branch::Formula,
        display: None,
    })
}

/// `(μ + 2λ − λ²) / ((μ + 2λ + 6ξδ)(μ + 1))`, the `α` at which the `|a2|`
/// estimate switches branch.
pub fn alpha_threshold(params: &ClassParams) -> BigRational {
    let l = params.lambda();
    let num = params.mu() + l * integer(2) - l * l;
    num / (second_denominator(params) * (params.mu() + BigRational::one()))
}

/// `√(4(1−α) / ((μ+2λ+6ξδ)(μ+1)))`
pub fn a2_sqrt_branch(params: &ClassParams) -> BoundValue {
    let radicand = one_minus_alpha(params) * integer(4)
        / (second_denominator(params) * (params.mu() + BigRational::one()));
    BoundValue::sqrt(radicand)
}

/// `2(1−α) / (μ+λ+2ξδ)`
pub fn a2_rational_branch(params: &ClassParams) -> BoundValue {
    BoundValue::Rational(one_minus_alpha(params) * integer(2) / first_denominator(params))
}

pub fn bound_a2(params: &ClassParams) -> BoundRecord {
    let threshold = alpha_threshold(params);
    let sqrt = a2_sqrt_branch(params);
    let rational = a2_rational_branch(params);
    let (bound, branch) = match params.alpha().cmp(&threshold) {
        Ordering::Less => (sqrt, Branch::Sqrt),
        Ordering::Greater => (rational, Branch::Rational),
        Ordering::Equal => {
            let branches_equal = sqrt.exact_eq(&rational);
            (sqrt.min_exact(rational), Branch::Threshold { branches_equal })
        }
    };
    BoundRecord {
        params: params.clone(),
        target: Target::A2,
        bound,
        branch,
        display: None,
    }
}

/// `4(1−α)²/(μ+λ+2ξδ)² + 2(1−α)/(μ+2λ+6ξδ)`
pub fn a3_first_estimate(params: &ClassParams) -> BigRational {
    let oma = one_minus_alpha(params);
    let d1 = first_denominator(params);
    &oma * &oma * integer(4) / (&d1 * &d1) + oma * integer(2) / second_denominator(params)
}

/// `(1−α)[(μ+3) + |1−μ|] / ((μ+2λ+6ξδ)(μ+1))`
pub fn a3_second_estimate(params: &ClassParams) -> BigRational {
    let mu = params.mu();
    let bracket = mu + integer(3) + (BigRational::one() - mu).abs();
    one_minus_alpha(params) * bracket / (second_denominator(params) * (mu + BigRational::one()))
}

/// The reference piecewise `|a3|` display: the `min` form for `μ < 1` and
/// `2(1−α)/(μ+2λ+2ξδ)` for `μ ≥ 1`.
pub fn a3_display(params: &ClassParams) -> BigRational {
    let oma = one_minus_alpha(params);
    let mu = params.mu();
    if *mu < BigRational::one() {
        let alt = &oma * integer(4) / (second_denominator(params) * (mu + BigRational::one()));
        a3_first_estimate(params).min(alt)
    } else {
        oma * integer(2) / (mu + params.lambda() * integer(2) + params.xi_delta() * integer(2))
    }
}

/// `|a3|` bound: the smaller of the two derived estimates, with the reference display attached for comparison.
pub fn bound_a3(params: &ClassParams) -> BoundRecord {
    let first = a3_first_estimate(params);
    let second = a3_second_estimate(params);
    let (bound, branch) = match first.cmp(&second) {
        Ordering::Less => (first, Branch::FirstEstimate),
        Ordering::Greater => (second, Branch::SecondEstimate),
        Ordering::Equal => (second, Branch::BothEstimates),
    };
    BoundRecord {
        params: params.clone(),
        target: Target::A3,
        bound: BoundValue::Rational(bound),
        branch,
        display: Some(BoundValue::Rational(a3_display(params))),
    }
}

/// `|a3 − (μ+3)/2 · a2²| ≤ 2(1−α)/(μ+2λ+6ξδ)`
pub fn bound_fekete(params: &ClassParams) -> BoundValue {
    BoundValue::Rational(one_minus_alpha(params) * integer(2) / second_denominator(params))
}

pub fn fekete_record(params: &ClassParams) -> BoundRecord {
    BoundRecord {
        params: params.clone(),
        target: Target::Fekete,
        bound: bound_fekete(params),
        branch: Branch::Formula,
        display: None,
    }
}

/// Named subclasses obtained by fixing some of `(λ, μ, δ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Specialization {
    /// `δ = 0`
    Caglar,
    /// `δ = 0, μ = 1`
    FrasinAouf,
    /// `δ = 0, μ = 1, λ = 1`
    Srivastava,
    /// `δ = 0, μ = 0, λ = 1`: bi-starlike functions of order `α`
    BiStarlike,
    /// `μ = 1`
    Mu1Family,
}

impl Specialization {
    pub const ALL: [Specialization; 5] = [
        Specialization::Caglar,
        Specialization::FrasinAouf,
        Specialization::Srivastava,
        Specialization::BiStarlike,
        Specialization::Mu1Family,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Specialization::Caglar => "caglar",
            Specialization::FrasinAouf => "frasin-aouf",
            Specialization::Srivastava => "srivastava",
            Specialization::BiStarlike => "bi-starlike",
            Specialization::Mu1Family => "mu1-family",
        }
    }
}

impl std::str::FromStr for Specialization {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Specialization::ALL
            .into_iter()
            .find(|sp| sp.name() == s)
            .ok_or_else(|| BoundError::UnknownSpecialization(s.to_string()))
    }
}

/// Applies the substitutions of a named subclass; `α` (and any parameter the
/// subclass leaves free) is preserved.
pub fn specialize(params: &ClassParams, target: Specialization) -> ClassParams {
    let zero = BigRational::zero;
    let one = BigRational::one;
    let (lambda, mu, delta) = match target {
        Specialization::Caglar => (params.lambda().clone(), params.mu().clone(), zero()),
        Specialization::FrasinAouf => (params.lambda().clone(), one(), zero()),
        Specialization::Srivastava => (one(), one(), zero()),
        Specialization::BiStarlike => (one(), zero(), zero()),
        Specialization::Mu1Family => (params.lambda().clone(), one(), params.delta().clone()),
    };
    ClassParams::new(lambda, mu, delta, params.alpha().clone())
        .expect("specialized parameters stay inside the admissible region")
}
