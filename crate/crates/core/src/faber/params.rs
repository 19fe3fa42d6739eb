use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::FaberError;
use crate::scalar::{format_rational, integer, parse_rational};

/// Parameters `(λ, μ, δ, α)` of the class, with `λ ≥ 1`, `μ ≥ 0`, `δ ≥ 0`
/// and `0 ≤ α < 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassParams {
    lambda: BigRational,
    mu: BigRational,
    delta: BigRational,
    alpha: BigRational,
}

impl ClassParams {
    pub fn new(
        lambda: BigRational,
        mu: BigRational,
        delta: BigRational,
        alpha: BigRational,
    ) -> Result<Self, FaberError> {
        let bad = |what: String| Err(FaberError::InvalidParams(what));
        if lambda < BigRational::one() {
            return bad(format!("lambda = {} must be >= 1", format_rational(&lambda)));
        }
        if mu < BigRational::zero() {
            return bad(format!("mu = {} must be >= 0", format_rational(&mu)));
        }
        if delta < BigRational::zero() {
            return bad(format!("delta = {} must be >= 0", format_rational(&delta)));
        }
        if alpha < BigRational::zero() || alpha >= BigRational::one() {
            return bad(format!("alpha = {} must lie in [0, 1)", format_rational(&alpha)));
        }
        Ok(Self {
            lambda,
            mu,
            delta,
            alpha,
        })
    }

    /// Parses the four parameters from `num/den`, integer or decimal strings.
    pub fn parse(lambda: &str, mu: &str, delta: &str, alpha: &str) -> Result<Self, FaberError> {
        let p = |s: &str| parse_rational(s).map_err(|e| FaberError::InvalidParams(e.to_string()));
        Self::new(p(lambda)?, p(mu)?, p(delta)?, p(alpha)?)
    }

    pub fn lambda(&self) -> &BigRational {
        &self.lambda
    }

    pub fn mu(&self) -> &BigRational {
        &self.mu
    }

    pub fn delta(&self) -> &BigRational {
        &self.delta
    }

    pub fn alpha(&self) -> &BigRational {
        &self.alpha
    }

    /// `ξ = (2λ + μ) / (2λ + 1)`
    pub fn xi(&self) -> BigRational {
        let two_lambda = &self.lambda * integer(2);
        (&two_lambda + &self.mu) / (two_lambda + BigRational::one())
    }

    /// `ξ·δ`, the weight of the `z f''` term.
    pub fn xi_delta(&self) -> BigRational {
        self.xi() * &self.delta
    }

    pub fn with_lambda(&self, lambda: BigRational) -> Result<Self, FaberError> {
        Self::new(lambda, self.mu.clone(), self.delta.clone(), self.alpha.clone())
    }

    pub fn with_mu(&self, mu: BigRational) -> Result<Self, FaberError> {
        Self::new(self.lambda.clone(), mu, self.delta.clone(), self.alpha.clone())
    }

    pub fn with_delta(&self, delta: BigRational) -> Result<Self, FaberError> {
        Self::new(self.lambda.clone(), self.mu.clone(), delta, self.alpha.clone())
    }

    pub fn with_alpha(&self, alpha: BigRational) -> Result<Self, FaberError> {
        Self::new(self.lambda.clone(), self.mu.clone(), self.delta.clone(), alpha)
    }
}

impl fmt::Display for ClassParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lambda={} mu={} delta={} alpha={}",
            format_rational(&self.lambda),
            format_rational(&self.mu),
            format_rational(&self.delta),
            format_rational(&self.alpha)
        )
    }
}

impl Serialize for ClassParams {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("ClassParams", 5)?;
        s.serialize_field("lambda", &format_rational(&self.lambda))?;
        s.serialize_field("mu", &format_rational(&self.mu))?;
        s.serialize_field("delta", &format_rational(&self.delta))?;
        s.serialize_field("alpha", &format_rational(&self.alpha))?;
        s.serialize_field("xi", &format_rational(&self.xi()))?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    fn params(l: (i64, i64), m: (i64, i64)) -> ClassParams {
        ClassParams::new(rational(l.0, l.1), rational(m.0, m.1), integer(0), integer(0)).unwrap()
    }

    #[test]
    fn xi_values() {
        assert_eq!(params((1, 1), (1, 1)).xi(), integer(1));
        assert_eq!(params((1, 1), (0, 1)).xi(), rational(2, 3));
        assert_eq!(params((3, 2), (1, 2)).xi(), rational(7, 8));
    }

    #[test]
    fn validation() {
        assert!(ClassParams::parse("1/2", "0", "0", "0").is_err());
        assert!(ClassParams::parse("1", "-1", "0", "0").is_err());
        assert!(ClassParams::parse("1", "0", "-1/3", "0").is_err());
        assert!(ClassParams::parse("1", "0", "0", "1").is_err());
        assert!(ClassParams::parse("1", "0", "0", "-1/10").is_err());
        assert!(ClassParams::parse("1", "0", "0", "x").is_err());
        let p = ClassParams::parse("3/2", "0.5", "2", "0.25").unwrap();
        assert_eq!(p.to_string(), "lambda=3/2 mu=1/2 delta=2/1 alpha=1/4");
    }
}
