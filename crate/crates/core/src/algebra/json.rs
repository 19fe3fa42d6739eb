//! Canonical JSON for polynomials:
//! `{"vars":["a2","a3",...],"terms":[{"coeff":"num/den","exps":[e2,e3,...]}]}`.
//!
//! `vars` lists every subscript from 2 up to the largest variable present;
//! terms follow the canonical [`Monomial`] order and coefficients are always
//! written as reduced `num/den` strings.

use serde::{Deserialize, Serialize};

use super::{AlgebraError, MPoly, Monomial};
use crate::scalar::{format_rational, parse_rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Vec<u32>,
}

fn parse_var(name: &str) -> Result<u32, AlgebraError> {
    name.strip_prefix('a')
        .and_then(|d| d.parse::<u32>().ok())
        .filter(|&k| k >= 2)
        .ok_or_else(|| AlgebraError::Format(format!("bad variable name {name:?}")))
}

impl From<&MPoly> for PolyJson {
    fn from(p: &MPoly) -> Self {
        let top = p.max_var().unwrap_or(1);
        let vars = (2..=top).map(|k| format!("a{k}")).collect();
        let terms = p
            .terms()
            .map(|(m, c)| TermJson {
                coeff: format_rational(c),
                exps: (2..=top).map(|k| m.exponent(k)).collect(),
            })
            .collect();
        PolyJson { vars, terms }
    }
}

impl TryFrom<&PolyJson> for MPoly {
    type Error = AlgebraError;

    fn try_from(j: &PolyJson) -> Result<Self, Self::Error> {
        let vars = j
            .vars
            .iter()
            .map(|v| parse_var(v))
            .collect::<Result<Vec<_>, _>>()?;
        let mut p = MPoly::default();
        for t in &j.terms {
            if t.exps.len() != vars.len() {
                return Err(AlgebraError::Format(format!(
                    "term has {} exponents but {} variables are declared",
                    t.exps.len(),
                    vars.len()
                )));
            }
            let c = parse_rational(&t.coeff).map_err(|e| AlgebraError::Format(e.to_string()))?;
            let m = Monomial::from_pairs(vars.iter().copied().zip(t.exps.iter().copied()));
            p.add_term(m, &c);
        }
        Ok(p)
    }
}

impl MPoly {
    pub fn to_json_value(&self) -> PolyJson {
        PolyJson::from(self)
    }

    /// Compact canonical JSON text.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolyJson::from(self)).expect("polynomial JSON is always serializable")
    }

    pub fn from_json(text: &str) -> Result<MPoly, AlgebraError> {
        let j: PolyJson =
            serde_json::from_str(text).map_err(|e| AlgebraError::Format(e.to_string()))?;
        MPoly::try_from(&j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::scalar::integer;

    #[test]
    fn golden_k3_minus4() {
        let a = MPoly::var;
        let p = &(&(&MPoly::constant(integer(-20)) * &a(2).pow(3))
            + &(&MPoly::constant(integer(20)) * &(&a(2) * &a(3))))
            - &(&MPoly::constant(integer(4)) * &a(4));
        assert_eq!(
            p.to_json(),
            r#"{"vars":["a2","a3","a4"],"terms":[{"coeff":"-20/1","exps":[3,0,0]},{"coeff":"20/1","exps":[1,1,0]},{"coeff":"-4/1","exps":[0,0,1]}]}"#
        );
    }

    #[test]
    fn constants_and_zero() {
        assert_eq!(MPoly::one().to_json(), r#"{"vars":[],"terms":[{"coeff":"1/1","exps":[]}]}"#);
        assert_eq!(MPoly::default().to_json(), r#"{"vars":[],"terms":[]}"#);
    }

    #[test]
    fn parse_accepts_unordered_sparse_input() {
        let text = r#"{"vars":["a5","a2"],"terms":[{"coeff":"2/4","exps":[1,0]},{"coeff":"3","exps":[0,2]},{"coeff":"1/2","exps":[1,0]}]}"#;
        let p = MPoly::from_json(text).unwrap();
        assert_eq!(
            p.to_json(),
            r#"{"vars":["a2","a3","a4","a5"],"terms":[{"coeff":"3/1","exps":[2,0,0,0]},{"coeff":"1/1","exps":[0,0,0,1]}]}"#
        );
    }

    #[test]
    fn parse_errors() {
        for bad in [
            r#"{"vars":["x"],"terms":[]}"#,
            r#"{"vars":["a1"],"terms":[]}"#,
            r#"{"vars":["a2"],"terms":[{"coeff":"1","exps":[1,2]}]}"#,
            r#"{"vars":["a2"],"terms":[{"coeff":"1/0","exps":[1]}]}"#,
            r#"{"vars":["a2"]"#,
        ] {
            assert!(MPoly::from_json(bad).is_err(), "{bad}");
        }
    }
}
