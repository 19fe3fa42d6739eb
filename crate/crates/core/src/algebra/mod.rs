//! Exact sparse multivariate polynomials over ℚ in the Taylor variables `a_k`.

mod json;
mod monomial;
mod mpoly;

use thiserror::Error;

pub use json::{PolyJson, TermJson};
pub use monomial::Monomial;
pub use mpoly::MPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable a{0} has no assigned value")]
    MissingVariable(u32),
    #[error("weighted degree of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("malformed polynomial: {0}")]
    Format(String),
}
