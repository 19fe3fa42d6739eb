//! Faber-polynomial coefficient calculus: partition polynomials `D_n^m`,
//! coefficients `K_n^p` of powers of `f(z)/z`, inverse-map coefficients `A_n`,
//! and the class operator with its coefficient polynomials `F_{n-1}`.

mod coefficients;
mod operator;
mod params;
mod partition;

use thiserror::Error;

pub use coefficients::{
    faber_k, faber_k_partition_sum, faber_k_series, generalized_binomial, inverse_coeff_a,
};
pub use operator::{
    class_operator, f_coefficient, leading_an_coefficient, operator_expansion,
};
pub use params::ClassParams;
pub use partition::{bell_d, partition_polynomial, partitions, PartitionIndex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FaberError {
    #[error("invalid class parameters: {0}")]
    InvalidParams(String),
    #[error("D_n^m needs 1 <= m <= n (got n = {n}, m = {m})")]
    BellIndex { n: u32, m: u32 },
    #[error("coefficient index {n} exceeds truncation order {order}")]
    OrderExceeded { n: usize, order: usize },
    #[error("index {n} is below the minimum {min}")]
    IndexTooSmall { n: usize, min: usize },
}
