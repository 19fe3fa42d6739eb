//! Verification engines: symbolic audits of reference formula displays
//! against the operator expansion, and seeded numerical falsifiers for the
//! coefficient bounds.

mod caratheodory;
mod falsify;
mod report;
mod solve;
mod symbolic;

use thiserror::Error;

use crate::bounds::BoundError;
use crate::faber::FaberError;

pub use caratheodory::{prefix_admissible, sample_caratheodory, Atom, CaratheodorySample, ADMISSIBILITY_SLACK};
pub use falsify::{
    theorem1_falsifier, theorem2_falsifier, theorem2_until_accepted, trial_rng, Execution, SampleMode,
    Theorem1Report, Theorem1Trial, Theorem2Report, Theorem2Trial, CHAIN_TOL,
};
pub use report::{mandatory_passed, AuditReport, AuditStatus};
pub use solve::{check_finite, numeric_invert_and_margin, operator_residual, solve_f_from_p, MarginReport};
pub use symbolic::{
    audit_a3_display, audit_f_displays, audit_faber_goldens, audit_inverse_coefficients, audit_inverse_displays,
    audit_inverse_series, audit_partition_sums, audit_theorem1_coefficient, audit_theorem1_proof_line,
    default_audit_grid, full_audit,
};

/// Tolerance for round trips through reversion or composition.
pub const ROUND_TRIP_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HarnessError {
    #[error("{0}")]
    InvalidArgument(String),
    #[error("coefficient a{0} is not finite")]
    NonFinite(usize),
    #[error("the equation for a{0} has a zero leading coefficient")]
    Singular(usize),
    #[error(transparent)]
    Faber(#[from] FaberError),
    #[error(transparent)]
    Bound(#[from] BoundError),
}
