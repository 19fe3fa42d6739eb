use std::f64::consts::TAU;
use std::fmt::Write as _;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::caratheodory::{prefix_admissible, uniform_disk};
use super::HarnessError;
use crate::bounds::{bound_a2, bound_a3, bound_fekete, bound_general_an, first_denominator, second_denominator};
use crate::faber::{leading_an_coefficient, ClassParams};
use crate::scalar::rational_to_f64;

/// Absolute tolerance for the double-precision linear chains.
pub const CHAIN_TOL: f64 = 1e-12;

/// Trials per block when running until a number of samples is accepted.
const BLOCK: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    #[default]
    Serial,
    Parallel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SampleMode {
    /// Random data in the admissible body.
    #[default]
    Random,
    /// Cycles through the extremal constructions and the zero sample.
    Boundary,
}

/// Independent stream for one trial: the same `(seed, trial)` always yields
/// the same draws, whatever the scheduling.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn run_trials<T: Send, F>(range: std::ops::Range<u64>, exec: Execution, f: F) -> Vec<T>
where
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    match exec {
        Execution::Serial => range.filter_map(f).collect(),
        Execution::Parallel => range.into_par_iter().filter_map(f).collect(),
    }
}

fn fmt_f64(x: f64) -> String {
    format!("{x:e}")
}

// ---------------------------------------------------------------------------
// single-coefficient chain

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theorem1Trial {
    pub trial: u64,
    pub c: Complex64,
    pub an_abs: f64,
    pub bound: f64,
    pub boundary: bool,
    pub violation: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Theorem1Report {
    pub n: usize,
    pub trials: u64,
    pub violations: u64,
    pub boundary_trials: u64,
    /// Largest `| |a_n| - bound |` among trials with `|c| = 2`.
    pub max_boundary_gap: f64,
    pub bound: f64,
    pub rows: Vec<Theorem1Trial>,
}

impl Theorem1Report {
    pub const CSV_HEADER: &'static str = "trial,c_re,c_im,an_abs,an_bound,an_margin,boundary,violation_flag";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                r.trial,
                fmt_f64(r.c.re),
                fmt_f64(r.c.im),
                fmt_f64(r.an_abs),
                fmt_f64(r.bound),
                fmt_f64(r.bound - r.an_abs),
                u8::from(r.boundary),
                u8::from(r.violation)
            );
        }
        out
    }

    pub fn summary(&self) -> String {
        let max = self.rows.iter().map(|r| r.an_abs).fold(0.0, f64::max);
        format!(
            "trials={} accepted={} violations={} max_a{}={} bound_a{}={}",
            self.trials,
            self.trials,
            self.violations,
            self.n,
            fmt_f64(max),
            self.n,
            fmt_f64(self.bound)
        )
    }
}

/// With `a2 = ... = a_{n-1} = 0` the chain is `a_n = (1-α) c_{n-1} / L_n`.
/// Samples `|c_{n-1}| ≤ 2` (a quarter of the trials on `|c| = 2`) and checks
/// `|a_n| ≤` the general bound, with equality exactly on the circle.
pub fn theorem1_falsifier(
    params: &ClassParams,
    n: usize,
    trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<Theorem1Report, HarnessError> {
    if n < 4 {
        return Err(HarnessError::InvalidArgument(format!("n = {n} is below 4")));
    }
    if trials == 0 {
        return Err(HarnessError::InvalidArgument("trials must be at least 1".into()));
    }
    let leading = rational_to_f64(&leading_an_coefficient(n, params)?);
    let bound = bound_general_an(n, params, false)?.to_f64();
    let oma = 1.0 - rational_to_f64(params.alpha());

    let rows = run_trials(0..trials, exec, |trial| {
        let mut rng = trial_rng(seed, trial);
        let boundary = rng.gen_bool(0.25);
        let c = if boundary {
            Complex64::from_polar(2.0, rng.gen_range(0.0..TAU))
        } else {
            uniform_disk(&mut rng, 2.0)
        };
        let an_abs = (c * oma / leading).norm();
        let violation = if boundary {
            (an_abs - bound).abs() > CHAIN_TOL
        } else {
            an_abs > bound + CHAIN_TOL || (c.norm() < 2.0 * (1.0 - 1e-9) && an_abs >= bound)
        };
        Some(Theorem1Trial {
            trial,
            c,
            an_abs,
            bound,
            boundary,
            violation,
        })
    });

    let violations = rows.iter().filter(|r| r.violation).count() as u64;
    let boundary_rows = rows.iter().filter(|r| r.boundary);
    let max_boundary_gap = boundary_rows.clone().map(|r| (r.an_abs - r.bound).abs()).fold(0.0, f64::max);
    Ok(Theorem1Report {
        n,
        trials,
        violations,
        boundary_trials: boundary_rows.count() as u64,
        max_boundary_gap,
        bound,
        rows,
    })
}

// ---------------------------------------------------------------------------
// two-coefficient chain

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theorem2Trial {
    pub trial: u64,
    pub c1: Complex64,
    pub c2: Complex64,
    pub d2: Complex64,
    pub a2_abs: f64,
    pub a2_bound: f64,
    pub a3_abs: f64,
    pub a3_bound: f64,
    pub fekete_abs: f64,
    pub fekete_bound: f64,
    pub violation: bool,
}

impl Theorem2Trial {
    pub fn a2_margin(&self) -> f64 {
        self.a2_bound - self.a2_abs
    }

    pub fn a3_margin(&self) -> f64 {
        self.a3_bound - self.a3_abs
    }

    pub fn fekete_margin(&self) -> f64 {
        self.fekete_bound - self.fekete_abs
    }

    pub fn to_csv_row(&self) -> String {
        [
            self.trial.to_string(),
            fmt_f64(self.c1.re),
            fmt_f64(self.c1.im),
            fmt_f64(self.c2.re),
            fmt_f64(self.c2.im),
            fmt_f64(self.d2.re),
            fmt_f64(self.d2.im),
            fmt_f64(self.a2_abs),
            fmt_f64(self.a2_bound),
            fmt_f64(self.a2_margin()),
            fmt_f64(self.a3_abs),
            fmt_f64(self.a3_bound),
            fmt_f64(self.a3_margin()),
            fmt_f64(self.fekete_abs),
            fmt_f64(self.fekete_bound),
            fmt_f64(self.fekete_margin()),
            u8::from(self.violation).to_string(),
        ]
        .join(",")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Theorem2Report {
    /// Trials attempted, including rejected ones.
    pub trials: u64,
    pub accepted: u64,
    pub violations: u64,
    pub a2_bound: f64,
    pub a3_bound: f64,
    pub fekete_bound: f64,
    /// Accepted trials, ordered by trial index.
    pub rows: Vec<Theorem2Trial>,
}

impl Theorem2Report {
    pub const CSV_HEADER: &'static str = "trial,c1_re,c1_im,c2_re,c2_im,d2_re,d2_im,a2_abs,a2_bound,a2_margin,\
a3_abs,a3_bound,a3_margin,fekete_abs,fekete_bound,fekete_margin,violation_flag";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.to_csv_row());
            out.push('\n');
        }
        out
    }

    pub fn max_a2(&self) -> f64 {
        self.rows.iter().map(|r| r.a2_abs).fold(0.0, f64::max)
    }

    pub fn summary(&self) -> String {
        format!(
            "trials={} accepted={} violations={} max_a2={} bound_a2={}",
            self.trials,
            self.accepted,
            self.violations,
            fmt_f64(self.max_a2()),
            fmt_f64(self.a2_bound)
        )
    }
}

/// Floating constants of the two-coefficient system.
#[derive(Debug, Clone, Copy)]
struct System {
    one_minus_alpha: f64,
    /// `μ + λ + 2ξδ`
    first: f64,
    /// `μ + 2λ + 6ξδ`
    second: f64,
    mu: f64,
    a2_bound: f64,
    a3_bound: f64,
    fekete_bound: f64,
}

impl System {
    fn new(params: &ClassParams) -> Self {
        Self {
            one_minus_alpha: 1.0 - rational_to_f64(params.alpha()),
            first: rational_to_f64(&first_denominator(params)),
            second: rational_to_f64(&second_denominator(params)),
            mu: rational_to_f64(params.mu()),
            a2_bound: bound_a2(params).bound.to_f64(),
            a3_bound: bound_a3(params).bound.to_f64(),
            fekete_bound: bound_fekete(params).to_f64(),
        }
    }

    /// `(μ+2λ+6ξδ)(μ+1)(1-α)/(μ+λ+2ξδ)²`: `s = c2 + d2` equals this times `c1²`.
    fn coupling(&self) -> f64 {
        self.second * (self.mu + 1.0) * self.one_minus_alpha / (self.first * self.first)
    }

    /// Runs the proof equations forward from `(c1, t)` with `t = c2 - d2`.
    fn evaluate(&self, trial: u64, c1: Complex64, t: Complex64) -> Option<Theorem2Trial> {
        let oma = self.one_minus_alpha;
        let a2 = c1 * oma / self.first;
        let s = a2 * a2 * (self.second * (self.mu + 1.0) / oma);
        let c2 = (s + t) / 2.0;
        let d2 = (s - t) / 2.0;
        if !(prefix_admissible(c1, c2) && prefix_admissible(-c1, d2)) {
            return None;
        }
        let a3 = a2 * a2 + t * (oma / (2.0 * self.second));
        let fekete = a3 - a2 * a2 * ((self.mu + 3.0) / 2.0);
        let (a2_abs, a3_abs, fekete_abs) = (a2.norm(), a3.norm(), fekete.norm());
        let violation = a2_abs > self.a2_bound + CHAIN_TOL
            || a3_abs > self.a3_bound + CHAIN_TOL
            || fekete_abs > self.fekete_bound + CHAIN_TOL;
        Some(Theorem2Trial {
            trial,
            c1,
            c2,
            d2,
            a2_abs,
            a2_bound: self.a2_bound,
            a3_abs,
            a3_bound: self.a3_bound,
            fekete_abs,
            fekete_bound: self.fekete_bound,
            violation,
        })
    }

    /// Draws `c1` in `|c1| ≤ 2` and `c2 = c1²/2 + (2 - |c1|²/2) u` with `u`
    /// in the closed unit disk, which covers the admissible body for `(c1, c2)`.
    fn random_trial(&self, seed: u64, trial: u64) -> Option<Theorem2Trial> {
        let mut rng = trial_rng(seed, trial);
        let c1 = if rng.gen_bool(0.125) {
            Complex64::from_polar(2.0, rng.gen_range(0.0..TAU))
        } else {
            uniform_disk(&mut rng, 2.0)
        };
        let u = if rng.gen_bool(0.125) {
            Complex64::from_polar(1.0, rng.gen_range(0.0..TAU))
        } else {
            uniform_disk(&mut rng, 1.0)
        };
        let c2 = c1 * c1 / 2.0 + u * (2.0 - c1.norm_sqr() / 2.0);
        let s = c1 * c1 * self.coupling();
        self.evaluate(trial, c1, c2 * 2.0 - s)
    }

    /// Trial `i` uses construction `i mod 3`:
    /// 0. `|a2|` extremal: `|c1|² = 4/coupling`, `t = 0`, so `c2 = d2` lies on
    ///    `|·| = 2`. When the coupling is below 1 this needs `|c1| > 2` and
    ///    `c1 = 2e^{iθ}, t = 0` is tried instead (usually rejected).
    /// 1. Fekete extremal: `c1 = 0`, `c2 = -d2 = 2e^{iφ}`.
    /// 2. The zero sample.
    fn boundary_trial(&self, seed: u64, trial: u64) -> Option<Theorem2Trial> {
        let mut rng = trial_rng(seed, trial);
        let phase = rng.gen_range(0.0..TAU);
        let zero = Complex64::new(0.0, 0.0);
        match trial % 3 {
            0 => {
                let k = self.coupling();
                let radius = if k >= 1.0 { 2.0 / k.sqrt() } else { 2.0 };
                self.evaluate(trial, Complex64::from_polar(radius, phase), zero)
            }
            1 => self.evaluate(trial, zero, Complex64::from_polar(4.0, phase)),
            _ => self.evaluate(trial, zero, zero),
        }
    }

    fn trial(&self, seed: u64, trial: u64, mode: SampleMode) -> Option<Theorem2Trial> {
        match mode {
            SampleMode::Random => self.random_trial(seed, trial),
            SampleMode::Boundary => self.boundary_trial(seed, trial),
        }
    }
}

fn theorem2_report(system: &System, trials: u64, rows: Vec<Theorem2Trial>) -> Theorem2Report {
    Theorem2Report {
        trials,
        accepted: rows.len() as u64,
        violations: rows.iter().filter(|r| r.violation).count() as u64,
        a2_bound: system.a2_bound,
        a3_bound: system.a3_bound,
        fekete_bound: system.fekete_bound,
        rows,
    }
}

/// Runs `trials` attempts of the two-coefficient system: `a2` from the first
/// equation, `s = c2 + d2` forced by the combined second equations,
/// `d1 = -c1`, and `a3 = a2² + (1-α) t / (2(μ+2λ+6ξδ))`. Pairs outside the
/// admissible body are discarded; accepted ones are checked against the
/// `|a2|` bound, the `|a3|` bound and the Fekete-type bound.
pub fn theorem2_falsifier(
    params: &ClassParams,
    trials: u64,
    seed: u64,
    mode: SampleMode,
    exec: Execution,
) -> Result<Theorem2Report, HarnessError> {
    if trials == 0 {
        return Err(HarnessError::InvalidArgument("trials must be at least 1".into()));
    }
    let system = System::new(params);
    let rows = run_trials(0..trials, exec, |t| system.trial(seed, t, mode));
    Ok(theorem2_report(&system, trials, rows))
}

/// Like [`theorem2_falsifier`] in random mode, but keeps drawing trials until
/// `accepted` samples pass the admissibility filter.
pub fn theorem2_until_accepted(
    params: &ClassParams,
    accepted: u64,
    seed: u64,
    exec: Execution,
) -> Result<Theorem2Report, HarnessError> {
    if accepted == 0 {
        return Err(HarnessError::InvalidArgument("accepted must be at least 1".into()));
    }
    let system = System::new(params);
    let mut rows = Vec::new();
    let mut next = 0u64;
    while (rows.len() as u64) < accepted {
        if next >= BLOCK * 10_000 {
            return Err(HarnessError::InvalidArgument(format!(
                "only {} of {accepted} samples accepted after {next} trials",
                rows.len()
            )));
        }
        rows.extend(run_trials(next..next + BLOCK, exec, |t| system.random_trial(seed, t)));
        next += BLOCK;
    }
    rows.truncate(accepted as usize);
    let trials = rows.last().map_or(0, |r| r.trial + 1);
    Ok(theorem2_report(&system, trials, rows))
}
