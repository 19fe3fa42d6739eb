use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::HarnessError;

/// Slack allowed on the unit-disk and weight-sum checks.
const ATOM_TOL: f64 = 1e-12;

/// Slack on the two-coefficient body, so that boundary constructions which
/// round a few ulps outside are still accepted.
pub const ADMISSIBILITY_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub weight: f64,
    pub point: Complex64,
}

/// A finite convex combination `Σ w_k (1 + x_k z)/(1 - x_k z)` of Möbius
/// kernels: a function with positive real part and `p(0) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CaratheodorySample {
    atoms: Vec<Atom>,
}

impl CaratheodorySample {
    pub fn new(atoms: Vec<Atom>) -> Result<Self, HarnessError> {
        if atoms.is_empty() {
            return Err(HarnessError::InvalidArgument("at least one atom is required".into()));
        }
        let mut total = 0.0;
        for atom in &atoms {
            if !atom.weight.is_finite() || atom.weight < 0.0 {
                return Err(HarnessError::InvalidArgument(format!("bad atom weight {}", atom.weight)));
            }
            let r = atom.point.norm();
            if r.is_nan() || r > 1.0 + ATOM_TOL {
                return Err(HarnessError::InvalidArgument(format!("atom {} lies outside the disk", atom.point)));
            }
            total += atom.weight;
        }
        if (total - 1.0).abs() > ATOM_TOL {
            return Err(HarnessError::InvalidArgument(format!("weights sum to {total}, not 1")));
        }
        Ok(Self { atoms })
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// `c_n = 2 Σ w_k x_k^n`; `c_0` is taken as 1.
    pub fn coefficient(&self, n: u32) -> Complex64 {
        if n == 0 {
            return Complex64::new(1.0, 0.0);
        }
        self.atoms
            .iter()
            .map(|a| a.point.powu(n) * a.weight)
            .sum::<Complex64>()
            * 2.0
    }

    /// `c_1 ..= c_order`
    pub fn coefficients(&self, order: usize) -> Vec<Complex64> {
        (1..=order as u32).map(|n| self.coefficient(n)).collect()
    }

    /// `p(z)` at a point of the open disk.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        self.atoms
            .iter()
            .map(|a| (one + a.point * z) / (one - a.point * z) * a.weight)
            .sum()
    }
}

/// Deterministic sample for `seed`: between 1 and `max_atoms` atoms with
/// exponential weights; about half of the atoms lie on the unit circle.
pub fn sample_caratheodory(seed: u64, max_atoms: usize) -> Result<CaratheodorySample, HarnessError> {
    if max_atoms == 0 {
        return Err(HarnessError::InvalidArgument("max_atoms must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(1..=max_atoms);
    let raw: Vec<f64> = (0..count).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
    let total: f64 = raw.iter().sum();
    let atoms = raw
        .into_iter()
        .map(|w| {
            let point = if rng.gen_bool(0.5) {
                Complex64::from_polar(1.0, rng.gen_range(0.0..TAU))
            } else {
                uniform_disk(&mut rng, 1.0)
            };
            Atom {
                weight: w / total,
                point,
            }
        })
        .collect();
    CaratheodorySample::new(atoms)
}

/// `|c1| ≤ 2` and `|c2 - c1²/2| ≤ 2 - |c1|²/2`: the pairs that occur as the
/// first two coefficients of some function with positive real part.
pub fn prefix_admissible(c1: Complex64, c2: Complex64) -> bool {
    let r = 2.0 - c1.norm_sqr() / 2.0;
    c1.norm() <= 2.0 + ADMISSIBILITY_SLACK && (c2 - c1 * c1 / 2.0).norm() <= r + ADMISSIBILITY_SLACK
}

/// Uniform point of the closed disk `|z| ≤ radius`.
pub(crate) fn uniform_disk<R: Rng>(rng: &mut R, radius: f64) -> Complex64 {
    let r = radius * rng.gen::<f64>().sqrt();
    Complex64::from_polar(r, rng.gen_range(0.0..TAU))
}
