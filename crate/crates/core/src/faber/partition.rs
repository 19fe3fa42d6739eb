use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::FaberError;
use crate::MPoly;

/// Multiplicities `(i1, ..., in)` of a partition of `n` into `m` parts:
/// `Σ i_j = m` and `Σ j·i_j = n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionIndex {
    multiplicities: Vec<u32>,
}

impl PartitionIndex {
    /// `multiplicities()[j - 1]` is `i_j`.
    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn parts(&self) -> u32 {
        self.multiplicities.iter().sum()
    }

    pub fn size(&self) -> u32 {
        self.multiplicities
            .iter()
            .enumerate()
            .map(|(j, &i)| (j as u32 + 1) * i)
            .sum()
    }

    /// `m! / (i1! ... in!)`
    pub fn multinomial(&self) -> BigInt {
        let mut num = factorial(self.parts());
        for &i in &self.multiplicities {
            num /= factorial(i);
        }
        num
    }
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// All partitions of `n` into exactly `m` positive parts.
pub fn partitions(n: u32, m: u32) -> Vec<PartitionIndex> {
    let mut out = Vec::new();
    let mut mult = vec![0u32; n as usize];
    fill(n, m, n, &mut mult, &mut out);
    out
}

// Chooses parts in nonincreasing order, each at most `cap`.
fn fill(rest: u32, parts_left: u32, cap: u32, mult: &mut Vec<u32>, out: &mut Vec<PartitionIndex>) {
    if parts_left == 0 {
        if rest == 0 {
            out.push(PartitionIndex {
                multiplicities: mult.clone(),
            });
        }
        return;
    }
    // the remaining parts_left - 1 parts need at least one unit each
    if rest < parts_left {
        return;
    }
    let hi = cap.min(rest - (parts_left - 1));
    let lo = rest.div_ceil(parts_left);
    for part in (lo..=hi).rev() {
        mult[part as usize - 1] += 1;
        fill(rest - part, parts_left - 1, part, mult, out);
        mult[part as usize - 1] -= 1;
    }
}

/// `Σ m!/(i1!...in!) · x1^{i1} ... xn^{in}` over the partitions of `n` into
/// `m` parts, with `x_j` supplied by `arg(j)`.
pub fn partition_polynomial<F>(n: u32, m: u32, mut arg: F) -> MPoly
where
    F: FnMut(u32) -> MPoly,
{
    let args: Vec<MPoly> = (1..=n).map(&mut arg).collect();
    let mut total = MPoly::default();
    for part in partitions(n, m) {
        let mut t = MPoly::constant(BigRational::from_integer(part.multinomial()));
        for (j, &i) in part.multiplicities().iter().enumerate() {
            if i > 0 {
                t = &t * &args[j].pow(i);
            }
        }
        total += &t;
    }
    total
}

/// `D_n^m(a1, ..., an)` with `a1 = 1`, as a polynomial in `a2, ..., an`.
pub fn bell_d(n: u32, m: u32) -> Result<MPoly, FaberError> {
    if m < 1 || m > n {
        return Err(FaberError::BellIndex { n, m });
    }
    Ok(partition_polynomial(n, m, |j| {
        if j == 1 {
            MPoly::one()
        } else {
            MPoly::var(j)
        }
    }))
}
