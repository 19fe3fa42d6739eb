use std::cmp::Ordering;
use std::fmt;

/// A product `a_{k1}^{e1} a_{k2}^{e2} ...` of Taylor-coefficient variables.
///
/// Stored as `(k, e)` pairs sorted by variable index with every `e > 0`, so
/// absent variables carry exponent zero and equal monomials have equal storage.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// The single variable `a_k`.
    pub fn var(k: u32) -> Self {
        Self::var_pow(k, 1)
    }

    pub fn var_pow(k: u32, exp: u32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        Self {
            factors: vec![(k, exp)],
        }
    }

    /// Builds a monomial from arbitrary `(k, e)` pairs; repeated variables are
    /// merged and zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut factors: Vec<(u32, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_unstable();
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(factors.len());
        for (k, e) in factors {
            match merged.last_mut() {
                Some((lk, le)) if *lk == k => *le += e,
                _ => merged.push((k, e)),
            }
        }
        Self { factors: merged }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    pub fn exponent(&self, k: u32) -> u32 {
        self.factors
            .binary_search_by_key(&k, |&(v, _)| v)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    /// `Σ (k-1)·e_k`: the grading under which the z^n coefficient of a
    /// normalized series' inverse has weight n-1.
    pub fn weighted_degree(&self) -> u32 {
        self.factors.iter().map(|&(k, e)| (k - 1) * e).sum()
    }

    pub fn max_var(&self) -> Option<u32> {
        self.factors.last().map(|&(k, _)| k)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }

    /// Removes variable `k`, returning its exponent and the remaining cofactor.
    pub fn split_off(&self, k: u32) -> (u32, Monomial) {
        let exp = self.exponent(k);
        let rest = self.factors.iter().copied().filter(|&(v, _)| v != k).collect();
        (exp, Monomial { factors: rest })
    }
}

/// Canonical term order: higher total degree first, then lexicographic with
/// `a2 > a3 > ...` (a larger exponent on a lower-indexed variable sorts first).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .total_degree()
            .cmp(&self.total_degree())
            .then_with(|| {
                let (a, b) = (&self.factors, &other.factors);
                for (x, y) in a.iter().zip(b.iter()) {
                    if x.0 != y.0 {
                        // the monomial carrying the lower variable index has the
                        // larger exponent there
                        return x.0.cmp(&y.0);
                    }
                    if x.1 != y.1 {
                        return y.1.cmp(&x.1);
                    }
                }
                b.len().cmp(&a.len())
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, &(k, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "a{k}")?;
            } else {
                write!(f, "a{k}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_follow_subscript_minus_one() {
        assert_eq!(Monomial::var(2).weighted_degree(), 1);
        assert_eq!(Monomial::from_pairs([(2, 1), (3, 1)]).weighted_degree(), 3);
        assert_eq!(Monomial::var_pow(2, 3).weighted_degree(), 3);
        assert_eq!(Monomial::var(4).weighted_degree(), 3);
    }

    #[test]
    fn from_pairs_merges_and_drops_zero() {
        let m = Monomial::from_pairs([(3, 1), (2, 0), (3, 2), (5, 1)]);
        assert_eq!(m.factors(), &[(3, 3), (5, 1)]);
    }

    #[test]
    fn canonical_order_matches_display_convention() {
        // -20 a2^3 + 20 a2 a3 - 4 a4
        let mut ms = [Monomial::var(4),
            Monomial::from_pairs([(2, 1), (3, 1)]),
            Monomial::var_pow(2, 3)];
        ms.sort();
        let shown: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["a2^3", "a2*a3", "a4"]);

        let mut ms = [Monomial::var_pow(3, 2),
            Monomial::from_pairs([(2, 1), (4, 1)]),
            Monomial::one(),
            Monomial::var_pow(2, 2)];
        ms.sort();
        let shown: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["a2^2", "a2*a4", "a3^2", "1"]);
    }
}
