use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Monomial};
use crate::scalar::Coefficient;

/// Sparse polynomial over ℚ in the Taylor variables `a2, a3, ...`.
///
/// Terms live in a `BTreeMap` keyed by [`Monomial`], whose ordering is the
/// canonical serialization order, and no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MPoly {
    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::one())
    }

    /// The variable `a_k`.
    pub fn var(k: u32) -> Self {
        Self::term(BigRational::one(), Monomial::var(k))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&Monomial::one())
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn max_var(&self) -> Option<u32> {
        self.terms.keys().filter_map(Monomial::max_var).max()
    }

    pub fn variables(&self) -> Vec<u32> {
        let mut vs: Vec<u32> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(k, _)| k))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// `(min, max)` of `Σ (k-1)·e_k` over the terms.
    pub fn weighted_degree(&self) -> Result<(u32, u32), AlgebraError> {
        let mut ws = self.terms.keys().map(Monomial::weighted_degree);
        let first = ws.next().ok_or(AlgebraError::ZeroPolynomial)?;
        Ok(ws.fold((first, first), |(lo, hi), w| (lo.min(w), hi.max(w))))
    }

    pub fn is_weighted_homogeneous(&self, weight: u32) -> bool {
        self.terms.keys().all(|m| m.weighted_degree() == weight)
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates the polynomial in any coefficient ring. `value(k)` supplies
    /// `a_k`; a `None` for a variable that occurs is an error.
    pub fn eval_with<S, F>(&self, mut value: F) -> Result<S, AlgebraError>
    where
        S: Coefficient,
        F: FnMut(u32) -> Option<S>,
    {
        let mut total = S::zero();
        for (m, c) in &self.terms {
            let mut t = S::from_rational(c);
            for &(k, e) in m.factors() {
                let v = value(k).ok_or(AlgebraError::MissingVariable(k))?;
                for _ in 0..e {
                    t = t.mul_ref(&v);
                }
            }
            total += &t;
        }
        Ok(total)
    }

    /// Evaluates with an explicit assignment map `k -> a_k`.
    pub fn eval<S: Coefficient>(&self, assignment: &BTreeMap<u32, S>) -> Result<S, AlgebraError> {
        self.eval_with(|k| assignment.get(&k).cloned())
    }

    /// Substitutes polynomials for some variables; unmapped variables stay.
    pub fn substitute<F>(&self, mut image: F) -> MPoly
    where
        F: FnMut(u32) -> Option<MPoly>,
    {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(c.clone());
            let mut kept = Vec::new();
            for &(k, e) in m.factors() {
                match image(k) {
                    Some(p) => t = &t * &p.pow(e),
                    None => kept.push((k, e)),
                }
            }
            let kept = MPoly::term(BigRational::one(), Monomial::from_pairs(kept));
            out += &(&t * &kept);
        }
        out
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        Self::constant(BigRational::one())
    }
}

impl From<BigRational> for MPoly {
    fn from(c: BigRational) -> Self {
        MPoly::constant(c)
    }
}

impl<'a> AddAssign<&'a MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &'a MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl<'a> SubAssign<&'a MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &'a MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &-c);
        }
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += &rhs;
        self
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: MPoly) -> MPoly {
        self -= &rhs;
        self
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Coefficient for MPoly {
    fn from_rational(r: &BigRational) -> Self {
        MPoly::constant(r.clone())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn scale(&self, r: &BigRational) -> Self {
        MPoly::scale(self, r)
    }

    fn add_product(&mut self, a: &Self, b: &Self) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(mb), &(ca * cb));
            }
        }
    }
}

/// Human-readable form, e.g. `-20*a2^3 + 20*a2*a3 - 4*a4`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag_text = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            if m.is_one() {
                write!(f, "{mag_text}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag_text}*{m}")?;
            }
        }
        Ok(())
    }
}
