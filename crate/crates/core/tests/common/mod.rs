#![allow(dead_code)]

use std::collections::BTreeMap;

use faber::faber::ClassParams;
use faber::scalar::rational;
use faber::{MPoly, Monomial, Rational};
use num_complex::Complex64;
use proptest::prelude::*;

pub fn q() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rational(n, d))
}

pub fn nonneg_q() -> impl Strategy<Value = Rational> {
    (0i64..=8, 1i64..=4).prop_map(|(n, d)| rational(n, d))
}

/// Sparse polynomial in a2, a3, a4 with small exponents.
pub fn mpoly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..2), q()), 0..5).prop_map(|terms| {
        MPoly::from_terms(
            terms
                .into_iter()
                .map(|((e2, e3, e4), c)| (Monomial::from_pairs([(2, e2), (3, e3), (4, e4)]), c)),
        )
    })
}

pub fn assignment() -> impl Strategy<Value = BTreeMap<u32, Rational>> {
    (q(), q(), q()).prop_map(|(x, y, z)| BTreeMap::from([(2, x), (3, y), (4, z)]))
}

pub fn class_params() -> impl Strategy<Value = ClassParams> {
    (nonneg_q(), nonneg_q(), nonneg_q(), 0i64..4).prop_map(|(shift, mu, delta, a)| {
        ClassParams::new(shift + rational(1, 1), mu, delta, rational(a, 4)).unwrap()
    })
}

/// Random complex coefficients of moderate size for numeric series.
pub fn complex_tail(len: usize, scale: f64) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), len)
        .prop_map(move |v| v.into_iter().map(|(re, im)| Complex64::new(re * scale, im * scale)).collect())
}

pub fn max_gap(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// `max(1, max |c|)`, the scale against which floating round-trip errors are measured.
pub fn magnitude(c: &[Complex64]) -> f64 {
    c.iter().map(|x| x.norm()).fold(1.0, f64::max)
}
