mod common;

use common::{complex_tail, magnitude, max_gap, q};
use faber::scalar::rational;
use faber::series::{exp_unit, NormalizedSeries, PowerSeries, UnitSeries};
use faber::{NumericSeries, RationalSeries, SymbolicSeries};
use proptest::prelude::*;

fn rational_series(max_order: usize) -> impl Strategy<Value = RationalSeries> {
    (2..=max_order).prop_flat_map(|n| prop::collection::vec(q(), n - 1).prop_map(NormalizedSeries::from_tail))
}

fn numeric_series(order: usize, scale: f64) -> impl Strategy<Value = NumericSeries> {
    complex_tail(order - 1, scale).prop_map(NormalizedSeries::from_tail)
}

#[test]
fn symbolic_round_trips() {
    for order in [2, 5, 8] {
        let f = SymbolicSeries::generic(order);
        let g = f.revert();
        assert_eq!(g.revert(), f);
        assert_eq!(g.compose(&f).unwrap(), SymbolicSeries::identity(order));
        assert_eq!(f.compose(&g).unwrap(), SymbolicSeries::identity(order));
        let u = f.over_z();
        assert_eq!(exp_unit(&u.log()).unwrap(), u);
    }
}

#[test]
fn orders_must_agree() {
    let f = SymbolicSeries::generic(4);
    assert!(f.compose(&SymbolicSeries::generic(5)).is_err());
    assert!(PowerSeries::<faber::Rational>::one(3).mul(&PowerSeries::one(4)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reversion_is_an_involution(f in rational_series(10)) {
        let g = f.revert();
        prop_assert_eq!(g.revert(), f.clone());
        let id = NormalizedSeries::identity(f.order());
        prop_assert_eq!(g.compose(&f).unwrap(), id.clone());
        prop_assert_eq!(f.compose(&g).unwrap(), id);
    }

    #[test]
    fn exp_inverts_log(f in rational_series(10)) {
        let u = f.over_z();
        prop_assert_eq!(exp_unit(&u.log()).unwrap(), u.clone());
        let v = u.log();
        prop_assert_eq!(exp_unit(&v).unwrap().log(), v);
    }

    #[test]
    fn power_laws(f in rational_series(8), r in q(), s in q()) {
        let u = f.over_z();
        prop_assert_eq!(u.pow(&r).mul(&u.pow(&s)).unwrap(), u.pow(&(&r + &s)));
        prop_assert_eq!(u.pow(&r).pow(&s), u.pow(&(&r * &s)));
        prop_assert_eq!(u.pow(&rational(2, 1)), u.mul(&u).unwrap());
        prop_assert_eq!(u.pow(&rational(-1, 1)).mul(&u).unwrap(), UnitSeries::one(u.order()));
    }

    #[test]
    fn numeric_round_trips(f in numeric_series(16, 0.5)) {
        let g = f.revert();
        let scale = magnitude(g.tail());
        prop_assert!(max_gap(g.revert().tail(), f.tail()) <= 1e-10 * scale);
        let id = NumericSeries::identity(16);
        prop_assert!(max_gap(g.compose(&f).unwrap().tail(), id.tail()) <= 1e-10 * scale);
        let u = f.over_z();
        let back = exp_unit(&u.log()).unwrap();
        prop_assert!(max_gap(back.as_series().coeffs(), u.as_series().coeffs()) <= 1e-10);
    }
}
