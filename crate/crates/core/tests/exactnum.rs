use std::cmp::Ordering;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};
use proptest::prelude::*;

use hingekit::exactnum::{Angle15, ApproxScalar, ExactScalar, MarginScope, RigidMotion, Scalar};
use hingekit::geom::Point;

type E = ExactScalar;

/// Fixed-point decimal evaluation with 60 digits after the point. Each
/// square root is truncated, so the error is below `|b|+|c|+|d|` units.
fn oracle_sign(a: i64, b: i64, c: i64, d: i64) -> Ordering {
    let scale = BigInt::from(10).pow(60);
    let root = |k: i64| (BigInt::from(k) * &scale * &scale).sqrt();
    let v = BigInt::from(a) * &scale + BigInt::from(b) * root(2) + BigInt::from(c) * root(3) + BigInt::from(d) * root(6);
    let slack = BigInt::from(b.abs() + c.abs() + d.abs() + 1);
    if v.abs() <= slack {
        assert!(a == 0 && b == 0 && c == 0 && d == 0, "oracle interval too wide for {a},{b},{c},{d}");
        return Ordering::Equal;
    }
    if v.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

fn ints(a: i64, b: i64, c: i64, d: i64) -> E {
    E::from_parts((a, 1), (b, 1), (c, 1), (d, 1))
}

fn arb_exact() -> impl Strategy<Value = E> {
    let r = (-40i64..=40, 1i64..=12);
    (r.clone(), r.clone(), r.clone(), r).prop_map(|(a, b, c, d)| E::from_parts(a, b, c, d))
}

proptest! {
    #[test]
    fn sign_matches_interval_oracle(a in -10_000i64..10_000, b in -10_000i64..10_000, c in -10_000i64..10_000, d in -10_000i64..10_000) {
        prop_assert_eq!(ints(a, b, c, d).sign(), oracle_sign(a, b, c, d));
    }

    #[test]
    fn near_cancellation_signs(k in 1i64..2000) {
        // Continued-fraction style neighbours of sqrt2 and sqrt3 keep the
        // sum close to zero without reaching it.
        let p = (k as f64 * std::f64::consts::SQRT_2).round() as i64;
        prop_assert_eq!(ints(p, -k, 0, 0).sign(), oracle_sign(p, -k, 0, 0));
        let q = (k as f64 * 6f64.sqrt()).round() as i64;
        prop_assert_eq!(ints(0, q, 0, -2 * k).sign(), oracle_sign(0, q, 0, -2 * k));
        prop_assert_eq!(ints(q, 0, -k, -k).sign(), oracle_sign(q, 0, -k, -k));
    }

    #[test]
    fn field_identities(x in arb_exact(), y in arb_exact(), z in arb_exact()) {
        prop_assert_eq!(x.add(&y).sub(&y), x.clone());
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        if !y.is_zero() {
            prop_assert_eq!(x.mul(&y).div(&y).unwrap(), x.clone());
            prop_assert_eq!(y.mul(&y.inverse().unwrap()), E::one());
        } else {
            prop_assert!(x.div(&y).is_err());
        }
    }

    #[test]
    fn order_agrees_with_floats(x in arb_exact(), y in arb_exact()) {
        let (fx, fy) = (x.to_f64(), y.to_f64());
        if (fx - fy).abs() > 1e-9 {
            prop_assert_eq!(x.cmp_s(&y), fx.partial_cmp(&fy).unwrap());
        }
        prop_assert_eq!(x.cmp(&y), x.cmp_s(&y));
    }

    #[test]
    fn text_round_trip(x in arb_exact()) {
        let back: E = x.to_string().parse().unwrap();
        prop_assert_eq!(&back, &x);
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<E>(&json).unwrap(), x);
    }

    #[test]
    fn rotations_preserve_distance(k in 0i32..24, px in -5i64..5, py in -5i64..5, tx in -5i64..5, ty in -5i64..5) {
        let m = RigidMotion::from_angle15(Angle15::new(k), Point::<E>::int(tx, ty));
        let p = Point::<E>::int(px, py);
        let q = Point::<E>::int(py, -px);
        prop_assert_eq!(m.apply(&p).sub(&m.apply(&q)).norm2(), p.sub(&q).norm2());
        prop_assert!(m.inverse().compose(&m).same(&RigidMotion::identity()));
        prop_assert_eq!(m.angle15(), Some(Angle15::new(k)));
    }
}

#[test]
fn table_of_fifteen_degree_rotations_composes() {
    for a in 0..24 {
        let (ca, sa) = (Angle15::new(a).cos(), Angle15::new(a).sin());
        assert_eq!(ca.mul(&ca).add(&sa.mul(&sa)), E::one(), "unit circle at {a}");
        assert!((ca.to_f64() - (a as f64 * 15f64).to_radians().cos()).abs() < 1e-12);
        for b in 0..24 {
            let (cb, sb) = (Angle15::new(b).cos(), Angle15::new(b).sin());
            let c = Angle15::new(a + b);
            assert_eq!(ca.mul(&cb).sub(&sa.mul(&sb)), c.cos(), "cos({a}+{b})");
            assert_eq!(sa.mul(&cb).add(&ca.mul(&sb)), c.sin(), "sin({a}+{b})");
            let m = RigidMotion::<E>::from_angle15(Angle15::new(a), Point::origin())
                .compose(&RigidMotion::from_angle15(Angle15::new(b), Point::origin()));
            assert!(m.same(&RigidMotion::from_angle15(c, Point::origin())));
        }
    }
}

#[test]
fn known_values() {
    assert_eq!(E::sqrt2().mul(&E::sqrt3()), E::sqrt6());
    assert_eq!(E::sqrt6().mul(&E::sqrt6()), E::int(6));
    assert_eq!(E::sqrt2().add(&E::sqrt3()).inverse().unwrap(), E::sqrt3().sub(&E::sqrt2()));
    assert_eq!(Angle15::new(1).cos().to_string(), E::from_parts((0, 1), (1, 4), (0, 1), (1, 4)).to_string());
    assert!(E::from_f64(0.5).is_none());
    assert!(E::unit_vector(1, 5).is_none());
    assert_eq!(E::unit_vector(1, 8).unwrap().0, E::sqrt2().half());
    assert_eq!(E::unit_vector(1, 12).unwrap().1, E::ratio(1, 2));
}

#[test]
fn big_components_stay_exact() {
    // Products overflow machine words and must come back unchanged.
    let big = E::new(
        BigRational::new(BigInt::from(i64::MAX), BigInt::from(3)),
        BigRational::zero(),
        BigRational::new(BigInt::from(1), BigInt::from(i64::MAX - 2)),
        BigRational::zero(),
    );
    let sq = big.mul(&big);
    assert_eq!(sq.div(&big).unwrap(), big);
    assert_eq!(sq.sub(&sq), E::zero());
    assert_eq!(big.components()[0], BigRational::new(BigInt::from(i64::MAX), BigInt::from(3)));
}

#[test]
fn approx_margins_record_decisions() {
    let scope = MarginScope::start();
    assert!(ApproxScalar(1e-12).is_zero());
    assert!(ApproxScalar(0.25).is_pos());
    assert!(ApproxScalar(-3e-3).is_neg());
    let m = scope.finish();
    assert_eq!(m.decisions, 3);
    assert_eq!(m.max_zero, 1e-12);
    assert_eq!(m.min_nonzero, 3e-3);
    // Outside a scope nothing is recorded.
    assert!(ApproxScalar(0.0).is_zero());
}

#[test]
fn motion_examples() {
    let one = E::one();
    assert_eq!(E::one().add(&E::sqrt2()).mul(&one.sub(&E::sqrt2())), E::int(-1));
    assert_eq!(E::sqrt2().add(&E::sqrt3()).cmp_s(&E::sqrt6()), Ordering::Greater);
    let id = RigidMotion::<E>::identity();
    assert_eq!(id.m, [[E::one(), E::zero()], [E::zero(), E::one()]]);
    let quarter = RigidMotion::<E>::from_angle15(Angle15::new(6), Point::origin());
    assert_eq!(quarter.m, [[E::zero(), E::int(-1)], [E::one(), E::zero()]]);
    assert_eq!(quarter.determinant(), E::one());
    let s = Angle15::new(1);
    assert_eq!(s.cos(), E::sqrt6().add(&E::sqrt2()).mul(&E::ratio(1, 4)));
    assert_eq!(s.sin(), E::sqrt6().sub(&E::sqrt2()).mul(&E::ratio(1, 4)));
    assert_eq!(id.apply(&Point::int(1, 1)), Point::int(1, 1));
    assert_eq!(quarter.apply(&Point::int(1, 0)), Point::int(0, 1));
    let m = RigidMotion::<E>::from_angle15(Angle15::new(2), Point::int(1, 0));
    assert_eq!(m.apply(&Point::int(1, 0)), Point::new(E::one().add(&E::sqrt3().half()), E::ratio(1, 2)));
    assert!("1 + 2√5".parse::<E>().is_err());
    assert_eq!("-√2 + 3/4".parse::<E>().unwrap(), E::ratio(3, 4).sub(&E::sqrt2()));
}

proptest! {
    #[test]
    fn apply_of_compose_is_compose_of_apply(a in 0i32..24, b in 0i32..24, t in (-4i64..4, -4i64..4, -4i64..4, -4i64..4), p in (-9i64..9, -9i64..9)) {
        let f = RigidMotion::<E>::from_angle15(Angle15::new(a), Point::int(t.0, t.1));
        let g = RigidMotion::<E>::from_angle15(Angle15::new(b), Point::int(t.2, t.3));
        let q = Point::int(p.0, p.1);
        prop_assert_eq!(f.compose(&g).apply(&q), f.apply(&g.apply(&q)));
    }
}
