use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qdomain_core::coeff::PointVar;
use qdomain_core::poly::IntPoly;
use qdomain_core::text::{parse_coefficient, render_coefficient};
use qdomain_core::{Coefficient, Error, RationalPoint};

fn q(e: i64) -> Coefficient {
    Coefficient::q_pow(e)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn q_is_s_squared() {
    assert_eq!(&Coefficient::s() * &Coefficient::s(), Coefficient::q());
    assert_eq!(Coefficient::s_pow(-4), q(-2));
}

#[test]
fn canonical_form_cancels_common_factors() {
    // (1 - q^4) / (1 - q^2) = 1 + q^2
    let a = Coefficient::q_poly(&[1, 0, -1]);
    let b = Coefficient::q_poly(&[1, 0, 0, 0, -1]);
    assert_eq!(&b / &a, Coefficient::q_poly(&[1, 0, 1]));
    // sign and integer content normalized
    let c = Coefficient::from_parts(IntPoly::from_i64s(&[-2, 0, 2]), IntPoly::from_i64s(&[-4]));
    assert_eq!(c, Coefficient::from_parts(IntPoly::from_i64s(&[1, 0, -1]), IntPoly::from_i64s(&[2])));
    assert!(c.denominator().leading().unwrap() > &BigInt::from(0));
}

#[test]
fn evaluation_at_q_and_s() {
    let c = Coefficient::q_poly(&[1, 0, 0, 0, -1]).pow(3).unwrap();
    let p = RationalPoint::q(1, 2).unwrap();
    assert_eq!(c.evaluate(&p).unwrap(), rat(3375, 4096));
    let half = Coefficient::s_pow(3);
    assert!(matches!(half.evaluate(&p), Err(Error::HalfIntegerPower(_))));
    let ps = RationalPoint::s(1, 2).unwrap();
    assert_eq!(half.evaluate(&ps).unwrap(), rat(1, 8));
    assert_eq!(ps.var(), PointVar::S);
}

#[test]
fn points_outside_unit_interval_rejected() {
    assert!(RationalPoint::q(1, 1).is_err());
    assert!(RationalPoint::q(0, 3).is_err());
    assert!(RationalPoint::q(-1, 2).is_err());
    assert!(RationalPoint::q(3, 4).is_ok());
}

#[test]
fn pole_is_reported() {
    // 1 / (1 - 2q) at q = 1/2
    let c = Coefficient::q_poly(&[1, -2]).inv().unwrap();
    assert!(matches!(c.evaluate(&RationalPoint::q(1, 2).unwrap()), Err(Error::Pole { .. })));
}

#[test]
fn division_by_zero() {
    assert_eq!(Coefficient::zero().inv(), Err(Error::DivisionByZero));
    assert!(Coefficient::one().checked_div(&Coefficient::zero()).is_err());
}

#[test]
fn negative_powers() {
    let a = Coefficient::q_poly(&[1, 0, -1]);
    assert_eq!(&a.pow(-2).unwrap() * &a.pow(2).unwrap(), Coefficient::one());
    assert_eq!(q(3).pow(-1).unwrap(), q(-3));
}

#[test]
fn rendering_examples() {
    let one_minus_q4 = Coefficient::q_poly(&[1, 0, 0, 0, -1]);
    assert_eq!(render_coefficient(&one_minus_q4), "(1-q^4)");
    assert_eq!(render_coefficient(&one_minus_q4.pow(3).unwrap()), "(1-q^4)^3");
    assert_eq!(render_coefficient(&(&q(-4) * &one_minus_q4.pow(4).unwrap())), "q^-4*(1-q^4)^4");
    assert_eq!(render_coefficient(&Coefficient::s()), "q^(1/2)");
    assert_eq!(render_coefficient(&Coefficient::zero()), "0");
}

fn small_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-4i64..=4, 0..5).prop_map(|v| IntPoly::from_i64s(&v))
}

fn coefficient() -> impl Strategy<Value = Coefficient> {
    (small_poly(), small_poly(), 0usize..3)
        .prop_filter("nonzero denominator", |(_, d, _)| !d.is_zero())
        .prop_map(|(n, d, shift)| Coefficient::from_parts(n, d.shift_up(shift)))
}

fn nonzero() -> impl Strategy<Value = Coefficient> {
    coefficient().prop_filter("nonzero", |c| !c.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(a in coefficient(), b in coefficient(), c in coefficient()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Coefficient::zero(), a.clone());
        prop_assert_eq!(&a * &Coefficient::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses(a in nonzero()) {
        prop_assert_eq!(&a * &a.inv().unwrap(), Coefficient::one());
        prop_assert_eq!(a.inv().unwrap().inv().unwrap(), a);
    }

    #[test]
    fn canonical_form_is_unique(a in coefficient(), k in nonzero()) {
        // representing a as (a k) / k gives the same normal form
        let b = &(&a * &k) / &k;
        prop_assert_eq!(&b, &a);
        if let Some(lc) = b.denominator().leading() {
            prop_assert!(lc > &BigInt::from(0));
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in coefficient(), b in coefficient(), num in 1i64..10) {
        let p = RationalPoint::s(num, 11).unwrap();
        let (Ok(va), Ok(vb)) = (a.evaluate(&p), b.evaluate(&p)) else {
            return Ok(());
        };
        prop_assert_eq!((&a + &b).evaluate(&p).unwrap(), &va + &vb);
        prop_assert_eq!((&a * &b).evaluate(&p).unwrap(), &va * &vb);
        prop_assert_eq!((-&a).evaluate(&p).unwrap(), -va);
    }

    #[test]
    fn render_parse_round_trip(a in coefficient()) {
        let text = render_coefficient(&a);
        prop_assert_eq!(parse_coefficient(&text).unwrap(), a);
    }
}
