use std::sync::OnceLock;

use proptest::prelude::*;
use qdomain_core::text::{
    element_json, parse_coefficient, parse_delement, parse_element, parse_expression, parse_rational, parse_uq,
    render_element, Parsed,
};
use qdomain_core::{battery, Coefficient, DElement, Element, Error, Gen, HopfAction, Letter, PolAlgebra, UqExpr, Word};

fn pol2() -> &'static PolAlgebra {
    static P: OnceLock<PolAlgebra> = OnceLock::new();
    P.get_or_init(|| PolAlgebra::new(2).unwrap())
}

#[test]
fn parses_a_mixed_word() {
    let e = parse_element("z[2,1]*zs[1,1]", pol2()).unwrap();
    assert_eq!(e, Element::word(Word(vec![Gen::z(2, 1), Gen::zs(1, 1)])));
}

#[test]
fn products_are_normalized() {
    let e = parse_element("z[1,1]*z[2,1]", pol2()).unwrap();
    assert_eq!(render_element(&e), "q^2 * z[2,1]z[1,1]");
    // juxtaposition is multiplication too
    assert_eq!(parse_element("z[1,1] z[2,1]", pol2()).unwrap(), e);
}

#[test]
fn index_errors() {
    assert_eq!(
        parse_element("z[1,2]", pol2()),
        Err(Error::BadIndex { i: 1, j: 2, n: 2 })
    );
    assert!(matches!(parse_uq("E[3]", pol2()), Err(Error::BadUqIndex { i: 3, n: 2 })));
}

#[test]
fn syntax_errors_carry_positions() {
    match parse_element("z[2,1", pol2()) {
        Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
        other => panic!("{other:?}"),
    }
    match parse_element("3 $ 4", pol2()) {
        Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
        other => panic!("{other:?}"),
    }
}

#[test]
fn type_errors() {
    assert!(matches!(parse_element("z[1,1] + f0", pol2()), Err(Error::Type(_))));
    assert!(matches!(parse_expression("z[1,1] + E[1]", pol2()), Err(Error::Type(_))));
    assert!(matches!(parse_delement("E[1]", pol2()), Err(Error::Type(_))));
}

#[test]
fn sandwiches() {
    let x = parse_delement("z[2,2]*f0*zs[2,2]", pol2()).unwrap();
    assert_eq!(x, DElement::sandwich(Word(vec![Gen::z(2, 2)]), Word(vec![Gen::z(2, 2)])));
    assert!(matches!(parse_expression("f0", pol2()).unwrap(), Parsed::DElement(_)));
    // annihilators next to f0 collapse
    assert!(parse_delement("zs[1,1] f0", pol2()).unwrap().is_zero());
    assert_eq!(
        parse_delement("f0 z[1,1] f0", pol2()).unwrap(),
        DElement::zero()
    );
    // coefficients are always written out
    assert_eq!(x.to_string(), "1 * z[2,2] * f0 * zs[2,2]");
}

#[test]
fn uq_expressions() {
    let u = parse_uq("E[1]K[2] + 2*Kinv[1]", pol2()).unwrap();
    let mut want = UqExpr::word(vec![Letter::E(1), Letter::K(2)]);
    want = want.add(&UqExpr::letter(Letter::Kinv(1)).scale(&Coefficient::from_int(2)));
    assert_eq!(u, want);
    assert_eq!(parse_uq(&u.to_string(), pol2()).unwrap(), u);
}

#[test]
fn coefficients() {
    assert_eq!(parse_coefficient("q^(1/2)").unwrap(), Coefficient::s());
    assert_eq!(
        parse_coefficient("(1-q^4)^3").unwrap(),
        Coefficient::q_poly(&[1, 0, 0, 0, -1]).pow(3).unwrap()
    );
    assert_eq!(
        parse_coefficient("-q/(1-q^4)").unwrap(),
        &-Coefficient::q() / &Coefficient::q_poly(&[1, 0, 0, 0, -1])
    );
    assert!(parse_coefficient("z[1,1]").is_err());
    assert!(parse_coefficient("1/0").is_err());
    assert_eq!(parse_rational("3/4").unwrap().to_string(), "3/4");
}

#[test]
fn element_json_shape() {
    let e = parse_element("q^2*z[2,1]z[1,1] + 1", pol2()).unwrap();
    let j = element_json(&e);
    assert_eq!(j[0]["word"].as_array().unwrap().len(), 0);
    assert_eq!(j[1]["coeff"], "q^2");
    assert_eq!(j[1]["word"][0][0], "z");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn elements_round_trip(seed in any::<u64>()) {
        for e in battery::random_elements(pol2(), seed, 4, 3) {
            prop_assert_eq!(parse_element(&render_element(&e), pol2()).unwrap(), e);
        }
    }

    #[test]
    fn acted_elements_round_trip(seed in any::<u64>(), l in prop::sample::select(Letter::all(2))) {
        // the action produces half-integer powers of q
        let h = HopfAction::new(pol2());
        let e = &battery::random_elements(pol2(), seed, 1, 2)[0];
        let x = h.act(&UqExpr::letter(l), e).unwrap();
        prop_assert_eq!(parse_element(&render_element(&x), pol2()).unwrap(), x);
    }

    #[test]
    fn delements_round_trip(seed in any::<u64>()) {
        for x in battery::random_delements(pol2(), seed, 4, 2) {
            prop_assert_eq!(parse_delement(&x.to_string(), pol2()).unwrap(), x);
        }
    }
}
