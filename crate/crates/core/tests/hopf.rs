use proptest::prelude::*;
use qdomain_core::hopf::qbinom;
use qdomain_core::{battery, CartanData, Coefficient, Element, Gen, HopfAction, Letter, PolAlgebra, UqExpr, Word};
use std::sync::OnceLock;

fn q(e: i64) -> Coefficient {
    Coefficient::q_pow(e)
}

fn w(gs: &[Gen]) -> Element {
    Element::word(Word(gs.to_vec()))
}

fn act(h: &HopfAction<'_>, l: Letter, e: &Element) -> Element {
    h.act(&UqExpr::letter(l), e).unwrap()
}

const Z: fn(u8, u8) -> Gen = Gen::z;
const ZS: fn(u8, u8) -> Gen = Gen::zs;

fn pol2() -> &'static PolAlgebra {
    static P: OnceLock<PolAlgebra> = OnceLock::new();
    P.get_or_init(|| PolAlgebra::new(2).unwrap())
}

fn pol3() -> &'static PolAlgebra {
    static P: OnceLock<PolAlgebra> = OnceLock::new();
    P.get_or_init(|| PolAlgebra::new(3).unwrap())
}

#[test]
fn cartan_data() {
    let c = CartanData::new(3).unwrap();
    assert_eq!(c.a(2, 3), -2);
    assert_eq!(c.a(3, 2), -1);
    assert_eq!(c.a(1, 2), -1);
    assert_eq!(c.a(3, 3), 2);
    assert_eq!((c.d(1), c.d(2), c.d(3)), (1, 1, 2));
    // symmetrizable: d_i a_ij = d_j a_ji
    for i in 1..=3 {
        for j in 1..=3 {
            assert_eq!(c.d(i) * c.a(i, j), c.d(j) * c.a(j, i));
        }
    }
}

#[test]
fn generator_table_examples() {
    let h = HopfAction::new(pol2());
    assert_eq!(act(&h, Letter::F(2), &w(&[Z(2, 2)])), Element::scalar(q(1)));
    assert_eq!(act(&h, Letter::E(2), &w(&[Z(1, 1)])), w(&[Z(2, 1), Z(2, 1)]).scale(&-q(0)));
    let c = &Coefficient::s_pow(-3) * &Coefficient::q_poly(&[1, 0, 1]);
    assert_eq!(act(&h, Letter::E(1), &w(&[Z(2, 2)])), w(&[Z(2, 1)]).scale(&c));
    assert_eq!(act(&h, Letter::K(1), &w(&[Z(1, 1)])), w(&[Z(1, 1)]).scale(&q(2)));
    assert_eq!(act(&h, Letter::E(2), &w(&[Z(2, 2)])), w(&[Z(2, 2), Z(2, 2)]).scale(&-q(1)));
}

#[test]
fn coproduct_example() {
    // E_2 (z22 z22) = (E_2 z22) z22 + (K_2 z22)(E_2 z22) = -q (1 + q^4) z22^3
    let h = HopfAction::new(pol2());
    let got = act(&h, Letter::E(2), &w(&[Z(2, 2), Z(2, 2)]));
    let c = -(&q(1) * &Coefficient::q_poly(&[1, 0, 0, 0, 1]));
    assert_eq!(got, w(&[Z(2, 2), Z(2, 2), Z(2, 2)]).scale(&c));
}

#[test]
fn conjugate_letters() {
    let h = HopfAction::new(pol2());
    assert_eq!(act(&h, Letter::K(1), &w(&[ZS(1, 1)])), w(&[ZS(1, 1)]).scale(&q(-2)));
    assert_eq!(act(&h, Letter::E(2), &w(&[ZS(2, 2)])), Element::scalar(q(-3)));
}

#[test]
fn weights() {
    let h = HopfAction::new(pol2());
    assert_eq!(h.weight(&[Z(2, 2)]), vec![-2, 4]);
    assert_eq!(h.weight(&[Z(2, 1)]), vec![0, 2]);
    assert_eq!(h.weight(&[Z(1, 1)]), vec![2, 0]);
    assert_eq!(h.weight(&[ZS(2, 2)]), vec![2, -4]);
    let words = pol2().normal_words_up_to(3);
    assert!(h.verify_diagonal(&words).passed());
}

#[test]
fn antipode_star() {
    let h = HopfAction::new(pol2());
    assert_eq!(h.antipode_star_letter(Letter::E(2)), (q(-4), Letter::F(2)));
    assert_eq!(h.antipode_star_letter(Letter::K(1)), (q(0), Letter::Kinv(1)));
    assert_eq!(h.antipode_star_letter(Letter::E(1)), (-q(-2), Letter::F(1)));
    // xi -> S(xi)* is an involution on generators
    for l in Letter::all(2) {
        let x = UqExpr::letter(l);
        assert_eq!(h.antipode_star(&h.antipode_star(&x)), x, "{l}");
    }
}

#[test]
fn commutator_on_z22() {
    let h = HopfAction::new(pol2());
    let e = UqExpr::letter(Letter::E(2));
    let f = UqExpr::letter(Letter::F(2));
    let lhs = h.act(&e.mul(&f).sub(&f.mul(&e)), &w(&[Z(2, 2)])).unwrap();
    // (q^4 - q^-4) / (q^2 - q^-2) = q^2 + q^-2
    let c = &q(2) + &q(-2);
    assert_eq!(lhs, w(&[Z(2, 2)]).scale(&c));
    let k = UqExpr::letter(Letter::K(2)).sub(&UqExpr::letter(Letter::Kinv(2)));
    let rhs = h.act(&k.scale(&(&q(2) - &q(-2)).inv().unwrap()), &w(&[Z(2, 2)])).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn gaussian_binomials() {
    // [3 choose 1]_{q} = q^-2 + 1 + q^2, in the symmetric normalization
    assert_eq!(qbinom(3, 1, 1), &(&q(-2) + &q(0)) + &q(2));
    assert_eq!(qbinom(2, 1, 2), &q(-2) + &q(2));
    assert_eq!(qbinom(4, 0, 1), q(0));
}

#[test]
fn unit_is_acted_on_by_counit() {
    let h = HopfAction::new(pol3());
    for l in Letter::all(3) {
        assert_eq!(act(&h, l, &Element::one()), Element::scalar(l.counit()));
    }
}

#[test]
fn bad_uq_index_is_an_error() {
    let h = HopfAction::new(pol2());
    assert!(h.act(&UqExpr::letter(Letter::E(3)), &Element::one()).is_err());
}

#[test]
fn uqg_relations_rank_two_degree_two() {
    let h = HopfAction::new(pol2());
    let r = h.verify_uqg_relations(2);
    assert!(r.passed(), "{:?}", r.failures.first());
}

#[test]
fn module_algebra_rank_two() {
    let r = HopfAction::new(pol2()).verify_module_algebra();
    assert!(r.passed() && r.cases > 0, "{:?}", r.failures.first());
}

#[test]
fn star_compatibility_rank_three() {
    let h = HopfAction::new(pol3());
    let b = battery::random_elements(pol3(), 5, 15, 2);
    let r = h.verify_star_compatibility(&b);
    assert!(r.passed(), "{:?}", r.failures.first());
}

#[test]
fn coproduct_coherence() {
    for pol in [pol2(), pol3()] {
        let h = HopfAction::new(pol);
        let b = battery::random_elements(pol, 9, 16, 2);
        let pairs: Vec<_> = b.chunks(2).map(|p| (p[0].clone(), p[1].clone())).collect();
        let r = h.verify_coproduct(&pairs);
        assert!(r.passed(), "{:?}", r.failures.first());
    }
}

fn hopf2() -> &'static HopfAction<'static> {
    static H: OnceLock<HopfAction<'static>> = OnceLock::new();
    H.get_or_init(|| HopfAction::new(pol2()))
}

fn letter() -> impl Strategy<Value = Letter> {
    prop::sample::select(Letter::all(2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn action_of_products_composes(x in letter(), y in letter(), seed in any::<u64>()) {
        let h = hopf2();
        let f = &battery::random_elements(pol2(), seed, 1, 2)[0];
        let xy = UqExpr::letter(x).mul(&UqExpr::letter(y));
        prop_assert_eq!(h.act(&xy, f).unwrap(), act(h, x, &act(h, y, f)));
    }

    #[test]
    fn action_is_linear(x in letter(), seed in any::<u64>()) {
        let h = hopf2();
        let v = battery::random_elements(pol2(), seed, 2, 2);
        prop_assert_eq!(act(h, x, &(&v[0] + &v[1])), &act(h, x, &v[0]) + &act(h, x, &v[1]));
    }

    #[test]
    fn k_letters_are_inverse(k in 1u8..=2, seed in any::<u64>()) {
        let h = hopf2();
        let f = &battery::random_elements(pol2(), seed, 1, 3)[0];
        prop_assert_eq!(&act(h, Letter::K(k), &act(h, Letter::Kinv(k), f)), f);
    }
}
