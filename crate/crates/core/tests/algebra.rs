use num_bigint::BigUint;
use proptest::prelude::*;
use qdomain_core::algebra::{Classification, Strategy as Rewrite};
use qdomain_core::{battery, Coefficient, Element, Gen, PolAlgebra, Word};

fn q(e: i64) -> Coefficient {
    Coefficient::q_pow(e)
}

fn qp(cs: &[i64]) -> Coefficient {
    Coefficient::q_poly(cs)
}

fn word(gs: &[Gen]) -> Word {
    Word(gs.to_vec())
}

fn elem(terms: &[(Coefficient, &[Gen])]) -> Element {
    let mut e = Element::zero();
    for (c, w) in terms {
        e.add_term(word(w), c);
    }
    e
}

const Z: fn(u8, u8) -> Gen = Gen::z;
const ZS: fn(u8, u8) -> Gen = Gen::zs;

#[test]
fn rank_must_be_at_least_two() {
    assert!(PolAlgebra::new(1).is_err());
    let pol = PolAlgebra::new(3).unwrap();
    assert_eq!(pol.num_generators(), 6);
    assert_eq!(pol.generators().len(), 12);
    assert!(pol.gen(qdomain_core::Kind::Z, 1, 2).is_err());
    assert!(pol.gen(qdomain_core::Kind::Z, 4, 1).is_err());
}

#[test]
fn every_pair_is_normal_or_has_one_rule() {
    for n in 2..=4 {
        let pol = PolAlgebra::new(n).unwrap();
        let gens = pol.generators();
        let mut rules = 0;
        for &a in &gens {
            for &b in &gens {
                match pol.classify(a, b) {
                    Ok(Classification::Normal) => {}
                    Ok(Classification::Rule(_)) => rules += 1,
                    Err(e) => panic!("n={n}: {e}"),
                }
            }
        }
        // every unordered pair of distinct holomorphic generators gives one
        // z-z and one zs-zs rule; every zs-z pair is a rule
        let m = pol.num_generators();
        assert_eq!(rules, m * (m - 1) + m * m, "n={n}");
    }
}

#[test]
fn holomorphic_example_rank_three() {
    let pol = PolAlgebra::new(3).unwrap();
    let got = pol.normal_form_word(&[Z(2, 1), Z(3, 2)]);
    let want = elem(&[
        (q(1), &[Z(3, 2), Z(2, 1)]),
        (&q(1) - &q(-1), &[Z(3, 1), Z(2, 2)]),
    ]);
    assert_eq!(got, want);
}

#[test]
fn mixed_example_rank_two() {
    let pol = PolAlgebra::new(2).unwrap();
    let got = pol.normal_form_word(&[ZS(2, 1), Z(2, 1)]);
    // -q (q^-1 - q) = q^2 - 1
    let want = elem(&[
        (q(2), &[Z(2, 1), ZS(2, 1)]),
        (qp(&[-1, 0, 1]), &[Z(2, 2), ZS(2, 2)]),
        (qp(&[1, 0, -1]), &[]),
    ]);
    assert_eq!(got, want);
    assert_eq!(pol.vacuum_coefficient(&got), qp(&[1, 0, -1]));
}

#[test]
fn starred_relations() {
    let pol = PolAlgebra::new(2).unwrap();
    assert_eq!(
        pol.normal_form_word(&[ZS(2, 1), ZS(1, 1)]),
        elem(&[(q(2), &[ZS(1, 1), ZS(2, 1)])])
    );
    // q (q^2 - q^-2) = q^3 - q^-1
    assert_eq!(
        pol.normal_form_word(&[ZS(2, 2), ZS(1, 1)]),
        elem(&[
            (q(0), &[ZS(1, 1), ZS(2, 2)]),
            (&q(3) - &q(-1), &[ZS(2, 1), ZS(2, 1)]),
        ])
    );
    let lhs = pol.involution(&pol.normal_form_word(&[Z(1, 1), Z(2, 2)]));
    assert_eq!(lhs, pol.normal_form_word(&[ZS(2, 2), ZS(1, 1)]));
}

#[test]
fn rank_three_starred_commuting_pattern() {
    // j < l <= k < i: z[3,1] and z[2,2] commute, hence so do their conjugates
    let pol = PolAlgebra::new(3).unwrap();
    assert_eq!(
        pol.normal_form_word(&[ZS(3, 1), ZS(2, 2)]),
        elem(&[(q(0), &[ZS(2, 2), ZS(3, 1)])])
    );
}

#[test]
fn normal_words_are_fixed() {
    let pol = PolAlgebra::new(3).unwrap();
    for w in pol.normal_words_up_to(3) {
        assert_eq!(pol.normal_form_word(w.letters()), Element::word(w.clone()));
    }
}

#[test]
fn normal_forms_are_wick_ordered() {
    let pol = PolAlgebra::new(3).unwrap();
    let gens = pol.generators();
    for &a in &gens {
        for &b in &gens {
            for (w, _) in pol.normal_form_word(&[a, b]).terms() {
                assert!(qdomain_core::algebra::is_normal_word(w.letters()), "{a}{b} -> {w:?}");
            }
        }
    }
}

#[test]
fn charge_is_conserved() {
    let pol = PolAlgebra::new(3).unwrap();
    for w in pol.normal_words(1, 2).iter().chain(&pol.normal_words(2, 1)) {
        let rev: Vec<Gen> = w.letters().iter().rev().copied().collect();
        for (v, _) in pol.normal_form_word(&rev).terms() {
            assert_eq!(v.charge(), w.charge());
        }
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    let mut r = BigUint::from(1u32);
    for i in 0..k {
        r = r * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    r
}

#[test]
fn graded_dimensions() {
    assert_eq!(PolAlgebra::new(2).unwrap().graded_dimension(2), 6);
    assert_eq!(PolAlgebra::new(3).unwrap().graded_dimension(3), 56);
    for n in 2..=3 {
        let pol = PolAlgebra::new(n).unwrap();
        let m = n * (n + 1) / 2;
        for d in 0..=4 {
            assert_eq!(BigUint::from(pol.graded_dimension(d)), binomial(m + d - 1, d));
        }
        assert!(pol.verify_flatness(4).passed());
    }
}

#[test]
fn confluence_rank_two() {
    let pol = PolAlgebra::new(2).unwrap();
    let report = pol.verify_confluence(3);
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn both_rewriting_strategies_agree_with_normal_form() {
    let pol = PolAlgebra::new(2).unwrap();
    let w = [ZS(2, 2), ZS(1, 1), Z(2, 1), Z(2, 2)];
    let nf = pol.normal_form_word(&w);
    assert_eq!(pol.rewrite(&w, Rewrite::Leftmost).unwrap(), nf);
    assert_eq!(pol.rewrite(&w, Rewrite::Rightmost).unwrap(), nf);
}

#[test]
fn involution_on_battery() {
    let pol = PolAlgebra::new(2).unwrap();
    let b = battery::random_elements(&pol, 11, 30, 2);
    let r = pol.verify_involution(&b);
    assert!(r.passed() && r.cases > 0);
}

fn pol2() -> &'static PolAlgebra {
    use std::sync::OnceLock;
    static P: OnceLock<PolAlgebra> = OnceLock::new();
    P.get_or_init(|| PolAlgebra::new(2).unwrap())
}

fn triple() -> impl proptest::strategy::Strategy<Value = (Element, Element, Element)> {
    any::<u64>().prop_map(|seed| {
        let v = battery::random_elements(pol2(), seed, 3, 2);
        (v[0].clone(), v[1].clone(), v[2].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative((a, b, c) in triple()) {
        let pol = pol2();
        prop_assert_eq!(
            pol.multiply(&pol.multiply(&a, &b), &c),
            pol.multiply(&a, &pol.multiply(&b, &c))
        );
    }

    #[test]
    fn involution_is_antimultiplicative((a, b, _) in triple()) {
        let pol = pol2();
        prop_assert_eq!(
            pol.involution(&pol.multiply(&a, &b)),
            pol.multiply(&pol.involution(&b), &pol.involution(&a))
        );
        prop_assert_eq!(pol.involution(&pol.involution(&a)), a);
    }

    #[test]
    fn multiplication_is_bilinear((a, b, c) in triple()) {
        let pol = pol2();
        prop_assert_eq!(pol.multiply(&(&a + &b), &c), &pol.multiply(&a, &c) + &pol.multiply(&b, &c));
    }
}
