use std::collections::HashMap;
use std::sync::Mutex;

use super::element::{Element, FreeExpr, Word};
use super::rules::{self, Classification, Term};
use super::{is_normal_pair, Gen, Kind};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};

/// Straightening engine for the *-algebra of rank `n`.
///
/// Products are computed by appending one letter at a time to a normal word
/// and rewriting the single violating pair at the junction. Results of
/// `normal word x generator` are memoized.
#[derive(Debug)]
pub struct PolAlgebra {
    n: usize,
    cache: Mutex<HashMap<(Word, Gen), Element>>,
}

impl PolAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadRank(n));
        }
        Ok(Self {
            n,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Number of holomorphic generators, `n(n+1)/2`.
    pub fn num_generators(&self) -> usize {
        self.n * (self.n + 1) / 2
    }

    /// Checked constructor for a generator of this rank.
    pub fn gen(&self, kind: Kind, i: usize, j: usize) -> Result<Gen> {
        if j < 1 || j > i || i > self.n {
            return Err(Error::BadIndex { i, j, n: self.n });
        }
        Ok(Gen {
            kind,
            i: i as u8,
            j: j as u8,
        })
    }

    /// Holomorphic generators in increasing order.
    pub fn holomorphic_generators(&self) -> Vec<Gen> {
        let mut v = Vec::new();
        for i in 1..=self.n {
            for j in 1..=i {
                v.push(Gen::z(i as u8, j as u8));
            }
        }
        v
    }

    /// All `z` generators followed by all `zs` generators.
    pub fn generators(&self) -> Vec<Gen> {
        let z = self.holomorphic_generators();
        let zs: Vec<Gen> = z.iter().map(|g| g.star()).collect();
        z.into_iter().chain(zs).collect()
    }

    fn check_gen(&self, g: Gen) {
        assert!(
            g.j >= 1 && g.j <= g.i && g.i as usize <= self.n,
            "generator {g} does not belong to rank {}",
            self.n
        );
    }

    /// Which rule straightens the adjacent pair `a b`, if any.
    pub fn classify(&self, a: Gen, b: Gen) -> Result<Classification> {
        self.check_gen(a);
        self.check_gen(b);
        rules::classify(a, b).map_err(|found| {
            Error::Uncovered(format!("{a}{b} (matching rules: {found:?})"))
        })
    }

    /// The rewrite of a violating pair `a b`, or `None` when it is normal.
    pub(crate) fn rewrite_pair(&self, a: Gen, b: Gen) -> Option<Vec<Term>> {
        match self.classify(a, b).expect("rule table is complete") {
            Classification::Normal => None,
            Classification::Rule(id) => Some(rules::rule_rhs(id, a, b, self.n)),
        }
    }

    /// Normal form of an arbitrary word.
    pub fn normal_form_word(&self, w: &[Gen]) -> Element {
        let mut acc = Element::one();
        for &g in w {
            acc = self.mul_gen(&acc, g);
        }
        acc
    }

    /// Normal form of a free linear combination of words.
    pub fn normal_form(&self, e: &FreeExpr) -> Element {
        let mut out = Element::zero();
        for (c, w) in &e.terms {
            out.add_scaled(&self.normal_form_word(w), c);
        }
        out
    }

    /// `e * g` for a normal element `e`.
    pub fn mul_gen(&self, e: &Element, g: Gen) -> Element {
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            out.add_scaled(&self.mul_word_gen(w, g), c);
        }
        out
    }

    fn mul_word_gen(&self, w: &Word, g: Gen) -> Element {
        let letters = w.letters();
        let Some((&last, prefix)) = letters.split_last() else {
            return Element::word(Word(vec![g]));
        };
        if is_normal_pair(last, g) {
            let mut v = letters.to_vec();
            v.push(g);
            return Element::word(Word(v));
        }
        let key = (w.clone(), g);
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let rhs = self.rewrite_pair(last, g).expect("pair is not normal");
        let prefix = Element::word(Word(prefix.to_vec()));
        let mut out = Element::zero();
        for (c, t) in rhs {
            let mut cur = prefix.clone();
            for letter in t {
                cur = self.mul_gen(&cur, letter);
            }
            out.add_scaled(&cur, &c);
        }
        self.cache.lock().unwrap().insert(key, out.clone());
        out
    }

    /// `a * w` for a normal element `a` and an arbitrary word `w`.
    pub fn mul_word(&self, a: &Element, w: &[Gen]) -> Element {
        let mut acc = a.clone();
        for &g in w {
            acc = self.mul_gen(&acc, g);
        }
        acc
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (w, c) in b.terms() {
            out.add_scaled(&self.mul_word(a, w.letters()), c);
        }
        out
    }

    /// Product of several elements, left to right.
    pub fn product(&self, factors: &[&Element]) -> Element {
        factors
            .iter()
            .fold(Element::one(), |acc, f| self.multiply(&acc, f))
    }

    /// The conjugate-linear anti-automorphism `z[i,j] <-> zs[i,j]`.
    ///
    /// Coefficients are real functions of `q` and stay fixed. Reversing a
    /// normal word and flipping every letter yields a normal word again.
    pub fn involution(&self, e: &Element) -> Element {
        e.terms().map(|(w, c)| (w.star(), c.clone())).collect()
    }

    /// Coefficient of the empty word.
    pub fn vacuum_coefficient(&self, e: &Element) -> Coefficient {
        e.coefficient(&Word::empty())
    }

    /// All normal holomorphic words of degree `d`, in increasing word order.
    pub fn holomorphic_basis(&self, d: usize) -> Vec<Word> {
        let gens = self.holomorphic_generators();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(d);
        fn rec(gens: &[Gen], hi: usize, d: usize, cur: &mut Vec<Gen>, out: &mut Vec<Word>) {
            if cur.len() == d {
                out.push(Word(cur.clone()));
                return;
            }
            for idx in 0..=hi {
                cur.push(gens[idx]);
                rec(gens, idx, d, cur, out);
                cur.pop();
            }
        }
        if d == 0 {
            return vec![Word::empty()];
        }
        rec(&gens, gens.len() - 1, d, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Normal words with `dz` holomorphic and `dzs` conjugate letters.
    pub fn normal_words(&self, dz: usize, dzs: usize) -> Vec<Word> {
        let hol = self.holomorphic_basis(dz);
        let anti: Vec<Word> = self.holomorphic_basis(dzs).iter().map(Word::star).collect();
        let mut out = Vec::with_capacity(hol.len() * anti.len());
        for h in &hol {
            for a in &anti {
                out.push(h.concat(a));
            }
        }
        out.sort();
        out
    }

    /// All normal words of total length at most `max_len`.
    pub fn normal_words_up_to(&self, max_len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        for total in 0..=max_len {
            for dz in 0..=total {
                out.extend(self.normal_words(dz, total - dz));
            }
        }
        out.sort();
        out
    }

    /// Number of holomorphic words of degree `d` to which no rule applies,
    /// found by scanning all `N^d` words rather than by construction.
    pub fn graded_dimension(&self, d: usize) -> usize {
        let gens = self.holomorphic_generators();
        let mut count = 0;
        let mut idx = vec![0usize; d];
        loop {
            let irreducible = idx.windows(2).all(|p| {
                matches!(
                    self.classify(gens[p[0]], gens[p[1]]),
                    Ok(Classification::Normal)
                )
            });
            if irreducible {
                count += 1;
            }
            // odometer increment
            let mut pos = d;
            loop {
                if pos == 0 {
                    return count;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < gens.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> Coefficient {
        Coefficient::q_pow(e)
    }

    fn w(gs: &[Gen]) -> Word {
        Word(gs.to_vec())
    }

    #[test]
    fn relation_one_example() {
        let alg = PolAlgebra::new(2).unwrap();
        let e = alg.normal_form_word(&[Gen::z(1, 1), Gen::z(2, 1)]);
        assert_eq!(e, Element::term(q(2), w(&[Gen::z(2, 1), Gen::z(1, 1)])));
    }

    #[test]
    fn relation_six_example() {
        let alg = PolAlgebra::new(2).unwrap();
        let e = alg.normal_form_word(&[Gen::z(1, 1), Gen::z(2, 2)]);
        let mut expect = Element::word(w(&[Gen::z(2, 2), Gen::z(1, 1)]));
        expect.add_term(w(&[Gen::z(2, 1), Gen::z(2, 1)]), &(q(1) * (q(2) - q(-2))));
        assert_eq!(e, expect);
    }

    #[test]
    fn relation_eleven_then_commute() {
        let alg = PolAlgebra::new(3).unwrap();
        let e = alg.normal_form_word(&[Gen::z(2, 1), Gen::z(3, 2)]);
        let mut expect = Element::term(q(1), w(&[Gen::z(3, 2), Gen::z(2, 1)]));
        expect.add_term(w(&[Gen::z(3, 1), Gen::z(2, 2)]), &(q(1) - q(-1)));
        assert_eq!(e, expect);
    }

    #[test]
    fn wick_row_example() {
        let alg = PolAlgebra::new(2).unwrap();
        let e = alg.normal_form_word(&[Gen::zs(2, 1), Gen::z(2, 1)]);
        let mut expect = Element::term(q(2), w(&[Gen::z(2, 1), Gen::zs(2, 1)]));
        expect.add_term(
            w(&[Gen::z(2, 2), Gen::zs(2, 2)]),
            &-(q(1) * (q(-1) - q(1))),
        );
        expect.add_term(Word::empty(), &(Coefficient::one() - q(2)));
        assert_eq!(e, expect);
        assert_eq!(alg.vacuum_coefficient(&e), Coefficient::one() - q(2));
    }

    #[test]
    fn multiply_examples() {
        let alg = PolAlgebra::new(2).unwrap();
        let z21 = Element::word(w(&[Gen::z(2, 1)]));
        assert_eq!(alg.multiply(&Element::one(), &z21), z21);
        let z11 = Element::word(w(&[Gen::z(1, 1)]));
        assert_eq!(
            alg.multiply(&z11, &z21),
            Element::term(q(2), w(&[Gen::z(2, 1), Gen::z(1, 1)]))
        );
        let a = Element::word(w(&[Gen::z(2, 1), Gen::z(1, 1)]));
        assert_eq!(
            alg.multiply(&a, &z11),
            Element::word(w(&[Gen::z(2, 1), Gen::z(1, 1), Gen::z(1, 1)]))
        );
    }

    #[test]
    fn involution_examples() {
        let alg = PolAlgebra::new(2).unwrap();
        assert_eq!(
            alg.involution(&Element::word(w(&[Gen::z(1, 1)]))),
            Element::word(w(&[Gen::zs(1, 1)]))
        );
        let e = Element::term(q(1), w(&[Gen::z(2, 1), Gen::zs(2, 2)]));
        assert_eq!(
            alg.involution(&e),
            Element::term(q(1), w(&[Gen::z(2, 2), Gen::zs(2, 1)]))
        );
        let prod = alg.normal_form_word(&[Gen::z(1, 1), Gen::z(2, 2)]);
        assert_eq!(
            alg.involution(&prod),
            alg.normal_form_word(&[Gen::zs(2, 2), Gen::zs(1, 1)])
        );
    }

    #[test]
    fn vacuum_examples() {
        let alg = PolAlgebra::new(2).unwrap();
        assert_eq!(alg.vacuum_coefficient(&Element::one()), Coefficient::one());
        assert!(alg
            .vacuum_coefficient(&Element::word(w(&[Gen::z(1, 1)])))
            .is_zero());
    }

    #[test]
    fn graded_dimensions_small() {
        let alg = PolAlgebra::new(2).unwrap();
        assert_eq!(alg.graded_dimension(0), 1);
        assert_eq!(alg.graded_dimension(1), 3);
        assert_eq!(alg.graded_dimension(2), 6);
    }

    #[test]
    fn bad_index_rejected() {
        let alg = PolAlgebra::new(2).unwrap();
        assert!(matches!(
            alg.gen(Kind::Z, 1, 2),
            Err(Error::BadIndex { i: 1, j: 2, n: 2 })
        ));
        assert!(PolAlgebra::new(1).is_err());
    }
}
