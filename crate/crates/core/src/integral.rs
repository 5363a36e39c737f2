//! The algebra of compactly supported functions spanned by sandwiches
//! `a f0 b*`, the U_q action on it, and the invariant integral.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;
use serde::Serialize;

use crate::algebra::{Element, Gen, PolAlgebra, Word};
use crate::coeff::{Coefficient, RationalPoint};
use crate::error::Result;
use crate::fock::Fock;
use crate::hopf::{HopfAction, Letter, UqExpr};
use crate::report::Report;
use crate::text::{render_coefficient, render_word};

/// `sum c * a f0 b*` over pairs of normal holomorphic words `(a, b)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DElement {
    terms: BTreeMap<(Word, Word), Coefficient>,
}

impl DElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn f0() -> Self {
        Self::sandwich(Word::empty(), Word::empty())
    }

    /// `a f0 b*` for holomorphic `a`, `b`.
    pub fn sandwich(a: Word, b: Word) -> Self {
        Self::term(Coefficient::one(), a, b)
    }

    pub fn term(c: Coefficient, a: Word, b: Word) -> Self {
        let mut out = Self::zero();
        out.add_term(a, b, &c);
        out
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: &Coefficient) {
        debug_assert!(a.is_holomorphic() && b.is_holomorphic());
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
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

    pub fn add_scaled(&mut self, other: &DElement, c: &Coefficient) {
        for ((a, b), d) in &other.terms {
            self.add_term(a.clone(), b.clone(), &(d * c));
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Coefficient)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(a f0 b*)* = b f0 a*`.
    pub fn dstar(&self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(b.clone(), a.clone(), c);
        }
        out
    }

    /// Collapses `L f0 R` for a holomorphic-side element `L` and a
    /// conjugate-side element `R`: words of `L` ending in a conjugate letter
    /// and words of `R` starting with a holomorphic letter annihilate `f0`.
    pub fn from_sides(left: &Element, right: &Element) -> Self {
        let mut out = Self::zero();
        for (u, c) in left.terms() {
            if !u.is_holomorphic() {
                continue;
            }
            for (v, d) in right.terms() {
                if !v.is_antiholomorphic() {
                    continue;
                }
                out.add_term(u.clone(), v.star(), &(c * d));
            }
        }
        out
    }

    /// `p x`, keeping only the words of `p a` that survive against `f0`.
    pub fn left_mul(&self, pol: &PolAlgebra, p: &Element) -> DElement {
        let mut out = DElement::zero();
        for ((a, b), c) in self.terms() {
            let left = pol.multiply(p, &Element::word(a.clone()));
            out.add_scaled(&DElement::from_sides(&left, &Element::word(b.star())), c);
        }
        out
    }

    /// `x p`, keeping only the words of `b* p` that survive against `f0`.
    pub fn right_mul(&self, pol: &PolAlgebra, p: &Element) -> DElement {
        let mut out = DElement::zero();
        for ((a, b), c) in self.terms() {
            let right = pol.multiply(&Element::word(b.star()), p);
            out.add_scaled(&DElement::from_sides(&Element::word(a.clone()), &right), c);
        }
        out
    }

    /// Product computed directly from the normal form, without cached Gram
    /// matrices.
    pub fn mul(&self, pol: &PolAlgebra, other: &DElement) -> DElement {
        let mut out = DElement::zero();
        for ((a, b), c1) in self.terms() {
            for ((c, d), c2) in other.terms() {
                let v = pol.vacuum_coefficient(&pol.multiply(&Element::word(b.star()), &Element::word(c.clone())));
                out.add_term(a.clone(), d.clone(), &(&v * &(c1 * c2)));
            }
        }
        out
    }
}

impl std::ops::Add for &DElement {
    type Output = DElement;
    fn add(self, rhs: &DElement) -> DElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &Coefficient::one());
        out
    }
}

impl std::ops::Sub for &DElement {
    type Output = DElement;
    fn sub(self, rhs: &DElement) -> DElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Coefficient::one());
        out
    }
}

impl fmt::Display for DElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), c)| {
                let mut s = render_coefficient(c);
                if !a.is_empty() {
                    s.push_str(&format!(" * {}", render_word(a)));
                }
                s.push_str(" * f0");
                if !b.is_empty() {
                    s.push_str(&format!(" * {}", render_word(&b.star())));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize)]
struct DTermJson {
    left: Vec<(String, u8, u8)>,
    right: Vec<(String, u8, u8)>,
    coeff: String,
}

impl DElement {
    /// JSON mirror of the pair map; `right` lists the conjugate word.
    pub fn to_json(&self) -> serde_json::Value {
        let letters = |w: &Word| -> Vec<(String, u8, u8)> {
            w.letters().iter().map(|g| (g.kind.tag().to_string(), g.i, g.j)).collect()
        };
        let v: Vec<DTermJson> = self
            .terms
            .iter()
            .map(|((a, b), c)| DTermJson {
                left: letters(a),
                right: letters(&b.star()),
                coeff: render_coefficient(c),
            })
            .collect();
        serde_json::to_value(v).expect("plain data serializes")
    }
}

/// Exponents of the distinguished group-like element
/// `K = K_1^{c_1} ... K_n^{c_n}` and the resulting total weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KWeightTable {
    pub n: usize,
    pub exponents: Vec<i64>,
    /// `W(z[i,j])`, keyed by `(i, j)`.
    pub weights: BTreeMap<(u8, u8), i64>,
}

impl KWeightTable {
    pub fn new(hopf: &HopfAction<'_>) -> Self {
        let n = hopf.rank() as i64;
        let exponents: Vec<i64> = (1..=n)
            .map(|i| if i < n { i * (2 * n - i + 1) } else { n * (n + 1) / 2 })
            .collect();
        let mut weights = BTreeMap::new();
        for g in hopf.pol().holomorphic_generators() {
            let w: i64 = hopf
                .weight(&[g])
                .iter()
                .zip(&exponents)
                .map(|(a, b)| a * b)
                .sum();
            assert!(w > 0, "K-weight of {g} is {w}, expected positive");
            weights.insert((g.i, g.j), w);
        }
        Self {
            n: n as usize,
            exponents,
            weights,
        }
    }

    /// Total weight of a word; conjugate letters count negatively.
    pub fn weight(&self, w: &[Gen]) -> i64 {
        w.iter()
            .map(|g| {
                let x = self.weights[&(g.i, g.j)];
                if g.is_z() {
                    x
                } else {
                    -x
                }
            })
            .sum()
    }
}

/// The invariant integral and everything it needs: the Fock form for vacuum
/// pairings and the U_q action for the invariance check.
#[derive(Debug)]
pub struct InvariantIntegral<'a> {
    pol: &'a PolAlgebra,
    fock: Fock<'a>,
    hopf: HopfAction<'a>,
    table: KWeightTable,
}

impl<'a> InvariantIntegral<'a> {
    pub fn new(pol: &'a PolAlgebra) -> Self {
        let hopf = HopfAction::new(pol);
        let table = KWeightTable::new(&hopf);
        Self {
            pol,
            fock: Fock::new(pol),
            hopf,
            table,
        }
    }

    pub fn pol(&self) -> &'a PolAlgebra {
        self.pol
    }

    pub fn hopf(&self) -> &HopfAction<'a> {
        &self.hopf
    }

    pub fn fock(&self) -> &Fock<'a> {
        &self.fock
    }

    pub fn weights(&self) -> &KWeightTable {
        &self.table
    }

    /// `<b* c>_0` for normal holomorphic words, read from the Gram matrix.
    pub fn vacuum_pairing(&self, b: &Word, c: &Word) -> Coefficient {
        if b.len() != c.len() {
            return Coefficient::zero();
        }
        let g = self.fock.gram(b.len());
        let r = g.basis.binary_search(b).expect("normal holomorphic word");
        let s = g.basis.binary_search(c).expect("normal holomorphic word");
        g.entries[r][s].clone()
    }

    /// `(a f0 b*)(c f0 d*) = <b* c>_0 a f0 d*`.
    pub fn dmul(&self, x: &DElement, y: &DElement) -> DElement {
        let mut out = DElement::zero();
        for ((a, b), c1) in x.terms() {
            for ((c, d), c2) in y.terms() {
                let v = self.vacuum_pairing(b, c);
                if v.is_zero() {
                    continue;
                }
                out.add_term(a.clone(), d.clone(), &(&v * &(c1 * c2)));
            }
        }
        out
    }

    /// `p x` for a polynomial `p`.
    pub fn left_mul(&self, p: &Element, x: &DElement) -> DElement {
        x.left_mul(self.pol, p)
    }

    /// `x p` for a polynomial `p`.
    pub fn right_mul(&self, x: &DElement, p: &Element) -> DElement {
        x.right_mul(self.pol, p)
    }

    fn zs_nn(&self) -> Element {
        let n = self.pol.rank() as u8;
        Element::word(Word(vec![Gen::zs(n, n)]))
    }

    fn z_nn(&self) -> Element {
        let n = self.pol.rank() as u8;
        Element::word(Word(vec![Gen::z(n, n)]))
    }

    /// One generator on one sandwich, through the coproduct over the three
    /// factors `a`, `f0`, `b*`, with `K f0 = f0`.
    fn act_letter_on_sandwich(&self, l: Letter, a: &Word, b: &Word) -> DElement {
        let n = self.pol.rank();
        let hopf = &self.hopf;
        let k = l.index();
        let aw = Element::word(a.clone());
        let bs = Element::word(b.star());
        let wa = hopf.weight(a.letters())[k - 1];
        let wb = hopf.weight(b.star().letters())[k - 1];
        let one_q4 = Coefficient::one() - Coefficient::q_pow(4);
        match l {
            Letter::K(_) => DElement::from_sides(&aw, &bs).scale(&Coefficient::q_pow(wa + wb)),
            Letter::Kinv(_) => DElement::from_sides(&aw, &bs).scale(&Coefficient::q_pow(-wa - wb)),
            Letter::E(_) => {
                let mut out = DElement::from_sides(&hopf.act_letter(l, &aw), &bs);
                let ka = Coefficient::q_pow(wa);
                if k == n {
                    let c = -Coefficient::q() / one_q4;
                    let left = self.pol.multiply(&aw, &self.z_nn());
                    out.add_scaled(&DElement::from_sides(&left, &bs), &(&c * &ka));
                }
                out.add_scaled(&DElement::from_sides(&aw, &hopf.act_letter(l, &bs)), &ka);
                out
            }
            Letter::F(_) => {
                let kb = Coefficient::q_pow(-wb);
                let mut out = DElement::from_sides(&hopf.act_letter(l, &aw), &bs).scale(&kb);
                if k == n {
                    let c = -Coefficient::q_pow(5) / one_q4;
                    let right = self.pol.multiply(&self.zs_nn(), &bs);
                    out.add_scaled(&DElement::from_sides(&aw, &right), &(&c * &kb));
                }
                out.add_scaled(&DElement::from_sides(&aw, &hopf.act_letter(l, &bs)), &Coefficient::one());
                out
            }
        }
    }

    pub fn act_letter(&self, l: Letter, x: &DElement) -> DElement {
        let mut out = DElement::zero();
        for ((a, b), c) in x.terms() {
            out.add_scaled(&self.act_letter_on_sandwich(l, a, b), c);
        }
        out
    }

    /// `xi . x`, words acting rightmost letter first.
    pub fn act_on_d(&self, xi: &UqExpr, x: &DElement) -> Result<DElement> {
        xi.check(self.pol.rank())?;
        let mut out = DElement::zero();
        for (w, c) in xi.terms() {
            let mut cur = x.clone();
            for &l in w.iter().rev() {
                if cur.is_zero() {
                    break;
                }
                cur = self.act_letter(l, &cur);
            }
            out.add_scaled(&cur, c);
        }
        Ok(out)
    }

    /// `(1-q^4)^{n(n+1)/2} tr(T_F(x) Gamma(K^{-1}))`. The operator of
    /// `a f0 b*` sends `m v0` to `<b* m>_0 a v0`, so only `m = a` contributes
    /// to the trace, with eigenvalue `q^{-W(a)}`.
    pub fn integrate(&self, x: &DElement) -> Coefficient {
        let mut sum = Coefficient::zero();
        for ((a, b), c) in x.terms() {
            let v = self.vacuum_pairing(b, a);
            if v.is_zero() {
                continue;
            }
            sum += &(&(c * &v) * &Coefficient::q_pow(-self.table.weight(a.letters())));
        }
        let norm = (Coefficient::one() - Coefficient::q_pow(4))
            .pow(self.pol.num_generators() as i64)
            .expect("nonzero base");
        sum * norm
    }

    /// `int(xi x) = eps(xi) int(x)` for every generator and battery element.
    pub fn verify_invariance(&self, battery: &[DElement]) -> Report {
        let mut report = Report::new("invariance");
        for &l in &Letter::all(self.pol.rank()) {
            for x in battery {
                let lhs = self.integrate(&self.act_letter(l, x));
                let rhs = &l.counit() * &self.integrate(x);
                report.check(|| format!("{l} on {x}"), &lhs, &rhs, render_coefficient);
            }
        }
        report
    }

    /// `int(x* x) > 0` at `p` for every nonzero battery element.
    pub fn verify_positivity(&self, battery: &[DElement], p: &RationalPoint) -> Result<Report> {
        let mut report = Report::new("positivity");
        for x in battery.iter().filter(|x| !x.is_zero()) {
            report.cases += 1;
            let v = self.integrate(&self.dmul(&x.dstar(), x));
            let value = v.evaluate(p)?;
            if !value.is_positive() {
                report.fail(format!("{x} at {p}"), value.to_string(), "> 0".into());
            }
        }
        Ok(report)
    }

    /// The U_q defining relations as operators on the given sandwiches.
    pub fn verify_uqg_relations(&self, battery: &[DElement]) -> Report {
        let mut report = Report::new("hopf-on-d");
        for r in self.hopf.uqg_relations() {
            for x in battery {
                let lhs = self.act_on_d(&r.lhs, x).expect("indices in range");
                let rhs = self.act_on_d(&r.rhs, x).expect("indices in range");
                report.check(|| format!("{} on {x}", r.name), &lhs, &rhs, ToString::to_string);
            }
        }
        report
    }

    /// Every sandwich `a f0 b*` with `deg a, deg b <= max_degree`.
    pub fn rank_one_sandwiches(&self, max_degree: usize) -> Vec<DElement> {
        let words: Vec<Word> = (0..=max_degree)
            .flat_map(|d| self.pol.holomorphic_basis(d))
            .collect();
        let mut out = Vec::with_capacity(words.len() * words.len());
        for a in &words {
            for b in &words {
                out.push(DElement::sandwich(a.clone(), b.clone()));
            }
        }
        out
    }

    /// `f0`, all rank-one sandwiches of degree at most 2 and `random` seeded
    /// random combinations.
    pub fn standard_battery(&self, seed: u64, random: usize) -> Vec<DElement> {
        let mut out = vec![DElement::f0()];
        out.extend(self.rank_one_sandwiches(2));
        out.extend(crate::battery::random_delements(self.pol, seed, random, 2));
        out
    }
}
