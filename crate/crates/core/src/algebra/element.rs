use std::cmp::Ordering;
use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, Neg, Sub};

use super::{Gen, Kind};
use crate::coeff::Coefficient;

/// A word in the generators, ordered by length and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(number of z letters, number of zs letters)`.
    pub fn bidegree(&self) -> (usize, usize) {
        let dz = self.0.iter().filter(|g| g.kind == Kind::Z).count();
        (dz, self.0.len() - dz)
    }

    /// `d_z - d_zs`.
    pub fn charge(&self) -> isize {
        let (a, b) = self.bidegree();
        a as isize - b as isize
    }

    pub fn is_holomorphic(&self) -> bool {
        self.0.iter().all(|g| g.kind == Kind::Z)
    }

    pub fn is_antiholomorphic(&self) -> bool {
        self.0.iter().all(|g| g.kind == Kind::ZStar)
    }

    /// Reverses the word and swaps `z` with `zs`.
    pub fn star(&self) -> Self {
        Self(self.0.iter().rev().map(|g| g.star()).collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl From<Vec<Gen>> for Word {
    fn from(v: Vec<Gen>) -> Self {
        Self(v)
    }
}

/// A finite linear combination of normal words. No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<Word, Coefficient>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Coefficient::one())
    }

    pub fn scalar(c: Coefficient) -> Self {
        Self::term(c, Word::empty())
    }

    /// Wraps a single word; callers are responsible for its normality.
    pub fn word(w: Word) -> Self {
        Self::term(Coefficient::one(), w)
    }

    pub fn term(c: Coefficient, w: Word) -> Self {
        let mut e = Self::zero();
        e.add_term(w, &c);
        e
    }

    pub fn add_term(&mut self, w: Word, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Element, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), &(d * c));
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Element {
        let mut out = Element::zero();
        out.add_scaled(self, c);
        out
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Coefficient {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Keeps only the terms whose word satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Word) -> bool) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coefficients(&self, mut f: impl FnMut(&Coefficient) -> Coefficient) -> Element {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c));
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &Coefficient::one());
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &Coefficient::from_int(-1));
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&Coefficient::from_int(-1))
    }
}

impl FromIterator<(Word, Coefficient)> for Element {
    fn from_iter<T: IntoIterator<Item = (Word, Coefficient)>>(iter: T) -> Self {
        let mut e = Element::zero();
        for (w, c) in iter {
            e.add_term(w, &c);
        }
        e
    }
}

/// A linear combination of arbitrary (not necessarily normal) words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeExpr {
    pub terms: Vec<(Coefficient, Vec<Gen>)>,
}

impl FreeExpr {
    pub fn word(w: Vec<Gen>) -> Self {
        Self {
            terms: vec![(Coefficient::one(), w)],
        }
    }

    pub fn push(&mut self, c: Coefficient, w: Vec<Gen>) {
        self.terms.push((c, w));
    }
}
