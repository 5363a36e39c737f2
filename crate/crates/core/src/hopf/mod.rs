//! U_q(sp_2n) as symbolic operators on the polynomial *-algebra.

mod action;
mod verify;

pub use action::HopfAction;
pub use verify::{qbinom, UqRelation};

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};

/// One of the Chevalley generators `E[i]`, `F[i]`, `K[i]`, `Kinv[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    E(u8),
    F(u8),
    K(u8),
    Kinv(u8),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::E(i) | Letter::F(i) | Letter::K(i) | Letter::Kinv(i) => i as usize,
        }
    }

    /// All `4n` generators, grouped by index.
    pub fn all(n: usize) -> Vec<Letter> {
        (1..=n as u8)
            .flat_map(|i| [Letter::E(i), Letter::F(i), Letter::K(i), Letter::Kinv(i)])
            .collect()
    }

    pub fn counit(self) -> Coefficient {
        match self {
            Letter::E(_) | Letter::F(_) => Coefficient::zero(),
            Letter::K(_) | Letter::Kinv(_) => Coefficient::one(),
        }
    }

    pub(crate) fn check(self, n: usize) -> Result<()> {
        let i = self.index();
        if i == 0 || i > n {
            return Err(Error::BadUqIndex { i, n });
        }
        Ok(())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::E(i) => write!(f, "E[{i}]"),
            Letter::F(i) => write!(f, "F[{i}]"),
            Letter::K(i) => write!(f, "K[{i}]"),
            Letter::Kinv(i) => write!(f, "Kinv[{i}]"),
        }
    }
}

/// A linear combination of words in the generators of U_q. Words are not
/// normalized; they act by composition, rightmost letter first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UqExpr {
    terms: BTreeMap<Vec<Letter>, Coefficient>,
}

impl UqExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Coefficient::one())
    }

    pub fn scalar(c: Coefficient) -> Self {
        Self::term(c, Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Self::term(Coefficient::one(), vec![l])
    }

    pub fn word(w: Vec<Letter>) -> Self {
        Self::term(Coefficient::one(), w)
    }

    pub fn term(c: Coefficient, w: Vec<Letter>) -> Self {
        let mut out = Self::zero();
        out.add_term(w, &c);
        out
    }

    pub fn add_term(&mut self, w: Vec<Letter>, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Letter>, &Coefficient)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        let mut out = Self::zero();
        for (w, d) in &self.terms {
            out.add_term(w.clone(), &(d * c));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Coefficient::one()))
    }

    /// Product in U_q: concatenation of words.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, &(c * d));
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// `eps` extended multiplicatively to words.
    pub fn counit(&self) -> Coefficient {
        let mut out = Coefficient::zero();
        for (w, c) in &self.terms {
            if w.iter().all(|l| matches!(l, Letter::K(_) | Letter::Kinv(_))) {
                out += c;
            }
        }
        out
    }

    pub fn max_index(&self) -> usize {
        self.terms
            .keys()
            .flatten()
            .map(|l| l.index())
            .max()
            .unwrap_or(0)
    }

    pub fn check(&self, n: usize) -> Result<()> {
        self.terms.keys().flatten().try_for_each(|l| l.check(n))
    }
}

impl From<Letter> for UqExpr {
    fn from(l: Letter) -> Self {
        Self::letter(l)
    }
}

impl fmt::Display for UqExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                if w.is_empty() {
                    c.to_string()
                } else {
                    let word: String = w.iter().map(ToString::to_string).collect();
                    format!("{c} * {word}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Cartan matrix and symmetrizers of type C_n, with the long root last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    pub n: usize,
    pub a: Vec<Vec<i64>>,
    pub d: Vec<i64>,
}

impl CartanData {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadRank(n));
        }
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            if i + 1 < n {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        a[n - 2][n - 1] = -2;
        let mut d = vec![1i64; n];
        d[n - 1] = 2;
        Ok(Self { n, a, d })
    }

    /// Entry `a_{ij}` with 1-based indices.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i - 1][j - 1]
    }

    pub fn d(&self, i: usize) -> i64 {
        self.d[i - 1]
    }
}
