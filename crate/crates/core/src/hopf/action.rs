use std::collections::HashMap;
use std::sync::Mutex;

use super::{CartanData, Letter, UqExpr};
use crate::algebra::{Element, Gen, Kind, PolAlgebra, Word};
use crate::coeff::Coefficient;
use crate::error::Result;

type Terms = Vec<(Coefficient, Vec<Gen>)>;

/// The module-algebra action of U_q(sp_2n) on the polynomial *-algebra.
///
/// Generators act on `z[i,j]` by the explicit tables, on products through the
/// coproduct, and on `zs[i,j]` through `xi(f*) = (S(xi)* f)*`.
#[derive(Debug)]
pub struct HopfAction<'a> {
    pol: &'a PolAlgebra,
    cartan: CartanData,
    cache: Mutex<HashMap<(Letter, Word), Element>>,
}

impl<'a> HopfAction<'a> {
    pub fn new(pol: &'a PolAlgebra) -> Self {
        Self {
            pol,
            cartan: CartanData::new(pol.rank()).expect("rank checked by PolAlgebra"),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn pol(&self) -> &'a PolAlgebra {
        self.pol
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.pol.rank()
    }

    /// `K_k g = q^e g`; returns `e`. Conjugate letters carry the opposite weight.
    pub fn k_exponent(&self, k: usize, g: Gen) -> i64 {
        let n = self.rank();
        let (i, j) = g.index();
        let e = if k < n {
            if i == j && i == k {
                2
            } else if i == j && i == k + 1 {
                -2
            } else if (i == k && i > j) || (i > k + 1 && k == j) {
                1
            } else if (i == k + 1 && k > j) || (i > k + 1 && k + 1 == j) {
                -1
            } else {
                0
            }
        } else if i == n && j == n {
            4
        } else if i == n {
            2
        } else {
            0
        };
        match g.kind {
            Kind::Z => e,
            Kind::ZStar => -e,
        }
    }

    /// Weight vector of a word: `K_i m = q^{w_i} m`.
    pub fn weight(&self, w: &[Gen]) -> Vec<i64> {
        (1..=self.rank())
            .map(|k| w.iter().map(|&g| self.k_exponent(k, g)).sum())
            .collect()
    }

    /// `S(xi)*` for a single generator.
    pub fn antipode_star_letter(&self, l: Letter) -> (Coefficient, Letter) {
        let i = l.index();
        let d = self.cartan.d(i);
        // sigma_i = 1 for i < n and -1 for i = n
        let sign = if i == self.rank() { 1 } else { -1 };
        match l {
            Letter::E(k) => (Coefficient::q_pow(-2 * d) * Coefficient::from_int(sign), Letter::F(k)),
            Letter::F(k) => (Coefficient::q_pow(2 * d) * Coefficient::from_int(sign), Letter::E(k)),
            Letter::K(k) => (Coefficient::one(), Letter::Kinv(k)),
            Letter::Kinv(k) => (Coefficient::one(), Letter::K(k)),
        }
    }

    /// `S(xi)*`, a homomorphism on words since both maps reverse products.
    pub fn antipode_star(&self, xi: &UqExpr) -> UqExpr {
        let mut out = UqExpr::zero();
        for (w, c) in xi.terms() {
            let mut coeff = c.clone();
            let mut word = Vec::with_capacity(w.len());
            for &l in w {
                let (d, m) = self.antipode_star_letter(l);
                coeff *= &d;
                word.push(m);
            }
            out.add_term(word, &coeff);
        }
        out
    }

    /// Action of one generator on one letter `z[i,j]` or `zs[i,j]`, as a free
    /// linear combination of words.
    pub fn act_on_gen(&self, l: Letter, g: Gen) -> Terms {
        if g.kind == Kind::ZStar {
            let (c, m) = self.antipode_star_letter(l);
            return self
                .act_on_gen(m, g.star())
                .into_iter()
                .map(|(d, w)| (&c * &d, w.iter().rev().map(|x| x.star()).collect()))
                .collect();
        }
        let n = self.rank();
        let (i, j) = g.index();
        let z = |a: usize, b: usize| Gen::z(a as u8, b as u8);
        let two = || Coefficient::q_poly(&[1, 0, 1]) * Coefficient::q_pow(-1);
        match l {
            Letter::K(k) => vec![(Coefficient::q_pow(self.k_exponent(k as usize, g)), vec![g])],
            Letter::Kinv(k) => vec![(Coefficient::q_pow(-self.k_exponent(k as usize, g)), vec![g])],
            Letter::E(k) if (k as usize) < n => {
                let k = k as usize;
                let pre = Coefficient::s_pow(-1);
                if i == j && i == k + 1 {
                    vec![(pre * two(), vec![z(i, j - 1)])]
                } else if i == k + 1 && k + 1 > j {
                    vec![(pre, vec![z(i - 1, j)])]
                } else if i > k + 1 && k + 1 == j {
                    vec![(pre, vec![z(i, j - 1)])]
                } else {
                    Vec::new()
                }
            }
            Letter::F(k) if (k as usize) < n => {
                let k = k as usize;
                let pre = Coefficient::s();
                if i == j && i == k {
                    vec![(pre * two(), vec![z(i + 1, j)])]
                } else if i == k && k > j {
                    vec![(pre, vec![z(i + 1, j)])]
                } else if i > k && k == j {
                    vec![(pre, vec![z(i, j + 1)])]
                } else {
                    Vec::new()
                }
            }
            Letter::E(_) => {
                if i == n {
                    vec![(-Coefficient::q(), vec![z(n, n), g])]
                } else {
                    vec![(-Coefficient::one(), vec![z(n, i), z(n, j)])]
                }
            }
            Letter::F(_) => {
                if i == n && j == n {
                    vec![(Coefficient::q(), Vec::new())]
                } else {
                    Vec::new()
                }
            }
        }
    }

    /// Tabulated action of a generator on a single generator, normalized.
    pub fn act_generator(&self, l: Letter, g: Gen) -> Element {
        let mut out = Element::zero();
        for (c, w) in self.act_on_gen(l, g) {
            out.add_scaled(&self.pol.normal_form_word(&w), &c);
        }
        out
    }

    /// Action of one generator on an arbitrary (not necessarily normal) word,
    /// expanded through the coproduct and normalized.
    pub fn act_letter_on_word(&self, l: Letter, w: &[Gen]) -> Element {
        let pol = self.pol;
        match l {
            Letter::K(k) | Letter::Kinv(k) => {
                let e: i64 = w.iter().map(|&g| self.k_exponent(k as usize, g)).sum();
                let e = if matches!(l, Letter::K(_)) { e } else { -e };
                pol.normal_form_word(w).scale(&Coefficient::q_pow(e))
            }
            Letter::E(k) | Letter::F(k) => {
                let k = k as usize;
                let mut out = Element::zero();
                for p in 0..w.len() {
                    // E: K_k on the prefix; F: K_k^{-1} on the suffix
                    let e: i64 = if matches!(l, Letter::E(_)) {
                        w[..p].iter().map(|&g| self.k_exponent(k, g)).sum()
                    } else {
                        -w[p + 1..].iter().map(|&g| self.k_exponent(k, g)).sum::<i64>()
                    };
                    let terms = self.act_on_gen(l, w[p]);
                    if terms.is_empty() {
                        continue;
                    }
                    let prefix = pol.normal_form_word(&w[..p]);
                    let scale = Coefficient::q_pow(e);
                    for (c, t) in terms {
                        let mid = pol.mul_word(&prefix, &t);
                        let full = pol.mul_word(&mid, &w[p + 1..]);
                        out.add_scaled(&full, &(&c * &scale));
                    }
                }
                out
            }
        }
    }

    fn act_letter_on_normal(&self, l: Letter, w: &Word) -> Element {
        let key = (l, w.clone());
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let out = self.act_letter_on_word(l, w.letters());
        self.cache.lock().unwrap().insert(key, out.clone());
        out
    }

    pub fn act_letter(&self, l: Letter, e: &Element) -> Element {
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            out.add_scaled(&self.act_letter_on_normal(l, w), c);
        }
        out
    }

    /// `xi . e`; each word acts by composition, its rightmost letter first.
    pub fn act(&self, xi: &UqExpr, e: &Element) -> Result<Element> {
        xi.check(self.rank())?;
        let mut out = Element::zero();
        for (w, c) in xi.terms() {
            let mut cur = e.clone();
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
}
