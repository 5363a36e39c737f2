//! Strategy-independence check for the oriented relation set.
//!
//! Every word up to a given length is reduced by plain term rewriting with
//! two redex-selection strategies, and both results are compared with the
//! production normal form.

use std::collections::BTreeMap;

use serde::Serialize;

use super::element::{Element, Word};
use super::{is_normal_pair, Gen, PolAlgebra};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Rewrite the leftmost violating adjacent pair.
    Leftmost,
    /// Rewrite the rightmost violating adjacent pair.
    Rightmost,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfluenceFailure {
    pub word: String,
    pub leftmost: String,
    pub rightmost: String,
    pub production: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfluenceReport {
    pub n: usize,
    pub max_len: usize,
    pub words_checked: usize,
    pub failures: Vec<ConfluenceFailure>,
}

impl ConfluenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

const STEP_LIMIT: usize = 2_000_000;

impl PolAlgebra {
    /// Reduces `w` to normal form by rewriting one redex at a time.
    pub fn rewrite(&self, w: &[Gen], strategy: Strategy) -> Result<Element> {
        let mut pending: BTreeMap<Word, Coefficient> = BTreeMap::new();
        pending.insert(Word(w.to_vec()), Coefficient::one());
        let mut done = Element::zero();
        let mut steps = 0usize;
        while let Some((word, c)) = pending.pop_first() {
            let letters = word.letters();
            let mut redexes = (0..letters.len().saturating_sub(1))
                .filter(|&p| !is_normal_pair(letters[p], letters[p + 1]));
            let pos = match strategy {
                Strategy::Leftmost => redexes.next(),
                Strategy::Rightmost => redexes.next_back(),
            };
            let Some(pos) = pos else {
                done.add_term(word, &c);
                continue;
            };
            steps += 1;
            if steps > STEP_LIMIT {
                return Err(Error::RewriteLimit(STEP_LIMIT));
            }
            let rhs = self
                .rewrite_pair(letters[pos], letters[pos + 1])
                .expect("redex has a rule");
            for (d, t) in rhs {
                let mut v = letters[..pos].to_vec();
                v.extend(t);
                v.extend_from_slice(&letters[pos + 2..]);
                let entry = pending.entry(Word(v)).or_insert_with(Coefficient::zero);
                *entry += &(&c * &d);
            }
            pending.retain(|_, v| !v.is_zero());
        }
        Ok(done)
    }

    /// Checks that leftmost, rightmost and production reduction agree on every
    /// word of length at most `max_len` over the full alphabet.
    pub fn verify_confluence(&self, max_len: usize) -> ConfluenceReport {
        let gens = self.generators();
        let mut failures = Vec::new();
        let mut words_checked = 0;
        let mut frontier: Vec<Vec<Gen>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(frontier.len() * gens.len());
            for w in &frontier {
                for &g in &gens {
                    let mut v = w.clone();
                    v.push(g);
                    next.push(v);
                }
            }
            for w in &next {
                words_checked += 1;
                let left = self.rewrite(w, Strategy::Leftmost);
                let right = self.rewrite(w, Strategy::Rightmost);
                let prod = self.normal_form_word(w);
                let agree = matches!((&left, &right), (Ok(l), Ok(r)) if *l == prod && *r == prod);
                if !agree {
                    let show = |r: &Result<Element>| match r {
                        Ok(e) => crate::text::render_element(e),
                        Err(err) => err.to_string(),
                    };
                    failures.push(ConfluenceFailure {
                        word: w.iter().map(ToString::to_string).collect(),
                        leftmost: show(&left),
                        rightmost: show(&right),
                        production: crate::text::render_element(&prod),
                    });
                }
            }
            frontier = next;
        }
        ConfluenceReport {
            n: self.rank(),
            max_len,
            words_checked,
            failures,
        }
    }
}

impl From<ConfluenceReport> for crate::report::Report {
    fn from(r: ConfluenceReport) -> Self {
        let mut out = crate::report::Report::new("confluence");
        out.cases = r.words_checked;
        for f in r.failures {
            out.fail(f.word, f.leftmost, format!("{} (production: {})", f.rightmost, f.production));
        }
        out
    }
}
