//! The Fock representation `H = C[p^-]_q v0` with `zs[i,j] v0 = 0`, its
//! sesquilinear form and Gram matrices.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{Element, PolAlgebra, Word};
use crate::coeff::{Coefficient, RationalPoint};
use crate::error::{Error, Result};
use crate::linalg;
use crate::report::Report;
use crate::text::{render_coefficient, render_element, render_word};

/// A holomorphic element `f`, standing for `f v0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector(Element);

impl FockVector {
    pub fn vacuum() -> Self {
        Self(Element::one())
    }

    pub fn new(e: Element) -> Result<Self> {
        if e.terms().all(|(w, _)| w.is_holomorphic()) {
            Ok(Self(e))
        } else {
            Err(Error::Type(format!(
                "Fock vectors are holomorphic, got {}",
                render_element(&e)
            )))
        }
    }

    pub fn word(w: Word) -> Result<Self> {
        Self::new(Element::word(w))
    }

    pub fn element(&self) -> &Element {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    pub n: usize,
    pub d: usize,
    pub basis: Vec<Word>,
    pub entries: Vec<Vec<Coefficient>>,
}

#[derive(Serialize)]
struct GramJson {
    n: usize,
    d: usize,
    basis: Vec<Vec<(String, u8, u8)>>,
    entries: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    values: Option<Vec<Vec<String>>>,
}

impl GramMatrix {
    pub fn evaluate(&self, p: &RationalPoint) -> Result<Vec<Vec<BigRational>>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|c| c.evaluate(p)).collect())
            .collect()
    }

    /// JSON export; with a point, exact values are included as well.
    pub fn to_json(&self, p: Option<&RationalPoint>) -> Result<serde_json::Value> {
        let values = match p {
            Some(p) => Some(
                self.evaluate(p)?
                    .iter()
                    .map(|r| r.iter().map(ToString::to_string).collect())
                    .collect(),
            ),
            None => None,
        };
        let g = GramJson {
            n: self.n,
            d: self.d,
            basis: self
                .basis
                .iter()
                .map(|w| w.letters().iter().map(|g| (g.kind.tag().to_string(), g.i, g.j)).collect())
                .collect(),
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(render_coefficient).collect())
                .collect(),
            q: p.map(ToString::to_string),
            values,
        };
        Ok(serde_json::to_value(g).expect("plain data serializes"))
    }

    /// Exact values at `p` as CSV, one row per line.
    pub fn to_csv(&self, p: &RationalPoint) -> Result<String> {
        let mut out = String::new();
        for row in self.evaluate(p)? {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        let mut out = format!("basis: {}\n", self.basis.iter().map(|w| {
            if w.is_empty() { "1".to_string() } else { render_word(w) }
        }).collect::<Vec<_>>().join(", "));
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(render_coefficient).collect();
            out.push_str(&format!("[{}]\n", cells.join(", ")));
        }
        out
    }
}

/// Exact positive definiteness at `p` by leading principal minors.
pub fn check_positive_definite(g: &GramMatrix, p: &RationalPoint) -> Result<bool> {
    Ok(linalg::is_positive_definite(g.evaluate(p)?))
}

#[derive(Debug)]
pub struct Fock<'a> {
    pol: &'a PolAlgebra,
    grams: Mutex<HashMap<usize, GramMatrix>>,
}

impl<'a> Fock<'a> {
    pub fn new(pol: &'a PolAlgebra) -> Self {
        Self {
            pol,
            grams: Mutex::new(HashMap::new()),
        }
    }

    pub fn pol(&self) -> &'a PolAlgebra {
        self.pol
    }

    /// `T_F(f) v`: multiply, then drop every word that still carries a
    /// conjugate letter (those annihilate `v0`).
    pub fn apply(&self, f: &Element, v: &FockVector) -> FockVector {
        let prod = self.pol.multiply(f, &v.0);
        FockVector(prod.filter(Word::is_holomorphic))
    }

    /// `(f v0, g v0) = <f* g>_0`.
    pub fn pairing(&self, v: &FockVector, w: &FockVector) -> Coefficient {
        let lhs = self.pol.involution(&v.0);
        self.pol.vacuum_coefficient(&self.pol.multiply(&lhs, &w.0))
    }

    pub fn gram(&self, d: usize) -> GramMatrix {
        if let Some(g) = self.grams.lock().unwrap().get(&d) {
            return g.clone();
        }
        let basis = self.pol.holomorphic_basis(d);
        let vecs: Vec<FockVector> = basis.iter().map(|w| FockVector(Element::word(w.clone()))).collect();
        let mut entries = vec![vec![Coefficient::zero(); basis.len()]; basis.len()];
        for r in 0..basis.len() {
            for c in r..basis.len() {
                let x = self.pairing(&vecs[r], &vecs[c]);
                entries[c][r] = x.clone();
                entries[r][c] = x;
            }
        }
        let g = GramMatrix {
            n: self.pol.rank(),
            d,
            basis,
            entries,
        };
        self.grams.lock().unwrap().insert(d, g.clone());
        g
    }

    /// `(f v, w) = (v, f* w)` for every `f` in the battery and basis vectors
    /// `v`, `w` of degree at most `max_degree`.
    pub fn verify_adjointness(&self, battery: &[Element], max_degree: usize) -> Report {
        let mut report = Report::new("adjointness");
        let basis: Vec<FockVector> = (0..=max_degree)
            .flat_map(|d| self.pol.holomorphic_basis(d))
            .map(|w| FockVector(Element::word(w)))
            .collect();
        for f in battery {
            let fs = self.pol.involution(f);
            for v in &basis {
                let fv = self.apply(f, v);
                for w in &basis {
                    let lhs = self.pairing(&fv, w);
                    let rhs = self.pairing(v, &self.apply(&fs, w));
                    report.check(
                        || format!("f = {}, v = {}, w = {}", render_element(f), render_element(&v.0), render_element(&w.0)),
                        &lhs,
                        &rhs,
                        render_coefficient,
                    );
                }
            }
        }
        report
    }

    /// Gram matrices of degree `0..=max_degree` positive definite at `p`.
    pub fn verify_positivity(&self, max_degree: usize, p: &RationalPoint) -> Result<Report> {
        let mut report = Report::new("positivity");
        for d in 0..=max_degree {
            report.cases += 1;
            let g = self.gram(d);
            if !check_positive_definite(&g, p)? {
                let piv = linalg::ldl_pivots(g.evaluate(p)?);
                report.fail(
                    format!("gram(n={}, d={d}) at {p}", self.pol.rank()),
                    format!("pivots {}", piv.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")),
                    "all pivots > 0".into(),
                );
            }
        }
        Ok(report)
    }

    /// Row of coefficients of `T_F(f)` restricted to holomorphic degrees
    /// `0..=max_degree`, evaluated at `p`, over the given column index.
    fn operator_entries(
        &self,
        f: &Element,
        max_degree: usize,
        p: &RationalPoint,
    ) -> Result<BTreeMap<(Word, Word), BigRational>> {
        let mut out = BTreeMap::new();
        for d in 0..=max_degree {
            for b in self.pol.holomorphic_basis(d) {
                let img = self.apply(f, &FockVector(Element::word(b.clone())));
                for (w, c) in img.0.terms() {
                    let v = c.evaluate(p)?;
                    if !v.is_zero() {
                        out.insert((b.clone(), w.clone()), v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Finite shadow of faithfulness: the operators of all normal words of
    /// degree at most `word_degree`, restricted to vectors of degree at most
    /// `max_degree`, are linearly independent (rank at `p` equals count).
    pub fn check_faithfulness(&self, word_degree: usize, max_degree: usize, p: &RationalPoint) -> Result<bool> {
        let words = self.pol.normal_words_up_to(word_degree);
        let mut maps = Vec::with_capacity(words.len());
        let mut columns: BTreeMap<(Word, Word), usize> = BTreeMap::new();
        for w in &words {
            let m = self.operator_entries(&Element::word(w.clone()), max_degree, p)?;
            for k in m.keys() {
                let next = columns.len();
                columns.entry(k.clone()).or_insert(next);
            }
            maps.push(m);
        }
        let rows: Vec<Vec<BigRational>> = maps
            .into_iter()
            .map(|m| {
                let mut row = vec![BigRational::zero(); columns.len()];
                for (k, v) in m {
                    row[columns[&k]] = v;
                }
                row
            })
            .collect();
        Ok(linalg::rank(rows) == words.len())
    }

    /// Finite shadow of irreducibility up to `max_degree`: each graded piece
    /// is spanned by creation from `v0`, and the annihilators have trivial
    /// joint kernel on every piece of positive degree.
    pub fn check_irreducibility(&self, max_degree: usize, p: &RationalPoint) -> Result<bool> {
        let zs: Vec<Element> = self
            .pol
            .holomorphic_generators()
            .into_iter()
            .map(|g| Element::word(Word(vec![g.star()])))
            .collect();
        for d in 0..=max_degree {
            let basis = self.pol.holomorphic_basis(d);
            let index: HashMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
            let mut created = Vec::new();
            for m in &basis {
                let v = self.apply(&Element::word(m.clone()), &FockVector::vacuum());
                let mut row = vec![BigRational::zero(); basis.len()];
                for (w, c) in v.0.terms() {
                    row[index[w]] = c.evaluate(p)?;
                }
                created.push(row);
            }
            if linalg::rank(created) != basis.len() {
                return Ok(false);
            }
            if d == 0 {
                continue;
            }
            // stacked annihilation matrix: columns are basis vectors of degree d
            let lower = self.pol.holomorphic_basis(d - 1);
            let lower_index: HashMap<&Word, usize> = lower.iter().enumerate().map(|(i, w)| (w, i)).collect();
            let mut rows = vec![vec![BigRational::zero(); basis.len()]; lower.len() * zs.len()];
            for (col, b) in basis.iter().enumerate() {
                let v = FockVector(Element::word(b.clone()));
                for (a, op) in zs.iter().enumerate() {
                    for (w, c) in self.apply(op, &v).0.terms() {
                        rows[a * lower.len() + lower_index[w]][col] = c.evaluate(p)?;
                    }
                }
            }
            if linalg::rank(rows) != basis.len() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
