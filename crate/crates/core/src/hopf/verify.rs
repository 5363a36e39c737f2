use super::{HopfAction, Letter, UqExpr};
use crate::algebra::{Element, Word};
use crate::coeff::Coefficient;
use crate::report::Report;
use crate::text::render_element;

/// Symmetric quantum integer `[m]_t` with `t = q^d`.
fn qint(m: i64, d: i64) -> Coefficient {
    let num = Coefficient::q_pow(m * d) - Coefficient::q_pow(-m * d);
    let den = Coefficient::q_pow(d) - Coefficient::q_pow(-d);
    num / den
}

fn qfact(m: i64, d: i64) -> Coefficient {
    (1..=m).fold(Coefficient::one(), |acc, k| acc * qint(k, d))
}

/// Gaussian binomial in `t = q^d`.
pub fn qbinom(m: i64, r: i64, d: i64) -> Coefficient {
    qfact(m, d) / (qfact(r, d) * qfact(m - r, d))
}

/// A named relation `lhs = rhs` in U_q.
pub struct UqRelation {
    pub name: String,
    pub lhs: UqExpr,
    pub rhs: UqExpr,
}

impl HopfAction<'_> {
    /// Defining relations of U_q(sp_2n), including the quantum Serre relations.
    pub fn uqg_relations(&self) -> Vec<UqRelation> {
        let n = self.rank();
        let c = self.cartan();
        let l = |x: Letter| UqExpr::letter(x);
        let mut out = Vec::new();
        let mut rel = |name: String, lhs: UqExpr, rhs: UqExpr| out.push(UqRelation { name, lhs, rhs });
        for i in 1..=n as u8 {
            rel(format!("K[{i}]Kinv[{i}] = 1"), l(Letter::K(i)).mul(&l(Letter::Kinv(i))), UqExpr::one());
            rel(format!("Kinv[{i}]K[{i}] = 1"), l(Letter::Kinv(i)).mul(&l(Letter::K(i))), UqExpr::one());
        }
        for i in 1..=n as u8 {
            for j in 1..=n as u8 {
                let (iu, ju) = (i as usize, j as usize);
                if i < j {
                    rel(
                        format!("K[{i}]K[{j}] = K[{j}]K[{i}]"),
                        l(Letter::K(i)).mul(&l(Letter::K(j))),
                        l(Letter::K(j)).mul(&l(Letter::K(i))),
                    );
                }
                let e = c.d(iu) * c.a(iu, ju);
                rel(
                    format!("K[{i}]E[{j}] = q^{e} E[{j}]K[{i}]"),
                    l(Letter::K(i)).mul(&l(Letter::E(j))),
                    l(Letter::E(j)).mul(&l(Letter::K(i))).scale(&Coefficient::q_pow(e)),
                );
                rel(
                    format!("K[{i}]F[{j}] = q^{} F[{j}]K[{i}]", -e),
                    l(Letter::K(i)).mul(&l(Letter::F(j))),
                    l(Letter::F(j)).mul(&l(Letter::K(i))).scale(&Coefficient::q_pow(-e)),
                );
                let comm = l(Letter::E(i))
                    .mul(&l(Letter::F(j)))
                    .sub(&l(Letter::F(j)).mul(&l(Letter::E(i))));
                let rhs = if i == j {
                    let d = c.d(iu);
                    let den = Coefficient::q_pow(d) - Coefficient::q_pow(-d);
                    l(Letter::K(i))
                        .sub(&l(Letter::Kinv(i)))
                        .scale(&(Coefficient::one() / den))
                } else {
                    UqExpr::zero()
                };
                rel(format!("E[{i}]F[{j}] - F[{j}]E[{i}]"), comm, rhs);
                if i != j && c.a(iu, ju) != 0 {
                    let m = 1 - c.a(iu, ju);
                    let d = c.d(iu);
                    for (tag, xi, xj) in [
                        ("E", Letter::E(i), Letter::E(j)),
                        ("F", Letter::F(i), Letter::F(j)),
                    ] {
                        let mut serre = UqExpr::zero();
                        for r in 0..=m {
                            let sign = if r % 2 == 0 { 1 } else { -1 };
                            let term = l(xi)
                                .pow((m - r) as usize)
                                .mul(&l(xj))
                                .mul(&l(xi).pow(r as usize))
                                .scale(&(qbinom(m, r, d) * Coefficient::from_int(sign)));
                            serre = serre.add(&term);
                        }
                        rel(format!("Serre {tag}[{i}],{tag}[{j}]"), serre, UqExpr::zero());
                    }
                }
            }
        }
        out
    }

    /// Checks every defining relation of U_q as an operator identity on all
    /// normal words of total degree at most `max_degree`.
    pub fn verify_uqg_relations(&self, max_degree: usize) -> Report {
        let mut report = Report::new("hopf");
        let words = self.pol().normal_words_up_to(max_degree);
        for r in self.uqg_relations() {
            for w in &words {
                let e = Element::word(w.clone());
                let lhs = self.act(&r.lhs, &e).expect("indices in range");
                let rhs = self.act(&r.rhs, &e).expect("indices in range");
                report.check(
                    || format!("{} on {}", r.name, crate::text::render_word(w)),
                    &lhs,
                    &rhs,
                    render_element,
                );
            }
        }
        report
    }

    /// Every generator applied to both sides of every straightening relation,
    /// plus `xi(1) = eps(xi)`.
    pub fn verify_module_algebra(&self) -> Report {
        let mut report = Report::new("module-algebra");
        let pol = self.pol();
        let gens = pol.generators();
        let letters = Letter::all(self.rank());
        for &l in &letters {
            let unit = self.act_letter(l, &Element::one());
            report.check(
                || format!("{l} on 1"),
                &unit,
                &Element::scalar(l.counit()),
                render_element,
            );
        }
        for &a in &gens {
            for &b in &gens {
                let Some(rhs) = pol.rewrite_pair(a, b) else {
                    continue;
                };
                for &l in &letters {
                    let left = self.act_letter_on_word(l, &[a, b]);
                    let mut right = Element::zero();
                    for (c, t) in &rhs {
                        right.add_scaled(&self.act_letter_on_word(l, t), c);
                    }
                    report.check(|| format!("{l} on {a}{b} - rhs"), &left, &right, render_element);
                }
            }
        }
        report
    }

    /// `(xi f)* = S(xi)* f*` for every generator and every `f` given.
    pub fn verify_star_compatibility(&self, battery: &[Element]) -> Report {
        let mut report = Report::new("involution");
        let pol = self.pol();
        for &l in &Letter::all(self.rank()) {
            let xi = UqExpr::letter(l);
            let sx = self.antipode_star(&xi);
            for f in battery {
                let lhs = pol.involution(&self.act(&xi, f).expect("indices in range"));
                let rhs = self.act(&sx, &pol.involution(f)).expect("indices in range");
                report.check(|| format!("{l} on {}", render_element(f)), &lhs, &rhs, render_element);
            }
        }
        report
    }

    /// `xi(ab)` against the explicit coproduct expansion over the factors.
    pub fn verify_coproduct(&self, pairs: &[(Element, Element)]) -> Report {
        let mut report = Report::new("coproduct");
        let pol = self.pol();
        for &l in &Letter::all(self.rank()) {
            let k = l.index() as u8;
            let one = |x: Letter| UqExpr::letter(x);
            for (a, b) in pairs {
                let lhs = self.act_letter(l, &pol.multiply(a, b));
                let act = |x: Letter, e: &Element| self.act(&one(x), e).expect("indices in range");
                let rhs = match l {
                    Letter::E(_) => &pol.multiply(&act(l, a), b) + &pol.multiply(&act(Letter::K(k), a), &act(l, b)),
                    Letter::F(_) => &pol.multiply(&act(l, a), &act(Letter::Kinv(k), b)) + &pol.multiply(a, &act(l, b)),
                    _ => pol.multiply(&act(l, a), &act(l, b)),
                };
                report.check(
                    || format!("{l} on ({}) ({})", render_element(a), render_element(b)),
                    &lhs,
                    &rhs,
                    render_element,
                );
            }
        }
        report
    }

    /// `K_i m = q^{w_i(m)} m` on the given words.
    pub fn verify_diagonal(&self, words: &[Word]) -> Report {
        let mut report = Report::new("weights");
        for w in words {
            let e = Element::word(w.clone());
            let wt = self.weight(w.letters());
            for (idx, &x) in wt.iter().enumerate() {
                let lhs = self.act_letter(Letter::K(idx as u8 + 1), &e);
                let rhs = e.scale(&Coefficient::q_pow(x));
                report.check(|| format!("K[{}] on {}", idx + 1, crate::text::render_word(w)), &lhs, &rhs, render_element);
            }
        }
        report
    }
}
