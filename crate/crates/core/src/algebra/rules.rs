//! Oriented straightening rules.
//!
//! * `z z` pairs: the eleven commutation relations of the holomorphic algebra.
//! * `zs z` pairs: the eight Wick rows of the *-algebra, together with their
//!   images under the involution for pairs the rows do not cover directly.
//! * `zs zs` pairs: involution images of the eleven holomorphic relations.

use std::fmt;

use super::{is_normal_pair, Gen, Kind};
use crate::coeff::Coefficient;

/// A right-hand-side term: coefficient times a word of length 0 or 2.
pub(crate) type Term = (Coefficient, Vec<Gen>);

/// Side conditions of the Wick rows for `zs[i,j] z[k,l]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrossRow {
    /// `j != k,l` and `i != k,l`: the generators commute.
    Commute,
    /// `i=k>j>l`
    IkJL,
    /// `i>k=j>l`
    IKjL,
    /// `i>k>j=l`
    IKJl,
    /// `i>j=k=l`
    IJkl,
    /// `i=j=k>l`
    IjkL,
    /// `i=k>j=l`
    IkJl,
    /// `i=j=k=l`
    Ijkl,
}

impl CrossRow {
    pub const ALL: [CrossRow; 8] = [
        CrossRow::Commute,
        CrossRow::IkJL,
        CrossRow::IKjL,
        CrossRow::IKJl,
        CrossRow::IJkl,
        CrossRow::IjkL,
        CrossRow::IkJl,
        CrossRow::Ijkl,
    ];

    pub fn pattern(self) -> &'static str {
        match self {
            CrossRow::Commute => "j!=k,l & i!=k,l",
            CrossRow::IkJL => "i=k>j>l",
            CrossRow::IKjL => "i>k=j>l",
            CrossRow::IKJl => "i>k>j=l",
            CrossRow::IJkl => "i>j=k=l",
            CrossRow::IjkL => "i=j=k>l",
            CrossRow::IkJl => "i=k>j=l",
            CrossRow::Ijkl => "i=j=k=l",
        }
    }

    fn matches(self, (i, j): (usize, usize), (k, l): (usize, usize)) -> bool {
        match self {
            CrossRow::Commute => j != k && j != l && i != k && i != l,
            CrossRow::IkJL => i == k && k > j && j > l,
            CrossRow::IKjL => i > k && k == j && j > l,
            CrossRow::IKJl => i > k && k > j && j == l,
            CrossRow::IJkl => i > j && j == k && k == l,
            CrossRow::IjkL => i == j && j == k && k > l,
            CrossRow::IkJl => i == k && k > j && j == l,
            CrossRow::Ijkl => i == j && j == k && k == l,
        }
    }
}

/// Identifies the straightening rule applied to an adjacent pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    /// Holomorphic relation number 1..=11.
    Holo(u8),
    /// Wick row applied as written to `zs[i,j] z[k,l]`.
    Cross(CrossRow),
    /// Involution image of a Wick row.
    CrossConj(CrossRow),
    /// Involution image of holomorphic relation 1..=11, for `zs zs` pairs.
    Star(u8),
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleId::Holo(k) => write!(f, "({k})"),
            RuleId::Cross(r) => write!(f, "wick[{}]", r.pattern()),
            RuleId::CrossConj(r) => write!(f, "wick*[{}]", r.pattern()),
            RuleId::Star(k) => write!(f, "({k})*"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Normal,
    Rule(RuleId),
}

/// Holomorphic relations whose left side is `z[a] z[b]`.
pub(crate) fn holo_matches(a: (usize, usize), b: (usize, usize)) -> Vec<u8> {
    let (i, j) = a;
    let (k, l) = b;
    let preds = [
        i == j && j == l && l < k,
        j < i && i == k && k == l,
        j < l && l < i && i == k,
        j == l && l < i && i < k,
        // Relation (5) is written z[k,l] z[i,j] = z[i,j] z[k,l] for j<l<=k<i;
        // with a = (k,l) and b = (i,j) its left side is z[a] z[b].
        b.1 < a.1 && a.1 <= a.0 && a.0 < b.0,
        i == j && j < k && k == l,
        i == j && j < l && l < k,
        j < i && i < k && k == l,
        j < i && i < l && l < k,
        j < l && l < i && i < k,
        j < i && i == l && l < k,
    ];
    preds
        .iter()
        .enumerate()
        .filter(|(_, &p)| p)
        .map(|(r, _)| r as u8 + 1)
        .collect()
}

fn q_pow(e: i64) -> Coefficient {
    Coefficient::q_pow(e)
}

/// `q - q^-1`
fn q_minus_qinv() -> Coefficient {
    q_pow(1) - q_pow(-1)
}

/// `q^-1 - q`
fn qinv_minus_q() -> Coefficient {
    q_pow(-1) - q_pow(1)
}

fn z(i: usize, j: usize) -> Gen {
    Gen::z(i as u8, j as u8)
}

fn zs(i: usize, j: usize) -> Gen {
    Gen::zs(i as u8, j as u8)
}

/// Right side of holomorphic relation `rel` with left side `z[a] z[b]`.
pub(crate) fn holo_rhs(rel: u8, a: (usize, usize), b: (usize, usize)) -> Vec<Term> {
    let (i, j) = a;
    let (k, l) = b;
    let swapped = vec![z(k, l), z(i, j)];
    let q2_minus_qm2 = q_pow(2) - q_pow(-2);
    match rel {
        1 | 2 => vec![(q_pow(2), swapped)],
        3 | 4 => vec![(q_pow(1), swapped)],
        5 => vec![(Coefficient::one(), swapped)],
        6 => vec![
            (Coefficient::one(), swapped),
            (q_pow(1) * q2_minus_qm2, vec![z(l, j), z(k, i)]),
        ],
        7 | 8 => vec![
            (Coefficient::one(), swapped),
            (q2_minus_qm2, vec![z(l, j), z(k, i)]),
        ],
        9 => vec![
            (Coefficient::one(), swapped),
            (q_minus_qinv() * q_pow(1), vec![z(l, i), z(k, j)]),
            (q_minus_qinv(), vec![z(k, i), z(l, j)]),
        ],
        10 => vec![
            (Coefficient::one(), swapped),
            (q_minus_qinv(), vec![z(i, l), z(k, j)]),
        ],
        11 => vec![
            (q_pow(1), swapped),
            (q_minus_qinv(), vec![z(i, l), z(k, j)]),
        ],
        _ => unreachable!("no holomorphic relation {rel}"),
    }
}

/// Wick rows whose side condition holds for `zs[ij] z[kl]`.
pub(crate) fn cross_matches(ij: (usize, usize), kl: (usize, usize)) -> Vec<CrossRow> {
    CrossRow::ALL
        .iter()
        .copied()
        .filter(|r| r.matches(ij, kl))
        .collect()
}

/// Right side of the Wick row for `zs[i,j] z[k,l]` at rank `n`.
pub(crate) fn cross_rhs(row: CrossRow, (i, j): (usize, usize), (k, l): (usize, usize), n: usize) -> Vec<Term> {
    let t = qinv_minus_q();
    let t2 = &t * &t;
    let one_q2 = Coefficient::one() + q_pow(2);
    let lead = vec![z(k, l), zs(i, j)];
    let mut out: Vec<Term> = Vec::new();
    let mut push = |c: Coefficient, w: Vec<Gen>| out.push((c, w));
    match row {
        CrossRow::Commute => push(Coefficient::one(), lead),
        CrossRow::IkJL => {
            push(q_pow(1), lead);
            for m in k + 1..=n {
                push(-&t, vec![z(m, l), zs(m, j)]);
            }
        }
        CrossRow::IKjL => {
            push(q_pow(1), lead);
            // first sum taken without the extra factor q: the only choice
            // compatible with both confluence and the U_q action at n = 3
            for m in k + 1..=i {
                push(-t.clone(), vec![z(m, l), zs(i, m)]);
            }
            for m in i + 1..=n {
                push(-(q_pow(2) * &t), vec![z(m, l), zs(m, i)]);
            }
        }
        CrossRow::IKJl => {
            push(q_pow(1), lead);
            let c = -&t;
            for m in l + 1..=k {
                push(c.clone(), vec![z(k, m), zs(i, m)]);
            }
            for m in k + 1..=i {
                push(&c * q_pow(1), vec![z(m, k), zs(i, m)]);
            }
            for m in i + 1..=n {
                push(&c * q_pow(2), vec![z(m, k), zs(m, i)]);
            }
        }
        CrossRow::IJkl => {
            push(q_pow(2), lead);
            let c = -(&one_q2 * &t);
            for m in l + 1..=i {
                push(c.clone(), vec![z(m, k), zs(i, m)]);
            }
            for m in i + 1..=n {
                push(&c * q_pow(1), vec![z(m, k), zs(m, i)]);
            }
        }
        CrossRow::IjkL => {
            push(q_pow(2), lead);
            let c = -(&one_q2 * &t);
            for m in k + 1..=n {
                push(c.clone(), vec![z(m, l), zs(m, i)]);
            }
        }
        CrossRow::IkJl => {
            push(q_pow(2), lead);
            let c = -(q_pow(1) * &t);
            for kp in j + 1..=i {
                push(c.clone(), vec![z(k, kp), zs(i, kp)]);
            }
            for kp in i + 1..=n {
                push(c.clone(), vec![z(kp, l), zs(kp, j)]);
                push(&c * q_pow(2), vec![z(kp, k), zs(kp, i)]);
            }
            for kp in i + 1..=n {
                for lp in j + 1..kp {
                    push(t2.clone(), vec![z(kp, lp), zs(kp, lp)]);
                }
            }
            for kp in i + 1..=n {
                push(t2.clone(), vec![z(kp, kp), zs(kp, kp)]);
            }
            push(Coefficient::one() - q_pow(2), vec![]);
        }
        CrossRow::Ijkl => {
            push(q_pow(4), lead);
            let sq = &one_q2 * &one_q2;
            let c1 = -(q_pow(1) * &t * &sq);
            for kp in i + 1..=n {
                push(c1.clone(), vec![z(kp, l), zs(kp, j)]);
            }
            let c2 = &t2 * &one_q2;
            for kp in i + 1..=n {
                push(c2.clone(), vec![z(kp, kp), zs(kp, kp)]);
            }
            let c3 = &t2 * &sq;
            for kp in i + 1..=n {
                for jp in i + 1..kp {
                    push(c3.clone(), vec![z(kp, jp), zs(kp, jp)]);
                }
            }
            push(Coefficient::one() - q_pow(4), vec![]);
        }
    }
    out
}

/// Every rule whose left side is `a b`, with self-conjugate duplicates merged.
pub(crate) fn matching_rules(a: Gen, b: Gen) -> Vec<RuleId> {
    let (ai, bi) = (a.index(), b.index());
    let mut out = Vec::new();
    match (a.kind, b.kind) {
        (Kind::Z, Kind::Z) => out.extend(holo_matches(ai, bi).into_iter().map(RuleId::Holo)),
        (Kind::ZStar, Kind::ZStar) => {
            out.extend(holo_matches(bi, ai).into_iter().map(RuleId::Star))
        }
        (Kind::ZStar, Kind::Z) => {
            out.extend(cross_matches(ai, bi).into_iter().map(RuleId::Cross));
            for row in cross_matches(bi, ai) {
                // Rows whose conjugate is the same relation are not counted twice.
                let self_conjugate = row == CrossRow::Commute || ai == bi;
                if !self_conjugate {
                    out.push(RuleId::CrossConj(row));
                }
            }
        }
        (Kind::Z, Kind::ZStar) => {}
    }
    out
}

pub(crate) fn classify(a: Gen, b: Gen) -> Result<Classification, Vec<RuleId>> {
    let rules = matching_rules(a, b);
    match (is_normal_pair(a, b), rules.as_slice()) {
        (true, []) => Ok(Classification::Normal),
        (false, [r]) => Ok(Classification::Rule(*r)),
        _ => Err(rules),
    }
}

/// Right side of rule `id` applied to the pair `a b` at rank `n`.
pub(crate) fn rule_rhs(id: RuleId, a: Gen, b: Gen, n: usize) -> Vec<Term> {
    let (ai, bi) = (a.index(), b.index());
    let star_terms = |terms: Vec<Term>| -> Vec<Term> {
        terms
            .into_iter()
            .map(|(c, w)| (c, w.iter().rev().map(|g| g.star()).collect()))
            .collect()
    };
    match id {
        RuleId::Holo(r) => holo_rhs(r, ai, bi),
        // (z[b] z[a])* = zs[a] zs[b]
        RuleId::Star(r) => star_terms(holo_rhs(r, bi, ai)),
        RuleId::Cross(row) => cross_rhs(row, ai, bi, n),
        // (zs[b] z[a])* = zs[a] z[b]
        RuleId::CrossConj(row) => star_terms(cross_rhs(row, bi, ai, n)),
    }
}
