//! Exact rational elimination for rank and definiteness tests.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Rank of a dense matrix given by rows.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &pivot;
            for k in c..cols {
                let t = &f * &rows[r][k];
                rows[i][k] -= t;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Pivots of Gaussian elimination without row exchanges; the k-th pivot is
/// the ratio of consecutive leading principal minors. Stops at the first
/// non-positive pivot.
pub fn ldl_pivots(mut m: Vec<Vec<BigRational>>) -> Vec<BigRational> {
    let n = m.len();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let pivot = m[k][k].clone();
        out.push(pivot.clone());
        if !pivot.is_positive() {
            break;
        }
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &pivot;
            for j in k..n {
                let t = &f * &m[k][j];
                m[i][j] -= t;
            }
        }
    }
    out
}

/// Symmetric positive definiteness via leading principal minors.
pub fn is_positive_definite(m: Vec<Vec<BigRational>>) -> bool {
    let n = m.len();
    let piv = ldl_pivots(m);
    piv.len() == n && piv.iter().all(Signed::is_positive)
}
