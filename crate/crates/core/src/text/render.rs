use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Element, Word};
use crate::coeff::Coefficient;
use crate::hopf::UqExpr;
use crate::poly::IntPoly;

/// `q^(e/2)` as text, or an empty string for `e = 0`.
fn q_power(e: i64) -> String {
    match e {
        0 => String::new(),
        2 => "q".into(),
        e if e % 2 == 0 => format!("q^{}", e / 2),
        e => format!("q^({e}/2)"),
    }
}

/// Renders a polynomial in `s` as a sum in ascending powers of `q`.
fn render_poly(p: &IntPoly) -> String {
    let mut out = String::new();
    for (e, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let qp = q_power(e as i64);
        let body = match (mag.is_one(), qp.is_empty()) {
            (_, true) => mag.to_string(),
            (true, false) => qp,
            (false, false) => format!("{mag}*{qp}"),
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push(if c.is_negative() { '-' } else { '+' });
        }
        out.push_str(&body);
    }
    out
}

/// Splits `p = s^k * r` with `r(0) != 0`.
fn split_order(p: &IntPoly) -> (usize, IntPoly) {
    let k = p.order().unwrap_or(0);
    (k, p.shift_down(k))
}

/// Canonical text for a coefficient, e.g. `(1-q^4)`, `q^(1/2)`, `-q/(1-q^4)`,
/// `(1-q^4)^3` or `q^-4*(1-q^4)^4`.
pub fn render_coefficient(c: &Coefficient) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let (a, mut num) = split_order(c.numerator());
    let (b, mut den) = split_order(c.denominator());
    // Present the denominator with a positive constant term.
    if den.coeff(0).is_negative() {
        den = -&den;
        num = -&num;
    }
    let e = a as i64 - b as i64;
    let mut scalar = BigRational::new(num.content(), den.content());
    if num.coeff(0).is_negative() {
        scalar = -scalar;
    }
    let num_pp = num.div_scalar_exact(&(num.content() * num.coeff(0).signum()));
    let den_pp = den.div_scalar_exact(&den.content());

    let mut factors: Vec<String> = Vec::new();
    let negative = scalar.is_negative();
    let mag = scalar.abs();
    let has_poly = num_pp.degree() != Some(0);
    if !mag.is_one() || (e == 0 && !has_poly) {
        if mag.denom().is_one() {
            factors.push(mag.numer().to_string());
        } else {
            factors.push(format!("{}/{}", mag.numer(), mag.denom()));
        }
    }
    if e != 0 {
        factors.push(q_power(e));
    }
    if has_poly {
        let (base, k) = num_pp.perfect_power();
        let body = format!("({})", render_poly(&base));
        factors.push(if k == 1 { body } else { format!("{body}^{k}") });
    }
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&factors.join("*"));
    if den_pp.degree() != Some(0) {
        out.push_str(&format!("/({})", render_poly(&den_pp)));
    }
    out
}

pub fn render_word(w: &Word) -> String {
    w.letters().iter().map(ToString::to_string).collect()
}

/// Canonical text for an element: terms `coeff * word` joined by ` + `, in
/// graded-lexicographic word order; the empty word renders as its coefficient.
pub fn render_element(e: &Element) -> String {
    if e.is_zero() {
        return "0".into();
    }
    e.terms()
        .map(|(w, c)| {
            if w.is_empty() {
                render_coefficient(c)
            } else {
                format!("{} * {}", render_coefficient(c), render_word(w))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}


fn word_json(w: &Word) -> serde_json::Value {
    w.letters()
        .iter()
        .map(|g| serde_json::json!([g.kind.tag(), g.i, g.j]))
        .collect()
}

/// `[{word: [[kind, i, j], ...], coeff: "..."}, ...]` in canonical term order.
pub fn element_json(e: &Element) -> serde_json::Value {
    e.terms()
        .map(|(w, c)| serde_json::json!({"word": word_json(w), "coeff": render_coefficient(c)}))
        .collect()
}

/// `[{word: ["E[1]", ...], coeff: "..."}, ...]`.
pub fn uq_json(x: &UqExpr) -> serde_json::Value {
    x.terms()
        .map(|(w, c)| {
            let letters: Vec<String> = w.iter().map(ToString::to_string).collect();
            serde_json::json!({"word": letters, "coeff": render_coefficient(c)})
        })
        .collect()
}
