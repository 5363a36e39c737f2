//! Recursive-descent parser for coefficients, polynomial elements,
//! sandwiches around `f0` and U_q expressions.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := unary (('*'|'/')? unary)*        juxtaposition multiplies
//! unary  := '-' unary | power
//! power  := atom ('^' exponent)?
//! exponent := ['-'] INT | '(' ['-'] INT ['/' INT] ')'
//! atom   := INT | 'q' | 's' | 'f0' | gen | uq | '(' expr ')'
//! gen    := ('z'|'zs') '[' INT ',' INT ']'
//! uq     := ('E'|'F'|'K'|'Kinv') '[' INT ']'
//! ```

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{Element, Kind, PolAlgebra, Word};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::hopf::{Letter, UqExpr};
use crate::integral::DElement;

/// A parsed expression, classified by where it lives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Element(Element),
    DElement(DElement),
    Uq(UqExpr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    LBrack,
    RBrack,
    Comma,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            b'[' => Tok::LBrack,
            b']' => Tok::RBrack,
            b',' => Tok::Comma,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            _ => {
                let ch = text[i..].chars().next().expect("in bounds");
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character {ch:?}"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Value {
    Scalar(Coefficient),
    Pol(Element),
    D(DElement),
    Uq(UqExpr),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Pol(_) => "polynomial",
            Value::D(_) => "f0-sandwich",
            Value::Uq(_) => "U_q expression",
        }
    }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    pol: Option<&'a PolAlgebra>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn at(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.at(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = v.clone();
                self.pos += 1;
                Ok(v)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn small(&mut self) -> Result<usize> {
        let p = self.at();
        self.int()?.to_usize().filter(|&v| v < 256).ok_or(Error::Parse {
            pos: p,
            msg: "index out of range".into(),
        })
    }

    fn type_err<T>(&self, pos: usize, a: &Value, b: &Value, op: &str) -> Result<T> {
        Err(Error::Type(format!(
            "cannot {op} a {} and a {} (at byte {pos})",
            a.kind(),
            b.kind()
        )))
    }

    fn pol(&self, pos: usize) -> Result<&'a PolAlgebra> {
        self.pol.ok_or(Error::Type(format!(
            "generators need a rank (at byte {pos})"
        )))
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = match self.peek() {
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            let p = self.at();
            let neg = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => return Ok(acc),
            };
            self.pos += 1;
            let mut rhs = self.term()?;
            if neg {
                rhs = self.negate(rhs);
            }
            acc = self.add(p, acc, rhs)?;
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_) | Tok::Ident(_) | Tok::LParen))
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        loop {
            let p = self.at();
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = self.mul(p, acc, rhs)?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = self.div(p, acc, rhs)?;
                }
                _ if self.starts_atom() => {
                    let rhs = self.power()?;
                    acc = self.mul(p, acc, rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Value> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            let v = self.unary()?;
            return Ok(self.negate(v));
        }
        self.power()
    }

    /// Exponent as `(numerator, denominator)` with denominator 1 or 2.
    fn exponent(&mut self) -> Result<(i64, i64)> {
        let p = self.at();
        let too_big = || Error::Parse {
            pos: p,
            msg: "exponent too large".into(),
        };
        if self.peek() == Some(&Tok::LParen) {
            self.pos += 1;
            let neg = self.peek() == Some(&Tok::Minus);
            if neg {
                self.pos += 1;
            }
            let num = self.int()?.to_i64().ok_or_else(too_big)?;
            let den = if self.peek() == Some(&Tok::Slash) {
                self.pos += 1;
                self.int()?.to_i64().ok_or_else(too_big)?
            } else {
                1
            };
            self.expect(Tok::RParen, "')'")?;
            if den != 1 && den != 2 {
                return Err(Error::Parse {
                    pos: p,
                    msg: "only integer and half-integer exponents are supported".into(),
                });
            }
            Ok((if neg { -num } else { num }, den))
        } else {
            let neg = self.peek() == Some(&Tok::Minus);
            if neg {
                self.pos += 1;
            }
            let num = self.int()?.to_i64().ok_or_else(too_big)?;
            Ok((if neg { -num } else { num }, 1))
        }
    }

    fn power(&mut self) -> Result<Value> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let p = self.at();
        let (num, den) = self.exponent()?;
        match base {
            Value::Scalar(c) => {
                if den == 2 {
                    // only powers of q have half-integer powers in Q(s)
                    let order = c.numerator().order().unwrap_or(0) as i64
                        - c.denominator().order().unwrap_or(0) as i64;
                    let is_q_power = c.numerator().is_monomial()
                        && c.denominator().is_monomial()
                        && c == Coefficient::s_pow(order)
                        && order % 2 == 0;
                    if !is_q_power {
                        return Err(Error::Parse {
                            pos: p,
                            msg: "half-integer exponents apply to powers of q only".into(),
                        });
                    }
                    Ok(Value::Scalar(Coefficient::s_pow(order / 2 * num)))
                } else {
                    c.pow(num).map(Value::Scalar).map_err(|e| Error::Parse {
                        pos: p,
                        msg: e.to_string(),
                    })
                }
            }
            other => {
                if den != 1 || num < 0 {
                    return Err(Error::Parse {
                        pos: p,
                        msg: "non-scalar bases take nonnegative integer exponents".into(),
                    });
                }
                let mut acc = Value::Scalar(Coefficient::one());
                for _ in 0..num {
                    acc = self.mul(p, acc, other.clone())?;
                }
                Ok(acc)
            }
        }
    }

    fn atom(&mut self) -> Result<Value> {
        let p = self.at();
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(Value::Scalar(Coefficient::from_bigint(v)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(v)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "q" => Ok(Value::Scalar(Coefficient::q())),
                    "s" => Ok(Value::Scalar(Coefficient::s())),
                    "f0" => {
                        self.pol(p)?;
                        Ok(Value::D(DElement::f0()))
                    }
                    "z" | "zs" => {
                        self.expect(Tok::LBrack, "'['")?;
                        let i = self.small()?;
                        self.expect(Tok::Comma, "','")?;
                        let j = self.small()?;
                        self.expect(Tok::RBrack, "']'")?;
                        let kind = if name == "z" { Kind::Z } else { Kind::ZStar };
                        let g = self.pol(p)?.gen(kind, i, j)?;
                        Ok(Value::Pol(Element::word(Word(vec![g]))))
                    }
                    "E" | "F" | "K" | "Kinv" => {
                        self.expect(Tok::LBrack, "'['")?;
                        let i = self.small()?;
                        self.expect(Tok::RBrack, "']'")?;
                        let n = self.pol(p)?.rank();
                        if i == 0 || i > n {
                            return Err(Error::BadUqIndex { i, n });
                        }
                        let i = i as u8;
                        let l = match name.as_str() {
                            "E" => Letter::E(i),
                            "F" => Letter::F(i),
                            "K" => Letter::K(i),
                            _ => Letter::Kinv(i),
                        };
                        Ok(Value::Uq(UqExpr::letter(l)))
                    }
                    _ => Err(Error::Parse {
                        pos: p,
                        msg: format!("unknown symbol {name:?}"),
                    }),
                }
            }
            Some(_) => self.err("expected a value"),
            None => self.err("unexpected end of input"),
        }
    }

    fn negate(&self, v: Value) -> Value {
        let m = -Coefficient::one();
        match v {
            Value::Scalar(c) => Value::Scalar(-c),
            Value::Pol(e) => Value::Pol(e.scale(&m)),
            Value::D(x) => Value::D(x.scale(&m)),
            Value::Uq(x) => Value::Uq(x.scale(&m)),
        }
    }

    fn add(&self, p: usize, a: Value, b: Value) -> Result<Value> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
            (Value::Scalar(x), Value::Pol(e)) | (Value::Pol(e), Value::Scalar(x)) => {
                Value::Pol(&e + &Element::scalar(x))
            }
            (Value::Pol(x), Value::Pol(y)) => Value::Pol(&x + &y),
            (Value::D(x), Value::D(y)) => Value::D(&x + &y),
            (Value::Scalar(x), Value::Uq(u)) | (Value::Uq(u), Value::Scalar(x)) => {
                Value::Uq(u.add(&UqExpr::scalar(x)))
            }
            (Value::Uq(x), Value::Uq(y)) => Value::Uq(x.add(&y)),
            (a, b) => return self.type_err(p, &a, &b, "add"),
        })
    }

    fn mul(&self, p: usize, a: Value, b: Value) -> Result<Value> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
            (Value::Scalar(c), Value::Pol(e)) | (Value::Pol(e), Value::Scalar(c)) => Value::Pol(e.scale(&c)),
            (Value::Scalar(c), Value::D(x)) | (Value::D(x), Value::Scalar(c)) => Value::D(x.scale(&c)),
            (Value::Scalar(c), Value::Uq(x)) | (Value::Uq(x), Value::Scalar(c)) => Value::Uq(x.scale(&c)),
            (Value::Pol(x), Value::Pol(y)) => Value::Pol(self.pol(p)?.multiply(&x, &y)),
            (Value::Pol(e), Value::D(x)) => Value::D(x.left_mul(self.pol(p)?, &e)),
            (Value::D(x), Value::Pol(e)) => Value::D(x.right_mul(self.pol(p)?, &e)),
            (Value::D(x), Value::D(y)) => Value::D(x.mul(self.pol(p)?, &y)),
            (Value::Uq(x), Value::Uq(y)) => Value::Uq(x.mul(&y)),
            (a, b) => return self.type_err(p, &a, &b, "multiply"),
        })
    }

    fn div(&self, p: usize, a: Value, b: Value) -> Result<Value> {
        let Value::Scalar(d) = b else {
            return Err(Error::Type(format!(
                "division by a {} (at byte {p})",
                b.kind()
            )));
        };
        let inv = d.inv().map_err(|e| Error::Parse {
            pos: p,
            msg: e.to_string(),
        })?;
        self.mul(p, a, Value::Scalar(inv))
    }
}

fn run(text: &str, pol: Option<&PolAlgebra>) -> Result<Value> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        pol,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(v)
}

/// Parses any expression of rank `pol.rank()`.
pub fn parse_expression(text: &str, pol: &PolAlgebra) -> Result<Parsed> {
    Ok(match run(text, Some(pol))? {
        Value::Scalar(c) => Parsed::Element(Element::scalar(c)),
        Value::Pol(e) => Parsed::Element(e),
        Value::D(x) => Parsed::DElement(x),
        Value::Uq(x) => Parsed::Uq(x),
    })
}

/// Parses a polynomial element; `f0` or U_q symbols are a type error.
pub fn parse_element(text: &str, pol: &PolAlgebra) -> Result<Element> {
    match parse_expression(text, pol)? {
        Parsed::Element(e) => Ok(e),
        Parsed::DElement(_) => Err(Error::Type("f0 is not allowed in a polynomial expression".into())),
        Parsed::Uq(_) => Err(Error::Type("expected a polynomial, found a U_q expression".into())),
    }
}

/// Parses an element of the sandwich algebra; it must involve `f0`.
pub fn parse_delement(text: &str, pol: &PolAlgebra) -> Result<DElement> {
    match parse_expression(text, pol)? {
        Parsed::DElement(x) => Ok(x),
        Parsed::Element(e) if e.is_zero() => Ok(DElement::zero()),
        _ => Err(Error::Type("expected an expression in f0".into())),
    }
}

/// Parses a U_q expression; a bare scalar is accepted as a multiple of 1.
pub fn parse_uq(text: &str, pol: &PolAlgebra) -> Result<UqExpr> {
    match parse_expression(text, pol)? {
        Parsed::Uq(x) => Ok(x),
        Parsed::Element(e) if e.terms().all(|(w, _)| w.is_empty()) => {
            Ok(UqExpr::scalar(pol.vacuum_coefficient(&e)))
        }
        _ => Err(Error::Type("expected a U_q expression".into())),
    }
}

/// Parses a coefficient in `q` and `s`.
pub fn parse_coefficient(text: &str) -> Result<Coefficient> {
    match run(text, None)? {
        Value::Scalar(c) => Ok(c),
        v => Err(Error::Type(format!("expected a scalar, found a {}", v.kind()))),
    }
}

/// Parses a rational number `a` or `a/b`.
pub fn parse_rational(text: &str) -> Result<num_rational::BigRational> {
    let c = parse_coefficient(text)?;
    if !c.is_constant() {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("{text:?} is not a rational number"),
        });
    }
    let num = c.numerator().coeff(0);
    let den = c.denominator().coeff(0);
    debug_assert!(!den.is_zero());
    Ok(num_rational::BigRational::new(num, den))
}
