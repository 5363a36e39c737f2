//! The scalar field Q(s) of rational functions in one symbol `s`, with the
//! deformation parameter `q = s^2`.
//!
//! Every [`Coefficient`] is kept in canonical form: numerator and
//! denominator in Z[s] with no common factor (content included) and a
//! denominator with positive leading coefficient. Equality is therefore
//! structural.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coefficient {
    num: IntPoly,
    den: IntPoly,
}

/// Arithmetic operation selector for [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `op` to `a` and `b`; fails only on division by zero.
pub fn arith(a: &Coefficient, b: &Coefficient, op: ArithOp) -> Result<Coefficient> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

impl Coefficient {
    pub fn zero() -> Self {
        Self {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self {
            num: IntPoly::constant(c),
            den: IntPoly::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_parts(
            IntPoly::constant(r.numer().clone()),
            IntPoly::constant(r.denom().clone()),
        )
    }

    /// The symbol `s = q^(1/2)`.
    pub fn s() -> Self {
        Self::s_pow(1)
    }

    /// `q = s^2`.
    pub fn q() -> Self {
        Self::s_pow(2)
    }

    /// `s^e` for any integer `e`.
    pub fn s_pow(e: i64) -> Self {
        let m = IntPoly::monomial(BigInt::one(), e.unsigned_abs() as usize);
        if e >= 0 {
            Self {
                num: m,
                den: IntPoly::one(),
            }
        } else {
            Self {
                num: IntPoly::one(),
                den: m,
            }
        }
    }

    /// `q^e = s^(2e)`.
    pub fn q_pow(e: i64) -> Self {
        Self::s_pow(2 * e)
    }

    /// Builds `num / den` in canonical form. Panics on a zero denominator.
    pub fn from_parts(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self { num, den };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        if den.leading().is_some_and(Signed::is_negative) {
            num = -&num;
            den = -&den;
        }
        Self { num, den }
    }

    /// Polynomial in `q` with integer coefficients listed in ascending order.
    pub fn q_poly(cs: &[i64]) -> Self {
        let mut s = vec![0i64; cs.len().saturating_mul(2)];
        for (k, &c) in cs.iter().enumerate() {
            s[2 * k] = c;
        }
        Self::from_parts(IntPoly::from_i64s(&s), IntPoly::one())
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True for an integer constant; used by renderers to skip parentheses.
    pub fn is_constant(&self) -> bool {
        self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_parts(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = u32::try_from(e.unsigned_abs()).map_err(|_| Error::ExponentTooLarge)?;
        Ok(Self {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    /// Exact value at `p`.
    pub fn evaluate(&self, p: &RationalPoint) -> Result<BigRational> {
        let (num, den, x) = match p.var {
            PointVar::S => (self.num.clone(), self.den.clone(), p.value.clone()),
            PointVar::Q => {
                let (num, den) = self
                    .num
                    .halve_exponents()
                    .zip(self.den.halve_exponents())
                    .ok_or_else(|| Error::HalfIntegerPower(self.to_string()))?;
                (num, den, p.value.clone())
            }
        };
        let d = den.eval(&x);
        if d.is_zero() {
            return Err(Error::Pole {
                coeff: self.to_string(),
                point: p.to_string(),
            });
        }
        Ok(num.eval(&x) / d)
    }

    /// True when the coefficient is a function of `q` alone.
    pub fn is_even(&self) -> bool {
        self.num.is_even() && self.den.is_even()
    }
}

pub fn is_zero(c: &Coefficient) -> bool {
    c.is_zero()
}

impl Default for Coefficient {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Coefficient {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return Coefficient {
                    num,
                    den: IntPoly::one(),
                };
            }
            return Coefficient::from_parts(num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Coefficient::from_parts(num, &self.den * &rhs.den)
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self + &(-rhs)
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        if self.is_zero() || rhs.is_zero() {
            return Coefficient::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Coefficient {
                num: &self.num * &rhs.num,
                den: IntPoly::one(),
            };
        }
        // Cross-cancel first so the products stay small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.div_exact(&g1) * &rhs.num.div_exact(&g2);
        let den = &self.den.div_exact(&g2) * &rhs.den.div_exact(&g1);
        let mut out = Coefficient { num, den };
        if out.den.leading().is_some_and(Signed::is_negative) {
            out.num = -&out.num;
            out.den = -&out.den;
        }
        out
    }
}

impl Div for &Coefficient {
    type Output = Coefficient;
    /// Panics on division by zero, like integer division.
    fn div(self, rhs: &Coefficient) -> Coefficient {
        self.checked_div(rhs).expect("division by zero coefficient")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Coefficient {
            type Output = Coefficient;
            fn $m(self, rhs: Coefficient) -> Coefficient {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Coefficient> for Coefficient {
            type Output = Coefficient;
            fn $m(self, rhs: &Coefficient) -> Coefficient {
                (&self).$m(rhs)
            }
        }
        impl $tr<Coefficient> for &Coefficient {
            type Output = Coefficient;
            fn $m(self, rhs: Coefficient) -> Coefficient {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Coefficient> for Coefficient {
    fn sub_assign(&mut self, rhs: &Coefficient) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Coefficient> for Coefficient {
    fn mul_assign(&mut self, rhs: &Coefficient) {
        *self = &*self * rhs;
    }
}

/// Which symbol a [`RationalPoint`] specializes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointVar {
    /// The value is `s = q^(1/2)`.
    S,
    /// The value is `q`; only coefficients that are functions of `q` can be evaluated.
    Q,
}

/// A rational specialization point in the open interval (0, 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    value: BigRational,
    var: PointVar,
}

impl RationalPoint {
    pub fn new(value: BigRational, var: PointVar) -> Result<Self> {
        if !value.is_positive() || value >= BigRational::one() {
            return Err(Error::PointOutOfRange(value.to_string()));
        }
        Ok(Self { value, var })
    }

    /// Specializes `q` to `num/den`.
    pub fn q(num: i64, den: i64) -> Result<Self> {
        Self::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            PointVar::Q,
        )
    }

    /// Specializes `s = q^(1/2)` to `num/den`.
    pub fn s(num: i64, den: i64) -> Result<Self> {
        Self::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            PointVar::S,
        )
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn var(&self) -> PointVar {
        self.var
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.var {
            PointVar::S => "s",
            PointVar::Q => "q",
        };
        write!(f, "{name}={}", self.value)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::render_coefficient(self))
    }
}
