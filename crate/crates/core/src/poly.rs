//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored in ascending order of degree with no trailing
//! zeros, so the zero polynomial is the empty vector and structural equality
//! coincides with mathematical equality.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * s^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        Self { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Exponent of the lowest nonzero term.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// True when the polynomial has exactly one nonzero term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    /// gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Division of every coefficient by `c`, which must divide them all.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a / c).collect(),
        }
    }

    /// Multiplication by `s^e`.
    pub fn shift_up(&self, e: usize) -> Self {
        if self.is_zero() || e == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Division by `s^e`; the low `e` coefficients must vanish.
    pub fn shift_down(&self, e: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(e).all(Zero::is_zero));
        Self::from_coeffs(self.coeffs.iter().skip(e).cloned().collect())
    }

    /// Primitive part with a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Pseudo-remainder of `self` by `d`: `lc(d)^(deg self - deg d + 1) * self mod d`.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-remainder by zero");
        let lc = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let c = r[top].clone();
            let shift = top - dd;
            for a in r.iter_mut() {
                *a *= &lc;
            }
            for (k, dc) in d.coeffs.iter().enumerate() {
                r[shift + k] -= &c * dc;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Self::from_coeffs(r)
    }

    /// Exact quotient `self / d`; panics if `d` does not divide `self` in Z[s].
    pub fn div_exact(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by the zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        if dd == 0 {
            return self.div_scalar_exact(&d.coeffs[0]);
        }
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let n = r.len();
        assert!(n > dd, "inexact polynomial division");
        let mut q = vec![BigInt::zero(); n - dd];
        for top in (dd..n).rev() {
            let (c, rem) = r[top].div_rem(lc);
            assert!(rem.is_zero(), "inexact polynomial division");
            if c.is_zero() {
                continue;
            }
            let shift = top - dd;
            for (k, dc) in d.coeffs.iter().enumerate() {
                r[shift + k] -= &c * dc;
            }
            q[shift] = c;
        }
        assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        Self::from_coeffs(q)
    }

    /// Greatest common divisor in Z[s], normalized to a positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        // s^k is the only monomial divisor shape, so monomials are quick.
        if self.is_monomial() || other.is_monomial() {
            let e = self.order().unwrap().min(other.order().unwrap());
            return Self::monomial(c, e);
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        loop {
            if b.degree() == Some(0) {
                return Self::constant(c);
            }
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b.scale(&c);
            }
            a = b;
            b = r.primitive_part();
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// True when only even powers of the variable occur.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// For an even polynomial `p(s) = r(s^2)`, returns `r`.
    pub fn halve_exponents(&self) -> Option<Self> {
        if !self.is_even() {
            return None;
        }
        Some(Self::from_coeffs(
            self.coeffs.iter().step_by(2).cloned().collect(),
        ))
    }

    /// Largest `k >= 1` with `self = base^k` for an integer polynomial `base`
    /// with positive constant term; requires a positive constant term.
    pub fn perfect_power(&self) -> (Self, u32) {
        let deg = self.degree().unwrap_or(0);
        let p0 = self.coeff(0);
        if deg == 0 || !p0.is_positive() {
            return (self.clone(), 1);
        }
        for k in (2..=deg).rev() {
            if !deg.is_multiple_of(k) {
                continue;
            }
            if let Some(root) = self.kth_root(k as u32) {
                return (root, k as u32);
            }
        }
        (self.clone(), 1)
    }

    fn kth_root(&self, k: u32) -> Option<Self> {
        let p0 = self.coeff(0);
        let b0 = p0.nth_root(k);
        if b0.pow(k) != p0 {
            return None;
        }
        let m_max = self.degree()? / k as usize;
        // Power-series root: b_m = 1/(m p_0) * sum_{t=1}^m ((a+1) t - m) p_t b_{m-t}, a = 1/k.
        let alpha = BigRational::new(BigInt::one(), BigInt::from(k));
        let p0r = BigRational::from_integer(p0.clone());
        let mut b: Vec<BigRational> = vec![BigRational::from_integer(b0)];
        for m in 1..=m_max {
            let mut acc = BigRational::zero();
            for t in 1..=m {
                let pt = self.coeff(t);
                if pt.is_zero() {
                    continue;
                }
                let w = (&alpha + BigRational::one()) * BigRational::from_integer(BigInt::from(t))
                    - BigRational::from_integer(BigInt::from(m));
                acc += w * BigRational::from_integer(pt) * &b[m - t];
            }
            b.push(acc / (BigRational::from_integer(BigInt::from(m)) * &p0r));
        }
        if !b.iter().all(|c| c.is_integer()) {
            return None;
        }
        let root = Self::from_coeffs(b.into_iter().map(|c| c.to_integer()).collect());
        (root.pow(k) == *self).then_some(root)
    }
}

impl PartialOrd for IntPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn gcd_of_products() {
        let a = p(&[1, 1]); // 1+s
        let b = p(&[-1, 1]); // -1+s
        let c = p(&[2, 0, 3]);
        let g = (&(&a * &b) * &c).gcd(&(&a * &c).scale(&BigInt::from(6)));
        assert_eq!(g, (&a * &c));
        assert_eq!(p(&[0, 0, 4]).gcd(&p(&[0, 6, 2])), p(&[0, 2]));
        assert_eq!(p(&[3]).gcd(&p(&[0, 6])), p(&[3]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 0, 0, 0, -1]);
        let b = p(&[1, 0, 1]);
        assert_eq!(a.div_exact(&b), p(&[1, 0, -1]));
    }

    #[test]
    fn perfect_powers() {
        let base = p(&[1, 0, 0, 0, 0, 0, 0, 0, -1]);
        let (r, k) = base.pow(3).perfect_power();
        assert_eq!((r, k), (base.clone(), 3));
        let (r, k) = base.perfect_power();
        assert_eq!((r, k), (base, 1));
        assert_eq!(p(&[4, 4, 1]).perfect_power(), (p(&[2, 1]), 2));
    }

    #[test]
    fn even_parts() {
        assert_eq!(p(&[1, 0, -1]).halve_exponents(), Some(p(&[1, -1])));
        assert_eq!(p(&[1, 1]).halve_exponents(), None);
    }
}
