//! Dense univariate polynomials over the integers or rationals.
//!
//! Coefficients are stored ascending (`coeffs[k]` is the coefficient of
//! `x^k`) and trimmed, so the zero polynomial is the empty vector and
//! `degree()` of a nonzero polynomial points at a nonzero leading
//! coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::num::{int_sign, Int, Rat};

/// Coefficient ring for [`UniPoly`]; implemented for `Int` and `Rat`.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl Coeff for Int {}
impl Coeff for Rat {}

#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> UniPoly<C> {
    /// Builds a polynomial from ascending coefficients, trimming high zeros.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as -1; convenient in loops.
    pub fn deg_i(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Leading coefficient; panics on the zero polynomial.
    pub fn lc(&self) -> &C {
        self.coeffs.last().expect("lc of zero polynomial")
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        UniPoly::new(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut m = C::zero();
            for _ in 0..k {
                m = m + C::one();
            }
            out.push(c.clone() * m);
        }
        UniPoly::new(out)
    }

    /// Number of trailing zero coefficients, i.e. the largest k with x^k | f.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Divides out x^k; returns the valuation k and the cofactor.
    pub fn strip_power(&self) -> (usize, Self) {
        if self.is_zero() {
            return (0, UniPoly::zero());
        }
        let k = self.trailing_zeros();
        (k, UniPoly::new(self.coeffs[k..].to_vec()))
    }
}

impl UniPoly<Int> {
    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content, keeping the sign of the polynomial.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        UniPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Primitive part with a positive leading coefficient.
    pub fn primitive_positive(&self) -> Self {
        let p = self.primitive_part();
        if p.is_zero() || p.lc().is_positive() {
            p
        } else {
            p.neg()
        }
    }

    /// Exact division; errors unless `d` divides `self` over the integers.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::Division("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(UniPoly::zero());
        }
        let (dd, dn) = (d.degree().unwrap(), self.degree().unwrap());
        if dn < dd {
            return Err(Error::Division("degree of divisor exceeds dividend".into()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Int::zero(); dn - dd + 1];
        for k in (0..quot.len()).rev() {
            let num = rem[k + dd].clone();
            if num.is_zero() {
                continue;
            }
            let (q, r) = num.div_rem(d.lc());
            if !r.is_zero() {
                return Err(Error::Division("leading coefficient does not divide".into()));
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Division("nonzero remainder".into()));
        }
        Ok(UniPoly::new(quot))
    }

    pub fn exact_div_scalar(&self, c: &Int) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::Division("scalar division by zero".into()));
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return Err(Error::Division("scalar does not divide coefficient".into()));
            }
            out.push(q);
        }
        Ok(UniPoly::new(out))
    }

    pub fn to_rat(&self) -> UniPoly<Rat> {
        UniPoly::new(
            self.coeffs
                .iter()
                .map(|c| Rat::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        self.to_rat().eval(x)
    }

    /// Sign of f(p/q) computed in integers as sign of Σ c_k p^k q^(d-k).
    pub fn sign_at(&self, num: &Int, den: &Int) -> i8 {
        debug_assert!(den.is_positive());
        if self.is_zero() {
            return 0;
        }
        // Horner in the scaled variable: v <- v*p + c_k * q^(d-k).
        let mut v = Int::zero();
        let mut qpow = Int::one();
        let d = self.degree().unwrap();
        let mut scaled = Vec::with_capacity(d + 1);
        for (k, c) in self.coeffs.iter().enumerate() {
            let _ = k;
            scaled.push(c * &qpow);
            qpow *= den;
        }
        for c in scaled.iter().rev() {
            v = v * num + c;
        }
        int_sign(&v)
    }

    /// Pseudo-remainder of `self` by `d`: lc(d)^(deg self - deg d + 1) * self mod d.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero());
        let dd = d.degree().unwrap();
        let mut rem = self.clone();
        while rem.deg_i() >= dd as i64 {
            let k = rem.degree().unwrap() - dd;
            let lead = rem.lc().clone();
            rem = rem.scale(d.lc()).sub(&d.shift_up(k).scale(&lead));
        }
        rem
    }

    /// gcd by the primitive PRS, returned primitive with positive lc.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_positive();
        let mut b = other.primitive_positive();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            if a.deg_i() < b.deg_i() {
                std::mem::swap(&mut a, &mut b);
                continue;
            }
            let r = a.pseudo_rem(&b).primitive_positive();
            a = b;
            b = r;
        }
        a.primitive_positive()
    }

    /// Product of the distinct irreducible factors: f / gcd(f, f').
    pub fn squarefree_part(&self) -> Self {
        if self.deg_i() <= 0 {
            return self.primitive_positive();
        }
        let p = self.primitive_positive();
        let g = p.gcd(&p.derivative());
        if g.deg_i() <= 0 {
            return p;
        }
        // gcd is primitive, so it divides p exactly up to content handling.
        p.exact_div(&g)
            .expect("gcd must divide its primitive argument")
            .primitive_positive()
    }
}

impl UniPoly<Rat> {
    pub fn monic(&self) -> Self {
        assert!(!self.is_zero(), "monic of zero polynomial");
        let inv = Rat::one() / self.lc().clone();
        self.scale(&inv)
    }

    /// Euclidean division by a nonzero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let mut rem = self.clone();
        let mut quot = UniPoly::zero();
        while rem.deg_i() >= dd as i64 {
            let k = rem.degree().unwrap() - dd;
            let c = rem.lc().clone() / d.lc().clone();
            let term = UniPoly::monomial(c, k);
            quot = quot.add(&term);
            rem = rem.sub(&d.mul(&term));
        }
        (quot, rem)
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Clears denominators: returns (primitive integer polynomial, unit) with
    /// `self = unit * poly` and unit a positive rational times the sign.
    pub fn to_int_primitive(&self) -> (UniPoly<Int>, Rat) {
        if self.is_zero() {
            return (UniPoly::zero(), Rat::one());
        }
        let mut lcm = Int::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let ip = UniPoly::new(ints);
        let content = ip.content();
        let prim = ip.exact_div_scalar(&content).unwrap();
        let (prim, sign) = if prim.lc().is_negative() {
            (prim.neg(), -Rat::one())
        } else {
            (prim, Rat::one())
        };
        (prim, sign * Rat::new(content, lcm))
    }

    /// Integer coefficients, if all denominators are 1.
    pub fn to_int(&self) -> Option<UniPoly<Int>> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.denom().is_one() {
                return None;
            }
            out.push(c.numer().clone());
        }
        Some(UniPoly::new(out))
    }
}

impl<C: Coeff> fmt::Debug for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<C: Coeff> fmt::Display for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else if k == 1 {
                write!(f, "{c}*x")?;
            } else {
                write!(f, "{c}*x^{k}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, rat};

    fn ip(cs: &[i64]) -> UniPoly<Int> {
        UniPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn arithmetic_basics() {
        let f = ip(&[1, 2, 1]); // 1 + 2x + x^2
        let g = ip(&[-1, 1]); // x - 1
        assert_eq!(f.mul(&g), ip(&[-1, -1, 1, 1]));
        assert_eq!(f.eval(&int(2)), int(9));
        assert_eq!(f.derivative(), ip(&[2, 2]));
        assert_eq!(f.degree(), Some(2));
        assert!(UniPoly::<Int>::zero().degree().is_none());
    }

    #[test]
    fn exact_division() {
        let f = ip(&[-1, 0, 1]); // x^2 - 1
        let g = ip(&[1, 1]);
        assert_eq!(f.exact_div(&g).unwrap(), ip(&[-1, 1]));
        assert!(ip(&[1, 0, 1]).exact_div(&g).is_err());
        assert!(ip(&[0, 3]).exact_div(&ip(&[0, 2])).is_err());
    }

    #[test]
    fn content_and_primitive() {
        let f = ip(&[4, 6, -2]);
        assert_eq!(f.content(), int(2));
        assert_eq!(f.primitive_part(), ip(&[2, 3, -1]));
        assert_eq!(f.primitive_positive(), ip(&[-2, -3, 1]));
    }

    #[test]
    fn gcd_and_squarefree() {
        let f = ip(&[1, 1]).mul(&ip(&[1, 1])).mul(&ip(&[-2, 1]));
        assert_eq!(f.gcd(&f.derivative()), ip(&[1, 1]));
        assert_eq!(f.squarefree_part(), ip(&[1, 1]).mul(&ip(&[-2, 1])));
    }

    #[test]
    fn sign_at_rational() {
        let f = ip(&[-2, 0, 1]); // x^2 - 2
        assert_eq!(f.sign_at(&int(3), &int(2)), 1); // f(3/2) = 1/4
        assert_eq!(f.sign_at(&int(7), &int(5)), -1); // f(7/5) < 0
        assert_eq!(f.sign_at(&int(1), &int(1)), -1);
    }

    #[test]
    fn rational_division() {
        let f = ip(&[2, 0, 4]).to_rat();
        let d = ip(&[1, 2]).to_rat();
        let (q, r) = f.div_rem(&d);
        assert_eq!(d.mul(&q).add(&r), f);
        assert!(r.deg_i() < d.deg_i());
        let (prim, unit) = UniPoly::new(vec![rat(1, 2), rat(3, 4)]).to_int_primitive();
        assert_eq!(prim, ip(&[2, 3]));
        assert_eq!(unit, rat(1, 4));
    }
}
