//! Truncated power series in t and polynomials in eta over them.
//!
//! A [`TruncSeries`] holds rational coefficients c_0..c_N of a series
//! modulo t^(N+1); mixed-order arithmetic truncates down to the smaller
//! order, never pads. A [`SeriesPoly`] is a polynomial in eta whose
//! coefficients are series of one common order — the ring where the
//! weighted dehomogenization f(t, eta) = t^w F(1/t^a, eta/t^b) and all
//! Hensel/vanishing arithmetic live.

use std::fmt;

use num_traits::{One, Zero};

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::num::{Int, Rat};
use crate::unipoly::UniPoly;

#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<Rat>, // length order + 1
}

impl TruncSeries {
    pub fn new(order: usize, mut coeffs: Vec<Rat>) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, Rat::zero());
        TruncSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        TruncSeries::constant(Rat::one(), order)
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        TruncSeries::new(order, vec![c])
    }

    /// c * t^k (zero if k exceeds the order).
    pub fn monomial(c: Rat, k: usize, order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Restricts to a lower (or equal) order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "truncate never pads");
        TruncSeries::new(order, self.coeffs[..=order].to_vec())
    }

    fn join_order(&self, other: &Self) -> usize {
        self.order.min(other.order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.join_order(other);
        TruncSeries::new(n, (0..=n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.join_order(other);
        TruncSeries::new(n, (0..=n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        TruncSeries::new(self.order, self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.join_order(other);
        let mut out = vec![Rat::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        TruncSeries::new(n, out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TruncSeries::new(self.order, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn invert(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NotAUnit);
        }
        let c0_inv = Rat::one() / self.coeffs[0].clone();
        let mut out = vec![Rat::zero(); self.order + 1];
        out[0] = c0_inv.clone();
        for k in 1..=self.order {
            let mut acc = Rat::zero();
            for j in 0..k {
                acc += &self.coeffs[k - j] * &out[j];
            }
            out[k] = -acc * &c0_inv;
        }
        Ok(TruncSeries::new(self.order, out))
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] + O(t^{})", self.order + 1)
    }
}

/// Polynomial in eta with truncated-series coefficients of a common order.
#[derive(Clone, PartialEq, Eq)]
pub struct SeriesPoly {
    order: usize,
    coeffs: Vec<TruncSeries>, // coeffs[j] multiplies eta^j; trimmed
}

impl SeriesPoly {
    pub fn new(order: usize, mut coeffs: Vec<TruncSeries>) -> Self {
        for c in &mut coeffs {
            assert_eq!(c.order(), order, "coefficient series share one order");
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SeriesPoly { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        SeriesPoly::new(order, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in eta, or None when zero.
    pub fn deg_eta(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, j: usize) -> TruncSeries {
        self.coeffs
            .get(j)
            .cloned()
            .unwrap_or_else(|| TruncSeries::zero(self.order))
    }

    pub fn coeffs(&self) -> &[TruncSeries] {
        &self.coeffs
    }

    pub fn leading(&self) -> &TruncSeries {
        self.coeffs.last().expect("leading of zero polynomial")
    }

    /// True when the leading eta-coefficient is the constant series 1.
    pub fn is_monic(&self) -> bool {
        !self.is_zero() && {
            let l = self.leading();
            l.coeff(0).is_one() && (1..=l.order()).all(|k| l.coeff(k).is_zero())
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        SeriesPoly::new(order, self.coeffs.iter().map(|c| c.truncate(order)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            out.push(self.coeff(j).truncate(order).add(&other.coeff(j).truncate(order)));
        }
        SeriesPoly::new(order, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        SeriesPoly::new(self.order, self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        if self.is_zero() || other.is_zero() {
            return SeriesPoly::zero(order);
        }
        let mut out = vec![TruncSeries::zero(order); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.truncate(order).mul(&b.truncate(order)));
            }
        }
        SeriesPoly::new(order, out)
    }

    pub fn mul_series(&self, s: &TruncSeries) -> Self {
        let order = self.order.min(s.order());
        SeriesPoly::new(
            order,
            self.coeffs
                .iter()
                .map(|c| c.truncate(order).mul(&s.truncate(order)))
                .collect(),
        )
    }

    /// The t^k slice as a polynomial in eta.
    pub fn t_slice(&self, k: usize) -> UniPoly<Rat> {
        UniPoly::new(self.coeffs.iter().map(|c| c.coeff(k)).collect())
    }

    /// Sets t = 0.
    pub fn at_zero(&self) -> UniPoly<Rat> {
        self.t_slice(0)
    }

    /// Embeds a rational eta-polynomial as a t-constant series polynomial.
    pub fn from_eta_poly(p: &UniPoly<Rat>, order: usize) -> Self {
        SeriesPoly::new(
            order,
            p.coeffs()
                .iter()
                .map(|c| TruncSeries::constant(c.clone(), order))
                .collect(),
        )
    }

    /// p += c * t^k * eta^j * q, used by the lifting loop.
    pub fn add_slice(&self, q: &UniPoly<Rat>, k: usize) -> Self {
        let order = self.order;
        let n = self.coeffs.len().max(q.coeffs().len());
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let mut c = self.coeff(j);
            if !q.coeff(j).is_zero() {
                c = c.add(&TruncSeries::monomial(q.coeff(j), k, order));
            }
            out.push(c);
        }
        SeriesPoly::new(order, out)
    }
}

impl fmt::Debug for SeriesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 + O(t^{})", self.order + 1);
        }
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c:?})*eta^{j}")?;
        }
        Ok(())
    }
}

/// Weighted dehomogenization t^w * F(1/t^a, eta/t^b): each monomial
/// x^m y^n maps to t^(w - a m - b n) eta^n. Exact (the result is a
/// polynomial in t); errors when w does not dominate the support.
pub fn weighted_substitute(f: &BiPoly, a: i64, b: i64, w: i64, order: usize) -> Result<SeriesPoly> {
    let mut coeffs = vec![TruncSeries::zero(order); f.deg_y() as usize + 1];
    for (&(m, n), c) in f.terms() {
        let k = w - a * m as i64 - b * n as i64;
        if k < 0 {
            return Err(Error::Weight { w, m, n, mw: a * m as i64 + b * n as i64 });
        }
        let t = TruncSeries::monomial(Rat::from_integer(c.clone()), k as usize, order);
        coeffs[n as usize] = coeffs[n as usize].add(&t);
    }
    Ok(SeriesPoly::new(order, coeffs))
}

/// Remainder of eta-division of p by a monic g, working mod t^(order+1)
/// where order is the smaller of the two operand orders.
pub fn series_reduce(p: &SeriesPoly, g: &SeriesPoly) -> Result<SeriesPoly> {
    if g.is_zero() || g.deg_eta() == Some(0) || !g.is_monic() {
        return Err(Error::Monicity);
    }
    let order = p.order().min(g.order());
    let g = g.truncate(order);
    let dg = g.deg_eta().unwrap();
    let mut rem = p.truncate(order);
    while rem.deg_eta().map_or(false, |d| d >= dg) {
        let d = rem.deg_eta().unwrap();
        let lead = rem.leading().clone();
        // rem -= lead * eta^(d - dg) * g
        let mut shifted = vec![TruncSeries::zero(order); d - dg];
        for c in g.coeffs() {
            shifted.push(c.mul(&lead));
        }
        rem = rem.sub(&SeriesPoly::new(order, shifted));
    }
    Ok(rem)
}

/// Quotient and remainder of eta-division by a monic divisor.
pub fn series_div_rem(p: &SeriesPoly, g: &SeriesPoly) -> Result<(SeriesPoly, SeriesPoly)> {
    if g.is_zero() || !g.is_monic() {
        return Err(Error::Monicity);
    }
    let order = p.order().min(g.order());
    let g = g.truncate(order);
    let dg = g.deg_eta().unwrap();
    let mut rem = p.truncate(order);
    let mut quot = SeriesPoly::zero(order);
    while rem.deg_eta().map_or(false, |d| d >= dg) {
        let d = rem.deg_eta().unwrap();
        let lead = rem.leading().clone();
        let mut term = vec![TruncSeries::zero(order); d - dg];
        term.push(lead);
        let term = SeriesPoly::new(order, term);
        quot = quot.add(&term);
        rem = rem.sub(&term.mul(&g));
    }
    Ok((quot, rem))
}

/// Integer-coefficient eta-polynomial embedded at a given order.
pub fn eta_poly_int(p: &UniPoly<Int>, order: usize) -> SeriesPoly {
    SeriesPoly::from_eta_poly(&p.to_rat(), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_int};

    fn f1() -> BiPoly {
        BiPoly::from_terms(&[(0, 6, 1), (0, 5, -2), (4, 2, -4), (2, 1, 17), (1, 0, 4), (0, 0, -18)])
    }

    #[test]
    fn series_inverse() {
        // (2 + t)^-1 = 1/2 - t/4 + t^2/8 - ...
        let s = TruncSeries::new(3, vec![rat_int(2), rat_int(1)]);
        let inv = s.invert().unwrap();
        assert_eq!(inv.coeffs(), &[rat(1, 2), rat(-1, 4), rat(1, 8), rat(-1, 16)]);
        assert!(s.mul(&inv).sub(&TruncSeries::one(3)).is_zero());
        assert!(TruncSeries::monomial(rat_int(1), 1, 3).invert().is_err());
    }

    #[test]
    fn weighted_substitute_example_one() {
        // t^6 F(1/t, eta/t) = 4t^5 - 18t^6 + 17t^3 eta - 4 eta^2 - 2t eta^5 + eta^6
        let f = weighted_substitute(&f1(), 1, 1, 6, 6).unwrap();
        assert_eq!(f.deg_eta(), Some(6));
        assert_eq!(f.t_slice(0), UniPoly::new(vec![
            rat_int(0), rat_int(0), rat_int(-4), rat_int(0), rat_int(0), rat_int(0), rat_int(1),
        ]));
        assert_eq!(f.coeff(1).coeff(3), rat_int(17));
        assert_eq!(f.coeff(5).coeff(1), rat_int(-2));
        assert_eq!(f.coeff(0).coeff(5), rat_int(4));
        assert_eq!(f.coeff(0).coeff(6), rat_int(-18));
    }

    #[test]
    fn weighted_substitute_example_three_base() {
        // t^12 F(1/t^2, eta/t^3) at t=0 is eta^4 - 3 eta^2 + 2
        let f3 = BiPoly::from_terms(&[(0, 4, 1), (3, 2, -3), (6, 0, 2), (5, 0, 2), (1, 1, -9), (0, 0, -3)]);
        let f = weighted_substitute(&f3, 2, 3, 12, 12).unwrap();
        let base = f.at_zero();
        assert_eq!(
            base,
            UniPoly::new(vec![rat_int(2), rat_int(0), rat_int(-3), rat_int(0), rat_int(1)])
        );
    }

    #[test]
    fn weighted_substitute_trivial_and_error() {
        let one = BiPoly::constant(crate::num::int(1));
        let f = weighted_substitute(&one, 3, 2, 0, 4).unwrap();
        assert_eq!(f.deg_eta(), Some(0));
        assert!(f.coeff(0).coeff(0).is_one());
        assert!(weighted_substitute(&f1(), 1, 1, 5, 5).is_err());
    }

    #[test]
    fn reduce_by_self_is_zero() {
        let g = weighted_substitute(&f1(), 1, 1, 6, 4).unwrap();
        // make monic divisor: f1 is already monic in eta
        assert!(g.is_monic());
        let r = series_reduce(&g, &g).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn div_rem_recomposes() {
        let p = weighted_substitute(&f1(), 1, 1, 6, 5).unwrap();
        let g = SeriesPoly::new(
            5,
            vec![
                TruncSeries::new(5, vec![rat_int(-2), rat_int(0), rat(-1, 2)]),
                TruncSeries::new(5, vec![rat_int(0), rat_int(-1)]),
                TruncSeries::one(5),
            ],
        );
        let (q, r) = series_div_rem(&p, &g).unwrap();
        assert!(r.deg_eta().unwrap_or(0) < g.deg_eta().unwrap());
        assert_eq!(q.mul(&g).add(&r), p);
        assert_eq!(series_reduce(&p, &g).unwrap(), r);
    }

    #[test]
    fn non_monic_divisor_rejected() {
        let p = weighted_substitute(&f1(), 1, 1, 6, 3).unwrap();
        let g = SeriesPoly::new(3, vec![TruncSeries::one(3), TruncSeries::constant(rat_int(2), 3)]);
        assert!(matches!(series_reduce(&p, &g), Err(Error::Monicity)));
    }
}
