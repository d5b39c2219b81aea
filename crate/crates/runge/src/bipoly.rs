//! Sparse bivariate integer polynomials, plus the resultant machinery.
//!
//! Terms are a `BTreeMap<(m, n), Int>` mapping the exponent pair of
//! `x^m y^n` to its nonzero coefficient, with the two degrees cached at
//! construction. Resultants with respect to y are computed exactly over
//! `Z[x]` by fraction-free (Bareiss) elimination of the Sylvester matrix.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::num::{Int, Rat};
use crate::unipoly::UniPoly;

#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Int>,
    deg_x: u32,
    deg_y: u32,
}

impl BiPoly {
    pub fn new(terms: BTreeMap<(u32, u32), Int>) -> Self {
        let mut t = terms;
        t.retain(|_, c| !c.is_zero());
        let deg_x = t.keys().map(|&(m, _)| m).max().unwrap_or(0);
        let deg_y = t.keys().map(|&(_, n)| n).max().unwrap_or(0);
        BiPoly {
            terms: t,
            deg_x,
            deg_y,
        }
    }

    pub fn zero() -> Self {
        BiPoly::new(BTreeMap::new())
    }

    pub fn constant(c: Int) -> Self {
        let mut t = BTreeMap::new();
        t.insert((0, 0), c);
        BiPoly::new(t)
    }

    pub fn monomial(c: Int, m: u32, n: u32) -> Self {
        let mut t = BTreeMap::new();
        t.insert((m, n), c);
        BiPoly::new(t)
    }

    /// Convenience constructor from (m, n, coefficient) triples.
    pub fn from_terms(terms: &[(u32, u32, i64)]) -> Self {
        let mut t = BTreeMap::new();
        for &(m, n, c) in terms {
            let e = t.entry((m, n)).or_insert_with(Int::zero);
            *e += Int::from(c);
        }
        BiPoly::new(t)
    }

    pub fn var_x() -> Self {
        BiPoly::monomial(Int::one(), 1, 0)
    }

    pub fn var_y() -> Self {
        BiPoly::monomial(Int::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn deg_x(&self) -> u32 {
        self.deg_x
    }

    pub fn deg_y(&self) -> u32 {
        self.deg_y
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Int)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: u32, n: u32) -> Int {
        self.terms.get(&(m, n)).cloned().unwrap_or_else(Int::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut t = self.terms.clone();
        for (&k, c) in &other.terms {
            let e = t.entry(k).or_insert_with(Int::zero);
            *e += c;
        }
        BiPoly::new(t)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BiPoly::new(self.terms.iter().map(|(&k, c)| (k, -c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut t: BTreeMap<(u32, u32), Int> = BTreeMap::new();
        for (&(m1, n1), c1) in &self.terms {
            for (&(m2, n2), c2) in &other.terms {
                let e = t.entry((m1 + m2, n1 + n2)).or_insert_with(Int::zero);
                *e += c1 * c2;
            }
        }
        BiPoly::new(t)
    }

    pub fn scale(&self, c: &Int) -> Self {
        BiPoly::new(self.terms.iter().map(|(&k, a)| (k, a * c)).collect())
    }

    pub fn add_scalar(&self, c: &Int) -> Self {
        self.add(&BiPoly::constant(c.clone()))
    }

    /// Exact division by lead-term cancellation in lex order on (n, m);
    /// errors unless the quotient exists over the integers.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::Division("division by zero polynomial".into()));
        }
        let dlead = *d
            .terms
            .keys()
            .max_by_key(|&&(m, n)| (n, m))
            .expect("nonzero divisor");
        let dc = d.terms[&dlead].clone();
        let mut rem = self.clone();
        let mut quot: BTreeMap<(u32, u32), Int> = BTreeMap::new();
        while !rem.is_zero() {
            let rlead = *rem.terms.keys().max_by_key(|&&(m, n)| (n, m)).unwrap();
            if rlead.0 < dlead.0 || rlead.1 < dlead.1 {
                return Err(Error::Division("leading monomial not divisible".into()));
            }
            let (q, r) = rem.terms[&rlead].div_rem(&dc);
            if !r.is_zero() {
                return Err(Error::Division("leading coefficient not divisible".into()));
            }
            let shift = (rlead.0 - dlead.0, rlead.1 - dlead.1);
            rem = rem.sub(&d.mul(&BiPoly::monomial(q.clone(), shift.0, shift.1)));
            quot.insert(shift, q);
        }
        Ok(BiPoly::new(quot))
    }

    /// gcd of all coefficients, nonnegative.
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        BiPoly::new(self.terms.iter().map(|(&k, c)| (k, c / &g)).collect())
    }

    pub fn partial_x(&self) -> Self {
        BiPoly::new(
            self.terms
                .iter()
                .filter(|(&(m, _), _)| m > 0)
                .map(|(&(m, n), c)| ((m - 1, n), c * Int::from(m)))
                .collect(),
        )
    }

    pub fn partial_y(&self) -> Self {
        BiPoly::new(
            self.terms
                .iter()
                .filter(|(&(_, n), _)| n > 0)
                .map(|(&(m, n), c)| ((m, n - 1), c * Int::from(n)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Int, y: &Int) -> Int {
        let mut acc = Int::zero();
        for (&(m, n), c) in &self.terms {
            acc += c * x.pow(m) * y.pow(n);
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat, y: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(m, n), c) in &self.terms {
            acc += Rat::from_integer(c.clone()) * x.pow(m as i32) * y.pow(n as i32);
        }
        acc
    }

    /// Specializes x to an integer, leaving a univariate polynomial in y.
    pub fn eval_x(&self, x: &Int) -> UniPoly<Int> {
        let mut coeffs = vec![Int::zero(); self.deg_y as usize + 1];
        for (&(m, n), c) in &self.terms {
            coeffs[n as usize] += c * x.pow(m);
        }
        UniPoly::new(coeffs)
    }

    /// Interchanges the two variables.
    pub fn swap_vars(&self) -> Self {
        BiPoly::new(self.terms.iter().map(|(&(m, n), c)| ((n, m), c.clone())).collect())
    }

    /// x -> -x.
    pub fn reflect_x(&self) -> Self {
        BiPoly::new(
            self.terms
                .iter()
                .map(|(&(m, n), c)| ((m, n), if m % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        )
    }

    /// Views the polynomial as a polynomial in y with coefficients in Z[x];
    /// entry n of the result is the x-polynomial multiplying y^n.
    pub fn y_coefficients(&self) -> Vec<UniPoly<Int>> {
        let mut out = vec![UniPoly::zero(); self.deg_y as usize + 1];
        let mut cols: Vec<Vec<Int>> = vec![vec![Int::zero(); self.deg_x as usize + 1]; out.len()];
        for (&(m, n), c) in &self.terms {
            cols[n as usize][m as usize] = c.clone();
        }
        for (n, col) in cols.into_iter().enumerate() {
            out[n] = UniPoly::new(col);
        }
        out
    }

    /// Coefficient of y^(deg_y) as a polynomial in x.
    pub fn leading_y_coefficient(&self) -> UniPoly<Int> {
        let mut coeffs = vec![Int::zero(); self.deg_x as usize + 1];
        for (&(m, n), c) in &self.terms {
            if n == self.deg_y {
                coeffs[m as usize] = c.clone();
            }
        }
        UniPoly::new(coeffs)
    }

    /// Coefficient of x^(deg_x) as a polynomial in y.
    pub fn leading_x_coefficient(&self) -> UniPoly<Int> {
        let mut coeffs = vec![Int::zero(); self.deg_y as usize + 1];
        for (&(m, n), c) in &self.terms {
            if m == self.deg_x {
                coeffs[n as usize] = c.clone();
            }
        }
        UniPoly::new(coeffs)
    }

    /// Builds a polynomial in y alone.
    pub fn from_y_poly(p: &UniPoly<Int>) -> Self {
        BiPoly::new(
            p.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(n, c)| ((0, n as u32), c.clone()))
                .collect(),
        )
    }

    /// Weight max(a*m + b*n) over the support; None for the zero polynomial.
    pub fn weight(&self, a: i64, b: i64) -> Option<i64> {
        self.terms
            .keys()
            .map(|&(m, n)| a * m as i64 + b * n as i64)
            .max()
    }
}

/// Determinant of an n x n matrix over Z[x] by fraction-free Bareiss
/// elimination; row swaps flip the sign, a zero column short-circuits to 0.
fn bareiss_det(mut m: Vec<Vec<UniPoly<Int>>>) -> UniPoly<Int> {
    let n = m.len();
    if n == 0 {
        return UniPoly::one();
    }
    let mut sign = 1i8;
    let mut prev = UniPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return UniPoly::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t
                    .exact_div(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            m[i][k] = UniPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

/// Resultant of F and G with respect to y, as a polynomial in x.
///
/// Equals the determinant of the Sylvester matrix of F, G viewed as
/// polynomials in y over Z[x]; zero iff the inputs share a factor of
/// positive y-degree.
pub fn resultant_y(f: &BiPoly, g: &BiPoly) -> Result<UniPoly<Int>> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::DegenerateResultant);
    }
    let (df, dg) = (f.deg_y() as usize, g.deg_y() as usize);
    if df == 0 && dg == 0 {
        return Err(Error::DegenerateResultant);
    }
    let fc = f.y_coefficients();
    let gc = g.y_coefficients();
    // Res(F, c) = c^deg(F) for a y-constant c (empty block degenerates).
    if dg == 0 {
        let mut acc = UniPoly::one();
        for _ in 0..df {
            acc = acc.mul(&gc[0]);
        }
        return Ok(acc);
    }
    if df == 0 {
        let mut acc = UniPoly::one();
        for _ in 0..dg {
            acc = acc.mul(&fc[0]);
        }
        return Ok(acc);
    }
    let n = df + dg;
    let mut m = vec![vec![UniPoly::zero(); n]; n];
    for row in 0..dg {
        for (j, c) in fc.iter().enumerate() {
            m[row][row + df - j] = c.clone();
        }
    }
    for row in 0..df {
        for (j, c) in gc.iter().enumerate() {
            m[dg + row][row + dg - j] = c.clone();
        }
    }
    Ok(bareiss_det(m))
}

/// Res_y(F, dF/dy), with no leading-coefficient normalization; only the
/// real-root locations are consumed downstream, so the plain resultant is
/// the fixed convention.
pub fn discriminant_y(f: &BiPoly) -> Result<UniPoly<Int>> {
    if f.deg_y() == 0 {
        return Err(Error::DegenerateResultant);
    }
    resultant_y(f, &f.partial_y())
}

impl fmt::Display for BiPoly {
    /// Canonical printer: terms descending in (total degree, m), explicit `*`,
    /// parseable back by the expression grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|&&(m, n)| (std::cmp::Reverse(m as u64 + n as u64), std::cmp::Reverse(m)));
        for (i, &&(m, n)) in keys.iter().enumerate() {
            let c = &self.terms[&(m, n)];
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || (m == 0 && n == 0) {
                parts.push(mag.to_string());
            }
            match m {
                0 => {}
                1 => parts.push("x".into()),
                _ => parts.push(format!("x^{m}")),
            }
            match n {
                0 => {}
                1 => parts.push("y".into()),
                _ => parts.push(format!("y^{n}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::int;

    fn poly(terms: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_terms(terms)
    }

    fn sample_f1() -> BiPoly {
        // y^6 - 2y^5 - 4y^2x^4 + 17yx^2 + 4x - 18
        poly(&[(0, 6, 1), (0, 5, -2), (4, 2, -4), (2, 1, 17), (1, 0, 4), (0, 0, -18)])
    }

    fn sample_f2() -> BiPoly {
        // y^4 + 2y^3 - 9x^2y^2 + 2xy - 15x - 7
        poly(&[(0, 4, 1), (0, 3, 2), (2, 2, -9), (1, 1, 2), (1, 0, -15), (0, 0, -7)])
    }

    #[test]
    fn ring_identity() {
        let x = BiPoly::var_x();
        let y = BiPoly::var_y();
        let lhs = x.add(&y).mul(&x.sub(&y));
        let rhs = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn content_of_mixed_terms() {
        let p = poly(&[(1, 0, 2), (0, 1, 4)]);
        assert_eq!(p.content(), int(2));
        assert_eq!(p.primitive_part(), poly(&[(1, 0, 1), (0, 1, 2)]));
    }

    #[test]
    fn partial_derivative_of_example() {
        // dF/dy for Example 2: 4y^3 + 6y^2 - 18x^2y + 2x
        let expect = poly(&[(0, 3, 4), (0, 2, 6), (2, 1, -18), (1, 0, 2)]);
        assert_eq!(sample_f2().partial_y(), expect);
    }

    #[test]
    fn exact_division_round_trip() {
        let a = poly(&[(0, 1, 1), (1, 0, -1)]); // y - x
        let b = poly(&[(0, 1, 1), (2, 0, 1)]); // y + x^2
        let p = a.mul(&b);
        assert_eq!(p.exact_div(&a).unwrap(), b);
        assert_eq!(p.exact_div(&b).unwrap(), a);
        assert!(p.add_scalar(&int(1)).exact_div(&a).is_err());
    }

    #[test]
    fn trivial_resultant() {
        // Res_y(y - x, y + x) = 2x
        let f = poly(&[(0, 1, 1), (1, 0, -1)]);
        let g = poly(&[(0, 1, 1), (1, 0, 1)]);
        let r = resultant_y(&f, &g).unwrap();
        assert_eq!(r, UniPoly::new(vec![int(0), int(2)]));
    }

    #[test]
    fn resultant_of_shared_factor_vanishes() {
        let a = poly(&[(0, 1, 1), (1, 0, -1)]);
        let b = poly(&[(0, 1, 1), (2, 0, 1)]);
        let c = poly(&[(0, 1, 1), (1, 0, 3)]);
        let r = resultant_y(&a.mul(&b), &a.mul(&c)).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn discriminant_of_double_root_at_zero() {
        // discr_y(y^2 - x) is a nonzero constant multiple of x
        let f = poly(&[(0, 2, 1), (1, 0, -1)]);
        let d = discriminant_y(&f).unwrap();
        assert_eq!(d.degree(), Some(1));
        assert!(d.coeff(0).is_zero());
    }

    #[test]
    fn degenerate_resultant_rejected() {
        let f = poly(&[(1, 0, 1)]);
        let g = poly(&[(2, 0, 3)]);
        assert!(matches!(resultant_y(&f, &g), Err(Error::DegenerateResultant)));
    }

    #[test]
    fn display_round_trip_shape() {
        assert_eq!(
            sample_f1().to_string(),
            "-4*x^4*y^2 + y^6 + 17*x^2*y - 2*y^5 + 4*x - 18"
        );
        assert_eq!(BiPoly::zero().to_string(), "0");
        assert_eq!(BiPoly::constant(int(-7)).to_string(), "-7");
    }
}
