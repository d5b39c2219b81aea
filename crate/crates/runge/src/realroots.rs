//! Exact real-root counting, extreme-root bracketing, and integer-root
//! extraction for univariate integer polynomials.
//!
//! Everything runs on Sturm chains built by a sign-safe primitive
//! pseudo-remainder sequence: each chain element is an integer polynomial
//! equal to the classical Sturm element up to a *positive* rational
//! constant, so sign variations are preserved while coefficients stay
//! small. No floating point anywhere.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::num::{int, rat_ceil, Int, Rat};
use crate::unipoly::UniPoly;

/// Interval endpoint for root counting.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

/// Two-sided bracket for the extreme real roots of a polynomial.
///
/// Every real root lies in [lo, hi]; lo is within the requested width below
/// the smallest root and hi within it above the largest.
#[derive(Clone, Debug, PartialEq)]
pub struct RootBounds {
    pub lo: Rat,
    pub hi: Rat,
}

/// Sturm chain of the squarefree part of a polynomial.
pub struct SturmChain {
    chain: Vec<UniPoly<Int>>,
}

/// Remainder of a by b up to a positive constant, content-stripped.
fn positive_prem(a: &UniPoly<Int>, b: &UniPoly<Int>) -> UniPoly<Int> {
    let db = b.degree().expect("nonzero divisor") as i64;
    let lcb = b.lc().clone();
    let lcb2 = &lcb * &lcb;
    let mut rem = a.clone();
    while rem.deg_i() >= db {
        let k = (rem.deg_i() - db) as usize;
        let lead = rem.lc().clone();
        rem = rem.scale(&lcb2).sub(&b.shift_up(k).scale(&(lead * &lcb)));
        rem = rem.primitive_part();
    }
    rem
}

impl SturmChain {
    pub fn new(f: &UniPoly<Int>) -> Self {
        assert!(!f.is_zero(), "Sturm chain of zero polynomial");
        let s0 = f.squarefree_part();
        let mut chain = vec![s0.clone()];
        if s0.deg_i() >= 1 {
            let mut prev = s0.clone();
            let mut cur = s0.derivative().primitive_part();
            while !cur.is_zero() {
                chain.push(cur.clone());
                if cur.deg_i() == 0 {
                    break;
                }
                let next = positive_prem(&prev, &cur).neg();
                prev = cur;
                cur = next;
            }
        }
        SturmChain { chain }
    }

    fn sign_at(&self, p: &UniPoly<Int>, at: &Bound) -> i8 {
        match at {
            Bound::Finite(q) => p.sign_at(q.numer(), q.denom()),
            Bound::PosInf => {
                if p.is_zero() {
                    0
                } else if p.lc().is_positive() {
                    1
                } else {
                    -1
                }
            }
            Bound::NegInf => {
                if p.is_zero() {
                    return 0;
                }
                let s = if p.lc().is_positive() { 1 } else { -1 };
                if p.degree().unwrap() % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    /// Sign variations at a point, zeros dropped.
    pub fn variations_at(&self, at: &Bound) -> usize {
        let mut count = 0;
        let mut last: i8 = 0;
        for p in &self.chain {
            let s = self.sign_at(p, at);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in (lo, hi].
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        let vl = self.variations_at(lo);
        let vh = self.variations_at(hi);
        vl.saturating_sub(vh)
    }
}

/// Exact number of distinct real roots of f in (lo, hi].
pub fn sturm_count(f: &UniPoly<Int>, lo: &Bound, hi: &Bound) -> usize {
    SturmChain::new(f).count(lo, hi)
}

/// Integer N with every real root of f strictly inside (-N, N)
/// (Cauchy bound of the squarefree part, rounded up).
fn cauchy_bound_int(f: &UniPoly<Int>) -> Int {
    let d = f.degree().expect("nonzero polynomial");
    let lc = Rat::from_integer(f.lc().abs());
    let mut m = Rat::zero();
    for k in 0..d {
        let v = Rat::from_integer(f.coeff(k).abs()) / lc.clone();
        if v > m {
            m = v;
        }
    }
    rat_ceil(&(m + Rat::one()))
}

/// Two-sided bracket of the extreme real roots to width eps, or None when
/// f has no real roots.
pub fn real_root_bounds(f: &UniPoly<Int>, eps: &Rat) -> Result<Option<RootBounds>> {
    if f.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial".into()));
    }
    assert!(eps.is_positive(), "eps must be positive");
    if f.deg_i() == 0 {
        return Ok(None);
    }
    let chain = SturmChain::new(f);
    let total = chain.count(&Bound::NegInf, &Bound::PosInf);
    if total == 0 {
        return Ok(None);
    }
    let bc = cauchy_bound_int(&f.squarefree_part());

    // Largest root: keep count((l, inf)) >= 1 and count((u, inf)) == 0.
    let above = |q: &Rat| chain.count(&Bound::Finite(q.clone()), &Bound::PosInf);
    let mut l = Rat::from_integer(-bc.clone());
    let mut u = Rat::from_integer(bc.clone());
    let two = Rat::from_integer(int(2));
    while &u - &l > Rat::one() {
        let m = ((&l + &u) / &two).floor();
        if above(&m) >= 1 {
            l = m;
        } else {
            u = m;
        }
    }
    while &u - &l > *eps {
        let m = (&l + &u) / &two;
        if above(&m) >= 1 {
            l = m;
        } else {
            u = m;
        }
    }
    let hi = u;

    // Smallest root: keep count((-inf, l]) == 0 and count((-inf, u]) >= 1.
    let upto = |q: &Rat| chain.count(&Bound::NegInf, &Bound::Finite(q.clone()));
    let mut l = Rat::from_integer(-bc.clone());
    let mut u = Rat::from_integer(bc);
    while &u - &l > Rat::one() {
        let m = ((&l + &u) / &two).floor();
        if upto(&m) == 0 {
            l = m;
        } else {
            u = m;
        }
    }
    while &u - &l > *eps {
        let m = (&l + &u) / &two;
        if upto(&m) == 0 {
            l = m;
        } else {
            u = m;
        }
    }
    Ok(Some(RootBounds { lo: l, hi }))
}

/// All integer roots of f, ascending. Sturm isolation to unit width plus
/// exact evaluation of the candidate; no divisor enumeration.
pub fn integer_roots(f: &UniPoly<Int>) -> Result<Vec<Int>> {
    if f.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial".into()));
    }
    let (val, stripped) = f.strip_power();
    let mut roots = Vec::new();
    if val > 0 {
        roots.push(Int::zero());
    }
    if stripped.deg_i() >= 1 {
        let chain = SturmChain::new(&stripped);
        let bc = cauchy_bound_int(&stripped.squarefree_part());
        let fin = |n: &Int| Bound::Finite(Rat::from_integer(n.clone()));
        let mut stack = vec![(-bc.clone(), bc.clone())];
        while let Some((a, b)) = stack.pop() {
            let cnt = chain.count(&fin(&a), &fin(&b));
            if cnt == 0 {
                continue;
            }
            if &b - &a == Int::one() {
                if stripped.eval(&b).is_zero() {
                    roots.push(b);
                }
                continue;
            }
            let m = (&a + &b) / int(2);
            stack.push((a, m.clone()));
            stack.push((m, b));
        }
    }
    roots.sort();
    Ok(roots)
}

/// Count of real roots strictly above x; the ray check used by the
/// certificate verifier.
pub fn count_above(f: &UniPoly<Int>, x: &Rat) -> usize {
    sturm_count(f, &Bound::Finite(x.clone()), &Bound::PosInf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_int};

    fn ip(cs: &[i64]) -> UniPoly<Int> {
        UniPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn count_basic() {
        let f = ip(&[-2, 0, 1]); // x^2 - 2
        assert_eq!(sturm_count(&f, &Bound::Finite(rat_int(0)), &Bound::Finite(rat_int(2))), 1);
        assert_eq!(sturm_count(&f, &Bound::NegInf, &Bound::PosInf), 2);
        assert_eq!(sturm_count(&f, &Bound::Finite(rat_int(2)), &Bound::PosInf), 0);
    }

    #[test]
    fn count_half_open_endpoints() {
        // roots 0 and 1; (0, 1] holds exactly one, (-1, 0] the other
        let f = ip(&[0, -1, 1]); // x(x-1)... coefficients: x^2 - x
        let fin = |v: i64| Bound::Finite(rat_int(v));
        assert_eq!(sturm_count(&f, &fin(0), &fin(1)), 1);
        assert_eq!(sturm_count(&f, &fin(-1), &fin(0)), 1);
        assert_eq!(sturm_count(&f, &fin(1), &fin(5)), 0);
    }

    #[test]
    fn count_with_multiplicities_collapsed() {
        // (x-1)^2 (x+2): two distinct real roots
        let f = ip(&[1, -2, 1]).mul(&ip(&[2, 1]));
        assert_eq!(sturm_count(&f, &Bound::NegInf, &Bound::PosInf), 2);
    }

    #[test]
    fn bounds_none_for_positive_definite() {
        let f = ip(&[1, 0, 1]); // x^2 + 1
        assert!(real_root_bounds(&f, &rat(1, 100)).unwrap().is_none());
    }

    #[test]
    fn bounds_bracket_sqrt_two() {
        let f = ip(&[-2, 0, 1]);
        let b = real_root_bounds(&f, &rat(1, 128)).unwrap().unwrap();
        // sqrt(2) = 1.41421..., -sqrt(2) bracketed from below
        assert!(b.hi > rat(141, 100) && b.hi < rat(143, 100));
        assert!(b.lo < rat(-141, 100) && b.lo > rat(-143, 100));
        assert_eq!(count_above(&f, &b.hi), 0);
        assert_eq!(sturm_count(&f, &Bound::NegInf, &Bound::Finite(b.lo.clone())), 0);
    }

    #[test]
    fn integer_roots_examples() {
        assert_eq!(integer_roots(&ip(&[-2, 0, 1])).unwrap(), Vec::<Int>::new());
        // x^2 (x-7) (x+5)
        let f = ip(&[0, 0, 1]).mul(&ip(&[-7, 1])).mul(&ip(&[5, 1]));
        assert_eq!(integer_roots(&f).unwrap(), vec![int(-5), int(0), int(7)]);
        // large root magnitude
        let g = ip(&[-1000000, 1]).mul(&ip(&[3, 2]));
        assert_eq!(integer_roots(&g).unwrap(), vec![int(1000000)]);
    }

    #[test]
    fn roots_divide_trailing_coefficient() {
        let f = ip(&[12, -4, -3, 1]); // (x-1)(x+... just check the invariant
        for r in integer_roots(&f).unwrap() {
            if !r.is_zero() {
                assert!((int(12) % &r).is_zero());
            }
        }
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(real_root_bounds(&UniPoly::zero(), &rat(1, 100)).is_err());
        assert!(integer_roots(&UniPoly::zero()).is_err());
    }
}
