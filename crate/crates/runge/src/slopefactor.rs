//! Decomposition of the slope polynomial into coprime branch groups.
//!
//! The slope polynomial F_E is quasi-homogeneous: writing it as
//! x^m1 y^n_bot Q((y^a) / (x^b)-graded) compresses it to a univariate
//! integer polynomial Q in z, with f0(eta) = F_E(1, eta) = eta^n_bot
//! Q(eta^a). Q is factored over Z (squarefree decomposition, then
//! exhaustive Kronecker search), and the groups are eta^n_bot plus one
//! group q(eta^a)^e per irreducible factor q. Factoring in the compressed
//! variable z, never on f0 directly, keeps every factor a polynomial in
//! eta^a, so each group is a union of complete conjugate branch orbits.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::num::{Int, Rat};
use crate::polygon::Slope;
use crate::realroots::{sturm_count, Bound};
use crate::unipoly::UniPoly;

/// Compressed form of a slope polynomial:
/// F_E = x^m1 y^n_bot * sum_k Q_k (y^a)^k (x^b)^(K-k) with Q(0) != 0.
#[derive(Clone, Debug)]
pub struct Compressed {
    pub m1: i64,
    pub n_bot: i64,
    pub q: UniPoly<Int>,
}

impl Compressed {
    pub fn k_deg(&self) -> usize {
        self.q.degree().expect("Q is nonzero")
    }

    /// f0(eta) = F_E(1, eta) = eta^n_bot * Q(eta^a).
    pub fn base_poly(&self, a: i64) -> UniPoly<Int> {
        compose_power(&self.q, a as usize).shift_up(self.n_bot as usize)
    }
}

/// q(z) -> q(eta^a).
pub fn compose_power(q: &UniPoly<Int>, a: usize) -> UniPoly<Int> {
    if q.is_zero() {
        return UniPoly::zero();
    }
    let mut coeffs = vec![Int::zero(); q.degree().unwrap() * a + 1];
    for (k, c) in q.coeffs().iter().enumerate() {
        coeffs[k * a] = c.clone();
    }
    UniPoly::new(coeffs)
}

/// Compresses a slope polynomial along its slope. Errors unless the
/// support lies exactly on the slope line.
pub fn compress(fe: &BiPoly, s: &Slope) -> Result<Compressed> {
    if fe.is_zero() {
        return Err(Error::NotQuasiHomogeneous);
    }
    let n_top = fe.deg_y() as i64;
    let n_bot = fe.terms().map(|(&(_, n), _)| n as i64).min().unwrap();
    let m1 = fe
        .terms()
        .filter(|(&(_, n), _)| n as i64 == n_top)
        .map(|(&(m, _), _)| m as i64)
        .min()
        .unwrap();
    let span = n_top - n_bot;
    if span % s.a != 0 {
        return Err(Error::NotQuasiHomogeneous);
    }
    let k_deg = (span / s.a) as usize;
    let mut coeffs = vec![Int::zero(); k_deg + 1];
    for (&(m, n), c) in fe.terms() {
        if s.monomial_weight(m, n) != s.w {
            return Err(Error::NotQuasiHomogeneous);
        }
        let dn = n_top - n as i64;
        if dn % s.a != 0 || dn < 0 {
            return Err(Error::NotQuasiHomogeneous);
        }
        let j = (dn / s.a) as usize;
        if m as i64 != m1 + j as i64 * s.b || j > k_deg {
            return Err(Error::NotQuasiHomogeneous);
        }
        coeffs[k_deg - j] = c.clone();
    }
    let q = UniPoly::new(coeffs);
    if q.coeff(0).is_zero() || q.degree() != Some(k_deg) {
        return Err(Error::NotQuasiHomogeneous);
    }
    let c = Compressed { m1, n_bot, q };
    debug_assert_eq!(&reconstruct(&c, s), fe);
    Ok(c)
}

/// Rebuilds F_E from its compressed form (exactness check).
pub fn reconstruct(c: &Compressed, s: &Slope) -> BiPoly {
    let k = c.k_deg();
    let mut terms = std::collections::BTreeMap::new();
    for (i, coeff) in c.q.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let j = k - i; // steps down from the top endpoint
        let m = c.m1 + j as i64 * s.b;
        let n = c.n_bot + i as i64 * s.a;
        terms.insert((m as u32, n as u32), coeff.clone());
    }
    BiPoly::new(terms)
}

/// Divisors of |n| with both signs, positive first. None when |n| is too
/// large to factor by trial division.
fn signed_divisors(n: &Int, positive_only: bool) -> Option<Vec<Int>> {
    let n = n.abs();
    debug_assert!(!n.is_zero());
    let mut divs: Vec<Int> = Vec::new();
    let mut d = Int::one();
    let cap = Int::from(2_000_000u64);
    loop {
        if (&d * &d) > n {
            break;
        }
        if (&n % &d).is_zero() {
            divs.push(d.clone());
            let q = &n / &d;
            if q != d {
                divs.push(q);
            }
        }
        d += 1;
        if d > cap {
            return None;
        }
    }
    divs.sort();
    if !positive_only {
        let negs: Vec<Int> = divs.iter().map(|d| -d.clone()).collect();
        divs.extend(negs);
    }
    Some(divs)
}

/// Lagrange interpolation through integer points, over Q.
fn interpolate(points: &[(Int, Int)]) -> UniPoly<Rat> {
    let mut acc = UniPoly::<Rat>::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut num = UniPoly::constant(Rat::from_integer(yi.clone()));
        let mut den = Rat::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            num = num.mul(&UniPoly::new(vec![
                Rat::from_integer(-xj.clone()),
                Rat::one(),
            ]));
            den *= Rat::from_integer(xi - xj);
        }
        acc = acc.add(&num.scale(&(Rat::one() / den)));
    }
    acc
}

/// Evaluation points 0, 1, -1, 2, -2, ...
fn eval_point(i: usize) -> Int {
    let k = (i + 1) / 2;
    if i % 2 == 1 {
        Int::from(k as i64)
    } else {
        Int::from(-(k as i64))
    }
}

/// Exhaustive Kronecker factor search on a squarefree primitive polynomial.
/// Splits off one factor and recurses; pushes irreducibles onto `out`.
fn kronecker(s: UniPoly<Int>, out: &mut Vec<UniPoly<Int>>) -> Result<()> {
    let deg = s.deg_i();
    if deg <= 0 {
        return Ok(());
    }
    if deg == 1 {
        out.push(s.primitive_positive());
        return Ok(());
    }
    let deg = deg as usize;
    // Values at the sample points; a zero value is a rational root, split it.
    let mut values: Vec<(Int, Int)> = Vec::new();
    for i in 0.. {
        if values.len() > deg / 2 {
            break;
        }
        let x = eval_point(i);
        let v = s.eval(&x);
        if v.is_zero() {
            let lin = UniPoly::new(vec![-x, Int::one()]);
            let rest = s.exact_div(&lin)?;
            out.push(lin);
            return kronecker(rest.primitive_positive(), out);
        }
        values.push((x, v));
    }

    for k in 1..=deg / 2 {
        let pts = &values[..=k];
        let divisor_lists: Vec<Vec<Int>> = {
            let mut lists = Vec::with_capacity(k + 1);
            for (i, (_, v)) in pts.iter().enumerate() {
                match signed_divisors(v, i == 0) {
                    Some(l) => lists.push(l),
                    None => {
                        return Err(Error::DegenerateInput(
                            "coefficients too large for Kronecker factor search".into(),
                        ))
                    }
                }
            }
            lists
        };
        let mut idx = vec![0usize; k + 1];
        'combos: loop {
            let candidate: Vec<(Int, Int)> = pts
                .iter()
                .enumerate()
                .map(|(i, (x, _))| (x.clone(), divisor_lists[i][idx[i]].clone()))
                .collect();
            let g = interpolate(&candidate);
            if g.degree() == Some(k) {
                if let Some(gi) = g.to_int() {
                    let gp = gi.primitive_positive();
                    if gp.deg_i() as usize == k {
                        if let Ok(rest) = s.exact_div(&gp) {
                            kronecker(gp, out)?;
                            return kronecker(rest.primitive_positive(), out);
                        }
                    }
                }
            }
            // advance the odometer
            for pos in 0..=k {
                idx[pos] += 1;
                if idx[pos] < divisor_lists[pos].len() {
                    continue 'combos;
                }
                idx[pos] = 0;
            }
            break;
        }
    }
    out.push(s.primitive_positive());
    Ok(())
}

/// Squarefree decomposition over Q (Yun), returned as primitive integer
/// parts with their multiplicities; part_i^i multiply back to the
/// primitive part of f up to sign.
pub fn squarefree_decomposition(f: &UniPoly<Int>) -> Vec<(UniPoly<Int>, usize)> {
    let fr = f.to_rat().monic();
    if fr.deg_i() <= 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let g = fr.gcd(&fr.derivative());
    let mut c = fr.div_rem(&g).0;
    let mut d = fr.derivative().div_rem(&g).0.sub(&c.derivative());
    let mut i = 1usize;
    while c.deg_i() > 0 {
        let p = c.gcd(&d);
        if p.deg_i() > 0 {
            let (pi, _) = p.to_int_primitive();
            out.push((pi, i));
        }
        c = c.div_rem(&p).0;
        d = d.div_rem(&p).0.sub(&c.derivative());
        i += 1;
    }
    out
}

/// Factors a nonzero integer polynomial into irreducible primitive factors
/// with multiplicities (up to sign and content).
pub fn factor_univariate(q: &UniPoly<Int>) -> Result<Vec<(UniPoly<Int>, usize)>> {
    if q.is_zero() {
        return Err(Error::DegenerateInput("factor of zero polynomial".into()));
    }
    let mut factors: Vec<(UniPoly<Int>, usize)> = Vec::new();
    for (part, mult) in squarefree_decomposition(q) {
        let mut irr = Vec::new();
        kronecker(part.primitive_positive(), &mut irr)?;
        for f in irr {
            factors.push((f.primitive_positive(), mult));
        }
    }
    // deterministic order: by degree, then coefficients
    factors.sort_by(|(f, _), (g, _)| {
        f.deg_i()
            .cmp(&g.deg_i())
            .then_with(|| f.coeffs().cmp(g.coeffs()))
    });
    Ok(factors)
}

/// Kind of a branch group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    /// eta^n_bot: the branches growing slower than x^(b/a).
    EtaPower(usize),
    /// q(eta^a)^e for an irreducible factor q of Q.
    LiftedFactor { q: UniPoly<Int>, multiplicity: usize },
}

/// One coprime factor of f0 destined for a Hensel lift.
#[derive(Clone, Debug)]
pub struct BranchGroup {
    /// Primitive integer base factor with positive leading coefficient.
    pub g0: UniPoly<Int>,
    pub kind: GroupKind,
    /// Whether g0 has a real root, i.e. the group carries real branches.
    pub has_real_branch: bool,
}

/// Splits the compressed slope polynomial into pairwise-coprime branch
/// groups: the eta-power (when n_bot > 0) plus one group per irreducible
/// factor of Q. A single group signals the Runge condition failed.
pub fn branch_groups(c: &Compressed, a: i64) -> Result<Vec<BranchGroup>> {
    let mut groups = Vec::new();
    if c.n_bot > 0 {
        groups.push(BranchGroup {
            g0: UniPoly::monomial(Int::one(), c.n_bot as usize),
            kind: GroupKind::EtaPower(c.n_bot as usize),
            has_real_branch: true,
        });
    }
    for (q, e) in factor_univariate(&c.q)? {
        let composed = compose_power(&q, a as usize);
        let mut g0 = UniPoly::one();
        for _ in 0..e {
            g0 = g0.mul(&composed);
        }
        let g0 = g0.primitive_positive();
        let has_real_branch = sturm_count(&g0, &Bound::NegInf, &Bound::PosInf) > 0;
        groups.push(BranchGroup {
            g0,
            kind: GroupKind::LiftedFactor { q, multiplicity: e },
            has_real_branch,
        });
    }
    if groups.len() < 2 {
        return Err(Error::NotRunge(
            "slope polynomial has a single branch group".into(),
        ));
    }
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::int;
    use crate::polygon::slope_data;

    fn ip(cs: &[i64]) -> UniPoly<Int> {
        UniPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn compress_examples() {
        // Example 1: F_E = y^6 - 4x^4y^2, slope (1,1,6)
        let fe = BiPoly::from_terms(&[(0, 6, 1), (4, 2, -4)]);
        let s = slope_data((0, 6), (4, 2)).unwrap();
        let c = compress(&fe, &s).unwrap();
        assert_eq!((c.m1, c.n_bot), (0, 2));
        assert_eq!(c.q, ip(&[-4, 0, 0, 0, 1]));
        assert_eq!(reconstruct(&c, &s), fe);

        // Example 3: F_E = y^4 - 3x^3y^2 + 2x^6, slope (2,3,12)
        let fe = BiPoly::from_terms(&[(0, 4, 1), (3, 2, -3), (6, 0, 2)]);
        let s = slope_data((0, 4), (6, 0)).unwrap();
        let c = compress(&fe, &s).unwrap();
        assert_eq!((c.m1, c.n_bot), (0, 0));
        assert_eq!(c.q, ip(&[2, -3, 1]));

        // Example 2: F_E = y^4 - 9x^2y^2, slope (1,1,4)
        let fe = BiPoly::from_terms(&[(0, 4, 1), (2, 2, -9)]);
        let s = slope_data((0, 4), (2, 2)).unwrap();
        let c = compress(&fe, &s).unwrap();
        assert_eq!((c.m1, c.n_bot), (0, 2));
        assert_eq!(c.q, ip(&[-9, 0, 1]));
    }

    #[test]
    fn compress_rejects_off_slope_support() {
        let fe = BiPoly::from_terms(&[(0, 6, 1), (4, 2, -4), (1, 1, 3)]);
        let s = slope_data((0, 6), (4, 2)).unwrap();
        assert!(matches!(compress(&fe, &s), Err(Error::NotQuasiHomogeneous)));
    }

    #[test]
    fn factor_examples() {
        let f = factor_univariate(&ip(&[-4, 0, 0, 0, 1])).unwrap(); // z^4 - 4
        let polys: Vec<_> = f.iter().map(|(p, _)| p.clone()).collect();
        assert!(polys.contains(&ip(&[-2, 0, 1])));
        assert!(polys.contains(&ip(&[2, 0, 1])));
        assert_eq!(polys.len(), 2);

        let f = factor_univariate(&ip(&[-9, 0, 1])).unwrap(); // z^2 - 9
        let polys: Vec<_> = f.iter().map(|(p, _)| p.clone()).collect();
        assert_eq!(polys, vec![ip(&[-3, 1]), ip(&[3, 1])]);

        let f = factor_univariate(&ip(&[1, 0, 1])).unwrap(); // z^2 + 1 irreducible
        assert_eq!(f, vec![(ip(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn factor_with_multiplicity() {
        // (z-1)^2 (z^2+2)
        let f = ip(&[-1, 1]).mul(&ip(&[-1, 1])).mul(&ip(&[2, 0, 1]));
        let fs = factor_univariate(&f).unwrap();
        assert_eq!(fs, vec![(ip(&[-1, 1]), 2), (ip(&[2, 0, 1]), 1)]);
    }

    #[test]
    fn groups_of_examples() {
        // Example 1: {eta^2, eta^2 - 2, eta^2 + 2}, the last without real branches
        let fe = BiPoly::from_terms(&[(0, 6, 1), (4, 2, -4)]);
        let s = slope_data((0, 6), (4, 2)).unwrap();
        let gs = branch_groups(&compress(&fe, &s).unwrap(), s.a).unwrap();
        let bases: Vec<_> = gs.iter().map(|g| g.g0.clone()).collect();
        assert_eq!(bases, vec![ip(&[0, 0, 1]), ip(&[-2, 0, 1]), ip(&[2, 0, 1])]);
        assert_eq!(
            gs.iter().map(|g| g.has_real_branch).collect::<Vec<_>>(),
            vec![true, true, false]
        );

        // Example 3: {eta^2 - 1, eta^2 - 2} via composition with eta^2
        let fe = BiPoly::from_terms(&[(0, 4, 1), (3, 2, -3), (6, 0, 2)]);
        let s = slope_data((0, 4), (6, 0)).unwrap();
        let gs = branch_groups(&compress(&fe, &s).unwrap(), s.a).unwrap();
        let bases: Vec<_> = gs.iter().map(|g| g.g0.clone()).collect();
        assert_eq!(bases, vec![ip(&[-1, 0, 1]), ip(&[-2, 0, 1])]);
    }

    #[test]
    fn product_of_groups_matches_base() {
        let fe = BiPoly::from_terms(&[(0, 6, 1), (4, 2, -4)]);
        let s = slope_data((0, 6), (4, 2)).unwrap();
        let c = compress(&fe, &s).unwrap();
        let gs = branch_groups(&c, s.a).unwrap();
        let mut prod = UniPoly::one();
        for g in &gs {
            prod = prod.mul(&g.g0);
        }
        assert_eq!(prod.primitive_positive(), c.base_poly(s.a).primitive_positive());
        for i in 0..gs.len() {
            for j in i + 1..gs.len() {
                assert_eq!(gs[i].g0.gcd(&gs[j].g0).deg_i(), 0);
            }
        }
    }

    #[test]
    fn single_group_signals_not_runge() {
        // y^2 - x^3: Q = z - 1, n_bot = 0
        let fe = BiPoly::from_terms(&[(0, 2, 1), (3, 0, -1)]);
        let s = slope_data((0, 2), (3, 0)).unwrap();
        let c = compress(&fe, &s).unwrap();
        assert!(matches!(branch_groups(&c, s.a), Err(Error::NotRunge(_))));
    }
}
