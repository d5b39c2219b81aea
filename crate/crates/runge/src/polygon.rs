//! Newton polygon of a bivariate polynomial, slope extraction, and the
//! strategy planner.
//!
//! The polygon is the convex hull of the rectangles spanned by (0,0) and
//! each exponent pair of F. Only the upper-right boundary matters to the
//! solver: its non-axis edges are the slopes, and the topmost tilted edge
//! (the one adjacent to the vertex at height deg_y) is the one the
//! algorithm works with.

use num_integer::Integer;
use num_traits::Zero;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::num::Int;
use crate::slopefactor::{branch_groups, compress};
use crate::unipoly::UniPoly;

pub type Point = (i64, i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    Horizontal,
    Vertical,
    Tilted,
}

/// Edge of the upper-right boundary, oriented top to bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub top: Point,
    pub bot: Point,
    pub kind: EdgeKind,
}

#[derive(Clone, Debug)]
pub struct Polygon {
    /// Hull vertices in counterclockwise order, starting at (0, 0).
    pub vertices: Vec<Point>,
    /// Upper-right boundary from (_, deg_y) down to (deg_x, _), top first.
    pub upper_edges: Vec<Edge>,
}

impl Polygon {
    pub fn tilted_edges(&self) -> impl Iterator<Item = &Edge> {
        self.upper_edges.iter().filter(|e| e.kind == EdgeKind::Tilted)
    }

    pub fn topmost_tilted(&self) -> Option<&Edge> {
        self.tilted_edges().next()
    }
}

/// Tilted edge in normal form: coprime positive weights (a, b) and weight
/// w with a*m + b*n = w on the edge; endpoints are the edge's lattice
/// corners with top = (m1, n_top), bot = (m2, n_bot).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slope {
    pub a: i64,
    pub b: i64,
    pub w: i64,
    pub top: Point,
    pub bot: Point,
}

impl Slope {
    pub fn m1(&self) -> i64 {
        self.top.0
    }

    pub fn n_bot(&self) -> i64 {
        self.bot.1
    }

    pub fn n_top(&self) -> i64 {
        self.top.1
    }

    /// Weight a*m + b*n of a monomial under this slope.
    pub fn monomial_weight(&self, m: u32, n: u32) -> i64 {
        self.a * m as i64 + self.b * n as i64
    }
}

fn cross(o: Point, a: Point, b: Point) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Monotone-chain convex hull, counterclockwise, no collinear interior
/// points.
fn convex_hull(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Newton polygon of a nonzero polynomial.
pub fn newton_polygon(f: &BiPoly) -> Result<Polygon> {
    if f.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial has no polygon".into()));
    }
    let mut pts: Vec<Point> = vec![(0, 0)];
    for (&(m, n), _) in f.terms() {
        let (m, n) = (m as i64, n as i64);
        pts.push((m, n));
        pts.push((m, 0));
        pts.push((0, n));
    }
    let hull = convex_hull(pts);
    let deg_x = f.deg_x() as i64;
    let deg_y = f.deg_y() as i64;

    // Rotate so the walk starts at (0, 0); hull is CCW, so the stretch from
    // (deg_x, 0) to (0, deg_y) is the upper-right boundary, bottom to top.
    let start = hull.iter().position(|&p| p == (0, 0)).unwrap_or(0);
    let rotated: Vec<Point> = hull[start..].iter().chain(hull[..start].iter()).copied().collect();

    let from = rotated.iter().position(|&p| p == (deg_x, 0));
    let to = rotated.iter().position(|&p| p == (0, deg_y));
    let mut upper_edges = Vec::new();
    if let (Some(from), Some(to)) = (from, to) {
        let mut path = Vec::new();
        let n = rotated.len();
        let mut i = from;
        loop {
            path.push(rotated[i]);
            if i == to {
                break;
            }
            i = (i + 1) % n;
        }
        // path is bottom-to-top; emit edges top-to-bottom
        for pair in path.windows(2).rev() {
            let (bot, top) = (pair[0], pair[1]);
            let kind = if top.1 == bot.1 {
                EdgeKind::Horizontal
            } else if top.0 == bot.0 {
                EdgeKind::Vertical
            } else {
                EdgeKind::Tilted
            };
            upper_edges.push(Edge { top, bot, kind });
        }
    }
    Ok(Polygon {
        vertices: rotated,
        upper_edges,
    })
}

/// Normal form of a tilted edge given its lattice endpoints.
pub fn slope_data(top: Point, bot: Point) -> Result<Slope> {
    let dm = bot.0 - top.0;
    let dn = top.1 - bot.1;
    if dm <= 0 || dn <= 0 {
        return Err(Error::NotTilted(top.0, top.1, bot.0, bot.1));
    }
    let g = dm.gcd(&dn);
    let (a, b) = (dn / g, dm / g);
    let w = a * top.0 + b * top.1;
    debug_assert_eq!(w, a * bot.0 + b * bot.1);
    Ok(Slope { a, b, w, top, bot })
}

/// Sum of the monomials of F lying on the slope line a*m + b*n = w.
pub fn slope_polynomial(f: &BiPoly, s: &Slope) -> BiPoly {
    BiPoly::new(
        f.terms()
            .filter(|(&(m, n), _)| s.monomial_weight(m, n) == s.w)
            .map(|(&k, c)| (k, c.clone()))
            .collect(),
    )
}

/// Solving strategy for one polynomial.
#[derive(Clone, Debug)]
pub enum Strategy {
    /// Work along the topmost tilted slope; `swapped` records that x and y
    /// were interchanged first (the slope is in the swapped frame).
    Tilted { slope: Slope, swapped: bool },
    /// Full-rectangle polygon: the x^(deg_x) coefficient F2(y) plays the
    /// role of the vanishing polynomial.
    Rectangle { f2: UniPoly<Int> },
}

fn group_count(f: &BiPoly, slope: &Slope) -> Result<usize> {
    let fe = slope_polynomial(f, slope);
    let c = compress(&fe, slope)?;
    match branch_groups(&c, slope.a) {
        Ok(gs) => Ok(gs.len()),
        Err(Error::NotRunge(_)) => Ok(1),
        Err(e) => Err(e),
    }
}

/// Chooses the strategy for F: rectangle when the corner monomial
/// x^deg_x y^deg_y is present, otherwise the topmost tilted slope, with a
/// single x<->y interchange when the slope polynomial does not split but a
/// horizontal top edge exists.
pub fn plan(f: &BiPoly) -> Result<Strategy> {
    if f.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial".into()));
    }
    if f.deg_x() == 0 || f.deg_y() == 0 {
        return Err(Error::DegenerateInput("univariate polynomial".into()));
    }
    if !f.coeff(f.deg_x(), f.deg_y()).is_zero() {
        return Ok(Strategy::Rectangle {
            f2: f.leading_x_coefficient(),
        });
    }
    let poly = newton_polygon(f)?;
    let edge = poly
        .topmost_tilted()
        .expect("non-rectangle polygon has a tilted edge");
    let slope = slope_data(edge.top, edge.bot)?;
    if group_count(f, &slope)? >= 2 {
        return Ok(Strategy::Tilted { slope, swapped: false });
    }
    if slope.m1() > 0 {
        let fs = f.swap_vars();
        let poly_s = newton_polygon(&fs)?;
        let edge_s = poly_s
            .topmost_tilted()
            .expect("swapped polygon has a tilted edge");
        let slope_s = slope_data(edge_s.top, edge_s.bot)?;
        if group_count(&fs, &slope_s)? >= 2 {
            return Ok(Strategy::Tilted { slope: slope_s, swapped: true });
        }
    }
    Err(Error::NotRunge(
        "slope polynomial does not split into coprime factors".into(),
    ))
}
