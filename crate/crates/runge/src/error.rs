//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division requested on a non-divisor.
    #[error("exact division failed: {0}")]
    Division(String),
    /// Weighted substitution with a weight that does not dominate the support.
    #[error("weight {w} is not dominant: monomial x^{m} y^{n} has weight {mw}")]
    Weight { w: i64, m: u32, n: u32, mw: i64 },
    /// Resultant of two polynomials both constant in y.
    #[error("resultant undefined: both inputs constant in the eliminated variable")]
    DegenerateResultant,
    /// Division in a series-polynomial ring by a non-monic divisor.
    #[error("series division requires a monic divisor")]
    Monicity,
    /// Operation on an input outside its domain (zero polynomial, univariate
    /// input to the bivariate pipeline, infinite solution family, ...).
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    /// Edge passed to slope extraction is horizontal or vertical.
    #[error("edge from ({0}, {1}) to ({2}, {3}) is not tilted")]
    NotTilted(i64, i64, i64, i64),
    /// Slope polynomial support not contained in a single slope line.
    #[error("support is not quasi-homogeneous for the given slope")]
    NotQuasiHomogeneous,
    /// Runge's condition fails: no coprime split of the slope polynomial.
    #[error("Runge condition fails: {0}")]
    NotRunge(String),
    /// Leading series coefficient is not a unit (zero constant term).
    #[error("leading coefficient is not a unit series")]
    NotAUnit,
    /// Hensel lift seeded with non-coprime base factors.
    #[error("base factors are not pairwise coprime")]
    Coprimality,
    /// Hensel lift seeded with factors whose product differs from f at t=0.
    #[error("base factorization does not match f at t=0")]
    BaseFactorization,
    /// Vanishing-polynomial search exhausted its order cap.
    #[error("no vanishing polynomial found up to order {0}")]
    NEscalationExhausted(usize),
    /// Identically-zero resultant or an identically-zero column in the scan:
    /// the input shares a component with an auxiliary polynomial.
    #[error("input is reducible: {0}")]
    ReducibleInput(String),
    /// Scan interval exceeds the configured guard.
    #[error("scan interval [{lo}, {hi}] exceeds the guard of {guard} integers")]
    ScanGuard { lo: String, hi: String, guard: u64 },
    /// Text that does not parse (position is a byte offset where known).
    #[error("parse error at {1}: {0}")]
    Parse(String, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
