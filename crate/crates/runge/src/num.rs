//! Ground ring: arbitrary-precision integers and rationals.
//!
//! `Rat` (a `Ratio<BigInt>`) is always kept in lowest terms with a positive
//! denominator by its constructors, which is exactly the invariant the rest
//! of the crate relies on.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Int = BigInt;
pub type Rat = BigRational;

/// Shorthand for small integer constants.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Rational from a small numerator/denominator pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Floor of a rational as an integer.
pub fn rat_floor(r: &Rat) -> Int {
    r.floor().to_integer()
}

/// Ceiling of a rational as an integer.
pub fn rat_ceil(r: &Rat) -> Int {
    r.ceil().to_integer()
}

/// Renders a rational as `p` or `p/q`, never in decimal notation.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` (the inverse of [`rat_to_string`]).
pub fn rat_from_str(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<Int, Error> {
        t.trim()
            .parse::<Int>()
            .map_err(|_| Error::Parse(format!("invalid rational: {s:?}"), 0))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}"), 0));
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
    }
}

pub fn int_from_str(s: &str) -> Result<Int, Error> {
    s.trim()
        .parse::<Int>()
        .map_err(|_| Error::Parse(format!("invalid integer: {s:?}"), 0))
}

/// Sign of a rational as -1, 0, or 1.
pub fn rat_sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn int_sign(n: &Int) -> i8 {
    if n.is_zero() {
        0
    } else if n.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_string_round_trip() {
        for (n, d) in [(1i64, 2i64), (-7, 3), (5, 1), (0, 9), (-22, 11)] {
            let r = rat(n, d);
            assert_eq!(rat_from_str(&rat_to_string(&r)).unwrap(), r);
        }
        assert_eq!(rat_to_string(&rat(-4, 2)), "-2");
        assert_eq!(rat_to_string(&rat(3, -6)), "-1/2");
    }

    #[test]
    fn floor_ceil() {
        assert_eq!(rat_floor(&rat(7, 2)), int(3));
        assert_eq!(rat_ceil(&rat(7, 2)), int(4));
        assert_eq!(rat_floor(&rat(-7, 2)), int(-4));
        assert_eq!(rat_ceil(&rat(-7, 2)), int(-3));
        assert_eq!(rat_ceil(&rat_int(5)), int(5));
    }
}
