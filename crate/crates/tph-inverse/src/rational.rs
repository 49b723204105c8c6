//! Exact rational scalars.
//!
//! Every quantity in the pipeline is a [`Rational`]: rank, kernel dimension and
//! index extraction are discrete and must not be perturbed by rounding, so
//! floating point is banned throughout.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator (zero is `0/1`).
pub type Rational = BigRational;

/// Integer-valued rational.
pub fn rat_int(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

/// Rational from a numerator/denominator pair.
///
/// Panics on a zero denominator; meant for literals in code and tests, not for
/// user input (see [`parse_rational`]).
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator in rational literal");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"a/b"` or `"a"` with arbitrary-precision integer parts.
///
/// Rejects empty input, malformed integers and zero denominators.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let int = |x: &str| {
        x.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("invalid rational `{s}`")))
    };
    match t.split_once('/') {
        None => Ok(BigRational::from_integer(int(t)?)),
        Some((num, den)) => {
            let num = int(num)?;
            let den = int(den)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(num, den))
        }
    }
}

/// Canonical text form: lowest terms, sign on the numerator, no `/1`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}
