//! Exact rational arithmetic and dense univariate polynomials over `Q`.
//!
//! Rationals are [`num_rational::BigRational`], which keeps every value in
//! lowest terms with a positive denominator.

mod combinat;
mod parse;
mod poly;

pub use combinat::{binomial, factorial, falling_factorial, inv_factorial};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use parse::{parse_polynomial, ParseError};
pub use poly::Polynomial;

use num_traits::ToPrimitive;

/// Shorthand for `num / den`. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Nearest `f64`, falling back to a quotient of the floats when either part
/// overflows on its own.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}
