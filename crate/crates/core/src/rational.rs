//! Exact rationals. Values are `num_rational::BigRational`, which keeps
//! numerator and denominator coprime with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_rational::BigRational as Rational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Smallest element of `(1/grid)·ℤ` that is `>= x`.
pub fn ceil_to_grid(x: &Rational, grid: &BigInt) -> Rational {
    let scaled = x * Rational::from_integer(grid.clone());
    Rational::new(scaled.ceil().to_integer(), grid.clone())
}

pub fn ceil_u64(x: &Rational) -> Option<u64> {
    if x.is_negative() {
        return Some(0);
    }
    x.ceil().to_integer().to_u64()
}

/// Converts an integral rational that fits into `i128`.
pub fn to_i128(x: &Rational) -> Option<i128> {
    if x.is_integer() {
        x.to_integer().to_i128()
    } else {
        None
    }
}
