//! Translations between divisor-side and jet-side bounds.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::Rational;

fn extremes(e: &[Rational]) -> Result<(&Rational, &Rational)> {
    let min = e.iter().min().ok_or(Error::EmptyExponents)?;
    let max = e.iter().max().ok_or(Error::EmptyExponents)?;
    Ok((min, max))
}

/// `ℓ' = (ℓ + 1 + max e) / min e`: a bound on `k_E` for a divisor computing
/// mld turns into a bound on `|m|` for a jet order computing it.
pub fn bound_divisor_to_jet(ell: u64, e: &[Rational]) -> Result<Rational> {
    let (min, max) = extremes(e)?;
    Ok((Rational::from_integer(BigInt::from(ell + 1)) + max) / min)
}

/// `k_E <= N - 1 + ℓ'·max e`.
pub fn bound_jet_to_divisor(ell_prime: &Rational, dim: usize, e: &[Rational]) -> Result<Rational> {
    let (_, max) = extremes(e)?;
    Ok(Rational::from_integer(BigInt::from(dim as i64 - 1)) + ell_prime * max)
}

/// `k_E <= (L' + 1)·N - 1`.
pub fn bound_lct_translation(l_prime: u64, dim: usize) -> u64 {
    (l_prime + 1) * dim as u64 - 1
}
