//! Sparse multivariate polynomials over ℚ, ℤ or a prime field.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal::{check_dim, ExponentVector, MonomialIdeal};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Rationals,
    Integers,
    /// `𝔽_p`, with `p` prime and below `2^31`.
    PrimeField(u64),
}

impl Ring {
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Ring::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Ring::PrimeField(p) => *p,
            _ => 0,
        }
    }

    /// Brings a coefficient into canonical form for this ring, or rejects it.
    pub fn normalize(&self, c: Rational) -> Result<Rational> {
        match self {
            Ring::Rationals => Ok(c),
            Ring::Integers => {
                if c.is_integer() {
                    Ok(c)
                } else {
                    Err(self.invalid(&c))
                }
            }
            Ring::PrimeField(p) => {
                let p_big = BigInt::from(*p);
                let den = c.denom().mod_floor(&p_big);
                if den.is_zero() {
                    return Err(self.invalid(&c));
                }
                // a/b ↦ a·b^{-1} mod p
                let inv = den.modpow(&(&p_big - BigInt::from(2u8)), &p_big);
                let r = (c.numer() * inv).mod_floor(&p_big);
                Ok(Rational::from_integer(r))
            }
        }
    }

    fn invalid(&self, c: &Rational) -> Error {
        Error::InvalidCoefficient {
            coefficient: c.to_string(),
            ring: self.to_string(),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Rationals => f.write_str("QQ"),
            Ring::Integers => f.write_str("ZZ"),
            Ring::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// Deterministic primality for `p < 2^31`.
pub fn is_prime(p: u64) -> bool {
    if p < 2 || p >= 1 << 31 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Finite map from exponent vectors to nonzero coefficients. The zero
/// polynomial is the empty map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    ring: Ring,
    dim: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl SparsePolynomial {
    pub fn zero(ring: Ring, dim: usize) -> Self {
        Self {
            ring,
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// Sums the given terms in `ring`; repeated exponents are combined.
    pub fn from_terms(ring: Ring, dim: usize, terms: impl IntoIterator<Item = (ExponentVector, Rational)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if let Ring::PrimeField(p) = ring {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
        }
        let mut poly = Self::zero(ring, dim);
        for (u, c) in terms {
            check_dim(dim, u.dim())?;
            let c = ring.normalize(c)?;
            poly.add_term(u, c);
        }
        Ok(poly)
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(ring: Ring, terms: &[(i64, &[u32])]) -> Result<Self> {
        let dim = terms.first().map(|(_, u)| u.len()).ok_or(Error::ZeroPolynomial)?;
        Self::from_terms(
            ring,
            dim,
            terms
                .iter()
                .map(|(c, u)| (ExponentVector::from(*u), Rational::from_integer(BigInt::from(*c)))),
        )
    }

    pub fn monomial(ring: Ring, u: ExponentVector) -> Self {
        let dim = u.dim();
        let mut terms = BTreeMap::new();
        terms.insert(u, Rational::one());
        Self { ring, dim, terms }
    }

    /// The generators of a monomial ideal as polynomials with coefficient 1.
    pub fn generators_of(ideal: &MonomialIdeal, ring: Ring) -> Vec<Self> {
        ideal
            .generators()
            .iter()
            .map(|g| Self::monomial(ring, g.clone()))
            .collect()
    }

    fn add_term(&mut self, u: ExponentVector, c: Rational) {
        let ring = self.ring;
        let entry = self.terms.entry(u);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = ring.normalize(o.get() + c).expect("sum of valid coefficients");
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, u: &ExponentVector) -> Option<&Rational> {
        self.terms.get(u)
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    /// Same terms, reinterpreted in another ring (coefficients renormalized).
    pub fn change_ring(&self, ring: Ring) -> Result<Self> {
        Self::from_terms(ring, self.dim, self.terms.iter().map(|(u, c)| (u.clone(), c.clone())))
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&ExponentVector, &Rational) -> bool) -> Self {
        Self {
            ring: self.ring,
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(u, c)| keep(u, c))
                .map(|(u, c)| (u.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (u, c) in &other.terms {
            out.add_term(u.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.ring, self.dim);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let c = self.ring.normalize(a * b)?;
                out.add_term(u.add(v), c);
            }
        }
        Ok(out)
    }

    /// Evaluates at an integer point (exact).
    pub fn evaluate(&self, point: &[BigInt]) -> Rational {
        self.terms
            .iter()
            .map(|(u, c)| {
                let mono: BigInt = u
                    .entries()
                    .iter()
                    .zip(point)
                    .map(|(&e, x)| num_traits::pow(x.clone(), e as usize))
                    .product();
                c * Rational::from_integer(mono)
            })
            .sum()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        check_dim(self.dim, other.dim)?;
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                expected: self.ring.to_string(),
                found: other.ring.to_string(),
            });
        }
        Ok(())
    }
}

/// Writes `c*x1^a*x2^b` style monomials, `1` for the constant monomial.
pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, u: &ExponentVector) -> fmt::Result {
    let mut first = true;
    for (i, &e) in u.entries().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Highest degree first reads more naturally.
        for (i, (u, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() && !u.is_zero() {
                write_monomial(f, u)?;
            } else if u.is_zero() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*")?;
                write_monomial(f, u)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(2147483647));
        assert!(!is_prime(1 << 31));
        assert_eq!(Ring::prime_field(4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn prime_field_coefficients_are_canonical() {
        let r = Ring::PrimeField(3);
        assert_eq!(r.normalize(int(4)).unwrap(), int(1));
        assert_eq!(r.normalize(int(-1)).unwrap(), int(2));
        assert_eq!(r.normalize(rat(1, 2)).unwrap(), int(2));
        assert!(r.normalize(rat(1, 3)).is_err());
        assert!(Ring::Integers.normalize(rat(1, 2)).is_err());
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let f = SparsePolynomial::from_int_terms(Ring::PrimeField(2), &[(2, &[1, 0]), (1, &[0, 1])]).unwrap();
        assert_eq!(f.len(), 1);
        let g = SparsePolynomial::from_int_terms(Ring::Integers, &[(1, &[1]), (-1, &[1])]).unwrap();
        assert!(g.is_zero());
        assert_eq!(g.to_string(), "0");
    }

    #[test]
    fn arithmetic() {
        let x = SparsePolynomial::from_int_terms(Ring::Integers, &[(1, &[1, 0])]).unwrap();
        let y = SparsePolynomial::from_int_terms(Ring::Integers, &[(1, &[0, 1])]).unwrap();
        let s = x.add(&y).unwrap();
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq.to_string(), "x1^2 + 2*x1*x2 + x2^2");
        let p = sq.change_ring(Ring::PrimeField(2)).unwrap();
        assert_eq!(p.to_string(), "x1^2 + x2^2");
        assert!(x.mul(&p).is_err());
    }

    #[test]
    fn evaluation() {
        let f = SparsePolynomial::from_int_terms(Ring::Integers, &[(3, &[2, 0]), (-1, &[0, 1]), (5, &[0, 0])]).unwrap();
        let v = f.evaluate(&[BigInt::from(2), BigInt::from(7)]);
        assert_eq!(v, int(12 - 7 + 5));
    }
}
