//! Exponent vectors, monomial ideals and multiideals.

use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Exponent vector `u` of a monomial `X^u`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Self(entries))
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![0; dim])
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = vec![0; dim];
        v[index] = 1;
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise `self <= other`, i.e. `X^self` divides `X^other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `⟨w, u⟩`.
    pub fn dot(&self, weights: &[u64]) -> u64 {
        self.0.iter().zip(weights).map(|(&u, &w)| u as u64 * w).sum()
    }
}

impl From<&[u32]> for ExponentVector {
    fn from(v: &[u32]) -> Self {
        Self(v.to_vec())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

pub(crate) fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// A proper nonzero monomial ideal, stored by its minimal generators in
/// ascending order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `generators`, dropping non-minimal ones.
    pub fn new(generators: Vec<ExponentVector>) -> Result<Self> {
        minimalize(generators)
    }

    pub fn from_rows(rows: &[&[u32]]) -> Result<Self> {
        let gens = rows
            .iter()
            .map(|r| ExponentVector::new(r.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        minimalize(gens)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// Maximal total degree over the generators.
    pub fn max_degree(&self) -> u64 {
        self.generators.iter().map(ExponentVector::degree).max().unwrap_or(0)
    }

    pub fn contains_monomial(&self, u: &ExponentVector) -> bool {
        self.generators.iter().any(|g| g.divides(u))
    }

    /// Generator-wise sums: the product ideal.
    pub fn product(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.add(b)))
            .collect();
        minimalize(gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Reduces a generating set to its antichain of componentwise-minimal
/// elements.
pub fn minimalize(generators: Vec<ExponentVector>) -> Result<MonomialIdeal> {
    let first = generators.first().ok_or(Error::EmptyGenerators)?;
    let dim = first.dim();
    for g in &generators {
        check_dim(dim, g.dim())?;
        if g.is_zero() {
            return Err(Error::UnitIdeal);
        }
    }
    let mut sorted = generators;
    // Sorting by degree first means a divisor is always seen before its multiples.
    sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    sorted.dedup();
    let mut minimal: Vec<ExponentVector> = Vec::new();
    for g in sorted {
        if !minimal.iter().any(|m| m.divides(&g)) {
            minimal.push(g);
        }
    }
    minimal.sort();
    Ok(MonomialIdeal {
        dim,
        generators: minimal,
    })
}

/// `m^mu`: all monomials of degree `mu` in `dim` variables.
pub fn power_of_maximal_ideal(dim: usize, mu: u32) -> Result<MonomialIdeal> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    if mu == 0 {
        return Err(Error::ZeroPower);
    }
    let mut gens = Vec::new();
    let mut current = vec![0u32; dim];
    compositions(dim, mu, 0, &mut current, &mut gens);
    minimalize(gens)
}

fn compositions(dim: usize, remaining: u32, index: usize, current: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
    if index == dim - 1 {
        current[index] = remaining;
        out.push(ExponentVector(current.clone()));
        return;
    }
    for e in 0..=remaining {
        current[index] = e;
        compositions(dim, remaining - e, index + 1, current, out);
    }
}

/// `b ⊆ a`: every generator of `b` is a multiple of some generator of `a`.
pub fn contains(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<bool> {
    check_dim(a.dim, b.dim)?;
    Ok(b.generators.iter().all(|g| a.contains_monomial(g)))
}

/// `a_1^{e_1} ⋯ a_s^{e_s}` with positive rational exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiIdeal {
    dim: usize,
    factors: Vec<(MonomialIdeal, Rational)>,
}

impl MultiIdeal {
    pub fn new(factors: Vec<(MonomialIdeal, Rational)>) -> Result<Self> {
        let dim = factors.first().ok_or(Error::NoFactors)?.0.dim();
        for (ideal, e) in &factors {
            check_dim(dim, ideal.dim())?;
            if !e.is_positive() {
                return Err(Error::NonPositiveExponent(e.to_string()));
            }
        }
        Ok(Self { dim, factors })
    }

    pub fn single(ideal: MonomialIdeal, exponent: Rational) -> Result<Self> {
        Self::new(vec![(ideal, exponent)])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn factors(&self) -> &[(MonomialIdeal, Rational)] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponents(&self) -> Vec<Rational> {
        self.factors.iter().map(|(_, e)| e.clone()).collect()
    }
}

impl fmt::Display for MultiIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{a}^{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec()).unwrap()
    }

    fn gens(i: &MonomialIdeal) -> Vec<Vec<u32>> {
        i.generators().iter().map(|g| g.entries().to_vec()).collect()
    }

    #[test]
    fn maximal_ideal_powers() {
        assert_eq!(gens(&power_of_maximal_ideal(1, 3).unwrap()), vec![vec![3]]);
        assert_eq!(
            gens(&power_of_maximal_ideal(2, 1).unwrap()),
            vec![vec![0, 1], vec![1, 0]]
        );
        assert_eq!(
            gens(&power_of_maximal_ideal(2, 2).unwrap()),
            vec![vec![0, 2], vec![1, 1], vec![2, 0]]
        );
        assert_eq!(power_of_maximal_ideal(3, 3).unwrap().generators().len(), 10);
        assert_eq!(power_of_maximal_ideal(0, 1), Err(Error::ZeroDimension));
        assert_eq!(power_of_maximal_ideal(2, 0), Err(Error::ZeroPower));
    }

    #[test]
    fn containment() {
        let m = power_of_maximal_ideal(2, 1).unwrap();
        let m2 = power_of_maximal_ideal(2, 2).unwrap();
        assert!(contains(&m, &m2).unwrap());
        assert!(!contains(&m2, &m).unwrap());
        let x2 = MonomialIdeal::from_rows(&[&[2, 0]]).unwrap();
        let x = MonomialIdeal::from_rows(&[&[1, 0]]).unwrap();
        assert!(!contains(&x2, &x).unwrap());
        assert!(contains(&x2, &x2).unwrap());
        let m3 = power_of_maximal_ideal(3, 1).unwrap();
        assert!(matches!(contains(&m, &m3), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn minimalize_examples() {
        let i = minimalize(vec![ev(&[1, 0]), ev(&[2, 0]), ev(&[0, 1])]).unwrap();
        assert_eq!(gens(&i), vec![vec![0, 1], vec![1, 0]]);
        let i = minimalize(vec![ev(&[1, 1])]).unwrap();
        assert_eq!(gens(&i), vec![vec![1, 1]]);
        let i = minimalize(vec![ev(&[2, 0]), ev(&[0, 3]), ev(&[1, 2])]).unwrap();
        assert_eq!(i.generators().len(), 3);
        assert_eq!(minimalize(vec![]), Err(Error::EmptyGenerators));
        assert_eq!(minimalize(vec![ev(&[0, 0])]), Err(Error::UnitIdeal));
        assert!(minimalize(vec![ev(&[1]), ev(&[1, 0])]).is_err());
    }

    #[test]
    fn multiideal_validation() {
        let m = power_of_maximal_ideal(2, 1).unwrap();
        assert!(MultiIdeal::single(m.clone(), rat(1, 2)).is_ok());
        assert!(matches!(
            MultiIdeal::single(m.clone(), rat(0, 1)),
            Err(Error::NonPositiveExponent(_))
        ));
        assert_eq!(MultiIdeal::new(vec![]), Err(Error::NoFactors));
        let m3 = power_of_maximal_ideal(3, 1).unwrap();
        assert!(MultiIdeal::new(vec![(m, rat(1, 1)), (m3, rat(1, 1))]).is_err());
    }

    #[test]
    fn display() {
        let i = MonomialIdeal::from_rows(&[&[1, 0], &[0, 3]]).unwrap();
        assert_eq!(i.to_string(), "{(0,3),(1,0)}");
    }
}
