//! Text format for problem files.
//!
//! ```text
//! dim 2
//! char 3            # optional; generators are then read over GF(3)
//! ideal e=1/2
//! 1 0
//! 0 3
//!
//! ideal e=2
//! 2 * 1 1 + 1 * 0 2
//! ```
//!
//! A generator line is either `N` nonnegative integers (a monomial) or a sum
//! of terms `c * u_1 … u_N` joined by ` + ` (a polynomial with integer
//! coefficients). Blocks end at a blank line or at the end of the file. Lines
//! starting with `#` are comments.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal, MultiIdeal};
use crate::poly::{Ring, SparsePolynomial};
use crate::rational::{parse_rational, Rational};

/// One generator as written: integer coefficients on exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorLine {
    pub line: usize,
    pub terms: Vec<(BigInt, ExponentVector)>,
}

impl GeneratorLine {
    /// A single term with coefficient 1.
    pub fn monomial(&self) -> Option<&ExponentVector> {
        match self.terms.as_slice() {
            [(c, u)] if c.is_one() => Some(u),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorBlock {
    pub line: usize,
    pub exponent: Rational,
    pub generators: Vec<GeneratorLine>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub dim: usize,
    pub characteristic: Option<u64>,
    pub factors: Vec<FactorBlock>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_row(text: &str, dim: usize, line: usize) -> Result<ExponentVector> {
    let entries = text
        .split_whitespace()
        .map(|t| t.parse::<u32>().map_err(|_| parse_error(line, format!("`{t}` is not a nonnegative integer"))))
        .collect::<Result<Vec<_>>>()?;
    if entries.len() != dim {
        return Err(parse_error(line, format!("expected {dim} exponents, found {}", entries.len())));
    }
    Ok(ExponentVector::new(entries).expect("dim >= 1"))
}

fn parse_generator(text: &str, dim: usize, line: usize) -> Result<GeneratorLine> {
    let terms = if text.contains('*') {
        text.split(" + ")
            .map(|term| {
                let (c, row) = term
                    .split_once('*')
                    .ok_or_else(|| parse_error(line, format!("term `{}` lacks `c * exponents`", term.trim())))?;
                let c: BigInt = c
                    .trim()
                    .parse()
                    .map_err(|_| parse_error(line, format!("`{}` is not an integer coefficient", c.trim())))?;
                Ok((c, parse_row(row, dim, line)?))
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        vec![(BigInt::one(), parse_row(text, dim, line)?)]
    };
    if terms.iter().all(|(c, _)| c.is_zero()) {
        return Err(parse_error(line, "generator is zero"));
    }
    Ok(GeneratorLine { line, terms })
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.starts_with('#'))
            .peekable();

        // Skip leading blank lines.
        while lines.peek().is_some_and(|(_, l)| l.is_empty()) {
            lines.next();
        }
        let (n, header) = lines.next().ok_or_else(|| parse_error(1, "empty file, expected `dim N`"))?;
        let dim = header
            .strip_prefix("dim ")
            .and_then(|d| d.trim().parse::<usize>().ok())
            .filter(|&d| d >= 1)
            .ok_or_else(|| parse_error(n, "expected `dim N` with N >= 1"))?;

        let mut characteristic = None;
        let mut factors: Vec<FactorBlock> = Vec::new();
        let mut current: Option<FactorBlock> = None;
        for (n, l) in lines {
            if l.is_empty() {
                if let Some(block) = current.take() {
                    factors.push(block);
                }
                continue;
            }
            if let Some(rest) = l.strip_prefix("char ") {
                if current.is_some() || !factors.is_empty() || characteristic.is_some() {
                    return Err(parse_error(n, "`char p` must directly follow `dim N`"));
                }
                let p = rest
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| parse_error(n, format!("`{}` is not a characteristic", rest.trim())))?;
                Ring::prime_field(p).map_err(|e| parse_error(n, e.to_string()))?;
                characteristic = Some(p);
                continue;
            }
            if let Some(rest) = l.strip_prefix("ideal") {
                if let Some(block) = current.take() {
                    factors.push(block);
                }
                let e = rest
                    .trim()
                    .strip_prefix("e=")
                    .ok_or_else(|| parse_error(n, "expected `ideal e=a/b`"))?;
                let exponent = parse_rational(e.trim()).ok_or_else(|| parse_error(n, format!("`{e}` is not a rational")))?;
                if !exponent.is_positive() {
                    return Err(parse_error(n, format!("exponent {exponent} must be positive")));
                }
                current = Some(FactorBlock {
                    line: n,
                    exponent,
                    generators: Vec::new(),
                });
                continue;
            }
            let block = current
                .as_mut()
                .ok_or_else(|| parse_error(n, "generator outside an `ideal` block"))?;
            block.generators.push(parse_generator(l, dim, n)?);
        }
        if let Some(block) = current.take() {
            factors.push(block);
        }
        if factors.is_empty() {
            return Err(parse_error(n, "no `ideal` block"));
        }
        for block in &factors {
            if block.generators.is_empty() {
                return Err(parse_error(block.line, "ideal block has no generators"));
            }
            for g in &block.generators {
                if let Some(u) = g.monomial() {
                    if u.is_zero() {
                        return Err(parse_error(g.line, "zero exponent vector generates the unit ideal"));
                    }
                }
            }
        }
        Ok(Self {
            dim,
            characteristic,
            factors,
        })
    }

    /// Coefficient ring of the generators: `GF(p)` with a `char` line, else `ℤ`.
    pub fn ring(&self) -> Ring {
        self.characteristic.map_or(Ring::Integers, Ring::PrimeField)
    }

    pub fn is_monomial(&self) -> bool {
        self.factors.iter().all(|b| b.generators.iter().all(|g| g.monomial().is_some()))
    }

    /// The monomial pair; every generator must be a monomial.
    pub fn multi_ideal(&self) -> Result<MultiIdeal> {
        let factors = self
            .factors
            .iter()
            .map(|block| {
                let gens = block
                    .generators
                    .iter()
                    .map(|g| {
                        g.monomial()
                            .cloned()
                            .ok_or_else(|| parse_error(g.line, "monomial generator expected"))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok((MonomialIdeal::new(gens)?, block.exponent.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        MultiIdeal::new(factors)
    }

    /// Generators as polynomials over [`ProblemFile::ring`], one list per factor.
    pub fn polynomials(&self) -> Result<Vec<Vec<SparsePolynomial>>> {
        let ring = self.ring();
        self.factors
            .iter()
            .map(|block| {
                block
                    .generators
                    .iter()
                    .map(|g| {
                        let p = SparsePolynomial::from_terms(
                            ring,
                            self.dim,
                            g.terms.iter().map(|(c, u)| (u.clone(), Rational::from_integer(c.clone()))),
                        )?;
                        if p.is_zero() {
                            Err(parse_error(g.line, format!("generator vanishes in {ring}")))
                        } else {
                            Ok(p)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Builds the file for a monomial pair.
    pub fn from_multi_ideal(pair: &MultiIdeal) -> Self {
        let factors = pair
            .factors()
            .iter()
            .map(|(a, e)| FactorBlock {
                line: 0,
                exponent: e.clone(),
                generators: a
                    .generators()
                    .iter()
                    .map(|u| GeneratorLine {
                        line: 0,
                        terms: vec![(BigInt::one(), u.clone())],
                    })
                    .collect(),
            })
            .collect();
        Self {
            dim: pair.dim(),
            characteristic: None,
            factors,
        }
    }

    /// Canonical text; parsing it gives back an equal file up to line numbers.
    pub fn to_canonical(&self) -> String {
        self.to_string()
    }
}

fn write_row(f: &mut fmt::Formatter<'_>, u: &ExponentVector) -> fmt::Result {
    for (i, x) in u.entries().iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim {}", self.dim)?;
        if let Some(p) = self.characteristic {
            writeln!(f, "char {p}")?;
        }
        for (i, block) in self.factors.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            writeln!(f, "ideal e={}", block.exponent)?;
            for g in &block.generators {
                if let Some(u) = g.monomial() {
                    write_row(f, u)?;
                } else {
                    for (j, (c, u)) in g.terms.iter().enumerate() {
                        if j > 0 {
                            f.write_str(" + ")?;
                        }
                        write!(f, "{c} * ")?;
                        write_row(f, u)?;
                    }
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
