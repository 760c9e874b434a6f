//! Lifting polynomials over `𝔽_p` to `ℤ` and reducing them back.
//!
//! Coefficient-wise lifting keeps the support, so every monomial valuation is
//! preserved. [`truncate_lifting`] handles arbitrary liftings: terms of weight
//! below `d = val_w(F mod p)` vanish mod `p` and can be dropped, after which
//! the lifting has the same `w`-valuation as the original.
//!
//! Only prime fields are handled; `𝔽_q` for composite `q` is rejected.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Ring, SparsePolynomial};
use crate::polyhedra::{val_w_polynomial, Valuation, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftingRecord {
    pub p: u64,
    pub original: SparsePolynomial,
    pub lifted: SparsePolynomial,
    pub weight: Option<WeightVector>,
    pub truncation_degree: Option<u64>,
}

impl LiftingRecord {
    /// Checks `lifted mod p = original` and, with a weight, `val_w(lifted) = val_w(original) = d`.
    pub fn verify(&self) -> Result<bool> {
        if reduce_mod_p(&self.lifted, self.p)? != self.original {
            return Ok(false);
        }
        match (&self.weight, self.truncation_degree) {
            (Some(w), Some(d)) => {
                let lifted = val_w_polynomial(w, &self.lifted)?;
                let original = val_w_polynomial(w, &self.original)?;
                Ok(lifted == original && lifted == Valuation::Finite(d))
            }
            _ => Ok(true),
        }
    }
}

fn field_characteristic(f: &SparsePolynomial) -> Result<u64> {
    match f.ring() {
        Ring::PrimeField(p) => Ok(p),
        other => Err(Error::RingMismatch {
            expected: "GF(p)".into(),
            found: other.to_string(),
        }),
    }
}

fn require_integers(f: &SparsePolynomial) -> Result<()> {
    if f.ring() == Ring::Integers {
        Ok(())
    } else {
        Err(Error::RingMismatch {
            expected: Ring::Integers.to_string(),
            found: f.ring().to_string(),
        })
    }
}

/// Replaces each coefficient by its representative in `[0, p-1]`.
pub fn lift_prime_field(f: &SparsePolynomial) -> Result<SparsePolynomial> {
    field_characteristic(f)?;
    f.change_ring(Ring::Integers)
}

/// Coefficient-wise reduction `ℤ → 𝔽_p`.
pub fn reduce_mod_p(f: &SparsePolynomial, p: u64) -> Result<SparsePolynomial> {
    let field = Ring::prime_field(p)?;
    require_integers(f)?;
    f.change_ring(field)
}

/// Drops the terms of `w`-weight below `d` from a lifting `f` over `ℤ`.
///
/// `d` must equal `val_w(f mod p)`, and every dropped term must vanish mod
/// `p`; otherwise the call is rejected.
pub fn truncate_lifting(f: &SparsePolynomial, w: &WeightVector, d: u64, p: u64) -> Result<SparsePolynomial> {
    let reduced = reduce_mod_p(f, p)?;
    let expected = match val_w_polynomial(w, &reduced)? {
        Valuation::Finite(v) => v,
        Valuation::Infinity => return Err(Error::DegenerateLift { p }),
    };
    let p_big = BigInt::from(p);
    for (u, c) in f.terms() {
        let weight = u.dot(w.entries());
        if weight < d && !c.to_integer().mod_floor(&p_big).is_zero() {
            return Err(Error::TruncationPrecondition {
                term: u.to_string(),
                weight,
                d,
                coefficient: c.to_string(),
                p,
            });
        }
    }
    if d != expected {
        return Err(Error::TruncationDegree { given: d, expected });
    }
    Ok(f.filter_terms(|u, _| u.dot(w.entries()) >= d))
}

/// Lifts each generator and truncates at its own `w`-valuation.
pub fn lift_ideal_valuation_preserving(gens: &[SparsePolynomial], w: &WeightVector) -> Result<Vec<LiftingRecord>> {
    gens.iter()
        .map(|g| {
            let p = field_characteristic(g)?;
            let d = val_w_polynomial(w, g)?.finite().ok_or(Error::ZeroPolynomial)?;
            let lifted = truncate_lifting(&lift_prime_field(g)?, w, d, p)?;
            let record = LiftingRecord {
                p,
                original: g.clone(),
                lifted,
                weight: Some(w.clone()),
                truncation_degree: Some(d),
            };
            debug_assert!(record.verify().unwrap_or(false));
            Ok(record)
        })
        .collect()
}
