//! Codimensions of contact loci of monomial ideals, and the jet functions
//! `s_m` and `z_m` built from them.
//!
//! For monomial ideals every irreducible component of
//! `Cont^{≥m_1}(a_1) ∩ ⋯ ∩ Cont^{≥m_s}(a_s)` is a maximal divisorial set of a
//! monomial valuation, so the codimension is the integer program
//!
//! ```text
//! min ⟨w, 1⟩  subject to  val_w(a_i) >= m_i for all i,
//! ```
//!
//! over `w >= 1` (arcs through the origin) or `w >= 0, w != 0` (all arcs).

use std::ops::ControlFlow;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, MultiIdeal};
use crate::invariants::enumerate::{for_each_in_box, for_each_with_sum};
use crate::invariants::result::JetOrderVector;
use crate::polyhedra::{val_unchecked, WeightVector};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactCodim {
    pub codim: u64,
    /// Lexicographically smallest optimal weight; `None` when no condition
    /// is imposed (codimension 0).
    pub witness: Option<WeightVector>,
}

/// Exact optimum of the contact-locus integer program.
pub fn contact_codim(pair: &MultiIdeal, m: &JetOrderVector, origin_fiber: bool) -> Result<ContactCodim> {
    if m.len() != pair.len() {
        return Err(Error::JetOrderLength {
            expected: pair.len(),
            found: m.len(),
        });
    }
    let ideals: Vec<&MonomialIdeal> = pair.factors().iter().map(|(a, _)| a).collect();
    Ok(contact_codim_raw(pair.dim(), &ideals, m.orders(), origin_fiber))
}

pub(crate) fn contact_codim_raw(dim: usize, ideals: &[&MonomialIdeal], m: &[u64], origin_fiber: bool) -> ContactCodim {
    let max_order = m.iter().copied().max().unwrap_or(0);
    let lo = u64::from(origin_fiber);
    if max_order == 0 {
        return if origin_fiber {
            ContactCodim {
                codim: dim as u64,
                witness: Some(WeightVector::ones(dim)),
            }
        } else {
            ContactCodim {
                codim: 0,
                witness: None,
            }
        };
    }
    // M·(1,…,1) is feasible since every generator has degree >= 1. Clamping
    // any feasible w to min(w, M) stays feasible: a generator touching a
    // clamped coordinate j already has ⟨w', u⟩ >= M·u_j >= M. So [lo, M]^N
    // contains an optimum.
    let hi = max_order;
    let feasible = |w: &[u64]| ideals.iter().zip(m).all(|(a, &mi)| val_unchecked(w, a) >= mi);
    for total in (lo * dim as u64).max(1)..=hi * dim as u64 {
        let found = for_each_with_sum(dim, total, lo, hi, |w| {
            if feasible(w) {
                ControlFlow::Break(w.to_vec())
            } else {
                ControlFlow::Continue(())
            }
        });
        if let ControlFlow::Break(w) = found {
            return ContactCodim {
                codim: total,
                witness: Some(WeightVector::new(w).expect("feasible weight is nonzero")),
            };
        }
    }
    unreachable!("M·(1,…,1) is feasible")
}

/// Fiber codimensions for every `m ∈ [0, bound]^s` at once.
///
/// For each `w ∈ [1, bound]^N` the entry at `min(val_w(a_i), bound)` keeps the
/// smallest `⟨w,1⟩`; a suffix minimum along every axis then turns "attains
/// exactly" into "attains at least". By the clamping argument above the box
/// contains an optimum for every `m` in range.
pub(crate) struct CodimTable {
    side: usize,
    codims: Vec<u64>,
}

/// Skip the table when the box or the grid would be too large.
const TABLE_BOX_LIMIT: u128 = 1 << 26;
const TABLE_GRID_LIMIT: u128 = 1 << 20;

impl CodimTable {
    pub(crate) fn build(dim: usize, ideals: &[&MonomialIdeal], bound: u64) -> Option<Self> {
        let side = bound as usize + 1;
        let box_size = (bound as u128).checked_pow(dim as u32)?;
        let grid = (side as u128).checked_pow(ideals.len() as u32)?;
        if box_size > TABLE_BOX_LIMIT || grid > TABLE_GRID_LIMIT {
            return None;
        }
        let grid = grid as usize;
        let index = |w: &[u64]| {
            ideals
                .iter()
                .fold(0usize, |acc, a| acc * side + val_unchecked(w, a).min(bound) as usize)
        };
        let slices: Vec<u64> = (1..=bound).collect();
        let mut codims = slices
            .par_iter()
            .fold(
                || vec![u64::MAX; grid],
                |mut table, &w0| {
                    let mut w = vec![w0];
                    let mut record = |w: &[u64]| {
                        let i = index(w);
                        let total: u64 = w.iter().sum();
                        if total < table[i] {
                            table[i] = total;
                        }
                    };
                    if dim == 1 {
                        record(&w);
                    } else {
                        let _ = for_each_in_box::<()>(dim - 1, 1, bound, |rest| {
                            w.truncate(1);
                            w.extend_from_slice(rest);
                            record(&w);
                            ControlFlow::Continue(())
                        });
                    }
                    table
                },
            )
            .reduce(
                || vec![u64::MAX; grid],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x = (*x).min(y);
                    }
                    a
                },
            );
        let mut stride = 1;
        for _ in 0..ideals.len() {
            for i in (0..grid).rev() {
                if (i / stride) % side < bound as usize {
                    let above = codims[i + stride];
                    if above < codims[i] {
                        codims[i] = above;
                    }
                }
            }
            stride *= side;
        }
        Some(Self { side, codims })
    }

    pub(crate) fn get(&self, m: &[u64]) -> u64 {
        let i = m.iter().fold(0usize, |acc, &x| acc * self.side + x as usize);
        self.codims[i]
    }
}

/// `s_m = codim(Cont^{≥m} ∩ π^{-1}(0)) - Σ e_i m_i`.
pub fn s_m(pair: &MultiIdeal, m: &JetOrderVector) -> Result<Rational> {
    let codim = contact_codim(pair, m, true)?.codim;
    Ok(s_from_codim(pair, m.orders(), codim))
}

pub(crate) fn s_from_codim(pair: &MultiIdeal, m: &[u64], codim: u64) -> Rational {
    let mut value = Rational::from_integer(BigInt::from(codim));
    for ((_, e), &mi) in pair.factors().iter().zip(m) {
        value -= e * Rational::from_integer(BigInt::from(mi));
    }
    value
}

/// `z_m = codim(Cont^{≥m+1}(a)) / (m+1)`.
pub fn z_m(a: &MonomialIdeal, m: u64) -> Rational {
    let codim = contact_codim_raw(a.dim(), &[a], &[m + 1], false).codim;
    Rational::new(BigInt::from(codim), BigInt::from(m + 1))
}
