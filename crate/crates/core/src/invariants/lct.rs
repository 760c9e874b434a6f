//! Log canonical thresholds through jets, and the minimal discrepancy of
//! toric divisors computing the lct.

use std::ops::ControlFlow;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::invariants::contact::z_m;
use crate::invariants::enumerate::for_each_with_sum;
use crate::invariants::result::{Certificate, InvariantResult, InvariantValue, JetOrderVector, Route, Witness};
use crate::polyhedra::{lct_howald, val_unchecked, WeightVector};
use crate::rational::Rational;

/// `z_0, …, z_bound`.
pub fn z_sweep(a: &MonomialIdeal, bound: u64) -> Vec<Rational> {
    (0..=bound).into_par_iter().map(|m| z_m(a, m)).collect()
}

/// `min_{0 <= m <= bound} z_m`, witnessed by the smallest attaining `m`.
pub fn lct_via_jets(a: &MonomialIdeal, search_bound: u64) -> Result<InvariantResult> {
    if search_bound == 0 {
        return Err(Error::ZeroBound);
    }
    let sweep = z_sweep(a, search_bound);
    let (m, value) = sweep
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.cmp(y.1).then(x.0.cmp(&y.0)))
        .expect("nonempty sweep");
    let certificate = if *value == lct_howald(a) {
        Certificate::Certified
    } else {
        Certificate::BoxBounded(search_bound)
    };
    Ok(InvariantResult {
        value: InvariantValue::Finite(value.clone()),
        witness: Witness::JetOrder(JetOrderVector::new(vec![m as u64])),
        certificate,
        route: Route::ZmSweep,
        lower_bound: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MdOutcome {
    Found {
        k_min: u64,
        /// Every toric `w` attaining `k_min`, lexicographically sorted.
        witnesses: Vec<WeightVector>,
    },
    /// No toric divisor with `k_E <= cap` computes the lct.
    NotFound { cap: u64 },
}

impl MdOutcome {
    pub fn k_min(&self) -> Option<u64> {
        match self {
            MdOutcome::Found { k_min, .. } => Some(*k_min),
            MdOutcome::NotFound { .. } => None,
        }
    }
}

/// Checks `(k_E+1)/val_E(a) = p/q` without division.
struct LctTest<'a> {
    a: &'a MonomialIdeal,
    p: u128,
    q: u128,
}

impl<'a> LctTest<'a> {
    fn new(a: &'a MonomialIdeal) -> Self {
        let lct = lct_howald(a);
        Self {
            a,
            p: lct.numer().to_u128().expect("small lct"),
            q: lct.denom().to_u128().expect("small lct"),
        }
    }

    fn computes(&self, w: &[u64]) -> bool {
        let val = val_unchecked(w, self.a) as u128;
        let total: u64 = w.iter().sum();
        val > 0 && self.q * total as u128 == self.p * val
    }
}

/// All toric `w ∈ ℤ_{≥0}^N \ {0}` with `k_E <= cap` computing the lct,
/// ordered by `⟨w,1⟩`, then lexicographically.
pub fn toric_lct_divisors(a: &MonomialIdeal, cap: u64) -> Vec<WeightVector> {
    let test = LctTest::new(a);
    let mut out = Vec::new();
    for total in 1..=cap + 1 {
        let _ = for_each_with_sum::<()>(a.dim(), total, 0, total, |w| {
            if test.computes(w) {
                out.push(WeightVector::new(w.to_vec()).expect("nonzero"));
            }
            ControlFlow::Continue(())
        });
    }
    out
}

/// `md(lct) = min{k_E : E toric, computes lct(0; A, a)}`, searched over `k_E <= cap`.
pub fn md_lct_toric(a: &MonomialIdeal, k_cap: u64) -> Result<MdOutcome> {
    if k_cap == 0 {
        return Err(Error::ZeroBound);
    }
    let test = LctTest::new(a);
    for total in 1..=k_cap + 1 {
        let mut witnesses = Vec::new();
        let _ = for_each_with_sum::<()>(a.dim(), total, 0, total, |w| {
            if test.computes(w) {
                witnesses.push(WeightVector::new(w.to_vec()).expect("nonzero"));
            }
            ControlFlow::Continue(())
        });
        if !witnesses.is_empty() {
            return Ok(MdOutcome::Found {
                k_min: total - 1,
                witnesses,
            });
        }
    }
    Ok(MdOutcome::NotFound { cap: k_cap })
}

/// Smallest `m` such that a `z_m` sweep over `0..=m` is guaranteed to reach
/// the lct: one less than the smallest offset among lct-computing facets.
pub fn lct_attaining_order(a: &MonomialIdeal) -> u64 {
    let p = crate::polyhedra::NewtonPolyhedron::new(a.clone());
    crate::polyhedra::lct_computing_facets(&p)
        .iter()
        .map(|f| f.offset - 1)
        .min()
        .expect("lct is computed by a facet")
}
