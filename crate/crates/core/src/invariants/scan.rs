//! Empirical scan of `md(lct)` over monomial ideals `m^μ ⊆ a ⊆ m`.
//!
//! The maximum found is a lower estimate for the uniform bound `L_{N,μ}`;
//! nothing here proves an upper bound.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::{minimalize, power_of_maximal_ideal, ExponentVector, MonomialIdeal};
use crate::invariants::enumerate::graded;
use crate::invariants::lct::{md_lct_toric, MdOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub dim: usize,
    pub mu: u32,
    pub cap: u64,
    pub mode: ScanMode,
    pub ideals_examined: usize,
    pub max_md: Option<u64>,
    /// First ideal (in canonical order) attaining `max_md`.
    pub argmax: Option<MonomialIdeal>,
    /// md value → number of ideals.
    pub histogram: BTreeMap<u64, usize>,
    /// Ideals where no lct-computing toric divisor has `k_E <= cap`.
    pub unresolved: Vec<MonomialIdeal>,
}

impl ScanReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let mode = match self.mode {
            ScanMode::Exhaustive => "exhaustive".to_string(),
            ScanMode::Sampled { samples, seed } => format!("sampled({samples}, seed={seed})"),
        };
        out.push_str(&format!("scan N={} mu={} cap={} mode={mode}\n", self.dim, self.mu, self.cap));
        out.push_str(&format!("ideals: {}\n", self.ideals_examined));
        match (&self.max_md, &self.argmax) {
            (Some(md), Some(a)) => out.push_str(&format!("max md: {md} at {a}\n")),
            _ => out.push_str("max md: none\n"),
        }
        for (md, count) in &self.histogram {
            out.push_str(&format!("md {md}: {count}\n"));
        }
        out.push_str(&format!("unresolved: {}\n", self.unresolved.len()));
        for a in &self.unresolved {
            out.push_str(&format!("unresolved {a}\n"));
        }
        out
    }
}

/// Exhaustive mode is used for `N <= 3` and `μ <= 4`; larger inputs need a sampled mode.
pub fn default_mode(dim: usize, mu: u32, samples: usize, seed: u64) -> ScanMode {
    if dim <= 3 && mu <= 4 {
        ScanMode::Exhaustive
    } else {
        ScanMode::Sampled { samples, seed }
    }
}

/// Monomials of degree `1..mu`, which together with `m^μ` generate every
/// ideal between `m^μ` and `m`.
fn low_degree_monomials(dim: usize, mu: u32) -> Vec<ExponentVector> {
    graded(dim, mu as u64 - 1)
        .into_iter()
        .filter(|v| v.iter().any(|&x| x > 0))
        .map(|v| ExponentVector::new(v.into_iter().map(|x| x as u32).collect()).expect("dim >= 1"))
        .collect()
}

fn ideal_from_subset(top: &MonomialIdeal, low: &[ExponentVector], mask: u64) -> MonomialIdeal {
    let mut gens: Vec<ExponentVector> = top.generators().to_vec();
    gens.extend(
        low.iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, u)| u.clone()),
    );
    minimalize(gens).expect("nonzero generators")
}

/// All distinct monomial ideals `a` with `m^μ ⊆ a ⊆ m`, canonically ordered.
pub fn ideals_between(dim: usize, mu: u32) -> Result<Vec<MonomialIdeal>> {
    let top = power_of_maximal_ideal(dim, mu)?;
    let low = low_degree_monomials(dim, mu);
    assert!(low.len() < 40, "exhaustive enumeration is limited to small N and mu");
    let set: BTreeSet<MonomialIdeal> = (0u64..1 << low.len())
        .into_par_iter()
        .map(|mask| ideal_from_subset(&top, &low, mask))
        .collect();
    Ok(set.into_iter().collect())
}

fn sampled_ideals(dim: usize, mu: u32, samples: usize, seed: u64) -> Result<Vec<MonomialIdeal>> {
    let top = power_of_maximal_ideal(dim, mu)?;
    let low = low_degree_monomials(dim, mu);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let set: BTreeSet<MonomialIdeal> = (0..samples)
        .map(|_| {
            let gens: Vec<ExponentVector> = top
                .generators()
                .iter()
                .cloned()
                .chain(low.iter().filter(|_| rng.gen_bool(0.5)).cloned())
                .collect();
            minimalize(gens).expect("nonzero generators")
        })
        .collect();
    Ok(set.into_iter().collect())
}

pub fn scan_md_bound(dim: usize, mu: u32, k_cap: u64, mode: ScanMode) -> Result<ScanReport> {
    if mu == 0 {
        return Err(Error::ZeroPower);
    }
    let ideals = match mode {
        ScanMode::Exhaustive => ideals_between(dim, mu)?,
        ScanMode::Sampled { samples, seed } => sampled_ideals(dim, mu, samples, seed)?,
    };
    let outcomes: Vec<MdOutcome> = ideals
        .par_iter()
        .map(|a| md_lct_toric(a, k_cap))
        .collect::<Result<_>>()?;

    let mut report = ScanReport {
        dim,
        mu,
        cap: k_cap,
        mode,
        ideals_examined: ideals.len(),
        max_md: None,
        argmax: None,
        histogram: BTreeMap::new(),
        unresolved: Vec::new(),
    };
    for (a, outcome) in ideals.iter().zip(&outcomes) {
        match outcome.k_min() {
            Some(md) => {
                *report.histogram.entry(md).or_default() += 1;
                if report.max_md.is_none_or(|best| md > best) {
                    report.max_md = Some(md);
                    report.argmax = Some(a.clone());
                }
            }
            None => report.unresolved.push(a.clone()),
        }
    }
    Ok(report)
}
