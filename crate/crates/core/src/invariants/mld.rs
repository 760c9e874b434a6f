//! Minimal log discrepancy at the origin, by two routes: toric divisors
//! (selection-region LPs plus a box search) and the jet-order sweep of `s_m`.

use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, MultiIdeal};
use crate::invariants::contact::{contact_codim_raw, CodimTable};
use crate::invariants::enumerate::{for_each_in_box, for_each_with_sum};
use crate::invariants::result::{Certificate, InvariantResult, InvariantValue, JetOrderVector, Route, Witness};
use crate::polyhedra::lp::{LinearProgram, LpOutcome, Relation};
use crate::polyhedra::{val_unchecked, WeightVector};
use crate::rational::{ceil_to_grid, common_denominator, Rational};
use crate::toric::log_discrepancy;

/// Log discrepancies scaled by the common denominator of the exponents so
/// the inner loops stay in machine integers.
struct Scaled<'a> {
    pair: &'a MultiIdeal,
    denom: i128,
    exps: Vec<i128>,
}

impl<'a> Scaled<'a> {
    fn new(pair: &'a MultiIdeal) -> Self {
        let exps = pair.exponents();
        let d = common_denominator(&exps);
        let exps = exps
            .iter()
            .map(|e| (e * Rational::from_integer(d.clone())).to_integer().to_i128().expect("exponent fits in i128"))
            .collect();
        Self {
            pair,
            denom: d.to_i128().expect("denominator fits in i128"),
            exps,
        }
    }

    fn log_discrepancy(&self, w: &[u64]) -> i128 {
        let total: u64 = w.iter().sum();
        let mut v = self.denom * total as i128;
        for ((a, _), e) in self.pair.factors().iter().zip(&self.exps) {
            v -= e * val_unchecked(w, a) as i128;
        }
        v
    }

    fn s_value(&self, codim: u64, m: &[u64]) -> i128 {
        let mut v = self.denom * codim as i128;
        for (e, &mi) in self.exps.iter().zip(m) {
            v -= e * mi as i128;
        }
        v
    }

    fn to_rational(&self, v: i128) -> Rational {
        Rational::new(BigInt::from(v), BigInt::from(self.denom))
    }
}

/// Default box side `B = N·(1 + ⌈Σ e_i D_i⌉)`, `D_i` the largest generator degree of `a_i`.
pub fn default_box_bound(pair: &MultiIdeal) -> u64 {
    let weighted: Rational = pair
        .factors()
        .iter()
        .map(|(a, e)| e * Rational::from_integer(BigInt::from(a.max_degree())))
        .sum();
    let c = weighted.ceil().to_integer().to_u64().expect("box bound fits in u64");
    pair.dim() as u64 * (1 + c)
}

enum RegionOutcome {
    Empty,
    Bounded(Rational),
    /// A feasible `w >= 1` and a direction along which the log discrepancy decreases.
    Ray(Vec<Rational>, Vec<Rational>),
}

/// Selection region: generator `choice[i]` of `a_i` attains `val_w(a_i)`.
/// On it the log discrepancy is `⟨w, v⟩` with `v = 1 - Σ e_i u_i`.
fn solve_region(pair: &MultiIdeal, choice: &[usize]) -> RegionOutcome {
    let n = pair.dim();
    let r = |x: i64| Rational::from_integer(BigInt::from(x));
    let mut v = vec![Rational::one(); n];
    for ((a, e), &c) in pair.factors().iter().zip(choice) {
        for (vj, &uj) in v.iter_mut().zip(a.generators()[c].entries()) {
            *vj -= e * r(uj as i64);
        }
    }
    // w = 1 + y with y >= 0.
    let mut lp = LinearProgram::new(n, v.clone());
    for ((a, _), &c) in pair.factors().iter().zip(choice) {
        let chosen = a.generators()[c].entries();
        for (k, other) in a.generators().iter().enumerate() {
            if k == c {
                continue;
            }
            let diff: Vec<i64> = other.entries().iter().zip(chosen).map(|(&x, &y)| x as i64 - y as i64).collect();
            let rhs = -diff.iter().sum::<i64>();
            lp.add(diff.iter().map(|&d| r(d)).collect(), Relation::Ge, r(rhs));
        }
    }
    let offset: Rational = v.iter().sum();
    let shift = |y: Vec<Rational>| y.into_iter().map(|x| x + Rational::one()).collect::<Vec<_>>();
    match lp.solve() {
        LpOutcome::Infeasible => RegionOutcome::Empty,
        LpOutcome::Optimal { value, .. } => RegionOutcome::Bounded(value + offset),
        LpOutcome::Unbounded { point, direction } => RegionOutcome::Ray(shift(point), direction),
    }
}

fn region_choices(pair: &MultiIdeal) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for (a, _) in pair.factors() {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..a.generators().len()).map(move |k| {
                    let mut p = prefix.clone();
                    p.push(k);
                    p
                })
            })
            .collect();
    }
    out
}

/// Integer point on the ray `point + t·direction`, scaled by its common
/// denominator, with negative log discrepancy.
fn witness_on_ray(pair: &MultiIdeal, point: &[Rational], direction: &[Rational]) -> WeightVector {
    let n = pair.dim();
    let mut v = vec![Rational::one(); n];
    // Recompute the slope through the exact log discrepancy at two points.
    let at = |w: &[Rational]| -> Rational {
        let den = common_denominator(w.iter());
        let scaled: Vec<u64> = w
            .iter()
            .map(|x| (x * Rational::from_integer(den.clone())).to_integer().to_u64().expect("nonnegative"))
            .collect();
        let wv = WeightVector::new(scaled).expect("nonzero");
        log_discrepancy(&wv, pair).expect("same dimension") / Rational::from_integer(den)
    };
    let f0 = at(point);
    let ahead: Vec<Rational> = point.iter().zip(direction).map(|(p, d)| p + d).collect();
    let slope = at(&ahead) - &f0;
    debug_assert!(slope.is_negative());
    let t = if f0.is_negative() {
        Rational::zero()
    } else {
        (&f0 / -&slope).floor() + Rational::one()
    };
    for ((vj, p), d) in v.iter_mut().zip(point).zip(direction) {
        *vj = p + &t * d;
    }
    let den = common_denominator(v.iter());
    let w: Vec<u64> = v
        .iter()
        .map(|x| (x * Rational::from_integer(den.clone())).to_integer().to_u64().expect("fits"))
        .collect();
    WeightVector::new(w).expect("w >= 1")
}

/// mld over toric divisors centered at the origin, with the default box.
pub fn mld_toric(pair: &MultiIdeal) -> InvariantResult {
    mld_toric_with_box(pair, default_box_bound(pair))
}

/// Scans `[1, box_bound]^N` for the minimum; the selection-region LPs give
/// an exact lower bound (certificate) and decide `-∞` exactly.
pub fn mld_toric_with_box(pair: &MultiIdeal, box_bound: u64) -> InvariantResult {
    let n = pair.dim();
    let box_bound = box_bound.max(1);
    let scaled = Scaled::new(pair);
    let outcomes: Vec<RegionOutcome> = region_choices(pair).par_iter().map(|c| solve_region(pair, c)).collect();

    let ray = outcomes.iter().find_map(|o| match o {
        RegionOutcome::Ray(p, d) => Some((p.clone(), d.clone())),
        _ => None,
    });

    // Parallel over the first coordinate; slices are combined in order so the
    // result does not depend on scheduling.
    let slices: Vec<u64> = (1..=box_bound).collect();

    if let Some((point, direction)) = ray {
        let first_negative = slices
            .par_iter()
            .map(|&w0| {
                let mut w = vec![w0; 1];
                let found = for_each_in_box(n - 1, 1, box_bound, |rest| {
                    w.truncate(1);
                    w.extend_from_slice(rest);
                    if scaled.log_discrepancy(&w) < 0 {
                        ControlFlow::Break(w.clone())
                    } else {
                        ControlFlow::Continue(())
                    }
                });
                let found = if n == 1 {
                    (scaled.log_discrepancy(&w) < 0).then(|| w.clone())
                } else {
                    match found {
                        ControlFlow::Break(w) => Some(w),
                        ControlFlow::Continue(()) => None,
                    }
                };
                found
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .next();
        let witness = match first_negative {
            Some(w) => WeightVector::new(w).expect("w >= 1"),
            None => witness_on_ray(pair, &point, &direction),
        };
        return InvariantResult {
            value: InvariantValue::MinusInfinity,
            witness: Witness::Weight(witness),
            certificate: Certificate::Certified,
            route: Route::ToricRegions,
            lower_bound: None,
        };
    }

    let lower = outcomes
        .iter()
        .filter_map(|o| match o {
            RegionOutcome::Bounded(v) => Some(v.clone()),
            _ => None,
        })
        .min()
        .expect("the regions cover w >= 1");

    let (best, best_w) = slices
        .par_iter()
        .map(|&w0| {
            let mut best: Option<(i128, Vec<u64>)> = None;
            let mut w = vec![w0];
            let mut consider = |w: &[u64]| {
                let v = scaled.log_discrepancy(w);
                if best.as_ref().is_none_or(|(b, _)| v < *b) {
                    best = Some((v, w.to_vec()));
                }
            };
            if n == 1 {
                consider(&w);
            } else {
                let _ = for_each_in_box::<()>(n - 1, 1, box_bound, |rest| {
                    w.truncate(1);
                    w.extend_from_slice(rest);
                    consider(&w);
                    ControlFlow::Continue(())
                });
            }
            best.expect("nonempty slice")
        })
        .collect::<Vec<_>>()
        .into_iter()
        .reduce(|a, b| if b.0 < a.0 { b } else { a })
        .expect("nonempty box");

    let value = scaled.to_rational(best);
    let grid = BigInt::from(scaled.denom);
    let certificate = if value == ceil_to_grid(&lower, &grid) {
        Certificate::Certified
    } else {
        Certificate::BoxBounded(box_bound)
    };
    InvariantResult {
        value: InvariantValue::Finite(value),
        witness: Witness::Weight(WeightVector::new(best_w).expect("w >= 1")),
        certificate,
        route: Route::ToricRegions,
        lower_bound: Some(lower),
    }
}

/// All `m ∈ ℤ_{≥0}^s` with `|m| <= bound`, ordered by `|m|`, then lexicographically.
pub(crate) fn jet_orders(s: usize, bound: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for total in 0..=bound {
        let _ = for_each_with_sum::<()>(s, total, 0, total, |m| {
            out.push(m.to_vec());
            ControlFlow::Continue(())
        });
    }
    out
}

/// `min { s_m : |m| <= search_bound }` without cross-certification; finite
/// results are `BoxBounded(search_bound)`. A negative `s_m` proves `-∞`; the
/// witness is then the first such `m` by `|m|`, then lexicographically.
pub fn mld_via_jets_uncertified(pair: &MultiIdeal, search_bound: u64) -> Result<InvariantResult> {
    if search_bound == 0 {
        return Err(Error::ZeroBound);
    }
    let scaled = Scaled::new(pair);
    let ideals: Vec<&MonomialIdeal> = pair.factors().iter().map(|(a, _)| a).collect();
    let orders = jet_orders(pair.len(), search_bound);
    let values: Vec<i128> = match CodimTable::build(pair.dim(), &ideals, search_bound) {
        Some(table) => orders.iter().map(|m| scaled.s_value(table.get(m), m)).collect(),
        None => orders
            .par_iter()
            .map(|m| scaled.s_value(contact_codim_raw(pair.dim(), &ideals, m, true).codim, m))
            .collect(),
    };

    if let Some(idx) = values.iter().position(|&v| v < 0) {
        return Ok(InvariantResult {
            value: InvariantValue::MinusInfinity,
            witness: Witness::JetOrder(JetOrderVector::new(orders[idx].clone())),
            certificate: Certificate::Certified,
            route: Route::JetSweep,
            lower_bound: None,
        });
    }
    let mut best: Option<(i128, &Vec<u64>)> = None;
    for (v, m) in values.iter().zip(&orders) {
        let better = match best {
            None => true,
            Some((bv, bm)) => *v < bv || (*v == bv && m < bm),
        };
        if better {
            best = Some((*v, m));
        }
    }
    let (v, m) = best.expect("m = 0 is always enumerated");
    Ok(InvariantResult {
        value: InvariantValue::Finite(scaled.to_rational(v)),
        witness: Witness::JetOrder(JetOrderVector::new(m.clone())),
        certificate: Certificate::BoxBounded(search_bound),
        route: Route::JetSweep,
        lower_bound: None,
    })
}

/// Upgrades a jet-sweep result to `Certified` when it equals a certified
/// toric value.
pub fn certify_against(mut jets: InvariantResult, toric: &InvariantResult) -> InvariantResult {
    if toric.is_certified() && jets.value == toric.value {
        jets.certificate = Certificate::Certified;
        jets.lower_bound = toric.lower_bound.clone();
    }
    jets
}

/// `mld(0; A, a^e) = inf_m s_m`, restricted to `|m| <= search_bound`.
pub fn mld_via_jets(pair: &MultiIdeal, search_bound: u64) -> Result<InvariantResult> {
    let jets = mld_via_jets_uncertified(pair, search_bound)?;
    if jets.is_certified() {
        return Ok(jets);
    }
    Ok(certify_against(jets, &mld_toric(pair)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::power_of_maximal_ideal;
    use crate::rational::{int, rat};

    fn single(rows: &[&[u32]], e: Rational) -> MultiIdeal {
        MultiIdeal::single(MonomialIdeal::from_rows(rows).unwrap(), e).unwrap()
    }

    fn weight(r: &InvariantResult) -> Vec<u64> {
        match &r.witness {
            Witness::Weight(w) => w.entries().to_vec(),
            other => panic!("{other:?}"),
        }
    }

    fn orders(r: &InvariantResult) -> Vec<u64> {
        match &r.witness {
            Witness::JetOrder(m) => m.orders().to_vec(),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn toric_examples() {
        let m = MultiIdeal::single(power_of_maximal_ideal(2, 1).unwrap(), int(1)).unwrap();
        let r = mld_toric(&m);
        assert_eq!(r.value, InvariantValue::Finite(int(1)));
        assert_eq!(weight(&r), vec![1, 1]);
        assert!(r.is_certified());

        let x3 = single(&[&[1, 0]], int(3));
        let r = mld_toric(&x3);
        assert_eq!(r.value, InvariantValue::MinusInfinity);
        assert_eq!(weight(&r), vec![1, 1]);

        let m3 = MultiIdeal::single(power_of_maximal_ideal(3, 1).unwrap(), rat(1, 1000)).unwrap();
        let r = mld_toric(&m3);
        assert_eq!(r.value, InvariantValue::Finite(rat(2999, 1000)));
        assert_eq!(weight(&r), vec![1, 1, 1]);
        assert!(r.is_certified());
    }

    #[test]
    fn ray_witness_has_negative_discrepancy() {
        // Force the constructed witness by using a box too small to contain one.
        let pair = single(&[&[2, 0], &[0, 5]], rat(3, 4));
        let r = mld_toric_with_box(&pair, 1);
        assert_eq!(r.value, InvariantValue::MinusInfinity);
        let Witness::Weight(w) = &r.witness else { panic!() };
        assert!(w.center_is_origin());
        assert!(log_discrepancy(w, &pair).unwrap().is_negative());
    }

    #[test]
    fn one_dimensional_pairs() {
        let r = mld_toric(&single(&[&[2]], rat(1, 2)));
        assert_eq!(r.value, InvariantValue::Finite(int(0)));
        let r = mld_toric(&single(&[&[2]], int(1)));
        assert_eq!(r.value, InvariantValue::MinusInfinity);
        assert_eq!(weight(&r), vec![1]);
    }

    #[test]
    fn jet_examples() {
        let m = MultiIdeal::single(power_of_maximal_ideal(2, 1).unwrap(), int(1)).unwrap();
        let r = mld_via_jets(&m, 6).unwrap();
        assert_eq!(r.value, InvariantValue::Finite(int(1)));
        assert_eq!(orders(&r), vec![1]);
        assert!(r.is_certified());

        let x3 = single(&[&[1, 0]], int(3));
        let r = mld_via_jets(&x3, 6).unwrap();
        assert_eq!(r.value, InvariantValue::MinusInfinity);
        assert_eq!(orders(&r), vec![1]);

        // s_(k) = 2·max(1, ⌈k/2⌉) - k/2: minimum 1 at k = 2.
        let sq = single(&[&[2, 0], &[0, 2]], rat(1, 2));
        let r = mld_via_jets(&sq, 8).unwrap();
        assert_eq!(r.value, InvariantValue::Finite(int(1)));
        assert_eq!(orders(&r), vec![2]);
        assert_eq!(mld_toric(&sq).value, InvariantValue::Finite(int(1)));
        assert!(mld_via_jets(&sq, 0).is_err());
    }

    #[test]
    fn small_search_bound_is_not_certified() {
        let sq = single(&[&[2, 0], &[0, 2]], rat(1, 2));
        let r = mld_via_jets(&sq, 1).unwrap();
        assert_eq!(r.value, InvariantValue::Finite(rat(3, 2)));
        assert_eq!(r.certificate, Certificate::BoxBounded(1));
    }

    #[test]
    fn jet_orders_are_graded() {
        assert_eq!(
            jet_orders(2, 2),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![0, 2], vec![1, 1], vec![2, 0]]
        );
    }
}
