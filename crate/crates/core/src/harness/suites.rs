use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use super::corpus::{jet_corpus, random_exponent, random_ideal};
use super::{CaseRecord, CaseStatus, SuiteReport};
use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal, MultiIdeal};
use crate::invariants::{
    bound_divisor_to_jet, height_monomial, lct_attaining_order, lct_via_jets, md_lct_toric, mld_toric,
    mld_via_jets_uncertified, toric_lct_divisors, z_m, InvariantResult, InvariantValue, MdOutcome, Witness,
};
use crate::invariants::mld::certify_against;
use crate::jets::{jet_equations, reduce_jets_mod_p, JetPolynomial};
use crate::lifting::{lift_ideal_valuation_preserving, lift_prime_field, reduce_mod_p, truncate_lifting};
use crate::poly::{is_prime, Ring, SparsePolynomial};
use crate::polyhedra::{lct_computing_facets, lct_howald, val_unchecked, val_w_polynomial, NewtonPolyhedron, Valuation, WeightVector};
use crate::problem::ProblemFile;
use crate::rational::{ceil_u64, Rational};

fn one_line(pair: &MultiIdeal) -> String {
    ProblemFile::from_multi_ideal(pair).to_canonical().trim_end().replace('\n', "; ")
}

fn ideal_line(a: &MonomialIdeal) -> String {
    format!("dim {}; {a}", a.dim())
}

/// The `(x, y^i)` family: lct, md of the lct and the divisibility of `k_E + 1`
/// for every computing toric divisor.
pub fn suite_appendix_family(i_max: u64) -> Result<SuiteReport> {
    if i_max == 0 {
        return Err(Error::ZeroBound);
    }
    let outcomes: Vec<(CaseRecord, Option<u64>)> = (1..=i_max)
        .into_par_iter()
        .map(|i| {
            let a = MonomialIdeal::from_rows(&[&[1, 0], &[0, i as u32]]).expect("valid ideal");
            let lct = lct_howald(&a);
            let md = md_lct_toric(&a, i).expect("cap >= 1");
            let divisors = toric_lct_divisors(&a, 3 * (i + 1) - 1);
            let expected_lct = Rational::new(BigInt::from(i + 1), BigInt::from(i));
            let expected_w = WeightVector::new(vec![i, 1]).expect("nonzero");
            let md_ok = md
                == MdOutcome::Found {
                    k_min: i,
                    witnesses: vec![expected_w],
                };
            let divisible = divisors.iter().all(|w| w.total() % (i + 1) == 0);
            let md_text = match &md {
                MdOutcome::Found { k_min, witnesses } => {
                    let ws: Vec<String> = witnesses.iter().map(|w| w.to_string()).collect();
                    format!("md={k_min} w={}", ws.join(","))
                }
                MdOutcome::NotFound { cap } => format!("md>{cap}"),
            };
            let status = if lct == expected_lct && md_ok && divisible && !divisors.is_empty() {
                CaseStatus::Pass
            } else {
                CaseStatus::Fail
            };
            let record = CaseRecord::new(
                format!("appendix-{i:02}"),
                ideal_line(&a),
                format!("lct={expected_lct} md={i} w=({i},1)"),
                format!("lct={lct} {md_text} computing={} divisible={divisible}", divisors.len()),
                status,
            );
            (record, md.k_min())
        })
        .collect();
    let mds: Vec<Option<u64>> = outcomes.iter().map(|(_, md)| *md).collect();
    let mut report = SuiteReport::new("appendix", 0, outcomes.into_iter().map(|(r, _)| r).collect());
    if !mds.windows(2).all(|w| matches!((w[0], w[1]), (Some(x), Some(y)) if x < y)) {
        report.failures.push("md is not strictly increasing along the family".into());
    }
    report.notes.push(format!(
        "md along i = 1..{i_max}: {}",
        mds.iter().map(|m| m.map_or("?".into(), |v| v.to_string())).collect::<Vec<_>>().join(",")
    ));
    Ok(report)
}

/// Jet-side search bound from the toric answer: `⌈(k*+1+max e)/min e⌉`,
/// `k*` the discrepancy of the toric witness. For `-∞` the witness's own jet
/// order `(val_{w*}(a_i))_i` is included, since a negative log discrepancy
/// need not be reachable below the translated bound.
pub fn translated_mld_bound(pair: &MultiIdeal, toric: &InvariantResult) -> u64 {
    let Witness::Weight(w) = &toric.witness else {
        unreachable!("toric results carry weight witnesses")
    };
    let l_prime = bound_divisor_to_jet(w.total() - 1, &pair.exponents()).expect("nonempty exponents");
    let mut bound = ceil_u64(&l_prime).expect("bound fits in u64");
    if toric.value.is_minus_infinity() {
        let own: u64 = pair.factors().iter().map(|(a, _)| val_unchecked(w.entries(), a)).sum();
        bound = bound.max(own);
    }
    bound.max(1)
}

/// `mld_toric` against `mld_via_jets` at the translated bound.
pub fn suite_mld_consistency(cases: &[MultiIdeal]) -> SuiteReport {
    let records: Vec<(CaseRecord, bool, bool)> = cases
        .par_iter()
        .enumerate()
        .map(|(k, pair)| {
            let toric = mld_toric(pair);
            let bound = translated_mld_bound(pair, &toric);
            let jets = mld_via_jets_uncertified(pair, bound).expect("bound >= 1");
            let jets = certify_against(jets, &toric);
            let n = Rational::from_integer(BigInt::from(pair.dim()));
            let within_n = toric.value.finite().is_none_or(|v| *v <= n);
            let status = if toric.value == jets.value {
                if within_n {
                    CaseStatus::Pass
                } else {
                    CaseStatus::Fail
                }
            } else if toric.is_certified() && jets.is_certified() {
                CaseStatus::Fail
            } else {
                CaseStatus::Inconclusive
            };
            let mut record = CaseRecord::new(
                format!("mld-{k:03}"),
                one_line(pair),
                toric.to_string(),
                format!("{jets} bound={bound}"),
                status,
            );
            if !within_n {
                record = record.with_note("finite mld exceeds N");
            }
            let finite = matches!(toric.value, InvariantValue::Finite(_));
            (record, finite, finite && toric.is_certified())
        })
        .collect();
    let finite = records.iter().filter(|r| r.1).count();
    let certified = records.iter().filter(|r| r.2).count();
    let minus_inf = records.len() - finite;
    let mut report = SuiteReport::new("mld", 0, records.into_iter().map(|r| r.0).collect());
    report.notes.push(format!("finite cases: {finite}, certified: {certified}"));
    report.notes.push(format!("-inf cases: {minus_inf}"));
    report
}

/// Sweep bound for `z_m`: `4·den(lct)`, raised when needed to reach
/// `m = c - 1` for an lct-computing facet `⟨w,q⟩ >= c`.
pub fn lct_sweep_bound(a: &MonomialIdeal) -> u64 {
    let den = lct_howald(a).denom().to_u64().expect("small denominator");
    (4 * den).max(lct_attaining_order(a)).max(1)
}

/// `lct_howald` against the `z_m` sweep.
pub fn suite_lct_consistency(cases: &[MonomialIdeal]) -> SuiteReport {
    let records: Vec<CaseRecord> = cases
        .par_iter()
        .enumerate()
        .map(|(k, a)| {
            let lct = lct_howald(a);
            let facets = lct_computing_facets(&NewtonPolyhedron::new(a.clone()));
            let bound = lct_sweep_bound(a);
            let jets = lct_via_jets(a, bound).expect("bound >= 1");
            let attained_at_facet = facets.iter().find(|f| z_m(a, f.offset - 1) == lct);
            let agree = jets.value == InvariantValue::Finite(lct.clone());
            let status = match (agree, attained_at_facet) {
                (true, Some(_)) => CaseStatus::Pass,
                (false, _) if !jets.is_certified() => CaseStatus::Inconclusive,
                _ => CaseStatus::Fail,
            };
            let facet_text = match attained_at_facet {
                Some(f) => format!("m+1={} at w={}", f.offset, f.normal),
                None => "no facet attains".into(),
            };
            CaseRecord::new(
                format!("lct-{k:03}"),
                ideal_line(a),
                format!("{lct}, facet w={}", facets[0].normal),
                format!("{jets} bound={bound} {facet_text}"),
                status,
            )
        })
        .collect();
    SuiteReport::new("lct", 0, records)
}

fn random_fp_polynomial(rng: &mut ChaCha8Rng, p: u64, dim: usize) -> SparsePolynomial {
    loop {
        let count = rng.gen_range(1..=4);
        let terms: Vec<(ExponentVector, Rational)> = (0..count)
            .map(|_| {
                let u: Vec<u32> = (0..dim).map(|_| rng.gen_range(0..=4)).collect();
                let c = rng.gen_range(1..p) as i64;
                (ExponentVector::new(u).expect("dim >= 1"), Rational::from_integer(c.into()))
            })
            .collect();
        let f = SparsePolynomial::from_terms(Ring::PrimeField(p), dim, terms).expect("valid coefficients");
        if !f.is_zero() {
            return f;
        }
    }
}

fn random_weight(rng: &mut ChaCha8Rng, dim: usize) -> WeightVector {
    loop {
        let w: Vec<u64> = (0..dim).map(|_| rng.gen_range(0..=4)).collect();
        if let Ok(w) = WeightVector::new(w) {
            return w;
        }
    }
}

/// Non-canonical lifting: coefficients shifted by multiples of `p`, plus
/// `p`-divisible terms of weight below `val_w(f)`.
fn adversarial_lifting(rng: &mut ChaCha8Rng, f: &SparsePolynomial, w: &WeightVector, d: u64, p: u64) -> SparsePolynomial {
    let dim = f.dim();
    let pi = p as i64;
    let mut terms: Vec<(ExponentVector, Rational)> = lift_prime_field(f)
        .expect("prime field")
        .terms()
        .map(|(u, c)| (u.clone(), c + Rational::from_integer((pi * rng.gen_range(-3..=3i64)).into())))
        .collect();
    if d > 0 {
        for _ in 0..rng.gen_range(1..=3) {
            // Random monomial of weight < d.
            let mut u = vec![0u32; dim];
            for _ in 0..8 {
                let j = rng.gen_range(0..dim);
                u[j] += 1;
                if ExponentVector::new(u.clone()).expect("dim >= 1").dot(w.entries()) >= d {
                    u[j] -= 1;
                    break;
                }
            }
            let k = rng.gen_range(1..=5i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
            terms.push((ExponentVector::new(u).expect("dim >= 1"), Rational::from_integer((pi * k).into())));
        }
    }
    SparsePolynomial::from_terms(Ring::Integers, dim, terms).expect("integer coefficients")
}

fn valuation_text(v: Valuation) -> String {
    match v {
        Valuation::Finite(x) => x.to_string(),
        Valuation::Infinity => "inf".into(),
    }
}

fn lift_case(id: String, rng: &mut ChaCha8Rng, p: u64) -> CaseRecord {
    let dim = rng.gen_range(2..=3);
    let f = random_fp_polynomial(rng, p, dim);
    let w = random_weight(rng, dim);
    let inputs = format!("p={p} w={w} f={f}");
    let record = &lift_ideal_valuation_preserving(std::slice::from_ref(&f), &w).expect("nonzero generator")[0];
    let ok = record.verify().expect("same ring data");
    let before = val_w_polynomial(&w, &f).expect("same dim");
    let after = val_w_polynomial(&w, &record.lifted).expect("same dim");
    CaseRecord::new(
        id,
        inputs,
        format!("val={}", valuation_text(before)),
        format!("val={} lifted={}", valuation_text(after), record.lifted),
        if ok { CaseStatus::Pass } else { CaseStatus::Fail },
    )
}

fn adversarial_case(id: String, f: &SparsePolynomial, big_f: &SparsePolynomial, w: &WeightVector, p: u64) -> CaseRecord {
    let d = val_w_polynomial(w, f).expect("same dim").finite().expect("nonzero");
    let inputs = format!("p={p} w={w} f={f} F={big_f}");
    let before = val_w_polynomial(w, big_f).expect("same dim");
    let (text, ok) = match truncate_lifting(big_f, w, d, p) {
        Ok(t) => {
            let after = val_w_polynomial(w, &t).expect("same dim");
            let restores = after == Valuation::Finite(d) && reduce_mod_p(&t, p).as_ref() == Ok(f);
            (format!("val={} truncated={t}", valuation_text(after)), restores)
        }
        Err(e) => (format!("error: {e}"), false),
    };
    CaseRecord::new(
        id,
        inputs,
        format!("d={d} val(F)={}", valuation_text(before)),
        text,
        if ok { CaseStatus::Pass } else { CaseStatus::Fail },
    )
}

/// Lifts a monomial pair through `GF(p) → ℤ → GF(p)` and rebuilds it from the supports.
fn lift_reduce_pair(pair: &MultiIdeal, p: u64) -> MultiIdeal {
    let factors = pair
        .factors()
        .iter()
        .map(|(a, e)| {
            let gens = SparsePolynomial::generators_of(a, Ring::PrimeField(p))
                .iter()
                .map(|g| {
                    let back = reduce_mod_p(&lift_prime_field(g).expect("prime field"), p).expect("prime");
                    let u = back.support().next().expect("monomial").clone();
                    u
                })
                .collect();
            (MonomialIdeal::new(gens).expect("nonempty"), e.clone())
        })
        .collect();
    MultiIdeal::new(factors).expect("valid factors")
}

fn pair_invariants(pair: &MultiIdeal) -> String {
    let lcts: Vec<String> = pair.factors().iter().map(|(a, _)| lct_howald(a).to_string()).collect();
    let heights: Vec<String> = pair.factors().iter().map(|(a, _)| height_monomial(a).to_string()).collect();
    format!("lct={} mld={} ht={}", lcts.join(","), mld_toric(pair).value, heights.join(","))
}

fn monomial_case(id: String, pair: &MultiIdeal, p: u64) -> CaseRecord {
    let lifted = lift_reduce_pair(pair, p);
    let a = pair_invariants(pair);
    let b = pair_invariants(&lifted);
    let status = if a == b && &lifted == pair {
        CaseStatus::Pass
    } else {
        CaseStatus::Fail
    };
    CaseRecord::new(id, format!("p={p} {}", one_line(pair)), a, b, status)
}

/// Randomized liftings (canonical and adversarial) and monomial lift-reduce
/// invariance of lct, mld and height.
pub fn suite_lifting_descent(primes: &[u64], trials: u64, seed: u64) -> Result<SuiteReport> {
    if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::NotPrime(p));
    }
    // (prime, trial); each gets its own ChaCha stream so cases are independent of scheduling.
    let jobs: Vec<(u64, u64)> = primes.iter().flat_map(|&p| (0..trials).map(move |t| (p, t))).collect();
    let mut records: Vec<CaseRecord> = jobs
        .par_iter()
        .flat_map_iter(|&(p, t)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(p << 32 | t);
            let lift = lift_case(format!("lift-p{p}-{t:03}"), &mut rng, p);

            let dim = rng.gen_range(2..=3);
            let f = random_fp_polynomial(&mut rng, p, dim);
            let w = random_weight(&mut rng, dim);
            let d = val_w_polynomial(&w, &f).expect("same dim").finite().expect("nonzero");
            let big_f = adversarial_lifting(&mut rng, &f, &w, d, p);
            let adversarial = adversarial_case(format!("adversarial-p{p}-{t:03}"), &f, &big_f, &w, p);

            let dim = rng.gen_range(2..=3);
            let factors = rng.gen_range(1..=2);
            let pair = MultiIdeal::new(
                (0..factors)
                    .map(|_| (random_ideal(&mut rng, dim), random_exponent(&mut rng)))
                    .collect(),
            )
            .expect("valid factors");
            let monomial = monomial_case(format!("monomial-p{p}-{t:03}"), &pair, p);
            [lift, adversarial, monomial]
        })
        .collect();

    for &p in primes {
        let f = SparsePolynomial::from_int_terms(Ring::PrimeField(p), &[(1, &[0, 1])]).expect("valid");
        let big_f = SparsePolynomial::from_int_terms(Ring::Integers, &[(p as i64, &[1, 0]), (1, &[0, 1])]).expect("valid");
        let w = WeightVector::new(vec![1, 2]).expect("nonzero");
        records.push(adversarial_case(format!("fixed-adversarial-p{p}"), &f, &big_f, &w, p));
        let triangle = MonomialIdeal::from_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).expect("valid");
        let pair = MultiIdeal::single(triangle, Rational::one()).expect("valid");
        let mut rec = monomial_case(format!("fixed-height-p{p}"), &pair, p);
        if !rec.route_a.ends_with("ht=2") {
            rec.status = CaseStatus::Fail;
            rec = rec.with_note("height of (xy, yz, zx) should be 2");
        }
        records.push(rec);
    }
    Ok(SuiteReport::new("lifting", seed, records))
}

const JET_MAX_ORDER: u64 = 6;

fn slots_fingerprint(slots: &[JetPolynomial]) -> String {
    let mut h = Sha256::new();
    let mut zeros = Vec::new();
    for (q, s) in slots.iter().enumerate() {
        h.update(s.to_string().as_bytes());
        h.update(b"\n");
        if s.is_zero() {
            zeros.push(q.to_string());
        }
    }
    let digest = h.finalize();
    let mut hex = String::new();
    for b in digest.iter().take(6) {
        let _ = write!(hex, "{b:02x}");
    }
    format!("slots={} zero=[{}] h={hex}", slots.len(), zeros.join(","))
}

/// Jet-then-reduce against reduce-then-jet over the fixed polynomial corpus,
/// for every order `m <= 6`.
pub fn suite_jets_modp(primes: &[u64]) -> Result<SuiteReport> {
    if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::NotPrime(p));
    }
    let corpus = jet_corpus();
    let jobs: Vec<(u64, usize, u64)> = primes
        .iter()
        .flat_map(|&p| (0..corpus.len()).flat_map(move |k| (0..=JET_MAX_ORDER).map(move |m| (p, k, m))))
        .collect();
    let records = jobs
        .par_iter()
        .map(|&(p, k, m)| {
            let f = &corpus[k];
            let id = format!("jets-p{p}-f{k:02}-m{m}");
            let inputs = format!("p={p} m={m} f={f}");
            let over_z = jet_equations(f, m).expect("nonzero polynomial");
            match reduce_jets_mod_p(&over_z, p) {
                Err(Error::DegenerateLift { .. }) => CaseRecord::new(id, inputs, "degenerate".into(), "degenerate".into(), CaseStatus::Skipped)
                    .with_note("polynomial vanishes mod p"),
                Err(e) => CaseRecord::new(id, inputs, format!("error: {e}"), String::new(), CaseStatus::Fail),
                Ok(reduced) => {
                    let fp = reduce_mod_p(f, p).expect("prime");
                    let direct = jet_equations(&fp, m).expect("nonzero after reduction");
                    let status = if reduced.slots == direct.slots {
                        CaseStatus::Pass
                    } else {
                        CaseStatus::Fail
                    };
                    CaseRecord::new(id, inputs, slots_fingerprint(&reduced.slots), slots_fingerprint(&direct.slots), status)
                }
            }
        })
        .collect();
    Ok(SuiteReport::new("jets", 0, records))
}
