use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use toric_jets::ideal::{contains, minimalize, ExponentVector, MonomialIdeal, MultiIdeal};
use toric_jets::invariants::{
    contact_codim, height_monomial, md_lct_toric, mld_toric, mld_via_jets, s_m, JetOrderVector, InvariantValue,
};
use toric_jets::jets::{jet_equations, jet_system, reduce_jets_mod_p, JetVariable};
use toric_jets::lifting::{lift_prime_field, reduce_mod_p, truncate_lifting};
use toric_jets::poly::{Ring, SparsePolynomial};
use toric_jets::polyhedra::{lct_howald, lct_via_lp, membership, membership_lp, val_w_ideal, val_w_polynomial, NewtonPolyhedron, WeightVector};
use toric_jets::problem::ProblemFile;
use toric_jets::rational::Rational;
use toric_jets::toric::{log_discrepancy, lct_ratio, LctRatio};

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

fn exponent_rows(dim: usize, max: u32) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..=max, dim), 1..5)
        .prop_filter("some nonzero row", |rows| rows.iter().any(|r| r.iter().any(|&x| x > 0)))
}

fn to_ideal(rows: &[Vec<u32>]) -> MonomialIdeal {
    let gens = rows
        .iter()
        .filter(|r| r.iter().any(|&x| x > 0))
        .map(|r| ExponentVector::new(r.clone()).unwrap())
        .collect();
    minimalize(gens).unwrap()
}

fn ideal(dim: usize) -> impl Strategy<Value = MonomialIdeal> {
    exponent_rows(dim, 4).prop_map(|rows| to_ideal(&rows))
}

fn any_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3).prop_flat_map(ideal)
}

fn exponent() -> impl Strategy<Value = Rational> {
    (1i64..=4).prop_flat_map(|b| (1..=2 * b).prop_map(move |a| Rational::new(a.into(), b.into())))
}

fn pair() -> impl Strategy<Value = MultiIdeal> {
    (1usize..=3, 1usize..=2).prop_flat_map(|(dim, s)| {
        prop::collection::vec((ideal(dim), exponent()), s).prop_map(|f| MultiIdeal::new(f).unwrap())
    })
}

fn weight(dim: usize, lo: u64, hi: u64) -> impl Strategy<Value = WeightVector> {
    prop::collection::vec(lo..=hi, dim)
        .prop_filter("nonzero", |w| w.iter().any(|&x| x > 0))
        .prop_map(|w| WeightVector::new(w).unwrap())
}

fn int(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Every monomial in `[0, bound]^n`.
fn box_monomials(n: usize, bound: u32) -> Vec<ExponentVector> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=bound).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(|v| ExponentVector::new(v).unwrap()).collect()
}

proptest! {
    #![proptest_config(cfg(96))]

    #[test]
    fn minimalize_is_idempotent_and_keeps_the_ideal(rows in (1usize..=3).prop_flat_map(|d| exponent_rows(d, 4))) {
        let a = to_ideal(&rows);
        let again = minimalize(a.generators().to_vec()).unwrap();
        prop_assert_eq!(&again, &a);
        for r in rows.iter().filter(|r| r.iter().any(|&x| x > 0)) {
            prop_assert!(a.contains_monomial(&ExponentVector::new(r.clone()).unwrap()));
        }
        for (i, u) in a.generators().iter().enumerate() {
            for (j, v) in a.generators().iter().enumerate() {
                prop_assert!(i == j || !u.divides(v));
            }
        }
    }

    #[test]
    fn containment_matches_monomial_membership((a, b) in (1usize..=3).prop_flat_map(|d| (ideal(d), ideal(d)))) {
        // Inside [0,8]^N every generator lies, so membership there decides containment.
        let brute = box_monomials(a.dim(), 8)
            .iter()
            .all(|u| !b.contains_monomial(u) || a.generators().iter().any(|g| g.divides(u)));
        prop_assert_eq!(contains(&a, &b).unwrap(), brute);
    }

    #[test]
    fn rational_field_axioms(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20) {
        let x = Rational::new(a.into(), b.into());
        let y = Rational::new(c.into(), d.into());
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * (&y + Rational::one()), &x * &y + &x);
        prop_assert_eq!(&x - &x, Rational::zero());
        if !y.is_zero() {
            prop_assert_eq!(&x / &y * &y, x.clone());
        }
        prop_assert!(x.denom() > &BigInt::zero());
    }

    #[test]
    fn valuation_is_homogeneous_and_additive(
        (a, b, w) in (1usize..=3).prop_flat_map(|d| (ideal(d), ideal(d), weight(d, 0, 5))),
        t in 1u64..5,
    ) {
        let v = val_w_ideal(&w, &a).unwrap();
        prop_assert_eq!(val_w_ideal(&w.scale(t), &a).unwrap(), t * v);
        let ab = a.product(&b).unwrap();
        prop_assert_eq!(val_w_ideal(&w, &ab).unwrap(), v + val_w_ideal(&w, &b).unwrap());
        let f = SparsePolynomial::generators_of(&a, Ring::Rationals)
            .into_iter()
            .fold(SparsePolynomial::zero(Ring::Rationals, a.dim()), |acc, g| acc.add(&g).unwrap());
        prop_assert_eq!(val_w_polynomial(&w, &f).unwrap().finite(), Some(v));
    }

    #[test]
    fn lct_routes_agree_and_bound_every_divisor((a, ws) in (1usize..=3).prop_flat_map(|d| (ideal(d), prop::collection::vec(weight(d, 0, 6), 10)))) {
        let lct = lct_howald(&a);
        prop_assert!(lct > Rational::zero());
        prop_assert!(lct <= int(a.dim() as u64));
        prop_assert_eq!(&lct, &lct_via_lp(&a));
        for w in ws {
            if let LctRatio::Value(r) = lct_ratio(&w, &a).unwrap() {
                prop_assert!(lct <= r);
            }
        }
    }

    #[test]
    fn membership_routes_agree((a, q) in (1usize..=3).prop_flat_map(|d| (ideal(d), prop::collection::vec((0i64..12, 1i64..4), d)))) {
        let q: Vec<Rational> = q.into_iter().map(|(n, d)| Rational::new(n.into(), d.into())).collect();
        let p = NewtonPolyhedron::new(a);
        prop_assert_eq!(membership(&q, &p).unwrap(), membership_lp(&q, &p).unwrap());
    }

    #[test]
    fn log_discrepancy_is_homogeneous((pair, w) in pair().prop_flat_map(|p| { let d = p.dim(); (Just(p), weight(d, 1, 6)) }), t in 1u64..6) {
        let a = log_discrepancy(&w, &pair).unwrap();
        prop_assert_eq!(log_discrepancy(&w.scale(t), &pair).unwrap(), a * int(t));
    }

    #[test]
    fn lct_ratio_is_scale_invariant((a, w) in (1usize..=3).prop_flat_map(|d| (ideal(d), weight(d, 0, 6))), t in 1u64..6) {
        prop_assert_eq!(lct_ratio(&w, &a).unwrap(), lct_ratio(&w.scale(t), &a).unwrap());
    }

    #[test]
    fn s_m_is_bounded_by_any_divisor_reaching_m(
        (pair, w, fracs) in pair().prop_flat_map(|p| {
            let (d, s) = (p.dim(), p.len());
            (Just(p), weight(d, 1, 5), prop::collection::vec(0u64..=100, s))
        })
    ) {
        let vals: Vec<u64> = pair.factors().iter().map(|(a, _)| val_w_ideal(&w, a).unwrap()).collect();
        let m: Vec<u64> = vals.iter().zip(&fracs).map(|(v, f)| v * f / 100).collect();
        let bound = log_discrepancy(&w, &pair).unwrap()
            + pair.factors().iter().zip(&vals).zip(&m).map(|(((_, e), &v), &mi)| e * int(v - mi)).sum::<Rational>();
        let s = s_m(&pair, &JetOrderVector::new(m)).unwrap();
        prop_assert!(s <= bound, "s_m = {} > {}", s, bound);
    }

    #[test]
    fn contact_codim_monotone_and_fiber_dominates(
        (pair, m, j) in pair().prop_flat_map(|p| {
            let s = p.len();
            (Just(p), prop::collection::vec(0u64..5, s), 0..s)
        })
    ) {
        let jo = JetOrderVector::new(m.clone());
        let fiber = contact_codim(&pair, &jo, true).unwrap().codim;
        let global = contact_codim(&pair, &jo, false).unwrap().codim;
        prop_assert!(fiber >= global);
        let mut bigger = m.clone();
        bigger[j] += 1;
        let jb = JetOrderVector::new(bigger);
        prop_assert!(contact_codim(&pair, &jb, true).unwrap().codim >= fiber);
        prop_assert!(contact_codim(&pair, &jb, false).unwrap().codim >= global);
    }

    #[test]
    fn md_cap_is_monotone(a in (2usize..=3).prop_flat_map(ideal), cap in 1u64..6) {
        let small = md_lct_toric(&a, cap).unwrap().k_min();
        let large = md_lct_toric(&a, cap + 3).unwrap().k_min();
        if let Some(s) = small {
            prop_assert_eq!(large, Some(s));
        }
    }

    #[test]
    fn height_is_a_minimum_cover(a in any_ideal(), p in prop::sample::select(vec![2u64, 3, 5, 7, 13])) {
        let n = a.dim();
        let supports: Vec<BTreeSet<usize>> = a
            .generators()
            .iter()
            .map(|u| u.entries().iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, _)| i).collect())
            .collect();
        let oracle = (0u32..1 << n)
            .filter(|s| supports.iter().all(|sup| sup.iter().any(|&i| s >> i & 1 == 1)))
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap();
        prop_assert_eq!(height_monomial(&a), oracle);
        let back: Vec<ExponentVector> = SparsePolynomial::generators_of(&a, Ring::PrimeField(p))
            .iter()
            .map(|g| reduce_mod_p(&lift_prime_field(g).unwrap(), p).unwrap().support().next().unwrap().clone())
            .collect();
        prop_assert_eq!(height_monomial(&MonomialIdeal::new(back).unwrap()), oracle);
    }

    #[test]
    fn problem_files_round_trip(pair in pair()) {
        let text = ProblemFile::from_multi_ideal(&pair).to_canonical();
        let parsed = ProblemFile::parse(&text).unwrap();
        prop_assert_eq!(parsed.to_canonical(), text);
        prop_assert_eq!(parsed.multi_ideal().unwrap(), pair);
    }
}

proptest! {
    #![proptest_config(cfg(40))]

    #[test]
    fn mld_routes_agree_and_stay_below_n(pair in pair()) {
        let toric = mld_toric(&pair);
        if let InvariantValue::Finite(v) = &toric.value {
            prop_assert!(*v <= int(pair.dim() as u64));
        }
        let jets = mld_via_jets(&pair, 14).unwrap();
        if toric.is_certified() && jets.is_certified() {
            prop_assert_eq!(&toric.value, &jets.value);
        }
        // The jet sweep is an upper estimate of the true value.
        if let (InvariantValue::Finite(t), InvariantValue::Finite(j)) = (&toric.value, &jets.value) {
            prop_assert!(toric.is_certified() || j >= t || !jets.is_certified());
            prop_assert!(j >= t || !toric.is_certified());
        }
        if jets.value.is_minus_infinity() {
            prop_assert!(toric.value.is_minus_infinity());
        }
    }
}

fn int_poly(dim: usize) -> impl Strategy<Value = SparsePolynomial> {
    prop::collection::vec((-20i64..=20, prop::collection::vec(0u32..=2, dim)), 1..4).prop_filter_map("nonzero", move |terms| {
        let terms: Vec<(ExponentVector, Rational)> = terms
            .into_iter()
            .map(|(c, u)| (ExponentVector::new(u).unwrap(), Rational::from_integer(c.into())))
            .collect();
        let f = SparsePolynomial::from_terms(Ring::Integers, dim, terms).unwrap();
        (!f.is_zero()).then_some(f)
    })
}

/// Coefficients of `f(Σ_q x_{ℓ,q} t^q)` up to `t^m`, by direct series arithmetic.
fn substituted_series(f: &SparsePolynomial, values: &[Vec<i64>], m: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); m + 1];
    for (u, c) in f.terms() {
        let mut series = vec![BigInt::zero(); m + 1];
        series[0] = c.to_integer();
        for (l, &e) in u.entries().iter().enumerate() {
            for _ in 0..e {
                let mut next = vec![BigInt::zero(); m + 1];
                for i in 0..=m {
                    for j in 0..=m - i {
                        next[i + j] += &series[i] * values[l][j];
                    }
                }
                series = next;
            }
        }
        for (o, s) in out.iter_mut().zip(series) {
            *o += s;
        }
    }
    out
}

proptest! {
    #![proptest_config(cfg(48))]

    #[test]
    fn jet_slots_match_substitution(
        (f, values) in (1usize..=3).prop_flat_map(|d| (int_poly(d), prop::collection::vec(prop::collection::vec(-3i64..=3, 5), d))),
        m in 0usize..5,
    ) {
        let jets = jet_equations(&f, m as u64).unwrap();
        let expected = substituted_series(&f, &values, m);
        for (j, slot) in jets.slots.iter().enumerate() {
            let got = slot.evaluate(|v: JetVariable| BigInt::from(values[v.base - 1][v.order as usize]));
            prop_assert_eq!(got, Rational::from_integer(expected[j].clone()));
            // Weighted homogeneity: X^{(q)} has weight q and F^{(j)} has weight j.
            for (mono, _) in slot.terms() {
                prop_assert_eq!(mono.weight(), j as u64);
            }
        }
    }

    #[test]
    fn jets_commute_with_reduction(f in (1usize..=3).prop_flat_map(int_poly), m in 0u64..5, p in prop::sample::select(vec![2u64, 3, 5, 7, 13])) {
        let jets = jet_equations(&f, m).unwrap();
        let fp = reduce_mod_p(&f, p).unwrap();
        match reduce_jets_mod_p(&jets, p) {
            Ok(reduced) => prop_assert_eq!(reduced.slots, jet_equations(&fp, m).unwrap().slots),
            Err(_) => prop_assert!(fp.is_zero()),
        }
    }

    #[test]
    fn jet_system_size((pair, m) in pair().prop_flat_map(|p| { let s = p.len(); (Just(p), prop::collection::vec(0u64..4, s)) })) {
        let polys: Vec<Vec<SparsePolynomial>> = pair
            .factors()
            .iter()
            .map(|(a, _)| SparsePolynomial::generators_of(a, Ring::Integers))
            .collect();
        let system = jet_system(&polys, &m).unwrap();
        let expected: u64 = polys.iter().zip(&m).map(|(g, &mi)| g.len() as u64 * mi).sum::<u64>() + pair.dim() as u64;
        prop_assert_eq!(system.len() as u64, expected);
    }

    #[test]
    fn lifting_round_trip_and_truncation(
        (terms, w, noise) in (2usize..=3).prop_flat_map(|d| (
            prop::collection::vec((1i64..100, prop::collection::vec(0u32..=4, d)), 1..4),
            weight(d, 0, 4),
            prop::collection::vec((-3i64..=3, prop::collection::vec(0u32..=2, d)), 0..3),
        )),
        p in prop::sample::select(vec![2u64, 3, 5, 7, 13]),
    ) {
        let dim = w.dim();
        let f = SparsePolynomial::from_terms(
            Ring::PrimeField(p),
            dim,
            terms.iter().map(|(c, u)| (ExponentVector::new(u.clone()).unwrap(), Rational::from_integer((*c).into()))),
        ).unwrap();
        let lifted = lift_prime_field(&f).unwrap();
        prop_assert_eq!(&reduce_mod_p(&lifted, p).unwrap(), &f);
        if let Some(d) = val_w_polynomial(&w, &f).unwrap().finite() {
            // Add p-divisible terms, some of them below weight d.
            let extra = SparsePolynomial::from_terms(
                Ring::Integers,
                dim,
                noise.iter().map(|(k, u)| (ExponentVector::new(u.clone()).unwrap(), Rational::from_integer((k * p as i64).into()))),
            ).unwrap();
            let big = lifted.add(&extra).unwrap();
            let t = truncate_lifting(&big, &w, d, p).unwrap();
            prop_assert_eq!(val_w_polynomial(&w, &t).unwrap().finite(), Some(d));
            prop_assert_eq!(&reduce_mod_p(&t, p).unwrap(), &f);
        }
    }
}
