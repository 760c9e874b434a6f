//! Fixed test corpora: hand-picked pairs plus seeded random ones.
//!
//! Random monomial ideals: generator count uniform in `[1, 5]`, exponent
//! vectors uniform in `[0, 4]^N` minus the zero vector, then minimalized.
//! Random exponents are `a/b` with `b` uniform in `[1, 4]` and `a` uniform in
//! `[1, b]`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ideal::{minimalize, power_of_maximal_ideal, ExponentVector, MonomialIdeal, MultiIdeal};
use crate::poly::{Ring, SparsePolynomial};
use crate::rational::{int, rat, Rational};

pub const CORPUS_SEED: u64 = 1729;

pub fn random_ideal(rng: &mut impl Rng, dim: usize) -> MonomialIdeal {
    let count = rng.gen_range(1..=5);
    let gens = (0..count)
        .map(|_| loop {
            let u: Vec<u32> = (0..dim).map(|_| rng.gen_range(0..=4)).collect();
            if u.iter().any(|&x| x > 0) {
                break ExponentVector::new(u).expect("dim >= 1");
            }
        })
        .collect();
    minimalize(gens).expect("nonzero generators")
}

pub fn random_exponent(rng: &mut impl Rng) -> Rational {
    let b = rng.gen_range(1..=4i64);
    let a = rng.gen_range(1..=b);
    rat(a, b)
}

fn ideal(rows: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_rows(rows).expect("valid rows")
}

fn single(rows: &[&[u32]], e: Rational) -> MultiIdeal {
    MultiIdeal::single(ideal(rows), e).expect("positive exponent")
}

fn hand_picked() -> Vec<MultiIdeal> {
    let max = |n, mu| power_of_maximal_ideal(n, mu).expect("valid power");
    vec![
        MultiIdeal::single(max(2, 1), int(1)).unwrap(),
        single(&[&[1, 0]], int(3)),
        single(&[&[2, 0], &[0, 3]], rat(1, 2)),
        single(&[&[2, 0], &[0, 2]], rat(1, 2)),
        single(&[&[1, 0], &[0, 3]], int(1)),
        MultiIdeal::single(max(2, 2), int(1)).unwrap(),
        MultiIdeal::single(max(3, 1), rat(3, 2)).unwrap(),
        MultiIdeal::single(max(3, 2), rat(3, 4)).unwrap(),
        single(&[&[1, 1]], rat(1, 2)),
        single(&[&[2]], rat(1, 2)),
        single(&[&[1]], int(2)),
        single(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]], rat(3, 4)),
        single(&[&[2, 1], &[1, 3]], rat(2, 3)),
        MultiIdeal::new(vec![(ideal(&[&[1, 0]]), rat(1, 2)), (ideal(&[&[0, 1]]), rat(1, 3))]).unwrap(),
        MultiIdeal::new(vec![(max(2, 1), rat(1, 2)), (ideal(&[&[1, 1]]), rat(1, 4))]).unwrap(),
        MultiIdeal::new(vec![(ideal(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]), rat(1, 2)), (ideal(&[&[1, 1, 1]]), rat(1, 3))])
            .unwrap(),
    ]
}

/// Multiideals with `N <= 3`, at most two factors and exponent denominators at most 4.
pub fn mld_corpus() -> Vec<MultiIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let mut out = hand_picked();
    for k in 0..24 {
        let dim = [2, 3, 2, 1, 3, 2][k % 6];
        let factors = 1 + (k % 2);
        let pair = MultiIdeal::new(
            (0..factors)
                .map(|_| (random_ideal(&mut rng, dim), random_exponent(&mut rng)))
                .collect(),
        )
        .expect("valid factors");
        if !out.contains(&pair) {
            out.push(pair);
        }
    }
    out
}

/// The ideals of [`mld_corpus`] plus the maximal-ideal powers and the `(x, y^i)` family.
pub fn lct_corpus() -> Vec<MonomialIdeal> {
    let mut out: Vec<MonomialIdeal> = Vec::new();
    let mut push = |a: MonomialIdeal| {
        if !out.contains(&a) {
            out.push(a);
        }
    };
    for n in 2..=3 {
        for mu in 1..=4 {
            push(power_of_maximal_ideal(n, mu).expect("valid power"));
        }
    }
    for i in 1..=10 {
        push(ideal(&[&[1, 0], &[0, i]]));
    }
    push(ideal(&[&[2, 1], &[1, 3]]));
    for pair in mld_corpus() {
        for (a, _) in pair.factors() {
            push(a.clone());
        }
    }
    out
}

/// Integer polynomials in at most three variables of degree at most 4.
pub fn jet_corpus() -> Vec<SparsePolynomial> {
    let zz = |terms: &[(i64, &[u32])]| SparsePolynomial::from_int_terms(Ring::Integers, terms).expect("valid terms");
    let mut out = vec![
        zz(&[(1, &[2])]),
        zz(&[(1, &[3, 0]), (3, &[1, 1])]),
        zz(&[(1, &[1, 1])]),
        zz(&[(3, &[1, 1])]),
        zz(&[(1, &[2, 0]), (2, &[0, 1])]),
        zz(&[(1, &[2, 0]), (-1, &[0, 3])]),
        zz(&[(5, &[4, 0]), (7, &[1, 2]), (-2, &[0, 1])]),
        zz(&[(1, &[1, 1, 1]), (13, &[2, 0, 0])]),
        zz(&[(6, &[1, 1, 0]), (10, &[0, 2, 1]), (15, &[0, 0, 3])]),
        zz(&[(1, &[0, 0, 4]), (1, &[1, 1, 2]), (-4, &[2, 0, 0]), (1, &[0, 0, 0])]),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED + 1);
    for k in 0..14 {
        let dim = 1 + k % 3;
        let count = rng.gen_range(1..=4);
        let terms: Vec<(i64, Vec<u32>)> = (0..count)
            .map(|_| {
                let degree = rng.gen_range(0..=4u32);
                let mut u = vec![0u32; dim];
                for _ in 0..degree {
                    u[rng.gen_range(0..dim)] += 1;
                }
                let c = rng.gen_range(-30..=30i64);
                (if c == 0 { 1 } else { c }, u)
            })
            .collect();
        let refs: Vec<(i64, &[u32])> = terms.iter().map(|(c, u)| (*c, u.as_slice())).collect();
        let f = zz(&refs);
        if !f.is_zero() && !out.contains(&f) {
            out.push(f);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpora_meet_their_shape() {
        let mld = mld_corpus();
        assert!(mld.len() >= 30);
        for p in &mld {
            assert!(p.dim() <= 3 && p.len() <= 2);
            assert!(p.exponents().iter().all(|e| *e.denom() <= 4.into()));
        }
        assert_eq!(mld, mld_corpus());
        for f in jet_corpus() {
            assert!(f.dim() <= 3 && f.total_degree().unwrap() <= 4);
        }
        assert!(lct_corpus().len() > mld.len());
    }
}
