//! Newton polyhedra of monomial ideals and monomial valuations.

pub mod dd;
pub mod lp;

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideal::{check_dim, write_tuple, MonomialIdeal};
use crate::poly::SparsePolynomial;
use crate::rational::Rational;
use lp::{LinearProgram, LpOutcome, Relation};

/// Weight vector `w ∈ ℤ_{≥0}^N \ {0}` of a toric divisor `E_w`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if entries.iter().all(|&w| w == 0) {
            return Err(Error::ZeroWeight);
        }
        Ok(Self(entries))
    }

    pub fn ones(dim: usize) -> Self {
        Self(vec![1; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// `⟨w, 1⟩`.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// The center of `E_w` is the origin iff every weight is positive.
    pub fn center_is_origin(&self) -> bool {
        self.0.iter().all(|&w| w >= 1)
    }

    pub fn scale(&self, factor: u64) -> Self {
        Self(self.0.iter().map(|w| w * factor).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Valuation of a polynomial; the zero polynomial has valuation `+∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u64),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }
}

/// `val_w(f) = min {⟨w,u⟩ : X^u ∈ f}`.
pub fn val_w_polynomial(w: &WeightVector, f: &SparsePolynomial) -> Result<Valuation> {
    check_dim(w.dim(), f.dim())?;
    Ok(f.support()
        .map(|u| u.dot(w.entries()))
        .min()
        .map_or(Valuation::Infinity, Valuation::Finite))
}

/// `val_w(a)`, the minimum over the generators.
pub fn val_w_ideal(w: &WeightVector, a: &MonomialIdeal) -> Result<u64> {
    check_dim(w.dim(), a.dim())?;
    Ok(val_unchecked(w.entries(), a))
}

pub(crate) fn val_unchecked(w: &[u64], a: &MonomialIdeal) -> u64 {
    a.generators().iter().map(|u| u.dot(w)).min().expect("nonempty ideal")
}

/// One non-coordinate facet `⟨normal, q⟩ >= offset` of a Newton polyhedron.
/// Normals are primitive; the offset equals `val_normal(a) > 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Facet {
    pub normal: WeightVector,
    pub offset: u64,
}

/// `Newt(a) = conv(generators) + ℝ_{≥0}^N`. Facets are computed on first use.
#[derive(Debug)]
pub struct NewtonPolyhedron {
    ideal: MonomialIdeal,
    facets: OnceLock<Vec<Facet>>,
}

impl Clone for NewtonPolyhedron {
    fn clone(&self) -> Self {
        let facets = OnceLock::new();
        if let Some(f) = self.facets.get() {
            let _ = facets.set(f.clone());
        }
        Self {
            ideal: self.ideal.clone(),
            facets,
        }
    }
}

impl NewtonPolyhedron {
    pub fn new(ideal: MonomialIdeal) -> Self {
        Self {
            ideal,
            facets: OnceLock::new(),
        }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn dim(&self) -> usize {
        self.ideal.dim()
    }

    /// Facets other than the coordinate hyperplanes `q_j >= 0`, sorted by
    /// normal. Together with `q >= 0` they describe the polyhedron exactly.
    pub fn facets(&self) -> &[Facet] {
        self.facets.get_or_init(|| compute_facets(&self.ideal))
    }
}

/// Facet description via the homogenized cone spanned by `(1, u)` for each
/// generator and `(0, e_j)` for each coordinate direction. Its dual cone has
/// one extreme ray `(-c, w)` per facet `⟨w, q⟩ >= c`.
fn compute_facets(ideal: &MonomialIdeal) -> Vec<Facet> {
    let n = ideal.dim();
    let mut rows: Vec<dd::IntVector> = Vec::new();
    for u in ideal.generators() {
        let mut r = vec![BigInt::one()];
        r.extend(u.entries().iter().map(|&e| BigInt::from(e)));
        rows.push(r);
    }
    for j in 0..n {
        let mut r = vec![BigInt::zero(); n + 1];
        r[j + 1] = BigInt::one();
        rows.push(r);
    }
    let mut facets: Vec<Facet> = dd::extreme_rays(&rows, n + 1)
        .into_iter()
        .filter_map(|ray| {
            let offset = (-&ray[0]).to_u64()?;
            if offset == 0 {
                // Either the face at infinity (w = 0) or a coordinate hyperplane.
                return None;
            }
            let normal: Vec<u64> = ray[1..].iter().map(|x| x.to_u64().expect("nonnegative normal")).collect();
            Some(Facet {
                normal: WeightVector::new(normal).expect("nonzero normal"),
                offset,
            })
        })
        .collect();
    facets.sort();
    facets
}

pub fn facet_normals(p: &NewtonPolyhedron) -> Vec<Facet> {
    p.facets().to_vec()
}

/// Exact membership test against the facet description.
pub fn membership(q: &[Rational], p: &NewtonPolyhedron) -> Result<bool> {
    check_dim(p.dim(), q.len())?;
    if q.iter().any(Signed::is_negative) {
        return Ok(false);
    }
    Ok(p.facets().iter().all(|f| {
        let lhs: Rational = f
            .normal
            .entries()
            .iter()
            .zip(q)
            .map(|(&w, x)| Rational::from_integer(BigInt::from(w)) * x)
            .sum();
        lhs >= Rational::from_integer(BigInt::from(f.offset))
    }))
}

/// Membership by LP feasibility of `q >= Σ μ_j u_j`, `Σ μ_j = 1`, `μ >= 0`.
pub fn membership_lp(q: &[Rational], p: &NewtonPolyhedron) -> Result<bool> {
    check_dim(p.dim(), q.len())?;
    if q.iter().any(Signed::is_negative) {
        return Ok(false);
    }
    let gens = p.ideal().generators();
    let k = gens.len();
    let mut lp = LinearProgram::new(k, vec![Rational::zero(); k]);
    for (j, qj) in q.iter().enumerate() {
        let row = gens.iter().map(|u| Rational::from_integer(BigInt::from(u.entries()[j]))).collect();
        lp.add(row, Relation::Le, qj.clone());
    }
    lp.add(vec![Rational::one(); k], Relation::Eq, Rational::one());
    Ok(!matches!(lp.solve(), LpOutcome::Infeasible))
}

/// Howald's lct `sup{t : 1 ∈ t·Newt(a)} = min_f ⟨w_f,1⟩ / c_f` over facets.
pub fn lct_howald(a: &MonomialIdeal) -> Rational {
    lct_from_facets(&NewtonPolyhedron::new(a.clone()))
}

pub fn lct_from_facets(p: &NewtonPolyhedron) -> Rational {
    p.facets()
        .iter()
        .map(|f| Rational::new(BigInt::from(f.normal.total()), BigInt::from(f.offset)))
        .min()
        .expect("a proper monomial ideal has a non-coordinate facet")
}

/// Facets attaining the lct minimum, sorted lexicographically by normal.
pub fn lct_computing_facets(p: &NewtonPolyhedron) -> Vec<Facet> {
    let lct = lct_from_facets(p);
    p.facets()
        .iter()
        .filter(|f| Rational::new(BigInt::from(f.normal.total()), BigInt::from(f.offset)) == lct)
        .cloned()
        .collect()
}

/// Second route to the lct: `1/λ*` with `λ* = min{λ : λ·1 ∈ Newt(a)}` from
/// an LP over convex combinations of the generators.
pub fn lct_via_lp(a: &MonomialIdeal) -> Rational {
    let gens = a.generators();
    let k = gens.len();
    // variables: μ_1..μ_k, λ
    let mut objective = vec![Rational::zero(); k + 1];
    objective[k] = Rational::one();
    let mut lp = LinearProgram::new(k + 1, objective);
    for j in 0..a.dim() {
        let mut row: Vec<Rational> = gens
            .iter()
            .map(|u| Rational::from_integer(BigInt::from(u.entries()[j])))
            .collect();
        row.push(-Rational::one());
        lp.add(row, Relation::Le, Rational::zero());
    }
    let mut sum = vec![Rational::one(); k];
    sum.push(Rational::zero());
    lp.add(sum, Relation::Eq, Rational::one());
    match lp.solve() {
        LpOutcome::Optimal { value, .. } => value.recip(),
        other => unreachable!("lct LP is feasible and bounded: {other:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::power_of_maximal_ideal;
    use crate::poly::Ring;
    use crate::rational::{int, rat};

    fn w(v: &[u64]) -> WeightVector {
        WeightVector::new(v.to_vec()).unwrap()
    }

    fn ideal(rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(rows).unwrap()
    }

    fn facet_list(a: &MonomialIdeal) -> Vec<(Vec<u64>, u64)> {
        NewtonPolyhedron::new(a.clone())
            .facets()
            .iter()
            .map(|f| (f.normal.entries().to_vec(), f.offset))
            .collect()
    }

    #[test]
    fn weight_vector_basics() {
        assert_eq!(WeightVector::new(vec![0, 0]), Err(Error::ZeroWeight));
        assert!(w(&[1, 2]).center_is_origin());
        assert!(!w(&[0, 2]).center_is_origin());
        assert_eq!(w(&[2, 3]).total(), 5);
    }

    #[test]
    fn polynomial_valuations() {
        let y = SparsePolynomial::from_int_terms(Ring::Rationals, &[(1, &[0, 1])]).unwrap();
        assert_eq!(val_w_polynomial(&w(&[1, 2]), &y).unwrap(), Valuation::Finite(2));
        let f = SparsePolynomial::from_int_terms(Ring::Rationals, &[(1, &[2, 0]), (1, &[1, 1]), (1, &[0, 3])]).unwrap();
        assert_eq!(val_w_polynomial(&w(&[1, 1]), &f).unwrap(), Valuation::Finite(2));
        let g = SparsePolynomial::from_int_terms(Ring::Rationals, &[(1, &[1, 0]), (1, &[0, 2])]).unwrap();
        assert_eq!(val_w_polynomial(&w(&[3, 1]), &g).unwrap(), Valuation::Finite(2));
        let zero = SparsePolynomial::zero(Ring::Rationals, 2);
        assert_eq!(val_w_polynomial(&w(&[1, 1]), &zero).unwrap(), Valuation::Infinity);
    }

    #[test]
    fn ideal_valuations() {
        for i in 1..6u32 {
            let a = ideal(&[&[1, 0], &[0, i]]);
            assert_eq!(val_w_ideal(&w(&[i as u64, 1]), &a).unwrap(), i as u64);
        }
        let m = power_of_maximal_ideal(2, 1).unwrap();
        assert_eq!(val_w_ideal(&w(&[1, 1]), &m).unwrap(), 1);
        let m2 = power_of_maximal_ideal(2, 2).unwrap();
        assert_eq!(val_w_ideal(&w(&[2, 3]), &m2).unwrap(), 4);
        assert!(val_w_ideal(&w(&[1, 1, 1]), &m2).is_err());
    }

    #[test]
    fn facet_examples() {
        assert_eq!(facet_list(&ideal(&[&[1, 0], &[0, 1]])), vec![(vec![1, 1], 1)]);
        for i in 1..8u32 {
            assert_eq!(
                facet_list(&ideal(&[&[1, 0], &[0, i]])),
                vec![(vec![i as u64, 1], i as u64)]
            );
        }
        assert_eq!(facet_list(&ideal(&[&[4]])), vec![(vec![1], 4)]);
        // (x) in the plane: the single facet x >= 1.
        assert_eq!(facet_list(&ideal(&[&[1, 0]])), vec![(vec![1, 0], 1)]);
        // (xy, x^3, y^3): two facets meeting at (1,1).
        assert_eq!(
            facet_list(&ideal(&[&[1, 1], &[3, 0], &[0, 3]])),
            vec![(vec![1, 2], 3), (vec![2, 1], 3)]
        );
    }

    #[test]
    fn facets_of_maximal_ideal_in_three_space() {
        assert_eq!(facet_list(&power_of_maximal_ideal(3, 2).unwrap()), vec![(vec![1, 1, 1], 2)]);
    }

    #[test]
    fn membership_examples() {
        let p = NewtonPolyhedron::new(ideal(&[&[1, 0], &[0, 1]]));
        for (q, expected) in [
            (vec![int(1), int(1)], true),
            (vec![rat(1, 2), rat(1, 2)], true),
            (vec![rat(1, 3), rat(1, 3)], false),
            (vec![int(0), int(5)], true),
        ] {
            assert_eq!(membership(&q, &p).unwrap(), expected, "{q:?}");
            assert_eq!(membership_lp(&q, &p).unwrap(), expected, "{q:?}");
        }
        assert!(membership(&[int(1)], &p).is_err());
    }

    #[test]
    fn howald_examples() {
        for i in 1..10u32 {
            let a = ideal(&[&[1, 0], &[0, i]]);
            assert_eq!(lct_howald(&a), rat(i as i64 + 1, i as i64));
            assert_eq!(lct_via_lp(&a), rat(i as i64 + 1, i as i64));
        }
        for n in 1..5 {
            let m = power_of_maximal_ideal(n, 1).unwrap();
            assert_eq!(lct_howald(&m), int(n as i64));
        }
        let a = ideal(&[&[2, 0], &[0, 2]]);
        assert_eq!(lct_howald(&a), int(1));
        assert_eq!(lct_via_lp(&a), int(1));
    }

    #[test]
    fn ties_are_all_reported() {
        let p = NewtonPolyhedron::new(ideal(&[&[1, 1], &[3, 0], &[0, 3]]));
        let normals: Vec<_> = lct_computing_facets(&p).into_iter().map(|f| f.normal).collect();
        assert_eq!(normals, vec![w(&[1, 2]), w(&[2, 1])]);
        assert_eq!(lct_from_facets(&p), int(1));
    }
}
