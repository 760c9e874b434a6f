//! Jet-scheme equations.
//!
//! Substituting `X_ℓ ↦ Σ_q X_ℓ^{(q)} t^q` into `f` and collecting powers of
//! `t` gives polynomials `F^{(0)}, F^{(1)}, …` in the jet variables; the
//! `m`-jet scheme of `V(f_1, …, f_r)` is cut out by the `F_i^{(j)}` with
//! `j <= m`. Coefficients of the `F^{(j)}` lie in the subring generated by
//! the coefficients of `f`, which is what makes reduction mod `p` commute
//! with the construction.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal::MultiIdeal;
use crate::poly::{is_prime, Ring, SparsePolynomial};
use crate::rational::{parse_rational, Rational};

/// `X_ℓ^{(q)}` with `ℓ` 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JetVariable {
    pub base: usize,
    pub order: u64,
}

impl fmt::Display for JetVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X_{}_{}", self.base, self.order)
    }
}

/// A monomial as the sorted sequence of its variables, repeated by multiplicity.
/// The derived order is the export order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct JetMonomial(Vec<JetVariable>);

impl JetMonomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(v: JetVariable) -> Self {
        Self(vec![v])
    }

    pub fn from_vars(mut vars: Vec<JetVariable>) -> Self {
        vars.sort();
        Self(vars)
    }

    pub fn vars(&self) -> &[JetVariable] {
        &self.0
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] <= other.0[j] {
                out.push(self.0[i]);
                i += 1;
            } else {
                out.push(other.0[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Self(out)
    }

    /// `Σ q` over the variables: the weight when `X_ℓ^{(q)}` has weight `q`.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|v| v.order).sum()
    }
}

impl fmt::Display for JetMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let v = self.0[i];
            let mut e = 1;
            while i + e < self.0.len() && self.0[i + e] == v {
                e += 1;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            i += e;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetPolynomial {
    ring: Ring,
    terms: BTreeMap<JetMonomial, Rational>,
}

impl JetPolynomial {
    pub fn zero(ring: Ring) -> Self {
        Self {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (JetMonomial, Rational)>) -> Result<Self> {
        let mut p = Self::zero(ring);
        for (mono, c) in terms {
            let c = ring.normalize(c)?;
            p.add_term(mono, c);
        }
        Ok(p)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&JetMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mono: JetMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let ring = self.ring;
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = ring.normalize(o.get() + c).expect("valid coefficients");
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.ring);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = self.ring.normalize(ca * cb).expect("valid coefficients");
                out.add_term(a.mul(b), c);
            }
        }
        out
    }

    fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.ring);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), self.ring.normalize(x * c).expect("valid coefficients"));
        }
        out
    }

    /// Coefficient-wise image in another ring.
    pub fn change_ring(&self, ring: Ring) -> Result<Self> {
        Self::from_terms(ring, self.terms.iter().map(|(m, c)| (m.clone(), c.clone())))
    }

    /// Exact value at an integer jet `value(ℓ, q)`.
    pub fn evaluate(&self, value: impl Fn(JetVariable) -> BigInt) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| {
                let prod: BigInt = m.vars().iter().map(|&v| value(v)).product();
                c * Rational::from_integer(prod)
            })
            .sum()
    }

    /// Largest variable order present.
    pub fn max_order(&self) -> Option<u64> {
        self.terms.keys().flat_map(|m| m.vars().iter().map(|v| v.order)).max()
    }
}

impl fmt::Display for JetPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.vars().is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

/// `[F^{(0)}, …, F^{(m)}]` for one polynomial; slots may be zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetExpansion {
    pub source: SparsePolynomial,
    pub slots: Vec<JetPolynomial>,
}

impl JetExpansion {
    pub fn order(&self) -> u64 {
        self.slots.len() as u64 - 1
    }
}

/// Truncated power series in `t` with jet-polynomial coefficients.
type Series = Vec<JetPolynomial>;

fn series_mul(a: &Series, b: &Series, len: usize, ring: Ring) -> Series {
    let mut out = vec![JetPolynomial::zero(ring); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j].add_assign(&x.mul(y));
            }
        }
    }
    out
}

/// Coefficients of `t^0..t^m` in `f(Σ_q X_1^{(q)} t^q, …, Σ_q X_N^{(q)} t^q)`.
pub fn jet_equations(f: &SparsePolynomial, m: u64) -> Result<JetExpansion> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ring = f.ring();
    let len = m as usize + 1;
    let n = f.dim();
    let max_exp: Vec<u32> = (0..n)
        .map(|l| f.support().map(|u| u.entries()[l]).max().unwrap_or(0))
        .collect();

    // powers[ℓ][k] = (Σ_q X_ℓ^{(q)} t^q)^k, truncated.
    let mut powers: Vec<Vec<Series>> = Vec::with_capacity(n);
    for (l, &top) in max_exp.iter().enumerate() {
        let mut one = vec![JetPolynomial::zero(ring); len];
        one[0] = JetPolynomial::from_terms(ring, [(JetMonomial::one(), Rational::one())])?;
        let base: Series = (0..len as u64)
            .map(|q| {
                JetPolynomial::from_terms(
                    ring,
                    [(JetMonomial::var(JetVariable { base: l + 1, order: q }), Rational::one())],
                )
            })
            .collect::<Result<_>>()?;
        let mut pows = vec![one];
        for k in 1..=top as usize {
            let next = series_mul(&pows[k - 1], &base, len, ring);
            pows.push(next);
        }
        powers.push(pows);
    }

    let mut slots = vec![JetPolynomial::zero(ring); len];
    for (u, c) in f.terms() {
        let mut term: Series = powers[0][u.entries()[0] as usize].clone();
        for (l, &e) in u.entries().iter().enumerate().skip(1) {
            if e > 0 {
                term = series_mul(&term, &powers[l][e as usize], len, ring);
            }
        }
        for (slot, t) in slots.iter_mut().zip(&term) {
            slot.add_assign(&t.scale(c));
        }
    }
    Ok(JetExpansion {
        source: f.clone(),
        slots,
    })
}

fn require_prime(p: u64) -> Result<Ring> {
    if is_prime(p) {
        Ok(Ring::PrimeField(p))
    } else {
        Err(Error::NotPrime(p))
    }
}

fn require_integers(ring: Ring) -> Result<()> {
    if ring == Ring::Integers {
        Ok(())
    } else {
        Err(Error::RingMismatch {
            expected: Ring::Integers.to_string(),
            found: ring.to_string(),
        })
    }
}

/// Reduces an expansion over `ℤ` coefficient-wise mod `p`.
pub fn reduce_jets_mod_p(jets: &JetExpansion, p: u64) -> Result<JetExpansion> {
    let field = require_prime(p)?;
    require_integers(jets.source.ring())?;
    let source = jets.source.change_ring(field)?;
    if source.is_zero() {
        return Err(Error::DegenerateLift { p });
    }
    Ok(JetExpansion {
        source,
        slots: jets.slots.iter().map(|s| s.change_ring(field)).collect::<Result<_>>()?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JetLabel {
    /// `F_{factor, generator}^{(order)}`, indices 0-based.
    Generator { factor: usize, generator: usize, order: u64 },
    /// `X_index^{(0)}`, index 1-based.
    Fiber { index: usize },
}

impl fmt::Display for JetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JetLabel::Generator { factor, generator, order } => write!(f, "F[{factor},{generator}]^({order})"),
            JetLabel::Fiber { index } => write!(f, "fiber[{index}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetSystemEntry {
    pub label: JetLabel,
    pub poly: JetPolynomial,
}

/// Equations of `Cont^{≥m_1}(a_1) ∩ ⋯ ∩ Cont^{≥m_s}(a_s) ∩ π^{-1}(0)` at
/// jet level `max m_i - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetSystem {
    pub dim: usize,
    pub ring: Ring,
    /// Highest jet order among the variables, `max(m_i) - 1` (0 when all `m_i = 0`).
    pub order: u64,
    pub entries: Vec<JetSystemEntry>,
    /// Generators per factor, kept so reductions can detect degenerate lifts.
    pub sources: Vec<Vec<SparsePolynomial>>,
    /// Set when every `m_i` is zero: only the fiber constraints are present.
    pub only_fiber: bool,
}

impl JetSystem {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn polynomials(&self) -> impl Iterator<Item = &JetPolynomial> {
        self.entries.iter().map(|e| &e.poly)
    }

    /// An empty system in `dim` variables (no equations at all).
    pub fn empty(dim: usize, ring: Ring) -> Self {
        Self {
            dim,
            ring,
            order: 0,
            entries: Vec::new(),
            sources: Vec::new(),
            only_fiber: false,
        }
    }
}

/// For factor `i` and each generator `f_ij`, emits `F_ij^{(q)}` for
/// `q < m_i`, then the fiber constraints `X_1^{(0)}, …, X_N^{(0)}`.
pub fn jet_system(factors: &[Vec<SparsePolynomial>], m: &[u64]) -> Result<JetSystem> {
    if factors.len() != m.len() {
        return Err(Error::JetOrderLength {
            expected: factors.len(),
            found: m.len(),
        });
    }
    let first = factors.iter().flatten().next().ok_or(Error::EmptyGenerators)?;
    let (dim, ring) = (first.dim(), first.ring());
    let mut entries = Vec::new();
    for (i, (gens, &mi)) in factors.iter().zip(m).enumerate() {
        for (j, g) in gens.iter().enumerate() {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.dim(),
                });
            }
            if g.ring() != ring {
                return Err(Error::RingMismatch {
                    expected: ring.to_string(),
                    found: g.ring().to_string(),
                });
            }
            if mi == 0 {
                continue;
            }
            let jets = jet_equations(g, mi - 1)?;
            for (q, poly) in jets.slots.into_iter().enumerate() {
                entries.push(JetSystemEntry {
                    label: JetLabel::Generator {
                        factor: i,
                        generator: j,
                        order: q as u64,
                    },
                    poly,
                });
            }
        }
    }
    for l in 1..=dim {
        entries.push(JetSystemEntry {
            label: JetLabel::Fiber { index: l },
            poly: JetPolynomial::from_terms(
                ring,
                [(JetMonomial::var(JetVariable { base: l, order: 0 }), Rational::one())],
            )?,
        });
    }
    let max_m = m.iter().copied().max().unwrap_or(0);
    Ok(JetSystem {
        dim,
        ring,
        order: max_m.saturating_sub(1),
        entries,
        sources: factors.to_vec(),
        only_fiber: max_m == 0,
    })
}

/// The jet system of a monomial multiideal (generators with coefficient 1).
pub fn jet_system_for_pair(pair: &MultiIdeal, m: &[u64], ring: Ring) -> Result<JetSystem> {
    let factors: Vec<Vec<SparsePolynomial>> = pair
        .factors()
        .iter()
        .map(|(a, _)| SparsePolynomial::generators_of(a, ring))
        .collect();
    jet_system(&factors, m)
}

/// Reduces a system over `ℤ` coefficient-wise mod `p`, keeping zero entries
/// in place. Fails if some generator vanishes mod `p`.
pub fn reduce_jet_system_mod_p(system: &JetSystem, p: u64) -> Result<JetSystem> {
    let field = require_prime(p)?;
    require_integers(system.ring)?;
    let sources = system
        .sources
        .iter()
        .map(|gens| gens.iter().map(|g| g.change_ring(field)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if sources.iter().flatten().any(SparsePolynomial::is_zero) {
        return Err(Error::DegenerateLift { p });
    }
    let entries = system
        .entries
        .iter()
        .map(|e| {
            Ok(JetSystemEntry {
                label: e.label,
                poly: e.poly.change_ring(field)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(JetSystem {
        dim: system.dim,
        ring: field,
        order: system.order,
        entries,
        sources,
        only_fiber: system.only_fiber,
    })
}

/// Deterministic text form for external computer-algebra checks:
///
/// ```text
/// vars: X_1_0 X_1_1 … X_N_m
/// poly[0]: c*X_1_0*X_2_1 + …
/// ```
///
/// Terms are sorted lexicographically by their variable sequences; zero
/// entries print as `0`.
pub fn export_cas(system: &JetSystem) -> String {
    let mut out = String::from("vars:");
    for l in 1..=system.dim {
        for q in 0..=system.order {
            out.push_str(&format!(" {}", JetVariable { base: l, order: q }));
        }
    }
    out.push('\n');
    for (i, p) in system.polynomials().enumerate() {
        out.push_str(&format!("poly[{i}]: {p}\n"));
    }
    out
}

/// Parses the output of [`export_cas`] back into variables and polynomials.
pub fn parse_cas(text: &str, ring: Ring) -> Result<(Vec<JetVariable>, Vec<JetPolynomial>)> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header".into(),
    })?;
    let vars_text = header.strip_prefix("vars:").ok_or(Error::Parse {
        line: 1,
        message: "expected `vars:`".into(),
    })?;
    let vars = vars_text
        .split_whitespace()
        .map(|v| parse_variable(v).ok_or(Error::Parse { line: 1, message: format!("bad variable `{v}`") }))
        .collect::<Result<Vec<_>>>()?;
    let mut polys = Vec::new();
    for (idx, line) in lines {
        let err = |message: String| Error::Parse { line: idx + 1, message };
        let body = line
            .strip_prefix(&format!("poly[{}]: ", polys.len()))
            .ok_or_else(|| err("expected `poly[i]: `".into()))?;
        if body == "0" {
            polys.push(JetPolynomial::zero(ring));
            continue;
        }
        let mut terms = Vec::new();
        for term in body.split(" + ") {
            let mut factors = term.split('*');
            let coeff = factors.next().and_then(parse_rational).ok_or_else(|| err(format!("bad term `{term}`")))?;
            let mut mono = Vec::new();
            for factor in factors {
                let (v, e) = match factor.split_once('^') {
                    Some((v, e)) => (v, e.parse::<usize>().map_err(|_| err(format!("bad exponent `{factor}`")))?),
                    None => (factor, 1),
                };
                let v = parse_variable(v).ok_or_else(|| err(format!("bad variable `{v}`")))?;
                mono.extend(std::iter::repeat_n(v, e));
            }
            terms.push((JetMonomial::from_vars(mono), coeff));
        }
        polys.push(JetPolynomial::from_terms(ring, terms)?);
    }
    Ok((vars, polys))
}

fn parse_variable(s: &str) -> Option<JetVariable> {
    let rest = s.strip_prefix("X_")?;
    let (b, q) = rest.split_once('_')?;
    Some(JetVariable {
        base: b.parse().ok()?,
        order: q.parse().ok()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;
    use crate::rational::int;

    fn x(base: usize, order: u64) -> JetVariable {
        JetVariable { base, order }
    }

    fn poly(ring: Ring, terms: &[(i64, &[JetVariable])]) -> JetPolynomial {
        JetPolynomial::from_terms(ring, terms.iter().map(|(c, v)| (JetMonomial::from_vars(v.to_vec()), int(*c)))).unwrap()
    }

    #[test]
    fn product_of_two_variables() {
        let f = SparsePolynomial::from_int_terms(Ring::Rationals, &[(1, &[1, 1])]).unwrap();
        let jets = jet_equations(&f, 1).unwrap();
        assert_eq!(jets.slots[0], poly(Ring::Rationals, &[(1, &[x(1, 0), x(2, 0)])]));
        assert_eq!(
            jets.slots[1],
            poly(Ring::Rationals, &[(1, &[x(1, 0), x(2, 1)]), (1, &[x(1, 1), x(2, 0)])])
        );
    }

    #[test]
    fn square_over_q_and_f2() {
        let f = SparsePolynomial::from_int_terms(Ring::Rationals, &[(1, &[2])]).unwrap();
        let jets = jet_equations(&f, 2).unwrap();
        assert_eq!(jets.slots[0], poly(Ring::Rationals, &[(1, &[x(1, 0), x(1, 0)])]));
        assert_eq!(jets.slots[1], poly(Ring::Rationals, &[(2, &[x(1, 0), x(1, 1)])]));
        assert_eq!(
            jets.slots[2],
            poly(Ring::Rationals, &[(1, &[x(1, 1), x(1, 1)]), (2, &[x(1, 0), x(1, 2)])])
        );

        let f2 = f.change_ring(Ring::PrimeField(2)).unwrap();
        let jets = jet_equations(&f2, 2).unwrap();
        assert_eq!(jets.slots[0], poly(Ring::PrimeField(2), &[(1, &[x(1, 0), x(1, 0)])]));
        assert!(jets.slots[1].is_zero());
        assert_eq!(jets.slots[2], poly(Ring::PrimeField(2), &[(1, &[x(1, 1), x(1, 1)])]));
        assert!(jet_equations(&SparsePolynomial::zero(Ring::Rationals, 1), 2).is_err());
    }

    #[test]
    fn systems() {
        let x_ideal = MonomialIdeal::from_rows(&[&[1, 0]]).unwrap();
        let pair = MultiIdeal::single(x_ideal, int(1)).unwrap();
        let sys = jet_system_for_pair(&pair, &[2], Ring::Integers).unwrap();
        let shown: Vec<String> = sys.polynomials().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["1*X_1_0", "1*X_1_1", "1*X_1_0", "1*X_2_0"]);

        let xy = MultiIdeal::single(MonomialIdeal::from_rows(&[&[1, 1]]).unwrap(), int(1)).unwrap();
        let sys = jet_system_for_pair(&xy, &[1], Ring::Integers).unwrap();
        let shown: Vec<String> = sys.polynomials().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["1*X_1_0*X_2_0", "1*X_1_0", "1*X_2_0"]);

        let two = MultiIdeal::new(vec![
            (MonomialIdeal::from_rows(&[&[1, 0]]).unwrap(), int(1)),
            (MonomialIdeal::from_rows(&[&[0, 1]]).unwrap(), int(1)),
        ])
        .unwrap();
        let sys = jet_system_for_pair(&two, &[1, 1], Ring::Integers).unwrap();
        let shown: Vec<String> = sys.polynomials().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["1*X_1_0", "1*X_2_0", "1*X_1_0", "1*X_2_0"]);
        assert!(!sys.only_fiber);

        let sys = jet_system_for_pair(&two, &[0, 0], Ring::Integers).unwrap();
        assert_eq!(sys.len(), 2);
        assert!(sys.only_fiber);
    }

    #[test]
    fn reduction_examples() {
        let x2 = SparsePolynomial::from_int_terms(Ring::Integers, &[(1, &[2])]).unwrap();
        let reduced = reduce_jets_mod_p(&jet_equations(&x2, 2).unwrap(), 2).unwrap();
        let direct = jet_equations(&x2.change_ring(Ring::PrimeField(2)).unwrap(), 2).unwrap();
        assert_eq!(reduced, direct);

        let three_xy = SparsePolynomial::from_int_terms(Ring::Integers, &[(3, &[1, 1])]).unwrap();
        let jets = jet_equations(&three_xy, 1).unwrap();
        assert_eq!(reduce_jets_mod_p(&jets, 3), Err(Error::DegenerateLift { p: 3 }));
        assert_eq!(reduce_jets_mod_p(&jets, 4), Err(Error::NotPrime(4)));

        let f = SparsePolynomial::from_int_terms(Ring::Integers, &[(1, &[2, 0]), (2, &[0, 1])]).unwrap();
        let reduced = reduce_jets_mod_p(&jet_equations(&f, 1).unwrap(), 2).unwrap();
        let g = SparsePolynomial::from_int_terms(Ring::PrimeField(2), &[(1, &[2, 0])]).unwrap();
        assert_eq!(reduced.slots, jet_equations(&g, 1).unwrap().slots);
        assert_eq!(reduced.slots[0], poly(Ring::PrimeField(2), &[(1, &[x(1, 0), x(1, 0)])]));
        assert!(reduced.slots[1].is_zero());
    }

    #[test]
    fn system_reduction_detects_degenerate_generators() {
        let g = SparsePolynomial::from_int_terms(Ring::Integers, &[(3, &[1, 1])]).unwrap();
        let sys = jet_system(&[vec![g]], &[2]).unwrap();
        assert_eq!(reduce_jet_system_mod_p(&sys, 3), Err(Error::DegenerateLift { p: 3 }));
        let reduced = reduce_jet_system_mod_p(&sys, 2).unwrap();
        assert_eq!(reduced.len(), sys.len());
        assert_eq!(reduced.ring, Ring::PrimeField(2));
    }

    #[test]
    fn export_golden() {
        let pair = MultiIdeal::single(MonomialIdeal::from_rows(&[&[1, 0]]).unwrap(), int(1)).unwrap();
        let sys = jet_system_for_pair(&pair, &[2], Ring::Integers).unwrap();
        assert_eq!(
            export_cas(&sys),
            "vars: X_1_0 X_1_1 X_2_0 X_2_1\n\
             poly[0]: 1*X_1_0\n\
             poly[1]: 1*X_1_1\n\
             poly[2]: 1*X_1_0\n\
             poly[3]: 1*X_2_0\n"
        );
        let xy = MultiIdeal::single(MonomialIdeal::from_rows(&[&[1, 1]]).unwrap(), int(1)).unwrap();
        let sys = jet_system_for_pair(&xy, &[1], Ring::Integers).unwrap();
        assert_eq!(
            export_cas(&sys),
            "vars: X_1_0 X_2_0\npoly[0]: 1*X_1_0*X_2_0\npoly[1]: 1*X_1_0\npoly[2]: 1*X_2_0\n"
        );
        assert_eq!(export_cas(&JetSystem::empty(1, Ring::Integers)), "vars: X_1_0\n");
    }

    #[test]
    fn export_parses_back() {
        let f = SparsePolynomial::from_int_terms(Ring::Rationals, &[(3, &[2, 1]), (-1, &[0, 3]), (7, &[1, 0])]).unwrap();
        let f = f.add(&SparsePolynomial::from_terms(Ring::Rationals, 2, [(crate::ExponentVector::zero(2), crate::rational::rat(1, 2))]).unwrap()).unwrap();
        let sys = jet_system(&[vec![f]], &[4]).unwrap();
        let text = export_cas(&sys);
        let (vars, polys) = parse_cas(&text, Ring::Rationals).unwrap();
        assert_eq!(vars.len(), 2 * 4);
        assert_eq!(polys, sys.polynomials().cloned().collect::<Vec<_>>());
    }
}
