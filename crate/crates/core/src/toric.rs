//! Discrepancies and log discrepancies of toric divisors over affine space.

use num_bigint::BigInt;

use crate::error::Result;
use crate::ideal::{check_dim, MonomialIdeal, MultiIdeal};
use crate::polyhedra::{val_unchecked, WeightVector};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricDivisorData {
    pub w: WeightVector,
    /// `k_E + 1 = ⟨w, 1⟩`.
    pub k_plus_one: u64,
    pub center_is_origin: bool,
}

impl ToricDivisorData {
    pub fn new(w: WeightVector) -> Self {
        Self {
            k_plus_one: w.total(),
            center_is_origin: w.center_is_origin(),
            w,
        }
    }
}

/// `k_E = ⟨w,1⟩ - 1`.
pub fn discrepancy(w: &WeightVector) -> u64 {
    w.total() - 1
}

/// `a(E_w; A, a^e) = ⟨w,1⟩ - Σ e_i val_w(a_i)`.
pub fn log_discrepancy(w: &WeightVector, pair: &MultiIdeal) -> Result<Rational> {
    check_dim(pair.dim(), w.dim())?;
    let mut value = Rational::from_integer(BigInt::from(w.total()));
    for (a, e) in pair.factors() {
        value -= e * Rational::from_integer(BigInt::from(val_unchecked(w.entries(), a)));
    }
    Ok(value)
}

/// Result of `(k_E + 1) / val_E(a)`; divisors with `val_E(a) = 0` do not
/// take part in the lct minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LctRatio {
    Value(Rational),
    NotApplicable,
}

pub fn lct_ratio(w: &WeightVector, a: &MonomialIdeal) -> Result<LctRatio> {
    check_dim(a.dim(), w.dim())?;
    let val = val_unchecked(w.entries(), a);
    if val == 0 {
        return Ok(LctRatio::NotApplicable);
    }
    Ok(LctRatio::Value(Rational::new(
        BigInt::from(w.total()),
        BigInt::from(val),
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::power_of_maximal_ideal;
    use crate::rational::{int, rat};

    fn w(v: &[u64]) -> WeightVector {
        WeightVector::new(v.to_vec()).unwrap()
    }

    fn x_ideal() -> MonomialIdeal {
        MonomialIdeal::from_rows(&[&[1, 0]]).unwrap()
    }

    #[test]
    fn discrepancies() {
        assert_eq!(discrepancy(&w(&[1, 1])), 1);
        for i in 1..10 {
            assert_eq!(discrepancy(&w(&[i, 1])), i);
        }
        assert_eq!(discrepancy(&w(&[1, 1, 1, 1])), 3);
        let d = ToricDivisorData::new(w(&[2, 0]));
        assert_eq!(d.k_plus_one, 2);
        assert!(!d.center_is_origin);
    }

    #[test]
    fn log_discrepancies() {
        let m = power_of_maximal_ideal(2, 1).unwrap();
        let pair = MultiIdeal::single(m, rat(1, 2)).unwrap();
        assert_eq!(log_discrepancy(&w(&[1, 1]), &pair).unwrap(), rat(3, 2));
        let pair = MultiIdeal::single(x_ideal(), int(3)).unwrap();
        assert_eq!(log_discrepancy(&w(&[1, 1]), &pair).unwrap(), int(-1));
        assert_eq!(log_discrepancy(&w(&[2, 2]), &pair).unwrap(), int(-2));
        assert!(log_discrepancy(&w(&[1]), &pair).is_err());
    }

    #[test]
    fn lct_ratios() {
        for i in 1..10u32 {
            let a = MonomialIdeal::from_rows(&[&[1, 0], &[0, i]]).unwrap();
            assert_eq!(
                lct_ratio(&w(&[i as u64, 1]), &a).unwrap(),
                LctRatio::Value(rat(i as i64 + 1, i as i64))
            );
        }
        let m = power_of_maximal_ideal(2, 1).unwrap();
        assert_eq!(lct_ratio(&w(&[1, 1]), &m).unwrap(), LctRatio::Value(int(2)));
        assert_eq!(lct_ratio(&w(&[1, 0]), &x_ideal()).unwrap(), LctRatio::Value(int(1)));
        assert_eq!(lct_ratio(&w(&[0, 1]), &x_ideal()).unwrap(), LctRatio::NotApplicable);
    }
}
