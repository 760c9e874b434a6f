//! Double description: extreme rays of a pointed cone `{y : A y >= 0}`.
//!
//! Exact integer arithmetic throughout; rays are kept primitive.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

pub type IntVector = Vec<BigInt>;

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divides by the gcd of the entries.
pub fn primitive(v: IntVector) -> IntVector {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

fn integral_multiple(v: &[Rational]) -> IntVector {
    let den = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    primitive(
        v.iter()
            .map(|x| (x * Rational::from_integer(den.clone())).to_integer())
            .collect(),
    )
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_superset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
}

struct Ray {
    v: IntVector,
    zeros: Bits,
}

/// Indices of a maximal linearly independent subset of `rows`, chosen greedily.
fn independent_rows(rows: &[IntVector], dim: usize) -> Vec<usize> {
    let mut echelon: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut r: Vec<Rational> = row.iter().cloned().map(Rational::from_integer).collect();
        for (pivot, e) in &echelon {
            if !r[*pivot].is_zero() {
                let f = r[*pivot].clone() / &e[*pivot];
                for (x, y) in r.iter_mut().zip(e) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            echelon.push((p, r));
            chosen.push(idx);
            if chosen.len() == dim {
                break;
            }
        }
    }
    chosen
}

/// Solves `M x = e_k` for every `k` (M square, invertible) by Gauss–Jordan.
fn inverse_columns(m: &[IntVector]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational> = row.iter().cloned().map(Rational::from_integer).collect();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("invertible basis");
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
    }
    (0..n).map(|k| (0..n).map(|i| a[i][n + k].clone()).collect()).collect()
}

/// Extreme rays of `{y ∈ ℝ^dim : ⟨row, y⟩ >= 0 ∀ row}`. The rows must span
/// `ℝ^dim` (so the cone is pointed). Output is sorted and primitive.
pub fn extreme_rays(rows: &[IntVector], dim: usize) -> Vec<IntVector> {
    let basis = independent_rows(rows, dim);
    assert_eq!(basis.len(), dim, "constraint rows must have full rank");

    let basis_rows: Vec<IntVector> = basis.iter().map(|&i| rows[i].clone()).collect();
    let order: Vec<usize> = basis
        .iter()
        .copied()
        .chain((0..rows.len()).filter(|i| !basis.contains(i)))
        .collect();

    let zero_set = |v: &IntVector, processed: &[usize]| {
        let mut z = Bits::new(rows.len());
        for &i in processed {
            if dot(&rows[i], v).is_zero() {
                z.set(i);
            }
        }
        z
    };

    let processed: Vec<usize> = order[..dim].to_vec();
    let mut rays: Vec<Ray> = inverse_columns(&basis_rows)
        .iter()
        .map(|col| {
            let v = integral_multiple(col);
            let zeros = zero_set(&v, &processed);
            Ray { v, zeros }
        })
        .collect();

    for step in dim..order.len() {
        let row_idx = order[step];
        let row = &rows[row_idx];
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, val) in rays.iter_mut().zip(&values) {
                if val.is_zero() {
                    r.zeros.set(row_idx);
                }
            }
            continue;
        }

        let mut next: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.and(&rays[n].zeros);
                if common.count() + 2 < dim {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .filter(|&k| k != p && k != n)
                    .all(|k| !rays[k].zeros.is_superset_of(&common));
                if !adjacent {
                    continue;
                }
                let a = &values[p];
                let b = -&values[n];
                let v: IntVector = rays[n]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(x, y)| a * x + &b * y)
                    .collect();
                let v = primitive(v);
                let mut zeros = common;
                zeros.set(row_idx);
                next.push(Ray { v, zeros });
            }
        }
        for (i, mut r) in std::mem::take(&mut rays).into_iter().enumerate() {
            if values[i].is_negative() {
                continue;
            }
            if values[i].is_zero() {
                r.zeros.set(row_idx);
            }
            next.push(r);
        }
        rays = next;
    }

    let mut out: Vec<IntVector> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(xs: &[i64]) -> IntVector {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn orthant_rays_are_unit_vectors() {
        let rows = vec![iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1])];
        assert_eq!(
            extreme_rays(&rows, 3),
            vec![iv(&[0, 0, 1]), iv(&[0, 1, 0]), iv(&[1, 0, 0])]
        );
    }

    #[test]
    fn square_cone() {
        // Cone over a square: 4 facets, 4 rays.
        let rows = vec![iv(&[1, 1, 0]), iv(&[1, -1, 0]), iv(&[1, 0, 1]), iv(&[1, 0, -1])];
        let rays = extreme_rays(&rows, 3);
        assert_eq!(rays.len(), 4);
        for r in &rays {
            assert!(rows.iter().all(|row| !dot(row, r).is_negative()));
            let tight = rows.iter().filter(|row| dot(row, r).is_zero()).count();
            assert_eq!(tight, 2);
        }
    }

    #[test]
    fn redundant_rows_do_not_add_rays() {
        let rows = vec![iv(&[1, 0]), iv(&[0, 1]), iv(&[1, 1]), iv(&[2, 1])];
        assert_eq!(extreme_rays(&rows, 2), vec![iv(&[0, 1]), iv(&[1, 0])]);
    }
}
