//! Double description method over the integers.
//!
//! [`extreme_rays`] turns an inequality description `{y : A·y ≥ 0}` of a
//! pointed cone into its extreme rays. Applied to a list of generators it
//! produces the facets of their conic hull, so the same routine serves both
//! directions of the duality.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{dot_int, linalg, primitive_int, Rational};
use crate::error::{Error, Result};

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(alloc::vec![0; len.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn is_superset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
}

struct Ray {
    coords: Vec<BigInt>,
    zeros: Bits,
}

/// Extreme rays of `{y ∈ R^dim : a·y ≥ 0 for every row a}`.
///
/// The rows must have rank `dim` (the cone is pointed); otherwise
/// [`Error::Unbounded`] is returned, since the cone then contains a line.
/// Rays come back primitive and sorted.
pub fn extreme_rays(constraints: &[Vec<BigInt>], dim: usize) -> Result<Vec<Vec<BigInt>>> {
    for row in constraints {
        if row.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: row.len(),
            });
        }
    }
    let m = constraints.len();

    // Greedy row basis in input order.
    let mut basis: Vec<usize> = Vec::new();
    let mut basis_rows: Vec<Vec<Rational>> = Vec::new();
    for (i, row) in constraints.iter().enumerate() {
        if basis.len() == dim {
            break;
        }
        let mut trial = basis_rows.clone();
        trial.push(row.iter().cloned().map(Rational::from_integer).collect());
        if linalg::rank(&trial) == trial.len() {
            basis.push(i);
            basis_rows = trial;
        }
    }
    if basis.len() < dim {
        return Err(Error::Unbounded);
    }

    // Columns of the inverse of the basis matrix span the initial simplicial cone.
    let mut rays: Vec<Ray> = Vec::with_capacity(dim);
    for j in 0..dim {
        let mut e = alloc::vec![Rational::zero(); dim];
        e[j] = Rational::from_integer(BigInt::from(1));
        let col = linalg::solve(&basis_rows, &e).expect("basis rows are independent");
        let coords = primitive_int(&super::clear_denominators(&col));
        let mut zeros = Bits::new(m);
        for (k, &bi) in basis.iter().enumerate() {
            if k != j {
                zeros.set(bi);
            }
        }
        rays.push(Ray { coords, zeros });
    }

    let mut processed = alloc::vec![false; m];
    for &b in &basis {
        processed[b] = true;
    }
    for i in 0..m {
        if processed[i] {
            continue;
        }
        processed[i] = true;
        let a = &constraints[i];
        let values: Vec<BigInt> = rays.iter().map(|r| dot_int(a, &r.coords)).collect();
        if values.iter().all(|v| !v.is_negative()) {
            for (r, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    r.zeros.set(i);
                }
            }
            continue;
        }
        let plus: Vec<usize> = (0..rays.len())
            .filter(|&k| values[k].is_positive())
            .collect();
        let minus: Vec<usize> = (0..rays.len())
            .filter(|&k| values[k].is_negative())
            .collect();

        let mut fresh: Vec<Ray> = Vec::new();
        for &p in &plus {
            for &q in &minus {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if (common.count() as usize) + 2 < dim {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, r)| k != p && k != q && r.zeros.is_superset_of(&common));
                if blocked {
                    continue;
                }
                let vp = &values[p];
                let vq = -&values[q];
                let coords: Vec<BigInt> = rays[q]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(cq, cp)| vp * cq + &vq * cp)
                    .collect();
                let mut zeros = common;
                zeros.set(i);
                fresh.push(Ray {
                    coords: primitive_int(&coords),
                    zeros,
                });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (r, v) in rays.into_iter().zip(values) {
            if v.is_negative() {
                continue;
            }
            let mut r = r;
            if v.is_zero() {
                r.zeros.set(i);
            }
            next.push(r);
        }
        next.extend(fresh);
        rays = next;
    }

    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.coords).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
            .collect()
    }

    #[test]
    fn orthant_is_self_dual() {
        let rays = extreme_rays(&ints(&[&[1, 0], &[0, 1]]), 2).unwrap();
        assert_eq!(rays, ints(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn square_pyramid_cone() {
        // x0 ± x1 ≥ 0, x0 ± x2 ≥ 0: four extreme rays (1, ±1, ±1).
        let cons = ints(&[&[1, 1, 0], &[1, -1, 0], &[1, 0, 1], &[1, 0, -1]]);
        let rays = extreme_rays(&cons, 3).unwrap();
        assert_eq!(
            rays,
            ints(&[&[1, -1, -1], &[1, -1, 1], &[1, 1, -1], &[1, 1, 1]])
        );
    }

    #[test]
    fn redundant_constraints_are_harmless() {
        let cons = ints(&[&[1, 0], &[0, 1], &[1, 1], &[2, 1]]);
        let rays = extreme_rays(&cons, 2).unwrap();
        assert_eq!(rays, ints(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn line_is_rejected() {
        assert_eq!(extreme_rays(&ints(&[&[1, 0]]), 2), Err(Error::Unbounded));
    }
}
