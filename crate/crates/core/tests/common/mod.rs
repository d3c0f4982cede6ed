//! Brute-force oracles shared by the integration tests. None of them call
//! into the library's geometry or counting code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

pub fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Area under the lower boundary of `conv(G) + R²₊`, by the trapezoid form of
/// the shoelace formula over Andrew's lower hull. `G` must contain points on
/// both axes.
pub fn shoelace_covol(gens: &[(i64, i64)]) -> Q {
    let a = gens
        .iter()
        .filter(|g| g.1 == 0)
        .map(|g| g.0)
        .min()
        .expect("a generator on the x-axis");
    let mut pts: Vec<(i64, i64)> = gens.iter().copied().filter(|g| g.0 <= a).collect();
    pts.sort();
    pts.dedup();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let (o, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 - o.0) * (p.1 - o.1) - (b.1 - o.1) * (p.0 - o.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    assert_eq!(hull[0].0, 0, "a generator on the y-axis");
    let twice: i64 = hull
        .windows(2)
        .map(|w| (w[1].0 - w[0].0) * (w[0].1 + w[1].1))
        .sum();
    q(twice, 2)
}

/// Signed area of a simple polygon.
pub fn shoelace_polygon(vertices: &[(Q, Q)]) -> Q {
    let m = vertices.len();
    let mut s = Q::zero();
    for i in 0..m {
        let (x1, y1) = &vertices[i];
        let (x2, y2) = &vertices[(i + 1) % m];
        s += x1 * y2 - x2 * y1;
    }
    s / Q::from_integer(2.into())
}

fn pure_powers(gens: &[Vec<i64>], n: usize) -> Vec<i64> {
    (0..n)
        .map(|i| {
            gens.iter()
                .filter(|g| g.iter().enumerate().all(|(j, &c)| j == i || c == 0))
                .map(|g| g[i])
                .min()
                .expect("a pure power of every variable")
        })
        .collect()
}

fn box_points(bounds: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &b in bounds {
        let mut next = Vec::new();
        for p in &out {
            for c in 0..b {
                let mut q = p.clone();
                q.push(c);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

fn dominates(x: &[i64], g: &[i64]) -> bool {
    x.iter().zip(g).all(|(a, b)| a >= b)
}

/// `dim k[[x]]/(x^g : g ∈ gens)` by counting the box below the pure powers.
pub fn box_colength(gens: &[Vec<i64>]) -> u64 {
    let n = gens[0].len();
    let p = pure_powers(gens, n);
    box_points(&p)
        .iter()
        .filter(|x| !gens.iter().any(|g| dominates(x, g)))
        .count() as u64
}

/// `H(k) = dim R/a^k` for `k = 1..=kmax`, from `f(x) = max{k : x ∈ a^k}`
/// computed by dynamic programming over the box `[0, kmax·p)`.
pub fn power_colengths(gens: &[Vec<i64>], kmax: u32) -> Vec<u64> {
    let n = gens[0].len();
    let p = pure_powers(gens, n);
    let bounds: Vec<i64> = p.iter().map(|&v| v * kmax as i64).collect();
    let stride: Vec<usize> = (0..n)
        .map(|i| bounds[i + 1..].iter().product::<i64>() as usize)
        .collect();
    let total: usize = bounds.iter().product::<i64>() as usize;
    let mut f = vec![0u32; total];
    let mut counts = vec![0u64; kmax as usize + 1];
    // Lexicographic order visits x - g before x.
    let mut x = vec![0i64; n];
    for idx in 0..total {
        let mut rem = idx;
        for i in 0..n {
            x[i] = (rem / stride[i]) as i64;
            rem %= stride[i];
        }
        let mut best = 0;
        for g in gens {
            if dominates(&x, g) {
                let j: usize = (0..n).map(|i| (x[i] - g[i]) as usize * stride[i]).sum();
                best = best.max(f[j] + 1);
            }
        }
        f[idx] = best;
        if (best as usize) < counts.len() {
            counts[best as usize] += 1;
        }
    }
    // H(k) = #{x : f(x) < k}.
    (1..=kmax as usize)
        .map(|k| counts[..k].iter().sum())
        .collect()
}

fn nth_difference(v: &[BigInt], start: usize, order: usize) -> BigInt {
    (0..=order)
        .map(|j| {
            let c = BigInt::from(binomial(order as u64, j as u64));
            let term = c * &v[start + j];
            if (order - j).is_multiple_of(2) {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Leading coefficient of the degree-`n` polynomial `H` eventually agrees
/// with, once `Δ^{n+1} H` vanishes at two consecutive starts.
pub fn leading_coefficient(values: &[u64], n: usize) -> Option<Q> {
    let v: Vec<BigInt> = values.iter().map(|&x| BigInt::from(x)).collect();
    (0..v.len().saturating_sub(n + 2))
        .find(|&k| {
            nth_difference(&v, k, n + 1).is_zero() && nth_difference(&v, k + 1, n + 1).is_zero()
        })
        .map(|k| Q::new(nth_difference(&v, k, n), factorial(n)))
}

fn solve(cols: &[&Vec<i64>], x: &[i64]) -> Option<Vec<Q>> {
    let n = x.len();
    let mut m: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut row: Vec<Q> = cols.iter().map(|c| Q::from_integer(c[i].into())).collect();
            row.push(Q::from_integer(x[i].into()));
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, piv);
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[c][c];
                let pivot_row = m[c].clone();
                for (dst, src) in m[r].iter_mut().zip(&pivot_row).skip(c) {
                    *dst -= &f * src;
                }
            }
        }
    }
    Some((0..n).map(|i| &m[i][n] / &m[i][i]).collect())
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if m < k {
        return vec![];
    }
    let mut out = subsets(m - 1, k);
    for mut s in subsets(m - 1, k - 1) {
        s.push(m - 1);
        out.push(s);
    }
    out
}

/// Carathéodory: `x ∈ cone(rays)` iff `x` is a nonnegative combination of
/// some `n` linearly independent rays.
pub fn in_cone(rays: &[Vec<i64>], x: &[i64]) -> bool {
    let n = x.len();
    subsets(rays.len(), n).iter().any(|s| {
        let cols: Vec<&Vec<i64>> = s.iter().map(|&i| &rays[i]).collect();
        solve(&cols, x).is_some_and(|c| c.iter().all(|v| !v.is_negative()))
    })
}

/// All sums of `k` generators (with repetition).
pub fn k_fold_sums(gens: &[Vec<i64>], k: u32) -> BTreeSet<Vec<i64>> {
    let n = gens[0].len();
    let mut sums: BTreeSet<Vec<i64>> = BTreeSet::from([vec![0; n]]);
    for _ in 0..k {
        sums = sums
            .iter()
            .flat_map(|s| {
                gens.iter()
                    .map(move |g| s.iter().zip(g).map(|(a, b)| a + b).collect())
            })
            .collect();
    }
    sums
}

/// `x ∈ I^k` for `I` generated by `gens` inside `cone(rays) ∩ Zⁿ`.
pub fn in_power(rays: &[Vec<i64>], gens: &[Vec<i64>], k: u32, x: &[i64]) -> bool {
    k_fold_sums(gens, k).iter().any(|s| {
        let d: Vec<i64> = x.iter().zip(s).map(|(a, b)| a - b).collect();
        in_cone(rays, &d)
    })
}

pub fn orthant_rays(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}
