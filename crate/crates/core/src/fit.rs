//! Exact polynomial fits used by the counting and polynomiality checks.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactgeom::{linalg, polytope::factorial, Rational};

/// `Δ^order` of `values` at offset `start`.
fn forward_difference(values: &[BigInt], start: usize, order: usize) -> BigInt {
    // Σ_j (-1)^{order-j} C(order, j) v[start+j]
    let mut acc = BigInt::zero();
    let mut binom = BigInt::one();
    for j in 0..=order {
        let term = &binom * &values[start + j];
        if (order - j).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
        binom = binom * BigInt::from(order - j) / BigInt::from(j + 1);
    }
    acc
}

/// A stabilized polynomial fit of an eventually polynomial sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizedFit {
    /// Leading coefficient of the degree-`n` polynomial.
    pub leading: Rational,
    /// First argument `K` of the window `K..=K+n` the polynomial was fit on.
    pub start: u32,
}

/// Fits a degree-`n` polynomial through `H(K), …, H(K+n)` and accepts it once
/// it predicts `H(K+n+1)` for two consecutive windows.
///
/// `values[i]` is `H(i + 1)`. Returns `None` if the sequence is too short to
/// certify stabilization.
pub fn stabilized_leading_coefficient(values: &[BigInt], n: usize) -> Option<StabilizedFit> {
    // A fit through K..=K+n predicts K+n+1 exactly when Δ^{n+1}H(K) = 0.
    let mut k = 0;
    while k + n + 2 < values.len() {
        if forward_difference(values, k, n + 1).is_zero()
            && forward_difference(values, k + 1, n + 1).is_zero()
        {
            let lead = Rational::new(forward_difference(values, k, n), factorial(n));
            return Some(StabilizedFit {
                leading: lead,
                start: (k + 1) as u32,
            });
        }
        k += 1;
    }
    None
}

/// A homogeneous polynomial of degree `n` in two variables,
/// `Σ_j coeffs[j] λ₁^j λ₂^{n-j}`, fit on the integer grid `[0, m]²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousFit {
    pub coeffs: Vec<Rational>,
    /// Grid points `(λ₁, λ₂)` where the fitted polynomial disagrees with the data.
    pub residual: Vec<(u32, u32)>,
}

impl HomogeneousFit {
    pub fn eval(&self, l1: &Rational, l2: &Rational) -> Rational {
        let n = self.coeffs.len() - 1;
        let mut acc = Rational::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            acc += c * pow(l1, j) * pow(l2, n - j);
        }
        acc
    }

    pub fn is_exact(&self) -> bool {
        self.residual.is_empty()
    }
}

fn pow(x: &Rational, e: usize) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * x)
}

/// Fits `grid[l1][l2]` (for `l1, l2 ∈ 0..=m`) by a homogeneous degree-`n`
/// polynomial. The coefficients come from interpolating `t ↦ P(t, 1)` at
/// `t = 0..=n`; every other grid point is then checked exactly.
pub fn fit_homogeneous_grid(grid: &[Vec<Rational>], n: usize) -> HomogeneousFit {
    let m = grid.len() - 1;
    assert!(m >= n, "grid too small for degree {n}");
    let vandermonde: Vec<Vec<Rational>> = (0..=n)
        .map(|t| {
            let t = Rational::from_integer(BigInt::from(t));
            (0..=n).map(|j| pow(&t, j)).collect()
        })
        .collect();
    let rhs: Vec<Rational> = (0..=n).map(|t| grid[t][1].clone()).collect();
    let coeffs = linalg::solve(&vandermonde, &rhs).expect("Vandermonde matrix is invertible");
    let mut fit = HomogeneousFit {
        coeffs,
        residual: Vec::new(),
    };
    for (i, row) in grid.iter().enumerate() {
        for (j, value) in row.iter().enumerate() {
            let li = Rational::from_integer(BigInt::from(i));
            let lj = Rational::from_integer(BigInt::from(j));
            if fit.eval(&li, &lj) != *value {
                fit.residual.push((i as u32, j as u32));
            }
        }
    }
    fit
}
