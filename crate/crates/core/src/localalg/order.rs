use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exactgeom::linalg::rank;
use crate::exactgeom::{rat, LatticePoint, LinearFunctional, Rational};

/// A monomial order refining a positive level functional `ℓ`.
///
/// Exponents compare by the key `(ℓ(α), t₁(α), …, t_{n-1}(α))`; the smaller
/// key is the lower term. The key functionals have full rank, so this is a
/// total order on `Zⁿ` compatible with addition, and a well-order on `Nⁿ`
/// because `ℓ` has positive integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    ell: Vec<i64>,
    tiebreak: Vec<Vec<i64>>,
}

impl TermOrder {
    pub fn new(ell: Vec<i64>, tiebreak: Vec<Vec<i64>>) -> Result<Self> {
        let n = ell.len();
        if n == 0 {
            return Err(Error::InvalidOrder("empty level functional".into()));
        }
        if ell.iter().any(|&c| c <= 0) {
            return Err(Error::InvalidOrder(format!(
                "level functional {ell:?} needs positive integer coefficients"
            )));
        }
        if tiebreak.len() + 1 != n {
            return Err(Error::InvalidOrder(format!(
                "expected {} tiebreak functionals, got {}",
                n - 1,
                tiebreak.len()
            )));
        }
        for t in &tiebreak {
            if t.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: t.len(),
                });
            }
        }
        let rows: Vec<Vec<Rational>> = core::iter::once(&ell)
            .chain(tiebreak.iter())
            .map(|r| r.iter().map(|&c| rat(c)).collect())
            .collect();
        if rank(&rows) < n {
            return Err(Error::InvalidOrder(
                "key functionals are linearly dependent".into(),
            ));
        }
        Ok(TermOrder { ell, tiebreak })
    }

    /// `ℓ = x₁ + ⋯ + xₙ`, ties broken by `α₁`, then `α₂`, …
    pub fn standard(n: usize) -> Self {
        Self::with_ell(alloc::vec![1; n]).expect("total degree is a valid level")
    }

    /// `ℓ` with the default tiebreak `e₁, …, e_{n-1}`.
    pub fn with_ell(ell: Vec<i64>) -> Result<Self> {
        let n = ell.len();
        let tiebreak = (0..n.saturating_sub(1))
            .map(|i| LatticePoint::unit(n, i).0)
            .collect();
        Self::new(ell, tiebreak)
    }

    pub fn dim(&self) -> usize {
        self.ell.len()
    }

    pub fn ell(&self) -> &[i64] {
        &self.ell
    }

    pub fn tiebreak(&self) -> &[Vec<i64>] {
        &self.tiebreak
    }

    pub fn ell_functional(&self) -> LinearFunctional {
        LinearFunctional::from_ints(&self.ell).expect("positive coefficients")
    }

    /// Largest coefficient of `ℓ`.
    pub fn ell_max(&self) -> i64 {
        *self.ell.iter().max().expect("nonempty")
    }

    pub fn level(&self, a: &LatticePoint) -> i64 {
        a.dot(&self.ell)
    }

    pub fn key(&self, a: &LatticePoint) -> Vec<i64> {
        core::iter::once(&self.ell)
            .chain(self.tiebreak.iter())
            .map(|t| a.dot(t))
            .collect()
    }

    pub fn cmp(&self, a: &LatticePoint, b: &LatticePoint) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }
}
