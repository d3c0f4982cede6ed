use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{dd, linalg, primitive_int, rat, to_i64_vec, LatticePoint, LinearFunctional, Rational};
use crate::error::{Error, Result};

/// A strongly convex, full-dimensional rational polyhedral cone.
///
/// Rays are primitive integer vectors. Facets are primitive integer inner
/// normals `u` with `u · x ≥ 0` on the cone. Both lists are sorted, so two
/// cones are equal exactly when they are the same set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalCone {
    dim: usize,
    rays: Vec<LatticePoint>,
    facets: Vec<LatticePoint>,
}

impl RationalCone {
    /// The cone generated by `rays`, with its facet description.
    pub fn dual_description(rays: &[LatticePoint]) -> Result<Self> {
        let first = rays.first().ok_or(Error::EmptyInput("cone rays"))?;
        let n = first.dim();
        for r in rays {
            if r.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: r.dim(),
                });
            }
        }
        let mut gens: Vec<Vec<BigInt>> = rays
            .iter()
            .filter(|r| !r.is_zero())
            .map(|r| primitive_int(&r.to_bigint()))
            .collect();
        gens.sort();
        gens.dedup();
        let as_rat: Vec<Vec<Rational>> = gens
            .iter()
            .map(|g| g.iter().cloned().map(Rational::from_integer).collect())
            .collect();
        let mut reduced = as_rat.clone();
        let pivots = linalg::rref(&mut reduced);
        if pivots.len() < n {
            // Decide strong convexity inside the linear span first: project
            // onto the pivot coordinates, which is injective on the span.
            let projected: Vec<Vec<BigInt>> = gens
                .iter()
                .map(|g| pivots.iter().map(|&p| g[p].clone()).collect())
                .collect();
            let inner = dd::extreme_rays(&projected, pivots.len())?;
            let inner_rat: Vec<Vec<Rational>> = inner
                .iter()
                .map(|f| f.iter().cloned().map(Rational::from_integer).collect())
                .collect();
            if linalg::rank(&inner_rat) < pivots.len() {
                return Err(Error::NotStronglyConvex);
            }
            return Err(Error::NotFullDimensional);
        }
        let facets = dd::extreme_rays(&gens, n)?;
        let facet_rat: Vec<Vec<Rational>> = facets
            .iter()
            .map(|f| f.iter().cloned().map(Rational::from_integer).collect())
            .collect();
        if linalg::rank(&facet_rat) < n {
            return Err(Error::NotStronglyConvex);
        }

        // Keep only extreme generators: those lying on n-1 independent facets.
        let mut extreme = Vec::new();
        for g in &gens {
            let tight: Vec<Vec<Rational>> = facets
                .iter()
                .zip(&facet_rat)
                .filter(|(f, _)| super::dot_int(f, g).is_zero())
                .map(|(_, fr)| fr.clone())
                .collect();
            if linalg::rank(&tight) + 1 == n {
                extreme.push(g.clone());
            }
        }
        let to_points = |v: Vec<Vec<BigInt>>| -> Vec<LatticePoint> {
            v.into_iter()
                .map(|c| LatticePoint(to_i64_vec(&c).expect("cone data fits in i64")))
                .collect()
        };
        let mut rays = to_points(extreme);
        rays.sort();
        let mut facets = to_points(facets);
        facets.sort();
        Ok(RationalCone {
            dim: n,
            rays,
            facets,
        })
    }

    /// The positive orthant `R^n_{≥0}`.
    pub fn orthant(n: usize) -> Self {
        let mut units: Vec<LatticePoint> = (0..n).map(|i| LatticePoint::unit(n, i)).collect();
        units.sort();
        RationalCone {
            dim: n,
            rays: units.clone(),
            facets: units,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[LatticePoint] {
        &self.rays
    }

    pub fn facets(&self) -> &[LatticePoint] {
        &self.facets
    }

    pub fn facet_functionals(&self) -> Vec<LinearFunctional> {
        self.facets
            .iter()
            .map(|f| LinearFunctional::from_ints(&f.0).expect("facets are nonzero"))
            .collect()
    }

    pub fn is_orthant(&self) -> bool {
        *self == Self::orthant(self.dim)
    }

    pub fn contains_lattice(&self, x: &LatticePoint) -> bool {
        self.facets.iter().all(|f| f.dot(&x.0) >= 0)
    }

    /// `x - g ∈ C` without allocating.
    pub fn dominates(&self, x: &LatticePoint, g: &LatticePoint) -> bool {
        self.facets.iter().all(|f| {
            f.0.iter()
                .zip(x.0.iter().zip(&g.0))
                .map(|(c, (a, b))| c * (a - b))
                .sum::<i64>()
                >= 0
        })
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.facets.iter().all(|f| {
            let v: Rational = f.0.iter().zip(x).map(|(&c, xi)| xi * BigInt::from(c)).sum();
            !v.is_negative()
        })
    }

    /// Sum of the facet normals. Strictly positive on `C \ {0}` because
    /// the cone is strongly convex.
    pub fn grading(&self) -> Vec<i64> {
        let mut g = alloc::vec![0; self.dim];
        for f in &self.facets {
            for (gi, fi) in g.iter_mut().zip(&f.0) {
                *gi += fi;
            }
        }
        g
    }
}

/// `true` iff `ℓ(r) > 0` for every ray of `C`, i.e. `C ⊆ ℓ_{≥0}` and `C`
/// meets `ℓ = 0` only at the origin.
pub fn is_positive_on_cone(ell: &LinearFunctional, cone: &RationalCone) -> bool {
    ell.dim() == cone.dim() && cone.rays().iter().all(|r| ell.eval_lattice(r) > rat(0))
}
