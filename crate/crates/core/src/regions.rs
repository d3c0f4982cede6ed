//! Cobounded `C`-convex regions (Newton polyhedra) and their covolumes.
//!
//! A [`NewtonRegion`] is `Γ = conv(G) + C` for a finite generator set `G ⊆ C`.
//! Its complement `C \ Γ` is star-shaped about the origin: if `x ∈ C \ Γ` and
//! `0 < t ≤ 1` then `tx ∉ Γ`, otherwise `x ∈ tx + C ⊆ Γ`. So once the slice
//! `C ∩ {ℓ = T}` lies in `Γ`, all of `C ∩ ℓ_{≥T}` does, and
//! `covol(Γ) = vol(C ∩ ℓ_{≤T}) − vol(Γ ∩ ℓ_{≤T})`.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactgeom::cone::is_positive_on_cone;
use crate::exactgeom::polytope::factorial;
use crate::exactgeom::{
    clear_denominators, dd, fmt_point, linalg, primitive_int, Halfspace, LatticePoint,
    LinearFunctional, RatPoint, Rational, RationalCone, RationalPolytope,
};
use crate::roots::compare_root_sum;

/// Number of doublings allowed past the starting level, i.e. a cap of `2^64·T₀`.
const THRESHOLD_DOUBLINGS: u32 = 64;

/// `Γ = conv(G) + C` with its facets and a certified cobounded threshold.
#[derive(Clone, Debug)]
pub struct NewtonRegion {
    cone: RationalCone,
    ell: LinearFunctional,
    generators: Vec<RatPoint>,
    facets: Vec<Halfspace>,
    threshold: Rational,
}

impl PartialEq for NewtonRegion {
    fn eq(&self, other: &Self) -> bool {
        self.cone == other.cone && self.ell == other.ell && self.facets == other.facets
    }
}

impl Eq for NewtonRegion {}

impl NewtonRegion {
    /// Builds `conv(G) + C`. Fails with [`Error::NotCobounded`] if `C \ Γ` is
    /// unbounded, i.e. some ray of `C` is not dominated by `G`.
    pub fn new(
        cone: &RationalCone,
        generators: &[RatPoint],
        ell: &LinearFunctional,
    ) -> Result<Self> {
        let n = cone.dim();
        if generators.is_empty() {
            return Err(Error::EmptyInput("region generators"));
        }
        if ell.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: ell.dim(),
            });
        }
        if !is_positive_on_cone(ell, cone) {
            return Err(Error::FunctionalNotPositive);
        }
        for g in generators {
            if g.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: g.len(),
                });
            }
            if !cone.contains(g) {
                return Err(Error::PointOutsideCone(fmt_point(g)));
            }
        }

        // Facets of the homogenization cone{(1, g), (0, r)}, minus x₀ ≥ 0.
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(generators.len() + cone.rays().len());
        for g in generators {
            let mut h = Vec::with_capacity(n + 1);
            h.push(Rational::one());
            h.extend(g.iter().cloned());
            rows.push(primitive_int(&clear_denominators(&h)));
        }
        for r in cone.rays() {
            let mut h = Vec::with_capacity(n + 1);
            h.push(BigInt::zero());
            h.extend(r.0.iter().map(|&c| BigInt::from(c)));
            rows.push(h);
        }
        rows.sort();
        rows.dedup();
        let dual = dd::extreme_rays(&rows, n + 1)?;
        let mut facets = Vec::new();
        for y in dual {
            if y[1..].iter().all(Zero::is_zero) {
                continue;
            }
            let normal =
                LinearFunctional::new(y[1..].iter().cloned().map(Rational::from_integer).collect())
                    .expect("nonzero normal");
            facets.push(Halfspace::new(
                normal,
                -Rational::from_integer(y[0].clone()),
            ));
        }
        facets.sort();

        let mut vertices: Vec<RatPoint> = Vec::new();
        for g in generators {
            let tight: Vec<Vec<Rational>> = facets
                .iter()
                .filter(|h| h.is_tight(g))
                .map(|h| h.normal.coeffs().to_vec())
                .collect();
            if linalg::rank(&tight) == n {
                vertices.push(g.clone());
            }
        }
        vertices.sort();
        vertices.dedup();

        let mut region = NewtonRegion {
            cone: cone.clone(),
            ell: ell.clone(),
            generators: vertices,
            facets,
            threshold: Rational::zero(),
        };
        region.threshold = match region.cobounded_threshold() {
            Ok(t) => t,
            Err(Error::CapExceeded) => {
                return Err(Error::NotCobounded(
                    "generators do not dominate every ray of the cone".into(),
                ))
            }
            Err(e) => return Err(e),
        };
        Ok(region)
    }

    pub fn from_lattice(
        cone: &RationalCone,
        generators: &[LatticePoint],
        ell: &LinearFunctional,
    ) -> Result<Self> {
        let g: Vec<RatPoint> = generators.iter().map(LatticePoint::to_rational).collect();
        Self::new(cone, &g, ell)
    }

    /// `Γ = C`, the identity for Minkowski sums.
    pub fn whole_cone(cone: &RationalCone, ell: &LinearFunctional) -> Result<Self> {
        Self::new(cone, &[alloc::vec![Rational::zero(); cone.dim()]], ell)
    }

    pub fn dim(&self) -> usize {
        self.cone.dim()
    }

    pub fn cone(&self) -> &RationalCone {
        &self.cone
    }

    pub fn ell(&self) -> &LinearFunctional {
        &self.ell
    }

    /// The vertices of `Γ`: the input generators with redundant ones pruned.
    pub fn generators(&self) -> &[RatPoint] {
        &self.generators
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn threshold(&self) -> &Rational {
        &self.threshold
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.cone.contains(x) && self.facets.iter().all(|h| h.contains(x))
    }

    fn slice_in_region(&self, t: &Rational) -> bool {
        let ray_levels: Vec<(Vec<Rational>, Rational)> = self
            .cone
            .rays()
            .iter()
            .map(|r| (r.to_rational(), self.ell.eval_lattice(r)))
            .collect();
        self.facets.iter().all(|h| {
            ray_levels
                .iter()
                .map(|(r, lr)| t * h.normal.eval(r) / lr)
                .min()
                .is_some_and(|m| m >= h.offset)
        })
    }

    /// A level `T` with `C ∩ {ℓ = T} ⊆ Γ`, hence `C ∩ ℓ_{≥T} ⊆ Γ`.
    ///
    /// Starts at `T₀ = max ℓ(g)` and doubles; gives up with
    /// [`Error::CapExceeded`] beyond `2^64·T₀`.
    pub fn cobounded_threshold(&self) -> Result<Rational> {
        let mut t = self
            .generators
            .iter()
            .map(|g| self.ell.eval(g))
            .max()
            .unwrap_or_else(Rational::zero);
        if t.is_zero() {
            return if self.slice_in_region(&t) {
                Ok(t)
            } else {
                Err(Error::CapExceeded)
            };
        }
        let two = Rational::from_integer(BigInt::from(2));
        for _ in 0..=THRESHOLD_DOUBLINGS {
            if self.slice_in_region(&t) {
                return Ok(t);
            }
            t *= &two;
        }
        Err(Error::CapExceeded)
    }

    /// Exact covolume `vol(C \ Γ)`.
    pub fn covol(&self) -> Rational {
        self.covol_at(&self.threshold.clone())
            .expect("the stored threshold is certified")
    }

    /// `vol(C ∩ ℓ_{≤T}) − vol(Γ ∩ ℓ_{≤T})` for a level `T` at or above the
    /// certified threshold.
    pub fn covol_at(&self, t: &Rational) -> Result<Rational> {
        if *t < self.threshold {
            return Err(Error::NotCobounded(format!(
                "level {t} is below the certified threshold {}",
                self.threshold
            )));
        }
        if t.is_zero() {
            return Ok(Rational::zero());
        }
        let n = self.dim();
        let mut corners: Vec<RatPoint> = alloc::vec![alloc::vec![Rational::zero(); n]];
        for r in self.cone.rays() {
            let lr = self.ell.eval_lattice(r);
            corners.push(
                r.0.iter()
                    .map(|&c| Rational::from_integer(BigInt::from(c)) * t / &lr)
                    .collect(),
            );
        }
        let cone_slice = RationalPolytope::hull_vertices(&corners)?;

        let mut hs = self.facets.clone();
        let neg_ell = LinearFunctional::new(self.ell.coeffs().iter().map(|c| -c).collect())
            .expect("ell is nonzero");
        hs.push(Halfspace::new(neg_ell, -t.clone()));
        let region_slice = RationalPolytope::from_halfspaces(n, &hs)?;
        Ok(cone_slice.volume() - region_slice.volume())
    }

    fn check_compatible(&self, other: &NewtonRegion) -> Result<()> {
        if self.cone != other.cone {
            return Err(Error::ConeMismatch);
        }
        if self.ell != other.ell {
            return Err(Error::FunctionalMismatch);
        }
        Ok(())
    }

    /// `Γ₁ + Γ₂`, generated by pairwise sums of generators.
    pub fn minkowski_sum(&self, other: &NewtonRegion) -> Result<NewtonRegion> {
        self.check_compatible(other)?;
        let mut sums = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                sums.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        NewtonRegion::new(&self.cone, &sums, &self.ell)
    }

    /// `λΓ` for `λ > 0`.
    pub fn scale(&self, lambda: &Rational) -> Result<NewtonRegion> {
        if !lambda.is_positive() {
            return Err(Error::NonpositiveScalar);
        }
        let gens: Vec<RatPoint> = self
            .generators
            .iter()
            .map(|g| g.iter().map(|c| c * lambda).collect())
            .collect();
        NewtonRegion::new(&self.cone, &gens, &self.ell)
    }

    /// Bounded facets of `Γ`: those whose normal is positive on `C \ {0}`.
    pub fn newton_diagram(&self) -> Result<Vec<RationalPolytope>> {
        let mut faces = Vec::new();
        for h in &self.facets {
            let bounded = self
                .cone
                .rays()
                .iter()
                .all(|r| h.normal.eval(&r.to_rational()).is_positive());
            if !bounded {
                continue;
            }
            let on_face: Vec<RatPoint> = self
                .generators
                .iter()
                .filter(|g| h.is_tight(g))
                .cloned()
                .collect();
            faces.push(RationalPolytope::hull_vertices(&on_face)?);
        }
        Ok(faces)
    }
}

/// A region together with its covolume, computed once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoconvexBody {
    region: NewtonRegion,
    covolume: Rational,
}

impl CoconvexBody {
    pub fn new(region: NewtonRegion) -> Self {
        let covolume = region.covol();
        CoconvexBody { region, covolume }
    }

    pub fn region(&self) -> &NewtonRegion {
        &self.region
    }

    pub fn covolume(&self) -> &Rational {
        &self.covolume
    }
}

/// Minkowski sum of a nonempty list of compatible regions.
pub fn minkowski_sum_all(regions: &[&NewtonRegion]) -> Result<NewtonRegion> {
    let (first, rest) = regions.split_first().ok_or(Error::EmptyInput("regions"))?;
    rest.iter()
        .try_fold((*first).clone(), |acc, r| acc.minkowski_sum(r))
}

/// Mixed covolume by polarization:
/// `CV = (1/n!) Σ_{∅≠T⊆[n]} (−1)^{n−|T|} covol(Σ_{i∈T} Γᵢ)`.
pub fn mixed_covol(regions: &[NewtonRegion]) -> Result<Rational> {
    let first = regions.first().ok_or(Error::EmptyInput("regions"))?;
    let n = first.dim();
    if regions.len() != n {
        return Err(Error::WrongArity {
            expected: n,
            found: regions.len(),
        });
    }
    for r in &regions[1..] {
        first.check_compatible(r)?;
    }
    let mut total = Rational::zero();
    for mask in 1u32..(1 << n) {
        let chosen: Vec<&NewtonRegion> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| &regions[i])
            .collect();
        let c = minkowski_sum_all(&chosen)?.covol();
        if (n - chosen.len()).is_multiple_of(2) {
            total += c;
        } else {
            total -= c;
        }
    }
    Ok(total / Rational::from_integer(factorial(n)))
}

/// Brunn–Minkowski for covolumes, decided exactly:
/// the sign of `covol(Γ₁)^{1/n} + covol(Γ₂)^{1/n} − covol(Γ₁+Γ₂)^{1/n}`.
pub fn brunn_minkowski_covol(a: &NewtonRegion, b: &NewtonRegion) -> Result<Ordering> {
    let sum = a.minkowski_sum(b)?;
    Ok(compare_root_sum(
        &a.covol(),
        &b.covol(),
        &sum.covol(),
        a.dim() as u32,
    ))
}
