//! Seeded instance generation and the inequality and polynomiality suites.
//!
//! Violations are report data, never errors: a suite always runs every
//! instance and records an [`Outcome`] with the exact values it compared.

pub mod rng;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactgeom::polytope::factorial;
use crate::exactgeom::{rat, LatticePoint, LinearFunctional, Rational, RationalCone};
use crate::fit::fit_homogeneous_grid;
use crate::localalg::poly::poly_from_ints;
use crate::localalg::{
    lech_chain, lech_chain_monomial, MonomialIdealLocal, Poly, PolyLocalIdeal, TermOrder,
};
use crate::regions::{mixed_covol, NewtonRegion};
use crate::roots::compare_root_sum;
use crate::semigroups::{LatticeSemigroup, SemigroupIdealSet};

pub use rng::Rng;

/// Every `HOMOTHETIC_EVERY`-th instance (indices `4, 9, 14, …`) of the
/// comparison suites pairs a region with a dilate of itself.
pub const HOMOTHETIC_EVERY: usize = 5;

/// Grid `[0, GRID_MAX]²` for the polynomiality suite.
pub const GRID_MAX: u32 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeChoice {
    Orthant,
    Rays(Vec<LatticePoint>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceSpec {
    pub dim: usize,
    pub cone: ConeChoice,
    pub min_generators: usize,
    pub max_generators: usize,
    pub exponent_bound: i64,
    pub seed: u64,
}

impl InstanceSpec {
    /// Orthant, 3 to 6 generators, exponents up to 8 in the plane and 5 above.
    pub fn new(dim: usize, seed: u64) -> Self {
        InstanceSpec {
            dim,
            cone: ConeChoice::Orthant,
            min_generators: 3,
            max_generators: 6,
            exponent_bound: if dim <= 2 { 8 } else { 5 },
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::InvalidSpec("dimension must be positive".into()));
        }
        if self.min_generators == 0 || self.min_generators > self.max_generators {
            return Err(Error::InvalidSpec(format!(
                "bad generator range {}..={}",
                self.min_generators, self.max_generators
            )));
        }
        if self.exponent_bound < 1 {
            return Err(Error::InvalidSpec("exponent bound must be positive".into()));
        }
        self.semigroup().map(|_| ())
    }

    pub fn semigroup(&self) -> Result<LatticeSemigroup> {
        match &self.cone {
            ConeChoice::Orthant => Ok(LatticeSemigroup::orthant(self.dim)),
            ConeChoice::Rays(rays) => {
                for r in rays {
                    if r.dim() != self.dim {
                        return Err(Error::DimensionMismatch {
                            expected: self.dim,
                            found: r.dim(),
                        });
                    }
                }
                Ok(LatticeSemigroup::new(RationalCone::dual_description(rays)?))
            }
        }
    }
}

/// A primary staircase: a multiple of every extreme ray plus random points of
/// `S` in the box spanned by `exponent_bound · rays`.
pub fn random_staircase(
    spec: &InstanceSpec,
    sg: &LatticeSemigroup,
    rng: &mut Rng,
) -> SemigroupIdealSet {
    let n = spec.dim;
    let b = spec.exponent_bound;
    let total = rng.range(spec.min_generators as i64, spec.max_generators as i64) as usize;
    let rays = sg.cone().rays();
    let mut gens: Vec<LatticePoint> = rays.iter().map(|r| r.scaled(rng.range(1, b))).collect();
    let mut lo = alloc::vec![0i64; n];
    let mut hi = alloc::vec![0i64; n];
    for r in rays {
        for i in 0..n {
            lo[i] = lo[i].min(r[i] * b);
            hi[i] = hi[i].max(r[i] * b);
        }
    }
    let mut tries = 0;
    while gens.len() < total.max(rays.len()) && tries < 64 * total {
        tries += 1;
        let p = LatticePoint((0..n).map(|i| rng.range(lo[i], hi[i])).collect());
        if !p.is_zero() && sg.contains(&p) {
            gens.push(p);
        }
    }
    SemigroupIdealSet::new(sg, &gens).expect("generators lie in the semigroup")
}

/// A random `m`-primary monomial ideal, deterministic in `spec.seed`.
pub fn random_monomial_ideal(spec: &InstanceSpec) -> Result<MonomialIdealLocal> {
    spec.validate()?;
    let sg = spec.semigroup()?;
    let mut rng = Rng::new(spec.seed);
    MonomialIdealLocal::from_staircase(random_staircase(spec, &sg, &mut rng))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    BmCovol,
    AfCovol,
    BmMult,
    Polynomiality,
    Lech,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::BmCovol,
        Suite::AfCovol,
        Suite::BmMult,
        Suite::Polynomiality,
        Suite::Lech,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::BmCovol => "bm-covol",
            Suite::AfCovol => "af-covol",
            Suite::BmMult => "bm-mult",
            Suite::Polynomiality => "polynomiality",
            Suite::Lech => "lech",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Strict,
    Equality,
    Violation,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Strict => "strict",
            Outcome::Equality => "equality",
            Outcome::Violation => "violation",
        }
    }

    /// `lhs ≥ rhs` is the inequality under test.
    fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Greater => Outcome::Strict,
            Ordering::Equal => Outcome::Equality,
            Ordering::Less => Outcome::Violation,
        }
    }
}

/// What an instance was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceInput {
    /// Minimal generators of staircases, or generators of Newton regions.
    Staircases(Vec<Vec<LatticePoint>>),
    Polynomials(Vec<Poly>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub index: usize,
    pub homothetic: bool,
    pub input: InstanceInput,
    pub values: Vec<(String, Rational)>,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: Suite,
    pub spec: InstanceSpec,
    /// Sorted by index.
    pub certificates: Vec<Certificate>,
}

impl VerificationReport {
    pub fn instances(&self) -> usize {
        self.certificates.len()
    }

    pub fn violations(&self) -> Vec<usize> {
        self.indices(Outcome::Violation)
    }

    pub fn equalities(&self) -> Vec<usize> {
        self.indices(Outcome::Equality)
    }

    pub fn is_clean(&self) -> bool {
        self.violations().is_empty()
    }

    fn indices(&self, o: Outcome) -> Vec<usize> {
        self.certificates
            .iter()
            .filter(|c| c.outcome == o)
            .map(|c| c.index)
            .collect()
    }
}

fn is_homothetic(i: usize) -> bool {
    i % HOMOTHETIC_EVERY == HOMOTHETIC_EVERY - 1
}

fn named(name: &str, v: Rational) -> (String, Rational) {
    (name.to_string(), v)
}

/// A homothetic instance must come out as an equality.
fn settle(outcome: Outcome, homothetic: bool) -> Outcome {
    if homothetic && outcome != Outcome::Equality {
        Outcome::Violation
    } else {
        outcome
    }
}

fn region_gens(r: &NewtonRegion) -> Vec<LatticePoint> {
    r.generators()
        .iter()
        .map(|p| {
            LatticePoint(
                p.iter()
                    .map(|c| c.to_integer().to_i64().expect("lattice generator"))
                    .collect(),
            )
        })
        .collect()
}

struct Context {
    spec: InstanceSpec,
    sg: LatticeSemigroup,
    ell: LinearFunctional,
    rng: Rng,
}

impl Context {
    fn new(spec: &InstanceSpec) -> Result<Self> {
        spec.validate()?;
        let sg = spec.semigroup()?;
        let ell = sg.default_ell();
        Ok(Context {
            spec: spec.clone(),
            ell,
            sg,
            rng: Rng::new(spec.seed),
        })
    }

    fn staircase(&mut self) -> SemigroupIdealSet {
        random_staircase(&self.spec, &self.sg, &mut self.rng)
    }

    fn region(&mut self) -> Result<NewtonRegion> {
        self.staircase().region(&self.ell)
    }

    fn dilation(&mut self) -> i64 {
        self.rng.range(2, 3)
    }
}

pub fn run_suite(suite: Suite, spec: &InstanceSpec, count: usize) -> Result<VerificationReport> {
    match suite {
        Suite::BmCovol => suite_bm_covol(spec, count),
        Suite::AfCovol => suite_af_covol(spec, count),
        Suite::BmMult => suite_bm_mult(spec, count),
        Suite::Polynomiality => suite_polynomiality(spec, count),
        Suite::Lech => suite_lech(spec, count),
    }
}

/// `covol(Γ₁)^{1/n} + covol(Γ₂)^{1/n} ≥ covol(Γ₁+Γ₂)^{1/n}`.
pub fn suite_bm_covol(spec: &InstanceSpec, count: usize) -> Result<VerificationReport> {
    let mut ctx = Context::new(spec)?;
    let n = spec.dim as u32;
    let mut certs = Vec::with_capacity(count);
    for index in 0..count {
        let homothetic = is_homothetic(index);
        let a = ctx.region()?;
        let b = if homothetic {
            let m = ctx.dilation();
            a.scale(&rat(m))?
        } else {
            ctx.region()?
        };
        let sum = a.minkowski_sum(&b)?;
        let (ca, cb, cs) = (a.covol(), b.covol(), sum.covol());
        let outcome = settle(
            Outcome::from_ordering(compare_root_sum(&ca, &cb, &cs, n)),
            homothetic,
        );
        certs.push(Certificate {
            index,
            homothetic,
            input: InstanceInput::Staircases(alloc::vec![region_gens(&a), region_gens(&b)]),
            values: alloc::vec![
                named("covol_a", ca),
                named("covol_b", cb),
                named("covol_sum", cs)
            ],
            outcome,
        });
    }
    Ok(VerificationReport {
        suite: Suite::BmCovol,
        spec: spec.clone(),
        certificates: certs,
    })
}

/// `CV(Γ₁,Γ₁,Γ₃,…)·CV(Γ₂,Γ₂,Γ₃,…) ≥ CV(Γ₁,Γ₂,Γ₃,…)²`, with every trailing slot
/// filled by one further region `Γ₃`.
pub fn suite_af_covol(spec: &InstanceSpec, count: usize) -> Result<VerificationReport> {
    let mut ctx = Context::new(spec)?;
    let n = spec.dim;
    if n < 2 {
        return Err(Error::InvalidSpec(
            "mixed covolume comparisons need n ≥ 2".into(),
        ));
    }
    let mut certs = Vec::with_capacity(count);
    for index in 0..count {
        let homothetic = is_homothetic(index);
        let a = ctx.region()?;
        let b = if homothetic {
            let m = ctx.dilation();
            a.scale(&rat(m))?
        } else {
            ctx.region()?
        };
        let mut inputs = alloc::vec![region_gens(&a), region_gens(&b)];
        let rest: Vec<NewtonRegion> = if n > 2 {
            let c = ctx.region()?;
            inputs.push(region_gens(&c));
            alloc::vec![c; n - 2]
        } else {
            Vec::new()
        };
        let tuple = |x: &NewtonRegion, y: &NewtonRegion| {
            let mut t = alloc::vec![x.clone(), y.clone()];
            t.extend(rest.iter().cloned());
            mixed_covol(&t)
        };
        let aa = tuple(&a, &a)?;
        let bb = tuple(&b, &b)?;
        let ab = tuple(&a, &b)?;
        let lhs = &aa * &bb;
        let rhs = &ab * &ab;
        let outcome = settle(Outcome::from_ordering(lhs.cmp(&rhs)), homothetic);
        certs.push(Certificate {
            index,
            homothetic,
            input: InstanceInput::Staircases(inputs),
            values: alloc::vec![named("cv_11", aa), named("cv_22", bb), named("cv_12", ab)],
            outcome,
        });
    }
    Ok(VerificationReport {
        suite: Suite::AfCovol,
        spec: spec.clone(),
        certificates: certs,
    })
}

/// `e(a)^{1/n} + e(b)^{1/n} ≥ e(ab)^{1/n}` with `e = n!·covol`.
pub fn suite_bm_mult(spec: &InstanceSpec, count: usize) -> Result<VerificationReport> {
    let mut ctx = Context::new(spec)?;
    let n = spec.dim;
    let nf = Rational::from_integer(factorial(n));
    let mut certs = Vec::with_capacity(count);
    for index in 0..count {
        let homothetic = is_homothetic(index);
        let a = ctx.staircase();
        let b = if homothetic {
            let m = ctx.dilation();
            a.power(m as u32)
        } else {
            ctx.staircase()
        };
        let ab = a.sum(&b)?;
        let e =
            |i: &SemigroupIdealSet| -> Result<Rational> { Ok(i.region(&ctx.ell)?.covol() * &nf) };
        let (ea, eb, eab) = (e(&a)?, e(&b)?, e(&ab)?);
        let outcome = settle(
            Outcome::from_ordering(compare_root_sum(&ea, &eb, &eab, n as u32)),
            homothetic,
        );
        certs.push(Certificate {
            index,
            homothetic,
            input: InstanceInput::Staircases(alloc::vec![
                a.sorted_generators(),
                b.sorted_generators()
            ]),
            values: alloc::vec![named("e_a", ea), named("e_b", eb), named("e_ab", eab)],
            outcome,
        });
    }
    Ok(VerificationReport {
        suite: Suite::BmMult,
        spec: spec.clone(),
        certificates: certs,
    })
}

/// `grid[k₁][k₂]`.
pub type Grid = Vec<Vec<Rational>>;

/// The two grids of the polynomiality suite: `covol(λ₁Γ₁ + λ₂Γ₂)` from region
/// algebra and `e(k₁∗I₁ + k₂∗I₂)` from staircases, on `[0, m]²`.
pub fn polynomiality_grids(
    a: &SemigroupIdealSet,
    b: &SemigroupIdealSet,
    ell: &LinearFunctional,
    m: u32,
) -> Result<(Grid, Grid)> {
    let (ga, gb) = (a.region(ell)?, b.region(ell)?);
    let pa = a.powers_up_to(m);
    let pb = b.powers_up_to(m);
    let mut regions = Vec::new();
    let mut stairs = Vec::new();
    for k1 in 0..=m {
        let mut row_r = Vec::new();
        let mut row_s = Vec::new();
        for k2 in 0..=m {
            let r = match (k1, k2) {
                (0, 0) => rat(0),
                (0, _) => gb.scale(&rat(k2.into()))?.covol(),
                (_, 0) => ga.scale(&rat(k1.into()))?.covol(),
                _ => ga
                    .scale(&rat(k1.into()))?
                    .minkowski_sum(&gb.scale(&rat(k2.into()))?)?
                    .covol(),
            };
            let sa = if k1 == 0 {
                SemigroupIdealSet::whole(a.semigroup())
            } else {
                pa[k1 as usize - 1].clone()
            };
            let sb = if k2 == 0 {
                SemigroupIdealSet::whole(b.semigroup())
            } else {
                pb[k2 as usize - 1].clone()
            };
            row_r.push(r);
            row_s.push(sa.sum(&sb)?.region(ell)?.covol());
        }
        regions.push(row_r);
        stairs.push(row_s);
    }
    Ok((regions, stairs))
}

/// `(k₁, k₂) ↦ e(k₁∗I₁ + k₂∗I₂)` is a homogeneous polynomial of degree `n`.
pub fn suite_polynomiality(spec: &InstanceSpec, count: usize) -> Result<VerificationReport> {
    let mut ctx = Context::new(spec)?;
    let n = spec.dim;
    let mut certs = Vec::with_capacity(count);
    for index in 0..count {
        let a = ctx.staircase();
        let b = ctx.staircase();
        let (regions, stairs) = polynomiality_grids(&a, &b, &ctx.ell, GRID_MAX)?;
        let fit = fit_homogeneous_grid(&stairs, n);
        let exact = fit.is_exact() && regions == stairs;
        let mut values: Vec<(String, Rational)> = fit
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| (format!("c{j}"), c.clone()))
            .collect();
        values.push(named("residual_points", rat(fit.residual.len() as i64)));
        certs.push(Certificate {
            index,
            homothetic: false,
            input: InstanceInput::Staircases(alloc::vec![
                a.sorted_generators(),
                b.sorted_generators()
            ]),
            values,
            outcome: if exact {
                Outcome::Equality
            } else {
                Outcome::Violation
            },
        });
    }
    Ok(VerificationReport {
        suite: Suite::Polynomiality,
        spec: spec.clone(),
        certificates: certs,
    })
}

/// Fixed polynomial ideals checked by the Lech suite.
pub fn lech_corpus(n: usize) -> Vec<Vec<Poly>> {
    match n {
        2 => alloc::vec![
            alloc::vec![
                poly_from_ints(&[(1, &[1, 0]), (1, &[0, 2])]),
                poly_from_ints(&[(1, &[0, 3])])
            ],
            alloc::vec![
                poly_from_ints(&[(1, &[2, 0]), (1, &[0, 3])]),
                poly_from_ints(&[(1, &[1, 1])])
            ],
            alloc::vec![
                poly_from_ints(&[(1, &[2, 0]), (1, &[0, 2])]),
                poly_from_ints(&[(1, &[1, 1])])
            ],
            alloc::vec![
                poly_from_ints(&[(1, &[1, 0]), (1, &[0, 1]), (1, &[2, 0])]),
                poly_from_ints(&[(1, &[0, 2])]),
            ],
            alloc::vec![
                poly_from_ints(&[(1, &[3, 0]), (-1, &[0, 2])]),
                poly_from_ints(&[(1, &[1, 1])])
            ],
        ],
        3 => alloc::vec![
            alloc::vec![
                poly_from_ints(&[(1, &[1, 0, 0]), (1, &[0, 2, 0])]),
                poly_from_ints(&[(1, &[0, 1, 0]), (1, &[0, 0, 2])]),
                poly_from_ints(&[(1, &[0, 0, 3])]),
            ],
            alloc::vec![
                poly_from_ints(&[(1, &[1, 0, 0]), (1, &[0, 1, 1])]),
                poly_from_ints(&[(1, &[0, 2, 0])]),
                poly_from_ints(&[(1, &[0, 0, 2])]),
            ],
        ],
        _ => Vec::new(),
    }
}

fn chain_values(c: &crate::localalg::LechChain) -> Vec<(String, Rational)> {
    alloc::vec![
        named("e", c.e.clone()),
        named("e_exact", rat(c.e_exact as i64)),
        named("e_in", Rational::from_integer(c.e_in.clone())),
        named("colength", Rational::from_integer(BigInt::from(c.colength))),
        named("bound", Rational::from_integer(c.bound.clone())),
    ]
}

/// `e(a) ≤ e(in(a)) ≤ n!·dim R/a` on random monomial ideals, then on the
/// fixed polynomial corpus (indices continue after the random instances).
pub fn suite_lech(spec: &InstanceSpec, count: usize) -> Result<VerificationReport> {
    let mut ctx = Context::new(spec)?;
    let mut certs = Vec::with_capacity(count);
    for index in 0..count {
        let a = MonomialIdealLocal::from_staircase(ctx.staircase())?;
        let chain = lech_chain_monomial(&a)?;
        certs.push(Certificate {
            index,
            homothetic: false,
            input: InstanceInput::Staircases(alloc::vec![a.generators()]),
            values: chain_values(&chain),
            outcome: if chain.holds {
                Outcome::Strict
            } else {
                Outcome::Violation
            },
        });
    }
    if spec.cone == ConeChoice::Orthant {
        let order = TermOrder::standard(spec.dim);
        for (j, gens) in lech_corpus(spec.dim).into_iter().enumerate() {
            let a = PolyLocalIdeal::new(gens.clone(), order.clone())?;
            let chain = lech_chain(&a)?;
            certs.push(Certificate {
                index: count + j,
                homothetic: false,
                input: InstanceInput::Polynomials(gens),
                values: chain_values(&chain),
                outcome: if chain.holds {
                    Outcome::Strict
                } else {
                    Outcome::Violation
                },
            });
        }
    }
    Ok(VerificationReport {
        suite: Suite::Lech,
        spec: spec.clone(),
        certificates: certs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_deterministic_and_primary() {
        let spec = InstanceSpec::new(2, 42);
        let a = random_monomial_ideal(&spec).unwrap();
        assert_eq!(a, random_monomial_ideal(&spec).unwrap());
        assert!(a.colength().is_ok());
        assert!(a.generators().len() <= 6);
    }

    #[test]
    fn toric_generation() {
        let mut spec = InstanceSpec::new(2, 3);
        spec.cone = ConeChoice::Rays(alloc::vec![
            LatticePoint(alloc::vec![1, 0]),
            LatticePoint(alloc::vec![1, 2])
        ]);
        let a = random_monomial_ideal(&spec).unwrap();
        assert!(a.colength().is_ok());
    }

    #[test]
    fn small_suites_are_clean() {
        let spec = InstanceSpec::new(2, 7);
        for s in Suite::ALL {
            let r = run_suite(s, &spec, 10).unwrap();
            assert!(r.is_clean(), "{s}: {:?}", r.violations());
            if matches!(s, Suite::BmCovol | Suite::AfCovol | Suite::BmMult) {
                for i in [4, 9] {
                    assert!(r.equalities().contains(&i));
                }
            }
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
