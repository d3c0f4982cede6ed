//! JSON input schemas and their conversion into core types.
//!
//! Rational numbers are accepted as JSON integers or as strings `"p/q"`.

use std::path::Path;

use coconvex::exactgeom::cone::is_positive_on_cone;
use coconvex::localalg::{LocalIdeal, MonomialIdealLocal, Poly, PolyLocalIdeal, TermOrder};
use coconvex::semigroups::{LatticeSemigroup, SemigroupIdealSet};
use coconvex::{LatticePoint, LinearFunctional, NewtonRegion, RatPoint, Rational, RationalCone};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::CliError;

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Str(String),
}

impl Num {
    pub fn to_rational(&self) -> Result<Rational, CliError> {
        match self {
            Num::Int(v) => Ok(Rational::from_integer((*v).into())),
            Num::Str(s) => s
                .trim()
                .parse::<Rational>()
                .map_err(|_| CliError::Input(format!("not a rational number: {s:?}"))),
        }
    }
}

/// `{"cone_rays": [[..]], "generators": [[..]], "ell": [..]}`; the cone
/// defaults to the orthant and `ell` to the total degree (or the cone's
/// grading when total degree is not positive on it).
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionFile {
    #[serde(default)]
    pub cone_rays: Option<Vec<Vec<i64>>>,
    pub generators: Vec<Vec<Num>>,
    #[serde(default)]
    pub ell: Option<Vec<Num>>,
}

/// `{"cone_rays": [[..]], "min_generators": [[..]]}`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupIdealFile {
    #[serde(default)]
    pub cone_rays: Option<Vec<Vec<i64>>>,
    pub min_generators: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: Num,
    pub exp: Vec<i64>,
}

/// `{"terms": [{"coeff": "p/q", "exp": [a1, …, an]}]}`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderJson {
    pub ell: Vec<i64>,
    #[serde(default)]
    pub tiebreak: Option<Vec<Vec<i64>>>,
}

/// An ideal file: polynomial generators, or monomial exponents as a shorthand.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    pub dim: usize,
    #[serde(default)]
    pub order: Option<OrderJson>,
    #[serde(default)]
    pub generators: Option<Vec<PolyJson>>,
    #[serde(default)]
    pub monomials: Option<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealList {
    pub ideals: Vec<IdealFile>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum MixedInput {
    Regions { regions: Vec<RegionFile> },
    Ideals { ideals: Vec<IdealFile> },
}

/// Any input `hilbert-samuel` understands.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum CountingInput {
    Semigroup(SemigroupIdealFile),
    Ideal(IdealFile),
}

/// Either a region or a monomial ideal, for `newton` and `covolume`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum RegionInput {
    Region(RegionFile),
    Ideal(IdealFile),
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("malformed input {}: {e}", path.display())))
}

fn points(v: &[Vec<i64>]) -> Vec<LatticePoint> {
    v.iter().map(|p| LatticePoint(p.clone())).collect()
}

pub fn cone_from(rays: &Option<Vec<Vec<i64>>>, dim: usize) -> Result<RationalCone, CliError> {
    match rays {
        None => Ok(RationalCone::orthant(dim)),
        Some(r) => {
            for ray in r {
                if ray.len() != dim {
                    return Err(CliError::Input(format!(
                        "cone ray {ray:?} does not have dimension {dim}"
                    )));
                }
            }
            Ok(RationalCone::dual_description(&points(r))?)
        }
    }
}

fn default_ell(cone: &RationalCone) -> LinearFunctional {
    let total = LinearFunctional::total_degree(cone.dim());
    if is_positive_on_cone(&total, cone) {
        total
    } else {
        LinearFunctional::from_ints(&cone.grading()).expect("grading is nonzero")
    }
}

impl RegionFile {
    fn dim(&self) -> Result<usize, CliError> {
        self.generators
            .first()
            .map(Vec::len)
            .or_else(|| {
                self.cone_rays
                    .as_ref()
                    .and_then(|r| r.first().map(Vec::len))
            })
            .ok_or_else(|| CliError::Input("region has no generators".into()))
    }

    pub fn to_region(&self) -> Result<NewtonRegion, CliError> {
        let n = self.dim()?;
        let cone = cone_from(&self.cone_rays, n)?;
        let gens = self
            .generators
            .iter()
            .map(|g| {
                g.iter()
                    .map(Num::to_rational)
                    .collect::<Result<RatPoint, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let ell = match &self.ell {
            None => default_ell(&cone),
            Some(c) => {
                let coeffs = c
                    .iter()
                    .map(Num::to_rational)
                    .collect::<Result<Vec<_>, _>>()?;
                LinearFunctional::new(coeffs)
                    .ok_or_else(|| CliError::Input("ell must be nonzero".into()))?
            }
        };
        Ok(NewtonRegion::new(&cone, &gens, &ell)?)
    }
}

impl SemigroupIdealFile {
    pub fn to_ideal(&self) -> Result<SemigroupIdealSet, CliError> {
        let n = self
            .min_generators
            .first()
            .map(Vec::len)
            .ok_or_else(|| CliError::Input("semigroup ideal has no generators".into()))?;
        let sg = LatticeSemigroup::new(cone_from(&self.cone_rays, n)?);
        Ok(SemigroupIdealSet::new(&sg, &points(&self.min_generators))?)
    }
}

impl PolyJson {
    pub fn to_poly(&self, dim: usize) -> Result<Poly, CliError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.exp.len() != dim {
                return Err(CliError::Input(format!(
                    "exponent {:?} does not have dimension {dim}",
                    t.exp
                )));
            }
            terms.push((LatticePoint(t.exp.clone()), t.coeff.to_rational()?));
        }
        Ok(Poly::from_terms(terms))
    }
}

impl IdealFile {
    pub fn order(&self) -> Result<TermOrder, CliError> {
        Ok(match &self.order {
            None => TermOrder::standard(self.dim),
            Some(o) => match &o.tiebreak {
                None => TermOrder::with_ell(o.ell.clone())?,
                Some(t) => TermOrder::new(o.ell.clone(), t.clone())?,
            },
        })
    }

    /// Monomial generators are recognized whichever way they are written.
    pub fn to_ideal(&self) -> Result<LocalIdeal, CliError> {
        if self.dim == 0 {
            return Err(CliError::Input("dim must be positive".into()));
        }
        let order = self.order()?;
        if order.dim() != self.dim {
            return Err(CliError::Input("order dimension differs from dim".into()));
        }
        match (&self.monomials, &self.generators) {
            (Some(m), None) => {
                for e in m {
                    if e.len() != self.dim {
                        return Err(CliError::Input(format!(
                            "exponent {e:?} does not have dimension {}",
                            self.dim
                        )));
                    }
                }
                Ok(MonomialIdealLocal::new(self.dim, &points(m))?.into())
            }
            (None, Some(g)) => {
                let polys = g
                    .iter()
                    .map(|p| p.to_poly(self.dim))
                    .collect::<Result<Vec<_>, _>>()?;
                if polys.iter().all(|p| p.len() == 1) {
                    let exps: Vec<LatticePoint> = polys
                        .iter()
                        .map(|p| p.terms().next().expect("one term").0.clone())
                        .collect();
                    return Ok(MonomialIdealLocal::new(self.dim, &exps)?.into());
                }
                if polys.iter().any(Poly::is_zero) {
                    return Err(coconvex::Error::ZeroPolynomial.into());
                }
                Ok(PolyLocalIdeal::new(polys, order)?.into())
            }
            _ => Err(CliError::Input(
                "an ideal needs exactly one of \"generators\" or \"monomials\"".into(),
            )),
        }
    }

    pub fn to_monomial(&self) -> Result<MonomialIdealLocal, CliError> {
        match self.to_ideal()? {
            LocalIdeal::Monomial(m) => Ok(m),
            LocalIdeal::Poly(_) => Err(CliError::Input("expected a monomial ideal".into())),
        }
    }

    pub fn to_poly_ideal(&self) -> Result<PolyLocalIdeal, CliError> {
        match self.to_ideal()? {
            LocalIdeal::Poly(p) => Ok(p),
            LocalIdeal::Monomial(m) => Ok(m.to_poly_ideal(&self.order()?)?),
        }
    }
}
