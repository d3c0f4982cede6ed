use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{
    clear_denominators, dd, linalg, primitive_int, Halfspace, LinearFunctional, RatPoint, Rational,
};
use crate::error::{Error, Result};

/// A bounded polytope with both descriptions.
///
/// `halfspaces` holds the facets of the polytope inside its affine hull
/// followed, for lower-dimensional polytopes, by opposite pairs of
/// halfspaces cutting out the affine hull. Vertices are sorted
/// lexicographically and every vertex is extreme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolytope {
    ambient: usize,
    affine_dim: usize,
    vertices: Vec<RatPoint>,
    halfspaces: Vec<Halfspace>,
    facet_count: usize,
}

impl RationalPolytope {
    /// Convex hull of a finite point set, with non-extreme points removed.
    pub fn hull_vertices(points: &[RatPoint]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyInput("hull points"))?;
        let n = first.len();
        for p in points {
            if p.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.len(),
                });
            }
        }
        let mut pts: Vec<RatPoint> = points.to_vec();
        pts.sort();
        pts.dedup();
        let p0 = pts[0].clone();
        let diffs: Vec<Vec<Rational>> = pts[1..]
            .iter()
            .map(|p| p.iter().zip(&p0).map(|(a, b)| a - b).collect())
            .collect();
        let mut reduced = diffs.clone();
        let pivots = if diffs.is_empty() {
            Vec::new()
        } else {
            linalg::rref(&mut reduced)
        };
        let d = pivots.len();

        let mut facets: Vec<Halfspace> = Vec::new();
        let mut vertices: Vec<RatPoint> = Vec::new();
        if d == 0 {
            vertices.push(p0.clone());
        } else {
            let rows: Vec<Vec<BigInt>> = pts
                .iter()
                .map(|p| {
                    let mut h = Vec::with_capacity(d + 1);
                    h.push(Rational::one());
                    h.extend(pivots.iter().map(|&c| p[c].clone()));
                    primitive_int(&clear_denominators(&h))
                })
                .collect();
            let dual = dd::extreme_rays(&rows, d + 1)?;
            for y in dual {
                let mut normal = alloc::vec![Rational::zero(); n];
                for (k, &c) in pivots.iter().enumerate() {
                    normal[c] = Rational::from_integer(y[k + 1].clone());
                }
                let offset = -Rational::from_integer(y[0].clone());
                let normal = LinearFunctional::new(normal).expect("facet normal is nonzero");
                facets.push(Halfspace::new(normal, offset));
            }
            facets.sort();
            for p in &pts {
                let tight: Vec<Vec<Rational>> = facets
                    .iter()
                    .filter(|h| h.is_tight(p))
                    .map(|h| {
                        pivots
                            .iter()
                            .map(|&c| h.normal.coeffs()[c].clone())
                            .collect()
                    })
                    .collect();
                if linalg::rank(&tight) == d {
                    vertices.push(p.clone());
                }
            }
        }

        let facet_count = facets.len();
        let mut halfspaces = facets;
        if d < n {
            let eqs = if diffs.is_empty() {
                (0..n)
                    .map(|i| {
                        let mut e = alloc::vec![Rational::zero(); n];
                        e[i] = Rational::one();
                        e
                    })
                    .collect()
            } else {
                linalg::nullspace(&diffs, n)
            };
            for w in eqs {
                let w: Vec<Rational> = primitive_int(&clear_denominators(&w))
                    .into_iter()
                    .map(Rational::from_integer)
                    .collect();
                let f = LinearFunctional::new(w).expect("nonzero equation");
                let c = f.eval(&p0);
                let neg = LinearFunctional::new(f.coeffs().iter().map(|x| -x).collect())
                    .expect("nonzero equation");
                halfspaces.push(Halfspace::new(f, c.clone()));
                halfspaces.push(Halfspace::new(neg, -c));
            }
        }
        Ok(RationalPolytope {
            ambient: n,
            affine_dim: d,
            vertices,
            halfspaces,
            facet_count,
        })
    }

    /// The polytope `{x : h.normal · x ≥ h.offset for all h}`.
    ///
    /// Fails with [`Error::Unbounded`] if the set is unbounded (or contains
    /// a line) and [`Error::EmptyPolytope`] if it is empty.
    pub fn from_halfspaces(n: usize, halfspaces: &[Halfspace]) -> Result<Self> {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(halfspaces.len() + 1);
        let mut x0 = alloc::vec![BigInt::zero(); n + 1];
        x0[0] = BigInt::one();
        rows.push(x0);
        for h in halfspaces {
            if h.normal.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: h.normal.dim(),
                });
            }
            let mut r = Vec::with_capacity(n + 1);
            r.push(-h.offset.clone());
            r.extend(h.normal.coeffs().iter().cloned());
            rows.push(primitive_int(&clear_denominators(&r)));
        }
        let rays = dd::extreme_rays(&rows, n + 1)?;
        let mut points = Vec::new();
        for y in rays {
            if y[0].is_zero() {
                return Err(Error::Unbounded);
            }
            let scale = Rational::from_integer(y[0].clone());
            points.push(
                y[1..]
                    .iter()
                    .map(|c| Rational::from_integer(c.clone()) / &scale)
                    .collect(),
            );
        }
        if points.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        Self::hull_vertices(&points)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.ambient
    }

    pub fn vertices(&self) -> &[RatPoint] {
        &self.vertices
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    /// Facets inside the affine hull (excludes the affine-hull equations).
    pub fn facets(&self) -> &[Halfspace] {
        &self.halfspaces[..self.facet_count]
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.halfspaces.iter().all(|h| h.contains(x))
    }

    /// Exact `n`-dimensional volume; zero for lower-dimensional polytopes.
    pub fn volume(&self) -> Rational {
        if !self.is_full_dimensional() {
            return Rational::zero();
        }
        let n = self.ambient;
        let mut total = Rational::zero();
        for simplex in self.triangulation() {
            let apex = &self.vertices[simplex[0]];
            let m: Vec<Vec<Rational>> = simplex[1..]
                .iter()
                .map(|&i| {
                    self.vertices[i]
                        .iter()
                        .zip(apex)
                        .map(|(a, b)| a - b)
                        .collect()
                })
                .collect();
            total += linalg::determinant(&m).abs();
        }
        total / Rational::from_integer(factorial(n))
    }

    /// Like [`volume`](Self::volume) but refuses lower-dimensional input.
    pub fn volume_checked(&self) -> Result<Rational> {
        if self.is_full_dimensional() {
            Ok(self.volume())
        } else {
            Err(Error::DegeneratePolytope)
        }
    }

    /// Pulling triangulation: cone the lexicographically first vertex of each
    /// face over the triangulated faces of it that avoid it. Returns vertex
    /// index lists of full-dimensional simplices, apex first.
    pub fn triangulation(&self) -> Vec<Vec<usize>> {
        let incidence: Vec<Vec<usize>> = self
            .facets()
            .iter()
            .map(|h| {
                (0..self.vertices.len())
                    .filter(|&i| h.is_tight(&self.vertices[i]))
                    .collect()
            })
            .collect();
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        let mut out = Vec::new();
        self.triangulate_face(&incidence, &all, self.affine_dim, &mut out);
        out
    }

    fn triangulate_face(
        &self,
        incidence: &[Vec<usize>],
        face: &[usize],
        d: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if d == 0 {
            out.push(alloc::vec![face[0]]);
            return;
        }
        let apex = face[0];
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for facet in incidence {
            let sub: Vec<usize> = face
                .iter()
                .copied()
                .filter(|i| facet.binary_search(i).is_ok())
                .collect();
            if sub.len() < d || sub.len() == face.len() || sub.contains(&apex) {
                continue;
            }
            let refs: Vec<&[Rational]> = sub.iter().map(|&i| self.vertices[i].as_slice()).collect();
            if linalg::affine_rank(&refs) != Some(d - 1) || !seen.insert(sub.clone()) {
                continue;
            }
            let mut inner = Vec::new();
            self.triangulate_face(incidence, &sub, d - 1, &mut inner);
            for mut s in inner {
                s.insert(0, apex);
                out.push(s);
            }
        }
    }
}

/// `n!`.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}
