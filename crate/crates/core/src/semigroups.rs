//! Lattice semigroups `S = C ∩ Zⁿ`, their ideals, and primary graded sequences.
//!
//! A semigroup ideal `I ⊆ S` (`I + S ⊆ I`) is stored by its staircase, the
//! antichain of minimal generators. `S \ I` is downward closed in the cone
//! order, so it is enumerated by walking from the origin along Hilbert basis
//! steps and stopping at members of `I`.

use alloc::boxed::Box;
use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactgeom::cone::is_positive_on_cone;
use crate::exactgeom::polytope::factorial;
use crate::exactgeom::{LatticePoint, LinearFunctional, RatPoint, Rational, RationalCone};
use crate::fit::{stabilized_leading_coefficient, StabilizedFit};
use crate::regions::{mixed_covol, NewtonRegion};

/// `S = C ∩ Zⁿ` for a strongly convex full-dimensional rational cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSemigroup {
    cone: RationalCone,
    grading: Vec<i64>,
    hilbert_basis: Vec<LatticePoint>,
    orthant: bool,
}

impl LatticeSemigroup {
    pub fn new(cone: RationalCone) -> Self {
        let grading = cone.grading();
        let orthant = cone.is_orthant();
        let mut s = LatticeSemigroup {
            cone,
            grading,
            hilbert_basis: Vec::new(),
            orthant,
        };
        s.hilbert_basis = if orthant {
            let n = s.dim();
            (0..n).map(|i| LatticePoint::unit(n, i)).collect()
        } else {
            s.compute_hilbert_basis()
        };
        s
    }

    pub fn orthant(n: usize) -> Self {
        Self::new(RationalCone::orthant(n))
    }

    pub fn cone(&self) -> &RationalCone {
        &self.cone
    }

    pub fn dim(&self) -> usize {
        self.cone.dim()
    }

    /// Integer functional positive on `C \ {0}` (sum of facet normals).
    pub fn grading(&self) -> &[i64] {
        &self.grading
    }

    pub fn grade(&self, x: &LatticePoint) -> i64 {
        x.dot(&self.grading)
    }

    pub fn hilbert_basis(&self) -> &[LatticePoint] {
        &self.hilbert_basis
    }

    pub fn contains(&self, x: &LatticePoint) -> bool {
        self.cone.contains_lattice(x)
    }

    /// The level functional used when none is given: total degree if it is
    /// positive on the cone, otherwise the grading.
    pub fn default_ell(&self) -> LinearFunctional {
        let total = LinearFunctional::total_degree(self.dim());
        if is_positive_on_cone(&total, &self.cone) {
            total
        } else {
            LinearFunctional::from_ints(&self.grading).expect("grading is nonzero")
        }
    }

    /// `x - g ∈ S`.
    pub fn dominates(&self, x: &LatticePoint, g: &LatticePoint) -> bool {
        if self.orthant {
            x.0.iter().zip(&g.0).all(|(a, b)| a >= b)
        } else {
            self.cone.dominates(x, g)
        }
    }

    /// All points of `S` with `ℓ(x) < bound`, sorted.
    pub fn points_below(&self, ell: &LinearFunctional, bound: &Rational) -> Vec<LatticePoint> {
        let n = self.dim();
        if *bound <= Rational::zero() {
            return Vec::new();
        }
        // C ∩ ℓ_{≤bound} is the hull of 0 and bound·r/ℓ(r); box it.
        let mut lo = alloc::vec![0i64; n];
        let mut hi = alloc::vec![0i64; n];
        for r in self.cone.rays() {
            let lr = ell.eval_lattice(r);
            for i in 0..n {
                let c = Rational::from_integer(BigInt::from(r[i])) * bound / &lr;
                let f = c.floor().to_integer().to_i64().expect("window fits in i64");
                let cl = c.ceil().to_integer().to_i64().expect("window fits in i64");
                lo[i] = lo[i].min(f);
                hi[i] = hi[i].max(cl);
            }
        }
        let mut out = Vec::new();
        let mut cur = lo.clone();
        loop {
            let p = LatticePoint(cur.clone());
            if self.contains(&p) && ell.eval_lattice(&p) < *bound {
                out.push(p);
            }
            let mut i = 0;
            loop {
                if i == n {
                    out.sort();
                    return out;
                }
                if cur[i] < hi[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = lo[i];
                i += 1;
            }
        }
    }

    fn compute_hilbert_basis(&self) -> Vec<LatticePoint> {
        // Every Hilbert basis element lies in a fundamental parallelepiped of
        // some simplicial subcone, so its grade is below the sum of the n
        // largest ray grades.
        let n = self.dim();
        let mut grades: Vec<i64> = self.cone.rays().iter().map(|r| self.grade(r)).collect();
        grades.sort_unstable_by(|a, b| b.cmp(a));
        let bound: i64 = grades.iter().take(n).sum::<i64>() + 1;
        let ell = LinearFunctional::from_ints(&self.grading).expect("grading is nonzero");
        let mut pts = self.points_below(&ell, &Rational::from_integer(BigInt::from(bound)));
        pts.retain(|p| !p.is_zero());
        pts.sort_by_key(|p| (self.grade(p), p.clone()));
        let mut basis: Vec<LatticePoint> = Vec::new();
        for x in &pts {
            let gx = self.grade(x);
            let reducible = pts
                .iter()
                .take_while(|y| self.grade(y) < gx)
                .any(|y| self.contains(&(x - y)));
            if !reducible {
                basis.push(x.clone());
            }
        }
        basis.sort();
        basis
    }
}

/// A semigroup ideal `I = ∪_g (g + S)` given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupIdealSet {
    semigroup: LatticeSemigroup,
    /// Sorted by grade, then lexicographically.
    min_generators: Vec<LatticePoint>,
}

impl SemigroupIdealSet {
    pub fn new(semigroup: &LatticeSemigroup, generators: &[LatticePoint]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyInput("ideal generators"));
        }
        for g in generators {
            if g.dim() != semigroup.dim() {
                return Err(Error::DimensionMismatch {
                    expected: semigroup.dim(),
                    found: g.dim(),
                });
            }
            if !semigroup.contains(g) {
                return Err(Error::PointOutsideCone(format!("{g}")));
            }
        }
        Ok(Self::from_candidates(semigroup, generators.to_vec()))
    }

    /// `I = S`.
    pub fn whole(semigroup: &LatticeSemigroup) -> Self {
        SemigroupIdealSet {
            semigroup: semigroup.clone(),
            min_generators: alloc::vec![LatticePoint::zero(semigroup.dim())],
        }
    }

    fn from_candidates(semigroup: &LatticeSemigroup, mut cands: Vec<LatticePoint>) -> Self {
        cands.sort_by_cached_key(|p| (semigroup.grade(p), p.clone()));
        cands.dedup();
        let mut kept: Vec<LatticePoint> = Vec::new();
        for x in cands {
            if !kept.iter().any(|g| semigroup.dominates(&x, g)) {
                kept.push(x);
            }
        }
        SemigroupIdealSet {
            semigroup: semigroup.clone(),
            min_generators: kept,
        }
    }

    pub fn semigroup(&self) -> &LatticeSemigroup {
        &self.semigroup
    }

    pub fn dim(&self) -> usize {
        self.semigroup.dim()
    }

    pub fn min_generators(&self) -> &[LatticePoint] {
        &self.min_generators
    }

    /// Minimal generators in lexicographic order.
    pub fn sorted_generators(&self) -> Vec<LatticePoint> {
        let mut g = self.min_generators.clone();
        g.sort();
        g
    }

    pub fn is_whole(&self) -> bool {
        self.min_generators.iter().any(LatticePoint::is_zero)
    }

    /// Staircase membership: `x - g ∈ S` for some minimal generator `g`.
    pub fn contains(&self, x: &LatticePoint) -> bool {
        if !self.semigroup.contains(x) {
            return false;
        }
        let gx = self.semigroup.grade(x);
        self.min_generators
            .iter()
            .take_while(|g| self.semigroup.grade(g) <= gx)
            .any(|g| self.semigroup.dominates(x, g))
    }

    fn check_same(&self, other: &SemigroupIdealSet) -> Result<()> {
        if self.semigroup.cone != other.semigroup.cone {
            return Err(Error::ConeMismatch);
        }
        Ok(())
    }

    /// `I + J`, the semigroup counterpart of the product of ideals.
    pub fn sum(&self, other: &SemigroupIdealSet) -> Result<SemigroupIdealSet> {
        self.check_same(other)?;
        let mut cands = Vec::with_capacity(self.min_generators.len() * other.min_generators.len());
        for a in &self.min_generators {
            for b in &other.min_generators {
                cands.push(a + b);
            }
        }
        Ok(Self::from_candidates(&self.semigroup, cands))
    }

    /// `k ∗ I = I + ⋯ + I` (k summands); `k = 0` gives `S`.
    pub fn power(&self, k: u32) -> SemigroupIdealSet {
        let mut acc = SemigroupIdealSet::whole(&self.semigroup);
        for _ in 0..k {
            acc = acc.sum(self).expect("same semigroup");
        }
        acc
    }

    /// `[1∗I, 2∗I, …, kmax∗I]`.
    pub fn powers_up_to(&self, kmax: u32) -> Vec<SemigroupIdealSet> {
        let mut out = Vec::with_capacity(kmax as usize);
        let mut acc = SemigroupIdealSet::whole(&self.semigroup);
        for _ in 0..kmax {
            acc = acc.sum(self).expect("same semigroup");
            out.push(acc.clone());
        }
        out
    }

    /// For each extreme ray `r`, the least `c ≥ 1` with `c·r ∈ I`.
    ///
    /// `S \ I` is finite iff every ray has such a multiple.
    pub fn ray_multiples(&self) -> Result<Vec<(LatticePoint, i64)>> {
        let cone = self.semigroup.cone();
        let mut out = Vec::new();
        for r in cone.rays() {
            let mut best: Option<i64> = None;
            for g in &self.min_generators {
                // c·r - g ∈ C  ⇔  c·u(r) ≥ u(g) for every facet u.
                let mut need = 1i64;
                let mut ok = true;
                for u in cone.facets() {
                    let ur = u.dot(&r.0);
                    let ug = u.dot(&g.0);
                    if ur == 0 {
                        if ug > 0 {
                            ok = false;
                            break;
                        }
                    } else {
                        need = need.max(Integer::div_ceil(&ug, &ur));
                    }
                }
                if ok {
                    best = Some(best.map_or(need, |b| b.min(need)));
                }
            }
            match best {
                Some(c) => out.push((r.clone(), c)),
                None => {
                    return Err(Error::NotPrimary(format!(
                        "no multiple of the ray {r} lies in the ideal"
                    )))
                }
            }
        }
        Ok(out)
    }

    /// A grade bound `B` with `S \ I ⊆ {grade < B}`.
    ///
    /// Points of `S \ I` in a simplicial subcone spanned by rays `rᵢ` are
    /// `Σ λᵢ rᵢ` with `λᵢ < cᵢ`, so `B` = the sum of the `n` largest `cᵢ·grade(rᵢ)`.
    pub fn complement_bound(&self) -> Result<i64> {
        let mut levels: Vec<i64> = self
            .ray_multiples()?
            .iter()
            .map(|(r, c)| c * self.semigroup.grade(r))
            .collect();
        levels.sort_unstable_by(|a, b| b.cmp(a));
        Ok(levels.iter().take(self.dim()).sum())
    }

    /// The finite set `S \ I`, sorted.
    pub fn complement_points(&self) -> Result<Vec<LatticePoint>> {
        let bound = self.complement_bound()?;
        let n = self.dim();
        let origin = LatticePoint::zero(n);
        if self.contains(&origin) {
            return Ok(Vec::new());
        }
        let mut seen: BTreeSet<LatticePoint> = BTreeSet::new();
        let mut queue: VecDeque<LatticePoint> = VecDeque::new();
        seen.insert(origin.clone());
        queue.push_back(origin);
        while let Some(x) = queue.pop_front() {
            for h in self.semigroup.hilbert_basis() {
                let y = &x + h;
                if seen.contains(&y) || self.contains(&y) {
                    continue;
                }
                if self.semigroup.grade(&y) >= bound {
                    return Err(Error::NotPrimary(format!(
                        "{y} escapes the counting window"
                    )));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// `#(S \ I)`.
    pub fn complement_count(&self) -> Result<u64> {
        if self.semigroup.orthant {
            let bound = self.complement_bound()?;
            let mut x = LatticePoint::zero(self.dim());
            return Ok(self.count_orthant(&mut x, 0, bound));
        }
        Ok(self.complement_points()?.len() as u64)
    }

    // Order-ideal walk for the orthant: once a point with trailing zeros lies
    // in I, so does every extension of its prefix.
    fn count_orthant(&self, x: &mut LatticePoint, i: usize, bound: i64) -> u64 {
        let n = self.dim();
        if i == n {
            return 1;
        }
        let mut total = 0;
        loop {
            if self.contains(x) || x.degree() >= bound {
                break;
            }
            total += self.count_orthant(x, i + 1, bound);
            x.0[i] += 1;
        }
        x.0[i] = 0;
        total
    }

    /// `conv(I) + C = conv(min generators) + C`.
    pub fn region(&self, ell: &LinearFunctional) -> Result<NewtonRegion> {
        NewtonRegion::from_lattice(self.semigroup.cone(), &self.min_generators, ell)
    }

    /// A level `t₀` with `(k∗I) ∩ ℓ_{≥k·t₀} = S ∩ ℓ_{≥k·t₀}` for every `k > 0`.
    ///
    /// Follows the constructive argument: take `t₁` above every point of
    /// `S \ I`, so `M₁ = S ∩ ℓ_{≥t₁} ⊆ I`. `M₁` is generated by its points
    /// below `2t₁ + H`, `H` the largest level of a Hilbert basis element, and
    /// `t₀` is chosen above all of them.
    pub fn primary_certificate(&self, ell: &LinearFunctional) -> Result<Rational> {
        let one = Rational::from_integer(BigInt::from(1));
        if !is_positive_on_cone(ell, self.semigroup.cone()) {
            return Err(Error::FunctionalNotPositive);
        }
        let complement = self.complement_points()?;
        if complement.is_empty() {
            return Ok(one);
        }
        let top = complement
            .iter()
            .map(|x| ell.eval_lattice(x))
            .max()
            .expect("nonempty");
        let t1 = top.floor() + &one;
        let h = self
            .semigroup
            .hilbert_basis()
            .iter()
            .map(|x| ell.eval_lattice(x))
            .max()
            .expect("nonempty Hilbert basis");
        let upper = &t1 * Rational::from_integer(BigInt::from(2)) + &h;
        let window_top = self
            .semigroup
            .points_below(ell, &upper)
            .iter()
            .map(|x| ell.eval_lattice(x))
            .filter(|v| *v >= t1)
            .max()
            .expect("the window holds a partial sum of Hilbert basis steps");
        Ok(window_top.floor() + one)
    }
}

/// How the members `I_k` of a graded sequence are produced.
#[derive(Clone, Debug)]
pub enum SequenceKind {
    /// `I_k = k ∗ I`.
    Powers(SemigroupIdealSet),
    /// `I_k = I'_k + I''_k`.
    Product(Box<PrimaryGradedSequence>, Box<PrimaryGradedSequence>),
    /// Explicit `I_1, …, I_m`; nothing is known past `m`.
    Prefix(Vec<SemigroupIdealSet>),
}

/// A primary graded sequence with its certificate `t₀` for the level
/// functional `ℓ`: `I_k ∩ ℓ_{≥k·t₀} = S ∩ ℓ_{≥k·t₀}`.
#[derive(Clone, Debug)]
pub struct PrimaryGradedSequence {
    kind: SequenceKind,
    t0: Rational,
    ell: LinearFunctional,
}

/// `Γ(I_•)` and whether it is exact or only an inner approximation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaRegion {
    pub region: NewtonRegion,
    pub exact: bool,
}

/// `lim H(k)/kⁿ`, exact or bracketed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceMultiplicity {
    Exact(Rational),
    /// For explicit prefixes: the covolume of the inner approximation of
    /// `Γ(I_•)` (an upper bound) and the last materialized `H(k)/kⁿ`.
    Bracketed {
        inner_covol: Rational,
        trend: Rational,
    },
}

impl PrimaryGradedSequence {
    pub fn powers(ideal: SemigroupIdealSet, ell: &LinearFunctional) -> Result<Self> {
        let t0 = ideal.primary_certificate(ell)?;
        Ok(PrimaryGradedSequence {
            kind: SequenceKind::Powers(ideal),
            t0,
            ell: ell.clone(),
        })
    }

    /// Explicit members `I_1, …, I_m`, checked for `I_k + I_l ⊆ I_{k+l}` and
    /// certified primary on the materialized range.
    pub fn prefix(members: Vec<SemigroupIdealSet>, ell: &LinearFunctional) -> Result<Self> {
        let first = members
            .first()
            .ok_or(Error::EmptyInput("sequence members"))?;
        for m in &members[1..] {
            first.check_same(m)?;
        }
        for k in 1..=members.len() {
            for l in 1..=members.len() - k {
                let s = members[k - 1].sum(&members[l - 1])?;
                let target = &members[k + l - 1];
                if !s.min_generators.iter().all(|g| target.contains(g)) {
                    return Err(Error::NotPrimary(format!(
                        "I_{k} + I_{l} is not contained in I_{}",
                        k + l
                    )));
                }
            }
        }
        let t0 = Self::search_t0(&members, ell)?;
        Ok(PrimaryGradedSequence {
            kind: SequenceKind::Prefix(members),
            t0,
            ell: ell.clone(),
        })
    }

    /// `I_k = I'_k + I''_k`.
    pub fn product(a: PrimaryGradedSequence, b: PrimaryGradedSequence) -> Result<Self> {
        if a.ell != b.ell {
            return Err(Error::FunctionalMismatch);
        }
        if a.semigroup().cone != b.semigroup().cone {
            return Err(Error::ConeMismatch);
        }
        let ell = a.ell.clone();
        match (a.power_base(), b.power_base()) {
            // k∗I' + k∗I'' = k∗(I' + I''), so the sum's certificate applies.
            (Some(x), Some(y)) => {
                let t0 = x.sum(&y)?.primary_certificate(&ell)?;
                Ok(PrimaryGradedSequence {
                    kind: SequenceKind::Product(Box::new(a), Box::new(b)),
                    t0,
                    ell,
                })
            }
            _ => {
                let len = a.materialized().min(b.materialized());
                let mut members = Vec::with_capacity(len as usize);
                for k in 1..=len {
                    members.push(a.member(k)?.sum(&b.member(k)?)?);
                }
                let t0 = Self::search_t0(&members, &ell)?;
                Ok(PrimaryGradedSequence {
                    kind: SequenceKind::Product(Box::new(a), Box::new(b)),
                    t0,
                    ell,
                })
            }
        }
    }

    // Smallest power of two (times the first member's certificate) that works
    // for every materialized member.
    fn search_t0(members: &[SemigroupIdealSet], ell: &LinearFunctional) -> Result<Rational> {
        let mut t0 = members[0].primary_certificate(ell)?;
        let two = Rational::from_integer(BigInt::from(2));
        for _ in 0..64 {
            let mut ok = true;
            for (i, m) in members.iter().enumerate() {
                if !primary_condition_holds(
                    m,
                    ell,
                    &(&t0 * Rational::from_integer(BigInt::from(i + 1))),
                )? {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Ok(t0);
            }
            t0 *= &two;
        }
        Err(Error::NotPrimary("no certificate level found".into()))
    }

    fn power_base(&self) -> Option<SemigroupIdealSet> {
        match &self.kind {
            SequenceKind::Powers(i) => Some(i.clone()),
            SequenceKind::Product(a, b) => {
                let (x, y) = (a.power_base()?, b.power_base()?);
                x.sum(&y).ok()
            }
            SequenceKind::Prefix(_) => None,
        }
    }

    /// Number of members available (`u32::MAX` when unbounded).
    pub fn materialized(&self) -> u32 {
        match &self.kind {
            SequenceKind::Powers(_) => u32::MAX,
            SequenceKind::Product(a, b) => a.materialized().min(b.materialized()),
            SequenceKind::Prefix(m) => m.len() as u32,
        }
    }

    pub fn kind(&self) -> &SequenceKind {
        &self.kind
    }

    pub fn t0(&self) -> &Rational {
        &self.t0
    }

    pub fn ell(&self) -> &LinearFunctional {
        &self.ell
    }

    pub fn semigroup(&self) -> &LatticeSemigroup {
        match &self.kind {
            SequenceKind::Powers(i) => i.semigroup(),
            SequenceKind::Product(a, _) => a.semigroup(),
            SequenceKind::Prefix(m) => m[0].semigroup(),
        }
    }

    pub fn dim(&self) -> usize {
        self.semigroup().dim()
    }

    /// `I_k` for `k ≥ 1`.
    pub fn member(&self, k: u32) -> Result<SemigroupIdealSet> {
        if k == 0 || k > self.materialized() {
            return Err(Error::InvalidSpec(format!(
                "member {k} is outside the materialized range 1..={}",
                self.materialized()
            )));
        }
        match &self.kind {
            SequenceKind::Powers(i) => Ok(i.power(k)),
            SequenceKind::Product(a, b) => a.member(k)?.sum(&b.member(k)?),
            SequenceKind::Prefix(m) => Ok(m[k as usize - 1].clone()),
        }
    }

    /// `[I_1, …, I_kmax]`.
    pub fn members(&self, kmax: u32) -> Result<Vec<SemigroupIdealSet>> {
        if let Some(base) = self.power_base() {
            if kmax <= self.materialized() {
                return Ok(base.powers_up_to(kmax));
            }
        }
        (1..=kmax).map(|k| self.member(k)).collect()
    }

    /// `H(k) = #(S \ I_k)` for `k = 1..=kmax`.
    pub fn hilbert_samuel_sequence(&self, kmax: u32) -> Result<Vec<u64>> {
        self.members(kmax)?
            .iter()
            .map(SemigroupIdealSet::complement_count)
            .collect()
    }

    /// `Γ(I_•) = conv(⋃_k I_k / k)`.
    ///
    /// Exact for powers (`Γ = conv(I)`) and products of exact sequences
    /// (Minkowski sum); for explicit prefixes an inner approximation.
    pub fn gamma_region(&self) -> Result<GammaRegion> {
        match &self.kind {
            SequenceKind::Powers(i) => Ok(GammaRegion {
                region: i.region(&self.ell)?,
                exact: true,
            }),
            SequenceKind::Product(a, b) => {
                let (ga, gb) = (a.gamma_region()?, b.gamma_region()?);
                Ok(GammaRegion {
                    region: ga.region.minkowski_sum(&gb.region)?,
                    exact: ga.exact && gb.exact,
                })
            }
            SequenceKind::Prefix(m) => {
                let mut pts: Vec<RatPoint> = Vec::new();
                for (k, member) in m.iter().enumerate() {
                    let kq = Rational::from_integer(BigInt::from(k + 1));
                    for g in member.min_generators() {
                        pts.push(
                            g.0.iter()
                                .map(|&c| Rational::from_integer(BigInt::from(c)) / &kq)
                                .collect(),
                        );
                    }
                }
                Ok(GammaRegion {
                    region: NewtonRegion::new(self.semigroup().cone(), &pts, &self.ell)?,
                    exact: false,
                })
            }
        }
    }

    /// `e(I_•) = lim H(k)/kⁿ = covol(Γ(I_•))`.
    pub fn multiplicity(&self) -> Result<SequenceMultiplicity> {
        let gamma = self.gamma_region()?;
        if gamma.exact {
            return Ok(SequenceMultiplicity::Exact(gamma.region.covol()));
        }
        let k = self.materialized();
        let h = self.member(k)?.complement_count()?;
        let kn = BigInt::from(k).pow(self.dim() as u32);
        Ok(SequenceMultiplicity::Bracketed {
            inner_covol: gamma.region.covol(),
            trend: Rational::new(BigInt::from(h), kn),
        })
    }

    /// Stabilized degree-`n` fit of `H(k)` over `k ≤ kmax`.
    pub fn hilbert_fit(&self, kmax: u32) -> Result<Option<StabilizedFit>> {
        let h: Vec<BigInt> = self
            .hilbert_samuel_sequence(kmax)?
            .into_iter()
            .map(BigInt::from)
            .collect();
        Ok(stabilized_leading_coefficient(&h, self.dim()))
    }

    /// Checks `I_k ∩ ℓ_{≥k·t₀} = S ∩ ℓ_{≥k·t₀}` on the window `ℓ < k·t₀ + width`.
    pub fn primary_condition_on_window(&self, k: u32, width: &Rational) -> Result<bool> {
        let member = self.member(k)?;
        let level = &self.t0 * Rational::from_integer(BigInt::from(k));
        let sg = self.semigroup();
        Ok(sg
            .points_below(&self.ell, &(&level + width))
            .iter()
            .filter(|x| self.ell.eval_lattice(x) >= level)
            .all(|x| member.contains(x)))
    }
}

/// `Γ(I_•)` together with the samples `(k, min generators of I_k)` it was
/// read off from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OkounkovData {
    pub region: NewtonRegion,
    pub exact: bool,
    pub samples: Vec<(u32, Vec<LatticePoint>)>,
}

impl OkounkovData {
    /// Every vertex of the region is `x/k` for a sampled `x ∈ I_k`.
    pub fn vertices_are_sampled(&self) -> bool {
        self.region.generators().iter().all(|v| {
            self.samples.iter().any(|(k, gens)| {
                let kq = Rational::from_integer(BigInt::from(*k));
                gens.iter().any(|g| {
                    g.0.iter()
                        .zip(v)
                        .all(|(&c, x)| Rational::from_integer(BigInt::from(c)) == x * &kq)
                })
            })
        })
    }
}

impl PrimaryGradedSequence {
    /// `Γ(I_•)` with the members `I_1, …, I_kmax` (capped at the materialized range).
    pub fn okounkov_data(&self, kmax: u32) -> Result<OkounkovData> {
        let gamma = self.gamma_region()?;
        let kmax = kmax.min(self.materialized()).max(1);
        let samples = self
            .members(kmax)?
            .into_iter()
            .enumerate()
            .map(|(i, m)| (i as u32 + 1, m.sorted_generators()))
            .collect();
        Ok(OkounkovData {
            region: gamma.region,
            exact: gamma.exact,
            samples,
        })
    }
}

/// `S ∩ ℓ_{≥level} ⊆ I`, decided through the finite complement.
fn primary_condition_holds(
    ideal: &SemigroupIdealSet,
    ell: &LinearFunctional,
    level: &Rational,
) -> Result<bool> {
    Ok(ideal
        .complement_points()?
        .iter()
        .all(|x| ell.eval_lattice(x) < *level))
}

/// `n!·CV(Γ(I_{1,•}), …, Γ(I_{n,•}))`.
pub fn mixed_multiplicity_semigroup(seqs: &[PrimaryGradedSequence]) -> Result<Rational> {
    let first = seqs.first().ok_or(Error::EmptyInput("sequences"))?;
    let n = first.dim();
    if seqs.len() != n {
        return Err(Error::WrongArity {
            expected: n,
            found: seqs.len(),
        });
    }
    let regions: Vec<NewtonRegion> = seqs
        .iter()
        .map(|s| s.gamma_region().map(|g| g.region))
        .collect::<Result<_>>()?;
    Ok(mixed_covol(&regions)? * Rational::from_integer(factorial(n)))
}
