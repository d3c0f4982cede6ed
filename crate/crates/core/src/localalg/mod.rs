//! Primary ideals in the polynomial ring over `Q` localized at the origin.
//!
//! A term order refining a positive level functional gives the lowest-term
//! valuation `v(f) = min{α : c_α ≠ 0}`. Its value set on an `m`-primary ideal
//! `a` is the initial staircase `I(a)`, and `dim R/a = #(Nⁿ \ I(a))`.
//!
//! Since `a ⊇ m^{m₀}`, everything reduces to the finite-dimensional quotient
//! `R/m^N` where localization acts trivially: the image of `a^k` in `R/m^N`
//! (`N = k·m₀`) is spanned by the truncated multiples `x^β·g₁⋯g_k`, and
//! `I(a^k)` is the pivot set of that span together with all exponents of
//! degree `≥ N`.

mod echelon;
pub mod order;
pub mod poly;

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactgeom::polytope::factorial;
use crate::exactgeom::{LatticePoint, LinearFunctional, Rational};
use crate::fit::{stabilized_leading_coefficient, StabilizedFit};
use crate::regions::{mixed_covol, NewtonRegion};
use crate::semigroups::{LatticeSemigroup, SemigroupIdealSet};

pub use order::TermOrder;
pub use poly::Poly;

/// Default search cap for [`mprimary_exponent`].
pub const DEFAULT_M0_CAP: u32 = 32;

/// `v(f)`, the lowest exponent of `f` under `ord`.
pub fn valuation(f: &Poly, ord: &TermOrder) -> Result<LatticePoint> {
    f.lowest_term(ord).map(|t| t.0)
}

fn check_generators(gens: &[Poly], n: usize) -> Result<()> {
    if gens.is_empty() {
        return Err(Error::EmptyInput("ideal generators"));
    }
    for g in gens {
        match g.dim() {
            None => return Err(Error::ZeroPolynomial),
            Some(d) if d != n => {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: d,
                })
            }
            _ => {}
        }
        if g.terms().any(|(e, _)| e.0.iter().any(|&c| c < 0)) {
            return Err(Error::PointOutsideCone(format!("{g}")));
        }
        if g.has_constant_term() {
            return Err(Error::NotInMaximalIdeal);
        }
    }
    Ok(())
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Smallest `d ≤ cap` with `m^d ⊆ (gens) + m^{d+1}`, hence `m^d ⊆ (gens)`.
///
/// Eliminating in a degree-first order, the pivots of degree `d` count
/// `dim (a ∩ m^d + m^{d+1}) / m^{d+1}`, so the test is that all degree-`d`
/// monomials are pivots.
pub fn mprimary_exponent(gens: &[Poly], ord: &TermOrder, cap: u32) -> Result<u32> {
    let n = ord.dim();
    check_generators(gens, n)?;
    for d in 1..=cap {
        let piv = echelon::pivots_with_key(gens, n, d as i64 + 1, |e| (e.degree(), ord.key(e)));
        let top = piv.iter().filter(|e| e.degree() == d as i64).count();
        if BigInt::from(top) == binomial(d as u64 + n as u64 - 1, n as u64 - 1) {
            return Ok(d);
        }
    }
    Err(Error::NotPrimaryWithinCap { cap })
}

/// Pivot exponents of the span of `x^β·gᵢ` modulo `m^d`, eliminating lowest
/// terms under `ord`. Each pivot is `v(f)` for some `f` in the ideal.
pub fn truncated_echelon(gens: &[Poly], ord: &TermOrder, d: i64) -> BTreeSet<LatticePoint> {
    echelon::pivots_with_key(gens, ord.dim(), d, |e| ord.key(e))
}

/// An `m`-primary ideal generated by polynomials, with `m^{m₀} ⊆ a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyLocalIdeal {
    generators: Vec<Poly>,
    order: TermOrder,
    m0: u32,
}

impl PolyLocalIdeal {
    pub fn new(generators: Vec<Poly>, order: TermOrder) -> Result<Self> {
        Self::with_cap(generators, order, DEFAULT_M0_CAP)
    }

    pub fn with_cap(generators: Vec<Poly>, order: TermOrder, cap: u32) -> Result<Self> {
        let m0 = mprimary_exponent(&generators, &order, cap)?;
        Ok(PolyLocalIdeal {
            generators,
            order,
            m0,
        })
    }

    pub fn dim(&self) -> usize {
        self.order.dim()
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn m0(&self) -> u32 {
        self.m0
    }

    /// `a·b`; requires a common term order.
    pub fn product(&self, other: &PolyLocalIdeal) -> Result<PolyLocalIdeal> {
        if self.order != other.order {
            return Err(Error::InvalidOrder(
                "ideals carry different term orders".into(),
            ));
        }
        let mut gens: Vec<Poly> = Vec::new();
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f.mul(g));
            }
        }
        gens.sort();
        gens.dedup();
        // m^{m₀(a)+m₀(b)} ⊆ ab bounds the search.
        let m0 = mprimary_exponent(&gens, &self.order, self.m0 + other.m0)?;
        Ok(PolyLocalIdeal {
            generators: gens,
            order: self.order.clone(),
            m0,
        })
    }

    /// Products of all `k`-element multisets of generators, modulo `m^d`.
    fn power_generators(&self, k: u32, d: i64) -> Vec<Poly> {
        let r = self.generators.len();
        let mut out: Vec<Poly> = Vec::new();
        let mut idx = alloc::vec![0usize; k as usize];
        loop {
            let mut p = Poly::monomial(LatticePoint::zero(self.dim()), Rational::one());
            for &i in &idx {
                p = p.mul(&self.generators[i]).truncate(d);
            }
            if !p.is_zero() {
                out.push(p);
            }
            // Next nondecreasing index tuple.
            let mut j = k as usize;
            loop {
                if j == 0 {
                    out.sort();
                    out.dedup();
                    return out;
                }
                j -= 1;
                if idx[j] + 1 < r {
                    let v = idx[j] + 1;
                    for t in &mut idx[j..] {
                        *t = v;
                    }
                    break;
                }
            }
        }
    }
}

/// `I(a^k) = {v(f) : f ∈ a^k}`, from the truncated echelon at `N = k·m₀`
/// together with every exponent of degree `≥ N` (as `m^N ⊆ a^k`).
pub fn initial_semigroup_ideal(a: &PolyLocalIdeal, k: u32) -> Result<SemigroupIdealSet> {
    let n = a.dim();
    let sg = LatticeSemigroup::orthant(n);
    if k == 0 {
        return Ok(SemigroupIdealSet::whole(&sg));
    }
    let d = i64::from(k) * i64::from(a.m0);
    let gens = a.power_generators(k, d);
    let mut cands: Vec<LatticePoint> = truncated_echelon(&gens, &a.order, d).into_iter().collect();
    cands.extend(
        poly::monomials_below(n, d + 1)
            .into_iter()
            .filter(|e| e.degree() == d),
    );
    SemigroupIdealSet::new(&sg, &cands)
}

/// A monomial ideal, stored as its exponent staircase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdealLocal {
    staircase: SemigroupIdealSet,
}

impl MonomialIdealLocal {
    /// The ideal `(x^g : g ∈ gens)` in `n` variables.
    pub fn new(n: usize, gens: &[LatticePoint]) -> Result<Self> {
        if gens.iter().any(LatticePoint::is_zero) {
            return Err(Error::NotInMaximalIdeal);
        }
        Self::from_staircase(SemigroupIdealSet::new(&LatticeSemigroup::orthant(n), gens)?)
    }

    /// Any primary staircase, including ones over a toric cone.
    pub fn from_staircase(staircase: SemigroupIdealSet) -> Result<Self> {
        staircase.ray_multiples()?;
        Ok(MonomialIdealLocal { staircase })
    }

    pub fn dim(&self) -> usize {
        self.staircase.dim()
    }

    pub fn staircase(&self) -> &SemigroupIdealSet {
        &self.staircase
    }

    pub fn generators(&self) -> Vec<LatticePoint> {
        self.staircase.sorted_generators()
    }

    pub fn product(&self, other: &MonomialIdealLocal) -> Result<MonomialIdealLocal> {
        Ok(MonomialIdealLocal {
            staircase: self.staircase.sum(&other.staircase)?,
        })
    }

    pub fn power(&self, k: u32) -> MonomialIdealLocal {
        MonomialIdealLocal {
            staircase: self.staircase.power(k),
        }
    }

    /// `dim R/a`, counted on the staircase.
    pub fn colength(&self) -> Result<u64> {
        self.staircase.complement_count()
    }

    /// The Newton region `conv(exponents) + C`.
    pub fn region(&self) -> Result<NewtonRegion> {
        let ell = self.staircase.semigroup().default_ell();
        self.staircase.region(&ell)
    }

    /// `e(a) = n!·covol(Γ(a))`.
    pub fn multiplicity(&self) -> Result<BigInt> {
        multiplicity(self)
    }

    /// The same ideal with polynomial generators, for the echelon engine.
    pub fn to_poly_ideal(&self, order: &TermOrder) -> Result<PolyLocalIdeal> {
        if !self.staircase.semigroup().cone().is_orthant() {
            return Err(Error::ConeMismatch);
        }
        let gens = self
            .generators()
            .into_iter()
            .map(|g| Poly::monomial(g, Rational::one()))
            .collect();
        PolyLocalIdeal::new(gens, order.clone())
    }
}

/// Either kind of `m`-primary ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalIdeal {
    Monomial(MonomialIdealLocal),
    Poly(PolyLocalIdeal),
}

impl From<MonomialIdealLocal> for LocalIdeal {
    fn from(a: MonomialIdealLocal) -> Self {
        LocalIdeal::Monomial(a)
    }
}

impl From<PolyLocalIdeal> for LocalIdeal {
    fn from(a: PolyLocalIdeal) -> Self {
        LocalIdeal::Poly(a)
    }
}

impl LocalIdeal {
    pub fn dim(&self) -> usize {
        match self {
            LocalIdeal::Monomial(m) => m.dim(),
            LocalIdeal::Poly(p) => p.dim(),
        }
    }

    /// The initial staircase `I(a^k)`.
    pub fn initial_staircase(&self, k: u32) -> Result<SemigroupIdealSet> {
        match self {
            LocalIdeal::Monomial(m) => Ok(m.staircase.power(k)),
            LocalIdeal::Poly(p) => initial_semigroup_ideal(p, k),
        }
    }

    pub fn product(&self, other: &LocalIdeal) -> Result<LocalIdeal> {
        match (self, other) {
            (LocalIdeal::Monomial(a), LocalIdeal::Monomial(b)) => Ok(a.product(b)?.into()),
            (LocalIdeal::Poly(a), LocalIdeal::Poly(b)) => Ok(a.product(b)?.into()),
            (LocalIdeal::Monomial(a), LocalIdeal::Poly(b)) => {
                Ok(a.to_poly_ideal(b.order())?.product(b)?.into())
            }
            (LocalIdeal::Poly(a), LocalIdeal::Monomial(b)) => {
                Ok(a.product(&b.to_poly_ideal(a.order())?)?.into())
            }
        }
    }
}

/// `dim R/a = #(Nⁿ \ I(a))`.
pub fn colength(a: &LocalIdeal) -> Result<u64> {
    a.initial_staircase(1)?.complement_count()
}

/// `H(k) = dim R/a^k` for `k = 1..=kmax`.
pub fn hilbert_samuel(a: &LocalIdeal, kmax: u32) -> Result<Vec<u64>> {
    match a {
        LocalIdeal::Monomial(m) => m
            .staircase
            .powers_up_to(kmax)
            .iter()
            .map(SemigroupIdealSet::complement_count)
            .collect(),
        LocalIdeal::Poly(p) => (1..=kmax)
            .map(|k| initial_semigroup_ideal(p, k)?.complement_count())
            .collect(),
    }
}

/// `a_k = a^k`, or `a_k = a'_k·a''_k` for a product of such sequences.
#[derive(Clone, Debug)]
pub enum GradedSubspaceSequence {
    Powers(LocalIdeal),
    Product(Box<GradedSubspaceSequence>, Box<GradedSubspaceSequence>),
}

impl GradedSubspaceSequence {
    /// The ideal whose powers form the sequence (`a^k b^k = (ab)^k`).
    pub fn base(&self) -> Result<LocalIdeal> {
        match self {
            GradedSubspaceSequence::Powers(a) => Ok(a.clone()),
            GradedSubspaceSequence::Product(a, b) => a.base()?.product(&b.base()?),
        }
    }

    pub fn hilbert_samuel(&self, kmax: u32) -> Result<Vec<u64>> {
        hilbert_samuel(&self.base()?, kmax)
    }
}

fn integral(q: Rational) -> Result<BigInt> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::NonIntegralMultiplicity(format!("{q}")))
    }
}

fn n_factorial(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `e(a) = n!·covol(Γ(a))` for a monomial ideal.
pub fn multiplicity(a: &MonomialIdealLocal) -> Result<BigInt> {
    integral(a.region()?.covol() * n_factorial(a.dim()))
}

/// `e(a₁, …, aₙ) = n!·CV(Γ(a₁), …, Γ(aₙ))`.
pub fn mixed_multiplicity(ideals: &[MonomialIdealLocal]) -> Result<BigInt> {
    let n = ideals.first().ok_or(Error::EmptyInput("ideals"))?.dim();
    if ideals.len() != n {
        return Err(Error::WrongArity {
            expected: n,
            found: ideals.len(),
        });
    }
    let regions = ideals
        .iter()
        .map(MonomialIdealLocal::region)
        .collect::<Result<Vec<_>>>()?;
    integral(mixed_covol(&regions)? * n_factorial(n))
}

/// Approximations of `e(a)` through initial ideals of powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityReport {
    /// `e(in(a^k))` for `k = 1..=kmax`.
    pub initial_multiplicities: Vec<BigInt>,
    /// `u_k = e(in(a^k))/kⁿ`, non-increasing.
    pub u: Vec<Rational>,
    /// `H(k) = dim R/a^k`.
    pub hilbert: Vec<u64>,
    pub fit: Option<StabilizedFit>,
    /// `u_kmax`, an upper bound for `e(a)`.
    pub upper: Rational,
    /// `n!` times the leading coefficient of the stabilized fit of `H`.
    pub exact: Option<Rational>,
}

impl MultiplicityReport {
    /// The exact value when the fit stabilized, otherwise the upper bound.
    pub fn best(&self) -> &Rational {
        self.exact.as_ref().unwrap_or(&self.upper)
    }
}

pub fn multiplicity_report(a: &PolyLocalIdeal, kmax: u32) -> Result<MultiplicityReport> {
    if kmax == 0 {
        return Err(Error::EmptyInput("kmax"));
    }
    let n = a.dim();
    let nf = n_factorial(n);
    let mut report = MultiplicityReport {
        initial_multiplicities: Vec::new(),
        u: Vec::new(),
        hilbert: Vec::new(),
        fit: None,
        upper: Rational::zero(),
        exact: None,
    };
    let sg = LatticeSemigroup::orthant(n);
    let ell = sg.default_ell();
    for k in 1..=kmax {
        let stair = initial_semigroup_ideal(a, k)?;
        report.hilbert.push(stair.complement_count()?);
        let e = integral(stair.region(&ell)?.covol() * &nf)?;
        let kn = BigInt::from(k).pow(n as u32);
        let u = Rational::new(e.clone(), kn);
        if let Some(prev) = report.u.last() {
            if u > *prev {
                return Err(Error::MonotonicityViolation { k });
            }
        }
        report.initial_multiplicities.push(e);
        report.u.push(u);
    }
    report.upper = report.u.last().cloned().expect("kmax ≥ 1");
    let h: Vec<BigInt> = report.hilbert.iter().map(|&v| BigInt::from(v)).collect();
    report.fit = stabilized_leading_coefficient(&h, n);
    report.exact = report.fit.as_ref().map(|f| &f.leading * &nf);
    Ok(report)
}

/// The local Bernstein–Kushnirenko number of `n` monomial ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BkReport {
    pub ideals: Vec<Vec<LatticePoint>>,
    pub number: BigInt,
}

impl fmt::Display for BkReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "generic members of ")?;
        for (i, gens) in self.ideals.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "<")?;
            for (j, g) in gens.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{g}")?;
            }
            write!(f, ">")?;
        }
        write!(f, " meet at the origin with multiplicity {}", self.number)
    }
}

pub fn bk_report(ideals: &[MonomialIdealLocal]) -> Result<BkReport> {
    Ok(BkReport {
        ideals: ideals.iter().map(MonomialIdealLocal::generators).collect(),
        number: mixed_multiplicity(ideals)?,
    })
}

/// `e(a) ≤ e(in(a)) ≤ n!·dim R/a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LechChain {
    /// Exact `e(a)` if known, otherwise the certified upper bound.
    pub e: Rational,
    pub e_exact: bool,
    pub e_in: BigInt,
    pub colength: u64,
    /// `n!·colength`.
    pub bound: BigInt,
    pub holds: bool,
}

impl LechChain {
    fn new(e: Rational, e_exact: bool, e_in: BigInt, colength: u64, n: usize) -> Self {
        let bound = factorial(n) * BigInt::from(colength);
        let holds = e <= Rational::from_integer(e_in.clone()) && e_in <= bound;
        LechChain {
            e,
            e_exact,
            e_in,
            colength,
            bound,
            holds,
        }
    }
}

/// Default number of powers examined by [`lech_chain`]: enough for the fit
/// of `H` to stabilize at the first window with one spare value.
pub fn default_kmax(n: usize) -> u32 {
    n as u32 + 4
}

pub fn lech_chain(a: &PolyLocalIdeal) -> Result<LechChain> {
    lech_chain_with(a, default_kmax(a.dim()))
}

pub fn lech_chain_with(a: &PolyLocalIdeal, kmax: u32) -> Result<LechChain> {
    let r = multiplicity_report(a, kmax)?;
    Ok(LechChain::new(
        r.best().clone(),
        r.exact.is_some(),
        r.initial_multiplicities[0].clone(),
        r.hilbert[0],
        a.dim(),
    ))
}

/// For monomial ideals `in(a) = a`, so the first link is an equality.
pub fn lech_chain_monomial(a: &MonomialIdealLocal) -> Result<LechChain> {
    let e = multiplicity(a)?;
    Ok(LechChain::new(
        Rational::from_integer(e.clone()),
        true,
        e,
        a.colength()?,
        a.dim(),
    ))
}

/// `ℓ(v(f)) ≥ k·r₀ ⇒ f ∈ m^k`.
///
/// All terms of `f` sit at level `≥ ℓ(v(f))`, and `ℓ ≤ max(ℓ)·deg`, so
/// `r₀ = max(ℓ)` works; for total degree `r₀ = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodValuationCertificate {
    pub ell: LinearFunctional,
    pub r0: Rational,
}

impl GoodValuationCertificate {
    pub fn for_order(ord: &TermOrder) -> Self {
        GoodValuationCertificate {
            ell: ord.ell_functional(),
            r0: Rational::from_integer(BigInt::from(ord.ell_max())),
        }
    }

    /// Tests the implication on one `f` and `k`.
    pub fn check(&self, f: &Poly, ord: &TermOrder, k: u32) -> Result<bool> {
        let v = valuation(f, ord)?;
        let level = self.ell.eval_lattice(&v);
        if level >= &self.r0 * Rational::from_integer(BigInt::from(k)) {
            Ok(f.min_degree().expect("nonzero") >= i64::from(k))
        } else {
            Ok(true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::poly::{poly_from_ints, poly_from_ratios};
    use super::*;
    use crate::exactgeom::rat;

    fn lp(v: &[i64]) -> LatticePoint {
        LatticePoint(v.to_vec())
    }

    fn x_plus_y2() -> Vec<Poly> {
        alloc::vec![
            poly_from_ints(&[(1, &[1, 0]), (1, &[0, 2])]),
            poly_from_ints(&[(1, &[0, 3])]),
        ]
    }

    fn mono(gens: &[&[i64]]) -> MonomialIdealLocal {
        let g: Vec<LatticePoint> = gens.iter().map(|p| lp(p)).collect();
        MonomialIdealLocal::new(gens[0].len(), &g).unwrap()
    }

    #[test]
    fn valuations() {
        let o = TermOrder::standard(2);
        let f = poly_from_ints(&[(1, &[1, 0]), (1, &[0, 2])]);
        let g = poly_from_ints(&[(1, &[0, 3])]);
        assert_eq!(valuation(&f, &o).unwrap(), lp(&[1, 0]));
        assert_eq!(valuation(&f.mul(&g), &o).unwrap(), lp(&[1, 3]));
        let h = poly_from_ratios(&[((3, 1), &[2, 1]), ((-1, 2), &[1, 3])]);
        assert_eq!(valuation(&h, &o).unwrap(), lp(&[2, 1]));
        assert_eq!(valuation(&Poly::zero(), &o), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn primary_exponents() {
        let o = TermOrder::standard(2);
        let m = alloc::vec![
            poly_from_ints(&[(1, &[1, 0])]),
            poly_from_ints(&[(1, &[0, 1])])
        ];
        assert_eq!(mprimary_exponent(&m, &o, 8).unwrap(), 1);
        let sq = alloc::vec![
            poly_from_ints(&[(1, &[2, 0])]),
            poly_from_ints(&[(1, &[0, 2])])
        ];
        assert_eq!(mprimary_exponent(&sq, &o, 8).unwrap(), 3);
        assert_eq!(mprimary_exponent(&x_plus_y2(), &o, 8).unwrap(), 3);
        let line = alloc::vec![poly_from_ints(&[(1, &[1, 0])])];
        assert_eq!(
            mprimary_exponent(&line, &o, 5),
            Err(Error::NotPrimaryWithinCap { cap: 5 })
        );
        let unit = alloc::vec![poly_from_ints(&[(1, &[0, 0]), (1, &[1, 0])])];
        assert_eq!(
            mprimary_exponent(&unit, &o, 5),
            Err(Error::NotInMaximalIdeal)
        );
    }

    #[test]
    fn echelon_pivots() {
        let o = TermOrder::standard(2);
        let sq = alloc::vec![
            poly_from_ints(&[(1, &[2, 0])]),
            poly_from_ints(&[(1, &[0, 2])])
        ];
        let p = truncated_echelon(&sq, &o, 4);
        let want: BTreeSet<LatticePoint> = [[2, 0], [0, 2], [2, 1], [1, 2], [3, 0], [0, 3]]
            .iter()
            .map(|v| lp(v))
            .collect();
        assert_eq!(p, want);
        let p = truncated_echelon(&x_plus_y2(), &o, 4);
        for e in [[1, 0], [0, 3], [1, 1], [2, 0]] {
            assert!(p.contains(&lp(&e)));
        }
        for e in [[0, 0], [0, 1], [0, 2]] {
            assert!(!p.contains(&lp(&e)));
        }
        let x = alloc::vec![poly_from_ints(&[(1, &[1, 0])])];
        assert_eq!(
            truncated_echelon(&x, &o, 2),
            [lp(&[1, 0])].into_iter().collect()
        );
    }

    #[test]
    fn initial_ideals() {
        let o = TermOrder::standard(2);
        let a = PolyLocalIdeal::new(x_plus_y2(), o.clone()).unwrap();
        let i1 = initial_semigroup_ideal(&a, 1).unwrap();
        assert_eq!(
            i1.sorted_generators(),
            alloc::vec![lp(&[0, 3]), lp(&[1, 0])]
        );
        let i2 = initial_semigroup_ideal(&a, 2).unwrap();
        for g in [[2, 0], [1, 3], [0, 6]] {
            assert!(i2.contains(&lp(&g)));
        }
        assert_eq!(colength(&a.clone().into()).unwrap(), 3);
        let sq = mono(&[&[2, 0], &[0, 2]]);
        let sqp = sq.to_poly_ideal(&o).unwrap();
        assert_eq!(initial_semigroup_ideal(&sqp, 1).unwrap(), *sq.staircase());
        assert_eq!(colength(&sqp.into()).unwrap(), 4);
    }

    #[test]
    fn colengths_and_hilbert() {
        assert_eq!(mono(&[&[1, 0], &[0, 1]]).colength().unwrap(), 1);
        assert_eq!(mono(&[&[2, 0], &[0, 2]]).colength().unwrap(), 4);
        let m: LocalIdeal = mono(&[&[1, 0], &[0, 1]]).into();
        assert_eq!(hilbert_samuel(&m, 4).unwrap(), alloc::vec![1, 3, 6, 10]);
        let m2: LocalIdeal = mono(&[&[2, 0], &[1, 1], &[0, 2]]).into();
        assert_eq!(hilbert_samuel(&m2, 2).unwrap(), alloc::vec![3, 10]);
        let a: LocalIdeal = PolyLocalIdeal::new(x_plus_y2(), TermOrder::standard(2))
            .unwrap()
            .into();
        assert_eq!(hilbert_samuel(&a, 1).unwrap(), alloc::vec![3]);
    }

    #[test]
    fn multiplicities() {
        assert_eq!(
            multiplicity(&mono(&[&[1, 0], &[0, 1]])).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            multiplicity(&mono(&[&[2, 0], &[0, 2]])).unwrap(),
            BigInt::from(4)
        );
        assert_eq!(
            multiplicity(&mono(&[&[3, 0], &[1, 1], &[0, 2]])).unwrap(),
            BigInt::from(5)
        );
        let m = mono(&[&[1, 0], &[0, 1]]);
        let q = mono(&[&[2, 0], &[0, 2]]);
        assert_eq!(
            mixed_multiplicity(&[m.clone(), q.clone()]).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            mixed_multiplicity(&[m.clone(), m.clone()]).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            mixed_multiplicity(&[q.clone(), q.clone()]).unwrap(),
            BigInt::from(4)
        );
        let bk = bk_report(&[m, q]).unwrap();
        assert_eq!(bk.number, BigInt::from(2));
        assert!(alloc::format!("{bk}").ends_with("multiplicity 2"));
    }

    #[test]
    fn report_for_a_curve_ideal() {
        let a = PolyLocalIdeal::new(x_plus_y2(), TermOrder::standard(2)).unwrap();
        let r = multiplicity_report(&a, 6).unwrap();
        assert_eq!(r.u[0], rat(3));
        assert!(r.u.windows(2).all(|w| w[1] <= w[0]));
        assert_eq!(r.exact, Some(rat(3)));
        let chain = lech_chain(&a).unwrap();
        assert_eq!(
            (chain.e.clone(), chain.e_in.clone(), chain.bound.clone()),
            (rat(3), BigInt::from(3), BigInt::from(6))
        );
        assert!(chain.holds);
    }

    #[test]
    fn monomial_lech() {
        let c = lech_chain_monomial(&mono(&[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(
            (c.e_in, c.bound, c.holds),
            (BigInt::from(4), BigInt::from(8), true)
        );
        let c = lech_chain_monomial(&mono(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!((c.e_in, c.bound), (BigInt::from(1), BigInt::from(2)));
    }

    #[test]
    fn good_valuation() {
        let o = TermOrder::with_ell(alloc::vec![2, 1]).unwrap();
        let cert = GoodValuationCertificate::for_order(&o);
        assert_eq!(cert.r0, rat(2));
        let f = poly_from_ints(&[(1, &[3, 0]), (1, &[0, 7])]);
        for k in 1..8 {
            assert!(cert.check(&f, &o, k).unwrap());
        }
    }
}
