//! Exact rational linear algebra and polyhedral geometry.
//!
//! Everything here works over `BigRational`; there is no floating point
//! anywhere in the crate. Cones and polytopes carry both of their dual
//! descriptions, computed by the double description method in [`dd`].

pub mod cone;
pub mod dd;
pub mod linalg;
pub mod polytope;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use cone::RationalCone;
pub use polytope::RationalPolytope;

pub type Rational = num_rational::BigRational;

/// A point with rational coordinates.
pub type RatPoint = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_point(coords: &[i64]) -> RatPoint {
    coords.iter().map(|&c| rat(c)).collect()
}

/// Formats a point as `(a, b, c)` with rational entries.
pub fn fmt_point(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(|c| format!("{c}")).collect();
    format!("({})", parts.join(", "))
}

/// An integer point `α ∈ Zⁿ`, e.g. the exponent of a monomial `x^α`.
///
/// Coordinates are `i64`; every instance this crate builds stays many orders
/// of magnitude below that range.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint(coords)
    }

    pub fn zero(n: usize) -> Self {
        LatticePoint(alloc::vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = alloc::vec![0; n];
        v[i] = 1;
        LatticePoint(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scaled(&self, k: i64) -> Self {
        LatticePoint(self.0.iter().map(|&c| c * k).collect())
    }

    pub fn to_rational(&self) -> RatPoint {
        self.0.iter().map(|&c| rat(c)).collect()
    }

    pub fn to_bigint(&self) -> Vec<BigInt> {
        self.0.iter().map(|&c| BigInt::from(c)).collect()
    }

    /// Sum of coordinates, the total degree of `x^α`.
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Integer dot product.
    pub fn dot(&self, other: &[i64]) -> i64 {
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }
}

impl Index<usize> for LatticePoint {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        LatticePoint(v)
    }
}

/// A nonzero linear functional `ℓ(x) = Σ cᵢ xᵢ` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearFunctional {
    coeffs: Vec<Rational>,
}

impl LinearFunctional {
    /// Returns `None` for the zero functional.
    pub fn new(coeffs: Vec<Rational>) -> Option<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            None
        } else {
            Some(LinearFunctional { coeffs })
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Option<Self> {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// The functional `x₁ + ⋯ + xₙ`.
    pub fn total_degree(n: usize) -> Self {
        LinearFunctional {
            coeffs: alloc::vec![Rational::one(); n],
        }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (c, v) in self.coeffs.iter().zip(x) {
            if !c.is_zero() && !v.is_zero() {
                acc += c * v;
            }
        }
        acc
    }

    pub fn eval_lattice(&self, x: &LatticePoint) -> Rational {
        let mut acc = Rational::zero();
        for (c, &v) in self.coeffs.iter().zip(&x.0) {
            if v != 0 {
                acc += c * BigInt::from(v);
            }
        }
        acc
    }

    /// Integer coefficients if every coefficient is integral.
    pub fn as_ints(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.numer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    /// The functional rescaled to coprime integer coefficients, keeping signs.
    pub fn primitive(&self) -> LinearFunctional {
        let ints = clear_denominators(&self.coeffs);
        let prim = primitive_int(&ints);
        LinearFunctional {
            coeffs: prim.into_iter().map(Rational::from_integer).collect(),
        }
    }
}

impl fmt::Display for LinearFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_point(&self.coeffs))
    }
}

/// The closed halfspace `normal · x ≥ offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Halfspace {
    pub normal: LinearFunctional,
    pub offset: Rational,
}

impl Halfspace {
    pub fn new(normal: LinearFunctional, offset: Rational) -> Self {
        Halfspace { normal, offset }
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.normal.eval(x) >= self.offset
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        self.normal.eval(x) == self.offset
    }
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} · x >= {}", self.normal, self.offset)
    }
}

/// Multiplies a rational vector by the lcm of its denominators.
pub fn clear_denominators(v: &[Rational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in v {
        l = l.lcm(c.denom());
    }
    v.iter().map(|c| c.numer() * (&l / c.denom())).collect()
}

/// Divides an integer vector by the gcd of its entries. Zero stays zero.
pub fn primitive_int(v: &[BigInt]) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
    }
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|c| c / &g).collect()
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn to_i64_vec(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(|c| i64::try_from(c).ok()).collect()
}
