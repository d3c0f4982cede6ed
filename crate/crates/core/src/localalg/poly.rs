use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::order::TermOrder;
use crate::error::{Error, Result};
use crate::exactgeom::{LatticePoint, Rational};

/// A polynomial `Σ c_α x^α` over the rationals. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    terms: BTreeMap<LatticePoint, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn monomial(exp: LatticePoint, coeff: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(exp, coeff);
        p
    }

    /// Sums repeated exponents and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (LatticePoint, Rational)>>(terms: I) -> Self {
        let mut p = Poly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: LatticePoint, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticePoint, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &LatticePoint) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Number of variables, if any term is stored.
    pub fn dim(&self) -> Option<usize> {
        self.terms.keys().next().map(LatticePoint::dim)
    }

    /// Lowest total degree of a term.
    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().map(LatticePoint::degree).min()
    }

    pub fn has_constant_term(&self) -> bool {
        self.terms.keys().any(LatticePoint::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn shift(&self, beta: &LatticePoint) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e + beta, v.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut acc: BTreeMap<LatticePoint, Rational> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                *acc.entry(a + b).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Poly { terms: acc }
    }

    /// Drops every term of total degree `≥ d`, i.e. reduces modulo `m^d`.
    pub fn truncate(&self, d: i64) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() < d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// The lowest term of `f` under `ord`.
    pub fn lowest_term(&self, ord: &TermOrder) -> Result<(LatticePoint, Rational)> {
        self.terms
            .iter()
            .min_by(|a, b| ord.cmp(a.0, b.0))
            .map(|(e, c)| (e.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (j, &p) in e.0.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*x{}", j + 1)?,
                    _ => write!(f, "*x{}^{p}", j + 1)?,
                }
            }
        }
        Ok(())
    }
}

/// `Σ c x^e` from `(coeff, exponent)` integer pairs.
pub fn poly_from_ints(terms: &[(i64, &[i64])]) -> Poly {
    Poly::from_terms(
        terms
            .iter()
            .map(|(c, e)| (LatticePoint(e.to_vec()), crate::exactgeom::rat(*c))),
    )
}

/// Convenience: `Σ c x^e` with rational coefficients `p/q`.
pub fn poly_from_ratios(terms: &[((i64, i64), &[i64])]) -> Poly {
    Poly::from_terms(
        terms
            .iter()
            .map(|((p, q), e)| (LatticePoint(e.to_vec()), crate::exactgeom::ratio(*p, *q))),
    )
}

pub(crate) fn monomials_below(n: usize, d: i64) -> Vec<LatticePoint> {
    // All α ∈ Nⁿ with |α| < d.
    let mut out = Vec::new();
    if d <= 0 {
        return out;
    }
    let mut cur = alloc::vec![0i64; n];
    loop {
        out.push(LatticePoint(cur.clone()));
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            cur[i] += 1;
            if cur.iter().sum::<i64>() < d {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}
