//! Exact decisions about sums of real `n`-th roots of rationals.
//!
//! Brunn–Minkowski checks need the sign of `a^{1/n} + b^{1/n} - c^{1/n}`.
//! Equality is decided algebraically: for positive `a, b, c` a relation
//! `α + β = γ` between real radicals forces `α/γ` and `β/γ` to be rational,
//! so equality holds iff `a/c` and `b/c` are `n`-th powers of rationals `p, q`
//! with `p + q = 1`. Strict cases are then separated by bisecting rational
//! enclosures of the three roots, comparing exact `n`-th powers only.

use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use crate::exactgeom::Rational;

/// The rational `n`-th root of `q ≥ 0`, if there is one.
pub fn exact_root(q: &Rational, n: u32) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let num = q.numer().nth_root(n);
    let den = q.denom().nth_root(n);
    if Pow::pow(&num, n) == *q.numer() && Pow::pow(&den, n) == *q.denom() {
        Some(Rational::new(num, den))
    } else {
        None
    }
}

/// A rational enclosure `lo ≤ q^{1/n} ≤ hi` refined by bisection.
#[derive(Clone, Debug)]
struct RootEnclosure {
    target: Rational,
    n: u32,
    lo: Rational,
    hi: Rational,
}

impl RootEnclosure {
    fn new(target: &Rational, n: u32) -> Self {
        if let Some(r) = exact_root(target, n) {
            return RootEnclosure {
                target: target.clone(),
                n,
                lo: r.clone(),
                hi: r,
            };
        }
        let one = Rational::one();
        let hi = if *target > one { target.clone() } else { one };
        RootEnclosure {
            target: target.clone(),
            n,
            lo: Rational::zero(),
            hi,
        }
    }

    fn refine(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let mid = (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2));
        if Pow::pow(&mid, self.n) <= self.target {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }
}

/// Sign of `a^{1/n} + b^{1/n} - c^{1/n}` for nonnegative rationals.
pub fn compare_root_sum(a: &Rational, b: &Rational, c: &Rational, n: u32) -> Ordering {
    assert!(n >= 1, "root degree must be positive");
    assert!(
        !a.is_negative() && !b.is_negative() && !c.is_negative(),
        "radicands must be nonnegative"
    );
    if a.is_zero() {
        return b.cmp(c);
    }
    if b.is_zero() {
        return a.cmp(c);
    }
    if c.is_zero() {
        return Ordering::Greater;
    }
    if let (Some(p), Some(q)) = (exact_root(&(a / c), n), exact_root(&(b / c), n)) {
        return (p + q).cmp(&Rational::one());
    }
    let mut ra = RootEnclosure::new(a, n);
    let mut rb = RootEnclosure::new(b, n);
    let mut rc = RootEnclosure::new(c, n);
    loop {
        if &ra.lo + &rb.lo > rc.hi {
            return Ordering::Greater;
        }
        if &ra.hi + &rb.hi < rc.lo {
            return Ordering::Less;
        }
        ra.refine();
        rb.refine();
        rc.refine();
    }
}

/// `x^{1/n}` enclosed to within `width`, for reporting.
pub fn root_interval(x: &Rational, n: u32, width: &Rational) -> (Rational, Rational) {
    let mut r = RootEnclosure::new(x, n);
    while &r.hi - &r.lo > *width {
        r.refine();
    }
    (r.lo, r.hi)
}
