//! Exact convex geometry of Newton regions and Samuel multiplicities.
//!
//! A cobounded region `Γ = conv(G) + C` inside a strongly convex rational
//! cone `C` has a bounded complement `C \ Γ` whose volume is the covolume of
//! `Γ`. For an `m`-primary monomial ideal the Samuel multiplicity is `n!`
//! times the covolume of its Newton region, and mixed multiplicities are `n!`
//! times mixed covolumes. This crate computes all of these with exact
//! rational arithmetic and checks the Brunn–Minkowski, Alexandrov–Fenchel and
//! Lech inequality families on generated instances.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! * [`exactgeom`]: cones, polytopes, double description and exact volume.
//! * [`regions`]: Newton regions, covolume, Minkowski algebra, mixed covolume.
//! * [`semigroups`]: semigroup ideals in `C ∩ Zⁿ`, graded sequences and counting.
//! * [`localalg`]: term orders, lowest-term valuation, initial ideals, colength.
//! * [`verify`]: seeded instance generation and inequality suites.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod exactgeom;
pub mod fit;
pub mod localalg;
pub mod regions;
pub mod roots;
pub mod semigroups;
pub mod verify;

pub use error::{Error, Result};
pub use exactgeom::{
    Halfspace, LatticePoint, LinearFunctional, RatPoint, Rational, RationalCone, RationalPolytope,
};
pub use regions::NewtonRegion;
pub use semigroups::{LatticeSemigroup, OkounkovData, PrimaryGradedSequence, SemigroupIdealSet};
