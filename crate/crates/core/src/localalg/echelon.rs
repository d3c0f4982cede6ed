//! Leading-term elimination on truncated multiples `x^β·g`, all modulo `m^D`.
//!
//! Rows are kept fraction-free: integer entries, primitive, with a positive
//! leading coefficient. Only leading terms are eliminated, which is all the
//! pivot set needs.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::poly::{monomials_below, Poly};
use crate::exactgeom::{clear_denominators, LatticePoint, Rational};

type Row = Vec<(u32, BigInt)>;

struct Columns {
    index: BTreeMap<LatticePoint, u32>,
    exps: Vec<LatticePoint>,
}

impl Columns {
    fn new<K: Ord, F: Fn(&LatticePoint) -> K>(n: usize, d: i64, key: F) -> Self {
        let mut exps = monomials_below(n, d);
        exps.sort_by_cached_key(|e| key(e));
        let index = exps
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        Columns { index, exps }
    }

    fn row(&self, p: &Poly) -> Option<Row> {
        if p.is_zero() {
            return None;
        }
        let coeffs: Vec<Rational> = p.terms().map(|(_, c)| c.clone()).collect();
        let ints = clear_denominators(&coeffs);
        let mut row: Row = p
            .terms()
            .zip(ints)
            .map(|((e, _), c)| (self.index[e], c))
            .collect();
        row.sort_by_key(|t| t.0);
        normalize(&mut row);
        Some(row)
    }
}

fn normalize(row: &mut Row) {
    let mut g = BigInt::zero();
    for (_, c) in row.iter() {
        g = g.gcd(c);
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if g != BigInt::from(1) {
        for (_, c) in row.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// `b·row - a·piv` with the shared leading column cancelled.
fn eliminate(row: &Row, piv: &Row) -> Row {
    let a = &row[0].1;
    let b = &piv[0].1;
    let mut out = Row::with_capacity(row.len() + piv.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < piv.len() {
        let ci = row.get(i).map(|t| t.0).unwrap_or(u32::MAX);
        let cj = piv.get(j).map(|t| t.0).unwrap_or(u32::MAX);
        if ci < cj {
            out.push((ci, b * &row[i].1));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(a * &piv[j].1)));
            j += 1;
        } else {
            let v = b * &row[i].1 - a * &piv[j].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    if !out.is_empty() {
        normalize(&mut out);
    }
    out
}

/// Incremental leading-term echelon form.
struct Echelon {
    pivots: BTreeMap<u32, Row>,
}

impl Echelon {
    fn new() -> Self {
        Echelon {
            pivots: BTreeMap::new(),
        }
    }

    fn insert(&mut self, mut row: Row) {
        while !row.is_empty() {
            match self.pivots.get(&row[0].0) {
                Some(piv) => row = eliminate(&row, piv),
                None => {
                    self.pivots.insert(row[0].0, row);
                    return;
                }
            }
        }
    }
}

/// Pivot exponents of the span of `x^β·g` (for each `g` in `polys`, every
/// `β`), truncated modulo `m^d`, eliminating in the order given by `key`.
pub(crate) fn pivots_with_key<K: Ord, F: Fn(&LatticePoint) -> K>(
    polys: &[Poly],
    n: usize,
    d: i64,
    key: F,
) -> BTreeSet<LatticePoint> {
    let cols = Columns::new(n, d, key);
    let mut ech = Echelon::new();
    let mut rows: Vec<Row> = Vec::new();
    for p in polys {
        let p = p.truncate(d);
        let Some(low) = p.min_degree() else { continue };
        for beta in monomials_below(n, d - low) {
            if let Some(r) = cols.row(&p.shift(&beta).truncate(d)) {
                rows.push(r);
            }
        }
    }
    // Rows with late leading terms first keeps fill-in low.
    rows.sort_by(|a, b| b[0].0.cmp(&a[0].0).then(a.len().cmp(&b.len())));
    for r in rows {
        ech.insert(r);
    }
    ech.pivots
        .keys()
        .map(|&c| cols.exps[c as usize].clone())
        .collect()
}
