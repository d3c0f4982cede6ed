//! Library values checked against the brute-force oracles in `common`.

mod common;

use coconvex::localalg::{self, LocalIdeal, MonomialIdealLocal};
use coconvex::regions::mixed_covol;
use coconvex::verify::{random_monomial_ideal, InstanceSpec};
use coconvex::{LatticePoint, LatticeSemigroup, LinearFunctional, RationalCone, SemigroupIdealSet};
use common::*;
use num_bigint::BigInt;

fn lp(v: &[i64]) -> LatticePoint {
    LatticePoint(v.to_vec())
}

fn monomial(gens: &[&[i64]]) -> MonomialIdealLocal {
    let pts: Vec<LatticePoint> = gens.iter().map(|g| lp(g)).collect();
    MonomialIdealLocal::new(gens[0].len(), &pts).unwrap()
}

fn pairs(m: &MonomialIdealLocal) -> Vec<(i64, i64)> {
    m.generators().iter().map(|g| (g[0], g[1])).collect()
}

fn vecs(m: &MonomialIdealLocal) -> Vec<Vec<i64>> {
    m.generators().into_iter().map(|g| g.0).collect()
}

fn random_ideals(n: usize, count: u64) -> Vec<MonomialIdealLocal> {
    (0..count)
        .map(|s| random_monomial_ideal(&InstanceSpec::new(n, 1000 + s)).unwrap())
        .collect()
}

#[test]
fn worked_covolumes_match_shoelace() {
    let m = monomial(&[&[1, 0], &[0, 1]]);
    let m2 = monomial(&[&[2, 0], &[0, 2]]);
    let c = monomial(&[&[3, 0], &[1, 1], &[0, 2]]);
    for a in [&m, &m2, &c] {
        assert_eq!(a.region().unwrap().covol(), shoelace_covol(&pairs(a)));
    }
    assert_eq!(shoelace_covol(&pairs(&m2)), q(2, 1));
    assert_eq!(shoelace_covol(&pairs(&c)), q(5, 2));
    let sum = m
        .region()
        .unwrap()
        .minkowski_sum(&m2.region().unwrap())
        .unwrap();
    let product = m.product(&m2).unwrap();
    assert_eq!(sum.covol(), shoelace_covol(&pairs(&product)));
    assert_eq!(sum.covol(), q(9, 2));
    // Polarization of the shoelace values.
    let cv = (shoelace_covol(&pairs(&product))
        - shoelace_covol(&pairs(&m))
        - shoelace_covol(&pairs(&m2)))
        / q(2, 1);
    assert_eq!(cv, q(1, 1));
    assert_eq!(
        mixed_covol(&[m.region().unwrap(), m2.region().unwrap()]).unwrap(),
        cv
    );
    assert_eq!(
        localalg::mixed_multiplicity(&[m, m2]).unwrap(),
        BigInt::from(2)
    );
}

#[test]
fn random_covolumes_match_shoelace() {
    for a in random_ideals(2, 60) {
        assert_eq!(
            a.region().unwrap().covol(),
            shoelace_covol(&pairs(&a)),
            "{:?}",
            a.generators()
        );
    }
}

#[test]
fn worked_colengths_match_box_count() {
    assert_eq!(box_colength(&[vec![2, 0], vec![0, 2]]), 4);
    assert_eq!(monomial(&[&[2, 0], &[0, 2]]).colength().unwrap(), 4);
    assert_eq!(
        monomial(&[&[3, 0], &[1, 1], &[0, 2]]).colength().unwrap(),
        4
    );
    assert_eq!(box_colength(&[vec![3, 0], vec![1, 1], vec![0, 2]]), 4);
}

#[test]
fn random_colengths_match_box_count() {
    for n in [2, 3] {
        for a in random_ideals(n, 40) {
            assert_eq!(a.colength().unwrap(), box_colength(&vecs(&a)));
        }
    }
}

#[test]
fn hilbert_samuel_matches_power_count() {
    for n in [2, 3] {
        for a in random_ideals(n, 10) {
            let kmax = 6;
            let lib = localalg::hilbert_samuel(&LocalIdeal::from(a.clone()), kmax).unwrap();
            assert_eq!(lib, power_colengths(&vecs(&a), kmax));
        }
    }
}

#[test]
fn maximal_ideal_hilbert_samuel_is_binomial() {
    for n in [2usize, 3] {
        let m = MonomialIdealLocal::new(
            n,
            &(0..n).map(|i| LatticePoint::unit(n, i)).collect::<Vec<_>>(),
        )
        .unwrap();
        let h = localalg::hilbert_samuel(&LocalIdeal::from(m), 20).unwrap();
        for (k, v) in h.iter().enumerate() {
            let k = k as u64 + 1;
            assert_eq!(*v, binomial(k + n as u64 - 1, n as u64));
        }
    }
}

#[test]
fn cone_membership_matches_caratheodory() {
    let cones: Vec<Vec<Vec<i64>>> = vec![
        vec![vec![1, 0], vec![1, 2]],
        vec![vec![2, -1], vec![-1, 3]],
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 2]],
        vec![vec![1, 0, 1], vec![0, 1, 1], vec![-1, 0, 1], vec![0, -1, 1]],
    ];
    for rays in cones {
        let n = rays[0].len();
        let cone = RationalCone::dual_description(&rays.iter().map(|r| lp(r)).collect::<Vec<_>>())
            .unwrap();
        let range: Vec<i64> = (-4..=4).collect();
        let mut pts = vec![vec![]];
        for _ in 0..n {
            pts = pts
                .iter()
                .flat_map(|p: &Vec<i64>| range.iter().map(move |&c| [p.clone(), vec![c]].concat()))
                .collect();
        }
        for x in pts {
            assert_eq!(
                cone.contains_lattice(&lp(&x)),
                in_cone(&rays, &x),
                "{rays:?} {x:?}"
            );
        }
    }
}

#[test]
fn strong_convexity_matches_definition() {
    let cones: Vec<Vec<Vec<i64>>> = vec![
        vec![vec![1, 0], vec![0, 1]],
        vec![vec![1, 0], vec![-1, 0], vec![0, 1]],
        vec![vec![1, 1], vec![-1, 1], vec![0, -1]],
        vec![vec![2, -1], vec![-1, 3]],
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![-1, -1, 0]],
        vec![vec![1, 0, 1], vec![0, 1, 1], vec![-1, 0, 1], vec![0, -1, 1]],
    ];
    for rays in cones {
        let n = rays[0].len();
        let mut pts = vec![vec![]];
        for _ in 0..n {
            pts = pts
                .iter()
                .flat_map(|p: &Vec<i64>| (-2..=2).map(move |c| [p.clone(), vec![c]].concat()))
                .collect();
        }
        let has_line = pts.iter().any(|v| {
            v.iter().any(|&c| c != 0)
                && in_cone(&rays, v)
                && in_cone(&rays, &v.iter().map(|c| -c).collect::<Vec<_>>())
        });
        let lib = RationalCone::dual_description(&rays.iter().map(|r| lp(r)).collect::<Vec<_>>());
        assert_eq!(
            matches!(lib, Err(coconvex::Error::NotStronglyConvex)),
            has_line,
            "{rays:?}"
        );
        assert_eq!(lib.is_ok(), !has_line, "{rays:?}");
    }
}

#[test]
fn orthant_powers_match_sum_enumeration() {
    let sg = LatticeSemigroup::orthant(2);
    let gens = vec![vec![3, 0], vec![1, 1], vec![0, 2]];
    let ideal =
        SemigroupIdealSet::new(&sg, &gens.iter().map(|g| lp(g)).collect::<Vec<_>>()).unwrap();
    let rays = orthant_rays(2);
    for k in 1..=4 {
        let p = ideal.power(k);
        for x in 0..=3 * k as i64 + 1 {
            for y in 0..=2 * k as i64 + 1 {
                assert_eq!(
                    p.contains(&lp(&[x, y])),
                    in_power(&rays, &gens, k, &[x, y]),
                    "k={k} ({x},{y})"
                );
            }
        }
    }
}

#[test]
fn toric_powers_match_sum_enumeration() {
    let rays = vec![vec![1, 0], vec![1, 2]];
    let sg = LatticeSemigroup::new(
        RationalCone::dual_description(&[lp(&rays[0]), lp(&rays[1])]).unwrap(),
    );
    let gens = vec![vec![2, 0], vec![2, 3], vec![3, 6]];
    let ideal =
        SemigroupIdealSet::new(&sg, &gens.iter().map(|g| lp(g)).collect::<Vec<_>>()).unwrap();
    for k in 1..=3 {
        let p = ideal.power(k);
        for x in 0..=4 * k as i64 {
            for y in 0..=2 * x {
                assert_eq!(
                    p.contains(&lp(&[x, y])),
                    in_power(&rays, &gens, k, &[x, y]),
                    "k={k} ({x},{y})"
                );
            }
        }
    }
}

#[test]
fn random_powers_match_sum_enumeration() {
    let rays = orthant_rays(2);
    for a in random_ideals(2, 8) {
        let gens = vecs(&a);
        let bound: Vec<i64> = (0..2)
            .map(|i| gens.iter().map(|g| g[i]).max().unwrap())
            .collect();
        for k in 1..=3u32 {
            let p = a.staircase().power(k);
            for x in 0..=bound[0] * k as i64 {
                for y in 0..=bound[1] * k as i64 {
                    assert_eq!(p.contains(&lp(&[x, y])), in_power(&rays, &gens, k, &[x, y]));
                }
            }
        }
    }
}

#[test]
fn semigroup_multiplicity_matches_fit_of_counts() {
    let ell = LinearFunctional::total_degree(2);
    for a in random_ideals(2, 20) {
        let h = power_colengths(&vecs(&a), 14);
        let lead = leading_coefficient(&h, 2).expect("stabilizes");
        assert_eq!(a.staircase().region(&ell).unwrap().covol(), lead);
    }
}
