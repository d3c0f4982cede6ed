//! One line per acceptance criterion, each at its stated tolerance and time
//! budget. Exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use coconvex::fit::stabilized_leading_coefficient;
use coconvex::localalg::poly::poly_from_ints;
use coconvex::localalg::{
    self, initial_semigroup_ideal, multiplicity_report, LocalIdeal, MonomialIdealLocal,
    PolyLocalIdeal, TermOrder,
};
use coconvex::regions::mixed_covol;
use coconvex::verify::{
    lech_corpus, random_monomial_ideal, run_suite, suite_polynomiality, InstanceSpec, Outcome,
    Suite,
};
use coconvex::{LatticePoint, LatticeSemigroup, PrimaryGradedSequence};
use common::*;
use num_bigint::BigInt;

type Check = Result<String, String>;

type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Check + 'a>);

fn lp(v: &[i64]) -> LatticePoint {
    LatticePoint(v.to_vec())
}

fn maximal(n: usize) -> MonomialIdealLocal {
    let gens: Vec<LatticePoint> = (0..n).map(|i| LatticePoint::unit(n, i)).collect();
    MonomialIdealLocal::new(n, &gens).unwrap()
}

fn monomial(gens: &[&[i64]]) -> MonomialIdealLocal {
    let pts: Vec<LatticePoint> = gens.iter().map(|g| lp(g)).collect();
    MonomialIdealLocal::new(gens[0].len(), &pts).unwrap()
}

fn vecs(m: &MonomialIdealLocal) -> Vec<Vec<i64>> {
    m.generators().into_iter().map(|g| g.0).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// The random ideals of criterion 2: seeds `0..100` in two variables and
/// `0..20` in three.
fn corpus() -> Vec<MonomialIdealLocal> {
    let mut out = Vec::new();
    for (n, count) in [(2usize, 100u64), (3, 20)] {
        for s in 0..count {
            out.push(random_monomial_ideal(&InstanceSpec::new(n, s)).unwrap());
        }
    }
    out
}

fn regular_ring() -> Check {
    for n in [2usize, 3] {
        let m = maximal(n);
        let e = Q::from_integer(factorial(n)) * m.region().map_err(|e| e.to_string())?.covol();
        ensure(e == q(1, 1), || format!("e(m) = {e} for n = {n}"))?;
        let h = localalg::hilbert_samuel(&LocalIdeal::from(m.clone()), 20)
            .map_err(|e| e.to_string())?;
        let sg = LatticeSemigroup::orthant(n);
        let seq = PrimaryGradedSequence::powers(m.staircase().clone(), &sg.default_ell())
            .map_err(|e| e.to_string())?;
        let hs = seq.hilbert_samuel_sequence(20).map_err(|e| e.to_string())?;
        for k in 1..=20u64 {
            let want = binomial(k + n as u64 - 1, n as u64);
            ensure(
                h[k as usize - 1] == want && hs[k as usize - 1] == want,
                || {
                    format!(
                        "H({k}) = {} / {}, expected {want} (n = {n})",
                        h[k as usize - 1],
                        hs[k as usize - 1]
                    )
                },
            )?;
        }
    }
    Ok("e(m) = 1 for n = 2, 3; H(k) = C(k+n-1, n) for k <= 20".into())
}

fn monomial_main_theorem(ideals: &[MonomialIdealLocal]) -> Check {
    let mut max_k = 0;
    for a in ideals {
        let n = a.dim();
        let covol = a.region().map_err(|e| e.to_string())?.covol();
        let mut kmax = 8;
        let lead = loop {
            let oracle = power_colengths(&vecs(a), kmax);
            let lib = localalg::hilbert_samuel(&LocalIdeal::from(a.clone()), kmax)
                .map_err(|e| e.to_string())?;
            ensure(oracle == lib, || {
                format!("H differs from the lattice count for {:?}", a.generators())
            })?;
            let values: Vec<BigInt> = lib.iter().map(|&v| BigInt::from(v)).collect();
            match (
                stabilized_leading_coefficient(&values, n),
                leading_coefficient(&oracle, n),
            ) {
                (Some(f), Some(o)) => {
                    ensure(f.leading == o, || "library and oracle fits differ".into())?;
                    break o;
                }
                _ if kmax < 32 => kmax *= 2,
                _ => {
                    return Err(format!(
                        "H did not stabilize by k = {kmax} for {:?}",
                        a.generators()
                    ))
                }
            }
        };
        max_k = max_k.max(kmax);
        ensure(lead == covol, || {
            format!("fit {lead} != covol {covol} for {:?}", a.generators())
        })?;
    }
    Ok(format!(
        "{} ideals, fit leading coefficient = covol exactly (k <= {max_k})",
        ideals.len()
    ))
}

fn worked_values() -> Check {
    let m = monomial(&[&[1, 0], &[0, 1]]);
    let m2 = monomial(&[&[2, 0], &[0, 2]]);
    let c = monomial(&[&[3, 0], &[1, 1], &[0, 2]]);
    let pairs = |a: &MonomialIdealLocal| -> Vec<(i64, i64)> {
        a.generators().iter().map(|g| (g[0], g[1])).collect()
    };
    let two = Q::from_integer(2.into());
    let e = |a: &MonomialIdealLocal| {
        localalg::multiplicity(a)
            .map(Q::from_integer)
            .map_err(|e| e.to_string())
    };
    let checks: [(&str, Q, Q); 6] = [
        ("e((x2,y2))", e(&m2)?, &two * shoelace_covol(&pairs(&m2))),
        ("e((x3,xy,y2))", e(&c)?, &two * shoelace_covol(&pairs(&c))),
        (
            "colength((x2,y2))",
            Q::from_integer(m2.colength().map_err(|e| e.to_string())?.into()),
            Q::from_integer(box_colength(&vecs(&m2)).into()),
        ),
        (
            "covol(G(x,y)+G(x2,y2))",
            m.region()
                .unwrap()
                .minkowski_sum(&m2.region().unwrap())
                .map_err(|e| e.to_string())?
                .covol(),
            shoelace_covol(&pairs(&m.product(&m2).unwrap())),
        ),
        (
            "CV",
            mixed_covol(&[m.region().unwrap(), m2.region().unwrap()]).map_err(|e| e.to_string())?,
            (shoelace_covol(&pairs(&m.product(&m2).unwrap()))
                - shoelace_covol(&pairs(&m))
                - shoelace_covol(&pairs(&m2)))
                / &two,
        ),
        (
            "mixed multiplicity",
            Q::from_integer(
                localalg::mixed_multiplicity(&[m.clone(), m2.clone()])
                    .map_err(|e| e.to_string())?,
            ),
            shoelace_covol(&pairs(&m.product(&m2).unwrap()))
                - shoelace_covol(&pairs(&m))
                - shoelace_covol(&pairs(&m2)),
        ),
    ];
    let expected = [q(4, 1), q(5, 1), q(4, 1), q(9, 2), q(1, 1), q(2, 1)];
    for ((name, lib, oracle), want) in checks.iter().zip(&expected) {
        ensure(lib == oracle && oracle == want, || {
            format!("{name}: library {lib}, oracle {oracle}, expected {want}")
        })?;
    }
    Ok("4, 5, 4, 9/2, 1, 2 match the oracles".into())
}

fn inequality_suites() -> Check {
    let mut summary = Vec::new();
    for suite in [Suite::BmCovol, Suite::AfCovol, Suite::BmMult, Suite::Lech] {
        for (n, count) in [(2usize, 100usize), (3, 20)] {
            let report =
                run_suite(suite, &InstanceSpec::new(n, 7), count).map_err(|e| e.to_string())?;
            ensure(report.instances() >= count, || {
                format!("{suite} n={n}: {} instances", report.instances())
            })?;
            ensure(report.is_clean(), || {
                format!("{suite} n={n}: violations {:?}", report.violations())
            })?;
            for c in report.certificates.iter().filter(|c| c.homothetic) {
                ensure(c.outcome == Outcome::Equality, || {
                    format!(
                        "{suite} n={n}: homothetic instance {} not flagged equal",
                        c.index
                    )
                })?;
            }
            summary.push(format!("{suite}/{n}:{}", report.instances()));
        }
    }
    Ok(format!(
        "0 violations, homothetic pairs equal ({})",
        summary.join(" ")
    ))
}

fn initial_ideal_engine() -> Check {
    let a = PolyLocalIdeal::new(
        vec![
            poly_from_ints(&[(1, &[1, 0]), (1, &[0, 2])]),
            poly_from_ints(&[(1, &[0, 3])]),
        ],
        TermOrder::standard(2),
    )
    .map_err(|e| e.to_string())?;
    let init = initial_semigroup_ideal(&a, 1).map_err(|e| e.to_string())?;
    ensure(
        init.sorted_generators() == vec![lp(&[0, 3]), lp(&[1, 0])],
        || format!("in(a) = {:?}", init.sorted_generators()),
    )?;
    ensure(init.complement_count().ok() == Some(3), || {
        "colength != 3".into()
    })?;
    let report = multiplicity_report(&a, 6).map_err(|e| e.to_string())?;
    ensure(report.initial_multiplicities[0] == BigInt::from(3), || {
        "e(in(a)) != 3".into()
    })?;
    ensure(report.u.windows(2).all(|w| w[1] <= w[0]), || {
        "u_k increased".into()
    })?;
    let chain = localalg::lech_chain(&a).map_err(|e| e.to_string())?;
    ensure(
        chain.holds
            && chain.e == q(3, 1)
            && chain.e_in == BigInt::from(3)
            && chain.bound == BigInt::from(6),
        || format!("chain {} <= {} <= {}", chain.e, chain.e_in, chain.bound),
    )?;
    Ok("(x+y2, y3): colength 3, in = (x, y3), 3 <= 3 <= 6, u_k non-increasing for k <= 6".into())
}

fn polynomiality() -> Check {
    let mut total = 0;
    for (n, count) in [(2usize, 20usize), (3, 4)] {
        let report =
            suite_polynomiality(&InstanceSpec::new(n, 7), count).map_err(|e| e.to_string())?;
        ensure(report.is_clean(), || {
            format!("n={n}: inexact fits {:?}", report.violations())
        })?;
        total += report.instances();
    }
    Ok(format!(
        "{total} pairs, both grids exactly homogeneous of degree n"
    ))
}

fn cross_path(ideals: &[MonomialIdealLocal]) -> Check {
    for a in ideals {
        let p = a
            .to_poly_ideal(&TermOrder::standard(a.dim()))
            .map_err(|e| e.to_string())?;
        let echelon = initial_semigroup_ideal(&p, 1)
            .and_then(|s| s.complement_count())
            .map_err(|e| e.to_string())?;
        let stair = a
            .staircase()
            .complement_count()
            .map_err(|e| e.to_string())?;
        ensure(echelon == stair, || {
            format!("{echelon} != {stair} for {:?}", a.generators())
        })?;
    }
    Ok(format!(
        "{} ideals, echelon colength = staircase count",
        ideals.len()
    ))
}

fn additivity(ideals: &[MonomialIdealLocal]) -> Check {
    let mut pairs = 0;
    for w in ideals.windows(2).filter(|w| w[0].dim() == w[1].dim()) {
        let sum = w[0]
            .region()
            .unwrap()
            .minkowski_sum(&w[1].region().unwrap())
            .map_err(|e| e.to_string())?;
        let prod = w[0]
            .product(&w[1])
            .and_then(|p| p.region())
            .map_err(|e| e.to_string())?;
        ensure(sum.facets() == prod.facets(), || {
            format!("facets differ for {:?}", w[0].generators())
        })?;
        pairs += 1;
    }
    let corpus: Vec<LocalIdeal> = lech_corpus(2)
        .into_iter()
        .map(|g| PolyLocalIdeal::new(g, TermOrder::standard(2)).map(LocalIdeal::from))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let mut poly_pairs = 0;
    for (i, a) in corpus.iter().enumerate() {
        for b in &corpus[i..] {
            let (ia, ib) = (a.initial_staircase(1), b.initial_staircase(1));
            let iab = a
                .product(b)
                .and_then(|p| p.initial_staircase(1))
                .map_err(|e| e.to_string())?;
            let sum = ia.and_then(|x| x.sum(&ib?)).map_err(|e| e.to_string())?;
            ensure(sum.min_generators().iter().all(|g| iab.contains(g)), || {
                format!("I(a)+I(b) not in I(ab) for corpus pair {i}")
            })?;
            poly_pairs += 1;
        }
    }
    Ok(format!(
        "{pairs} monomial pairs with equal facets, {poly_pairs} corpus pairs contained"
    ))
}

fn main() {
    let ideals = corpus();
    let criteria: Vec<Criterion> = vec![
        (
            "regular-ring sanity",
            Duration::from_secs(1),
            Box::new(regular_ring),
        ),
        (
            "monomial main theorem",
            Duration::from_secs(60),
            Box::new(|| monomial_main_theorem(&ideals)),
        ),
        (
            "worked values",
            Duration::from_secs(60),
            Box::new(worked_values),
        ),
        (
            "inequality suites",
            Duration::from_secs(120),
            Box::new(inequality_suites),
        ),
        (
            "initial-ideal engine",
            Duration::from_secs(30),
            Box::new(initial_ideal_engine),
        ),
        (
            "polynomiality",
            Duration::from_secs(120),
            Box::new(polynomiality),
        ),
        (
            "cross-path colength",
            Duration::from_secs(120),
            Box::new(|| cross_path(&ideals)),
        ),
        (
            "additivity",
            Duration::from_secs(120),
            Box::new(|| additivity(&ideals)),
        ),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = result.and_then(|msg| {
            if elapsed <= *budget {
                Ok(msg)
            } else {
                Err(format!("{msg}; took {elapsed:.2?}, budget {budget:?}"))
            }
        });
        match result {
            Ok(msg) => println!("PASS {} {name}: {msg} [{elapsed:.2?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
