//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`) and exits non-zero when any
//! criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lctkit::apps::{self, PowerMeasureSpec};
use lctkit::epsilon;
use lctkit::lattice::{ArrangementLattice, LatticeCaps};
use lctkit::partition::Partition;
use lctkit::rational::ExtRational;
use lctkit::roots::{CartanType, Family, RootSystem};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use serde_json::Value;

type Check = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Check);

const GOLDEN: &str = include_str!("data/gl10_figure.json");

fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

fn eps(nu: &Partition) -> ExtRational {
    epsilon::epsilon_orbit_gln(nu).unwrap().value
}

fn q(num: i64, den: i64) -> ExtRational {
    ExtRational::ratio(num, den)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn partition_of(v: &Value) -> Partition {
    let parts: Vec<u32> = serde_json::from_value(v.clone()).unwrap();
    Partition::new(parts).unwrap()
}

fn edge_set(v: &Value) -> BTreeSet<(Partition, Partition)> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|e| (partition_of(&e["from"]), partition_of(&e["to"])))
        .collect()
}

fn appendix_a() -> Check {
    let out = lctkit::cli::run(["lctkit", "orbit-poset", "--n", "10"]);
    ensure(out.code == 0, || {
        format!("exit {}: {}", out.code, out.stderr)
    })?;
    let ours: Value = serde_json::from_str(&out.stdout).unwrap();
    let ours = &ours["result"];
    let figure: Value = serde_json::from_str(GOLDEN).unwrap();

    let nodes = |v: &Value| -> BTreeMap<Partition, Value> {
        v["nodes"]
            .as_array()
            .unwrap()
            .iter()
            .map(|n| (partition_of(&n["partition"]), n["epsilon"].clone()))
            .collect()
    };
    let (ours_nodes, figure_nodes) = (nodes(ours), nodes(&figure));
    ensure(ours_nodes.len() == 42, || {
        format!("{} nodes", ours_nodes.len())
    })?;
    ensure(ours_nodes == figure_nodes, || {
        "ε values differ from the figure".into()
    })?;

    let spot = [
        ("10", q(1, 5)),
        ("9,1", q(2, 9)),
        ("8,2", q(1, 4)),
        ("7,3", q(2, 7)),
        ("6,4", q(13, 41)),
        ("6,3,1", q(1, 3)),
        ("5,5", q(7, 20)),
        ("5,4,1", q(3, 8)),
        ("5,3,2", q(2, 5)),
        ("4,4,2", q(11, 24)),
        ("4,3,3", q(1, 2)),
        ("3,3,3,1", q(17, 27)),
        ("3,3,2,2", q(2, 3)),
        ("2^5", q(1, 1)),
        ("1^10", ExtRational::Infinite),
    ];
    for (text, want) in spot {
        let got = eps(&p(text));
        ensure(got == want, || {
            format!("({text}) gives {got}, expected {want}")
        })?;
    }

    let (ours_edges, figure_edges) = (edge_set(&ours["edges"]), edge_set(&figure["edges"]));
    if ours_edges != figure_edges {
        let show = |set: Vec<&(Partition, Partition)>| {
            set.iter()
                .map(|(a, b)| format!("({a})->({b})"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        return Err(format!(
            "42/42 ε values match; edges differ: figure has {} arrows, cover relation has {}; \
             figure-only: {}; covers missing from figure: {}",
            figure_edges.len(),
            ours_edges.len(),
            show(figure_edges.difference(&ours_edges).collect()),
            show(ours_edges.difference(&figure_edges).collect()),
        ));
    }
    Ok(format!("42 nodes, {} edges", ours_edges.len()))
}

fn regular_subregular() -> Check {
    for n in 2..=12u32 {
        let got = eps(&Partition::row(n));
        ensure(got == q(2, n.into()), || format!("({n}) gives {got}"))?;
    }
    // For n = 2 the subregular orbit (1,1) is the zero orbit.
    ensure(eps(&p("1,1")).is_infinite(), || "(1,1) is not +inf".into())?;
    for n in 3..=12u32 {
        let nu = Partition::new(vec![n - 1, 1]).unwrap();
        let got = eps(&nu);
        ensure(got == q(2, i64::from(n) - 1), || {
            format!("({nu}) gives {got}")
        })?;
    }
    Ok("(n) → 2/n for n ≤ 12; (n−1,1) → 2/(n−1) for 3 ≤ n ≤ 12, (1,1) → inf".into())
}

fn maximal_parabolic() -> Check {
    let mut count = 0;
    for n in 2..=12u32 {
        let mut max_finite = None;
        for nu in Partition::enumerate(n, 30).unwrap() {
            let e = eps(&nu);
            if nu.largest() == 2 {
                ensure(e == q(1, 1), || format!("({nu}) gives {e}"))?;
                count += 1;
            }
            if !e.is_infinite() {
                max_finite = max_finite.max(Some(e));
            }
        }
        ensure(max_finite == Some(q(1, 1)), || {
            format!("max finite ε over P({n}) is {max_finite:?}")
        })?;
    }
    Ok(format!(
        "{count} orbits with parts ≤ 2 at ε = 1; max finite ε = 1 for 2 ≤ n ≤ 12"
    ))
}

fn oracle_equivalence() -> Check {
    let mut count = 0;
    for n in 1..=7u32 {
        let rs = RootSystem::gl(n as usize).unwrap();
        let lattice = ArrangementLattice::enumerate(&rs, LatticeCaps::default()).unwrap();
        for nu in Partition::enumerate(n, 30).unwrap() {
            let levi = rs.gl_block_levi(&nu.conjugate()).unwrap();
            let (oracle, _) = lattice.relative_lct(&levi, 1).unwrap();
            let closed = eps(&nu);
            ensure(oracle == closed, || {
                format!("({nu}): closed {closed}, oracle {oracle}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} orbits, n ≤ 7"))
}

fn collapse_m_ge_2() -> Check {
    let mut count = 0;
    for n in 1..=6u32 {
        let rs = RootSystem::gl(n as usize).unwrap();
        let lattice = ArrangementLattice::enumerate(&rs, LatticeCaps::default()).unwrap();
        for nu in Partition::enumerate(n, 30).unwrap() {
            if nu.len() == 1 {
                continue; // the full Levi: no roots outside it
            }
            let levi = rs.gl_block_levi(&nu).unwrap();
            for m in [2, 3] {
                let (oracle, _) = lattice.relative_lct(&levi, m).unwrap();
                let want = q(2, nu.len() as i64);
                ensure(oracle == want, || {
                    format!("({nu}), m={m}: oracle {oracle}, expected {want}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} (Levi, m) pairs, n ≤ 6"))
}

fn coxeter_table() -> Check {
    let types = [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::B, 3),
        (Family::B, 4),
        (Family::C, 3),
        (Family::D, 4),
        (Family::F, 4),
        (Family::G, 2),
    ];
    let mut shown = Vec::new();
    for (family, rank) in types {
        let ty = CartanType::new(family, rank).unwrap();
        let rs = RootSystem::build(ty).unwrap();
        let h = rs.num_roots() / rank;
        let closed = q(2, h as i64);
        let lattice = ArrangementLattice::enumerate(&rs, LatticeCaps::default()).unwrap();
        let (oracle, _) = lattice.lct();
        ensure(oracle == closed, || {
            format!("{ty}: 2/h = {closed}, oracle {oracle}")
        })?;
        shown.push(format!("{ty}:{closed}"));
    }
    Ok(shown.join(" "))
}

fn monotonicity() -> Check {
    let mut pairs = 0;
    for n in 1..=10u32 {
        let all = Partition::enumerate(n, 30).unwrap();
        let values: Vec<_> = all.iter().map(eps).collect();
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                if a.dominates(b).unwrap() {
                    ensure(values[j] >= values[i], || {
                        format!("({b}) ⪯ ({a}) but ε {} < {}", values[j], values[i])
                    })?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} comparable pairs, n ≤ 10"))
}

fn power_measure() -> Check {
    for n in 2..=12u32 {
        for ell in 2..=12u32 {
            let spec = PowerMeasureSpec::new(n, ell).unwrap();
            let direct = apps::epsilon_power_measure(&spec).unwrap();
            let homogeneous = apps::epsilon_homogeneous_unitary(&spec.levi_partition).unwrap();
            let want = q(1, n.min(ell).into());
            ensure(direct == want && homogeneous == want, || {
                format!("n={n}, ℓ={ell}: {direct} / {homogeneous}, expected {want}")
            })?;
        }
    }
    Ok("121 (n, ℓ) pairs".into())
}

fn heuristic_boundary() -> Check {
    let heuristic = |nu: &Partition| q(2, nu.largest().into());
    for n in 1..=7u32 {
        for nu in Partition::enumerate(n, 30).unwrap() {
            if nu.largest() == 1 {
                continue; // zero orbit
            }
            let e = eps(&nu);
            ensure(e == heuristic(&nu), || format!("({nu}) gives {e} ≠ 2/ν₁"))?;
        }
    }
    let failures: Vec<_> = Partition::enumerate(8, 30)
        .unwrap()
        .into_iter()
        .filter(|nu| nu.largest() > 1 && eps(nu) != heuristic(nu))
        .collect();
    ensure(!failures.is_empty(), || "no counterexample at n = 8".into())?;
    let e44 = eps(&p("4,4"));
    ensure(e44 == q(11, 24), || format!("(4,4) gives {e44}"))?;
    let shown: Vec<_> = failures.iter().map(|nu| format!("({nu})")).collect();
    Ok(format!(
        "holds for n ≤ 7; n = 8 counterexamples: {}",
        shown.join(" ")
    ))
}

fn key_set(subs: &[lctkit::roots::Subsystem]) -> BTreeSet<u128> {
    subs.iter().map(|s| s.positive().bits()).collect()
}

fn pseudo_levi_type_a() -> Check {
    let caps = LatticeCaps::default();
    let mut count = 0;
    for n in 1..=6u32 {
        let rs = RootSystem::gl(n as usize).unwrap();
        for lambda in Partition::enumerate(n, 30).unwrap() {
            let levi = rs.gl_block_levi(&lambda).unwrap();
            let got = apps::epsilon_pseudo_levi(&rs, &levi, caps).unwrap().value;
            let want = match lambda.len() {
                1 => ExtRational::Infinite,
                parts => q(1, parts as i64),
            };
            ensure(got == want, || {
                format!("λ = ({lambda}): {got}, expected {want}")
            })?;
            count += 1;
        }
    }
    let mut shown = Vec::new();
    for ty in ["A2", "B2", "G2"] {
        let rs = RootSystem::parse(ty).unwrap();
        let brute = key_set(&apps::closed_subsystems_brute_force(&rs).unwrap());
        let single = key_set(&apps::pseudo_levi_subsystems(&rs, caps).unwrap());
        let recursive = key_set(&apps::bds_closed_subsystems(&rs, caps).unwrap());
        ensure(single == brute && recursive == brute, || {
            format!(
                "{ty}: brute force {}, pseudo-Levi {}, recursive {}",
                brute.len(),
                single.len(),
                recursive.len()
            )
        })?;
        shown.push(format!("{ty}:{}", brute.len()));
    }
    Ok(format!(
        "{count} Levis at 1/N; closed subsystems {}",
        shown.join(" ")
    ))
}

fn property_suite() -> Check {
    for n in 0..=8u32 {
        let all = Partition::enumerate(n, 30).unwrap();
        for a in &all {
            ensure(&a.conjugate().conjugate() == a, || {
                format!("({a}) not an involution")
            })?;
            for b in &all {
                let forward = a.dominates(b).unwrap();
                let back = b.conjugate().dominates(&a.conjugate()).unwrap();
                ensure(forward == back, || {
                    format!("conjugation does not reverse ({a}), ({b})")
                })?;
            }
        }
    }

    let choose2 = |x: u32| u64::from(x) * u64::from(x.saturating_sub(1)) / 2;
    let mut identities = 0;
    for n in 0..=9u32 {
        for nu in Partition::enumerate(n, 30).unwrap() {
            for k in 0..=n {
                let s = nu.fill_stats(k).unwrap();
                let via_eta: u64 = s.eta_min.parts().iter().map(|&e| choose2(e)).sum();
                let via_phi: u64 = s.phi.iter().map(|&c| u64::from(c) - 1).sum();
                // Smallest Σ C(η_l, 2) over η ⊢ k fitting inside the rows of ν.
                let brute = Partition::enumerate(k, 30)
                    .unwrap()
                    .into_iter()
                    .filter(|eta| {
                        eta.len() <= nu.len()
                            && eta.parts().iter().zip(nu.parts()).all(|(e, v)| e <= v)
                    })
                    .map(|eta| eta.parts().iter().map(|&e| choose2(e)).sum::<u64>())
                    .min()
                    .unwrap();
                ensure(
                    s.psi == via_eta && s.psi == via_phi && s.psi == brute,
                    || {
                        format!(
                            "({nu}), k={k}: ψ={} η-form={via_eta} φ-form={via_phi} min={brute}",
                            s.psi
                        )
                    },
                )?;
                identities += 1;
            }
        }
    }

    let mut runner = TestRunner::new_with_rng(
        Config {
            cases: 1000,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    );
    let strategy = prop::collection::vec((1u64..1000, 1u64..1000), 1..12);
    runner
        .run(&strategy, |mut pairs| {
            pairs.sort_by_key(|&(a, b)| q(a as i64, b as i64));
            let (mut sa, mut sb) = (0i64, 0i64);
            let mut prev: Option<ExtRational> = None;
            for &(a, b) in &pairs {
                sa += a as i64;
                sb += b as i64;
                let running = q(sa, sb);
                prop_assert!(prev.as_ref().is_none_or(|p| *p <= running));
                prev = Some(running);
            }
            Ok(())
        })
        .map_err(|e| format!("mediant property: {e}"))?;

    let mut collapses = 0;
    for n in 1..=10u32 {
        for nu in Partition::enumerate(n, 30).unwrap() {
            for m in 0..=3 {
                let endpoint = epsilon::rlct_endpoint(&nu, m).unwrap().0;
                let scan = epsilon::rlct_full_scan(&nu, m).unwrap().0;
                ensure(endpoint == scan, || {
                    format!("({nu}), m={m}: endpoint {endpoint}, scan {scan}")
                })?;
                collapses += 1;
            }
        }
    }
    Ok(format!(
        "conjugation n ≤ 8; {identities} ψ/η cases; 1000 mediant chains; {collapses} endpoint checks"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (1, "appendix-a-figure", Duration::from_secs(1), appendix_a),
        (
            2,
            "regular-subregular",
            Duration::from_secs(1),
            regular_subregular,
        ),
        (
            3,
            "maximal-parabolic",
            Duration::from_secs(1),
            maximal_parabolic,
        ),
        (
            4,
            "oracle-equivalence",
            Duration::from_secs(300),
            oracle_equivalence,
        ),
        (
            5,
            "m-ge-2-collapse",
            Duration::from_secs(60),
            collapse_m_ge_2,
        ),
        (
            6,
            "coxeter-lct-table",
            Duration::from_secs(120),
            coxeter_table,
        ),
        (
            7,
            "dominance-monotonicity",
            Duration::from_secs(10),
            monotonicity,
        ),
        (
            8,
            "power-measure-routes",
            Duration::from_secs(1),
            power_measure,
        ),
        (
            9,
            "two-over-nu1-boundary",
            Duration::from_secs(1),
            heuristic_boundary,
        ),
        (
            10,
            "pseudo-levi-type-a",
            Duration::from_secs(120),
            pseudo_levi_type_a,
        ),
        (
            11,
            "property-suite",
            Duration::from_secs(60),
            property_suite,
        ),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => {
                Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}"))
            }
            other => other,
        };
        let (tag, detail) = match outcome {
            Ok(detail) => ("PASS", detail),
            Err(detail) => {
                failed += 1;
                ("FAIL", detail)
            }
        };
        println!(
            "{tag} {id:>2} {name} [{:.3}s] {detail}",
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
