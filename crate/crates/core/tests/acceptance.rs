//! Acceptance run: one PASS/FAIL line per criterion.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use solvcover::constructions::wreath_block_embedding;
use solvcover::cover::{class_counting_bound, counting_program_bound};
use solvcover::solvabilizer::{maximal_solvable_subgroups, mu_pairwise_generators, mu_s};
use solvcover::theorems::{family_bounds, verify_gl2_cover, Certificate};
use solvcover::{
    parse_group_spec, reduce_instance, sol_incidence, solve_alpha, solve_exact, solve_product,
    verify_certificate, CoverInstance, GroupTable, Mode, Permutation, SolveBudget, SolveOptions,
    Status, DEFAULT_CAP,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn opts(secs: u64) -> SolveOptions {
    SolveOptions {
        budget: SolveBudget {
            time_limit: Duration::from_secs(secs),
            ..SolveBudget::default()
        },
        ..SolveOptions::default()
    }
}

/// Checks a solver certificate and that it is irredundant.
fn check_certificate(t: &GroupTable, mode: Mode, cert: &[Permutation]) -> Result<(), String> {
    let full = Certificate::new(mode, cert.to_vec());
    let v = verify_certificate(t, &full).map_err(|e| e.to_string())?;
    ensure(v.valid, || {
        format!(
            "certificate does not cover ({} of {})",
            v.covered, v.group_order
        )
    })?;
    for i in 0..cert.len() {
        let mut fewer = cert.to_vec();
        fewer.remove(i);
        let v = verify_certificate(t, &Certificate::new(mode, fewer)).map_err(|e| e.to_string())?;
        ensure(!v.valid, || format!("certificate element {i} is redundant"))?;
    }
    Ok(())
}

fn golden() -> Check {
    // (spec, α, α_inv) with None for ∞.
    let rows: [(&str, usize, Option<usize>); 14] = [
        ("alternating(5)", 3, Some(3)),
        ("symmetric(5)", 5, Some(5)),
        ("psl2(7)", 5, None),
        ("pgl2(7)", 7, Some(7)),
        ("alternating(6)", 9, Some(9)),
        ("psl2(8)", 7, Some(7)),
        ("psl2(11)", 15, None),
        ("m10", 9, Some(9)),
        ("pgl2(9)", 8, Some(8)),
        ("symmetric(6)", 9, Some(9)),
        ("psl2(13)", 13, Some(13)),
        ("pgl2(11)", 11, Some(11)),
        ("pgammal2(9)", 9, Some(9)),
        ("pgammal2(8)", 7, Some(7)),
    ];
    let mut slowest = (Duration::ZERO, "");
    for (spec, alpha, alpha_inv) in rows {
        let t = table(spec);
        for (mode, want) in [(Mode::All, Some(alpha)), (Mode::Involutions, alpha_inv)] {
            let start = Instant::now();
            let out = solve_alpha(&t, mode, &opts(120)).map_err(|e| format!("{spec}: {e}"))?;
            let took = start.elapsed();
            if took > slowest.0 {
                slowest = (took, spec);
            }
            match want {
                Some(v) => {
                    ensure(out.status == Status::Exact && out.lower == v, || {
                        format!(
                            "{spec} {mode}: expected {v}, got {:?} [{}, {:?}]",
                            out.status, out.lower, out.upper
                        )
                    })?;
                    let cert = out
                        .certificate_perms
                        .as_ref()
                        .ok_or(format!("{spec}: no certificate"))?;
                    ensure(cert.len() == v, || {
                        format!("{spec}: certificate size {}", cert.len())
                    })?;
                    check_certificate(&t, mode, cert).map_err(|e| format!("{spec} {mode}: {e}"))?;
                }
                None => ensure(out.status == Status::Infeasible, || {
                    format!("{spec} {mode}: expected ∞, got {:?}", out.status)
                })?,
            }
        }
    }
    Ok(format!(
        "14 groups, slowest solve {:.2?} ({})",
        slowest.0, slowest.1
    ))
}

fn membership_counts(
    census: &solvcover::solvabilizer::MaximalSolvableCensus,
    x: u32,
    orders: &[usize],
) -> Vec<usize> {
    orders
        .iter()
        .map(|&o| {
            census
                .containing(x)
                .filter(|&i| census.subgroups[i].len() == o)
                .count()
        })
        .collect()
}

fn census() -> Check {
    let a5 = table("alternating(5)");
    let inc = sol_incidence(&a5).map_err(|e| e.to_string())?;
    let c = maximal_solvable_subgroups(&inc);
    ensure(c.summary() == vec![(6, 10), (10, 6), (12, 5)], || {
        format!("A5 census {:?}", c.summary())
    })?;
    let find = |t: &GroupTable, cyc: &str| {
        t.index_of(&Permutation::parse_cycles(cyc, t.degree()).unwrap())
            .unwrap()
    };
    for (cyc, counts, sol) in [
        ("(1,2)(3,4)", [1, 2, 2], 36),
        ("(1,2,3)", [2, 0, 1], 24),
        ("(1,2,3,4,5)", [0, 1, 0], 10),
    ] {
        let x = find(&a5, cyc);
        let got = membership_counts(&c, x, &[12, 10, 6]);
        ensure(got == counts, || format!("A5 {cyc}: membership {got:?}"))?;
        ensure(inc.sol_size(x) == sol, || {
            format!("A5 {cyc}: |Sol| = {}", inc.sol_size(x))
        })?;
    }
    let s5 = table("symmetric(5)");
    let inc = sol_incidence(&s5).map_err(|e| e.to_string())?;
    let c = maximal_solvable_subgroups(&inc);
    ensure(c.summary() == vec![(12, 10), (20, 6), (24, 5)], || {
        format!("S5 census {:?}", c.summary())
    })?;
    for (cyc, counts, sol) in [
        ("(1,2)", [3, 0, 4], 72),
        ("(1,2)(3,4)", [1, 2, 2], 72),
        ("(1,2,3)", [2, 0, 1], 48),
        ("(1,2,3,4,5)", [0, 1, 0], 20),
    ] {
        let x = find(&s5, cyc);
        let got = membership_counts(&c, x, &[24, 20, 12]);
        ensure(got == counts, || format!("S5 {cyc}: membership {got:?}"))?;
        ensure(inc.sol_size(x) == sol, || {
            format!("S5 {cyc}: |Sol| = {}", inc.sol_size(x))
        })?;
    }
    Ok("A5 and S5 subgroup classes, memberships and |Sol| match".into())
}

const CERTS: [(&str, usize, Mode, usize); 13] = [
    ("a5", 60, Mode::Involutions, 3),
    ("s5", 120, Mode::Involutions, 5),
    ("s5_class", 120, Mode::Involutions, 5),
    ("psl2_7", 168, Mode::All, 5),
    ("pgl2_7", 336, Mode::Involutions, 7),
    ("psl2_9", 360, Mode::Involutions, 9),
    ("psl2_8", 504, Mode::Involutions, 7),
    ("psl2_11", 660, Mode::All, 15),
    ("m10", 720, Mode::Involutions, 9),
    ("s6", 720, Mode::Involutions, 9),
    ("pgl2_9", 720, Mode::Involutions, 8),
    ("psl2_13", 1092, Mode::Involutions, 13),
    ("pgammal2_8", 1512, Mode::Involutions, 7),
];

fn certificates() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (name, order, mode, size) in CERTS {
        let cert = load_cert(name);
        let spec = cert
            .group
            .clone()
            .ok_or(format!("{name}: no group header"))?;
        let t = solvcover::build(&spec, DEFAULT_CAP).map_err(|e| format!("{name}: {e}"))?;
        ensure(t.order() == order, || {
            format!("{name}: group order {}", t.order())
        })?;
        ensure(cert.mode == mode && cert.elements.len() == size, || {
            format!("{name}: header mismatch")
        })?;
        let v = verify_certificate(&t, &cert).map_err(|e| format!("{name}: {e}"))?;
        ensure(v.valid, || {
            format!("{name}: does not cover ({} of {order})", v.covered)
        })?;
        let drops: Vec<usize> = if name.starts_with("a5") || name.starts_with("s5") {
            (0..size).collect()
        } else {
            vec![rng.random_range(0..size)]
        };
        for i in drops {
            let mut fewer = cert.clone();
            fewer.elements.remove(i);
            fewer.claimed_size = None;
            let v = verify_certificate(&t, &fewer).map_err(|e| e.to_string())?;
            ensure(!v.valid && v.first_uncovered.is_some(), || {
                format!("{name}: still covers without element {i}")
            })?;
        }
    }
    Ok("12 published cover lists (plus the second S5 list) verify; deletions fail".into())
}

fn counting_bound() -> Check {
    ensure(
        counting_program_bound(&[vec![2, 0, 1]], &[6]) == Some(3),
        || "2x₂+0x₃+1x₅ ≥ 6 bound".into(),
    )?;
    let t = table("alternating(5)");
    let inc = sol_incidence(&t).map_err(|e| e.to_string())?;
    let inst = reduce_instance(&inc, Mode::All).map_err(|e| e.to_string())?;
    let b = class_counting_bound(&inst);
    ensure(b == 3, || format!("class-counting bound on A5 = {b}"))?;
    Ok("class-counting bound on A5 = 3".into())
}

fn gl2_covers() -> Check {
    let mut parts = Vec::new();
    for q in [5u64, 9, 13] {
        let start = Instant::now();
        let r = verify_gl2_cover(q, DEFAULT_CAP).map_err(|e| format!("q={q}: {e}"))?;
        ensure(r.passed() && r.size == q as usize, || {
            format!("q={q}: cover check failed")
        })?;
        if q < 13 {
            ensure(r.gl2.as_ref().is_some_and(|v| v.valid), || {
                format!("q={q}: GL(2,{q}) not verified natively")
            })?;
        }
        let psl = r.psl.as_ref().ok_or(format!("q={q}: no projected check"))?;
        ensure(psl.valid, || format!("q={q}: projected cover fails"))?;
        ensure(
            r.psl_certificate
                .as_ref()
                .is_some_and(|c| c.len() == q as usize),
            || format!("q={q}: projected certificate size"),
        )?;
        parts.push(format!("q={q} {:.2?}", start.elapsed()));
    }
    Ok(parts.join(", "))
}

fn products() -> Check {
    let factors = [table("psl2(7)"), table("psl2(9)")];
    let a = solve_product(&factors, Mode::All, &opts(120)).map_err(|e| e.to_string())?;
    let i = solve_product(&factors, Mode::Involutions, &opts(120)).map_err(|e| e.to_string())?;
    ensure(a.value() == Some(5) && i.value() == Some(9), || {
        format!("PSL(2,7) × PSL(2,9): {:?} / {:?}", a.value(), i.value())
    })?;
    let g = table("product(psl2(4),symmetric(3))");
    ensure(g.order() == 360, || format!("order {}", g.order()))?;
    let parts = [table("psl2(4)"), table("symmetric(3)")];
    for mode in [Mode::All, Mode::Involutions] {
        let direct = solve_alpha(&g, mode, &opts(120)).map_err(|e| e.to_string())?;
        let split = solve_product(&parts, mode, &opts(120)).map_err(|e| e.to_string())?;
        ensure(
            direct.value() == Some(3) && split.value() == Some(3),
            || {
                format!(
                    "PSL(2,4) × S3 {mode}: {:?} vs {:?}",
                    direct.value(),
                    split.value()
                )
            },
        )?;
        let cert = split.certificate_perms.ok_or("no lifted certificate")?;
        check_certificate(&g, mode, &cert)?;
    }
    Ok("α = 5, α_inv = 9; materialized PSL(2,4) × S3 agrees (3/3)".into())
}

fn wreath() -> Check {
    let spec = parse_group_spec("wreath(psl2(4),2,cycle)").map_err(|e| e.to_string())?;
    let r = family_bounds(&spec);
    for mode in [Mode::All, Mode::Involutions] {
        ensure(r.implied(mode) == Some((3, Some(3))), || {
            format!("{mode}: {:?}", r.implied(mode))
        })?;
    }
    // Witness: a base cover placed in the first block covers the whole group.
    let (base, w) = (table("psl2(4)"), table("wreath(psl2(4),2,cycle)"));
    for mode in [Mode::All, Mode::Involutions] {
        let cert = solve_alpha(&base, mode, &opts(60))
            .map_err(|e| e.to_string())?
            .certificate_perms
            .unwrap_or_default();
        let lifted: Vec<Permutation> = cert.iter().map(|x| wreath_block_embedding(x, 2)).collect();
        check_certificate(&w, mode, &lifted)?;
    }
    Ok("α = α_inv = 3 from the base bound and α > 2; lifted 3-element covers verify on all 7200 elements".into())
}

fn quotient() -> Check {
    let t = table("sl2(5)");
    let via = solve_alpha(&t, Mode::All, &opts(120)).map_err(|e| e.to_string())?;
    let direct = solve_alpha(
        &t,
        Mode::All,
        &SolveOptions {
            use_quotient: false,
            ..opts(120)
        },
    )
    .map_err(|e| e.to_string())?;
    ensure(via.via_quotient && !direct.via_quotient, || {
        "paths not distinct".into()
    })?;
    ensure(via.value() == Some(3) && direct.value() == Some(3), || {
        format!("quotient {:?}, direct {:?}", via.value(), direct.value())
    })?;
    for out in [&via, &direct] {
        check_certificate(&t, Mode::All, out.certificate_perms.as_ref().unwrap())?;
    }
    Ok("α(SL(2,5)) = 3 by both paths".into())
}

const CASES: usize = 200;

fn properties() -> Check {
    let pool = pool();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let incs: Vec<_> = pool
        .tables
        .iter()
        .map(|t| sol_incidence(t).unwrap())
        .collect();

    // Equivariance against the brute-force oracle on small groups, and
    // conjugation in general.
    for case in 0..CASES {
        let k = rng.random_range(0..incs.len());
        let (t, inc) = (&pool.tables[k], &incs[k]);
        let x = rng.random_range(0..t.order() as u32);
        let g = rng.random_range(0..t.order() as u32);
        let lhs = inc.sol(t.conj(x, g));
        let rhs = inc.sol(x).conjugated(t, g);
        ensure(lhs == rhs, || {
            format!("equivariance fails in {} (case {case})", pool.names[k])
        })?;
        if t.order() <= 120 && case % 8 == 0 {
            let oracle = oracle_sol(t, x);
            ensure(inc.sol(x).iter().collect::<Vec<_>>() == oracle, || {
                format!("Sol disagrees with oracle in {}", pool.names[k])
            })?;
        }
    }
    // Power monotonicity.
    for _ in 0..CASES {
        let k = rng.random_range(0..incs.len());
        let (t, inc) = (&pool.tables[k], &incs[k]);
        let x = rng.random_range(0..t.order() as u32);
        let n = rng.random_range(2..12u64);
        ensure(inc.sol(x).is_subset(&inc.sol(t.power(x, n))), || {
            format!("Sol(x) ⊄ Sol(x^{n}) in {}", pool.names[k])
        })?;
    }
    // Any two involutions generate a dihedral, hence solvable, group.
    for _ in 0..CASES {
        let k = rng.random_range(0..incs.len());
        let (t, inc) = (&pool.tables[k], &incs[k]);
        let invs: Vec<u32> = (0..t.order() as u32)
            .filter(|&x| t.order_of(x) == 2)
            .collect();
        let (&s, &u) = (
            invs.choose(&mut rng).unwrap(),
            invs.choose(&mut rng).unwrap(),
        );
        ensure(inc.contains(s, u), || {
            format!("involution pair not solvable in {}", pool.names[k])
        })?;
    }
    // Sol(x) is the union of the maximal solvable subgroups containing x.
    let censuses: Vec<_> = incs
        .iter()
        .take(5)
        .map(maximal_solvable_subgroups)
        .collect();
    for _ in 0..CASES {
        let k = rng.random_range(0..censuses.len());
        let (t, inc, c) = (&pool.tables[k], &incs[k], &censuses[k]);
        let x = rng.random_range(0..t.order() as u32);
        let mut union = solvcover::ElementSet::new(t.order());
        for i in c.containing(x) {
            union.union_with(&c.subgroups[i]);
        }
        ensure(union == inc.sol(x), || {
            format!("census union differs in {}", pool.names[k])
        })?;
    }
    // Solver against exhaustive search on random small instances.
    for case in 0..CASES {
        let universe = rng.random_range(1..=24);
        let cands = rng.random_range(1..=14);
        let rows: Vec<Vec<usize>> = (0..cands)
            .map(|_| (0..universe).filter(|_| rng.random_bool(0.25)).collect())
            .collect();
        let inst = CoverInstance::from_rows(universe, &rows);
        let expect = brute_force_cover(&inst);
        let got = solve_exact(&inst, &SolveOptions::default());
        match expect {
            None => ensure(got.status == Status::Infeasible, || {
                format!("case {case}: expected infeasible")
            })?,
            Some(v) => {
                ensure(got.value() == Some(v), || {
                    format!("case {case}: expected {v}, got {:?}", got.value())
                })?;
                let picks: Vec<usize> = got
                    .certificate
                    .unwrap()
                    .iter()
                    .map(|&e| inst.candidates.iter().position(|c| c.element == e).unwrap())
                    .collect();
                ensure(inst.is_cover(&picks), || {
                    format!("case {case}: certificate is not a cover")
                })?;
            }
        }
    }
    // Reduced group instances small enough for exhaustive search.
    let mut small = 0;
    for (k, inc) in incs.iter().enumerate() {
        for mode in [Mode::All, Mode::Involutions] {
            let Ok(inst) = reduce_instance(inc, mode) else {
                continue;
            };
            if inst.candidates.len() <= 14 {
                small += 1;
                let got = solve_exact(&inst, &SolveOptions::default());
                ensure(got.value() == brute_force_cover(&inst), || {
                    format!(
                        "{} {mode}: reduced instance disagrees with exhaustive search",
                        pool.names[k]
                    )
                })?;
            }
        }
    }
    // Restrictions of reduced group instances to at most 14 candidates.
    let reduced: Vec<CoverInstance> = incs
        .iter()
        .flat_map(|inc| [Mode::All, Mode::Involutions].map(|m| reduce_instance(inc, m)))
        .filter_map(Result::ok)
        .collect();
    for case in 0..CASES {
        let inst = reduced.choose(&mut rng).unwrap();
        let keep = rng.random_range(1..=14.min(inst.candidates.len()));
        let mut sub = inst.clone();
        sub.candidates = inst
            .candidates
            .choose_multiple(&mut rng, keep)
            .cloned()
            .collect();
        sub.candidates.sort_by_key(|c| c.element);
        let got = solve_exact(
            &sub,
            &SolveOptions {
                symmetry: false,
                ..SolveOptions::default()
            },
        );
        let expect = brute_force_cover(&sub);
        ensure(
            got.value() == expect || (expect.is_none() && got.status == Status::Infeasible),
            || {
                format!(
                    "restricted case {case}: expected {expect:?}, got {:?}",
                    got.value()
                )
            },
        )?;
        small += 1;
    }
    // Reduction soundness: exhaustive search over the unreduced families of
    // A5 and S5 finds no cover below the solved value.
    for (k, spec) in [(0usize, "A5"), (1, "S5")] {
        let (t, inc) = (&pool.tables[k], &incs[k]);
        for mode in [Mode::All, Mode::Involutions] {
            let solved =
                solve_alpha(t, mode, &SolveOptions::default()).map_err(|e| e.to_string())?;
            let v = solved.value().ok_or(format!("{spec}: not exact"))?;
            let allowed: Vec<u32> = (0..t.order() as u32)
                .filter(|&x| !inc.is_radical(x) && (mode == Mode::All || t.order_of(x) == 2))
                .collect();
            ensure(brute_force_alpha(inc, &allowed, v - 1).is_none(), || {
                format!("{spec} {mode}: smaller unreduced cover exists")
            })?;
            // Random covers of the reduced instance lift to covers of G.
            let inst = reduce_instance(inc, mode).map_err(|e| e.to_string())?;
            for _ in 0..CASES / 4 {
                let mut picks: Vec<usize> = Vec::new();
                let mut order: Vec<usize> = (0..inst.candidates.len()).collect();
                use rand::seq::SliceRandom;
                order.shuffle(&mut rng);
                for c in order {
                    if inst.is_cover(&picks) {
                        break;
                    }
                    picks.push(c);
                }
                let perms: Vec<Permutation> = inst
                    .elements(&picks)
                    .iter()
                    .map(|&e| t.permutation(e))
                    .collect();
                let ok = verify_certificate(t, &Certificate::new(mode, perms))
                    .map_err(|e| e.to_string())?;
                ensure(ok.valid, || {
                    format!("{spec} {mode}: reduced cover does not lift")
                })?;
            }
        }
    }
    Ok(format!("{CASES} cases per property over {} groups; {small} group-derived instances searched exhaustively", incs.len()))
}

fn mu() -> Check {
    let t = table("alternating(5)");
    let set: Vec<u32> = [
        "(1,2,3)",
        "(3,4,5)",
        "(1,2,3,4,5)",
        "(1,2,3,5,4)",
        "(1,2,4,3,5)",
        "(1,2,4,5,3)",
        "(1,2,5,3,4)",
        "(1,2,5,4,3)",
    ]
    .iter()
    .map(|c| {
        t.index_of(&Permutation::parse_cycles(c, 5).unwrap())
            .unwrap()
    })
    .collect();
    for (i, &a) in set.iter().enumerate() {
        for &b in &set[i + 1..] {
            ensure(t.subgroup_closure(&[a, b]).len() == 60, || {
                "explicit set is not pairwise generating".into()
            })?;
        }
    }
    let m = mu_pairwise_generators(&t, 10_000_000).map_err(|e| e.to_string())?;
    ensure(m.is_exact() && m.lower == 8, || {
        format!("μ(A5) = [{}, {}]", m.lower, m.upper)
    })?;
    let inc = sol_incidence(&t).map_err(|e| e.to_string())?;
    let ms = mu_s(&inc, 10_000_000);
    ensure(ms.is_exact() && ms.lower == 8, || {
        format!("μ_s(A5) = [{}, {}]", ms.lower, ms.upper)
    })?;
    let alpha = solve_alpha(&t, Mode::All, &SolveOptions::default()).map_err(|e| e.to_string())?;
    ensure(alpha.value() == Some(3) && 3 <= ms.lower, || {
        "α(A5) ≤ μ_s fails".into()
    })?;
    Ok("μ(A5) = μ_s(A5) = 8 ≥ α(A5) = 3".into())
}

fn interval_rendering() -> Check {
    let t = table("psl2(13)");
    let tiny = SolveOptions {
        budget: SolveBudget {
            node_limit: 1,
            ..SolveBudget::default()
        },
        ..SolveOptions::default()
    };
    let out = solve_alpha(&t, Mode::All, &tiny).map_err(|e| e.to_string())?;
    let upper = out.upper.ok_or("no upper bound")?;
    ensure(out.lower <= 13 && 13 <= upper, || {
        format!("[{}, {upper}] excludes 13", out.lower)
    })?;
    let cell = solvcover::io::OutcomeRecord::from(&out).cell();
    if out.status == Status::Interval {
        ensure(cell == format!("[{},{upper}]", out.lower), || {
            format!("cell {cell}")
        })?;
    }
    Ok(format!("PSL(2,13) under a 1-node budget: {cell}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("golden table", golden),
        ("maximal solvable subgroup census", census),
        ("published certificates", certificates),
        ("class-counting lower bound", counting_bound),
        ("GL(2,q) constructive covers", gl2_covers),
        ("direct products", products),
        ("wreath product", wreath),
        ("radical quotient", quotient),
        ("randomized properties", properties),
        ("μ and μ_s of A5", mu),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let r = f();
        let took = start.elapsed();
        match r {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({took:.2?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {e} ({took:.2?})", i + 1);
            }
        }
    }
    match interval_rendering() {
        Ok(detail) => println!("interval rendering PASS  {detail}"),
        Err(e) => {
            failed += 1;
            println!("interval rendering FAIL  {e}");
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
