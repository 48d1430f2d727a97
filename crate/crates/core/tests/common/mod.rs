//! Fixtures and independent oracles shared by the integration tests.
//!
//! The oracles here avoid the library's solvability shortcuts: they close
//! subgroups by brute force on permutations and run the derived series to
//! the end.

#![allow(dead_code)]

use std::collections::HashSet;
use std::path::PathBuf;
use std::sync::OnceLock;

use solvcover::bitset::Bitset;
use solvcover::solvabilizer::{CoverInstance, SolvabilizerIncidence};
use solvcover::theorems::Certificate;
use solvcover::{build, io, GroupSpec, GroupTable, Permutation, DEFAULT_CAP};

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("data")
}

pub fn load_cert(name: &str) -> Certificate {
    io::read_certificate(&data_dir().join(format!("{name}.cert"))).expect("certificate file")
}

pub fn table(spec: &str) -> GroupTable {
    build(&spec.parse::<GroupSpec>().unwrap(), DEFAULT_CAP).unwrap()
}

/// Groups of order at most 720 used by the randomized suites, with their
/// incidences precomputed once.
pub struct Pool {
    pub names: Vec<&'static str>,
    pub tables: Vec<GroupTable>,
}

pub const POOL_SPECS: [&str; 10] = [
    "alternating(5)",
    "symmetric(5)",
    "psl2(7)",
    "sl2(5)",
    "pgl2(7)",
    "alternating(6)",
    "product(psl2(4),symmetric(3))",
    "psl2(8)",
    "symmetric(6)",
    "m10",
];

pub fn pool() -> &'static Pool {
    static POOL: OnceLock<Pool> = OnceLock::new();
    POOL.get_or_init(|| Pool {
        names: POOL_SPECS.to_vec(),
        tables: POOL_SPECS.iter().map(|s| table(s)).collect(),
    })
}

/// Elements of the subgroup generated by `gens`, as permutations.
pub fn closure(gens: &[Permutation]) -> Vec<Permutation> {
    let d = gens[0].degree();
    let mut seen: HashSet<Permutation> = HashSet::new();
    let id = Permutation::identity(d);
    seen.insert(id.clone());
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let p = out[i].then(g);
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
        i += 1;
    }
    out
}

fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
    a.inverse().then(&b.inverse()).then(a).then(b)
}

/// Solvability by running the derived series on explicit element lists.
/// The derived subgroup is the normal closure of the commutators of the
/// generators.
pub fn is_solvable(gens: &[Permutation]) -> bool {
    let mut gens = gens.to_vec();
    loop {
        let h = closure(&gens);
        if h.len() == 1 {
            return true;
        }
        let comms: HashSet<Permutation> = gens
            .iter()
            .flat_map(|a| gens.iter().map(move |b| commutator(a, b)))
            .flat_map(|c| h.iter().map(move |g| g.inverse().then(&c).then(g)))
            .collect();
        let comms: Vec<Permutation> = comms.into_iter().collect();
        let d = closure(&comms);
        if d.len() == h.len() {
            return false;
        }
        gens = small_generating_set(&d);
    }
}

fn small_generating_set(elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span: HashSet<Permutation> = HashSet::new();
    span.insert(elements[0].clone());
    for e in elements {
        if !span.contains(e) {
            gens.push(e.clone());
            span = closure(&gens).into_iter().collect();
        }
    }
    if gens.is_empty() {
        gens.push(elements[0].clone());
    }
    gens
}

/// `Sol(x)` by the brute-force oracle, as table indices.
pub fn oracle_sol(t: &GroupTable, x: u32) -> Vec<u32> {
    let px = t.permutation(x);
    (0..t.order() as u32)
        .filter(|&y| is_solvable(&[px.clone(), t.permutation(y)]))
        .collect()
}

/// Least number of rows of `inst` covering every target, by exhaustive
/// search over subsets in increasing size.
pub fn brute_force_cover(inst: &CoverInstance) -> Option<usize> {
    let n = inst.universe();
    let rows: Vec<&Bitset> = inst.candidates.iter().map(|c| &c.row).collect();
    if n == 0 {
        return Some(0);
    }
    (1..=rows.len()).find(|&k| subsets_cover(&rows, n, k))
}

fn subsets_cover(rows: &[&Bitset], n: usize, k: usize) -> bool {
    subsets_cover_from(rows, n, k, &Bitset::new(n))
}

/// Least cover of the whole group by solvabilizers of `allowed`, searched
/// exhaustively up to size `max`; `None` if there is none that small.
/// `allowed` must be closed under conjugation, so the first element may be
/// taken to be a class representative.
pub fn brute_force_alpha(
    inc: &SolvabilizerIncidence<'_>,
    allowed: &[u32],
    max: usize,
) -> Option<usize> {
    let n = inc.table().order();
    let sols: Vec<Bitset> = allowed.iter().map(|&x| inc.sol(x).bits().clone()).collect();
    let refs: Vec<&Bitset> = sols.iter().collect();
    let reps = &inc.classes().representatives;
    (1..=max).find(|&k| {
        allowed.iter().enumerate().any(|(i, x)| {
            reps.contains(x) && {
                let rest: Vec<&Bitset> = refs
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, r)| *r)
                    .collect();
                let mut acc = Bitset::new(n);
                acc.union_with(refs[i]);
                subsets_cover_from(&rest, n, k - 1, &acc)
            }
        })
    })
}

fn subsets_cover_from(rows: &[&Bitset], n: usize, k: usize, acc: &Bitset) -> bool {
    fn rec(rows: &[&Bitset], n: usize, k: usize, start: usize, acc: &Bitset) -> bool {
        if acc.count() == n {
            return true;
        }
        if k == 0 {
            return false;
        }
        (start..rows.len()).any(|i| {
            let mut next = acc.clone();
            next.union_with(rows[i]);
            rec(rows, n, k - 1, i + 1, &next)
        })
    }
    rec(rows, n, k, 0, acc)
}
