//! Exact minimum set cover by branch and bound, and the end-to-end α / α_inv
//! pipeline built on it.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::perm::Permutation;
use crate::solvabilizer::{reduce_filtered, sol_incidence, CoverInstance, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Exact,
    Interval,
    Infeasible,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct CoverOutcome {
    pub status: Status,
    pub lower: usize,
    /// `None` when infeasible.
    pub upper: Option<usize>,
    /// Element indices of the solved table.
    pub certificate: Option<Vec<u32>>,
    /// The certificate as permutations of the original group's points.
    pub certificate_perms: Option<Vec<Permutation>>,
    pub stats: SolveStats,
    pub involutions_only: bool,
    /// Solved on `G/R(G)` and lifted back.
    pub via_quotient: bool,
    pub notes: Vec<String>,
}

impl CoverOutcome {
    pub fn infeasible(involutions_only: bool) -> Self {
        CoverOutcome {
            status: Status::Infeasible,
            lower: 0,
            upper: None,
            certificate: None,
            certificate_perms: None,
            stats: SolveStats::default(),
            involutions_only,
            via_quotient: false,
            notes: Vec::new(),
        }
    }

    /// The value when exact.
    pub fn value(&self) -> Option<usize> {
        (self.status == Status::Exact).then_some(self.lower)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveBudget {
    pub time_limit: Duration,
    pub node_limit: u64,
    /// Stop as soon as a cover of this size is found.
    pub target: Option<usize>,
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget {
            time_limit: Duration::from_secs(60),
            node_limit: 10_000_000,
            target: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub budget: SolveBudget,
    /// Restrict the first choice to one candidate per symmetry orbit.
    pub symmetry: bool,
    /// Explore root subproblems on the rayon pool. The value and bounds are
    /// the same as in sequential mode; the certificate may differ.
    pub parallel: bool,
    /// Pass to `G/R(G)` when the radical is nontrivial.
    pub use_quotient: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: SolveBudget::default(),
            symmetry: true,
            parallel: false,
            use_quotient: true,
        }
    }
}

/// Max-coverage greedy; ties go to the smallest element. Returns candidate
/// positions.
pub fn greedy_cover(inst: &CoverInstance) -> Result<Vec<usize>> {
    let uncovered = inst.uncovered().len();
    if uncovered > 0 {
        return Err(Error::InfeasibleUniverse { uncovered });
    }
    let mut left = Bitset::full(inst.universe());
    let mut picks = Vec::new();
    while !left.is_empty() {
        let best = (0..inst.candidates.len())
            .max_by_key(|&c| {
                (
                    inst.candidates[c].row.intersection_count(&left),
                    std::cmp::Reverse(inst.candidates[c].element),
                )
            })
            .expect("feasible instance has candidates");
        left.difference_with(&inst.candidates[best].row);
        picks.push(best);
    }
    Ok(picks)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LowerBounds {
    pub packing: usize,
    pub density: usize,
    pub class_counting: usize,
    pub floor: usize,
}

impl LowerBounds {
    pub fn best(&self) -> usize {
        self.packing
            .max(self.density)
            .max(self.class_counting)
            .max(self.floor)
    }
}

pub fn lower_bounds(inst: &CoverInstance) -> LowerBounds {
    let s = Searcher::new(inst);
    let all_t = Bitset::full(inst.universe());
    let all_c = Bitset::full(inst.candidates.len());
    LowerBounds {
        packing: s.packing_bound(&all_t, &all_c),
        density: s.density_bound(&all_t, &all_c),
        class_counting: class_counting_bound(inst),
        floor: inst.lower_floor,
    }
}

pub fn lower_bound(inst: &CoverInstance) -> usize {
    lower_bounds(inst).best()
}

/// For each target orbit `T`, a cover taking `x_K` candidates from orbit
/// `K` covers at most `Σ_K a_K x_K` targets of `T`, where `a_K` is the
/// largest number any member of `K` covers. The least `Σ x_K` meeting all
/// orbits at once bounds the cover size.
pub fn class_counting_bound(inst: &CoverInstance) -> usize {
    if inst.universe() == 0 {
        return 0;
    }
    let mut t_orbits: Vec<usize> = inst.targets.iter().map(|t| t.orbit).collect();
    t_orbits.sort_unstable();
    t_orbits.dedup();
    let mut c_orbits: Vec<usize> = inst.candidates.iter().map(|c| c.orbit).collect();
    c_orbits.sort_unstable();
    c_orbits.dedup();
    let masks: Vec<Bitset> = t_orbits
        .iter()
        .map(|&o| {
            let mut b = Bitset::new(inst.universe());
            for (i, t) in inst.targets.iter().enumerate() {
                if t.orbit == o {
                    b.insert(i);
                }
            }
            b
        })
        .collect();
    // Columns: one coefficient vector per candidate orbit.
    let mut vars: Vec<Vec<u32>> = c_orbits
        .iter()
        .map(|&k| {
            masks
                .iter()
                .map(|m| {
                    inst.candidates
                        .iter()
                        .filter(|c| c.orbit == k)
                        .map(|c| c.row.intersection_count(m) as u32)
                        .max()
                        .unwrap_or(0)
                })
                .collect()
        })
        .collect();
    // Componentwise-dominated variables are never needed.
    vars.sort();
    vars.dedup();
    let snapshot = vars.clone();
    vars.retain(|v| {
        !snapshot
            .iter()
            .any(|w| w != v && v.iter().zip(w).all(|(a, b)| a <= b))
    });
    let rhs: Vec<u32> = masks.iter().map(|m| m.count() as u32).collect();
    let coeffs: Vec<Vec<u32>> = (0..rhs.len())
        .map(|j| vars.iter().map(|v| v[j]).collect())
        .collect();
    counting_program_bound(&coeffs, &rhs).unwrap_or(0)
}

const PROGRAM_NODE_LIMIT: u64 = 2_000_000;

/// Least `Σ x` over nonnegative integers with `coeffs[j] · x ≥ rhs[j]` for
/// every row `j`, or `None` if no `x` works. If the search budget runs out
/// the returned value is still a proven lower bound.
pub fn counting_program_bound(coeffs: &[Vec<u32>], rhs: &[u32]) -> Option<usize> {
    let nvars = coeffs.first().map_or(0, |r| r.len());
    let mut start = 0usize;
    for (row, &b) in coeffs.iter().zip(rhs) {
        let m = row.iter().copied().max().unwrap_or(0);
        if b > 0 && m == 0 {
            return None;
        }
        if b > 0 {
            start = start.max(b.div_ceil(m) as usize);
        }
    }
    // suffix_max[k][j] = max coefficient of row j among variables k..
    let mut suffix_max = vec![vec![0u32; coeffs.len()]; nvars + 1];
    for k in (0..nvars).rev() {
        for j in 0..coeffs.len() {
            suffix_max[k][j] = suffix_max[k + 1][j].max(coeffs[j][k]);
        }
    }
    let mut nodes = 0u64;
    let mut total = start;
    loop {
        let mut deficit: Vec<i64> = rhs.iter().map(|&b| b as i64).collect();
        match feasible(coeffs, &suffix_max, 0, total, &mut deficit, &mut nodes) {
            Some(true) => return Some(total),
            Some(false) => total += 1,
            None => return Some(total),
        }
    }

    fn feasible(
        coeffs: &[Vec<u32>],
        suffix_max: &[Vec<u32>],
        k: usize,
        budget: usize,
        deficit: &mut [i64],
        nodes: &mut u64,
    ) -> Option<bool> {
        *nodes += 1;
        if *nodes > PROGRAM_NODE_LIMIT {
            return None;
        }
        if deficit.iter().all(|&d| d <= 0) {
            return Some(true);
        }
        if k + 1 >= suffix_max.len() {
            return Some(false);
        }
        for (j, &d) in deficit.iter().enumerate() {
            if d > 0 && (suffix_max[k][j] as i64) * (budget as i64) < d {
                return Some(false);
            }
        }
        for x in (0..=budget).rev() {
            for (j, d) in deficit.iter_mut().enumerate() {
                *d -= coeffs[j][k] as i64 * x as i64;
            }
            let r = feasible(coeffs, suffix_max, k + 1, budget - x, deficit, nodes);
            for (j, d) in deficit.iter_mut().enumerate() {
                *d += coeffs[j][k] as i64 * x as i64;
            }
            match r {
                Some(false) => {}
                other => return other,
            }
        }
        Some(false)
    }
}

struct Searcher<'a> {
    rows: Vec<&'a Bitset>,
    cols: Vec<Bitset>,
}

struct Shared {
    best_size: AtomicUsize,
    best: Mutex<Vec<usize>>,
    nodes: AtomicU64,
    stop: AtomicBool,
    start: Instant,
    budget: SolveBudget,
    floor: usize,
}

impl Shared {
    fn offer(&self, picks: &[usize]) {
        let mut best = self.best.lock().unwrap();
        if picks.len() < best.len() {
            *best = picks.to_vec();
            self.best_size.store(picks.len(), Ordering::SeqCst);
            if picks.len() <= self.floor || self.budget.target.is_some_and(|t| picks.len() <= t) {
                self.stop.store(true, Ordering::SeqCst);
            }
        }
    }

    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.budget.node_limit
            || (n % 1024 == 0 && self.start.elapsed() > self.budget.time_limit)
        {
            self.stop.store(true, Ordering::SeqCst);
        }
        !self.stop.load(Ordering::Relaxed)
    }
}

impl<'a> Searcher<'a> {
    fn new(inst: &'a CoverInstance) -> Self {
        let m = inst.universe();
        let mut cols = vec![Bitset::new(inst.candidates.len()); m];
        for (c, cand) in inst.candidates.iter().enumerate() {
            for t in cand.row.iter() {
                cols[t].insert(c);
            }
        }
        Searcher {
            rows: inst.candidates.iter().map(|c| &c.row).collect(),
            cols,
        }
    }

    /// Greedy family of targets no two of which share a candidate.
    fn packing_bound(&self, uncovered: &Bitset, allowed: &Bitset) -> usize {
        let mut ts: Vec<(usize, usize)> = uncovered
            .iter()
            .map(|t| (self.cols[t].intersection_count(allowed), t))
            .collect();
        ts.sort_unstable();
        let mut used = Bitset::new(self.rows.len());
        let mut count = 0;
        for (_, t) in ts {
            if !self.cols[t].intersects(&used) {
                count += 1;
                used.union_with(&self.cols[t]);
            }
        }
        count
    }

    fn density_bound(&self, uncovered: &Bitset, allowed: &Bitset) -> usize {
        let left = uncovered.count();
        if left == 0 {
            return 0;
        }
        let best = allowed
            .iter()
            .map(|c| self.rows[c].intersection_count(uncovered))
            .max()
            .unwrap_or(0);
        if best == 0 {
            usize::MAX / 2
        } else {
            left.div_ceil(best)
        }
    }

    fn search(
        &self,
        shared: &Shared,
        picks: &mut Vec<usize>,
        uncovered: Bitset,
        mut allowed: Bitset,
    ) {
        if !shared.tick() {
            return;
        }
        if uncovered.is_empty() {
            shared.offer(picks);
            return;
        }
        let best = shared.best_size.load(Ordering::Relaxed);
        if picks.len() + 1 >= best {
            return;
        }
        // Branch on the target with the fewest remaining candidates.
        let mut branch_t = usize::MAX;
        let mut branch_n = usize::MAX;
        for t in uncovered.iter() {
            let n = self.cols[t].intersection_count(&allowed);
            if n < branch_n {
                branch_n = n;
                branch_t = t;
                if n <= 1 {
                    break;
                }
            }
        }
        if branch_n == 0 {
            return;
        }
        let slack = best - picks.len();
        let bound = self
            .packing_bound(&uncovered, &allowed)
            .max(self.density_bound(&uncovered, &allowed));
        if bound >= slack {
            return;
        }
        let mut options = self.cols[branch_t].clone();
        options.intersect_with(&allowed);
        let mut order: Vec<(usize, usize)> = options
            .iter()
            .map(|c| (self.rows[c].intersection_count(&uncovered), c))
            .collect();
        order.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, c) in order {
            if shared.stop.load(Ordering::Relaxed)
                || picks.len() + 1 >= shared.best_size.load(Ordering::Relaxed)
            {
                return;
            }
            allowed.remove(c);
            let mut next = uncovered.clone();
            next.difference_with(self.rows[c]);
            picks.push(c);
            self.search(shared, picks, next, allowed.clone());
            picks.pop();
        }
    }
}

/// Root subproblems: force one orbit representative, exclude the orbits
/// tried before it. Orbits go in order of decreasing coverage.
fn root_subproblems(inst: &CoverInstance, symmetry: bool) -> Vec<(usize, Bitset)> {
    let k = inst.candidates.len();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    if symmetry {
        let mut by_orbit: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (i, c) in inst.candidates.iter().enumerate() {
            by_orbit.entry(c.orbit).or_default().push(i);
        }
        groups.extend(by_orbit.into_values());
    } else {
        groups.extend((0..k).map(|i| vec![i]));
    }
    groups.sort_by_key(|g| (std::cmp::Reverse(inst.candidates[g[0]].row.count()), g[0]));
    let mut allowed = Bitset::full(k);
    let mut out = Vec::new();
    for g in groups {
        let rep = g[0];
        let mut sub = allowed.clone();
        sub.remove(rep);
        out.push((rep, sub));
        for &c in &g {
            allowed.remove(c);
        }
    }
    out
}

/// Exact minimum cover of `inst` within the budget.
pub fn solve_exact(inst: &CoverInstance, opts: &SolveOptions) -> CoverOutcome {
    let start = Instant::now();
    let mut outcome = CoverOutcome::infeasible(inst.involutions_only);
    outcome.notes = inst.notes.clone();
    let Ok(greedy) = greedy_cover(inst) else {
        outcome.stats.elapsed = start.elapsed();
        return outcome;
    };
    let lower = lower_bound(inst);
    let searcher = Searcher::new(inst);
    let shared = Shared {
        best_size: AtomicUsize::new(greedy.len()),
        best: Mutex::new(greedy),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        start,
        budget: opts.budget.clone(),
        floor: lower,
    };
    let mut complete = true;
    if shared.best_size.load(Ordering::SeqCst) > lower {
        let subs = root_subproblems(inst, opts.symmetry);
        let run = |(rep, allowed): &(usize, Bitset)| {
            if shared.stop.load(Ordering::Relaxed) {
                return;
            }
            let mut uncovered = Bitset::full(inst.universe());
            uncovered.difference_with(searcher.rows[*rep]);
            let mut picks = vec![*rep];
            searcher.search(&shared, &mut picks, uncovered, allowed.clone());
        };
        if opts.parallel {
            subs.par_iter().for_each(run);
        } else {
            subs.iter().for_each(run);
        }
        let best = shared.best_size.load(Ordering::SeqCst);
        complete = !shared.stop.load(Ordering::SeqCst) || best <= lower;
    }
    let best = shared.best.into_inner().unwrap();
    let upper = best.len();
    let lower = if complete { upper } else { lower.min(upper) };
    outcome.status = if lower == upper {
        Status::Exact
    } else {
        Status::Interval
    };
    outcome.lower = lower;
    outcome.upper = Some(upper);
    outcome.certificate = Some(inst.elements(&best));
    outcome.stats = SolveStats {
        nodes: shared.nodes.load(Ordering::SeqCst),
        elapsed: start.elapsed(),
    };
    outcome
}

/// α(G) or α_inv(G) for a group given as a table.
///
/// With a nontrivial radical R the problem is solved on `G/R`: `y ∈ Sol(x)`
/// iff `yR ∈ Sol(xR)`, so covers correspond. In involution mode only cosets
/// containing an involution of `G` may be chosen.
pub fn solve_alpha(table: &GroupTable, mode: Mode, opts: &SolveOptions) -> Result<CoverOutcome> {
    let start = Instant::now();
    if table.is_solvable_group() {
        return Err(Error::GroupSolvable);
    }
    let radical = table.solvable_radical()?;
    let mut outcome = if radical.len() > 1 && opts.use_quotient {
        let qmap = table.quotient_map(&radical)?;
        let q = &qmap.table;
        // Least preimage of each quotient element, restricted to involutions
        // in involution mode.
        let mut lift = vec![u32::MAX; q.order()];
        for g in 0..table.order() as u32 {
            let img = qmap.image_of[g as usize] as usize;
            if lift[img] == u32::MAX && (mode == Mode::All || table.order_of(g) == 2) {
                lift[img] = g;
            }
        }
        let inc = sol_incidence(q)?;
        let filter = |x: u32| lift[x as usize] != u32::MAX;
        let mut out = match reduce_filtered(&inc, mode, &filter) {
            Ok(inst) => solve_exact(&inst, opts),
            Err(Error::InfeasibleUniverse { .. }) => {
                CoverOutcome::infeasible(mode == Mode::Involutions)
            }
            Err(e) => return Err(e),
        };
        out.via_quotient = true;
        out.notes.insert(
            0,
            format!(
                "solved on G/R(G) of order {} (|R(G)| = {})",
                q.order(),
                radical.len()
            ),
        );
        out.certificate = out
            .certificate
            .map(|c| c.iter().map(|&x| lift[x as usize]).collect());
        out
    } else {
        let inc = sol_incidence(table)?;
        match reduce_filtered(&inc, mode, &|_| true) {
            Ok(inst) => solve_exact(&inst, opts),
            Err(Error::InfeasibleUniverse { .. }) => {
                CoverOutcome::infeasible(mode == Mode::Involutions)
            }
            Err(e) => return Err(e),
        }
    };
    outcome.certificate_perms = outcome
        .certificate
        .as_ref()
        .map(|c| c.iter().map(|&x| table.permutation(x)).collect());
    outcome.stats.elapsed = start.elapsed();
    Ok(outcome)
}

/// α or α_inv of a direct product from its factors: the minimum over the
/// nonsolvable factors, since `Sol((x, y)) = Sol(x) × Sol(y)`. In involution
/// mode infeasible factors are skipped unless all are infeasible.
pub fn solve_product(
    factors: &[GroupTable],
    mode: Mode,
    opts: &SolveOptions,
) -> Result<CoverOutcome> {
    let start = Instant::now();
    let degrees: Vec<usize> = factors.iter().map(|f| f.degree()).collect();
    let total: usize = degrees.iter().sum();
    let mut best: Option<(usize, CoverOutcome)> = None;
    let mut lower = usize::MAX;
    let mut any = false;
    let mut notes = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        if f.is_solvable_group() {
            notes.push(format!("factor {i} is solvable and does not contribute"));
            continue;
        }
        any = true;
        let out = solve_alpha(f, mode, opts)?;
        if out.status == Status::Infeasible {
            notes.push(format!("factor {i}: infeasible"));
            continue;
        }
        notes.push(format!(
            "factor {i}: [{}, {}]",
            out.lower,
            out.upper.unwrap()
        ));
        lower = lower.min(out.lower);
        if best.as_ref().is_none_or(|(_, b)| out.upper < b.upper) {
            best = Some((i, out));
        }
    }
    if !any {
        return Err(Error::GroupSolvable);
    }
    let Some((i, out)) = best else {
        let mut o = CoverOutcome::infeasible(mode == Mode::Involutions);
        o.notes = notes;
        o.stats.elapsed = start.elapsed();
        return Ok(o);
    };
    let offset: usize = degrees[..i].iter().sum();
    let upper = out.upper.unwrap();
    let perms = out.certificate_perms.as_ref().map(|ps| {
        ps.iter()
            .map(|p| {
                let mut images: Vec<u32> = (0..total as u32).collect();
                for (k, &x) in p.images().iter().enumerate() {
                    images[offset + k] = (offset as u32) + x;
                }
                Permutation::from_images(images).expect("shifted permutation")
            })
            .collect()
    });
    Ok(CoverOutcome {
        status: if lower == upper {
            Status::Exact
        } else {
            Status::Interval
        },
        lower,
        upper: Some(upper),
        certificate: None,
        certificate_perms: perms,
        stats: SolveStats {
            nodes: out.stats.nodes,
            elapsed: start.elapsed(),
        },
        involutions_only: mode == Mode::Involutions,
        via_quotient: out.via_quotient,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn program_bound_examples() {
        assert_eq!(counting_program_bound(&[vec![2, 0, 1]], &[6]), Some(3));
        assert_eq!(counting_program_bound(&[vec![0, 0]], &[1]), None);
        assert_eq!(
            counting_program_bound(&[vec![1, 0], vec![0, 1]], &[2, 3]),
            Some(5)
        );
        assert_eq!(
            counting_program_bound(&[vec![3, 1], vec![0, 2]], &[3, 2]),
            Some(2)
        );
        assert_eq!(counting_program_bound(&[], &[]), Some(0));
    }

    #[test]
    fn singleton_rows_need_every_candidate() {
        let inst = CoverInstance::from_rows(4, &[vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(greedy_cover(&inst).unwrap().len(), 4);
        let out = solve_exact(&inst, &SolveOptions::default());
        assert_eq!((out.status, out.lower), (Status::Exact, 4));
    }

    #[test]
    fn greedy_is_not_always_optimal() {
        // Greedy takes the big middle row first and then needs two more.
        let inst = CoverInstance::from_rows(
            6,
            &[
                vec![0, 1, 2],
                vec![3, 4, 5],
                vec![1, 2, 3, 4],
                vec![0],
                vec![5],
            ],
        );
        assert_eq!(greedy_cover(&inst).unwrap().len(), 3);
        let out = solve_exact(&inst, &SolveOptions::default());
        assert_eq!(out.value(), Some(2));
        assert!(inst.is_cover(
            &out.certificate
                .unwrap()
                .iter()
                .map(|&e| e as usize)
                .collect::<Vec<_>>()
        ));
    }

    #[test]
    fn infeasible_and_empty() {
        let inst = CoverInstance::from_rows(2, &[vec![0]]);
        assert_eq!(
            solve_exact(&inst, &SolveOptions::default()).status,
            Status::Infeasible
        );
        let empty = CoverInstance::from_rows(0, &[]);
        assert_eq!(lower_bound(&empty), 0);
        assert_eq!(
            solve_exact(&empty, &SolveOptions::default()).value(),
            Some(0)
        );
    }
}
