//! Solvabilizers `Sol(x) = {y : ⟨x, y⟩ solvable}` and the covering
//! instances built from them.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::group::{
    generated_is_solvable, ClassPartition, Closer, ElementSet, GroupTable, PairProbe,
};

/// Which elements may appear in a cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    All,
    Involutions,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::All => "all",
            Mode::Involutions => "involutions",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Mode::All),
            "involutions" | "inv" => Ok(Mode::Involutions),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

pub fn sol_of(table: &GroupTable, x: u32) -> ElementSet {
    PairProbe::new(table.order())
        .scan(table, x, false)
        .expect("full scan always completes")
}

/// `Sol` of every class representative; other elements by conjugation.
pub struct SolvabilizerIncidence<'a> {
    table: &'a GroupTable,
    classes: ClassPartition,
    sols: Vec<ElementSet>,
    radical: ElementSet,
}

pub fn sol_incidence(table: &GroupTable) -> Result<SolvabilizerIncidence<'_>> {
    let n = table.order();
    let classes = table.conjugacy_classes();
    let sols: Vec<ElementSet> = classes
        .representatives
        .par_iter()
        .map(|&r| sol_of(table, r))
        .collect();
    let mut radical = ElementSet::new(n);
    for (c, sol) in sols.iter().enumerate() {
        if sol.len() == n {
            for x in classes.members(c) {
                radical.insert(x);
            }
        }
    }
    if !table.is_normal(&radical) {
        return Err(Error::InternalInconsistency(
            "elements with Sol(x) = G do not form a normal subgroup".into(),
        ));
    }
    Ok(SolvabilizerIncidence {
        table,
        classes,
        sols,
        radical,
    })
}

impl<'a> SolvabilizerIncidence<'a> {
    pub fn table(&self) -> &'a GroupTable {
        self.table
    }

    pub fn classes(&self) -> &ClassPartition {
        &self.classes
    }

    pub fn radical(&self) -> &ElementSet {
        &self.radical
    }

    pub fn is_radical(&self, x: u32) -> bool {
        self.radical.contains(x)
    }

    pub fn class_sol(&self, class: usize) -> &ElementSet {
        &self.sols[class]
    }

    /// Whether `y ∈ Sol(x)`.
    #[inline]
    pub fn contains(&self, x: u32, y: u32) -> bool {
        let c = self.classes.class_of[x as usize] as usize;
        let w = self.classes.conjugator[x as usize];
        // x = w⁻¹ r w, so y ∈ Sol(x) iff w y w⁻¹ ∈ Sol(r).
        self.sols[c].contains(self.table.conj(y, self.table.inverse(w)))
    }

    pub fn sol(&self, x: u32) -> ElementSet {
        let c = self.classes.class_of[x as usize] as usize;
        self.sols[c].conjugated(self.table, self.classes.conjugator[x as usize])
    }

    pub fn sol_size(&self, x: u32) -> usize {
        self.sols[self.classes.class_of[x as usize] as usize].len()
    }

    fn allowed(&self, x: u32, mode: Mode) -> bool {
        !self.is_radical(x) && (mode == Mode::All || self.table.order_of(x) == 2)
    }

    /// Whether the solvabilizers of all nonradical elements allowed by
    /// `mode` cover the group.
    pub fn union_check(&self, mode: Mode) -> bool {
        let n = self.table.order();
        let mut union = ElementSet::new(n);
        for (c, &r) in self.classes.representatives.iter().enumerate() {
            if self.allowed(r, mode) {
                union.union_with(&self.sols[c]);
            }
        }
        // A class is covered iff one of its members lies in the union over
        // representatives.
        let mut covered = vec![false; self.classes.len()];
        for y in union.iter() {
            covered[self.classes.class_of[y as usize] as usize] = true;
        }
        n > 0 && covered.iter().all(|&c| c)
    }
}

pub struct MaximalSolvableCensus {
    pub subgroups: Vec<ElementSet>,
    /// Conjugacy class of each subgroup under `G`.
    pub class_of: Vec<usize>,
    pub class_counts: Vec<usize>,
    pub class_orders: Vec<usize>,
}

impl MaximalSolvableCensus {
    /// `(order, number of conjugates)` per class, sorted by order.
    pub fn summary(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .class_orders
            .iter()
            .copied()
            .zip(self.class_counts.iter().copied())
            .collect();
        out.sort();
        out
    }

    pub fn containing(&self, x: u32) -> impl Iterator<Item = usize> + '_ {
        (0..self.subgroups.len()).filter(move |&i| self.subgroups[i].contains(x))
    }
}

/// Maximal solvable subgroups reached from the solvable pairs `⟨r, y⟩`
/// (`r` a class representative), extended greedily in ascending element
/// order and closed under conjugation.
///
/// Every solvable two-generated subgroup lies in some listed member, so
/// `Sol(x)` is the union of the members containing `x`.
pub fn maximal_solvable_subgroups(inc: &SolvabilizerIncidence<'_>) -> MaximalSolvableCensus {
    let t = inc.table;
    let n = t.order();
    let mut members: Vec<ElementSet> = Vec::new();
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut closer = Closer::new(n);
    let mut scratch = Closer::new(n);
    for (c, &r) in inc.classes.representatives.iter().enumerate() {
        for y in inc.sols[c].iter() {
            if members.iter().any(|m| m.contains(r) && m.contains(y)) {
                continue;
            }
            let mut gens = vec![r, y];
            closer.close(t, &gens, usize::MAX);
            let mut h = closer.to_set();
            for g in 0..n as u32 {
                if h.contains(g) {
                    continue;
                }
                gens.push(g);
                let size = closer.close(t, &gens, usize::MAX);
                if generated_is_solvable(t, &gens, size, &mut scratch) {
                    h = closer.to_set();
                } else {
                    gens.pop();
                }
            }
            if seen.contains(&h) {
                continue;
            }
            // Add the whole conjugacy class of h.
            let mut queue = vec![h.clone()];
            seen.insert(h);
            let mut head = 0;
            while head < queue.len() {
                for &g in t.generators() {
                    let k = queue[head].conjugated(t, g);
                    if seen.insert(k.clone()) {
                        queue.push(k);
                    }
                }
                head += 1;
            }
            members.extend(queue);
        }
    }
    members.sort_by_key(|m| (m.len(), m.iter().next()));
    let index: HashMap<&ElementSet, usize> =
        members.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut class_of = vec![usize::MAX; members.len()];
    let mut class_counts = Vec::new();
    let mut class_orders = Vec::new();
    for i in 0..members.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let id = class_counts.len();
        let mut stack = vec![i];
        class_of[i] = id;
        let mut count = 0;
        while let Some(j) = stack.pop() {
            count += 1;
            for &g in t.generators() {
                let k = index[&members[j].conjugated(t, g)];
                if class_of[k] == usize::MAX {
                    class_of[k] = id;
                    stack.push(k);
                }
            }
        }
        class_counts.push(count);
        class_orders.push(members[i].len());
    }
    MaximalSolvableCensus {
        subgroups: members,
        class_of,
        class_counts,
        class_orders,
    }
}

#[derive(Clone, Debug)]
pub struct Candidate {
    pub element: u32,
    pub order: u32,
    pub is_involution: bool,
    /// Targets whose element lies in this candidate's solvabilizer.
    pub row: Bitset,
    /// Symmetry group used at the root of the search: any cover using a
    /// candidate of this orbit can be rewritten to use the orbit's first
    /// member without growing.
    pub orbit: usize,
}

#[derive(Clone, Debug)]
pub struct Target {
    pub element: u32,
    pub order: u32,
    /// Conjugacy orbit of the target's cyclic subgroup.
    pub orbit: usize,
}

/// A set-cover problem: choose fewest candidates whose rows cover all
/// targets.
#[derive(Clone, Debug)]
pub struct CoverInstance {
    pub targets: Vec<Target>,
    pub candidates: Vec<Candidate>,
    pub involutions_only: bool,
    /// Known lower bound on any cover, e.g. 3 for a nonsolvable group.
    pub lower_floor: usize,
    /// Dropped candidate elements and the surviving element that replaces
    /// each of them.
    pub replaced_by: Vec<(u32, u32)>,
    pub notes: Vec<String>,
}

impl CoverInstance {
    /// Plain instance over targets `0..universe`; candidate `i` is named `i`
    /// and forms its own orbit.
    pub fn from_rows(universe: usize, rows: &[Vec<usize>]) -> Self {
        let candidates = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = Bitset::new(universe);
                for &t in r {
                    row.insert(t);
                }
                Candidate {
                    element: i as u32,
                    order: 0,
                    is_involution: false,
                    row,
                    orbit: i,
                }
            })
            .collect();
        CoverInstance {
            targets: (0..universe)
                .map(|i| Target {
                    element: i as u32,
                    order: 0,
                    orbit: 0,
                })
                .collect(),
            candidates,
            involutions_only: false,
            lower_floor: 0,
            replaced_by: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn universe(&self) -> usize {
        self.targets.len()
    }

    /// Targets that no candidate covers.
    pub fn uncovered(&self) -> Vec<usize> {
        let mut all = Bitset::new(self.universe());
        for c in &self.candidates {
            all.union_with(&c.row);
        }
        (0..self.universe()).filter(|&t| !all.contains(t)).collect()
    }

    /// Whether the candidates at `picks` cover every target.
    pub fn is_cover(&self, picks: &[usize]) -> bool {
        let mut all = Bitset::new(self.universe());
        for &p in picks {
            all.union_with(&self.candidates[p].row);
        }
        all.count() == self.universe()
    }

    /// Elements named by candidate positions.
    pub fn elements(&self, picks: &[usize]) -> Vec<u32> {
        picks.iter().map(|&p| self.candidates[p].element).collect()
    }
}

/// Least element generating `⟨x⟩`, for every `x`.
pub fn cyclic_canonical(t: &GroupTable) -> Vec<u32> {
    let n = t.order();
    let mut canon = vec![u32::MAX; n];
    for x in 0..n as u32 {
        if canon[x as usize] != u32::MAX {
            continue;
        }
        let k = t.order_of(x) as u64;
        let gens: Vec<u32> = (1..=k)
            .filter(|&e| gcd(e, k) == 1)
            .map(|e| t.power(x, e))
            .collect();
        let m = *gens.iter().min().unwrap();
        for g in gens {
            canon[g as usize] = m;
        }
    }
    canon
}

/// Canonical generators of the maximal cyclic subgroups.
pub fn maximal_cyclic_generators(t: &GroupTable) -> Vec<u32> {
    let canon = cyclic_canonical(t);
    let n = t.order();
    let mut contained = vec![false; n];
    for x in 0..n as u32 {
        for p in prime_factors(t.order_of(x) as u64) {
            contained[canon[t.power(x, p) as usize] as usize] = true;
        }
    }
    (0..n as u32)
        .filter(|&x| canon[x as usize] == x && !contained[x as usize])
        .collect()
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.0[a] != a {
            self.0[a] = self.0[self.0[a]];
            a = self.0[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Builds the covering instance for `G` in the given mode.
///
/// Targets are the maximal cyclic subgroups outside the radical (covering a
/// generator covers its powers). Candidates are nonradical elements whose
/// prime powers all fall in the radical, one per cyclic subgroup, or the
/// involutions in involution mode: `Sol(x) ⊆ Sol(xⁿ)` lets any cover be
/// rewritten with such elements. Duplicate and dominated rows, and targets
/// implied by other targets, are then removed.
pub fn reduce_instance(inc: &SolvabilizerIncidence<'_>, mode: Mode) -> Result<CoverInstance> {
    reduce_filtered(inc, mode, &|_| true)
}

/// [`reduce_instance`] with candidates further restricted by `allow`.
pub fn reduce_filtered(
    inc: &SolvabilizerIncidence<'_>,
    mode: Mode,
    allow: &(dyn Fn(u32) -> bool + Sync),
) -> Result<CoverInstance> {
    let t = inc.table;
    let canon = cyclic_canonical(t);
    let classes = &inc.classes;
    let mut notes = Vec::new();

    let all_targets: Vec<u32> = maximal_cyclic_generators(t)
        .into_iter()
        .filter(|&x| !inc.is_radical(x))
        .collect();
    let raw_candidates: Vec<u32> = (0..t.order() as u32)
        .filter(|&x| canon[x as usize] == x && !inc.is_radical(x) && allow(x))
        .filter(|&x| match mode {
            Mode::Involutions => t.order_of(x) == 2,
            Mode::All => prime_factors(t.order_of(x) as u64)
                .into_iter()
                .all(|p| inc.is_radical(t.power(x, p))),
        })
        .collect();
    notes.push(format!(
        "{} maximal cyclic targets, {} candidate cyclic subgroups ({mode})",
        all_targets.len(),
        raw_candidates.len()
    ));

    let rows: Vec<Bitset> = raw_candidates
        .par_iter()
        .map(|&c| {
            let mut row = Bitset::new(all_targets.len());
            for (i, &y) in all_targets.iter().enumerate() {
                if inc.contains(c, y) {
                    row.insert(i);
                }
            }
            row
        })
        .collect();

    let mut covered = Bitset::new(all_targets.len());
    for r in &rows {
        covered.union_with(r);
    }
    let uncovered = all_targets.len() - covered.count();
    if uncovered > 0 {
        return Err(match mode {
            Mode::Involutions => Error::InfeasibleUniverse { uncovered },
            Mode::All => Error::InternalInconsistency(format!(
                "{uncovered} targets lie in no solvabilizer of a nonradical element"
            )),
        });
    }

    // Duplicate rows: keep the least element; merge symmetry orbits.
    let mut orbit_uf = UnionFind::new(classes.len());
    let mut replaced_by = Vec::new();
    let mut by_row: HashMap<&Bitset, usize> = HashMap::new();
    let mut keep: Vec<usize> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        match by_row.get(row) {
            Some(&j) => {
                replaced_by.push((raw_candidates[i], raw_candidates[j]));
                orbit_uf.union(
                    classes.class_of[raw_candidates[i] as usize] as usize,
                    classes.class_of[raw_candidates[j] as usize] as usize,
                );
            }
            None => {
                by_row.insert(row, i);
                keep.push(i);
            }
        }
    }
    let after_dedupe = keep.len();

    // Dominated rows: drop rows strictly inside another kept row.
    let mut by_size = keep.clone();
    by_size.sort_by_key(|&i| std::cmp::Reverse(rows[i].count()));
    let mut survivors: Vec<usize> = Vec::new();
    for &i in &by_size {
        match survivors.iter().find(|&&j| rows[i].is_subset(&rows[j])) {
            Some(&j) => replaced_by.push((raw_candidates[i], raw_candidates[j])),
            None => survivors.push(i),
        }
    }
    survivors.sort_unstable();

    // Targets implied by others: if every survivor covering s also covers
    // u, covering s covers u.
    let m = all_targets.len();
    let mut cols: Vec<Bitset> = vec![Bitset::new(survivors.len()); m];
    for (k, &i) in survivors.iter().enumerate() {
        for tgt in rows[i].iter() {
            cols[tgt].insert(k);
        }
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&u| (cols[u].count(), u));
    let mut kept_targets: Vec<usize> = Vec::new();
    for &u in &order {
        if !kept_targets.iter().any(|&s| cols[s].is_subset(&cols[u])) {
            kept_targets.push(u);
        }
    }
    kept_targets.sort_unstable();

    let target_orbit = |x: u32| -> usize {
        let k = t.order_of(x) as u64;
        (1..=k)
            .filter(|&e| gcd(e, k) == 1)
            .map(|e| classes.class_of[t.power(x, e) as usize] as usize)
            .min()
            .unwrap()
    };
    let targets: Vec<Target> = kept_targets
        .iter()
        .map(|&u| {
            let x = all_targets[u];
            Target {
                element: x,
                order: t.order_of(x),
                orbit: target_orbit(x),
            }
        })
        .collect();

    let candidates: Vec<Candidate> = survivors
        .iter()
        .map(|&i| {
            let x = raw_candidates[i];
            let mut row = Bitset::new(kept_targets.len());
            for (k, &u) in kept_targets.iter().enumerate() {
                if rows[i].contains(u) {
                    row.insert(k);
                }
            }
            let ord = t.order_of(x);
            Candidate {
                element: x,
                order: ord,
                is_involution: ord == 2,
                row,
                orbit: orbit_uf.find(classes.class_of[x as usize] as usize),
            }
        })
        .collect();

    notes.push(format!(
        "candidates: {} -> {} after removing duplicate rows -> {} after dominance",
        raw_candidates.len(),
        after_dedupe,
        candidates.len()
    ));
    notes.push(format!(
        "targets: {} -> {} after removing implied targets",
        all_targets.len(),
        targets.len()
    ));

    let nonsolvable = !all_targets.is_empty();
    Ok(CoverInstance {
        targets,
        candidates,
        involutions_only: mode == Mode::Involutions,
        lower_floor: if nonsolvable { 3 } else { 0 },
        replaced_by,
        notes,
    })
}

/// Result of a budgeted maximum search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedValue {
    pub lower: usize,
    pub upper: usize,
    /// Elements realizing `lower`.
    pub witness: Vec<u32>,
}

impl BoundedValue {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Largest set of nonradical elements no two of which generate a solvable
/// subgroup, within `node_budget` search nodes.
pub fn mu_s(inc: &SolvabilizerIncidence<'_>, node_budget: u64) -> BoundedValue {
    let t = inc.table;
    let verts: Vec<u32> = (0..t.order() as u32)
        .filter(|&x| !inc.is_radical(x))
        .collect();
    let adj: Vec<Bitset> = verts
        .par_iter()
        .map(|&x| {
            let mut row = Bitset::new(verts.len());
            for (j, &y) in verts.iter().enumerate() {
                if !inc.contains(x, y) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    clique_value(&verts, &adj, node_budget)
}

/// Largest set of elements any two of which generate `G`.
pub fn mu_pairwise_generators(t: &GroupTable, node_budget: u64) -> Result<BoundedValue> {
    let n = t.order();
    let verts: Vec<u32> = (1..n as u32).collect();
    let adj: Vec<Bitset> = verts
        .par_iter()
        .map_init(
            || Closer::new(n),
            |closer, &x| {
                let mut row = Bitset::new(verts.len());
                for (j, &y) in verts.iter().enumerate() {
                    if closer.close(t, &[x, y], usize::MAX) == n {
                        row.insert(j);
                    }
                }
                row
            },
        )
        .collect();
    if adj.iter().all(|r| r.is_empty()) {
        return Err(Error::NotTwoGenerated);
    }
    Ok(clique_value(&verts, &adj, node_budget))
}

fn clique_value(verts: &[u32], adj: &[Bitset], node_budget: u64) -> BoundedValue {
    let r = crate::clique::max_clique(adj, node_budget);
    BoundedValue {
        lower: r.clique.len(),
        upper: r.upper,
        witness: r.clique.iter().map(|&i| verts[i]).collect(),
    }
}
