//! Dense permutation-group engine.
//!
//! A [`GroupTable`] holds every element of a finite permutation group,
//! indexed in breadth-first order from the generators (index 0 is the
//! identity). Subgroups and other subsets are [`ElementSet`]s over those
//! indices. Everything downstream (solvabilizers, covers) works on indices.

use std::sync::OnceLock;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on the number of enumerated elements.
pub const DEFAULT_CAP: usize = 20_000;

/// Groups up to this order get a precomputed multiplication table.
const MUL_TABLE_MAX: usize = 4096;

/// Element lookup by images of a base (a point sequence whose pointwise
/// stabilizer is trivial).
#[derive(Debug)]
struct ElementIndex {
    base: Vec<u32>,
    bits: u32,
    packed: FxHashMap<u128, u32>,
    wide: FxHashMap<Vec<u32>, u32>,
}

impl ElementIndex {
    fn packs(&self) -> bool {
        self.base.len() as u32 * self.bits <= 128
    }

    #[inline]
    fn get<F: Fn(u32) -> u32>(&self, image: F) -> Option<u32> {
        if self.packs() {
            let mut key = 0u128;
            for &b in &self.base {
                key = (key << self.bits) | image(b) as u128;
            }
            self.packed.get(&key).copied()
        } else {
            let key: Vec<u32> = self.base.iter().map(|&b| image(b)).collect();
            self.wide.get(&key).copied()
        }
    }
}

#[derive(Debug)]
pub struct GroupTable {
    degree: usize,
    points: Vec<u32>,
    inverse: Vec<u32>,
    order_of: Vec<u32>,
    generators: Vec<u32>,
    index: ElementIndex,
    mul: Option<Vec<u16>>,
    solvable: OnceLock<bool>,
}

/// Breadth-first enumeration of the group generated by `generators`.
///
/// Fails with [`Error::CapExceeded`] as soon as more than `cap` elements
/// have been found.
pub fn enumerate_group(generators: &[Permutation], cap: usize) -> Result<GroupTable> {
    let Some(first) = generators.first() else {
        return Err(Error::EmptyGenerators);
    };
    let degree = first.degree();
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::DegreeMismatch(degree, g.degree()));
    }
    let cap = cap.max(1);
    let mut seen: FxHashMap<Vec<u32>, u32> = FxHashMap::default();
    let mut points: Vec<u32> = (0..degree as u32).collect();
    seen.insert(points.clone(), 0);
    let gens: Vec<&[u32]> = generators.iter().map(|g| g.images()).collect();
    let mut count = 1usize;
    let mut head = 0usize;
    while head < count {
        for g in &gens {
            let cur = &points[head * degree..(head + 1) * degree];
            let prod: Vec<u32> = cur.iter().map(|&x| g[x as usize]).collect();
            if !seen.contains_key(&prod) {
                if count == cap {
                    return Err(Error::CapExceeded(cap));
                }
                seen.insert(prod.clone(), count as u32);
                points.extend_from_slice(&prod);
                count += 1;
            }
        }
        head += 1;
    }
    let generator_indices = {
        let mut out = Vec::new();
        for g in generators {
            let i = seen[g.images()];
            if i != 0 && !out.contains(&i) {
                out.push(i);
            }
        }
        out
    };
    drop(seen);
    GroupTable::from_points(degree, points, generator_indices)
}

impl GroupTable {
    fn from_points(degree: usize, points: Vec<u32>, generators: Vec<u32>) -> Result<Self> {
        let n = points.len() / degree.max(1);
        let n = if degree == 0 { 1 } else { n };
        let index = build_index(degree, &points, n);
        let mut table = GroupTable {
            degree,
            points,
            inverse: Vec::new(),
            order_of: Vec::new(),
            generators,
            index,
            mul: None,
            solvable: OnceLock::new(),
        };
        table.inverse = (0..n as u32)
            .map(|i| {
                let p = table.permutation(i).inverse();
                table.index_of_unchecked(p.images())
            })
            .collect();
        table.order_of = (0..n as u32)
            .map(|i| table.permutation(i).order() as u32)
            .collect();
        if n <= MUL_TABLE_MAX {
            let rows: Vec<Vec<u16>> = (0..n as u32)
                .into_par_iter()
                .map(|a| {
                    (0..n as u32)
                        .map(|b| table.mul_lookup(a, b) as u16)
                        .collect()
                })
                .collect();
            table.mul = Some(rows.concat());
        }
        Ok(table)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.inverse.len()
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn images(&self, i: u32) -> &[u32] {
        let d = self.degree;
        &self.points[i as usize * d..(i as usize + 1) * d]
    }

    pub fn permutation(&self, i: u32) -> Permutation {
        Permutation::from_images_unchecked(self.images(i).to_vec())
    }

    #[inline]
    pub fn inverse(&self, i: u32) -> u32 {
        self.inverse[i as usize]
    }

    #[inline]
    pub fn order_of(&self, i: u32) -> u32 {
        self.order_of[i as usize]
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn generator_permutations(&self) -> Vec<Permutation> {
        self.generators
            .iter()
            .map(|&g| self.permutation(g))
            .collect()
    }

    /// Product `a * b` (apply `a`, then `b`).
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.mul {
            Some(t) => t[a as usize * self.order() + b as usize] as u32,
            None => self.mul_lookup(a, b),
        }
    }

    #[inline]
    fn mul_lookup(&self, a: u32, b: u32) -> u32 {
        let pa = self.images(a);
        let pb = self.images(b);
        self.index
            .get(|x| pb[pa[x as usize] as usize])
            .expect("product of group elements is in the group")
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inverse(g), x), g)
    }

    /// `a⁻¹ b⁻¹ a b`.
    #[inline]
    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inverse(ba), ab)
    }

    pub fn power(&self, x: u32, k: u64) -> u32 {
        let k = k % self.order_of(x) as u64;
        let mut acc = 0u32;
        let mut base = x;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn index_of_unchecked(&self, images: &[u32]) -> u32 {
        self.index
            .get(|b| images[b as usize])
            .expect("element in group")
    }

    /// Index of a permutation, or `None` if it is not in the group.
    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        if p.degree() != self.degree {
            return None;
        }
        let imgs = p.images();
        let i = self.index.get(|b| imgs[b as usize])?;
        (self.images(i) == imgs).then_some(i)
    }

    pub fn is_solvable_group(&self) -> bool {
        *self.solvable.get_or_init(|| {
            let mut closer = Closer::new(self.order());
            generated_is_solvable(self, &self.generators, self.order(), &mut closer)
        })
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order())
    }

    pub fn trivial_set(&self) -> ElementSet {
        ElementSet::from_indices(self.order(), [0])
    }

    /// Smallest subgroup containing `seeds`.
    pub fn subgroup_closure(&self, seeds: &[u32]) -> ElementSet {
        let mut closer = Closer::new(self.order());
        closer.close(self, seeds, usize::MAX);
        closer.to_set()
    }

    /// A generating set for `h`, built greedily in ascending index order.
    /// Fails if `h` is not a subgroup.
    pub fn generating_set(&self, h: &ElementSet) -> Result<Vec<u32>> {
        if !h.contains(0) {
            return Err(Error::NotASubgroup);
        }
        let mut closer = Closer::new(self.order());
        closer.close(self, &[], usize::MAX);
        let mut gens = Vec::new();
        for x in h.iter() {
            if !closer.contains(x) {
                gens.push(x);
                closer.extend(self, &gens, x);
                if closer.elems.iter().any(|&e| !h.contains(e)) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        if closer.len() != h.len() {
            return Err(Error::NotASubgroup);
        }
        Ok(gens)
    }

    pub fn is_subgroup(&self, h: &ElementSet) -> bool {
        self.generating_set(h).is_ok()
    }

    /// Invariance of a subgroup under conjugation by the table generators.
    pub fn is_normal(&self, n: &ElementSet) -> bool {
        self.is_subgroup(n)
            && n.iter()
                .all(|x| self.generators.iter().all(|&g| n.contains(self.conj(x, g))))
    }

    /// The subgroup generated by all commutators of `h`.
    ///
    /// Computed as the normal closure in `h` of the commutators of a
    /// generating set, which is the same subgroup.
    pub fn derived_subgroup(&self, h: &ElementSet) -> Result<ElementSet> {
        let gens = self.generating_set(h)?;
        let mut closer = Closer::new(self.order());
        let (_, _) = derived_step(self, &gens, &mut closer);
        Ok(closer.to_set())
    }

    /// Whether the derived series of `h` reaches the trivial group.
    pub fn is_solvable(&self, h: &ElementSet) -> Result<bool> {
        let gens = self.generating_set(h)?;
        let mut closer = Closer::new(self.order());
        Ok(derived_series_solvable(
            self,
            &gens,
            h.len(),
            &mut closer,
            false,
        ))
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[u32]) -> ElementSet {
        let mut closer = Closer::new(self.order());
        closer.close(self, &[], usize::MAX);
        let mut gens: Vec<u32> = Vec::new();
        for &x in seeds {
            if !closer.contains(x) {
                gens.push(x);
                closer.extend(self, &gens, x);
            }
        }
        let mut k = 0;
        while k < gens.len() {
            for &g in &self.generators {
                let c = self.conj(gens[k], g);
                if !closer.contains(c) {
                    gens.push(c);
                    closer.extend(self, &gens, c);
                }
            }
            k += 1;
        }
        closer.to_set()
    }

    /// Nontrivial with no proper nontrivial normal subgroup.
    pub fn is_simple(&self) -> bool {
        let n = self.order();
        n > 1
            && self
                .conjugacy_classes()
                .representatives
                .iter()
                .skip(1)
                .all(|&r| self.normal_closure(&[r]).len() == n)
    }

    pub fn centralizer(&self, x: u32) -> ElementSet {
        let n = self.order();
        ElementSet::from_indices(
            n,
            (0..n as u32).filter(|&g| self.mul(x, g) == self.mul(g, x)),
        )
    }

    /// Orbits of the conjugation action, numbered by their least element.
    pub fn conjugacy_classes(&self) -> ClassPartition {
        let n = self.order();
        let mut class_of = vec![u32::MAX; n];
        let mut conjugator = vec![0u32; n];
        let mut representatives = Vec::new();
        let mut sizes = Vec::new();
        for start in 0..n as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let id = representatives.len() as u32;
            representatives.push(start);
            class_of[start as usize] = id;
            conjugator[start as usize] = 0;
            let mut queue = vec![start];
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                for &g in &self.generators {
                    let y = self.conj(x, g);
                    if class_of[y as usize] == u32::MAX {
                        class_of[y as usize] = id;
                        conjugator[y as usize] = self.mul(conjugator[x as usize], g);
                        queue.push(y);
                    }
                }
            }
            sizes.push(queue.len());
        }
        ClassPartition {
            class_of,
            representatives,
            sizes,
            conjugator,
        }
    }

    /// The solvable radical: all `x` with `⟨x, y⟩` solvable for every `y`.
    ///
    /// The result is checked to be a normal subgroup.
    pub fn solvable_radical(&self) -> Result<ElementSet> {
        let n = self.order();
        if self.is_solvable_group() {
            return Ok(self.full_set());
        }
        let classes = self.conjugacy_classes();
        let mut probe = PairProbe::new(n);
        let mut radical = ElementSet::new(n);
        for (c, &rep) in classes.representatives.iter().enumerate() {
            let inside = rep == 0 || probe.scan(self, rep, true).is_some();
            if inside {
                for x in classes.members(c) {
                    radical.insert(x);
                }
            }
        }
        if !self.is_normal(&radical) {
            return Err(Error::InternalInconsistency(
                "computed radical is not a normal subgroup".into(),
            ));
        }
        Ok(radical)
    }

    /// Permutation representation of `G/N` on the cosets of `N`.
    pub fn quotient_by(&self, normal: &ElementSet) -> Result<GroupTable> {
        Ok(self.quotient_map(normal)?.table)
    }

    /// Quotient together with the image of every element.
    pub fn quotient_map(&self, normal: &ElementSet) -> Result<QuotientMap> {
        if !self.is_normal(normal) {
            return Err(Error::NotNormal);
        }
        let n = self.order();
        let mut coset_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n as u32 {
            if coset_of[g as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(g);
            for m in normal.iter() {
                coset_of[self.mul(m, g) as usize] = id;
            }
        }
        let action = |g: u32| -> Permutation {
            Permutation::from_images_unchecked(
                reps.iter()
                    .map(|&r| coset_of[self.mul(r, g) as usize])
                    .collect(),
            )
        };
        let degree = reps.len();
        let gens: Vec<Permutation> = if self.generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            self.generators.iter().map(|&g| action(g)).collect()
        };
        let table = enumerate_group(&gens, usize::MAX)?;
        if table.order() * normal.len() != n {
            return Err(Error::InternalInconsistency(format!(
                "coset action of order {} does not match index {}",
                table.order(),
                n / normal.len()
            )));
        }
        let image_of = (0..n as u32)
            .map(|g| {
                table
                    .index_of(&action(g))
                    .ok_or_else(|| Error::InternalInconsistency("coset image missing".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QuotientMap { table, image_of })
    }

    /// Every subgroup of index 2, as kernels of the surjections onto C₂.
    pub fn index_two_subgroups(&self) -> Vec<ElementSet> {
        let n = self.order();
        // ⟨g² : g ∈ G⟩ contains G' and is the intersection of all index-2
        // subgroups' kernels' lattice bottom.
        let mut closer = Closer::new(n);
        closer.close(self, &[], usize::MAX);
        let mut gens = Vec::new();
        for g in 0..n as u32 {
            let s = self.mul(g, g);
            if !closer.contains(s) {
                gens.push(s);
                closer.extend(self, &gens, s);
            }
        }
        let base = closer.to_set();
        // Label each element with its coordinates in G/base ≅ C₂ᵏ.
        let mut label = vec![u32::MAX; n];
        for x in base.iter() {
            label[x as usize] = 0;
        }
        let mut members: Vec<u32> = base.iter().collect();
        let mut k = 0u32;
        while members.len() < n {
            let g = (0..n as u32)
                .find(|&g| label[g as usize] == u32::MAX)
                .unwrap();
            let bit = 1u32 << k;
            let new: Vec<u32> = members.iter().map(|&m| self.mul(g, m)).collect();
            for (&m, &gm) in members.iter().zip(&new) {
                label[gm as usize] = label[m as usize] | bit;
            }
            members.extend(new);
            k += 1;
        }
        (1..1u32 << k)
            .map(|phi| {
                ElementSet::from_indices(
                    n,
                    (0..n as u32).filter(|&g| (label[g as usize] & phi).count_ones() % 2 == 0),
                )
            })
            .collect()
    }
}

/// `G/N` plus the projection of each element of `G`.
#[derive(Debug)]
pub struct QuotientMap {
    pub table: GroupTable,
    pub image_of: Vec<u32>,
}

fn build_index(degree: usize, points: &[u32], n: usize) -> ElementIndex {
    let bits = (usize::BITS - degree.max(2).saturating_sub(1).leading_zeros()).max(1);
    // Greedy base: repeatedly fix the first point moved by a surviving
    // element until only the identity survives.
    let mut base = Vec::new();
    let mut alive: Vec<usize> = (1..n).collect();
    while let Some(&e) = alive.first() {
        let img = &points[e * degree..(e + 1) * degree];
        let b = (0..degree)
            .find(|&x| img[x] as usize != x)
            .expect("non-identity moves a point");
        base.push(b as u32);
        alive.retain(|&e| points[e * degree + b] as usize == b);
    }
    let mut index = ElementIndex {
        base,
        bits,
        packed: FxHashMap::default(),
        wide: FxHashMap::default(),
    };
    for e in 0..n {
        let img = &points[e * degree..(e + 1) * degree];
        if index.packs() {
            let mut key = 0u128;
            for &b in &index.base {
                key = (key << bits) | img[b as usize] as u128;
            }
            index.packed.insert(key, e as u32);
        } else {
            let key = index.base.iter().map(|&b| img[b as usize]).collect();
            index.wide.insert(key, e as u32);
        }
    }
    index
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ElementSet {
    bits: Bitset,
}

impl ElementSet {
    pub fn new(group_order: usize) -> Self {
        ElementSet {
            bits: Bitset::new(group_order),
        }
    }

    pub fn full(group_order: usize) -> Self {
        ElementSet {
            bits: Bitset::full(group_order),
        }
    }

    pub fn from_indices(group_order: usize, items: impl IntoIterator<Item = u32>) -> Self {
        let mut s = ElementSet::new(group_order);
        for i in items {
            s.insert(i);
        }
        s
    }

    pub fn from_bits(bits: Bitset) -> Self {
        ElementSet { bits }
    }

    #[inline]
    pub fn contains(&self, i: u32) -> bool {
        self.bits.contains(i as usize)
    }

    #[inline]
    pub fn insert(&mut self, i: u32) -> bool {
        self.bits.insert(i as usize)
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.bits.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.bits.iter().map(|i| i as u32)
    }

    pub fn bits(&self) -> &Bitset {
        &self.bits
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        self.bits.union_with(&other.bits);
    }

    /// `g⁻¹ S g`.
    pub fn conjugated(&self, table: &GroupTable, g: u32) -> ElementSet {
        ElementSet::from_indices(self.group_order(), self.iter().map(|x| table.conj(x, g)))
    }
}

/// Conjugacy classes of a [`GroupTable`].
#[derive(Clone, Debug)]
pub struct ClassPartition {
    pub class_of: Vec<u32>,
    /// Least element index of each class.
    pub representatives: Vec<u32>,
    pub sizes: Vec<usize>,
    /// `conjugator[x] = w` with `x = w⁻¹ · rep · w`.
    pub conjugator: Vec<u32>,
}

impl ClassPartition {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn members(&self, class: usize) -> impl Iterator<Item = u32> + '_ {
        self.class_of
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c as usize == class)
            .map(|(i, _)| i as u32)
    }
}

/// Reusable subgroup-closure workspace.
pub(crate) struct Closer {
    mark: Bitset,
    pub(crate) elems: Vec<u32>,
}

impl Closer {
    pub(crate) fn new(order: usize) -> Self {
        Closer {
            mark: Bitset::new(order),
            elems: Vec::new(),
        }
    }

    fn reset(&mut self) {
        for &e in &self.elems {
            self.mark.remove(e as usize);
        }
        self.elems.clear();
    }

    #[inline]
    pub(crate) fn contains(&self, x: u32) -> bool {
        self.mark.contains(x as usize)
    }

    pub(crate) fn len(&self) -> usize {
        self.elems.len()
    }

    /// Closes `gens`; stops early once more than `limit` elements are found
    /// and returns the partial count.
    pub(crate) fn close(&mut self, t: &GroupTable, gens: &[u32], limit: usize) -> usize {
        self.reset();
        self.mark.insert(0);
        self.elems.push(0);
        self.grow(t, gens, 0, limit)
    }

    fn grow(&mut self, t: &GroupTable, gens: &[u32], from: usize, limit: usize) -> usize {
        let mut i = from;
        while i < self.elems.len() {
            let e = self.elems[i];
            for &g in gens {
                let p = t.mul(e, g);
                if self.mark.insert(p as usize) {
                    self.elems.push(p);
                    if self.elems.len() > limit {
                        return self.elems.len();
                    }
                }
            }
            i += 1;
        }
        self.elems.len()
    }

    /// Adds `new_gen` (already the last entry of `gens`) to a closed subgroup.
    pub(crate) fn extend(&mut self, t: &GroupTable, gens: &[u32], new_gen: u32) -> usize {
        let old = self.elems.len();
        for i in 0..old {
            let p = t.mul(self.elems[i], new_gen);
            if self.mark.insert(p as usize) {
                self.elems.push(p);
            }
        }
        self.grow(t, gens, old, usize::MAX)
    }

    pub(crate) fn to_set(&self) -> ElementSet {
        let mut s = ElementSet::new(self.mark.len());
        for &e in &self.elems {
            s.insert(e);
        }
        s
    }

    pub(crate) fn fingerprint(&self) -> (usize, u64) {
        let mut h = rustc_hash::FxHasher::default();
        std::hash::Hash::hash(self.mark.words(), &mut h);
        (self.elems.len(), std::hash::Hasher::finish(&h))
    }
}

fn distinct_prime_factors(mut n: usize) -> usize {
    let mut count = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            count += 1;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    count + usize::from(n > 1)
}

/// Orders for which every group is solvable: below 60, odd (Feit–Thompson),
/// twice an odd number (cyclic Sylow 2-subgroup), or divisible by at most two
/// primes (Burnside).
pub(crate) fn order_forces_solvable(order: usize) -> bool {
    order < 60 || order % 2 == 1 || order % 4 == 2 || distinct_prime_factors(order) <= 2
}

/// One derived step: leaves `[H, H]` in `closer` and returns its generators
/// and order.
fn derived_step(t: &GroupTable, gens: &[u32], closer: &mut Closer) -> (Vec<u32>, usize) {
    closer.close(t, &[], usize::MAX);
    let mut ngens: Vec<u32> = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let c = t.commutator(gens[i], gens[j]);
            if !closer.contains(c) {
                ngens.push(c);
                closer.extend(t, &ngens, c);
            }
        }
    }
    let mut k = 0;
    while k < ngens.len() {
        for &h in gens {
            let c = t.conj(ngens[k], h);
            if !closer.contains(c) {
                ngens.push(c);
                closer.extend(t, &ngens, c);
            }
        }
        k += 1;
    }
    let size = closer.len();
    (ngens, size)
}

fn derived_series_solvable(
    t: &GroupTable,
    gens: &[u32],
    size: usize,
    closer: &mut Closer,
    use_order_shortcut: bool,
) -> bool {
    let mut gens: Vec<u32> = gens.iter().copied().filter(|&g| g != 0).collect();
    let mut size = size;
    loop {
        if size == 1 || (use_order_shortcut && order_forces_solvable(size)) {
            return true;
        }
        let (ngens, nsize) = derived_step(t, &gens, closer);
        if nsize == size {
            return false;
        }
        gens = ngens;
        size = nsize;
    }
}

/// Solvability of `⟨gens⟩`, whose order is `size`.
pub(crate) fn generated_is_solvable(
    t: &GroupTable,
    gens: &[u32],
    size: usize,
    closer: &mut Closer,
) -> bool {
    derived_series_solvable(t, gens, size, closer, true)
}

/// Pairwise-solvability machinery shared by the radical and solvabilizer
/// computations.
pub(crate) struct PairProbe {
    closer: Closer,
    scratch: Closer,
    cache: FxHashMap<(usize, u64), bool>,
    parent: Vec<u32>,
}

impl PairProbe {
    pub(crate) fn new(order: usize) -> Self {
        PairProbe {
            closer: Closer::new(order),
            scratch: Closer::new(order),
            cache: FxHashMap::default(),
            parent: Vec::new(),
        }
    }

    /// Whether `⟨x, y⟩` is solvable.
    pub(crate) fn solvable_pair(&mut self, t: &GroupTable, x: u32, y: u32) -> bool {
        let n = t.order();
        let gens = [x, y];
        let size = self.closer.close(t, &gens, n / 2);
        if size > n / 2 {
            return t.is_solvable_group();
        }
        if order_forces_solvable(size) {
            return true;
        }
        let key = self.closer.fingerprint();
        if let Some(&v) = self.cache.get(&key) {
            return v;
        }
        let v = generated_is_solvable(t, &gens, size, &mut self.scratch);
        self.cache.insert(key, v);
        v
    }

    fn find(&mut self, mut a: u32) -> u32 {
        while self.parent[a as usize] != a {
            let p = self.parent[a as usize];
            self.parent[a as usize] = self.parent[p as usize];
            a = p;
        }
        a
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }

    /// Computes `Sol(x)`.
    ///
    /// `y` and `x^a y^{±1} x^b` and `c⁻¹ y c` (for `c` centralizing `x`)
    /// generate `x`-subgroups of the same isomorphism type, so one pair test
    /// per class of that equivalence suffices. With `stop_early`, returns
    /// `None` at the first nonsolvable pair.
    pub(crate) fn scan(&mut self, t: &GroupTable, x: u32, stop_early: bool) -> Option<ElementSet> {
        let n = t.order();
        self.parent.clear();
        self.parent.extend(0..n as u32);
        let cent = t.centralizer(x);
        let cgens = t.generating_set(&cent).expect("centralizer is a subgroup");
        for y in 0..n as u32 {
            self.union(y, t.mul(x, y));
            self.union(y, t.mul(y, x));
            self.union(y, t.inverse(y));
            for &c in &cgens {
                self.union(y, t.conj(y, c));
            }
        }
        let mut verdict = vec![0u8; n]; // 0 unknown, 1 solvable, 2 not
        let mut sol = ElementSet::new(n);
        for y in 0..n as u32 {
            let r = self.find(y);
            if verdict[r as usize] == 0 {
                let ok = self.solvable_pair(t, x, r);
                verdict[r as usize] = if ok { 1 } else { 2 };
                if !ok && stop_early {
                    return None;
                }
            }
            if verdict[r as usize] == 1 {
                sol.insert(y);
            }
        }
        Some(sol)
    }
}
