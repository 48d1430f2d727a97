//! Named groups as permutation groups.
//!
//! Linear groups over GF(q) act on row vectors from the right; projective
//! points are listed as ∞, then the affine points `z = x/y` in field order,
//! so point 0 is ∞ and point `1 + z` is `z`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{prime_power, Field, Matrix2};
use crate::group::{enumerate_group, GroupTable};
use crate::perm::Permutation;

/// How the top group of a wreath product permutes its blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WreathTop {
    /// The n-cycle.
    Cycle,
    /// The transposition of two blocks; requires n = 2.
    Swap,
    /// The full symmetric group on the blocks.
    Symmetric,
    /// Explicit generators on the block indices.
    Generators(Vec<Permutation>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Symmetric(usize),
    Alternating(usize),
    /// Dihedral group of order 2n on n points.
    Dihedral(usize),
    Psl2(u64),
    Pgl2(u64),
    PGammaL2(u64),
    /// PSL₂(q) extended by field automorphisms.
    PSigmaL2(u64),
    /// The Mathieu group M₁₀ inside PΓL₂(9).
    M10,
    Gl2(u64),
    Sl2(u64),
    Product(Vec<GroupSpec>),
    Wreath(Box<GroupSpec>, usize, WreathTop),
    /// `{(a, b) ∈ A × B : a ∈ S ⇔ b ∈ T}` for the unique index-2 subgroups
    /// S of A and T of B.
    Squished(Box<GroupSpec>, Box<GroupSpec>),
    Raw(Vec<Permutation>),
    /// Suzuki group Sz(q); bounds only, no construction.
    Suzuki(u64),
}

/// Enumerates the group described by `spec`.
pub fn build(spec: &GroupSpec, cap: usize) -> Result<GroupTable> {
    enumerate_group(&generators(spec, cap)?, cap)
}

/// Permutation generators for `spec`. Squished products enumerate their
/// factors, so `cap` applies to those.
pub fn generators(spec: &GroupSpec, cap: usize) -> Result<Vec<Permutation>> {
    match spec {
        GroupSpec::Symmetric(n) => symmetric(*n),
        GroupSpec::Alternating(n) => alternating(*n),
        GroupSpec::Dihedral(n) => dihedral(*n),
        GroupSpec::Psl2(q) => projective(*q, Projective::Psl),
        GroupSpec::Pgl2(q) => projective(*q, Projective::Pgl),
        GroupSpec::PGammaL2(q) => projective(*q, Projective::PGammaL),
        GroupSpec::PSigmaL2(q) => projective(*q, Projective::PSigmaL),
        GroupSpec::M10 => projective(9, Projective::M10),
        GroupSpec::Gl2(q) => linear(*q, false),
        GroupSpec::Sl2(q) => linear(*q, true),
        GroupSpec::Product(factors) => {
            if factors.is_empty() {
                return Err(Error::BadParameter(
                    "product needs at least one factor".into(),
                ));
            }
            let gens = factors
                .iter()
                .map(|f| generators(f, cap))
                .collect::<Result<Vec<_>>>()?;
            Ok(direct_product(&gens))
        }
        GroupSpec::Wreath(base, n, top) => wreath(&generators(base, cap)?, *n, top),
        GroupSpec::Squished(a, b) => squished(&build(a, cap)?, &build(b, cap)?),
        GroupSpec::Raw(perms) => {
            let d = perms
                .iter()
                .map(|p| p.degree())
                .max()
                .ok_or(Error::EmptyGenerators)?;
            Ok(perms.iter().map(|p| p.extended(d)).collect())
        }
        GroupSpec::Suzuki(q) => Err(Error::BadParameter(format!(
            "Sz({q}) is supported for family bounds only"
        ))),
    }
}

fn symmetric(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::BadParameter("symmetric(0)".into()));
    }
    if n == 1 {
        return Ok(vec![Permutation::identity(1)]);
    }
    Ok(vec![
        Permutation::from_cycles(n, &[vec![0, 1]])?,
        Permutation::from_cycles(n, &[(0..n as u32).collect()])?,
    ])
}

fn alternating(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::BadParameter("alternating(0)".into()));
    }
    if n < 3 {
        return Ok(vec![Permutation::identity(n)]);
    }
    (0..n as u32 - 2)
        .map(|i| Permutation::from_cycles(n, &[vec![i, i + 1, i + 2]]))
        .collect()
}

fn dihedral(n: usize) -> Result<Vec<Permutation>> {
    if n < 3 {
        return Err(Error::BadParameter(format!("dihedral({n}) needs n ≥ 3")));
    }
    let rot = Permutation::from_cycles(n, &[(0..n as u32).collect()])?;
    let refl = Permutation::from_images((0..n).map(|i| ((n - i) % n) as u32).collect())?;
    Ok(vec![rot, refl])
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Projective {
    Psl,
    Pgl,
    PGammaL,
    PSigmaL,
    M10,
}

/// Action of `M` on the projective line.
pub fn mobius_permutation(k: &Field, m: &Matrix2) -> Permutation {
    let q = k.order();
    let point = |(x, y): (u32, u32)| -> u32 {
        if y == 0 {
            0
        } else {
            1 + k.mul(x, k.inv(y).unwrap())
        }
    };
    let mut images = Vec::with_capacity(q as usize + 1);
    images.push(point(m.apply((1, 0), k)));
    for z in 0..q {
        images.push(point(m.apply((z, 1), k)));
    }
    Permutation::from_images(images).expect("invertible matrix permutes the projective line")
}

fn frobenius_permutation(k: &Field, twist: u32) -> Permutation {
    let q = k.order();
    let mut images = vec![0u32];
    images.extend((0..q).map(|z| 1 + k.mul(twist, k.frobenius(z))));
    Permutation::from_images(images).expect("frobenius is a bijection")
}

fn projective(q: u64, kind: Projective) -> Result<Vec<Permutation>> {
    let k = Field::new(q)?;
    let w = k.primitive();
    let mut gens: Vec<Permutation> = k
        .additive_basis()
        .into_iter()
        .map(|t| mobius_permutation(&k, &Matrix2::new(1, 0, t, 1)))
        .collect();
    gens.push(mobius_permutation(&k, &Matrix2::new(0, 1, k.neg(1), 0)));
    let scale = if kind == Projective::Pgl || kind == Projective::PGammaL {
        w
    } else {
        k.mul(w, w)
    };
    gens.push(mobius_permutation(&k, &Matrix2::new(scale, 0, 0, 1)));
    match kind {
        Projective::PGammaL | Projective::PSigmaL if k.degree() > 1 => {
            gens.push(frobenius_permutation(&k, 1));
        }
        Projective::M10 => gens.push(frobenius_permutation(&k, w)),
        _ => {}
    }
    Ok(gens)
}

/// Index of a nonzero vector among the `q² − 1` points of the linear action.
fn vector_index(q: u32, (x, y): (u32, u32)) -> u32 {
    x * q + y - 1
}

/// Action of `M` on nonzero row vectors.
pub fn linear_permutation(k: &Field, m: &Matrix2) -> Permutation {
    let q = k.order();
    let images = (1..q * q)
        .map(|v| vector_index(q, m.apply((v / q, v % q), k)))
        .collect();
    Permutation::from_images(images).expect("invertible matrix permutes nonzero vectors")
}

fn linear(q: u64, special: bool) -> Result<Vec<Permutation>> {
    let k = Field::new(q)?;
    let w = k.primitive();
    let mut mats: Vec<Matrix2> = k
        .additive_basis()
        .into_iter()
        .map(|b| Matrix2::new(1, b, 0, 1))
        .collect();
    if special {
        mats.push(Matrix2::new(0, k.neg(1), 1, 0));
        mats.push(Matrix2::new(w, 0, 0, k.inv(w).unwrap()));
    } else {
        mats.push(Matrix2::new(0, 1, 1, 0));
        mats.push(Matrix2::new(w, 0, 0, 1));
    }
    Ok(mats.iter().map(|m| linear_permutation(&k, m)).collect())
}

/// Generators of the direct product acting on consecutive point blocks.
pub fn direct_product(factors: &[Vec<Permutation>]) -> Vec<Permutation> {
    let degrees: Vec<usize> = factors
        .iter()
        .map(|g| g.iter().map(|p| p.degree()).max().unwrap_or(0))
        .collect();
    let total: usize = degrees.iter().sum();
    let mut out = Vec::new();
    let mut offset = 0;
    for (gens, &d) in factors.iter().zip(&degrees) {
        for g in gens {
            out.push(shifted(g, offset, total));
        }
        offset += d;
    }
    if out.is_empty() {
        out.push(Permutation::identity(total.max(1)));
    }
    out
}

fn shifted(g: &Permutation, offset: usize, total: usize) -> Permutation {
    let mut images: Vec<u32> = (0..total as u32).collect();
    for (i, &x) in g.images().iter().enumerate() {
        images[offset + i] = offset as u32 + x;
    }
    Permutation::from_images_unchecked(images)
}

fn wreath(base: &[Permutation], n: usize, top: &WreathTop) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::BadParameter("wreath product needs n ≥ 1".into()));
    }
    let d = base.iter().map(|p| p.degree()).max().unwrap_or(1);
    let total = d * n;
    let mut out = Vec::new();
    for block in 0..n {
        for g in base {
            out.push(shifted(&g.extended(d), block * d, total));
        }
    }
    let tops: Vec<Permutation> = match top {
        WreathTop::Cycle => vec![Permutation::from_cycles(n, &[(0..n as u32).collect()])?],
        WreathTop::Swap => {
            if n != 2 {
                return Err(Error::BadParameter(format!(
                    "swap top needs n = 2, got {n}"
                )));
            }
            vec![Permutation::from_cycles(2, &[vec![0, 1]])?]
        }
        WreathTop::Symmetric => symmetric(n)?,
        WreathTop::Generators(gens) => {
            if let Some(g) = gens.iter().find(|g| g.degree() > n) {
                return Err(Error::BadParameter(format!(
                    "top generator {g} moves more than {n} blocks"
                )));
            }
            gens.iter().map(|g| g.extended(n)).collect()
        }
    };
    for t in tops {
        let images = (0..total)
            .map(|pt| (t.apply((pt / d) as u32) as usize * d + pt % d) as u32)
            .collect();
        out.push(Permutation::from_images_unchecked(images));
    }
    Ok(out)
}

/// The base element `(x, 1, .., 1)` of `H ≀ K` with `n` blocks, top component
/// trivial, in the block layout used by [`build`].
pub fn wreath_block_embedding(x: &Permutation, n: usize) -> Permutation {
    let d = x.degree();
    let images = (0..d * n)
        .map(|pt| {
            if pt < d {
                x.apply(pt as u32)
            } else {
                pt as u32
            }
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

fn unique_index_two(t: &GroupTable, which: &str) -> Result<crate::group::ElementSet> {
    let mut subs = t.index_two_subgroups();
    if subs.len() != 1 {
        return Err(Error::BadParameter(format!(
            "{which} factor has {} subgroups of index 2, need exactly one",
            subs.len()
        )));
    }
    Ok(subs.pop().unwrap())
}

fn squished(a: &GroupTable, b: &GroupTable) -> Result<Vec<Permutation>> {
    let s = unique_index_two(a, "first")?;
    let t = unique_index_two(b, "second")?;
    let total = a.degree() + b.degree();
    let mut out = Vec::new();
    for g in a.generating_set(&s)? {
        out.push(shifted(&a.permutation(g), 0, total));
    }
    for g in b.generating_set(&t)? {
        out.push(shifted(&b.permutation(g), a.degree(), total));
    }
    let a0 = (0..a.order() as u32).find(|&x| !s.contains(x)).unwrap();
    let b0 = (0..b.order() as u32).find(|&x| !t.contains(x)).unwrap();
    let left = shifted(&a.permutation(a0), 0, total);
    let right = shifted(&b.permutation(b0), a.degree(), total);
    out.push(left.then(&right));
    Ok(out)
}

/// The `q` involutions `g_{U,W}` of GL₂(q) fixing `U = ⟨e₁⟩` and negating
/// `W = ⟨(c, 1)⟩`, for `c` in field order.
pub fn gl2_cover_elements(q: u64) -> Result<Vec<Matrix2>> {
    let k = Field::new(q)?;
    if k.characteristic() == 2 {
        return Err(Error::EvenFieldOrder(q as u32));
    }
    let minus_one = k.neg(1);
    Ok((0..k.order())
        .map(|c| {
            let m = k.neg(k.add(c, c));
            Matrix2::new(1, 0, m, minus_one)
        })
        .collect())
}

/// Images in `psl` (built from `GroupSpec::Psl2(q)`) of matrices with square
/// determinant.
pub fn project_to_psl(q: u64, psl: &GroupTable, matrices: &[Matrix2]) -> Result<Vec<u32>> {
    let k = Field::new(q)?;
    matrices
        .iter()
        .map(|m| {
            let det = m.det(&k);
            if det == 0 || !k.is_square(det) {
                return Err(Error::DeterminantNotSquare(q as u32));
            }
            let p = mobius_permutation(&k, m);
            psl.index_of(&p)
                .ok_or_else(|| Error::ElementNotFound(format!("{p} in PSL(2,{q})")))
        })
        .collect()
}

impl GroupSpec {
    /// Group order from the standard formulas, where one is known.
    pub fn expected_order(&self) -> Option<u128> {
        let q_of = |q: u64| -> Option<(u128, u128)> {
            let (_, f) = prime_power(q)?;
            Some((q as u128, f as u128))
        };
        match self {
            GroupSpec::Symmetric(n) => Some((1..=*n as u128).product()),
            GroupSpec::Alternating(n) => Some(((1..=*n as u128).product::<u128>() / 2).max(1)),
            GroupSpec::Dihedral(n) => Some(2 * *n as u128),
            GroupSpec::Psl2(q) => {
                let (q, _) = q_of(*q)?;
                Some(q * (q * q - 1) / if q % 2 == 1 { 2 } else { 1 })
            }
            GroupSpec::Pgl2(q) => q_of(*q).map(|(q, _)| q * (q * q - 1)),
            GroupSpec::PGammaL2(q) => q_of(*q).map(|(q, f)| f * q * (q * q - 1)),
            GroupSpec::PSigmaL2(q) => {
                let (q, f) = q_of(*q)?;
                Some(f * q * (q * q - 1) / if q % 2 == 1 { 2 } else { 1 })
            }
            GroupSpec::M10 => Some(720),
            GroupSpec::Gl2(q) => q_of(*q).map(|(q, _)| (q * q - 1) * (q * q - q)),
            GroupSpec::Sl2(q) => q_of(*q).map(|(q, _)| q * (q * q - 1)),
            GroupSpec::Product(fs) => fs.iter().map(|f| f.expected_order()).product(),
            GroupSpec::Wreath(b, n, top) => {
                let top_order = match top {
                    WreathTop::Cycle => *n as u128,
                    WreathTop::Swap => 2,
                    WreathTop::Symmetric => (1..=*n as u128).product(),
                    WreathTop::Generators(_) => return None,
                };
                Some(b.expected_order()?.pow(*n as u32) * top_order)
            }
            GroupSpec::Squished(a, b) => Some(a.expected_order()? * b.expected_order()? / 2),
            GroupSpec::Raw(_) => None,
            GroupSpec::Suzuki(q) => {
                let q = *q as u128;
                Some(q * q * (q * q + 1) * (q - 1))
            }
        }
    }

    /// Conventional name, e.g. `PSL(2,7)` or `A5`.
    pub fn display_name(&self) -> String {
        match self {
            GroupSpec::Symmetric(n) => format!("S{n}"),
            GroupSpec::Alternating(n) => format!("A{n}"),
            GroupSpec::Dihedral(n) => format!("D{}", 2 * n),
            GroupSpec::Psl2(q) => format!("PSL(2,{q})"),
            GroupSpec::Pgl2(q) => format!("PGL(2,{q})"),
            GroupSpec::PGammaL2(q) => format!("PΓL(2,{q})"),
            GroupSpec::PSigmaL2(q) => format!("PΣL(2,{q})"),
            GroupSpec::M10 => "M10".into(),
            GroupSpec::Gl2(q) => format!("GL(2,{q})"),
            GroupSpec::Sl2(q) => format!("SL(2,{q})"),
            GroupSpec::Product(fs) => fs
                .iter()
                .map(|f| f.display_name())
                .collect::<Vec<_>>()
                .join(" × "),
            GroupSpec::Wreath(b, n, _) => format!("{} ≀ {n}", b.display_name()),
            GroupSpec::Squished(a, b) => format!("{} Yup {}", a.display_name(), b.display_name()),
            GroupSpec::Raw(_) => format!("⟨{self}⟩"),
            GroupSpec::Suzuki(q) => format!("Sz({q})"),
        }
    }
}

impl fmt::Display for WreathTop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WreathTop::Cycle => f.write_str("cycle"),
            WreathTop::Swap => f.write_str("swap"),
            WreathTop::Symmetric => f.write_str("symmetric"),
            WreathTop::Generators(gens) => {
                f.write_str("[")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{g}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// Text form accepted by `io::parse_group_spec`.
impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Symmetric(n) => write!(f, "symmetric({n})"),
            GroupSpec::Alternating(n) => write!(f, "alternating({n})"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral({n})"),
            GroupSpec::Psl2(q) => write!(f, "psl2({q})"),
            GroupSpec::Pgl2(q) => write!(f, "pgl2({q})"),
            GroupSpec::PGammaL2(q) => write!(f, "pgammal2({q})"),
            GroupSpec::PSigmaL2(q) => write!(f, "psigmal2({q})"),
            GroupSpec::M10 => f.write_str("m10"),
            GroupSpec::Gl2(q) => write!(f, "gl2({q})"),
            GroupSpec::Sl2(q) => write!(f, "sl2({q})"),
            GroupSpec::Product(fs) => {
                f.write_str("product(")?;
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
            GroupSpec::Wreath(b, n, top) => write!(f, "wreath({b},{n},{top})"),
            GroupSpec::Squished(a, b) => write!(f, "squished({a},{b})"),
            GroupSpec::Raw(perms) => {
                f.write_str("raw(")?;
                for (i, p) in perms.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
            GroupSpec::Suzuki(q) => write!(f, "suzuki({q})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;

    fn order(spec: GroupSpec) -> usize {
        build(&spec, DEFAULT_CAP).unwrap().order()
    }

    #[test]
    fn projective_orders_match_formulas() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11] {
            for spec in [
                GroupSpec::Psl2(q),
                GroupSpec::Pgl2(q),
                GroupSpec::PGammaL2(q),
                GroupSpec::PSigmaL2(q),
            ] {
                assert_eq!(
                    order(spec.clone()) as u128,
                    spec.expected_order().unwrap(),
                    "{spec}"
                );
            }
        }
        assert_eq!(order(GroupSpec::M10), 720);
    }

    #[test]
    fn linear_orders() {
        for q in [2u64, 3, 4, 5] {
            assert_eq!(
                order(GroupSpec::Gl2(q)) as u128,
                GroupSpec::Gl2(q).expected_order().unwrap()
            );
            assert_eq!(
                order(GroupSpec::Sl2(q)) as u128,
                GroupSpec::Sl2(q).expected_order().unwrap()
            );
        }
    }

    #[test]
    fn small_families() {
        assert_eq!(order(GroupSpec::Symmetric(5)), 120);
        assert_eq!(order(GroupSpec::Alternating(6)), 360);
        assert_eq!(order(GroupSpec::Dihedral(5)), 10);
        assert_eq!(order(GroupSpec::Symmetric(1)), 1);
        assert_eq!(
            order(GroupSpec::Product(vec![
                GroupSpec::Psl2(4),
                GroupSpec::Symmetric(3)
            ])),
            360
        );
        assert_eq!(
            order(GroupSpec::Wreath(
                Box::new(GroupSpec::Alternating(5)),
                2,
                WreathTop::Swap
            )),
            7200
        );
        assert_eq!(
            order(GroupSpec::Wreath(
                Box::new(GroupSpec::Symmetric(3)),
                3,
                WreathTop::Cycle
            )),
            648
        );
    }

    #[test]
    fn squished_product_has_index_two() {
        let spec = GroupSpec::Squished(
            Box::new(GroupSpec::Symmetric(4)),
            Box::new(GroupSpec::Symmetric(3)),
        );
        let g = build(&spec, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 72);
        // Neither S × B nor A × T: some element is odd on both blocks.
        assert!((0..72u32).any(|i| {
            let p = g.permutation(i);
            let parity = |lo: u32, hi: u32| {
                p.cycles()
                    .iter()
                    .filter(|c| c[0] >= lo && c[0] < hi)
                    .map(|c| c.len() - 1)
                    .sum::<usize>()
                    % 2
            };
            parity(0, 4) == 1 && parity(4, 7) == 1
        }));
        let bad = GroupSpec::Squished(
            Box::new(GroupSpec::Alternating(5)),
            Box::new(GroupSpec::Symmetric(3)),
        );
        assert!(matches!(
            build(&bad, DEFAULT_CAP),
            Err(Error::BadParameter(_))
        ));
    }

    #[test]
    fn gl2_cover_structure() {
        let k = Field::new(5).unwrap();
        let mats = gl2_cover_elements(5).unwrap();
        assert_eq!(mats.len(), 5);
        for (c, m) in mats.iter().enumerate() {
            assert_eq!(m.det(&k), k.neg(1));
            assert_eq!(m.mul(m, &k), Matrix2::identity());
            assert_eq!(m.apply((1, 0), &k), (1, 0));
            assert_eq!(m.apply((c as u32, 1), &k), (k.neg(c as u32), k.neg(1)));
        }
        assert_eq!(gl2_cover_elements(8).unwrap_err(), Error::EvenFieldOrder(8));
    }

    #[test]
    fn projection_to_psl() {
        let psl = build(&GroupSpec::Psl2(5), DEFAULT_CAP).unwrap();
        assert_eq!(
            project_to_psl(5, &psl, &[Matrix2::identity()]).unwrap(),
            vec![0]
        );
        let idx = project_to_psl(5, &psl, &gl2_cover_elements(5).unwrap()).unwrap();
        assert!(idx.iter().all(|&i| psl.order_of(i) == 2));
        let psl7 = build(&GroupSpec::Psl2(7), DEFAULT_CAP).unwrap();
        assert_eq!(
            project_to_psl(7, &psl7, &gl2_cover_elements(7).unwrap()).unwrap_err(),
            Error::DeterminantNotSquare(7)
        );
    }

    #[test]
    fn suzuki_is_bounds_only() {
        assert!(matches!(
            build(&GroupSpec::Suzuki(8), DEFAULT_CAP),
            Err(Error::BadParameter(_))
        ));
        assert_eq!(GroupSpec::Suzuki(8).expected_order(), Some(29120));
    }
}
