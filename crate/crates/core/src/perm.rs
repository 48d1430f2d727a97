//! Permutations of `{0, .., degree-1}`.
//!
//! Products are read left to right: `a.then(&b)` applies `a` first, so
//! `(a.then(&b))(x) = b(a(x))`. Cycle notation in text is 1-based.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::Parse(format!(
                    "image list {images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        Permutation { images }
    }

    /// Builds a permutation of the given degree from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a as usize >= degree || b as usize >= degree {
                    return Err(Error::Parse(format!(
                        "point {} exceeds degree {degree}",
                        a.max(b) + 1
                    )));
                }
                if touched[a as usize] {
                    return Err(Error::Parse(format!("point {} repeated in cycles", a + 1)));
                }
                touched[a as usize] = true;
                images[a as usize] = b;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `(1,2,3)(4,5)`; `()` is the
    /// identity. The degree is raised to cover every mentioned point.
    pub fn parse_cycles(text: &str, min_degree: usize) -> Result<Self> {
        let cycles = parse_cycle_list(text)?;
        let max_point = cycles
            .iter()
            .flatten()
            .copied()
            .max()
            .map_or(0, |m| m as usize + 1);
        Permutation::from_cycles(min_degree.max(max_point), &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Pads with fixed points up to `degree`.
    pub fn extended(&self, degree: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.images.len() as u32..degree as u32);
        Permutation { images }
    }

    /// Nontrivial cycles, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Element order: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Splits `(1,2,3)(4,5)` into 0-based cycles. Separators may be commas or
/// whitespace.
pub(crate) fn parse_cycle_list(text: &str) -> Result<Vec<Vec<u32>>> {
    let text = text.trim();
    let mut cycles = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let rest_trim = rest.trim_start();
        if rest_trim.is_empty() {
            break;
        }
        let Some(body) = rest_trim.strip_prefix('(') else {
            return Err(Error::Parse(format!(
                "expected '(' in cycle notation: {text:?}"
            )));
        };
        let Some(close) = body.find(')') else {
            return Err(Error::Parse(format!("unbalanced parentheses: {text:?}")));
        };
        let inner = &body[..close];
        let points: Vec<u32> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<u32>()
                    .ok()
                    .filter(|&p| p >= 1)
                    .map(|p| p - 1)
                    .ok_or_else(|| Error::Parse(format!("bad point {s:?} in {text:?}")))
            })
            .collect::<Result<_>>()?;
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = &body[close + 1..];
    }
    Ok(cycles)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse_cycles(s, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_roundtrip() {
        let p = Permutation::parse_cycles("(1,5)(3,4)", 5).unwrap();
        assert_eq!(p.to_string(), "(1,5)(3,4)");
        assert_eq!(p.order(), 2);
        assert_eq!(
            Permutation::parse_cycles("()", 3).unwrap(),
            Permutation::identity(3)
        );
    }

    #[test]
    fn composition_is_left_to_right() {
        let a: Permutation = "(1,2)".parse::<Permutation>().unwrap().extended(3);
        let b: Permutation = "(2,3)".parse().unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.then(&b).apply(0), 2);
        assert!(a.then(&a.inverse()).is_identity());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::parse_cycles("(1,2", 3).is_err());
        assert!(Permutation::parse_cycles("(1,1)", 3).is_err());
        assert!(Permutation::parse_cycles("(0,1)", 3).is_err());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn space_separated_cycles() {
        let p: Permutation = "(1 2 3 4 5)".parse().unwrap();
        assert_eq!(p.order(), 5);
    }
}
