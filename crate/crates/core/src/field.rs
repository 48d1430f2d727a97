//! Finite fields GF(p^f) for q = p^f ≤ 2¹⁶.
//!
//! Elements are integers `0..q` whose base-p digits are the coefficients of
//! a polynomial in the generator ω (digit i multiplies ω^i). The modulus is
//! the least primitive polynomial, ordering monic polynomials by the integer
//! formed from their lower coefficients; for prime fields ω is the least
//! primitive root. Multiplication goes through log/exp tables.

use crate::error::{Error, Result};

pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    f: u32,
    q: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// `(p, f)` with `q = p^f`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut f = 0;
    while rest % p == 0 {
        rest /= p;
        f += 1;
    }
    (rest == 1).then_some((p as u32, f))
}

impl Field {
    pub fn new(q: u64) -> Result<Self> {
        let (p, f) = prime_power(q).ok_or(Error::NotAPrimePower(q))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::BadParameter(format!(
                "field order {q} exceeds {MAX_FIELD_ORDER}"
            )));
        }
        let q = q as u32;
        for code in 0..q {
            // For prime fields this walks g = p - c_0, so visit c_0 from the top
            // to try primitive roots in ascending order.
            let code = if f == 1 { (q - code) % q } else { code };
            // Lower coefficients c_0..c_{f-1} of x^f + Σ c_i x^i, with c_0 the
            // least significant digit of `code`.
            let low = digits(code, p, f);
            if let Some(exp) = power_table(p, f, q, &low) {
                let mut log = vec![0u32; q as usize];
                for (i, &v) in exp.iter().enumerate() {
                    log[v as usize] = i as u32;
                }
                return Ok(Field { p, f, q, exp, log });
            }
        }
        Err(Error::InternalInconsistency(format!(
            "no primitive polynomial for GF({q})"
        )))
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// The primitive element ω.
    pub fn primitive(&self) -> u32 {
        self.exp[1 % self.exp.len()]
    }

    pub fn one(&self) -> u32 {
        1
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, k: i64) -> u32 {
        k.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.f == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.f {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.f {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let e = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[e as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let e = (self.q - 1 - self.log[a as usize]) % (self.q - 1);
        Some(self.exp[e as usize])
    }

    pub fn pow(&self, a: u32, k: u64) -> u32 {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let e = (self.log[a as usize] as u64 * k) % (self.q as u64 - 1);
        self.exp[e as usize]
    }

    /// `x ↦ x^p`.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p as u64)
    }

    pub fn is_square(&self, a: u32) -> bool {
        a == 0 || self.p == 2 || self.log[a as usize] % 2 == 0
    }

    /// Discrete logarithm base ω of a nonzero element.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// `ω^e`.
    pub fn exp(&self, e: u64) -> u32 {
        self.exp[(e % (self.q as u64 - 1)) as usize]
    }

    /// The additive basis `1, ω, .., ω^{f-1}` as elements (`p^i`).
    pub fn additive_basis(&self) -> Vec<u32> {
        (0..self.f).map(|i| self.p.pow(i)).collect()
    }
}

fn digits(mut v: u32, p: u32, f: u32) -> Vec<u32> {
    (0..f)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Powers of x modulo `x^f + Σ low_i x^i` if x has order q-1, else `None`.
fn power_table(p: u32, f: u32, q: u32, low: &[u32]) -> Option<Vec<u32>> {
    if f == 1 {
        // Root of x + c_0, i.e. x = -c_0.
        let g = (p - low[0]) % p;
        if g == 0 {
            return None;
        }
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut v = 1u32;
        for _ in 0..q - 1 {
            exp.push(v);
            v = v * g % p;
            if v == 1 && exp.len() < q as usize - 1 {
                return None;
            }
        }
        return (v == 1).then_some(exp);
    }
    let f = f as usize;
    let mut exp = Vec::with_capacity(q as usize - 1);
    let mut cur = vec![0u32; f];
    cur[0] = 1;
    for k in 0..q - 1 {
        let v = from_digits(&cur, p);
        if k > 0 && v == 1 {
            return None;
        }
        exp.push(v);
        // Multiply by x and reduce x^f = -Σ low_i x^i.
        let top = cur[f - 1];
        for i in (1..f).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        for i in 0..f {
            cur[i] = (cur[i] + (p - low[i]) % p * top) % p;
        }
    }
    (from_digits(&cur, p) == 1).then_some(exp)
}

/// A 2×2 matrix `[[a, b], [c, d]]` over a [`Field`], acting on row vectors
/// from the right.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Matrix2 {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl Matrix2 {
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        Matrix2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Matrix2::new(1, 0, 0, 1)
    }

    pub fn det(&self, k: &Field) -> u32 {
        k.sub(k.mul(self.a, self.d), k.mul(self.b, self.c))
    }

    pub fn mul(&self, other: &Matrix2, k: &Field) -> Matrix2 {
        let m = |x: u32, y: u32, z: u32, w: u32| k.add(k.mul(x, y), k.mul(z, w));
        Matrix2 {
            a: m(self.a, other.a, self.b, other.c),
            b: m(self.a, other.b, self.b, other.d),
            c: m(self.c, other.a, self.d, other.c),
            d: m(self.c, other.b, self.d, other.d),
        }
    }

    pub fn scale(&self, s: u32, k: &Field) -> Matrix2 {
        Matrix2::new(
            k.mul(s, self.a),
            k.mul(s, self.b),
            k.mul(s, self.c),
            k.mul(s, self.d),
        )
    }

    /// `(x, y) ↦ (x, y) · M`.
    pub fn apply(&self, v: (u32, u32), k: &Field) -> (u32, u32) {
        let (x, y) = v;
        (
            k.add(k.mul(x, self.a), k.mul(y, self.c)),
            k.add(k.mul(x, self.b), k.mul(y, self.d)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(Field::new(6).unwrap_err(), Error::NotAPrimePower(6));
    }

    #[test]
    fn small_fields() {
        let k = Field::new(7).unwrap();
        assert_eq!(k.inv(3), Some(5));
        assert_eq!(k.primitive(), 3);
        let k = Field::new(13).unwrap();
        assert!(k.is_square(k.neg(1)));
        let k = Field::new(11).unwrap();
        assert!(!k.is_square(k.neg(1)));
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [4u64, 8, 9, 25, 27, 16] {
            let k = Field::new(q).unwrap();
            let q = q as u32;
            for a in 0..q {
                assert_eq!(k.add(a, k.neg(a)), 0);
                if a != 0 {
                    assert_eq!(k.mul(a, k.inv(a).unwrap()), 1);
                }
                let mut x = a;
                for _ in 0..k.degree() {
                    x = k.frobenius(x);
                }
                assert_eq!(x, a);
                for b in 0..q {
                    assert_eq!(k.add(a, b), k.add(b, a));
                    assert_eq!(
                        k.frobenius(k.add(a, b)),
                        k.add(k.frobenius(a), k.frobenius(b))
                    );
                    for c in [1, q - 1, q / 2] {
                        let lhs = k.mul(a, k.add(b, c));
                        assert_eq!(lhs, k.add(k.mul(a, b), k.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_of_gf9_is_an_involution() {
        let k = Field::new(9).unwrap();
        assert!((0..9).all(|a| k.frobenius(k.frobenius(a)) == a));
        assert!((0..9).any(|a| k.frobenius(a) != a));
    }

    #[test]
    fn matrices() {
        let k = Field::new(5).unwrap();
        let m = Matrix2::new(1, 2, 3, 4);
        assert_eq!(m.det(&k), k.from_int(-2));
        assert_eq!(m.mul(&Matrix2::identity(), &k), m);
        assert_eq!(m.apply((1, 0), &k), (1, 2));
    }
}
