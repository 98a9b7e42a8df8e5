//! Finite fields F_q with q odd, in a polynomial basis over F_p.
//!
//! Elements are encoded as integers `c_0 + c_1 p + ... + c_{e-1} p^{e-1}` where
//! `c_i` are the coordinates in the basis `1, a, ..., a^{e-1}` and `a` is the
//! class of `x` modulo the recorded modulus. Multiplication goes through
//! discrete-log tables built from a fixed generator, so q is capped at
//! [`MAX_ORDER`].

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// An element of F_q. Only meaningful together with the [`FqParams`] that
/// created it.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FqElem(u32);

impl FqElem {
    pub const ZERO: FqElem = FqElem(0);
    pub const ONE: FqElem = FqElem(1);

    /// Integer encoding of the coordinate vector.
    pub fn encoding(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Field parameters and arithmetic tables for F_q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqParams {
    p: u32,
    e: u32,
    q: u32,
    /// Monic modulus over F_p, lowest degree first, length `e + 1`.
    modulus: Vec<u32>,
    generator: FqElem,
    exp: Vec<u32>,
    log: Vec<u32>,
}

fn factor_prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 3 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p as u32, e))
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense polynomials over F_p used only while building the field.
fn fp_poly_rem(mut num: Vec<u32>, den: &[u32], p: u32) -> Vec<u32> {
    let dl = den.len();
    let lead_inv = fp_pow(den[dl - 1], p - 2, p);
    while num.len() >= dl {
        let top = *num.last().unwrap();
        if top != 0 {
            let factor = top * lead_inv % p;
            let shift = num.len() - dl;
            for (i, &d) in den.iter().enumerate() {
                num[shift + i] = (num[shift + i] + p - factor * d % p) % p;
            }
        }
        num.pop();
    }
    while num.last() == Some(&0) {
        num.pop();
    }
    num
}

fn fp_pow(base: u32, mut exp: u32, p: u32) -> u32 {
    let (mut acc, mut b) = (1u64, base as u64 % p as u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u64;
        }
        b = b * b % p as u64;
        exp >>= 1;
    }
    acc as u32
}

fn digits(mut x: u32, p: u32, e: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(e as usize);
    for _ in 0..e {
        out.push(x % p);
        x /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Brute-force irreducibility: no monic factor of degree `1..=e/2`.
fn is_irreducible_fp(modulus: &[u32], p: u32) -> bool {
    let e = modulus.len() as u32 - 1;
    for deg in 1..=e / 2 {
        for tail in 0..p.pow(deg) {
            let mut f = digits(tail, p, deg);
            f.push(1);
            if fp_poly_rem(modulus.to_vec(), &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FqParams {
    /// F_q with the default modulus: the first monic irreducible polynomial of
    /// degree `e` over F_p in the encoding order of its lower coefficients.
    pub fn new(q: u64) -> Result<Self> {
        let (p, e) = factor_prime_power(q).ok_or(Error::InvalidOrder(q))?;
        if p == 2 || q > MAX_ORDER as u64 {
            return Err(Error::InvalidOrder(q));
        }
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            (0..p.pow(e))
                .map(|tail| {
                    let mut m = digits(tail, p, e);
                    m.push(1);
                    m
                })
                .find(|m| is_irreducible_fp(m, p))
                .expect("irreducible polynomials exist in every degree")
        };
        Self::build(p, e, modulus)
    }

    /// F_q from an explicit monic modulus over F_p (lowest degree first).
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Self> {
        let e = modulus.len().saturating_sub(1) as u32;
        let q = (p as u64).checked_pow(e).unwrap_or(u64::MAX);
        if e == 0 || factor_prime_power(q) != Some((p, e)) || p == 2 || q > MAX_ORDER as u64 {
            return Err(Error::InvalidOrder(q));
        }
        if modulus.last() != Some(&1) || modulus.iter().any(|&c| c >= p) {
            return Err(Error::ReducibleModulus(e));
        }
        if !is_irreducible_fp(modulus, p) {
            return Err(Error::ReducibleModulus(e));
        }
        Self::build(p, e, modulus.to_vec())
    }

    fn build(p: u32, e: u32, modulus: Vec<u32>) -> Result<Self> {
        let q = p.pow(e);
        let slow_mul = |x: u32, y: u32| -> u32 {
            let (dx, dy) = (digits(x, p, e), digits(y, p, e));
            let mut prod = vec![0u32; (2 * e - 1) as usize];
            for (i, &a) in dx.iter().enumerate() {
                for (j, &b) in dy.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + a * b) % p;
                }
            }
            let mut r = fp_poly_rem(prod, &modulus, p);
            r.resize(e as usize, 0);
            undigits(&r, p)
        };
        let slow_pow = |x: u32, mut n: u32| -> u32 {
            let (mut acc, mut b) = (1u32, x);
            while n > 0 {
                if n & 1 == 1 {
                    acc = slow_mul(acc, b);
                }
                b = slow_mul(b, b);
                n >>= 1;
            }
            acc
        };
        let order = q - 1;
        let factors = prime_factors(order);
        let generator = (1..q)
            .find(|&x| factors.iter().all(|&r| slow_pow(x, order / r) != 1))
            .ok_or(Error::ReducibleModulus(e))?;
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![u32::MAX; q as usize];
        let mut cur = 1u32;
        for i in 0..order {
            exp.push(cur);
            log[cur as usize] = i;
            cur = slow_mul(cur, generator);
        }
        Ok(FqParams {
            p,
            e,
            q,
            modulus,
            generator: FqElem(generator),
            exp,
            log,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The fixed multiplicative generator of F_q^x. It is never a square.
    pub fn generator(&self) -> FqElem {
        self.generator
    }

    pub fn zero(&self) -> FqElem {
        FqElem::ZERO
    }

    pub fn one(&self) -> FqElem {
        FqElem::ONE
    }

    /// Element with the given encoding, if it is in range.
    pub fn elem(&self, encoding: u32) -> Option<FqElem> {
        (encoding < self.q).then_some(FqElem(encoding))
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> FqElem {
        FqElem(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        (0..self.q).map(FqElem)
    }

    pub fn units(&self) -> impl Iterator<Item = FqElem> {
        (1..self.q).map(FqElem)
    }

    pub fn coords(&self, x: FqElem) -> Vec<u32> {
        digits(x.0, self.p, self.e)
    }

    pub fn from_coords(&self, coords: &[u32]) -> Option<FqElem> {
        if coords.len() != self.e as usize || coords.iter().any(|&c| c >= self.p) {
            return None;
        }
        Some(FqElem(undigits(coords, self.p)))
    }

    /// True when `x` lies in the prime subfield F_p.
    pub fn is_prime_field(&self, x: FqElem) -> bool {
        x.0 < self.p
    }

    pub fn add(&self, x: FqElem, y: FqElem) -> FqElem {
        if self.e == 1 {
            return FqElem((x.0 + y.0) % self.p);
        }
        let (mut a, mut b, mut out, mut place) = (x.0, y.0, 0, 1);
        for _ in 0..self.e {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        FqElem(out)
    }

    pub fn neg(&self, x: FqElem) -> FqElem {
        if self.e == 1 {
            return FqElem((self.p - x.0) % self.p);
        }
        let (mut a, mut out, mut place) = (x.0, 0, 1);
        for _ in 0..self.e {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        FqElem(out)
    }

    pub fn sub(&self, x: FqElem, y: FqElem) -> FqElem {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FqElem, y: FqElem) -> FqElem {
        if x.0 == 0 || y.0 == 0 {
            return FqElem::ZERO;
        }
        let s = self.log[x.0 as usize] + self.log[y.0 as usize];
        FqElem(self.exp[(s % (self.q - 1)) as usize])
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    /// If `x` is zero.
    pub fn inv(&self, x: FqElem) -> FqElem {
        self.checked_inv(x).expect("inverse of zero in F_q")
    }

    pub fn checked_inv(&self, x: FqElem) -> Option<FqElem> {
        if x.0 == 0 {
            return None;
        }
        let l = self.log[x.0 as usize];
        Some(FqElem(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize]))
    }

    pub fn div(&self, x: FqElem, y: FqElem) -> FqElem {
        self.mul(x, self.inv(y))
    }

    /// `x^n` for any integer `n`; negative powers panic on zero.
    pub fn pow(&self, x: FqElem, n: i64) -> FqElem {
        if x.0 == 0 {
            assert!(n >= 0, "negative power of zero in F_q");
            return if n == 0 { FqElem::ONE } else { FqElem::ZERO };
        }
        let l = self.log[x.0 as usize] as i64 * n;
        FqElem(self.exp[l.rem_euclid(self.q as i64 - 1) as usize])
    }

    /// `generator^n`.
    pub fn gen_pow(&self, n: i64) -> FqElem {
        FqElem(self.exp[n.rem_euclid(self.q as i64 - 1) as usize])
    }

    /// Discrete log to the base of [`generator`](Self::generator).
    pub fn log(&self, x: FqElem) -> Option<u32> {
        (x.0 != 0).then(|| self.log[x.0 as usize])
    }

    /// Multiplicative order of a unit.
    pub fn order(&self, x: FqElem) -> Option<u32> {
        let l = self.log(x)?;
        Some((self.q - 1) / gcd_u32(l, self.q - 1))
    }

    /// Whether `x` is a square in F_q^x, i.e. `x^((q-1)/2) = 1`.
    pub fn is_square(&self, x: FqElem) -> Result<bool> {
        let l = self.log(x).ok_or(Error::ZeroInput("is_square_fq"))?;
        Ok(l % 2 == 0)
    }

    /// A square root of `x`, if one exists. `sqrt(0) = 0`.
    pub fn sqrt(&self, x: FqElem) -> Option<FqElem> {
        match self.log(x) {
            None => Some(FqElem::ZERO),
            Some(l) if l % 2 == 0 => Some(FqElem(self.exp[(l / 2) as usize])),
            Some(_) => None,
        }
    }

    /// Canonical text for an element: an integer for prime-field elements,
    /// `a^k` (a power of the generator) otherwise.
    pub fn format_elem(&self, x: FqElem) -> String {
        let mut s = String::new();
        if self.is_prime_field(x) {
            let _ = write!(s, "{}", x.0);
        } else {
            let _ = write!(s, "a^{}", self.log[x.0 as usize]);
        }
        s
    }
}

pub(crate) fn gcd_u32(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `x` is a square in F_q^x. Zero is rejected.
pub fn is_square_fq(x: FqElem, params: &FqParams) -> Result<bool> {
    params.is_square(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_even_and_composite_orders() {
        for q in [0, 1, 2, 4, 6, 8, 12, 15, 16] {
            assert!(FqParams::new(q).is_err(), "q = {q}");
        }
        assert!(FqParams::new(9).is_ok());
        assert!(FqParams::new(25).is_ok());
    }

    #[test]
    fn generators_match_smallest_primitive_roots() {
        assert_eq!(FqParams::new(7).unwrap().generator().encoding(), 3);
        assert_eq!(FqParams::new(5).unwrap().generator().encoding(), 2);
        assert_eq!(FqParams::new(3).unwrap().generator().encoding(), 2);
    }

    #[test]
    fn generator_has_full_order_and_is_nonsquare() {
        for q in [3, 5, 7, 9, 11, 13, 25, 27, 49] {
            let f = FqParams::new(q).unwrap();
            assert_eq!(f.order(f.generator()), Some(q as u32 - 1));
            assert!(!f.is_square(f.generator()).unwrap());
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [3, 5, 7, 9] {
            let f = FqParams::new(q).unwrap();
            let els: Vec<_> = f.elements().collect();
            for &x in &els {
                assert_eq!(f.add(x, f.neg(x)), FqElem::ZERO);
                assert_eq!(f.pow(x, q as i64), x, "Frobenius fixes F_q");
                if !x.is_zero() {
                    assert_eq!(f.mul(x, f.inv(x)), FqElem::ONE);
                }
                for &y in &els {
                    assert_eq!(f.add(x, y), f.add(y, x));
                    assert_eq!(f.mul(x, y), f.mul(y, x));
                    for &z in &els {
                        assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
                        assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                        assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_everything_up_to_25() {
        for q in [11, 13, 25] {
            let f = FqParams::new(q).unwrap();
            assert!(f.elements().all(|x| f.pow(x, q as i64) == x));
        }
    }

    #[test]
    fn squares_mod_seven() {
        let f = FqParams::new(7).unwrap();
        let sq = |n| f.is_square(f.from_int(n)).unwrap();
        // 2 = 3^2 = 9 mod 7
        assert!(sq(2));
        assert!(!sq(3));
        assert!(sq(1));
        assert!(f.is_square(FqElem::ZERO).is_err());
        // exhaustive oracle
        for x in f.units() {
            let brute = f.units().any(|y| f.mul(y, y) == x);
            assert_eq!(f.is_square(x).unwrap(), brute);
        }
    }

    #[test]
    fn explicit_modulus_is_validated() {
        // x^2 + 1 is irreducible over F_3, x^2 - 1 is not
        assert!(FqParams::with_modulus(3, &[1, 0, 1]).is_ok());
        assert_eq!(
            FqParams::with_modulus(3, &[2, 0, 1]),
            Err(Error::ReducibleModulus(2))
        );
        let f = FqParams::with_modulus(3, &[1, 0, 1]).unwrap();
        assert_eq!(f.order(f.generator()), Some(8));
    }

    #[test]
    fn default_modulus_is_irreducible_by_root_search() {
        for q in [9u64, 25, 27, 49, 125] {
            let f = FqParams::new(q).unwrap();
            let (p, m) = (f.p(), f.modulus());
            for r in 0..p {
                let val = m
                    .iter()
                    .rev()
                    .fold(0u64, |acc, &c| (acc * r as u64 + c as u64) % p as u64);
                assert_ne!(val, 0, "root {r} of modulus for q = {q}");
            }
        }
    }
}
