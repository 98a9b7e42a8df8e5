use alloc::vec;
use alloc::vec::Vec;

use super::fq::{FqElem, FqParams};

/// A polynomial in A = F_q[T], lowest degree first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PolyA {
    coeffs: Vec<FqElem>,
}

impl PolyA {
    pub fn zero() -> Self {
        PolyA { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(FqElem::ONE)
    }

    /// The variable T.
    pub fn t() -> Self {
        Self::monomial(FqElem::ONE, 1)
    }

    pub fn constant(c: FqElem) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: FqElem, degree: usize) -> Self {
        let mut coeffs = vec![FqElem::ZERO; degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `c1 T + c0`.
    pub fn linear(c1: FqElem, c0: FqElem) -> Self {
        Self::from_coeffs(vec![c0, c1])
    }

    pub fn from_coeffs(mut coeffs: Vec<FqElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyA { coeffs }
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FqElem {
        self.coeffs.get(i).copied().unwrap_or(FqElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The constant value of a polynomial of degree at most 0.
    pub fn as_constant(&self) -> Option<FqElem> {
        match self.coeffs.len() {
            0 => Some(FqElem::ZERO),
            1 => Some(self.coeffs[0]),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<FqElem> {
        self.coeffs.last().copied()
    }

    pub fn add(&self, other: &PolyA, f: &FqParams) -> PolyA {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(
            (0..n)
                .map(|i| f.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &PolyA, f: &FqParams) -> PolyA {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(
            (0..n)
                .map(|i| f.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn neg(&self, f: &FqParams) -> PolyA {
        PolyA {
            coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect(),
        }
    }

    pub fn scale(&self, c: FqElem, f: &FqParams) -> PolyA {
        Self::from_coeffs(self.coeffs.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn mul(&self, other: &PolyA, f: &FqParams) -> PolyA {
        if self.is_zero() || other.is_zero() {
            return PolyA::zero();
        }
        let mut out = vec![FqElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn pow(&self, n: u32, f: &FqParams) -> PolyA {
        (0..n).fold(PolyA::one(), |acc, _| acc.mul(self, f))
    }

    /// Euclidean division. Returns `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &PolyA, f: &FqParams) -> Option<(PolyA, PolyA)> {
        let dl = divisor.coeffs.len();
        let lead_inv = f.inv(divisor.leading()?);
        if self.coeffs.len() < dl {
            return Some((PolyA::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![FqElem::ZERO; rem.len() - dl + 1];
        for shift in (0..quot.len()).rev() {
            let top = rem[shift + dl - 1];
            if top.is_zero() {
                continue;
            }
            let factor = f.mul(top, lead_inv);
            quot[shift] = factor;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, d));
            }
        }
        rem.truncate(dl - 1);
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Remainder modulo a nonzero polynomial.
    pub fn rem(&self, divisor: &PolyA, f: &FqParams) -> PolyA {
        self.div_rem(divisor, f)
            .expect("remainder by zero polynomial")
            .1
    }

    /// Exact quotient; `None` if `divisor` is zero or does not divide `self`.
    pub fn exact_div(&self, divisor: &PolyA, f: &FqParams) -> Option<PolyA> {
        let (q, r) = self.div_rem(divisor, f)?;
        r.is_zero().then_some(q)
    }

    pub fn monic(&self, f: &FqParams) -> PolyA {
        match self.leading() {
            None => PolyA::zero(),
            Some(l) => self.scale(f.inv(l), f),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &PolyA, f: &FqParams) -> PolyA {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn eval(&self, x: FqElem, f: &FqParams) -> FqElem {
        self.coeffs
            .iter()
            .rev()
            .fold(FqElem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }
}

/// All polynomials of degree < `n` (including zero), in the order of their
/// base-q index `sum enc(c_i) q^i`.
pub fn polys_below_degree(n: usize, f: &FqParams) -> impl Iterator<Item = PolyA> + '_ {
    let total = (f.q() as u64).pow(n as u32);
    (0..total).map(move |idx| poly_from_index(idx, n, f))
}

pub(crate) fn poly_from_index(mut idx: u64, n: usize, f: &FqParams) -> PolyA {
    let q = f.q() as u64;
    let mut coeffs = Vec::with_capacity(n);
    for _ in 0..n {
        coeffs.push(f.elem((idx % q) as u32).unwrap());
        idx /= q;
    }
    PolyA::from_coeffs(coeffs)
}

pub(crate) fn poly_index(p: &PolyA, f: &FqParams) -> u64 {
    let q = f.q() as u64;
    p.coeffs()
        .iter()
        .rev()
        .fold(0, |acc, c| acc * q + c.encoding() as u64)
}
