//! Truncated Laurent series in K_inf = F_q((1/T)).
//!
//! Series are written in the uniformizer `s = 1/T`, so `v(T) = -1` and
//! `|f| = q^(-v(f))`. A nonzero series stores its valuation and a window of
//! coefficients starting at a nonzero leading coefficient; the window length
//! is the relative precision. Zero carries its absolute precision instead
//! (`i64::MAX` for an exact zero). No operation extends precision.

use alloc::vec;
use alloc::vec::Vec;

use super::fq::{FqElem, FqParams};
use super::poly::PolyA;
use super::ratk::RatK;
use crate::error::{Error, Result};

/// Default number of retained terms.
pub const DEFAULT_PREC: usize = 32;

const EXACT: i64 = i64::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentKInf {
    val: i64,
    coeffs: Vec<FqElem>,
}

impl LaurentKInf {
    /// The exact zero series.
    pub fn zero() -> Self {
        LaurentKInf {
            val: EXACT,
            coeffs: Vec::new(),
        }
    }

    /// Zero known only up to `O(s^abs_prec)`.
    pub fn zero_to(abs_prec: i64) -> Self {
        LaurentKInf {
            val: abs_prec,
            coeffs: Vec::new(),
        }
    }

    /// Builds `sum coeffs[i] s^(val + i)`, normalizing leading zeros.
    pub fn from_window(val: i64, coeffs: Vec<FqElem>) -> Self {
        let abs = val + coeffs.len() as i64;
        match coeffs.iter().position(|c| !c.is_zero()) {
            None => Self::zero_to(abs),
            Some(k) => LaurentKInf {
                val: val + k as i64,
                coeffs: coeffs[k..].to_vec(),
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.val == EXACT
    }

    /// Valuation `v`; `None` for (possibly inexact) zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.val)
    }

    /// Relative precision: the number of retained terms.
    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    /// Exponent of `s` from which coefficients are unknown.
    pub fn abs_prec(&self) -> i64 {
        if self.is_zero() {
            self.val
        } else {
            self.val + self.coeffs.len() as i64
        }
    }

    pub fn leading(&self) -> Option<FqElem> {
        self.coeffs.first().copied()
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    /// Coefficient of `s^n`, `None` beyond the known precision.
    pub fn coeff(&self, n: i64) -> Option<FqElem> {
        if n >= self.abs_prec() {
            return None;
        }
        if self.is_zero() || n < self.val {
            return Some(FqElem::ZERO);
        }
        Some(self.coeffs[(n - self.val) as usize])
    }

    pub fn truncate(&self, prec: usize) -> Self {
        let mut out = self.clone();
        out.coeffs.truncate(prec);
        if out.coeffs.is_empty() && !self.is_zero() {
            return Self::zero_to(self.val);
        }
        out
    }

    /// Expansion of a polynomial, exact up to `prec` terms.
    pub fn from_poly(a: &PolyA, prec: usize, f: &FqParams) -> Self {
        laurent_expand(&RatK::from_poly(a.clone()), prec, f)
    }

    pub fn constant(c: FqElem, prec: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![FqElem::ZERO; prec.max(1)];
        coeffs[0] = c;
        LaurentKInf { val: 0, coeffs }
    }

    pub fn neg(&self, f: &FqParams) -> Self {
        LaurentKInf {
            val: self.val,
            coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect(),
        }
    }

    pub fn scale(&self, c: FqElem, f: &FqParams) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentKInf {
            val: self.val,
            coeffs: self.coeffs.iter().map(|&x| f.mul(x, c)).collect(),
        }
    }

    pub fn add(&self, other: &Self, f: &FqParams) -> Self {
        if self.is_exact_zero() {
            return other.clone();
        }
        if other.is_exact_zero() {
            return self.clone();
        }
        let abs = self.abs_prec().min(other.abs_prec());
        let lo = self.val.min(other.val).min(abs);
        let coeffs = (lo..abs)
            .map(|n| f.add(self.coeff(n).unwrap(), other.coeff(n).unwrap()))
            .collect();
        Self::from_window(lo, coeffs)
    }

    pub fn sub(&self, other: &Self, f: &FqParams) -> Self {
        self.add(&other.neg(f), f)
    }

    pub fn mul(&self, other: &Self, f: &FqParams) -> Self {
        match (self.is_zero(), other.is_zero()) {
            (true, _) if self.is_exact_zero() => return Self::zero(),
            (_, true) if other.is_exact_zero() => return Self::zero(),
            (true, true) => return Self::zero_to(self.val.saturating_add(other.val)),
            (true, false) => return Self::zero_to(self.val + other.val),
            (false, true) => return Self::zero_to(self.val + other.val),
            (false, false) => {}
        }
        let prec = self.prec().min(other.prec());
        let mut coeffs = vec![FqElem::ZERO; prec];
        for (i, &a) in self.coeffs.iter().take(prec).enumerate() {
            for (j, &b) in other.coeffs.iter().take(prec - i).enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        LaurentKInf {
            val: self.val + other.val,
            coeffs,
        }
    }

    /// Multiplicative inverse of a nonzero series, same relative precision.
    pub fn inv(&self, f: &FqParams) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInput("LaurentKInf::inv"));
        }
        Ok(LaurentKInf {
            val: -self.val,
            coeffs: unit_series_inverse(&self.coeffs, self.prec(), f),
        })
    }

    /// A square root, or `None` if the series is not a square.
    ///
    /// For p odd, a nonzero element of K_inf is a square exactly when its
    /// valuation is even and its leading coefficient is a square in F_q; the
    /// root of the unit part is then lifted term by term.
    pub fn sqrt(&self, f: &FqParams) -> Result<Option<Self>> {
        if self.is_zero() {
            return Err(Error::InsufficientPrecision);
        }
        if self.val % 2 != 0 {
            return Ok(None);
        }
        let Some(r0) = f.sqrt(self.coeffs[0]) else {
            return Ok(None);
        };
        let n = self.prec();
        let two_r0_inv = f.inv(f.add(r0, r0));
        let mut root = Vec::with_capacity(n);
        root.push(r0);
        for k in 1..n {
            let mut acc = self.coeffs[k];
            for i in 1..k {
                acc = f.sub(acc, f.mul(root[i], root[k - i]));
            }
            root.push(f.mul(acc, two_r0_inv));
        }
        Ok(Some(LaurentKInf {
            val: self.val / 2,
            coeffs: root,
        }))
    }
}

fn unit_series_inverse(c: &[FqElem], prec: usize, f: &FqParams) -> Vec<FqElem> {
    let inv0 = f.inv(c[0]);
    let mut out = Vec::with_capacity(prec);
    out.push(inv0);
    for k in 1..prec {
        let mut acc = FqElem::ZERO;
        for i in 1..=k.min(c.len() - 1) {
            acc = f.add(acc, f.mul(c[i], out[k - i]));
        }
        out.push(f.neg(f.mul(acc, inv0)));
    }
    out
}

/// Expands `x` in powers of `1/T` with `prec` retained terms (at least one).
///
/// Writing `num = T^n * rev(num)(1/T)` and likewise for the denominator, the
/// expansion is `s^(deg den - deg num) * rev(num)/rev(den)` as a power series
/// in `s`.
pub fn laurent_expand(x: &RatK, prec: usize, f: &FqParams) -> LaurentKInf {
    if x.is_zero() {
        return LaurentKInf::zero();
    }
    let prec = prec.max(1);
    let rev = |p: &PolyA| -> Vec<FqElem> { p.coeffs().iter().rev().copied().collect() };
    let num = rev(x.num());
    let den = rev(x.den());
    let den_inv = unit_series_inverse(&den, prec, f);
    let mut coeffs = vec![FqElem::ZERO; prec];
    for (i, &a) in num.iter().take(prec).enumerate() {
        for (j, &b) in den_inv.iter().take(prec - i).enumerate() {
            coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
        }
    }
    LaurentKInf {
        val: x.valuation().unwrap(),
        coeffs,
    }
}

/// Whether a nonzero series is a square in K_inf.
///
/// Requires at least two retained terms; a series that is zero to its
/// precision cannot be decided.
pub fn is_square_kinf(x: &LaurentKInf, f: &FqParams) -> Result<bool> {
    if x.is_zero() || x.prec() < 2 {
        return Err(Error::InsufficientPrecision);
    }
    match x.sqrt(f)? {
        None => Ok(false),
        Some(root) => {
            if root.mul(&root, f) != *x {
                return Err(Error::InsufficientPrecision);
            }
            Ok(true)
        }
    }
}

/// Whether `z^2 + b z + c` is irreducible over K_inf, via the discriminant
/// `b^2 - 4c` (exact since the characteristic is odd).
pub fn quad_irreducible_kinf(b: &RatK, c: &RatK, prec: usize, f: &FqParams) -> Result<bool> {
    let disc = discriminant(b, c, f);
    if disc.is_zero() {
        return Ok(false);
    }
    Ok(!is_square_kinf(&laurent_expand(&disc, prec, f), f)?)
}

/// `b^2 - 4c`.
pub fn discriminant(b: &RatK, c: &RatK, f: &FqParams) -> RatK {
    b.mul(b, f).sub(&c.scale(f.from_int(4), f), f)
}
