//! Q-divisors on P^1 supported on {0, 1, inf} and their section rings.
//!
//! For `floor(D) = a(0) + b(1) + c(inf)` the space `H^0(floor D)` is
//! `{ P / (t^a (t-1)^b) : deg P <= a + b + c }`, so sections are stored as
//! their numerators `P` and the monomials `t^m` form a basis.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};

use crate::curveinv::{assemble_invariants, CurveInvariants, Preset};
use crate::error::{Error, Result};
use crate::ffarith::FqParams;
use crate::linalg::{from_ints, nullspace, primitive_integer, Echelon, QVec};

/// Largest number of monomials or section coordinates handled per degree.
pub const MAX_DEGREE_WORK: usize = 4096;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QPoint {
    Zero,
    One,
    Infinity,
}

impl QPoint {
    pub const ALL: [QPoint; 3] = [QPoint::Zero, QPoint::One, QPoint::Infinity];

    pub fn name(self) -> &'static str {
        match self {
            QPoint::Zero => "0",
            QPoint::One => "1",
            QPoint::Infinity => "inf",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QDivisor {
    coeffs: BTreeMap<QPoint, Rational64>,
}

impl QDivisor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(QPoint, Rational64)]) -> Self {
        let mut d = Self::new();
        for &(p, c) in pairs {
            d.add_at(p, c);
        }
        d
    }

    pub fn coeff(&self, p: QPoint) -> Rational64 {
        self.coeffs
            .get(&p)
            .copied()
            .unwrap_or_else(Rational64::zero)
    }

    pub fn add_at(&mut self, p: QPoint, c: Rational64) {
        let v = self.coeff(p) + c;
        if v.is_zero() {
            self.coeffs.remove(&p);
        } else {
            self.coeffs.insert(p, v);
        }
    }

    pub fn degree(&self) -> Rational64 {
        self.coeffs.values().sum()
    }

    pub fn add(&self, other: &QDivisor) -> QDivisor {
        let mut out = self.clone();
        for (&p, &c) in &other.coeffs {
            out.add_at(p, c);
        }
        out
    }

    pub fn scale(&self, r: Rational64) -> QDivisor {
        let mut out = QDivisor::new();
        for (&p, &c) in &self.coeffs {
            out.add_at(p, c * r);
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// Exchanges the coefficients at two points.
    pub fn swap(&self, x: QPoint, y: QPoint) -> QDivisor {
        let mut out = self.clone();
        out.coeffs.remove(&x);
        out.coeffs.remove(&y);
        out.add_at(x, self.coeff(y));
        out.add_at(y, self.coeff(x));
        out
    }

    pub fn support(&self) -> impl Iterator<Item = (QPoint, Rational64)> + '_ {
        self.coeffs.iter().map(|(&p, &c)| (p, c))
    }

    /// Floors at 0, 1, inf.
    fn floors(&self) -> (i64, i64, i64) {
        let fl = |p| self.coeff(p).floor().to_integer();
        (fl(QPoint::Zero), fl(QPoint::One), fl(QPoint::Infinity))
    }
}

impl fmt::Display for QDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.support().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}({})", p.name())?;
        }
        Ok(())
    }
}

/// Componentwise floor.
pub fn floor_div(d: &QDivisor) -> QDivisor {
    let mut out = QDivisor::new();
    for (p, c) in d.support() {
        out.add_at(p, c.floor());
    }
    out
}

/// `h^0(P^1, floor D)`.
pub fn h0(d: &QDivisor) -> u64 {
    let deg = floor_div(d).degree().to_integer();
    if deg < 0 {
        0
    } else {
        deg as u64 + 1
    }
}

/// Basis `t^m / (t^a (t-1)^b)`, `m = 0 ..= a + b + c`, of `H^0(floor D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionBasis {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub exponents: Vec<u64>,
}

impl SectionBasis {
    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    /// Orders of the `i`-th basis element at 0, 1 and inf.
    pub fn orders(&self, i: usize) -> (i64, i64, i64) {
        let m = self.exponents[i] as i64;
        (m - self.a, -self.b, self.a + self.b - m)
    }

    pub fn describe(&self, i: usize) -> String {
        let m = self.exponents[i] as i64;
        format!("t^{}*(t-1)^{}", m - self.a, -self.b)
    }
}

pub fn rr_basis(d: &QDivisor) -> SectionBasis {
    let (a, b, c) = d.floors();
    let n = a + b + c;
    SectionBasis {
        a,
        b,
        c,
        exponents: if n < 0 {
            Vec::new()
        } else {
            (0..=n as u64).collect()
        },
    }
}

/// Fractions `floor(b alpha)/b` that strictly improve on every smaller
/// denominator, ending with `alpha`. Computed by descending the
/// Stern-Brocot tree from `floor(alpha)/1`.
pub fn best_lower_approximations(alpha: Rational64) -> Result<Vec<Rational64>> {
    if alpha.is_negative() {
        return Err(Error::Precondition("alpha must be nonnegative".into()));
    }
    let (p, s) = (*alpha.numer() as i128, *alpha.denom() as i128);
    let fl = p.div_euclid(s);
    let (mut ln, mut ld, mut rn, mut rd) = (fl, 1i128, fl + 1, 1i128);
    let mut out = vec![Rational64::from_integer(fl as i64)];
    if fl * s == p {
        return Ok(out);
    }
    loop {
        // distances of the bounds from alpha, scaled by denominators
        let x = s * rn - p * rd;
        let y = p * ld - s * ln;
        if x == y {
            out.push(alpha);
            return Ok(out);
        }
        if x > y {
            let j = (x - 1) / y;
            rn += j * ln;
            rd += j * ld;
        } else {
            ln += rn;
            ld += rd;
            out.push(Rational64::new(ln as i64, ld as i64));
        }
    }
}

/// Number of best lower approximations with denominator greater than one.
pub fn approximation_count(approx: &[Rational64]) -> usize {
    approx.iter().filter(|r| *r.denom() > 1).count()
}

/// `K + sum_e (1 - 1/e_x) x + sum_s (1 + 1/e_s) s` on P^1 with `K = -2(inf)`.
/// The elliptic point sits at 1; the cusp containing `(1, 0)` at inf and
/// the other at 0.
pub fn log_canonical_divisor(inv: &CurveInvariants) -> Result<QDivisor> {
    if inv.genus != 0 {
        return Err(Error::Precondition("only genus zero is supported".into()));
    }
    if inv.elliptic_points.len() > 1 || inv.cusps.count > 2 {
        return Err(Error::Precondition("more than three special points".into()));
    }
    let mut d = QDivisor::from_pairs(&[(QPoint::Infinity, Rational64::from_integer(-2))]);
    for e in &inv.elliptic_points {
        let order = e.stab_order_gamma2 as i64;
        d.add_at(QPoint::One, Rational64::one() - Rational64::new(1, order));
    }
    let mut placed = Vec::new();
    for (i, &order) in inv.cusp_stab_orders.iter().enumerate() {
        let at = if inv.cusps.contains_infinity(i) {
            QPoint::Infinity
        } else {
            QPoint::Zero
        };
        if placed.contains(&at) {
            return Err(Error::Precondition("two cusps at the same point".into()));
        }
        placed.push(at);
        d.add_at(at, Rational64::one() + Rational64::new(1, order as i64));
    }
    Ok(d)
}

/// The log-canonical divisor of a preset curve over F_q.
pub fn preset_divisor(preset: Preset, f: &FqParams) -> Result<QDivisor> {
    log_canonical_divisor(&assemble_invariants(preset, f)?)
}

/// `h^0` of `alpha(inf) + (alpha + 2)(0)` scaled by `k/2`, with
/// `alpha = (2k - 2l - kq) / (k(q-1))`.
pub fn h0_weighted(preset: Preset, q: u32, k: u64, l: u32) -> Result<u64> {
    if preset != Preset::Gamma0T2 {
        return Err(Error::Unsupported(format!(
            "weighted h0 for {}",
            preset.name()
        )));
    }
    if k == 0 || k % 2 == 1 {
        return Err(Error::Precondition(format!(
            "weight {k} must be even and positive"
        )));
    }
    let (k, l, q) = (k as i64, (l % (q - 1)) as i64, q as i64);
    let alpha = Rational64::new(2 * k - 2 * l - k * q, k * (q - 1));
    let half = Rational64::from_integer(k / 2);
    let deg = 2 * (half * alpha).floor().to_integer() + k;
    Ok(if deg < 0 { 0 } else { deg as u64 + 1 })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub weight: u64,
    pub degree: u64,
    /// Exponent `m` of the chosen basis section `t^m / (t^a (t-1)^b)`.
    pub section: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub weight: u64,
    pub degree: u64,
    /// Integer combination of generator monomials (exponent vectors).
    pub terms: Vec<(Vec<u64>, BigInt)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub degree: u64,
    pub h0: u64,
    pub monomials: usize,
    pub span: usize,
    pub kernel: usize,
    pub new_generators: usize,
    pub new_relations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
    pub degrees: Vec<DegreeStats>,
    pub truncation_weight: u64,
}

/// Exponent vectors `e` with `sum e_i deg_i = d`, in lexicographic order.
fn monomials(degs: &[u64], d: u64) -> Result<Vec<Vec<u64>>> {
    fn rec(degs: &[u64], d: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) -> bool {
        if cur.len() == degs.len() {
            if d == 0 {
                if out.len() >= MAX_DEGREE_WORK {
                    return false;
                }
                out.push(cur.clone());
            }
            return true;
        }
        let g = degs[cur.len()];
        for e in 0..=d / g {
            cur.push(e);
            let ok = rec(degs, d - e * g, cur, out);
            cur.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    let mut out = Vec::new();
    if !rec(degs, d, &mut Vec::new(), &mut out) {
        return Err(Error::WorkBound(format!("monomials of degree {d}")));
    }
    Ok(out)
}

/// Coefficients of `t^s (t-1)^r`, lowest degree first, padded to `len`.
fn shifted_binomial(s: u64, r: u64, len: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); len];
    let mut binom = BigInt::one();
    for j in 0..=r {
        let sign = if (r - j).is_multiple_of(2) { 1 } else { -1 };
        v[(s + j) as usize] = &binom * sign;
        binom = binom * (r - j) / (j + 1);
    }
    v
}

/// Generators and relations of `sum_d H^0(floor(dD))` up to weight
/// `max_weight`, degree `d` having weight `2d`. Generators are chosen
/// greedily among the basis sections `t^m` in increasing `m`; relations are
/// kernel vectors of the monomial map modulo multiples of earlier ones.
pub fn presentation(d: &QDivisor, max_weight: u64) -> Result<RingPresentation> {
    if max_weight < 2 || max_weight % 2 == 1 {
        return Err(Error::Precondition(format!(
            "max weight {max_weight} must be even and at least 2"
        )));
    }
    let max_deg = max_weight / 2;
    // floors of d*D for every degree, index 0 unused
    let floors: Vec<(i64, i64, i64)> = (0..=max_deg)
        .map(|n| d.scale(Rational64::from_integer(n as i64)).floors())
        .collect();
    for (deg, &(a, b, c)) in floors.iter().enumerate().skip(1) {
        if a + b + c + 1 > MAX_DEGREE_WORK as i64 {
            return Err(Error::WorkBound(format!(
                "h0 = {} in degree {deg}",
                a + b + c + 1
            )));
        }
    }

    let mut gens: Vec<Generator> = Vec::new();
    let mut relations: Vec<Relation> = Vec::new();
    let mut degrees = Vec::new();
    for deg in 1..=max_deg {
        let (a, b, c) = floors[deg as usize];
        let n = a + b + c;
        let h = if n < 0 { 0 } else { (n + 1) as usize };
        let degs: Vec<u64> = gens.iter().map(|g| g.degree).collect();
        let monos = monomials(&degs, deg)?;

        // numerators of the products as coefficient vectors of length h
        let mut cols: Vec<QVec> = Vec::with_capacity(monos.len());
        for e in &monos {
            let (mut sa, mut sb, mut m) = (a, b, 0u64);
            for (g, &k) in gens.iter().zip(e) {
                let (ga, gb, _) = floors[g.degree as usize];
                sa -= ga * k as i64;
                sb -= gb * k as i64;
                m += g.section * k;
            }
            debug_assert!(sa >= 0 && sb >= 0);
            cols.push(from_ints(&shifted_binomial(m + sa as u64, sb as u64, h)));
        }

        let mut span = Echelon::new(h);
        for col in &cols {
            span.insert(col);
        }
        let span_rank = span.rank();
        let mut new_generators = 0;
        for m in 0..h {
            let mut unit = vec![BigRational::zero(); h];
            unit[m] = BigRational::one();
            if span.insert(&unit) {
                gens.push(Generator {
                    weight: 2 * deg,
                    degree: deg,
                    section: m as u64,
                });
                new_generators += 1;
            }
        }

        let kernel = nullspace(&cols, h);
        let index: BTreeMap<&Vec<u64>, usize> =
            monos.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut old = Echelon::new(monos.len());
        for rel in &relations {
            let shift_degs: Vec<u64> = degs.clone();
            for mu in monomials(&shift_degs, deg - rel.degree)? {
                let mut v = vec![BigRational::zero(); monos.len()];
                for (e, coeff) in &rel.terms {
                    let mut prod: Vec<u64> = mu.clone();
                    for (x, y) in prod.iter_mut().zip(e) {
                        *x += y;
                    }
                    v[index[&prod]] += BigRational::from_integer(coeff.clone());
                }
                old.insert(&v);
            }
        }
        let mut new_relations = 0;
        for v in &kernel {
            if old.insert(v) {
                let ints = primitive_integer(v);
                let terms = monos
                    .iter()
                    .zip(ints)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(e, c)| (e.clone(), c))
                    .collect();
                relations.push(Relation {
                    weight: 2 * deg,
                    degree: deg,
                    terms,
                });
                new_relations += 1;
            }
        }
        degrees.push(DegreeStats {
            degree: deg,
            h0: h as u64,
            monomials: monos.len(),
            span: span_rank,
            kernel: kernel.len(),
            new_generators,
            new_relations,
        });
    }
    Ok(RingPresentation {
        generators: gens,
        relations,
        degrees,
        truncation_weight: max_weight,
    })
}

impl Relation {
    /// Human-readable form with generators named `x0, x1, ...`.
    pub fn format(&self, names: &[String]) -> String {
        let mut s = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(k, _)| **k > 0)
                .map(|(k, n)| {
                    if *k == 1 {
                        n.clone()
                    } else {
                        format!("{n}^{k}")
                    }
                })
                .collect();
            let mono = if mono.is_empty() {
                String::from("1")
            } else {
                mono.join("*")
            };
            if mag.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{mag}*{mono}"));
            }
        }
        s
    }
}
