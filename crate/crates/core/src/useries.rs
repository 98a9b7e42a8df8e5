//! Truncated expansions `sum a_n u^n` in the parameter at infinity.
//!
//! Coefficients live in K. A series carries its weight and, when known, its
//! type. `u(az) = a^-1 u(z)` for `a` in F_q^x, so the diagonal action is a
//! coefficientwise twist, and a Gamma_2-form of weight `k` is supported on
//! exponents with `2n = k mod (q-1)`. Splitting sorts those exponents into
//! the two classes that give forms for the larger group.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::congruence::GroupSpec;
use crate::error::{Error, Result};
use crate::ffarith::{bivariate_to_poly, format_poly, parse_bivariate, FqElem, FqParams, RatK};
use crate::weights::{graded_mult_type, type_solutions, WeightType};

pub const DEFAULT_USERIES_PREC: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct USeries {
    /// `a_0 .. a_{prec-1}`.
    coeffs: Vec<RatK>,
    pub weight: u64,
    pub type_residue: Option<u32>,
}

impl USeries {
    /// Pads or truncates `coeffs` to `prec` terms.
    pub fn new(mut coeffs: Vec<RatK>, weight: u64, type_residue: Option<u32>, prec: usize) -> Self {
        coeffs.resize(prec, RatK::zero());
        USeries {
            coeffs,
            weight,
            type_residue,
        }
    }

    pub fn zero(weight: u64, prec: usize) -> Self {
        Self::new(Vec::new(), weight, None, prec)
    }

    /// `u^n`.
    pub fn monomial(n: usize, weight: u64, prec: usize) -> Self {
        let mut coeffs = vec![RatK::zero(); prec];
        if n < prec {
            coeffs[n] = RatK::one();
        }
        Self::new(coeffs, weight, None, prec)
    }

    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[RatK] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&RatK> {
        self.coeffs.get(n)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatK::is_zero)
    }

    /// Exponents with a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, _)| n)
    }

    pub fn with_type(mut self, l: Option<u32>) -> Self {
        self.type_residue = l;
        self
    }

    pub fn truncate(&self, prec: usize) -> Self {
        let mut out = self.clone();
        out.coeffs.truncate(prec);
        out
    }

    /// Coefficientwise sum of two series of the same weight.
    pub fn add(&self, other: &USeries, f: &FqParams) -> Result<USeries> {
        if self.weight != other.weight {
            return Err(Error::Precondition(format!(
                "adding weights {} and {}",
                self.weight, other.weight
            )));
        }
        let prec = self.prec().min(other.prec());
        let coeffs = (0..prec)
            .map(|n| self.coeffs[n].add(&other.coeffs[n], f))
            .collect();
        let ty = (self.type_residue == other.type_residue)
            .then_some(self.type_residue)
            .flatten();
        Ok(USeries::new(coeffs, self.weight, ty, prec))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &RatK, f: &FqParams) -> USeries {
        let mut out = self.clone();
        for x in out.coeffs.iter_mut() {
            *x = x.mul(c, f);
        }
        out
    }

    /// The series of `f(alpha z)`: `a_n -> a_n alpha^-n`.
    pub fn scale_u(&self, alpha: FqElem, f: &FqParams) -> Result<USeries> {
        let inv = f.checked_inv(alpha).ok_or(Error::ZeroInput("scale_u"))?;
        let mut out = self.clone();
        let mut factor = FqElem::ONE;
        for x in out.coeffs.iter_mut() {
            *x = x.scale(factor, f);
            factor = f.mul(factor, inv);
        }
        Ok(out)
    }

    /// Cauchy product to the smaller precision; weights add and types add
    /// when both are known.
    pub fn mul(&self, other: &USeries, f: &FqParams) -> USeries {
        let prec = self.prec().min(other.prec());
        let mut coeffs = vec![RatK::zero(); prec];
        for i in self.support().filter(|&i| i < prec) {
            for j in other.support().take_while(|&j| i + j < prec) {
                coeffs[i + j] = coeffs[i + j].add(&self.coeffs[i].mul(&other.coeffs[j], f), f);
            }
        }
        let ty = match (self.type_residue, other.type_residue) {
            (Some(a), Some(b)) => Some(
                graded_mult_type(
                    WeightType {
                        k: self.weight,
                        l: a,
                    },
                    WeightType {
                        k: other.weight,
                        l: b,
                    },
                    f.q(),
                )
                .l,
            ),
            _ => None,
        };
        USeries::new(coeffs, self.weight + other.weight, ty, prec)
    }

    /// First exponent `n` with `a_n != 0` and `2n != k mod (q-1)`.
    pub fn first_violation(&self, k: u64, q: u32) -> Option<usize> {
        let m = q as u64 - 1;
        self.support().find(|&n| (2 * n as u64) % m != k % m)
    }

    /// Parses `c*u^n` terms whose coefficients follow the polynomial
    /// grammar, e.g. `u^2+(T+1)*u^4`.
    pub fn parse(src: &str, weight: u64, prec: usize, f: &FqParams) -> Result<USeries> {
        let terms = parse_bivariate(src, f, true)?;
        let top = terms.keys().map(|&(u, _)| u).max().unwrap_or(0);
        if !terms.is_empty() && top as usize >= prec {
            return Err(Error::Precondition(format!(
                "exponent {top} is beyond the precision {prec}"
            )));
        }
        let mut coeffs = vec![RatK::zero(); prec];
        for (n, c) in coeffs.iter_mut().enumerate() {
            let poly = bivariate_to_poly(
                terms
                    .range((n as u64, 0)..=(n as u64, u64::MAX))
                    .map(|(&(_, t), &c)| (t, c)),
            );
            *c = RatK::from_poly(poly);
        }
        Ok(USeries::new(coeffs, weight, None, prec))
    }

    /// Increasing powers of `u`; `0` for the zero series.
    pub fn format(&self, f: &FqParams) -> String {
        let mut parts = Vec::new();
        for n in self.support() {
            let c = &self.coeffs[n];
            let coeff = if c.den().is_constant() {
                let p = c.num();
                let s = format_poly(p, f);
                if p.coeffs().iter().filter(|x| !x.is_zero()).count() > 1 {
                    format!("({s})")
                } else {
                    s
                }
            } else {
                format!(
                    "({})/({})",
                    format_poly(c.num(), f),
                    format_poly(c.den(), f)
                )
            };
            let mono = match n {
                0 => String::new(),
                1 => String::from("u"),
                _ => format!("u^{n}"),
            };
            parts.push(match (coeff.as_str(), mono.is_empty()) {
                (_, true) => coeff,
                ("1", false) => mono,
                _ => format!("{coeff}*{mono}"),
            });
        }
        if parts.is_empty() {
            String::from("0")
        } else {
            parts.join("+")
        }
    }
}

/// Whether every nonzero `a_n` has `2n = k mod (q-1)`.
pub fn check_support(s: &USeries, k: u64, q: u32) -> bool {
    s.first_violation(k, q).is_none()
}

/// Splits a Gamma_2-form of even weight `k` into its parts on
/// `n = k/2` and `n = k/2 + (q-1)/2 mod (q-1)`, typed `l1` and `l2`.
pub fn split(s: &USeries, k: u64, q: u32) -> Result<(USeries, USeries)> {
    if k % 2 == 1 {
        return Err(Error::Precondition(format!("weight {k} is odd")));
    }
    if let Some(exponent) = s.first_violation(k, q) {
        return Err(Error::SupportViolation { exponent });
    }
    let m = q as u64 - 1;
    let types = type_solutions(k, q);
    let (l1, l2) = (types[0], types[1]);
    let part = |l: u32| {
        let coeffs = s
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n as u64 % m == l as u64 {
                    c.clone()
                } else {
                    RatK::zero()
                }
            })
            .collect();
        USeries::new(coeffs, k, Some(l), s.prec())
    };
    Ok((part(l1), part(l2)))
}

/// Metadata of a named form; coefficients are not computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormRegistryEntry {
    pub name: &'static str,
    pub weight: u64,
    pub type_residue: Option<u32>,
    /// Types allowed by `k = 2l mod (q-1)` when the type is not known.
    pub allowed_types: Vec<u32>,
    pub group: GroupSpec,
}

pub fn registry(f: &FqParams) -> Vec<FormRegistryEntry> {
    let q = f.q() as u64;
    let full = GroupSpec::full();
    let gamma0 = GroupSpec::parse("gamma0:T", f).expect("valid descriptor");
    let entry = |name, weight: u64, ty: Option<u32>, group: &GroupSpec| FormRegistryEntry {
        name,
        weight,
        type_residue: ty,
        allowed_types: match ty {
            Some(l) => vec![l],
            None => type_solutions(weight, f.q()),
        },
        group: group.clone(),
    };
    vec![
        entry("g", q - 1, Some(0), &full),
        entry("h", q + 1, Some(1), &full),
        entry("Delta", q * q - 1, Some(0), &full),
        entry("E_T", 2, Some(1), &gamma0),
        entry("Delta_T", q - 1, None, &gamma0),
        entry("Delta_W", q - 1, None, &gamma0),
    ]
}
