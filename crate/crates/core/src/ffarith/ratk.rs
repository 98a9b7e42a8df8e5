use super::fq::FqParams;
use super::poly::PolyA;
use crate::error::{Error, Result};

/// An element of K = F_q(T) in canonical form: coprime numerator and monic
/// denominator. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatK {
    num: PolyA,
    den: PolyA,
}

impl RatK {
    pub fn new(num: PolyA, den: PolyA, f: &FqParams) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroInput("RatK denominator"));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den, f);
        let num = num.exact_div(&g, f).unwrap();
        let den = den.exact_div(&g, f).unwrap();
        let lead = f.inv(den.leading().unwrap());
        Ok(RatK {
            num: num.scale(lead, f),
            den: den.scale(lead, f),
        })
    }

    pub fn zero() -> Self {
        RatK {
            num: PolyA::zero(),
            den: PolyA::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(PolyA::one())
    }

    pub fn from_poly(p: PolyA) -> Self {
        RatK {
            num: p,
            den: PolyA::one(),
        }
    }

    pub fn num(&self) -> &PolyA {
        &self.num
    }

    pub fn den(&self) -> &PolyA {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The valuation at infinity, `deg den - deg num`; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        let n = self.num.degree()? as i64;
        Some(self.den.degree().unwrap() as i64 - n)
    }

    pub fn add(&self, other: &RatK, f: &FqParams) -> RatK {
        let num = self
            .num
            .mul(&other.den, f)
            .add(&other.num.mul(&self.den, f), f);
        Self::new(num, self.den.mul(&other.den, f), f).unwrap()
    }

    pub fn neg(&self, f: &FqParams) -> RatK {
        RatK {
            num: self.num.neg(f),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatK, f: &FqParams) -> RatK {
        self.add(&other.neg(f), f)
    }

    pub fn mul(&self, other: &RatK, f: &FqParams) -> RatK {
        Self::new(self.num.mul(&other.num, f), self.den.mul(&other.den, f), f).unwrap()
    }

    pub fn inv(&self, f: &FqParams) -> Result<RatK> {
        Self::new(self.den.clone(), self.num.clone(), f)
    }

    pub fn div(&self, other: &RatK, f: &FqParams) -> Result<RatK> {
        Ok(self.mul(&other.inv(f)?, f))
    }

    pub fn scale(&self, c: super::FqElem, f: &FqParams) -> RatK {
        Self::new(self.num.scale(c, f), self.den.clone(), f).unwrap()
    }
}
