//! Text forms of polynomials over F_q.
//!
//! Grammar (whitespace allowed between tokens):
//!
//! ```text
//! expr   := [sign] term (sign term)*
//! term   := factor ('*' factor)*
//! factor := integer | 'a' ['^' integer] | 'T' ['^' integer] | 'u' ['^' integer]
//!         | '(' expr ')'
//! ```
//!
//! Integers are prime-field literals in `0..p`; `a` is the fixed generator of
//! F_q^x and is only available when q is not prime. The variable `u` is only
//! accepted by the u-series reader.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::fq::{FqElem, FqParams};
use super::poly::PolyA;

/// Largest exponent accepted for `T` and `u`.
pub const MAX_EXPONENT: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at position {pos}: {kind}")]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(&'static str),
    #[error("coefficient {value} out of range 0..{p}")]
    CoefficientOutOfRange { value: u64, p: u32 },
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(char),
    #[error("exponent {0} too large")]
    ExponentTooLarge(u64),
}

/// Sparse polynomial in `T` and `u`, keyed by `(u_exp, t_exp)`.
pub(crate) type Bivariate = BTreeMap<(u64, u64), FqElem>;

struct Parser<'s> {
    src: &'s [u8],
    pos: usize,
    f: &'s FqParams,
    allow_u: bool,
}

impl<'s> Parser<'s> {
    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            pos: self.pos,
            kind,
        }
    }

    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(&c) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((c - b'0') as u64))
                .ok_or(ParseError {
                    pos: start,
                    kind: ParseErrorKind::Syntax("integer overflow"),
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err(ParseErrorKind::Syntax("expected integer")));
        }
        Ok(value)
    }

    fn exponent(&mut self) -> Result<u64, ParseError> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let start = self.pos;
        let e = self.integer()?;
        if e > MAX_EXPONENT {
            return Err(ParseError {
                pos: start,
                kind: ParseErrorKind::ExponentTooLarge(e),
            });
        }
        Ok(e)
    }

    fn expr(&mut self) -> Result<Bivariate, ParseError> {
        let mut acc = Bivariate::new();
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let term = self.term()?;
            for (k, v) in term {
                let v = if negate { self.f.neg(v) } else { v };
                let e = acc.entry(k).or_insert(FqElem::ZERO);
                *e = self.f.add(*e, v);
            }
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                _ => break,
            }
            self.pos += 1;
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(acc)
    }

    fn term(&mut self) -> Result<Bivariate, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = bivariate_mul(&acc, &rhs, self.f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Bivariate, ParseError> {
        let f = self.f;
        let single = |key: (u64, u64), c: FqElem| {
            let mut m = Bivariate::new();
            if !c.is_zero() {
                m.insert(key, c);
            }
            m
        };
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let v = self.integer()?;
                if v >= f.p() as u64 {
                    return Err(ParseError {
                        pos: start,
                        kind: ParseErrorKind::CoefficientOutOfRange { value: v, p: f.p() },
                    });
                }
                Ok(single((0, 0), f.from_int(v as i64)))
            }
            Some(b'T') => {
                self.pos += 1;
                let e = self.exponent()?;
                Ok(single((0, e), FqElem::ONE))
            }
            Some(b'u') if self.allow_u => {
                self.pos += 1;
                let e = self.exponent()?;
                Ok(single((e, 0), FqElem::ONE))
            }
            Some(b'a') if f.e() > 1 => {
                self.pos += 1;
                let e = self.exponent()?;
                Ok(single((0, 0), f.gen_pow(e as i64)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err(ParseErrorKind::Syntax("expected ')'")));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                Err(self.err(ParseErrorKind::UnknownSymbol(c as char)))
            }
            Some(_) => {
                let ch = core::str::from_utf8(&self.src[self.pos..])
                    .ok()
                    .and_then(|s| s.chars().next())
                    .unwrap_or('?');
                if ch.is_alphabetic() {
                    Err(self.err(ParseErrorKind::UnknownSymbol(ch)))
                } else {
                    Err(self.err(ParseErrorKind::Syntax("expected a term")))
                }
            }
            None => Err(self.err(ParseErrorKind::Syntax("unexpected end of input"))),
        }
    }
}

fn bivariate_mul(a: &Bivariate, b: &Bivariate, f: &FqParams) -> Bivariate {
    let mut out = Bivariate::new();
    for (&(ua, ta), &ca) in a {
        for (&(ub, tb), &cb) in b {
            let e = out.entry((ua + ub, ta + tb)).or_insert(FqElem::ZERO);
            *e = f.add(*e, f.mul(ca, cb));
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

pub(crate) fn parse_bivariate(
    src: &str,
    f: &FqParams,
    allow_u: bool,
) -> Result<Bivariate, ParseError> {
    let mut parser = Parser {
        src: src.as_bytes(),
        pos: 0,
        f,
        allow_u,
    };
    let out = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.err(ParseErrorKind::Syntax("unexpected trailing input")));
    }
    for &(ue, te) in out.keys() {
        if ue > MAX_EXPONENT || te > MAX_EXPONENT {
            return Err(ParseError {
                pos: 0,
                kind: ParseErrorKind::ExponentTooLarge(ue.max(te)),
            });
        }
    }
    Ok(out)
}

pub(crate) fn bivariate_to_poly(terms: impl Iterator<Item = (u64, FqElem)>) -> PolyA {
    let mut coeffs = Vec::new();
    for (deg, c) in terms {
        let deg = deg as usize;
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, FqElem::ZERO);
        }
        coeffs[deg] = c;
    }
    PolyA::from_coeffs(coeffs)
}

/// Parses a polynomial in `T` over F_q.
pub fn parse_poly(src: &str, f: &FqParams) -> Result<PolyA, ParseError> {
    let terms = parse_bivariate(src, f, false)?;
    Ok(bivariate_to_poly(
        terms.into_iter().map(|((_, t), c)| (t, c)),
    ))
}

/// Canonical text: decreasing degree, explicit `*` and `^`, unit
/// coefficients omitted on non-constant terms.
pub fn format_poly(p: &PolyA, f: &FqParams) -> String {
    if p.is_zero() {
        return String::from("0");
    }
    let mut out = String::new();
    for (deg, &c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        let coeff = f.format_elem(c);
        match deg {
            0 => out.push_str(&coeff),
            _ => {
                if c != FqElem::ONE {
                    let _ = write!(out, "{coeff}*");
                }
                out.push('T');
                if deg > 1 {
                    let _ = write!(out, "^{deg}");
                }
            }
        }
    }
    out
}
