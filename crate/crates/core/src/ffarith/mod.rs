//! The field tower F_q ⊂ A = F_q[T] ⊂ K = F_q(T) ⊂ K_inf = F_q((1/T)).

mod fq;
mod laurent;
mod parse;
mod poly;
mod ratk;

pub(crate) use fq::gcd_u32;
pub use fq::{is_square_fq, FqElem, FqParams, MAX_ORDER};
pub use laurent::{
    discriminant, is_square_kinf, laurent_expand, quad_irreducible_kinf, LaurentKInf, DEFAULT_PREC,
};
pub(crate) use parse::{bivariate_to_poly, parse_bivariate};
pub use parse::{format_poly, parse_poly, ParseError, ParseErrorKind, MAX_EXPONENT};
pub(crate) use poly::{poly_from_index, poly_index};
pub use poly::{polys_below_degree, PolyA};
pub use ratk::RatK;
