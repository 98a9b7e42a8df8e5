use alloc::string::String;

use crate::ffarith::ParseError;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("field order {0} is not a power of an odd prime")]
    InvalidOrder(u64),
    #[error("modulus is not an irreducible monic polynomial of degree {0} over F_p")]
    ReducibleModulus(u32),
    #[error("{0}: argument must be nonzero")]
    ZeroInput(&'static str),
    #[error("insufficient precision to decide")]
    InsufficientPrecision,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid group descriptor: {0}")]
    InvalidGroup(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("work bound exceeded: {0}")]
    WorkBound(String),
    #[error("coefficient at exponent {exponent} violates the support congruence 2n = k mod (q-1)")]
    SupportViolation { exponent: usize },
    #[error("parity undecided: no elliptic witness up to degree bound {0}")]
    Undecided(u32),
}

pub type Result<T> = core::result::Result<T, Error>;
