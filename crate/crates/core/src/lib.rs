//! Exact arithmetic for Drinfeld modular curves over F_q[T], q odd.
//!
//! The crate is `no_std` (it needs `alloc`). Modules, bottom-up:
//!
//! - [`ffarith`]: F_q, polynomials, rational functions and Laurent series at
//!   the place at infinity, with square and quadratic-irreducibility tests.
//! - [`congruence`]: congruence subgroups of GL_2(A) as descriptors with
//!   membership, determinant images and indices.
//! - [`curveinv`]: cusps, elliptic witnesses, square/non-square parity and
//!   the invariants of the two genus-zero curves used downstream.
//! - [`weights`]: weight/type congruences, the Gamma_2 decompositions, the
//!   Gamma_0(T) dimension formula and the valence formula.
//! - [`qdiv`]: Q-divisors on P^1, Riemann-Roch spaces, best lower
//!   approximations and section-ring presentations.
//! - [`useries`]: truncated u-series with weight/type data and the splitting
//!   of Gamma_2 forms.
#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod congruence;
pub mod curveinv;
pub mod error;
pub mod ffarith;
pub(crate) mod linalg;
pub mod qdiv;
pub mod useries;
pub mod weights;

pub use error::{Error, Result};
