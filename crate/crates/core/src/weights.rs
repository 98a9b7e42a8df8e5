//! Weights and types.
//!
//! A form of weight `k` and type `l` can only be nonzero when
//! `k = 2l mod (q-1)`. For a group containing the diagonal matrices this
//! splits Gamma_2-forms into two Gamma-types, and more generally splits
//! forms for `Gamma'` (with `Gamma_1 <= Gamma' <= Gamma`) along the cosets
//! of the determinant images.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Rational64;

use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightType {
    pub k: u64,
    /// Residue in `[0, q-1)`.
    pub l: u32,
}

impl WeightType {
    pub fn new(k: u64, l: u64, q: u32) -> Self {
        WeightType {
            k,
            l: (l % (q as u64 - 1)) as u32,
        }
    }

    /// Whether `k = 2l mod (q-1)`, the condition for a nonzero space.
    pub fn is_admissible(&self, q: u32) -> bool {
        let m = q as u64 - 1;
        (self.k % m) == (2 * self.l as u64) % m
    }
}

/// Orders of vanishing of a level-one form of weight `k`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VanishingProfile {
    pub k: u64,
    pub v_inf: u64,
    pub v_e: u64,
    pub v_other: Vec<u64>,
}

/// The residues `l mod (q-1)` with `2l = k`, in the order
/// `[k/2, k/2 + (q-1)/2]`; empty for odd `k`.
pub fn type_solutions(k: u64, q: u32) -> Vec<u32> {
    if k % 2 == 1 {
        return Vec::new();
    }
    let m = q as u64 - 1;
    let half = k / 2;
    vec![(half % m) as u32, ((half + m / 2) % m) as u32]
}

/// The two Gamma-types lying over the Gamma_2-type `l2 mod (q-1)/2`.
pub fn decompose_gamma2(k: u64, l2: u32, q: u32) -> Result<(u32, u32)> {
    let half_m = (q as u64 - 1) / 2;
    if k % 2 == 1 {
        return Err(Error::Precondition(format!("weight {k} is odd")));
    }
    if (l2 as u64) % half_m != (k / 2) % half_m {
        return Err(Error::Precondition(format!(
            "type {l2} is incompatible with weight {k} mod {half_m}"
        )));
    }
    let s = type_solutions(k, q);
    Ok((s[0], s[1]))
}

/// Types `l + i n' mod (q-1)` for `i < n/n'`, where `n` and `n'` are the
/// orders of the determinant images of `Gamma` and `Gamma'`.
pub fn idempotent_decomposition(l: u32, n: u32, n_sub: u32, q: u32) -> Result<Vec<u32>> {
    let m = q - 1;
    if n_sub == 0 || !n.is_multiple_of(n_sub) || !m.is_multiple_of(n) {
        return Err(Error::Precondition(format!(
            "need n' | n | q-1, got n'={n_sub}, n={n}, q-1={m}"
        )));
    }
    Ok((0..n / n_sub).map(|i| (l + i * n_sub) % m).collect())
}

/// `dim M_{k,l}(Gamma_0(T)) = 1 + (k - 2l)/(q-1)` when this is defined,
/// otherwise 0. `l` is read as its representative in `[0, q-1)`.
pub fn dim_gamma0_t(k: u64, l: u32, q: u32) -> u64 {
    let m = q as u64 - 1;
    let l = l as u64 % m;
    if k < 2 * l || !(k - 2 * l).is_multiple_of(m) {
        return 0;
    }
    1 + (k - 2 * l) / m
}

/// Exact test of `sum v_z + v_e/(q+1) + v_inf/(q-1) = k/(q^2-1)`.
pub fn valence_check(prof: &VanishingProfile, q: u32) -> bool {
    let q = q as i64;
    let r = |n: u64, d: i64| Rational64::new(n as i64, d);
    let lhs = prof.v_other.iter().fold(r(0, 1), |acc, &v| acc + r(v, 1))
        + r(prof.v_e, q + 1)
        + r(prof.v_inf, q - 1);
    lhs == r(prof.k, q * q - 1)
}

/// `M_{k,l} M_{k',l'} ⊂ M_{k+k',l+l'}`.
pub fn graded_mult_type(a: WeightType, b: WeightType, q: u32) -> WeightType {
    WeightType::new(a.k + b.k, a.l as u64 + b.l as u64, q)
}
