//! Congruence subgroups of GL_2(A) as finite descriptors.
//!
//! A [`GroupSpec`] names a family (GL_2(A), Gamma(N), Gamma_1(N), Gamma_0(N))
//! and a restriction on determinants. Groups are infinite, so everything here
//! is a membership predicate or a closed-form fact about the determinant
//! image, which is a subgroup of the cyclic group F_q^x.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ffarith::{format_poly, gcd_u32, parse_poly, FqElem, FqParams, PolyA};

/// A 2x2 matrix over A.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat2 {
    pub a: PolyA,
    pub b: PolyA,
    pub c: PolyA,
    pub d: PolyA,
}

impl Mat2 {
    pub fn new(a: PolyA, b: PolyA, c: PolyA, d: PolyA) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::diag(FqElem::ONE, FqElem::ONE)
    }

    pub fn diag(x: FqElem, y: FqElem) -> Self {
        Mat2::new(
            PolyA::constant(x),
            PolyA::zero(),
            PolyA::zero(),
            PolyA::constant(y),
        )
    }

    /// `(1 x; 0 1)`.
    pub fn upper(x: PolyA) -> Self {
        Mat2::new(PolyA::one(), x, PolyA::zero(), PolyA::one())
    }

    /// `(1 0; x 1)`.
    pub fn lower(x: PolyA) -> Self {
        Mat2::new(PolyA::one(), PolyA::zero(), x, PolyA::one())
    }

    pub fn det(&self, f: &FqParams) -> PolyA {
        self.a.mul(&self.d, f).sub(&self.b.mul(&self.c, f), f)
    }

    /// The determinant when it is a unit of A, i.e. a nonzero constant.
    pub fn unit_det(&self, f: &FqParams) -> Option<FqElem> {
        self.det(f).as_constant().filter(|c| !c.is_zero())
    }

    pub fn mul(&self, o: &Mat2, f: &FqParams) -> Mat2 {
        let dot = |x: &PolyA, y: &PolyA, z: &PolyA, w: &PolyA| x.mul(y, f).add(&z.mul(w, f), f);
        Mat2::new(
            dot(&self.a, &o.a, &self.b, &o.c),
            dot(&self.a, &o.b, &self.b, &o.d),
            dot(&self.c, &o.a, &self.d, &o.c),
            dot(&self.c, &o.b, &self.d, &o.d),
        )
    }

    /// Inverse in GL_2(A); `None` unless the determinant is a unit.
    pub fn inverse(&self, f: &FqParams) -> Option<Mat2> {
        let inv = f.inv(self.unit_det(f)?);
        Some(Mat2::new(
            self.d.scale(inv, f),
            self.b.neg(f).scale(inv, f),
            self.c.neg(f).scale(inv, f),
            self.a.scale(inv, f),
        ))
    }

    pub fn is_scalar(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    pub fn trace(&self, f: &FqParams) -> PolyA {
        self.a.add(&self.d, f)
    }

    pub fn format(&self, f: &FqParams) -> String {
        format!(
            "({}, {}; {}, {})",
            format_poly(&self.a, f),
            format_poly(&self.b, f),
            format_poly(&self.c, f),
            format_poly(&self.d, f)
        )
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Full,
    GammaN,
    Gamma1,
    Gamma0,
}

/// Restriction of the determinant to a subgroup of the family's image.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DetRestriction {
    All,
    /// `Gamma_2`: square determinants.
    Squares,
    /// `Gamma_1`: determinant one.
    One,
    /// Preimage of the index-`m` subgroup (the `m`-th powers).
    IndexM(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupSpec {
    family: Family,
    level: Option<PolyA>,
    det: DetRestriction,
}

impl GroupSpec {
    pub fn new(
        family: Family,
        level: Option<PolyA>,
        det: DetRestriction,
        f: &FqParams,
    ) -> Result<Self> {
        match (&family, &level) {
            (Family::Full, Some(_)) => {
                return Err(Error::InvalidGroup("GL_2(A) takes no level".into()))
            }
            (Family::Full, None) => {}
            (_, None) => return Err(Error::InvalidGroup("missing level".into())),
            (_, Some(n)) if n.is_constant() => {
                return Err(Error::InvalidGroup("level must be non-constant".into()))
            }
            _ => {}
        }
        let spec = GroupSpec { family, level, det };
        spec.restricted_order(f)?;
        Ok(spec)
    }

    /// GL_2(A).
    pub fn full() -> Self {
        GroupSpec {
            family: Family::Full,
            level: None,
            det: DetRestriction::All,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn level(&self) -> Option<&PolyA> {
        self.level.as_ref()
    }

    pub fn det_restriction(&self) -> DetRestriction {
        self.det
    }

    /// The same family and level with another determinant restriction.
    pub fn with_det(&self, det: DetRestriction, f: &FqParams) -> Result<Self> {
        GroupSpec::new(self.family, self.level.clone(), det, f)
    }

    /// `Gamma_2` of this group.
    pub fn gamma2(&self, f: &FqParams) -> Result<Self> {
        self.with_det(DetRestriction::Squares, f)
    }

    /// Order of the family's determinant image before restriction.
    fn base_order(&self, f: &FqParams) -> u32 {
        match self.family {
            Family::GammaN => 1,
            _ => f.q() - 1,
        }
    }

    fn restricted_order(&self, f: &FqParams) -> Result<u32> {
        let n = self.base_order(f);
        match self.det {
            DetRestriction::All => Ok(n),
            DetRestriction::Squares => Ok(n / gcd_u32(2, n)),
            DetRestriction::One => Ok(1),
            DetRestriction::IndexM(m) if m >= 1 && n.is_multiple_of(m) => Ok(n / m),
            DetRestriction::IndexM(m) => Err(Error::InvalidGroup(format!(
                "index {m} does not divide the determinant image order {n}"
            ))),
        }
    }

    /// Whether a unit `x` lies in the restricted determinant subgroup.
    pub fn allows_det(&self, x: FqElem, f: &FqParams) -> bool {
        let Some(l) = f.log(x) else { return false };
        if self.family == Family::GammaN && x != FqElem::ONE {
            return false;
        }
        // the subgroup of order n in the cyclic F_q^x is generated by g^((q-1)/n)
        let n = self.restricted_order(f).unwrap_or(1);
        l % ((f.q() - 1) / n) == 0
    }

    /// Generator of the restricted determinant subgroup.
    pub fn det_generator(&self, f: &FqParams) -> FqElem {
        let n = self.restricted_order(f).unwrap_or(1);
        f.gen_pow(((f.q() - 1) / n) as i64)
    }

    /// Text form: `full`, `gamma0:<poly>`, ... with optional `!sq`, `!one`,
    /// `!idx<m>`.
    pub fn parse(src: &str, f: &FqParams) -> Result<Self> {
        let src = src.trim();
        let (body, det) = match src.split_once('!') {
            None => (src, DetRestriction::All),
            Some((body, suffix)) => {
                let det = match suffix.trim() {
                    "sq" => DetRestriction::Squares,
                    "one" => DetRestriction::One,
                    s => {
                        let m = s
                            .strip_prefix("idx")
                            .and_then(|m| m.parse::<u32>().ok())
                            .ok_or_else(|| {
                                Error::InvalidGroup(format!("unknown restriction suffix {s:?}"))
                            })?;
                        DetRestriction::IndexM(m)
                    }
                };
                (body, det)
            }
        };
        let (name, level) = match body.split_once(':') {
            None => (body.trim(), None),
            Some((name, level)) => (name.trim(), Some(parse_poly(level, f)?)),
        };
        let family = match name {
            "full" => Family::Full,
            "gamma0" => Family::Gamma0,
            "gamma1" => Family::Gamma1,
            "gammaN" => Family::GammaN,
            other => return Err(Error::InvalidGroup(format!("unknown family {other:?}"))),
        };
        GroupSpec::new(family, level, det, f)
    }

    pub fn format(&self, f: &FqParams) -> String {
        let mut s = match self.family {
            Family::Full => "full".to_string(),
            Family::Gamma0 => "gamma0".to_string(),
            Family::Gamma1 => "gamma1".to_string(),
            Family::GammaN => "gammaN".to_string(),
        };
        if let Some(n) = &self.level {
            s.push(':');
            s.push_str(&format_poly(n, f));
        }
        match self.det {
            DetRestriction::All => {}
            DetRestriction::Squares => s.push_str("!sq"),
            DetRestriction::One => s.push_str("!one"),
            DetRestriction::IndexM(m) => s.push_str(&format!("!idx{m}")),
        }
        s
    }
}

/// Membership of `gamma` in the group: unit determinant in the restricted
/// set and the family's congruence shape modulo the level.
pub fn member(gamma: &Mat2, group: &GroupSpec, f: &FqParams) -> bool {
    let Some(det) = gamma.unit_det(f) else {
        return false;
    };
    if !group.allows_det(det, f) {
        return false;
    }
    let Some(n) = group.level() else {
        return true;
    };
    let zero_mod = |x: &PolyA| x.rem(n, f).is_zero();
    let one_mod = |x: &PolyA| x.sub(&PolyA::one(), f).rem(n, f).is_zero();
    match group.family() {
        Family::Full => true,
        Family::Gamma0 => zero_mod(&gamma.c),
        Family::Gamma1 => one_mod(&gamma.a) && zero_mod(&gamma.c),
        Family::GammaN => {
            one_mod(&gamma.a) && zero_mod(&gamma.b) && zero_mod(&gamma.c) && one_mod(&gamma.d)
        }
    }
}

/// Order of `{det g : g in G}` as a subgroup of F_q^x.
pub fn det_image_order(group: &GroupSpec, f: &FqParams) -> Result<u32> {
    group.restricted_order(f)
}

/// `[G : G_2]` for a group containing the diagonal matrices.
pub fn index_gamma2(group: &GroupSpec, f: &FqParams) -> Result<u32> {
    if group.family() == Family::GammaN {
        return Err(Error::Precondition(
            "Gamma(N) contains no non-scalar diagonal matrices".into(),
        ));
    }
    if group.det_restriction() != DetRestriction::All {
        return Err(Error::Precondition(
            "index_gamma2 needs the full determinant image".into(),
        ));
    }
    Ok(det_image_order(group, f)? / det_image_order(&group.gamma2(f)?, f)?)
}

/// `(g 0; 0 1)` with `g` the fixed generator of F_q^x, a representative of
/// the non-trivial coset of `G_2` in `G` for G = GL_2(A) or Gamma_0(N).
pub fn coset_rep_nonsquare(f: &FqParams) -> Mat2 {
    Mat2::diag(f.generator(), FqElem::ONE)
}

/// `[outer : inner]` for two determinant restrictions of one family and
/// level, via `Gamma / Gamma' = det(Gamma) / det(Gamma')`.
pub fn quotient_order(outer: &GroupSpec, inner: &GroupSpec, f: &FqParams) -> Result<u32> {
    if outer.family() != inner.family() || outer.level() != inner.level() {
        return Err(Error::Precondition(
            "quotient_order needs the same family and level".into(),
        ));
    }
    let (n, m) = (det_image_order(outer, f)?, det_image_order(inner, f)?);
    // subgroups of a cyclic group are nested iff their orders divide
    if n % m != 0 {
        return Err(Error::Precondition(format!(
            "determinant image of order {m} is not contained in one of order {n}"
        )));
    }
    Ok(n / m)
}

/// A finite set of elements of `group`: elementary matrices whose free entry
/// is `c T^i` with `i <= max_deg`, compatible with the family's shape, plus
/// the diagonal matrices the group contains. Words in these are used as
/// random samples and their reductions generate the image mod the level.
pub fn sample_generators(group: &GroupSpec, max_deg: usize, f: &FqParams) -> Vec<Mat2> {
    let one = PolyA::one();
    let level = group.level().cloned().unwrap_or_else(|| one.clone());
    let mut out = Vec::new();
    for i in 0..=max_deg {
        for c in f.units() {
            let x = PolyA::monomial(c, i);
            let nx = x.mul(&level, f);
            let (up, low) = match group.family() {
                Family::Full => (x.clone(), x),
                Family::Gamma0 | Family::Gamma1 => (x, nx),
                Family::GammaN => (nx.clone(), nx),
            };
            out.push(Mat2::upper(up));
            out.push(Mat2::lower(low));
        }
    }
    let delta = group.det_generator(f);
    match group.family() {
        Family::Full | Family::Gamma0 => {
            out.push(Mat2::diag(delta, FqElem::ONE));
            for u in f.units() {
                out.push(Mat2::diag(u, f.inv(u)));
            }
        }
        Family::Gamma1 => out.push(Mat2::diag(FqElem::ONE, delta)),
        Family::GammaN => {}
    }
    out.retain(|m| *m != Mat2::identity());
    out.sort();
    out.dedup();
    out
}
