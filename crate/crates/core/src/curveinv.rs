//! Cusps, elliptic witnesses and parity of a congruence subgroup, and the
//! invariants of the two genus-zero curves used by the divisor builder.
//!
//! Cusps are orbits of primitive vectors of (A/N)^2 (column vectors, left
//! action) under the image of the group mod N together with the scalars
//! F_q^x. Elliptic points are detected through matrices whose fixed-point
//! quadratic `c z^2 + (d - a) z - b` is irreducible over K_inf.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::str::FromStr;

use crate::congruence::{member, DetRestriction, Family, GroupSpec, Mat2};
use crate::error::{Error, Result};
use crate::ffarith::{
    poly_from_index, poly_index, polys_below_degree, quad_irreducible_kinf, FqElem, FqParams,
    PolyA, RatK, DEFAULT_PREC,
};

/// Largest `|(A/N)^2|` the cusp enumeration will touch.
pub const MAX_VECTORS: u64 = 1 << 22;
/// Largest number of matrices the elliptic search will test.
pub const MAX_CANDIDATES: u64 = 1 << 22;

/// All `(u, v)` in `(A/N)^2` with `gcd(u, v, N) = 1`, residues of degree
/// below `deg N`, ordered by their index.
pub fn primitive_vectors(n: &PolyA, f: &FqParams) -> Result<Vec<(PolyA, PolyA)>> {
    let deg = level_degree(n)?;
    let size = residue_count(deg, f)?;
    let residues: Vec<PolyA> = polys_below_degree(deg, f).collect();
    debug_assert_eq!(residues.len() as u64, size);
    let mut out = Vec::new();
    for u in &residues {
        let g = u.gcd(n, f);
        for v in &residues {
            if g.gcd(v, f) == PolyA::one() {
                out.push((u.clone(), v.clone()));
            }
        }
    }
    Ok(out)
}

fn level_degree(n: &PolyA) -> Result<usize> {
    match n.degree() {
        Some(d) if d >= 1 => Ok(d),
        _ => Err(Error::Precondition("level must be non-constant".into())),
    }
}

/// `|A/N| = q^deg N`, guarded so that `(A/N)^2` stays within [`MAX_VECTORS`].
fn residue_count(deg: usize, f: &FqParams) -> Result<u64> {
    let size = (f.q() as u64)
        .checked_pow(deg as u32)
        .filter(|s| s.checked_mul(*s).is_some_and(|s2| s2 <= MAX_VECTORS))
        .ok_or_else(|| Error::WorkBound(format!("(A/N)^2 for q={} and deg N={deg}", f.q())))?;
    Ok(size)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspSet {
    /// Level the orbits were computed at (T for GL_2(A)).
    pub level: PolyA,
    /// Minimal vector of each orbit, in increasing order.
    pub reps: Vec<(PolyA, PolyA)>,
    pub orbit_sizes: Vec<usize>,
    pub count: usize,
}

impl CuspSet {
    /// Whether the cusp with index `i` is the one at infinity, i.e. its orbit
    /// contains the column vector `(1, 0)`.
    pub fn contains_infinity(&self, i: usize) -> bool {
        // Outside GL_2(A) the image mod N is upper triangular, so the orbit of
        // (1, 0) only holds vectors (x, 0) and (1, 0) is its smallest member.
        self.count == 1 || self.reps[i] == (PolyA::one(), PolyA::zero())
    }
}

/// Generators of the image of `group` in GL_2(A/N), plus the scalars.
fn image_generators(group: &GroupSpec, n: &PolyA, f: &FqParams) -> Vec<Mat2> {
    let deg = n.degree().unwrap_or(0);
    let delta = group.det_generator(f);
    let mut gens = Vec::new();
    let units: Vec<PolyA> = polys_below_degree(deg, f)
        .filter(|u| u.gcd(n, f) == PolyA::one())
        .collect();
    let elementary = |gens: &mut Vec<Mat2>, lower: bool| {
        for i in 0..deg {
            for c in f.units() {
                let x = PolyA::monomial(c, i);
                gens.push(if lower {
                    Mat2::lower(x)
                } else {
                    Mat2::upper(x)
                });
            }
        }
    };
    let unit_diagonals = |gens: &mut Vec<Mat2>| {
        let order = units.len() as u32;
        for u in &units {
            let inv = pow_mod(u, order - 1, n, f);
            gens.push(Mat2::new(u.clone(), PolyA::zero(), PolyA::zero(), inv));
        }
    };
    match group.family() {
        Family::Full => {
            elementary(&mut gens, false);
            elementary(&mut gens, true);
            unit_diagonals(&mut gens);
            gens.push(Mat2::diag(delta, FqElem::ONE));
        }
        Family::Gamma0 => {
            elementary(&mut gens, false);
            unit_diagonals(&mut gens);
            gens.push(Mat2::diag(delta, FqElem::ONE));
        }
        Family::Gamma1 => {
            elementary(&mut gens, false);
            gens.push(Mat2::diag(FqElem::ONE, delta));
        }
        Family::GammaN => {}
    }
    for c in f.units() {
        gens.push(Mat2::diag(c, c));
    }
    gens.sort();
    gens.dedup();
    gens
}

fn pow_mod(x: &PolyA, mut e: u32, n: &PolyA, f: &FqParams) -> PolyA {
    let mut base = x.rem(n, f);
    let mut acc = PolyA::one().rem(n, f);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base, f).rem(n, f);
        }
        base = base.mul(&base, f).rem(n, f);
        e >>= 1;
    }
    acc
}

/// Orbits of primitive vectors under the group's image mod the level and
/// F_q^x. GL_2(A) is handled at level T.
pub fn cusps(group: &GroupSpec, f: &FqParams) -> Result<CuspSet> {
    Ok(cusp_orbits(group, f)?.0)
}

/// [`cusps`] together with the orbit number of every vector of `(A/N)^2`,
/// indexed by `index(u) q^deg N + index(v)`; non-primitive vectors get
/// `usize::MAX`.
pub fn cusp_orbits(group: &GroupSpec, f: &FqParams) -> Result<(CuspSet, Vec<usize>)> {
    let n = match group.level() {
        Some(n) => n.clone(),
        None => PolyA::t(),
    };
    let deg = level_degree(&n)?;
    let size = residue_count(deg, f)?;
    let gens = image_generators(group, &n, f);
    let residues: Vec<PolyA> = (0..size).map(|i| poly_from_index(i, deg, f)).collect();
    let index = |x: &PolyA, y: &PolyA| (poly_index(x, f) * size + poly_index(y, f)) as usize;

    let prim = primitive_vectors(&n, f)?;
    let mut label = vec![usize::MAX; (size * size) as usize];
    let mut reps = Vec::new();
    let mut orbit_sizes = Vec::new();
    for (x0, y0) in &prim {
        let start = index(x0, y0);
        if label[start] != usize::MAX {
            continue;
        }
        let orbit = reps.len();
        label[start] = orbit;
        let mut queue = VecDeque::from([start]);
        let mut count = 0;
        while let Some(i) = queue.pop_front() {
            count += 1;
            let x = &residues[i / size as usize];
            let y = &residues[i % size as usize];
            for g in &gens {
                let nx = g.a.mul(x, f).add(&g.b.mul(y, f), f).rem(&n, f);
                let ny = g.c.mul(x, f).add(&g.d.mul(y, f), f).rem(&n, f);
                let j = index(&nx, &ny);
                if label[j] == usize::MAX {
                    label[j] = orbit;
                    queue.push_back(j);
                }
            }
        }
        reps.push((x0.clone(), y0.clone()));
        orbit_sizes.push(count);
    }
    let set = CuspSet {
        level: n,
        count: reps.len(),
        reps,
        orbit_sizes,
    };
    Ok((set, label))
}

/// A non-scalar group element with an irreducible fixed-point quadratic
/// `z^2 + quad_b z + quad_c` over K_inf.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EllipticWitness {
    pub gamma: Mat2,
    pub quad_b: RatK,
    pub quad_c: RatK,
    pub det: FqElem,
    pub det_is_square: bool,
}

/// Normalized fixed-point quadratic of `gamma`, `None` when `c = 0`.
pub fn fixed_point_quadratic(gamma: &Mat2, f: &FqParams) -> Option<(RatK, RatK)> {
    if gamma.c.is_zero() {
        return None;
    }
    let b = RatK::new(gamma.d.sub(&gamma.a, f), gamma.c.clone(), f).ok()?;
    let c = RatK::new(gamma.b.neg(f), gamma.c.clone(), f).ok()?;
    Some((b, c))
}

/// Exhaustive search over the family's matrix shape with free parameters of
/// degree at most `deg_bound`:
///
/// - Gamma_1(N): `(aN + 1, b; cN, d)`
/// - Gamma_0(N): `(a, b; cN, d)`
/// - GL_2(A): `(a, b; c, d)`
///
/// Witnesses are returned sorted by matrix entries.
pub fn elliptic_search(
    group: &GroupSpec,
    deg_bound: u32,
    f: &FqParams,
) -> Result<Vec<EllipticWitness>> {
    if group.family() == Family::GammaN {
        return Err(Error::Unsupported("elliptic search for Gamma(N)".into()));
    }
    let len = deg_bound as usize + 1;
    let per_entry = (f.q() as u64).checked_pow(len as u32);
    let total = per_entry.and_then(|n| n.checked_pow(4));
    if total.is_none_or(|t| t > MAX_CANDIDATES) {
        return Err(Error::WorkBound(format!(
            "elliptic search box for q={} and degree bound {deg_bound}",
            f.q()
        )));
    }
    let params: Vec<PolyA> = polys_below_degree(len, f).collect();
    let one = PolyA::one();
    let level = group.level().cloned().unwrap_or_else(|| one.clone());
    let shape_a = |a: &PolyA| match group.family() {
        Family::Gamma1 => a.mul(&level, f).add(&one, f),
        _ => a.clone(),
    };
    let shape_c = |c: &PolyA| match group.family() {
        Family::Full => c.clone(),
        _ => c.mul(&level, f),
    };

    let mut out = Vec::new();
    for c in params.iter().filter(|c| !c.is_zero()) {
        let cc = shape_c(c);
        for a in &params {
            let aa = shape_a(a);
            for d in &params {
                let ad = aa.mul(d, f);
                for b in &params {
                    // the determinant must be a nonzero constant
                    let det = ad.sub(&b.mul(&cc, f), f);
                    if det.degree() != Some(0) {
                        continue;
                    }
                    let gamma = Mat2::new(aa.clone(), b.clone(), cc.clone(), d.clone());
                    if let Some(w) = witness(gamma, group, f)? {
                        out.push(w);
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

fn witness(gamma: Mat2, group: &GroupSpec, f: &FqParams) -> Result<Option<EllipticWitness>> {
    if gamma.is_scalar() || !member(&gamma, group, f) {
        return Ok(None);
    }
    let Some((quad_b, quad_c)) = fixed_point_quadratic(&gamma, f) else {
        return Ok(None);
    };
    if !quad_irreducible_kinf(&quad_b, &quad_c, DEFAULT_PREC, f)? {
        return Ok(None);
    }
    let det = gamma.unit_det(f).expect("member has unit determinant");
    Ok(Some(EllipticWitness {
        det_is_square: f.is_square(det)?,
        gamma,
        quad_b,
        quad_c,
        det,
    }))
}

/// Witnesses grouped by their fixed-point quadratic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticClass {
    pub quad_b: RatK,
    pub quad_c: RatK,
    pub witnesses: usize,
    pub square_witnesses: usize,
}

pub fn elliptic_classes(witnesses: &[EllipticWitness]) -> Vec<EllipticClass> {
    let mut keyed: Vec<(&RatK, &RatK, bool)> = witnesses
        .iter()
        .map(|w| (&w.quad_b, &w.quad_c, w.det_is_square))
        .collect();
    keyed.sort();
    let mut out: Vec<EllipticClass> = Vec::new();
    for (b, c, sq) in keyed {
        match out.last_mut() {
            Some(last) if &last.quad_b == b && &last.quad_c == c => {
                last.witnesses += 1;
                last.square_witnesses += sq as usize;
            }
            _ => out.push(EllipticClass {
                quad_b: b.clone(),
                quad_c: c.clone(),
                witnesses: 1,
                square_witnesses: sq as usize,
            }),
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parity {
    Square,
    NonSquare { witness: EllipticWitness },
    NoWitnessFound { bound: u32 },
}

impl Parity {
    pub fn name(&self) -> &'static str {
        match self {
            Parity::Square => "Square",
            Parity::NonSquare { .. } => "NonSquare",
            Parity::NoWitnessFound { .. } => "NoWitnessFound",
        }
    }
}

/// Classify `group` from the witnesses found up to `deg_bound`. A Square
/// verdict only covers the searched box.
pub fn parity(group: &GroupSpec, deg_bound: u32, f: &FqParams) -> Result<Parity> {
    let witnesses = elliptic_search(group, deg_bound, f)?;
    Ok(parity_of(&witnesses, deg_bound))
}

pub fn parity_of(witnesses: &[EllipticWitness], bound: u32) -> Parity {
    if witnesses.is_empty() {
        return Parity::NoWitnessFound { bound };
    }
    match witnesses.iter().find(|w| !w.det_is_square) {
        Some(w) => Parity::NonSquare { witness: w.clone() },
        None => Parity::Square,
    }
}

/// `[Gamma_e : (Gamma_2)_e]`.
pub fn stabilizer_index(p: &Parity) -> Result<u32> {
    match p {
        Parity::Square => Ok(1),
        Parity::NonSquare { .. } => Ok(2),
        Parity::NoWitnessFound { bound } => Err(Error::Undecided(*bound)),
    }
}

/// The two curves whose invariants are fixed in closed form.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    /// GL_2(A)_2
    Gl2A2,
    /// Gamma_0(T)_2
    Gamma0T2,
}

impl Preset {
    pub const ALL: [Preset; 2] = [Preset::Gl2A2, Preset::Gamma0T2];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Gl2A2 => "GL2A_2",
            Preset::Gamma0T2 => "Gamma0T_2",
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown preset {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticPoint {
    pub quad_b: RatK,
    pub quad_c: RatK,
    /// Stabilizer order in the group modulo scalars.
    pub stab_order: u32,
    /// The same for the square-determinant subgroup.
    pub stab_order_gamma2: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveInvariants {
    pub q: u32,
    pub group: GroupSpec,
    pub genus: u32,
    pub cusps: CuspSet,
    pub cusp_stab_orders: Vec<u32>,
    pub elliptic_points: Vec<EllipticPoint>,
    /// Parity of the group whose square-determinant part is `group`.
    pub parity: Parity,
}

impl CurveInvariants {
    /// Every stabilizer order, cusps first.
    pub fn stabilizer_orders(&self) -> Vec<u32> {
        let mut out = self.cusp_stab_orders.clone();
        for e in &self.elliptic_points {
            out.push(e.stab_order);
            out.push(e.stab_order_gamma2);
        }
        out
    }

    /// All stabilizer orders divide `q^2 - 1` and are prime to `p`.
    pub fn is_tame(&self, f: &FqParams) -> bool {
        let big = f.q() * f.q() - 1;
        self.stabilizer_orders()
            .into_iter()
            .all(|o| o > 0 && big.is_multiple_of(o) && o % f.p() != 0)
    }
}

/// Invariants of a preset curve over F_q. The parity comes from the elliptic
/// search at degree bound 0.
pub fn assemble_invariants(preset: Preset, f: &FqParams) -> Result<CurveInvariants> {
    let q = f.q();
    match preset {
        Preset::Gl2A2 => {
            let full = GroupSpec::full();
            let witnesses = elliptic_search(&full, 0, f)?;
            let parity = parity_of(&witnesses, 0);
            let index = stabilizer_index(&parity)?;
            let first = witnesses.first().expect("parity is decided");
            let group = full.gamma2(f)?;
            Ok(CurveInvariants {
                q,
                cusps: cusps(&group, f)?,
                group,
                genus: 0,
                cusp_stab_orders: vec![(q - 1) / 2],
                elliptic_points: vec![EllipticPoint {
                    quad_b: first.quad_b.clone(),
                    quad_c: first.quad_c.clone(),
                    stab_order: q + 1,
                    stab_order_gamma2: (q + 1) / index,
                }],
                parity,
            })
        }
        Preset::Gamma0T2 => {
            let gamma0 = GroupSpec::new(Family::Gamma0, Some(PolyA::t()), DetRestriction::All, f)?;
            let parity = parity(&gamma0, 0, f)?;
            let group = gamma0.gamma2(f)?;
            let cusps = cusps(&group, f)?;
            Ok(CurveInvariants {
                q,
                cusp_stab_orders: vec![(q - 1) / 2; cusps.count],
                cusps,
                group,
                genus: 0,
                elliptic_points: Vec::new(),
                parity,
            })
        }
    }
}

pub fn format_vector(v: &(PolyA, PolyA), f: &FqParams) -> String {
    use crate::ffarith::format_poly;
    format!("({},{})", format_poly(&v.0, f), format_poly(&v.1, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffarith::parse_poly;

    fn group(s: &str, f: &FqParams) -> GroupSpec {
        GroupSpec::parse(s, f).unwrap()
    }

    fn p(f: &FqParams, s: &str) -> PolyA {
        parse_poly(s, f).unwrap()
    }

    #[test]
    fn primitive_vector_counts() {
        let f3 = FqParams::new(3).unwrap();
        assert_eq!(primitive_vectors(&PolyA::t(), &f3).unwrap().len(), 8);
        assert_eq!(primitive_vectors(&p(&f3, "T^2"), &f3).unwrap().len(), 72);
        for q in [5, 7, 9] {
            let f = FqParams::new(q).unwrap();
            let n = (q * q - 1) as usize;
            assert_eq!(primitive_vectors(&PolyA::t(), &f).unwrap().len(), n);
        }
        assert!(primitive_vectors(&PolyA::one(), &f3).is_err());
    }

    #[test]
    fn gamma0_t_has_two_cusps() {
        let f = FqParams::new(5).unwrap();
        let c = cusps(&group("gamma0:T", &f), &f).unwrap();
        assert_eq!(c.count, 2);
        assert_eq!(
            c.reps,
            vec![(PolyA::zero(), PolyA::one()), (PolyA::one(), PolyA::zero())]
        );
        assert!(!c.contains_infinity(0));
        assert!(c.contains_infinity(1));
        assert_eq!(c.orbit_sizes.iter().sum::<usize>(), 24);
    }

    #[test]
    fn full_and_principal_cusps() {
        for q in [3, 5, 7] {
            let f = FqParams::new(q).unwrap();
            assert_eq!(cusps(&GroupSpec::full(), &f).unwrap().count, 1);
            let c = cusps(&group("gammaN:T", &f), &f).unwrap();
            assert_eq!(c.count, q as usize + 1);
        }
    }

    #[test]
    fn gamma0_t_square_part_keeps_two_cusps() {
        for q in [3, 5, 7] {
            let f = FqParams::new(q).unwrap();
            assert_eq!(cusps(&group("gamma0:T!sq", &f), &f).unwrap().count, 2);
        }
    }

    #[test]
    fn cusp_refinement() {
        for q in [3, 5] {
            let f = FqParams::new(q).unwrap();
            for s in [
                "gamma0:T",
                "gamma1:T",
                "gamma0:T^2",
                "gamma1:T^2+1",
                "gamma0:T+1",
            ] {
                let g = group(s, &f);
                let (big, big_label) = cusp_orbits(&g, &f).unwrap();
                let (small, small_label) = cusp_orbits(&g.gamma2(&f).unwrap(), &f).unwrap();
                assert!(small.count >= big.count, "{s}");
                let total: usize = big.orbit_sizes.iter().sum();
                assert_eq!(total, primitive_vectors(&big.level, &f).unwrap().len());
                assert_eq!(small.orbit_sizes.iter().sum::<usize>(), total);
                let mut parent = vec![usize::MAX; small.count];
                for (b, s) in big_label.iter().zip(&small_label) {
                    assert_eq!(*b == usize::MAX, *s == usize::MAX);
                    if *s != usize::MAX {
                        assert!(parent[*s] == usize::MAX || parent[*s] == *b);
                        parent[*s] = *b;
                    }
                }
            }
        }
    }

    #[test]
    fn paper_matrix_is_not_elliptic() {
        // trace 4T is not constant, so the fixed-point quadratic splits at infinity
        let f = FqParams::new(7).unwrap();
        let gamma = Mat2::new(p(&f, "4*T+4"), p(&f, "1"), p(&f, "5*T+2"), p(&f, "3"));
        let (b, c) = fixed_point_quadratic(&gamma, &f).unwrap();
        assert_eq!(b, RatK::new(p(&f, "2*T+4"), p(&f, "T+6"), &f).unwrap());
        assert_eq!(c, RatK::new(p(&f, "4"), p(&f, "T+6"), &f).unwrap());
        let g1 = group("gamma1:4*T+3", &f);
        assert_eq!(witness(gamma, &g1, &f).unwrap(), None);
        assert_eq!(
            parity(&g1, 0, &f).unwrap(),
            Parity::NoWitnessFound { bound: 0 }
        );
    }

    #[test]
    fn full_group_is_non_square() {
        for q in [3, 5, 7] {
            let f = FqParams::new(q).unwrap();
            let ws = elliptic_search(&GroupSpec::full(), 0, &f).unwrap();
            assert!(!ws.is_empty());
            let mut sorted = ws.clone();
            sorted.sort();
            assert_eq!(ws, sorted);
            for w in &ws {
                assert!(!w.gamma.is_scalar());
                assert!(member(&w.gamma, &GroupSpec::full(), &f));
                assert_eq!(
                    fixed_point_quadratic(&w.gamma, &f),
                    Some((w.quad_b.clone(), w.quad_c.clone()))
                );
            }
            let par = parity_of(&ws, 0);
            assert!(matches!(par, Parity::NonSquare { ref witness } if !witness.det_is_square));
            assert_eq!(stabilizer_index(&par), Ok(2));
        }
    }

    #[test]
    fn every_class_has_a_square_witness() {
        for q in [3, 5, 7] {
            let f = FqParams::new(q).unwrap();
            for s in ["full", "gamma0:T", "gamma1:T", "gamma0:T+1", "gamma1:4*T+3"] {
                let Ok(g) = GroupSpec::parse(s, &f) else {
                    continue;
                };
                let ws = elliptic_search(&g, 0, &f).unwrap();
                for class in elliptic_classes(&ws) {
                    assert!(class.square_witnesses > 0, "q={q} {s}");
                }
            }
        }
    }

    #[test]
    fn linear_level_groups_have_no_constant_witnesses() {
        for q in [3, 5, 7] {
            let f = FqParams::new(q).unwrap();
            for s in ["gamma0:T", "gamma1:T", "gamma0:2*T+1"] {
                assert!(elliptic_search(&group(s, &f), 0, &f).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn search_guards() {
        let f = FqParams::new(7).unwrap();
        assert!(matches!(
            elliptic_search(&group("gammaN:T", &f), 0, &f),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            elliptic_search(&GroupSpec::full(), 3, &f),
            Err(Error::WorkBound(_))
        ));
    }

    #[test]
    fn stabilizer_index_of_undecided() {
        assert_eq!(stabilizer_index(&Parity::Square), Ok(1));
        assert_eq!(
            stabilizer_index(&Parity::NoWitnessFound { bound: 0 }),
            Err(Error::Undecided(0))
        );
    }

    #[test]
    fn preset_invariants() {
        let f5 = FqParams::new(5).unwrap();
        let gl = assemble_invariants(Preset::Gl2A2, &f5).unwrap();
        assert_eq!(gl.elliptic_points[0].stab_order_gamma2, 3);
        assert_eq!(gl.cusp_stab_orders, vec![2]);
        assert_eq!(gl.cusps.count, 1);
        assert_eq!(gl.genus, 0);

        let f3 = FqParams::new(3).unwrap();
        let gl3 = assemble_invariants(Preset::Gl2A2, &f3).unwrap();
        assert_eq!(gl3.elliptic_points[0].stab_order_gamma2, 2);
        assert_eq!(gl3.cusp_stab_orders, vec![1]);

        let g0 = assemble_invariants(Preset::Gamma0T2, &f3).unwrap();
        assert_eq!(g0.cusp_stab_orders, vec![1, 1]);
        assert!(g0.elliptic_points.is_empty());

        for q in [3, 5, 7, 9, 11] {
            let f = FqParams::new(q).unwrap();
            for preset in Preset::ALL {
                assert!(assemble_invariants(preset, &f).unwrap().is_tame(&f));
            }
        }
        assert_eq!("GL2A_2".parse::<Preset>(), Ok(Preset::Gl2A2));
        assert!("X".parse::<Preset>().is_err());
    }
}
