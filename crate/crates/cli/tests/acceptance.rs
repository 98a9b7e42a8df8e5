//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_FAILURES` are reproduced faithfully and are
//! expected to fail; the README explains why. The target fails if any other
//! criterion fails or if a known failure starts passing.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use drinfeld_cli::report::{Payload, Report};
use drinfeld_core::congruence::{
    coset_rep_nonsquare, member, quotient_order, sample_generators, Family, GroupSpec, Mat2,
};
use drinfeld_core::curveinv::{cusps, fixed_point_quadratic, Preset};
use drinfeld_core::ffarith::{
    is_square_kinf, laurent_expand, parse_poly, quad_irreducible_kinf, FqElem, FqParams,
    LaurentKInf, PolyA, RatK,
};
use drinfeld_core::qdiv::{h0, h0_weighted, presentation, preset_divisor};
use drinfeld_core::useries::{split, USeries};
use drinfeld_core::weights::{dim_gamma0_t, type_solutions, valence_check, VanishingProfile};
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KNOWN_FAILURES: &[&str] = &["1", "3b"];

type Criterion = (&'static str, &'static str, fn() -> Outcome, Duration);

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn field(q: u64) -> FqParams {
    FqParams::new(q).unwrap()
}

fn poly(f: &FqParams, s: &str) -> PolyA {
    parse_poly(s, f).unwrap()
}

fn ratk(f: &FqParams, num: &str, den: &str) -> RatK {
    RatK::new(poly(f, num), poly(f, den), f).unwrap()
}

fn drinfeld_json(args: &[&str]) -> Report {
    let out = Command::new(env!("CARGO_BIN_EXE_drinfeld"))
        .args(args)
        .args(["--format", "json"])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn parity_reproduction() -> Outcome {
    let f = field(7);
    let r = drinfeld_json(&[
        "--q",
        "7",
        "parity",
        "--group",
        "gamma1:4*T+3",
        "--deg-bound",
        "0",
    ]);
    let Payload::Parity(p) = r.payload else {
        return fail("wrong payload");
    };
    let e = drinfeld_json(&[
        "--q",
        "7",
        "ellsearch",
        "--group",
        "gamma1:4*T+3",
        "--deg-bound",
        "0",
    ]);
    let Payload::Ellsearch(e) = e.payload else {
        return fail("wrong payload");
    };
    let listed = e
        .witnesses
        .iter()
        .any(|w| w.gamma == ["4*T+4", "1", "5*T+2", "3"].map(String::from) && w.det == "3");

    // independent look at the expected witness
    let gamma = Mat2::new(
        poly(&f, "4*T+4"),
        poly(&f, "1"),
        poly(&f, "5*T+2"),
        poly(&f, "3"),
    );
    let group = GroupSpec::parse("gamma1:4*T+3", &f).unwrap();
    let (b, c) = fixed_point_quadratic(&gamma, &f).unwrap();
    let quad_matches = b == ratk(&f, "2*T+4", "T+6") && c == ratk(&f, "4", "T+6");
    let in_group = member(&gamma, &group, &f);
    let irreducible = quad_irreducible_kinf(&b, &c, 32, &f).unwrap();

    let detail = format!(
        "classification={}, witness listed={listed}, gamma in group={in_group}, quadratic matches={quad_matches}, quadratic irreducible over K_inf={irreducible}",
        p.classification
    );
    if p.classification == "NonSquare" && listed && quad_matches {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn congruence_lemma() -> Outcome {
    for q in [3u32, 5, 7, 9, 11] {
        for k in 0..=200u64 {
            let mut got = type_solutions(k, q);
            got.sort();
            let brute: Vec<u32> = (0..q - 1)
                .filter(|&l| (2 * l as u64) % (q as u64 - 1) == k % (q as u64 - 1))
                .collect();
            if got != brute {
                return fail(format!("q={q} k={k}: {got:?} vs {brute:?}"));
            }
        }
    }
    pass("q in {3,5,7,9,11}, k <= 200")
}

fn gamma0_summed() -> Outcome {
    for q in [3u32, 5, 7] {
        let d = preset_divisor(Preset::Gamma0T2, &field(q.into())).unwrap();
        for k in (0..=60u64).step_by(2) {
            let lhs = h0(&d.scale(Rational64::from_integer(k as i64 / 2)));
            let rhs: u64 = type_solutions(k, q)
                .iter()
                .map(|&l| dim_gamma0_t(k, l, q))
                .sum();
            if lhs != rhs {
                return fail(format!("q={q} k={k}: h0={lhs}, sum of dims={rhs}"));
            }
        }
    }
    pass("q in {3,5,7}, even k <= 60")
}

fn gamma0_per_type() -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    for q in [3u32, 5, 7] {
        for k in (2..=60u64).step_by(2) {
            for l in type_solutions(k, q) {
                total += 1;
                let h = h0_weighted(Preset::Gamma0T2, q, k, l).unwrap();
                let d = dim_gamma0_t(k, l, q);
                if h != d {
                    bad.push(format!("q={q} k={k} l={l}: h0={h} dim={d}"));
                }
            }
        }
    }
    if bad.is_empty() {
        pass(format!("{total} (q, k, l) triples"))
    } else {
        fail(format!(
            "{} of {total} triples disagree, e.g. {}",
            bad.len(),
            bad[..bad.len().min(3)].join("; ")
        ))
    }
}

fn gl2_dimensions() -> Outcome {
    for q in [3u64, 5, 7] {
        let d = preset_divisor(Preset::Gl2A2, &field(q)).unwrap();
        for k in (0..=60u64).step_by(2) {
            let lhs = h0(&d.scale(Rational64::from_integer(k as i64 / 2)));
            let mut count = 0;
            for a in 0..=k {
                for b in 0..=k {
                    if a * (q - 1) + b * (q + 1) == k {
                        count += 1;
                    }
                }
            }
            if lhs != count {
                return fail(format!("q={q} k={k}: h0={lhs}, monomials={count}"));
            }
        }
    }
    pass("q in {3,5,7}, even k <= 60")
}

fn gl2_presentation() -> Outcome {
    for q in [3u64, 5, 7] {
        let d = preset_divisor(Preset::Gl2A2, &field(q)).unwrap();
        let p = presentation(&d, 4 * (q + 1)).unwrap();
        let w: Vec<u64> = p.generators.iter().map(|g| g.weight).collect();
        if w != vec![q - 1, q + 1] || !p.relations.is_empty() {
            return fail(format!(
                "q={q}: generators {w:?}, {} relations",
                p.relations.len()
            ));
        }
    }
    pass("generators at q-1, q+1 and no relations for q in {3,5,7}")
}

fn gamma0_presentation() -> Outcome {
    for q in [3u64, 5] {
        let d = preset_divisor(Preset::Gamma0T2, &field(q)).unwrap();
        let p = presentation(&d, 4 * (q + 1)).unwrap();
        let mut w: Vec<u64> = p.generators.iter().map(|g| g.weight).collect();
        w.sort();
        let mut want = vec![2, q - 1, q - 1];
        want.sort();
        if w != want || p.relations.len() != 1 {
            return fail(format!(
                "q={q}: generators {w:?}, {} relations",
                p.relations.len()
            ));
        }
        let rel = &p.relations[0];
        if rel.weight != 2 * (q - 1) || rel.terms.len() != 2 {
            return fail(format!("q={q}: relation at weight {}", rel.weight));
        }
        // one term U*V with U, V of weight q-1, the other Z^(q-1) with Z of weight 2
        let ok = rel.terms.iter().any(|(uv, _)| {
            let ones: BTreeSet<usize> = (0..uv.len()).filter(|&i| uv[i] == 1).collect();
            ones.len() == 2
                && uv.iter().sum::<u64>() == 2
                && ones.iter().all(|&i| p.generators[i].weight == q - 1)
                && rel.terms.iter().any(|(z, _)| {
                    let idx: Vec<usize> = (0..z.len()).filter(|&i| z[i] > 0).collect();
                    idx.len() == 1
                        && z[idx[0]] == q - 1
                        && !ones.contains(&idx[0])
                        && p.generators[idx[0]].weight == 2
                })
        });
        if !ok {
            return fail(format!("q={q}: relation support {:?}", rel.terms));
        }
    }
    pass("UV - Z^(q-1) shape for q in {3,5}")
}

/// Lines through the origin in F_q^2, counted by normalizing vectors.
fn line_count(f: &FqParams) -> usize {
    let mut seen = BTreeSet::new();
    for x in f.elements() {
        for y in f.elements() {
            if x.is_zero() && y.is_zero() {
                continue;
            }
            let s = if x.is_zero() { f.inv(y) } else { f.inv(x) };
            seen.insert((f.mul(s, x), f.mul(s, y)));
        }
    }
    seen.len()
}

fn cusp_counts() -> Outcome {
    let f = field(5);
    let g0 = cusps(&GroupSpec::parse("gamma0:T", &f).unwrap(), &f).unwrap();
    let one = PolyA::one();
    let reps_ok = g0.count == 2
        && g0.reps.contains(&(one.clone(), PolyA::zero()))
        && g0.reps.contains(&(PolyA::zero(), one));
    if !reps_ok {
        return fail(format!("Gamma0(T): {} cusps", g0.count));
    }
    let full = cusps(&GroupSpec::full(), &f).unwrap();
    if full.count != 1 {
        return fail(format!("full: {} cusps", full.count));
    }
    for q in [3u64, 5, 7] {
        let f = field(q);
        let n = cusps(&GroupSpec::parse("gammaN:T", &f).unwrap(), &f)
            .unwrap()
            .count;
        let oracle = line_count(&f);
        if n != oracle || n as u64 != q + 1 {
            return fail(format!("Gamma(T), q={q}: {n} cusps, oracle {oracle}"));
        }
    }
    pass("Gamma0(T): 2, full: 1, Gamma(T): q+1")
}

fn random_series(rng: &mut ChaCha8Rng, f: &FqParams, prec: usize) -> LaurentKInf {
    let val = rng.gen_range(-8i64..8);
    let mut coeffs: Vec<FqElem> = (0..prec)
        .map(|_| f.elem(rng.gen_range(0..f.q())).unwrap())
        .collect();
    while coeffs[0].is_zero() {
        coeffs[0] = f.elem(rng.gen_range(0..f.q())).unwrap();
    }
    LaurentKInf::from_window(val, coeffs)
}

fn random_ratk(rng: &mut ChaCha8Rng, f: &FqParams) -> RatK {
    let mut coeffs = |n: usize| -> Vec<FqElem> {
        (0..n)
            .map(|_| f.elem(rng.gen_range(0..f.q())).unwrap())
            .collect()
    };
    let num = PolyA::from_coeffs(coeffs(3));
    let mut den = coeffs(2);
    den.push(FqElem::ONE);
    RatK::new(num, PolyA::from_coeffs(den), f).unwrap()
}

fn eval_quad(z: &LaurentKInf, b: &LaurentKInf, c: &LaurentKInf, f: &FqParams) -> LaurentKInf {
    z.mul(z, f).add(&b.mul(z, f), f).add(c, f)
}

/// Newton iteration from `z`; true when it lands on a root to `target`.
fn newton_converges(
    mut z: LaurentKInf,
    b: &LaurentKInf,
    c: &LaurentKInf,
    target: i64,
    f: &FqParams,
) -> bool {
    for _ in 0..12 {
        let fz = eval_quad(&z, b, c, f);
        if fz.valuation().is_none_or(|v| v >= target) {
            return true;
        }
        let dz = z.scale(f.from_int(2), f).add(b, f);
        let Ok(inv) = dz.inv(f) else { return false };
        z = z.sub(&fz.mul(&inv, f), f);
    }
    false
}

/// Root of `z^2 + bz + c` in K_inf, searched digit by digit from each
/// candidate valuation with Newton iteration tried at every prefix. A prefix
/// ending at exponent `e` is kept only while `v(f(z)) > e + vmin`, which
/// every truncation of a true root satisfies.
fn newton_has_root(b: &RatK, c: &RatK, prec: usize, f: &FqParams) -> bool {
    if c.is_zero() {
        return true;
    }
    let wide = prec + 16;
    let bb = laurent_expand(b, wide, f);
    let cc = laurent_expand(c, wide, f);
    let vc = cc.valuation().unwrap();
    let mut vals = vec![];
    if vc % 2 == 0 {
        vals.push(vc / 2);
    }
    if let Some(vb) = bb.valuation() {
        vals.push(vb);
        vals.push(vc - vb);
    }
    // b = 0 and v(c) odd leaves no possible root valuation
    let Some(&vmin) = vals.iter().min() else {
        return false;
    };
    let target = 2 * vmin + prec as i64;
    const DEPTH: usize = 8;
    for &v in &vals {
        // prefixes as digit windows starting at s^v
        let mut frontier: Vec<Vec<FqElem>> = f.units().map(|a| vec![a]).collect();
        for _ in 0..DEPTH {
            let mut next = Vec::new();
            for digits in frontier {
                let mut w = digits.clone();
                w.resize(wide, FqElem::ZERO);
                let z = LaurentKInf::from_window(v, w);
                let e = v + digits.len() as i64 - 1;
                let fz = eval_quad(&z, &bb, &cc, f);
                if fz.valuation().is_some_and(|vf| vf <= e + vmin) {
                    continue;
                }
                if newton_converges(z, &bb, &cc, target, f) {
                    return true;
                }
                for d in f.elements() {
                    let mut longer = digits.clone();
                    longer.push(d);
                    next.push(longer);
                }
            }
            frontier = next;
        }
    }
    false
}

fn kinf_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_0008);
    let prec = 30;
    let mut disagreements = Vec::new();
    let mut reducible = 0;
    for i in 0..1000 {
        let f = field([3u64, 5, 7, 9][i % 4]);
        let x = random_series(&mut rng, &f, prec);
        let sq = x.mul(&x, &f);
        if !is_square_kinf(&sq, &f).unwrap() {
            disagreements.push(format!("x^2 not square, q={}", f.q()));
        }
        let v = x.valuation().unwrap();
        let parity = v % 2 == 0 && f.is_square(x.leading().unwrap()).unwrap();
        if is_square_kinf(&x, &f).unwrap() != parity {
            disagreements.push(format!("valuation criterion, q={}", f.q()));
        }
        let b = random_ratk(&mut rng, &f);
        let c = random_ratk(&mut rng, &f);
        let irr = quad_irreducible_kinf(&b, &c, prec, &f).unwrap();
        reducible += !irr as usize;
        if irr == newton_has_root(&b, &c, prec, &f) {
            disagreements.push(format!("z^2 + ({:?})z + ({:?}) over q={}", b, c, f.q()));
        }
    }
    if disagreements.is_empty() {
        pass(format!(
            "1000 series and 1000 quadratics ({reducible} reducible), 0 disagreements"
        ))
    } else {
        fail(format!(
            "{} disagreements: {}",
            disagreements.len(),
            disagreements.join(" | ")
        ))
    }
}

fn split_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_0009);
    let prec = 24;
    let mut failures = 0;
    for q in [3u64, 5, 7] {
        let f = field(q);
        let m = q - 1;
        for _ in 0..500 {
            let k = 2 * rng.gen_range(1..=20u64);
            let coeffs: Vec<RatK> = (0..prec)
                .map(|n| {
                    if (2 * n as u64) % m == k % m && rng.gen_bool(0.6) {
                        random_ratk(&mut rng, &f)
                    } else {
                        RatK::zero()
                    }
                })
                .collect();
            let s = USeries::new(coeffs, k, None, prec);
            let Ok((a, b)) = split(&s, k, q as u32) else {
                failures += 1;
                continue;
            };
            let (la, lb) = (a.type_residue.unwrap(), b.type_residue.unwrap());
            let classes = a.support().all(|n| n as u64 % m == la as u64)
                && b.support().all(|n| n as u64 % m == lb as u64)
                && la != lb
                || q == 3 && la == lb;
            let sum = a.add(&b, &f).unwrap();
            let recombines = sum.coeffs() == s.coeffs();
            let alpha = f.generator();
            let twist_ok = [(&a, la), (&b, lb)].iter().all(|(part, l)| {
                let lhs = part.scale_u(alpha, &f).unwrap();
                let rhs = part.scale(
                    &RatK::from_poly(PolyA::constant(f.pow(alpha, -(*l as i64)))),
                    &f,
                );
                lhs.coeffs() == rhs.coeffs()
            });
            let commutes = {
                let (ta, tb) = split(&s.scale_u(alpha, &f).unwrap(), k, q as u32).unwrap();
                ta.coeffs() == a.scale_u(alpha, &f).unwrap().coeffs()
                    && tb.coeffs() == b.scale_u(alpha, &f).unwrap().coeffs()
            };
            if !(classes && recombines && twist_ok && commutes) {
                failures += 1;
            }
        }
    }
    if failures == 0 {
        pass("500 series per q in {3,5,7}")
    } else {
        fail(format!("{failures} failures"))
    }
}

fn valence() -> Outcome {
    for q in [3u32, 5, 7] {
        let qq = q as u64;
        let base = [
            VanishingProfile {
                k: qq - 1,
                v_e: 1,
                ..Default::default()
            },
            VanishingProfile {
                k: qq + 1,
                v_inf: 1,
                ..Default::default()
            },
            VanishingProfile {
                k: qq * qq - 1,
                v_inf: qq - 1,
                ..Default::default()
            },
        ];
        for p in &base {
            if !valence_check(p, q) {
                return fail(format!("q={q} {p:?} rejected"));
            }
            let mut bumps = Vec::new();
            for delta in [1i64, -1] {
                let step = |x: u64| x.checked_add_signed(delta);
                if let Some(v) = step(p.v_inf) {
                    bumps.push(VanishingProfile {
                        v_inf: v,
                        ..p.clone()
                    });
                }
                if let Some(v) = step(p.v_e) {
                    bumps.push(VanishingProfile {
                        v_e: v,
                        ..p.clone()
                    });
                }
            }
            bumps.push(VanishingProfile {
                v_other: vec![1],
                ..p.clone()
            });
            if let Some(bad) = bumps.iter().find(|b| valence_check(b, q)) {
                return fail(format!("q={q} perturbed {bad:?} accepted"));
            }
        }
    }
    pass("weights q-1, q+1, q^2-1 for q in {3,5,7}; all single perturbations rejected")
}

fn random_word(gens: &[Mat2], rng: &mut ChaCha8Rng, f: &FqParams) -> Mat2 {
    (0..8).fold(Mat2::identity(), |acc, _| {
        let g = &gens[rng.gen_range(0..gens.len())];
        let g = if rng.gen_bool(0.5) {
            g.inverse(f).unwrap()
        } else {
            g.clone()
        };
        acc.mul(&g, f)
    })
}

fn group_laws() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_0011);
    let mut failures = Vec::new();
    let mut checked = 0;
    for q in [3u64, 5, 7] {
        let f = field(q);
        for s in ["full", "gamma0:T", "gamma1:T", "gamma0:T^2+1", "gamma1:T+1"] {
            let g = GroupSpec::parse(s, &f).unwrap();
            let g2 = g.gamma2(&f).unwrap();
            let gens = sample_generators(&g, 1, &f);
            // a member with non-square determinant
            let rep = match g.family() {
                Family::Gamma1 => Mat2::diag(FqElem::ONE, f.generator()),
                _ => coset_rep_nonsquare(&f),
            };
            let rep_inv = rep.inverse(&f).unwrap();
            let mut dets = BTreeSet::new();
            for _ in 0..200 {
                checked += 1;
                let x = random_word(&gens, &mut rng, &f);
                let y = random_word(&gens, &mut rng, &f);
                let z = y.mul(&y, &f); // square determinant
                let conj = x.mul(&z, &f).mul(&x.inverse(&f).unwrap(), &f);
                let normal = member(&z, &g2, &f) && member(&conj, &g2, &f);
                let coset = member(&x, &g2, &f) != member(&rep_inv.mul(&x, &f), &g2, &f);
                if !(member(&x, &g, &f) && normal && coset) {
                    failures.push(format!("{s} q={q}: {}", x.format(&f)));
                }
                dets.insert(x.unit_det(&f).unwrap());
            }
            // image of det in F_q^* / squares, seen from the samples
            let oracle = if dets.iter().any(|d| !f.is_square(*d).unwrap()) {
                2
            } else {
                1
            };
            let got = quotient_order(&g, &g2, &f).unwrap();
            if got != oracle {
                failures.push(format!("{s} q={q}: quotient {got}, sampled {oracle}"));
            }
        }
    }
    if failures.is_empty() {
        pass(format!("{checked} sampled matrices"))
    } else {
        fail(format!("{} failures, e.g. {}", failures.len(), failures[0]))
    }
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (
            "1",
            "parity reproduction",
            parity_reproduction,
            Duration::from_secs(1),
        ),
        (
            "2",
            "congruence lemma oracle",
            congruence_lemma,
            Duration::from_secs(1),
        ),
        (
            "3a",
            "Gamma0(T)_2 dimensions, summed over types",
            gamma0_summed,
            Duration::from_secs(5),
        ),
        (
            "3b",
            "Gamma0(T)_2 dimensions, per type",
            gamma0_per_type,
            Duration::from_secs(5),
        ),
        (
            "4",
            "GL2(A)_2 dimensions",
            gl2_dimensions,
            Duration::from_secs(5),
        ),
        (
            "5",
            "GL2(A)_2 presentation",
            gl2_presentation,
            Duration::from_secs(90),
        ),
        (
            "6",
            "Gamma0(T)_2 presentation",
            gamma0_presentation,
            Duration::from_secs(60),
        ),
        ("7", "cusp counts", cusp_counts, Duration::from_secs(5)),
        (
            "8",
            "K_inf square oracle",
            kinf_oracle,
            Duration::from_secs(60),
        ),
        (
            "9",
            "split round trip",
            split_round_trip,
            Duration::from_secs(60),
        ),
        ("10", "valence checker", valence, Duration::from_secs(1)),
        ("11", "group laws", group_laws, Duration::from_secs(2)),
    ];
    let mut unexpected = 0;
    for (id, name, run, budget) in criteria {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let known = KNOWN_FAILURES.contains(&id);
        let timing = if elapsed > budget {
            " [over time budget]"
        } else {
            ""
        };
        let verdict = if out.ok { "PASS" } else { "FAIL" };
        let note = match (out.ok, known) {
            (false, true) => " (known, see README)",
            (true, true) => " (expected to fail, now passes)",
            _ => "",
        };
        println!(
            "{verdict} {id} {name}: {} ({:.2}s){timing}{note}",
            out.detail,
            elapsed.as_secs_f64()
        );
        if out.ok == known {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
