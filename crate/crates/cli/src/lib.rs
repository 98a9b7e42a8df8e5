//! Command-line front end for `drinfeld-core`.
//!
//! Every subcommand builds a [`report::Report`] and prints it either as a
//! table or as JSON. [`run`] returns the text to print and the exit code.

pub mod report;
mod table;

use std::fmt;

use clap::{Parser, Subcommand, ValueEnum};
use drinfeld_core::congruence::{
    det_image_order, member, quotient_order, sample_generators, GroupSpec, Mat2,
};
use drinfeld_core::curveinv::{
    cusps, elliptic_classes, elliptic_search, parity_of, primitive_vectors, stabilizer_index,
    EllipticWitness, Parity, Preset,
};
use drinfeld_core::ffarith::{
    format_poly, is_square_kinf, parse_poly, FqParams, LaurentKInf, PolyA, RatK,
};
use drinfeld_core::qdiv::{h0, h0_weighted, presentation, preset_divisor};
use drinfeld_core::useries::{split, USeries, DEFAULT_USERIES_PREC};
use drinfeld_core::weights::{dim_gamma0_t, type_solutions, valence_check, VanishingProfile};
use drinfeld_core::Error;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use report::*;

#[derive(Parser, Debug)]
#[command(
    name = "drinfeld",
    version,
    about = "Invariants of Drinfeld modular curves"
)]
pub struct Cli {
    /// Odd prime power.
    #[arg(long, global = true, default_value_t = 5)]
    pub q: u64,
    /// Irreducible polynomial in `x` over F_p defining F_q, e.g. `x^2+1`.
    #[arg(long, global = true)]
    pub modulus: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Square / non-square classification from elliptic witnesses.
    Parity {
        #[arg(long)]
        group: String,
        /// Level, when `--group` is a bare family name.
        #[arg(long)]
        level: Option<String>,
        #[arg(long, default_value_t = 0)]
        deg_bound: u32,
    },
    /// List every elliptic witness in the search box.
    Ellsearch {
        #[arg(long)]
        group: String,
        #[arg(long)]
        level: Option<String>,
        #[arg(long, default_value_t = 0)]
        deg_bound: u32,
    },
    /// Cusp representatives and orbit sizes.
    Cusps {
        #[arg(long)]
        group: String,
        #[arg(long)]
        level: Option<String>,
    },
    /// Dimensions of weight/type pieces against h^0 of the divisor.
    Dims {
        #[arg(long, default_value = "Gamma0T_2")]
        preset: String,
        #[arg(long)]
        k_max: u64,
    },
    /// Generators and relations of the section ring.
    Sectionring {
        #[arg(long, default_value = "GL2A_2")]
        preset: String,
        /// Defaults to `4(q+1)`.
        #[arg(long)]
        max_weight: Option<u64>,
    },
    /// Split a Gamma_2 u-series into its two types.
    Split {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        series: String,
    },
    /// Test a vanishing profile against the valence formula.
    Valence {
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 0)]
        v_inf: u64,
        #[arg(long, default_value_t = 0)]
        v_e: u64,
        /// Comma-separated orders at other points.
        #[arg(long, value_delimiter = ',')]
        v_other: Vec<u64>,
    },
    /// Seeded random checks of the group laws and K_inf squares.
    Selfcheck {
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

/// An error with its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_)
            | Error::InvalidGroup(_)
            | Error::Precondition(_)
            | Error::InvalidOrder(_)
            | Error::ReducibleModulus(_)
            | Error::ZeroInput(_) => 2,
            Error::WorkBound(_) => 3,
            Error::SupportViolation { .. }
            | Error::Unsupported(_)
            | Error::Undecided(_)
            | Error::InsufficientPrecision => 4,
        };
        let message = match &e {
            Error::SupportViolation { exponent } => {
                format!("support violation at exponent {exponent}")
            }
            _ => e.to_string(),
        };
        CliError { code, message }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        message: message.into(),
    }
}

/// Parse arguments and run, returning `(stdout, exit code)`. Errors go to
/// the returned text prefixed with `error:`.
pub fn run_args<I, S>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (e.to_string(), code);
        }
    };
    match run(&cli) {
        Ok(out) => (out, 0),
        Err(e) => (format!("error: {e}\n"), e.code),
    }
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    let f = field(cli)?;
    let report = build_report(cli, &f)?;
    Ok(match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Table => table::render(&report),
    })
}

fn field(cli: &Cli) -> Result<FqParams, CliError> {
    if cli.q.is_multiple_of(2) {
        return Err(Error::InvalidOrder(cli.q).into());
    }
    let Some(src) = &cli.modulus else {
        return Ok(FqParams::new(cli.q)?);
    };
    let base = FqParams::new(cli.q)?;
    let p = base.p();
    let prime = FqParams::new(p.into())?;
    let poly = parse_poly(&src.replace('x', "T"), &prime).map_err(Error::Parse)?;
    let coeffs: Vec<u32> = poly.coeffs().iter().map(|c| c.encoding()).collect();
    let f = FqParams::with_modulus(p, &coeffs)?;
    if f.q() as u64 != cli.q {
        return Err(usage(format!(
            "modulus of degree {} does not give a field of order {}",
            coeffs.len().saturating_sub(1),
            cli.q
        )));
    }
    Ok(f)
}

fn build_report(cli: &Cli, f: &FqParams) -> Result<Report, CliError> {
    let payload = match &cli.command {
        Command::Parity {
            group,
            level,
            deg_bound,
        } => Payload::Parity(cmd_parity(
            &group_spec(group, level.as_deref(), f)?,
            *deg_bound,
            f,
        )?),
        Command::Ellsearch {
            group,
            level,
            deg_bound,
        } => Payload::Ellsearch(cmd_ellsearch(
            &group_spec(group, level.as_deref(), f)?,
            *deg_bound,
            f,
        )?),
        Command::Cusps { group, level } => {
            Payload::Cusps(cmd_cusps(&group_spec(group, level.as_deref(), f)?, f)?)
        }
        Command::Dims { preset, k_max } => {
            Payload::Dims(cmd_dims(parse_preset(preset)?, *k_max, f)?)
        }
        Command::Sectionring { preset, max_weight } => {
            let w = max_weight.unwrap_or(4 * (f.q() as u64 + 1));
            Payload::Sectionring(cmd_sectionring(parse_preset(preset)?, w, f)?)
        }
        Command::Split { k, series } => Payload::Split(cmd_split(*k, series, f)?),
        Command::Valence {
            k,
            v_inf,
            v_e,
            v_other,
        } => Payload::Valence(cmd_valence(*k, *v_inf, *v_e, v_other, f)),
        Command::Selfcheck { samples } => Payload::Selfcheck(cmd_selfcheck(cli.seed, *samples, f)?),
    };
    Ok(Report {
        schema: SCHEMA.to_string(),
        q: f.q(),
        modulus: f.modulus().to_vec(),
        payload,
    })
}

fn parse_preset(s: &str) -> Result<Preset, CliError> {
    Ok(s.parse::<Preset>()?)
}

/// `--group gamma0 --level T` is read as `gamma0:T`.
fn group_spec(group: &str, level: Option<&str>, f: &FqParams) -> Result<GroupSpec, CliError> {
    let text = match level {
        Some(lv) if !group.contains(':') && group != "full" => {
            let (family, suffix) = match group.find('!') {
                Some(i) => group.split_at(i),
                None => (group, ""),
            };
            format!("{family}:{lv}{suffix}")
        }
        Some(_) if group.starts_with("full") => group.to_string(),
        Some(_) => return Err(usage("--level given twice")),
        None => group.to_string(),
    };
    Ok(GroupSpec::parse(&text, f)?)
}

/// `p`, or `(p)` when `p` has more than one term.
fn wrap_poly(p: &PolyA, f: &FqParams) -> String {
    let s = format_poly(p, f);
    if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
        format!("({s})")
    } else {
        s
    }
}

/// `num` for polynomials, otherwise `num/(den)` with `num` parenthesized
/// when it has several terms.
pub fn format_ratk(x: &RatK, f: &FqParams) -> String {
    if x.den().is_constant() {
        return format_poly(x.num(), f);
    }
    format!("{}/{}", wrap_poly(x.num(), f), wrap_poly(x.den(), f))
}

fn witness_row(w: &EllipticWitness, f: &FqParams) -> Witness {
    let g = &w.gamma;
    Witness {
        gamma: [&g.a, &g.b, &g.c, &g.d].map(|p| format_poly(p, f)),
        det: f.format_elem(w.det),
        det_is_square: w.det_is_square,
        quad_b: format_ratk(&w.quad_b, f),
        quad_c: format_ratk(&w.quad_c, f),
    }
}

fn parity_label(p: &Parity) -> String {
    match p {
        Parity::NoWitnessFound { bound } => format!("undecided({bound})"),
        _ => p.name().to_string(),
    }
}

pub fn cmd_parity(
    group: &GroupSpec,
    deg_bound: u32,
    f: &FqParams,
) -> Result<ParityReport, CliError> {
    let witnesses = elliptic_search(group, deg_bound, f)?;
    let parity = parity_of(&witnesses, deg_bound);
    let witness = match &parity {
        Parity::NonSquare { witness } => Some(witness_row(witness, f)),
        _ => None,
    };
    Ok(ParityReport {
        group: group.format(f),
        deg_bound,
        classification: parity_label(&parity),
        stabilizer_index: stabilizer_index(&parity).ok(),
        witness_count: witnesses.len(),
        witness,
    })
}

pub fn cmd_ellsearch(
    group: &GroupSpec,
    deg_bound: u32,
    f: &FqParams,
) -> Result<EllsearchReport, CliError> {
    let witnesses = elliptic_search(group, deg_bound, f)?;
    let classes = elliptic_classes(&witnesses)
        .into_iter()
        .map(|c| EllipticClassRow {
            quad_b: format_ratk(&c.quad_b, f),
            quad_c: format_ratk(&c.quad_c, f),
            witnesses: c.witnesses,
            square_witnesses: c.square_witnesses,
        })
        .collect();
    Ok(EllsearchReport {
        group: group.format(f),
        deg_bound,
        witnesses: witnesses.iter().map(|w| witness_row(w, f)).collect(),
        classes,
    })
}

pub fn cmd_cusps(group: &GroupSpec, f: &FqParams) -> Result<CuspsReport, CliError> {
    let set = cusps(group, f)?;
    let vectors = primitive_vectors(&set.level, f)?.len();
    Ok(CuspsReport {
        group: group.format(f),
        level: format_poly(&set.level, f),
        primitive_vectors: vectors,
        count: set.count,
        reps: set
            .reps
            .iter()
            .map(|(x, y)| [format_poly(x, f), format_poly(y, f)])
            .collect(),
        orbit_sizes: set.orbit_sizes.clone(),
    })
}

/// Number of `g^a h^b` of weight `k` and type `l`, with `g` of weight
/// `q-1`, type 0 and `h` of weight `q+1`, type 1.
fn gl2_monomials(k: u64, l: Option<u32>, q: u32) -> u64 {
    let (q, m) = (q as u64, q as u64 - 1);
    (0..=k / (q + 1))
        .filter(|b| {
            let rest = k - b * (q + 1);
            rest.is_multiple_of(q - 1) && l.is_none_or(|l| b % m == l as u64)
        })
        .count() as u64
}

pub fn cmd_dims(preset: Preset, k_max: u64, f: &FqParams) -> Result<DimsReport, CliError> {
    if k_max % 2 == 1 {
        return Err(usage(format!("--k-max {k_max} must be even")));
    }
    let q = f.q();
    let d = preset_divisor(preset, f)?;
    let mut rows = Vec::new();
    let mut totals = Vec::new();
    for k in (2..=k_max).step_by(2) {
        let mut sum = 0;
        for l in type_solutions(k, q) {
            let (dim, h) = match preset {
                Preset::Gamma0T2 => (dim_gamma0_t(k, l, q), Some(h0_weighted(preset, q, k, l)?)),
                Preset::Gl2A2 => (gl2_monomials(k, Some(l), q), None),
            };
            sum += dim;
            rows.push(DimRow {
                k,
                l,
                dim,
                h0: h,
                agree: h.map(|h| h == dim),
            });
        }
        let total = h0(&d.scale(Rational64::from_integer(k as i64 / 2)));
        totals.push(DimTotal {
            k,
            dim_sum: sum,
            h0: total,
            agree: total == sum,
        });
    }
    Ok(DimsReport {
        preset: preset.name().to_string(),
        k_max,
        divisor: d.to_string(),
        rows,
        totals,
    })
}

pub fn cmd_sectionring(
    preset: Preset,
    max_weight: u64,
    f: &FqParams,
) -> Result<SectionringReport, CliError> {
    let d = preset_divisor(preset, f)?;
    let pres = presentation(&d, max_weight)?;
    let names: Vec<String> = (0..pres.generators.len())
        .map(|i| format!("x{i}"))
        .collect();
    Ok(SectionringReport {
        preset: preset.name().to_string(),
        max_weight,
        divisor: d.to_string(),
        generators: pres
            .generators
            .iter()
            .zip(&names)
            .map(|(g, n)| GeneratorRow {
                name: n.clone(),
                weight: g.weight,
                section: format!("t^{}", g.section),
            })
            .collect(),
        relations: pres
            .relations
            .iter()
            .map(|r| RelationRow {
                weight: r.weight,
                monomial_combination: r.format(&names),
                terms: r
                    .terms
                    .iter()
                    .map(|(e, c)| RelationTerm {
                        exponents: e.clone(),
                        coeff: c.to_string(),
                    })
                    .collect(),
            })
            .collect(),
        degrees: pres
            .degrees
            .iter()
            .map(|s| DegreeRow {
                weight: 2 * s.degree,
                h0: s.h0,
                monomials: s.monomials,
                span: s.span,
                new_generators: s.new_generators,
                new_relations: s.new_relations,
            })
            .collect(),
    })
}

pub fn cmd_split(k: u64, series: &str, f: &FqParams) -> Result<SplitReport, CliError> {
    let s = USeries::parse(series, k, DEFAULT_USERIES_PREC, f)?;
    let (a, b) = split(&s, k, f.q())?;
    let part = |x: &USeries| SeriesPart {
        series: x.format(f),
        type_residue: x.type_residue.expect("split parts are typed"),
    };
    Ok(SplitReport {
        k,
        input: s.format(f),
        f1: part(&a),
        f2: part(&b),
    })
}

pub fn cmd_valence(k: u64, v_inf: u64, v_e: u64, v_other: &[u64], f: &FqParams) -> ValenceReport {
    let prof = VanishingProfile {
        k,
        v_inf,
        v_e,
        v_other: v_other.to_vec(),
    };
    ValenceReport {
        k,
        v_inf,
        v_e,
        v_other: v_other.to_vec(),
        holds: valence_check(&prof, f.q()),
    }
}

fn random_word(gens: &[Mat2], len: usize, rng: &mut ChaCha8Rng, f: &FqParams) -> Mat2 {
    let mut m = Mat2::identity();
    for _ in 0..len {
        let g = &gens[rng.gen_range(0..gens.len())];
        let g = if rng.gen_bool(0.5) {
            g.inverse(f).expect("generators are invertible")
        } else {
            g.clone()
        };
        m = m.mul(&g, f);
    }
    m
}

fn selfcheck_groups(f: &FqParams) -> Result<Vec<GroupSpec>, Error> {
    ["full", "gamma0:T", "gamma1:T", "gammaN:T", "gamma0:T^2+1"]
        .iter()
        .map(|s| GroupSpec::parse(s, f))
        .collect()
}

pub fn cmd_selfcheck(seed: u64, samples: usize, f: &FqParams) -> Result<SelfcheckReport, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut group_row = CheckRow {
        name: "group-laws".into(),
        samples: 0,
        failures: 0,
    };
    for g in selfcheck_groups(f)? {
        let gens = sample_generators(&g, 1, f);
        let g2 = g.gamma2(f).ok();
        for _ in 0..samples {
            let x = random_word(&gens, 6, &mut rng, f);
            let y = random_word(&gens, 6, &mut rng, f);
            let xy = x.mul(&y, f);
            let mut ok = member(&x, &g, f) && member(&xy, &g, f);
            ok &= x.inverse(f).is_some_and(|xi| member(&xi, &g, f));
            let dx = x.unit_det(f);
            let dy = y.unit_det(f);
            ok &= match (dx, dy, xy.unit_det(f)) {
                (Some(a), Some(b), Some(c)) => f.mul(a, b) == c,
                _ => false,
            };
            if let Some(g2) = &g2 {
                // conjugating a Gamma_2 element by x stays in Gamma_2
                let z = x.mul(&x, f);
                let conj = y.mul(&z, f).mul(&y.inverse(f).expect("invertible"), f);
                ok &= member(&z, g2, f) && member(&conj, g2, f);
            }
            group_row.samples += 1;
            group_row.failures += (!ok) as usize;
        }
        if let Some(g2) = &g2 {
            let n = det_image_order(&g, f)?;
            group_row.samples += 1;
            group_row.failures +=
                (quotient_order(&g, g2, f)? != n / det_image_order(g2, f)?) as usize;
        }
    }

    let mut kinf_row = CheckRow {
        name: "kinf-squares".into(),
        samples: 0,
        failures: 0,
    };
    let prec = 16;
    for _ in 0..samples {
        let val = rng.gen_range(-6i64..6);
        let mut coeffs: Vec<_> = (0..prec)
            .map(|_| f.elem(rng.gen_range(0..f.q())).expect("in range"))
            .collect();
        if coeffs[0].is_zero() {
            coeffs[0] = f.one();
        }
        let x = LaurentKInf::from_window(val, coeffs);
        let sq = x.mul(&x, f);
        let ok = is_square_kinf(&sq, f)? && !is_square_kinf(&sq.scale(f.generator(), f), f)?;
        kinf_row.samples += 1;
        kinf_row.failures += (!ok) as usize;
    }
    Ok(SelfcheckReport {
        seed,
        checks: vec![group_row, kinf_row],
    })
}
