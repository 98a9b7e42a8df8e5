//! JSON payloads. Tables are rendered from the same structs.

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "drinfeld/1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub q: u32,
    /// Modulus of F_q over F_p, lowest degree first.
    pub modulus: Vec<u32>,
    #[serde(flatten)]
    pub payload: Payload,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Payload {
    Parity(ParityReport),
    Ellsearch(EllsearchReport),
    Cusps(CuspsReport),
    Dims(DimsReport),
    Sectionring(SectionringReport),
    Split(SplitReport),
    Valence(ValenceReport),
    Selfcheck(SelfcheckReport),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// `[a, b, c, d]`.
    pub gamma: [String; 4],
    pub det: String,
    pub det_is_square: bool,
    pub quad_b: String,
    pub quad_c: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParityReport {
    pub group: String,
    pub deg_bound: u32,
    /// `NonSquare`, `Square` or `undecided(<bound>)`.
    pub classification: String,
    pub stabilizer_index: Option<u32>,
    pub witness_count: usize,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EllipticClassRow {
    pub quad_b: String,
    pub quad_c: String,
    pub witnesses: usize,
    pub square_witnesses: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EllsearchReport {
    pub group: String,
    pub deg_bound: u32,
    pub witnesses: Vec<Witness>,
    pub classes: Vec<EllipticClassRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CuspsReport {
    pub group: String,
    pub level: String,
    pub primitive_vectors: usize,
    pub count: usize,
    pub reps: Vec<[String; 2]>,
    pub orbit_sizes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimRow {
    pub k: u64,
    pub l: u32,
    pub dim: u64,
    pub h0: Option<u64>,
    pub agree: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimTotal {
    pub k: u64,
    pub dim_sum: u64,
    pub h0: u64,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimsReport {
    pub preset: String,
    pub k_max: u64,
    pub divisor: String,
    pub rows: Vec<DimRow>,
    pub totals: Vec<DimTotal>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorRow {
    pub name: String,
    pub weight: u64,
    pub section: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationTerm {
    pub exponents: Vec<u64>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationRow {
    pub weight: u64,
    pub monomial_combination: String,
    pub terms: Vec<RelationTerm>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeRow {
    pub weight: u64,
    pub h0: u64,
    pub monomials: usize,
    pub span: usize,
    pub new_generators: usize,
    pub new_relations: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SectionringReport {
    pub preset: String,
    pub max_weight: u64,
    pub divisor: String,
    pub generators: Vec<GeneratorRow>,
    pub relations: Vec<RelationRow>,
    pub degrees: Vec<DegreeRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesPart {
    pub series: String,
    #[serde(rename = "type")]
    pub type_residue: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SplitReport {
    pub k: u64,
    pub input: String,
    pub f1: SeriesPart,
    pub f2: SeriesPart,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValenceReport {
    pub k: u64,
    pub v_inf: u64,
    pub v_e: u64,
    pub v_other: Vec<u64>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRow {
    pub name: String,
    pub samples: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SelfcheckReport {
    pub seed: u64,
    pub checks: Vec<CheckRow>,
}
