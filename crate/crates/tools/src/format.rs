//! JSON and CSV encodings.
//!
//! Rationals are always written as canonical fraction strings (`"-3"`,
//! `"1/2"`), which the readers insist on, so a document re-serializes to
//! the same bytes.

use std::fmt::Write as _;

use golomb_core::arrangement::RationalPoint;
use golomb_core::golombgraph::GolombOrientation;
use golomb_core::mixedgraph::MixedGraph;
use golomb_core::poly::Polynomial;
use golomb_core::quasipoly::Quasipolynomial;
use golomb_core::rational::{parse_canonical, to_canonical_string};
use golomb_core::{Error, Rational};
use serde::{Deserialize, Serialize};

pub fn rational_strings<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> Vec<String> {
    xs.into_iter().map(to_canonical_string).collect()
}

fn parse_rationals(xs: &[String]) -> Result<Vec<Rational>, Error> {
    xs.iter().map(|s| parse_canonical(s)).collect()
}

/// `{"period": p, "constituents": [["10","-4","1/2"], ...]}`, constituent
/// `i` being the residue class `i mod p`, coefficients constant first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuasipolynomialJson {
    pub period: u64,
    pub constituents: Vec<Vec<String>>,
}

impl From<&Quasipolynomial> for QuasipolynomialJson {
    fn from(q: &Quasipolynomial) -> Self {
        QuasipolynomialJson {
            period: q.period(),
            constituents: q.constituents().iter().map(|c| rational_strings(c.coeffs())).collect(),
        }
    }
}

impl TryFrom<&QuasipolynomialJson> for Quasipolynomial {
    type Error = Error;

    fn try_from(j: &QuasipolynomialJson) -> Result<Self, Error> {
        if j.constituents.len() as u64 != j.period {
            return Err(Error::InvalidArgument(format!(
                "period {} but {} constituents",
                j.period,
                j.constituents.len()
            )));
        }
        let cs = j
            .constituents
            .iter()
            .map(|c| parse_rationals(c).map(Polynomial::from_coeffs))
            .collect::<Result<Vec<_>, _>>()?;
        Quasipolynomial::new(cs)
    }
}

/// Output of `golomb quasipoly`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuasipolyReport {
    pub m: usize,
    /// Period used for interpolation (the vertex bound unless overridden).
    pub period: u64,
    pub period_bound: u64,
    pub minimal_period: u64,
    pub leading_coefficient: String,
    pub leading_coefficient_ok: bool,
    pub value_at_zero: String,
    pub quasipolynomial: QuasipolynomialJson,
}

/// `{"m": 3, "count": 10, "orientations": [["1","2","12","3","23"], ...]}`;
/// `orientations` is present only when listing was requested.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrientationsJson {
    pub m: usize,
    pub rule: String,
    pub count: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientations: Option<Vec<Vec<String>>>,
}

pub fn orientation_labels(os: &[GolombOrientation]) -> Vec<Vec<String>> {
    os.iter().map(GolombOrientation::labels).collect()
}

/// Mixed graph input: `{"n": 3, "edges": [[1,3],[2,3]], "arcs": [[1,2]]}`
/// with 1-based vertices. Missing `edges`/`arcs` mean none.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MixedGraphJson {
    pub n: usize,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub arcs: Vec<[usize; 2]>,
}

impl MixedGraphJson {
    pub fn to_graph(&self) -> Result<MixedGraph, Error> {
        let pairs = |v: &[[usize; 2]]| v.iter().map(|p| (p[0], p[1])).collect::<Vec<_>>();
        MixedGraph::from_one_based(self.n, &pairs(&self.edges), &pairs(&self.arcs))
    }
}

impl From<&MixedGraph> for MixedGraphJson {
    fn from(g: &MixedGraph) -> Self {
        let pairs = |v: &[(usize, usize)]| v.iter().map(|&(a, b)| [a + 1, b + 1]).collect();
        MixedGraphJson { n: g.n(), edges: pairs(g.edges()), arcs: pairs(g.arcs()) }
    }
}

pub fn parse_mixed_graph(text: &str) -> Result<MixedGraph, String> {
    let j: MixedGraphJson = serde_json::from_str(text).map_err(|e| format!("invalid mixed graph JSON: {e}"))?;
    j.to_graph().map_err(|e| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CountRow {
    pub t: u64,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Mismatch {
    pub t: u64,
    pub expected: u64,
    pub found: u64,
}

/// Output of `golomb golomb-count`. `check` is present with `--check-table1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CountTable {
    pub m: usize,
    pub rows: Vec<CountRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<TableCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableCheck {
    pub fixture: String,
    pub passed: bool,
    pub mismatches: Vec<Mismatch>,
}

/// One `t` of a reciprocity comparison; both sides as fraction strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReciprocityRow {
    pub t: u64,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

/// Output of `golomb reciprocity`. `m` is set in golomb mode, `graph` in
/// mixed mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReciprocityReport {
    pub mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<MixedGraphJson>,
    pub rows: Vec<ReciprocityRow>,
    pub passed: bool,
}

/// Output of `golomb vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerticesJson {
    pub m: usize,
    pub period_bound: u64,
    pub vertices: Vec<Vec<String>>,
}

pub fn vertex_strings(vs: &[RationalPoint]) -> Vec<Vec<String>> {
    vs.iter().map(|v| rational_strings(&v.coords)).collect()
}

pub fn parse_vertices(vs: &[Vec<String>]) -> Result<Vec<RationalPoint>, Error> {
    vs.iter().map(|v| parse_rationals(v).map(RationalPoint::new)).collect()
}

/// Output of `golomb mixed chroma`; `value` is `chi(t)` when `t` was given.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChromaJson {
    pub coefficients: Vec<String>,
    pub polynomial: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

/// Output of `golomb mixed orientations`. Each listed orientation is the
/// list of its directed edges (arcs included), 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MixedOrientationsJson {
    pub count: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientations: Option<Vec<Vec<[usize; 2]>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChromaticNumberJson {
    pub chromatic_number: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptimalRow {
    pub m: usize,
    pub length: u64,
    pub gaps: Vec<u64>,
}

/// Output of `golomb optimal`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptimalJson {
    pub rows: Vec<OptimalRow>,
}

/// Pretty JSON with a trailing newline, the form every command writes.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// CSV with a header row. Fields never contain commas or quotes here
/// (numbers, fractions, interval labels), so no quoting is done.
pub fn csv<S: AsRef<str>>(header: &[&str], rows: impl IntoIterator<Item = Vec<S>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let fields: Vec<&str> = row.iter().map(AsRef::as_ref).collect();
        debug_assert_eq!(fields.len(), header.len());
        let _ = writeln!(out, "{}", fields.join(","));
    }
    out
}

/// Reads a CSV written by [`csv`]: header and rows split on commas.
pub fn parse_csv(text: &str) -> Option<(Vec<String>, Vec<Vec<String>>)> {
    let mut lines = text.lines();
    let header: Vec<String> = lines.next()?.split(',').map(str::to_owned).collect();
    let rows: Vec<Vec<String>> = lines.map(|l| l.split(',').map(str::to_owned).collect()).collect();
    rows.iter().all(|r| r.len() == header.len()).then_some((header, rows))
}
