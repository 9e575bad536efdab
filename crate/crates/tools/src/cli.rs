//! The `golomb` command line.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use golomb_core::golomb::{first_golomb_ruler, optimal_length};
use golomb_core::golombgraph::OrientationRule;
use golomb_core::mixedgraph::{
    chromatic_number, chromatic_polynomial, enumerate_acyclic_orientations, reciprocity_check_mixed, MixedGraph,
};
use golomb_core::quasipoly::Quasipolynomial;
use golomb_core::rational::{factorial, to_canonical_string};
use golomb_core::{Error, Rational, DEFAULT_NODE_BUDGET};

use crate::fixtures::{self, TABLE1};
use crate::format::{self, *};
use crate::parallel::Runner;

#[derive(Debug, Parser)]
#[command(
    name = "golomb",
    version,
    about = "Golomb rulers, their counting quasipolynomials, and mixed graph colorings"
)]
pub struct Cli {
    /// Maximum number of search nodes for the whole run.
    #[arg(long, global = true, env = "GOLOMB_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
    /// Worker threads (output does not depend on this).
    #[arg(long, global = true, default_value_t = default_jobs())]
    pub jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count Golomb rulers with m gaps and length t.
    GolombCount(GolombCountArgs),
    /// Interpolate the ruler counting quasipolynomial g_m.
    Quasipoly {
        #[arg(long)]
        m: usize,
        /// Interpolate at this period instead of the vertex bound.
        #[arg(long)]
        period: Option<u64>,
    },
    /// Count (or list) the regions of the Golomb arrangement via the
    /// orientations of the Golomb graph.
    Regions {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t = Rule::Realizable)]
        rule: Rule,
    },
    /// Check an Ehrhart reciprocity identity.
    #[command(subcommand)]
    Reciprocity(ReciprocityCommand),
    /// Mixed graph colorings and orientations.
    #[command(subcommand)]
    Mixed(MixedCommand),
    /// Vertices of the simplex cut by the Golomb arrangement.
    Vertices {
        #[arg(long)]
        m: usize,
    },
    /// Shortest Golomb rulers for 1..=m gaps.
    Optimal {
        #[arg(long)]
        m: usize,
        /// Give up beyond this length.
        #[arg(long, default_value_t = 1000)]
        ceiling: u64,
    },
}

#[derive(Debug, Args)]
pub struct GolombCountArgs {
    /// Number of gaps (defaults to 3 with --check-table1).
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, conflicts_with_all = ["t_min", "t_max"])]
    t: Option<u64>,
    #[arg(long, requires = "t_max")]
    t_min: Option<u64>,
    #[arg(long, requires = "t_min")]
    t_max: Option<u64>,
    /// Compare g_3(t), t = 6..=35, with the embedded reference table.
    #[arg(long)]
    check_table1: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    /// Orders realized by some positive gap vector (the regions).
    Realizable,
    /// Every order extending inclusion that is closed under the shift rule.
    ShiftConsistent,
}

impl From<Rule> for OrientationRule {
    fn from(r: Rule) -> Self {
        match r {
            Rule::Realizable => OrientationRule::Realizable,
            Rule::ShiftConsistent => OrientationRule::ShiftConsistent,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum ReciprocityCommand {
    /// (-1)^(m-1) g_m(-t) against multiplicity-weighted rulers of length t.
    Golomb {
        #[arg(long)]
        m: usize,
        /// Values of t (comma separated); defaults to 0..=8.
        #[arg(long, value_delimiter = ',')]
        t: Vec<u64>,
    },
    /// (-1)^n chi(-t) against multiplicity-weighted colorings in {0..t-1}.
    Mixed {
        #[command(flatten)]
        graph: GraphArgs,
        /// Values of t (comma separated); defaults to 1,2,3.
        #[arg(long, value_delimiter = ',')]
        t: Vec<u64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum MixedCommand {
    /// Chromatic polynomial, optionally evaluated at t.
    Chroma {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        t: Option<u64>,
    },
    /// Acyclic orientations.
    Orientations {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        list: bool,
    },
    /// Least number of colors, or none when the arcs have a cycle.
    ChromaticNumber {
        #[command(flatten)]
        graph: GraphArgs,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphArgs {
    /// Mixed graph JSON file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Built-in graph (triangle).
    #[arg(long)]
    fixture: Option<String>,
}

impl GraphArgs {
    fn load(&self) -> Result<MixedGraph, CliError> {
        if let Some(name) = &self.fixture {
            return fixtures::graph_fixture(name).ok_or_else(|| {
                CliError::Usage(format!("unknown fixture {name:?}; available: {}", fixtures::GRAPH_FIXTURES.join(", ")))
            });
        }
        let path = self.input.as_ref().expect("clap enforces one source");
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        format::parse_mixed_graph(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("search budget of {0} nodes exhausted (raise --budget or GOLOMB_BUDGET)")]
    Budget(u64),
    #[error("verification failed: {0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Budget(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { limit } => CliError::Budget(limit),
            Error::InsufficientPoints { .. }
            | Error::Inconsistent { .. }
            | Error::LeadingCoefficient { .. }
            | Error::Unrealizable => CliError::Mismatch(e.to_string()),
            Error::CeilingExceeded { .. } | Error::InvalidArgument(_) | Error::InvalidGraph(_) => {
                CliError::Usage(e.to_string())
            }
        }
    }
}

/// What a successful command produced. A `failure` means the output was
/// written but a check did not pass (exit code 3).
#[derive(Debug)]
pub struct Outcome {
    pub body: String,
    pub failure: Option<String>,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, failure: None }
    }

    fn checked(body: String, passed: bool, what: &str) -> Self {
        Outcome { body, failure: (!passed).then(|| what.to_owned()) }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let runner = Runner::new(cli.jobs, cli.budget).map_err(CliError::Usage)?;
    let f = cli.format;
    match &cli.command {
        Command::GolombCount(a) => golomb_count(&runner, f, a),
        Command::Quasipoly { m, period } => quasipoly(&runner, f, *m, *period),
        Command::Regions { m, list, rule } => regions(&runner, f, *m, *list, *rule),
        Command::Reciprocity(ReciprocityCommand::Golomb { m, t }) => golomb_reciprocity(&runner, f, *m, t),
        Command::Reciprocity(ReciprocityCommand::Mixed { graph, t }) => {
            mixed_reciprocity(&runner, f, &graph.load()?, t)
        }
        Command::Mixed(MixedCommand::Chroma { graph, t }) => chroma(&runner, f, &graph.load()?, *t),
        Command::Mixed(MixedCommand::Orientations { graph, list }) => orientations(&runner, f, &graph.load()?, *list),
        Command::Mixed(MixedCommand::ChromaticNumber { graph }) => {
            let g = graph.load()?;
            let k = runner.serial(|b| chromatic_number(&g, b))?;
            Ok(Outcome::ok(match f {
                Format::Json => to_json(&ChromaticNumberJson { chromatic_number: k }),
                Format::Csv => csv(&["chromatic_number"], [vec![k.map_or(String::new(), |k| k.to_string())]]),
                Format::Text => k.map_or("none (the arcs contain a cycle)\n".into(), |k| format!("{k}\n")),
            }))
        }
        Command::Vertices { m } => vertices(&runner, f, *m),
        Command::Optimal { m, ceiling } => optimal(&runner, f, *m, *ceiling),
    }
}

fn check_m(m: usize) -> Result<(), CliError> {
    if m == 0 {
        return Err(CliError::Usage("--m must be at least 1".into()));
    }
    Ok(())
}

fn golomb_count(runner: &Runner, f: Format, a: &GolombCountArgs) -> Result<Outcome, CliError> {
    let m = match (a.m, a.check_table1) {
        (Some(m), true) if m != 3 => return Err(CliError::Usage("--check-table1 applies to --m 3".into())),
        (Some(m), _) => m,
        (None, true) => 3,
        (None, false) => return Err(CliError::Usage("--m is required".into())),
    };
    check_m(m)?;
    let ts: Vec<u64> = match (a.t, a.t_min, a.t_max) {
        (Some(t), _, _) => vec![t],
        (None, Some(lo), Some(hi)) if lo <= hi => (lo..=hi).collect(),
        (None, Some(lo), Some(hi)) => return Err(CliError::Usage(format!("empty range {lo}..={hi}"))),
        _ if a.check_table1 => TABLE1.iter().map(|&(t, _)| t).collect(),
        _ => return Err(CliError::Usage("give --t or --t-min/--t-max".into())),
    };
    let counts = runner.golomb_counts(m, &ts)?;
    let rows: Vec<CountRow> = ts.iter().zip(&counts).map(|(&t, &count)| CountRow { t, count }).collect();
    let check = a.check_table1.then(|| {
        let mut mismatches = Vec::new();
        for &(t, expected) in &TABLE1 {
            let found = match rows.iter().find(|r| r.t == t) {
                Some(r) => r.count,
                None => runner.golomb_counts(3, &[t]).map(|c| c[0]).unwrap_or(u64::MAX),
            };
            if found != expected {
                mismatches.push(Mismatch { t, expected, found });
            }
        }
        TableCheck { fixture: "table1".into(), passed: mismatches.is_empty(), mismatches }
    });
    let failure = check.as_ref().filter(|c| !c.passed).map(|c| {
        let ts: Vec<String> =
            c.mismatches.iter().map(|x| format!("t={} expected {} found {}", x.t, x.expected, x.found)).collect();
        format!("reference table mismatch: {}", ts.join("; "))
    });
    let body = match f {
        Format::Json => to_json(&CountTable { m, rows, check }),
        Format::Csv => csv(&["t", "count"], rows.iter().map(|r| vec![r.t.to_string(), r.count.to_string()])),
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                let _ = writeln!(s, "g_{m}({}) = {}", r.t, r.count);
            }
            if let Some(c) = &check {
                let _ = writeln!(s, "table1: {}", if c.passed { "all 30 values match" } else { "MISMATCH" });
            }
            s
        }
    };
    Ok(Outcome { body, failure })
}

fn quasipoly(runner: &Runner, f: Format, m: usize, period: Option<u64>) -> Result<Outcome, CliError> {
    check_m(m)?;
    let bound = runner.period_bound(m)?;
    let p = period.unwrap_or(bound);
    if p == 0 {
        return Err(CliError::Usage("--period must be positive".into()));
    }
    let q = runner.golomb_interpolant(m, p)?;
    let expected = Rational::new(1.into(), factorial(m as u32 - 1));
    let ok = q.constituents().iter().all(|c| c.coeff(m - 1) == expected);
    let report = QuasipolyReport {
        m,
        period: p,
        period_bound: bound,
        minimal_period: q.minimal_period(),
        leading_coefficient: to_canonical_string(&expected),
        leading_coefficient_ok: ok,
        value_at_zero: to_canonical_string(&q.evaluate(0)),
        quasipolynomial: QuasipolynomialJson::from(&q),
    };
    let body = match f {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut header = vec!["residue".to_owned()];
            header.extend((0..m).map(|j| format!("c{j}")));
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            csv(
                &header,
                report.quasipolynomial.constituents.iter().enumerate().map(|(i, c)| {
                    let mut row = vec![i.to_string()];
                    row.extend(c.iter().cloned());
                    row
                }),
            )
        }
        Format::Text => quasipoly_text(&report, &q),
    };
    Ok(Outcome::checked(body, ok, "leading coefficient differs from 1/(m-1)!"))
}

fn quasipoly_text(r: &QuasipolyReport, q: &Quasipolynomial) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "g_{}(t), period {} (vertex bound {}, minimal {})",
        r.m, r.period, r.period_bound, r.minimal_period
    );
    for (i, c) in q.constituents().iter().enumerate() {
        let _ = writeln!(s, "  t = {i:>2} mod {}: {c}", r.period);
    }
    let _ = writeln!(
        s,
        "leading coefficient {}: {}",
        r.leading_coefficient,
        if r.leading_coefficient_ok { "ok" } else { "MISMATCH" }
    );
    let _ = writeln!(s, "g_{}(0) = {}", r.m, r.value_at_zero);
    s
}

fn regions(runner: &Runner, f: Format, m: usize, list: bool, rule: Rule) -> Result<Outcome, CliError> {
    check_m(m)?;
    let rule_name = rule.to_possible_value().expect("no skipped variants").get_name().to_owned();
    let (count, listed) = if list {
        let os = runner.orientations(m, rule.into())?;
        (os.len() as u64, Some(os))
    } else {
        (runner.orientation_count(m, rule.into())?, None)
    };
    let body = match f {
        Format::Json => to_json(&OrientationsJson {
            m,
            rule: rule_name,
            count,
            orientations: listed.as_deref().map(orientation_labels),
        }),
        Format::Csv => match &listed {
            Some(os) => {
                csv(&["index", "orientation"], os.iter().enumerate().map(|(i, o)| vec![i.to_string(), o.to_string()]))
            }
            None => csv(&["m", "rule", "count"], [vec![m.to_string(), rule_name, count.to_string()]]),
        },
        Format::Text => {
            let mut s = String::new();
            for o in listed.iter().flatten() {
                let _ = writeln!(s, "{o}");
            }
            let _ = writeln!(s, "{count}");
            s
        }
    };
    Ok(Outcome::ok(body))
}

fn reciprocity_body(f: Format, report: &ReciprocityReport) -> String {
    match f {
        Format::Json => to_json(report),
        Format::Csv => csv(
            &["t", "lhs", "rhs", "holds"],
            report.rows.iter().map(|r| vec![r.t.to_string(), r.lhs.clone(), r.rhs.clone(), r.holds.to_string()]),
        ),
        Format::Text => {
            let mut s = String::new();
            for r in &report.rows {
                let verdict = if r.holds { "ok" } else { "FAIL" };
                let _ = writeln!(s, "t = {}: {} {} {}  {verdict}", r.t, r.lhs, if r.holds { "=" } else { "!=" }, r.rhs);
            }
            s
        }
    }
}

fn golomb_reciprocity(runner: &Runner, f: Format, m: usize, ts: &[u64]) -> Result<Outcome, CliError> {
    check_m(m)?;
    let ts: Vec<u64> = if ts.is_empty() { (0..=8).collect() } else { ts.to_vec() };
    let q = runner.golomb_quasipolynomial(m, None)?;
    let regions = runner.region_index(m)?;
    let rows: Vec<ReciprocityRow> = runner
        .golomb_reciprocity(&q, &regions, &ts)?
        .into_iter()
        .map(|r| ReciprocityRow { t: r.t, lhs: to_canonical_string(&r.lhs), rhs: r.rhs.to_string(), holds: r.holds() })
        .collect();
    let passed = rows.iter().all(|r| r.holds);
    let report = ReciprocityReport { mode: "golomb".into(), m: Some(m), graph: None, rows, passed };
    Ok(Outcome::checked(reciprocity_body(f, &report), passed, "reciprocity does not hold"))
}

fn mixed_reciprocity(runner: &Runner, f: Format, g: &MixedGraph, ts: &[u64]) -> Result<Outcome, CliError> {
    let ts: Vec<u64> = if ts.is_empty() { vec![1, 2, 3] } else { ts.to_vec() };
    let rows = runner.map(ts, |t, b| reciprocity_check_mixed(g, t, b))?;
    let rows: Vec<ReciprocityRow> = rows
        .into_iter()
        .map(|r| ReciprocityRow { t: r.t, lhs: to_canonical_string(&r.lhs), rhs: r.rhs.to_string(), holds: r.holds() })
        .collect();
    let passed = rows.iter().all(|r| r.holds);
    let report = ReciprocityReport { mode: "mixed".into(), m: None, graph: Some(g.into()), rows, passed };
    Ok(Outcome::checked(reciprocity_body(f, &report), passed, "reciprocity does not hold"))
}

fn chroma(runner: &Runner, f: Format, g: &MixedGraph, t: Option<u64>) -> Result<Outcome, CliError> {
    let chi = runner.serial(|b| chromatic_polynomial(g, b))?;
    let value = t.map(|t| to_canonical_string(&chi.eval_int(t as i64)));
    let j = ChromaJson { coefficients: rational_strings(chi.coeffs()), polynomial: chi.to_string(), t, value };
    let body = match f {
        Format::Json => to_json(&j),
        Format::Csv => match (&j.t, &j.value) {
            (Some(t), Some(v)) => csv(&["t", "value"], [vec![t.to_string(), v.clone()]]),
            _ => csv(
                &["power", "coefficient"],
                j.coefficients.iter().enumerate().map(|(i, c)| vec![i.to_string(), c.clone()]),
            ),
        },
        Format::Text => match (&j.t, &j.value) {
            (Some(t), Some(v)) => format!("chi({t}) = {v}\n"),
            _ => format!("chi(t) = {}\n", j.polynomial),
        },
    };
    Ok(Outcome::ok(body))
}

fn orientations(runner: &Runner, f: Format, g: &MixedGraph, list: bool) -> Result<Outcome, CliError> {
    let os = runner.serial(|b| enumerate_acyclic_orientations(g, b))?;
    let edges: Vec<Vec<[usize; 2]>> = os
        .iter()
        .map(|o| {
            let mut d: Vec<[usize; 2]> = o.directed_edges(g).into_iter().map(|(u, v)| [u + 1, v + 1]).collect();
            d.sort_unstable();
            d
        })
        .collect();
    let count = os.len() as u64;
    let show = |d: &[[usize; 2]]| d.iter().map(|[u, v]| format!("{u}->{v}")).collect::<Vec<_>>().join(" ");
    let body = match f {
        Format::Json => to_json(&MixedOrientationsJson { count, orientations: list.then_some(edges) }),
        Format::Csv if list => {
            csv(&["index", "edges"], edges.iter().enumerate().map(|(i, d)| vec![i.to_string(), show(d)]))
        }
        Format::Csv => csv(&["count"], [vec![count.to_string()]]),
        Format::Text => {
            let mut s = String::new();
            if list {
                for d in &edges {
                    let _ = writeln!(s, "{}", show(d));
                }
            }
            let _ = writeln!(s, "{count}");
            s
        }
    };
    Ok(Outcome::ok(body))
}

fn vertices(runner: &Runner, f: Format, m: usize) -> Result<Outcome, CliError> {
    check_m(m)?;
    let vs = runner.vertices(m)?;
    let j = VerticesJson {
        m,
        period_bound: golomb_core::arrangement::denominator_lcm(&vs)?,
        vertices: vertex_strings(&vs),
    };
    let body = match f {
        Format::Json => to_json(&j),
        Format::Csv => {
            let header: Vec<String> =
                std::iter::once("index".to_owned()).chain((1..=m).map(|i| format!("z{i}"))).collect();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            csv(
                &header,
                j.vertices
                    .iter()
                    .enumerate()
                    .map(|(i, v)| std::iter::once(i.to_string()).chain(v.iter().cloned()).collect()),
            )
        }
        Format::Text => {
            let mut s = String::new();
            for v in &j.vertices {
                let _ = writeln!(s, "({})", v.join(", "));
            }
            let _ = writeln!(s, "{} vertices, period bound {}", j.vertices.len(), j.period_bound);
            s
        }
    };
    Ok(Outcome::ok(body))
}

fn optimal(runner: &Runner, f: Format, m_max: usize, ceiling: u64) -> Result<Outcome, CliError> {
    check_m(m_max)?;
    let rows = runner.map((1..=m_max).collect(), |m, b| {
        let length = optimal_length(m, ceiling, b)?;
        let ruler = first_golomb_ruler(m, length, b)?.expect("a ruler of optimal length exists");
        Ok(OptimalRow { m, length, gaps: ruler.gaps().to_vec() })
    })?;
    let gaps = |r: &OptimalRow| r.gaps.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    let body = match f {
        Format::Json => to_json(&OptimalJson { rows }),
        Format::Csv => {
            csv(&["m", "length", "gaps"], rows.iter().map(|r| vec![r.m.to_string(), r.length.to_string(), gaps(r)]))
        }
        Format::Text => rows.iter().map(|r| format!("m = {}: length {} gaps [{}]\n", r.m, r.length, gaps(r))).collect(),
    };
    Ok(Outcome::ok(body))
}
