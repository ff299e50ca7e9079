//! Command-line front end. [`execute`] renders a command to a string so the
//! binary and the tests share one code path.

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigRational;
use serde_json::{json, Map, Value};

use crate::diagram_algebra::{
    bell, compose, crossing_profile, dim_standard, restriction_table, SetPartitionDiagram, StandardModule,
};
use crate::error::{Error, Result};
use crate::kronecker::{
    kron_padded_oracle, kron_via_blocks, kron_via_dagger, reduced_kron, reduced_kron_via_lr, stability_bound,
};
use crate::lr::lr_coeff;
use crate::partitions::{block_chain, dagger, pad, PaddedPartition, Partition};
use crate::sweep::{self, closed_formula, Bounds, ClosedShape, Suite};
use crate::sym_characters::{self, DEFAULT_SPECHT_CAP};

#[derive(Debug, Parser)]
#[command(
    name = "pakron",
    version,
    about = "Kronecker coefficients via the partition algebra"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,

    /// Add wall-clock time to JSON records (makes output non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Tsv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kronecker coefficient g^{ν_[n]}_{λ_[n],μ_[n]}.
    Kron(KronArgs),
    /// Reduced Kronecker coefficient.
    Rkron(RkronArgs),
    /// Littlewood-Richardson coefficient c^ν_{λ,μ}.
    Lr(TripleArgs),
    /// Block chain of ν in Λ_{≤r} at n.
    Chain(ChainArgs),
    /// Dagger partitions of ν_[n].
    Dagger(DaggerArgs),
    /// Restriction of Δ_{r+s}(ν) to P_r ⊗ P_s.
    Restrict(RestrictArgs),
    /// Set-partition diagram calculus.
    #[command(subcommand)]
    Diagram(DiagramCommand),
    /// Cross-route verification suites.
    Sweep(SweepArgs),
    /// Character table of S_n.
    Chartable(ChartableArgs),
}

#[derive(Debug, Args)]
pub struct TripleArgs {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KronRoute {
    Oracle,
    Blocks,
    Dagger,
    Closed,
    All,
}

/// Arguments of size `n` are read as full partitions of `n` (a reduced
/// partition of size `n` never pads to `n`); anything else is reduced.
#[derive(Debug, Args)]
pub struct KronArgs {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = KronRoute::All)]
    pub route: KronRoute,
    /// Use the block route when a closed formula does not apply.
    #[arg(long)]
    pub fallback: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReducedRoute {
    Stable,
    Lr,
    All,
}

#[derive(Debug, Args)]
pub struct RkronArgs {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    #[arg(long, value_enum, default_value_t = ReducedRoute::All)]
    pub route: ReducedRoute,
}

#[derive(Debug, Args)]
pub struct ChainArgs {
    pub nu: Partition,
    #[arg(long)]
    pub n: usize,
    /// Largest size allowed in the chain.
    #[arg(long)]
    pub r: usize,
}

#[derive(Debug, Args)]
pub struct DaggerArgs {
    pub nu: Partition,
    #[arg(long)]
    pub n: usize,
    /// Row to delete; all rows 0..=ℓ(ν_[n]) when omitted.
    #[arg(long)]
    pub i: Option<usize>,
}

#[derive(Debug, Args)]
pub struct RestrictArgs {
    pub nu: Partition,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub s: usize,
}

#[derive(Debug, Subcommand)]
pub enum DiagramCommand {
    /// Place X above Y.
    Compose {
        x: SetPartitionDiagram,
        y: SetPartitionDiagram,
        /// Exact rational p/q; prints δ^t as a number.
        #[arg(long)]
        delta: Option<BigRational>,
    },
    /// Crossing-block profile of an (r+s, p) diagram.
    Profile {
        d: SetPartitionDiagram,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// Standard-module dimensions of P_r.
    Dims {
        #[arg(long)]
        r: usize,
        /// Exact rational p/q; adds the rank of each cell form at this δ.
        #[arg(long)]
        delta: Option<BigRational>,
        #[arg(long, default_value_t = DEFAULT_SPECHT_CAP)]
        specht_cap: usize,
    },
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Suites to run (comma separated); `none` gives an empty report.
    #[arg(long, value_delimiter = ',', default_values_t = Suite::ALL.map(SuiteArg::Suite))]
    pub suites: Vec<SuiteArg>,
    #[arg(long, default_value_t = 4)]
    pub max_size: usize,
    #[arg(long, default_value_t = 3)]
    pub extra: usize,
    #[arg(long, default_value_t = 6)]
    pub max_k: usize,
    #[arg(long, default_value_t = 6)]
    pub max_m: usize,
    #[arg(long, default_value_t = 4)]
    pub max_r: usize,
    #[arg(long, default_value_t = 8)]
    pub max_stabilization_n: usize,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    None,
    Suite(Suite),
}

impl std::str::FromStr for SuiteArg {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "none" {
            return Ok(SuiteArg::None);
        }
        Suite::from_str(s, true).map(SuiteArg::Suite)
    }
}

impl std::fmt::Display for SuiteArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SuiteArg::None => f.write_str("none"),
            SuiteArg::Suite(s) => s.fmt(f),
        }
    }
}

#[derive(Debug, Args)]
pub struct ChartableArgs {
    #[arg(long)]
    pub n: usize,
}

/// Rendered command output. `failed` marks a completed run whose checks did
/// not all pass.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub failed: bool,
}

/// Exit status for an error: 1 when routes disagree, 2 for bad input.
pub fn error_status(e: &Error) -> u8 {
    match e {
        Error::RouteDisagreement(_) | Error::Inconsistent(_) => 1,
        _ => 2,
    }
}

struct Report {
    columns: Vec<String>,
    rows: Vec<Vec<Value>>,
    human: Vec<String>,
}

impl Report {
    fn new(columns: &[&str]) -> Self {
        Report {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            human: Vec::new(),
        }
    }

    fn row(&mut self, values: Vec<Value>) {
        debug_assert_eq!(values.len(), self.columns.len());
        self.rows.push(values);
    }

    fn render(&self, format: Format, elapsed_ms: Option<f64>) -> String {
        let mut out = String::new();
        match format {
            Format::Human => {
                for line in &self.human {
                    out.push_str(line);
                    out.push('\n');
                }
            }
            Format::Tsv => {
                out.push_str(&self.columns.join("\t"));
                out.push('\n');
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(tsv_cell).collect();
                    out.push_str(&cells.join("\t"));
                    out.push('\n');
                }
            }
            Format::Json => {
                for row in &self.rows {
                    let mut obj = Map::new();
                    for (k, v) in self.columns.iter().zip(row) {
                        obj.insert(k.clone(), v.clone());
                    }
                    if let Some(ms) = elapsed_ms {
                        obj.insert("elapsed_ms".into(), json!(ms));
                    }
                    out.push_str(&Value::Object(obj).to_string());
                    out.push('\n');
                }
            }
        }
        out
    }
}

fn tsv_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn s<T: ToString>(x: T) -> Value {
    Value::String(x.to_string())
}

pub fn execute(cli: &Cli) -> Result<Output> {
    let start = Instant::now();
    let (report, failed) = match &cli.command {
        Command::Kron(a) => (kron(a)?, false),
        Command::Rkron(a) => (rkron(a)?, false),
        Command::Lr(a) => (lr(a), false),
        Command::Chain(a) => (chain(a)?, false),
        Command::Dagger(a) => (dagger_cmd(a)?, false),
        Command::Restrict(a) => (restrict(a)?, false),
        Command::Diagram(c) => (diagram(c)?, false),
        Command::Sweep(a) => sweep_cmd(a)?,
        Command::Chartable(a) => (chartable(a)?, false),
    };
    let elapsed = cli.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    Ok(Output {
        text: report.render(cli.format, elapsed),
        failed,
    })
}

fn reduce_arg(p: &Partition, n: usize) -> Partition {
    if n > 0 && p.size() == n {
        PaddedPartition::from_full(p).base().clone()
    } else {
        p.clone()
    }
}

fn closed_shape(nu: &Partition) -> Result<ClosedShape> {
    if nu.length() <= 1 {
        Ok(ClosedShape::TwoRow)
    } else if nu.first() == 1 {
        Ok(ClosedShape::Hook)
    } else {
        Err(Error::NotApplicable(format!(
            "no closed formula: {nu} is neither a row nor a column"
        )))
    }
}

fn kron(a: &KronArgs) -> Result<Report> {
    let n = a.n;
    let (lambda, mu, nu) = (
        reduce_arg(&a.lambda, n),
        reduce_arg(&a.mu, n),
        reduce_arg(&a.nu, n),
    );
    let full = |p: &Partition| pad(p, n).map(|x| x.to_partition());
    let (fl, fm, fnu) = (full(&lambda)?, full(&mu)?, full(&nu)?);

    let closed = || closed_shape(&nu).and_then(|shape| closed_formula(shape, &lambda, &mu, nu.size(), n));
    let mut values: Vec<(&str, u64)> = Vec::new();
    match a.route {
        KronRoute::Oracle => values.push(("oracle", kron_padded_oracle(&lambda, &mu, &nu, n)?)),
        KronRoute::Blocks => values.push(("blocks", kron_via_blocks(&lambda, &mu, &nu, n)?)),
        KronRoute::Dagger => values.push(("dagger", kron_via_dagger(&lambda, &mu, &nu, n)?)),
        KronRoute::Closed => match closed() {
            Ok(v) => values.push(("closed", v)),
            Err(Error::OutOfRange { .. } | Error::NotApplicable(_)) if a.fallback => {
                values.push(("blocks", kron_via_blocks(&lambda, &mu, &nu, n)?))
            }
            Err(e) => return Err(e),
        },
        KronRoute::All => {
            values.push(("oracle", kron_padded_oracle(&lambda, &mu, &nu, n)?));
            values.push(("blocks", kron_via_blocks(&lambda, &mu, &nu, n)?));
            values.push(("dagger", kron_via_dagger(&lambda, &mu, &nu, n)?));
            match closed() {
                Ok(v) => values.push(("closed", v)),
                Err(Error::OutOfRange { .. } | Error::NotApplicable(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    let routes = values
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",");
    let value = values[0].1;
    if values.iter().any(|&(_, v)| v != value) {
        return Err(Error::RouteDisagreement(format!("{fl} ⊗ {fm} → {fnu}: {routes}")));
    }
    let mut report = Report::new(&[
        "lambda",
        "mu",
        "nu",
        "n",
        "full_lambda",
        "full_mu",
        "full_nu",
        "routes",
        "value",
    ]);
    report.row(vec![
        s(&lambda),
        s(&mu),
        s(&nu),
        json!(n),
        s(&fl),
        s(&fm),
        s(&fnu),
        s(&routes),
        json!(value),
    ]);
    report.human.push(value.to_string());
    Ok(report)
}

fn rkron(a: &RkronArgs) -> Result<Report> {
    let (lambda, mu, nu) = (&a.lambda, &a.mu, &a.nu);
    let mut values: Vec<(&str, u64)> = Vec::new();
    if matches!(a.route, ReducedRoute::Stable | ReducedRoute::All) {
        values.push(("stable", reduced_kron(lambda, mu, nu)?));
    }
    if matches!(a.route, ReducedRoute::Lr | ReducedRoute::All) {
        values.push(("lr", reduced_kron_via_lr(lambda, mu, nu)?));
    }
    let routes = values
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",");
    let value = values[0].1;
    if values.iter().any(|&(_, v)| v != value) {
        return Err(Error::RouteDisagreement(format!(
            "reduced {lambda} {mu} {nu}: {routes}"
        )));
    }
    let mut report = Report::new(&["lambda", "mu", "nu", "stability_bound", "routes", "value"]);
    report.row(vec![
        s(lambda),
        s(mu),
        s(nu),
        json!(stability_bound(lambda, mu, nu)),
        s(&routes),
        json!(value),
    ]);
    report.human.push(value.to_string());
    Ok(report)
}

fn lr(a: &TripleArgs) -> Report {
    let c = lr_coeff(&a.lambda, &a.mu, &a.nu);
    let mut report = Report::new(&["lambda", "mu", "nu", "value"]);
    report.row(vec![s(&a.lambda), s(&a.mu), s(&a.nu), json!(c)]);
    report.human.push(c.to_string());
    report
}

/// Chains live in `Λ_{≤r}`, so entries need not pad to `n`; the padded
/// column is empty for those that do not.
fn chain(a: &ChainArgs) -> Result<Report> {
    let chain = block_chain(&a.nu, a.n, a.r);
    let mut report = Report::new(&["index", "partition", "padded"]);
    for (i, p) in chain.entries().iter().enumerate() {
        let padded = pad(p, a.n).ok().map(|x| x.to_partition());
        report.row(vec![json!(i), s(p), padded.as_ref().map_or(Value::Null, s)]);
        report.human.push(match &padded {
            Some(full) => format!("{i}\t{p}\t{full}"),
            None => format!("{i}\t{p}"),
        });
    }
    Ok(report)
}

fn dagger_cmd(a: &DaggerArgs) -> Result<Report> {
    let nu = reduce_arg(&a.nu, a.n);
    let padded = pad(&nu, a.n)?;
    let rows: Vec<usize> = match a.i {
        Some(i) => vec![i],
        None => (0..=padded.length()).collect(),
    };
    let mut report = Report::new(&["i", "dagger"]);
    for i in rows {
        let d = dagger(&padded, i);
        report.row(vec![json!(i), s(&d)]);
        report.human.push(format!("{i}\t{d}"));
    }
    Ok(report)
}

fn restrict(a: &RestrictArgs) -> Result<Report> {
    let mut report = Report::new(&["lambda", "mu", "multiplicity"]);
    for (lambda, mu, m) in restriction_table(&a.nu, a.r, a.s)? {
        report.row(vec![s(&lambda), s(&mu), json!(m)]);
        report.human.push(format!("{lambda}\t{mu}\t{m}"));
    }
    Ok(report)
}

fn diagram(c: &DiagramCommand) -> Result<Report> {
    match c {
        DiagramCommand::Compose { x, y, delta } => {
            let (t, z) = compose(x, y)?;
            let scalar = match delta {
                Some(d) if num::Zero::is_zero(d) => return Err(Error::ZeroDelta),
                Some(d) => Some(num::pow(d.clone(), t)),
                None => None,
            };
            let mut report = Report::new(&["x", "y", "t", "scalar", "result"]);
            report.row(vec![
                s(x),
                s(y),
                json!(t),
                scalar.as_ref().map_or(Value::Null, s),
                s(&z),
            ]);
            report.human.push(match &scalar {
                Some(v) => format!("{v} {z}"),
                None => format!("δ^{t} {z}"),
            });
            Ok(report)
        }
        DiagramCommand::Profile { d, r, s: s_ } => {
            let p = crossing_profile(d, *r, *s_)?;
            let mut report = Report::new(&["p_r", "p_s", "p_c", "n_c"]);
            report.row(vec![json!(p.p_r), json!(p.p_s), json!(p.p_c), json!(p.n_c)]);
            report
                .human
                .push(format!("p_r={} p_s={} p_c={} n_c={}", p.p_r, p.p_s, p.p_c, p.n_c));
            Ok(report)
        }
        DiagramCommand::Dims { r, delta, specht_cap } => {
            let mut report = Report::new(&["nu", "dim", "gram_rank"]);
            let mut total = num::BigUint::from(0u32);
            for nu in (0..=*r).rev().flat_map(Partition::all) {
                let dim = dim_standard(*r, &nu);
                total += &dim * &dim;
                let rank = match delta {
                    Some(d) => {
                        let module = StandardModule::new(*r, &nu, d.clone(), *specht_cap)?;
                        Some(module.gram_matrix()?.rank())
                    }
                    None => None,
                };
                report.row(vec![s(&nu), s(&dim), rank.map_or(Value::Null, |k| json!(k))]);
                report.human.push(match rank {
                    Some(k) => format!("{nu}\t{dim}\trank {k}"),
                    None => format!("{nu}\t{dim}"),
                });
            }
            report.human.push(format!(
                "sum of squares {total}, Bell({}) = {}",
                2 * r,
                bell(2 * r)
            ));
            Ok(report)
        }
    }
}

fn sweep_cmd(a: &SweepArgs) -> Result<(Report, bool)> {
    let mut suites: Vec<Suite> = a
        .suites
        .iter()
        .filter_map(|x| match x {
            SuiteArg::Suite(s) => Some(*s),
            SuiteArg::None => None,
        })
        .collect();
    suites.dedup();
    let bounds = Bounds {
        max_size: a.max_size,
        extra: a.extra,
        max_k: a.max_k,
        max_m: a.max_m,
        max_r: a.max_r,
        max_stabilization_n: a.max_stabilization_n,
    };
    let checks = sweep::run(&suites, &bounds, a.jobs)?;
    let mut report = Report::new(&["suite", "case", "values", "status"]);
    let mut failed = false;
    for &suite in &suites {
        let of_suite: Vec<_> = checks.iter().filter(|c| c.suite == suite).collect();
        let bad = of_suite.iter().filter(|c| !c.ok).count();
        report
            .human
            .push(format!("{suite}\t{} cases\t{bad} mismatches", of_suite.len()));
        failed |= bad > 0;
    }
    for c in &checks {
        let status = if c.ok { "ok" } else { "MISMATCH" };
        report.row(vec![s(c.suite), s(&c.case), s(&c.values), s(status)]);
        if !c.ok {
            report
                .human
                .push(format!("MISMATCH {} {} {}", c.suite, c.case, c.values));
        }
    }
    Ok((report, failed))
}

fn chartable(a: &ChartableArgs) -> Result<Report> {
    let table = sym_characters::table(a.n)?;
    let mut columns = vec!["lambda".to_string()];
    columns.extend(table.partitions().iter().map(Partition::to_string));
    let mut report = Report::new(&columns.iter().map(String::as_str).collect::<Vec<_>>());
    for (i, lambda) in table.partitions().iter().enumerate() {
        let mut row = vec![s(lambda)];
        row.extend(table.row(i).iter().map(|v| json!(v)));
        report.row(row);
    }
    report.human.extend(table.to_tsv().lines().map(str::to_string));
    Ok(report)
}
