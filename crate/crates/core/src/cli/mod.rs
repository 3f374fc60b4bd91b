//! The `omlab` command line.
//!
//! Subcommands: `eval`, `inverse`, `norm`, `char-norm`, `check-relation`, `verify`.
//! Reports go to stdout as CSV (default) or JSON; `--out DIR` also writes
//! `DIR/report.csv` and `DIR/summary.json`. Exit status is 0 on success, 1 when a
//! check or verification fails and 2 on bad input.

pub mod docs;
mod locate;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::grid;
use crate::growth::{check_approx, check_preceq_default, GrowthFunction};
use crate::inclusion::{
    builtin_fixture_on, builtin_suite_on, sample_corpus, Direction, SuiteEntry, TheoremFixture,
    TheoremId,
};
use crate::norms::{char_norm_closed, global_norm_with, Method, SpaceSpec, Variant};
use crate::relation::RelationReport;
use crate::young::{check_inverse_prec, check_prec_default, YoungFunction};

use docs::{base_dir, load, load_function, parse, DocRef, FixtureDoc, SpaceDoc};
use report::{num, opt_num, Table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Environment variable holding a comma-separated default radius grid.
pub const GRID_ENV: &str = "OMLAB_DEFAULT_GRID";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Lib(#[from] crate::Error),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "omlab",
    version,
    about = "Orlicz-Morrey norms and inclusion checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Variant name (nakai, sst, weak-nakai, weak-sst, guliyev) or a space document
    #[arg(long, global = true)]
    pub space: Option<String>,
    /// Young function document path, or inline JSON
    #[arg(long, global = true)]
    pub young: Option<String>,
    /// Growth function document path, or inline JSON
    #[arg(long, global = true)]
    pub growth: Option<String>,
    /// Sample function document
    #[arg(long, global = true)]
    pub function: Option<PathBuf>,
    /// Theorem fixture document
    #[arg(long, global = true)]
    pub fixture: Option<PathBuf>,
    /// Comma-separated radius grid
    #[arg(long, global = true, value_delimiter = ',')]
    pub radii: Vec<f64>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Relative tolerance of verification comparisons
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Directory for report.csv and summary.json
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub override_hypotheses: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Dimension for spaces given by variant name
    #[arg(long, global = true)]
    pub dimension: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RelationKind {
    /// Φ₁ ≺ Φ₂
    Young,
    /// Φ₁⁻¹ ≺ Φ₂⁻¹
    YoungInverse,
    /// φ₁ ⪯ φ₂
    Growth,
    /// φ₁ ≈ φ₂
    Approx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Sufficiency,
    Necessity,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Analytic,
    Bisection,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Evaluate the --young and/or --growth function
    Eval {
        #[arg(long, value_delimiter = ',', required = true)]
        at: Vec<f64>,
    },
    /// Generalized inverse of the --young function
    Inverse {
        #[arg(long, value_delimiter = ',', required = true)]
        at: Vec<f64>,
    },
    /// Global norm of --function in --space over concentric balls
    Norm {
        #[arg(long, value_enum, default_value_t = MethodArg::Analytic)]
        method: MethodArg,
    },
    /// Closed-form norm of the characteristic function of B(0, r0)
    CharNorm {
        #[arg(long)]
        r0: f64,
    },
    /// Grid check of a Young or growth relation
    CheckRelation {
        #[arg(long, value_enum)]
        kind: RelationKind,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Verify an inclusion theorem (`all` runs the builtin suite)
    Verify {
        #[arg(long, default_value = "all")]
        theorem: String,
        #[arg(long, value_enum, default_value_t = DirectionArg::Both)]
        direction: DirectionArg,
        #[arg(long)]
        assumed_c: Option<f64>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Eval { .. } => "eval",
            Command::Inverse { .. } => "inverse",
            Command::Norm { .. } => "norm",
            Command::CharNorm { .. } => "char-norm",
            Command::CheckRelation { .. } => "check-relation",
            Command::Verify { .. } => "verify",
        }
    }
}

/// A finished run: the CSV table, the JSON summary and whether it passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub table: Table,
    pub summary: Value,
    pub success: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.success {
            EXIT_OK
        } else {
            EXIT_FAILED
        }
    }
}

/// Entry point of the binary.
pub fn main_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_to(
        args,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

/// Parses `args`, runs the command and writes the report to `stdout`.
pub fn run_to<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(&cli).and_then(|o| emit(&cli.global, &o, stdout).map(|_| o)) {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn emit(global: &GlobalArgs, outcome: &Outcome, stdout: &mut dyn Write) -> Result<(), CliError> {
    let csv = outcome.table.to_csv()?;
    let summary = pretty(&outcome.summary)?;
    match global.format {
        Format::Csv => stdout.write_all(csv.as_bytes())?,
        Format::Json => {
            let mut doc = outcome.summary.clone();
            if let Value::Object(map) = &mut doc {
                map.insert("rows".into(), outcome.table.to_json());
            }
            stdout.write_all(pretty(&doc)?.as_bytes())?;
        }
    }
    if let Some(dir) = &global.out {
        report::write_out_dir(dir, &csv, &summary)?;
    }
    Ok(())
}

fn pretty(v: &Value) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| CliError::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Runs the parsed command without writing anything.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let g = &cli.global;
    let mut outcome = match &cli.command {
        Command::Eval { at } => eval(g, at)?,
        Command::Inverse { at } => inverse(g, at)?,
        Command::Norm { method } => norm(g, *method)?,
        Command::CharNorm { r0 } => char_norm(g, *r0)?,
        Command::CheckRelation { kind, lhs, rhs } => check_relation(*kind, lhs, rhs)?,
        Command::Verify {
            theorem,
            direction,
            assumed_c,
        } => verify(g, theorem, *direction, *assumed_c)?,
    };
    if let Value::Object(map) = &mut outcome.summary {
        map.insert("command".into(), json!(cli.command.name()));
        map.insert("config".into(), echo_config(g));
    }
    Ok(outcome)
}

/// Echo of the inputs; `--out` and `--format` are left out so reports compare equal
/// across output locations.
fn echo_config(g: &GlobalArgs) -> Value {
    json!({
        "space": g.space,
        "young": g.young,
        "growth": g.growth,
        "function": g.function.as_ref().map(|p| p.display().to_string()),
        "fixture": g.fixture.as_ref().map(|p| p.display().to_string()),
        "radii": g.radii,
        "seed": g.seed,
        "tol": g.tol,
        "override_hypotheses": g.override_hypotheses,
        "dimension": g.dimension,
    })
}

/// A document argument: inline JSON when it starts with `{`, else a path.
fn doc_arg<T: serde::de::DeserializeOwned>(arg: &str) -> Result<T, CliError> {
    if arg.trim_start().starts_with('{') {
        parse(arg, "inline document")
    } else {
        load(Path::new(arg))
    }
}

fn required<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str, CliError> {
    v.as_deref()
        .ok_or_else(|| CliError::Input(format!("missing --{flag}")))
}

fn radius_list(text: &str, origin: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| CliError::Input(format!("{origin}: bad radius `{s}`: {e}")))
        })
        .collect()
}

/// Radius grid: `--radii`, then the document's grid, then `OMLAB_DEFAULT_GRID`, then
/// `2^k` for `k = -6..=6`. The flag says whether the grid came from the defaults.
fn resolve_radii(g: &GlobalArgs, doc: Option<Vec<f64>>) -> Result<(Vec<f64>, bool), CliError> {
    if !g.radii.is_empty() {
        return Ok((g.radii.clone(), false));
    }
    if let Some(r) = doc {
        return Ok((r, false));
    }
    match std::env::var(GRID_ENV) {
        Ok(text) if !text.trim().is_empty() => Ok((radius_list(&text, GRID_ENV)?, true)),
        _ => Ok((grid::default_radii(), true)),
    }
}

fn eval(g: &GlobalArgs, at: &[f64]) -> Result<Outcome, CliError> {
    if g.young.is_none() && g.growth.is_none() {
        return Err(CliError::Input("eval needs --young or --growth".into()));
    }
    let mut table = Table::new(&["function", "t", "value"]);
    if let Some(y) = &g.young {
        let phi: YoungFunction = doc_arg(y)?;
        for &t in at {
            table.push(vec![phi.to_string(), num(t), num(phi.eval(t)?)]);
        }
    }
    if let Some(gr) = &g.growth {
        let phi: GrowthFunction = doc_arg(gr)?;
        for &t in at {
            table.push(vec![phi.to_string(), num(t), num(phi.eval(t)?)]);
        }
    }
    Ok(Outcome {
        summary: json!({ "points": table.rows.len() }),
        table,
        success: true,
    })
}

fn inverse(g: &GlobalArgs, at: &[f64]) -> Result<Outcome, CliError> {
    let phi: YoungFunction = doc_arg(required(&g.young, "young")?)?;
    let mut table = Table::new(&["function", "s", "inverse"]);
    for &s in at {
        table.push(vec![phi.to_string(), num(s), num(phi.inverse(s)?)]);
    }
    Ok(Outcome {
        summary: json!({ "function": phi.to_string(), "points": at.len() }),
        table,
        success: true,
    })
}

fn space(g: &GlobalArgs, dimension_hint: Option<usize>) -> Result<SpaceSpec, CliError> {
    let arg = required(&g.space, "space")?;
    let (variant, young, growth, dimension) = match Variant::parse(arg) {
        Some(v) => (
            v,
            doc_arg::<YoungFunction>(required(&g.young, "young")?)?,
            doc_arg::<GrowthFunction>(required(&g.growth, "growth")?)?,
            g.dimension.or(dimension_hint).unwrap_or(1),
        ),
        None => {
            let path = Path::new(arg);
            let doc: SpaceDoc = load(path)?;
            let base = base_dir(path);
            let resolve_young = |r: DocRef<YoungFunction>| r.resolve(&base).map(|v| v.0);
            let resolve_growth = |r: DocRef<GrowthFunction>| r.resolve(&base).map(|v| v.0);
            (
                doc.variant,
                resolve_young(doc.young)?,
                resolve_growth(doc.growth)?,
                doc.dimension,
            )
        }
    };
    let build = if g.override_hypotheses {
        SpaceSpec::with_override
    } else {
        SpaceSpec::new
    };
    Ok(build(variant, young, growth, dimension)?)
}

fn space_json(s: &SpaceSpec) -> Value {
    json!({
        "variant": s.variant().name(),
        "young": s.young().to_string(),
        "growth": s.growth().to_string(),
        "dimension": s.dimension(),
        "class": s.membership().class_id.to_string(),
        "class_member": s.membership().member,
        "overridden": s.is_overridden(),
    })
}

fn norm(g: &GlobalArgs, method: MethodArg) -> Result<Outcome, CliError> {
    let path = g
        .function
        .as_ref()
        .ok_or_else(|| CliError::Input("missing --function".into()))?;
    let (id, f) = load_function(path)?;
    let space = space(g, Some(f.dimension()))?;
    let (radii, defaulted) = resolve_radii(g, None)?;
    let radii = if defaulted {
        grid::merge_sorted(&radii, f.breakpoints())
    } else {
        radii
    };
    let method = match method {
        MethodArg::Analytic => Method::Analytic,
        MethodArg::Bisection => Method::Bisection,
    };
    let result = global_norm_with(&f, &space, &radii, method)?;
    let variant = space.variant().name();
    let mut table = Table::new(&[
        "function_id",
        "variant",
        "radius",
        "local_value",
        "global_flag",
    ]);
    for (r, v) in result.radii.iter().zip(&result.local_values) {
        table.push(vec![
            id.clone(),
            variant.into(),
            num(*r),
            num(*v),
            "local".into(),
        ]);
    }
    let flag = if result.exact {
        "global-exact"
    } else {
        "global-estimate"
    };
    table.push(vec![
        id.clone(),
        variant.into(),
        opt_num(result.attained_at),
        num(result.value),
        flag.into(),
    ]);
    Ok(Outcome {
        summary: json!({
            "function_id": id,
            "space": space_json(&space),
            "value": result.value,
            "exact": result.exact,
            "grid_value": result.grid_value,
            "attained_at": result.attained_at,
            "radii": result.radii,
        }),
        table,
        success: true,
    })
}

fn char_norm(g: &GlobalArgs, r0: f64) -> Result<Outcome, CliError> {
    let space = space(g, None)?;
    let value = char_norm_closed(&space, r0)?;
    let mut table = Table::new(&[
        "function_id",
        "variant",
        "radius",
        "local_value",
        "global_flag",
    ]);
    table.push(vec![
        "chi".into(),
        space.variant().name().into(),
        num(r0),
        num(value),
        "closed-form".into(),
    ]);
    Ok(Outcome {
        summary: json!({
            "space": space_json(&space),
            "r0": r0,
            "value": value,
            "exact": true,
        }),
        table,
        success: true,
    })
}

fn relation_json(r: &RelationReport) -> Value {
    json!({
        "holds": r.holds,
        "witness_c": r.witness_c,
        "counterexample_t": r.counterexample_t,
        "searched_c_range": [r.searched_c_range.0, r.searched_c_range.1],
        "grid_points": r.grid.len(),
    })
}

fn check_relation(kind: RelationKind, lhs: &str, rhs: &str) -> Result<Outcome, CliError> {
    let mut reports: Vec<(&str, String, String, RelationReport)> = Vec::new();
    match kind {
        RelationKind::Young | RelationKind::YoungInverse => {
            let (a, b): (YoungFunction, YoungFunction) = (doc_arg(lhs)?, doc_arg(rhs)?);
            let report = if kind == RelationKind::Young {
                check_prec_default(&a, &b)
            } else {
                check_inverse_prec(&a, &b, &grid::default_t_grid(), &grid::default_c_grid())?
            };
            let label = if kind == RelationKind::Young {
                "young"
            } else {
                "young-inverse"
            };
            reports.push((label, a.to_string(), b.to_string(), report));
        }
        RelationKind::Growth => {
            let (a, b): (GrowthFunction, GrowthFunction) = (doc_arg(lhs)?, doc_arg(rhs)?);
            reports.push((
                "growth",
                a.to_string(),
                b.to_string(),
                check_preceq_default(&a, &b),
            ));
        }
        RelationKind::Approx => {
            let (a, b): (GrowthFunction, GrowthFunction) = (doc_arg(lhs)?, doc_arg(rhs)?);
            let r = check_approx(&a, &b, &grid::default_t_grid(), &grid::default_c_grid());
            reports.push(("growth", a.to_string(), b.to_string(), r.forward));
            reports.push(("growth", b.to_string(), a.to_string(), r.backward));
        }
    }
    let mut table = Table::new(&[
        "relation",
        "lhs",
        "rhs",
        "holds",
        "witness_c",
        "counterexample_t",
    ]);
    for (label, a, b, r) in &reports {
        table.push(vec![
            (*label).into(),
            a.clone(),
            b.clone(),
            r.holds.to_string(),
            opt_num(r.witness_c),
            opt_num(r.counterexample_t),
        ]);
    }
    let holds = reports.iter().all(|r| r.3.holds);
    Ok(Outcome {
        summary: json!({
            "kind": format!("{kind:?}").to_lowercase(),
            "holds": holds,
            "reports": reports.iter().map(|r| relation_json(&r.3)).collect::<Vec<_>>(),
        }),
        table,
        success: holds,
    })
}

fn run_fixture(
    fixture: &TheoremFixture,
    label: &str,
    direction: DirectionArg,
    assumed_c: Option<f64>,
) -> Result<Vec<SuiteEntry>, CliError> {
    let mut entries = Vec::new();
    let sufficiency = crate::inclusion::verify_sufficiency(fixture)?;
    if direction != DirectionArg::Necessity {
        entries.push(SuiteEntry {
            label: label.into(),
            expected_pass: true,
            report: sufficiency.clone(),
        });
    }
    if direction != DirectionArg::Sufficiency {
        let assumed = assumed_c.unwrap_or(sufficiency.measured_constant);
        if !(assumed.is_finite() && assumed > 0.0) {
            return Err(CliError::Input(
                "no positive constant to assume for necessity; pass --assumed-c".into(),
            ));
        }
        entries.push(SuiteEntry {
            label: label.into(),
            expected_pass: true,
            report: crate::inclusion::verify_necessity(fixture, assumed)?,
        });
    }
    Ok(entries)
}

fn parse_theorem(name: &str) -> Result<TheoremId, CliError> {
    TheoremId::parse(name).ok_or_else(|| {
        let known: Vec<_> = TheoremId::ALL.iter().map(|t| t.name()).collect();
        CliError::Input(format!(
            "unknown theorem `{name}`; expected all or one of {}",
            known.join(", ")
        ))
    })
}

fn verify(
    g: &GlobalArgs,
    theorem: &str,
    direction: DirectionArg,
    assumed_c: Option<f64>,
) -> Result<Outcome, CliError> {
    let entries = if let Some(path) = &g.fixture {
        let doc: FixtureDoc = load(path)?;
        let base = base_dir(path);
        let id = match (doc.theorem, theorem) {
            (Some(t), "all") => t,
            (Some(t), name) if t.name() == name => t,
            (Some(t), name) => {
                return Err(CliError::Input(format!(
                    "--theorem {name} does not match the fixture's theorem {t}"
                )))
            }
            (None, "all") => {
                return Err(CliError::Input(
                    "fixture has no theorem; pass --theorem".into(),
                ))
            }
            (None, name) => parse_theorem(name)?,
        };
        let (radii, _) = resolve_radii(g, doc.radii.clone())?;
        let mut samples = docs::resolve_samples(doc.samples, &base)?;
        samples.extend(sample_corpus(
            g.seed,
            doc.random_samples,
            doc.dimension,
            &radii,
        )?);
        let fixture = TheoremFixture::new(
            id,
            doc.space1.resolve(&base)?,
            doc.space2.resolve(&base)?,
            doc.dimension,
            radii,
            samples,
            doc.override_hypotheses || g.override_hypotheses,
        )?;
        run_fixture(&fixture, id.name(), direction, assumed_c.or(doc.assumed_c))?
    } else if theorem == "all" {
        let (radii, _) = resolve_radii(g, None)?;
        builtin_suite_on(g.seed, radii)?
            .into_iter()
            .filter(|e| match direction {
                DirectionArg::Both => true,
                DirectionArg::Sufficiency => e.report.direction == Direction::Sufficiency,
                DirectionArg::Necessity => e.report.direction == Direction::Necessity,
            })
            .collect()
    } else {
        let id = parse_theorem(theorem)?;
        let (radii, _) = resolve_radii(g, None)?;
        let fixture = builtin_fixture_on(id, g.seed, radii)?;
        run_fixture(&fixture, id.name(), direction, assumed_c)?
    };
    let entries: Vec<SuiteEntry> = entries
        .into_iter()
        .map(|e| SuiteEntry {
            report: e.report.with_tolerance(g.tol),
            ..e
        })
        .collect();

    let mut table = Table::new(&["sample_id", "lhs", "rhs", "ratio", "bound", "pass"]);
    let mut reports = Vec::new();
    for e in &entries {
        let r = &e.report;
        for row in &r.rows {
            table.push(vec![
                format!("{}/{}/{}", e.label, r.direction, row.sample_id),
                num(row.lhs),
                num(row.rhs),
                num(row.ratio),
                num(row.bound),
                row.pass.to_string(),
            ]);
        }
        let mut m = Map::new();
        m.insert("label".into(), json!(e.label));
        m.insert("theorem".into(), json!(r.theorem.name()));
        m.insert("direction".into(), json!(r.direction.name()));
        m.insert("passed".into(), json!(r.passed));
        m.insert("expected_pass".into(), json!(e.expected_pass));
        m.insert("measured_constant".into(), json!(r.measured_constant));
        m.insert("proof_constant".into(), json!(r.proof_constant));
        m.insert("overridden".into(), json!(r.overridden));
        m.insert("note".into(), json!(r.note));
        m.insert("rows".into(), json!(r.rows.len()));
        reports.push(Value::Object(m));
    }
    let success = entries.iter().all(SuiteEntry::as_expected);
    Ok(Outcome {
        summary: json!({ "passed": success, "reports": reports }),
        table,
        success,
    })
}
