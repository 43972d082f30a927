//! Command layer behind the `msep` binary.
//!
//! Every command produces a [`RunReport`] as JSON on standard output (or in
//! the `--output` file) and a one-line human summary on standard error.
//! Exit codes: 0 success, 1 usage or input error, 2 failed verification.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::families::{self, best_layer_count, growth_base, layer_family, lb_count, Family, FamilyError, A, B};
use crate::format::{read_graph_file, write_graph, ReadError};
use crate::graph::Graph;
use crate::separators::{
    brute_force_minimal_separators, enumerate_minimal_ab_separators, enumerate_minimal_separators_par,
    is_minimal_ab_separator, max_sep_exhaustive, Mode, SeparatorError, DEFAULT_BRUTE_CAP, MAX_EXHAUSTIVE_N,
};
use crate::triangulation::{check_corollary, TriangulationError};
use crate::vertex_set::VertexSet;
use crate::RHO;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "msep",
    version,
    about = "Minimal separator and potential maximal clique toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Write the result (graph file for `gen`, JSON report otherwise) here.
    #[arg(short = 'o', long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for per-root enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Vertex cap for exhaustive subset scans.
    #[arg(long, global = true, default_value_t = DEFAULT_BRUTE_CAP)]
    pub max_brute_n: usize,
    /// Include the separator lists in `count` reports.
    #[arg(long, global = true)]
    pub emit_separators: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a melon, block or glued graph.
    Gen {
        #[arg(value_enum)]
        family: FamilyKind,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        ell: Option<usize>,
    },
    /// Count minimal separators of a graph file.
    Count {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Branch)]
        method: Method,
        /// Restrict to minimal (a,b)-separators; `a,b` as labels or ids.
        #[arg(long)]
        pair: Option<String>,
    },
    /// Run an invariant suite; exits 2 on the first violation.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long)]
        m: Option<usize>,
        #[arg(short, long)]
        input: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        /// Largest m for which `verify family` also enumerates all minimal
        /// (a,b)-separators of block(m).
        #[arg(long, default_value_t = 3)]
        max_enum_m: usize,
    },
    /// Evaluate the lower-bound formulas exactly.
    Formula {
        #[arg(value_enum)]
        what: FormulaKind,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        max_m: Option<usize>,
    },
    /// Exact maximum number of minimal separators over all n-vertex graphs.
    Maxsep {
        #[arg(long)]
        n: usize,
    },
    /// Count potential maximal cliques and minimal separators of a graph file.
    Pmc {
        #[arg(short, long)]
        input: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyKind {
    Melon,
    Block,
    Glued,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Branch,
    BranchAll,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VerifyTarget {
    Family,
    Corollary,
    Bounds,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormulaKind {
    LbCount,
    GrowthBase,
    BestM,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Read { path: String, source: ReadError },
    #[error("{path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Separator(#[from] SeparatorError),
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub results: Value,
    pub elapsed_ms: u64,
    pub version: String,
}

/// Captured result of one invocation.
#[derive(Debug, Clone)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Outcome {
    params: BTreeMap<String, Value>,
    results: Value,
    /// Replaces the JSON on stdout (used by `gen` without `--output`).
    raw_stdout: Option<String>,
    summary: String,
    verified: bool,
}

impl Outcome {
    fn new(params: BTreeMap<String, Value>, results: Value, summary: String) -> Self {
        Outcome {
            params,
            results,
            raw_stdout: None,
            summary,
            verified: true,
        }
    }
}

fn params<const N: usize>(entries: [(&str, Value); N]) -> BTreeMap<String, Value> {
    entries
        .into_iter()
        .filter(|(_, v)| !v.is_null())
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

fn require(value: Option<usize>, flag: &str, what: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("`{what}` requires --{flag}")))
}

fn load(path: &Path) -> Result<Graph, CliError> {
    read_graph_file(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })
}

/// A vertex given by label, falling back to a decimal id.
fn resolve_vertex(g: &Graph, token: &str) -> Result<usize, CliError> {
    if let Some(v) = g.vertex_by_label(token) {
        return Ok(v);
    }
    token
        .parse::<usize>()
        .ok()
        .filter(|&v| v < g.n())
        .ok_or_else(|| CliError::Usage(format!("unknown vertex `{token}`")))
}

fn parse_pair(g: &Graph, pair: &str) -> Result<(usize, usize), CliError> {
    let (a, b) = pair
        .split_once(',')
        .ok_or_else(|| CliError::Usage(format!("--pair expects `a,b`, got `{pair}`")))?;
    Ok((resolve_vertex(g, a.trim())?, resolve_vertex(g, b.trim())?))
}

/// `x` in scientific notation with `sig` significant digits, rounded half up.
pub fn scientific(x: &BigUint, sig: usize) -> String {
    let digits = x.to_string();
    let exponent = digits.len() - 1;
    let sig = sig.clamp(1, digits.len());
    let head: BigUint = digits[..sig].parse().expect("decimal digits");
    let round_up = digits.as_bytes().get(sig).is_some_and(|&d| d >= b'5');
    let mut mantissa = (head + u32::from(round_up)).to_string();
    let mut exponent = exponent;
    if mantissa.len() > sig {
        mantissa.truncate(sig);
        exponent += 1;
    }
    let (int, frac) = mantissa.split_at(1);
    if frac.is_empty() {
        format!("{int}e{exponent}")
    } else {
        format!("{int}.{frac}e{exponent}")
    }
}

fn value_name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn rho_bound(n: usize) -> f64 {
    RHO.powi(n as i32)
}

fn cmd_gen(
    family: FamilyKind,
    k: Option<usize>,
    m: Option<usize>,
    ell: Option<usize>,
    common: &Common,
) -> Result<Outcome, CliError> {
    let fam = match family {
        FamilyKind::Melon => Family::Melon {
            k: require(k, "k", "gen melon")?,
        },
        FamilyKind::Block => Family::Block {
            m: require(m, "m", "gen block")?,
        },
        FamilyKind::Glued => Family::Glued {
            ell: require(ell, "ell", "gen glued")?,
            m: require(m, "m", "gen glued")?,
        },
    };
    let g = fam.generate()?;
    let text = write_graph(&g);
    let p = params([
        ("family", json!(value_name(family))),
        ("k", json!(k)),
        ("m", json!(m)),
        ("ell", json!(ell)),
    ]);
    let results = json!({ "n": g.n(), "m": g.edge_count() });
    let summary = format!("{fam}: n={} m={}", g.n(), g.edge_count());
    let mut out = Outcome::new(p, results, summary);
    match &common.output {
        Some(path) => {
            fs::write(path, &text).map_err(|source| CliError::Write {
                path: path.display().to_string(),
                source,
            })?;
        }
        None => out.raw_stdout = Some(text),
    }
    Ok(out)
}

fn cmd_count(input: &Path, method: Method, pair: Option<&str>, common: &Common) -> Result<Outcome, CliError> {
    let g = load(input)?;
    let n = g.n();
    let method_name = value_name(method);
    let pair = pair.map(|p| parse_pair(&g, p)).transpose()?;
    let p = params([
        ("input", json!(input.display().to_string())),
        ("method", json!(method_name)),
        ("pair", json!(pair.map(|(a, b)| [a, b]))),
        ("jobs", json!(common.jobs)),
        ("max_brute_n", json!(common.max_brute_n)),
    ]);

    let mut results = serde_json::Map::new();
    results.insert("n".into(), json!(n));
    let separators: Vec<VertexSet> = match (method, pair) {
        (Method::Brute, pair) => {
            let all = brute_force_minimal_separators(&g, common.max_brute_n)?;
            results.insert("mode".into(), json!("brute"));
            match pair {
                None => all.into_iter().collect(),
                Some((a, b)) => {
                    if a == b {
                        return Err(SeparatorError::SameTerminal(a).into());
                    }
                    all.into_iter()
                        .filter(|s| !s.contains(a) && !s.contains(b))
                        .filter(|s| is_minimal_ab_separator(&g, s, a, b).unwrap_or(false))
                        .collect()
                }
            }
        }
        (_, Some((a, b))) => {
            let r = enumerate_minimal_ab_separators(&g, a, b)?;
            results.insert("mode".into(), json!("ab"));
            results.insert("leaf_count".into(), json!(r.leaf_count));
            results.insert("node_count".into(), json!(r.node_count));
            results.insert("rho_pow_n".into(), json!(rho_bound(n)));
            r.separators.into_iter().collect()
        }
        (_, None) => {
            let mode = if method == Method::Branch {
                Mode::Balanced
            } else {
                Mode::All
            };
            let r = enumerate_minimal_separators_par(&g, mode, common.jobs);
            let max_root = r.max_root_leaves();
            results.insert("mode".into(), json!(mode));
            results.insert("leaf_count".into(), json!(r.leaf_count));
            results.insert("node_count".into(), json!(r.node_count));
            results.insert("max_root_leaf_count".into(), json!(max_root));
            results.insert("rho_pow_n".into(), json!(rho_bound(n)));
            if mode == Mode::Balanced {
                results.insert("leaf_bound_holds".into(), json!(max_root as f64 <= rho_bound(n)));
            }
            r.separators.into_iter().collect()
        }
    };
    results.insert("count".into(), json!(separators.len()));
    if common.emit_separators {
        results.insert("separators".into(), json!(separators));
    }
    let summary = format!(
        "{}: {} minimal separators ({method_name})",
        input.display(),
        separators.len()
    );
    Ok(Outcome::new(p, Value::Object(results), summary))
}

fn verify_family(m: usize, max_enum_m: usize) -> Result<Outcome, CliError> {
    let g = families::block(m)?;
    let expected = 9u64.pow((m - 1) as u32);
    let mut layers = Vec::new();
    let mut counterexample: Option<Value> = None;
    let mut fams = Vec::new();
    for j in 1..=m {
        let fam = layer_family(&g, j)?;
        if counterexample.is_none() {
            if let Some(s) = fam.rejected.first() {
                counterexample = Some(json!({ "kind": "unverified_member", "layer": j, "set": s }));
            }
        }
        layers.push(json!({
            "j": j,
            "candidates": fam.candidates(),
            "verified": fam.separators.len(),
            "rejected": fam.rejected.len(),
            "expected": expected,
        }));
        fams.push(fam);
    }
    let mut disjoint = true;
    for (x, fx) in fams.iter().enumerate() {
        for fy in &fams[x + 1..] {
            if let Some(s) = fx.separators.intersection(&fy.separators).next() {
                disjoint = false;
                if counterexample.is_none() {
                    counterexample = Some(json!({ "kind": "shared_member", "layers": [fx.j, fy.j], "set": s }));
                }
            }
        }
    }
    let sizes_ok = fams
        .iter()
        .all(|f| f.is_complete() && f.separators.len() as u64 == expected);
    let lb = lb_count(m);
    let mut results = json!({
        "m": m,
        "n": g.n(),
        "layers": layers,
        "disjoint": disjoint,
        "lb_count": lb.to_string(),
    });
    let mut exceeds = true;
    if m <= max_enum_m {
        let total = enumerate_minimal_ab_separators(&g, A, B)?.count();
        exceeds = BigUint::from(total) > lb;
        results["ab_count"] = json!(total);
        results["ab_count_exceeds_lb"] = json!(exceeds);
        if !exceeds && counterexample.is_none() {
            counterexample = Some(json!({ "kind": "count_below_lb", "ab_count": total, "lb_count": lb.to_string() }));
        }
    }
    let ok = sizes_ok && disjoint && exceeds;
    results["ok"] = json!(ok);
    results["counterexample"] = counterexample.unwrap_or(Value::Null);
    let summary = format!("verify family m={m}: {}", if ok { "ok" } else { "VIOLATED" });
    let mut out = Outcome::new(
        params([("m", json!(m)), ("max_enum_m", json!(max_enum_m))]),
        results,
        summary,
    );
    out.verified = ok;
    Ok(out)
}

fn verify_corollary(input: &Path, common: &Common) -> Result<Outcome, CliError> {
    let g = load(input)?;
    let report = check_corollary(&g, common.max_brute_n)?;
    let ok = report.corollary_holds;
    let mut results = serde_json::to_value(&report).expect("report serializes");
    results["ok"] = json!(ok);
    results["counterexample"] = if ok {
        Value::Null
    } else {
        json!({ "graph": write_graph(&g) })
    };
    let summary = format!(
        "verify corollary: pmc={} sep={} n={}",
        report.pmc_count, report.sep_count, report.n
    );
    let mut out = Outcome::new(
        params([("input", json!(input.display().to_string()))]),
        results,
        summary,
    );
    out.verified = ok;
    Ok(out)
}

fn verify_bounds(n: usize) -> Result<Outcome, CliError> {
    if !(2..=MAX_EXHAUSTIVE_N).contains(&n) {
        return Err(CliError::Usage(format!(
            "verify bounds needs 2 <= n <= {MAX_EXHAUSTIVE_N}"
        )));
    }
    let mut sequence = Vec::new();
    let mut counterexample = Value::Null;
    let mut previous = 0;
    let mut ok = true;
    for k in 2..=n {
        let best = max_sep_exhaustive(k)?;
        let bound = rho_bound(k) * k as f64;
        let within = best.count as f64 <= bound;
        let monotone = best.count >= previous;
        if (!within || !monotone) && ok {
            ok = false;
            counterexample =
                json!({ "n": k, "sep": best.count, "bound": bound, "witness": write_graph(&best.witness) });
        }
        sequence.push(json!({ "n": k, "sep": best.count, "bound": bound, "ratio": best.count as f64 / rho_bound(k) }));
        previous = best.count;
    }
    let results = json!({ "sequence": sequence, "ok": ok, "counterexample": counterexample });
    let summary = format!("verify bounds up to n={n}: {}", if ok { "ok" } else { "VIOLATED" });
    let mut out = Outcome::new(params([("n", json!(n))]), results, summary);
    out.verified = ok;
    Ok(out)
}

fn cmd_formula(what: FormulaKind, m: Option<usize>, max_m: Option<usize>) -> Result<Outcome, CliError> {
    let p = params([
        ("what", json!(value_name(what))),
        ("m", json!(m)),
        ("max_m", json!(max_m)),
    ]);
    let (results, summary) = match what {
        FormulaKind::LbCount => {
            let m = require(m, "m", "formula lb-count")?;
            if m < 2 {
                return Err(FamilyError::TooFewLayers(m).into());
            }
            let value = lb_count(m);
            let sci = scientific(&value, 5);
            (
                json!({ "m": m, "value": value.to_string(), "scientific": sci }),
                format!("lb_count({m}) = {value}"),
            )
        }
        FormulaKind::GrowthBase => {
            let m = require(m, "m", "formula growth-base")?;
            let base = growth_base(m)?;
            (
                json!({
                    "m": m,
                    "base": base.to_string(),
                    "rounding": "down",
                    "significant_digits": families::GROWTH_DIGITS,
                    "exceeds_cube_root_of_3": base.exceeds_root(3, 3),
                }),
                format!("growth_base({m}) >= {base}"),
            )
        }
        FormulaKind::BestM => {
            let max_m = require(max_m, "max-m", "formula best-m")?;
            let (best, base) = best_layer_count(max_m)?;
            (
                json!({ "max_m": max_m, "best_m": best, "base": base.to_string() }),
                format!("best m <= {max_m}: {best} ({base})"),
            )
        }
    };
    Ok(Outcome::new(p, results, summary))
}

fn cmd_maxsep(n: usize) -> Result<Outcome, CliError> {
    let best = max_sep_exhaustive(n)?;
    let edges: Vec<[usize; 2]> = best.witness.edges().map(|(u, v)| [u, v]).collect();
    let results = json!({
        "n": n,
        "sep": best.count,
        "rho_pow_n_times_n": rho_bound(n) * n as f64,
        "witness": { "n": n, "edges": edges },
    });
    Ok(Outcome::new(
        params([("n", json!(n))]),
        results,
        format!("sep({n}) = {}", best.count),
    ))
}

fn cmd_pmc(input: &Path, common: &Common) -> Result<Outcome, CliError> {
    let g = load(input)?;
    let report = check_corollary(&g, common.max_brute_n)?;
    let summary = format!("{}: pmc={} sep={}", input.display(), report.pmc_count, report.sep_count);
    let results = serde_json::to_value(&report).expect("report serializes");
    Ok(Outcome::new(
        params([("input", json!(input.display().to_string()))]),
        results,
        summary,
    ))
}

fn dispatch(cli: &Cli) -> Result<(String, Outcome), CliError> {
    let common = &cli.common;
    Ok(match &cli.command {
        Command::Gen { family, k, m, ell } => ("gen".into(), cmd_gen(*family, *k, *m, *ell, common)?),
        Command::Count { input, method, pair } => ("count".into(), cmd_count(input, *method, pair.as_deref(), common)?),
        Command::Verify {
            target,
            m,
            input,
            n,
            max_enum_m,
        } => {
            let out = match target {
                VerifyTarget::Family => verify_family(require(*m, "m", "verify family")?, *max_enum_m)?,
                VerifyTarget::Corollary => {
                    let input = input
                        .as_deref()
                        .ok_or_else(|| CliError::Usage("`verify corollary` requires --input".into()))?;
                    verify_corollary(input, common)?
                }
                VerifyTarget::Bounds => verify_bounds(require(*n, "n", "verify bounds")?)?,
            };
            (format!("verify {}", value_name(*target)), out)
        }
        Command::Formula { what, m, max_m } => ("formula".into(), cmd_formula(*what, *m, *max_m)?),
        Command::Maxsep { n } => ("maxsep".into(), cmd_maxsep(*n)?),
        Command::Pmc { input } => ("pmc".into(), cmd_pmc(input, common)?),
    })
}

/// Runs a parsed command and returns its exit code and captured streams.
pub fn run(cli: &Cli) -> Output {
    let started = Instant::now();
    let (command, outcome) = match dispatch(cli) {
        Ok(done) => done,
        Err(e) => {
            return Output {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let report = RunReport {
        command,
        params: outcome.params,
        results: outcome.results,
        elapsed_ms: started.elapsed().as_millis() as u64,
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    let json = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    let code = if outcome.verified { EXIT_OK } else { EXIT_VERIFY };
    let mut stderr = outcome.summary + "\n";
    let stdout = if let Some(raw) = outcome.raw_stdout {
        raw
    } else if let (Some(path), false) = (&cli.common.output, matches!(cli.command, Command::Gen { .. })) {
        if let Err(e) = fs::write(path, &json) {
            return Output {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: format!("error: {}: {e}\n", path.display()),
            };
        }
        String::new()
    } else {
        json
    };
    if code == EXIT_VERIFY {
        stderr.push_str("verification failed\n");
    }
    Output { code, stdout, stderr }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}
