//! Command-line front end: argument parsing, dispatch and report rendering.
//!
//! [`run`] never exits the process; it returns the exit code together with
//! the text destined for stdout and stderr, so the binary and the test
//! suite share one code path.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use octoplane::projective::{chart_round_trip, equivalent, random_triple, separating_functional, Axis, Functional};
use octoplane::properties::{check, check_flexible, find_zero_divisors, zero_divisor_search_size};
use octoplane::sampling::rng;
use octoplane::topology::{builtin_cw, linking_hopf_invariant, multiplication_bidegree, CoefficientSpec};
use octoplane::{AlgebraError, MultiplicationTable, ProjectiveError, Property, TopologyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "octoplane",
    version,
    about = "Audits for Cayley-Dickson algebras, OP2 charts and cohomology"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Seed for every random sample.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Number of random samples (command-specific default).
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Numerical tolerance for floating-point checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Doubling level; for `chart-roundtrip` and `equiv-check`, the real
    /// dimension 1, 2, 4 or 8.
    #[arg(long, global = true)]
    pub level: Option<u32>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HopfMode {
    Bidegree,
    Linking,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Signed multiplication table of the basis.
    Table,
    /// Check one algebraic property at one level.
    Check {
        #[arg(long, value_parser = parse_property)]
        property: Property,
    },
    /// Search for two-term zero divisors.
    ZeroDivisors,
    /// Round trips through the three coordinate charts of the projective plane.
    ChartRoundtrip,
    /// Equivalence of rescaled representatives, and chart separation of pairs.
    EquivCheck,
    /// Cellular cohomology of a built-in cell complex.
    Cohomology {
        #[arg(long, default_value = "OP2")]
        space: String,
        /// Z, Q or Zmod:m.
        #[arg(long, default_value = "Z", value_parser = parse_coeffs)]
        coeffs: CoefficientSpec,
    },
    /// Hopf invariant proxies.
    Hopf {
        #[arg(long, value_enum, default_value_t = HopfMode::Bidegree)]
        mode: HopfMode,
        /// Polygon segments per fiber (linking mode).
        #[arg(long, default_value_t = 256)]
        segments: usize,
    },
    /// Every property at levels 0 to 4, plus flexibility at level 5.
    AuditAll,
}

fn parse_property(s: &str) -> Result<Property, String> {
    Property::from_name(s).ok_or_else(|| {
        let names: Vec<_> = Property::ALL.iter().map(|p| p.name()).collect();
        format!("unknown property `{s}`; expected one of {}", names.join(", "))
    })
}

fn parse_coeffs(s: &str) -> Result<CoefficientSpec, String> {
    s.parse().map_err(|e: TopologyError| e.to_string())
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Internal(_) => EXIT_MISMATCH,
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::LevelTooLarge { .. }
            | AlgebraError::IndexOutOfRange { .. }
            | AlgebraError::BadLength { .. }
            | AlgebraError::NoSamples => CliError::Usage(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<ProjectiveError> for CliError {
    fn from(e: ProjectiveError) -> Self {
        match e {
            ProjectiveError::UnsupportedLevel(_) => CliError::Usage(e.to_string()),
            ProjectiveError::Algebra(a) => a.into(),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<TopologyError> for CliError {
    fn from(e: TopologyError) -> Self {
        match e {
            TopologyError::InvalidArgument(_) | TopologyError::UnknownSpace(_) | TopologyError::BadCoefficients(_) => {
                CliError::Usage(e.to_string())
            }
            TopologyError::Algebra(a) => a.into(),
            TopologyError::Projective(p) => p.into(),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

/// A finished command: JSON document, text rendering, and whether every
/// check agreed with its expectation.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let mut stdout = if cli.global.json {
                serde_json::to_string_pretty(&report.json).expect("json value serializes")
            } else {
                report.text
            };
            stdout.push('\n');
            Outcome {
                code: if report.ok { EXIT_OK } else { EXIT_MISMATCH },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            let msg = match &e {
                CliError::Usage(m) => format!("usage error: {m}\n"),
                CliError::Internal(m) => format!("error: {m}\n"),
            };
            Outcome {
                code: e.code(),
                stdout: String::new(),
                stderr: msg,
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let g = &cli.global;
    if g.tol.is_nan() || g.tol <= 0.0 {
        return Err(CliError::Usage(format!("tolerance must be positive, got {}", g.tol)));
    }
    match &cli.command {
        Command::Table => table(g),
        Command::Check { property } => check_one(g, *property),
        Command::ZeroDivisors => zero_divisors(g),
        Command::ChartRoundtrip => chart_roundtrip(g),
        Command::EquivCheck => equiv_check(g),
        Command::Cohomology { space, coeffs } => cohomology(space, *coeffs),
        Command::Hopf {
            mode: HopfMode::Bidegree,
            ..
        } => hopf_bidegree(g),
        Command::Hopf {
            mode: HopfMode::Linking,
            segments,
        } => hopf_linking(g, *segments),
        Command::AuditAll => audit_all(g),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn table(g: &GlobalArgs) -> Result<Report, CliError> {
    let t = MultiplicationTable::build(g.level.unwrap_or(3))?;
    let ok = t.is_signed_permutation();
    let width = format!("-e{}", t.size() - 1).len();
    let mut text = String::new();
    for i in 0..t.size() {
        let row: Vec<String> = (0..t.size())
            .map(|j| {
                let e = t.get(i, j);
                let s = format!("{}e{}", if e.sign > 0 { "+" } else { "-" }, e.index);
                format!("{s:>width$}")
            })
            .collect();
        text.push_str(&row.join(" "));
        text.push('\n');
    }
    text.pop();
    Ok(Report {
        json: to_value(&t),
        text,
        ok,
    })
}

/// Agreement of a property report with the expected verdict, including an
/// exact recheck of any counterexample.
fn report_ok(r: &octoplane::PropertyReport) -> bool {
    r.matches_expectation() && (r.holds() || r.recheck())
}

fn check_one(g: &GlobalArgs, property: Property) -> Result<Report, CliError> {
    let level = g.level.unwrap_or(3);
    let samples = g.samples.unwrap_or(1000);
    let r = check(property, level, samples, g.seed)?;
    let ok = report_ok(&r);
    let mut json = to_value(&r);
    json["expected"] = json!(if property.expected_to_hold(level) {
        "holds"
    } else {
        "fails"
    });
    json["matches_expectation"] = json!(r.matches_expectation());
    json["seed"] = json!(g.seed);
    let mut text = format!(
        "{} at level {level}: {} (expected {}, {} basis tuples, {} samples, seed {})",
        property.name(),
        if r.holds() { "holds" } else { "fails" },
        if property.expected_to_hold(level) {
            "holds"
        } else {
            "fails"
        },
        r.basis_tuples,
        r.samples,
        g.seed
    );
    if let Some(w) = &r.witness {
        text.push_str(&format!("\nwitness: {w}"));
    }
    Ok(Report { json, text, ok })
}

fn zero_divisors(g: &GlobalArgs) -> Result<Report, CliError> {
    let level = g.level.unwrap_or(4);
    let pairs = find_zero_divisors(level)?;
    let verified = pairs
        .iter()
        .all(|(a, b)| !a.is_zero() && !b.is_zero() && (a * b).is_zero());
    let ok = verified && (pairs.is_empty() == (level <= 3));
    let shown: Vec<Value> = pairs
        .iter()
        .map(|(a, b)| json!({"left": a.to_string(), "right": b.to_string()}))
        .collect();
    let json = json!({
        "level": level,
        "search_size": zero_divisor_search_size(level),
        "count": pairs.len(),
        "verified": verified,
        "pairs": shown,
    });
    let mut text = format!(
        "level {level}: {} zero-divisor pairs among {} candidates (exactly verified: {verified})",
        pairs.len(),
        zero_divisor_search_size(level)
    );
    if let Some((a, b)) = pairs.first() {
        text.push_str(&format!("\nfirst: ({a}) * ({b}) = 0"));
    }
    Ok(Report { json, text, ok })
}

/// Doubling level of a real dimension in {1, 2, 4, 8}.
fn level_of_dimension(d: u32) -> Result<u32, CliError> {
    match d {
        1 | 2 | 4 | 8 => Ok(d.trailing_zeros()),
        _ => Err(CliError::Usage(format!("dimension must be 1, 2, 4 or 8, got {d}"))),
    }
}

fn chart_roundtrip(g: &GlobalArgs) -> Result<Report, CliError> {
    let d = g.level.unwrap_or(8);
    let level = level_of_dimension(d)?;
    let samples = g.samples.unwrap_or(1000);
    let mut r = rng(g.seed);
    let mut per_axis = Vec::new();
    let mut max_error: f64 = 0.0;
    for (k, axis) in Axis::ALL.iter().enumerate() {
        let errs = chart_round_trip(&Functional::coordinate(k), level, samples, &mut r)?;
        max_error = max_error.max(errs.max());
        per_axis.push(json!({
            "axis": format!("{axis:?}"),
            "forward_backward": errs.forward_backward,
            "backward_forward": errs.backward_forward,
            "well_defined": errs.well_defined,
        }));
    }
    let ok = max_error < g.tol;
    let json = json!({
        "dimension": d,
        "samples": samples,
        "seed": g.seed,
        "tol": g.tol,
        "max_error": max_error,
        "charts": per_axis,
        "verdict": pass_fail(ok),
    });
    let text = format!(
        "chart round trips, dimension {d}, {samples} samples per chart, seed {}: max error {max_error:.3e} ({})",
        g.seed,
        pass_fail(ok)
    );
    Ok(Report { json, text, ok })
}

fn equiv_check(g: &GlobalArgs) -> Result<Report, CliError> {
    let d = g.level.unwrap_or(8);
    let level = level_of_dimension(d)?;
    let samples = g.samples.unwrap_or(1000);
    let mut r = rng(g.seed);
    let mut max_error: f64 = 0.0;
    let mut false_equivalences = 0;
    let mut separation_failures = 0;
    for _ in 0..samples {
        let p = random_triple(level, &mut r)?;
        let p2 = p.random_equivalent(&mut r, g.tol.max(1e-9))?;
        max_error = max_error.max(p.invariants().max_difference(&p2.invariants()));
        let q = random_triple(level, &mut r)?;
        if equivalent(&p, &q, g.tol) {
            false_equivalences += 1;
        }
        if separating_functional(&p, &q, g.tol).is_err() {
            separation_failures += 1;
        }
    }
    let ok = max_error < g.tol && false_equivalences == 0 && separation_failures == 0;
    let json = json!({
        "dimension": d,
        "samples": samples,
        "seed": g.seed,
        "tol": g.tol,
        "max_error": max_error,
        "false_equivalences": false_equivalences,
        "separation_failures": separation_failures,
        "verdict": pass_fail(ok),
    });
    let text = format!(
        "equivalence, dimension {d}, {samples} samples, seed {}: max invariant error {max_error:.3e}, \
         {false_equivalences} false equivalences, {separation_failures} separation failures ({})",
        g.seed,
        pass_fail(ok)
    );
    Ok(Report { json, text, ok })
}

fn cohomology(space: &str, coeffs: CoefficientSpec) -> Result<Report, CliError> {
    let cw = builtin_cw(space)?;
    let groups = cw.cohomology_table(coeffs);
    let rows: Vec<Value> = groups
        .iter()
        .map(|(k, grp)| json!({"degree": k, "group": grp}))
        .collect();
    let json = json!({
        "space": cw.name,
        "coeffs": coeffs.to_string(),
        "groups": rows,
    });
    let text = groups
        .iter()
        .map(|(k, grp)| format!("H^{k}({}; {coeffs}) = {grp}", cw.name))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Report { json, text, ok: true })
}

const BIDEGREE_PROXY: &str = "proxy: degrees of x -> bx and y -> ya from determinant signs over random units; \
the Hopf construction on a map of bidegree (p, q) has Hopf invariant +-pq";
const LINKING_PROXY: &str = "proxy: Gauss linking number of two fibers of the complex Hopf map S^3 -> S^2 \
after stereographic projection";

fn hopf_bidegree(g: &GlobalArgs) -> Result<Report, CliError> {
    let level = g.level.unwrap_or(3);
    let samples = g.samples.unwrap_or(1000);
    let b = multiplication_bidegree(level, samples, g.seed)?;
    let json = json!({
        "hopf_invariant": b.product(),
        "method": "bidegree",
        "proxy": BIDEGREE_PROXY,
        "level": level,
        "bidegree": [b.left, b.right],
        "samples": samples,
        "seed": g.seed,
        "max_det_deviation": b.max_det_deviation,
    });
    let text = format!(
        "level {level}: bidegree ({:+}, {:+}) over {samples} samples, seed {}, max ||det| - 1| = {:.3e}\n\
         Hopf invariant {:+} ({BIDEGREE_PROXY})",
        b.left,
        b.right,
        g.seed,
        b.max_det_deviation,
        b.product()
    );
    Ok(Report {
        json,
        text,
        ok: b.product().abs() == 1,
    })
}

fn hopf_linking(g: &GlobalArgs, segments: usize) -> Result<Report, CliError> {
    let samples = g.samples.unwrap_or(10);
    let h = linking_hopf_invariant(samples, segments, g.seed)?;
    let json = json!({
        "hopf_invariant": h,
        "method": "linking",
        "proxy": LINKING_PROXY,
        "segments": segments,
        "samples": samples,
        "seed": g.seed,
    });
    let text = format!(
        "linking number {h:+} over {samples} regular-value pairs, {segments} segments, seed {} ({LINKING_PROXY})",
        g.seed
    );
    Ok(Report {
        json,
        text,
        ok: h.abs() == 1,
    })
}

/// Levels covered by the full audit for every property.
pub const AUDIT_LEVELS: std::ops::RangeInclusive<u32> = 0..=4;
/// Extra level at which flexibility is audited.
pub const FLEXIBLE_EXTRA_LEVEL: u32 = 5;
pub const FLEXIBLE_EXTRA_SAMPLES: usize = 100;

fn audit_all(g: &GlobalArgs) -> Result<Report, CliError> {
    let samples = g.samples.unwrap_or(1000);
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    let mut all_ok = true;
    let mut push = |r: octoplane::PropertyReport| {
        let ok = report_ok(&r);
        all_ok &= ok;
        lines.push(format!(
            "{:<26} level {}  {:<6} expected {:<6} {}",
            r.property.name(),
            r.level,
            if r.holds() { "holds" } else { "fails" },
            if r.property.expected_to_hold(r.level) {
                "holds"
            } else {
                "fails"
            },
            pass_fail(ok)
        ));
        rows.push(json!({
            "property": r.property,
            "level": r.level,
            "verdict": r.verdict,
            "expected": if r.property.expected_to_hold(r.level) { "holds" } else { "fails" },
            "matches_expectation": ok,
            "samples": r.samples,
            "basis_tuples": r.basis_tuples,
            "witness": r.witness,
        }));
    };
    for property in Property::ALL {
        for level in AUDIT_LEVELS {
            push(check(property, level, samples, g.seed)?);
        }
    }
    push(check_flexible(FLEXIBLE_EXTRA_LEVEL, FLEXIBLE_EXTRA_SAMPLES, g.seed)?);
    lines.push(format!(
        "seed {}: {}",
        g.seed,
        if all_ok { "all verdicts match" } else { "MISMATCH" }
    ));
    let json = json!({
        "seed": g.seed,
        "samples": samples,
        "all_match": all_ok,
        "results": rows,
    });
    Ok(Report {
        json,
        text: lines.join("\n"),
        ok: all_ok,
    })
}
