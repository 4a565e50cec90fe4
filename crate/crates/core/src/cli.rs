//! Batch front end. Every command is deterministic and reports through one of
//! three formats; the exit code is 0 when every check passes, 1 when a check
//! fails or a probe finds a violation, and 2 on usage or I/O errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::{
    self, check_monotone, cm_probe, compare_families, comparison_csv, search_lambda_thresholds, Direction, FunctionId,
};
use crate::bounds::{evaluate_family_with, polygamma_bounds, BoundPair, FamilyId, Side};
use crate::error::{Error, Result};
use crate::grid::{inset_grid, log_grid};
use crate::polycert::{certify_negative_on_unit, lemma2_polynomials, SignCertificate, Verdict};
use crate::proofaudit::{self, lemma_expr};
use crate::refcore::{self, polygamma, Constants};
use crate::report::{self, Format};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const DEFAULT_GRID: usize = 10_000;
pub const MIN_GRID: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Probe {
    Cm,
    RatioGlobal,
    Tau,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    /// One point with `x`, otherwise a sweep of the interval.
    Bounds {
        family: FamilyId,
        x: Option<f64>,
    },
    /// Both sides when `side` is absent.
    Compare {
        side: Option<Side>,
        families: Vec<FamilyId>,
    },
    Audit,
    Lemma2,
    /// The standard set of monotonicity claims when `function` is absent.
    Monotone {
        function: Option<FunctionId>,
        direction: Option<Direction>,
    },
    Conjecture {
        probe: Probe,
        max_order: usize,
        step: f64,
    },
    OpenproblemLambda {
        lambda_tol: f64,
    },
    PolygammaCheck {
        max_order: u32,
    },
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub grid_n: usize,
    /// Command default when absent.
    pub interval: Option<(f64, f64)>,
    pub output_format: Format,
    /// Standard output when absent.
    pub output_path: Option<PathBuf>,
    pub constants: Constants,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            grid_n: DEFAULT_GRID,
            interval: None,
            output_format: Format::Markdown,
            output_path: None,
            constants: refcore::constants(),
        }
    }
}

/// A rendered report and whether everything in it passed.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

pub fn run(config: &RunConfig) -> i32 {
    let outcome = match execute(config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &config.output_path {
        Some(path) => {
            std::fs::write(path, outcome.text.as_bytes()).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(outcome.text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| format!("cannot write to standard output: {e}"))
        }
    };
    match written {
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Ok(()) if outcome.passed => EXIT_PASS,
        Ok(()) => EXIT_FAIL,
    }
}

/// Runs the command and renders its report without writing it anywhere.
pub fn execute(config: &RunConfig) -> Result<Outcome> {
    if config.grid_n < MIN_GRID {
        return Err(Error::InvalidArgument(format!("--grid must be at least {MIN_GRID}")));
    }
    if let Some((a, b)) = config.interval {
        crate::error::check_interval(a, b)?;
    }
    let fmt = config.output_format;
    match &config.command {
        Command::Bounds { family, x } => bounds(config, *family, *x),
        Command::Compare { side, families } => compare(config, *side, families),
        Command::Audit => {
            let claims = proofaudit::audit_proof(config.grid_n)?;
            let text = match fmt {
                Format::Json => report::json(&claims),
                Format::Csv => proofaudit::claims_csv(&claims),
                Format::Markdown => format!("# Proof audit\n\n{}", proofaudit::claims_markdown(&claims)),
            };
            Ok(Outcome {
                text,
                passed: proofaudit::all_pass(&claims),
            })
        }
        Command::Lemma2 => lemma2(config),
        Command::Monotone { function, direction } => monotone(config, function.as_ref(), *direction),
        Command::Conjecture { probe, max_order, step } => conjecture(config, *probe, *max_order, *step),
        Command::OpenproblemLambda { lambda_tol } => {
            let t = search_lambda_thresholds(config.grid_n, *lambda_tol)?;
            let passed = t.table_consistent
                && 1.0 < t.lambda_inc_max
                && t.lambda_inc_max <= t.lambda_dec_min
                && t.lambda_dec_min < 6.0;
            let text = match fmt {
                Format::Json => report::json(&t),
                Format::Csv => t.csv(),
                Format::Markdown => t.markdown(),
            };
            Ok(Outcome { text, passed })
        }
        Command::PolygammaCheck { max_order } => polygamma_check(config, *max_order),
    }
}

#[derive(Serialize)]
struct BoundRow {
    #[serde(flatten)]
    pair: BoundPair,
    reference: f64,
    contained: bool,
}

fn bound_row(family: FamilyId, x: f64, c: &Constants) -> Result<BoundRow> {
    let pair = evaluate_family_with(family, x, c)?;
    let reference = pair.reference()?;
    Ok(BoundRow {
        contained: pair.contains(reference),
        pair,
        reference,
    })
}

fn default_interval(family: FamilyId) -> (f64, f64) {
    let (lo, hi) = family.domain().span();
    (lo, if hi.is_finite() { hi } else { 20.0 })
}

fn bounds(config: &RunConfig, family: FamilyId, x: Option<f64>) -> Result<Outcome> {
    let rows: Vec<BoundRow> = match x {
        Some(x) => vec![bound_row(family, x, &config.constants)?],
        None => {
            let (a, b) = config.interval.unwrap_or_else(|| default_interval(family));
            inset_grid(a, b, config.grid_n)
                .into_iter()
                .filter(|&x| family.domain().contains(x))
                .map(|x| bound_row(family, x, &config.constants))
                .collect::<Result<_>>()?
        }
    };
    if rows.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "no grid point lies in the domain of {family}"
        )));
    }
    let passed = rows.iter().all(|r| r.contained);
    let text = match config.output_format {
        Format::Json => report::json(&rows),
        Format::Csv => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        report::real(r.pair.x),
                        report::real(r.pair.lower),
                        report::real(r.pair.upper),
                        report::real(r.reference),
                        r.contained.to_string(),
                    ]
                })
                .collect();
            report::csv_table(&["x", "lower", "upper", "gamma", "contained"], &body)
        }
        Format::Markdown => {
            let failures = rows.iter().filter(|r| !r.contained).count();
            let shown: Vec<&BoundRow> = if rows.len() <= 20 {
                rows.iter().collect()
            } else {
                rows.iter().filter(|r| !r.contained).take(20).collect()
            };
            let body: Vec<Vec<String>> = shown
                .iter()
                .map(|r| {
                    vec![
                        report::short(r.pair.x),
                        report::short(r.pair.lower),
                        report::short(r.pair.upper),
                        report::short(r.reference),
                        r.contained.to_string(),
                    ]
                })
                .collect();
            let gamma = match family.convention() {
                crate::bounds::Convention::GammaOfXPlus1 => "Gamma(x+1)",
                crate::bounds::Convention::GammaOfX => "Gamma(x)",
            };
            format!(
                "# Bounds: {family}\n\n{}\n\n{} of {} points contained.\n\n{}",
                family.citation(),
                rows.len() - failures,
                rows.len(),
                report::markdown_table(&["x", "lower", "upper", gamma, "contained"], &body)
            )
        }
    };
    Ok(Outcome { text, passed })
}

/// Families with both sides defined on all of `(0, 1)`, without the
/// reparametrisations of the theorem's own bounds.
pub fn default_comparison_families() -> Vec<FamilyId> {
    use FamilyId::*;
    vec![
        QiGuo, Ivady, Lambda6, AlzerPower, AlzerBatir, QiGuoZhang, Batir12, Batir14, Batir15,
    ]
}

fn compare(config: &RunConfig, side: Option<Side>, families: &[FamilyId]) -> Result<Outcome> {
    let (a, b) = config.interval.unwrap_or((0.0, 1.0));
    let families = if families.is_empty() {
        default_comparison_families()
    } else {
        families.to_vec()
    };
    let sides = match side {
        Some(s) => vec![s],
        None => vec![Side::Lower, Side::Upper],
    };
    let reports = sides
        .iter()
        .map(|&s| compare_families(s, a, b, config.grid_n, &families))
        .collect::<Result<Vec<_>>>()?;
    let passed = reports.iter().all(|r| r.remarks_hold());
    let text = match config.output_format {
        Format::Json => report::json(&reports),
        Format::Csv => comparison_csv(&reports),
        Format::Markdown => reports.iter().map(|r| r.markdown()).collect::<Vec<_>>().join("\n"),
    };
    Ok(Outcome { text, passed })
}

#[derive(Serialize)]
struct TranscendentalCheck {
    name: &'static str,
    claim: &'static str,
    grid_n: usize,
    at_zero: f64,
    min_value: f64,
    argmin: f64,
    passed: bool,
}

#[derive(Serialize)]
struct Lemma2Report {
    certificates: Vec<SignCertificate>,
    h2: TranscendentalCheck,
}

fn lemma2(config: &RunConfig) -> Result<Outcome> {
    let certificates = lemma2_polynomials()
        .iter()
        .map(|(_, p)| certify_negative_on_unit(p))
        .collect::<Result<Vec<_>>>()?;
    let mut min_value = f64::INFINITY;
    let mut argmin = f64::NAN;
    for x in inset_grid(0.0, 1.0, config.grid_n) {
        let v = lemma_expr(2, x)?;
        if v < min_value {
            min_value = v;
            argmin = x;
        }
    }
    let at_zero = lemma_expr(2, 0.0)?;
    let h2 = TranscendentalCheck {
        name: "h2",
        claim: "(x-1)(x^2+2x-1) - (x+1)(x^2+1) ln((x^2+1)/(x+1)) > 0 on (0,1), value 1 at 0",
        grid_n: config.grid_n,
        at_zero,
        min_value,
        argmin,
        passed: min_value > 0.0 && (at_zero - 1.0).abs() <= 1e-12,
    };
    let passed = h2.passed && certificates.iter().all(|c| c.verdict == Verdict::Certified);
    let names: Vec<&str> = lemma2_polynomials().iter().map(|(n, _)| *n).collect();
    let text = match config.output_format {
        Format::Json => report::json(&Lemma2Report { certificates, h2 }),
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = certificates
                .iter()
                .zip(&names)
                .map(|(c, n)| {
                    vec![
                        n.to_string(),
                        "exact".into(),
                        c.polynomial.to_string(),
                        c.sturm_root_count.to_string(),
                        format!("{:?}", c.verdict).to_lowercase(),
                    ]
                })
                .collect();
            rows.push(vec![
                "h2".into(),
                "numeric".into(),
                h2.claim.into(),
                String::new(),
                if h2.passed { "certified" } else { "refuted" }.into(),
            ]);
            report::csv_table(&["name", "method", "expression", "sturm_root_count", "verdict"], &rows)
        }
        Format::Markdown => {
            let mut rows: Vec<Vec<String>> = certificates
                .iter()
                .zip(&names)
                .map(|(c, n)| {
                    let ends: Vec<String> = c
                        .endpoint_values
                        .iter()
                        .map(|pv| format!("{} -> {}", pv.point, pv.value))
                        .collect();
                    let witness = c
                        .descartes_witness
                        .as_ref()
                        .map(|w| format!("{} -> {}", w.point, w.value))
                        .unwrap_or_else(|| "-".into());
                    vec![
                        n.to_string(),
                        format!("{} < 0 on (0,1)", c.polynomial),
                        c.descartes_bound.to_string(),
                        c.sturm_root_count.to_string(),
                        ends.join(", "),
                        witness,
                        format!("{:?}", c.verdict).to_lowercase(),
                    ]
                })
                .collect();
            rows.push(vec![
                "h2".into(),
                "transcendental, > 0 on (0,1)".into(),
                "-".into(),
                "-".into(),
                format!(
                    "min {} at {}; h2(0) = {}",
                    report::short(min_value),
                    report::short(argmin),
                    at_zero
                ),
                "-".into(),
                if h2.passed { "verified numerically" } else { "failed" }.into(),
            ]);
            format!(
                "# Auxiliary sign lemma\n\n{}",
                report::markdown_table(
                    &[
                        "name",
                        "claim",
                        "sign changes",
                        "Sturm roots",
                        "evaluations",
                        "Descartes witness",
                        "verdict"
                    ],
                    &rows
                )
            )
        }
    };
    Ok(Outcome { text, passed })
}

fn standard_monotone_claims() -> Vec<(FunctionId, Direction)> {
    use crate::proofaudit::ProofFunction;
    vec![
        (FunctionId::RatioR, Direction::Increasing),
        (FunctionId::LambdaRatio(6.0), Direction::Decreasing),
        (FunctionId::Proof(ProofFunction::FOverGPrime), Direction::Increasing),
        (FunctionId::Proof(ProofFunction::Q1), Direction::Decreasing),
    ]
}

fn monotone_reports(reports: &[analysis::MonotonicityReport], fmt: Format) -> Outcome {
    let passed = reports.iter().all(|r| r.consistent());
    let text = match fmt {
        Format::Json => report::json(&reports),
        Format::Csv => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.function_id.clone(),
                        report::real(r.interval.0),
                        report::real(r.interval.1),
                        r.grid_n.to_string(),
                        r.direction.to_string(),
                        r.strict_violations.len().to_string(),
                        report::real(r.min_abs_diff),
                        r.verdict.to_string(),
                    ]
                })
                .collect();
            report::csv_table(
                &[
                    "function",
                    "a",
                    "b",
                    "grid_n",
                    "direction",
                    "violations",
                    "min_abs_diff",
                    "verdict",
                ],
                &rows,
            )
        }
        Format::Markdown => reports.iter().map(|r| r.markdown()).collect::<Vec<_>>().join("\n"),
    };
    Outcome { text, passed }
}

fn monotone(config: &RunConfig, function: Option<&FunctionId>, direction: Option<Direction>) -> Result<Outcome> {
    let (a, b) = config.interval.unwrap_or((0.0, 1.0));
    let claims = match function {
        Some(f) => vec![(*f, direction.unwrap_or(Direction::Increasing))],
        None => standard_monotone_claims(),
    };
    let reports = claims
        .iter()
        .map(|(f, d)| check_monotone(f, a, b, *d, config.grid_n))
        .collect::<Result<Vec<_>>>()?;
    Ok(monotone_reports(&reports, config.output_format))
}

pub const TAU_PROBES: [f64; 4] = [0.5, 1.0, 2.0, 6.0];

fn conjecture(config: &RunConfig, probe: Probe, max_order: usize, step: f64) -> Result<Outcome> {
    match probe {
        Probe::Cm => {
            let (a, b) = config.interval.unwrap_or((0.1, 50.0));
            let r = cm_probe(&FunctionId::HCm, a, b, max_order, step)?;
            let text = match config.output_format {
                Format::Json => report::json(&r),
                Format::Csv => r.csv(),
                Format::Markdown => r.markdown(),
            };
            Ok(Outcome {
                passed: r.consistent(),
                text,
            })
        }
        Probe::RatioGlobal => {
            let (a, b) = config.interval.unwrap_or((0.0, 50.0));
            let r = check_monotone(&FunctionId::RatioR, a, b, Direction::Increasing, config.grid_n)?;
            Ok(monotone_reports(&[r], config.output_format))
        }
        Probe::Tau => {
            let (a, b) = config.interval.unwrap_or((1e-3, 50.0));
            let reports = TAU_PROBES
                .iter()
                .map(|&t| check_monotone(&FunctionId::TauRatio(t), a, b, Direction::Increasing, config.grid_n))
                .collect::<Result<Vec<_>>>()?;
            Ok(monotone_reports(&reports, config.output_format))
        }
    }
}

#[derive(Serialize)]
struct PolygammaRow {
    k: u32,
    x: f64,
    lower: f64,
    value: f64,
    upper: f64,
    contained: bool,
}

fn polygamma_check(config: &RunConfig, max_order: u32) -> Result<Outcome> {
    if !(1..=3).contains(&max_order) {
        return Err(Error::UnsupportedOrder(max_order));
    }
    let (a, b) = config.interval.unwrap_or((0.01, 100.0));
    if !(a > 0.0) {
        return Err(Error::InvalidArgument(
            "polygamma-check needs a positive interval".into(),
        ));
    }
    let mut rows = Vec::new();
    for k in 1..=max_order {
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        for x in log_grid(a, b, config.grid_n) {
            let br = polygamma_bounds(k, x)?;
            let value = sign * polygamma(k, x)?;
            rows.push(PolygammaRow {
                k,
                x,
                lower: br.lower,
                value,
                upper: br.upper,
                contained: br.lower < value && value < br.upper,
            });
        }
    }
    let passed = rows.iter().all(|r| r.contained);
    let text = match config.output_format {
        Format::Json => report::json(&rows),
        Format::Csv => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.k.to_string(),
                        report::real(r.x),
                        report::real(r.lower),
                        report::real(r.value),
                        report::real(r.upper),
                        r.contained.to_string(),
                    ]
                })
                .collect();
            report::csv_table(&["k", "x", "lower", "value", "upper", "contained"], &body)
        }
        Format::Markdown => {
            let body: Vec<Vec<String>> = (1..=max_order)
                .map(|k| {
                    let of_k: Vec<&PolygammaRow> = rows.iter().filter(|r| r.k == k).collect();
                    let bad = of_k.iter().filter(|r| !r.contained).count();
                    vec![k.to_string(), of_k.len().to_string(), bad.to_string()]
                })
                .collect();
            format!(
                "# Polygamma sandwich\n\n(k-1)!/x^k + k!/(2x^(k+1)) < (-1)^(k+1) psi^(k)(x) < (k-1)!/x^k + k!/x^(k+1) on {} log-spaced points of [{}, {}].\n\n{}",
                config.grid_n,
                report::short(a),
                report::short(b),
                report::markdown_table(&["k", "points", "violations"], &body)
            )
        }
    };
    Ok(Outcome { text, passed })
}

#[derive(Parser, Debug)]
#[command(
    name = "gamma-envelope",
    version,
    about = "Verify elementary bounds for the gamma function"
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
    /// Grid size for sweeps
    #[arg(long = "grid", global = true, default_value_t = DEFAULT_GRID)]
    grid: usize,
    /// Interval overriding the command default
    #[arg(long, global = true, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
    interval: Option<Vec<f64>>,
    /// Output format: csv, json or markdown
    #[arg(long, global = true, default_value = "markdown")]
    format: Format,
    /// Output file (standard output when omitted)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Bound family, e.g. qi_guo or batir_14 (compare: repeat to choose the set)
    #[arg(long, global = true)]
    family: Vec<FamilyId>,
    /// Bracket width for the lambda threshold search
    #[arg(long = "lambda-tol", global = true, default_value_t = 1e-4)]
    lambda_tol: f64,
    /// Highest difference order (cm) or polygamma order (polygamma-check)
    #[arg(long = "max-order", global = true)]
    max_order: Option<usize>,
    /// Lattice step of the complete-monotonicity probe
    #[arg(long, global = true, default_value_t = 0.01)]
    step: f64,
}

#[derive(Subcommand, Debug)]
enum CliCommand {
    /// Evaluate a family at one point (--x) or check containment over a grid
    Bounds {
        #[arg(long, allow_negative_numbers = true)]
        x: Option<f64>,
    },
    /// Compare families pointwise and check the published comparison remarks
    Compare {
        #[arg(long)]
        side: Option<Side>,
    },
    /// Audit every step of the monotonicity proof
    Audit,
    /// Certify the auxiliary sign lemma
    Lemma2,
    /// Check strict monotonicity of a registered function
    Monotone {
        /// ratio_R, lambda_ratio(L), tau_ratio(T), F_unitball, h_cm, f_over_g_prime, q, q1, q1_prime
        #[arg(long)]
        function: Option<FunctionId>,
        #[arg(long)]
        direction: Option<Direction>,
    },
    /// Falsification probes for the conjectures
    Conjecture {
        #[arg(value_enum)]
        probe: Probe,
    },
    /// Estimate the monotonicity thresholds in lambda
    OpenproblemLambda,
    /// Check the polygamma sandwich
    PolygammaCheck,
}

fn config_from_cli(cli: Cli) -> Result<RunConfig> {
    let interval = cli.interval.map(|v| (v[0], v[1]));
    let single_family = || -> Result<FamilyId> {
        match cli.family.as_slice() {
            [] => Ok(FamilyId::QiGuo),
            [f] => Ok(*f),
            _ => Err(Error::InvalidArgument("bounds takes a single --family".into())),
        }
    };
    let command = match cli.command {
        CliCommand::Bounds { x } => Command::Bounds {
            family: single_family()?,
            x,
        },
        CliCommand::Compare { side } => Command::Compare {
            side,
            families: cli.family.clone(),
        },
        CliCommand::Audit => Command::Audit,
        CliCommand::Lemma2 => Command::Lemma2,
        CliCommand::Monotone { function, direction } => Command::Monotone { function, direction },
        CliCommand::Conjecture { probe } => Command::Conjecture {
            probe,
            max_order: cli.max_order.unwrap_or(6),
            step: cli.step,
        },
        CliCommand::OpenproblemLambda => Command::OpenproblemLambda {
            lambda_tol: cli.lambda_tol,
        },
        CliCommand::PolygammaCheck => {
            let k = cli.max_order.unwrap_or(3);
            Command::PolygammaCheck {
                max_order: u32::try_from(k).unwrap_or(u32::MAX),
            }
        }
    };
    Ok(RunConfig {
        command,
        grid_n: cli.grid,
        interval,
        output_format: cli.format,
        output_path: cli.out,
        constants: refcore::constants(),
    })
}

/// Parses `args` (program name first) and runs the command.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    match config_from_cli(cli) {
        Ok(config) => run(&config),
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(main_with_args(["gamma-envelope", "frobnicate"]), EXIT_USAGE);
        assert_eq!(main_with_args(["gamma-envelope", "audit", "--grid", "10"]), EXIT_USAGE);
        assert_eq!(
            main_with_args(["gamma-envelope", "bounds", "--family", "nope"]),
            EXIT_USAGE
        );
        assert_eq!(
            main_with_args(["gamma-envelope", "monotone", "--interval", "1", "0"]),
            EXIT_USAGE
        );
    }

    #[test]
    fn single_point_triple() {
        let config = RunConfig {
            output_format: Format::Json,
            ..RunConfig::new(Command::Bounds {
                family: FamilyId::QiGuo,
                x: Some(0.5),
            })
        };
        let out = execute(&config).unwrap();
        assert!(out.passed);
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        let row = &v[0];
        assert!((row["lower"].as_f64().unwrap() - 0.8571302430934683).abs() < 1e-15);
        assert!((row["upper"].as_f64().unwrap() - 0.9001094979848737).abs() < 1e-15);
        assert!((row["reference"].as_f64().unwrap() - 0.886226925452758).abs() < 1e-15);
    }

    #[test]
    fn wrong_euler_constant_fails_the_sweep() {
        let mut config = RunConfig::new(Command::Bounds {
            family: FamilyId::QiGuo,
            x: None,
        });
        config.grid_n = 200;
        assert!(execute(&config).unwrap().passed);
        config.constants = Constants::from_euler_gamma(0.6);
        assert!(!execute(&config).unwrap().passed);
    }
}
