//! Acceptance criteria, one line per criterion. Runs as a plain binary so the
//! lines always reach the test log; exits non-zero if any criterion fails.

use std::process::ExitCode;

use gamma_envelope::analysis::{
    check_monotone, cm_probe, compare_families, find_crossover, lambda_ratio, search_lambda_thresholds,
    unitball_checks, Direction, FindingVerdict, FunctionId,
};
use gamma_envelope::bounds::{evaluate_family, extended_bounds, polygamma_bounds, theorem_bounds, FamilyId, Side};
use gamma_envelope::cli::{self, Command, Probe, RunConfig};
use gamma_envelope::grid::{inset_grid, log_grid, midpoint_grid};
use gamma_envelope::polycert::{certify_negative_on_unit, h1, h3, h4, h5, Verdict};
use gamma_envelope::proofaudit::{self, lemma_expr, proof_function, ratio_r, ProofFunction};
use gamma_envelope::refcore::{constants, ln_gamma, polygamma, EULER_GAMMA};
use gamma_envelope::report::Format;
use num_bigint::BigInt;
use num_rational::BigRational;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const GRID: usize = 10_000;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn gamma1(x: f64) -> f64 {
    ln_gamma(x + 1.0).unwrap().exp()
}

fn theorem_containment() -> Outcome {
    let c = constants();
    let xs = inset_grid(0.0, 1.0, GRID);
    for &x in &xs {
        let p = theorem_bounds(x, c.alpha_sharp, c.beta_sharp).map_err(|e| e.to_string())?;
        let g = gamma1(x);
        ensure(
            p.lower < g && g < p.upper,
            format!("not strict at x = {x}: {} < {g} < {}", p.lower, p.upper),
        )?;
    }
    Ok(format!("strict on {} points of (1e-6, 1-1e-6)", xs.len()))
}

fn sharpness() -> Outcome {
    let c = constants();
    let low = inset_grid(0.9, 1.0, GRID)
        .into_iter()
        .find(|&x| theorem_bounds(x, c.alpha_sharp - 1e-3, c.beta_sharp).unwrap().lower >= gamma1(x));
    let high = inset_grid(0.0, 0.1, GRID)
        .into_iter()
        .find(|&x| theorem_bounds(x, c.alpha_sharp, c.beta_sharp + 1e-3).unwrap().upper <= gamma1(x));
    match (low, high) {
        (Some(a), Some(b)) => Ok(format!(
            "alpha-1e-3 fails at x = {a:.6}, beta+1e-3 fails at x = {b:.3e}"
        )),
        _ => Err(format!("violations: alpha side {low:?}, beta side {high:?}")),
    }
}

fn limits() -> Outcome {
    let r0 = ratio_r(1e-8).map_err(|e| e.to_string())?;
    let r1 = ratio_r(1.0 - 1e-8).map_err(|e| e.to_string())?;
    ensure((r0 - EULER_GAMMA).abs() <= 1e-6, format!("ratio(1e-8) = {r0}"))?;
    ensure(
        (r1 - 2.0 * (1.0 - EULER_GAMMA)).abs() <= 1e-6,
        format!("ratio(1-1e-8) = {r1}"),
    )?;
    Ok(format!("ratio(1e-8) = {r0:.10}, ratio(1-1e-8) = {r1:.10}"))
}

fn proof_anchors() -> Outcome {
    let q1 = |x| proof_function(ProofFunction::Q1, x).unwrap();
    let q = |x| proof_function(ProofFunction::Q, x).unwrap();
    let mut failures = Vec::new();
    for (name, value, target, tol) in [
        ("q1(0)", q1(0.0), 3.922, 5e-4),
        ("q1(1)", q1(1.0), -45.128, 5e-4),
        ("q(0)", q(0.0), -0.0289, 1e-4),
        ("q(1)", q(1.0), 0.0, 1e-10),
    ] {
        let off = (value - target).abs();
        if off.is_nan() || off > tol {
            failures.push(format!(
                "{name} = {value:.9} is {off:.3e} from {target} (tolerance {tol:e})"
            ));
        }
    }
    let claims = proofaudit::audit_proof(GRID).map_err(|e| e.to_string())?;
    for c in claims.iter().filter(|c| !c.passed()) {
        failures.push(format!("audit claim {} failed", c.name));
    }
    if failures.is_empty() {
        Ok(format!("anchors within tolerance; {} audit claims pass", claims.len()))
    } else {
        Err(failures.join("; "))
    }
}

fn lemma2_certificates() -> Outcome {
    for (name, p) in [("h1", h1()), ("h3", h3()), ("h4", h4()), ("h5", h5())] {
        let c = certify_negative_on_unit(&p).map_err(|e| e.to_string())?;
        ensure(
            c.verdict == Verdict::Certified && c.sturm_root_count == 0,
            format!("{name} not certified"),
        )?;
    }
    for (name, p, x, v) in [
        ("h1", h1(), 1, -4),
        ("h1", h1(), 2, 29),
        ("h3", h3(), 1, -40),
        ("h3", h3(), 3, 1304),
        ("h4", h4(), 1, -12),
        ("h4", h4(), 2, 49),
        ("h5", h5(), 1, -488),
        ("h5", h5(), 2, 84),
    ] {
        let got = p.eval(&BigRational::from_integer(BigInt::from(x)));
        ensure(
            got == BigRational::from_integer(BigInt::from(v)),
            format!("{name}({x}) = {got}, expected {v}"),
        )?;
    }
    let at_zero = lemma_expr(2, 0.0).unwrap();
    ensure((at_zero - 1.0).abs() <= 1e-12, format!("h2(0) = {at_zero}"))?;
    let min = inset_grid(0.0, 1.0, GRID)
        .into_iter()
        .map(|x| lemma_expr(2, x).unwrap())
        .fold(f64::INFINITY, f64::min);
    ensure(min > 0.0, format!("h2 reaches {min}"))?;
    Ok(format!(
        "four exact certificates, eight anchors exact, h2 > 0 (min {min:.3e}), h2(0) = 1"
    ))
}

fn lemma3() -> Outcome {
    for k in 1..=3u32 {
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        for x in log_grid(0.01, 100.0, 2000) {
            let b = polygamma_bounds(k, x).unwrap();
            let v = sign * polygamma(k, x).unwrap();
            ensure(b.lower < v && v < b.upper, format!("k = {k}, x = {x}"))?;
        }
    }
    Ok("k = 1, 2, 3 on 2000 log-spaced points of [0.01, 100]".into())
}

fn extended() -> Outcome {
    let xs = midpoint_grid(0.0, 20.0, 2000);
    for &x in &xs {
        let p = extended_bounds(x).unwrap();
        let g = gamma1(x);
        ensure(x.fract() != 0.0 && p.lower < g && g < p.upper, format!("x = {x}"))?;
    }
    let mut fact = 1.0;
    for n in 1..=10 {
        fact *= n as f64;
        let p = extended_bounds(n as f64).unwrap();
        let worst = ((p.lower - fact) / fact).abs().max(((p.upper - fact) / fact).abs());
        ensure(worst <= 1e-12, format!("x = {n}: relative gap {worst:e}"))?;
    }
    Ok(format!(
        "contains Gamma(x+1) at {} non-integer points; exact at 1..=10",
        xs.len()
    ))
}

fn lambda_six() -> Outcome {
    let xs = inset_grid(0.0, 1.0, GRID);
    for &x in &xs {
        let p = evaluate_family(FamilyId::Lambda6, x).unwrap();
        ensure(p.contains(gamma1(x)), format!("lambda6 bounds miss Gamma at {x}"))?;
    }
    let r = check_monotone(&FunctionId::LambdaRatio(6.0), 0.0, 1.0, Direction::Decreasing, GRID).unwrap();
    ensure(
        r.consistent(),
        format!("{} violations of strict decrease", r.strict_violations.len()),
    )?;
    let l0 = lambda_ratio(6.0, 1e-7).unwrap();
    let l1 = lambda_ratio(6.0, 1.0 - 1e-7).unwrap();
    ensure((l0 - 6.0 * EULER_GAMMA).abs() <= 1e-5, format!("limit at 0: {l0}"))?;
    ensure(
        (l1 - 7.0 * (1.0 - EULER_GAMMA)).abs() <= 1e-5,
        format!("limit at 1: {l1}"),
    )?;
    Ok(format!("contained and strictly decreasing; limits {l0:.7}, {l1:.7}"))
}

fn remarks() -> Outcome {
    let families = cli::default_comparison_families();
    let mut all_families = families.clone();
    all_families.push(FamilyId::QiGuoRearranged);
    let mut findings = Vec::new();
    for side in [Side::Lower, Side::Upper] {
        let r = compare_families(side, 0.0, 1.0, GRID, &all_families).map_err(|e| e.to_string())?;
        findings.extend(r.remark_findings);
    }
    let must_pass = [
        "remark2.1",
        "remark2.2",
        "remark2.3",
        "remark2.4",
        "remark2.5",
        "remark2.6",
        "remark3.1",
        "remark3.2",
        "remark3.3",
        "remark3.4.lower",
        "remark1.lower",
    ];
    for id in must_pass {
        let f = findings
            .iter()
            .find(|f| f.claim_id == id)
            .ok_or(format!("{id} not evaluated"))?;
        ensure(f.verdict == FindingVerdict::Pass, format!("{id}: {}", f.detail))?;
    }
    for id in ["remark3.4.upper", "remark1.upper"] {
        let f = findings
            .iter()
            .find(|f| f.claim_id == id)
            .ok_or(format!("{id} not evaluated"))?;
        ensure(
            f.verdict == FindingVerdict::Flagged && !f.crossovers.is_empty(),
            format!("{id} not documented"),
        )?;
    }
    let lower = find_crossover(FamilyId::QiGuo, FamilyId::Ivady, Side::Lower, 0.0, 1.0).unwrap();
    let upper = find_crossover(FamilyId::QiGuo, FamilyId::Ivady, Side::Upper, 0.0, 1.0).unwrap();
    ensure(lower.is_empty(), format!("unexpected lower crossovers {lower:?}"))?;
    ensure(!upper.is_empty(), "upper crossover not found")?;
    Ok(format!(
        "{} predicates pass, 2 flagged; qi_guo/ivady upper crossover at {:.8}",
        must_pass.len(),
        upper[0]
    ))
}

fn unit_ball() -> Outcome {
    let r = unitball_checks(0.5 + 1e-3, 50.0, 5000).map_err(|e| e.to_string())?;
    ensure(r.increasing.consistent(), "F not strictly increasing")?;
    ensure(
        r.concavity_violations.is_empty(),
        format!("{} concavity violations", r.concavity_violations.len()),
    )?;
    ensure(r.at_least_one.is_empty(), "F reaches 1")?;
    ensure(r.power_bound_violations.is_empty(), "Gamma(x+1) < (2x)^x fails")?;
    Ok("increasing, concave, below 1, Gamma(x+1) < (2x)^x on 5000 points".into())
}

fn conjectures() -> Outcome {
    let r = check_monotone(&FunctionId::RatioR, 0.0, 50.0, Direction::Increasing, GRID).unwrap();
    ensure(
        r.consistent(),
        format!("ratio on (0,50): VIOLATION at {:?}", r.strict_violations.first()),
    )?;
    for t in cli::TAU_PROBES {
        let r = check_monotone(&FunctionId::TauRatio(t), 1e-3, 50.0, Direction::Increasing, GRID).unwrap();
        ensure(
            r.consistent(),
            format!("tau = {t}: VIOLATION at {:?}", r.strict_violations.first()),
        )?;
    }
    let cm = cm_probe(&FunctionId::HCm, 0.1, 50.0, 6, 0.01).unwrap();
    ensure(cm.consistent(), format!("h_cm: VIOLATION {:?}", cm.violations.first()))?;
    Ok(format!(
        "no counterexample (ratio on (0,50), tau in {:?}, h_cm to order 6 at {} points)",
        cli::TAU_PROBES,
        cm.points
    ))
}

fn open_problem() -> Outcome {
    let t = search_lambda_thresholds(GRID, 1e-4).map_err(|e| e.to_string())?;
    ensure(
        1.0 < t.lambda_inc_max && t.lambda_inc_max <= t.lambda_dec_min && t.lambda_dec_min < 6.0,
        "ordering",
    )?;
    ensure(
        t.inc_bracket.1 - t.inc_bracket.0 <= 1e-3 && t.dec_bracket.1 - t.dec_bracket.0 <= 1e-3,
        "bracket width",
    )?;
    ensure(t.table_consistent, "classification table interleaves")?;
    let d = search_lambda_thresholds(2 * GRID, 1e-4).map_err(|e| e.to_string())?;
    let (m1, m2) = (
        (d.lambda_inc_max - t.lambda_inc_max).abs(),
        (d.lambda_dec_min - t.lambda_dec_min).abs(),
    );
    ensure(
        m1 < 1e-2 && m2 < 1e-2,
        format!("grid doubling moves estimates by {m1:e}, {m2:e}"),
    )?;
    Ok(format!(
        "lambda_inc_max = {:.5}, lambda_dec_min = {:.5}; doubling the grid moves them by {m1:.1e}, {m2:.1e}",
        t.lambda_inc_max, t.lambda_dec_min
    ))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let commands = [
        (
            Command::Compare {
                side: None,
                families: Vec::new(),
            },
            Format::Csv,
        ),
        (
            Command::Compare {
                side: None,
                families: Vec::new(),
            },
            Format::Json,
        ),
        (Command::Audit, Format::Json),
        (Command::Audit, Format::Csv),
        (Command::OpenproblemLambda { lambda_tol: 1e-4 }, Format::Csv),
        (
            Command::Conjecture {
                probe: Probe::Tau,
                max_order: 6,
                step: 0.01,
            },
            Format::Json,
        ),
        (
            Command::Bounds {
                family: FamilyId::QiGuoExtended,
                x: None,
            },
            Format::Csv,
        ),
    ];
    for (i, (command, format)) in commands.iter().enumerate() {
        let mut outputs = Vec::new();
        for run in 0..2 {
            let path = dir.path().join(format!("{i}-{run}"));
            let config = RunConfig {
                output_format: *format,
                output_path: Some(path.clone()),
                ..RunConfig::new(command.clone())
            };
            ensure(cli::run(&config) == cli::EXIT_PASS, format!("{command:?} did not pass"))?;
            outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
        }
        ensure(
            outputs[0] == outputs[1],
            format!("{command:?} as {format} differs between runs"),
        )?;
    }
    Ok(format!(
        "{} command/format pairs byte-identical across runs",
        commands.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("theorem containment", theorem_containment),
        ("sharpness both ways", sharpness),
        ("limits", limits),
        ("proof anchors", proof_anchors),
        ("lemma 2 exact certificates", lemma2_certificates),
        ("lemma 3 polygamma sandwich", lemma3),
        ("extended bounds", extended),
        ("lambda = 6 family", lambda_six),
        ("remark reproduction", remarks),
        ("remark 5 unit-ball function", unit_ball),
        ("conjecture probes", conjectures),
        ("open problem thresholds", open_problem),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
