//! Grid verification of monotonicity, bound-family comparison, and numerical
//! probes of the open problem and conjectures about these ratios.
//!
//! Probe verdicts are `consistent` or `violated`. A consistent probe means no
//! counterexample was found on the grid, nothing more.

mod cm;
mod compare;
mod lambda;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use cm::{cm_probe, cm_tolerance, CMReport, CMViolation};
pub use compare::{
    compare_families, comparison_csv, find_crossover, normalized_bound, remark_claims, remark_findings,
    ComparisonReport, Crossover, FindingVerdict, Predicate, RemarkClaim, RemarkFinding,
};
pub use lambda::{
    classify_lambda, search_lambda_thresholds, LambdaClass, LambdaClassification, LambdaSweep, LambdaThresholds,
};

use crate::error::{check_interval, domain, Error, Result};
use crate::grid::inset_grid;
use crate::proofaudit::{proof_function, ProofFunction};
use crate::quotient::{gamma_log_ratio, log_quotient_h, tau_log_ratio};
use crate::refcore::ln_gamma;
use crate::report;

/// Functions known to [`check_monotone`] and [`cm_probe`].
///
/// Text forms: `ratio_R`, `lambda_ratio(6)`, `tau_ratio(0.5)`, `F_unitball`,
/// `h_cm`, and the proof functions `f_over_g_prime`, `q`, `q1`, `q1_prime`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FunctionId {
    /// `ln Γ(x+1)/ln((x²+1)/(x+1))` on all of `x > 0`.
    RatioR,
    LambdaRatio(f64),
    TauRatio(f64),
    FUnitball,
    HCm,
    Proof(ProofFunction),
}

impl FunctionId {
    pub fn eval(&self, x: f64) -> Result<f64> {
        match *self {
            FunctionId::RatioR => gamma_log_ratio(1.0, x),
            FunctionId::LambdaRatio(l) => gamma_log_ratio(l, x),
            FunctionId::TauRatio(t) => tau_log_ratio(t, x),
            FunctionId::FUnitball => f_unitball(x),
            FunctionId::HCm => log_quotient_h(x),
            FunctionId::Proof(p) => proof_function(p, x),
        }
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionId::RatioR => f.write_str("ratio_R"),
            FunctionId::LambdaRatio(l) => write!(f, "lambda_ratio({l})"),
            FunctionId::TauRatio(t) => write!(f, "tau_ratio({t})"),
            FunctionId::FUnitball => f.write_str("F_unitball"),
            FunctionId::HCm => f.write_str("h_cm"),
            FunctionId::Proof(p) => f.write_str(p.name()),
        }
    }
}

impl FromStr for FunctionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let param = |prefix: &str| -> Option<Result<f64>> {
            let inner = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            Some(match inner.trim().parse::<f64>() {
                Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
                _ => Err(Error::InvalidArgument(format!("bad parameter in `{s}`"))),
            })
        };
        if let Some(l) = param("lambda_ratio") {
            return l.map(FunctionId::LambdaRatio);
        }
        if let Some(t) = param("tau_ratio") {
            return t.map(FunctionId::TauRatio);
        }
        match s {
            "ratio_R" => Ok(FunctionId::RatioR),
            "F_unitball" => Ok(FunctionId::FUnitball),
            "h_cm" => Ok(FunctionId::HCm),
            _ => s
                .parse::<ProofFunction>()
                .map(FunctionId::Proof)
                .map_err(|_| Error::UnknownFunction(s.into())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl Direction {
    fn sign(self) -> f64 {
        match self {
            Direction::Increasing => 1.0,
            Direction::Decreasing => -1.0,
        }
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "increasing" => Ok(Direction::Increasing),
            "decreasing" => Ok(Direction::Decreasing),
            _ => Err(Error::InvalidArgument(format!("unknown direction `{s}`"))),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Increasing => "increasing",
            Direction::Decreasing => "decreasing",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeVerdict {
    Consistent,
    Violated,
}

impl fmt::Display for ProbeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProbeVerdict::Consistent => "consistent",
            ProbeVerdict::Violated => "violated",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonotonicityReport {
    pub function_id: String,
    pub interval: (f64, f64),
    pub grid_n: usize,
    pub direction: Direction,
    /// Left grid point and the offending difference.
    pub strict_violations: Vec<(f64, f64)>,
    pub min_abs_diff: f64,
    pub verdict: ProbeVerdict,
}

impl MonotonicityReport {
    pub fn consistent(&self) -> bool {
        self.verdict == ProbeVerdict::Consistent
    }

    pub fn markdown(&self) -> String {
        let mut out = format!(
            "# Monotonicity: {}\n\nClaimed {} on ({}, {}) at {} grid points: **{}**.\n\nSmallest |difference|: {}.\n",
            self.function_id,
            self.direction,
            report::short(self.interval.0),
            report::short(self.interval.1),
            self.grid_n,
            self.verdict,
            report::short(self.min_abs_diff),
        );
        if !self.strict_violations.is_empty() {
            let rows: Vec<Vec<String>> = self
                .strict_violations
                .iter()
                .map(|&(x, d)| vec![report::short(x), report::short(d)])
                .collect();
            out.push('\n');
            out.push_str(&report::markdown_table(&["x", "difference"], &rows));
        }
        out
    }

    pub fn csv(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .strict_violations
            .iter()
            .map(|&(x, d)| vec![report::real(x), report::real(d)])
            .collect();
        report::csv_table(&["x", "difference"], &rows)
    }
}

/// Strict monotonicity of `values` in `direction`, in exact double comparison.
pub(crate) fn monotone_violations(xs: &[f64], values: &[f64], direction: Direction) -> (Vec<(f64, f64)>, f64) {
    let s = direction.sign();
    let mut bad = Vec::new();
    let mut min_abs = f64::INFINITY;
    for (i, w) in values.windows(2).enumerate() {
        let d = w[1] - w[0];
        min_abs = min_abs.min(d.abs());
        if !(s * d > 0.0) {
            bad.push((xs[i], d));
        }
    }
    (bad, min_abs)
}

/// Samples `grid_n` points on `[a+ε, b−ε]`, `ε = (b−a)·10⁻⁶`, and checks every
/// consecutive difference in the claimed direction.
pub fn check_monotone(
    function: &FunctionId,
    a: f64,
    b: f64,
    direction: Direction,
    grid_n: usize,
) -> Result<MonotonicityReport> {
    check_interval(a, b)?;
    if grid_n < 2 {
        return Err(Error::InvalidArgument("grid_n must be at least 2".into()));
    }
    let xs = inset_grid(a, b, grid_n);
    let values: Vec<f64> = xs.iter().map(|&x| function.eval(x)).collect::<Result<_>>()?;
    let (strict_violations, min_abs_diff) = monotone_violations(&xs, &values, direction);
    let verdict = if strict_violations.is_empty() {
        ProbeVerdict::Consistent
    } else {
        ProbeVerdict::Violated
    };
    Ok(MonotonicityReport {
        function_id: function.to_string(),
        interval: (a, b),
        grid_n,
        direction,
        strict_violations,
        min_abs_diff,
        verdict,
    })
}

/// `ln Γ(x+1) / ln((x²+λ)/(x+λ))` on `(0, 1)`.
pub fn lambda_ratio(lambda: f64, x: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(domain("lambda_ratio", x, "(0, 1)"));
    }
    gamma_log_ratio(lambda, x)
}

/// `ln Γ(x) / ln((x²+τ)/(x+τ))` for `x > 0`, with value `−(1+τ)γ` at `x = 1`.
pub fn tau_ratio(tau: f64, x: f64) -> Result<f64> {
    tau_log_ratio(tau, x)
}

/// `ln x / ln((1+x²)/(1+x))`, with value 2 at `x = 1`.
pub fn h_cm(x: f64) -> Result<f64> {
    log_quotient_h(x)
}

/// `ln Γ(x+1) / (x ln 2x)` for `x > 1/2`.
pub fn f_unitball(x: f64) -> Result<f64> {
    if !(x.is_finite() && x > 0.5) {
        return Err(domain("F_unitball", x, "(1/2, inf)"));
    }
    let ln_2x = if x < 1.0 {
        (2.0 * x - 1.0).ln_1p()
    } else {
        (2.0 * x).ln()
    };
    Ok(ln_gamma(x + 1.0)? / (x * ln_2x))
}

/// Shape checks for `F` on a grid of `(a, b)`.
#[derive(Clone, Debug, Serialize)]
pub struct UnitBallReport {
    pub interval: (f64, f64),
    pub grid_n: usize,
    pub increasing: MonotonicityReport,
    /// Points where the second difference is not negative.
    pub concavity_violations: Vec<(f64, f64)>,
    /// Points where `F(x) ≥ 1`.
    pub at_least_one: Vec<f64>,
    /// Points where `Γ(x+1) < (2x)^x` fails, compared in log space.
    pub power_bound_violations: Vec<f64>,
    pub verdict: ProbeVerdict,
}

pub fn unitball_checks(a: f64, b: f64, grid_n: usize) -> Result<UnitBallReport> {
    check_interval(a, b)?;
    if grid_n < 3 {
        return Err(Error::InvalidArgument("grid_n must be at least 3".into()));
    }
    let xs = inset_grid(a, b, grid_n);
    let values: Vec<f64> = xs.iter().map(|&x| f_unitball(x)).collect::<Result<_>>()?;
    let (strict_violations, min_abs_diff) = monotone_violations(&xs, &values, Direction::Increasing);
    let concavity_violations: Vec<(f64, f64)> = values
        .windows(3)
        .enumerate()
        .map(|(i, w)| (xs[i + 1], w[2] - 2.0 * w[1] + w[0]))
        .filter(|&(_, d)| !(d < 0.0))
        .collect();
    let at_least_one: Vec<f64> = xs
        .iter()
        .zip(&values)
        .filter(|(_, &v)| !(v < 1.0))
        .map(|(&x, _)| x)
        .collect();
    let mut power_bound_violations = Vec::new();
    for &x in &xs {
        if !(ln_gamma(x + 1.0)? < x * (2.0 * x).ln()) {
            power_bound_violations.push(x);
        }
    }
    let increasing = MonotonicityReport {
        function_id: FunctionId::FUnitball.to_string(),
        interval: (a, b),
        grid_n,
        direction: Direction::Increasing,
        verdict: if strict_violations.is_empty() {
            ProbeVerdict::Consistent
        } else {
            ProbeVerdict::Violated
        },
        strict_violations,
        min_abs_diff,
    };
    let ok = increasing.consistent()
        && concavity_violations.is_empty()
        && at_least_one.is_empty()
        && power_bound_violations.is_empty();
    Ok(UnitBallReport {
        interval: (a, b),
        grid_n,
        increasing,
        concavity_violations,
        at_least_one,
        power_bound_violations,
        verdict: if ok {
            ProbeVerdict::Consistent
        } else {
            ProbeVerdict::Violated
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proofaudit::ratio_r;
    use crate::refcore::EULER_GAMMA;

    #[test]
    fn registry_round_trips() {
        for s in [
            "ratio_R",
            "lambda_ratio(6)",
            "tau_ratio(0.5)",
            "F_unitball",
            "h_cm",
            "q1_prime",
        ] {
            assert_eq!(s.parse::<FunctionId>().unwrap().to_string(), s);
        }
        assert!(matches!("nope".parse::<FunctionId>(), Err(Error::UnknownFunction(_))));
        assert!("lambda_ratio(-1)".parse::<FunctionId>().is_err());
        assert!("tau_ratio(x)".parse::<FunctionId>().is_err());
    }

    #[test]
    fn lambda_one_is_ratio_r() {
        for x in [1e-3, 0.25, 0.5, 0.999] {
            assert_eq!(lambda_ratio(1.0, x).unwrap(), ratio_r(x).unwrap());
        }
        assert!((lambda_ratio(1.0, 0.5).unwrap() - 0.6624682224041326).abs() < 1e-14);
        assert!((lambda_ratio(6.0, 1e-7).unwrap() - 6.0 * EULER_GAMMA).abs() < 1e-5);
        assert!((lambda_ratio(6.0, 1.0 - 1e-7).unwrap() - 7.0 * (1.0 - EULER_GAMMA)).abs() < 1e-5);
        assert!(lambda_ratio(6.0, 1.0).is_err());
    }

    #[test]
    fn unitball_values() {
        assert_eq!(f_unitball(1.0).unwrap(), 0.0);
        assert!((f_unitball(2.0).unwrap() - 0.25).abs() < 1e-15);
        // mpmath: lnΓ(10⁶+1)/(10⁶ ln(2·10⁶))
        let big = f_unitball(1e6).unwrap();
        assert!((big - 0.8833014477024757).abs() < 1e-12, "{big}");
        assert!(f_unitball(0.5).is_err());
    }

    #[test]
    fn theorem_direction_is_detected() {
        let r = check_monotone(&FunctionId::RatioR, 0.0, 1.0, Direction::Increasing, 2000).unwrap();
        assert!(r.consistent());
        let r = check_monotone(&FunctionId::RatioR, 0.0, 1.0, Direction::Decreasing, 2000).unwrap();
        assert_eq!(r.strict_violations.len(), 1999);
        assert!(check_monotone(&FunctionId::RatioR, 1.0, 1.0, Direction::Increasing, 10).is_err());
    }
}
