//! Numerical audit of the monotonicity proof for `ln Γ(x+1) / ln((x²+1)/(x+1))`.
//!
//! The proof writes the ratio as `f/g` with `f = ln Γ(x+1)`, `g = ln((x²+1)/(x+1))`
//! and reduces the monotonicity of `f′/g′` to the sign of an auxiliary function
//! `q`, whose derivative is governed by `q₁`. Every intermediate function is
//! evaluated here exactly as displayed, and each assertion of the argument is
//! checked on a grid.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::ln_rational_base;
use crate::error::{domain, Error, Result};
use crate::grid::{inset_grid, linspace, midpoint_grid};
use crate::polycert::{h1, h3, h4, h5};
use crate::quotient::gamma_log_ratio;
use crate::refcore::{digamma, ln_gamma, polygamma, EULER_GAMMA};
use crate::report;
use crate::search::{bisect, differences, sign_change_indices};

/// `ln Γ(x+1) / ln((x²+1)/(x+1))` on `(0, 1]`.
pub fn ratio_r(x: f64) -> Result<f64> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(domain("ratio_R", x, "(0, 1]"));
    }
    gamma_log_ratio(1.0, x)
}

fn check_unit_closed(what: &'static str, x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(domain(what, x, "[0, 1]"))
    }
}

/// `(x−1)(x²+2x−1) − (x+1)(x²+1) ln((x²+1)/(x+1))`.
fn h2(x: f64) -> f64 {
    (x - 1.0) * (x * x + 2.0 * x - 1.0) - (x + 1.0) * (x * x + 1.0) * ln_rational_base(1.0, x)
}

/// The five expressions of the auxiliary sign lemma: `h₁, h₃, h₄, h₅` are
/// polynomials, `h₂` is transcendental.
pub fn lemma_expr(i: u32, x: f64) -> Result<f64> {
    check_unit_closed("lemma_expr", x)?;
    Ok(match i {
        1 => h1().eval_f64(x),
        2 => h2(x),
        3 => h3().eval_f64(x),
        4 => h4().eval_f64(x),
        5 => h5().eval_f64(x),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "lemma expression index {i} not in 1..=5"
            )))
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProofFunction {
    FOverGPrime,
    Q,
    Q1,
    Q1Prime,
}

impl ProofFunction {
    pub const ALL: [ProofFunction; 4] = [
        ProofFunction::FOverGPrime,
        ProofFunction::Q,
        ProofFunction::Q1,
        ProofFunction::Q1Prime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProofFunction::FOverGPrime => "f_over_g_prime",
            ProofFunction::Q => "q",
            ProofFunction::Q1 => "q1",
            ProofFunction::Q1Prime => "q1_prime",
        }
    }

    fn closed_domain(self) -> bool {
        matches!(self, ProofFunction::Q | ProofFunction::Q1)
    }
}

impl fmt::Display for ProofFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProofFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProofFunction::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownFunction(s.to_string()))
    }
}

/// Evaluates one of the displayed proof functions.
///
/// `q` and `q₁` extend continuously to `[0, 1]`; the others need `0 < x < 1`.
pub fn proof_function(name: ProofFunction, x: f64) -> Result<f64> {
    if name.closed_domain() {
        check_unit_closed(name.name(), x)?;
    } else if !(x > 0.0 && x < 1.0) {
        return Err(domain(name.name(), x, "(0, 1)"));
    }
    match name {
        ProofFunction::FOverGPrime => f_over_g_prime(x),
        ProofFunction::Q => q(x),
        ProofFunction::Q1 => q1(x),
        ProofFunction::Q1Prime => q1_prime(x),
    }
}

fn f_over_g_prime(x: f64) -> Result<f64> {
    let num = (x - 1.0) * digamma(x + 1.0)? - ln_gamma(x + 1.0)?;
    Ok((x + 1.0) * (x * x + 1.0) * num / h2(x))
}

fn q(x: f64) -> Result<f64> {
    let t = (x + 1.0) * (x * x + 1.0) / h1().eval_f64(x) * h2(x) * polygamma(1, x + 1.0)?;
    Ok(ln_gamma(x + 1.0)? - (x - 1.0) * digamma(x + 1.0)? - t)
}

fn q1(x: f64) -> Result<f64> {
    Ok(2.0 * h3().eval_f64(x) * polygamma(1, x + 1.0)?
        + (x + 1.0) * (x * x + 1.0) * h1().eval_f64(x) * polygamma(2, x + 1.0)?)
}

fn q1_prime(x: f64) -> Result<f64> {
    let inner = 3.0 * (3.0 * x * x + 2.0 * x + 1.0) * polygamma(2, x + 1.0)?
        + (x + 1.0) * (x * x + 1.0) * polygamma(3, x + 1.0)?;
    Ok(12.0 * h4().eval_f64(x) * polygamma(1, x + 1.0)? + h1().eval_f64(x) * inner)
}

/// `(f′/g′)′ = (1−x) h₁ q / h₂²`.
pub fn f_over_g_prime_derivative(x: f64) -> Result<f64> {
    let h = h2(x);
    Ok((1.0 - x) * h1().eval_f64(x) * q(x)? / (h * h))
}

/// `q′ = −h₂ q₁ / h₁²`.
pub fn q_derivative(x: f64) -> Result<f64> {
    let p = h1().eval_f64(x);
    Ok(-h2(x) * q1(x)? / (p * p))
}

/// The majorant `h₅/(x+1)³` for `q₁′`.
pub fn q1_prime_majorant(x: f64) -> f64 {
    h5().eval_f64(x) / (x + 1.0).powi(3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    Sign,
    Monotonicity,
    UniqueZero,
    UniqueMinimum,
    EndpointValue,
    Limit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimVerdict {
    Pass,
    Fail,
}

impl fmt::Display for ClaimVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimVerdict::Pass => "pass",
            ClaimVerdict::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProofClaim {
    pub name: String,
    pub kind: ClaimKind,
    pub interval: (f64, f64),
    pub expected: String,
    pub verdict: ClaimVerdict,
    pub witness: Option<f64>,
    pub measured: f64,
}

impl ProofClaim {
    pub fn passed(&self) -> bool {
        self.verdict == ClaimVerdict::Pass
    }
}

pub fn all_pass(claims: &[ProofClaim]) -> bool {
    claims.iter().all(ProofClaim::passed)
}

/// Truncation of `value` to `decimals` places equals `printed`, the way a
/// value shown as `3.922⋯` is read.
pub fn matches_printed(value: f64, printed: f64, decimals: i32) -> bool {
    let scale = 10f64.powi(decimals);
    (value * scale).trunc() == (printed * scale).round()
}

struct Builder {
    claims: Vec<ProofClaim>,
}

impl Builder {
    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        name: &str,
        kind: ClaimKind,
        interval: (f64, f64),
        expected: &str,
        ok: bool,
        witness: Option<f64>,
        measured: f64,
    ) {
        let verdict = if ok { ClaimVerdict::Pass } else { ClaimVerdict::Fail };
        // a failing claim always points somewhere
        let witness = witness.or(if ok { None } else { Some(interval.0) });
        self.claims.push(ProofClaim {
            name: name.to_string(),
            kind,
            interval,
            expected: expected.to_string(),
            verdict,
            witness,
            measured,
        });
    }

    /// `sign·f > 0` at every grid point. Measures the extreme value nearest the
    /// wrong side.
    fn sign(
        &mut self,
        name: &str,
        expected: &str,
        xs: &[f64],
        sign: f64,
        f: impl Fn(f64) -> Result<f64>,
    ) -> Result<()> {
        let mut worst = f64::INFINITY;
        let mut witness = None;
        for &x in xs {
            let v = sign * f(x)?;
            if v < worst {
                worst = v;
            }
            if !(v > 0.0) && witness.is_none() {
                witness = Some(x);
            }
        }
        let interval = (xs[0], xs[xs.len() - 1]);
        self.push(
            name,
            ClaimKind::Sign,
            interval,
            expected,
            witness.is_none(),
            witness,
            sign * worst,
        );
        Ok(())
    }

    /// Strict monotonicity in exact double comparison. Measures the number of
    /// non-strict steps.
    fn monotone(
        &mut self,
        name: &str,
        expected: &str,
        xs: &[f64],
        increasing: bool,
        f: impl Fn(f64) -> Result<f64>,
    ) -> Result<()> {
        let values: Vec<f64> = xs.iter().map(|&x| f(x)).collect::<Result<_>>()?;
        let s = if increasing { 1.0 } else { -1.0 };
        let bad: Vec<usize> = differences(&values)
            .iter()
            .enumerate()
            .filter(|(_, d)| !(s * **d > 0.0))
            .map(|(i, _)| i)
            .collect();
        let interval = (xs[0], xs[xs.len() - 1]);
        let witness = bad.first().map(|&i| xs[i]);
        self.push(
            name,
            ClaimKind::Monotonicity,
            interval,
            expected,
            bad.is_empty(),
            witness,
            bad.len() as f64,
        );
        Ok(())
    }
}

/// Checks every assertion of the proof on grids of `grid_n` points.
///
/// Open-interval claims use the inset grid; claims stated on `[0, 1]` use the
/// closed grid so endpoint behaviour is audited rather than assumed.
pub fn audit_proof(grid_n: usize) -> Result<Vec<ProofClaim>> {
    if grid_n < 100 {
        return Err(Error::InvalidArgument(format!(
            "grid_n must be at least 100, got {grid_n}"
        )));
    }
    let open = inset_grid(0.0, 1.0, grid_n);
    let closed = linspace(0.0, 1.0, grid_n);
    let mut b = Builder { claims: Vec::new() };

    for (i, name) in [(1, "h1"), (3, "h3"), (4, "h4"), (5, "h5")] {
        b.sign(
            &format!("lemma2_{name}_negative"),
            &format!("{name}(x) < 0 on (0,1)"),
            &open,
            -1.0,
            |x| lemma_expr(i, x),
        )?;
    }
    b.sign("lemma2_h2_positive", "h2(x) > 0 on (0,1)", &open, 1.0, |x| {
        lemma_expr(2, x)
    })?;
    let h2_0 = lemma_expr(2, 0.0)?;
    b.push(
        "lemma2_h2_at_zero",
        ClaimKind::EndpointValue,
        (0.0, 0.0),
        "h2(0) = 1 within 1e-12",
        (h2_0 - 1.0).abs() <= 1e-12,
        None,
        h2_0,
    );

    for (name, x, printed, decimals, shown) in [
        ("q1_at_zero", 0.0, 3.922, 3, "q1(0) = -2psi'(1) - 3psi''(1) = 3.922..."),
        (
            "q1_at_one",
            1.0,
            -45.128,
            3,
            "q1(1) = 80(1 - pi^2/6) - 16psi''(2) = -45.128...",
        ),
    ] {
        let v = q1(x)?;
        b.push(
            name,
            ClaimKind::EndpointValue,
            (x, x),
            shown,
            matches_printed(v, printed, decimals),
            None,
            v,
        );
    }
    let q0 = q(0.0)?;
    b.push(
        "q_at_zero",
        ClaimKind::EndpointValue,
        (0.0, 0.0),
        "q(0) = (pi^2/6 - 3gamma)/3 = -0.028...",
        matches_printed(q0, -0.028, 3),
        None,
        q0,
    );
    let q_1 = q(1.0)?;
    b.push(
        "q_at_one",
        ClaimKind::EndpointValue,
        (1.0, 1.0),
        "|q(1)| <= 1e-10",
        q_1.abs() <= 1e-10,
        None,
        q_1,
    );

    b.sign("q1_prime_negative", "q1'(x) < 0 on [0,1]", &closed, -1.0, q1_prime)?;
    b.sign(
        "q1_prime_below_majorant",
        "q1'(x) < h5(x)/(x+1)^3 on [0,1]",
        &closed,
        -1.0,
        |x| Ok(q1_prime(x)? - q1_prime_majorant(x)),
    )?;
    b.monotone(
        "q1_strictly_decreasing",
        "q1 strictly decreasing on [0,1]",
        &closed,
        false,
        q1,
    )?;

    let q1_values: Vec<f64> = closed.iter().map(|&x| q1(x)).collect::<Result<_>>()?;
    let changes = sign_change_indices(&q1_values);
    let root = match changes.as_slice() {
        [(i, j)] => bisect(|x| q1(x).unwrap_or(f64::NAN), closed[*i], closed[*j], 1e-12),
        _ => None,
    };
    b.push(
        "q1_unique_zero",
        ClaimKind::UniqueZero,
        (0.0, 1.0),
        "q1 has exactly one sign change on the grid and bisection converges to 1e-12",
        changes.len() == 1 && root.is_some(),
        root.or_else(|| changes.first().map(|&(i, _)| closed[i])),
        changes.len() as f64,
    );

    let q_values: Vec<f64> = open.iter().map(|&x| q(x)).collect::<Result<_>>()?;
    let dq = differences(&q_values);
    let dq_changes = sign_change_indices(&dq);
    let argmin = (0..q_values.len())
        .min_by(|&i, &j| q_values[i].total_cmp(&q_values[j]))
        .map(|i| open[i]);
    let down_then_up = matches!(dq_changes.as_slice(), [(i, _)] if dq[*i] < 0.0);
    // the minimum of q sits at the zero of q1, since q′ = −h₂q₁/h₁²
    let near_root = match (argmin, root) {
        (Some(m), Some(r)) => (m - r).abs() <= 2.0 / grid_n as f64,
        _ => false,
    };
    b.push(
        "q_unique_minimum",
        ClaimKind::UniqueMinimum,
        (open[0], open[grid_n - 1]),
        "first differences of q change sign exactly once, - to +, at the zero of q1",
        down_then_up && near_root,
        argmin,
        dq_changes.len() as f64,
    );
    b.sign("q_negative_interior", "q(x) < 0 on (0,1)", &open, -1.0, q)?;

    b.sign(
        "f_over_g_prime_derivative_positive",
        "(f'/g')' = (1-x)h1 q/h2^2 > 0 on (0,1)",
        &open,
        1.0,
        f_over_g_prime_derivative,
    )?;
    b.monotone(
        "f_over_g_prime_increasing",
        "f'/g' strictly increasing on (0,1)",
        &open,
        true,
        f_over_g_prime,
    )?;

    let ratio_grid = linspace(1e-4, 1.0 - 1e-4, grid_n);
    b.monotone(
        "ratio_strictly_increasing",
        "ratio strictly increasing on [1e-4, 1-1e-4]",
        &ratio_grid,
        true,
        ratio_r,
    )?;
    let (lo, hi) = (EULER_GAMMA, 2.0 * (1.0 - EULER_GAMMA));
    b.sign(
        "ratio_sandwich",
        "gamma < ratio(x) < 2(1-gamma) on (0,1)",
        &open,
        1.0,
        |x| {
            let r = ratio_r(x)?;
            Ok((r - lo).min(hi - r))
        },
    )?;
    let r0 = ratio_r(1e-8)?;
    b.push(
        "ratio_limit_at_zero",
        ClaimKind::Limit,
        (0.0, 1e-8),
        "ratio(0+) = gamma within 1e-6",
        (r0 - lo).abs() <= 1e-6,
        None,
        r0,
    );
    let r1 = ratio_r(1.0 - 1e-8)?;
    b.push(
        "ratio_limit_at_one",
        ClaimKind::Limit,
        (1.0 - 1e-8, 1.0),
        "ratio(1-) = 2(1-gamma) within 1e-6",
        (r1 - hi).abs() <= 1e-6,
        None,
        r1,
    );

    Ok(b.claims)
}

/// Finite-difference check of the derivative of `h₂/((x+1)(x²+1))`.
#[derive(Clone, Debug, Serialize)]
pub struct DerivativeIdentityCheck {
    pub points: usize,
    /// Against `(1−x) h₁ / ((x+1)²(x²+1)²)`.
    pub max_relative_error: f64,
    /// Extremes of (finite difference) / `(x−1) h₁ / ((x+1)²(x²+1)²)`.
    pub printed_form_ratio: (f64, f64),
}

pub fn h2_quotient_derivative_check(points: usize) -> DerivativeIdentityCheck {
    let h = 1e-6;
    let u = |x: f64| h2(x) / ((x + 1.0) * (x * x + 1.0));
    let mut max_rel: f64 = 0.0;
    let mut ratio = (f64::INFINITY, f64::NEG_INFINITY);
    for x in midpoint_grid(0.0, 1.0, points) {
        let fd = (u(x + h) - u(x - h)) / (2.0 * h);
        let d = (x + 1.0) * (x + 1.0) * (x * x + 1.0) * (x * x + 1.0);
        let corrected = (1.0 - x) * h1().eval_f64(x) / d;
        max_rel = max_rel.max(((fd - corrected) / corrected).abs());
        let r = fd / -corrected;
        ratio = (ratio.0.min(r), ratio.1.max(r));
    }
    DerivativeIdentityCheck {
        points,
        max_relative_error: max_rel,
        printed_form_ratio: ratio,
    }
}

pub fn claims_markdown(claims: &[ProofClaim]) -> String {
    let rows: Vec<Vec<String>> = claims
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                c.expected.clone(),
                report::short(c.measured),
                c.verdict.to_string(),
                report::opt_short(c.witness),
            ]
        })
        .collect();
    report::markdown_table(&["claim", "expected", "measured", "verdict", "witness"], &rows)
}

pub fn claims_csv(claims: &[ProofClaim]) -> String {
    let rows: Vec<Vec<String>> = claims
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                format!("{:?}", c.kind).to_lowercase(),
                report::real(c.interval.0),
                report::real(c.interval.1),
                report::real(c.measured),
                c.verdict.to_string(),
                c.witness.map(report::real).unwrap_or_default(),
            ]
        })
        .collect();
    report::csv_table(&["claim", "kind", "a", "b", "measured", "verdict", "witness"], &rows)
}
