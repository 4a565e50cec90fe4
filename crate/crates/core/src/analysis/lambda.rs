//! Numerical search for the monotonicity thresholds of
//! `λ ↦ ln Γ(x+1)/ln((x²+λ)/(x+λ))` on `(0, 1)`.
//!
//! The ratio increases for `λ = 1` and decreases for `λ = 6`; in between it
//! rises and then falls. The thresholds are unknown in closed form, so
//! everything here is an estimate.

use std::fmt;

use serde::Serialize;

use crate::bounds::ln_rational_base;
use crate::error::{Error, Result};
use crate::grid::inset_grid;
use crate::quotient::{gamma_log_ratio, SINGULAR_BAND, ZERO_CUTOFF};
use crate::refcore::ln_gamma;
use crate::report;
use crate::search::{differences, sign_change_indices};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LambdaClass {
    Increasing,
    Decreasing,
    NonMonotone,
}

impl fmt::Display for LambdaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LambdaClass::Increasing => "increasing",
            LambdaClass::Decreasing => "decreasing",
            LambdaClass::NonMonotone => "non-monotone",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LambdaClassification {
    pub lambda: f64,
    pub class: LambdaClass,
    pub positive_diffs: usize,
    pub negative_diffs: usize,
    /// Sign changes in the difference sequence.
    pub sign_changes: usize,
}

/// Grid with `ln Γ(x+1)` cached, since it does not depend on `λ`.
pub struct LambdaSweep {
    xs: Vec<f64>,
    ln_gamma: Vec<f64>,
}

impl LambdaSweep {
    pub fn new(grid_n: usize) -> Result<Self> {
        if grid_n < 3 {
            return Err(Error::InvalidArgument("grid_n must be at least 3".into()));
        }
        let xs = inset_grid(0.0, 1.0, grid_n);
        let ln_gamma = xs.iter().map(|&x| ln_gamma(x + 1.0)).collect::<Result<_>>()?;
        Ok(Self { xs, ln_gamma })
    }

    pub fn values(&self, lambda: f64) -> Result<Vec<f64>> {
        self.xs
            .iter()
            .zip(&self.ln_gamma)
            .map(|(&x, &lg)| {
                if x <= ZERO_CUTOFF || (x - 1.0).abs() < SINGULAR_BAND {
                    gamma_log_ratio(lambda, x)
                } else {
                    Ok(lg / ln_rational_base(lambda, x))
                }
            })
            .collect()
    }

    /// Strict classification: monotone only if every difference has the same
    /// strict sign.
    pub fn classify(&self, lambda: f64) -> Result<LambdaClassification> {
        let d = differences(&self.values(lambda)?);
        let positive_diffs = d.iter().filter(|&&v| v > 0.0).count();
        let negative_diffs = d.iter().filter(|&&v| v < 0.0).count();
        let class = if positive_diffs == d.len() {
            LambdaClass::Increasing
        } else if negative_diffs == d.len() {
            LambdaClass::Decreasing
        } else {
            LambdaClass::NonMonotone
        };
        Ok(LambdaClassification {
            lambda,
            class,
            positive_diffs,
            negative_diffs,
            sign_changes: sign_change_indices(&d).len(),
        })
    }
}

pub fn classify_lambda(lambda: f64, grid_n: usize) -> Result<LambdaClassification> {
    LambdaSweep::new(grid_n)?.classify(lambda)
}

#[derive(Clone, Debug, Serialize)]
pub struct LambdaThresholds {
    pub grid_n: usize,
    pub lambda_tol: f64,
    /// Largest `λ` classified `increasing`.
    pub lambda_inc_max: f64,
    /// `[last increasing, first not increasing]`.
    pub inc_bracket: (f64, f64),
    /// Smallest `λ` classified `decreasing`.
    pub lambda_dec_min: f64,
    /// `[last not decreasing, first decreasing]`.
    pub dec_bracket: (f64, f64),
    /// Every classified `λ`, sorted.
    pub table: Vec<LambdaClassification>,
    /// Increasing, then non-monotone, then decreasing, without interleaving.
    pub table_consistent: bool,
    pub note: &'static str,
}

const COARSE_STEP: f64 = 0.1;
const COARSE_LO: f64 = 1.0;
const COARSE_HI: f64 = 6.0;

/// Coarse sweep of `λ ∈ [1, 6]` at step 0.1, then bisection of both
/// transitions to width `lambda_tol`.
pub fn search_lambda_thresholds(grid_n: usize, lambda_tol: f64) -> Result<LambdaThresholds> {
    if grid_n < 1000 {
        return Err(Error::InvalidArgument(format!(
            "grid_n must be at least 1000, got {grid_n}"
        )));
    }
    if !(lambda_tol > 0.0) {
        return Err(Error::InvalidArgument("lambda_tol must be positive".into()));
    }
    let sweep = LambdaSweep::new(grid_n)?;
    let steps = ((COARSE_HI - COARSE_LO) / COARSE_STEP).round() as usize;
    let mut table: Vec<LambdaClassification> = (0..=steps)
        .map(|i| sweep.classify(COARSE_LO + COARSE_STEP * i as f64))
        .collect::<Result<_>>()?;

    let inc = |c: &LambdaClassification| c.class == LambdaClass::Increasing;
    let dec = |c: &LambdaClassification| c.class == LambdaClass::Decreasing;
    let not_found = |what: &str| Error::InvalidArgument(format!("no {what} transition in the coarse sweep"));

    let i = table
        .iter()
        .rposition(inc)
        .filter(|&i| i + 1 < table.len())
        .ok_or_else(|| not_found("increasing"))?;
    let inc_bracket = bisect_lambda(
        &sweep,
        table[i].lambda,
        table[i + 1].lambda,
        lambda_tol,
        &mut table,
        inc,
    )?;
    let j = table
        .iter()
        .position(dec)
        .filter(|&j| j > 0)
        .ok_or_else(|| not_found("decreasing"))?;
    // the left end must fail the predicate, the right end satisfy it
    let dec_bracket = bisect_lambda(
        &sweep,
        table[j - 1].lambda,
        table[j].lambda,
        lambda_tol,
        &mut table,
        |c| !dec(c),
    )?;

    table.sort_by(|a, b| a.lambda.total_cmp(&b.lambda));
    let rank = |c: &LambdaClassification| match c.class {
        LambdaClass::Increasing => 0,
        LambdaClass::NonMonotone => 1,
        LambdaClass::Decreasing => 2,
    };
    let table_consistent = table.windows(2).all(|w| rank(&w[0]) <= rank(&w[1]));
    Ok(LambdaThresholds {
        grid_n,
        lambda_tol,
        lambda_inc_max: inc_bracket.0,
        inc_bracket,
        lambda_dec_min: dec_bracket.1,
        dec_bracket,
        table,
        table_consistent,
        note: "numerical estimates for an open problem; not certified",
    })
}

/// Shrinks `[lo, hi]` keeping `keep_left(lo)` true and `keep_left(hi)` false.
fn bisect_lambda(
    sweep: &LambdaSweep,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
    table: &mut Vec<LambdaClassification>,
    keep_left: impl Fn(&LambdaClassification) -> bool,
) -> Result<(f64, f64)> {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let c = sweep.classify(mid)?;
        table.push(c);
        if keep_left(&c) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

impl LambdaThresholds {
    pub fn markdown(&self) -> String {
        let mut out = format!(
            "# Monotonicity thresholds in lambda\n\n{}.\n\nGrid: {} points on (0, 1); tolerance {}.\n\n\
             - largest lambda classified increasing: {} (bracket [{}, {}])\n\
             - smallest lambda classified decreasing: {} (bracket [{}, {}])\n\
             - classification table consistent: {}\n\n",
            self.note,
            self.grid_n,
            report::short(self.lambda_tol),
            report::short(self.lambda_inc_max),
            report::short(self.inc_bracket.0),
            report::short(self.inc_bracket.1),
            report::short(self.lambda_dec_min),
            report::short(self.dec_bracket.0),
            report::short(self.dec_bracket.1),
            self.table_consistent,
        );
        let rows: Vec<Vec<String>> = self
            .table
            .iter()
            .map(|c| {
                vec![
                    report::short(c.lambda),
                    c.class.to_string(),
                    c.positive_diffs.to_string(),
                    c.negative_diffs.to_string(),
                    c.sign_changes.to_string(),
                ]
            })
            .collect();
        out.push_str(&report::markdown_table(
            &["lambda", "class", "diffs > 0", "diffs < 0", "sign changes"],
            &rows,
        ));
        out
    }

    pub fn csv(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .table
            .iter()
            .map(|c| {
                vec![
                    report::real(c.lambda),
                    c.class.to_string(),
                    c.positive_diffs.to_string(),
                    c.negative_diffs.to_string(),
                    c.sign_changes.to_string(),
                ]
            })
            .collect();
        report::csv_table(
            &["lambda", "class", "positive_diffs", "negative_diffs", "sign_changes"],
            &rows,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::refcore::{EULER_GAMMA, PI_SQ_OVER_6};

    #[test]
    fn endpoints_of_the_sweep() {
        let s = LambdaSweep::new(2000).unwrap();
        assert_eq!(s.classify(1.0).unwrap().class, LambdaClass::Increasing);
        assert_eq!(s.classify(6.0).unwrap().class, LambdaClass::Decreasing);
        let mid = s.classify(3.0).unwrap();
        assert_eq!(mid.class, LambdaClass::NonMonotone);
        // rises then falls
        assert_eq!(mid.sign_changes, 1);
    }

    #[test]
    fn thresholds_match_endpoint_slopes() {
        // The derivative of the ratio at x = 1 vanishes at γ/(π²/6 − 2γ), and at
        // x = 0 at (π²/6 − γ)/(3 − 2γ − π²/6); in between it changes sign inside.
        let g = EULER_GAMMA;
        let inc_star = g / (PI_SQ_OVER_6 - 2.0 * g);
        let dec_star = (PI_SQ_OVER_6 - g) / (3.0 - 2.0 * g - PI_SQ_OVER_6);
        let t = search_lambda_thresholds(2000, 1e-4).unwrap();
        assert!(t.table_consistent);
        assert!(t.inc_bracket.1 - t.inc_bracket.0 <= 1e-4);
        assert!(
            (t.lambda_inc_max - inc_star).abs() < 5e-3,
            "{} vs {inc_star}",
            t.lambda_inc_max
        );
        assert!(
            (t.lambda_dec_min - dec_star).abs() < 5e-3,
            "{} vs {dec_star}",
            t.lambda_dec_min
        );
        assert!(search_lambda_thresholds(999, 1e-3).is_err());
    }
}
