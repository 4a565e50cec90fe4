//! Finite-difference falsification test for complete monotonicity.

use serde::Serialize;

use super::{FunctionId, ProbeVerdict};
use crate::error::{Error, Result};
use crate::report;

pub const MAX_CM_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CMViolation {
    pub x: f64,
    pub order: usize,
    /// `(−1)ⁿ Δⁿ f(x)`.
    pub value: f64,
    pub tolerance: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CMReport {
    pub function_id: String,
    pub interval: (f64, f64),
    pub max_order: usize,
    pub step: f64,
    pub points: usize,
    pub violations: Vec<CMViolation>,
    /// Smallest `(−1)ⁿ Δⁿ f` seen per order, for context.
    pub min_signed_difference: Vec<f64>,
    pub verdict: ProbeVerdict,
}

/// `2ⁿ · 10⁻¹² · max|f|` over the stencil.
pub fn cm_tolerance(order: usize, stencil_max_abs: f64) -> f64 {
    (1u64 << order) as f64 * 1e-12 * stencil_max_abs
}

/// Checks `(−1)ⁿ Δₕⁿ f(x) ≥ −tolₙ` for `n ≤ max_order` at `x = a + k·step`
/// wherever the forward stencil `x + max_order·step` stays within `b`.
pub fn cm_probe(function: &FunctionId, a: f64, b: f64, max_order: usize, step: f64) -> Result<CMReport> {
    if max_order > MAX_CM_ORDER {
        return Err(Error::InvalidArgument(format!(
            "max_order {max_order} exceeds {MAX_CM_ORDER}"
        )));
    }
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::InvalidArgument("step must be positive".into()));
    }
    if !(a > 0.0) {
        return Err(Error::InvalidArgument(format!("probe start {a} must be positive")));
    }
    let reach = max_order as f64 * step;
    if !(a + reach <= b) {
        return Err(Error::InvalidArgument(format!(
            "stencil of width {reach} starting at {a} exceeds the interval end {b}"
        )));
    }
    let points = ((b - a - reach) / step + 1e-9).floor() as usize + 1;
    let lattice: Vec<f64> = (0..points + max_order).map(|k| a + step * k as f64).collect();
    let values: Vec<f64> = lattice.iter().map(|&x| function.eval(x)).collect::<Result<_>>()?;

    let mut violations = Vec::new();
    let mut min_signed = vec![f64::INFINITY; max_order + 1];
    let mut diff = values.clone();
    for order in 0..=max_order {
        if order > 0 {
            diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
        }
        let sign = if order % 2 == 0 { 1.0 } else { -1.0 };
        for k in 0..points {
            let signed = sign * diff[k];
            min_signed[order] = min_signed[order].min(signed);
            let stencil_max = values[k..=k + order].iter().fold(0.0_f64, |m, v| m.max(v.abs()));
            let tolerance = cm_tolerance(order, stencil_max);
            if !(signed >= -tolerance) {
                violations.push(CMViolation {
                    x: lattice[k],
                    order,
                    value: signed,
                    tolerance,
                });
            }
        }
    }
    let verdict = if violations.is_empty() {
        ProbeVerdict::Consistent
    } else {
        ProbeVerdict::Violated
    };
    Ok(CMReport {
        function_id: function.to_string(),
        interval: (a, b),
        max_order,
        step,
        points,
        violations,
        min_signed_difference: min_signed,
        verdict,
    })
}

impl CMReport {
    pub fn consistent(&self) -> bool {
        self.verdict == ProbeVerdict::Consistent
    }

    pub fn markdown(&self) -> String {
        let mut out = format!(
            "# Complete monotonicity probe: {}\n\nForward differences of order 0..={} with step {} at {} points of ({}, {}): **{}** \
             (no proof either way; a violation beyond tolerance would refute the property).\n\n",
            self.function_id,
            self.max_order,
            report::short(self.step),
            self.points,
            report::short(self.interval.0),
            report::short(self.interval.1),
            self.verdict,
        );
        let rows: Vec<Vec<String>> = self
            .min_signed_difference
            .iter()
            .enumerate()
            .map(|(n, &v)| {
                let count = self.violations.iter().filter(|w| w.order == n).count();
                vec![n.to_string(), report::short(v), count.to_string()]
            })
            .collect();
        out.push_str(&report::markdown_table(
            &["order", "min (-1)^n diff", "violations"],
            &rows,
        ));
        out
    }

    pub fn csv(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .violations
            .iter()
            .map(|v| {
                vec![
                    report::real(v.x),
                    v.order.to_string(),
                    report::real(v.value),
                    report::real(v.tolerance),
                ]
            })
            .collect();
        report::csv_table(&["x", "order", "value", "tolerance"], &rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decreasing_quotient_passes_and_increasing_fails() {
        let r = cm_probe(&FunctionId::HCm, 0.1, 5.0, 6, 0.01).unwrap();
        assert!(r.consistent(), "{:?}", &r.violations[..r.violations.len().min(5)]);
        assert!(r.min_signed_difference[0] > 0.0);
        // F is increasing, so the order-1 condition fails at once
        let r = cm_probe(&FunctionId::FUnitball, 1.0, 3.0, 2, 0.01).unwrap();
        assert!(!r.consistent());
        assert!(r.violations.iter().any(|v| v.order == 1));
    }

    #[test]
    fn stencil_must_fit() {
        assert!(cm_probe(&FunctionId::HCm, 0.1, 0.15, 6, 0.01).is_err());
        assert!(cm_probe(&FunctionId::HCm, 0.1, 50.0, 9, 0.01).is_err());
        assert!(cm_probe(&FunctionId::HCm, 0.0, 50.0, 6, 0.01).is_err());
        let r = cm_probe(&FunctionId::HCm, 0.1, 0.165, 6, 0.01).unwrap();
        assert_eq!(r.points, 1);
    }

    #[test]
    fn tolerance_scales_with_order() {
        assert_eq!(cm_tolerance(0, 2.0), 2e-12);
        assert_eq!(cm_tolerance(6, 1.0), 64e-12);
    }
}
