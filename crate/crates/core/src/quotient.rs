//! Quotients `f/g` with removable `0/0` points.
//!
//! Away from the removable point the quotient is evaluated directly. Inside a
//! band of half-width [`SINGULAR_BAND`] it is replaced by `f′/g′` taken at the
//! midpoint between `x` and the removable point: by the Cauchy mean value
//! theorem `f(x)/g(x) = f′(ξ)/g′(ξ)` for some `ξ` between them, and the
//! midpoint matches `ξ` to first order.

use crate::bounds::ln_rational_base;
use crate::error::{domain, Result};
use crate::refcore::{self, EULER_GAMMA};

pub const SINGULAR_BAND: f64 = 1e-6;

/// Below this the limit value at `0⁺` is returned directly.
pub const ZERO_CUTOFF: f64 = 1e-8;

/// `ln Γ(x+1) / ln((x²+λ)/(x+λ))` for `x > 0`, `λ > 0`.
///
/// Removable points at `x = 0` (limit `λγ`) and `x = 1` (limit `(1+λ)(1−γ)`).
pub fn gamma_log_ratio(lambda: f64, x: f64) -> Result<f64> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(domain("gamma_log_ratio", lambda, "lambda in (0, inf)"));
    }
    if !(x.is_finite() && x > 0.0) {
        return Err(domain("gamma_log_ratio", x, "(0, inf)"));
    }
    if x <= ZERO_CUTOFF {
        return Ok(lambda * EULER_GAMMA);
    }
    if (x - 1.0).abs() < SINGULAR_BAND {
        return gamma_log_ratio_derivative_quotient(lambda, 0.5 * (x + 1.0));
    }
    Ok(refcore::ln_gamma(x + 1.0)? / ln_rational_base(lambda, x))
}

/// `ψ(x+1)(x²+λ)(x+λ)/(x²+2λx−λ)`, the quotient of derivatives.
pub fn gamma_log_ratio_derivative_quotient(lambda: f64, x: f64) -> Result<f64> {
    let psi = refcore::digamma(x + 1.0)?;
    Ok(psi * (x * x + lambda) * (x + lambda) / (x * x + 2.0 * lambda * x - lambda))
}

/// `ln Γ(x) / ln((x²+τ)/(x+τ))` for `x > 0`, equal to `−(1+τ)γ` at `x = 1`.
pub fn tau_log_ratio(tau: f64, x: f64) -> Result<f64> {
    if !(tau.is_finite() && tau > 0.0) {
        return Err(domain("tau_ratio", tau, "tau in (0, inf)"));
    }
    if !(x.is_finite() && x > 0.0) {
        return Err(domain("tau_ratio", x, "(0, inf)"));
    }
    if x == 1.0 {
        return Ok(-(1.0 + tau) * EULER_GAMMA);
    }
    if (x - 1.0).abs() < SINGULAR_BAND {
        let xi = 0.5 * (x + 1.0);
        let psi = refcore::digamma(xi)?;
        return Ok(psi * (xi * xi + tau) * (xi + tau) / (xi * xi + 2.0 * tau * xi - tau));
    }
    Ok(refcore::ln_gamma(x)? / ln_rational_base(tau, x))
}

/// `ln x / ln((1+x²)/(1+x))` for `x > 0`, equal to 2 at `x = 1`.
pub fn log_quotient_h(x: f64) -> Result<f64> {
    if !(x.is_finite() && x > 0.0) {
        return Err(domain("h_cm", x, "(0, inf)"));
    }
    if x == 1.0 {
        return Ok(2.0);
    }
    if (x - 1.0).abs() < SINGULAR_BAND {
        let xi = 0.5 * (x + 1.0);
        return Ok((1.0 + xi * xi) * (1.0 + xi) / (xi * (xi * xi + 2.0 * xi - 1.0)));
    }
    // x − 1 is exact near 1, so ln_1p keeps the numerator accurate there
    let ln_x = if (0.5..=2.0).contains(&x) {
        (x - 1.0).ln_1p()
    } else {
        x.ln()
    };
    Ok(ln_x / ln_rational_base(1.0, x))
}
