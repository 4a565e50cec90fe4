//! Reference evaluation of `ln Γ`, `ψ` and `ψ⁽ᵏ⁾` for `k = 1, 2, 3` in double
//! precision, plus the constants every bound in this crate is built from.
//!
//! Arguments are shifted upward with the recurrence `Γ(x+1) = xΓ(x)` until they
//! reach [`ASYMPTOTIC_THRESHOLD`], where the Stirling-type asymptotic series
//! (ten Bernoulli terms) is accurate far below `1e-13`. Around the zeros of
//! `ln Γ` at 1 and 2 the shift would cancel catastrophically, so `ln Γ` uses
//! the `ζ(k) − 1` Taylor series about 1 there instead.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{domain, Error, Result};

/// Euler–Mascheroni constant, 17 significant digits.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `π²/6 = ζ(2) = ψ′(1)`.
pub const PI_SQ_OVER_6: f64 = std::f64::consts::PI * std::f64::consts::PI / 6.0;

/// Arguments at or above this value go straight to the asymptotic series.
pub const ASYMPTOTIC_THRESHOLD: f64 = 10.0;

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_7;

/// `B₂, B₄, …, B₂₀`.
const BERNOULLI_EVEN: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

/// `ζ(k) − 1` for `k = 2..=32`.
const ZETA_MINUS_ONE: [f64; 31] = [
    0.6449340668482264,
    0.2020569031595943,
    0.08232323371113819,
    0.03692775514336993,
    0.01734306198444914,
    0.008349277381922827,
    0.00407735619794434,
    0.0020083928260822143,
    0.0009945751278180853,
    0.0004941886041194645,
    0.0002460865533080483,
    0.00012271334757848915,
    6.124813505870483e-05,
    3.058823630702049e-05,
    1.528225940865187e-05,
    7.637197637899763e-06,
    3.81729326499984e-06,
    1.908212716553939e-06,
    9.539620338727962e-07,
    4.769329867878064e-07,
    2.38450502727733e-07,
    1.1921992596531106e-07,
    5.960818905125948e-08,
    2.980350351465228e-08,
    1.4901554828365043e-08,
    7.45071178983543e-09,
    3.725334024788457e-09,
    1.862659723513049e-09,
    9.313274324196682e-10,
    4.656629065033784e-10,
    2.3283118336765053e-10,
];

/// Numeric anchors shared by all bound families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Constants {
    pub euler_gamma: f64,
    pub pi_sq_over_6: f64,
    /// Best lower exponent, `2(1 − γ)`.
    pub alpha_sharp: f64,
    /// Best upper exponent, `γ`.
    pub beta_sharp: f64,
    /// Lower exponent of the power bound `x^{α(x−1)−γ}` on `(0, 1)`, `1 − γ`.
    pub alzer_alpha: f64,
    /// Upper exponent of the power bound on `(0, 1)`, `(π²/6 − γ)/2`.
    pub alzer_beta: f64,
}

impl Constants {
    /// Derives every field from a value of γ. Used with [`EULER_GAMMA`] by
    /// [`constants`]; other values exist only to exercise failure paths.
    pub fn from_euler_gamma(euler_gamma: f64) -> Self {
        Self {
            euler_gamma,
            pi_sq_over_6: PI_SQ_OVER_6,
            alpha_sharp: 2.0 * (1.0 - euler_gamma),
            beta_sharp: euler_gamma,
            alzer_alpha: 1.0 - euler_gamma,
            alzer_beta: 0.5 * (PI_SQ_OVER_6 - euler_gamma),
        }
    }

    /// Compares the stored γ against `−ψ(1)`; the mismatch is returned on failure.
    pub fn cross_check(&self) -> std::result::Result<(), f64> {
        let from_digamma = -digamma(1.0).expect("1 is in the digamma domain");
        let mismatch = (self.euler_gamma - from_digamma).abs();
        if mismatch > 1e-12 {
            Err(mismatch)
        } else {
            Ok(())
        }
    }
}

/// The verified constant set. Panics on first use if the stored γ disagrees
/// with `−ψ(1)` by more than `1e−12`.
pub fn constants() -> Constants {
    static CONSTANTS: OnceLock<Constants> = OnceLock::new();
    *CONSTANTS.get_or_init(|| {
        let c = Constants::from_euler_gamma(EULER_GAMMA);
        if let Err(mismatch) = c.cross_check() {
            panic!("stored Euler-Mascheroni constant disagrees with -digamma(1) by {mismatch:e}");
        }
        c
    })
}

fn check_positive(what: &'static str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(domain(what, x, "(0, inf)"))
    }
}

/// `Σ_{k≥2} (−1)^k (ζ(k) − 1) z^k / k`, for `|z| ≤ 1/2`.
fn zeta_tail_series(z: f64) -> f64 {
    let mut power = z;
    let mut sum = 0.0;
    for (i, zm1) in ZETA_MINUS_ONE.iter().enumerate() {
        power *= z;
        let k = (i + 2) as f64;
        let term = zm1 * power / k;
        sum += if i % 2 == 0 { term } else { -term };
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// `ln Γ(1 + z)` for `|z| ≤ 1/2`.
fn ln_gamma_one_plus(z: f64) -> f64 {
    -z.ln_1p() + z * (1.0 - EULER_GAMMA) + zeta_tail_series(z)
}

/// `ln Γ(2 + z)` for `|z| ≤ 1/2`; the `ln(1+z)` terms cancel analytically.
fn ln_gamma_two_plus(z: f64) -> f64 {
    z * (1.0 - EULER_GAMMA) + zeta_tail_series(z)
}

fn ln_gamma_asymptotic(y: f64) -> f64 {
    let inv = y.recip();
    let inv_sq = inv * inv;
    let mut power = inv;
    let mut series = 0.0;
    for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
        let two_k = 2.0 * (j + 1) as f64;
        series += b / (two_k * (two_k - 1.0)) * power;
        power *= inv_sq;
    }
    (y - 0.5) * y.ln() - y + HALF_LN_TWO_PI + series
}

/// Natural logarithm of `Γ(x)` for finite `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    check_positive("ln_gamma", x)?;
    let value = if x < 0.5 {
        ln_gamma_one_plus(x) - x.ln()
    } else if x < 1.5 {
        ln_gamma_one_plus(x - 1.0)
    } else if x < 2.5 {
        ln_gamma_two_plus(x - 2.0)
    } else if x < ASYMPTOTIC_THRESHOLD {
        let mut y = x;
        let mut product = 1.0;
        while y < ASYMPTOTIC_THRESHOLD {
            product *= y;
            y += 1.0;
        }
        ln_gamma_asymptotic(y) - product.ln()
    } else {
        ln_gamma_asymptotic(x)
    };
    Ok(value)
}

/// Digamma function `ψ(x) = Γ′(x)/Γ(x)` for finite `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    check_positive("digamma", x)?;
    let mut y = x;
    let mut shifts = Vec::new();
    while y < ASYMPTOTIC_THRESHOLD {
        shifts.push(y);
        y += 1.0;
    }
    let inv = y.recip();
    let inv_sq = inv * inv;
    let mut power = inv_sq;
    let mut series = 0.0;
    for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
        series += b / (2.0 * (j + 1) as f64) * power;
        power *= inv_sq;
    }
    let asymptotic = y.ln() - 0.5 * inv - series;
    // smallest reciprocals first
    let correction: f64 = shifts.iter().rev().map(|s| s.recip()).sum();
    Ok(asymptotic - correction)
}

/// Polygamma `ψ⁽ᵏ⁾(x)` for `k ∈ {1, 2, 3}` and finite `x > 0`.
pub fn polygamma(k: u32, x: f64) -> Result<f64> {
    if !(1..=3).contains(&k) {
        return Err(Error::UnsupportedOrder(k));
    }
    check_positive("polygamma", x)?;

    let k_fact = (1..=k).product::<u32>() as f64;
    let km1_fact = k_fact / k as f64;
    let power_k = |y: f64| y.powi(k as i32);

    // (−1)^{k+1} ψ⁽ᵏ⁾ is positive; accumulate its magnitude.
    let mut y = x;
    let mut shifted = 0.0;
    let mut shifts = Vec::new();
    while y < ASYMPTOTIC_THRESHOLD {
        shifts.push(y);
        y += 1.0;
    }
    for s in shifts.iter().rev() {
        shifted += k_fact / (power_k(*s) * s);
    }

    let inv = y.recip();
    let inv_sq = inv * inv;
    let mut series = 0.0;
    let mut power = inv_sq;
    for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
        let two_j = 2 * (j as u32 + 1);
        // (2j + k − 1)! / (2j)!
        let rising: f64 = (1..k).map(|i| (two_j + i) as f64).product();
        series += b * rising * power;
        power *= inv_sq;
    }
    let asymptotic = (km1_fact + k_fact * 0.5 * inv + series) / power_k(y);
    let magnitude = asymptotic + shifted;
    Ok(if k % 2 == 1 { magnitude } else { -magnitude })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    // mpmath at 40 digits, evaluated at the exact binary value of each argument.
    const LN_GAMMA_REF: [(f64, f64); 12] = [
        (0.001, 6.907178885383853),
        (0.3, 1.0957979948180756),
        (0.5, 0.5723649429247001),
        (0.9999, 5.7729791561193866e-05),
        (1.2, -0.08537409000331583),
        (1.75, -0.08440112102048555),
        (2.0001, 4.2281658112919945e-05),
        (3.5, 1.2009736023470743),
        (7.25, 7.0521854507385395),
        (12.5, 18.734347511936445),
        (1000.0, 5905.220423209181),
        (1e6, 12815504.569147611),
    ];

    const PSI_REF: [(f64, [f64; 4]); 8] = [
        (
            0.001,
            [
                -1000.5755719318103,
                1000001.6425331958,
                -2000000002.3976321,
                6000000000006.469,
            ],
        ),
        (
            0.3,
            [
                -3.502524222200133,
                12.245364546107732,
                -75.27253658872604,
                743.1417646550498,
            ],
        ),
        (
            0.9999,
            [
                -0.5773801703298691,
                1.6451745107027036,
                -2.4047633247110958,
                6.496428639406033,
            ],
        ),
        (
            1.75,
            [
                0.24747245354686118,
                0.7641018698938287,
                -0.5618924755968989,
                0.8003495718876368,
            ],
        ),
        (
            3.5,
            [
                1.103156640645243,
                0.3303577561002349,
                -0.1082040516417274,
                0.07030584881725205,
            ],
        ),
        (
            12.5,
            [
                2.4851956512749123,
                0.08328522460157838,
                -0.006932436585788241,
                0.0011534128049134052,
            ],
        ),
        (
            1000.0,
            [
                6.907255195648812,
                0.0010005001666666333,
                -1.0010004999998333e-06,
                2.003001999999e-09,
            ],
        ),
        (
            1e6,
            [
                13.815510057964191,
                1.0000005000001667e-06,
                -1.0000010000005e-12,
                2.000003000002e-18,
            ],
        ),
    ];

    #[test]
    fn ln_gamma_matches_reference_table() {
        for (x, want) in LN_GAMMA_REF {
            let got = ln_gamma(x).unwrap();
            assert!(rel(got, want) <= 1e-12, "ln_gamma({x}) = {got}, want {want}");
        }
    }

    #[test]
    fn ln_gamma_identities() {
        assert_eq!(ln_gamma(1.0).unwrap(), 0.0);
        assert_eq!(ln_gamma(2.0).unwrap(), 0.0);
        let half = ln_gamma(0.5).unwrap();
        assert!(rel(half, std::f64::consts::PI.sqrt().ln()) < 1e-14);
        // Γ(3.5) = 2.5 · 1.5 · √π/2
        let want = (2.5 * 1.5 * std::f64::consts::PI.sqrt() / 2.0).ln();
        assert!(rel(ln_gamma(3.5).unwrap(), want) < 1e-13);
        assert!(rel(want.exp(), 3.3233509704478426) < 1e-15);
    }

    #[test]
    fn digamma_and_polygamma_match_reference_table() {
        for (x, want) in PSI_REF {
            let psi = digamma(x).unwrap();
            assert!((psi - want[0]).abs() <= 1e-12, "digamma({x}) = {psi}, want {}", want[0]);
            for k in 1..=3u32 {
                let got = polygamma(k, x).unwrap();
                let w = want[k as usize];
                assert!(rel(got, w) <= 1e-10, "polygamma({k}, {x}) = {got}, want {w}");
            }
        }
    }

    #[test]
    fn digamma_anchor_values() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-15);
        assert!((digamma(2.0).unwrap() - (1.0 - EULER_GAMMA)).abs() < 1e-15);
        let want = -EULER_GAMMA - 2.0 * std::f64::consts::LN_2;
        assert!((digamma(0.5).unwrap() - want).abs() < 1e-14);
    }

    #[test]
    fn polygamma_anchor_values() {
        assert!(rel(polygamma(1, 1.0).unwrap(), PI_SQ_OVER_6) < 1e-14);
        assert!(rel(polygamma(1, 2.0).unwrap(), PI_SQ_OVER_6 - 1.0) < 1e-13);
        let d1 = polygamma(2, 1.0).unwrap();
        assert!(rel(polygamma(2, 2.0).unwrap(), d1 + 2.0) < 1e-13);
        // −ψ″(1) = 2ζ(3)
        assert!(rel(-d1, 2.0 * 1.2020569031595943) < 1e-13);
    }

    #[test]
    fn domain_errors() {
        for bad in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(ln_gamma(bad).is_err());
            assert!(digamma(bad).is_err());
            assert!(polygamma(1, bad).is_err());
        }
        assert_eq!(polygamma(0, 1.0), Err(Error::UnsupportedOrder(0)));
        assert_eq!(polygamma(4, 1.0), Err(Error::UnsupportedOrder(4)));
    }

    #[test]
    fn constants_are_consistent() {
        let c = constants();
        assert!(c.euler_gamma > 0.577215664 && c.euler_gamma < 0.577215665);
        assert_eq!(c.alpha_sharp, 2.0 * (1.0 - c.euler_gamma));
        assert_eq!(c.beta_sharp, c.euler_gamma);
        assert!((c.beta_sharp - 0.5772157).abs() < 5e-8);
        assert!((c.alpha_sharp - 0.8455687).abs() < 5e-8);
        // printed truncated: 0.42278…, 0.53385…
        assert_eq!((c.alzer_alpha * 1e5).floor(), 42278.0);
        assert_eq!((c.alzer_beta * 1e5).floor(), 53385.0);
        assert!(c.cross_check().is_ok());
        assert!(Constants::from_euler_gamma(0.5772).cross_check().is_err());
    }
}
