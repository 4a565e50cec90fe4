//! Catalog of elementary two-sided bounds for the gamma function.
//!
//! Every family is evaluated pointwise with domain checking. Bounds are built
//! in log space and exponentiated once; the recurring base
//! `(x² + λ)/(x + λ)` is evaluated as `ln_1p(x(x − 1)/(x + λ))` so that it keeps
//! full relative accuracy next to `x = 0` and `x = 1`, where it tends to 1.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::refcore::{self, constants, Constants};

/// Which gamma value a family brackets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    GammaOfXPlus1,
    GammaOfX,
}

impl Convention {
    /// `ln Γ(x + 1)` or `ln Γ(x)` from the reference evaluator.
    pub fn ln_reference(self, x: f64) -> Result<f64> {
        match self {
            Convention::GammaOfXPlus1 => refcore::ln_gamma(x + 1.0),
            Convention::GammaOfX => refcore::ln_gamma(x),
        }
    }

    pub fn reference(self, x: f64) -> Result<f64> {
        self.ln_reference(x).map(f64::exp)
    }
}

/// Where a family is valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    /// `(0, 1)`
    UnitOpen,
    /// `(0, 1]`
    UnitLeftOpen,
    /// `(0, ∞)`
    Positive,
    /// `(0, ∞)`; integers are equality points
    PositiveIntegersTight,
    /// `(0, 1) ∪ (1, ∞)`
    PositiveExceptOne,
    /// `(1/2, ∞)`
    AboveHalf,
}

impl Domain {
    pub fn contains(self, x: f64) -> bool {
        if !x.is_finite() {
            return false;
        }
        match self {
            Domain::UnitOpen => x > 0.0 && x < 1.0,
            Domain::UnitLeftOpen => x > 0.0 && x <= 1.0,
            Domain::Positive | Domain::PositiveIntegersTight => x > 0.0,
            Domain::PositiveExceptOne => x > 0.0 && x != 1.0,
            Domain::AboveHalf => x > 0.5,
        }
    }

    /// Infimum and supremum.
    pub fn span(self) -> (f64, f64) {
        match self {
            Domain::UnitOpen | Domain::UnitLeftOpen => (0.0, 1.0),
            Domain::Positive | Domain::PositiveIntegersTight | Domain::PositiveExceptOne => (0.0, f64::INFINITY),
            Domain::AboveHalf => (0.5, f64::INFINITY),
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Domain::UnitOpen => "(0, 1)",
            Domain::UnitLeftOpen => "(0, 1]",
            Domain::Positive => "(0, inf)",
            Domain::PositiveIntegersTight => "(0, inf), equality at integers",
            Domain::PositiveExceptOne => "(0, 1) U (1, inf)",
            Domain::AboveHalf => "(1/2, inf)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyId {
    Ivady,
    QiGuo,
    QiGuoExtended,
    QiGuoRearranged,
    Lambda6,
    AlzerPower,
    AlzerBatir,
    QiGuoZhang,
    #[serde(rename = "batir_12")]
    Batir12,
    #[serde(rename = "batir_14")]
    Batir14,
    #[serde(rename = "batir_15")]
    Batir15,
    Unitball,
}

impl FamilyId {
    pub const ALL: [FamilyId; 12] = [
        FamilyId::Ivady,
        FamilyId::QiGuo,
        FamilyId::QiGuoExtended,
        FamilyId::QiGuoRearranged,
        FamilyId::Lambda6,
        FamilyId::AlzerPower,
        FamilyId::AlzerBatir,
        FamilyId::QiGuoZhang,
        FamilyId::Batir12,
        FamilyId::Batir14,
        FamilyId::Batir15,
        FamilyId::Unitball,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Ivady => "ivady",
            FamilyId::QiGuo => "qi_guo",
            FamilyId::QiGuoExtended => "qi_guo_extended",
            FamilyId::QiGuoRearranged => "qi_guo_rearranged",
            FamilyId::Lambda6 => "lambda6",
            FamilyId::AlzerPower => "alzer_power",
            FamilyId::AlzerBatir => "alzer_batir",
            FamilyId::QiGuoZhang => "qi_guo_zhang",
            FamilyId::Batir12 => "batir_12",
            FamilyId::Batir14 => "batir_14",
            FamilyId::Batir15 => "batir_15",
            FamilyId::Unitball => "unitball",
        }
    }

    pub fn domain(self) -> Domain {
        match self {
            FamilyId::Ivady | FamilyId::QiGuo | FamilyId::QiGuoRearranged | FamilyId::Lambda6 => Domain::UnitOpen,
            FamilyId::QiGuoExtended => Domain::PositiveIntegersTight,
            FamilyId::AlzerPower => Domain::PositiveExceptOne,
            FamilyId::AlzerBatir | FamilyId::Batir12 | FamilyId::Batir14 | FamilyId::Batir15 => Domain::Positive,
            FamilyId::QiGuoZhang => Domain::UnitLeftOpen,
            FamilyId::Unitball => Domain::AboveHalf,
        }
    }

    pub fn convention(self) -> Convention {
        match self {
            FamilyId::QiGuoRearranged | FamilyId::AlzerPower | FamilyId::AlzerBatir | FamilyId::QiGuoZhang => {
                Convention::GammaOfX
            }
            _ => Convention::GammaOfXPlus1,
        }
    }

    /// Only the upper side exists.
    pub fn is_one_sided(self) -> bool {
        self == FamilyId::Unitball
    }

    pub fn citation(self) -> &'static str {
        match self {
            FamilyId::Ivady => "Ivady (2009): (x^2+1)/(x+1) < G(x+1) < (x^2+2)/(x+2), 0<x<1",
            FamilyId::QiGuo => "((x^2+1)/(x+1))^(2(1-g)) < G(x+1) < ((x^2+1)/(x+1))^g, 0<x<1, both exponents sharp",
            FamilyId::QiGuoExtended => "[((t^2+1)/(t+1))]^(2(1-g)|g) * prod_{i<floor x}(x-i), t = x - floor x",
            FamilyId::QiGuoRearranged => "(1/x)((x^2+1)/(x+1))^(2(1-g)) < G(x) < (1/x)((x^2+1)/(x+1))^g, 0<x<1",
            FamilyId::Lambda6 => "((x^2+6)/(x+6))^(6g) < G(x+1) < ((x^2+6)/(x+6))^(7(1-g)), 0<x<1",
            FamilyId::AlzerPower => "Alzer, Proc. AMS (1999), Thm 2: x^(a(x-1)-g) < G(x) < x^(b(x-1)-g)",
            FamilyId::AlzerBatir => {
                "Alzer-Batir, Appl. Math. Lett. (2007): sqrt(2pi) x^x exp(-x - psi(x+a)/2), a=1/3 lower, 0 upper"
            }
            FamilyId::QiGuoZhang => {
                "Qi-Guo-Zhang: x^(x[1-ln x+psi(x)])/e^x < G(x) <= x^(x[1-ln x+psi(x)])/e^(x-1), 0<x<=1"
            }
            FamilyId::Batir12 => "Batir, Arch. Math. (2008), Cor 1.2",
            FamilyId::Batir14 => "Batir, Arch. Math. (2008), Thm 1.4",
            FamilyId::Batir15 => "Batir, Arch. Math. (2008), Thm 1.5",
            FamilyId::Unitball => "G(x+1) < (2x)^x on (1/2, inf), from the monotonicity of ln G(x+1)/(x ln 2x)",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown bound family `{s}`")))
    }
}

/// One row of the enumerable catalog.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyInfo {
    pub id: FamilyId,
    pub domain: Domain,
    pub domain_text: &'static str,
    pub convention: Convention,
    pub one_sided: bool,
    pub citation: &'static str,
}

pub fn catalog() -> Vec<FamilyInfo> {
    FamilyId::ALL
        .into_iter()
        .map(|id| FamilyInfo {
            id,
            domain: id.domain(),
            domain_text: id.domain().describe(),
            convention: id.convention(),
            one_sided: id.is_one_sided(),
            citation: id.citation(),
        })
        .collect()
}

/// Lower and upper bound for Γ at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundPair {
    pub family: FamilyId,
    pub x: f64,
    pub convention: Convention,
    /// `−∞` when the family only has an upper side.
    pub lower: f64,
    pub upper: f64,
    pub one_sided: bool,
    /// The family is tight here (an integer for `qi_guo_extended`, `x = 1`
    /// for the upper side of `qi_guo_zhang`).
    pub is_equality_point: bool,
    /// False when caller-supplied exponents fall outside the proven range.
    pub guaranteed: bool,
}

impl BoundPair {
    fn new(family: FamilyId, x: f64, ln_lower: f64, ln_upper: f64) -> Self {
        Self {
            family,
            x,
            convention: family.convention(),
            lower: ln_lower.exp(),
            upper: ln_upper.exp(),
            one_sided: false,
            is_equality_point: false,
            guaranteed: true,
        }
    }

    /// Reference Γ value under this pair's convention.
    pub fn reference(&self) -> Result<f64> {
        self.convention.reference(self.x)
    }

    /// Strict containment `lower < Γ < upper`, relaxed to `≤` at equality points.
    pub fn contains(&self, gamma: f64) -> bool {
        if self.is_equality_point {
            self.lower <= gamma && gamma <= self.upper
        } else {
            self.lower < gamma && gamma < self.upper
        }
    }

    pub fn side(&self, side: Side) -> f64 {
        match side {
            Side::Lower => self.lower,
            Side::Upper => self.upper,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lower,
    Upper,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        })
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lower" => Ok(Side::Lower),
            "upper" => Ok(Side::Upper),
            _ => Err(Error::InvalidArgument(format!("unknown side `{s}`"))),
        }
    }
}

/// `ln((x² + λ)/(x + λ))` for `x ≥ 0`, `λ > 0`.
pub fn ln_rational_base(lambda: f64, x: f64) -> f64 {
    (x * (x - 1.0) / (x + lambda)).ln_1p()
}

/// `((x²+1)/(x+1))^alpha < Γ(x+1) < ((x²+1)/(x+1))^beta` on `(0, 1)`.
///
/// The bracket is guaranteed for `alpha ≥ 2(1 − γ)` and `beta ≤ γ`; other
/// exponents are evaluated but flagged through `guaranteed = false`.
pub fn theorem_bounds(x: f64, alpha: f64, beta: f64) -> Result<BoundPair> {
    if !Domain::UnitOpen.contains(x) {
        return Err(domain("theorem_bounds", x, "(0, 1)"));
    }
    let c = constants();
    let ln_base = ln_rational_base(1.0, x);
    let mut pair = BoundPair::new(FamilyId::QiGuo, x, alpha * ln_base, beta * ln_base);
    pair.guaranteed = alpha >= c.alpha_sharp && beta <= c.beta_sharp;
    Ok(pair)
}

/// The sharp-exponent bracket carried to `(0, ∞)` by `Γ(x+1) = xΓ(x)`.
pub fn extended_bounds(x: f64) -> Result<BoundPair> {
    extended_bounds_with(x, &constants())
}

pub fn extended_bounds_with(x: f64, c: &Constants) -> Result<BoundPair> {
    if !Domain::PositiveIntegersTight.contains(x) {
        return Err(domain("extended_bounds", x, "(0, inf)"));
    }
    let whole = x.floor();
    let frac = x - whole;
    let ln_product: f64 = (0..whole as u64).map(|i| (x - i as f64).ln()).sum();
    let ln_base = ln_rational_base(1.0, frac);
    let mut pair = BoundPair::new(
        FamilyId::QiGuoExtended,
        x,
        c.alpha_sharp * ln_base + ln_product,
        c.beta_sharp * ln_base + ln_product,
    );
    pair.is_equality_point = frac == 0.0;
    Ok(pair)
}

/// Evaluates family `id` at `x` with the verified constants.
pub fn evaluate_family(id: FamilyId, x: f64) -> Result<BoundPair> {
    evaluate_family_with(id, x, &constants())
}

/// Evaluates family `id` at `x` with an explicit constant set.
pub fn evaluate_family_with(id: FamilyId, x: f64, c: &Constants) -> Result<BoundPair> {
    if !id.domain().contains(x) {
        return Err(domain(id.name(), x, id.domain().describe()));
    }
    let g = c.euler_gamma;
    let ln_x = x.ln();
    let pair = match id {
        FamilyId::Ivady => {
            let mut p = BoundPair::new(id, x, 0.0, 0.0);
            p.lower = (x * x + 1.0) / (x + 1.0);
            p.upper = (x * x + 2.0) / (x + 2.0);
            p
        }
        FamilyId::QiGuo => {
            let lb = ln_rational_base(1.0, x);
            BoundPair::new(id, x, c.alpha_sharp * lb, c.beta_sharp * lb)
        }
        FamilyId::QiGuoExtended => extended_bounds_with(x, c)?,
        FamilyId::QiGuoRearranged => {
            let lb = ln_rational_base(1.0, x);
            BoundPair::new(id, x, c.alpha_sharp * lb - ln_x, c.beta_sharp * lb - ln_x)
        }
        FamilyId::Lambda6 => {
            let lb = ln_rational_base(6.0, x);
            BoundPair::new(id, x, 6.0 * g * lb, 7.0 * (1.0 - g) * lb)
        }
        FamilyId::AlzerPower => {
            let (a, b) = if x < 1.0 {
                (c.alzer_alpha, c.alzer_beta)
            } else {
                (c.alzer_beta, 1.0)
            };
            BoundPair::new(id, x, (a * (x - 1.0) - g) * ln_x, (b * (x - 1.0) - g) * ln_x)
        }
        FamilyId::AlzerBatir => {
            let common = 0.5 * (2.0 * std::f64::consts::PI).ln() + x * ln_x - x;
            let psi_lower = refcore::digamma(x + 1.0 / 3.0)?;
            let psi_upper = refcore::digamma(x)?;
            BoundPair::new(id, x, common - 0.5 * psi_lower, common - 0.5 * psi_upper)
        }
        FamilyId::QiGuoZhang => {
            let exponent = x * (1.0 - ln_x + refcore::digamma(x)?);
            let mut p = BoundPair::new(id, x, exponent * ln_x - x, exponent * ln_x - x + 1.0);
            p.is_equality_point = x == 1.0;
            p
        }
        FamilyId::Batir14 => {
            let shift = (-g).exp();
            let lower = 0.5 * std::f64::consts::LN_2 + (x + 0.5) * (x + 0.5).ln() - x;
            let upper = g * shift + (x + shift) * (x + shift).ln() - x;
            BoundPair::new(id, x, lower, upper)
        }
        FamilyId::Batir15 => {
            let tail = (x + 0.5) * ((x + 0.5).ln() - 1.0);
            let lower = 0.5 * (std::f64::consts::LN_2 + 1.0) + tail;
            let upper = 0.5 * (2.0 * std::f64::consts::PI).ln() + tail;
            BoundPair::new(id, x, lower, upper)
        }
        FamilyId::Batir12 => {
            let bracket = x + 1.0 / (6.0 * (x + 0.375));
            let ln_pow = if x == 0.0 { 0.0 } else { x * ln_x };
            let lower = 0.5 * (2.0 * x + 1.0).ln() + ln_pow - (bracket - 4.0 / 9.0);
            let upper = 0.5 * (std::f64::consts::PI * (2.0 * x + 1.0)).ln() + ln_pow - bracket;
            BoundPair::new(id, x, lower, upper)
        }
        FamilyId::Unitball => {
            let mut p = BoundPair::new(id, x, 0.0, x * (2.0 * x).ln());
            p.lower = f64::NEG_INFINITY;
            p.one_sided = true;
            p
        }
    };
    Ok(pair)
}

/// Bracket for `(−1)^{k+1} ψ⁽ᵏ⁾(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolygammaBracket {
    pub k: u32,
    pub x: f64,
    pub lower: f64,
    pub upper: f64,
}

/// `(k−1)!/x^k + k!/(2x^{k+1}) < (−1)^{k+1} ψ⁽ᵏ⁾(x) < (k−1)!/x^k + k!/x^{k+1}`.
pub fn polygamma_bounds(k: u32, x: f64) -> Result<PolygammaBracket> {
    if k < 1 {
        return Err(Error::InvalidArgument("polygamma bounds need k >= 1".into()));
    }
    if !(x.is_finite() && x > 0.0) {
        return Err(domain("polygamma_bounds", x, "(0, inf)"));
    }
    let km1_fact: f64 = (1..k).map(f64::from).product();
    let k_fact = km1_fact * f64::from(k);
    let lead = km1_fact / x.powi(k as i32);
    let next = k_fact / x.powi(k as i32 + 1);
    Ok(PolygammaBracket {
        k,
        x,
        lower: lead + 0.5 * next,
        upper: lead + next,
    })
}
