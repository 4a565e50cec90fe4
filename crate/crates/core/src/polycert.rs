//! Exact sign certification for integer polynomials on rational intervals.
//!
//! A certificate combines three independent pieces of evidence:
//!
//! - the Descartes bound (coefficient sign changes) on the number of positive roots,
//! - an exact Sturm count of distinct roots inside the open interval,
//! - exact rational evaluations at the endpoints and midpoint, plus the first
//!   integer to the right of the interval where the sign flips (the point a
//!   Descartes-style argument uses to locate the single positive root).
//!
//! Everything here is rational arithmetic over arbitrary-size integers.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Univariate polynomial with integer coefficients, lowest degree first.
///
/// Trailing zero coefficients are stripped on construction, so the zero
/// polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polynomial {
    #[serde(with = "serde_bigints")]
    coefficients: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn from_coefficients(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coefficients.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    }

    pub fn eval_integer(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    /// Horner evaluation in double precision.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + bigint_to_f64(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Cauchy bound `1 + max |aᵢ / aₙ|`: every real root lies strictly inside
    /// `(−B, B)`. `None` for the zero polynomial.
    pub fn cauchy_bound(&self) -> Option<BigRational> {
        let lead = BigRational::from_integer(self.coefficients.last()?.abs());
        let max_ratio = self.coefficients[..self.coefficients.len() - 1]
            .iter()
            .map(|c| BigRational::from_integer(c.abs()) / &lead)
            .max()
            .unwrap_or_else(BigRational::zero);
        Some(BigRational::one() + max_ratio)
    }

    fn to_rational(&self) -> RatPoly {
        RatPoly::new(
            self.coefficients
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `x⁴ + 4x³ − 2x² − 4x − 3`.
pub fn h1() -> Polynomial {
    Polynomial::from_coefficients(&[-3, -4, -2, 4, 1])
}

/// `x⁶ + 6x⁵ − 3x⁴ − 16x³ − 21x² − 6x − 1`.
pub fn h3() -> Polynomial {
    Polynomial::from_coefficients(&[-1, -6, -21, -16, -3, 6, 1])
}

/// `x⁵ + 5x⁴ − 2x³ − 8x² − 7x − 1`.
pub fn h4() -> Polynomial {
    Polynomial::from_coefficients(&[-1, -7, -8, -2, 5, 1])
}

/// `5x⁷ + 34x⁶ + 27x⁵ − 62x⁴ − 205x³ − 198x² − 83x − 6`.
pub fn h5() -> Polynomial {
    Polynomial::from_coefficients(&[-6, -83, -198, -205, -62, 27, 34, 5])
}

/// The four polynomial sign lemmas, each claimed negative on `(0, 1)`.
pub fn lemma2_polynomials() -> Vec<(&'static str, Polynomial)> {
    vec![("h1", h1()), ("h3", h3()), ("h4", h4()), ("h5", h5())]
}

/// Number of sign changes in the coefficient sequence, zeros skipped.
pub fn sign_changes(p: &Polynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let signs: Vec<bool> = p
        .coefficients
        .iter()
        .filter(|c| !c.is_zero())
        .map(Signed::is_negative)
        .collect();
    Ok(signs.windows(2).filter(|w| w[0] != w[1]).count())
}

/// Exact number of distinct real roots of `p` in the open interval `(a, b)`.
///
/// Endpoints may themselves be roots; they are not counted.
pub fn sturm_root_count(p: &Polynomial, a: &BigRational, b: &BigRational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a >= b {
        return Err(Error::InvalidInterval {
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    let chain = sturm_chain(&p.to_rational());
    let va = variations(&chain, a);
    let vb = variations(&chain, b);
    // V(a) − V(b) counts roots in (a, b]
    let half_open = va - vb;
    let b_is_root = chain[0].eval(b).is_zero();
    Ok(half_open - usize::from(b_is_root))
}

/// Sturm sequence of the square-free part of `p`.
fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let g = p.gcd(&p.derivative());
    let square_free = p.div_exact(&g);
    let mut chain = vec![square_free.clone(), square_free.derivative()];
    while !chain[chain.len() - 1].is_zero() {
        let n = chain.len();
        let rem = chain[n - 2].rem(&chain[n - 1]);
        chain.push(rem.neg());
    }
    chain.pop();
    chain
}

fn variations(chain: &[RatPoly], x: &BigRational) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .map(|q| q.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_negative())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    fn matches(self, v: &BigRational) -> bool {
        match self {
            Sign::Negative => v.is_negative(),
            Sign::Positive => v.is_positive(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    Refuted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointValue {
    #[serde(with = "serde_rational")]
    pub point: BigRational,
    #[serde(with = "serde_rational")]
    pub value: BigRational,
}

impl PointValue {
    fn at(p: &Polynomial, point: BigRational) -> Self {
        let value = p.eval(&point);
        Self { point, value }
    }
}

/// Machine-checkable record of a fixed-sign claim on an open interval.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignCertificate {
    pub polynomial: Polynomial,
    #[serde(with = "serde_rational_pair")]
    pub interval: (BigRational, BigRational),
    pub claimed_sign: Sign,
    pub descartes_bound: usize,
    /// Evaluations at the left end, midpoint and right end (in that order).
    /// An endpoint that is a root is replaced by a point moved inward by
    /// [`ENDPOINT_NUDGE`] and noted in `adjustments`.
    pub endpoint_values: Vec<PointValue>,
    /// First integer right of the interval where `p` takes the opposite sign.
    pub descartes_witness: Option<PointValue>,
    /// True when the Descartes bound alone proves the claim: at most one
    /// positive root, the claimed sign at the right end, and a sign flip at
    /// the witness, all with `a ≥ 0`.
    pub descartes_argument: bool,
    pub sturm_root_count: usize,
    pub adjustments: Vec<String>,
    pub verdict: Verdict,
}

impl SignCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Inward shift applied to an endpoint that is itself a root.
pub fn endpoint_nudge() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1_000_000))
}

/// Documented value of [`endpoint_nudge`].
pub const ENDPOINT_NUDGE: &str = "1/1000000";

/// Certifies or refutes that `p` has sign `claimed` throughout `(a, b)`.
pub fn certify_sign(p: &Polynomial, a: &BigRational, b: &BigRational, claimed: Sign) -> Result<SignCertificate> {
    let descartes_bound = sign_changes(p)?;
    let root_count = sturm_root_count(p, a, b)?;

    let mut adjustments = Vec::new();
    let mut left = a.clone();
    if p.eval(a).is_zero() {
        left = a + endpoint_nudge();
        adjustments.push(format!("left endpoint {a} is a root; sampled at {left}"));
    }
    let mut right = b.clone();
    if p.eval(b).is_zero() {
        right = b - endpoint_nudge();
        adjustments.push(format!("right endpoint {b} is a root; sampled at {right}"));
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let mid = (a + b) / two;

    let endpoint_values = vec![
        PointValue::at(p, left),
        PointValue::at(p, mid),
        PointValue::at(p, right),
    ];
    let values_match = endpoint_values.iter().all(|pv| claimed.matches(&pv.value));

    let right_value = p.eval(b);
    let descartes_witness = descartes_witness(p, b, &right_value);
    let descartes_argument =
        !a.is_negative() && descartes_bound == 1 && claimed.matches(&right_value) && descartes_witness.is_some();

    let verdict = if root_count == 0 && values_match {
        Verdict::Certified
    } else {
        Verdict::Refuted
    };

    Ok(SignCertificate {
        polynomial: p.clone(),
        interval: (a.clone(), b.clone()),
        claimed_sign: claimed,
        descartes_bound,
        endpoint_values,
        descartes_witness,
        descartes_argument,
        sturm_root_count: root_count,
        adjustments,
        verdict,
    })
}

/// Certificate for `p < 0` on `(0, 1)`, the shape every polynomial lemma takes.
pub fn certify_negative_on_unit(p: &Polynomial) -> Result<SignCertificate> {
    certify_sign(p, &BigRational::zero(), &BigRational::one(), Sign::Negative)
}

fn descartes_witness(p: &Polynomial, b: &BigRational, at_b: &BigRational) -> Option<PointValue> {
    if at_b.is_zero() {
        return None;
    }
    let bound = p.cauchy_bound()?.ceil().to_integer();
    let mut c: BigInt = b.floor().to_integer() + BigInt::one();
    while c <= bound {
        let point = BigRational::from_integer(c.clone());
        let value = p.eval(&point);
        if value.is_negative() != at_b.is_negative() && !value.is_zero() {
            return Some(PointValue { point, value });
        }
        c += BigInt::one();
    }
    None
}

fn bigint_to_f64(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}

/// Rational-coefficient polynomial used internally for Sturm chains.
#[derive(Debug, Clone, PartialEq)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Self(c)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn neg(&self) -> Self {
        Self(self.0.iter().map(|c| -c).collect())
    }

    fn monic(&self) -> Self {
        let lead = self.lead().clone();
        Self(self.0.iter().map(|c| c / &lead).collect())
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut rem = self.0.clone();
        if self.is_zero() || self.degree() < d.degree() {
            return (Self(Vec::new()), Self::new(rem));
        }
        let dd = d.degree();
        let mut quot = vec![BigRational::zero(); self.degree() - dd + 1];
        for shift in (0..quot.len()).rev() {
            let factor = &rem[shift + dd] / d.lead();
            if factor.is_zero() {
                continue;
            }
            for (i, c) in d.0.iter().enumerate() {
                rem[shift + i] -= &factor * c;
            }
            quot[shift] = factor;
        }
        (Self::new(quot), Self::new(rem))
    }

    fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero());
        q
    }

    fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }
}

fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    let (n, d) = s
        .split_once('/')
        .ok_or_else(|| format!("expected num/den, got {s:?}"))?;
    let n: BigInt = n.trim().parse().map_err(|e| format!("{e}"))?;
    let d: BigInt = d.trim().parse().map_err(|e| format!("{e}"))?;
    if d.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(BigRational::new(n, d))
}

mod serde_rational {
    use num_rational::BigRational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_rational(&s).map_err(D::Error::custom)
    }
}

mod serde_rational_pair {
    use num_rational::BigRational;
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>((a, b): &(BigRational, BigRational), s: S) -> Result<S::Ok, S::Error> {
        [super::format_rational(a), super::format_rational(b)].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(BigRational, BigRational), D::Error> {
        let [a, b] = <[String; 2]>::deserialize(d)?;
        let a = super::parse_rational(&a).map_err(D::Error::custom)?;
        let b = super::parse_rational(&b).map_err(D::Error::custom)?;
        Ok((a, b))
    }
}

mod serde_bigints {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|c| c.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(D::Error::custom))
            .collect()
    }
}
