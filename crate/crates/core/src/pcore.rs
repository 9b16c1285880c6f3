//! Arithmetic of p-convex combinations.
//!
//! For `0 < p <= 1` a pair of nonnegative coefficients `(lambda, mu)` is
//! admissible when `lambda^p + mu^p = 1`. Every admissible pair is generated
//! by `lambda` alone through the conjugate coefficient
//! `mu = (1 - lambda^p)^(1/p)`, and the p-convex combination of `x` and `y`
//! is `lambda * x + mu * y`. At `p = 1` this is the ordinary convex
//! combination; for `p < 1` the coefficients sum to less than one, which is
//! what pulls combinations toward the origin.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on `|lambda^p + mu^p - 1|` for a coefficient pair.
pub const COEFFICIENT_TOLERANCE: f64 = 1e-12;

/// The exponent `p`, validated to lie in `(0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct PExponent(f64);

impl PExponent {
    pub fn new(p: f64) -> Result<Self> {
        if p.is_finite() && p > 0.0 && p <= 1.0 {
            Ok(Self(p))
        } else {
            Err(Error::InvalidExponent(p))
        }
    }

    pub const ONE: PExponent = PExponent(1.0);

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn is_one(self) -> bool {
        self.0 == 1.0
    }

    /// `2^(-1/p)`, the coefficient of the symmetric pair `lambda = mu`.
    #[inline]
    pub fn symmetric_coefficient(self) -> f64 {
        (-1.0 / self.0).exp2()
    }
}

impl TryFrom<f64> for PExponent {
    type Error = Error;
    fn try_from(p: f64) -> Result<Self> {
        Self::new(p)
    }
}

impl From<PExponent> for f64 {
    fn from(p: PExponent) -> f64 {
        p.0
    }
}

impl std::fmt::Display for PExponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An admissible coefficient pair with `lambda^p + mu^p = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PCoefficients {
    pub lambda: f64,
    pub mu: f64,
    pub p: PExponent,
}

impl PCoefficients {
    /// Validates an explicit pair.
    pub fn new(lambda: f64, mu: f64, p: PExponent) -> Result<Self> {
        let pv = p.value();
        let ok = lambda >= 0.0
            && mu >= 0.0
            && (lambda.powf(pv) + mu.powf(pv) - 1.0).abs() <= COEFFICIENT_TOLERANCE;
        if ok {
            Ok(Self { lambda, mu, p })
        } else {
            Err(Error::InvalidCoefficients { lambda, mu, p: pv })
        }
    }

    /// The pair generated by `lambda` and its conjugate.
    pub fn from_lambda(lambda: f64, p: PExponent) -> Result<Self> {
        let mu = conjugate_coefficient(lambda, p)?;
        Ok(Self { lambda, mu, p })
    }

    /// `lambda + mu`, which is at most one.
    pub fn sum(&self) -> f64 {
        self.lambda + self.mu
    }
}

fn check_lambda(lambda: f64) -> Result<()> {
    if (0.0..=1.0).contains(&lambda) {
        Ok(())
    } else {
        Err(Error::LambdaOutOfRange(lambda))
    }
}

/// `mu = (1 - lambda^p)^(1/p)`.
///
/// `1 - lambda^p` is clamped into `[0, 1]` before the fractional power.
pub fn conjugate_coefficient(lambda: f64, p: PExponent) -> Result<f64> {
    check_lambda(lambda)?;
    let pv = p.value();
    if p.is_one() {
        return Ok(1.0 - lambda);
    }
    let base = (1.0 - lambda.powf(pv)).clamp(0.0, 1.0);
    Ok(base.powf(1.0 / pv))
}

/// `lambda * x + (1 - lambda^p)^(1/p) * y`, componentwise.
pub fn p_combine(x: &[f64], y: &[f64], lambda: f64, p: PExponent) -> Result<Vec<f64>> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            got: y.len(),
        });
    }
    let mu = conjugate_coefficient(lambda, p)?;
    Ok(combine_with(x, y, lambda, mu))
}

/// `lambda * x + mu * y` for an already computed pair. Lengths must agree.
#[inline]
pub(crate) fn combine_with(x: &[f64], y: &[f64], lambda: f64, mu: f64) -> Vec<f64> {
    x.iter()
        .zip(y)
        .map(|(a, b)| lambda * a + mu * b)
        .collect()
}

/// `g(lambda) = lambda + (1 - lambda^p)^(1/p)`, the factor by which a
/// combination of a point with itself rescales it. Lies in
/// `[2^((p-1)/p), 1]`.
pub fn scaling_g(lambda: f64, p: PExponent) -> Result<f64> {
    Ok(lambda + conjugate_coefficient(lambda, p)?)
}

/// Closed-form minimizer of [`scaling_g`]: `(2^(-1/p), 2^((p-1)/p))`.
///
/// Fails for `p = 1`, where `g` is identically one.
pub fn g_argmin(p: PExponent) -> Result<(f64, f64)> {
    if p.is_one() {
        return Err(Error::InvalidParameter(
            "g is constant for p = 1 and has no strict minimizer".into(),
        ));
    }
    let pv = p.value();
    Ok((p.symmetric_coefficient(), ((pv - 1.0) / pv).exp2()))
}

/// Which endpoints of `lambda in [0, 1]` a segment sample includes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SegmentKind {
    /// `(x, y)_p`: `lambda in (0, 1)`.
    Open,
    /// `[x, y)_p`: `lambda in (0, 1]`.
    HalfOpen,
    /// `[x, y]_p`: `lambda in [0, 1]`.
    Closed,
}

/// `count` equally spaced values of `lambda` over the interval selected by `kind`.
pub fn lambda_grid(count: usize, kind: SegmentKind) -> Vec<f64> {
    if count == 0 {
        return Vec::new();
    }
    match kind {
        SegmentKind::Open => (1..=count)
            .map(|i| i as f64 / (count + 1) as f64)
            .collect(),
        SegmentKind::HalfOpen => (1..=count).map(|i| i as f64 / count as f64).collect(),
        SegmentKind::Closed if count == 1 => vec![1.0],
        SegmentKind::Closed => (0..count)
            .map(|i| i as f64 / (count - 1) as f64)
            .collect(),
    }
}

/// Points of the p-segment between `x` and `y` at a uniform `lambda` grid,
/// in increasing `lambda` (so the last point of a closed segment is `x`).
pub fn sample_p_segment(
    x: &[f64],
    y: &[f64],
    p: PExponent,
    count: usize,
    kind: SegmentKind,
) -> Result<Vec<Vec<f64>>> {
    if count == 0 {
        return Err(Error::InvalidParameter("segment sample count must be >= 1".into()));
    }
    lambda_grid(count, kind)
        .into_iter()
        .map(|lambda| p_combine(x, y, lambda, p))
        .collect()
}
