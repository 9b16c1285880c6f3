//! Scalar and vector objectives over set descriptors.
//!
//! A [`ScalarFn`] owns its domain, so every Jensen-gap evaluation can first
//! confirm that the combination point stayed inside it. A combination that
//! leaves the domain is itself a counterexample (to p-convexity of the
//! domain) and is reported as [`Error::DomainViolation`].

use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::pcore::{combine_with, conjugate_coefficient, PExponent};
use crate::psets::{q_norm, Boundary, Bound, QNorm, SetDescriptor, SetNode};

/// Default relative tolerance for Jensen and homogeneity checks.
pub const DEFAULT_TOL: f64 = 1e-9;

type EvalFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// A real-valued function on a set.
#[derive(Clone)]
pub struct ScalarFn {
    domain: SetDescriptor,
    eval: EvalFn,
    label: String,
}

impl fmt::Debug for ScalarFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ScalarFn").field("label", &self.label).finish_non_exhaustive()
    }
}

impl ScalarFn {
    pub fn new<F>(label: impl Into<String>, domain: SetDescriptor, eval: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self {
            domain,
            eval: Arc::new(eval),
            label: label.into(),
        }
    }

    pub fn from_catalog(entry: CatalogEntry, domain: SetDescriptor) -> Self {
        let label = entry.to_string();
        match entry {
            CatalogEntry::LinearSum { alpha } => Self::new(label, domain, move |x| alpha * x.iter().sum::<f64>()),
            CatalogEntry::QNormFn { q } => Self::new(label, domain, move |x| q_norm(x, q)),
            CatalogEntry::SqrtMinusTwo => Self::new(label, domain, |x| x[0].sqrt() - 2.0),
            CatalogEntry::SquareShift => Self::new(label, domain, |x| (x[0] - 1.0).powi(2)),
            CatalogEntry::NegHalfQuad => Self::new(label, domain, |x| -x[0] * x[0] / 2.0 - 0.5),
        }
    }

    pub fn from_expr(expr: &Expr, domain: SetDescriptor) -> Result<Self> {
        if expr.arity() > domain.ambient_dim() {
            return Err(Error::InvalidParameter(format!(
                "expression uses x{} but the domain has dimension {}",
                expr.arity(),
                domain.ambient_dim()
            )));
        }
        let e = expr.clone();
        Ok(Self::new(expr.to_string(), domain, move |x| e.eval(x)))
    }

    pub fn domain(&self) -> &SetDescriptor {
        &self.domain
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Evaluates without a domain check.
    #[inline]
    pub fn value(&self, x: &[f64]) -> f64 {
        (self.eval)(x)
    }

    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        if !self.domain.contains(x)? {
            return Err(Error::NotInDomain(x.to_vec()));
        }
        Ok(self.value(x))
    }

    /// `a * f(x) + b`.
    pub fn affine(&self, a: f64, b: f64) -> Self {
        let inner = self.eval.clone();
        Self::new(format!("{a}*({}) + {b}", self.label), self.domain.clone(), move |x| a * inner(x) + b)
    }

    /// `x -> f(x - shift)` on the shifted domain.
    pub fn shifted(&self, shift: &[f64], domain: SetDescriptor) -> Self {
        let inner = self.eval.clone();
        let s = shift.to_vec();
        Self::new(format!("({})(x - {:?})", self.label, s), domain, move |x| {
            let y: Vec<f64> = x.iter().zip(&s).map(|(a, b)| a - b).collect();
            inner(&y)
        })
    }

    /// Same rule on another domain.
    pub fn with_domain(&self, domain: SetDescriptor) -> Self {
        Self {
            domain,
            eval: self.eval.clone(),
            label: self.label.clone(),
        }
    }
}

/// A vector objective `F = (f_1, ..., f_m)` with a shared domain.
#[derive(Debug, Clone)]
pub struct VectorFn {
    components: Vec<ScalarFn>,
}

impl VectorFn {
    /// All components must share one domain descriptor (the first component's
    /// domain is used).
    pub fn new(components: Vec<ScalarFn>) -> Result<Self> {
        let first = components
            .first()
            .ok_or_else(|| Error::InvalidParameter("vector function needs at least one component".into()))?;
        let domain = first.domain.clone();
        Ok(Self {
            components: components.into_iter().map(|c| c.with_domain(domain.clone())).collect(),
        })
    }

    pub fn components(&self) -> &[ScalarFn] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn domain(&self) -> &SetDescriptor {
        &self.components[0].domain
    }

    pub fn values(&self, x: &[f64]) -> Vec<f64> {
        self.components.iter().map(|f| f.value(x)).collect()
    }
}

pub fn evaluate_vector(f: &VectorFn, x: &[f64]) -> Result<Vec<f64>> {
    if !f.domain().contains(x)? {
        return Err(Error::NotInDomain(x.to_vec()));
    }
    Ok(f.values(x))
}

/// Named functions with known p-convexity behavior.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum CatalogEntry {
    /// `alpha * sum(x_i)`.
    LinearSum { alpha: f64 },
    /// `||x||_q`.
    #[serde(rename = "q_norm")]
    QNormFn { q: QNorm },
    /// `sqrt(x) - 2` on `[0, 1]`, p-convex for `p <= 1/2`.
    SqrtMinusTwo,
    /// `(x - 1)^2` on `[0, 2]`: convex but not 1/2-convex.
    SquareShift,
    /// `-x^2/2 - 1/2` on `[0, 1]`: 1/2-convex but not convex.
    NegHalfQuad,
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogEntry::LinearSum { alpha } => write!(f, "linear_sum(alpha={alpha})"),
            CatalogEntry::QNormFn { q } => write!(f, "q_norm(q={})", q.value()),
            CatalogEntry::SqrtMinusTwo => f.write_str("sqrt_minus_two"),
            CatalogEntry::SquareShift => f.write_str("square_shift"),
            CatalogEntry::NegHalfQuad => f.write_str("neg_half_quad"),
        }
    }
}

/// Expected behavior of a catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    PConvex,
    NotPConvex,
}

/// One documented `(p, domain)` pairing for a catalog entry.
#[derive(Debug, Clone)]
pub struct CatalogClaim {
    pub p: PExponent,
    pub domain: SetDescriptor,
    pub expectation: Expectation,
}

impl CatalogEntry {
    /// The `(p, domain)` pairs this entry is documented for. Entries valid
    /// for every p list a representative set of exponents.
    pub fn claims(&self) -> Vec<CatalogClaim> {
        let p = |v| PExponent::new(v).expect("valid exponent");
        let unit = || SetDescriptor::closed_interval(0.0, 1.0).expect("interval");
        let spread = [0.25, 0.5, 1.0];
        match self {
            CatalogEntry::LinearSum { .. } | CatalogEntry::QNormFn { .. } => {
                let domains = [
                    SetDescriptor::closed_interval(-1.0, 2.0).expect("interval"),
                    SetDescriptor::orthant_cone(2).expect("cone"),
                    SetDescriptor::ball(QNorm::L2, vec![0.2, -0.1], 1.0, Boundary::Closed).expect("ball"),
                ];
                spread
                    .iter()
                    .flat_map(|&v| {
                        domains.iter().map(move |d| CatalogClaim {
                            p: p(v),
                            domain: d.clone(),
                            expectation: Expectation::PConvex,
                        })
                    })
                    .collect()
            }
            // concave, so it fails at p = 1; a grid search puts the threshold
            // between 1/2 and 3/4
            CatalogEntry::SqrtMinusTwo => vec![
                CatalogClaim {
                    p: p(0.25),
                    domain: unit(),
                    expectation: Expectation::PConvex,
                },
                CatalogClaim {
                    p: p(0.5),
                    domain: unit(),
                    expectation: Expectation::PConvex,
                },
                CatalogClaim {
                    p: PExponent::ONE,
                    domain: unit(),
                    expectation: Expectation::NotPConvex,
                },
            ],
            CatalogEntry::SquareShift => vec![CatalogClaim {
                p: p(0.5),
                domain: SetDescriptor::closed_interval(0.0, 2.0).expect("interval"),
                expectation: Expectation::NotPConvex,
            }],
            CatalogEntry::NegHalfQuad => vec![
                CatalogClaim {
                    p: p(0.5),
                    domain: unit(),
                    expectation: Expectation::PConvex,
                },
                CatalogClaim {
                    p: PExponent::ONE,
                    domain: unit(),
                    expectation: Expectation::NotPConvex,
                },
            ],
        }
    }
}

/// `lambda f(x) + mu f(y) - f(lambda x + mu y)` with `mu` the conjugate of
/// `lambda`. A nonnegative gap means the p-convexity inequality holds at this
/// instance.
pub fn jensen_gap(f: &ScalarFn, x: &[f64], y: &[f64], lambda: f64, p: PExponent) -> Result<f64> {
    let d = f.domain();
    for pt in [x, y] {
        if !d.contains(pt)? {
            return Err(Error::NotInDomain(pt.to_vec()));
        }
    }
    let mu = conjugate_coefficient(lambda, p)?;
    let z = combine_with(x, y, lambda, mu);
    if !d.contains(&z)? {
        return Err(Error::DomainViolation { point: z });
    }
    Ok(lambda * f.value(x) + mu * f.value(y) - f.value(&z))
}

/// Log-spaced scalings `t` in `[1e-3, 10]`.
pub(crate) fn homogeneity_scalings(count: usize) -> Vec<f64> {
    let count = count.max(2);
    (0..count)
        .map(|k| 10f64.powf(-3.0 + 4.0 * k as f64 / (count - 1) as f64))
        .collect()
}

/// Sampled test of `f(t x) = t f(x)` for `t` in a log-spaced grid of
/// `(0, 10]`, skipping `t x` outside the domain.
pub fn is_positively_homogeneous(f: &ScalarFn, sample_budget: usize, tol: f64) -> bool {
    let d = f.domain();
    let mut rng = ChaCha8Rng::seed_from_u64(0x4040);
    let per_axis = ((sample_budget.max(1)) as f64).powf(1.0 / d.ambient_dim() as f64).ceil() as usize;
    let points = d.sample_members(per_axis.max(2), sample_budget, &mut rng);
    let scalings = homogeneity_scalings(16);
    for x in &points {
        let fx = f.value(x);
        for &t in &scalings {
            let tx: Vec<f64> = x.iter().map(|v| t * v).collect();
            if !d.member(&tx, 0.0) {
                continue;
            }
            if (f.value(&tx) - t * fx).abs() > tol * (1.0 + fx.abs()) {
                return false;
            }
        }
    }
    true
}

/// Center of the domain when it is a ball; bounded intervals whose two
/// endpoints are both open or both closed count as one-dimensional balls.
fn ball_center(f: &ScalarFn) -> Option<Vec<f64>> {
    let mut cur = f.domain();
    while let Some(cf) = cur.closed_form() {
        cur = cf;
    }
    match cur.node() {
        SetNode::Ball(b) => Some(b.center().to_vec()),
        SetNode::Interval(iv) => match (iv.lower(), iv.upper()) {
            (Bound::Open(a), Bound::Open(b)) | (Bound::Closed(a), Bound::Closed(b)) if b > a => {
                Some(vec![0.5 * (a + b)])
            }
            _ => None,
        },
        _ => None,
    }
}

/// The lower bound `m = 2^(1/p) f(z) - M` for a p-convex `f` on a ball
/// centered at `c`, with `z = 2^(1 - 1/p) c` and `M` an upper bound of `f`.
///
/// The domain must be a ball (a bounded interval with matching endpoint
/// types counts as a one-dimensional ball) and `z` must lie in it; otherwise
/// [`Error::CenterConditionViolated`] is returned.
pub fn lower_bound_from_upper(f: &ScalarFn, upper: f64, p: PExponent) -> Result<f64> {
    let center = ball_center(f).ok_or_else(|| Error::Precondition("domain of f is not a ball".into()))?;
    let factor = (1.0 - 1.0 / p.value()).exp2();
    let z: Vec<f64> = center.iter().map(|c| factor * c).collect();
    if !f.domain().contains(&z)? {
        return Err(Error::CenterConditionViolated(format!(
            "z = 2^(1-1/p) * center = {z:?} lies outside the ball"
        )));
    }
    Ok((1.0 / p.value()).exp2() * f.value(&z) - upper)
}
