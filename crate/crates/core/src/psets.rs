//! Set descriptors over `R^n`.
//!
//! A [`SetDescriptor`] is an immutable tree of primitives (intervals, q-norm
//! balls, finite point clouds, the nonnegative orthant, user oracles) and
//! algebraic nodes (intersection, Minkowski sum, scaling, tubular
//! neighborhood). Every descriptor answers membership queries, estimates
//! q-distances and carries a finite bounding box that samplers draw from.
//!
//! Composite nodes whose result is again a primitive (the sum of two
//! intervals, a scaled ball, the tube around a ball in its own norm, ...)
//! compute that primitive once at construction and answer every query
//! through it. Everything else falls back to sampling, which is reported as
//! such: [`Distance::exact`] is false for estimated distances and Minkowski
//! sums of curved sets are decided by a budgeted witness search.

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Half-width of the sampling window used along unbounded directions.
pub const SAMPLING_EXTENT: f64 = 10.0;

/// Default number of left-child samples searched when deciding membership in
/// a Minkowski sum that has no closed form.
pub const SUM_SEARCH_BUDGET: usize = 10_000;

/// Upper bound on grid points drawn from one bounding box.
const GRID_CAP: usize = 40_000;

const INTERNAL_SEED: u64 = 0x5eed_0f_5e75;

/// The norm index `q`, with `q = +inf` allowed.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct QNorm(f64);

impl QNorm {
    pub const L1: QNorm = QNorm(1.0);
    pub const L2: QNorm = QNorm(2.0);
    pub const INF: QNorm = QNorm(f64::INFINITY);

    pub fn new(q: f64) -> Result<Self> {
        if q >= 1.0 && !q.is_nan() {
            Ok(Self(q))
        } else {
            Err(Error::InvalidNorm(q))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_inf(self) -> bool {
        self.0.is_infinite()
    }
}

impl Serialize for QNorm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_inf() {
            s.serialize_str("inf")
        } else {
            s.serialize_f64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for QNorm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        let q = match Raw::deserialize(d)? {
            Raw::Num(v) => v,
            Raw::Text(t) if matches!(t.as_str(), "inf" | "infinity" | "+inf") => f64::INFINITY,
            Raw::Text(t) => return Err(serde::de::Error::custom(format!("bad norm index {t:?}"))),
        };
        QNorm::new(q).map_err(serde::de::Error::custom)
    }
}

/// `||x||_q`.
pub fn q_norm(x: &[f64], q: QNorm) -> f64 {
    let q = q.value();
    if q.is_infinite() {
        x.iter().fold(0.0, |m, v| m.max(v.abs()))
    } else if q == 1.0 {
        x.iter().map(|v| v.abs()).sum()
    } else if q == 2.0 {
        x.iter().map(|v| v * v).sum::<f64>().sqrt()
    } else {
        x.iter().map(|v| v.abs().powf(q)).sum::<f64>().powf(1.0 / q)
    }
}

fn diff_norm(x: &[f64], c: &[f64], q: QNorm) -> f64 {
    let d: Vec<f64> = x.iter().zip(c).map(|(a, b)| a - b).collect();
    q_norm(&d, q)
}

fn sup_norm(x: &[f64]) -> f64 {
    q_norm(x, QNorm::INF)
}

/// Open or closed boundary of a ball.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Boundary {
    Open,
    Closed,
}

/// One end of an interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bound {
    Unbounded,
    Open(f64),
    Closed(f64),
}

impl Bound {
    fn value(self) -> Option<f64> {
        match self {
            Bound::Unbounded => None,
            Bound::Open(v) | Bound::Closed(v) => Some(v),
        }
    }

    fn map(self, f: impl Fn(f64) -> f64) -> Bound {
        match self {
            Bound::Unbounded => Bound::Unbounded,
            Bound::Open(v) => Bound::Open(f(v)),
            Bound::Closed(v) => Bound::Closed(f(v)),
        }
    }

    fn open(self) -> Bound {
        match self {
            Bound::Closed(v) => Bound::Open(v),
            other => other,
        }
    }
}

/// The eight interval shapes `(a,+inf)`, `[a,+inf)`, `(-inf,b)`, `(-inf,b]`,
/// `(a,b)`, `(a,b]`, `[a,b)`, `[a,b]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IntervalShape {
    #[serde(rename = "(a,+inf)")]
    OpenRayRight,
    #[serde(rename = "[a,+inf)")]
    ClosedRayRight,
    #[serde(rename = "(-inf,b)")]
    OpenRayLeft,
    #[serde(rename = "(-inf,b]")]
    ClosedRayLeft,
    #[serde(rename = "(a,b)")]
    Open,
    #[serde(rename = "(a,b]")]
    OpenClosed,
    #[serde(rename = "[a,b)")]
    ClosedOpen,
    #[serde(rename = "[a,b]")]
    Closed,
}

impl IntervalShape {
    pub const ALL: [IntervalShape; 8] = [
        IntervalShape::OpenRayRight,
        IntervalShape::ClosedRayRight,
        IntervalShape::OpenRayLeft,
        IntervalShape::ClosedRayLeft,
        IntervalShape::Open,
        IntervalShape::OpenClosed,
        IntervalShape::ClosedOpen,
        IntervalShape::Closed,
    ];

    pub fn bounds(self, a: f64, b: f64) -> (Bound, Bound) {
        use IntervalShape::*;
        match self {
            OpenRayRight => (Bound::Open(a), Bound::Unbounded),
            ClosedRayRight => (Bound::Closed(a), Bound::Unbounded),
            OpenRayLeft => (Bound::Unbounded, Bound::Open(b)),
            ClosedRayLeft => (Bound::Unbounded, Bound::Closed(b)),
            Open => (Bound::Open(a), Bound::Open(b)),
            OpenClosed => (Bound::Open(a), Bound::Closed(b)),
            ClosedOpen => (Bound::Closed(a), Bound::Open(b)),
            Closed => (Bound::Closed(a), Bound::Closed(b)),
        }
    }
}

/// A subset of `R`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lower: Bound,
    upper: Bound,
}

impl Interval {
    pub fn lower(&self) -> Bound {
        self.lower
    }

    pub fn upper(&self) -> Bound {
        self.upper
    }

    fn contains_within(&self, t: f64, slack: f64) -> bool {
        let lo_ok = match self.lower {
            Bound::Unbounded => true,
            Bound::Open(a) => t > a - slack,
            Bound::Closed(a) => t >= a - slack,
        };
        let hi_ok = match self.upper {
            Bound::Unbounded => true,
            Bound::Open(b) => t < b + slack,
            Bound::Closed(b) => t <= b + slack,
        };
        lo_ok && hi_ok
    }

    fn distance(&self, t: f64) -> f64 {
        let below = self.lower.value().map_or(0.0, |a| (a - t).max(0.0));
        let above = self.upper.value().map_or(0.0, |b| (t - b).max(0.0));
        below.max(above)
    }

    fn bbox(&self) -> BoundingBox {
        let (lo, hi) = match (self.lower.value(), self.upper.value()) {
            (Some(a), Some(b)) => (a, b),
            (Some(a), None) => (a, a.max(0.0) + SAMPLING_EXTENT),
            (None, Some(b)) => (b.min(0.0) - SAMPLING_EXTENT, b),
            (None, None) => (-SAMPLING_EXTENT, SAMPLING_EXTENT),
        };
        BoundingBox::new(vec![lo], vec![hi])
    }
}

/// A q-norm ball `{x : ||x - c||_q < r}` or with `<=`.
#[derive(Debug, Clone, PartialEq)]
pub struct Ball {
    q: QNorm,
    center: Vec<f64>,
    radius: f64,
    boundary: Boundary,
}

impl Ball {
    pub fn q(&self) -> QNorm {
        self.q
    }
    pub fn center(&self) -> &[f64] {
        &self.center
    }
    pub fn radius(&self) -> f64 {
        self.radius
    }
    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    fn contains_within(&self, x: &[f64], slack: f64) -> bool {
        let d = diff_norm(x, &self.center, self.q);
        match self.boundary {
            Boundary::Open => d < self.radius + slack,
            Boundary::Closed => d <= self.radius + slack,
        }
    }
}

/// A user-supplied membership predicate with an explicit sampling box.
#[derive(Clone)]
pub struct OracleSet {
    label: String,
    bbox: BoundingBox,
    predicate: Arc<dyn Fn(&[f64]) -> bool + Send + Sync>,
}

impl OracleSet {
    pub fn label(&self) -> &str {
        &self.label
    }
}

impl fmt::Debug for OracleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OracleSet")
            .field("label", &self.label)
            .field("bbox", &self.bbox)
            .finish_non_exhaustive()
    }
}

/// Axis-aligned box.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundingBox {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl BoundingBox {
    pub fn new(lo: Vec<f64>, hi: Vec<f64>) -> Self {
        debug_assert_eq!(lo.len(), hi.len());
        Self { lo, hi }
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lo.iter().zip(&self.hi).any(|(a, b)| a > b)
    }

    fn inflate(&self, by: f64) -> Self {
        Self::new(
            self.lo.iter().map(|v| v - by).collect(),
            self.hi.iter().map(|v| v + by).collect(),
        )
    }

    fn minkowski(&self, other: &Self) -> Self {
        Self::new(
            self.lo.iter().zip(&other.lo).map(|(a, b)| a + b).collect(),
            self.hi.iter().zip(&other.hi).map(|(a, b)| a + b).collect(),
        )
    }

    fn scale(&self, nu: f64) -> Self {
        let (lo, hi): (Vec<f64>, Vec<f64>) = self
            .lo
            .iter()
            .zip(&self.hi)
            .map(|(&a, &b)| {
                let (u, v) = (nu * a, nu * b);
                (u.min(v), u.max(v))
            })
            .unzip();
        Self::new(lo, hi)
    }

    fn intersect(&self, other: &Self) -> Self {
        Self::new(
            self.lo.iter().zip(&other.lo).map(|(a, b)| a.max(*b)).collect(),
            self.hi.iter().zip(&other.hi).map(|(a, b)| a.min(*b)).collect(),
        )
    }

    /// Points of a uniform grid with `per_axis` points per axis (capped so the
    /// total stays bounded), in row-major order.
    pub fn grid(&self, per_axis: usize) -> Vec<Vec<f64>> {
        if self.is_empty() || per_axis == 0 {
            return Vec::new();
        }
        let n = self.dim();
        let cap = (GRID_CAP as f64).powf(1.0 / n as f64).floor() as usize;
        let per = per_axis.min(cap.max(1));
        let axes: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                let (a, b) = (self.lo[i], self.hi[i]);
                if per == 1 || a == b {
                    vec![0.5 * (a + b)]
                } else {
                    (0..per)
                        .map(|k| a + (b - a) * k as f64 / (per - 1) as f64)
                        .collect()
                }
            })
            .collect();
        let mut out = vec![Vec::with_capacity(n)];
        for axis in &axes {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    axis.iter().map(move |&v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        out
    }

    pub fn random_point(&self, rng: &mut impl Rng) -> Vec<f64> {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(&a, &b)| if a == b { a } else { rng.gen_range(a..=b) })
            .collect()
    }
}

/// Internal node of a descriptor tree.
#[derive(Debug)]
pub enum SetNode {
    Interval(Interval),
    Ball(Ball),
    PointCloud(Vec<Vec<f64>>),
    OrthantCone(usize),
    Oracle(OracleSet),
    Intersection {
        children: Vec<SetDescriptor>,
        closed_form: Option<SetDescriptor>,
    },
    MinkowskiSum {
        left: SetDescriptor,
        right: SetDescriptor,
        closed_form: Option<SetDescriptor>,
        left_samples: OnceLock<Vec<Vec<f64>>>,
    },
    Scale {
        nu: f64,
        child: SetDescriptor,
        closed_form: Option<SetDescriptor>,
    },
    Tube {
        child: SetDescriptor,
        delta: f64,
        q: QNorm,
        closed_form: Option<SetDescriptor>,
    },
}

/// An immutable, cheaply clonable description of a subset of `R^n`.
#[derive(Clone)]
pub struct SetDescriptor {
    node: Arc<SetNode>,
    dim: usize,
}

impl fmt::Debug for SetDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.node.fmt(f)
    }
}

/// A q-distance together with whether it is exact or a sampled upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Distance {
    pub value: f64,
    pub exact: bool,
}

/// Outcome of a Minkowski-sum membership decision.
#[derive(Debug, Clone, PartialEq)]
pub struct SumMembership {
    pub member: bool,
    /// False when the answer came from a bounded witness search.
    pub exact: bool,
    /// A decomposition `x = left + right` when one was found.
    pub witness: Option<(Vec<f64>, Vec<f64>)>,
    pub samples: usize,
}

fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}

fn check_finite(x: &[f64], what: &str) -> Result<()> {
    if x.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{what} has non-finite coordinates")))
    }
}

impl SetDescriptor {
    fn from_node(node: SetNode, dim: usize) -> Self {
        Self {
            node: Arc::new(node),
            dim,
        }
    }

    // ---- constructors -------------------------------------------------

    pub fn interval(lower: Bound, upper: Bound) -> Result<Self> {
        for v in [lower.value(), upper.value()].into_iter().flatten() {
            if !v.is_finite() {
                return Err(Error::InvalidParameter("interval endpoints must be finite".into()));
            }
        }
        if let (Some(a), Some(b)) = (lower.value(), upper.value()) {
            if a > b {
                return Err(Error::InvalidParameter(format!("interval requires a <= b, got {a} > {b}")));
            }
        }
        Ok(Self::from_node(SetNode::Interval(Interval { lower, upper }), 1))
    }

    pub fn interval_shape(shape: IntervalShape, a: f64, b: f64) -> Result<Self> {
        let (lo, hi) = shape.bounds(a, b);
        Self::interval(lo, hi)
    }

    /// Shorthand for `[a, b]`.
    pub fn closed_interval(a: f64, b: f64) -> Result<Self> {
        Self::interval(Bound::Closed(a), Bound::Closed(b))
    }

    pub fn ball(q: QNorm, center: Vec<f64>, radius: f64, boundary: Boundary) -> Result<Self> {
        if center.is_empty() {
            return Err(Error::InvalidParameter("ball center must have dimension >= 1".into()));
        }
        check_finite(&center, "ball center")?;
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidParameter(format!("ball radius must be > 0, got {radius}")));
        }
        let dim = center.len();
        Ok(Self::from_node(
            SetNode::Ball(Ball {
                q,
                center,
                radius,
                boundary,
            }),
            dim,
        ))
    }

    pub fn point_cloud(points: Vec<Vec<f64>>) -> Result<Self> {
        let dim = points
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidParameter("point cloud must be nonempty".into()))?;
        if dim == 0 {
            return Err(Error::InvalidParameter("points must have dimension >= 1".into()));
        }
        for p in &points {
            check_dim(dim, p.len())?;
            check_finite(p, "point")?;
        }
        Ok(Self::from_node(SetNode::PointCloud(points), dim))
    }

    /// The cone `R^n_+`.
    pub fn orthant_cone(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("orthant dimension must be >= 1".into()));
        }
        Ok(Self::from_node(SetNode::OrthantCone(dim), dim))
    }

    /// A set given by a pure membership predicate and a sampling box.
    pub fn oracle<F>(label: impl Into<String>, bbox: BoundingBox, predicate: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> bool + Send + Sync + 'static,
    {
        let dim = bbox.dim();
        if dim == 0 || bbox.is_empty() {
            return Err(Error::InvalidParameter("oracle needs a nonempty bounding box".into()));
        }
        check_finite(&bbox.lo, "bounding box")?;
        check_finite(&bbox.hi, "bounding box")?;
        Ok(Self::from_node(
            SetNode::Oracle(OracleSet {
                label: label.into(),
                bbox,
                predicate: Arc::new(predicate),
            }),
            dim,
        ))
    }

    pub fn intersection(children: Vec<SetDescriptor>) -> Result<Self> {
        let dim = children
            .first()
            .map(|c| c.dim)
            .ok_or_else(|| Error::InvalidParameter("intersection needs at least one set".into()))?;
        for c in &children {
            check_dim(dim, c.dim)?;
        }
        let closed_form = intersection_closed_form(&children);
        Ok(Self::from_node(
            SetNode::Intersection {
                children,
                closed_form,
            },
            dim,
        ))
    }

    pub fn minkowski_sum(left: SetDescriptor, right: SetDescriptor) -> Result<Self> {
        check_dim(left.dim, right.dim)?;
        let closed_form = sum_closed_form(&left, &right);
        let dim = left.dim;
        Ok(Self::from_node(
            SetNode::MinkowskiSum {
                left,
                right,
                closed_form,
                left_samples: OnceLock::new(),
            },
            dim,
        ))
    }

    /// `nu * K`.
    pub fn scale(nu: f64, child: SetDescriptor) -> Result<Self> {
        if !nu.is_finite() {
            return Err(Error::InvalidParameter("scale factor must be finite".into()));
        }
        let closed_form = scale_closed_form(nu, &child);
        let dim = child.dim;
        Ok(Self::from_node(
            SetNode::Scale {
                nu,
                child,
                closed_form,
            },
            dim,
        ))
    }

    /// The tubular neighborhood `K + B_q(0, delta) = {x : d_q(x, K) < delta}`.
    pub fn tube(child: SetDescriptor, delta: f64, q: QNorm) -> Result<Self> {
        if !(delta > 0.0 && delta.is_finite()) {
            return Err(Error::InvalidParameter(format!("tube width must be > 0, got {delta}")));
        }
        let closed_form = tube_closed_form(&child, delta, q);
        let dim = child.dim;
        Ok(Self::from_node(
            SetNode::Tube {
                child,
                delta,
                q,
                closed_form,
            },
            dim,
        ))
    }

    // ---- inspection ---------------------------------------------------

    pub fn node(&self) -> &SetNode {
        &self.node
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// The primitive this descriptor is equivalent to, if one was derived.
    pub fn closed_form(&self) -> Option<&SetDescriptor> {
        match &*self.node {
            SetNode::Intersection { closed_form, .. }
            | SetNode::MinkowskiSum { closed_form, .. }
            | SetNode::Scale { closed_form, .. }
            | SetNode::Tube { closed_form, .. } => closed_form.as_ref(),
            _ => None,
        }
    }

    fn resolved(&self) -> &SetDescriptor {
        let mut cur = self;
        while let Some(cf) = cur.closed_form() {
            cur = cf;
        }
        cur
    }

    /// Whether membership is decided without sampling anywhere in the tree.
    pub fn has_exact_membership(&self) -> bool {
        let me = self.resolved();
        match &*me.node {
            SetNode::Intersection { children, .. } => children.iter().all(|c| c.has_exact_membership()),
            SetNode::MinkowskiSum { left, right, .. } => {
                matches!(&*left.resolved().node, SetNode::PointCloud(_)) && right.has_exact_membership()
                    || matches!(&*right.resolved().node, SetNode::PointCloud(_)) && left.has_exact_membership()
            }
            SetNode::Scale { child, .. } => child.has_exact_membership(),
            SetNode::Tube { child, delta: _, q, .. } => child.exact_distance(&vec![0.0; self.dim], *q).is_some(),
            _ => true,
        }
    }

    pub fn bounding_box(&self) -> BoundingBox {
        match &*self.node {
            SetNode::Interval(iv) => iv.bbox(),
            SetNode::Ball(b) => {
                // every q-ball sits inside the sup-norm ball of the same radius
                BoundingBox::new(
                    b.center.iter().map(|c| c - b.radius).collect(),
                    b.center.iter().map(|c| c + b.radius).collect(),
                )
            }
            SetNode::PointCloud(points) => {
                let n = self.dim;
                let mut lo = vec![f64::INFINITY; n];
                let mut hi = vec![f64::NEG_INFINITY; n];
                for p in points {
                    for i in 0..n {
                        lo[i] = lo[i].min(p[i]);
                        hi[i] = hi[i].max(p[i]);
                    }
                }
                BoundingBox::new(lo, hi)
            }
            SetNode::OrthantCone(n) => BoundingBox::new(vec![0.0; *n], vec![SAMPLING_EXTENT; *n]),
            SetNode::Oracle(o) => o.bbox.clone(),
            SetNode::Intersection { children, closed_form } => match closed_form {
                Some(cf) => cf.bounding_box(),
                None => children
                    .iter()
                    .map(|c| c.bounding_box())
                    .reduce(|a, b| a.intersect(&b))
                    .expect("intersection has children"),
            },
            SetNode::MinkowskiSum { left, right, .. } => left.bounding_box().minkowski(&right.bounding_box()),
            SetNode::Scale { nu, child, .. } => child.bounding_box().scale(*nu),
            SetNode::Tube { child, delta, .. } => child.bounding_box().inflate(*delta),
        }
    }

    // ---- membership ---------------------------------------------------

    /// Exact membership for primitives; open boundaries use strict
    /// comparisons and closed ones non-strict.
    pub fn contains(&self, x: &[f64]) -> Result<bool> {
        check_dim(self.dim, x.len())?;
        Ok(self.member(x, 0.0))
    }

    /// Membership in the set enlarged by `slack` (each primitive's
    /// inequalities relaxed by `slack`; oracles are not relaxed).
    pub fn contains_within(&self, x: &[f64], slack: f64) -> Result<bool> {
        check_dim(self.dim, x.len())?;
        Ok(self.member(x, slack.max(0.0)))
    }

    pub(crate) fn member(&self, x: &[f64], slack: f64) -> bool {
        match &*self.node {
            SetNode::Interval(iv) => iv.contains_within(x[0], slack),
            SetNode::Ball(b) => b.contains_within(x, slack),
            SetNode::PointCloud(points) => points.iter().any(|p| {
                if slack == 0.0 {
                    p.as_slice() == x
                } else {
                    p.iter().zip(x).all(|(a, b)| (a - b).abs() <= slack)
                }
            }),
            SetNode::OrthantCone(_) => x.iter().all(|&v| v >= -slack),
            SetNode::Oracle(o) => (o.predicate)(x),
            SetNode::Intersection { children, closed_form } => match closed_form {
                Some(cf) => cf.member(x, slack),
                None => children.iter().all(|c| c.member(x, slack)),
            },
            SetNode::MinkowskiSum { closed_form: Some(cf), .. } => cf.member(x, slack),
            SetNode::MinkowskiSum { .. } => self.sum_membership(x, slack).member,
            SetNode::Scale { closed_form: Some(cf), .. } => cf.member(x, slack),
            SetNode::Scale { nu, child, .. } => {
                if *nu == 0.0 {
                    sup_norm(x) <= slack
                } else {
                    let y: Vec<f64> = x.iter().map(|v| v / nu).collect();
                    child.member(&y, slack / nu.abs())
                }
            }
            SetNode::Tube { closed_form: Some(cf), .. } => cf.member(x, slack),
            SetNode::Tube { child, delta, q, .. } => match child.distance_any(x, *q) {
                Some(d) => d.value < delta + slack,
                None => false,
            },
        }
    }

    /// Decides `x in left + right`. Exact when either summand resolves to a
    /// point cloud (or the sum has a closed form); otherwise searches for a
    /// decomposition over a fixed sample of the left summand and reports
    /// `exact = false`.
    pub fn decide_sum_membership(&self, x: &[f64]) -> Result<SumMembership> {
        check_dim(self.dim, x.len())?;
        match &*self.node {
            SetNode::MinkowskiSum { closed_form: Some(cf), .. } => Ok(SumMembership {
                member: cf.member(x, 0.0),
                exact: cf.has_exact_membership(),
                witness: None,
                samples: 0,
            }),
            SetNode::MinkowskiSum { .. } => Ok(self.sum_membership(x, 0.0)),
            _ => Err(Error::InvalidParameter("not a Minkowski sum".into())),
        }
    }

    fn sum_membership(&self, x: &[f64], slack: f64) -> SumMembership {
        let SetNode::MinkowskiSum {
            left,
            right,
            left_samples,
            ..
        } = &*self.node
        else {
            unreachable!("sum_membership on a non-sum node");
        };
        let search = |points: &[Vec<f64>], other: &SetDescriptor, exact: bool, swap: bool| {
            for (k, a) in points.iter().enumerate() {
                let rest: Vec<f64> = x.iter().zip(a).map(|(u, v)| u - v).collect();
                if other.member(&rest, slack) {
                    let w = if swap { (rest, a.clone()) } else { (a.clone(), rest) };
                    return SumMembership {
                        member: true,
                        exact,
                        witness: Some(w),
                        samples: k + 1,
                    };
                }
            }
            SumMembership {
                member: false,
                exact,
                witness: None,
                samples: points.len(),
            }
        };
        if let SetNode::PointCloud(points) = &*left.resolved().node {
            return search(points, right, right.has_exact_membership(), false);
        }
        if let SetNode::PointCloud(points) = &*right.resolved().node {
            return search(points, left, left.has_exact_membership(), true);
        }
        let samples = left_samples.get_or_init(|| {
            let grid = ((SUM_SEARCH_BUDGET / 2) as f64).powf(1.0 / self.dim as f64).floor() as usize;
            let mut rng = ChaCha8Rng::seed_from_u64(INTERNAL_SEED);
            let mut pts = left.sample_members(grid.max(2), SUM_SEARCH_BUDGET / 2, &mut rng);
            pts.truncate(SUM_SEARCH_BUDGET);
            pts
        });
        search(samples, right, false, false)
    }

    // ---- distance -----------------------------------------------------

    /// `d_q(x, K)`: closed form where available, otherwise the minimum over a
    /// sample of member points (an upper bound).
    pub fn distance_q(&self, x: &[f64], q: QNorm) -> Result<Distance> {
        check_dim(self.dim, x.len())?;
        self.distance_any(x, q).ok_or(Error::DistanceInestimable)
    }

    fn distance_any(&self, x: &[f64], q: QNorm) -> Option<Distance> {
        if let Some(v) = self.exact_distance(x, q) {
            return Some(Distance { value: v, exact: true });
        }
        let samples = self.distance_samples();
        samples
            .iter()
            .map(|k| diff_norm(x, k, q))
            .reduce(f64::min)
            .map(|value| Distance { value, exact: false })
    }

    fn distance_samples(&self) -> Vec<Vec<f64>> {
        let mut rng = ChaCha8Rng::seed_from_u64(INTERNAL_SEED ^ 0xd15);
        let grid = (4096f64).powf(1.0 / self.dim as f64).floor() as usize;
        self.sample_members(grid.max(2), 2048, &mut rng)
    }

    pub(crate) fn exact_distance(&self, x: &[f64], q: QNorm) -> Option<f64> {
        match &*self.node {
            SetNode::Interval(iv) => Some(iv.distance(x[0])),
            SetNode::Ball(b) => {
                if b.q == q || self.dim == 1 {
                    Some((diff_norm(x, &b.center, q) - b.radius).max(0.0))
                } else {
                    None
                }
            }
            SetNode::PointCloud(points) => points.iter().map(|p| diff_norm(x, p, q)).reduce(f64::min),
            SetNode::OrthantCone(_) => {
                let neg: Vec<f64> = x.iter().map(|v| v.min(0.0)).collect();
                Some(q_norm(&neg, q))
            }
            SetNode::Oracle(_) => None,
            SetNode::Intersection { closed_form, .. } => closed_form.as_ref()?.exact_distance(x, q),
            SetNode::MinkowskiSum {
                left,
                right,
                closed_form,
                ..
            } => {
                if let Some(cf) = closed_form {
                    return cf.exact_distance(x, q);
                }
                let via = |points: &[Vec<f64>], other: &SetDescriptor| {
                    points
                        .iter()
                        .map(|a| {
                            let rest: Vec<f64> = x.iter().zip(a).map(|(u, v)| u - v).collect();
                            other.exact_distance(&rest, q)
                        })
                        .try_fold(f64::INFINITY, |m, d| d.map(|d| m.min(d)))
                };
                if let SetNode::PointCloud(points) = &*left.resolved().node {
                    return via(points, right);
                }
                if let SetNode::PointCloud(points) = &*right.resolved().node {
                    return via(points, left);
                }
                None
            }
            SetNode::Scale { nu, child, closed_form } => {
                if let Some(cf) = closed_form {
                    return cf.exact_distance(x, q);
                }
                if *nu == 0.0 {
                    Some(q_norm(x, q))
                } else {
                    let y: Vec<f64> = x.iter().map(|v| v / nu).collect();
                    child.exact_distance(&y, q).map(|d| d * nu.abs())
                }
            }
            SetNode::Tube {
                child,
                delta,
                q: tq,
                closed_form,
            } => {
                if let Some(cf) = closed_form {
                    return cf.exact_distance(x, q);
                }
                if *tq == q || self.dim == 1 {
                    child.exact_distance(x, q).map(|d| (d - delta).max(0.0))
                } else {
                    None
                }
            }
        }
    }

    // ---- sampling -----------------------------------------------------

    /// Member points: a uniform grid over the bounding box filtered by
    /// membership, followed by up to `random` uniformly drawn members.
    /// Point clouds return their points; sums and scalings without a closed
    /// form sample through their children.
    pub fn sample_members(&self, grid_per_axis: usize, random: usize, rng: &mut impl Rng) -> Vec<Vec<f64>> {
        if let Some(cf) = self.closed_form() {
            return cf.sample_members(grid_per_axis, random, rng);
        }
        match &*self.node {
            SetNode::PointCloud(points) => points.clone(),
            SetNode::MinkowskiSum { left, right, .. } => {
                let per = (grid_per_axis as f64).sqrt().ceil() as usize;
                let ls = left.sample_members(per.max(2), random / 2 + 1, rng);
                let rs = right.sample_members(per.max(2), random / 2 + 1, rng);
                if ls.is_empty() || rs.is_empty() {
                    return Vec::new();
                }
                let budget = grid_per_axis.pow(self.dim.min(3) as u32).min(GRID_CAP) + random;
                let mut out = Vec::with_capacity(budget);
                'outer: for a in &ls {
                    for b in &rs {
                        if out.len() >= budget {
                            break 'outer;
                        }
                        out.push(a.iter().zip(b).map(|(u, v)| u + v).collect());
                    }
                }
                for _ in 0..random {
                    let a = &ls[rng.gen_range(0..ls.len())];
                    let b = &rs[rng.gen_range(0..rs.len())];
                    out.push(a.iter().zip(b).map(|(u, v)| u + v).collect());
                }
                out
            }
            SetNode::Scale { nu, child, .. } => child
                .sample_members(grid_per_axis, random, rng)
                .into_iter()
                .map(|p| p.into_iter().map(|v| v * nu).collect())
                .collect(),
            _ => {
                let bbox = self.bounding_box();
                if bbox.is_empty() {
                    return Vec::new();
                }
                let mut out: Vec<Vec<f64>> = bbox
                    .grid(grid_per_axis)
                    .into_iter()
                    .filter(|p| self.member(p, 0.0))
                    .collect();
                let mut accepted = 0;
                let mut attempts = 0;
                while accepted < random && attempts < random.saturating_mul(50) {
                    attempts += 1;
                    let p = bbox.random_point(rng);
                    if self.member(&p, 0.0) {
                        out.push(p);
                        accepted += 1;
                    }
                }
                out
            }
        }
    }
}

// ---- closed forms ------------------------------------------------------

fn interval_of(s: &SetDescriptor) -> Option<Interval> {
    match &*s.resolved().node {
        SetNode::Interval(iv) => Some(*iv),
        _ => None,
    }
}

fn ball_of(s: &SetDescriptor) -> Option<Ball> {
    match &*s.resolved().node {
        SetNode::Ball(b) => Some(b.clone()),
        _ => None,
    }
}

fn cloud_of(s: &SetDescriptor) -> Option<Vec<Vec<f64>>> {
    match &*s.resolved().node {
        SetNode::PointCloud(p) => Some(p.clone()),
        _ => None,
    }
}

fn tighter_lower(a: Bound, b: Bound) -> Bound {
    match (a.value(), b.value()) {
        (None, _) => b,
        (_, None) => a,
        (Some(x), Some(y)) if x > y => a,
        (Some(x), Some(y)) if y > x => b,
        _ => {
            if matches!(a, Bound::Open(_)) {
                a
            } else {
                b
            }
        }
    }
}

fn tighter_upper(a: Bound, b: Bound) -> Bound {
    match (a.value(), b.value()) {
        (None, _) => b,
        (_, None) => a,
        (Some(x), Some(y)) if x < y => a,
        (Some(x), Some(y)) if y < x => b,
        _ => {
            if matches!(a, Bound::Open(_)) {
                a
            } else {
                b
            }
        }
    }
}

fn intersection_closed_form(children: &[SetDescriptor]) -> Option<SetDescriptor> {
    if children.len() == 1 {
        return Some(children[0].clone());
    }
    let ivs: Option<Vec<Interval>> = children.iter().map(interval_of).collect();
    if let Some(ivs) = ivs {
        let lower = ivs.iter().map(|i| i.lower).reduce(tighter_lower)?;
        let upper = ivs.iter().map(|i| i.upper).reduce(tighter_upper)?;
        // an empty intersection keeps the generic representation
        return SetDescriptor::interval(lower, upper).ok();
    }
    let orthants = children
        .iter()
        .all(|c| matches!(&*c.resolved().node, SetNode::OrthantCone(_)));
    if orthants {
        return Some(children[0].resolved().clone());
    }
    None
}

fn sum_bound(a: Bound, b: Bound) -> Bound {
    match (a, b) {
        (Bound::Unbounded, _) | (_, Bound::Unbounded) => Bound::Unbounded,
        (Bound::Closed(x), Bound::Closed(y)) => Bound::Closed(x + y),
        (x, y) => Bound::Open(x.value().unwrap() + y.value().unwrap()),
    }
}

fn sum_closed_form(left: &SetDescriptor, right: &SetDescriptor) -> Option<SetDescriptor> {
    if let (Some(a), Some(b)) = (interval_of(left), interval_of(right)) {
        return SetDescriptor::interval(sum_bound(a.lower, b.lower), sum_bound(a.upper, b.upper)).ok();
    }
    if let (Some(a), Some(b)) = (ball_of(left), ball_of(right)) {
        if a.q == b.q {
            let center = a.center.iter().zip(&b.center).map(|(u, v)| u + v).collect();
            let boundary = if a.boundary == Boundary::Closed && b.boundary == Boundary::Closed {
                Boundary::Closed
            } else {
                Boundary::Open
            };
            return SetDescriptor::ball(a.q, center, a.radius + b.radius, boundary).ok();
        }
    }
    if let (Some(a), Some(b)) = (cloud_of(left), cloud_of(right)) {
        let pts = a
            .iter()
            .flat_map(|u| b.iter().map(move |v| u.iter().zip(v).map(|(s, t)| s + t).collect()))
            .collect();
        return SetDescriptor::point_cloud(pts).ok();
    }
    None
}

fn scale_closed_form(nu: f64, child: &SetDescriptor) -> Option<SetDescriptor> {
    let origin = || SetDescriptor::point_cloud(vec![vec![0.0; child.dim]]).ok();
    if let Some(iv) = interval_of(child) {
        if nu == 0.0 {
            return origin();
        }
        let (lo, hi) = (iv.lower.map(|v| nu * v), iv.upper.map(|v| nu * v));
        return if nu > 0.0 {
            SetDescriptor::interval(lo, hi).ok()
        } else {
            SetDescriptor::interval(hi, lo).ok()
        };
    }
    if let Some(b) = ball_of(child) {
        if nu == 0.0 {
            return origin();
        }
        let center = b.center.iter().map(|c| nu * c).collect();
        return SetDescriptor::ball(b.q, center, nu.abs() * b.radius, b.boundary).ok();
    }
    if let Some(pts) = cloud_of(child) {
        return SetDescriptor::point_cloud(pts.iter().map(|p| p.iter().map(|v| nu * v).collect()).collect()).ok();
    }
    if let SetNode::OrthantCone(n) = &*child.resolved().node {
        if nu > 0.0 {
            return SetDescriptor::orthant_cone(*n).ok();
        }
        if nu == 0.0 {
            return origin();
        }
    }
    None
}

fn tube_closed_form(child: &SetDescriptor, delta: f64, q: QNorm) -> Option<SetDescriptor> {
    if let Some(iv) = interval_of(child) {
        return SetDescriptor::interval(
            iv.lower.map(|v| v - delta).open(),
            iv.upper.map(|v| v + delta).open(),
        )
        .ok();
    }
    if let Some(b) = ball_of(child) {
        if b.q == q || child.dim == 1 {
            return SetDescriptor::ball(b.q, b.center, b.radius + delta, Boundary::Open).ok();
        }
    }
    if let Some(pts) = cloud_of(child) {
        if pts.len() == 1 {
            return SetDescriptor::ball(q, pts[0].clone(), delta, Boundary::Open).ok();
        }
    }
    None
}

/// Whether `x` is a member and every probe point in the Euclidean ball of
/// radius `probe_radius` around it is a member as well.
///
/// Probes are the `2n` axis points on the probe sphere first, then seeded
/// random points inside the ball, `probe_count` in total. A `true` answer is
/// evidence of interiority at that scale, not a proof.
pub fn is_interior_point(set: &SetDescriptor, x: &[f64], probe_radius: f64, probe_count: usize) -> Result<bool> {
    if !(probe_radius > 0.0) || probe_count == 0 {
        return Err(Error::InvalidParameter("probe radius must be > 0 and probe count >= 1".into()));
    }
    if !set.contains(x)? {
        return Ok(false);
    }
    Ok(probe_points(x, probe_radius, probe_count).all(|p| set.member(&p, 0.0)))
}

pub(crate) fn probe_points(x: &[f64], radius: f64, count: usize) -> impl Iterator<Item = Vec<f64>> + '_ {
    let n = x.len();
    let mut rng = ChaCha8Rng::seed_from_u64(INTERNAL_SEED ^ 0x9e0be);
    (0..count).map(move |k| {
        if k < 2 * n {
            let mut p = x.to_vec();
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            p[k / 2] += sign * radius;
            p
        } else {
            // uniform direction, radius scaled by U^(1/n)
            loop {
                let d: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
                let norm = q_norm(&d, QNorm::L2);
                if norm > 1e-3 && norm <= 1.0 {
                    let r = radius * rng.gen::<f64>().powf(1.0 / n as f64) / norm;
                    break x.iter().zip(&d).map(|(a, b)| a + r * b).collect();
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ball2(center: Vec<f64>, r: f64, b: Boundary) -> SetDescriptor {
        SetDescriptor::ball(QNorm::L2, center, r, b).unwrap()
    }

    #[test]
    fn q_norm_examples() {
        assert_eq!(q_norm(&[3.0, 4.0], QNorm::L2), 5.0);
        assert_eq!(q_norm(&[3.0, 4.0], QNorm::INF), 4.0);
        assert_eq!(q_norm(&[1.0, 1.0, 1.0], QNorm::L1), 3.0);
        assert!((q_norm(&[3.0, 4.0], QNorm::new(3.0).unwrap()) - 91f64.cbrt()).abs() < 1e-12);
        assert!(QNorm::new(0.5).is_err());
    }

    #[test]
    fn qnorm_serde() {
        let q: QNorm = serde_json::from_str("\"inf\"").unwrap();
        assert!(q.is_inf());
        assert_eq!(serde_json::to_string(&QNorm::L2).unwrap(), "2.0");
        assert!(serde_json::from_str::<QNorm>("0.5").is_err());
    }

    #[test]
    fn contains_examples() {
        let iv = SetDescriptor::closed_interval(-1.0, 2.0).unwrap();
        assert!(iv.contains(&[0.0]).unwrap());
        let b = ball2(vec![1.0, 0.0], 0.5, Boundary::Open);
        assert!(b.contains(&[0.75, 0.0]).unwrap());
        assert!(!b.contains(&[0.5, 0.0]).unwrap());
        let s = SetDescriptor::scale(2.0, SetDescriptor::closed_interval(0.0, 1.0).unwrap()).unwrap();
        assert!(s.contains(&[1.5]).unwrap());
        assert!(matches!(b.contains(&[1.0]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn interval_shapes_respect_boundaries() {
        for shape in IntervalShape::ALL {
            let s = SetDescriptor::interval_shape(shape, -1.0, 2.0).unwrap();
            let (lo, hi) = shape.bounds(-1.0, 2.0);
            assert_eq!(s.contains(&[-1.0]).unwrap(), matches!(lo, Bound::Closed(_) | Bound::Unbounded));
            assert_eq!(s.contains(&[2.0]).unwrap(), matches!(hi, Bound::Closed(_) | Bound::Unbounded));
            assert!(s.contains(&[0.0]).unwrap());
            assert!(!s.bounding_box().is_empty());
        }
        assert!(SetDescriptor::closed_interval(2.0, 1.0).is_err());
    }

    #[test]
    fn distance_examples() {
        let b = ball2(vec![1.0, 0.0], 0.5, Boundary::Closed);
        let d = b.distance_q(&[0.0, 0.0], QNorm::L2).unwrap();
        assert_eq!(d, Distance { value: 0.5, exact: true });
        let iv = SetDescriptor::closed_interval(2.0, 3.0).unwrap();
        assert_eq!(iv.distance_q(&[0.0], QNorm::L2).unwrap().value, 2.0);
        let pc = SetDescriptor::point_cloud(vec![vec![0.0, 0.0], vec![1.0, 1.0]]).unwrap();
        assert_eq!(pc.distance_q(&[1.0, 0.0], QNorm::L1).unwrap().value, 1.0);
        let orth = SetDescriptor::orthant_cone(2).unwrap();
        assert_eq!(orth.distance_q(&[-3.0, -4.0], QNorm::L2).unwrap().value, 5.0);
    }

    #[test]
    fn estimated_distance_is_upper_bound() {
        let disk = ball2(vec![0.0, 0.0], 1.0, Boundary::Closed);
        let box_ = SetDescriptor::oracle("square", BoundingBox::new(vec![-1.0, -1.0], vec![1.0, 1.0]), |x| {
            x[0].abs() <= 1.0 && x[1].abs() <= 1.0
        })
        .unwrap();
        let k = SetDescriptor::intersection(vec![disk, box_]).unwrap();
        let d = k.distance_q(&[2.0, 0.0], QNorm::L2).unwrap();
        assert!(!d.exact);
        assert!(d.value >= 1.0 - 1e-12 && d.value < 1.05);
    }

    #[test]
    fn tube_examples() {
        let origin = SetDescriptor::point_cloud(vec![vec![0.0]]).unwrap();
        let t = SetDescriptor::tube(origin, 1.0, QNorm::L2).unwrap();
        assert!(t.contains(&[0.5]).unwrap());
        assert!(!t.contains(&[1.0]).unwrap());
        let iv = SetDescriptor::closed_interval(0.0, 1.0).unwrap();
        let t = SetDescriptor::tube(iv, 0.5, QNorm::L2).unwrap();
        assert!(t.contains(&[1.4]).unwrap());
        assert!(!t.contains(&[1.6]).unwrap());
        let b = ball2(vec![0.0, 0.0], 1.0, Boundary::Closed);
        let t = SetDescriptor::tube(b, 0.5, QNorm::L2).unwrap();
        assert!(t.contains(&[1.4, 0.0]).unwrap());
        assert!(SetDescriptor::tube(ball2(vec![0.0], 1.0, Boundary::Open), 0.0, QNorm::L2).is_err());
    }

    #[test]
    fn tube_without_closed_form_uses_distance() {
        let pc = SetDescriptor::point_cloud(vec![vec![0.0, 0.0], vec![3.0, 0.0]]).unwrap();
        let t = SetDescriptor::tube(pc.clone(), 1.0, QNorm::L1).unwrap();
        assert!(t.closed_form().is_none());
        assert!(t.contains(&[2.5, 0.4]).unwrap());
        assert!(!t.contains(&[1.5, 0.0]).unwrap());
        for x in [[0.3, 0.3], [0.6, 0.5], [2.2, 0.1], [1.0, 1.0]] {
            let d = pc.distance_q(&x, QNorm::L1).unwrap().value;
            assert_eq!(t.contains(&x).unwrap(), d < 1.0);
        }
    }

    #[test]
    fn minkowski_sums() {
        let a = SetDescriptor::closed_interval(-1.0, 0.5).unwrap();
        let b = SetDescriptor::interval(Bound::Open(0.0), Bound::Closed(1.0)).unwrap();
        let s = SetDescriptor::minkowski_sum(a, b).unwrap();
        assert!(s.closed_form().is_some());
        assert!(!s.contains(&[-1.0]).unwrap());
        assert!(s.contains(&[1.5]).unwrap());

        let cloud = SetDescriptor::point_cloud(vec![vec![0.0, 0.0], vec![5.0, 0.0]]).unwrap();
        let disk = ball2(vec![0.0, 0.0], 1.0, Boundary::Open);
        let s = SetDescriptor::minkowski_sum(cloud, disk.clone()).unwrap();
        let m = s.decide_sum_membership(&[5.5, 0.0]).unwrap();
        assert!(m.member && m.exact);
        assert!(!s.contains(&[3.0, 0.0]).unwrap());

        let square = SetDescriptor::oracle("square", BoundingBox::new(vec![-1.0, -1.0], vec![1.0, 1.0]), |x| {
            x[0].abs() <= 1.0 && x[1].abs() <= 1.0
        })
        .unwrap();
        let s = SetDescriptor::minkowski_sum(square, disk).unwrap();
        let m = s.decide_sum_membership(&[1.5, 0.0]).unwrap();
        assert!(m.member);
        assert!(!m.exact);
        let (l, r) = m.witness.unwrap();
        assert!((l[0] + r[0] - 1.5).abs() < 1e-12);
        assert!(!s.contains(&[2.5, 0.0]).unwrap());
    }

    #[test]
    fn scale_of_cone_and_zero() {
        let c = SetDescriptor::scale(3.0, SetDescriptor::orthant_cone(2).unwrap()).unwrap();
        assert!(c.contains(&[1.0, 7.0]).unwrap());
        let z = SetDescriptor::scale(0.0, SetDescriptor::closed_interval(1.0, 2.0).unwrap()).unwrap();
        assert!(z.contains(&[0.0]).unwrap());
        assert!(!z.contains(&[1.0]).unwrap());
        let neg = SetDescriptor::scale(-2.0, SetDescriptor::closed_interval(0.0, 1.0).unwrap()).unwrap();
        assert!(neg.contains(&[-2.0]).unwrap());
        assert!(!neg.contains(&[1.0]).unwrap());
    }

    #[test]
    fn intersection_membership_is_conjunction() {
        let a = ball2(vec![0.0, 0.0], 1.0, Boundary::Closed);
        let b = ball2(vec![1.0, 0.0], 1.0, Boundary::Open);
        let k = SetDescriptor::intersection(vec![a.clone(), b.clone()]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..500 {
            let x = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
            assert_eq!(k.contains(&x).unwrap(), a.contains(&x).unwrap() && b.contains(&x).unwrap());
        }
    }

    #[test]
    fn interior_probe_examples() {
        let iv = SetDescriptor::closed_interval(0.0, 1.0).unwrap();
        assert!(is_interior_point(&iv, &[0.5], 1e-3, 16).unwrap());
        assert!(!is_interior_point(&iv, &[1.0], 1e-3, 16).unwrap());
        let b = ball2(vec![0.0, 0.0], 1.0, Boundary::Open);
        assert!(!is_interior_point(&b, &[0.999, 0.0], 1e-2, 16).unwrap());
        assert!(!b.contains(&[1.004, 0.0]).unwrap());
        assert!(is_interior_point(&b, &[0.5, 0.0], 1e-2, 64).unwrap());
    }

    #[test]
    fn tube_matches_distance_on_grid() {
        let prims = vec![
            SetDescriptor::closed_interval(-1.0, 0.5).unwrap(),
            SetDescriptor::point_cloud(vec![vec![0.2], vec![1.3]]).unwrap(),
            ball2(vec![0.4], 0.3, Boundary::Open),
        ];
        for k in prims {
            let t = SetDescriptor::tube(k.clone(), 0.25, QNorm::L2).unwrap();
            for i in 0..=400 {
                let x = [-2.0 + 4.0 * i as f64 / 400.0];
                let d = k.distance_q(&x, QNorm::L2).unwrap().value;
                assert_eq!(t.contains(&x).unwrap(), d < 0.25, "x={x:?}");
            }
        }
    }
}
