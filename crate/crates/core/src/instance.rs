//! JSON instance files (schema version 1).
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "sets": {
//!     "K": { "kind": "interval", "shape": "[a,b]", "a": 0, "b": 2 },
//!     "B": { "kind": "ball", "q": 2, "center": [1, 0], "radius": 0.5, "boundary": "open" }
//!   },
//!   "functions": {
//!     "sq": { "catalog": { "name": "square_shift" }, "domain": "K" },
//!     "h":  { "expr": "(x - 1 + abs(x - 1)) / 2", "domain": "K" }
//!   },
//!   "problems": {
//!     "P": { "objectives": ["h", "sq"], "grid": { "axes": [{ "lo": 0, "hi": 2, "count": 201 }] }, "p": 0.5 }
//!   },
//!   "checks": [
//!     { "name": "sq-not-half-convex", "kind": "falsify_fn", "function": "sq", "p": 0.5, "expect": "falsified" }
//!   ]
//! }
//! ```
//!
//! Set references are either a name from `sets` or an inline set object.
//! Set kinds: `interval`, `ball`, `point_cloud`, `orthant_cone`,
//! `intersection`, `minkowski_sum`, `scale`, `tube`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::de::{self, MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};
use sha2::{Digest, Sha256};

use crate::certify::SearchBudget;
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::pcore::PExponent;
use crate::pfuncs::{CatalogEntry, ScalarFn, VectorFn};
use crate::psets::{Boundary, IntervalShape, QNorm, SetDescriptor};
use crate::weff::{GridSpec, DEFAULT_EW_TOL};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub schema_version: u32,
    #[serde(default)]
    pub description: Option<String>,
    #[serde(default)]
    pub sets: BTreeMap<String, SetSpec>,
    #[serde(default)]
    pub functions: BTreeMap<String, FunctionSpec>,
    #[serde(default)]
    pub problems: BTreeMap<String, ProblemSpec>,
    #[serde(default)]
    pub checks: Vec<CheckSpec>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SetSpec {
    Interval {
        shape: IntervalShape,
        #[serde(default)]
        a: Option<f64>,
        #[serde(default)]
        b: Option<f64>,
    },
    Ball {
        #[serde(default = "default_q")]
        q: QNorm,
        center: Vec<f64>,
        radius: f64,
        #[serde(default = "default_boundary")]
        boundary: Boundary,
    },
    PointCloud {
        points: Vec<Vec<f64>>,
    },
    OrthantCone {
        dim: usize,
    },
    Intersection {
        of: Vec<SetRef>,
    },
    MinkowskiSum {
        left: SetRef,
        right: SetRef,
    },
    Scale {
        nu: f64,
        of: SetRef,
    },
    Tube {
        of: SetRef,
        delta: f64,
        #[serde(default = "default_q")]
        q: QNorm,
    },
}

fn default_q() -> QNorm {
    QNorm::L2
}

fn default_boundary() -> Boundary {
    Boundary::Closed
}

/// A set name or an inline set definition.
#[derive(Debug, Clone)]
pub enum SetRef {
    Name(String),
    Inline(Box<SetSpec>),
}

impl<'de> Deserialize<'de> for SetRef {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = SetRef;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a set name or an inline set object")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<SetRef, E> {
                Ok(SetRef::Name(v.to_string()))
            }
            fn visit_map<A: MapAccess<'de>>(self, map: A) -> std::result::Result<SetRef, A::Error> {
                SetSpec::deserialize(de::value::MapAccessDeserializer::new(map)).map(|s| SetRef::Inline(Box::new(s)))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionSpec {
    #[serde(default)]
    pub catalog: Option<CatalogEntry>,
    #[serde(default)]
    pub expr: Option<String>,
    pub domain: SetRef,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub objectives: Vec<String>,
    pub grid: GridSpec,
    #[serde(default)]
    pub p: Option<PExponent>,
    #[serde(default = "default_ew_tol")]
    pub tol: f64,
}

fn default_ew_tol() -> f64 {
    DEFAULT_EW_TOL
}

/// What a check is expected to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expect {
    /// No counterexample, every consequence line holds.
    #[default]
    Pass,
    /// A counterexample should be found.
    Falsified,
}

#[derive(Debug, Clone, Deserialize)]
pub struct CheckSpec {
    pub name: String,
    #[serde(flatten)]
    pub kind: CheckKind,
    #[serde(default)]
    pub expect: Expect,
    #[serde(default)]
    pub budget: Option<SearchBudget>,
    /// Overrides the run seed for this check.
    #[serde(default)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CheckKind {
    FalsifySet {
        set: String,
        p: PExponent,
    },
    FalsifyFn {
        function: String,
        p: PExponent,
    },
    BallCounterexample {
        center: Vec<f64>,
        delta: f64,
        #[serde(default = "default_q")]
        q: QNorm,
        p: PExponent,
        #[serde(default = "one")]
        beta: f64,
        epsilon: f64,
    },
    ConeEquivalence {
        set: String,
        p: PExponent,
    },
    Downgrade {
        set: String,
        p: PExponent,
        p1: PExponent,
    },
    SegmentInterior {
        set: String,
        p: PExponent,
        x: Vec<f64>,
        y: Vec<f64>,
        probe_radius: f64,
        #[serde(default = "default_segment_samples")]
        samples: usize,
    },
    Closure {
        set: String,
        p: PExponent,
    },
    Interior {
        set: String,
        p: PExponent,
        probe_radius: f64,
    },
    Consequences {
        function: String,
        p: PExponent,
    },
    HomogeneousConvexity {
        function: String,
        p: PExponent,
    },
    GFunction {
        p: PExponent,
    },
    RmPConvex {
        problem: String,
    },
    WeakEfficiency {
        problem: String,
    },
}

fn one() -> f64 {
    1.0
}

fn default_segment_samples() -> usize {
    200
}

impl CheckKind {
    pub fn label(&self) -> &'static str {
        match self {
            CheckKind::FalsifySet { .. } => "falsify_set",
            CheckKind::FalsifyFn { .. } => "falsify_fn",
            CheckKind::BallCounterexample { .. } => "ball_counterexample",
            CheckKind::ConeEquivalence { .. } => "cone_equivalence",
            CheckKind::Downgrade { .. } => "downgrade",
            CheckKind::SegmentInterior { .. } => "segment_interior",
            CheckKind::Closure { .. } => "closure",
            CheckKind::Interior { .. } => "interior",
            CheckKind::Consequences { .. } => "consequences",
            CheckKind::HomogeneousConvexity { .. } => "homogeneous_convexity",
            CheckKind::GFunction { .. } => "g_function",
            CheckKind::RmPConvex { .. } => "rm_p_convex",
            CheckKind::WeakEfficiency { .. } => "weak_efficiency",
        }
    }
}

/// A resolved problem.
#[derive(Debug, Clone)]
pub struct Problem {
    pub objectives: VectorFn,
    pub grid: GridSpec,
    pub p: Option<PExponent>,
    pub tol: f64,
}

/// A parsed and fully resolved instance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub description: Option<String>,
    pub sets: BTreeMap<String, SetDescriptor>,
    pub functions: BTreeMap<String, ScalarFn>,
    pub problems: BTreeMap<String, Problem>,
    pub checks: Vec<CheckSpec>,
    /// Hex SHA-256 of the source bytes.
    pub digest: String,
}

fn err(path: impl Into<String>, message: impl fmt::Display) -> Error {
    Error::Instance {
        path: path.into(),
        message: message.to_string(),
    }
}

struct Resolver<'a> {
    specs: &'a BTreeMap<String, SetSpec>,
    done: BTreeMap<String, SetDescriptor>,
    active: Vec<String>,
}

impl Resolver<'_> {
    fn named(&mut self, name: &str, path: &str) -> Result<SetDescriptor> {
        if let Some(s) = self.done.get(name) {
            return Ok(s.clone());
        }
        if self.active.iter().any(|a| a == name) {
            return Err(err(path, format!("set {name:?} refers to itself")));
        }
        let spec = self
            .specs
            .get(name)
            .ok_or_else(|| err(path, format!("unknown set {name:?}")))?;
        self.active.push(name.to_string());
        let s = self.build(spec, &format!("sets.{name}"))?;
        self.active.pop();
        self.done.insert(name.to_string(), s.clone());
        Ok(s)
    }

    fn reference(&mut self, r: &SetRef, path: &str) -> Result<SetDescriptor> {
        match r {
            SetRef::Name(n) => self.named(n, path),
            SetRef::Inline(spec) => self.build(spec, path),
        }
    }

    fn build(&mut self, spec: &SetSpec, path: &str) -> Result<SetDescriptor> {
        let wrap = |e: Error| err(path, e);
        match spec {
            SetSpec::Interval { shape, a, b } => {
                let (lo, hi) = shape.bounds(a.unwrap_or(f64::NAN), b.unwrap_or(f64::NAN));
                let needs = |bound: crate::psets::Bound, field: &str| match bound {
                    crate::psets::Bound::Open(v) | crate::psets::Bound::Closed(v) if v.is_nan() => {
                        Err(err(path, format!("shape {shape:?} needs field {field:?}")))
                    }
                    _ => Ok(()),
                };
                needs(lo, "a")?;
                needs(hi, "b")?;
                SetDescriptor::interval(lo, hi).map_err(wrap)
            }
            SetSpec::Ball {
                q,
                center,
                radius,
                boundary,
            } => SetDescriptor::ball(*q, center.clone(), *radius, *boundary).map_err(wrap),
            SetSpec::PointCloud { points } => SetDescriptor::point_cloud(points.clone()).map_err(wrap),
            SetSpec::OrthantCone { dim } => SetDescriptor::orthant_cone(*dim).map_err(wrap),
            SetSpec::Intersection { of } => {
                let children = of
                    .iter()
                    .enumerate()
                    .map(|(i, r)| self.reference(r, &format!("{path}.of[{i}]")))
                    .collect::<Result<Vec<_>>>()?;
                SetDescriptor::intersection(children).map_err(wrap)
            }
            SetSpec::MinkowskiSum { left, right } => {
                let l = self.reference(left, &format!("{path}.left"))?;
                let r = self.reference(right, &format!("{path}.right"))?;
                SetDescriptor::minkowski_sum(l, r).map_err(wrap)
            }
            SetSpec::Scale { nu, of } => {
                let c = self.reference(of, &format!("{path}.of"))?;
                SetDescriptor::scale(*nu, c).map_err(wrap)
            }
            SetSpec::Tube { of, delta, q } => {
                let c = self.reference(of, &format!("{path}.of"))?;
                SetDescriptor::tube(c, *delta, *q).map_err(wrap)
            }
        }
    }
}

impl Instance {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| err(path.display().to_string(), e))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let digest = hex::encode(Sha256::digest(text.as_bytes()));
        let de = &mut serde_json::Deserializer::from_str(text);
        let file: InstanceFile = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            err(if path == "." { "<root>".to_string() } else { path }, e.into_inner())
        })?;
        Self::resolve(file, digest)
    }

    fn resolve(file: InstanceFile, digest: String) -> Result<Self> {
        if file.schema_version != SCHEMA_VERSION {
            return Err(err(
                "schema_version",
                format!("unsupported schema version {} (expected {SCHEMA_VERSION})", file.schema_version),
            ));
        }
        let mut r = Resolver {
            specs: &file.sets,
            done: BTreeMap::new(),
            active: Vec::new(),
        };
        for name in file.sets.keys() {
            r.named(name, &format!("sets.{name}"))?;
        }

        let mut functions = BTreeMap::new();
        for (name, spec) in &file.functions {
            let path = format!("functions.{name}");
            let domain = r.reference(&spec.domain, &format!("{path}.domain"))?;
            let f = match (&spec.catalog, &spec.expr) {
                (Some(c), None) => {
                    if matches!(c, CatalogEntry::SqrtMinusTwo | CatalogEntry::SquareShift | CatalogEntry::NegHalfQuad)
                        && domain.ambient_dim() != 1
                    {
                        return Err(err(format!("{path}.domain"), format!("{c} needs a one-dimensional domain")));
                    }
                    ScalarFn::from_catalog(*c, domain)
                }
                (None, Some(src)) => {
                    let e = Expr::parse(src).map_err(|e| err(format!("{path}.expr"), e))?;
                    ScalarFn::from_expr(&e, domain).map_err(|e| err(format!("{path}.expr"), e))?
                }
                _ => return Err(err(path, "exactly one of \"catalog\" or \"expr\" is required")),
            };
            functions.insert(name.clone(), f);
        }

        let mut problems = BTreeMap::new();
        for (name, spec) in &file.problems {
            let path = format!("problems.{name}");
            if spec.objectives.is_empty() {
                return Err(err(format!("{path}.objectives"), "at least one objective is required"));
            }
            let comps = spec
                .objectives
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    functions
                        .get(f)
                        .cloned()
                        .ok_or_else(|| err(format!("{path}.objectives[{i}]"), format!("unknown function {f:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            let dim = comps[0].domain().ambient_dim();
            if let Some(i) = comps.iter().position(|c| c.domain().ambient_dim() != dim) {
                return Err(err(format!("{path}.objectives[{i}]"), "objective domains differ in dimension"));
            }
            if spec.grid.dim() != dim {
                return Err(err(
                    format!("{path}.grid"),
                    format!("grid has {} axes, domain has dimension {dim}", spec.grid.dim()),
                ));
            }
            if !(spec.tol >= 0.0) {
                return Err(err(format!("{path}.tol"), "tolerance must be >= 0"));
            }
            let objectives = VectorFn::new(comps).map_err(|e| err(&path, e))?;
            problems.insert(
                name.clone(),
                Problem {
                    objectives,
                    grid: spec.grid.clone(),
                    p: spec.p,
                    tol: spec.tol,
                },
            );
        }

        let sets = r.done;
        let mut seen = std::collections::BTreeSet::new();
        for (i, c) in file.checks.iter().enumerate() {
            let path = format!("checks[{i}]");
            if !seen.insert(c.name.as_str()) {
                return Err(err(format!("{path}.name"), format!("duplicate check name {:?}", c.name)));
            }
            let need_set = |n: &String| {
                sets.contains_key(n)
                    .then_some(())
                    .ok_or_else(|| err(format!("{path}.set"), format!("unknown set {n:?}")))
            };
            let need_fn = |n: &String| {
                functions
                    .contains_key(n)
                    .then_some(())
                    .ok_or_else(|| err(format!("{path}.function"), format!("unknown function {n:?}")))
            };
            let need_problem = |n: &String| {
                problems
                    .contains_key(n)
                    .then_some(())
                    .ok_or_else(|| err(format!("{path}.problem"), format!("unknown problem {n:?}")))
            };
            match &c.kind {
                CheckKind::FalsifySet { set, .. }
                | CheckKind::ConeEquivalence { set, .. }
                | CheckKind::Downgrade { set, .. }
                | CheckKind::SegmentInterior { set, .. }
                | CheckKind::Closure { set, .. }
                | CheckKind::Interior { set, .. } => need_set(set)?,
                CheckKind::FalsifyFn { function, .. }
                | CheckKind::Consequences { function, .. }
                | CheckKind::HomogeneousConvexity { function, .. } => need_fn(function)?,
                CheckKind::WeakEfficiency { problem } => need_problem(problem)?,
                CheckKind::RmPConvex { problem } => {
                    need_problem(problem)?;
                    if problems[problem].p.is_none() {
                        return Err(err(format!("{path}.problem"), format!("problem {problem:?} has no exponent p")));
                    }
                }
                CheckKind::BallCounterexample { .. } | CheckKind::GFunction { .. } => {}
            }
        }

        Ok(Self {
            description: file.description,
            sets,
            functions,
            problems,
            checks: file.checks,
            digest,
        })
    }
}
