//! Weak efficiency of vector objectives on finite grids.
//!
//! A grid point `xbar` is weakly efficient when no other grid point improves
//! every objective strictly, i.e. there is no `x` with
//! `f_i(x) < f_i(xbar) - tol` for all `i`. Objective values are tabulated once
//! per grid point; the dominance scan visits candidate dominators in
//! ascending order of their objective sum and stops as soon as the sum is too
//! large for strict dominance.
//!
//! The structural checks assume `F >= 0` on the grid and componentwise
//! p-convexity with `0 < p < 1`. When a hypothesis fails the dependent lines
//! are reported as not applicable rather than failed.

use serde::{Deserialize, Serialize};

use crate::certify::{falsify_fn_pconvexity, falsify_set_pconvexity, SearchBudget, Verdict};
use crate::error::{Error, Result};
use crate::pcore::{conjugate_coefficient, lambda_grid, PExponent, SegmentKind};
use crate::pfuncs::VectorFn;
use crate::psets::{BoundingBox, SetDescriptor};
use crate::report::CheckLine;

/// Largest admissible grid.
pub const MAX_GRID_POINTS: usize = 1_000_000;

/// Default absolute tolerance on objective values.
pub const DEFAULT_EW_TOL: f64 = 1e-12;

pub const UNION_INCLUSION: &str = "argmin_union_in_ew";
pub const INTERSECTION_EQUALITY: &str = "ew_equals_argmin_union";
pub const HYPOTHESIS_NONNEGATIVE: &str = "hypothesis_nonnegative";
pub const HYPOTHESIS_RM_P_CONVEX: &str = "hypothesis_rm_p_convex";
pub const ZERO_IN_EW: &str = "zero_in_ew";
pub const SCALING_CLOSURE: &str = "scaling_closure";
pub const INTERVAL_FILL: &str = "interval_fill";
pub const EW_P_CONVEX: &str = "ew_p_convex";
pub const EW_NEGATIVE_CONTROL: &str = "ew_negative_control";

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

/// A row-major rectangular grid (last axis varies fastest).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawGrid", into = "RawGrid")]
pub struct GridSpec {
    axes: Vec<Axis>,
    len: usize,
}

#[derive(Serialize, Deserialize)]
struct RawGrid {
    axes: Vec<Axis>,
}

impl TryFrom<RawGrid> for GridSpec {
    type Error = Error;
    fn try_from(raw: RawGrid) -> Result<Self> {
        GridSpec::new(raw.axes)
    }
}

impl From<GridSpec> for RawGrid {
    fn from(g: GridSpec) -> Self {
        RawGrid { axes: g.axes }
    }
}

impl GridSpec {
    pub fn new(axes: Vec<Axis>) -> Result<Self> {
        if axes.is_empty() {
            return Err(Error::InvalidParameter("grid needs at least one axis".into()));
        }
        let mut len: usize = 1;
        for (i, a) in axes.iter().enumerate() {
            if a.count < 2 {
                return Err(Error::InvalidParameter(format!("axis {i}: count must be >= 2, got {}", a.count)));
            }
            if !(a.lo.is_finite() && a.hi.is_finite() && a.lo < a.hi) {
                return Err(Error::InvalidParameter(format!("axis {i}: need finite lo < hi, got [{}, {}]", a.lo, a.hi)));
            }
            len = len.checked_mul(a.count).filter(|&l| l <= MAX_GRID_POINTS).ok_or(Error::GridTooLarge(
                axes.iter().map(|a| a.count as f64).product::<f64>() as usize,
            ))?;
        }
        Ok(Self { axes, len })
    }

    pub fn uniform(lo: f64, hi: f64, count: usize) -> Result<Self> {
        Self::new(vec![Axis { lo, hi, count }])
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn step(&self, axis: usize) -> f64 {
        let a = &self.axes[axis];
        (a.hi - a.lo) / (a.count - 1) as f64
    }

    fn coord(a: &Axis, k: usize) -> f64 {
        if k + 1 == a.count {
            a.hi
        } else {
            a.lo + (a.hi - a.lo) * k as f64 / (a.count - 1) as f64
        }
    }

    pub fn multi_index(&self, idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.dim()];
        let mut r = idx;
        for (d, a) in self.axes.iter().enumerate().rev() {
            out[d] = r % a.count;
            r /= a.count;
        }
        out
    }

    pub fn linear_index(&self, ks: &[usize]) -> usize {
        ks.iter().zip(&self.axes).fold(0, |acc, (&k, a)| acc * a.count + k)
    }

    pub fn point(&self, idx: usize) -> Vec<f64> {
        self.multi_index(idx)
            .iter()
            .zip(&self.axes)
            .map(|(&k, a)| Self::coord(a, k))
            .collect()
    }

    /// Nearest grid point when `x` lies within half a step of the grid range
    /// on every axis.
    pub fn snap(&self, x: &[f64]) -> Option<usize> {
        if x.len() != self.dim() {
            return None;
        }
        let mut ks = Vec::with_capacity(x.len());
        for (d, (&v, a)) in x.iter().zip(&self.axes).enumerate() {
            let t = ((v - a.lo) / self.step(d)).round();
            if !(t >= 0.0 && t <= (a.count - 1) as f64) {
                return None;
            }
            ks.push(t as usize);
        }
        Some(self.linear_index(&ks))
    }

    pub fn bounding_box(&self) -> BoundingBox {
        BoundingBox::new(
            self.axes.iter().map(|a| a.lo).collect(),
            self.axes.iter().map(|a| a.hi).collect(),
        )
    }
}

/// `a` strictly dominates `b`: `a_i < b_i - tol` in every coordinate.
#[inline]
pub fn strictly_dominates(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.iter().zip(b).all(|(x, y)| *x < *y - tol)
}

/// Weakly efficient points, argmin sets and structural checks of one
/// problem on one grid. Index lists refer to grid indices and are sorted.
#[derive(Debug, Clone, Serialize)]
pub struct EfficiencyReport {
    pub grid: GridSpec,
    pub tol: f64,
    /// Grid indices inside the domain, ascending.
    pub in_domain: Vec<usize>,
    /// Grid points outside the domain.
    pub excluded: usize,
    /// Objective values, parallel to `in_domain`.
    pub values: Vec<Vec<f64>>,
    pub weakly_efficient: Vec<usize>,
    pub argmins: Vec<Vec<usize>>,
    pub structural_checks: Vec<CheckLine>,
    #[serde(skip)]
    ew_mask: Vec<bool>,
}

impl EfficiencyReport {
    pub fn objectives(&self) -> usize {
        self.argmins.len()
    }

    pub fn is_weakly_efficient(&self, grid_index: usize) -> bool {
        self.ew_mask.get(grid_index).copied().unwrap_or(false)
    }

    /// Objective values at a grid index, if it is in the domain.
    pub fn values_at(&self, grid_index: usize) -> Option<&[f64]> {
        self.in_domain
            .binary_search(&grid_index)
            .ok()
            .map(|pos| self.values[pos].as_slice())
    }

    pub fn weakly_efficient_points(&self) -> Vec<Vec<f64>> {
        self.weakly_efficient.iter().map(|&i| self.grid.point(i)).collect()
    }

    pub fn check(&self, name: &str) -> Option<&CheckLine> {
        self.structural_checks.iter().find(|l| l.name == name)
    }

    fn min_value(&self) -> f64 {
        self.values
            .iter()
            .flat_map(|v| v.iter().copied())
            .fold(f64::INFINITY, f64::min)
    }
}

fn tabulate(f: &VectorFn, grid: &GridSpec) -> Result<(Vec<usize>, Vec<Vec<f64>>)> {
    if f.domain().ambient_dim() != grid.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.domain().ambient_dim(),
            got: grid.dim(),
        });
    }
    let mut indices = Vec::new();
    let mut values = Vec::new();
    for idx in 0..grid.len() {
        let x = grid.point(idx);
        if !f.domain().member(&x, 0.0) {
            continue;
        }
        let v = f.values(&x);
        if let Some(k) = v.iter().position(|y| !y.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "objective {} is not finite at {x:?}",
                k + 1
            )));
        }
        indices.push(idx);
        values.push(v);
    }
    if indices.is_empty() {
        return Err(Error::EmptyGrid);
    }
    Ok((indices, values))
}

fn argmins_of(indices: &[usize], values: &[Vec<f64>], m: usize, tol: f64) -> Vec<Vec<usize>> {
    (0..m)
        .map(|k| {
            let min = values.iter().map(|v| v[k]).fold(f64::INFINITY, f64::min);
            indices
                .iter()
                .zip(values)
                .filter(|(_, v)| v[k] <= min + tol)
                .map(|(&i, _)| i)
                .collect()
        })
        .collect()
}

/// Per-objective grid argmins: points within `tol` of the grid minimum.
pub fn argmin_sets(f: &VectorFn, grid: &GridSpec, tol: f64) -> Result<Vec<Vec<usize>>> {
    let (indices, values) = tabulate(f, grid)?;
    Ok(argmins_of(&indices, &values, f.len(), tol))
}

/// Computes the weakly efficient grid points of `f`. Grid points outside the
/// domain are excluded and counted.
pub fn weakly_efficient_set(f: &VectorFn, grid: &GridSpec, tol: f64) -> Result<EfficiencyReport> {
    if !(tol >= 0.0) {
        return Err(Error::InvalidParameter(format!("tolerance must be >= 0, got {tol}")));
    }
    let (indices, values) = tabulate(f, grid)?;
    let m = f.len();
    let sums: Vec<f64> = values.iter().map(|v| v.iter().sum()).collect();
    let mut order: Vec<usize> = (0..indices.len()).collect();
    order.sort_by(|&a, &b| sums[a].total_cmp(&sums[b]).then(a.cmp(&b)));

    let mut ew_mask = vec![false; grid.len()];
    let mut weakly_efficient = Vec::new();
    for j in 0..indices.len() {
        // a strict dominator has a strictly smaller sum; the margin absorbs
        // rounding in the sums
        let bound = sums[j] + 1e-9 * (1.0 + sums[j].abs());
        let dominated = order
            .iter()
            .take_while(|&&i| sums[i] <= bound)
            .any(|&i| strictly_dominates(&values[i], &values[j], tol));
        if !dominated {
            weakly_efficient.push(indices[j]);
            ew_mask[indices[j]] = true;
        }
    }

    let argmins = argmins_of(&indices, &values, m, tol);
    if let Some(&bad) = argmins.iter().flatten().find(|&&i| !ew_mask[i]) {
        return Err(Error::Defect(format!("argmin point {bad} is not weakly efficient")));
    }
    Ok(EfficiencyReport {
        grid: grid.clone(),
        tol,
        excluded: grid.len() - indices.len(),
        in_domain: indices,
        values,
        weakly_efficient,
        argmins,
        structural_checks: Vec::new(),
        ew_mask,
    })
}

/// Every per-objective argmin is weakly efficient.
pub fn check_union_inclusion(report: &EfficiencyReport) -> CheckLine {
    match report.argmins.iter().flatten().find(|&&i| !report.is_weakly_efficient(i)) {
        None => CheckLine::pass(
            UNION_INCLUSION,
            format!(
                "{} argmin points, all among {} weakly efficient points",
                report.argmins.iter().map(Vec::len).sum::<usize>(),
                report.weakly_efficient.len()
            ),
        ),
        Some(&i) => CheckLine::fail(
            UNION_INCLUSION,
            format!("argmin grid index {i} is not weakly efficient"),
            Some(report.grid.point(i)),
        ),
    }
}

fn argmin_union(report: &EfficiencyReport) -> Vec<usize> {
    let mut u: Vec<usize> = report.argmins.iter().flatten().copied().collect();
    u.sort_unstable();
    u.dedup();
    u
}

/// When the argmins share a point, the weakly efficient set is exactly
/// their union.
pub fn check_intersection_equality(report: &EfficiencyReport) -> CheckLine {
    let common = report.argmins[0]
        .iter()
        .find(|i| report.argmins[1..].iter().all(|a| a.binary_search(i).is_ok()));
    if common.is_none() {
        return CheckLine::not_applicable(INTERSECTION_EQUALITY, "the argmin sets have no common point");
    }
    let union = argmin_union(report);
    if union == report.weakly_efficient {
        return CheckLine::pass(INTERSECTION_EQUALITY, format!("{} points", union.len()));
    }
    let extra = report
        .weakly_efficient
        .iter()
        .chain(&union)
        .find(|i| union.binary_search(i).is_err() || report.weakly_efficient.binary_search(i).is_err())
        .copied()
        .expect("sets differ");
    CheckLine::fail(
        INTERSECTION_EQUALITY,
        format!(
            "weakly efficient set ({} points) differs from the argmin union ({} points) at grid index {extra}",
            report.weakly_efficient.len(),
            union.len()
        ),
        Some(report.grid.point(extra)),
    )
}

/// Componentwise p-convexity search; a witness names the failing component.
pub fn is_rm_p_convex(f: &VectorFn, p: PExponent, budget: &SearchBudget) -> Result<Verdict> {
    let mut used = 0;
    let mut strategy = String::new();
    for (k, c) in f.components().iter().enumerate() {
        match falsify_fn_pconvexity(c, p, budget)? {
            Verdict::Falsified { mut witness } => {
                witness.component = Some(k);
                return Ok(Verdict::Falsified { witness });
            }
            Verdict::NoCounterexample {
                samples_used,
                strategy: s,
            } => {
                used += samples_used;
                strategy = s;
            }
        }
    }
    Ok(Verdict::NoCounterexample {
        samples_used: used,
        strategy: format!("{} components; per component: {strategy}", f.len()),
    })
}

/// For each weakly efficient `xbar` and `coefficient_samples` admissible
/// pairs `(lambda, mu)`, the scaled point `(lambda + mu) xbar`, snapped to the
/// grid, is weakly efficient. Points that snap outside the grid or the
/// domain are skipped and counted.
pub fn check_scaling_closure(
    report: &EfficiencyReport,
    p: PExponent,
    coefficient_samples: usize,
) -> Result<CheckLine> {
    let mut lambdas = lambda_grid(coefficient_samples.max(2), SegmentKind::Closed);
    lambdas.push(p.symmetric_coefficient());
    let factors: Vec<(f64, f64)> = lambdas
        .iter()
        .map(|&l| conjugate_coefficient(l, p).map(|mu| (l, mu)))
        .collect::<Result<_>>()?;
    let mut checked = 0usize;
    let mut skipped = 0usize;
    for &i in &report.weakly_efficient {
        let xbar = report.grid.point(i);
        for &(lambda, mu) in &factors {
            let s: Vec<f64> = xbar.iter().map(|v| (lambda + mu) * v).collect();
            let Some(j) = report.grid.snap(&s).filter(|&j| report.values_at(j).is_some()) else {
                skipped += 1;
                continue;
            };
            checked += 1;
            if !report.is_weakly_efficient(j) {
                return Ok(CheckLine::fail(
                    SCALING_CLOSURE,
                    format!("xbar = {xbar:?}, lambda = {lambda}, mu = {mu}: snapped {:?} is not weakly efficient", report.grid.point(j)),
                    Some(xbar),
                ));
            }
        }
    }
    Ok(CheckLine::pass(
        SCALING_CLOSURE,
        format!("{checked} scaled points checked, {skipped} skipped outside the grid or domain"),
    ))
}

/// The nested intervals `[g^(k+1) xbar, g^k xbar]`, `k < depth`, with
/// `g = 2^((p-1)/p)` the smallest value of `lambda + mu`.
pub fn interval_fill_cover(p: PExponent, xbar: f64, depth: usize) -> Vec<(f64, f64)> {
    let g = ((p.value() - 1.0) / p.value()).exp2();
    let mut out = Vec::with_capacity(depth);
    let mut hi = xbar;
    for _ in 0..depth {
        let lo = g * hi;
        out.push((lo.min(hi), lo.max(hi)));
        hi = lo;
    }
    out
}

/// 1-D only: every grid point in `(0, xbar]` for the largest positive
/// weakly efficient `xbar` (and in `[xbar, 0)` for the smallest negative one)
/// is weakly efficient.
pub fn check_interval_fill(report: &EfficiencyReport) -> CheckLine {
    if report.grid.dim() != 1 {
        return CheckLine::not_applicable(INTERVAL_FILL, "one-dimensional grids only");
    }
    let xs: Vec<(usize, f64)> = report
        .in_domain
        .iter()
        .map(|&i| (i, report.grid.point(i)[0]))
        .collect();
    let ew = |i: usize| report.is_weakly_efficient(i);
    let pos = xs.iter().filter(|(i, x)| ew(*i) && *x > 0.0).map(|t| t.1).fold(f64::NAN, f64::max);
    let neg = xs.iter().filter(|(i, x)| ew(*i) && *x < 0.0).map(|t| t.1).fold(f64::NAN, f64::min);
    if pos.is_nan() && neg.is_nan() {
        return CheckLine::not_applicable(INTERVAL_FILL, "no nonzero weakly efficient point");
    }
    let gap = xs.iter().find(|(i, x)| {
        let inside = (*x > 0.0 && *x <= pos) || (*x < 0.0 && *x >= neg);
        inside && !ew(*i)
    });
    let range = match (pos.is_nan(), neg.is_nan()) {
        (false, true) => format!("(0, {pos}]"),
        (true, false) => format!("[{neg}, 0)"),
        _ => format!("[{neg}, 0) and (0, {pos}]"),
    };
    match gap {
        None => CheckLine::pass(INTERVAL_FILL, format!("{range} is filled")),
        Some((_, x)) => CheckLine::fail(INTERVAL_FILL, format!("{x} in {range} is not weakly efficient"), Some(vec![*x])),
    }
}

/// Grid points `indices` as a set: `x` is a member when some listed point
/// lies within half a step of it on every axis.
pub fn ew_descriptor(grid: &GridSpec, indices: &[usize]) -> Result<SetDescriptor> {
    let mut mask = vec![false; grid.len()];
    for &i in indices {
        if i >= grid.len() {
            return Err(Error::InvalidParameter(format!("grid index {i} out of range")));
        }
        mask[i] = true;
    }
    let g = grid.clone();
    let mut bbox = grid.bounding_box();
    for d in 0..grid.dim() {
        let h = grid.step(d) / 2.0;
        bbox.lo[d] -= h;
        bbox.hi[d] += h;
    }
    SetDescriptor::oracle("snapped grid point set", bbox, move |x| {
        let n = g.dim();
        let mut lo_hi = Vec::with_capacity(n);
        for (d, (&v, a)) in x.iter().zip(g.axes()).enumerate() {
            let h = g.step(d);
            let t = (v - a.lo) / h;
            let eps = 1e-9;
            let k0 = (t - 0.5 - eps).ceil().max(0.0);
            let k1 = (t + 0.5 + eps).floor().min((a.count - 1) as f64);
            if k0 > k1 {
                return false;
            }
            lo_hi.push((k0 as usize, k1 as usize));
        }
        // every grid point within half a step, per axis
        let mut ks: Vec<usize> = lo_hi.iter().map(|r| r.0).collect();
        loop {
            if mask[g.linear_index(&ks)] {
                return true;
            }
            let mut d = n;
            loop {
                if d == 0 {
                    return false;
                }
                d -= 1;
                if ks[d] < lo_hi[d].1 {
                    ks[d] += 1;
                    break;
                }
                ks[d] = lo_hi[d].0;
            }
        }
    })
}

fn ew_hints(report: &EfficiencyReport, indices: &[usize]) -> Vec<(Vec<f64>, Vec<f64>)> {
    let pts: Vec<Vec<f64>> = indices.iter().map(|&i| report.grid.point(i)).collect();
    if pts.is_empty() {
        return Vec::new();
    }
    let stride = pts.len().div_ceil(64).max(1);
    let mut hints: Vec<(Vec<f64>, Vec<f64>)> = pts.iter().step_by(stride).map(|x| (x.clone(), x.clone())).collect();
    let last = pts.len() - 1;
    hints.push((pts[0].clone(), pts[last].clone()));
    hints.push((pts[last].clone(), pts[last].clone()));
    hints
}

fn falsify_index_set(report: &EfficiencyReport, indices: &[usize], p: PExponent, budget: &SearchBudget) -> Result<Verdict> {
    let set = ew_descriptor(&report.grid, indices)?;
    let mut b = budget.clone();
    let mut hints = ew_hints(report, indices);
    hints.extend(b.hints);
    b.hints = hints;
    falsify_set_pconvexity(&set, p, &b)
}

/// Falsifier run on the weakly efficient points (snapped to half a step).
pub fn check_ew_pconvexity(report: &EfficiencyReport, p: PExponent, budget: &SearchBudget) -> Result<Verdict> {
    falsify_index_set(report, &report.weakly_efficient, p, budget)
}

/// A copy of a 1-D weakly efficient set with a gap punched into `(0, xbar]`
/// where self-combinations of `xbar` land. `None` when there is no positive
/// point or the gap would contain no grid point.
pub fn negative_control_indices(report: &EfficiencyReport, p: PExponent) -> Option<Vec<usize>> {
    if report.grid.dim() != 1 {
        return None;
    }
    let xbar = report
        .weakly_efficient
        .iter()
        .map(|&i| report.grid.point(i)[0])
        .fold(f64::NAN, f64::max);
    if !(xbar > 0.0) {
        return None;
    }
    let g = ((p.value() - 1.0) / p.value()).exp2();
    let mid = (1.0 + g) / 2.0 * xbar;
    let half = (1.0 - g) / 4.0 * xbar;
    let (keep, drop): (Vec<usize>, Vec<usize>) = report
        .weakly_efficient
        .iter()
        .partition(|&&i| (report.grid.point(i)[0] - mid).abs() >= half);
    (!drop.is_empty()).then_some(keep)
}

/// The grid point nearest the origin is weakly efficient.
pub fn check_zero_in_ew(report: &EfficiencyReport) -> Result<CheckLine> {
    let origin = vec![0.0; report.grid.dim()];
    let j = report
        .grid
        .snap(&origin)
        .ok_or_else(|| Error::Precondition("the origin is outside the grid range".into()))?;
    let x0 = report.grid.point(j);
    let Some(values) = report.values_at(j) else {
        return Ok(CheckLine::not_applicable(ZERO_IN_EW, format!("grid point {x0:?} is outside the domain")));
    };
    if let Some(k) = values.iter().position(|v| *v < -report.tol) {
        return Ok(CheckLine::fail(
            ZERO_IN_EW,
            format!("f_{}(0) = {} < 0 contradicts F >= 0", k + 1, values[k]),
            Some(x0),
        ));
    }
    Ok(if report.is_weakly_efficient(j) {
        CheckLine::pass(ZERO_IN_EW, format!("grid point {x0:?} is weakly efficient"))
    } else {
        CheckLine::fail(ZERO_IN_EW, format!("grid point {x0:?} is not weakly efficient"), Some(x0))
    })
}

/// Runs every structural check and stores the lines in the report.
///
/// Hypothesis lines pass or are not applicable; the consequence lines that
/// depend on a failed hypothesis are not applicable.
pub fn run_structure_suite(
    report: &mut EfficiencyReport,
    f: &VectorFn,
    p: PExponent,
    budget: &SearchBudget,
) -> Result<()> {
    let mut lines = vec![check_union_inclusion(report), check_intersection_equality(report)];

    let min = report.min_value();
    let nonneg = min >= -report.tol;
    lines.push(if nonneg {
        CheckLine::pass(HYPOTHESIS_NONNEGATIVE, format!("smallest objective value {min}"))
    } else {
        CheckLine::not_applicable(HYPOTHESIS_NONNEGATIVE, format!("hypothesis fails: objective value {min} < 0"))
    });
    let strict = p.value() < 1.0;
    let rm = if strict {
        let v = is_rm_p_convex(f, p, budget)?;
        lines.push(match &v {
            Verdict::NoCounterexample { samples_used, .. } => {
                CheckLine::pass(HYPOTHESIS_RM_P_CONVEX, format!("no counterexample in {samples_used} samples"))
            }
            Verdict::Falsified { witness } => CheckLine::not_applicable(
                HYPOTHESIS_RM_P_CONVEX,
                format!(
                    "hypothesis fails: component {} falsified at x={:?}, y={:?}, lambda={}",
                    witness.component.unwrap_or(0) + 1,
                    witness.x,
                    witness.y,
                    witness.lambda
                ),
            ),
        });
        !v.is_falsified()
    } else {
        lines.push(CheckLine::not_applicable(HYPOTHESIS_RM_P_CONVEX, "requires 0 < p < 1"));
        false
    };

    let names = [ZERO_IN_EW, SCALING_CLOSURE, INTERVAL_FILL, EW_P_CONVEX, EW_NEGATIVE_CONTROL];
    if !(nonneg && rm) {
        for n in names {
            lines.push(CheckLine::not_applicable(n, "hypotheses do not hold"));
        }
        report.structural_checks = lines;
        return Ok(());
    }

    lines.push(match check_zero_in_ew(report) {
        Ok(l) => l,
        Err(Error::Precondition(m)) => CheckLine::not_applicable(ZERO_IN_EW, m),
        Err(e) => return Err(e),
    });
    lines.push(check_scaling_closure(report, p, budget.lambda_grid)?);
    lines.push(check_interval_fill(report));
    lines.push(match check_ew_pconvexity(report, p, budget)? {
        Verdict::NoCounterexample { samples_used, .. } => {
            CheckLine::pass(EW_P_CONVEX, format!("no counterexample in {samples_used} samples"))
        }
        Verdict::Falsified { witness } => CheckLine::fail(
            EW_P_CONVEX,
            format!("x={:?}, y={:?}, lambda={}", witness.x, witness.y, witness.lambda),
            Some(witness.point),
        ),
    });
    lines.push(match negative_control_indices(report, p) {
        None => CheckLine::not_applicable(EW_NEGATIVE_CONTROL, "no positive weakly efficient point to cut a gap below"),
        Some(gapped) => match falsify_index_set(report, &gapped, p, budget)? {
            Verdict::Falsified { witness } => CheckLine::pass(
                EW_NEGATIVE_CONTROL,
                format!("gapped set falsified at lambda={}", witness.lambda),
            ),
            Verdict::NoCounterexample { .. } => {
                CheckLine::fail(EW_NEGATIVE_CONTROL, "gapped set was not falsified", None)
            }
        },
    });
    report.structural_checks = lines;
    Ok(())
}
