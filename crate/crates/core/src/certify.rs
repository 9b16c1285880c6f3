//! Counterexample search for p-convexity, and executable checks of the
//! structural consequences of p-convexity for sets and functions.
//!
//! Every search is a bounded, seeded enumeration. A [`Verdict::Falsified`]
//! carries a [`Witness`] that can be replayed against the same descriptor to
//! reproduce its violation; [`Verdict::NoCounterexample`] only says that the
//! budget was exhausted and records how many `(x, y, lambda)` triples were
//! tried.
//!
//! Enumeration order: hint pairs, then each sampled member paired with
//! itself, then seeded random pairs. For every pair the adversarial
//! `lambda` values come first (`0`, `1`, `2^(-1/p)` and values near the
//! endpoints), then the uniform `lambda` grid, then seeded random `lambda`s.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pcore::{conjugate_coefficient, PCoefficients, PExponent};
use crate::pfuncs::{homogeneity_scalings, is_positively_homogeneous, lower_bound_from_upper, ScalarFn, DEFAULT_TOL};
use crate::psets::{is_interior_point, q_norm, Boundary, QNorm, SetDescriptor, SetNode};
use crate::report::CheckLine;

/// Relative slack below which a combination that misses a set is treated as
/// rounding noise rather than a counterexample.
pub const SET_SLACK: f64 = 1e-9;

/// Tube width standing in for the closure of a set.
pub const CLOSURE_EPSILON: f64 = 1e-6;

/// Probe points used per interiority test.
pub const PROBE_COUNT: usize = 32;

/// Tolerance for replaying a witness.
pub const REPLAY_TOLERANCE: f64 = 1e-12;

/// How much of the search space a falsifier explores.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SearchBudget {
    /// Grid points per axis over the bounding box when sampling members.
    pub grid_per_axis: usize,
    /// Additional uniformly drawn member points.
    pub random_samples: usize,
    /// Number of `(x, y)` pairs examined.
    pub pairs: usize,
    /// Size of the uniform `lambda` grid on `[0, 1]`.
    pub lambda_grid: usize,
    /// Seeded random `lambda` draws per pair.
    pub random_lambdas: usize,
    /// Extra adversarial `lambda` values, tried after the mandatory ones.
    pub adversarial_lambdas: Vec<f64>,
    /// Pairs tried before anything else.
    pub hints: Vec<(Vec<f64>, Vec<f64>)>,
    /// Relative tolerance on the Jensen gap.
    pub tol: f64,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            grid_per_axis: 101,
            random_samples: 200,
            pairs: 10_000,
            lambda_grid: 64,
            random_lambdas: 0,
            adversarial_lambdas: Vec::new(),
            hints: Vec::new(),
            tol: DEFAULT_TOL,
            seed: 42,
        }
    }
}

impl SearchBudget {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// The deterministic part of the `lambda` schedule for exponent `p`:
    /// `{0, 1, 2^(-1/p)}`, values within `1e-3` of both endpoints, the extra
    /// adversarial values, then the uniform grid. Duplicates are removed.
    pub fn lambdas(&self, p: PExponent) -> Vec<f64> {
        let mut out: Vec<f64> = vec![
            0.0,
            1.0,
            p.symmetric_coefficient(),
            1e-3,
            1.0 - 1e-3,
            1e-4,
            1.0 - 1e-4,
        ];
        out.extend(self.adversarial_lambdas.iter().copied().filter(|l| (0.0..=1.0).contains(l)));
        if self.lambda_grid == 1 {
            out.push(0.5);
        } else {
            out.extend((0..self.lambda_grid).map(|k| k as f64 / (self.lambda_grid - 1) as f64));
        }
        let mut seen = Vec::with_capacity(out.len());
        out.retain(|l| {
            if seen.contains(&l.to_bits()) {
                false
            } else {
                seen.push(l.to_bits());
                true
            }
        });
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// The combination left the set.
    SetViolation,
    /// The Jensen-type inequality failed.
    JensenViolation,
    /// The combination left the function's domain.
    DomainViolation,
}

/// A concrete counterexample `(x, y, lambda, mu)` at exponent `p`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub lambda: f64,
    pub mu: f64,
    pub p: f64,
    /// `lambda * x + mu * y`.
    pub point: Vec<f64>,
    /// Distance of `point` from the set for set and domain violations,
    /// `-gap` for Jensen violations.
    pub violation: f64,
    pub kind: WitnessKind,
    /// Component index when the witness refers to one objective of a vector
    /// function.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub component: Option<usize>,
}

impl Witness {
    fn coefficients(&self) -> Result<PCoefficients> {
        PCoefficients::new(self.lambda, self.mu, PExponent::new(self.p)?)
    }

    fn combination(&self) -> Vec<f64> {
        self.x
            .iter()
            .zip(&self.y)
            .map(|(a, b)| self.lambda * a + self.mu * b)
            .collect()
    }

    /// Recomputes the violation against `set`; `None` if the combination no
    /// longer violates membership.
    pub fn replay_set(&self, set: &SetDescriptor) -> Result<Option<f64>> {
        self.coefficients()?;
        let z = self.combination();
        if z.len() != set.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: set.ambient_dim(),
                got: z.len(),
            });
        }
        Ok(set_violation(set, &z))
    }

    /// Recomputes the violation against `f` (Jensen or domain, per `kind`).
    pub fn replay_fn(&self, f: &ScalarFn, tol: f64) -> Result<Option<f64>> {
        self.coefficients()?;
        let z = self.combination();
        let d = f.domain();
        if z.len() != d.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: d.ambient_dim(),
                got: z.len(),
            });
        }
        match self.kind {
            WitnessKind::DomainViolation | WitnessKind::SetViolation => Ok(set_violation(d, &z)),
            WitnessKind::JensenViolation => Ok(jensen_violation(f, &self.x, &self.y, &z, self.lambda, self.mu, tol)),
        }
    }

    /// Whether replaying reproduces the stored violation within
    /// [`REPLAY_TOLERANCE`].
    pub fn reproduces(&self, replayed: Option<f64>) -> bool {
        replayed.is_some_and(|v| (v - self.violation).abs() <= REPLAY_TOLERANCE * (1.0 + self.violation.abs()))
    }
}

/// Outcome of a bounded counterexample search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Verdict {
    Falsified { witness: Witness },
    NoCounterexample { samples_used: usize, strategy: String },
}

impl Verdict {
    pub fn is_falsified(&self) -> bool {
        matches!(self, Verdict::Falsified { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Falsified { witness } => Some(witness),
            Verdict::NoCounterexample { .. } => None,
        }
    }

    pub fn samples_used(&self) -> Option<usize> {
        match self {
            Verdict::NoCounterexample { samples_used, .. } => Some(*samples_used),
            Verdict::Falsified { .. } => None,
        }
    }
}

fn natural_q(set: &SetDescriptor) -> QNorm {
    let mut cur = set;
    while let Some(cf) = cur.closed_form() {
        cur = cf;
    }
    match cur.node() {
        SetNode::Ball(b) => b.q(),
        _ => QNorm::L2,
    }
}

fn slack_for(z: &[f64]) -> f64 {
    SET_SLACK * (1.0 + q_norm(z, QNorm::INF))
}

/// Distance of `z` from `set` (in the set's own norm for balls, Euclidean
/// otherwise) when `z` misses the set by more than the rounding slack.
pub fn set_violation(set: &SetDescriptor, z: &[f64]) -> Option<f64> {
    if set.member(z, 0.0) || set.member(z, slack_for(z)) {
        return None;
    }
    let d = set
        .distance_q(z, natural_q(set))
        .map(|d| d.value)
        .unwrap_or(0.0);
    Some(if d > 0.0 { d } else { slack_for(z) })
}

fn jensen_violation(f: &ScalarFn, x: &[f64], y: &[f64], z: &[f64], lambda: f64, mu: f64, tol: f64) -> Option<f64> {
    let (fx, fy, fz) = (f.value(x), f.value(y), f.value(z));
    jensen_violation_values(fx, fy, fz, lambda, mu, tol)
}

#[inline]
fn jensen_violation_values(fx: f64, fy: f64, fz: f64, lambda: f64, mu: f64, tol: f64) -> Option<f64> {
    let gap = lambda * fx + mu * fy - fz;
    let scale = 1.0 + (lambda * fx).abs() + (mu * fy).abs() + fz.abs();
    (gap < -tol * scale).then_some(-gap)
}

/// Index pairs in search order: hints (appended after the members), then
/// the diagonal, then seeded random pairs, `budget.pairs` in total.
fn pair_schedule(members: usize, hints: usize, budget: &SearchBudget, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (0..hints).map(|h| (members + 2 * h, members + 2 * h + 1)).collect();
    let total = budget.pairs.max(out.len());
    let diag = members.min((total - out.len()).div_ceil(2));
    out.extend((0..diag).map(|i| (i, i)));
    if members >= 2 {
        while out.len() < total {
            let i = rng.gen_range(0..members);
            let j = rng.gen_range(0..members);
            if i != j {
                out.push((i, j));
            }
        }
    }
    out
}

struct Search {
    points: Vec<Vec<f64>>,
    pairs: Vec<(usize, usize)>,
    lambdas: Vec<(f64, f64)>,
    random_lambdas: usize,
    rng: ChaCha8Rng,
}

impl Search {
    fn prepare(set: &SetDescriptor, p: PExponent, budget: &SearchBudget, hints_must_be_members: bool) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
        let mut points = set.sample_members(budget.grid_per_axis, budget.random_samples, &mut rng);
        let members = points.len();
        let mut hints = 0;
        for (x, y) in &budget.hints {
            if x.len() != set.ambient_dim() || y.len() != set.ambient_dim() {
                return Err(Error::DimensionMismatch {
                    expected: set.ambient_dim(),
                    got: x.len().max(y.len()),
                });
            }
            if hints_must_be_members && !(set.member(x, 0.0) && set.member(y, 0.0)) {
                continue;
            }
            points.push(x.clone());
            points.push(y.clone());
            hints += 1;
        }
        if members == 0 && hints == 0 {
            return Err(Error::SamplingFailed { found: 0, needed: 1 });
        }
        let pairs = pair_schedule(members, hints, budget, &mut rng);
        let lambdas = budget
            .lambdas(p)
            .into_iter()
            .map(|l| conjugate_coefficient(l, p).map(|mu| (l, mu)))
            .collect::<Result<_>>()?;
        Ok(Self {
            points,
            pairs,
            lambdas,
            random_lambdas: budget.random_lambdas,
            rng,
        })
    }

    /// Runs `visit` over the schedule until it returns a witness.
    fn run(
        &mut self,
        p: PExponent,
        mut visit: impl FnMut(usize, usize, f64, f64, &[f64]) -> Option<(f64, WitnessKind)>,
    ) -> (usize, Option<Witness>) {
        let n = self.points[0].len();
        let mut z = vec![0.0; n];
        let mut used = 0;
        let mut extra = vec![(0.0, 0.0); self.random_lambdas];
        for &(i, j) in &self.pairs {
            for slot in extra.iter_mut() {
                let l: f64 = self.rng.gen();
                *slot = (l, conjugate_coefficient(l, p).expect("lambda in [0, 1)"));
            }
            for &(lambda, mu) in self.lambdas.iter().chain(extra.iter()) {
                let (x, y) = (&self.points[i], &self.points[j]);
                for k in 0..n {
                    z[k] = lambda * x[k] + mu * y[k];
                }
                used += 1;
                if let Some((violation, kind)) = visit(i, j, lambda, mu, &z) {
                    return (
                        used,
                        Some(Witness {
                            x: x.clone(),
                            y: y.clone(),
                            lambda,
                            mu,
                            p: p.value(),
                            point: z.clone(),
                            violation,
                            kind,
                            component: None,
                        }),
                    );
                }
            }
        }
        (used, None)
    }
}

fn strategy(budget: &SearchBudget, members: usize) -> String {
    format!(
        "{} member samples (grid {}/axis + {} random), {} pairs, {} lambda grid + adversarial, {} random lambdas/pair, seed {}",
        members,
        budget.grid_per_axis,
        budget.random_samples,
        budget.pairs,
        budget.lambda_grid,
        budget.random_lambdas,
        budget.seed
    )
}

/// Searches for `x, y in K` and admissible `(lambda, mu)` with
/// `lambda x + mu y` outside `K`.
pub fn falsify_set_pconvexity(set: &SetDescriptor, p: PExponent, budget: &SearchBudget) -> Result<Verdict> {
    let mut search = Search::prepare(set, p, budget, true)?;
    let (used, witness) = search.run(p, |_, _, _, _, z| {
        set_violation(set, z).map(|v| (v, WitnessKind::SetViolation))
    });
    Ok(match witness {
        Some(witness) => Verdict::Falsified { witness },
        None => Verdict::NoCounterexample {
            samples_used: used,
            strategy: strategy(budget, search.points.len()),
        },
    })
}

/// Searches for a violation of `f(lambda x + mu y) <= lambda f(x) + mu f(y)`
/// on the domain of `f`, reporting combinations that leave the domain as
/// domain violations.
pub fn falsify_fn_pconvexity(f: &ScalarFn, p: PExponent, budget: &SearchBudget) -> Result<Verdict> {
    let domain = f.domain();
    let mut search = Search::prepare(domain, p, budget, true)?;
    let values: Vec<f64> = search.points.iter().map(|x| f.value(x)).collect();
    let tol = budget.tol;
    let (used, witness) = search.run(p, |i, j, lambda, mu, z| {
        if !domain.member(z, 0.0) {
            return set_violation(domain, z).map(|v| (v, WitnessKind::DomainViolation));
        }
        jensen_violation_values(values[i], values[j], f.value(z), lambda, mu, tol)
            .map(|v| (v, WitnessKind::JensenViolation))
    });
    Ok(match witness {
        Some(witness) => Verdict::Falsified { witness },
        None => Verdict::NoCounterexample {
            samples_used: used,
            strategy: strategy(budget, search.points.len()),
        },
    })
}

/// The explicit non-p-convex ball and its verified witness.
#[derive(Debug, Clone)]
pub struct BallCounterexample {
    /// The open ball `B_q(center, delta)`.
    pub ball: SetDescriptor,
    /// `z = (1 - delta/||center||_q + epsilon) * center`, a member.
    pub z: Vec<f64>,
    /// `x = y = z`, `lambda = mu = 2^(-1/p)`.
    pub witness: Witness,
}

/// Builds the point `z` inside `B_q(center, delta)` whose self-combination
/// `2^(1 - 1/p) z` falls outside the ball, and verifies both facts.
///
/// Requires `center != 0`, `beta >= 1`, `beta * delta / ||center||_q <= 1/2`,
/// `0 < p < 1/2` and `0 < epsilon < delta / ||center||_q`.
pub fn construct_ball_counterexample(
    center: &[f64],
    delta: f64,
    q: QNorm,
    p: PExponent,
    beta: f64,
    epsilon: f64,
) -> Result<BallCounterexample> {
    let norm = q_norm(center, q);
    if !(norm > 0.0) {
        return Err(Error::Precondition("center must be nonzero".into()));
    }
    if !(delta > 0.0) {
        return Err(Error::Precondition("delta must be > 0".into()));
    }
    if !(beta >= 1.0) {
        return Err(Error::Precondition(format!("beta >= 1 required, got {beta}")));
    }
    if !(beta * delta / norm <= 0.5) {
        return Err(Error::Precondition(format!(
            "beta * delta / ||center||_q <= 1/2 required, got {}",
            beta * delta / norm
        )));
    }
    if !(p.value() < 0.5) {
        return Err(Error::Precondition(format!("p >= 1/2 (got {p}); the construction needs p < 1/2")));
    }
    let ratio = delta / norm;
    if !(epsilon > 0.0 && epsilon < ratio) {
        return Err(Error::Precondition(format!(
            "epsilon must lie in (0, delta/||center||_q) = (0, {ratio}), got {epsilon}"
        )));
    }
    let ball = SetDescriptor::ball(q, center.to_vec(), delta, Boundary::Open)?;
    let z: Vec<f64> = center.iter().map(|c| (1.0 - ratio + epsilon) * c).collect();
    if !ball.contains(&z)? {
        return Err(Error::Defect(format!("constructed z = {z:?} is not inside the ball")));
    }
    let lambda = p.symmetric_coefficient();
    let mu = conjugate_coefficient(lambda, p)?;
    PCoefficients::new(lambda, mu, p)?;
    let point: Vec<f64> = z.iter().map(|v| lambda * v + mu * v).collect();
    let violation = set_violation(&ball, &point)
        .ok_or_else(|| Error::Defect(format!("combination {point:?} is still inside the ball")))?;
    let witness = Witness {
        x: z.clone(),
        y: z.clone(),
        lambda,
        mu,
        p: p.value(),
        point,
        violation,
        kind: WitnessKind::SetViolation,
        component: None,
    };
    if !witness.reproduces(witness.replay_set(&ball)?) {
        return Err(Error::Defect("ball counterexample does not replay".into()));
    }
    Ok(BallCounterexample { ball, z, witness })
}

/// Sampled evidence for the equivalence, on sets with `alpha K ⊆ K` for
/// `alpha in (0, 1]`, between `K + K ⊆ K` and "K is a p-convex cone".
#[derive(Debug, Clone, Serialize)]
pub struct ConeReport {
    /// Sampled `alpha K ⊆ K` precondition.
    pub star_shaped: bool,
    /// Sampled `K + K ⊆ K`.
    pub additive_closure: bool,
    /// Sampled `t K ⊆ K` for `t in (0, 10]`.
    pub cone: bool,
    pub p_convex: Verdict,
    /// `additive_closure == (cone && p_convex passed)`; vacuous when the
    /// precondition fails.
    pub consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<f64>>,
}

pub fn check_cone_equivalence(set: &SetDescriptor, p: PExponent, budget: &SearchBudget) -> Result<ConeReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed ^ 0xc0e);
    let members = set.sample_members(budget.grid_per_axis, budget.random_samples, &mut rng);
    if members.is_empty() {
        return Err(Error::SamplingFailed { found: 0, needed: 1 });
    }
    let inside = |z: &[f64]| set.member(z, 0.0) || set.member(z, slack_for(z));
    let scaled = |x: &[f64], t: f64| -> Vec<f64> { x.iter().map(|v| t * v).collect() };
    let mut witness = None;

    let alphas: Vec<f64> = (1..=16).map(|k| k as f64 / 16.0).collect();
    let star_shaped = members
        .iter()
        .all(|x| alphas.iter().all(|&a| inside(&scaled(x, a))));

    let cone = members.iter().all(|x| {
        homogeneity_scalings(16).iter().all(|&t| {
            let tx = scaled(x, t);
            let ok = inside(&tx);
            if !ok && witness.is_none() {
                witness = Some(tx);
            }
            ok
        })
    });

    let pairs = pair_schedule(members.len(), 0, budget, &mut rng);
    let mut additive_closure = true;
    for (i, j) in pairs {
        let s: Vec<f64> = members[i].iter().zip(&members[j]).map(|(a, b)| a + b).collect();
        if !inside(&s) {
            additive_closure = false;
            witness.get_or_insert(s);
            break;
        }
    }

    let p_convex = falsify_set_pconvexity(set, p, budget)?;
    let consistent = !star_shaped || additive_closure == (cone && !p_convex.is_falsified());
    Ok(ConeReport {
        star_shaped,
        additive_closure,
        cone,
        p_convex,
        consistent,
        witness,
    })
}

/// Base and downgraded verdicts for a p-convex set containing the origin.
#[derive(Debug, Clone, Serialize)]
pub struct DowngradeReport {
    pub p: f64,
    pub p1: f64,
    pub base: Verdict,
    pub downgraded: Verdict,
}

impl DowngradeReport {
    /// True when no counterexample was found at `p1`.
    pub fn holds(&self) -> bool {
        !self.downgraded.is_falsified()
    }
}

/// For `K` containing `0` and p-convex (falsifier-checked), searches for a
/// counterexample to p1-convexity with `p1 <= p`; none is expected.
pub fn check_downgrade(set: &SetDescriptor, p: PExponent, p1: PExponent, budget: &SearchBudget) -> Result<DowngradeReport> {
    if !set.contains(&vec![0.0; set.ambient_dim()])? {
        return Err(Error::Precondition("the set does not contain the origin".into()));
    }
    if p1 > p {
        return Err(Error::Precondition(format!("p1 = {p1} exceeds p = {p}")));
    }
    let base = falsify_set_pconvexity(set, p, budget)?;
    if base.is_falsified() {
        return Err(Error::Precondition(format!("the set is not {p}-convex: {base:?}")));
    }
    let downgraded = falsify_set_pconvexity(set, p1, budget)?;
    Ok(DowngradeReport {
        p: p.value(),
        p1: p1.value(),
        base,
        downgraded,
    })
}

/// Result of probing interiority along a half-open p-segment.
#[derive(Debug, Clone, Serialize)]
pub struct SegmentReport {
    pub checked: usize,
    /// First `(lambda, point)` whose probe ball of radius
    /// `lambda * probe_radius` left the set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<(f64, Vec<f64>)>,
}

impl SegmentReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// With `x` interior (probe ball of radius `probe_radius` inside `K`) and `y`
/// in `K` or within `probe_radius` of it, checks that every sampled point of
/// `[x, y)_p` is interior at radius `lambda * probe_radius`.
pub fn check_segment_interior(
    set: &SetDescriptor,
    p: PExponent,
    x: &[f64],
    y: &[f64],
    probe_radius: f64,
    samples: usize,
) -> Result<SegmentReport> {
    if samples == 0 {
        return Err(Error::InvalidParameter("segment samples must be >= 1".into()));
    }
    if !is_interior_point(set, x, probe_radius, PROBE_COUNT)? {
        return Err(Error::Precondition(format!("x = {x:?} is not interior at radius {probe_radius}")));
    }
    let near = set.contains(y)? || SetDescriptor::tube(set.clone(), probe_radius, QNorm::L2)?.contains(y)?;
    if !near {
        return Err(Error::Precondition(format!("y = {y:?} is not in the closure proxy of the set")));
    }
    for k in 1..=samples {
        let lambda = k as f64 / samples as f64;
        let mu = conjugate_coefficient(lambda, p)?;
        let z: Vec<f64> = x.iter().zip(y).map(|(a, b)| lambda * a + mu * b).collect();
        if !is_interior_point(set, &z, lambda * probe_radius, PROBE_COUNT)? {
            return Ok(SegmentReport {
                checked: k,
                failure: Some((lambda, z)),
            });
        }
    }
    Ok(SegmentReport {
        checked: samples,
        failure: None,
    })
}

/// `Tube(K, CLOSURE_EPSILON)`, the stand-in for the closure of `K`.
pub fn closure_proxy(set: &SetDescriptor) -> Result<SetDescriptor> {
    SetDescriptor::tube(set.clone(), CLOSURE_EPSILON, QNorm::L2)
}

/// `{x : is_interior_point(K, x, probe_radius)}` as an oracle set.
pub fn interior_proxy(set: &SetDescriptor, probe_radius: f64) -> Result<SetDescriptor> {
    let inner = set.clone();
    SetDescriptor::oracle("probed interior", set.bounding_box(), move |x| {
        is_interior_point(&inner, x, probe_radius, PROBE_COUNT).unwrap_or(false)
    })
}

/// Falsifier run on [`closure_proxy`].
pub fn check_closure_pconvexity(set: &SetDescriptor, p: PExponent, budget: &SearchBudget) -> Result<Verdict> {
    falsify_set_pconvexity(&closure_proxy(set)?, p, budget)
}

/// Falsifier run on [`interior_proxy`].
pub fn check_interior_pconvexity(
    set: &SetDescriptor,
    p: PExponent,
    probe_radius: f64,
    budget: &SearchBudget,
) -> Result<Verdict> {
    falsify_set_pconvexity(&interior_proxy(set, probe_radius)?, p, budget)
}

/// Positively homogeneous and p-convex should imply convex: if both
/// preconditions hold on samples, a `p = 1` search must come back empty.
pub fn check_homogeneous_convexity(f: &ScalarFn, p: PExponent, budget: &SearchBudget) -> Result<CheckLine> {
    const NAME: &str = "homogeneous_p_convex_implies_convex";
    if !is_positively_homogeneous(f, budget.random_samples.max(64), budget.tol) {
        return Ok(CheckLine::not_applicable(NAME, "f is not positively homogeneous on samples"));
    }
    if falsify_fn_pconvexity(f, p, budget)?.is_falsified() {
        return Ok(CheckLine::not_applicable(NAME, format!("f is not {p}-convex")));
    }
    Ok(match falsify_fn_pconvexity(f, PExponent::ONE, budget)? {
        Verdict::NoCounterexample { samples_used, .. } => {
            CheckLine::pass(NAME, format!("no convexity counterexample in {samples_used} samples"))
        }
        Verdict::Falsified { witness } => CheckLine::fail(NAME, "convexity fails", Some(witness.point)),
    })
}

/// Consequence lines for a (falsifier-checked) p-convex function.
#[derive(Debug, Clone, Serialize)]
pub struct ConsequenceReport {
    pub lines: Vec<CheckLine>,
}

impl ConsequenceReport {
    pub fn all_hold(&self) -> bool {
        self.lines.iter().all(|l| !l.failed())
    }

    pub fn line(&self, name: &str) -> Option<&CheckLine> {
        self.lines.iter().find(|l| l.name == name)
    }
}

pub const LOCAL_MIN_NONPOSITIVE: &str = "local_min_nonpositive";
pub const VALUE_AT_ORIGIN_NONPOSITIVE: &str = "value_at_origin_nonpositive";
pub const BOUNDED_FROM_UPPER: &str = "lower_bound_from_upper";
pub const NO_STRICT_INTERIOR_MAX: &str = "no_strict_interior_max";

struct GridSample {
    per: usize,
    dim: usize,
    /// Row-major grid slot -> member point and value.
    slots: Vec<Option<(Vec<f64>, f64)>>,
    step: f64,
}

impl GridSample {
    fn neighbors(&self, idx: usize) -> Vec<usize> {
        let mut coords = vec![0usize; self.dim];
        let mut r = idx;
        for d in (0..self.dim).rev() {
            coords[d] = r % self.per;
            r /= self.per;
        }
        let mut out = Vec::new();
        let total = 3usize.pow(self.dim as u32);
        for code in 0..total {
            let mut c = code;
            let mut ok = true;
            let mut lin = 0usize;
            let mut is_self = true;
            for &coord in &coords {
                let off = (c % 3) as isize - 1;
                c /= 3;
                if off != 0 {
                    is_self = false;
                }
                let v = coord as isize + off;
                if v < 0 || v >= self.per as isize {
                    ok = false;
                    break;
                }
                lin = lin * self.per + v as usize;
            }
            if ok && !is_self && self.slots[lin].is_some() {
                out.push(lin);
            }
        }
        out
    }
}

/// Checks the sign, boundedness and maximum consequences of p-convexity on
/// `f` (assumed p-convex; run [`falsify_fn_pconvexity`] first):
///
/// * every sampled local minimum has value `<= tol` (for `p < 1`);
/// * `f(0) <= tol` when `0` is in the domain (for `p < 1`);
/// * on ball domains, the sampled minimum is at least
///   [`lower_bound_from_upper`] of the sampled maximum;
/// * a nonnegative `f` has no strict global maximum at an interior point
///   (for `p < 1`).
pub fn run_consequence_suite(f: &ScalarFn, p: PExponent, budget: &SearchBudget) -> Result<ConsequenceReport> {
    let domain = f.domain();
    let dim = domain.ambient_dim();
    let bbox = domain.bounding_box();
    let grid_points = bbox.grid(budget.grid_per_axis);
    if grid_points.is_empty() {
        return Err(Error::SamplingFailed { found: 0, needed: 1 });
    }
    let per = (grid_points.len() as f64).powf(1.0 / dim as f64).round() as usize;
    let step = (0..dim)
        .map(|i| (bbox.hi[i] - bbox.lo[i]) / (per.max(2) - 1) as f64)
        .filter(|s| *s > 0.0)
        .fold(f64::INFINITY, f64::min);
    let slots: Vec<Option<(Vec<f64>, f64)>> = grid_points
        .into_iter()
        .map(|x| {
            domain.member(&x, 0.0).then(|| {
                let v = f.value(&x);
                (x, v)
            })
        })
        .collect();
    let grid = GridSample { per, dim, slots, step };
    let members: Vec<usize> = (0..grid.slots.len()).filter(|&i| grid.slots[i].is_some()).collect();
    if members.is_empty() {
        return Err(Error::SamplingFailed { found: 0, needed: 1 });
    }
    let value = |i: usize| grid.slots[i].as_ref().expect("member").1;
    let point = |i: usize| grid.slots[i].as_ref().expect("member").0.clone();
    let tol = budget.tol.max(1e-12);
    let strict = p.value() < 1.0;
    let mut lines = Vec::new();

    // local minima
    if strict {
        let mut count = 0;
        let mut bad = None;
        for &i in &members {
            let nb = grid.neighbors(i);
            if nb.is_empty() || nb.iter().any(|&j| value(j) < value(i)) {
                continue;
            }
            count += 1;
            if value(i) > tol && bad.is_none() {
                bad = Some(i);
            }
        }
        lines.push(match bad {
            None => CheckLine::pass(LOCAL_MIN_NONPOSITIVE, format!("{count} sampled local minima, all <= {tol}")),
            Some(i) => CheckLine::fail(
                LOCAL_MIN_NONPOSITIVE,
                format!("local minimum with value {} > 0", value(i)),
                Some(point(i)),
            ),
        });
    } else {
        lines.push(CheckLine::not_applicable(LOCAL_MIN_NONPOSITIVE, "requires p < 1"));
    }

    // value at the origin
    let origin = vec![0.0; dim];
    if !strict {
        lines.push(CheckLine::not_applicable(VALUE_AT_ORIGIN_NONPOSITIVE, "requires p < 1"));
    } else if !domain.member(&origin, 0.0) {
        lines.push(CheckLine::not_applicable(VALUE_AT_ORIGIN_NONPOSITIVE, "0 is not in the domain"));
    } else {
        let f0 = f.value(&origin);
        lines.push(if f0 <= tol {
            CheckLine::pass(VALUE_AT_ORIGIN_NONPOSITIVE, format!("f(0) = {f0}"))
        } else {
            CheckLine::fail(VALUE_AT_ORIGIN_NONPOSITIVE, format!("f(0) = {f0} > 0"), Some(origin.clone()))
        });
    }

    // boundedness on balls
    let (min_i, max_i) = members.iter().fold((members[0], members[0]), |(lo, hi), &i| {
        (
            if value(i) < value(lo) { i } else { lo },
            if value(i) > value(hi) { i } else { hi },
        )
    });
    let (fmin, fmax) = (value(min_i), value(max_i));
    lines.push(match lower_bound_from_upper(f, fmax, p) {
        Ok(m) => {
            let slack = tol * (1.0 + m.abs() + fmax.abs());
            if fmin >= m - slack {
                CheckLine::pass(BOUNDED_FROM_UPPER, format!("sampled min {fmin} >= bound {m} (sampled max {fmax})"))
            } else {
                CheckLine::fail(
                    BOUNDED_FROM_UPPER,
                    format!("sampled min {fmin} < bound {m} (sampled max {fmax})"),
                    Some(point(min_i)),
                )
            }
        }
        Err(Error::Precondition(msg)) | Err(Error::CenterConditionViolated(msg)) => {
            CheckLine::not_applicable(BOUNDED_FROM_UPPER, msg)
        }
        Err(e) => return Err(e),
    });

    // strict interior maximum of a nonnegative function
    if !strict {
        lines.push(CheckLine::not_applicable(NO_STRICT_INTERIOR_MAX, "requires p < 1"));
    } else if fmin < -tol {
        lines.push(CheckLine::not_applicable(NO_STRICT_INTERIOR_MAX, format!("f takes negative value {fmin}")));
    } else {
        let runner_up = members
            .iter()
            .filter(|&&i| i != max_i)
            .map(|&i| value(i))
            .fold(f64::NEG_INFINITY, f64::max);
        let is_strict = fmax - runner_up > tol * (1.0 + fmax.abs());
        let interior = is_interior_point(domain, &point(max_i), grid.step, 2 * dim)?;
        lines.push(if is_strict && interior {
            CheckLine::fail(
                NO_STRICT_INTERIOR_MAX,
                format!("strict interior maximum {fmax} (next {runner_up})"),
                Some(point(max_i)),
            )
        } else {
            CheckLine::pass(
                NO_STRICT_INTERIOR_MAX,
                if is_strict {
                    "strict maximum lies on the boundary".to_string()
                } else {
                    "maximum is not strict".to_string()
                },
            )
        });
    }

    Ok(ConsequenceReport { lines })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pfuncs::CatalogEntry;
    use crate::psets::{Bound, BoundingBox, IntervalShape};

    fn p(v: f64) -> PExponent {
        PExponent::new(v).unwrap()
    }

    fn small() -> SearchBudget {
        SearchBudget {
            grid_per_axis: 41,
            random_samples: 50,
            pairs: 2_000,
            lambda_grid: 32,
            ..SearchBudget::default()
        }
    }

    fn iv(a: f64, b: f64) -> SetDescriptor {
        SetDescriptor::closed_interval(a, b).unwrap()
    }

    #[test]
    fn lambda_schedule_contains_adversarial_values() {
        let l = SearchBudget::default().lambdas(p(0.5));
        assert_eq!(&l[..3], &[0.0, 1.0, 0.25]);
        assert!(l.iter().any(|&v| v > 0.0 && v <= 1e-3));
        assert!(l.iter().any(|&v| v < 1.0 && v >= 1.0 - 1e-3));
        // 64-point grid minus the duplicated endpoints
        assert_eq!(l.len(), 7 + 62);
    }

    #[test]
    fn off_origin_ball_is_falsified() {
        let b = SetDescriptor::ball(QNorm::L2, vec![1.0, 0.0], 0.5, Boundary::Open).unwrap();
        let v = falsify_set_pconvexity(&b, p(0.25), &small()).unwrap();
        let w = v.witness().expect("falsified");
        assert!(w.reproduces(w.replay_set(&b).unwrap()));
        assert!(!b.contains(&w.point).unwrap());
    }

    #[test]
    fn documented_ball_witness_replays() {
        let b = SetDescriptor::ball(QNorm::L2, vec![1.0, 0.0], 0.5, Boundary::Open).unwrap();
        let budget = SearchBudget {
            hints: vec![(vec![0.75, 0.0], vec![0.75, 0.0])],
            ..small()
        };
        let w = falsify_set_pconvexity(&b, p(0.25), &budget).unwrap().witness().cloned().unwrap();
        assert_eq!(w.x, vec![0.75, 0.0]);
        assert_eq!(w.lambda, 0.0625);
        assert_eq!(w.point, vec![0.09375, 0.0]);
        assert_eq!(w.violation, 0.40625);
    }

    #[test]
    fn interval_passes() {
        let v = falsify_set_pconvexity(&iv(-1.0, 2.0), p(0.5), &small()).unwrap();
        assert!(!v.is_falsified(), "{v:?}");
        assert!(v.samples_used().unwrap() >= 2_000 * 32);
    }

    #[test]
    fn singleton_behaviour() {
        let one = SetDescriptor::point_cloud(vec![vec![1.0, 1.0]]).unwrap();
        let w = falsify_set_pconvexity(&one, p(0.5), &small()).unwrap().witness().cloned().unwrap();
        assert_eq!(w.lambda, 0.25);
        assert_eq!(w.mu, 0.25);
        assert_eq!(w.point, vec![0.5, 0.5]);
        let origin = SetDescriptor::point_cloud(vec![vec![0.0, 0.0]]).unwrap();
        assert!(!falsify_set_pconvexity(&origin, p(0.5), &small()).unwrap().is_falsified());
        // at p = 1 every singleton is convex
        assert!(!falsify_set_pconvexity(&one, PExponent::ONE, &small()).unwrap().is_falsified());
    }

    #[test]
    fn sampling_failure() {
        let empty = SetDescriptor::oracle("empty", BoundingBox::new(vec![0.0], vec![1.0]), |_| false).unwrap();
        assert!(matches!(
            falsify_set_pconvexity(&empty, p(0.5), &small()),
            Err(Error::SamplingFailed { .. })
        ));
    }

    #[test]
    fn falsifier_is_deterministic() {
        let b = SetDescriptor::ball(QNorm::INF, vec![2.0, 1.0], 1.0, Boundary::Closed).unwrap();
        let budget = SearchBudget {
            random_lambdas: 4,
            ..small()
        };
        let a = falsify_set_pconvexity(&b, p(0.3), &budget).unwrap();
        let c = falsify_set_pconvexity(&b, p(0.3), &budget).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn remark_pair_on_functions() {
        let sq = ScalarFn::from_catalog(CatalogEntry::SquareShift, iv(0.0, 2.0));
        let budget = SearchBudget {
            hints: vec![(vec![0.0], vec![1.0])],
            ..small()
        };
        let w = falsify_fn_pconvexity(&sq, p(0.5), &budget).unwrap().witness().cloned().unwrap();
        assert_eq!((w.x[0], w.y[0], w.lambda), (0.0, 1.0, 0.25));
        assert_eq!(w.violation, 5.0 / 16.0);
        assert_eq!(w.kind, WitnessKind::JensenViolation);
        assert!(w.reproduces(w.replay_fn(&sq, DEFAULT_TOL).unwrap()));

        // no hints: the diagonal at x = 0 already fails
        assert!(falsify_fn_pconvexity(&sq, p(0.5), &small()).unwrap().is_falsified());

        let nq = ScalarFn::from_catalog(CatalogEntry::NegHalfQuad, iv(0.0, 1.0));
        assert!(!falsify_fn_pconvexity(&nq, p(0.5), &small()).unwrap().is_falsified());
        // not convex
        assert!(falsify_fn_pconvexity(&nq, PExponent::ONE, &small()).unwrap().is_falsified());
    }

    #[test]
    fn domain_violations_are_reported() {
        let f = ScalarFn::new("x", iv(0.5, 2.0), |x| x[0]);
        let w = falsify_fn_pconvexity(&f, p(0.5), &small()).unwrap().witness().cloned().unwrap();
        assert_eq!(w.kind, WitnessKind::DomainViolation);
        assert!(w.reproduces(w.replay_fn(&f, DEFAULT_TOL).unwrap()));
    }

    #[test]
    fn catalog_claims_hold() {
        let entries = [
            CatalogEntry::LinearSum { alpha: 3.0 },
            CatalogEntry::QNormFn { q: QNorm::L2 },
            CatalogEntry::SqrtMinusTwo,
            CatalogEntry::SquareShift,
            CatalogEntry::NegHalfQuad,
        ];
        for e in entries {
            for claim in e.claims() {
                let f = ScalarFn::from_catalog(e, claim.domain.clone());
                let v = falsify_fn_pconvexity(&f, claim.p, &small()).unwrap();
                let expect = claim.expectation == crate::pfuncs::Expectation::NotPConvex;
                assert_eq!(v.is_falsified(), expect, "{e} at p={}: {v:?}", claim.p);
            }
        }
    }

    #[test]
    fn ball_construction() {
        let c = construct_ball_counterexample(&[1.0, 0.0], 0.5, QNorm::L2, p(0.25), 1.0, 0.25).unwrap();
        assert_eq!(c.z, vec![0.75, 0.0]);
        assert_eq!(c.witness.point, vec![0.09375, 0.0]);
        assert_eq!(c.witness.violation, 0.40625);

        let e = construct_ball_counterexample(&[1.0, 0.0], 0.5, QNorm::L2, p(0.6), 1.0, 0.25).unwrap_err();
        assert!(e.to_string().contains("p >= 1/2"));

        let c = construct_ball_counterexample(&[2.0, 0.0], 0.5, QNorm::L2, p(0.25), 2.0, 0.1).unwrap();
        assert!(c.ball.contains(&c.z).unwrap());
        assert!(!c.ball.contains(&c.witness.point).unwrap());

        for bad in [
            construct_ball_counterexample(&[0.0, 0.0], 0.5, QNorm::L2, p(0.25), 1.0, 0.1),
            construct_ball_counterexample(&[1.0, 0.0], 0.5, QNorm::L2, p(0.25), 0.5, 0.1),
            construct_ball_counterexample(&[1.0, 0.0], 0.6, QNorm::L2, p(0.25), 1.0, 0.1),
            construct_ball_counterexample(&[1.0, 0.0], 0.5, QNorm::L2, p(0.25), 1.0, 0.5),
        ] {
            assert!(matches!(bad, Err(Error::Precondition(_))));
        }
    }

    #[test]
    fn cone_equivalence_examples() {
        let r = check_cone_equivalence(&SetDescriptor::orthant_cone(2).unwrap(), p(0.5), &small()).unwrap();
        assert!(r.star_shaped && r.additive_closure && r.cone && !r.p_convex.is_falsified() && r.consistent);

        let r = check_cone_equivalence(&iv(0.0, 1.0), p(0.5), &small()).unwrap();
        assert!(r.star_shaped && !r.additive_closure && !r.cone && r.consistent);

        let scaled = SetDescriptor::scale(3.0, SetDescriptor::orthant_cone(2).unwrap()).unwrap();
        let r = check_cone_equivalence(&scaled, p(0.25), &small()).unwrap();
        assert!(r.additive_closure && r.cone && r.consistent);
    }

    #[test]
    fn downgrade_examples() {
        let r = check_downgrade(&iv(-1.0, 2.0), PExponent::ONE, p(0.5), &small()).unwrap();
        assert!(r.holds());
        let ball = SetDescriptor::ball(QNorm::L2, vec![0.0, 0.0], 1.0, Boundary::Closed).unwrap();
        assert!(check_downgrade(&ball, PExponent::ONE, p(0.25), &small()).unwrap().holds());
        assert!(matches!(
            check_downgrade(&iv(1.0, 2.0), PExponent::ONE, p(0.5), &small()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            check_downgrade(&iv(-1.0, 2.0), p(0.5), PExponent::ONE, &small()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn algebra_preserves_p_convexity() {
        let pp = p(0.5);
        let a = iv(-1.0, 2.0);
        let b = SetDescriptor::ball(QNorm::L2, vec![0.3], 0.5, Boundary::Open).unwrap();
        let disk = SetDescriptor::ball(QNorm::L2, vec![0.2, 0.1], 1.0, Boundary::Closed).unwrap();
        let square = SetDescriptor::ball(QNorm::INF, vec![-0.3, 0.0], 0.5, Boundary::Open).unwrap();
        let composites = [
            SetDescriptor::intersection(vec![a.clone(), b.clone()]).unwrap(),
            SetDescriptor::minkowski_sum(a.clone(), b.clone()).unwrap(),
            SetDescriptor::scale(-2.5, a.clone()).unwrap(),
            SetDescriptor::tube(a.clone(), 0.3, QNorm::L2).unwrap(),
            SetDescriptor::intersection(vec![disk.clone(), square.clone()]).unwrap(),
            SetDescriptor::scale(0.5, SetDescriptor::intersection(vec![disk.clone(), square.clone()]).unwrap()).unwrap(),
            SetDescriptor::tube(disk.clone(), 0.2, QNorm::L2).unwrap(),
        ];
        for k in composites {
            let v = falsify_set_pconvexity(&k, pp, &small()).unwrap();
            assert!(!v.is_falsified(), "{k:?}: {v:?}");
        }
    }

    #[test]
    fn closure_and_interior_proxies() {
        let open = SetDescriptor::interval(Bound::Open(-1.0), Bound::Open(2.0)).unwrap();
        assert!(!check_closure_pconvexity(&open, p(0.5), &small()).unwrap().is_falsified());
        let budget = SearchBudget {
            grid_per_axis: 21,
            random_samples: 10,
            pairs: 200,
            lambda_grid: 8,
            ..SearchBudget::default()
        };
        let disk = SetDescriptor::ball(QNorm::L2, vec![0.1, 0.0], 1.0, Boundary::Closed).unwrap();
        assert!(!check_interior_pconvexity(&disk, p(0.5), 0.05, &budget).unwrap().is_falsified());
    }

    #[test]
    fn segment_interior_examples() {
        let r = check_segment_interior(&iv(-1.0, 2.0), p(0.5), &[0.5], &[2.0], 0.1, 200).unwrap();
        assert!(r.holds(), "{r:?}");
        let disk = SetDescriptor::ball(QNorm::L2, vec![0.0, 0.0], 1.0, Boundary::Open).unwrap();
        let r = check_segment_interior(&disk, p(0.5), &[0.0, 0.0], &[1.0, 0.0], 0.5, 200).unwrap();
        assert!(r.holds(), "{r:?}");
        assert!(matches!(
            check_segment_interior(&iv(-1.0, 2.0), p(0.5), &[2.0], &[0.0], 0.1, 10),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn consequence_examples() {
        let unit = iv(0.0, 1.0);
        let sqrt = ScalarFn::from_catalog(CatalogEntry::SqrtMinusTwo, unit.clone());
        let r = run_consequence_suite(&sqrt, p(0.5), &small()).unwrap();
        assert!(r.line(VALUE_AT_ORIGIN_NONPOSITIVE).unwrap().passed());
        assert!(r.all_hold(), "{r:?}");

        let nq = ScalarFn::from_catalog(CatalogEntry::NegHalfQuad, unit.clone());
        let r = run_consequence_suite(&nq, p(0.5), &small()).unwrap();
        let lm = r.line(LOCAL_MIN_NONPOSITIVE).unwrap();
        assert!(lm.passed(), "{lm:?}");
        assert!(r.all_hold(), "{r:?}");

        let lin = ScalarFn::from_catalog(CatalogEntry::LinearSum { alpha: 1.0 }, unit);
        let r = run_consequence_suite(&lin, p(0.5), &small()).unwrap();
        assert!(r.line(VALUE_AT_ORIGIN_NONPOSITIVE).unwrap().passed());
        assert!(r.all_hold(), "{r:?}");
    }

    #[test]
    fn consequence_suite_flags_non_p_convex_input() {
        // (x-1)^2 is not 1/2-convex; its local minimum at 1 is 0 but f(0) = 1 > 0
        let sq = ScalarFn::from_catalog(CatalogEntry::SquareShift, iv(0.0, 2.0));
        let r = run_consequence_suite(&sq, p(0.5), &small()).unwrap();
        assert!(r.line(VALUE_AT_ORIGIN_NONPOSITIVE).unwrap().failed());
        // a bump with a strict interior maximum
        let bump = ScalarFn::new("bump", iv(-1.0, 1.0), |x| 1.0 - x[0] * x[0]);
        let r = run_consequence_suite(&bump, p(0.5), &small()).unwrap();
        assert!(r.line(NO_STRICT_INTERIOR_MAX).unwrap().failed());
    }

    #[test]
    fn consequence_bound_on_ball_domain() {
        let ball = SetDescriptor::interval_shape(IntervalShape::Closed, -1.0, 1.0).unwrap();
        let f = ScalarFn::from_catalog(CatalogEntry::QNormFn { q: QNorm::L2 }, ball);
        let r = run_consequence_suite(&f, p(0.5), &small()).unwrap();
        assert!(r.line(BOUNDED_FROM_UPPER).unwrap().passed());
        assert!(r.all_hold(), "{r:?}");
    }

    #[test]
    fn homogeneous_convexity() {
        let cone = SetDescriptor::orthant_cone(2).unwrap();
        let n = ScalarFn::from_catalog(CatalogEntry::QNormFn { q: QNorm::L1 }, cone);
        assert!(check_homogeneous_convexity(&n, p(0.5), &small()).unwrap().passed());
        let sq = ScalarFn::from_catalog(CatalogEntry::SquareShift, SetDescriptor::orthant_cone(1).unwrap());
        assert_eq!(
            check_homogeneous_convexity(&sq, p(0.5), &small()).unwrap().status,
            crate::report::CheckStatus::NotApplicable
        );
    }
}
