//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use pconvex::certify::{check_downgrade, construct_ball_counterexample, falsify_fn_pconvexity, falsify_set_pconvexity};
use pconvex::cli::run_instance;
use pconvex::pfuncs::jensen_gap;
use pconvex::weff::{
    check_ew_pconvexity, check_intersection_equality, check_interval_fill, check_scaling_closure,
    check_union_inclusion, check_zero_in_ew, ew_descriptor, is_rm_p_convex, negative_control_indices,
    weakly_efficient_set, DEFAULT_EW_TOL,
};
use pconvex::{
    g_argmin, scaling_g, Boundary, Bound, CatalogEntry, GridSpec, Instance, IntervalShape, PExponent, QNorm,
    ScalarFn, SearchBudget, SetDescriptor, VectorFn,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;

fn p(v: f64) -> PExponent {
    PExponent::new(v).unwrap()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn within(t: Duration, limit: f64, what: &str) -> Result<(), String> {
    ensure(t.as_secs_f64() < limit, format!("{what} took {:.2}s, limit {limit}s", t.as_secs_f64()))
}

fn square_shift_golden() -> Outcome {
    let f = ScalarFn::from_catalog(CatalogEntry::SquareShift, SetDescriptor::closed_interval(0.0, 2.0).map_err(e)?);
    let start = Instant::now();
    let v = falsify_fn_pconvexity(&f, p(0.5), &SearchBudget::default()).map_err(e)?;
    let t = start.elapsed();
    let w = v.witness().ok_or("no witness found")?;
    ensure(w.reproduces(w.replay_fn(&f, 1e-9).map_err(e)?), "witness does not replay")?;
    let gap = jensen_gap(&f, &[0.0], &[1.0], 0.25, p(0.5)).map_err(e)?;
    ensure((gap + 5.0 / 16.0).abs() <= 1e-12, format!("gap at (0, 1, 1/4) is {gap}, expected -5/16"))?;
    within(t, 1.0, "search")?;
    Ok(format!(
        "witness x={:?} y={:?} lambda={}; gap(0,1,1/4) = {gap}; {:.3}s",
        w.x,
        w.y,
        w.lambda,
        t.as_secs_f64()
    ))
}

fn neg_half_quad_passes() -> Outcome {
    let f = ScalarFn::from_catalog(CatalogEntry::NegHalfQuad, SetDescriptor::closed_interval(0.0, 1.0).map_err(e)?);
    let budget = SearchBudget {
        tol: 1e-9,
        ..SearchBudget::default()
    };
    let start = Instant::now();
    let v = falsify_fn_pconvexity(&f, p(0.5), &budget).map_err(e)?;
    let t = start.elapsed();
    let n = v.samples_used().ok_or_else(|| format!("unexpected counterexample {:?}", v.witness()))?;
    ensure(n >= 100_000, format!("only {n} samples"))?;
    within(t, 10.0, "search")?;
    Ok(format!("no counterexample in {n} samples; {:.3}s", t.as_secs_f64()))
}

fn ball_construction() -> Outcome {
    let c = construct_ball_counterexample(&[1.0, 0.0], 0.5, QNorm::L2, p(0.25), 1.0, 0.25).map_err(e)?;
    ensure(c.z == [0.75, 0.0], format!("z = {:?}", c.z))?;
    ensure(c.ball.contains(&c.z).map_err(e)?, "z is not in the ball")?;
    let eighth: Vec<f64> = c.z.iter().map(|v| v / 8.0).collect();
    ensure(c.witness.point == eighth, format!("combination {:?} is not z/8", c.witness.point))?;
    ensure(!c.ball.contains(&c.witness.point).map_err(e)?, "z/8 is in the ball")?;
    ensure(
        (c.witness.violation - 0.40625).abs() <= 1e-12,
        format!("violation {}", c.witness.violation),
    )?;
    ensure(c.witness.reproduces(c.witness.replay_set(&c.ball).map_err(e)?), "replay failed")?;
    Ok(format!("z = {:?}, z/8 outside, violation {}", c.z, c.witness.violation))
}

fn pass_suite() -> Outcome {
    let mut sets = Vec::new();
    for shape in IntervalShape::ALL {
        for a in [-1.0, 0.0] {
            sets.push((format!("{shape:?} a={a}"), SetDescriptor::interval_shape(shape, a, 2.0).map_err(e)?));
        }
    }
    for (q, c, r, b) in [
        (QNorm::L2, vec![0.0, 0.0], 1.0, Boundary::Open),
        (QNorm::L2, vec![0.3, -0.2], 1.0, Boundary::Closed),
        (QNorm::L1, vec![0.5, 0.0], 0.6, Boundary::Open),
        (QNorm::INF, vec![-0.4, 0.4], 0.5, Boundary::Closed),
        (QNorm::new(3.0).map_err(e)?, vec![0.0, 1.0], 1.0, Boundary::Closed),
    ] {
        sets.push((format!("B_{}({c:?}, {r})", q.value()), SetDescriptor::ball(q, c, r, b).map_err(e)?));
    }
    let budget = SearchBudget {
        pairs: 10_000,
        lambda_grid: 64,
        ..SearchBudget::default()
    };
    let start = Instant::now();
    let mut runs = 0;
    for (label, s) in &sets {
        for pv in [0.25, 0.5, 1.0] {
            let v = falsify_set_pconvexity(s, p(pv), &budget).map_err(e)?;
            if let Some(w) = v.witness() {
                return Err(format!("{label} at p={pv}: counterexample {w:?}"));
            }
            runs += 1;
        }
    }
    let t = start.elapsed();
    within(t, 60.0, "suite")?;
    Ok(format!("{runs} searches, no counterexample; {:.2}s", t.as_secs_f64()))
}

fn random_zero_set(rng: &mut ChaCha8Rng) -> SetDescriptor {
    match rng.gen_range(0..5) {
        0 => {
            let a = -rng.gen_range(0.0..2.0);
            let b = rng.gen_range(0.1..2.0);
            let lo = if rng.gen() { Bound::Closed(a) } else { Bound::Open(a - 0.1) };
            SetDescriptor::interval(lo, Bound::Closed(b)).unwrap()
        }
        1 => {
            let c: Vec<f64> = (0..2).map(|_| rng.gen_range(-0.5..0.5)).collect();
            let r = (c[0] * c[0] + c[1] * c[1]).sqrt() + rng.gen_range(0.1..1.0);
            SetDescriptor::ball(QNorm::L2, c, r, Boundary::Open).unwrap()
        }
        2 => SetDescriptor::orthant_cone(2).unwrap(),
        3 => {
            let inner = SetDescriptor::ball(QNorm::INF, vec![0.2, 0.1], 0.5, Boundary::Closed).unwrap();
            SetDescriptor::scale(rng.gen_range(-3.0..3.0), inner).unwrap()
        }
        _ => SetDescriptor::intersection(vec![
            SetDescriptor::ball(QNorm::L2, vec![0.1, 0.0], 1.0, Boundary::Closed).unwrap(),
            SetDescriptor::ball(QNorm::L1, vec![-0.2, 0.2], 0.9, Boundary::Open).unwrap(),
        ])
        .unwrap(),
    }
}

fn downgrade_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let budget = SearchBudget {
        grid_per_axis: 41,
        random_samples: 50,
        pairs: 2_000,
        ..SearchBudget::default()
    };
    let mut checked = 0;
    for k in 0..10 {
        let set = random_zero_set(&mut rng);
        let pv = [1.0, 0.75, 0.5][k % 3];
        for div in [1.0, 2.0, 4.0] {
            let r = check_downgrade(&set, p(pv), p(pv / div), &budget.clone().with_seed(k as u64)).map_err(e)?;
            if !r.holds() {
                return Err(format!("defect: set {k} {set:?}, p={pv}, p1={}: {:?}", pv / div, r.downgraded));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} downgrade checks on 10 sets"))
}

fn golden_section(f: impl Fn(f64) -> f64) -> f64 {
    let (mut a, mut b) = (0.0f64, 1.0f64);
    let r = 0.5 * (5f64.sqrt() - 1.0);
    for _ in 0..200 {
        let c = b - r * (b - a);
        let d = a + r * (b - a);
        if f(c) < f(d) {
            b = d
        } else {
            a = c
        }
    }
    0.5 * (a + b)
}

fn g_function() -> Outcome {
    let half = g_argmin(p(0.5)).map_err(e)?;
    ensure(half == (0.25, 0.5), format!("g_argmin(1/2) = {half:?}"))?;
    let mut worst: f64 = 0.0;
    for pv in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let (l, g) = g_argmin(p(pv)).map_err(e)?;
        let ln = golden_section(|t| scaling_g(t, p(pv)).unwrap());
        let gn = scaling_g(ln, p(pv)).map_err(e)?;
        worst = worst.max((l - ln).abs()).max((g - gn).abs());
        ensure((l - ln).abs() <= 1e-6 && (g - gn).abs() <= 1e-6, format!("p={pv}: ({l},{g}) vs ({ln},{gn})"))?;
    }
    Ok(format!("g_argmin(1/2) = (0.25, 0.5); worst numeric deviation {worst:.1e}"))
}

/// Plain pairwise strict-dominance scan.
fn dominance_oracle(f: &VectorFn, g: &GridSpec, tol: f64) -> Vec<usize> {
    let vals: Vec<(usize, Vec<f64>)> = (0..g.len())
        .filter(|&i| f.domain().contains(&g.point(i)).unwrap())
        .map(|i| (i, f.values(&g.point(i))))
        .collect();
    let mut out = Vec::new();
    for (i, b) in &vals {
        let mut dominated = false;
        for (_, a) in &vals {
            if (0..a.len()).all(|k| a[k] < b[k] - tol) {
                dominated = true;
                break;
            }
        }
        if !dominated {
            out.push(*i);
        }
    }
    out
}

fn random_objective(rng: &mut ChaCha8Rng, domain: &SetDescriptor, grid: &GridSpec, shift: f64) -> ScalarFn {
    let entry = match rng.gen_range(0..5) {
        0 => CatalogEntry::LinearSum {
            alpha: rng.gen_range(-2.0..2.0),
        },
        1 => CatalogEntry::QNormFn { q: QNorm::L2 },
        2 => CatalogEntry::SquareShift,
        3 => CatalogEntry::SqrtMinusTwo,
        _ => CatalogEntry::NegHalfQuad,
    };
    let base = ScalarFn::from_catalog(entry, domain.clone());
    // sqrt needs a nonnegative argument, so it is not shifted
    let f = if entry == CatalogEntry::SqrtMinusTwo {
        base
    } else {
        base.shifted(&[shift], domain.clone())
    };
    let min = (0..grid.len()).map(|i| f.value(&grid.point(i))).fold(f64::INFINITY, f64::min);
    f.affine(rng.gen_range(0.5..2.0), 0.0).affine(1.0, -min.min(0.0) * 2.0)
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut with_common = 0;
    for seed in 0..50u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
        let domain = SetDescriptor::closed_interval(0.0, 2.0).map_err(e)?;
        let grid = GridSpec::uniform(0.0, 2.0, 201).map_err(e)?;
        let s1 = rng.gen_range(0.0..2.0);
        let s2 = if rng.gen_bool(0.3) { s1 } else { rng.gen_range(0.0..2.0) };
        let mut comps = vec![random_objective(&mut rng, &domain, &grid, s1)];
        if s1 == s2 && rng.gen() {
            comps.push(comps[0].affine(rng.gen_range(0.5..3.0), 0.0));
        } else {
            comps.push(random_objective(&mut rng, &domain, &grid, s2));
        }
        let f = VectorFn::new(comps).map_err(e)?;
        for i in 0..grid.len() {
            let v = f.values(&grid.point(i));
            ensure(v.iter().all(|y| *y >= 0.0), format!("seed {seed}: negative objective value {v:?}"))?;
        }
        let r = weakly_efficient_set(&f, &grid, DEFAULT_EW_TOL).map_err(e)?;
        let o = dominance_oracle(&f, &grid, DEFAULT_EW_TOL);
        ensure(r.weakly_efficient == o, format!("seed {seed}: scan and oracle differ"))?;
        ensure(check_union_inclusion(&r).passed(), format!("seed {seed}: argmin union not included"))?;
        let eq = check_intersection_equality(&r);
        ensure(!eq.failed(), format!("seed {seed}: {}", eq.detail))?;
        if eq.passed() {
            with_common += 1;
        }
    }
    let t = start.elapsed();
    within(t, 60.0, "50 instances")?;
    Ok(format!(
        "50 instances match the oracle; equality checked on {with_common} with a common argmin; {:.2}s",
        t.as_secs_f64()
    ))
}

fn structure_suite() -> Outcome {
    let expr = |s: &str, d: &SetDescriptor| ScalarFn::from_expr(&pconvex::Expr::parse(s).unwrap(), d.clone()).unwrap();
    let k = SetDescriptor::closed_interval(0.0, 2.0).map_err(e)?;
    let l = SetDescriptor::closed_interval(-1.0, 2.0).map_err(e)?;
    let hinge = "(x - 1 + abs(x - 1)) / 2";
    let cases = vec![
        ("hinge, x^2 on [0,2]", vec![expr(hinge, &k), expr("x^2", &k)], GridSpec::uniform(0.0, 2.0, 201), 0.5),
        ("hinge, x^2 on [0,2], p=1/4", vec![expr(hinge, &k), expr("x^2", &k)], GridSpec::uniform(0.0, 2.0, 201), 0.25),
        (
            "two-sided hinge, x^2 on [-1,2]",
            vec![expr("(x - 1 + abs(x - 1)) / 2 + (-x - 0.5 + abs(x + 0.5)) / 2", &l), expr("x^2", &l)],
            GridSpec::uniform(-1.0, 2.0, 301),
            0.5,
        ),
        (
            "hinge^2, |x| on [-1,2]",
            vec![expr("((x - 0.5 + abs(x - 0.5)) / 2)^2", &l), expr("abs(x)", &l)],
            GridSpec::uniform(-1.0, 2.0, 301),
            0.5,
        ),
    ];
    let budget = SearchBudget {
        pairs: 4_000,
        ..SearchBudget::default()
    };
    let mut notes = Vec::new();
    for (label, comps, grid, pv) in cases {
        let grid = grid.map_err(e)?;
        let f = VectorFn::new(comps).map_err(e)?;
        let pp = p(pv);
        let r = weakly_efficient_set(&f, &grid, DEFAULT_EW_TOL).map_err(e)?;
        ensure(r.values.iter().flatten().all(|v| *v >= 0.0), format!("{label}: F is not nonnegative"))?;
        let rm = is_rm_p_convex(&f, pp, &budget).map_err(e)?;
        ensure(!rm.is_falsified(), format!("{label}: not componentwise p-convex: {:?}", rm.witness()))?;
        let zero = check_zero_in_ew(&r).map_err(e)?;
        ensure(zero.passed(), format!("{label}: {}", zero.detail))?;
        let sc = check_scaling_closure(&r, pp, 64).map_err(e)?;
        ensure(sc.passed(), format!("{label}: {}", sc.detail))?;
        let fill = check_interval_fill(&r);
        ensure(fill.passed(), format!("{label}: {}", fill.detail))?;
        let conv = check_ew_pconvexity(&r, pp, &budget).map_err(e)?;
        ensure(!conv.is_falsified(), format!("{label}: E_W falsified {:?}", conv.witness()))?;
        let gapped = negative_control_indices(&r, pp).ok_or(format!("{label}: no negative control"))?;
        let set = ew_descriptor(&r.grid, &gapped).map_err(e)?;
        let xbar = r.weakly_efficient.iter().map(|&i| r.grid.point(i)[0]).fold(f64::MIN, f64::max);
        let control = falsify_set_pconvexity(
            &set,
            pp,
            &SearchBudget {
                hints: vec![(vec![xbar], vec![xbar])],
                ..budget.clone()
            },
        )
        .map_err(e)?;
        ensure(control.is_falsified(), format!("{label}: negative control not falsified"))?;
        notes.push(format!("{label}: |E_W|={}, {}", r.weakly_efficient.len(), sc.detail));
    }
    Ok(notes.join("; "))
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("wall_time_ms");
            m.values_mut().for_each(strip_timing);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

fn determinism() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances");
    let mut paths: Vec<PathBuf> = std::fs::read_dir(&dir)
        .map_err(e)?
        .filter_map(|d| d.ok().map(|d| d.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    ensure(!paths.is_empty(), "no bundled instances")?;
    for path in &paths {
        let inst = Instance::load(path).map_err(e)?;
        let render = || -> Result<String, String> {
            let mut v = serde_json::to_value(run_instance(&inst, 42)).map_err(e)?;
            strip_timing(&mut v);
            serde_json::to_string_pretty(&v).map_err(e)
        };
        let (a, b) = (render()?, render()?);
        ensure(a == b, format!("{} differs between runs", path.display()))?;
    }
    Ok(format!("{} bundled instances reproduce byte for byte", paths.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("square_shift witness and golden gap", square_shift_golden),
        ("neg_half_quad passes at p = 1/2", neg_half_quad_passes),
        ("explicit ball counterexample", ball_construction),
        ("interval and ball pass suite", pass_suite),
        ("downgrade on seeded sets", downgrade_suite),
        ("g minimizer golden values", g_function),
        ("weak-efficiency oracle equivalence", oracle_equivalence),
        ("weak-efficiency structure suite", structure_suite),
        ("report determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(msg) => println!("criterion {} PASS {name} ({secs:.2}s): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} FAIL {name} ({secs:.2}s): {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
