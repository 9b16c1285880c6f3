use pconvex::certify::check_downgrade;
use pconvex::weff::{check_union_inclusion, strictly_dominates};
use pconvex::{
    construct_ball_counterexample, falsify_fn_pconvexity, falsify_set_pconvexity, p_combine, weakly_efficient_set,
    Boundary, Expr, GridSpec, IntervalShape, PExponent, QNorm, ScalarFn, SearchBudget, SetDescriptor, VectorFn,
};
use proptest::prelude::*;

fn small_budget(seed: u64) -> SearchBudget {
    SearchBudget {
        grid_per_axis: 21,
        random_samples: 20,
        pairs: 300,
        lambda_grid: 16,
        ..SearchBudget::default()
    }
    .with_seed(seed)
}

fn shape() -> impl Strategy<Value = IntervalShape> {
    prop::sample::select(IntervalShape::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn intervals_through_origin_survive(s in shape(), a in -3.0..0.0f64, b in 0.01..3.0f64, p in 0.05..1.0f64, seed: u64) {
        let set = SetDescriptor::interval_shape(s, a, b).unwrap();
        let v = falsify_set_pconvexity(&set, PExponent::new(p).unwrap(), &small_budget(seed)).unwrap();
        prop_assert!(!v.is_falsified(), "{:?}", v.witness());
    }

    #[test]
    fn balls_containing_origin_survive(cx in -0.5..0.5f64, cy in -0.5..0.5f64, extra in 0.05..1.0f64, p in 0.05..1.0f64, seed: u64) {
        let r = (cx * cx + cy * cy).sqrt() + extra;
        let set = SetDescriptor::ball(QNorm::L2, vec![cx, cy], r, Boundary::Open).unwrap();
        let v = falsify_set_pconvexity(&set, PExponent::new(p).unwrap(), &small_budget(seed)).unwrap();
        prop_assert!(!v.is_falsified(), "{:?}", v.witness());
    }

    #[test]
    fn small_far_balls_fail_below_half(angle in 0.0..6.28f64, norm in 1.0..5.0f64, frac in 0.05..0.5f64, p in 0.05..0.49f64) {
        let center = vec![norm * angle.cos(), norm * angle.sin()];
        let delta = frac * norm;
        let eps = 0.5 * delta / norm;
        let c = construct_ball_counterexample(&center, delta, QNorm::L2, PExponent::new(p).unwrap(), 1.0, eps).unwrap();
        prop_assert!(c.ball.contains(&c.z).unwrap());
        prop_assert!(!c.ball.contains(&c.witness.point).unwrap());
        prop_assert!(c.witness.reproduces(c.witness.replay_set(&c.ball).unwrap()));
    }

    #[test]
    fn witnesses_replay(lo in 0.2..2.0f64, width in 0.1..2.0f64, p in 0.05..0.95f64, seed: u64) {
        // intervals away from the origin are never p-convex for p < 1
        let set = SetDescriptor::closed_interval(lo, lo + width).unwrap();
        let v = falsify_set_pconvexity(&set, PExponent::new(p).unwrap(), &small_budget(seed)).unwrap();
        let w = v.witness().expect("falsified");
        prop_assert!(w.reproduces(w.replay_set(&set).unwrap()));
        let z = p_combine(&w.x, &w.y, w.lambda, PExponent::new(p).unwrap()).unwrap();
        prop_assert_eq!(z, w.point.clone());
    }

    #[test]
    fn downgrade_holds(a in -2.0..0.0f64, b in 0.1..2.0f64, p in 0.1..1.0f64, k in 1.0..8.0f64, seed: u64) {
        let set = SetDescriptor::interval_shape(IntervalShape::OpenClosed, a - 0.1, b).unwrap();
        let p = PExponent::new(p).unwrap();
        let p1 = PExponent::new(p.value() / k).unwrap();
        prop_assert!(check_downgrade(&set, p, p1, &small_budget(seed)).unwrap().holds());
    }

    #[test]
    fn convex_with_nonpositive_origin_value_is_p_convex(c in 0.0..2.0f64, a in 0.1..3.0f64, p in 0.05..1.0f64, seed: u64) {
        let k = SetDescriptor::closed_interval(-1.0, 2.0).unwrap();
        let f = ScalarFn::from_expr(&Expr::parse(&format!("{a} * (x - {c})^2 - {}", a * c * c)).unwrap(), k).unwrap();
        let v = falsify_fn_pconvexity(&f, PExponent::new(p).unwrap(), &small_budget(seed)).unwrap();
        prop_assert!(!v.is_falsified(), "{:?}", v.witness());
    }

    #[test]
    fn weakly_efficient_points_are_undominated(s1 in -1.0..2.0f64, s2 in -1.0..2.0f64, n in 11usize..121) {
        let k = SetDescriptor::closed_interval(-1.0, 2.0).unwrap();
        let f = VectorFn::new(vec![
            ScalarFn::from_expr(&Expr::parse(&format!("abs(x - {s1})")).unwrap(), k.clone()).unwrap(),
            ScalarFn::from_expr(&Expr::parse(&format!("(x - {s2})^2")).unwrap(), k).unwrap(),
        ]).unwrap();
        let grid = GridSpec::uniform(-1.0, 2.0, n).unwrap();
        let r = weakly_efficient_set(&f, &grid, 1e-12).unwrap();
        prop_assert!(check_union_inclusion(&r).passed());
        for i in 0..grid.len() {
            let bi = f.values(&grid.point(i));
            let dominated = (0..grid.len()).any(|j| strictly_dominates(&f.values(&grid.point(j)), &bi, 1e-12));
            prop_assert_eq!(r.is_weakly_efficient(i), !dominated);
        }
    }
}
