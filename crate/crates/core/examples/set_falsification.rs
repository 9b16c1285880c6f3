//! Searching sets for p-convexity counterexamples, and the explicit
//! counterexample for small balls away from the origin.

use pconvex::{
    construct_ball_counterexample, falsify_set_pconvexity, Boundary, IntervalShape, PExponent, QNorm, SearchBudget,
    SetDescriptor,
};

fn report(label: &str, set: &SetDescriptor, p: f64) -> pconvex::Result<()> {
    let verdict = falsify_set_pconvexity(set, PExponent::new(p)?, &SearchBudget::default())?;
    match verdict.witness() {
        Some(w) => println!(
            "{label}, p = {p}: counterexample x = {:?}, y = {:?}, lambda = {:.4}, point {:?} (distance {:.3e})",
            w.x, w.y, w.lambda, w.point, w.violation
        ),
        None => println!(
            "{label}, p = {p}: nothing found in {} samples",
            verdict.samples_used().unwrap_or(0)
        ),
    }
    Ok(())
}

fn main() -> pconvex::Result<()> {
    let half_open = SetDescriptor::interval_shape(IntervalShape::OpenClosed, -1.0, 2.0)?;
    report("(-1, 2]", &half_open, 0.25)?;

    let away = SetDescriptor::interval_shape(IntervalShape::Closed, 1.0, 2.0)?;
    report("[1, 2]", &away, 0.5)?;
    report("[1, 2]", &away, 1.0)?;

    let disk = SetDescriptor::ball(QNorm::L2, vec![0.2, 0.1], 1.0, Boundary::Open)?;
    report("disk around 0", &disk, 0.25)?;

    let c = construct_ball_counterexample(&[1.0, 0.0], 0.5, QNorm::L2, PExponent::new(0.25)?, 1.0, 0.25)?;
    println!(
        "\nB((1,0), 1/2) at p = 1/4: z = {:?} is inside, {:?} is outside by {}",
        c.z, c.witness.point, c.witness.violation
    );
    let replayed = c.witness.replay_set(&c.ball)?;
    println!("replay reproduces the witness: {}", c.witness.reproduces(replayed));
    Ok(())
}
