//! p-combinations, the scaling function g and its minimizer.

use pconvex::{conjugate_coefficient, g_argmin, p_combine, pcore::sample_p_segment, scaling_g, PExponent, SegmentKind};

fn main() -> pconvex::Result<()> {
    for p in [0.25, 0.5, 0.75] {
        let p = PExponent::new(p)?;
        let (lambda, g) = g_argmin(p)?;
        println!("p = {}: g is smallest at lambda = {lambda:.6}, g = {g:.6}", p.value());
        for lambda in [0.0, 0.3, 0.7, 1.0] {
            let mu = conjugate_coefficient(lambda, p)?;
            println!("  lambda = {lambda}, mu = {mu:.6}, g = {:.6}", scaling_g(lambda, p)?);
        }
    }

    let half = PExponent::new(0.5)?;
    let z = p_combine(&[1.0, 0.0], &[0.0, 1.0], 0.25, half)?;
    println!("\n1/4 (1,0) + mu (0,1) at p = 1/2: {z:?}");

    println!("\n[x, y)_p between (2,0) and (0,2), p = 1/2:");
    for pt in sample_p_segment(&[2.0, 0.0], &[0.0, 2.0], half, 6, SegmentKind::HalfOpen)? {
        println!("  ({:.4}, {:.4})", pt[0], pt[1]);
    }
    Ok(())
}
