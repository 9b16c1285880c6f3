//! Building sets from intersections, sums, scalings and tubes.

use pconvex::{falsify_set_pconvexity, Boundary, PExponent, QNorm, SearchBudget, SetDescriptor};

fn main() -> pconvex::Result<()> {
    let disk = SetDescriptor::ball(QNorm::L2, vec![0.0, 0.0], 1.0, Boundary::Closed)?;
    let square = SetDescriptor::ball(QNorm::INF, vec![0.5, 0.5], 0.5, Boundary::Closed)?;
    let cone = SetDescriptor::orthant_cone(2)?;

    let lens = SetDescriptor::intersection(vec![disk.clone(), square.clone()])?;
    let sum = SetDescriptor::minkowski_sum(disk.clone(), square.clone())?;
    let flipped = SetDescriptor::scale(-2.0, square.clone())?;
    let thick = SetDescriptor::tube(disk.clone(), 0.25, QNorm::L2)?;
    let quadrant_disk = SetDescriptor::intersection(vec![disk, cone])?;

    let budget = SearchBudget {
        pairs: 2_000,
        ..SearchBudget::default()
    };
    let p = PExponent::new(0.5)?;
    for (label, set) in [
        ("disk ∩ square", &lens),
        ("disk + square", &sum),
        ("-2 · square", &flipped),
        ("tube(disk, 1/4)", &thick),
        ("disk ∩ orthant", &quadrant_disk),
    ] {
        let bb = set.bounding_box();
        println!(
            "{label}: closed form {}, box {:?}..{:?}, (0.4, 0.4) member {}, p = 1/2 counterexample {}",
            set.closed_form().is_some(),
            bb.lo,
            bb.hi,
            set.contains(&[0.4, 0.4])?,
            falsify_set_pconvexity(set, p, &budget)?.is_falsified()
        );
    }
    Ok(())
}
