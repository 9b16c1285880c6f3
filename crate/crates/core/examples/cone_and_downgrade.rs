//! Cones versus additive closure, and passing from p to a smaller exponent.

use pconvex::certify::{check_cone_equivalence, check_downgrade};
use pconvex::{Boundary, PExponent, QNorm, SearchBudget, SetDescriptor};

fn main() -> pconvex::Result<()> {
    let budget = SearchBudget::default();
    let p = PExponent::new(0.5)?;

    let orthant = SetDescriptor::orthant_cone(2)?;
    let disk = SetDescriptor::ball(QNorm::L2, vec![0.0, 0.0], 1.0, Boundary::Closed)?;
    for (label, set) in [("orthant", &orthant), ("unit disk", &disk)] {
        let r = check_cone_equivalence(set, p, &budget)?;
        println!(
            "{label}: K + K ⊆ K {}, cone {}, p-convex {}, consistent {}",
            r.additive_closure,
            r.cone,
            !r.p_convex.is_falsified(),
            r.consistent
        );
    }

    let tilted = SetDescriptor::ball(QNorm::L1, vec![0.3, -0.2], 1.0, Boundary::Open)?;
    for p1 in [1.0, 0.5, 0.25, 0.1] {
        let r = check_downgrade(&tilted, PExponent::ONE, PExponent::new(p1)?, &budget)?;
        println!("tilted l1 ball, 1 -> {p1}: holds {}", r.holds());
    }
    Ok(())
}
