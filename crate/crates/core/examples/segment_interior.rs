//! Interior points along p-segments, and p-convexity of closure and interior.

use pconvex::certify::{check_closure_pconvexity, check_interior_pconvexity, check_segment_interior};
use pconvex::{Boundary, PExponent, QNorm, SearchBudget, SetDescriptor};

fn main() -> pconvex::Result<()> {
    let p = PExponent::new(0.5)?;
    let disk = SetDescriptor::ball(QNorm::L2, vec![0.1, 0.0], 1.0, Boundary::Open)?;

    let seg = check_segment_interior(&disk, p, &[0.2, 0.1], &[1.05, 0.0], 0.1, 200)?;
    println!("[x, y)_p stays interior: {} ({} points checked)", seg.holds(), seg.checked);

    let budget = SearchBudget {
        pairs: 2_000,
        ..SearchBudget::default()
    };
    let closure = check_closure_pconvexity(&disk, p, &budget)?;
    let interior = check_interior_pconvexity(&disk, p, 0.05, &budget)?;
    println!("closure counterexample: {}", closure.is_falsified());
    println!("interior counterexample: {}", interior.is_falsified());
    Ok(())
}
