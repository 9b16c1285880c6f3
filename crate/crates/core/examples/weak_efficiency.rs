//! Weakly efficient points of a bi-objective problem on a grid and the
//! structural checks that go with them.

use pconvex::weff::run_structure_suite;
use pconvex::{weakly_efficient_set, Expr, GridSpec, PExponent, ScalarFn, SearchBudget, SetDescriptor, VectorFn};

fn main() -> pconvex::Result<()> {
    let k = SetDescriptor::closed_interval(0.0, 2.0)?;
    let hinge = ScalarFn::from_expr(&Expr::parse("(x - 1 + abs(x - 1)) / 2")?, k.clone())?;
    let square = ScalarFn::from_expr(&Expr::parse("x^2")?, k)?;
    let f = VectorFn::new(vec![hinge, square])?;
    let grid = GridSpec::uniform(0.0, 2.0, 201)?;

    let mut report = weakly_efficient_set(&f, &grid, 1e-12)?;
    let ew = report.weakly_efficient_points();
    println!(
        "{} of {} grid points weakly efficient, from {:?} to {:?}",
        ew.len(),
        grid.len(),
        ew.first().unwrap(),
        ew.last().unwrap()
    );

    run_structure_suite(&mut report, &f, PExponent::new(0.5)?, &SearchBudget::default())?;
    for line in &report.structural_checks {
        println!("  {:<24} {:?}  {}", line.name, line.status, line.detail);
    }
    Ok(())
}
