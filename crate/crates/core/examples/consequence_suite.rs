//! Structural consequences of p-convexity for a function, plus the
//! homogeneous-implies-convex check.

use pconvex::certify::{check_homogeneous_convexity, run_consequence_suite};
use pconvex::{CatalogEntry, PExponent, QNorm, ScalarFn, SearchBudget, SetDescriptor};

fn main() -> pconvex::Result<()> {
    let budget = SearchBudget::default();
    let p = PExponent::new(0.5)?;
    let unit = SetDescriptor::closed_interval(0.0, 1.0)?;
    for f in [
        ScalarFn::from_catalog(CatalogEntry::NegHalfQuad, unit.clone()),
        ScalarFn::from_catalog(CatalogEntry::SqrtMinusTwo, unit),
    ] {
        let report = run_consequence_suite(&f, p, &budget)?;
        println!("{} (all hold: {})", f.label(), report.all_hold());
        for line in &report.lines {
            println!("  {:<28} {:?}  {}", line.name, line.status, line.detail);
        }
    }

    let norm = ScalarFn::from_catalog(CatalogEntry::QNormFn { q: QNorm::L1 }, SetDescriptor::orthant_cone(2)?);
    let line = check_homogeneous_convexity(&norm, PExponent::new(0.25)?, &budget)?;
    println!("\nl1 norm on the orthant: {:?}  {}", line.status, line.detail);
    Ok(())
}
