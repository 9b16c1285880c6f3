//! The built-in function catalog, expressions and Jensen gaps.

use pconvex::{
    falsify_fn_pconvexity, pfuncs::jensen_gap, CatalogEntry, Expr, PExponent, QNorm, ScalarFn, SearchBudget,
    SetDescriptor,
};

fn main() -> pconvex::Result<()> {
    let entries = [
        CatalogEntry::LinearSum { alpha: 1.5 },
        CatalogEntry::QNormFn { q: QNorm::L2 },
        CatalogEntry::SqrtMinusTwo,
        CatalogEntry::SquareShift,
        CatalogEntry::NegHalfQuad,
    ];
    let budget = SearchBudget::default();
    for entry in entries {
        for claim in entry.claims() {
            let f = ScalarFn::from_catalog(entry, claim.domain.clone());
            let v = falsify_fn_pconvexity(&f, claim.p, &budget)?;
            println!(
                "{entry} p = {}: expected {:?}, falsified {}",
                claim.p.value(),
                claim.expectation,
                v.is_falsified()
            );
        }
    }

    let half = PExponent::new(0.5)?;
    let square_shift = ScalarFn::from_catalog(CatalogEntry::SquareShift, SetDescriptor::closed_interval(0.0, 2.0)?);
    println!("\nsquare_shift gap at x = 0, y = 1, lambda = 1/4: {}", jensen_gap(&square_shift, &[0.0], &[1.0], 0.25, half)?);

    let expr = Expr::parse("abs(x1) + 2 * abs(x2)")?;
    let weighted = ScalarFn::from_expr(&expr, SetDescriptor::orthant_cone(2)?)?;
    println!("|x1| + 2|x2| at (1, 3): {}", weighted.eval(&[1.0, 3.0])?);
    Ok(())
}
