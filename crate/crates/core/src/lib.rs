//! p-convex sets and functions for `0 < p <= 1`: combination arithmetic,
//! set descriptors, falsification search for p-convexity, and weak
//! efficiency of vector objectives on grids.
//!
//! ```
//! use pconvex::{falsify_fn_pconvexity, CatalogEntry, PExponent, ScalarFn, SearchBudget, SetDescriptor};
//!
//! let domain = SetDescriptor::closed_interval(0.0, 2.0).unwrap();
//! let f = ScalarFn::from_catalog(CatalogEntry::SquareShift, domain);
//! let verdict = falsify_fn_pconvexity(&f, PExponent::new(0.5).unwrap(), &SearchBudget::default()).unwrap();
//! assert!(verdict.is_falsified());
//! ```

pub mod certify;
pub mod cli;
pub mod error;
pub mod expr;
pub mod instance;
pub mod pcore;
pub mod pfuncs;
pub mod psets;
pub mod report;
pub mod weff;

pub use certify::{
    check_closure_pconvexity, check_cone_equivalence, check_downgrade, check_homogeneous_convexity,
    check_interior_pconvexity, check_segment_interior, construct_ball_counterexample, falsify_fn_pconvexity,
    falsify_set_pconvexity, run_consequence_suite, SearchBudget, Verdict, Witness, WitnessKind,
};
pub use error::{Error, Result};
pub use expr::Expr;
pub use instance::Instance;
pub use pcore::{conjugate_coefficient, g_argmin, lambda_grid, p_combine, scaling_g, PCoefficients, PExponent, SegmentKind};
pub use pfuncs::{CatalogEntry, ScalarFn, VectorFn};
pub use psets::{Bound, Boundary, BoundingBox, IntervalShape, QNorm, SetDescriptor};
pub use report::{CheckLine, CheckStatus};
pub use weff::{weakly_efficient_set, Axis, EfficiencyReport, GridSpec};
