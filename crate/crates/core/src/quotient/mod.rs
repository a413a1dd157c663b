//! The quotient pipeline: invariant sections, the invariant ring, its chart
//! atlas, the unstable locus, the moment polytope and fan, identification
//! and chamber diagnostics.

pub mod action;
pub mod chamber;
pub mod identify;
pub mod invariants;
pub mod polytope;
pub mod report;
pub mod sweep;
pub mod unstable;

pub use action::{ActionData, Mode};
pub use chamber::{chamber_test, ChamberReport, ChamberStatus};
pub use identify::{identify_wps, WpsIdentification, DEFAULT_MAX_WEIGHT};
pub use invariants::{check_invariance, graded_monomials, invariant_ring, GradedSolutions, LatticeCoset};
pub use polytope::{generator_polytope, quotient_fan, quotient_polytope, QuotientPolytope};
pub use report::{quotient_report, ModeComparison, QuotientReport, DEFAULT_DEGREE_BOUND};
pub use sweep::{box_points, sweep, SweepGroup, SweepResult};
pub use unstable::{unstable_locus, UnstableLocus};
