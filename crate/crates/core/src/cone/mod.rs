//! Rational polyhedral cones, fans and lattice polytopes.

pub mod cone;
pub mod fan;
pub mod polytope;

pub use cone::{dual_cone, faces, intersect, is_strongly_convex, RationalCone};
pub use fan::{validate_fan, Fan, FanViolation};
pub use polytope::{lattice_equivalent, normal_fan, LatticePolytope, UnimodularAffineMap};
