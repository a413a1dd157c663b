//! Exact integer and rational linear algebra.

pub mod dd;
pub mod enumerate;
pub mod hnf;
pub mod matrix;
pub mod polyhedron;
pub mod rational;
pub mod vector;

pub use dd::{cone_from_inequalities, ConeGenerators};
pub use enumerate::{enumerate_nonneg_solutions, has_nonneg_solution, nonneg_circuits, slice_polyhedron, SlicePolyhedron};
pub use hnf::{hermite_normal_form, integer_kernel, lattice_basis, saturation, solve_integer, trailing_echelon_basis};
pub use matrix::IntMatrix;
pub use polyhedron::{lattice_points, InequalitySystem};
pub use rational::Rat;
pub use vector::LatticeVector;
