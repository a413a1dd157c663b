//! Exact computation of GIT quotients of algebraic torus actions on affine
//! space: invariant monomials, invariant-ring generators, chart rings of the
//! quotient, unstable loci, moment polytopes and their normal fans, and
//! identification of the quotient as a weighted projective space.
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals).

pub mod cone;
pub mod error;
pub mod lattice;
pub mod quotient;
pub mod report;
pub mod semigroup;
pub mod wps;

pub use error::{Error, Result};
pub use cone::{Fan, LatticePolytope, RationalCone};
pub use lattice::{IntMatrix, LatticeVector, Rat};
pub use quotient::{ActionData, Mode, QuotientReport};
pub use semigroup::{GradedMonomial, HilbertBasisResult, LaurentMonomial, MonomialAlgebra};
pub use wps::WeightVector;
