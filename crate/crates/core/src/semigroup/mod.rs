//! Monomial semigroup algebras: Hilbert bases of graded semigroups, chart
//! rings of `Proj`, and isomorphism tests between monomial algebras.

pub mod algebra;
pub mod hilbert;
pub mod monomial;

pub use algebra::{atlas_isomorphic, chart_atlas, chart_ring, in_semigroup, monomial_isomorphic, MonomialAlgebra, MonomialWitness};
pub use hilbert::{hilbert_basis, in_graded_semigroup, GradedSystem, HilbertBasisResult};
pub use monomial::{default_names, GradedMonomial, LaurentMonomial, MonomialDisplay};
