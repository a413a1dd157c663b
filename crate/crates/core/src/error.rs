use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("solution set is unbounded: {{x >= 0 : Mx = 0}} contains a nonzero vector")]
    UnboundedSolutionSet,
    #[error("polytope is unbounded")]
    UnboundedPolytope,
    #[error("degree slices are unbounded: the grading cone is not pointed")]
    UnboundedSlice,
    #[error("the degree-1 slice polytope is empty")]
    EmptyPolytope,
    #[error("cone is not strongly convex")]
    NotStronglyConvex,
    #[error("polytope has dimension {dim} in an ambient space of dimension {ambient}")]
    NotFullDimensional { dim: usize, ambient: usize },
    #[error("degree bound must be at least 1")]
    InvalidDegreeBound,
    #[error("unstable loci are only defined for polynomial-mode generators")]
    LatticeModeUnsupported,
    #[error("torus sample has a zero entry")]
    ZeroTorusEntry,
    #[error("no degree up to {0} makes the lattice-mode solutions integral")]
    NonIntegralLattice(u64),
    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),
    #[error("invalid action data: {0}")]
    InvalidAction(String),
    #[error("index {index} out of range for {len} items")]
    IndexOutOfRange { index: usize, len: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
