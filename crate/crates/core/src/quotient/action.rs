use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{IntMatrix, LatticeVector};
use crate::semigroup::default_names;

/// A torus action on `C^n` (action matrix `A`, one row per torus factor)
/// together with a linearization `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionData {
    matrix: IntMatrix,
    names: Vec<String>,
    alpha: LatticeVector,
}

impl ActionData {
    pub fn new(matrix: IntMatrix, names: Vec<String>, alpha: LatticeVector) -> Result<Self> {
        if names.len() != matrix.ncols() {
            return Err(Error::InvalidAction(format!(
                "{} variable names for {} columns",
                names.len(),
                matrix.ncols()
            )));
        }
        if let Some(n) = names.iter().find(|n| n.is_empty()) {
            return Err(Error::InvalidAction(format!("empty variable name {n:?}")));
        }
        let mut seen = BTreeSet::new();
        if let Some(n) = names.iter().find(|n| !seen.insert(n.as_str())) {
            return Err(Error::InvalidAction(format!("duplicate variable name {n:?}")));
        }
        if alpha.dim() != matrix.nrows() {
            return Err(Error::InvalidAction(format!(
                "linearization has {} entries, expected {}",
                alpha.dim(),
                matrix.nrows()
            )));
        }
        Ok(Self { matrix, names, alpha })
    }

    /// Uses `X, Y, Z, W` (or `X0, X1, …`) as variable names.
    pub fn with_default_names(matrix: IntMatrix, alpha: LatticeVector) -> Result<Self> {
        let names = default_names(matrix.ncols());
        Self::new(matrix, names, alpha)
    }

    pub fn from_i64s(rows: &[&[i64]], alpha: &[i64]) -> Result<Self> {
        Self::with_default_names(IntMatrix::from_i64_rows(rows)?, LatticeVector::from_i64s(alpha))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn alpha(&self) -> &LatticeVector {
        &self.alpha
    }

    pub fn nvars(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn rank(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn with_alpha(&self, alpha: LatticeVector) -> Result<Self> {
        Self::new(self.matrix.clone(), self.names.clone(), alpha)
    }
}

/// Which exponent vectors count as invariant sections.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    /// Nonnegative exponents: honest polynomial invariants.
    #[default]
    Polynomial,
    /// Integer exponents read off the free variables of the reduced echelon
    /// form of `[A | α]`.
    Lattice,
}

impl Mode {
    pub fn other(self) -> Self {
        match self {
            Mode::Polynomial => Mode::Lattice,
            Mode::Lattice => Mode::Polynomial,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Polynomial => "polynomial",
            Mode::Lattice => "lattice",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "polynomial" => Ok(Mode::Polynomial),
            "lattice" => Ok(Mode::Lattice),
            other => Err(Error::InvalidAction(format!("unknown mode {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let m = IntMatrix::from_i64_rows(&[[1, 1]]).unwrap();
        let a = LatticeVector::from_i64s(&[1]);
        assert!(ActionData::new(m.clone(), vec!["a".into(), "a".into()], a.clone()).is_err());
        assert!(ActionData::new(m.clone(), vec!["a".into()], a.clone()).is_err());
        assert!(ActionData::new(m.clone(), vec!["a".into(), "b".into()], LatticeVector::from_i64s(&[1, 2])).is_err());
        let ok = ActionData::with_default_names(m, a).unwrap();
        assert_eq!(ok.names(), ["X", "Y"]);
        assert_eq!("lattice".parse::<Mode>().unwrap(), Mode::Lattice);
        assert!("other".parse::<Mode>().is_err());
    }
}
