use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::lattice::LatticeVector;

/// A Laurent monomial `Z^m` with possibly negative exponents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentMonomial {
    pub exponents: LatticeVector,
}

impl LaurentMonomial {
    pub fn new(exponents: LatticeVector) -> Self {
        Self { exponents }
    }

    pub fn from_i64s(exponents: &[i64]) -> Self {
        Self::new(LatticeVector::from_i64s(exponents))
    }

    pub fn dim(&self) -> usize {
        self.exponents.dim()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_zero()
    }

    pub fn inverse(&self) -> Self {
        Self::new(-&self.exponents)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay {
            names,
            exponents: &self.exponents,
        }
    }
}

/// An invariant section: exponent vector `m` in degree `d`, with `A·m = α·d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedMonomial {
    pub exponents: LatticeVector,
    pub degree: u64,
}

impl GradedMonomial {
    pub fn new(exponents: LatticeVector, degree: u64) -> Self {
        Self { exponents, degree }
    }

    pub fn from_i64s(exponents: &[i64], degree: u64) -> Self {
        Self::new(LatticeVector::from_i64s(exponents), degree)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay {
            names,
            exponents: &self.exponents,
        }
    }
}

/// Generator order: ascending degree, then lex monomial order (the
/// monomial with the larger leading exponent first).
impl Ord for GradedMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for GradedMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

pub struct MonomialDisplay<'a> {
    names: &'a [String],
    exponents: &'a [BigInt],
}

fn product(names: &[String], factors: &[(usize, BigInt)]) -> String {
    let short = names.iter().all(|n| n.chars().count() == 1);
    let parts: Vec<String> = factors
        .iter()
        .map(|(i, e)| {
            if e.is_one() {
                names[*i].clone()
            } else {
                format!("{}^{}", names[*i], e)
            }
        })
        .collect();
    parts.join(if short { "" } else { "*" })
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num: Vec<(usize, BigInt)> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_positive())
            .map(|(i, e)| (i, e.clone()))
            .collect();
        let den: Vec<(usize, BigInt)> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_negative())
            .map(|(i, e)| (i, -e))
            .collect();
        let top = if num.is_empty() {
            "1".to_string()
        } else {
            product(self.names, &num)
        };
        if den.is_empty() {
            write!(f, "{top}")
        } else {
            write!(f, "{top}/{}", product(self.names, &den))
        }
    }
}

/// Default variable names: `X, Y, Z, W` for up to four variables, else
/// `X0, X1, …`.
pub fn default_names(n: usize) -> Vec<String> {
    if n <= 4 {
        ["X", "Y", "Z", "W"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (0..n).map(|i| format!("X{i}")).collect()
    }
}
