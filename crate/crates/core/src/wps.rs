//! Weighted projective spaces `CP_{w_0,…,w_k}` as identification targets.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::cone::LatticePolytope;
use crate::error::{Error, Result};
use crate::lattice::{IntMatrix, LatticeVector};
use crate::quotient::{quotient_polytope, ActionData};
use crate::semigroup::{hilbert_basis, GradedSystem};

/// Weights `(w_0, …, w_k)`, all positive with `gcd = 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::InvalidWeights("need at least two weights".into()));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidWeights("weights must be positive".into()));
        }
        let g = weights.iter().fold(0u64, |acc, w| acc.gcd(w));
        if g != 1 {
            return Err(Error::InvalidWeights(format!("weights have common factor {g}")));
        }
        Ok(Self(weights))
    }

    pub fn weights(&self) -> &[u64] {
        &self.0
    }

    /// Dimension `k` of `CP_{w_0,…,w_k}`.
    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    pub fn lcm(&self) -> u64 {
        self.0.iter().fold(1u64, |acc, w| acc.lcm(w))
    }

    /// Every `k` of the `k + 1` weights are coprime. Spaces that are not
    /// well formed are isomorphic to ones with smaller weights.
    pub fn is_well_formed(&self) -> bool {
        (0..self.0.len()).all(|skip| {
            self.0
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .fold(0u64, |acc, (_, w)| acc.gcd(w))
                == 1
        })
    }

    /// The well-formed weights of the same space: while some `k` weights
    /// share a factor `d`, divide them by `d`. The result is sorted.
    pub fn reduced(&self) -> WeightVector {
        let mut w = self.0.clone();
        loop {
            let step = (0..w.len()).find_map(|skip| {
                let d = w
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .fold(0u64, |acc, (_, x)| acc.gcd(x));
                (d > 1).then_some((skip, d))
            });
            let Some((skip, d)) = step else { break };
            for (i, x) in w.iter_mut().enumerate() {
                if i != skip {
                    *x /= d;
                }
            }
        }
        w.sort_unstable();
        WeightVector(w)
    }

    /// `CP_k` for unit weights, else `CP_{w_0,…,w_k}`.
    pub fn name(&self) -> String {
        if self.0.iter().all(|&w| w == 1) {
            format!("CP_{}", self.dimension())
        } else {
            let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
            format!("CP_{{{}}}", parts.join(","))
        }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// `A = [w_0 … w_k]` with the smallest `α` whose degree-1 invariants
/// generate the whole invariant ring.
pub fn wps_action(w: &WeightVector) -> Result<ActionData> {
    let row: Vec<BigInt> = w.0.iter().map(|&x| BigInt::from(x)).collect();
    let matrix = IntMatrix::from_rows(vec![row])?;
    let lcm = w.lcm();
    // Degree-1 generation needs every w_i to divide α, and (k-1)-fold
    // dilates of lattice polytopes are normal, so few candidates remain.
    let max_multiple = w.dimension().saturating_sub(1).max(1) as u64;
    for j in 1..=max_multiple {
        let alpha = LatticeVector::new(vec![BigInt::from(lcm * j)]);
        let system = GradedSystem::new(matrix.clone(), alpha.clone())?;
        let bound = system.certificate_degree()?.max(1);
        let basis = hilbert_basis(&system, bound)?;
        if basis.generators.iter().all(|g| g.degree == 1) {
            return ActionData::with_default_names(matrix, alpha);
        }
    }
    Err(Error::InvalidWeights(format!("no generating degree up to {}", lcm * max_multiple)))
}

/// The moment polytope of `wps_action(w)`.
pub fn wps_polytope(w: &WeightVector) -> Result<LatticePolytope> {
    Ok(quotient_polytope(&wps_action(w)?)?.polytope)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Rat;

    fn w(ws: &[u64]) -> WeightVector {
        WeightVector::new(ws.to_vec()).unwrap()
    }

    #[test]
    fn validation_and_names() {
        assert!(WeightVector::new(vec![1]).is_err());
        assert!(WeightVector::new(vec![0, 1]).is_err());
        assert!(WeightVector::new(vec![2, 4]).is_err());
        assert_eq!(w(&[1, 1, 2]).name(), "CP_{1,1,2}");
        assert_eq!(w(&[1, 1]).name(), "CP_1");
        assert!(w(&[1, 1, 2]).is_well_formed());
        assert!(!w(&[1, 2, 2]).is_well_formed());
        assert_eq!(w(&[1, 2, 2]).reduced(), w(&[1, 1, 1]));
        assert_eq!(w(&[2, 3, 6]).reduced(), w(&[1, 1, 1]));
        assert_eq!(w(&[1, 4, 6]).reduced(), w(&[1, 2, 3]));
        assert_eq!(w(&[3, 1, 2]).reduced(), w(&[1, 2, 3]));
    }

    #[test]
    fn default_linearizations() {
        assert_eq!(wps_action(&w(&[1, 1, 2])).unwrap().alpha(), &LatticeVector::from([2]));
        assert_eq!(wps_action(&w(&[1, 1])).unwrap().alpha(), &LatticeVector::from([1]));
        assert_eq!(wps_action(&w(&[1, 1, 1])).unwrap().alpha(), &LatticeVector::from([1]));
    }

    #[test]
    fn polytopes() {
        let p = wps_polytope(&w(&[1, 1, 2])).unwrap();
        let expected: Vec<Vec<Rat>> = [[0, 0], [0, 1], [2, 0]]
            .iter()
            .map(|v| v.iter().map(|&x| Rat::from_integer(x.into())).collect())
            .collect();
        assert_eq!(p.vertices(), expected.as_slice());
        assert_eq!(p.lattice_points().unwrap().len(), 4);
        let seg = wps_polytope(&w(&[1, 1])).unwrap();
        assert_eq!(seg.lattice_points().unwrap().len(), 2);
        let tri = wps_polytope(&w(&[1, 1, 1])).unwrap();
        assert_eq!(tri.lattice_points().unwrap().len(), 3);
    }
}
