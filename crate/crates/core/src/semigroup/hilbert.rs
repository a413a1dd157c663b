use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::monomial::GradedMonomial;
use crate::error::{Error, Result};
use crate::lattice::{enumerate_nonneg_solutions, has_nonneg_solution, nonneg_circuits, IntMatrix, LatticeVector};

/// The graded semigroup `{(m, d) : A·m = α·d, m ∈ N^n, d ∈ N}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSystem {
    matrix: IntMatrix,
    alpha: LatticeVector,
}

impl GradedSystem {
    pub fn new(matrix: IntMatrix, alpha: LatticeVector) -> Result<Self> {
        if alpha.dim() != matrix.nrows() {
            return Err(Error::DimensionMismatch {
                expected: matrix.nrows(),
                found: alpha.dim(),
            });
        }
        Ok(Self { matrix, alpha })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn alpha(&self) -> &LatticeVector {
        &self.alpha
    }

    pub fn nvars(&self) -> usize {
        self.matrix.ncols()
    }

    /// `[A | −α]`, whose nonnegative kernel is the semigroup.
    pub fn homogeneous_matrix(&self) -> IntMatrix {
        self.matrix.with_column(&(-&self.alpha)).expect("alpha matches row count")
    }

    /// All `m ∈ N^n` with `A·m = α·d`, in ascending lex order.
    pub fn slice(&self, d: u64) -> Result<Vec<LatticeVector>> {
        let rhs = self.alpha.scale(&BigInt::from(d));
        enumerate_nonneg_solutions(&self.matrix, &rhs).map_err(|e| match e {
            Error::UnboundedSolutionSet => Error::UnboundedSlice,
            e => e,
        })
    }

    /// Degree past which no irreducible element exists.
    ///
    /// An irreducible `x` either is an extreme ray or lies in the half-open
    /// parallelepiped spanned by `rank` linearly independent rays
    /// (Carathéodory), so its degree is below the sum of the `rank` largest
    /// ray degrees.
    pub fn certificate_degree(&self) -> Result<u64> {
        if !nonneg_circuits(&self.matrix).is_empty() {
            return Err(Error::UnboundedSlice);
        }
        let rays = nonneg_circuits(&self.homogeneous_matrix());
        if rays.is_empty() {
            return Ok(0);
        }
        let n = self.nvars();
        let mut degrees: Vec<u64> = rays.iter().map(|r| r[n].to_u64().unwrap_or(u64::MAX)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let rank = IntMatrix::from_lattice_rows(&rays).expect("nonempty").rank();
        let top: u64 = degrees[..rank].iter().fold(0u64, |acc, &d| acc.saturating_add(d));
        Ok(degrees[0].max(top - 1))
    }
}

/// Irreducible elements of a graded semigroup up to `verified_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasisResult {
    pub generators: Vec<GradedMonomial>,
    pub verified_degree: u64,
    /// True when the certificate degree is within the bound, so the list is
    /// the whole Hilbert basis.
    pub complete: bool,
    pub certificate_degree: u64,
}

impl HilbertBasisResult {
    pub fn max_degree(&self) -> u64 {
        self.generators.iter().map(|g| g.degree).max().unwrap_or(0)
    }
}

/// Enumerate-and-reduce: scan degree slices `1..=min(bound, certificate)` and
/// keep every element not dominated by a generator of smaller degree.
///
/// The semigroup is saturated, so `x` is reducible iff some irreducible `g`
/// of smaller degree has `g <= x` coordinatewise.
pub fn hilbert_basis(system: &GradedSystem, degree_bound: u64) -> Result<HilbertBasisResult> {
    if degree_bound < 1 {
        return Err(Error::InvalidDegreeBound);
    }
    let certificate = system.certificate_degree()?;
    let top = certificate.min(degree_bound);
    let mut generators: Vec<GradedMonomial> = Vec::new();
    for d in 1..=top {
        let fresh: Vec<GradedMonomial> = system
            .slice(d)?
            .into_iter()
            .filter(|x| !generators.iter().any(|g| g.degree < d && x.dominates(&g.exponents)))
            .map(|x| GradedMonomial::new(x, d))
            .collect();
        log::debug!("degree {d}: {} new irreducible elements", fresh.len());
        generators.extend(fresh);
    }
    generators.sort();
    Ok(HilbertBasisResult {
        generators,
        verified_degree: degree_bound,
        complete: certificate <= degree_bound,
        certificate_degree: certificate,
    })
}

/// Whether `(m, d)` is a nonnegative integer combination of `gens`.
pub fn in_graded_semigroup(gens: &[GradedMonomial], element: &GradedMonomial) -> Result<bool> {
    if gens.is_empty() {
        return Ok(element.exponents.is_zero() && element.degree == 0);
    }
    let n = element.exponents.dim();
    let rows: Vec<Vec<BigInt>> = (0..=n)
        .map(|i| {
            gens.iter()
                .map(|g| if i < n { g.exponents[i].clone() } else { BigInt::from(g.degree) })
                .collect()
        })
        .collect();
    let m = IntMatrix::from_rows(rows)?;
    let mut b = element.exponents.to_vec();
    b.push(BigInt::from(element.degree));
    has_nonneg_solution(&m, &b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn system(rows: &[&[i64]], alpha: &[i64]) -> GradedSystem {
        GradedSystem::new(IntMatrix::from_i64_rows(rows).unwrap(), LatticeVector::from_i64s(alpha)).unwrap()
    }

    fn exps(r: &HilbertBasisResult) -> Vec<(Vec<i64>, u64)> {
        r.generators.iter().map(|g| (g.exponents.to_i64s().unwrap(), g.degree)).collect()
    }

    #[test]
    fn weighted_line() {
        let r = hilbert_basis(&system(&[&[1, 1, 2]], &[2]), 8).unwrap();
        assert!(r.complete);
        assert_eq!(
            exps(&r),
            vec![(vec![2, 0, 0], 1), (vec![1, 1, 0], 1), (vec![0, 2, 0], 1), (vec![0, 0, 1], 1)]
        );
    }

    #[test]
    fn two_torus_action() {
        let r = hilbert_basis(&system(&[&[1, 1, 1, 1], &[0, 0, 1, -1]], &[3, 1]), 8).unwrap();
        assert!(r.complete);
        assert_eq!(
            exps(&r),
            vec![
                (vec![2, 0, 1, 0], 1),
                (vec![1, 1, 1, 0], 1),
                (vec![0, 2, 1, 0], 1),
                (vec![0, 0, 2, 1], 1)
            ]
        );
    }

    #[test]
    fn single_variable() {
        let r = hilbert_basis(&system(&[&[1]], &[1]), 1).unwrap();
        assert_eq!(exps(&r), vec![(vec![1], 1)]);
    }

    #[test]
    fn higher_degree_generators() {
        // A = [1, 1, 2], α = 1: X, Y in degree 1 and Z in degree 2.
        let r = hilbert_basis(&system(&[&[1, 1, 2]], &[1]), 8).unwrap();
        assert!(r.complete);
        assert_eq!(exps(&r), vec![(vec![1, 0, 0], 1), (vec![0, 1, 0], 1), (vec![0, 0, 1], 2)]);
    }

    #[test]
    fn truncated_bound_is_incomplete() {
        let r = hilbert_basis(&system(&[&[1, 1, 2]], &[1]), 1).unwrap();
        assert!(!r.complete);
        assert_eq!(r.generators.len(), 2);
    }

    #[test]
    fn errors() {
        assert_eq!(hilbert_basis(&system(&[&[1]], &[1]), 0), Err(Error::InvalidDegreeBound));
        assert_eq!(hilbert_basis(&system(&[&[1, -1]], &[1]), 4), Err(Error::UnboundedSlice));
    }

    #[test]
    fn membership() {
        let gens = vec![GradedMonomial::from_i64s(&[1, 0], 1), GradedMonomial::from_i64s(&[0, 1], 1)];
        assert!(in_graded_semigroup(&gens, &GradedMonomial::from_i64s(&[2, 1], 3)).unwrap());
        assert!(!in_graded_semigroup(&gens, &GradedMonomial::from_i64s(&[2, 1], 2)).unwrap());
    }
}
