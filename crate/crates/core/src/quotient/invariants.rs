use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::action::{ActionData, Mode};
use crate::error::{Error, Result};
use crate::lattice::rational::{self, rat, Rat};
use crate::lattice::{integer_kernel, solve_integer, LatticeVector};
use crate::semigroup::{hilbert_basis, GradedMonomial, GradedSystem, HilbertBasisResult};

/// Integer solutions of `A·m = α·d`: `particular + span(kernel_basis)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeCoset {
    pub degree: u64,
    /// `None` when there is no integer solution at this degree.
    pub particular: Option<LatticeVector>,
    pub kernel_basis: Vec<LatticeVector>,
}

impl LatticeCoset {
    pub fn contains(&self, m: &LatticeVector) -> bool {
        let Some(p) = &self.particular else {
            return false;
        };
        let diff: Vec<Rat> = (m - p).iter().map(rat).collect();
        rational::coordinates(&self.kernel_basis, &diff).is_some_and(|c| rational::is_integral(&c))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradedSolutions {
    Monomials(Vec<GradedMonomial>),
    Coset(LatticeCoset),
}

/// Invariant sections of degree `d`.
pub fn graded_monomials(action: &ActionData, d: u64, mode: Mode) -> Result<GradedSolutions> {
    if d == 0 {
        return Err(Error::InvalidDegreeBound);
    }
    let rhs = action.alpha().scale(&BigInt::from(d));
    match mode {
        Mode::Polynomial => {
            let system = GradedSystem::new(action.matrix().clone(), action.alpha().clone())?;
            let sols = system.slice(d)?;
            Ok(GradedSolutions::Monomials(sols.into_iter().map(|m| GradedMonomial::new(m, d)).collect()))
        }
        Mode::Lattice => Ok(GradedSolutions::Coset(LatticeCoset {
            degree: d,
            particular: solve_integer(action.matrix(), &rhs),
            kernel_basis: integer_kernel(action.matrix()),
        })),
    }
}

/// Generators of the invariant ring.
///
/// In polynomial mode this is the Hilbert basis of the graded semigroup. In
/// lattice mode the generators are the solutions of `A·m = α·d` whose free
/// coordinates (for the reduced echelon form of `[A | α]`) form a unit
/// vector, at the smallest degree making all of them integral; the result is
/// complete by construction.
pub fn invariant_ring(action: &ActionData, mode: Mode, degree_bound: u64) -> Result<HilbertBasisResult> {
    if degree_bound < 1 {
        return Err(Error::InvalidDegreeBound);
    }
    match mode {
        Mode::Polynomial => {
            let system = GradedSystem::new(action.matrix().clone(), action.alpha().clone())?;
            hilbert_basis(&system, degree_bound)
        }
        Mode::Lattice => lattice_generators(action, degree_bound),
    }
}

fn lattice_generators(action: &ActionData, degree_bound: u64) -> Result<HilbertBasisResult> {
    let n = action.nvars();
    let rows: Vec<Vec<Rat>> = action
        .matrix()
        .rows()
        .zip(action.alpha().iter())
        .map(|(r, a)| r.iter().chain(std::iter::once(a)).map(rat).collect())
        .collect();
    let (red, pivots) = rational::rref(rows);
    let empty = |certificate_degree| HilbertBasisResult {
        generators: Vec::new(),
        verified_degree: degree_bound,
        complete: true,
        certificate_degree,
    };
    if pivots.contains(&n) {
        // A·m = α·d forces d = 0.
        return Ok(empty(0));
    }
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    let shapes: Vec<Option<usize>> = if free.is_empty() {
        vec![None]
    } else {
        free.iter().copied().map(Some).collect()
    };
    let solution = |f: Option<usize>, d: u64| -> Vec<Rat> {
        let mut m = vec![Rat::zero(); n];
        if let Some(f) = f {
            m[f] = Rat::from_integer(1.into());
        }
        for (row, &p) in red.iter().zip(&pivots) {
            let mut v = &row[n] * rat(&BigInt::from(d));
            if let Some(f) = f {
                v -= &row[f];
            }
            m[p] = v;
        }
        m
    };
    for d in 1..=degree_bound {
        let sols: Vec<Vec<Rat>> = shapes.iter().map(|&f| solution(f, d)).collect();
        if sols.iter().all(|s| rational::is_integral(s)) {
            let mut generators: Vec<GradedMonomial> = sols
                .into_iter()
                .map(|s| GradedMonomial::new(LatticeVector::new(s.iter().map(|x| x.to_integer()).collect()), d))
                .collect();
            generators.sort();
            return Ok(HilbertBasisResult {
                generators,
                verified_degree: degree_bound,
                complete: true,
                certificate_degree: d,
            });
        }
    }
    Err(Error::NonIntegralLattice(degree_bound))
}

/// Checks `t^α·F(Z) = F(t·Z)` for the monomial `F = Z^m`: symbolically
/// (`A·m = α·d`) and by evaluating both sides at the torus element `t`.
pub fn check_invariance(g: &GradedMonomial, action: &ActionData, t: &[Rat]) -> Result<bool> {
    if t.len() != action.rank() {
        return Err(Error::DimensionMismatch {
            expected: action.rank(),
            found: t.len(),
        });
    }
    if t.iter().any(Zero::is_zero) {
        return Err(Error::ZeroTorusEntry);
    }
    let am = action.matrix().mul_vec(&g.exponents)?;
    let ad = action.alpha().scale(&BigInt::from(g.degree));
    let symbolic = am == ad;
    let eval = |exps: &LatticeVector| -> Option<Rat> {
        t.iter()
            .zip(exps.iter())
            .try_fold(Rat::from_integer(1.into()), |acc, (ti, e)| Some(acc * ti.pow(e.to_i32()?)))
    };
    let numeric = match (eval(&am), eval(&ad)) {
        (Some(l), Some(r)) => l == r,
        _ => symbolic,
    };
    Ok(symbolic && numeric)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn thm(alpha: &[i64]) -> ActionData {
        ActionData::from_i64s(&[&[1, 1, 1, 1], &[0, 0, 1, -1]], alpha).unwrap()
    }

    fn exps(gens: &[GradedMonomial]) -> Vec<Vec<i64>> {
        gens.iter().map(|g| g.exponents.to_i64s().unwrap()).collect()
    }

    #[test]
    fn degree_one_sections() {
        let GradedSolutions::Monomials(m) = graded_monomials(&thm(&[3, 1]), 1, Mode::Polynomial).unwrap() else {
            panic!()
        };
        let mut e = exps(&m);
        e.sort();
        assert_eq!(e, vec![vec![0, 0, 2, 1], vec![0, 2, 1, 0], vec![1, 1, 1, 0], vec![2, 0, 1, 0]]);
        let GradedSolutions::Monomials(m) = graded_monomials(&thm(&[1, 1]), 1, Mode::Polynomial).unwrap() else {
            panic!()
        };
        assert_eq!(exps(&m), vec![vec![0, 0, 1, 0]]);
    }

    #[test]
    fn lattice_coset() {
        let GradedSolutions::Coset(c) = graded_monomials(&thm(&[1, 1]), 1, Mode::Lattice).unwrap() else {
            panic!()
        };
        assert!(c.contains(&LatticeVector::from([-1, 1, 1, 0])));
        assert!(c.contains(&LatticeVector::from([-2, 0, 2, 1])));
        assert!(!c.contains(&LatticeVector::from([0, 0, 0, 0])));
        assert_eq!(c.kernel_basis.len(), 2);
    }

    #[test]
    fn lattice_generators_match_the_echelon_reading() {
        let r = invariant_ring(&thm(&[1, 1]), Mode::Lattice, 8).unwrap();
        assert_eq!(exps(&r.generators), vec![vec![-1, 1, 1, 0], vec![-2, 0, 2, 1]]);
        assert!(r.complete);
        let p = invariant_ring(&thm(&[1, 1]), Mode::Polynomial, 8).unwrap();
        assert_eq!(exps(&p.generators), vec![vec![0, 0, 1, 0]]);
    }

    #[test]
    fn lattice_mode_needs_integral_degree() {
        let a = ActionData::from_i64s(&[&[2, 2]], &[1]).unwrap();
        let r = invariant_ring(&a, Mode::Lattice, 4).unwrap();
        assert_eq!(r.generators, vec![GradedMonomial::from_i64s(&[0, 1], 2)]);
        let b = ActionData::from_i64s(&[&[2]], &[1]).unwrap();
        assert_eq!(invariant_ring(&b, Mode::Lattice, 1), Err(Error::NonIntegralLattice(1)));
    }

    #[test]
    fn invariance() {
        let a = thm(&[3, 1]);
        let g = GradedMonomial::from_i64s(&[2, 0, 1, 0], 1);
        let t = [Rat::new(3.into(), 7.into()), Rat::from_integer((-2).into())];
        assert!(check_invariance(&g, &a, &t).unwrap());
        let b = ActionData::from_i64s(&[&[1]], &[0]).unwrap();
        let e1 = GradedMonomial::from_i64s(&[1], 1);
        assert!(!check_invariance(&e1, &b, &[Rat::from_integer(2.into())]).unwrap());
        assert_eq!(check_invariance(&e1, &b, &[Rat::zero()]), Err(Error::ZeroTorusEntry));
    }
}
