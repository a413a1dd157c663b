use super::action::ActionData;
use crate::cone::{normal_fan, Fan, LatticePolytope};
use crate::error::{Error, Result};
use crate::lattice::rational::{self, rat, Rat};
use crate::lattice::{
    enumerate_nonneg_solutions, integer_kernel, nonneg_circuits, saturation, slice_polyhedron, trailing_echelon_basis,
    LatticeVector,
};
use crate::semigroup::GradedMonomial;

/// A polytope in an affine lattice `origin + Σ c_i basis_i` of `R^n`,
/// together with that frame so exponent vectors can be mapped to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPolytope {
    pub polytope: LatticePolytope,
    pub origin: Vec<Rat>,
    pub basis: Vec<LatticeVector>,
}

impl QuotientPolytope {
    /// Frame coordinates of the degree-normalized point `m / d`.
    pub fn coordinates_of(&self, m: &LatticeVector, d: u64) -> Option<Vec<Rat>> {
        let scale = Rat::from_integer(d.into());
        let diff: Vec<Rat> = m.iter().zip(&self.origin).map(|(x, o)| rat(x) / &scale - o).collect();
        rational::coordinates(&self.basis, &diff)
    }

    /// Inverse of [`coordinates_of`](Self::coordinates_of) for degree one.
    pub fn exponent_of(&self, coords: &[Rat]) -> Vec<Rat> {
        let mut out = self.origin.clone();
        for (c, b) in coords.iter().zip(&self.basis) {
            for (o, x) in out.iter_mut().zip(b.iter()) {
                *o += c * rat(x);
            }
        }
        out
    }
}

/// `{m ≥ 0 : A·m = α}` in coordinates on the affine lattice `{A·m = α}`.
///
/// The frame is a trailing-echelon basis of `ker A ∩ Z^n`, anchored at the
/// lex-largest integral vertex (falling back to the lex-largest lattice
/// point, then the lex-largest vertex).
pub fn quotient_polytope(action: &ActionData) -> Result<QuotientPolytope> {
    let a = action.matrix();
    if !nonneg_circuits(a).is_empty() {
        return Err(Error::UnboundedPolytope);
    }
    let slice = slice_polyhedron(a, action.alpha())?;
    if slice.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    let basis = trailing_echelon_basis(&integer_kernel(a));
    let origin = slice
        .vertices
        .iter()
        .filter(|v| rational::is_integral(v))
        .max()
        .cloned()
        .or_else(|| {
            enumerate_nonneg_solutions(a, action.alpha())
                .ok()
                .and_then(|s| s.last().map(|p| p.iter().map(rat).collect()))
        })
        .unwrap_or_else(|| slice.vertices.iter().max().expect("nonempty").clone());
    let points: Vec<Vec<Rat>> = slice
        .vertices
        .iter()
        .map(|v| {
            let diff: Vec<Rat> = v.iter().zip(&origin).map(|(x, o)| x - o).collect();
            rational::coordinates(&basis, &diff).expect("slice lies in the kernel frame")
        })
        .collect();
    Ok(QuotientPolytope {
        polytope: LatticePolytope::from_points(basis.len(), &points)?,
        origin,
        basis,
    })
}

/// Convex hull of the degree-normalized generators, in a trailing-echelon
/// basis of the saturated lattice spanned by their differences and anchored
/// at the first generator. Used for lattice-mode generators.
pub fn generator_polytope(gens: &[GradedMonomial]) -> Result<QuotientPolytope> {
    let Some(first) = gens.first() else {
        return Err(Error::EmptyPolytope);
    };
    let n = first.exponents.dim();
    let point = |g: &GradedMonomial| -> Vec<Rat> {
        let d = Rat::from_integer(g.degree.into());
        g.exponents.iter().map(|x| rat(x) / &d).collect()
    };
    let origin = point(first);
    let diffs: Vec<Vec<Rat>> = gens
        .iter()
        .map(|g| point(g).iter().zip(&origin).map(|(x, o)| x - o).collect())
        .collect();
    let dirs: Vec<LatticeVector> = diffs.iter().map(|d| rational::integer_direction(d)).collect();
    let basis = trailing_echelon_basis(&saturation(&dirs, n));
    let points: Vec<Vec<Rat>> = diffs
        .iter()
        .map(|d| rational::coordinates(&basis, d).expect("in span"))
        .collect();
    Ok(QuotientPolytope {
        polytope: LatticePolytope::from_points(basis.len(), &points)?,
        origin,
        basis,
    })
}

/// Normal fan of the quotient polytope.
pub fn quotient_fan(action: &ActionData) -> Result<Fan> {
    normal_fan(&quotient_polytope(action)?.polytope)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::{lattice_equivalent, validate_fan};

    fn ints(v: &[Vec<Rat>]) -> Vec<Vec<i64>> {
        v.iter().map(|p| p.iter().map(|x| i64::try_from(x.to_integer()).unwrap()).collect()).collect()
    }

    #[test]
    fn two_torus_polytope() {
        let a = ActionData::from_i64s(&[&[1, 1, 1, 1], &[0, 0, 1, -1]], &[3, 1]).unwrap();
        let q = quotient_polytope(&a).unwrap();
        assert_eq!(ints(q.polytope.vertices()), vec![vec![0, 0], vec![0, 1], vec![2, 0]]);
        let label = |m: &[i64]| ints(&[q.coordinates_of(&LatticeVector::from_i64s(m), 1).unwrap()]);
        assert_eq!(label(&[2, 0, 1, 0]), vec![vec![0, 0]]);
        assert_eq!(label(&[1, 1, 1, 0]), vec![vec![1, 0]]);
        assert_eq!(label(&[0, 2, 1, 0]), vec![vec![2, 0]]);
        assert_eq!(label(&[0, 0, 2, 1]), vec![vec![0, 1]]);
        assert_eq!(q.polytope.lattice_points().unwrap().len(), 4);
    }

    #[test]
    fn weighted_plane_polytope() {
        let a = ActionData::from_i64s(&[&[1, 1, 2]], &[2]).unwrap();
        let q = quotient_polytope(&a).unwrap();
        assert_eq!(ints(q.polytope.vertices()), vec![vec![0, 0], vec![0, 1], vec![2, 0]]);
        let fan = quotient_fan(&a).unwrap();
        assert!(validate_fan(&fan).is_empty());
        let b = ActionData::from_i64s(&[&[1, 1, 1, 1], &[0, 0, 1, -1]], &[3, 1]).unwrap();
        assert!(lattice_equivalent(&q.polytope, &quotient_polytope(&b).unwrap().polytope).unwrap().is_some());
    }

    #[test]
    fn point_and_errors() {
        let a = ActionData::from_i64s(&[&[1]], &[1]).unwrap();
        let q = quotient_polytope(&a).unwrap();
        assert_eq!(q.polytope.ambient_dim(), 0);
        assert_eq!(q.polytope.vertices().len(), 1);
        let u = ActionData::from_i64s(&[&[1, -1]], &[1]).unwrap();
        assert_eq!(quotient_polytope(&u), Err(Error::UnboundedPolytope));
        let e = ActionData::from_i64s(&[&[1, 1]], &[-1]).unwrap();
        assert_eq!(quotient_polytope(&e), Err(Error::EmptyPolytope));
    }

    #[test]
    fn lattice_generators_span_a_segment() {
        let gens = vec![GradedMonomial::from_i64s(&[-1, 1, 1, 0], 1), GradedMonomial::from_i64s(&[-2, 0, 2, 1], 1)];
        let q = generator_polytope(&gens).unwrap();
        assert_eq!(q.polytope.ambient_dim(), 1);
        assert_eq!(ints(q.polytope.vertices()), vec![vec![0], vec![1]]);
    }
}
