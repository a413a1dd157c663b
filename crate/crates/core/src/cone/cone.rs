use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::lattice::dd::{cone_from_inequalities, ConeGenerators};
use crate::lattice::rational;
use crate::lattice::LatticeVector;

/// A rational polyhedral cone `{Σ λ_i g_i : λ_i >= 0}` stored by generators.
///
/// Generators are primitive, nonzero, irredundant and sorted, so two cones
/// are equal exactly when their generator lists are equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalCone {
    ambient_dim: usize,
    generators: Vec<LatticeVector>,
}

impl RationalCone {
    pub fn new(ambient_dim: usize, gens: Vec<LatticeVector>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.dim() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: g.dim(),
            });
        }
        let mut gens: Vec<LatticeVector> = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.primitive())
            .collect();
        gens.sort();
        gens.dedup();
        // Drop generators lying in the cone of the others, last first.
        let mut i = gens.len();
        while i > 0 {
            i -= 1;
            let others: Vec<LatticeVector> = gens
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            if cone_contains(ambient_dim, &others, &gens[i]) {
                gens.remove(i);
            }
        }
        Ok(Self {
            ambient_dim,
            generators: gens,
        })
    }

    pub fn from_i64s(ambient_dim: usize, gens: &[&[i64]]) -> Result<Self> {
        Self::new(ambient_dim, gens.iter().map(|g| LatticeVector::from_i64s(g)).collect())
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            generators: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    pub fn dimension(&self) -> usize {
        rational::rank_int(&self.generators.iter().map(|g| g.to_vec()).collect::<Vec<_>>())
    }

    /// Inequality description: `u · x >= 0` for every returned ray `u`, and
    /// `l · x = 0` for every lineality vector `l` of the dual.
    pub fn dual_generators(&self) -> ConeGenerators {
        cone_from_inequalities(self.ambient_dim, &self.generators)
    }

    pub fn contains(&self, v: &LatticeVector) -> bool {
        satisfies(&self.dual_generators(), v)
    }

    pub fn contains_in_relative_interior(&self, v: &LatticeVector) -> bool {
        let d = self.dual_generators();
        satisfies(&d, v) && d.rays.iter().all(|u| u.dot(v).is_positive())
    }
}

fn satisfies(dual: &ConeGenerators, v: &LatticeVector) -> bool {
    dual.rays.iter().all(|u| !u.dot(v).is_negative())
        && dual.lineality.iter().all(|l| num_traits::Zero::is_zero(&l.dot(v)))
}

fn cone_contains(dim: usize, gens: &[LatticeVector], v: &LatticeVector) -> bool {
    satisfies(&cone_from_inequalities(dim, gens), v)
}

/// `σ̌ = {u : ⟨u, x⟩ >= 0 for all x ∈ σ}`.
pub fn dual_cone(sigma: &RationalCone) -> RationalCone {
    let d = sigma.dual_generators();
    RationalCone::new(sigma.ambient_dim, d.conic_generators()).expect("dimensions agree")
}

/// True iff `σ ∩ -σ = {0}`, i.e. the dual cone is full-dimensional.
pub fn is_strongly_convex(sigma: &RationalCone) -> bool {
    let rows: Vec<_> = sigma
        .dual_generators()
        .conic_generators()
        .iter()
        .map(|g| g.to_vec())
        .collect();
    rational::rank_int(&rows) == sigma.ambient_dim
}

/// Intersection of two cones in the same ambient space.
pub fn intersect(a: &RationalCone, b: &RationalCone) -> RationalCone {
    let n = a.ambient_dim;
    let mut ineqs = Vec::new();
    for c in [a, b] {
        let d = c.dual_generators();
        ineqs.extend(d.rays);
        for l in d.lineality {
            ineqs.push(-&l);
            ineqs.push(l);
        }
    }
    let g = cone_from_inequalities(n, &ineqs);
    RationalCone::new(n, g.conic_generators()).expect("dimensions agree")
}

/// All faces of a strongly convex cone, including `{0}` and the cone itself,
/// ordered by dimension and then by generators.
pub fn faces(sigma: &RationalCone) -> Result<Vec<RationalCone>> {
    if !is_strongly_convex(sigma) {
        return Err(Error::NotStronglyConvex);
    }
    let gens = sigma.generators();
    let all: Vec<usize> = (0..gens.len()).collect();
    let facets: Vec<Vec<usize>> = sigma
        .dual_generators()
        .rays
        .iter()
        .map(|u| {
            (0..gens.len())
                .filter(|&i| num_traits::Zero::is_zero(&u.dot(&gens[i])))
                .collect()
        })
        .collect();
    // Faces are exactly the intersections of facets.
    let mut sets: Vec<Vec<usize>> = vec![all];
    let mut k = 0;
    while k < sets.len() {
        let cur = sets[k].clone();
        for f in &facets {
            let meet: Vec<usize> = cur.iter().copied().filter(|i| f.contains(i)).collect();
            if !sets.contains(&meet) {
                sets.push(meet);
            }
        }
        k += 1;
    }
    let mut out: Vec<RationalCone> = sets
        .into_iter()
        .map(|s| RationalCone {
            ambient_dim: sigma.ambient_dim,
            generators: s.into_iter().map(|i| gens[i].clone()).collect(),
        })
        .collect();
    out.sort_by(|a, b| a.dimension().cmp(&b.dimension()).then_with(|| a.cmp(b)));
    out.dedup();
    Ok(out)
}

impl fmt::Display for RationalCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cone⟨")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}
