//! Double description: generators of `{x : a_i · x >= 0}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::rational::{self, rat, Rat};
use super::vector::LatticeVector;

/// A polyhedral cone split as `lineality ⊕ pointed part`.
///
/// `rays` are the extreme rays of the pointed part, each projected onto the
/// orthogonal complement of the lineality space and made primitive; the
/// lineality basis is in Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeGenerators {
    pub rays: Vec<LatticeVector>,
    pub lineality: Vec<LatticeVector>,
}

impl ConeGenerators {
    /// Conic generators: rays plus both signs of every lineality vector.
    pub fn conic_generators(&self) -> Vec<LatticeVector> {
        let mut out = self.rays.clone();
        for l in &self.lineality {
            out.push(l.clone());
            out.push(-l);
        }
        out.sort();
        out.dedup();
        out
    }
}

pub fn cone_from_inequalities(dim: usize, ineqs: &[LatticeVector]) -> ConeGenerators {
    let mut lin: Vec<LatticeVector> = (0..dim).map(|i| LatticeVector::unit(dim, i)).collect();
    let mut rays: Vec<LatticeVector> = Vec::new();
    let mut processed: Vec<&LatticeVector> = Vec::new();

    for a in ineqs {
        if a.is_zero() {
            continue;
        }
        if let Some(idx) = lin.iter().position(|l| !a.dot(l).is_zero()) {
            let mut l = lin.remove(idx);
            let mut al = a.dot(&l);
            if al.is_negative() {
                l = -&l;
                al = -al;
            }
            let shift = |v: &LatticeVector| -> LatticeVector {
                let av = a.dot(v);
                (&v.scale(&al) - &l.scale(&av)).primitive()
            };
            lin = lin.iter().map(shift).filter(|v| !v.is_zero()).collect();
            rays = rays.iter().map(shift).filter(|v| !v.is_zero()).collect();
            rays.push(l);
        } else {
            let mut next = Vec::new();
            let mut pos = Vec::new();
            let mut neg = Vec::new();
            for r in rays.drain(..) {
                let s = a.dot(&r);
                if s.is_positive() {
                    pos.push((r, s));
                } else if s.is_negative() {
                    neg.push((r, s));
                } else {
                    next.push(r);
                }
            }
            for (p, sp) in &pos {
                for (q, sq) in &neg {
                    let c = (&q.scale(sp) - &p.scale(sq)).primitive();
                    if !c.is_zero() {
                        next.push(c);
                    }
                }
            }
            next.extend(pos.into_iter().map(|(r, _)| r));
            rays = next;
        }
        processed.push(a);
        rays = prune(rays, &processed, dim - lin.len());
    }

    let lineality = super::hnf::lattice_basis(&lin, dim);
    let mut rays: Vec<LatticeVector> = rays
        .into_iter()
        .map(|r| project_off(&r, &lineality))
        .collect();
    rays.sort();
    rays.dedup();
    ConeGenerators { rays, lineality }
}

// Keep one representative per extreme ray of the pointed part. `rank` is the
// rank of the processed inequalities, so extreme rays are tight on rank - 1.
fn prune(rays: Vec<LatticeVector>, processed: &[&LatticeVector], rank: usize) -> Vec<LatticeVector> {
    let mut by_face: BTreeMap<Vec<usize>, LatticeVector> = BTreeMap::new();
    for r in rays {
        let tight: Vec<usize> = processed
            .iter()
            .enumerate()
            .filter(|(_, a)| a.dot(&r).is_zero())
            .map(|(i, _)| i)
            .collect();
        let rows: Vec<Vec<BigInt>> = tight.iter().map(|&i| processed[i].to_vec()).collect();
        if rational::rank_int(&rows) + 1 != rank {
            continue;
        }
        by_face.entry(tight).or_insert(r);
    }
    by_face.into_values().collect()
}

// Orthogonal projection onto the complement of `lin`, scaled to primitive.
fn project_off(r: &LatticeVector, lin: &[LatticeVector]) -> LatticeVector {
    if lin.is_empty() {
        return r.primitive();
    }
    // Solve Gram · c = Lᵀ r, then r - L c.
    let gram: Vec<Vec<Rat>> = lin
        .iter()
        .map(|a| lin.iter().map(|b| rat(&a.dot(b))).collect())
        .collect();
    let rhs: Vec<Rat> = lin.iter().map(|a| rat(&a.dot(r))).collect();
    let c = rational::solve(&gram, &rhs).expect("lineality basis is independent");
    let v: Vec<Rat> = (0..r.dim())
        .map(|i| rat(&r[i]) - lin.iter().zip(&c).map(|(l, ci)| rat(&l[i]) * ci).sum::<Rat>())
        .collect();
    rational::integer_direction(&v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(rows: &[&[i64]]) -> Vec<LatticeVector> {
        rows.iter().map(|r| LatticeVector::from_i64s(r)).collect()
    }

    #[test]
    fn orthant() {
        let g = cone_from_inequalities(2, &lv(&[&[1, 0], &[0, 1]]));
        assert_eq!(g.rays, lv(&[&[0, 1], &[1, 0]]));
        assert!(g.lineality.is_empty());
    }

    #[test]
    fn half_plane() {
        let g = cone_from_inequalities(2, &lv(&[&[1, 0]]));
        assert_eq!(g.rays, lv(&[&[1, 0]]));
        assert_eq!(g.lineality, lv(&[&[0, 1]]));
    }

    #[test]
    fn opposite_halfspaces_give_a_hyperplane() {
        let g = cone_from_inequalities(2, &lv(&[&[1, 1], &[-1, -1]]));
        assert!(g.rays.is_empty());
        assert_eq!(g.lineality.len(), 1);
    }

    #[test]
    fn no_constraints_is_everything() {
        let g = cone_from_inequalities(3, &[]);
        assert_eq!(g.lineality.len(), 3);
        assert!(g.rays.is_empty());
    }

    #[test]
    fn point_cone() {
        let g = cone_from_inequalities(1, &lv(&[&[1], &[-1]]));
        assert!(g.rays.is_empty() && g.lineality.is_empty());
    }

    #[test]
    fn dual_of_wedge() {
        // inequalities from generators (1,0), (1,2)
        let g = cone_from_inequalities(2, &lv(&[&[1, 0], &[1, 2]]));
        assert_eq!(g.rays, lv(&[&[0, 1], &[2, -1]]));
    }

    #[test]
    fn square_pyramid_has_four_rays() {
        let g = cone_from_inequalities(
            3,
            &lv(&[&[1, 0, 1], &[-1, 0, 1], &[0, 1, 1], &[0, -1, 1]]),
        );
        assert_eq!(g.rays.len(), 4);
    }
}
