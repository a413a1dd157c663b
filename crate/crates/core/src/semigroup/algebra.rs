use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::{GradedMonomial, LaurentMonomial};
use crate::error::{Error, Result};
use crate::lattice::dd::cone_from_inequalities;
use crate::lattice::rational::{self, rat, Rat};
use crate::lattice::{has_nonneg_solution, lattice_basis, IntMatrix, LatticeVector};

/// `C[S]` for the semigroup `S` generated by finitely many Laurent monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialAlgebra {
    names: Vec<String>,
    generators: Vec<LaurentMonomial>,
    removed: Vec<LaurentMonomial>,
}

impl MonomialAlgebra {
    /// Builds the algebra, dropping generators that are products of the
    /// others. Dropped generators are kept in [`removed`](Self::removed).
    pub fn new(names: Vec<String>, generators: Vec<LaurentMonomial>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.dim() != names.len()) {
            return Err(Error::DimensionMismatch {
                expected: names.len(),
                found: g.dim(),
            });
        }
        let (generators, removed) = irredundantize(generators)?;
        Ok(Self {
            names,
            generators,
            removed,
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generators(&self) -> &[LaurentMonomial] {
        &self.generators
    }

    pub fn removed(&self) -> &[LaurentMonomial] {
        &self.removed
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// Rank of the exponent lattice spanned by the generators.
    pub fn rank(&self) -> usize {
        lattice_basis(&self.exponent_vectors(), self.names.len()).len()
    }

    pub fn exponent_vectors(&self) -> Vec<LatticeVector> {
        self.generators.iter().map(|g| g.exponents.clone()).collect()
    }

    pub fn contains(&self, m: &LaurentMonomial) -> Result<bool> {
        in_semigroup(&self.exponent_vectors(), &m.exponents)
    }
}

impl fmt::Display for MonomialAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "C");
        }
        let parts: Vec<String> = self
            .generators
            .iter()
            .map(|g| g.display(&self.names).to_string())
            .collect();
        write!(f, "C[{}]", parts.join(", "))
    }
}

/// Whether `v` is a nonnegative integer combination of `gens`.
pub fn in_semigroup(gens: &[LatticeVector], v: &LatticeVector) -> Result<bool> {
    if gens.is_empty() {
        return Ok(v.is_zero());
    }
    let n = v.dim();
    let dual = cone_from_inequalities(n, gens);
    if dual.rays.iter().any(|u| u.dot(v).is_negative()) || dual.lineality.iter().any(|l| !l.dot(v).is_zero()) {
        return Ok(false);
    }
    // A pointed cone has a grading positive on every generator, which bounds
    // a direct search. Otherwise fall back to integer feasibility.
    let grading = dual.rays.iter().fold(LatticeVector::zero(n), |acc, u| &acc + u);
    let weights: Vec<BigInt> = gens.iter().map(|g| grading.dot(g)).collect();
    if weights.iter().all(|w| w.is_positive()) {
        let mut order: Vec<usize> = (0..gens.len()).collect();
        order.sort_by(|&a, &b| weights[b].cmp(&weights[a]));
        let mut dead = BTreeSet::new();
        return Ok(bounded_search(gens, &weights, &order, &grading, v.clone(), 0, &mut dead));
    }
    let rows: Vec<Vec<BigInt>> = (0..n).map(|i| gens.iter().map(|g| g[i].clone()).collect()).collect();
    has_nonneg_solution(&IntMatrix::from_rows(rows)?, v)
}

fn bounded_search(
    gens: &[LatticeVector],
    weights: &[BigInt],
    order: &[usize],
    grading: &LatticeVector,
    v: LatticeVector,
    start: usize,
    dead: &mut BTreeSet<(LatticeVector, usize)>,
) -> bool {
    if v.is_zero() {
        return true;
    }
    let w = grading.dot(&v);
    if !w.is_positive() || dead.contains(&(v.clone(), start)) {
        return false;
    }
    for (k, &j) in order.iter().enumerate().skip(start) {
        if weights[j] <= w && bounded_search(gens, weights, order, grading, &v - &gens[j], k, dead) {
            return true;
        }
    }
    dead.insert((v, start));
    false
}

/// Removes the unit monomial, duplicates, and then every generator lying in
/// the semigroup of the remaining ones.
fn irredundantize(gens: Vec<LaurentMonomial>) -> Result<(Vec<LaurentMonomial>, Vec<LaurentMonomial>)> {
    let mut kept: Vec<LaurentMonomial> = Vec::new();
    let mut removed = Vec::new();
    let mut seen = BTreeSet::new();
    for g in gens {
        if g.is_one() || !seen.insert(g.clone()) {
            log::debug!("dropping trivial or repeated generator {:?}", g.exponents.to_i64s());
            removed.push(g);
        } else {
            kept.push(g);
        }
    }
    // Largest exponent vectors are tried first, so that a semigroup with
    // units keeps its short generators. The cheap pass catches sums of two.
    let norm = |g: &LaurentMonomial| g.exponents.iter().map(|x| x.abs()).sum::<BigInt>();
    let mut order: Vec<usize> = (0..kept.len()).collect();
    order.sort_by(|&x, &y| norm(&kept[y]).cmp(&norm(&kept[x])).then(y.cmp(&x)));
    let mut alive = vec![true; kept.len()];
    for full in [false, true] {
        for &i in &order {
            if !alive[i] {
                continue;
            }
            let others: Vec<&LatticeVector> = (0..kept.len())
                .filter(|&j| j != i && alive[j])
                .map(|j| &kept[j].exponents)
                .collect();
            if others.is_empty() {
                continue;
            }
            let target = &kept[i].exponents;
            let redundant = if full {
                in_semigroup(&others.into_iter().cloned().collect::<Vec<_>>(), target)?
            } else {
                let rest: BTreeSet<&LatticeVector> = others.into_iter().collect();
                rest.iter().any(|a| rest.contains(&(target - *a)))
            };
            if redundant {
                log::debug!("dropping {:?}: product of the other generators", target.to_i64s());
                alive[i] = false;
                removed.push(kept[i].clone());
            }
        }
    }
    let kept = kept.into_iter().zip(alive).filter(|(_, a)| *a).map(|(g, _)| g).collect();
    Ok((kept, removed))
}

/// Generators of the degree-0 part of the localization at `gens[i]`.
///
/// Degree-0 fractions are `Π g_j^{a_j} / g_i^k` with `Σ a_j deg_j = k deg_i`.
/// When every degree is a multiple of `deg_i` they are generated by
/// `{g_j / g_i^{deg_j/deg_i}}`; otherwise all products in the relevant
/// degrees are collected and then thinned out.
pub fn chart_ring(names: &[String], gens: &[GradedMonomial], i: usize) -> Result<MonomialAlgebra> {
    let Some(center) = gens.get(i) else {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: gens.len(),
        });
    };
    let others: Vec<&GradedMonomial> = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g).collect();
    // Only degree ratios matter.
    let common = gens.iter().fold(0u64, |acc, g| acc.gcd(&g.degree)).max(1);
    let di = center.degree / common;
    let others: Vec<GradedMonomial> = others
        .into_iter()
        .map(|g| GradedMonomial::new(g.exponents.clone(), g.degree / common))
        .collect();
    let laurent: Vec<LaurentMonomial> = if others.iter().all(|g| g.degree % di == 0) {
        others
            .iter()
            .map(|g| LaurentMonomial::new(&g.exponents - &center.exponents.scale(&BigInt::from(g.degree / di))))
            .collect()
    } else {
        // Minimal solutions of `Σ a_j deg_j = k deg_i` have `k <= max deg_j`,
        // so products of degree up to `deg_i * max deg_j` suffice.
        let kmax = others.iter().map(|g| g.degree).max().unwrap_or(1);
        let top = usize::try_from(di * kmax).map_err(|_| Error::InvalidDegreeBound)?;
        let mut layers: Vec<BTreeSet<LatticeVector>> = vec![BTreeSet::new(); top + 1];
        layers[0].insert(LatticeVector::zero(center.exponents.dim()));
        for t in 1..=top {
            let mut layer = BTreeSet::new();
            for g in &others {
                let d = g.degree as usize;
                if d <= t {
                    for m in &layers[t - d] {
                        layer.insert(m + &g.exponents);
                    }
                }
            }
            layers[t] = layer;
        }
        let mut out = Vec::new();
        for k in 1..=kmax {
            let shift = center.exponents.scale(&BigInt::from(k));
            for m in layers[(k * di) as usize].iter().rev() {
                out.push(LaurentMonomial::new(m - &shift));
            }
        }
        out
    };
    MonomialAlgebra::new(names.to_vec(), laurent)
}

/// All charts of `Proj`, one per generator.
pub fn chart_atlas(names: &[String], gens: &[GradedMonomial]) -> Result<Vec<MonomialAlgebra>> {
    (0..gens.len()).map(|i| chart_ring(names, gens, i)).collect()
}

/// A lattice isomorphism between the exponent lattices of two algebras.
///
/// `matrix[i][j]` is the coefficient of `target_basis[i]` in the image of
/// `source_basis[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialWitness {
    pub source_basis: Vec<LatticeVector>,
    pub target_basis: Vec<LatticeVector>,
    pub matrix: Vec<Vec<BigInt>>,
}

impl MonomialWitness {
    /// Image of a source exponent vector, if it lies in the source lattice.
    pub fn apply(&self, v: &LatticeVector) -> Option<LatticeVector> {
        let c = rational::coordinates(&self.source_basis, &v.iter().map(rat).collect::<Vec<_>>())?;
        if !rational::is_integral(&c) {
            return None;
        }
        let dim = self.target_basis.first().map_or(0, |b| b.dim());
        let mut out = LatticeVector::zero(dim);
        for (i, b) in self.target_basis.iter().enumerate() {
            let coeff: BigInt = self.matrix[i].iter().zip(&c).map(|(m, x)| m * x.to_integer()).sum();
            out = &out + &b.scale(&coeff);
        }
        Some(out)
    }

    pub fn is_identity(&self) -> bool {
        self.source_basis == self.target_basis
            && self.matrix.iter().enumerate().all(|(i, row)| {
                row.iter()
                    .enumerate()
                    .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
            })
    }
}

/// Searches for one lattice isomorphism carrying every chart of `a` onto the
/// chart of `b` with the same index.
///
/// Generator sets of pointed semigroups are unique once irredundant, so
/// matching them is exact there; for semigroups containing units the
/// irredundant set is not canonical and a `None` may be a false negative.
pub fn atlas_isomorphic(a: &[MonomialAlgebra], b: &[MonomialAlgebra]) -> Option<MonomialWitness> {
    if a.len() != b.len() {
        return None;
    }
    if a.iter().zip(b).any(|(x, y)| x.generators.len() != y.generators.len()) {
        return None;
    }
    let src_all: Vec<LatticeVector> = a.iter().flat_map(|r| r.exponent_vectors()).collect();
    let dst_all: Vec<LatticeVector> = b.iter().flat_map(|r| r.exponent_vectors()).collect();
    let src_dim = a.first().map_or(0, |r| r.names.len());
    let dst_dim = b.first().map_or(0, |r| r.names.len());
    let src_basis = lattice_basis(&src_all, src_dim);
    let dst_basis = lattice_basis(&dst_all, dst_dim);
    let k = src_basis.len();
    if k != dst_basis.len() {
        return None;
    }
    let coords = |basis: &[LatticeVector], v: &LatticeVector| -> Vec<Rat> {
        rational::coordinates(basis, &v.iter().map(rat).collect::<Vec<_>>()).expect("in span")
    };
    let src_c: Vec<Vec<Vec<Rat>>> = a
        .iter()
        .map(|r| r.generators.iter().map(|g| coords(&src_basis, &g.exponents)).collect())
        .collect();
    let dst_c: Vec<BTreeSet<Vec<Rat>>> = b
        .iter()
        .map(|r| r.generators.iter().map(|g| coords(&dst_basis, &g.exponents)).collect())
        .collect();
    if k == 0 {
        return Some(MonomialWitness {
            source_basis: src_basis,
            target_basis: dst_basis,
            matrix: Vec::new(),
        });
    }
    let flat_src: Vec<Vec<Rat>> = src_c.iter().flatten().cloned().collect();
    let flat_dst: Vec<Vec<Rat>> = b
        .iter()
        .flat_map(|r| r.generators.iter().map(|g| coords(&dst_basis, &g.exponents)))
        .collect();
    let frame = independent_subset(&flat_src, k);
    // Columns are the chosen source coordinates.
    let s: Vec<Vec<Rat>> = (0..k).map(|r| frame.iter().map(|&i| flat_src[i][r].clone()).collect()).collect();
    let s_inv = invert(&s)?;

    let try_assignment = |seq: &[usize]| -> Option<Vec<Vec<BigInt>>> {
        let t: Vec<Vec<Rat>> = (0..k).map(|r| seq.iter().map(|&i| flat_dst[i][r].clone()).collect()).collect();
        let m: Vec<Vec<Rat>> = (0..k)
            .map(|i| (0..k).map(|j| (0..k).map(|l| &t[i][l] * &s_inv[l][j]).sum()).collect())
            .collect();
        if !m.iter().all(|r| rational::is_integral(r)) {
            return None;
        }
        let im: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|x| x.to_integer()).collect()).collect();
        if IntMatrix::from_rows(im.clone()).ok()?.determinant().ok()?.abs() != BigInt::one() {
            return None;
        }
        let image = |c: &Vec<Rat>| -> Vec<Rat> { (0..k).map(|i| (0..k).map(|j| &m[i][j] * &c[j]).sum()).collect() };
        let ok = src_c
            .iter()
            .zip(&dst_c)
            .all(|(chart, target)| chart.iter().map(image).collect::<BTreeSet<_>>() == *target);
        ok.then_some(im)
    };

    // Try the positional assignment first so that equal atlases give the identity.
    let mut found = if src_basis == dst_basis && flat_src == flat_dst {
        try_assignment(&frame)
    } else {
        None
    };
    if found.is_none() {
        let mut cur = Vec::new();
        let mut used = vec![false; flat_dst.len()];
        found = search(&mut cur, &mut used, k, &try_assignment);
    }
    found.map(|matrix| MonomialWitness {
        source_basis: src_basis,
        target_basis: dst_basis,
        matrix,
    })
}

fn search<F: Fn(&[usize]) -> Option<Vec<Vec<BigInt>>>>(
    cur: &mut Vec<usize>,
    used: &mut [bool],
    k: usize,
    f: &F,
) -> Option<Vec<Vec<BigInt>>> {
    if cur.len() == k {
        return f(cur);
    }
    for i in 0..used.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        cur.push(i);
        let r = search(cur, used, k, f);
        cur.pop();
        used[i] = false;
        if r.is_some() {
            return r;
        }
    }
    None
}

/// Single-chart case of [`atlas_isomorphic`].
pub fn monomial_isomorphic(a: &MonomialAlgebra, b: &MonomialAlgebra) -> Option<MonomialWitness> {
    atlas_isomorphic(std::slice::from_ref(a), std::slice::from_ref(b))
}

fn independent_subset(vectors: &[Vec<Rat>], k: usize) -> Vec<usize> {
    let mut chosen = Vec::new();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if chosen.len() == k {
            break;
        }
        let mut trial = rows.clone();
        trial.push(rational::integer_direction(v).to_vec());
        if rational::rank_int(&trial) == trial.len() {
            rows = trial;
            chosen.push(i);
        }
    }
    chosen
}

fn invert(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let aug: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let (red, pivots) = rational::rref(aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::monomial::default_names;

    fn gm(rows: &[&[i64]]) -> Vec<GradedMonomial> {
        rows.iter().map(|r| GradedMonomial::from_i64s(r, 1)).collect()
    }

    fn exps(r: &MonomialAlgebra) -> Vec<Vec<i64>> {
        r.generators().iter().map(|g| g.exponents.to_i64s().unwrap()).collect()
    }

    fn cp112() -> Vec<GradedMonomial> {
        gm(&[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[0, 0, 1]])
    }

    fn thm() -> Vec<GradedMonomial> {
        gm(&[&[2, 0, 1, 0], &[1, 1, 1, 0], &[0, 2, 1, 0], &[0, 0, 2, 1]])
    }

    #[test]
    fn weighted_plane_charts() {
        let names = default_names(3);
        let atlas = chart_atlas(&names, &cp112()).unwrap();
        let shown: Vec<String> = atlas.iter().map(|r| r.to_string()).collect();
        assert_eq!(shown, ["C[Y/X, Z/X^2]", "C[X/Y, Y/X, Z/XY]", "C[X/Y, Z/Y^2]", "C[X^2/Z, XY/Z, Y^2/Z]"]);
        assert_eq!(exps(&atlas[0]), vec![vec![-1, 1, 0], vec![-2, 0, 1]]);
        assert_eq!(atlas[0].removed().len(), 1);
    }

    #[test]
    fn two_torus_charts() {
        let names = default_names(4);
        let atlas = chart_atlas(&names, &thm()).unwrap();
        assert_eq!(atlas[0].to_string(), "C[Y/X, ZW/X^2]");
        assert_eq!(atlas[3].to_string(), "C[X^2/ZW, XY/ZW, Y^2/ZW]");
    }

    #[test]
    fn single_generator_chart_is_trivial() {
        let r = chart_ring(&default_names(1), &gm(&[&[1]]), 0).unwrap();
        assert!(r.is_trivial());
        assert_eq!(r.to_string(), "C");
        assert_eq!(chart_ring(&default_names(1), &gm(&[&[1]]), 1), Err(Error::IndexOutOfRange { index: 1, len: 1 }));
    }

    #[test]
    fn mixed_degree_chart() {
        // X, Y in degree 1 and Z in degree 2 (A = [1,1,2], α = 1).
        let gens = vec![
            GradedMonomial::from_i64s(&[1, 0, 0], 1),
            GradedMonomial::from_i64s(&[0, 1, 0], 1),
            GradedMonomial::from_i64s(&[0, 0, 1], 2),
        ];
        let names = default_names(3);
        let at_z = chart_ring(&names, &gens, 2).unwrap();
        assert_eq!(at_z.to_string(), "C[X^2/Z, XY/Z, Y^2/Z]");
        let at_x = chart_ring(&names, &gens, 0).unwrap();
        assert_eq!(at_x.to_string(), "C[Y/X, Z/X^2]");
        // Scaling every degree by a common factor changes nothing.
        let scaled: Vec<GradedMonomial> = gens.iter().map(|g| GradedMonomial::new(g.exponents.clone(), g.degree * 3)).collect();
        assert_eq!(chart_ring(&names, &scaled, 2).unwrap(), at_z);
    }

    #[test]
    fn atlases_match_under_one_witness() {
        let a = chart_atlas(&default_names(3), &cp112()).unwrap();
        let b = chart_atlas(&default_names(4), &thm()).unwrap();
        let w = atlas_isomorphic(&a, &b).unwrap();
        for (ra, rb) in a.iter().zip(&b) {
            let image: BTreeSet<LatticeVector> = ra.exponent_vectors().iter().map(|v| w.apply(v).unwrap()).collect();
            assert_eq!(image, rb.exponent_vectors().into_iter().collect());
        }
        assert!(atlas_isomorphic(&a, &a).unwrap().is_identity());
    }

    #[test]
    fn polynomial_ring_vs_chart() {
        let plane = MonomialAlgebra::new(default_names(2), vec![LaurentMonomial::from_i64s(&[1, 0]), LaurentMonomial::from_i64s(&[0, 1])]).unwrap();
        let chart = chart_ring(&default_names(4), &thm(), 0).unwrap();
        assert!(monomial_isomorphic(&plane, &chart).is_some());
    }

    #[test]
    fn ray_vs_line() {
        let names = default_names(1);
        let ray = MonomialAlgebra::new(names.clone(), vec![LaurentMonomial::from_i64s(&[1])]).unwrap();
        let line = MonomialAlgebra::new(names, vec![LaurentMonomial::from_i64s(&[1]), LaurentMonomial::from_i64s(&[-1])]).unwrap();
        assert_eq!(line.generators().len(), 2);
        assert_eq!(monomial_isomorphic(&ray, &line), None);
        assert!(monomial_isomorphic(&ray, &ray).unwrap().is_identity());
    }
}
