use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::dd::cone_from_inequalities;
use super::rational::{self, rat, Rat};
use super::vector::LatticeVector;
use crate::error::{Error, Result};

/// `{x ∈ R^dim : normal_i · x <= bound_i}` with rational data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalitySystem {
    dim: usize,
    rows: Vec<(Vec<Rat>, Rat)>,
}

impl InequalitySystem {
    pub fn new(dim: usize) -> Self {
        Self { dim, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Adds `normal · x <= bound`.
    pub fn push(&mut self, normal: Vec<Rat>, bound: Rat) -> Result<()> {
        if normal.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: normal.len(),
            });
        }
        self.rows.push((normal, bound));
        Ok(())
    }

    pub fn push_i64(&mut self, normal: &[i64], bound: i64) -> Result<()> {
        self.push(
            normal.iter().map(|&x| Rat::from_integer(x.into())).collect(),
            Rat::from_integer(bound.into()),
        )
    }

    pub fn rows(&self) -> &[(Vec<Rat>, Rat)] {
        &self.rows
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.rows
            .iter()
            .all(|(a, b)| a.iter().zip(x).map(|(ai, xi)| ai * xi).sum::<Rat>() <= *b)
    }

    fn contains_int(&self, x: &[BigInt]) -> bool {
        self.rows
            .iter()
            .all(|(a, b)| a.iter().zip(x).map(|(ai, xi)| ai * rat(xi)).sum::<Rat>() <= *b)
    }

    /// Vertices of the polyhedron. `Ok(empty)` for an empty polyhedron,
    /// `Err(UnboundedPolytope)` when it has a recession direction.
    pub fn vertices(&self) -> Result<Vec<Vec<Rat>>> {
        // Homogenize: (-a, b) · (x, t) >= 0 and t >= 0.
        let n = self.dim;
        let mut ineqs: Vec<LatticeVector> = self
            .rows
            .iter()
            .map(|(a, b)| {
                let mut v: Vec<Rat> = a.iter().map(|x| -x).collect();
                v.push(b.clone());
                scale_to_integers(&v)
            })
            .collect();
        ineqs.push(LatticeVector::unit(n + 1, n));
        let gens = cone_from_inequalities(n + 1, &ineqs);
        let with_t: Vec<&LatticeVector> = gens.rays.iter().filter(|r| r[n].is_positive()).collect();
        if with_t.is_empty() {
            return Ok(Vec::new());
        }
        if !gens.lineality.is_empty() || gens.rays.iter().any(|r| r[n].is_zero()) {
            return Err(Error::UnboundedPolytope);
        }
        let mut out: Vec<Vec<Rat>> = with_t
            .into_iter()
            .map(|r| {
                let t = rat(&r[n]);
                r[..n].iter().map(|x| rat(x) / &t).collect()
            })
            .collect();
        out.sort();
        Ok(out)
    }
}

fn scale_to_integers(v: &[Rat]) -> LatticeVector {
    let l = rational::common_denominator(v);
    let lr = rat(&l);
    LatticeVector::new(v.iter().map(|x| (x * &lr).to_integer()).collect())
}

/// All integer points of a bounded rational polyhedron, ascending lex order.
pub fn lattice_points(p: &InequalitySystem) -> Result<Vec<LatticeVector>> {
    let verts = p.vertices()?;
    if verts.is_empty() {
        return Ok(Vec::new());
    }
    let n = p.dim();
    let lo: Vec<BigInt> = (0..n)
        .map(|j| verts.iter().map(|v| rational::ceil(&v[j])).min().unwrap())
        .collect();
    let hi: Vec<BigInt> = (0..n)
        .map(|j| verts.iter().map(|v| rational::floor(&v[j])).max().unwrap())
        .collect();
    let mut out = Vec::new();
    let mut x = lo.clone();
    scan_box(p, &lo, &hi, 0, &mut x, &mut out);
    Ok(out)
}

fn scan_box(
    p: &InequalitySystem,
    lo: &[BigInt],
    hi: &[BigInt],
    k: usize,
    x: &mut Vec<BigInt>,
    out: &mut Vec<LatticeVector>,
) {
    if k == lo.len() {
        if p.contains_int(x) {
            out.push(LatticeVector::new(x.clone()));
        }
        return;
    }
    let mut v = lo[k].clone();
    while v <= hi[k] {
        x[k] = v.clone();
        scan_box(p, lo, hi, k + 1, x, out);
        v += BigInt::one();
    }
    x[k] = lo[k].clone();
}

/// Exact integer k-th root of a nonnegative rational, if it exists.
pub fn rational_root(x: &Rat, k: u32) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rat::zero());
    }
    let n = x.numer().nth_root(k);
    let d = x.denom().nth_root(k);
    (num_traits::pow(n.clone(), k as usize) == *x.numer()
        && num_traits::pow(d.clone(), k as usize) == *x.denom())
    .then(|| Rat::new(n, d))
}

/// `lcm` of a list of positive integers.
pub fn lcm_all<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |a, b| a.lcm(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<LatticeVector> {
        let mut out: Vec<LatticeVector> = v.iter().map(|r| LatticeVector::from_i64s(r)).collect();
        out.sort();
        out
    }

    #[test]
    fn empty_polytope() {
        let mut p = InequalitySystem::new(1);
        p.push_i64(&[1], -1).unwrap();
        p.push_i64(&[-1], 0).unwrap();
        assert!(lattice_points(&p).unwrap().is_empty());
    }

    #[test]
    fn weighted_triangle() {
        // x >= 0, y >= 0, x + 2y <= 2
        let mut p = InequalitySystem::new(2);
        p.push_i64(&[-1, 0], 0).unwrap();
        p.push_i64(&[0, -1], 0).unwrap();
        p.push_i64(&[1, 2], 2).unwrap();
        assert_eq!(lattice_points(&p).unwrap(), pts(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1]]));
    }

    #[test]
    fn unit_square() {
        let mut p = InequalitySystem::new(2);
        p.push_i64(&[-1, 0], 0).unwrap();
        p.push_i64(&[0, -1], 0).unwrap();
        p.push_i64(&[1, 0], 1).unwrap();
        p.push_i64(&[0, 1], 1).unwrap();
        assert_eq!(lattice_points(&p).unwrap(), pts(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]));
    }

    #[test]
    fn unbounded_is_an_error() {
        let mut p = InequalitySystem::new(2);
        p.push_i64(&[-1, 0], 0).unwrap();
        p.push_i64(&[0, -1], 0).unwrap();
        assert_eq!(lattice_points(&p).unwrap_err(), Error::UnboundedPolytope);
    }

    #[test]
    fn roots() {
        let r = rational_root(&Rat::new(8.into(), 27.into()), 3).unwrap();
        assert_eq!(r, Rat::new(2.into(), 3.into()));
        assert!(rational_root(&Rat::from_integer(2.into()), 2).is_none());
    }
}
