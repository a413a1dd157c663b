use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cone::RationalCone;
use super::fan::Fan;
use crate::error::{Error, Result};
use crate::lattice::dd::cone_from_inequalities;
use crate::lattice::polyhedron::InequalitySystem;
use crate::lattice::rational::{self, rat, Rat};
use crate::lattice::{IntMatrix, LatticeVector};

/// A polytope given by its vertex set. Vertices may be rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    ambient_dim: usize,
    vertices: Vec<Vec<Rat>>,
}

fn homogenize(p: &[Rat]) -> LatticeVector {
    let mut v = p.to_vec();
    v.push(Rat::one());
    rational::integer_direction(&v)
}

fn dehomogenize(v: &LatticeVector) -> Vec<Rat> {
    let n = v.dim() - 1;
    let t = rat(&v[n]);
    v[..n].iter().map(|x| rat(x) / &t).collect()
}

impl LatticePolytope {
    /// Convex hull of `points`; only the extreme points are kept.
    pub fn from_points(ambient_dim: usize, points: &[Vec<Rat>]) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: p.len(),
            });
        }
        let homog: Vec<LatticeVector> = points.iter().map(|p| homogenize(p)).collect();
        let hull = RationalCone::new(ambient_dim + 1, homog)?;
        let mut vertices: Vec<Vec<Rat>> = hull.generators().iter().map(dehomogenize).collect();
        vertices.sort();
        Ok(Self { ambient_dim, vertices })
    }

    pub fn from_lattice_points(ambient_dim: usize, points: &[LatticeVector]) -> Result<Self> {
        let pts: Vec<Vec<Rat>> = points.iter().map(|p| p.iter().map(rat).collect()).collect();
        Self::from_points(ambient_dim, &pts)
    }

    pub fn from_i64s(ambient_dim: usize, points: &[&[i64]]) -> Result<Self> {
        let pts: Vec<LatticeVector> = points.iter().map(|p| LatticeVector::from_i64s(p)).collect();
        Self::from_lattice_points(ambient_dim, &pts)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.vertices.iter().all(|v| rational::is_integral(v))
    }

    /// Least common denominator of all vertex coordinates.
    pub fn denominator(&self) -> BigInt {
        rational::common_denominator(&self.vertices.concat())
    }

    /// Affine dimension (`None` for the empty polytope).
    pub fn dimension(&self) -> Option<usize> {
        let v0 = self.vertices.first()?;
        let diffs: Vec<Vec<BigInt>> = self.vertices[1..]
            .iter()
            .map(|v| {
                let d: Vec<Rat> = v.iter().zip(v0).map(|(a, b)| a - b).collect();
                rational::integer_direction(&d).to_vec()
            })
            .collect();
        Some(rational::rank_int(&diffs))
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dimension() == Some(self.ambient_dim)
    }

    pub fn dilate(&self, k: &Rat) -> Self {
        let mut vertices: Vec<Vec<Rat>> = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|x| x * k).collect())
            .collect();
        vertices.sort();
        Self {
            ambient_dim: self.ambient_dim,
            vertices,
        }
    }

    /// Facet inequalities `a · x <= b` (plus equalities as inequality pairs
    /// when the polytope is not full-dimensional).
    pub fn inequalities(&self) -> InequalitySystem {
        let n = self.ambient_dim;
        let homog: Vec<LatticeVector> = self.vertices.iter().map(|v| homogenize(v)).collect();
        let dual = cone_from_inequalities(n + 1, &homog);
        let mut sys = InequalitySystem::new(n);
        // (a, c) · (x, 1) >= 0  <=>  -a · x <= c
        let mut push = |u: &LatticeVector| {
            let normal: Vec<Rat> = u[..n].iter().map(|x| -rat(x)).collect();
            sys.push(normal, rat(&u[n])).expect("dimension");
        };
        for u in &dual.rays {
            push(u);
        }
        for l in &dual.lineality {
            push(l);
            push(&-l);
        }
        sys
    }

    pub fn lattice_points(&self) -> Result<Vec<LatticeVector>> {
        if self.is_empty() {
            return Ok(Vec::new());
        }
        crate::lattice::lattice_points(&self.inequalities())
    }

    /// `|det(v_1 - v_0, …, v_k - v_0)|` for a full-dimensional simplex.
    pub fn simplex_volume(&self) -> Option<Rat> {
        if !self.is_full_dimensional() || self.vertices.len() != self.ambient_dim + 1 {
            return None;
        }
        let v0 = &self.vertices[0];
        let rows: Vec<Vec<Rat>> = self.vertices[1..]
            .iter()
            .map(|v| v.iter().zip(v0).map(|(a, b)| a - b).collect())
            .collect();
        Some(rat_det(rows).abs())
    }
}

fn rat_det(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        for i in c + 1..n {
            let f = &m[i][c] / &m[c][c];
            for j in c..n {
                let d = &f * &m[c][j];
                m[i][j] -= d;
            }
        }
    }
    det
}

fn rat_inverse(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
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
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

impl fmt::Display for LatticePolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let parts: Vec<String> = v.iter().map(rational::format_rat).collect();
            write!(f, "({})", parts.join(", "))?;
        }
        write!(f, "}}")
    }
}

/// `x ↦ linear · x + translation` with `|det linear| = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularAffineMap {
    linear: IntMatrix,
    translation: LatticeVector,
}

impl UnimodularAffineMap {
    pub fn new(linear: IntMatrix, translation: LatticeVector) -> Result<Self> {
        if !linear.is_square() || linear.ncols() != translation.dim() {
            return Err(Error::DimensionMismatch {
                expected: linear.ncols(),
                found: translation.dim(),
            });
        }
        if linear.determinant()?.abs() != BigInt::one() {
            return Err(Error::InvalidMatrix("linear part is not unimodular".into()));
        }
        Ok(Self { linear, translation })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            linear: IntMatrix::identity(dim),
            translation: LatticeVector::zero(dim),
        }
    }

    pub fn linear(&self) -> &IntMatrix {
        &self.linear
    }

    pub fn translation(&self) -> &LatticeVector {
        &self.translation
    }

    pub fn apply(&self, x: &[Rat]) -> Vec<Rat> {
        self.linear
            .rows()
            .zip(self.translation.iter())
            .map(|(row, t)| row.iter().zip(x).map(|(a, xi)| rat(a) * xi).sum::<Rat>() + rat(t))
            .collect()
    }

    pub fn apply_polytope(&self, p: &LatticePolytope) -> LatticePolytope {
        let mut vertices: Vec<Vec<Rat>> = p.vertices.iter().map(|v| self.apply(v)).collect();
        vertices.sort();
        LatticePolytope {
            ambient_dim: p.ambient_dim,
            vertices,
        }
    }

    pub fn inverse(&self) -> Self {
        let rows: Vec<Vec<Rat>> = self.linear.rows().map(|r| r.iter().map(rat).collect()).collect();
        let inv = rat_inverse(&rows).expect("unimodular matrices are invertible");
        let inv_int: Vec<Vec<BigInt>> = inv.iter().map(|r| r.iter().map(|x| x.to_integer()).collect()).collect();
        let linear = IntMatrix::from_rows(inv_int).expect("square");
        let t = linear.mul_vec(&self.translation).expect("dimension");
        Self {
            linear,
            translation: -&t,
        }
    }
}

/// Searches for a unimodular affine map carrying `p` onto `q`.
///
/// The search fixes `dim + 1` affinely independent vertices of `p` and tries
/// every injective assignment of them to vertices of `q`, so the cost grows
/// like `V!/(V - dim - 1)!` in the vertex count `V`. That is fine for the
/// small polytopes this crate handles (up to about 8 vertices).
pub fn lattice_equivalent(p: &LatticePolytope, q: &LatticePolytope) -> Result<Option<UnimodularAffineMap>> {
    if p.ambient_dim != q.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim,
            found: q.ambient_dim,
        });
    }
    let k = p.ambient_dim;
    for x in [p, q] {
        if k == 0 || !x.is_full_dimensional() {
            return Err(Error::NotFullDimensional {
                dim: x.dimension().unwrap_or(0),
                ambient: k,
            });
        }
    }
    if p.vertices.len() != q.vertices.len() {
        return Ok(None);
    }
    let frame = affine_frame(&p.vertices);
    let p0 = &p.vertices[frame[0]];
    // Columns are p_i - p_0.
    let pm: Vec<Vec<Rat>> = (0..k)
        .map(|r| frame[1..].iter().map(|&i| &p.vertices[i][r] - &p0[r]).collect())
        .collect();
    let pinv = rat_inverse(&pm).expect("frame is affinely independent");
    let target: BTreeSet<&Vec<Rat>> = q.vertices.iter().collect();

    let mut found = None;
    injective_sequences(q.vertices.len(), k + 1, &mut |seq| {
        let q0 = &q.vertices[seq[0]];
        let qm: Vec<Vec<Rat>> = (0..k)
            .map(|r| seq[1..].iter().map(|&i| &q.vertices[i][r] - &q0[r]).collect())
            .collect();
        let lin: Vec<Vec<Rat>> = (0..k)
            .map(|i| (0..k).map(|j| (0..k).map(|l| &qm[i][l] * &pinv[l][j]).sum()).collect())
            .collect();
        if !lin.iter().all(|r| rational::is_integral(r)) {
            return true;
        }
        let t: Vec<Rat> = (0..k)
            .map(|i| &q0[i] - (0..k).map(|j| &lin[i][j] * &p0[j]).sum::<Rat>())
            .collect();
        if !rational::is_integral(&t) {
            return true;
        }
        let linear = IntMatrix::from_rows(lin.iter().map(|r| r.iter().map(|x| x.to_integer()).collect()).collect())
            .expect("square");
        let translation = LatticeVector::new(t.iter().map(|x| x.to_integer()).collect());
        let Ok(map) = UnimodularAffineMap::new(linear, translation) else {
            return true;
        };
        if p.vertices.iter().all(|v| target.contains(&map.apply(v))) {
            found = Some(map);
            return false;
        }
        true
    });
    Ok(found)
}

fn affine_frame(vertices: &[Vec<Rat>]) -> Vec<usize> {
    let mut frame = vec![0];
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (i, v) in vertices.iter().enumerate().skip(1) {
        let d: Vec<Rat> = v.iter().zip(&vertices[0]).map(|(a, b)| a - b).collect();
        let mut trial = rows.clone();
        trial.push(rational::integer_direction(&d).to_vec());
        if rational::rank_int(&trial) == trial.len() {
            rows = trial;
            frame.push(i);
        }
    }
    frame
}

fn injective_sequences<F: FnMut(&[usize]) -> bool>(n: usize, len: usize, f: &mut F) {
    fn rec<F: FnMut(&[usize]) -> bool>(n: usize, len: usize, cur: &mut Vec<usize>, used: &mut [bool], f: &mut F) -> bool {
        if cur.len() == len {
            return f(cur);
        }
        for i in 0..n {
            if used[i] {
                continue;
            }
            used[i] = true;
            cur.push(i);
            let go = rec(n, len, cur, used, f);
            cur.pop();
            used[i] = false;
            if !go {
                return false;
            }
        }
        true
    }
    rec(n, len, &mut Vec::new(), &mut vec![false; n], f);
}

/// Inner normal fan: the cone at vertex `v` is `{u : u·v <= u·w for all w}`.
pub fn normal_fan(p: &LatticePolytope) -> Result<Fan> {
    let k = p.ambient_dim;
    if k == 0 || !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            dim: p.dimension().unwrap_or(0),
            ambient: k,
        });
    }
    let mut maximal = Vec::new();
    for v in &p.vertices {
        let ineqs: Vec<LatticeVector> = p
            .vertices
            .iter()
            .filter(|w| *w != v)
            .map(|w| {
                let d: Vec<Rat> = w.iter().zip(v).map(|(a, b)| a - b).collect();
                rational::integer_direction(&d)
            })
            .collect();
        let gens = cone_from_inequalities(k, &ineqs);
        maximal.push(RationalCone::new(k, gens.conic_generators())?);
    }
    Ok(Fan::from_maximal(k, &maximal))
}
