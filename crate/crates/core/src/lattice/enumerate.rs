//! Nonnegative solutions of integer linear systems.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::rational::{self, rat, Rat};
use super::vector::LatticeVector;
use crate::error::{Error, Result};

/// Extreme rays of the pointed cone `{x >= 0 : M x = 0}`, as primitive
/// vectors. These are the sign-consistent circuits of `M`: vectors of minimal
/// support in the kernel, which we find by scanning column subsets.
pub fn nonneg_circuits(m: &IntMatrix) -> Vec<LatticeVector> {
    let n = m.ncols();
    let max_size = (m.rank() + 1).min(n);
    let mut out = Vec::new();
    for size in 1..=max_size {
        for subset in Subsets::new(n, size) {
            // Skip supersets of circuits already found: they cannot be minimal.
            if out.iter().any(|c: &LatticeVector| {
                c.positive_support().iter().all(|i| subset.contains(i))
            }) {
                continue;
            }
            let sub = m.select_columns(&subset);
            let kernel = rational::kernel_basis(&sub, size);
            if kernel.len() != 1 {
                continue;
            }
            let mut v = kernel.into_iter().next().unwrap();
            if v.iter().all(|x| x.is_negative()) {
                v = -&v;
            }
            if !v.iter().all(|x| x.is_positive()) {
                continue;
            }
            let mut full = vec![BigInt::zero(); n];
            for (k, &j) in subset.iter().enumerate() {
                full[j] = v[k].clone();
            }
            out.push(LatticeVector::new(full));
        }
    }
    out.sort();
    out
}

/// `{x >= 0 : M x = b}` as vertices plus recession rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlicePolyhedron {
    pub vertices: Vec<Vec<Rat>>,
    pub rays: Vec<LatticeVector>,
}

impl SlicePolyhedron {
    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Componentwise `floor(max over vertices)`; `None` when unbounded or empty.
    pub fn coordinate_bounds(&self) -> Option<Vec<BigInt>> {
        if !self.is_bounded() || self.is_empty() {
            return None;
        }
        let n = self.vertices[0].len();
        Some(
            (0..n)
                .map(|j| {
                    self.vertices
                        .iter()
                        .map(|v| rational::floor(&v[j]))
                        .max()
                        .unwrap()
                })
                .collect(),
        )
    }
}

pub fn slice_polyhedron(m: &IntMatrix, b: &[BigInt]) -> Result<SlicePolyhedron> {
    check_rhs(m, b)?;
    let neg_b: Vec<BigInt> = b.iter().map(|x| -x).collect();
    let homog = m.with_column(&neg_b)?;
    let n = m.ncols();
    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    for c in nonneg_circuits(&homog) {
        let t = &c[n];
        if t.is_zero() {
            rays.push(LatticeVector::new(c[..n].to_vec()));
        } else {
            let tr = rat(t);
            vertices.push(c[..n].iter().map(|x| rat(x) / &tr).collect::<Vec<Rat>>());
        }
    }
    vertices.sort();
    vertices.dedup();
    Ok(SlicePolyhedron { vertices, rays })
}

fn check_rhs(m: &IntMatrix, b: &[BigInt]) -> Result<()> {
    if b.len() != m.nrows() {
        return Err(Error::DimensionMismatch {
            expected: m.nrows(),
            found: b.len(),
        });
    }
    Ok(())
}

/// All `x ∈ N^n` with `M x = b`, in ascending lexicographic order.
///
/// Fails with [`Error::UnboundedSolutionSet`] when `{x >= 0 : Mx = 0}` is
/// nontrivial, before any enumeration happens.
pub fn enumerate_nonneg_solutions(m: &IntMatrix, b: &[BigInt]) -> Result<Vec<LatticeVector>> {
    check_rhs(m, b)?;
    if !nonneg_circuits(m).is_empty() {
        return Err(Error::UnboundedSolutionSet);
    }
    let slice = slice_polyhedron(m, b)?;
    let Some(bounds) = slice.coordinate_bounds() else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    enumerate_in_box(m, b, &bounds, |x| {
        out.push(x);
        true
    });
    out.sort();
    Ok(out)
}

/// True iff some `x ∈ N^n` satisfies `M x = b`. Works for unbounded systems
/// too: any integer solution can be shifted by integer multiples of the
/// recession rays into `vertices + [0,1]·rays`, so scanning that box decides.
pub fn has_nonneg_solution(m: &IntMatrix, b: &[BigInt]) -> Result<bool> {
    let slice = slice_polyhedron(m, b)?;
    if slice.is_empty() {
        return Ok(false);
    }
    let n = m.ncols();
    let bounds: Vec<BigInt> = (0..n)
        .map(|j| {
            let vmax = slice.vertices.iter().map(|v| rational::floor(&v[j])).max().unwrap();
            let rsum: BigInt = slice.rays.iter().map(|r| r[j].clone()).sum();
            vmax + rsum
        })
        .collect();
    let mut found = false;
    enumerate_in_box(m, b, &bounds, |_| {
        found = true;
        false
    });
    Ok(found)
}

/// Visits every `x` with `0 <= x <= upper` and `M x = b`. Pivot variables of
/// the reduced echelon form are solved for; only free variables are scanned.
/// The visitor returns `false` to stop early.
pub(crate) fn enumerate_in_box<F: FnMut(LatticeVector) -> bool>(
    m: &IntMatrix,
    b: &[BigInt],
    upper: &[BigInt],
    mut visit: F,
) {
    let n = m.ncols();
    if upper.iter().any(|u| u.is_negative()) {
        return;
    }
    let mut aug = rational::to_rat_rows(&m.to_rows());
    for (row, bi) in aug.iter_mut().zip(b) {
        row.push(rat(bi));
    }
    let (red, pivots) = rational::rref(aug);
    if pivots.last() == Some(&n) {
        return;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();

    // den * x_p = c_p - sum_f coef[p][f] * x_f with integer c_p and coef.
    let den = red.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let dr = rat(&den);
    let consts: Vec<BigInt> = red.iter().map(|r| (&r[n] * &dr).to_integer()).collect();
    let coefs: Vec<Vec<BigInt>> = red
        .iter()
        .map(|r| free.iter().map(|&f| (&r[f] * &dr).to_integer()).collect())
        .collect();
    // For pruning: can later free variables still raise pivot p?
    let can_raise: Vec<Vec<bool>> = coefs
        .iter()
        .map(|cs| {
            (0..=free.len())
                .map(|k| cs[k..].iter().any(|c| c.is_negative()))
                .collect()
        })
        .collect();

    let mut state = Scan {
        free: &free,
        pivots: &pivots,
        coefs: &coefs,
        can_raise: &can_raise,
        upper,
        den: &den,
        x: vec![BigInt::zero(); n],
        acc: consts,
        stopped: false,
    };
    state.descend(0, &mut visit);
}

struct Scan<'a> {
    free: &'a [usize],
    pivots: &'a [usize],
    coefs: &'a [Vec<BigInt>],
    can_raise: &'a [Vec<bool>],
    upper: &'a [BigInt],
    den: &'a BigInt,
    x: Vec<BigInt>,
    acc: Vec<BigInt>,
    stopped: bool,
}

impl Scan<'_> {
    fn descend<F: FnMut(LatticeVector) -> bool>(&mut self, k: usize, visit: &mut F) {
        if self.stopped {
            return;
        }
        if k == self.free.len() {
            for (p, &col) in self.pivots.iter().enumerate() {
                let (q, r) = self.acc[p].div_rem(self.den);
                if !r.is_zero() || q.is_negative() || q > self.upper[col] {
                    return;
                }
                self.x[col] = q;
            }
            if !visit(LatticeVector::new(self.x.clone())) {
                self.stopped = true;
            }
            return;
        }
        let f = self.free[k];
        let mut v = BigInt::zero();
        let saved = self.acc.clone();
        while v <= self.upper[f] {
            self.x[f] = v.clone();
            let stuck = |p: usize, from: usize| self.acc[p].is_negative() && !self.can_raise[p][from];
            // Nothing from here on can lift a negative pivot: stop this level.
            if (0..self.pivots.len()).any(|p| stuck(p, k)) {
                break;
            }
            if !(0..self.pivots.len()).any(|p| stuck(p, k + 1)) {
                self.descend(k + 1, visit);
            }
            if self.stopped {
                return;
            }
            for p in 0..self.pivots.len() {
                let c = &self.coefs[p][k];
                self.acc[p] -= c;
            }
            v += 1;
        }
        self.acc = saved;
        self.x[f] = BigInt::zero();
    }
}

/// Lexicographically ordered k-subsets of `0..n`.
pub(crate) struct Subsets {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Subsets {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            cur: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.cur.take()?;
        let k = cur.len();
        let mut nxt = cur.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if nxt[i] < self.n - k + i {
                nxt[i] += 1;
                for j in i + 1..k {
                    nxt[j] = nxt[j - 1] + 1;
                }
                self.cur = Some(nxt);
                return Some(cur);
            }
        }
        Some(cur)
    }
}
