//! Row Hermite normal form and the lattice computations built on it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::vector::LatticeVector;

/// Extended gcd with a nonnegative gcd: `x*a + y*b = g`.
fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let nr = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, nr);
        let ns = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, ns);
        let nt = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, nt);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Row-style HNF on raw rows: returns `(H, U)` with `U · M = H`, `U` unimodular.
///
/// `H` is in row echelon form, pivots are positive and entries above a pivot
/// lie in `[0, pivot)`.
pub(crate) fn hnf_rows(m: &[Vec<BigInt>], ncols: usize) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let r = m.len();
    let mut h: Vec<Vec<BigInt>> = m.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..r)
        .map(|i| (0..r).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();

    let mut pr = 0;
    for col in 0..ncols {
        if pr == r {
            break;
        }
        for i in pr + 1..r {
            if h[i][col].is_zero() {
                continue;
            }
            let a = h[pr][col].clone();
            let b = h[i][col].clone();
            let (g, x, y) = ext_gcd(&a, &b);
            let (ag, bg) = (&a / &g, &b / &g);
            combine(&mut h, pr, i, &x, &y, &bg, &ag);
            combine(&mut u, pr, i, &x, &y, &bg, &ag);
        }
        if h[pr][col].is_zero() {
            continue;
        }
        if h[pr][col].is_negative() {
            negate(&mut h[pr]);
            negate(&mut u[pr]);
        }
        let p = h[pr][col].clone();
        for i in 0..pr {
            let q = h[i][col].div_floor(&p);
            if !q.is_zero() {
                sub_multiple(&mut h, i, pr, &q);
                sub_multiple(&mut u, i, pr, &q);
            }
        }
        pr += 1;
    }
    (h, u)
}

// (row_p, row_i) <- (x row_p + y row_i, -bg row_p + ag row_i)
fn combine(m: &mut [Vec<BigInt>], p: usize, i: usize, x: &BigInt, y: &BigInt, bg: &BigInt, ag: &BigInt) {
    for j in 0..m[p].len() {
        let (vp, vi) = (m[p][j].clone(), m[i][j].clone());
        m[p][j] = x * &vp + y * &vi;
        m[i][j] = ag * &vi - bg * &vp;
    }
}

fn negate(row: &mut [BigInt]) {
    for v in row.iter_mut() {
        *v = -&*v;
    }
}

fn sub_multiple(m: &mut [Vec<BigInt>], target: usize, src: usize, q: &BigInt) {
    for j in 0..m[target].len() {
        let d = q * &m[src][j];
        m[target][j] -= d;
    }
}

/// Row Hermite normal form: `(H, U)` with `U` unimodular and `U · M = H`.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (h, u) = hnf_rows(&m.to_rows(), m.ncols());
    (
        IntMatrix::from_rows(h).expect("HNF keeps the shape"),
        IntMatrix::from_rows(u).expect("transform is square"),
    )
}

/// Lattice basis of `{x ∈ Z^n : M x = 0}`, returned in Hermite normal form.
pub fn integer_kernel(m: &IntMatrix) -> Vec<LatticeVector> {
    kernel_of_rows(&m.to_rows(), m.ncols())
}

pub(crate) fn kernel_of_rows(rows: &[Vec<BigInt>], ncols: usize) -> Vec<LatticeVector> {
    if rows.is_empty() {
        return (0..ncols).map(|i| LatticeVector::unit(ncols, i)).collect();
    }
    // U · Mᵀ = H; rows of U facing zero rows of H span the kernel.
    let t: Vec<Vec<BigInt>> = (0..ncols)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect();
    let (h, u) = hnf_rows(&t, rows.len());
    let basis: Vec<LatticeVector> = h
        .iter()
        .zip(u)
        .filter(|(hr, _)| hr.iter().all(Zero::is_zero))
        .map(|(_, ur)| LatticeVector::new(ur))
        .collect();
    lattice_basis(&basis, ncols)
}

/// HNF basis of the lattice generated by `gens` (zero rows dropped).
pub fn lattice_basis(gens: &[LatticeVector], ncols: usize) -> Vec<LatticeVector> {
    if gens.is_empty() {
        return Vec::new();
    }
    let rows: Vec<Vec<BigInt>> = gens.iter().map(|g| g.to_vec()).collect();
    let (h, _) = hnf_rows(&rows, ncols);
    h.into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(LatticeVector::new)
        .collect()
}

/// Basis of `Z^n ∩ span(gens)`.
pub fn saturation(gens: &[LatticeVector], ncols: usize) -> Vec<LatticeVector> {
    let nonzero: Vec<Vec<BigInt>> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.to_vec()).collect();
    if nonzero.is_empty() {
        return Vec::new();
    }
    let perp = kernel_of_rows(&nonzero, ncols);
    let perp_rows: Vec<Vec<BigInt>> = perp.iter().map(|v| v.to_vec()).collect();
    kernel_of_rows(&perp_rows, ncols)
}

/// Re-expresses a lattice basis in echelon form anchored at the last
/// coordinates: the basis vector with the leftmost pivot comes first, and
/// each pivot is the last nonzero coordinate of its vector.
///
/// For a kernel of a matrix whose trailing columns are free, the pivots are
/// unit vectors on those columns.
pub fn trailing_echelon_basis(basis: &[LatticeVector]) -> Vec<LatticeVector> {
    if basis.is_empty() {
        return Vec::new();
    }
    let n = basis[0].dim();
    let rev: Vec<LatticeVector> = basis
        .iter()
        .map(|b| LatticeVector::new(b.iter().rev().cloned().collect()))
        .collect();
    let mut h = lattice_basis(&rev, n);
    h.reverse();
    h.into_iter()
        .map(|b| LatticeVector::new(b.iter().rev().cloned().collect()))
        .collect()
}

/// An integer solution of `M x = b`, if one exists.
pub fn solve_integer(m: &IntMatrix, b: &[BigInt]) -> Option<LatticeVector> {
    if b.len() != m.nrows() {
        return None;
    }
    let n = m.ncols();
    // U · Mᵀ = H, hence M · Uᵀ = Hᵀ. Solve Hᵀ y = b, then x = Uᵀ y.
    let (h, u) = hnf_rows(&m.transpose().to_rows(), m.nrows());
    let mut y = vec![BigInt::zero(); n];
    let mut pivot_of_row = Vec::new();
    for (i, row) in h.iter().enumerate() {
        if let Some(c) = row.iter().position(|x| !x.is_zero()) {
            pivot_of_row.push((i, c));
        }
    }
    for &(i, c) in &pivot_of_row {
        let partial: BigInt = pivot_of_row
            .iter()
            .filter(|&&(i2, _)| i2 < i)
            .map(|&(i2, _)| &h[i2][c] * &y[i2])
            .sum();
        let rem = &b[c] - partial;
        let (q, r) = rem.div_rem(&h[i][c]);
        if !r.is_zero() {
            return None;
        }
        y[i] = q;
    }
    // Consistency of the non-pivot equations.
    for (j, bj) in b.iter().enumerate() {
        let s: BigInt = (0..n).map(|i| &h[i][j] * &y[i]).sum();
        if &s != bj {
            return None;
        }
    }
    let x: Vec<BigInt> = (0..n).map(|j| (0..n).map(|i| &u[i][j] * &y[i]).sum()).collect();
    Some(LatticeVector::new(x))
}
