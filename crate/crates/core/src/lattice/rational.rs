//! Exact elimination over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::vector::LatticeVector;

pub type Rat = BigRational;

pub fn rat(n: &BigInt) -> Rat {
    Rat::from_integer(n.clone())
}

pub fn to_rat_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<Rat>> {
    rows.iter().map(|r| r.iter().map(rat).collect()).collect()
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(mut m: Vec<Vec<Rat>>) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank_int(rows: &[Vec<BigInt>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rref(to_rat_rows(rows)).1.len()
}

/// Basis of the rational kernel of `rows` (as integer primitive vectors),
/// one vector per free column with that free coordinate positive.
pub fn kernel_basis(rows: &[Vec<BigInt>], ncols: usize) -> Vec<LatticeVector> {
    let (red, pivots) = if rows.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        rref(to_rat_rows(rows))
    };
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            integer_direction(&v)
        })
        .collect()
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn integer_direction(v: &[Rat]) -> LatticeVector {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    LatticeVector::new(v.iter().map(|x| (x * rat(&l)).to_integer()).collect()).primitive()
}

/// Some solution of `rows · x = rhs` (free variables set to zero), if consistent.
pub fn solve(rows: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let aug: Vec<Vec<Rat>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(aug);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rat::zero(); ncols];
    for (row, &p) in red.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

/// Coordinates of `v` in the basis `basis` (rows), if `v` lies in their span.
pub fn coordinates(basis: &[LatticeVector], v: &[Rat]) -> Option<Vec<Rat>> {
    if basis.is_empty() {
        return v.iter().all(Zero::is_zero).then(Vec::new);
    }
    let n = v.len();
    // Columns are basis vectors.
    let rows: Vec<Vec<Rat>> = (0..n)
        .map(|i| basis.iter().map(|b| rat(&b[i])).collect())
        .collect();
    let x = solve(&rows, v)?;
    // `solve` sets free variables to zero, so check the result reproduces v.
    let ok = (0..n).all(|i| {
        let s: Rat = basis.iter().zip(&x).map(|(b, c)| rat(&b[i]) * c).sum();
        s == v[i]
    });
    ok.then_some(x)
}

pub fn is_integral(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_integer())
}

pub fn common_denominator(v: &[Rat]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Floor of a rational as an integer.
pub fn floor(x: &Rat) -> BigInt {
    x.floor().to_integer()
}

pub fn ceil(x: &Rat) -> BigInt {
    x.ceil().to_integer()
}

pub fn format_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn sign(x: &Rat) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
