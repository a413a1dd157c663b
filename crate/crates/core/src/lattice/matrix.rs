use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational;
use super::vector::{dot, LatticeVector};
use crate::error::{Error, Result};

/// A dense integer matrix, row-major, with at least one row and one column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::InvalidMatrix("matrix has no rows".into()));
        }
        let c = rows[0].len();
        if c == 0 {
            return Err(Error::InvalidMatrix("matrix has no columns".into()));
        }
        if let Some(i) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::InvalidMatrix(format!(
                "row {i} has {} entries, expected {c}",
                rows[i].len()
            )));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn from_lattice_rows(rows: &[LatticeVector]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.to_vec()).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "IntMatrix needs positive dimensions");
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.data.chunks(self.cols)
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> LatticeVector {
        LatticeVector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn columns(&self) -> Vec<LatticeVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s: BigInt = (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum();
                out.set(i, j, s);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<LatticeVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(LatticeVector::new(self.rows().map(|r| dot(r, v)).collect()))
    }

    /// Appends `col` as a new last column.
    pub fn with_column(&self, col: &[BigInt]) -> Result<IntMatrix> {
        if col.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: col.len(),
            });
        }
        Self::from_rows(
            self.rows()
                .zip(col)
                .map(|(r, c)| {
                    let mut r = r.to_vec();
                    r.push(c.clone());
                    r
                })
                .collect(),
        )
    }

    /// Submatrix on the given column indices.
    pub fn select_columns(&self, cols: &[usize]) -> Vec<Vec<BigInt>> {
        self.rows()
            .map(|r| cols.iter().map(|&j| r[j].clone()).collect())
            .collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::InvalidMatrix("determinant of a non-square matrix".into()));
        }
        Ok(bareiss_det(self.to_rows()))
    }

    pub fn rank(&self) -> usize {
        rational::rank_int(&self.to_rows())
    }
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", LatticeVector::new(r.to_vec()))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_ragged_rows() {
        let err = IntMatrix::from_i64_rows(&[vec![1, 2], vec![3]]).unwrap_err();
        assert!(matches!(err, Error::InvalidMatrix(_)));
        assert!(IntMatrix::from_rows(vec![]).is_err());
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = IntMatrix::from_i64_rows(&[[2, -1, 0], [1, 3, 4], [0, 5, -2]]).unwrap();
        // 2*(3*-2 - 4*5) - (-1)*(1*-2 - 0) + 0
        assert_eq!(m.determinant().unwrap(), BigInt::from(-54));
        let singular = IntMatrix::from_i64_rows(&[[1, 2], [2, 4]]).unwrap();
        assert_eq!(singular.determinant().unwrap(), BigInt::zero());
        let swap = IntMatrix::from_i64_rows(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(swap.determinant().unwrap(), BigInt::from(-1));
    }

    #[test]
    fn multiplication_and_transpose() {
        let a = IntMatrix::from_i64_rows(&[[1, 2, 3]]).unwrap();
        let at = a.transpose();
        assert_eq!(at.nrows(), 3);
        let p = a.mul(&at).unwrap();
        assert_eq!(p.get(0, 0), &BigInt::from(14));
        assert!(a.mul(&a).is_err());
    }
}
