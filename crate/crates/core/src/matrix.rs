//! Dense row-major matrices over a generic scalar.
//!
//! Everything here is sized for rank ≤ 8 lattice data and small numeric
//! problems; algorithms favour exactness and clarity over asymptotics.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::scalar::{FieldScalar, IntScalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix dimensions must be at least 1x1")]
    Empty,
    #[error("all rows must have the same length")]
    Ragged,
}

/// Rectangular matrix with entries of type `T`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(MatrixError::Empty);
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(MatrixError::Ragged);
        }
        let nrows = rows.len();
        let data = rows.into_iter().flatten().collect();
        Ok(Matrix { rows: nrows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be at least 1x1");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks_exact(self.cols)
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be at least 1x1");
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, T::zero())
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for row in self.iter_rows() {
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.iter_rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + NumMulAdd,
{
    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc.mul_add_assign(&self[(i, k)], &other[(k, j)]);
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc.mul_add_assign(&self[(i, k)], &v[k]);
                }
                acc
            })
            .collect()
    }
}

/// `acc += a * b` by reference; lets `mul` work for both `Copy` scalars and bignums.
pub trait NumMulAdd: Sized {
    fn mul_add_assign(&mut self, a: &Self, b: &Self);
}

impl<T> NumMulAdd for T
where
    T: Clone + std::ops::Mul<Output = T> + std::ops::AddAssign,
{
    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        *self += a.clone() * b.clone();
    }
}

impl<T: IntScalar> Matrix<T> {
    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<T, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(i, j)].clone() * m[(k, k)].clone()
                        - m[(i, k)].clone() * m[(k, j)].clone();
                    // exact division step of Bareiss elimination
                    m[(i, j)] = num / prev.clone();
                }
                m[(i, k)] = T::zero();
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * m[(n - 1, n - 1)].clone())
    }
}

impl<T: FieldScalar> Matrix<T> {
    /// Exact solve of `self * x = b` by Gauss-Jordan elimination.
    ///
    /// Returns `Ok(None)` when the matrix is singular.
    pub fn solve(&self, b: &[T]) -> Result<Option<Vec<T>>, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        if b.len() != self.rows {
            return Err(MatrixError::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut rhs = b.to_vec();
        for k in 0..n {
            let pivot = match (k..n).find(|&i| !m[(i, k)].is_zero()) {
                Some(p) => p,
                None => return Ok(None),
            };
            m.swap_rows(k, pivot);
            rhs.swap(k, pivot);
            let inv = T::one() / m[(k, k)].clone();
            for j in k..n {
                m[(k, j)] = m[(k, j)].clone() * inv.clone();
            }
            rhs[k] = rhs[k].clone() * inv;
            for i in 0..n {
                if i == k || m[(i, k)].is_zero() {
                    continue;
                }
                let factor = m[(i, k)].clone();
                for j in k..n {
                    let sub = factor.clone() * m[(k, j)].clone();
                    m[(i, j)] = m[(i, j)].clone() - sub;
                }
                let sub = factor * rhs[k].clone();
                rhs[i] = rhs[i].clone() - sub;
            }
        }
        Ok(Some(rhs))
    }

    /// Exact inverse, or `None` when singular.
    pub fn inverse(&self) -> Result<Option<Matrix<T>>, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let e: Vec<T> =
                (0..n).map(|i| if i == j { T::one() } else { T::zero() }).collect();
            match self.solve(&e)? {
                Some(col) => cols.push(col),
                None => return Ok(None),
            }
        }
        Ok(Some(Matrix::from_fn(n, n, |i, j| cols[j][i].clone())))
    }

    pub fn det_field(&self) -> Result<T, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = T::one();
        for k in 0..n {
            let pivot = match (k..n).find(|&i| !m[(i, k)].is_zero()) {
                Some(p) => p,
                None => return Ok(T::zero()),
            };
            if pivot != k {
                m.swap_rows(k, pivot);
                det = -det;
            }
            det = det * m[(k, k)].clone();
            let inv = T::one() / m[(k, k)].clone();
            for i in k + 1..n {
                if m[(i, k)].is_zero() {
                    continue;
                }
                let factor = m[(i, k)].clone() * inv.clone();
                for j in k..n {
                    let sub = factor.clone() * m[(k, j)].clone();
                    m[(i, j)] = m[(i, j)].clone() - sub;
                }
            }
        }
        Ok(det)
    }
}

impl<T: Signed + Clone> Matrix<T> {
    pub fn abs_entrywise(&self) -> Matrix<T> {
        self.map(|x| x.abs())
    }
}
