//! Polar factorization `g = k exp(X)` on GL(n, R) and friends.
//!
//! Everything is built on a cyclic Jacobi eigensolver for symmetric
//! matrices, which is plenty at the dimensions involved (n <= ~10). The
//! module is generic over `f32`/`f64`; all tolerances are relative to input
//! norms with an absolute floor.

use thiserror::Error;

use crate::matrix::Matrix;
use crate::scalar::FloatScalar;

/// Absolute tolerance floor.
pub const ABS_FLOOR: f64 = 1e-14;
/// Off-diagonal mass threshold for the Jacobi sweep, relative to the input
/// Frobenius norm.
pub const JACOBI_REL_TOL: f64 = 1e-12;
/// Relative symmetry tolerance accepted on inputs.
pub const INPUT_SYM_REL_TOL: f64 = 1e-8;
/// Relative threshold on the smallest singular value below which a matrix
/// is treated as singular.
pub const SINGULAR_REL_TOL: f64 = 1e-12;
/// Relative tolerance on `det = 1` for the hyperbolic-plane embedding.
pub const UNIMODULAR_REL_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolarError {
    #[error("matrix has non-finite entries")]
    NonFiniteEntries,
    #[error("matrix must be square")]
    NotSquare,
    #[error("matrix dimensions must agree")]
    DimensionMismatch,
    #[error("matrix is not symmetric within tolerance")]
    NotSymmetric,
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("matrix is singular within tolerance")]
    Singular,
    #[error("point is not in the upper half plane (y <= 0)")]
    NotInUpperHalfPlane,
    #[error("matrix is not unimodular within tolerance")]
    NotUnimodular,
    #[error("matrix must be 2x2")]
    NotTwoByTwo,
}

/// Orthogonal/symmetric factor pair with `a = k * exp(x)`.
#[derive(Debug, Clone)]
pub struct PolarPair<T> {
    pub k: Matrix<T>,
    pub x: Matrix<T>,
}

/// `f64` polar pair, the concrete type the CLI works with.
pub type PolarPairF = PolarPair<f64>;

pub fn frobenius_norm<T: FloatScalar>(m: &Matrix<T>) -> T {
    m.iter_rows()
        .flat_map(|r| r.iter())
        .fold(T::zero(), |acc, &x| acc + x * x)
        .sqrt()
}

fn sym_defect<T: FloatScalar>(m: &Matrix<T>) -> T {
    let mut acc = T::zero();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let d = m[(i, j)] - m[(j, i)];
            acc += d * d;
        }
    }
    acc.sqrt()
}

fn check_finite<T: FloatScalar>(m: &Matrix<T>) -> Result<(), PolarError> {
    if m.iter_rows().flatten().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(PolarError::NonFiniteEntries)
    }
}

fn check_symmetric<T: FloatScalar>(m: &Matrix<T>) -> Result<(), PolarError> {
    if !m.is_square() {
        return Err(PolarError::NotSquare);
    }
    check_finite(m)?;
    let tol = T::from_f64(ABS_FLOOR).unwrap()
        + T::from_f64(INPUT_SYM_REL_TOL).unwrap() * frobenius_norm(m);
    if sym_defect(m) > tol {
        return Err(PolarError::NotSymmetric);
    }
    Ok(())
}

/// Symmetric eigendecomposition by cyclic Jacobi rotations:
/// `s = q * diag(values) * q^T` with `q` orthogonal.
pub fn jacobi_eigen<T: FloatScalar>(s: &Matrix<T>) -> Result<(Vec<T>, Matrix<T>), PolarError> {
    check_symmetric(s)?;
    let n = s.rows();
    let mut a = s.clone();
    // symmetrize exactly so the sweep sees a perfectly symmetric matrix
    for i in 0..n {
        for j in 0..n {
            let avg = (a[(i, j)] + a[(j, i)]) / T::from_f64(2.0).unwrap();
            a[(i, j)] = avg;
            a[(j, i)] = avg;
        }
    }
    let mut q: Matrix<T> = Matrix::identity(n);
    let threshold = T::from_f64(ABS_FLOOR).unwrap()
        + T::from_f64(JACOBI_REL_TOL).unwrap() * frobenius_norm(&a);

    let off = |a: &Matrix<T>| {
        let mut acc = T::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    acc += a[(i, j)] * a[(i, j)];
                }
            }
        }
        acc.sqrt()
    };

    let mut sweeps = 0;
    while off(&a) > threshold {
        for p in 0..n {
            for r in p + 1..n {
                let apr = a[(p, r)];
                if apr.abs() <= T::from_f64(ABS_FLOOR).unwrap() {
                    continue;
                }
                let app = a[(p, p)];
                let arr = a[(r, r)];
                let theta = (arr - app) / (T::from_f64(2.0).unwrap() * apr);
                // tan of the rotation angle, the stable small-root formula
                let t = {
                    let sign = if theta >= T::zero() { T::one() } else { -T::one() };
                    sign / (theta.abs() + (theta * theta + T::one()).sqrt())
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let sn = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akr = a[(k, r)];
                    a[(k, p)] = c * akp - sn * akr;
                    a[(k, r)] = sn * akp + c * akr;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let ark = a[(r, k)];
                    a[(p, k)] = c * apk - sn * ark;
                    a[(r, k)] = sn * apk + c * ark;
                }
                for k in 0..n {
                    let qkp = q[(k, p)];
                    let qkr = q[(k, r)];
                    q[(k, p)] = c * qkp - sn * qkr;
                    q[(k, r)] = sn * qkp + c * qkr;
                }
            }
        }
        sweeps += 1;
        if sweeps > 100 {
            break; // quadratic convergence makes this unreachable in practice
        }
    }
    let values: Vec<T> = (0..n).map(|i| a[(i, i)]).collect();
    Ok((values, q))
}

fn apply_spectral<T: FloatScalar>(
    values: &[T],
    q: &Matrix<T>,
    f: impl Fn(T) -> T,
) -> Matrix<T> {
    let n = values.len();
    // q * diag(f(values)) * q^T, symmetrized by construction
    Matrix::from_fn(n, n, |i, j| {
        let mut acc = T::zero();
        for k in 0..n {
            acc += q[(i, k)] * f(values[k]) * q[(j, k)];
        }
        acc
    })
}

/// Exponential of a symmetric matrix via eigendecomposition.
pub fn sym_exp<T: FloatScalar>(x: &Matrix<T>) -> Result<Matrix<T>, PolarError> {
    let (values, q) = jacobi_eigen(x)?;
    Ok(apply_spectral(&values, &q, |v| v.exp()))
}

/// Logarithm of a symmetric positive definite matrix.
pub fn sym_log<T: FloatScalar>(s: &Matrix<T>) -> Result<Matrix<T>, PolarError> {
    let (values, q) = jacobi_eigen(s)?;
    if values.iter().any(|v| *v <= T::zero()) {
        return Err(PolarError::NotPositiveDefinite);
    }
    Ok(apply_spectral(&values, &q, |v| v.ln()))
}

/// Polar factorization `a = k * exp(x)` with `k` orthogonal and `x`
/// symmetric: `x = log(a^T a) / 2`, `k = a * exp(-x)`.
pub fn polar_decompose<T: FloatScalar>(a: &Matrix<T>) -> Result<PolarPair<T>, PolarError> {
    if !a.is_square() {
        return Err(PolarError::NotSquare);
    }
    check_finite(a)?;
    let at = a.transpose();
    let ata = at.mul(a);
    let (values, q) = jacobi_eigen(&ata)?;
    // eigenvalues of a^T a are squared singular values
    let scale = frobenius_norm(a);
    let floor = T::from_f64(ABS_FLOOR).unwrap()
        + T::from_f64(SINGULAR_REL_TOL).unwrap() * scale;
    if values.iter().any(|v| *v <= floor * floor) {
        return Err(PolarError::Singular);
    }
    let two = T::from_f64(2.0).unwrap();
    let x = apply_spectral(&values, &q, |v| v.ln() / two);
    let exp_neg_x = apply_spectral(&values, &q, |v| T::one() / v.sqrt());
    let mut k = a.mul(&exp_neg_x);
    // Newton-Schulz polish: k <- k (3I - k^T k)/2 restores orthogonality
    // quadratically, which matters for ill-conditioned inputs
    let n = a.rows();
    for _ in 0..2 {
        let ktk = k.transpose().mul(&k);
        let correction = Matrix::from_fn(n, n, |i, j| {
            let three_eye = if i == j { T::from_f64(3.0).unwrap() } else { T::zero() };
            (three_eye - ktk[(i, j)]) / two
        });
        k = k.mul(&correction);
    }
    Ok(PolarPair { k, x })
}

/// Differential of the matrix exponential as the convergent series
/// `(1 - e^{-ad X})/(ad X)` applied to `Y`:
/// terms `(-ad X)^m Y / (m+1)!` summed until the increment is negligible.
pub fn dexp_apply<T: FloatScalar>(x: &Matrix<T>, y: &Matrix<T>) -> Result<Matrix<T>, PolarError> {
    if !x.is_square() || !y.is_square() {
        return Err(PolarError::NotSquare);
    }
    if x.rows() != y.rows() {
        return Err(PolarError::DimensionMismatch);
    }
    check_finite(x)?;
    check_finite(y)?;
    let tol = T::from_f64(ABS_FLOOR).unwrap()
        * (T::one() + frobenius_norm(y));
    let mut term = y.clone();
    let mut sum = y.clone();
    for m in 1..200 {
        // term <- -[x, term] / (m + 1)
        let bracket = x.mul(&term).sub(&term.mul(x));
        let denom = T::from_usize(m + 1).unwrap();
        term = bracket.map(|v| -*v / denom);
        sum = sum.add(&term);
        if frobenius_norm(&term) < tol {
            break;
        }
    }
    Ok(sum)
}

impl<T: FloatScalar> Matrix<T> {
    fn add(&self, other: &Matrix<T>) -> Matrix<T> {
        Matrix::from_fn(self.rows(), self.cols(), |i, j| self[(i, j)] + other[(i, j)])
    }

    fn sub(&self, other: &Matrix<T>) -> Matrix<T> {
        Matrix::from_fn(self.rows(), self.cols(), |i, j| self[(i, j)] - other[(i, j)])
    }
}

/// Cartan embedding of the upper half plane onto positive definite
/// symmetric unimodular 2x2 matrices:
/// `x + iy -> [[y + x^2/y, x/y], [x/y, 1/y]]`.
pub fn h2_embed<T: FloatScalar>(x: T, y: T) -> Result<Matrix<T>, PolarError> {
    if !x.is_finite() || !y.is_finite() {
        return Err(PolarError::NonFiniteEntries);
    }
    if y <= T::zero() {
        return Err(PolarError::NotInUpperHalfPlane);
    }
    Ok(Matrix::from_rows(vec![
        vec![y + x * x / y, x / y],
        vec![x / y, T::one() / y],
    ])
    .expect("2x2"))
}

/// Inverse of [`h2_embed`]: `[[A, B], [B, D]] -> B/D + i/D`.
pub fn h2_unembed<T: FloatScalar>(s: &Matrix<T>) -> Result<(T, T), PolarError> {
    if s.rows() != 2 || s.cols() != 2 {
        return Err(PolarError::NotTwoByTwo);
    }
    check_symmetric(s)?;
    let det = s[(0, 0)] * s[(1, 1)] - s[(0, 1)] * s[(1, 0)];
    let tol = T::from_f64(ABS_FLOOR).unwrap() + T::from_f64(UNIMODULAR_REL_TOL).unwrap();
    if (det - T::one()).abs() > tol {
        return Err(PolarError::NotUnimodular);
    }
    if s[(1, 1)] <= T::zero() || s[(0, 0)] <= T::zero() {
        return Err(PolarError::NotPositiveDefinite);
    }
    let d = s[(1, 1)];
    Ok((s[(0, 1)] / d, T::one() / d))
}
