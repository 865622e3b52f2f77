//! Smith normal form of integer matrices.
//!
//! The decomposition `D = U * M * V` with `U`, `V` unimodular and `D`
//! diagonal with a divisibility chain is the single tool behind all lattice
//! quotients in this crate: the invariant factors of `coker(M)` can be read
//! off the diagonal.

use crate::matrix::Matrix;
use crate::scalar::IntScalar;

/// Result of [`smith_normal_form`]: `d = u * m * v`.
#[derive(Debug, Clone)]
pub struct SmithNormalForm<T> {
    pub d: Matrix<T>,
    pub u: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: IntScalar> SmithNormalForm<T> {
    /// Diagonal entries, zeros included.
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Nontrivial invariant factors (diagonal entries > 1).
    pub fn invariant_factors(&self) -> Vec<T> {
        self.diagonal().into_iter().filter(|x| *x > T::one()).collect()
    }
}

/// Computes the Smith normal form of `m`.
///
/// Pivots are chosen by smallest nonzero absolute value, which keeps entry
/// growth tame on the small matrices this crate deals in. The returned
/// diagonal is nonnegative and satisfies `d1 | d2 | ...`.
pub fn smith_normal_form<T: IntScalar>(m: &Matrix<T>) -> SmithNormalForm<T> {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u: Matrix<T> = Matrix::identity(rows);
    let mut v: Matrix<T> = Matrix::identity(cols);

    let steps = rows.min(cols);
    for k in 0..steps {
        loop {
            let Some((pi, pj)) = min_abs_nonzero(&d, k) else {
                break; // submatrix is zero
            };
            if pi != k {
                d.swap_rows(k, pi);
                u.swap_rows(k, pi);
            }
            if pj != k {
                d.swap_cols(k, pj);
                v.swap_cols(k, pj);
            }

            let mut clean = true;
            for i in k + 1..rows {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let q = rounded_quotient(&d[(i, k)], &d[(k, k)]);
                if !q.is_zero() {
                    row_sub_mul(&mut d, i, k, &q);
                    row_sub_mul(&mut u, i, k, &q);
                }
                if !d[(i, k)].is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..cols {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let q = rounded_quotient(&d[(k, j)], &d[(k, k)]);
                if !q.is_zero() {
                    col_sub_mul(&mut d, j, k, &q);
                    col_sub_mul(&mut v, j, k, &q);
                }
                if !d[(k, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }

            // Row and column are clear; enforce that the pivot divides the
            // rest of the submatrix before moving on.
            let offender = (k + 1..rows)
                .flat_map(|i| (k + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(d[(i, j)].clone() % d[(k, k)].clone()).is_zero());
            match offender {
                Some((i, _)) => {
                    row_add(&mut d, k, i);
                    row_add(&mut u, k, i);
                }
                None => break,
            }
        }
        if d[(k, k)].is_negative() {
            negate_row(&mut d, k);
            negate_row(&mut u, k);
        }
    }

    SmithNormalForm { d, u, v }
}

/// Position of the smallest-magnitude nonzero entry of `m[k.., k..]`.
fn min_abs_nonzero<T: IntScalar>(m: &Matrix<T>, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for i in k..m.rows() {
        for j in k..m.cols() {
            let a = m[(i, j)].abs();
            if a.is_zero() {
                continue;
            }
            match &best {
                Some((_, _, b)) if *b <= a => {}
                _ => best = Some((i, j, a)),
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Quotient rounded toward the nearest integer, so the remainder has
/// magnitude at most half the divisor.
fn rounded_quotient<T: IntScalar>(a: &T, b: &T) -> T {
    let (q, r) = a.div_rem(b);
    let two_r = r.abs() + r.abs();
    if two_r > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + T::one()
        } else {
            q - T::one()
        }
    } else {
        q
    }
}

fn row_sub_mul<T: IntScalar>(m: &mut Matrix<T>, target: usize, source: usize, factor: &T) {
    for j in 0..m.cols() {
        let delta = factor.clone() * m[(source, j)].clone();
        m[(target, j)] -= delta;
    }
}

fn col_sub_mul<T: IntScalar>(m: &mut Matrix<T>, target: usize, source: usize, factor: &T) {
    for i in 0..m.rows() {
        let delta = factor.clone() * m[(i, source)].clone();
        m[(i, target)] -= delta;
    }
}

fn row_add<T: IntScalar>(m: &mut Matrix<T>, target: usize, source: usize) {
    for j in 0..m.cols() {
        let delta = m[(source, j)].clone();
        m[(target, j)] += delta;
    }
}

fn negate_row<T: IntScalar>(m: &mut Matrix<T>, row: usize) {
    for j in 0..m.cols() {
        let x = m[(row, j)].clone();
        m[(row, j)] = -x;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    fn mat(rows: &[&[i64]]) -> Matrix<i64> {
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn check_decomposition(m: &Matrix<i64>) -> SmithNormalForm<i64> {
        let snf = smith_normal_form(m);
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.d, "D != U*M*V for {m:?}");
        assert_eq!(snf.u.det().unwrap().abs(), 1, "U not unimodular");
        assert_eq!(snf.v.det().unwrap().abs(), 1, "V not unimodular");
        let diag = snf.diagonal();
        for i in 0..diag.len() {
            assert!(diag[i] >= 0);
            if i + 1 < diag.len() && diag[i] != 0 {
                assert_eq!(diag[i + 1] % diag[i], 0, "divisibility chain broken: {diag:?}");
            }
            if diag[i] == 0 && i + 1 < diag.len() {
                assert_eq!(diag[i + 1], 0);
            }
        }
        // off-diagonal zero
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    assert_eq!(snf.d[(i, j)], 0);
                }
            }
        }
        snf
    }

    #[test]
    fn snf_of_a2_cartan() {
        // hand row-reduction: [2,-1;-1,2] ~ [1,0;0,3]
        let m = mat(&[&[2, -1], &[-1, 2]]);
        let snf = check_decomposition(&m);
        assert_eq!(snf.diagonal(), vec![1, 3]);
    }

    #[test]
    fn snf_of_identity() {
        let m: Matrix<i64> = Matrix::identity(4);
        let snf = check_decomposition(&m);
        assert_eq!(snf.diagonal(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn snf_of_twice_identity() {
        let m = mat(&[&[2, 0], &[0, 2]]);
        let snf = check_decomposition(&m);
        assert_eq!(snf.diagonal(), vec![2, 2]);
    }

    #[test]
    fn snf_rectangular_and_rank_deficient() {
        let m = mat(&[&[2, 4, 4], &[-6, 6, 12]]);
        let snf = check_decomposition(&m);
        assert_eq!(snf.diagonal(), vec![2, 6]);

        let m = mat(&[&[1, 2], &[2, 4], &[3, 6]]);
        let snf = check_decomposition(&m);
        assert_eq!(snf.diagonal(), vec![1, 0]);
    }

    #[test]
    fn snf_works_over_bigint() {
        let m = Matrix::from_rows(vec![
            vec![Int::from(2), Int::from(-1)],
            vec![Int::from(-1), Int::from(2)],
        ])
        .unwrap();
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal(), vec![Int::from(1), Int::from(3)]);
        assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d);
    }

    #[test]
    fn snf_determinant_consistency() {
        let m = mat(&[&[6, 4, 2], &[4, 8, 0], &[2, 0, 10]]);
        let snf = check_decomposition(&m);
        let det = m.det().unwrap().abs();
        let product: i64 = snf.diagonal().iter().product();
        assert_eq!(det, product);
    }
}
