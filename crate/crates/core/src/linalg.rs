//! Small dense linear-algebra helpers shared by the solvers.

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Singular values below this fraction of the largest one count as zero.
pub const RANK_TOLERANCE: f64 = 1e-10;

pub(crate) fn submatrix(m: &DMatrix<f64>, rows: &[usize], cols: &[usize]) -> DMatrix<f64> {
    DMatrix::from_fn(rows.len(), cols.len(), |i, j| m[(rows[i], cols[j])])
}

pub(crate) fn solve_spd(a: DMatrix<f64>, b: &DVector<f64>) -> Result<DVector<f64>> {
    if a.nrows() == 0 {
        return Ok(DVector::zeros(0));
    }
    let chol = a.cholesky().ok_or(Error::Singular)?;
    Ok(chol.solve(b))
}

pub(crate) fn solve_spd_many(a: DMatrix<f64>, b: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    if a.nrows() == 0 {
        return Ok(DMatrix::zeros(0, b.ncols()));
    }
    let chol = a.cholesky().ok_or(Error::Singular)?;
    Ok(chol.solve(b))
}

/// Schur complement of `m` onto the index set `keep`, eliminating the rest.
pub(crate) fn schur_complement(m: &DMatrix<f64>, keep: &[usize]) -> Result<DMatrix<f64>> {
    let n = m.nrows();
    let mut kept = vec![false; n];
    for &k in keep {
        kept[k] = true;
    }
    let drop: Vec<usize> = (0..n).filter(|&i| !kept[i]).collect();
    let m_kk = submatrix(m, keep, keep);
    if drop.is_empty() {
        return Ok(m_kk);
    }
    let m_kd = submatrix(m, keep, &drop);
    let m_dd = submatrix(m, &drop, &drop);
    let x = solve_spd_many(m_dd, &m_kd.transpose())?;
    Ok(m_kk - &m_kd * x)
}

/// Numerical rank with a relative singular-value cutoff.
pub fn numeric_rank(m: &DMatrix<f64>) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.clone().svd(false, false).singular_values;
    let largest = sv.iter().cloned().fold(0.0_f64, f64::max);
    if largest == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > RANK_TOLERANCE * largest).count()
}

/// Orthonormal basis (as columns) of the null space of `m`, using the same
/// relative cutoff as [`numeric_rank`].
pub fn null_space(m: &DMatrix<f64>) -> DMatrix<f64> {
    let n = m.ncols();
    if n == 0 {
        return DMatrix::zeros(0, 0);
    }
    // pad to at least square so the SVD returns a full right basis
    let rows = m.nrows().max(n);
    let mut padded = DMatrix::zeros(rows, n);
    padded.view_mut((0, 0), (m.nrows(), n)).copy_from(m);
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let largest = svd.singular_values.iter().cloned().fold(0.0_f64, f64::max);
    let cols: Vec<usize> = (0..n)
        .filter(|&i| largest == 0.0 || svd.singular_values[i] <= RANK_TOLERANCE * largest)
        .collect();
    DMatrix::from_fn(n, cols.len(), |r, c| v_t[(cols[c], r)])
}

/// Exact rank of an integer matrix by Gaussian elimination over the rationals.
pub fn exact_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let p = a[rank][col].clone();
        for r in 0..nrows {
            if r != rank && !a[r][col].is_zero() {
                let factor = &a[r][col] / &p;
                for c in col..ncols {
                    let delta = &factor * &a[rank][c];
                    a[r][c] -= delta;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Converts an integer-valued float matrix for [`exact_rank`]; `None` if any
/// entry is not an integer.
pub(crate) fn to_integer_rows(m: &DMatrix<f64>) -> Option<Vec<Vec<i64>>> {
    let mut rows = Vec::with_capacity(m.nrows());
    for i in 0..m.nrows() {
        let mut row = Vec::with_capacity(m.ncols());
        for j in 0..m.ncols() {
            let v = m[(i, j)];
            if v.fract() != 0.0 || v.abs() > 1e15 {
                return None;
            }
            row.push(v as i64);
        }
        rows.push(row);
    }
    Some(rows)
}

pub(crate) fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_and_numeric_rank_agree_on_small_matrix() {
        let rows = vec![vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]];
        assert_eq!(exact_rank(&rows), 2);
        let m = DMatrix::from_row_slice(3, 3, &[1., -1., 0., 0., 1., -1., 1., 0., -1.]);
        assert_eq!(numeric_rank(&m), 2);
    }

    #[test]
    fn null_space_of_wide_matrix() {
        let m = DMatrix::from_row_slice(1, 3, &[1., 1., 1.]);
        let k = null_space(&m);
        assert_eq!(k.ncols(), 2);
        assert!((&m * &k).norm() < 1e-14);
        assert!((k.transpose() * &k - DMatrix::identity(2, 2)).norm() < 1e-14);
    }

    #[test]
    fn schur_complement_of_series_resistors() {
        // path 0-1-2 with unit conductances
        let l = DMatrix::from_row_slice(3, 3, &[1., -1., 0., -1., 2., -1., 0., -1., 1.]);
        let s = schur_complement(&l, &[0, 2]).unwrap();
        assert!((s[(0, 1)] + 0.5).abs() < 1e-15);
        assert!((s[(0, 0)] - 0.5).abs() < 1e-15);
    }
}
