//! Exact linear algebra: kernels, solving, subspace intersections.

mod field;
mod matrix;

pub use field::{Field, Fp, Rational, F2147483647};
pub use matrix::Matrix;

use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Columns form a basis of the null space of `m`.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    m.kernel_basis()
}

/// Some `x` with `m x = b`, or `None` if there is none.
pub fn solve_linear<F: Field>(m: &Matrix<F>, b: &[F]) -> Result<Option<Vec<F>>, LinalgError> {
    m.solve(b)
}

/// A basis (as columns) of the intersection of the column spans of `bases`.
///
/// All inputs must share the same ambient dimension (row count). The empty
/// list has no well-defined ambient space and is rejected.
pub fn intersect_subspaces<F: Field>(bases: &[Matrix<F>]) -> Result<Matrix<F>, LinalgError> {
    let Some((first, rest)) = bases.split_first() else {
        return Err(LinalgError::DimensionMismatch { expected: 1, found: 0 });
    };
    let ambient = first.rows();
    let mut acc = column_basis(first);
    for b in rest {
        if b.rows() != ambient {
            return Err(LinalgError::DimensionMismatch { expected: ambient, found: b.rows() });
        }
        // x in span(acc) ∩ span(b)  <=>  x = acc u = b v  <=>  [acc | -b] (u, v) = 0.
        let k = acc.hstack(&b.scale(&F::from_i64(-1))).kernel_basis();
        let u_rows: Vec<usize> = (0..acc.cols()).collect();
        acc = column_basis(&acc.mul(&k.select_rows(&u_rows)));
    }
    Ok(acc)
}

/// A basis of the column span (drops dependent columns).
pub fn column_basis<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    m.select_columns(&m.independent_columns())
}

/// Columns of the identity that complete the columns of `basis` to a basis
/// of the ambient space. `basis` must have independent columns.
pub fn complement_basis<F: Field>(basis: &Matrix<F>) -> Matrix<F> {
    let n = basis.rows();
    let k = basis.cols();
    let pivots = basis.hstack(&Matrix::identity(n)).independent_columns();
    debug_assert!(pivots.iter().take(k).copied().eq(0..k), "basis columns must be independent");
    let extra: Vec<usize> = pivots.into_iter().filter(|&p| p >= k).map(|p| p - k).collect();
    Matrix::identity(n).select_columns(&extra)
}
