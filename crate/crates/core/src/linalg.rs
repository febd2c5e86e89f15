//! Small shared linear-algebra helpers.

use nalgebra::{DMatrix, DVector};

/// Orthonormalize the columns of `m` in place by modified Gram-Schmidt with
/// one reorthogonalization pass. Columns whose residual norm falls below
/// `tol` times their original norm are rejected (returned matrix has fewer
/// columns). The diagonal of the implicit R factor is positive by
/// construction, which is exactly the sign convention a Haar sampler needs.
pub fn orthonormalize(m: &DMatrix<f64>, tol: f64) -> DMatrix<f64> {
    let n = m.nrows();
    let mut cols: Vec<DVector<f64>> = Vec::with_capacity(m.ncols());
    for j in 0..m.ncols() {
        let mut v = m.column(j).clone_owned();
        let orig = v.norm();
        if orig == 0.0 {
            continue;
        }
        // two passes of projection removal keep orthogonality near round-off
        for _ in 0..2 {
            for q in &cols {
                let c = q.dot(&v);
                v.axpy(-c, q, 1.0);
            }
        }
        let norm = v.norm();
        if norm > tol * orig {
            cols.push(v / norm);
        }
    }
    let mut out = DMatrix::zeros(n, cols.len());
    for (j, c) in cols.iter().enumerate() {
        out.set_column(j, c);
    }
    out
}

/// Symmetrize a nearly symmetric matrix: (A + A^T) / 2.
pub fn symmetrize(a: &DMatrix<f64>) -> DMatrix<f64> {
    (a + a.transpose()) * 0.5
}

/// Eigenvalues of a symmetric matrix, sorted ascending.
pub fn symmetric_eigenvalues_sorted(a: &DMatrix<f64>) -> Vec<f64> {
    let mut ev: Vec<f64> = symmetrize(a).symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|p, q| p.total_cmp(q));
    ev
}
