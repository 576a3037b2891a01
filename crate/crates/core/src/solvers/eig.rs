//! Full eigendecomposition of a real matrix.
//!
//! The real Schur form is rotated into a complex upper-triangular form, right
//! eigenvectors follow by triangular back-substitution, and left rows come
//! from inverting the eigenvector matrix. Intended for dense spectra where
//! every eigenpair is needed, e.g. residue-based dominance ranking.

use num_complex::Complex64;

use super::schur::real_schur;
use crate::error::{Error, Result};
use crate::{CMat, Mat};

#[derive(Debug, Clone)]
pub struct Eigendecomposition {
    /// Eigenvalues, ordered as produced by the Schur form.
    pub values: Vec<Complex64>,
    /// Right eigenvectors as columns, unit 2-norm.
    pub vectors: CMat,
    /// Rows `y_i^T` with `y_i^T x_j = delta_ij` (rows of `vectors^-1`).
    pub left_rows: CMat,
}

/// Computes eigenvalues plus right/left eigenvectors of a real square matrix.
///
/// Fails when the eigenvector matrix is numerically singular (defective or
/// near-defective input).
pub fn eigendecomposition(a: &Mat) -> Result<Eigendecomposition> {
    let schur = real_schur(a, 1e-10)?;
    let n = schur.dim();
    let zero = Complex64::new(0.0, 0.0);

    // Complexify (Q, T) and rotate each 2x2 block to upper-triangular form.
    let mut tc = CMat::from_fn(n, n, |i, j| Complex64::new(schur.t[(i, j)], 0.0));
    let mut qc = CMat::from_fn(n, n, |i, j| Complex64::new(schur.q[(i, j)], 0.0));
    let mut i = 0;
    while i < n {
        if i + 1 < n && schur.t[(i + 1, i)] != 0.0 {
            let a11 = schur.t[(i, i)];
            let a12 = schur.t[(i, i + 1)];
            let a21 = schur.t[(i + 1, i)];
            let a22 = schur.t[(i + 1, i + 1)];
            let re = 0.5 * (a11 + a22);
            let disc = 0.25 * (a11 - a22) * (a11 - a22) + a12 * a21;
            let im = (-disc).max(0.0).sqrt();
            let lambda = Complex64::new(re, im);
            // Eigenvector of the 2x2 block for lambda.
            let (v1, v2) = if a12.abs() >= a21.abs() {
                (Complex64::new(a12, 0.0), lambda - a11)
            } else {
                (lambda - a22, Complex64::new(a21, 0.0))
            };
            let nrm = (v1.norm_sqr() + v2.norm_sqr()).sqrt();
            let (v1, v2) = (v1 / nrm, v2 / nrm);
            // Unitary [[v1, -conj(v2)], [v2, conj(v1)]].
            let g = [[v1, -v2.conj()], [v2, v1.conj()]];
            // tc <- G^H tc G on rows/cols (i, i+1); qc <- qc G.
            for col in 0..n {
                let x = tc[(i, col)];
                let y = tc[(i + 1, col)];
                tc[(i, col)] = g[0][0].conj() * x + g[1][0].conj() * y;
                tc[(i + 1, col)] = g[0][1].conj() * x + g[1][1].conj() * y;
            }
            for row in 0..n {
                let x = tc[(row, i)];
                let y = tc[(row, i + 1)];
                tc[(row, i)] = x * g[0][0] + y * g[1][0];
                tc[(row, i + 1)] = x * g[0][1] + y * g[1][1];
            }
            for row in 0..n {
                let x = qc[(row, i)];
                let y = qc[(row, i + 1)];
                qc[(row, i)] = x * g[0][0] + y * g[1][0];
                qc[(row, i + 1)] = x * g[0][1] + y * g[1][1];
            }
            tc[(i + 1, i)] = zero;
            i += 2;
        } else {
            if i + 1 < n {
                tc[(i + 1, i)] = zero;
            }
            i += 1;
        }
    }

    let values: Vec<Complex64> = (0..n).map(|k| tc[(k, k)]).collect();

    // Right eigenvectors of the triangular factor by back-substitution.
    let mut z = CMat::zeros(n, n);
    for k in 0..n {
        z[(k, k)] = Complex64::new(1.0, 0.0);
        let lk = values[k];
        for j in (0..k).rev() {
            let mut s = zero;
            for l in (j + 1)..=k {
                s += tc[(j, l)] * z[(l, k)];
            }
            let mut denom = tc[(j, j)] - lk;
            let scale = tc[(j, j)].norm().max(lk.norm()).max(1.0);
            if denom.norm() < f64::EPSILON * scale {
                denom = Complex64::new(f64::EPSILON * scale, 0.0);
            }
            z[(j, k)] = -s / denom;
        }
    }

    let mut vectors = qc * z;
    for k in 0..n {
        let nrm = vectors.column(k).norm();
        if nrm > 0.0 {
            let inv = Complex64::new(1.0 / nrm, 0.0);
            for r in 0..n {
                vectors[(r, k)] *= inv;
            }
        }
    }

    let left_rows = vectors
        .clone()
        .lu()
        .try_inverse()
        .ok_or(Error::Singular {
            what: "eigenvector matrix".into(),
        })?;

    Ok(Eigendecomposition {
        values,
        vectors,
        left_rows,
    })
}
