//! Real Schur decomposition with standardized diagonal blocks.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::Mat;

/// Orthogonal/quasi-triangular factorization `A = Q T Q^T`.
///
/// `T` is upper quasi-triangular: the diagonal carries 1x1 blocks for real
/// eigenvalues and 2x2 blocks for complex-conjugate pairs. 2x2 blocks with
/// real eigenvalues are split during construction, so every surviving 2x2
/// block encodes a genuine complex pair.
#[derive(Debug, Clone)]
pub struct RealSchurForm {
    pub q: Mat,
    pub t: Mat,
}

impl RealSchurForm {
    /// Dimension of the factored matrix.
    pub fn dim(&self) -> usize {
        self.t.nrows()
    }

    /// Start indices of the diagonal blocks, in order.
    pub fn block_starts(&self) -> Vec<usize> {
        let n = self.dim();
        let mut starts = Vec::with_capacity(n);
        let mut i = 0;
        while i < n {
            starts.push(i);
            if i + 1 < n && self.t[(i + 1, i)] != 0.0 {
                i += 2;
            } else {
                i += 1;
            }
        }
        starts
    }

    /// Eigenvalues read off the quasi-diagonal.
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        let n = self.dim();
        let mut eigs = Vec::with_capacity(n);
        let mut i = 0;
        while i < n {
            if i + 1 < n && self.t[(i + 1, i)] != 0.0 {
                let (a, b) = (self.t[(i, i)], self.t[(i, i + 1)]);
                let (c, d) = (self.t[(i + 1, i)], self.t[(i + 1, i + 1)]);
                let re = 0.5 * (a + d);
                let disc = 0.25 * (a - d) * (a - d) + b * c;
                // Standardization guarantees disc < 0 here.
                let im = (-disc).max(0.0).sqrt();
                eigs.push(Complex64::new(re, im));
                eigs.push(Complex64::new(re, -im));
                i += 2;
            } else {
                eigs.push(Complex64::new(self.t[(i, i)], 0.0));
                i += 1;
            }
        }
        eigs
    }

    /// Largest real part over the spectrum.
    pub fn spectral_abscissa(&self) -> f64 {
        self.eigenvalues()
            .iter()
            .map(|l| l.re)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Computes the real Schur form of a square matrix.
///
/// The reconstruction residual `||Q T Q^T - A||_F / ||A||_F` is verified
/// against `schur_rel` before the factorization is returned.
pub fn real_schur(a: &Mat, schur_rel: f64) -> Result<RealSchurForm> {
    if a.nrows() != a.ncols() {
        return Err(Error::NotSquare {
            what: "Schur input".into(),
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    if a.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite {
            what: "Schur input".into(),
        });
    }
    let n = a.nrows();
    if n == 0 {
        return Ok(RealSchurForm {
            q: Mat::zeros(0, 0),
            t: Mat::zeros(0, 0),
        });
    }

    let max_niter = 100 * n.max(10);
    let schur = a
        .clone()
        .try_schur(f64::EPSILON, max_niter)
        .ok_or(Error::SchurNonConvergence {
            iterations: max_niter,
        })?;
    let (mut q, mut t) = schur.unpack();

    clean_quasi_triangular(&mut t);
    split_real_blocks(&mut q, &mut t);

    let norm_a = a.norm().max(f64::MIN_POSITIVE);
    let resid = (&q * &t * q.transpose() - a).norm() / norm_a;
    if resid > schur_rel {
        return Err(Error::SelfCheck {
            context: "Schur reconstruction".into(),
            value: resid,
            tolerance: schur_rel,
        });
    }
    Ok(RealSchurForm { q, t })
}

/// Zeroes everything below the quasi-diagonal block structure.
fn clean_quasi_triangular(t: &mut Mat) {
    let n = t.nrows();
    let mut i = 0;
    while i < n {
        let two = i + 1 < n && is_subdiag_active(t, i);
        let width = if two { 2 } else { 1 };
        for row in (i + width)..n {
            for col in i..(i + width).min(n) {
                t[(row, col)] = 0.0;
            }
        }
        i += width;
    }
}

fn is_subdiag_active(t: &Mat, i: usize) -> bool {
    let sub = t[(i + 1, i)].abs();
    let scale = t[(i, i)].abs() + t[(i + 1, i + 1)].abs();
    sub > f64::EPSILON * scale.max(f64::MIN_POSITIVE)
}

/// Splits 2x2 diagonal blocks that carry two real eigenvalues.
fn split_real_blocks(q: &mut Mat, t: &mut Mat) {
    let n = t.nrows();
    let mut i = 0;
    while i + 1 < n {
        if t[(i + 1, i)] == 0.0 {
            i += 1;
            continue;
        }
        let (a, b) = (t[(i, i)], t[(i, i + 1)]);
        let (c, d) = (t[(i + 1, i)], t[(i + 1, i + 1)]);
        let disc = 0.25 * (a - d) * (a - d) + b * c;
        if disc < 0.0 {
            i += 2;
            continue;
        }
        // Real pair: rotate so the block becomes upper triangular.
        let half_trace = 0.5 * (a + d);
        let root = disc.sqrt();
        let lambda = if half_trace >= 0.0 {
            half_trace + root
        } else {
            half_trace - root
        };
        // Eigenvector of the block for lambda.
        let (vx, vy) = if b.abs() >= c.abs() {
            (b, lambda - a)
        } else {
            (lambda - d, c)
        };
        let norm = vx.hypot(vy);
        let (cs, sn) = if norm == 0.0 {
            (1.0, 0.0)
        } else {
            (vx / norm, vy / norm)
        };
        apply_givens(t, q, i, cs, sn);
        t[(i + 1, i)] = 0.0;
        i += 1;
    }
}

/// Applies the rotation G = [[cs, -sn], [sn, cs]] on rows/cols (i, i+1) of T
/// (as G^T T G) and on the columns of Q (as Q G).
fn apply_givens(t: &mut Mat, q: &mut Mat, i: usize, cs: f64, sn: f64) {
    let n = t.nrows();
    for col in 0..n {
        let x = t[(i, col)];
        let y = t[(i + 1, col)];
        t[(i, col)] = cs * x + sn * y;
        t[(i + 1, col)] = -sn * x + cs * y;
    }
    for row in 0..n {
        let x = t[(row, i)];
        let y = t[(row, i + 1)];
        t[(row, i)] = cs * x + sn * y;
        t[(row, i + 1)] = -sn * x + cs * y;
    }
    for row in 0..q.nrows() {
        let x = q[(row, i)];
        let y = q[(row, i + 1)];
        q[(row, i)] = cs * x + sn * y;
        q[(row, i + 1)] = -sn * x + cs * y;
    }
}

/// Complex eigenvalues of a general square matrix via the Schur form.
pub fn eigenvalues(a: &Mat) -> Result<Vec<Complex64>> {
    Ok(real_schur(a, 1e-10)?.eigenvalues())
}

/// Largest real part of the spectrum.
pub fn spectral_abscissa(a: &Mat) -> Result<f64> {
    Ok(real_schur(a, 1e-10)?.spectral_abscissa())
}
