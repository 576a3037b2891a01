//! Bartels-Stewart solvers for Sylvester and Lyapunov equations.
//!
//! `K J + J L + W = 0` is reduced to quasi-triangular form through the real
//! Schur decompositions of `K` and `L`, then solved by blockwise
//! back-substitution with Kronecker systems of size at most four. The
//! `_schur` variants accept precomputed factorizations so that repeated
//! solves against one large coefficient matrix reuse its decomposition.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::schur::{real_schur, RealSchurForm};
use super::SolverTolerances;
use crate::error::{Error, Result};
use crate::Mat;

/// Solves `K J + J L + W = 0`.
pub fn solve_sylvester(k: &Mat, l: &Mat, w: &Mat, tols: &SolverTolerances) -> Result<Mat> {
    let sk = real_schur(k, tols.schur_rel)?;
    let sl = real_schur(l, tols.schur_rel)?;
    solve_sylvester_schur(&sk, &sl, w, tols)
}

/// Solves `K J + J L + W = 0` from precomputed Schur forms of `K` and `L`.
pub fn solve_sylvester_schur(
    sk: &RealSchurForm,
    sl: &RealSchurForm,
    w: &Mat,
    tols: &SolverTolerances,
) -> Result<Mat> {
    let n = sk.dim();
    let r = sl.dim();
    if w.nrows() != n || w.ncols() != r {
        return Err(Error::DimensionMismatch {
            context: "Sylvester right-hand side".into(),
            expected: format!("{n}x{r}"),
            found: format!("{}x{}", w.nrows(), w.ncols()),
        });
    }
    if n == 0 || r == 0 {
        return Ok(Mat::zeros(n, r));
    }
    check_spectra(&sk.eigenvalues(), &sl.eigenvalues())?;

    let wt = sk.q.transpose() * w * &sl.q;
    let y = back_substitute(&sk.t, &sl.t, &wt)?;

    // Orthogonal invariance: the residual of the transformed system equals
    // the residual of the original one.
    let denom = sk.t.norm() * y.norm() + y.norm() * sl.t.norm() + wt.norm();
    let resid = (&sk.t * &y + &y * &sl.t + &wt).norm() / denom.max(f64::MIN_POSITIVE);
    if resid > tols.residual_rel {
        return Err(Error::SelfCheck {
            context: "Sylvester residual".into(),
            value: resid,
            tolerance: tols.residual_rel,
        });
    }
    Ok(&sk.q * y * sl.q.transpose())
}

/// Solves `A X + X A^T + W = 0` and symmetrizes the result.
pub fn solve_lyapunov(a: &Mat, w: &Mat, tols: &SolverTolerances) -> Result<Mat> {
    let sa = real_schur(a, tols.schur_rel)?;
    solve_lyapunov_schur(&sa, w, tols)
}

/// Solves `A X + X A^T + W = 0` from a precomputed Schur form of `A`.
pub fn solve_lyapunov_schur(sa: &RealSchurForm, w: &Mat, tols: &SolverTolerances) -> Result<Mat> {
    let n = sa.dim();
    if w.nrows() != n || w.ncols() != n {
        return Err(Error::DimensionMismatch {
            context: "Lyapunov right-hand side".into(),
            expected: format!("{n}x{n}"),
            found: format!("{}x{}", w.nrows(), w.ncols()),
        });
    }
    if n == 0 {
        return Ok(Mat::zeros(0, 0));
    }
    let eigs = sa.eigenvalues();
    check_spectra(&eigs, &eigs)?;

    let wt = sa.q.transpose() * w * &sa.q;
    let y = back_substitute_lyap(&sa.t, &wt)?;

    let denom = 2.0 * sa.t.norm() * y.norm() + wt.norm();
    let resid =
        (&sa.t * &y + &y * sa.t.transpose() + &wt).norm() / denom.max(f64::MIN_POSITIVE);
    if resid > tols.residual_rel {
        return Err(Error::SelfCheck {
            context: "Lyapunov residual".into(),
            value: resid,
            tolerance: tols.residual_rel,
        });
    }
    let x = &sa.q * y * sa.q.transpose();
    Ok(0.5 * (&x + x.transpose()))
}

/// Rejects eigenvalue pairings `lambda_i + mu_j` within 1e-12 of zero.
fn check_spectra(left: &[Complex64], right: &[Complex64]) -> Result<()> {
    for li in left {
        for mj in right {
            let sum = li + mj;
            let tol = 1e-12 * (1.0 + li.norm() + mj.norm());
            if sum.norm() <= tol {
                return Err(Error::SpectrumConflict {
                    context: "Sylvester operator".into(),
                    value: sum.norm(),
                });
            }
        }
    }
    Ok(())
}

/// Partition of a quasi-triangular matrix into (start, width) blocks.
fn blocks(t: &Mat) -> Vec<(usize, usize)> {
    let n = t.nrows();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        if i + 1 < n && t[(i + 1, i)] != 0.0 {
            out.push((i, 2));
            i += 2;
        } else {
            out.push((i, 1));
            i += 1;
        }
    }
    out
}

/// Solves `S Y + Y R + W = 0` with `S`, `R` quasi-upper-triangular.
fn back_substitute(s: &Mat, r: &Mat, w: &Mat) -> Result<Mat> {
    let n = s.nrows();
    let m = r.nrows();
    let sb = blocks(s);
    let rb = blocks(r);
    let mut y = Mat::zeros(n, m);

    for &(j, bj) in &rb {
        for &(i, bi) in sb.iter().rev() {
            // rhs = -W_ij - sum_{k>i} S_ik Y_kj - sum_{k<j} Y_ik R_kj
            let mut rhs = -w.view((i, j), (bi, bj)).clone_owned();
            if i + bi < n {
                rhs -= s.view((i, i + bi), (bi, n - i - bi)) * y.view((i + bi, j), (n - i - bi, bj));
            }
            if j > 0 {
                rhs -= y.view((i, 0), (bi, j)) * r.view((0, j), (j, bj));
            }
            let sol = solve_small(
                &s.view((i, i), (bi, bi)).clone_owned(),
                &r.view((j, j), (bj, bj)).clone_owned(),
                &rhs,
            )?;
            y.view_mut((i, j), (bi, bj)).copy_from(&sol);
        }
    }
    Ok(y)
}

/// Solves `S Y + Y S^T + W = 0` with `S` quasi-upper-triangular.
fn back_substitute_lyap(s: &Mat, w: &Mat) -> Result<Mat> {
    let n = s.nrows();
    let sb = blocks(s);
    let mut y = Mat::zeros(n, n);

    for &(j, bj) in sb.iter().rev() {
        for &(i, bi) in sb.iter().rev() {
            // rhs = -W_ij - sum_{k>i} S_ik Y_kj - sum_{k>j} Y_ik (S^T)_kj
            let mut rhs = -w.view((i, j), (bi, bj)).clone_owned();
            if i + bi < n {
                rhs -= s.view((i, i + bi), (bi, n - i - bi)) * y.view((i + bi, j), (n - i - bi, bj));
            }
            if j + bj < n {
                rhs -= y.view((i, j + bj), (bi, n - j - bj))
                    * s.view((j, j + bj), (bj, n - j - bj)).transpose();
            }
            let sol = solve_small(
                &s.view((i, i), (bi, bi)).clone_owned(),
                &s.view((j, j), (bj, bj)).transpose(),
                &rhs,
            )?;
            y.view_mut((i, j), (bi, bj)).copy_from(&sol);
        }
    }
    Ok(y)
}

/// Solves the small Sylvester block `P X + X Q = F`, sizes at most 2x2,
/// through the Kronecker system `(I (x) P + Q^T (x) I) vec(X) = vec(F)`.
fn solve_small(p: &Mat, q: &Mat, f: &Mat) -> Result<Mat> {
    let bp = p.nrows();
    let bq = q.nrows();
    let dim = bp * bq;
    let mut m = DMatrix::<f64>::zeros(dim, dim);
    // Column-major vec: index (row r, col c) -> c*bp + r.
    for c in 0..bq {
        for r in 0..bp {
            let row = c * bp + r;
            for rr in 0..bp {
                m[(row, c * bp + rr)] += p[(r, rr)];
            }
            for cc in 0..bq {
                m[(row, cc * bp + r)] += q[(cc, c)];
            }
        }
    }
    let mut rhs = nalgebra::DVector::<f64>::zeros(dim);
    for c in 0..bq {
        for r in 0..bp {
            rhs[c * bp + r] = f[(r, c)];
        }
    }
    let lu = m.lu();
    let sol = lu.solve(&rhs).ok_or(Error::SpectrumConflict {
        context: "Sylvester diagonal block".into(),
        value: 0.0,
    })?;
    if sol.iter().any(|x| !x.is_finite()) {
        return Err(Error::SpectrumConflict {
            context: "Sylvester diagonal block".into(),
            value: 0.0,
        });
    }
    let mut x = Mat::zeros(bp, bq);
    for c in 0..bq {
        for r in 0..bp {
            x[(r, c)] = sol[c * bp + r];
        }
    }
    Ok(x)
}
