//! Matrix exponential by scaling-and-squaring with a 13th-order diagonal
//! Pade approximant, plus the block-exponential trick for the coupling
//! integral that shows up in exponential sensitivities.

use crate::error::{Error, Result};
use crate::Mat;

const THETA_13: f64 = 5.371920351148152;

const PADE_13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

/// Computes `exp(A t)`.
///
/// `t = 0` returns the identity exactly; negative `t` is allowed. Overflow in
/// the squaring phase is reported rather than returned as non-finite data.
pub fn matrix_exponential(a: &Mat, t: f64) -> Result<Mat> {
    if a.nrows() != a.ncols() {
        return Err(Error::NotSquare {
            what: "matrix exponential input".into(),
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    if a.iter().any(|x| !x.is_finite()) || !t.is_finite() {
        return Err(Error::NonFinite {
            what: "matrix exponential input".into(),
        });
    }
    let n = a.nrows();
    if n == 0 {
        return Ok(Mat::zeros(0, 0));
    }
    if t == 0.0 {
        return Ok(Mat::identity(n, n));
    }
    let at = a * t;
    let norm_at = one_norm(&at);
    expm_scaled(at, norm_at)
}

fn expm_scaled(at: Mat, norm_at: f64) -> Result<Mat> {
    let n = at.nrows();
    let squarings = if norm_at > THETA_13 {
        (norm_at / THETA_13).log2().ceil() as i32
    } else {
        0
    };
    let scaled = &at / 2f64.powi(squarings);

    let b = &PADE_13;
    let ident = Mat::identity(n, n);
    let a2 = &scaled * &scaled;
    let a4 = &a2 * &a2;
    let a6 = &a2 * &a4;

    let u_inner = &a6 * (b[13] * &a6 + b[11] * &a4 + b[9] * &a2)
        + b[7] * &a6
        + b[5] * &a4
        + b[3] * &a2
        + b[1] * &ident;
    let u = &scaled * u_inner;
    let v = &a6 * (b[12] * &a6 + b[10] * &a4 + b[8] * &a2)
        + b[6] * &a6
        + b[4] * &a4
        + b[2] * &a2
        + b[0] * &ident;

    let lhs = &v - &u;
    let rhs = &v + &u;
    let mut e = lhs
        .lu()
        .solve(&rhs)
        .ok_or(Error::ExponentialOverflow { norm_at })?;
    for _ in 0..squarings {
        e = &e * &e;
        if e.iter().any(|x| !x.is_finite()) {
            return Err(Error::ExponentialOverflow { norm_at });
        }
    }
    if e.iter().any(|x| !x.is_finite()) {
        return Err(Error::ExponentialOverflow { norm_at });
    }
    Ok(e)
}

fn one_norm(m: &Mat) -> f64 {
    let mut best = 0.0f64;
    for c in 0..m.ncols() {
        let s: f64 = m.column(c).iter().map(|x| x.abs()).sum();
        best = best.max(s);
    }
    best
}

/// Computes `int_0^t exp(F (t - s)) G exp(F s) ds` via the upper-right block
/// of `exp([[F, G], [0, F]] t)`.
pub fn exp_action_integral(f: &Mat, g: &Mat, t: f64) -> Result<Mat> {
    let n = f.nrows();
    if f.ncols() != n || g.nrows() != n || g.ncols() != n {
        return Err(Error::DimensionMismatch {
            context: "exponential coupling integral".into(),
            expected: format!("{n}x{n} blocks"),
            found: format!("{}x{} and {}x{}", f.nrows(), f.ncols(), g.nrows(), g.ncols()),
        });
    }
    if t == 0.0 {
        return Ok(Mat::zeros(n, n));
    }
    let mut block = Mat::zeros(2 * n, 2 * n);
    block.view_mut((0, 0), (n, n)).copy_from(f);
    block.view_mut((0, n), (n, n)).copy_from(g);
    block.view_mut((n, n), (n, n)).copy_from(f);
    let e = matrix_exponential(&block, t)?;
    Ok(e.view((0, n), (n, n)).clone_owned())
}
