//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by solvers, model constructors and reduction drivers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: String,
        found: String,
    },

    #[error("{what} contains non-finite entries")]
    NonFinite { what: String },

    #[error("{what} must be square, got {rows}x{cols}")]
    NotSquare {
        what: String,
        rows: usize,
        cols: usize,
    },

    #[error("Schur iteration failed to converge after {iterations} iterations")]
    SchurNonConvergence { iterations: usize },

    #[error("spectrum conflict in {context}: eigenvalue pairing {value:e} within tolerance of zero")]
    SpectrumConflict { context: String, value: f64 },

    #[error("no stabilizing Riccati solution: {detail}")]
    NoStabilizingSolution { detail: String },

    #[error("{what} is not Hurwitz (spectral abscissa {abscissa:e})")]
    NotHurwitz { what: String, abscissa: f64 },

    #[error("{what} is singular or numerically rank-deficient")]
    Singular { what: String },

    #[error("requested order {requested} exceeds numerical rank {rank}")]
    RankExceeded { requested: usize, rank: usize },

    #[error("bi-orthogonal Gram-Schmidt breakdown at column {column}: |w^T v| = {pivot:e}")]
    GramSchmidtBreakdown { column: usize, pivot: f64 },

    #[error("reduced model is not minimum phase: {detail}")]
    NotMinimumPhase { detail: String },

    #[error("matrix exponential overflow: ||A t|| = {norm_at:e}")]
    ExponentialOverflow { norm_at: f64 },

    #[error("norm self-check failed: primal form {primal:e}, dual form {dual:e}")]
    NormMismatch { primal: f64, dual: f64 },

    #[error("numerical self-check failed in {context}: {value:e} exceeds {tolerance:e}")]
    SelfCheck {
        context: String,
        value: f64,
        tolerance: f64,
    },

    #[error("unsupported model: {detail}")]
    UnsupportedModel { detail: String },

    #[error("invalid configuration: {detail}")]
    InvalidConfig { detail: String },

    #[error("parse error in {file} at line {line}: {detail}")]
    Parse {
        file: String,
        line: usize,
        detail: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
