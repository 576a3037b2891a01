//! Time-limited H2 model order reduction toolkit.
//!
//! Builds reduced-order models of dense LTI systems that stay accurate over a
//! finite time window, measured by the time-limited H2 norm of the relative
//! error system. Four reduction drivers are provided (time-limited balanced
//! truncation, balanced stochastic truncation, an iterative rational Krylov
//! scheme, and the relative-error oblique-projection iteration), backed by
//! dense Schur-based matrix-equation solvers, the block gramian machinery of
//! the relative-error realization, and first-order optimality diagnostics
//! verified against finite differences.

pub mod error;
pub mod gramians;
pub mod io;
pub mod model;
pub mod optimality;
pub mod reductors;
pub mod relerr;
pub mod solvers;
pub mod spectral;

pub use error::{Error, Result};
pub use model::{StateSpaceModel, TimeInterval};

/// Dense real matrix used throughout the crate.
pub type Mat = nalgebra::DMatrix<f64>;
/// Dense complex matrix used by eigen decompositions.
pub type CMat = nalgebra::DMatrix<num_complex::Complex64>;
