//! Dense matrix-equation and matrix-function kernels.
//!
//! Everything here is Schur-based: Lyapunov and Sylvester equations are solved
//! by reduction to real Schur form with quasi-triangular back-substitution,
//! the Riccati solver works on the stable invariant subspace of the associated
//! Hamiltonian with Newton refinement, and the matrix exponential uses
//! scaling-and-squaring with a diagonal Pade approximant of order 13.
//! All operations are pure functions of their inputs.

mod care;
mod eig;
mod expm;
mod schur;
mod sylvester;

pub use care::solve_care;
pub use eig::{eigendecomposition, Eigendecomposition};
pub use expm::{exp_action_integral, matrix_exponential};
pub use schur::{real_schur, RealSchurForm};
pub use sylvester::{solve_lyapunov, solve_lyapunov_schur, solve_sylvester, solve_sylvester_schur};

/// Residual and reconstruction tolerances shared by the dense solvers.
#[derive(Debug, Clone, Copy)]
pub struct SolverTolerances {
    /// Relative residual bound for Lyapunov/Sylvester solves.
    pub residual_rel: f64,
    /// Relative reconstruction bound for the Schur decomposition.
    pub schur_rel: f64,
}

impl Default for SolverTolerances {
    fn default() -> Self {
        Self {
            residual_rel: 1e-10,
            schur_rel: 1e-12,
        }
    }
}

impl SolverTolerances {
    pub fn validate(&self) -> crate::Result<()> {
        if self.residual_rel <= 0.0 || self.schur_rel <= 0.0 {
            return Err(crate::Error::InvalidConfig {
                detail: "solver tolerances must be strictly positive".into(),
            });
        }
        Ok(())
    }
}
