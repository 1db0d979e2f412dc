use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Error)]
pub enum CqbError {
    /// Family/rank outside the admissible range, empty Φ, bad metric vector.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// An exact-arithmetic structure check failed. This indicates a bug in
    /// the construction, never a user error, and aborts the computation.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    /// The Jacobi eigensolver did not reach its convergence threshold.
    #[error("eigensolver did not converge: {0}")]
    NoConvergence(String),

    /// A floating-point self-check (Hermiticity residue, path agreement,
    /// imaginary residue) exceeded its tolerance.
    #[error("numerical check failed: {0}")]
    NumericalCheck(String),
}

pub type Result<T> = std::result::Result<T, CqbError>;
