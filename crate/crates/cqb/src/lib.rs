//! Kähler C-spaces from the classical simple Lie algebras, their invariant
//! metrics and curvature tensors, and numerical sign analysis of the cross
//! quadratic bisectional curvature (CQB), its dual (dCQB), the rank-restricted
//! variants, and the associated Hermitian eigenvalue criteria.
//!
//! The pipeline is
//!
//! 1. [`lie`]: matrix-realized algebras of types A, B, C, D with Chevalley
//!    root data computed by explicit brackets over exact rationals,
//! 2. [`cspace`]: a space `(g, Φ)` with its invariant metrics and
//!    Kähler-Einstein coefficients,
//! 3. [`curvature`]: the curvature tensor in a unitary frame, plus synthetic
//!    tensors (products, the negatively curved Mostow-Siu model, seeded
//!    random Kähler operators),
//! 4. [`positivity`]: CQB/dCQB as Hermitian quadratic forms, the curvature
//!    operator on the symmetric square, and rank-restricted minimization,
//! 5. [`flow`]: the reaction part of the Kähler-Ricci flow curvature ODE and
//!    the time-dependent convex membership conditions.
//!
//! [`suite`] bundles the acceptance battery run both by `cargo test` and by
//! the `cqblab suite` command.

pub mod cspace;
pub mod curvature;
pub mod error;
pub mod flow;
pub mod lie;
pub mod linalg;
pub mod oracle;
pub mod positivity;
pub mod rat;
pub mod suite;

pub use error::{CqbError, Result};
