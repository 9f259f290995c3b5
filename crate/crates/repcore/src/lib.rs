//! Explicit matrix models of the finite-dimensional indecomposable modules of
//! the restricted quantum group `Ū = Ū_q(sl_2)` at `q = e^{πi/p}`, together
//! with tensor products, duals, direct sums, submodules and block splitting.
//!
//! Every [`Rep`] stores the action of `E, F, K, K⁻¹` (or `e, f, t, t⁻¹` for
//! the double cover) as exact matrices over `Q(ζ_{4p})`. A matrix `M` acts
//! on column vectors: `M[i][j]` is the coefficient of basis vector `i` in the
//! image of basis vector `j`.

pub mod build;
pub mod label;
pub mod ops;
pub mod rep;

pub use build::{build, build_e, build_glued, build_mw, build_p, build_simple, build_twisted};
pub use label::{Family, FormalDecomp, ModuleLabel, ProjLinePoint, Sign};
pub use ops::{
    block_decompose, block_eigenvalue, casimir_action, conjugate, direct_sum, dual, intertwines, quotient,
    restrict, sign_twist, submodule_generated, tensor, weight_adapt, weight_spaces, DualSide, Subrep,
};
pub use rep::{Algebra, Rep};

use cyclo::FieldError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("label parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("algebra or field mismatch: {0}")]
    Mismatch(String),
    #[error("relation violated: {0}")]
    Relation(String),
    #[error("subspace is not invariant under {0}")]
    NotInvariant(String),
    #[error("K does not act diagonalizably")]
    NotDiagonalizable,
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("json: {0}")]
    Json(String),
}
