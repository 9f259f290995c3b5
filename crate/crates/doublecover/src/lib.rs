//! The Hopf algebra `D̄` containing `Ū` through `E ↦ e`, `F ↦ f`, `K ↦ t²`:
//! the modules `T^s(α,κ,n)`, the universal R-matrix evaluated on modules,
//! and a decision procedure for lifting `Ū`-modules to `D̄`.

use thiserror::Error;

mod lift;
mod rmatrix;
mod tmod;

pub use lift::{lift, LiftOutcome, Obstruction};
pub use rmatrix::{braiding_check, rmatrix_literal, rmatrix_on, swap, BraidingCheck};
pub use tmod::{build_t, jordan_split_check, restrict_to_u, Alpha, JordanSplit};

#[derive(Debug, Error)]
pub enum DoubleError {
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("expected a {0}-module")]
    WrongAlgebra(&'static str),
    #[error(transparent)]
    Rep(#[from] repcore::RepError),
    #[error(transparent)]
    Hom(#[from] homlib::HomError),
    #[error(transparent)]
    Field(#[from] cyclo::FieldError),
    #[error("internal: {0}")]
    Internal(String),
}
