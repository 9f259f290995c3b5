//! Exact arithmetic in the cyclotomic field `Q(ζ_{4p})`.
//!
//! `q = ζ^2` is a primitive `2p`-th root of unity; working with `ζ` directly
//! makes half-integer powers of `q` available to the R-matrix code.

pub mod field;
pub mod matrix;
pub mod poly;
pub mod qnum;
pub mod text;

pub use field::{FieldCtx, FieldElem};
pub use matrix::{Echelon, Matrix};
pub use poly::cyclotomic_poly;
pub use qnum::{qbinom, qfact, qint};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("p must be at least 2, got {0}")]
    InvalidP(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
    #[error("matrix is singular")]
    Singular,
}
