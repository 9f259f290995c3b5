//! Closed-form rules for tensor products, duals and composition factors of
//! indecomposable `Ū_q sl(2)` modules, working on labels only.

use thiserror::Error;

mod composition;
mod dual;
mod index;
mod tensor;

pub use composition::composition_factors_rule;
pub use dual::dual_rule;
pub use index::{index_i, index_j, index_j_pair};
pub use repcore::ops::DualSide;
pub use tensor::{
    commutes, tensor_rule, tensor_rule_via, tensor_rule_with, twist_left, twist_right, Route, RuleOptions, WmReading,
};

#[derive(Debug, Error)]
pub enum RuleError {
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("no formula for {0}")]
    NoRule(String),
    #[error("sign routes disagree: {outer} vs {inner}")]
    RouteMismatch { outer: String, inner: String },
    #[error(transparent)]
    Rep(#[from] repcore::RepError),
    #[error(transparent)]
    Field(#[from] cyclo::FieldError),
    #[error("internal: {0}")]
    Internal(String),
}
