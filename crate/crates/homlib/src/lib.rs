//! Exact homological algebra over `Ū`: Hom spaces, socle, radical and top,
//! projective covers, `Ext¹`, isomorphism certificates, and a decomposition
//! of arbitrary modules into labeled indecomposables that does not consult
//! any tensor product formula.

pub mod catalog;
pub mod cover;
pub mod decompose;
pub mod hom;
pub mod iso;
pub mod kron;
pub mod layers;
pub mod roots;
pub mod split;

pub use catalog::{catalog, Catalog, Projective};
pub use cover::{ext1, projective_cover, Cover};
pub use decompose::{decompose, decompose_full, identify, Decomposition, Piece};
pub use hom::{find_invertible, hom_dim, hom_space, weight_kernel, weighted_rank, HomSpace};
pub use iso::{is_iso, is_iso_with, Fingerprint, IsoCertificate, IsoOptions, DEFAULT_SEED};
pub use layers::{composition_factors, radical, radical_layers, semisimple_length, socle, top, Layer};
pub use split::{split_local_summands, split_projective_summands, ProjSplit};

use repcore::RepError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("{stage}: {msg}")]
    Internal { stage: &'static str, msg: String },
    #[error("unclassified module: {0}")]
    Unclassified(String),
    #[error("pencil eigenvalue is not in the coefficient field")]
    EigenvalueOutsideField,
}

impl From<cyclo::FieldError> for HomError {
    fn from(e: cyclo::FieldError) -> HomError {
        HomError::Rep(RepError::Field(e))
    }
}

pub(crate) fn internal(stage: &'static str, msg: impl Into<String>) -> HomError {
    HomError::Internal { stage, msg: msg.into() }
}
