use thiserror::Error;

use crate::structures::CheckReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular matrix: {0}")]
    SingularMatrix(String),
    #[error("role mismatch: {0}")]
    RoleMismatch(String),
    #[error("unknown associator kind {0:?}")]
    UnknownKind(String),
    #[error("unknown split direction {0:?}")]
    UnknownDirection(String),
    #[error("unknown recipe {0:?}")]
    UnknownRecipe(String),
    #[error("twist is not multiplicative: {0}")]
    NotMultiplicative(String),
    #[error("map is not a morphism: {0}")]
    NotAMorphism(String),
    #[error("operator check failed: {}", first_violation(.0))]
    OperatorInvalid(Box<CheckReport>),
    #[error("Rota-Baxter operators do not commute")]
    NotCommuting,
    #[error("recipe requires weight zero, got {0}")]
    NonZeroWeight(String),
    #[error("Hessian check failed: {}", first_violation(.0))]
    HessianInvalid(Box<CheckReport>),
    #[error("invalid O-operator endomorphism: {0}")]
    EndomorphismInvalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

fn first_violation(report: &CheckReport) -> String {
    match report.violations.first() {
        Some(v) => format!("{} at {:?} ({} violations)", v.identity, v.tuple, report.violations.len()),
        None => "no violations recorded".to_string(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
