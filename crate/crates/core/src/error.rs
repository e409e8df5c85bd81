use thiserror::Error;

use crate::projection::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Parameters broke at least one projection restriction.
    #[error("invalid projection parameters:\n{0}")]
    InvalidParams(ValidationReport),

    /// Matrix determinant magnitude fell below the singularity threshold.
    #[error("matrix is singular (|det| = {det:e})")]
    Singular { det: f64 },

    /// Clip-space w too close to zero for a perspective divide.
    #[error("degenerate clip-space w ({w:e})")]
    DegenerateW { w: f64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid scene: {0}")]
    InvalidScene(String),
}
