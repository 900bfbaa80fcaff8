use thiserror::Error;

/// Errors raised by the toolkit.
///
/// `Hypothesis` is kept separate from every other variant: it means the
/// input does not satisfy the assumptions of the inequality being checked,
/// which is a refusal rather than a failed check.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("point is not strictly inside the unit polydisk (max |z_j| = {inf_norm})")]
    OutsidePolydisk { inf_norm: f64 },

    #[error("multi-index must have at least one component")]
    EmptyMultiIndex,

    #[error("factorial of multi-index {0} overflows a 128-bit integer")]
    FactorialOverflow(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{operation} is not available for {form} maps")]
    UnsupportedForm {
        operation: &'static str,
        form: &'static str,
    },

    #[error("hypothesis: {0}")]
    Hypothesis(String),

    #[error("non-finite integrand value at quadrature node {0}")]
    NonFiniteIntegrand(usize),

    #[error("contour radius {radius} does not enclose |z_{coord}| = {modulus}")]
    ContourTooSmall {
        coord: usize,
        radius: f64,
        modulus: f64,
    },

    #[error("map file: {0}")]
    MapFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
