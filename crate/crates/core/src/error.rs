use thiserror::Error;

pub type Result<T> = std::result::Result<T, PmechError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PmechError {
    #[error("polynomial degree {degree} exceeds the configured maximum {max}")]
    DegreeLimit { degree: u32, max: u32 },

    #[error("function is not integrable: {0}")]
    NotIntegrable(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("operation needs h != 0; use the classical (h = 0) route instead")]
    ClassicalBranch,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("truncation too small: |alpha|^2 = {alpha_sq:.3} needs N >= {needed}, got N = {dim}")]
    Truncation { alpha_sq: f64, needed: usize, dim: usize },

    #[error("eigenfunction level {n} exceeds the maximum {max}")]
    LevelTooLarge { n: usize, max: usize },

    #[error("Gaussian exponents differ; the sum leaves the Gaussian-polynomial class")]
    IncompatibleGaussians,
}
