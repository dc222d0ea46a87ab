use thiserror::Error;

/// Errors raised while building, mapping, or diagnosing representations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate parameters at n = {n}: {reason}")]
    DegenerateParameters { n: usize, reason: &'static str },

    #[error("kappa_{n} vanishes inside the retained window without a truncation")]
    ZeroKappaInterior { n: usize },

    #[error("operator dimensions differ ({x} vs {z})")]
    DimensionMismatch { x: usize, z: usize },

    #[error("scale factor must be non-zero")]
    ZeroScale,

    #[error("a + b + c + d must be non-zero")]
    ZeroParameterSum,

    #[error("singular denominator at n = {n}")]
    SingularDenominator { n: usize },

    #[error("index {n} out of range (max {max})")]
    IndexOutOfRange { n: usize, max: usize },

    #[error("lambda_{n} = {value} is not positive; the recurrence is not positive-definite")]
    NonPositiveLambda { n: usize, value: f64 },

    #[error("eigenvalue iteration did not converge for index {index}")]
    ConvergenceFailure { index: usize },

    #[error("{n_max} exceeds the exactness window of a {dim}-point rule")]
    ExactnessViolation { n_max: usize, dim: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for failures of the numerics rather than of the input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::DegenerateParameters { .. }
                | Error::ZeroKappaInterior { .. }
                | Error::SingularDenominator { .. }
                | Error::NonPositiveLambda { .. }
                | Error::ConvergenceFailure { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
