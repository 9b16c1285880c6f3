use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("exponent p must lie in (0, 1], got {0}")]
    InvalidExponent(f64),

    #[error("norm index q must satisfy q >= 1, got {0}")]
    InvalidNorm(f64),

    #[error("lambda must lie in [0, 1], got {0}")]
    LambdaOutOfRange(f64),

    #[error("coefficients do not satisfy lambda^p + mu^p = 1 (lambda={lambda}, mu={mu}, p={p})")]
    InvalidCoefficients { lambda: f64, mu: f64, p: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("point {0:?} lies outside the function domain")]
    NotInDomain(Vec<f64>),

    #[error("domain not p-convex at witness: combination {point:?} left the domain")]
    DomainViolation { point: Vec<f64> },

    #[error("set sampling failed: found {found} member point(s), need {needed}")]
    SamplingFailed { found: usize, needed: usize },

    #[error("distance inestimable: no member point sampled")]
    DistanceInestimable,

    #[error("center condition violated: {0}")]
    CenterConditionViolated(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal defect: {0}")]
    Defect(String),

    #[error("grid has {0} points, exceeding the limit of 1000000")]
    GridTooLarge(usize),

    #[error("no grid point lies inside the domain")]
    EmptyGrid,

    #[error("expression error at offset {offset}: {message}")]
    Expression { offset: usize, message: String },

    #[error("instance error at {path}: {message}")]
    Instance { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
