use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("anisotropy parameter must satisfy p > 0 and p != 1 (got {0})")]
    InvalidParam(String),

    #[error("element is a zero divisor and has no inverse")]
    ZeroDivisor,

    #[error("invalid basis: {0}")]
    InvalidBasis(&'static str),

    #[error("grid is {nx}x{ny}, the stencil needs at least 5x5")]
    GridTooSmall { nx: usize, ny: usize },

    #[error("monogenic functions were built for different anisotropy parameters")]
    ParamMismatch,

    #[error("path leaves the domain at ({x}, {y})")]
    PathOutsideDomain { x: f64, y: f64 },

    #[error("invalid path: {0}")]
    InvalidPath(&'static str),

    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("{rows} collocation rows cannot determine {unknowns} unknowns")]
    InsufficientNodes { rows: usize, unknowns: usize },

    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid boundary data: {0}")]
    InvalidBoundaryData(String),

    #[error("numerical breakdown: {0}")]
    NumericalBreakdown(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
