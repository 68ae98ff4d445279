use thiserror::Error;

/// Errors raised by geometry construction, ring arithmetic and the matrix layer.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("simplex must have at least one vertex")]
    InvalidSimplex,
    #[error("vertex labels must be positive integers, got {0}")]
    InvalidLabel(i64),
    #[error("{0} is not a member of the geometry")]
    NotAMember(String),
    #[error("{sub} is not a subset of {sup}")]
    NotASubset { sub: String, sup: String },
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("operation not supported over ring {0}")]
    UnsupportedRing(String),
    #[error("geometry is not a simplicial complex")]
    NotAComplex,
    #[error("shape mismatch: {0}")]
    ShapeError(String),
    #[error("matrix is not self-adjoint (deviation {0:e})")]
    NotSelfAdjoint(f64),
    #[error("energy vanishes on simplex {0}")]
    ZeroEnergy(String),
    #[error("operator is singular (smallest eigenvalue {0:e})")]
    SingularOperator(f64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
