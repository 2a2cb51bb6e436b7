use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("radicand must be at least 2, got {0}")]
    InvalidRadicand(u64),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("interval must satisfy lo < hi")]
    InvalidInterval,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid coefficient tuple: {0}")]
    InvalidTuple(String),
    #[error("polynomial is not q-symmetric: {0}")]
    NotSymmetric(String),
    #[error("expected a monic polynomial of even degree, got {0}")]
    NotMonicEven(String),
    #[error("not a Weil polynomial: {0}")]
    NotWeil(String),
    #[error("invalid enumeration request: {0}")]
    InvalidSpec(String),
    #[error("classification failed: {0}")]
    Classification(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("census file parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("census file was produced by engine {found}, expected {expected}")]
    StaleVersion { found: String, expected: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
