use thiserror::Error;

/// Errors raised by state construction, register manipulation and measure evaluation.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("local dimension {0} is below 2")]
    DimensionTooSmall(usize),
    #[error("register must contain at least one subsystem")]
    EmptyRegister,
    #[error("expected {expected} amplitudes, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("amplitude vector is zero")]
    ZeroVector,
    #[error("state norm {0} deviates from 1 by more than the input tolerance")]
    NotNormalized(f64),
    #[error("invalid subsystem selection: {0}")]
    InvalidSubsystems(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),
    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),
    #[error("Schmidt rank bound n_A = {0} is below 2")]
    SchmidtRankTooSmall(usize),
    #[error("parameter {name} = {value} outside {domain}")]
    OutOfDomain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },
    #[error("register shape {0:?} not supported here")]
    WrongShape(Vec<usize>),
    #[error("non-uniform grid")]
    NonUniformGrid,
    #[error("grid too short: need at least {need} points, got {got}")]
    GridTooShort { need: usize, got: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
