use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("cannot evaluate at q = 0")]
    ZeroEvaluationPoint,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("malformed Cartan data: {0}")]
    InvalidCartan(String),
    #[error("position {position} out of range for degree {degree}")]
    PositionOutOfRange { position: usize, degree: usize },
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("resource ceiling hit: degree-{degree} component has {monomials} monomials (ceiling {ceiling})")]
    ResourceCeiling { degree: usize, monomials: u128, ceiling: u128 },
    #[error("presentation has no bialgebra structure")]
    NoBialgebra,
    #[error("braiding is not of Hecke type")]
    NotHecke,
    #[error("rank not established up to degree {0}")]
    RankNotEstablished(usize),
    #[error("map is not compatible with the braiding")]
    NotCompatible,
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("unknown braiding '{0}'")]
    UnknownBraiding(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
