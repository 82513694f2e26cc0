use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("constant term is not a unit: {0}")]
    NotAUnit(String),
    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),
    #[error("underdetermined linear system: rank {rank} < {unknowns} unknowns")]
    Underdetermined { rank: usize, unknowns: usize },
    #[error("unsupported genus {0}")]
    UnsupportedGenus(u8),
    #[error("parameter is not invertible: {0}")]
    NonInvertibleParameter(String),
    #[error("not in the image of the spherical map: {0}")]
    NotInImage(String),
    #[error("empty input")]
    EmptyInput,
    #[error("weight too small: {0}")]
    WeightTooSmall(String),
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("pole at s = {0}")]
    PoleAt(String),
    #[error("negative order {0}")]
    NegativeOrder(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("weights {k} and {k2} are not congruent modulo {modulus}")]
    CongruenceHypothesisFails { k: u64, k2: u64, modulus: u64 },
    #[error("zero input")]
    ZeroInput,
    #[error("parse error: {0}")]
    Parse(String),
}
