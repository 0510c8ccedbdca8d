use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("denominator vanishes at t = 0")]
    PoleAtZero,

    #[error("series coefficient {index} is not an integer")]
    NonIntegerCoefficient { index: usize },

    #[error("invalid Coxeter matrix: {0}")]
    InvalidCoxeterMatrix(String),

    #[error("unsupported edge order m = {0} for the root-system realization")]
    UnsupportedOrder(u32),

    #[error("Coxeter graph is not spherical: root closure exceeded {0} roots")]
    NonSpherical(usize),

    #[error("unknown type tag {tag:?}; supported: {supported}")]
    UnknownType { tag: String, supported: String },

    #[error("refusing to enumerate {what}: {detail}")]
    ResourceLimit { what: String, detail: String },

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("elements belong to different groups")]
    MixedGroups,

    #[error("invalid signed permutation window: {0}")]
    InvalidWindow(String),

    #[error("dec by {0} is undefined: the word contains ±{0}")]
    DecUndefined(i32),

    #[error("repeated absolute value {0} in a word to standardize")]
    RepeatedLetter(i32),

    #[error("index {index} out of range [1, {n}]")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("generator {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("the empty braid has no first factor")]
    EmptyWord,

    #[error("the identity is not allowed as an endpoint")]
    IdentityEndpoint,

    #[error("braid length must be at least 1")]
    ZeroLength,

    #[error("element index {index} out of range for a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("invalid shuffle selector: {0}")]
    InvalidSelector(String),

    #[error("operation requires a homogeneous vector")]
    NotHomogeneous,

    #[error("operation requires rank >= 1")]
    RankZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache: {0}")]
    Cache(String),
}
