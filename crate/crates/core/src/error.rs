use thiserror::Error;

/// Errors raised by the combinatorial and polyhedral routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<i64>),
    #[error("negative part in a partition: {0:?}")]
    NegativePart(Vec<i64>),
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("partition {partition} does not fit in the {width}x{height} rectangle")]
    NotInRectangle {
        partition: String,
        width: u32,
        height: u32,
    },
    #[error("invalid subset of [{n}]: {elements:?}")]
    InvalidSubset { n: u32, elements: Vec<u32> },
    #[error("subsets {0:?} and {1:?} overlap")]
    Overlap(Vec<u32>, Vec<u32>),
    #[error("subsets live in different ambient sets ([{0}] vs [{1}])")]
    AmbientMismatch(u32, u32),
    #[error("invalid Horn datum: {0}")]
    InvalidDatum(String),
    #[error("prefix value {a} is smaller than the first part {first}")]
    PrefixTooSmall { a: u32, first: u32 },
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("tableau is not semistandard: {0}")]
    NotSemistandard(String),
    #[error("cell ({0}, {1}) is not an inner corner")]
    NotInnerCorner(usize, usize),
    #[error("invalid biword: {0}")]
    InvalidBiword(String),
    #[error("shape or content mismatch: {0}")]
    Mismatch(String),
    #[error("tableau is not ballot")]
    NotBallot,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("weight length {len} does not match rank {rank}")]
    RankMismatch { len: usize, rank: usize },
    #[error("sextuple does not parametrize a minimal inequality: {0}")]
    NotAFacet(String),
    #[error("point is not on the boundary hyperplane (value {0})")]
    NotOnBoundary(i64),
    #[error("cone is not pointed")]
    NotPointed,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
