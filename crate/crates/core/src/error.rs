use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("empty {0} not allowed")]
    Empty(&'static str),

    #[error("zero vector not allowed as {0}")]
    ZeroVector(&'static str),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("column {column} is not lexicographically positive")]
    ColumnNotLexPositive { column: usize },

    #[error("matrix rows are not pairwise orthogonal or contain a zero row")]
    NotRowOrthogonal,

    #[error("matrix is not stochastic (rows must be probability vectors)")]
    NotStochastic,

    #[error("matrix is rank deficient (rank {rank}, need {need})")]
    RankDeficient { rank: usize, need: usize },

    #[error("vector is not a probability mass function")]
    NotProbability,

    #[error("incoherent input: violates {axiom}")]
    Incoherent { axiom: &'static str },

    #[error("invalid witness set: {0}")]
    InvalidWitness(&'static str),

    #[error("the gamble already belongs to the cone; no separation exists")]
    NoSeparation,

    #[error("invalid event: {0}")]
    InvalidEvent(String),

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("dimension {dim} exceeds the supported bound {bound} for this operation")]
    DimensionCap { dim: usize, bound: usize },

    #[error("sampling retries exhausted while generating {0}")]
    SamplingExhausted(&'static str),

    #[error("internal defect: {0}")]
    Defect(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
