use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown algebra `{0}` (expected a1 or a2)")]
    UnknownAlgebra(String),
    #[error("unsupported matrix size {0}")]
    UnsupportedRank(usize),
    #[error("invalid partition {partition:?} of {n}")]
    InvalidPartition { partition: Vec<usize>, n: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not trace-free")]
    NotTraceFree,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("group element is not unipotent")]
    NotUnipotent,
    #[error("invalid sl2-triple: {0} fails")]
    InvalidTriple(String),
    #[error("ad_h has a non-integer eigenvalue")]
    NonIntegerGrading,
    #[error("slice is not principal")]
    NotPrincipal,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("degenerate curve: generic rank {rank} < {expected}")]
    DegenerateCurve { rank: usize, expected: usize },
    #[error("zero matrix has no projective class")]
    ZeroMatrix,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
