use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("size 0 has no composition")]
    EmptyComposition,
    #[error("shuffle requires disjoint alphabets")]
    OverlappingAlphabets,
    #[error("repeated letters in {0}")]
    RepeatedLetters(String),
    #[error("half products undefined on the unit")]
    UnitOperand,
    #[error("grade mismatch: {0} vs {1}")]
    GradeMismatch(usize, usize),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("elements are incomparable")]
    Incomparable,
    #[error("not in span: {0}")]
    NotInSpan(String),
    #[error("zero element")]
    ZeroElement,
    #[error("not quasi-idempotent: {0}")]
    NotQuasiIdempotent(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
