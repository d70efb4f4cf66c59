use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid character {found:?} at position {position}")]
    InvalidCharacter { position: usize, found: char },

    #[error("not a free Motzkin word: {0}")]
    NotFreeMotzkin(String),

    #[error("not a Motzkin prefix: {0}")]
    NotMotzkinPrefix(String),

    #[error("not a Motzkin path: {0}")]
    NotMotzkinPath(String),

    #[error("path never ends on the line y = {line}")]
    NoSpecialStep { line: i64 },

    #[error("path never touches the line y = {line}")]
    LineNotTouched { line: i64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A decomposition produced something the construction rules out.
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("box ({i},{j}) lies outside the Young diagram")]
    OutOfDiagram { i: usize, j: usize },

    #[error("beta-set is not strictly decreasing")]
    NotDecreasing,

    #[error("partition is not self-conjugate")]
    NotSelfConjugate,

    #[error("diagonal hook set must be distinct odd positive integers in decreasing order")]
    NotOddDistinct,

    #[error("partition is not a {t}-core")]
    NotTCore { t: usize },

    #[error("partition is not a self-conjugate {t}-core")]
    NotSelfConjugateTCore { t: usize },

    #[error("malformed abacus: {0}")]
    MalformedAbacus(String),

    #[error("malformed doubled abacus: {0}")]
    MalformedDoubledAbacus(String),

    #[error("malformed bead sequence: {0}")]
    MalformedSequence(String),

    #[error("bead sequence sum mismatch: expected {expected}, found {found}")]
    SumMismatch { expected: usize, found: usize },

    #[error("expected {expected} flat steps, found {found}")]
    WrongFlatCount { expected: usize, found: usize },

    #[error("path has a peak or a valley")]
    NotCornerless,

    #[error("not a cornerless free Motzkin path of the restricted family: {0}")]
    NotCornerlessFree(String),

    #[error("not a cornerless Motzkin prefix ending with a flat step: {0}")]
    NotCornerlessPrefix(String),

    #[error("path length {length} does not match t = {t}")]
    LengthParityMismatch { length: usize, t: usize },

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("family has {count} members, above the cap of {cap}")]
    CapExceeded { count: String, cap: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable variant name, used in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidCharacter { .. } => "InvalidCharacter",
            Error::NotFreeMotzkin(_) => "NotFreeMotzkin",
            Error::NotMotzkinPrefix(_) => "NotMotzkinPrefix",
            Error::NotMotzkinPath(_) => "NotMotzkinPath",
            Error::NoSpecialStep { .. } => "NoSpecialStep",
            Error::LineNotTouched { .. } => "LineNotTouched",
            Error::Precondition(_) => "Precondition",
            Error::InternalConsistency(_) => "InternalConsistency",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::OutOfDiagram { .. } => "OutOfDiagram",
            Error::NotDecreasing => "NotDecreasing",
            Error::NotSelfConjugate => "NotSelfConjugate",
            Error::NotOddDistinct => "NotOddDistinct",
            Error::NotTCore { .. } => "NotTCore",
            Error::NotSelfConjugateTCore { .. } => "NotSelfConjugateTCore",
            Error::MalformedAbacus(_) => "MalformedAbacus",
            Error::MalformedDoubledAbacus(_) => "MalformedDoubledAbacus",
            Error::MalformedSequence(_) => "MalformedSequence",
            Error::SumMismatch { .. } => "SumMismatch",
            Error::WrongFlatCount { .. } => "WrongFlatCount",
            Error::NotCornerless => "NotCornerless",
            Error::NotCornerlessFree(_) => "NotCornerlessFree",
            Error::NotCornerlessPrefix(_) => "NotCornerlessPrefix",
            Error::LengthParityMismatch { .. } => "LengthParityMismatch",
            Error::OutOfRange(_) => "OutOfRange",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::Parse(_) => "Parse",
        }
    }
}
