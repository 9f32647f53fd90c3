use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("inflation needs {expected} blocks, got {got}")]
    BlockCountMismatch { expected: usize, got: usize },

    #[error("inflation block {0} is empty")]
    EmptyBlock(usize),

    #[error("census does not retain members of length {0}")]
    MembersNotRetained(usize),

    #[error("census only reaches length {have}, asked for {want}")]
    CensusTooShort { have: usize, want: usize },

    #[error("malformed grid spec: {0}")]
    GridSpec(String),

    #[error("letter {0:?} is not in the cell alphabet")]
    UnknownLetter(char),

    #[error("{what} bound exceeded: {got} > {bound}")]
    BoundExceeded {
        what: &'static str,
        got: u128,
        bound: u128,
    },

    #[error("permutation {0} is not in the grid class")]
    NotGridMember(String),

    #[error("malformed rule at line {line}: {msg}")]
    Rule { line: usize, msg: String },

    #[error("series error: {0}")]
    Series(String),

    #[error("no positive real root")]
    NoPositiveRoot,

    #[error("inconsistent seed at order {0}")]
    InconsistentSeed(usize),

    #[error("ambiguous extension at order {0}")]
    AmbiguousExtension(usize),

    #[error("malformed inflation rule table at line {line}: {msg}")]
    RuleTable { line: usize, msg: String },

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
