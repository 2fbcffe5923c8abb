use thiserror::Error;

/// Errors surfaced by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis family is empty")]
    EmptyFamily,
    #[error("ground set of size {0} exceeds the supported maximum of 64")]
    GroundSetTooLarge(usize),
    #[error("element {element} is out of range for a ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("not a matroid: {0}")]
    NotAMatroid(String),
    #[error("rank {rank} out of range 0..={max}")]
    RankOutOfRange { rank: usize, max: usize },
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("invalid Steiner system: {0}")]
    InvalidSteinerSystem(String),
    #[error("mixed ambient variable counts ({0} vs {1})")]
    MixedAmbient(usize, usize),
    #[error("the zero ideal has no initial degree")]
    ZeroIdeal,
    #[error("subset support is empty")]
    EmptySupport,
    #[error("level {level} out of range 1..={max}")]
    LevelOutOfRange { level: usize, max: usize },
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("ideal is zero or the unit ideal")]
    ZeroOrUnitIdeal,
    #[error("not a minimal generator: {0}")]
    NotAMinimalGenerator(String),
    #[error("ideal is not C-matroidal: {0}")]
    NotCMatroidal(String),
    #[error("internal consistency check failed: {0}")]
    InternalInconsistency(String),
    #[error("operation budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
