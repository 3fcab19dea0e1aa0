use thiserror::Error;

/// Failures of the algebraic operations on contexts and states.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("sort mismatch: expected {expected}, found {found}")]
    SortMismatch { expected: String, found: String },
    #[error("contexts are not composable: {0}")]
    NotComposable(String),
    #[error("{0}")]
    Invalid(String),
}

pub type CoreResult<T> = Result<T, CoreError>;

/// A syntax error in one of the model file formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }
}

/// Failures of universe construction and refinement.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("universe exceeded {limit} states")]
    UniverseExplosion { limit: usize },
    #[error("refinement did not stabilise within {limit} iterations")]
    IterationLimit { limit: usize },
    #[error("derived state {state} lies outside the closed universe")]
    ClosureViolation { state: String },
    #[error("no seed states given")]
    NoSeeds,
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl EngineError {
    /// True for the resource guards (state and iteration limits).
    pub fn is_resource_guard(&self) -> bool {
        matches!(
            self,
            EngineError::UniverseExplosion { .. } | EngineError::IterationLimit { .. }
        )
    }
}

pub type EngineResult<T> = Result<T, EngineError>;
