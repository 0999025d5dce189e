use thiserror::Error;

/// Errors surfaced by the library. Absent crystal operator results are not
/// errors; they are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("flavor mismatch: {0}")]
    FlavorMismatch(String),
    #[error("word {word} is not a valid {class} word")]
    NotInClass { word: String, class: &'static str },
    #[error("vertex cap of {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("push chain exceeded {cap} steps")]
    IterationCap { cap: usize },
    #[error("no preimage: {0}")]
    NoPreimage(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
