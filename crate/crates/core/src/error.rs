use thiserror::Error;

/// Errors raised across the analyzer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("duplicate rule for letter `{0}`")]
    DuplicateRule(String),

    #[error("letter `{0}` is used but has no rule")]
    UndeclaredLetter(String),

    #[error("missing `axiom:` line")]
    MissingAxiom,

    #[error("empty alphabet")]
    EmptyAlphabet,

    #[error("letter index {0} is outside the alphabet")]
    LetterOutOfRange(usize),

    #[error("word too large: predicted length {predicted} exceeds cap {cap}")]
    WordTooLarge { predicted: String, cap: u64 },

    #[error("system is mortal: the axiom vanishes after finitely many steps")]
    Mortal,

    #[error("morphism is not irreducible")]
    Reducible,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid algebraic number: {0}")]
    InvalidAlgebraic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
