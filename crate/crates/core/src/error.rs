use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("position {position} out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("length mismatch: letters have length {letters}, mask has length {mask}")]
    LengthMismatch { letters: usize, mask: usize },
    #[error("not composable: source {source_word} differs from target {target_word}")]
    NotComposable { source_word: String, target_word: String },
    #[error("position {0} is not translucent")]
    NotTranslucent(usize),
    #[error("{0} is not a valid right factor of the split {1}")]
    InvalidRightFactor(String, String),
    #[error("type mismatch: expected {expected}, found {found}")]
    TypeMismatch { expected: String, found: String },
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("word `{0}` has no opaque letter")]
    NoOpaqueLetter(String),
    #[error("bipartition is invalid: {0}")]
    InvalidBipartition(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("enumeration over {opaque} opaque positions exceeds the limit of {cap}")]
    GuardrailExceeded { opaque: usize, cap: usize },
    #[error("expected a functional of kind {expected}, found {found}")]
    KindMismatch { expected: String, found: String },
    #[error("missing table entry for `{0}`")]
    MissingEntry(String),
    #[error("half product of two functionals with nonzero unit value is not defined")]
    UndefinedHalfProduct,
    #[error("functional does not vanish on placeholder-only words")]
    NotInLieAlgebra,
    #[error("schema violation: {0}")]
    Schema(String),
}
