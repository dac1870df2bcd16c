use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime in the supported range")]
    NotPrime(u64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("field mismatch: F_{0} vs F_{1}")]
    FieldMismatch(u32, u32),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("inconsistent presentation: {0}")]
    InconsistentPresentation(String),

    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("modules live over different algebras")]
    AlgebraMismatch,

    #[error("unsupported algebra class: {0}")]
    UnsupportedAlgebra(String),

    #[error("operation requires a weight-graded module")]
    Ungraded,

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("projective splitting failed: {0}")]
    Split(String),

    #[error("isomorphism test was indeterminate")]
    Indeterminate,

    #[error("module is not endotrivial")]
    NotEndotrivial,

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("map is not surjective")]
    NotSurjective,

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("malformed input: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
