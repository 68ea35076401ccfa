use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operation not supported over this ring: {0}")]
    Unsupported(String),
    #[error("unsupported base ring: {0}")]
    UnsupportedBase(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("point outside the domain of the ring map: {0}")]
    NotInDomain(String),
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("degree {0} exceeds the search envelope of 7")]
    DegreeTooLarge(usize),
    #[error("twisted product is not associative: {0}")]
    AssociativityFailure(String),
    #[error("the Frobenius form is degenerate")]
    DegenerateForm,
    #[error("characteristic 2 is not allowed here")]
    CharTwo,
    #[error("connection is not Nakayama")]
    NotNakayama,
    #[error("functional is not normalized: h(1) = {0}")]
    NotNormalized(String),
    #[error("Hopf algebra is not cosemisimple")]
    NotCosemisimple,
    #[error("module mismatch: {0}")]
    ModuleMismatch(String),
    #[error("fiber is not Galois")]
    FiberNotGalois,
    #[error("no Galois certificate available")]
    NoCertificate,
    #[error("no element x with Λ·x = 1 exists")]
    NotFound,
    #[error("retry budget exhausted without a conclusive answer")]
    RetryBudgetExhausted,
    #[error("invalid deformation family: {0}")]
    InvalidFamily(String),
    #[error("invalid H-structure: {0}")]
    StructureInvalid(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
