use thiserror::Error;

#[derive(Debug, Error)]
pub enum GlaError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("Cayley-Dickson doubling of an 8-dimensional algebra is not supported")]
    DimTooLarge,
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("basis element {index} has non-negative degree {degree}")]
    NonNegativeDegreePresent { index: usize, degree: i32 },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid algebra data: {0}")]
    InvalidAlgebra(String),
    #[error("the negative part is not fundamental (not generated by degree -1)")]
    NotFundamental,
    #[error("bilinear form is degenerate on the degree -1 subspace")]
    DegenerateForm,
    #[error("eta vanishes on the characteristic element")]
    EtaVanishesOnE,
    #[error("prolongation did not terminate within {0} steps")]
    StepLimitExceeded(usize),
    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("subspace {0} of the split is not totally isotropic")]
    NotIsotropic(usize),
    #[error("pairing between the split summands is degenerate")]
    DegeneratePairing,
    #[error("family carries no Cartan tag")]
    NoCartanTag,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("unsupported root system {0}")]
    UnsupportedType(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = GlaError> = std::result::Result<T, E>;
