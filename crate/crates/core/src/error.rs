use thiserror::Error;

/// Every failure the library can report.
///
/// Variants that signal an internal inconsistency (`DichotomyViolation`,
/// `TheoremViolation`, `NotKrawtchouk`) can only surface when an
/// implementation invariant is broken; all others describe bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("spectrum is not simple and rational: found {found} distinct rational eigenvalues, need {needed}")]
    NotSimpleRationalSpectrum { found: usize, needed: usize },

    #[error("basis vectors do not form an invertible matrix")]
    SingularBasis,

    #[error("operator is not irreducible tridiagonal in any ordering of the eigenbasis: {0}")]
    NotTridiagonalizable(String),

    #[error("decomposition is not standard for the requested operator")]
    DecompositionNotStandard,

    #[error("flags are not opposite")]
    NotOpposite,

    #[error("operation requires dimension at least 2 (d >= 1)")]
    DegenerateDimension,

    #[error("not a decomposition of the ambient space: {0}")]
    NotADecomposition(String),

    #[error("not a flag: {0}")]
    NotAFlag(String),

    #[error("sequence has a repeated entry at positions {0} and {1}")]
    RepeatedEntry(usize, usize),

    #[error("sequence lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("Leonard pairs are not adjacent")]
    NotAdjacent,

    #[error("Leonard pairs act on spaces of different dimension: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("sequences of an adjacent labeling fall in different branches: {0}")]
    DichotomyViolation(String),

    #[error("internal consistency failure: {0}")]
    TheoremViolation(String),

    #[error("vectors are linearly dependent: {0}")]
    DependentVectors(String),

    #[error("matrix is not traceless")]
    NotTraceless,

    #[error("Krawtchouk parameter p must differ from 0 and 1, got {0}")]
    InvalidP(String),

    #[error("affine transform scale factors must be nonzero")]
    ZeroScale,

    #[error("eigenvalue or dual eigenvalue sequence is not arithmetic")]
    NotArithmetic,

    #[error("no Krawtchouk normal form found: {0}")]
    NotKrawtchouk(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
