use thiserror::Error;

/// Crate-wide error type for fallible domain operations. Precondition abuses
/// that a caller can always avoid (index bounds, mismatched variable counts)
/// panic instead, like slice indexing.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("structure file error at line {line}: {msg}")]
    Structure { line: usize, msg: String },

    #[error("io error reading {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("gcd of two zero polynomials is undefined")]
    GcdBothZero,

    #[error("need at least 3 variables, got {0}")]
    TooFewVariables(usize),

    #[error("expected {expected} pairs for {nvars} variables, got {got}")]
    PairCount { nvars: usize, expected: usize, got: usize },

    /// Pair indices in errors are 1-based, matching the s_i/t_i naming.
    #[error("t must be nonzero in pair {index}")]
    ZeroT { index: usize },

    #[error("s and t not coprime in pair {index} (common factor {factor})")]
    NotCoprime { index: usize, factor: String },

    #[error("zero denominator in rational function")]
    ZeroDenominator,

    #[error("pencil parameters (lambda_{index}, mu_{index}) are both zero")]
    ZeroPencilPair { index: usize },

    #[error("pencil ideal is improper (1 lies in it)")]
    ImproperPencil,

    #[error("the ideal is the unit ideal")]
    UnitIdeal,

    #[error("candidate ideal does not contain the pencil ideal (missing generator {generator})")]
    CandidateMissesPencil { generator: String },

    #[error("smoothness check requires t_{index} = 1")]
    NonUnitT { index: usize },

    #[error("smoothness check requires algebraically independent s_i (jacobian rank {rank} < {expected})")]
    DependentParameters { rank: usize, expected: usize },

    #[error("cannot eliminate every variable")]
    EliminateAll,

    #[error("saturation by the zero polynomial")]
    SaturateByZero,

    #[error("{0}")]
    Input(String),
}
