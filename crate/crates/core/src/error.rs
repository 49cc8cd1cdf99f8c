use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero input")]
    ZeroPolynomial,
    #[error("JC did not converge")]
    JordanChevalleyDiverged,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("supertrace undefined")]
    SupertraceUndefined,
    #[error("subspace not graded")]
    SubspaceNotGraded,
    #[error("subspace not invariant: {0}")]
    NotInvariant(String),
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("element not nilpotent; use phi_general")]
    NotNilpotent,
    #[error("grading defined only for neat operators")]
    GradingRequiresNeat,
    #[error("not neat")]
    NotNeat,
    #[error("criterion requires a faithful representation")]
    NotFaithful,
    #[error("DS requires square-zero element")]
    NotSquareZero,
    #[error("no grading element: x not JM-extendable")]
    NoGradingElement,
    #[error("no Y over this h: x not JM-extendable")]
    NoCompletion,
    #[error("invalid algebra: {}", .0.join("; "))]
    InvalidAlgebra(Vec<String>),
    #[error("invalid representation: {}", .0.join("; "))]
    InvalidRepresentation(Vec<String>),
    #[error("unknown basis element {0:?}")]
    UnknownBasis(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// An internal post-condition failed. Never expected over exact rationals.
    #[error("internal defect: {0}")]
    Defect(String),
}

impl Error {
    /// Stable machine-readable code, used by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroPolynomial => "zero_input",
            Error::JordanChevalleyDiverged => "jc_diverged",
            Error::Shape(_) => "shape",
            Error::SupertraceUndefined => "supertrace_undefined",
            Error::SubspaceNotGraded => "subspace_not_graded",
            Error::NotInvariant(_) => "not_invariant",
            Error::Parity(_) => "parity",
            Error::NotNilpotent => "not_nilpotent",
            Error::GradingRequiresNeat => "grading_requires_neat",
            Error::NotNeat => "not_neat",
            Error::NotFaithful => "not_faithful",
            Error::NotSquareZero => "not_square_zero",
            Error::NoGradingElement => "no_grading_element",
            Error::NoCompletion => "no_completion",
            Error::InvalidAlgebra(_) => "invalid_algebra",
            Error::InvalidRepresentation(_) => "invalid_representation",
            Error::UnknownBasis(_) => "unknown_basis",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Parse(_) => "parse",
            Error::Defect(_) => "defect",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
