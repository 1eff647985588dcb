use thiserror::Error;

use crate::poly::ParseError;
use crate::toric::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live over different variable tables")]
    TableMismatch,

    #[error("invalid variable table: {0}")]
    InvalidTable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("relation `{0}` is not homogeneous")]
    Inhomogeneous(String),

    #[error("cannot assign a value to generator `{0}`")]
    GeneratorAssignment(String),

    #[error("rename is not a bijection: {0}")]
    NonBijectiveRename(String),

    #[error("degenerate presentation: {0}")]
    DegeneratePresentation(String),

    #[error("trace degenerate: {0}")]
    TraceDegenerate(String),

    #[error("grading matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("unsupported toric data: {0}")]
    UnsupportedToric(String),

    #[error("invalid deformation matrix ({} violation(s))", .0.len())]
    InvalidDeformation(Vec<Violation>),

    #[error("dimension mismatch: {0}")]
    Dimension(String),
}
