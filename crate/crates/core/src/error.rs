use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("grid step must be nonzero")]
    ZeroGridStep,
    #[error("grid step mismatch: {0} vs {1}")]
    GridMismatch(String, String),
    #[error("expected a polynomial in the {expected} basis, got {found}")]
    BasisMismatch { expected: String, found: String },
    #[error("operator maps degree {column} to degree {image_degree}, outside the degree-{bound} space")]
    DegreeOverflow {
        column: usize,
        image_degree: usize,
        bound: usize,
    },
    #[error("matrix is not upper triangular (entry ({row}, {col}) is nonzero)")]
    NotTriangular { row: usize, col: usize },
    #[error("degenerate spectrum: diagonal entries at degrees {first} and {second} coincide")]
    DegenerateSpectrum { first: usize, second: usize },
    #[error("degree {degree} outside the admissible range of {family}")]
    DegreeOutOfRange { family: String, degree: usize },
    #[error("inadmissible parameter: {0}")]
    InadmissibleParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
}

impl Error {
    /// Whether this is an input/usage problem rather than a mathematical one.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::UnknownName(_))
    }
}
