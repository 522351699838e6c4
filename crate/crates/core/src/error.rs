use thiserror::Error;

use crate::scalar::FieldKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: FieldKind, found: FieldKind },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("not an anti-pre-Lie algebra: {0}")]
    NotAntiPreLie(String),

    #[error("Jacobi identity fails for the commutator: {0}")]
    NotLie(String),

    #[error("not a representation: {0}")]
    InvalidRepresentation(String),

    #[error("2-cochain is not a cocycle: {0}")]
    NotCocycle(String),

    #[error("not an O-operator: {0}")]
    NotOOperator(String),

    #[error("not an anti-L-dendriform algebra: {0}")]
    NotDendriform(String),

    #[error("matrix is singular")]
    Singular,

    #[error("bilinear form is degenerate")]
    DegenerateForm,

    #[error("bilinear form violates the invariance identity: {0}")]
    NotInvariant(String),

    #[error("bilinear form is not skew-symmetric")]
    NotSkew,

    #[error("not a formal deformation: {0}")]
    NotDeformation(String),

    #[error("invalid extension: {0}")]
    InvalidExtension(String),

    #[error("invalid section: {0}")]
    InvalidSection(String),

    #[error("extensions are over different (algebra, representation) data: {0}")]
    MismatchedExtensions(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search space has {size} candidates, above the limit of {limit}")]
    SpaceTooLarge { size: u128, limit: u128 },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by malformed input rather than a mathematical failure.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::FieldMismatch { .. }
                | Error::Dimension(_)
                | Error::Json(_)
                | Error::Io(_)
                | Error::SpaceTooLarge { .. }
        )
    }
}
