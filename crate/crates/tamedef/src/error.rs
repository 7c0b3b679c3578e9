use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precision {precision} too small: {detail}")]
    Precision { precision: u32, detail: String },
    #[error("completion failed for {family}: {reason}")]
    Completion { family: String, reason: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{0}")]
    Nonexistent(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("module has a projective summand")]
    ProjectiveSummand,
    #[error("construction error: {0}")]
    Construction(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("classification error: {0}")]
    Classification(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Errors caused by running out of precision or search budget rather than by a
    /// mathematical failure.
    pub fn is_abort(&self) -> bool {
        matches!(self, Error::Precision { .. } | Error::Capacity(_) | Error::Completion { .. })
    }
}
