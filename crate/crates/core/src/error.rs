use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A parameter or input failed a constraint. `field` names the offending
    /// input so callers can point at it (spec documents reuse the same names).
    #[error("invalid {field}: {reason}")]
    Invalid { field: String, reason: String },

    #[error("degenerate Gram matrix: determinant is zero")]
    Degenerate,

    #[error("not a resolution graph: {0}")]
    NotResolutionGraph(String),

    /// The determinant identity |coker| = |det| was requested for a map that
    /// is not invertible over the rationals.
    #[error("hypothesis failed: {hypothesis} (kernel rank {kernel_rank})")]
    HypothesisFailed {
        hypothesis: &'static str,
        kernel_rank: usize,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn invalid(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Invalid {
            field: field.into(),
            reason: reason.into(),
        }
    }
}
