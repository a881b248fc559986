use thiserror::Error;

/// Errors produced by the reconstruction library.
#[derive(Debug, Error)]
pub enum Error {
    /// Shapes of two coupled objects disagree (matrix/vector/volume).
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    Dimension {
        context: String,
        expected: String,
        got: String,
    },

    /// An argument is outside its documented domain.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Container file does not start with the expected magic or carries a
    /// malformed header.
    #[error("container format error: {0}")]
    Format(String),

    /// Container payload is shorter than the header promises.
    #[error("container truncated: {0}")]
    Truncated(String),

    /// Container was written by an unsupported format version.
    #[error("unsupported container version {found} (supported: {supported})")]
    Version { found: u32, supported: u32 },

    /// A preprocessing step cannot be applied (empty band, missing
    /// backgrounds, degenerate statistics).
    #[error("preprocessing error: {0}")]
    Preproc(String),

    /// An external or built-in denoiser failed.
    #[error("denoiser error: {0}")]
    Denoiser(String),

    /// The automatic parameter schedule degenerated (constant iterate).
    #[error("parameter schedule error: {0}")]
    Schedule(String),

    /// A quality metric is undefined for the given inputs.
    #[error("metric error: {0}")]
    Metric(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn dim(context: impl Into<String>, expected: impl ToString, got: impl ToString) -> Self {
        Error::Dimension {
            context: context.into(),
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
