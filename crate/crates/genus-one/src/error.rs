use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("principal value does not exist: {0}")]
    PvDoesNotExist(String),

    #[error("divergent integral: {0}")]
    Divergent(String),

    #[error("grid does not cover the required range: {0}")]
    Coverage(String),

    #[error("field singular on evaluation set: {0}")]
    SingularField(String),

    #[error("non-integrable endpoint behaviour: {0}")]
    NonIntegrableEndpoint(String),

    #[error("hypotheses unmet: {0}")]
    HypothesesUnmet(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
