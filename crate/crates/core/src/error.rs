use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed user input: bad words, bad specs, invalid parameters.
    #[error("input error: {0}")]
    Input(String),

    /// A backend refused to construct (bad table, failed metric check).
    #[error("configuration error: {0}")]
    Config(String),

    /// A query needed an element outside the ball that was built.
    #[error("element outside ball of radius {radius}: {what} (build a larger ball)")]
    OutOfRange { radius: u32, what: String },

    /// A configured resource limit was hit.
    #[error("budget exceeded: {what} limit of {limit}")]
    Budget { what: &'static str, limit: u64 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    /// True for errors caused by a size or time limit rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Budget { .. } | Error::OutOfRange { .. })
    }
}
