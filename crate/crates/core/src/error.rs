// SPDX-License-Identifier: MIT OR Apache-2.0

use std::path::PathBuf;

/// Errors raised by the mean kernels, the audit engine, the oracle and the
/// polymer data layer.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("sample must contain at least one value")]
    EmptySample,

    #[error("value #{index} must be positive and finite, got {value}")]
    InvalidValue { index: usize, value: f64 },

    #[error("weight #{index} must be positive and finite, got {value}")]
    InvalidWeight { index: usize, value: f64 },

    #[error("{values} values but {weights} weights")]
    LengthMismatch { values: usize, weights: usize },

    #[error("parameter `{name}` = {value} is outside its domain: {expected}")]
    ParameterDomain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("theorem hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("outside oracle domain: {0}")]
    OracleDomain(String),

    #[error("{}: {}{message}", path.display(), line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Ingestion {
        path: PathBuf,
        line: Option<u64>,
        message: String,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, expected: &'static str) -> Self {
        Error::ParameterDomain {
            name,
            value,
            expected,
        }
    }
}
