// SPDX-License-Identifier: MIT OR Apache-2.0

use gini_core::Error;

#[derive(Debug)]
pub enum Failure {
    /// Bad flags or parameters out of their domain.
    Usage(String),
    /// Input that cannot be read or is not a valid sample.
    Data(String),
    /// At least one audit check failed; details are already printed.
    Verification,
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Data(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Verification => 3,
        }
    }

    pub fn message(&self) -> Option<&str> {
        match self {
            Failure::Usage(m) | Failure::Data(m) => Some(m),
            Failure::Verification => None,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::ParameterDomain { .. } | Error::Hypothesis(_) => Failure::Usage(err.to_string()),
            _ => Failure::Data(err.to_string()),
        }
    }
}
