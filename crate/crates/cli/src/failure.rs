// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::process::ExitCode;

use bhg_core::Error;

/// A non-passing outcome and the exit status it maps to.
#[derive(Debug)]
pub enum Failure {
    /// Exit 1.
    Usage(String),
    /// Exit 2.
    Invariant(String),
    /// Exit 3.
    Divergence(String),
    /// Exit 4.
    Margin(String),
    /// Exit 5.
    Threshold(String),
}

impl Failure {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            Failure::Usage(_) => 1,
            Failure::Invariant(_) => 2,
            Failure::Divergence(_) => 3,
            Failure::Margin(_) => 4,
            Failure::Threshold(_) => 5,
        })
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "error: {m}"),
            Failure::Invariant(m) => write!(f, "invariant failure: {m}"),
            Failure::Divergence(m) => write!(f, "divergence: {m}"),
            Failure::Margin(m) => write!(f, "margin: {m}"),
            Failure::Threshold(m) => write!(f, "threshold exceeded: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let m = e.to_string();
        match e {
            Error::DivergedIntegration { .. } | Error::UnitarityDrift { .. } => Failure::Divergence(m),
            Error::InsufficientMargin { .. } => Failure::Margin(m),
            _ => Failure::Usage(m),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub type Outcome = Result<(), Failure>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn library_errors_map_to_exit_classes() {
        let code = |e: Error| format!("{:?}", Failure::from(e).exit_code());
        assert_eq!(code(Error::DivergedIntegration { step: 3 }), format!("{:?}", ExitCode::from(3)));
        assert_eq!(
            code(Error::InsufficientMargin { needed: 3, nx: 6, ny: 6 }),
            format!("{:?}", ExitCode::from(4))
        );
        assert_eq!(code(Error::UnknownAlgebra("x".into())), format!("{:?}", ExitCode::from(1)));
    }
}
