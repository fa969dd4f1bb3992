// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("algebra elements live in different bases (`{left}` vs `{right}`)")]
    BasisMismatch { left: String, right: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("integration diverged at step {step}")]
    DivergedIntegration { step: usize },

    #[error("unitarity drift {defect:.3e} at sample {index}; enable re-unitarization")]
    UnitarityDrift { index: usize, defect: f64 },

    #[error("curvature {kappa:.3e} is below the degeneracy threshold {kappa_min:.1e}")]
    DegenerateCurvature { kappa: f64, kappa_min: f64 },

    #[error("need at least {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("Maurer-Cartan projection defect {defect:.3e} at grid point ({i}, {j}) exceeds {tol:.1e}")]
    NotTangent {
        defect: f64,
        tol: f64,
        i: usize,
        j: usize,
    },

    #[error("stencil needs margin {needed} on a {nx}x{ny} grid")]
    InsufficientMargin { needed: usize, nx: usize, ny: usize },

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("loop parameter {re}+{im}i is not on the unit circle")]
    InvalidLoopParameter { re: f64, im: f64 },

    #[error("range error: {0}")]
    RangeError(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
