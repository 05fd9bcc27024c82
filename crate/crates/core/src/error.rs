use thiserror::Error;

use crate::exactpoly::Poly;

/// Errors produced by the volume engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range for {n_vars} variables")]
    VarIndexOutOfRange { index: usize, n_vars: usize },

    #[error("({g},{n}) is unstable: 2g-2+n must be positive")]
    Unstable { g: u32, n: usize },

    #[error("invalid volume polynomial for ({g},{n}): {reason}")]
    InvalidVolume { g: u32, n: usize, reason: String },

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("polynomial has an odd L-exponent")]
    OddExponent,

    #[error("stratum {k} is not homogeneous of L-degree {expected}")]
    StratumNotHomogeneous { k: u32, expected: u32 },

    #[error("lift left a nonzero residual: {residual}")]
    NonzeroResidual { residual: Poly },

    #[error("division left a nonzero remainder: {remainder}")]
    NonzeroRemainder { remainder: Poly },

    #[error("no rational constant satisfies the dilaton relation: {diff}")]
    NoDilatonConstant { diff: Poly },

    #[error("kernel normalization mismatch: {0}")]
    Calibration(String),

    #[error("method {method} does not support genus {g}")]
    UnsupportedMethod { method: &'static str, g: u32 },

    #[error("{0}")]
    Precondition(String),

    #[error("store: {0}")]
    Store(String),

    #[error("cross-provenance disagreement at ({g},{n}): {diff}")]
    ProvenanceConflict { g: u32, n: usize, diff: Poly },

    #[error("unsupported schema version {found} (expected {expected})")]
    SchemaVersion { found: u64, expected: u64 },

    #[error("malformed rational {0:?}")]
    ParseRational(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
