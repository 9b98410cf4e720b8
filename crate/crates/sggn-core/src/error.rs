//! Error type shared across the crate.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum CoreError {
    #[error("shape mismatch in {op}: {detail}")]
    ShapeMismatch { op: &'static str, detail: String },

    #[error("contract violation in {op}: {detail}")]
    Contract { op: &'static str, detail: String },

    #[error("non-finite value produced by {op} (trace: {trace})")]
    Numeric { op: &'static str, trace: String },

    #[error("size guard exceeded in {op}: {size} > {limit} ({hint})")]
    SizeGuard {
        op: &'static str,
        size: usize,
        limit: usize,
        hint: &'static str,
    },

    #[error("input too short in {op}: need {need}, got {got}")]
    TooShort {
        op: &'static str,
        need: usize,
        got: usize,
    },

    #[error("training diverged at epoch {epoch}: loss {loss:.3e} exceeds {limit:.3e}")]
    Diverged { epoch: usize, loss: f64, limit: f64 },

    #[error("degenerate input in {op}: {detail}")]
    Degenerate { op: &'static str, detail: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("parse error in {path}: {detail}")]
    Parse { path: String, detail: String },
}

pub type Result<T> = std::result::Result<T, CoreError>;

impl CoreError {
    pub fn contract(op: &'static str, detail: impl Into<String>) -> Self {
        CoreError::Contract {
            op,
            detail: detail.into(),
        }
    }

    pub fn shape(op: &'static str, detail: impl Into<String>) -> Self {
        CoreError::ShapeMismatch {
            op,
            detail: detail.into(),
        }
    }
}
