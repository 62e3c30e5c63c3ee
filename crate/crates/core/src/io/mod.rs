//! File formats, generators and rendering.

mod documents;
mod formula;
mod generate;
mod segs;
mod svg;

use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;

use crate::geometry::GeometryError;

pub use documents::{ReductionReport, SolutionDocument};
pub use formula::{format_formula, parse_formula};
pub use generate::{generate, grid, guillotine, GeneratorSpec};
pub use segs::{format_segments, instance_hash, parse_segments};
pub use svg::{render_svg, Overlay};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("line {line}: segment is not axis-parallel")]
    NonAxisParallel { line: usize },
    #[error("line {line}: segment has zero length")]
    ZeroLength { line: usize },
    #[error("at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("instance hash mismatch: document has {expected}, file hashes to {actual}")]
    HashMismatch { expected: String, actual: String },
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Pretty JSON with a trailing newline; field order follows the type.
pub fn to_pretty_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable document");
    s.push('\n');
    s
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T, IoError> {
    serde_json::from_str(text).map_err(|e| IoError::Schema {
        path: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })
}
