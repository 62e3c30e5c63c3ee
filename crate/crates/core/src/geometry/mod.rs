//! Planar subdivisions induced by axis-parallel segments.

mod segment;
mod subdivision;

pub use segment::{Orientation, Point, Segment, SegmentSet};
pub use subdivision::{EulerCounts, Face, FaceClass, FaceId, Subdivision, VertexId};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("segment {0} -> {1} is not axis-parallel")]
    NonAxisParallel(Point, Point),
    #[error("zero-length segment at {0}")]
    ZeroLengthSegment(Point),
    #[error("no segments given")]
    EmptyInput,
    #[error("{0} is not a vertex of the subdivision")]
    NotAVertex(Point),
}

/// Builds the subdivision induced by `set`.
pub fn build_subdivision(set: &SegmentSet) -> Result<Subdivision, GeometryError> {
    Subdivision::build(set)
}
