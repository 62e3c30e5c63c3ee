//! Planar subdivisions induced by axis-parallel segments, with solvers for
//! face stabbing, independent face sets and dominating face sets, plus a
//! compiler from rectilinear planar 3SAT formulas into hardness instances.

pub mod cli;
pub mod geometry;
pub mod io;
pub mod reductions;
pub mod solvers;

pub use geometry::{build_subdivision, FaceId, GeometryError, Point, Segment, SegmentSet, Subdivision};
