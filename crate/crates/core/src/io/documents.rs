//! Structured documents for solutions and reduction outputs.

use serde::{Deserialize, Serialize};

use super::{instance_hash, IoError};
use crate::geometry::{FaceId, Point, SegmentSet};
use crate::reductions::{CanonicalPair, ManifestEntry, ReductionOutput};
use crate::solvers::{Algorithm, FaceFilter, FaceSolution, PointSolution, Problem, Solution};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionDocument {
    pub problem: Problem,
    pub variant: FaceFilter,
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub points: Option<Vec<Point>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub faces: Option<Vec<FaceId>>,
    pub optimal: bool,
    pub algorithm: Algorithm,
    pub instance_hash: String,
}

impl SolutionDocument {
    pub fn from_points(set: &SegmentSet, variant: FaceFilter, sol: &PointSolution) -> Self {
        Self {
            problem: Problem::Stab,
            variant,
            size: sol.size(),
            points: Some(sol.points.clone()),
            faces: None,
            optimal: sol.optimal,
            algorithm: sol.algorithm,
            instance_hash: instance_hash(set),
        }
    }

    pub fn from_faces(set: &SegmentSet, problem: Problem, variant: FaceFilter, sol: &FaceSolution) -> Self {
        Self {
            problem,
            variant,
            size: sol.size(),
            points: None,
            faces: Some(sol.faces.clone()),
            optimal: sol.optimal,
            algorithm: sol.algorithm,
            instance_hash: instance_hash(set),
        }
    }

    pub fn solution(&self) -> Result<Solution, IoError> {
        match (&self.points, &self.faces) {
            (Some(p), None) => Ok(Solution::Points(p.clone())),
            (None, Some(f)) => Ok(Solution::Faces(f.clone())),
            _ => Err(IoError::Schema {
                path: "$".into(),
                message: "exactly one of `points` and `faces` must be present".into(),
            }),
        }
    }

    /// Fails unless the document was produced for `set`.
    pub fn check_instance(&self, set: &SegmentSet) -> Result<(), IoError> {
        let actual = instance_hash(set);
        if self.instance_hash == actual {
            Ok(())
        } else {
            Err(IoError::HashMismatch { expected: self.instance_hash.clone(), actual })
        }
    }
}

/// Everything about a compiled formula except the geometry itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionReport {
    pub problem: Problem,
    pub variant: FaceFilter,
    pub n: usize,
    pub m: usize,
    pub target: usize,
    pub faces: usize,
    pub rectangular_faces: usize,
    pub instance_hash: String,
    pub manifest: Vec<ManifestEntry>,
    pub canonical: Vec<CanonicalPair>,
}

impl ReductionReport {
    pub fn new(out: &ReductionOutput) -> Self {
        Self {
            problem: out.problem,
            variant: out.variant,
            n: out.n(),
            m: out.m(),
            target: out.target,
            faces: out.subdivision.face_count(),
            rectangular_faces: out.subdivision.rectangular_faces().len(),
            instance_hash: instance_hash(&out.segments),
            manifest: out.manifest.clone(),
            canonical: out.canonical.clone(),
        }
    }
}
