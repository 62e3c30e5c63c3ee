//! Compilers from rectilinear planar 3SAT into stabbing, independent-set and
//! dominating-set instances, with canonical solutions and an exhaustive
//! checker for the correspondence between the two sides.

mod draft;
mod formula;
mod lemma;
mod mds;
mod mis;
mod stab;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{FaceClass, FaceId, GeometryError, SegmentSet, Subdivision};
use crate::solvers::{FaceFilter, Problem, Solution};

pub use formula::{
    assignment_from_mask, plan_layout, sat_brute_force, sign_cube, validate_layout, Clause, ClausePlan, LayoutPlan,
    LayoutViolation, LegPlacement, Rp3SatInstance, SatResult, Side, MAX_SAT_VARIABLES,
};
pub use lemma::{verify_lemma, ConverseStatus, GadgetCheck, LemmaReport};
pub use mds::{build_mds_reduction, mds_gadget};
pub use mis::{build_mis_reduction, mis_gadget};
pub use stab::{build_stab_reduction, stab_gadget};

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error("formula cannot be laid out: {}", join(.0))]
    LayoutInvalid(Vec<LayoutViolation>),
    #[error("{0} variables exceed the brute-force limit")]
    TooLarge(usize),
    #[error("clause {0} is not satisfied by the assignment")]
    ClauseUnsatisfiedByAssignment(usize),
    #[error("assignment has {got} values, expected {expected}")]
    AssignmentLength { expected: usize, got: usize },
    #[error("gadget self-check failed: {0}")]
    SelfCheck(String),
    #[error("unsupported instance: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

fn join(v: &[LayoutViolation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// Label of one bounded face of a generated instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub face: FaceId,
    pub class: FaceClass,
    /// 1-based variable owning the face.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub variable: Option<usize>,
    /// 0-based clause owning the face.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub clause: Option<usize>,
    pub name: String,
    pub rectangular: bool,
}

/// The two canonical solutions of one variable gadget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalPair {
    pub variable: usize,
    pub true_label: String,
    pub true_set: Solution,
    pub false_label: String,
    pub false_set: Solution,
}

impl CanonicalPair {
    /// `[false_set, true_set]` as face lists, for face problems.
    pub fn face_sets(&self) -> Option<[Vec<FaceId>; 2]> {
        match (&self.false_set, &self.true_set) {
            (Solution::Faces(a), Solution::Faces(b)) => Some([a.clone(), b.clone()]),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub problem: Problem,
    pub variant: FaceFilter,
    pub instance: Rp3SatInstance,
    pub segments: SegmentSet,
    pub subdivision: Subdivision,
    pub target: usize,
    pub manifest: Vec<ManifestEntry>,
    pub canonical: Vec<CanonicalPair>,
    /// Faces of each clause gadget; for independent sets the nine ring
    /// faces in the order `r^1..r^9`.
    pub clause_faces: Vec<Vec<FaceId>>,
    /// Faces of each variable gadget.
    pub variable_faces: Vec<Vec<FaceId>>,
}

impl ReductionOutput {
    pub fn n(&self) -> usize {
        self.instance.variables
    }

    pub fn m(&self) -> usize {
        self.instance.clauses.len()
    }
}

pub fn build_reduction(
    inst: &Rp3SatInstance,
    problem: Problem,
    variant: FaceFilter,
) -> Result<ReductionOutput, ReductionError> {
    match problem {
        Problem::Stab => build_stab_reduction(inst, variant),
        Problem::Mis => build_mis_reduction(inst, variant),
        Problem::Mds => build_mds_reduction(inst, variant),
    }
}

/// Combined canonical solution for `assignment` (one value per variable).
pub fn canonical_solution(out: &ReductionOutput, assignment: &[bool]) -> Result<Solution, ReductionError> {
    if assignment.len() != out.n() {
        return Err(ReductionError::AssignmentLength { expected: out.n(), got: assignment.len() });
    }
    let pick = |p: &CanonicalPair, v: bool| if v { p.true_set.clone() } else { p.false_set.clone() };
    match out.problem {
        Problem::Stab => {
            let mut pts = Vec::new();
            for (p, &v) in out.canonical.iter().zip(assignment) {
                if let Solution::Points(q) = pick(p, v) {
                    pts.extend(q);
                }
            }
            pts.sort_unstable_by_key(|p| (p.x, p.y));
            Ok(Solution::Points(pts))
        }
        Problem::Mds => {
            let mut faces = Vec::new();
            for (p, &v) in out.canonical.iter().zip(assignment) {
                if let Solution::Faces(f) = pick(p, v) {
                    faces.extend(f);
                }
            }
            faces.sort_unstable();
            Ok(Solution::Faces(faces))
        }
        Problem::Mis => {
            let mut faces = Vec::new();
            for (p, &v) in out.canonical.iter().zip(assignment) {
                if let Solution::Faces(f) = pick(p, v) {
                    faces.extend(f);
                }
            }
            for (c, clause) in out.instance.clauses.iter().enumerate() {
                let vars = clause.sorted_vars();
                // a leg is free when its literal is true
                let leg = (0..3)
                    .find(|&k| clause.is_positive_on(vars[k]) == assignment[vars[k] - 1])
                    .ok_or(ReductionError::ClauseUnsatisfiedByAssignment(c))?;
                faces.extend(mis::ring_selection(leg).iter().map(|&i| out.clause_faces[c][i]));
            }
            faces.sort_unstable();
            Ok(Solution::Faces(faces))
        }
    }
}
