//! Feasibility checks recomputed from face cells, independent of the
//! vertex/adjacency tables the solvers use.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{target_faces, FaceFilter, Problem, SolverError};
use crate::geometry::{FaceId, Point, Subdivision};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Solution {
    Points(Vec<Point>),
    Faces(Vec<FaceId>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    Unstabbed { face: FaceId },
    AdjacentPair { a: FaceId, b: FaceId },
    Undominated { face: FaceId },
    NotATarget { face: FaceId },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub feasible: bool,
    pub violations: Vec<Violation>,
}

/// Grid corners touched by the closure of face `f`.
fn corners(sub: &Subdivision, f: FaceId) -> HashSet<(u32, u32)> {
    sub.face(f)
        .cells
        .iter()
        .flat_map(|&(c, r)| [(c, r), (c + 1, r), (c, r + 1), (c + 1, r + 1)])
        .collect()
}

pub fn verify_solution(
    sub: &Subdivision,
    problem: Problem,
    solution: &Solution,
    filter: FaceFilter,
) -> Result<VerificationReport, SolverError> {
    let targets = target_faces(sub, filter);
    let mut violations = Vec::new();
    match (problem, solution) {
        (Problem::Stab, Solution::Points(points)) => {
            let mut stabbed = HashSet::new();
            let mut seen = HashSet::new();
            for &p in points {
                if !seen.insert(p) {
                    return Err(SolverError::MalformedSolution(format!("duplicate point {p}")));
                }
                if sub.vertex_id(p).is_none() {
                    return Err(SolverError::MalformedSolution(format!("{p} is not a vertex")));
                }
                let c = sub.xs().binary_search(&p.x).expect("vertex x") as u32;
                let r = sub.ys().binary_search(&p.y).expect("vertex y") as u32;
                for f in 0..sub.face_count() {
                    let (c0, r0, c1, r1) = sub.face(f).cell_bounds;
                    if c + 1 < c0 || c > c1 + 1 || r + 1 < r0 || r > r1 + 1 {
                        continue;
                    }
                    if sub.face(f).cells.iter().any(|&(fc, fr)| {
                        (fc == c || fc + 1 == c) && (fr == r || fr + 1 == r)
                    }) {
                        stabbed.insert(f);
                    }
                }
            }
            for &f in &targets {
                if !stabbed.contains(&f) {
                    violations.push(Violation::Unstabbed { face: f });
                }
            }
        }
        (Problem::Mis, Solution::Faces(faces)) => {
            check_faces(sub, faces)?;
            let target_set: HashSet<FaceId> = targets.iter().copied().collect();
            let mut owner: HashMap<(u32, u32), Vec<FaceId>> = HashMap::new();
            for &f in faces {
                if !target_set.contains(&f) {
                    violations.push(Violation::NotATarget { face: f });
                }
                for corner in corners(sub, f) {
                    owner.entry(corner).or_default().push(f);
                }
            }
            let mut pairs = HashSet::new();
            for fs in owner.values() {
                for (i, &a) in fs.iter().enumerate() {
                    for &b in &fs[i + 1..] {
                        pairs.insert((a.min(b), a.max(b)));
                    }
                }
            }
            let mut pairs: Vec<_> = pairs.into_iter().collect();
            pairs.sort_unstable();
            violations.extend(pairs.into_iter().map(|(a, b)| Violation::AdjacentPair { a, b }));
        }
        (Problem::Mds, Solution::Faces(faces)) => {
            check_faces(sub, faces)?;
            let target_set: HashSet<FaceId> = targets.iter().copied().collect();
            let mut touched = HashSet::new();
            for &f in faces {
                if !target_set.contains(&f) {
                    violations.push(Violation::NotATarget { face: f });
                }
                touched.extend(corners(sub, f));
            }
            let chosen: HashSet<FaceId> = faces.iter().copied().collect();
            for &g in &targets {
                if chosen.contains(&g) {
                    continue;
                }
                if !corners(sub, g).iter().any(|c| touched.contains(c)) {
                    violations.push(Violation::Undominated { face: g });
                }
            }
        }
        (p, _) => {
            return Err(SolverError::MalformedSolution(format!(
                "solution kind does not match problem {p}"
            )))
        }
    }
    Ok(VerificationReport { feasible: violations.is_empty(), violations })
}

fn check_faces(sub: &Subdivision, faces: &[FaceId]) -> Result<(), SolverError> {
    let mut seen = HashSet::new();
    for &f in faces {
        if f >= sub.face_count() {
            return Err(SolverError::MalformedSolution(format!("face {f} out of range")));
        }
        if !seen.insert(f) {
            return Err(SolverError::MalformedSolution(format!("duplicate face {f}")));
        }
    }
    Ok(())
}
