//! Exact and approximate solvers for stabbing, independent-set and
//! dominating-set problems over the bounded faces of a subdivision.

mod bits;
mod cover;
mod independent;
mod local_search;
mod verify;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{FaceId, Point, Subdivision};
use cover::CoverInstance;
use independent::Graph;

pub use local_search::{local_search_stab, local_search_stab_with_stats, LocalSearchConfig, LocalSearchStats};
pub use verify::{verify_solution, Solution, VerificationReport, Violation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("malformed solution: {0}")]
    MalformedSolution(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

/// Which bounded faces a problem ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceFilter {
    #[default]
    All,
    Rect,
}

impl FaceFilter {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::All => "all",
            Self::Rect => "rect",
        }
    }
}

impl fmt::Display for FaceFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FaceFilter {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Self::All),
            "rect" => Ok(Self::Rect),
            other => Err(format!("unknown face filter `{other}` (expected all|rect)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Stab,
    Mis,
    Mds,
}

impl Problem {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Stab => "stab",
            Self::Mis => "mis",
            Self::Mds => "mds",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Problem {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "stab" => Ok(Self::Stab),
            "mis" => Ok(Self::Mis),
            "mds" => Ok(Self::Mds),
            other => Err(format!("unknown problem `{other}` (expected stab|mis|mds)")),
        }
    }
}

/// Provenance tag carried by every solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Greedy,
    Exact,
    LocalSearch,
    Canonical,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSolution {
    pub points: Vec<Point>,
    pub optimal: bool,
    pub algorithm: Algorithm,
}

impl PointSolution {
    pub fn size(&self) -> usize {
        self.points.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSolution {
    pub faces: Vec<FaceId>,
    pub optimal: bool,
    pub algorithm: Algorithm,
}

impl FaceSolution {
    pub fn size(&self) -> usize {
        self.faces.len()
    }
}

/// Limits for the branch-and-bound searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl SearchBudget {
    pub fn new(node_limit: u64, time_limit: Duration) -> Self {
        assert!(node_limit > 0 && !time_limit.is_zero(), "budget must be positive");
        Self { node_limit, time_limit }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::new(5_000_000, Duration::from_secs(30))
    }
}

/// Face ids selected by `filter`, ascending.
pub fn target_faces(sub: &Subdivision, filter: FaceFilter) -> Vec<FaceId> {
    match filter {
        FaceFilter::All => (0..sub.face_count()).collect(),
        FaceFilter::Rect => sub.rectangular_faces(),
    }
}

/// Position of each face within `targets`, if present.
fn target_index(sub: &Subdivision, targets: &[FaceId]) -> Vec<Option<usize>> {
    let mut idx = vec![None; sub.face_count()];
    for (i, &f) in targets.iter().enumerate() {
        idx[f] = Some(i);
    }
    idx
}

/// Stabbing as set cover: one set per vertex, listing the targets it stabs.
fn stab_cover(sub: &Subdivision, targets: &[FaceId]) -> CoverInstance {
    let idx = target_index(sub, targets);
    let sets = (0..sub.vertices().len())
        .map(|v| sub.vertex_faces(v).iter().filter_map(|&f| idx[f]).collect())
        .collect();
    CoverInstance::new(targets.len(), sets)
}

/// Domination as set cover: one set per target face, its closed neighbourhood.
fn domination_cover(sub: &Subdivision, targets: &[FaceId]) -> CoverInstance {
    let idx = target_index(sub, targets);
    let sets = targets
        .iter()
        .enumerate()
        .map(|(i, &f)| {
            std::iter::once(i)
                .chain(sub.neighbors(f).iter().filter_map(|&g| idx[g]))
                .collect()
        })
        .collect();
    CoverInstance::new(targets.len(), sets)
}

fn target_graph(sub: &Subdivision, targets: &[FaceId]) -> Graph {
    let idx = target_index(sub, targets);
    let edges = targets.iter().enumerate().flat_map(|(i, &f)| {
        let idx = &idx;
        sub.neighbors(f).iter().filter_map(move |&g| idx[g].map(|j| (i, j)))
    });
    Graph::new(targets.len(), edges)
}

fn points_of(sub: &Subdivision, mut vertices: Vec<usize>) -> Vec<Point> {
    vertices.sort_unstable();
    vertices.into_iter().map(|v| sub.vertices()[v]).collect()
}

fn faces_of(targets: &[FaceId], chosen: Vec<usize>) -> Vec<FaceId> {
    let mut faces: Vec<FaceId> = chosen.into_iter().map(|i| targets[i]).collect();
    faces.sort_unstable();
    faces
}

/// Greedy set cover over vertex candidates; within a factor H(4) = 25/12 of
/// optimal since a vertex stabs at most four faces.
pub fn greedy_stab(sub: &Subdivision, filter: FaceFilter) -> PointSolution {
    let targets = target_faces(sub, filter);
    let chosen = stab_cover(sub, &targets).greedy();
    PointSolution {
        points: points_of(sub, chosen),
        optimal: targets.is_empty(),
        algorithm: Algorithm::Greedy,
    }
}

pub fn exact_stab(sub: &Subdivision, filter: FaceFilter, budget: &SearchBudget) -> PointSolution {
    let targets = target_faces(sub, filter);
    let r = stab_cover(sub, &targets).solve_exact(budget);
    PointSolution {
        points: points_of(sub, r.chosen),
        optimal: r.optimal,
        algorithm: Algorithm::Exact,
    }
}

pub fn greedy_mis(sub: &Subdivision, filter: FaceFilter) -> FaceSolution {
    let targets = target_faces(sub, filter);
    let chosen = target_graph(sub, &targets).greedy_min_degree();
    FaceSolution {
        faces: faces_of(&targets, chosen),
        optimal: targets.is_empty(),
        algorithm: Algorithm::Greedy,
    }
}

pub fn exact_mis(sub: &Subdivision, filter: FaceFilter, budget: &SearchBudget) -> FaceSolution {
    let targets = target_faces(sub, filter);
    let r = target_graph(sub, &targets).max_independent(budget);
    FaceSolution {
        faces: faces_of(&targets, r.chosen),
        optimal: r.optimal,
        algorithm: Algorithm::Exact,
    }
}

pub fn greedy_mds(sub: &Subdivision, filter: FaceFilter) -> FaceSolution {
    let targets = target_faces(sub, filter);
    let chosen = domination_cover(sub, &targets).greedy();
    FaceSolution {
        faces: faces_of(&targets, chosen),
        optimal: targets.is_empty(),
        algorithm: Algorithm::Greedy,
    }
}

pub fn exact_mds(sub: &Subdivision, filter: FaceFilter, budget: &SearchBudget) -> FaceSolution {
    let targets = target_faces(sub, filter);
    let r = domination_cover(sub, &targets).solve_exact(budget);
    FaceSolution {
        faces: faces_of(&targets, r.chosen),
        optimal: r.optimal,
        algorithm: Algorithm::Exact,
    }
}

/// Every dominating set of exactly `size` faces drawn from `faces`, where only
/// `faces` need to be dominated. `None` when the budget runs out.
pub fn all_dominating_sets_of_size(
    sub: &Subdivision,
    faces: &[FaceId],
    size: usize,
    budget: &SearchBudget,
) -> Option<Vec<Vec<FaceId>>> {
    let all = domination_cover(sub, faces).all_covers_of_size(size, budget)?;
    Some(all.into_iter().map(|c| faces_of(faces, c)).collect())
}

/// Minimum stabbing restricted to an explicit face list.
pub fn exact_stab_faces(sub: &Subdivision, faces: &[FaceId], budget: &SearchBudget) -> PointSolution {
    let r = stab_cover(sub, faces).solve_exact(budget);
    PointSolution {
        points: points_of(sub, r.chosen),
        optimal: r.optimal,
        algorithm: Algorithm::Exact,
    }
}

/// Maximum independent set restricted to an explicit face list.
pub fn exact_mis_faces(sub: &Subdivision, faces: &[FaceId], budget: &SearchBudget) -> FaceSolution {
    let r = target_graph(sub, faces).max_independent(budget);
    FaceSolution {
        faces: faces_of(faces, r.chosen),
        optimal: r.optimal,
        algorithm: Algorithm::Exact,
    }
}

/// Minimum dominating set restricted to an explicit face list.
pub fn exact_mds_faces(sub: &Subdivision, faces: &[FaceId], budget: &SearchBudget) -> FaceSolution {
    let r = domination_cover(sub, faces).solve_exact(budget);
    FaceSolution {
        faces: faces_of(faces, r.chosen),
        optimal: r.optimal,
        algorithm: Algorithm::Exact,
    }
}
