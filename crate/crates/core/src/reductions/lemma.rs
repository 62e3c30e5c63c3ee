//! Exhaustive check that a formula is satisfiable exactly when its compiled
//! instance admits a solution of the target size.

use serde::{Deserialize, Serialize};

use super::{
    assignment_from_mask, build_reduction, canonical_solution, mds_gadget, mis_gadget, sat_brute_force, stab_gadget,
    ReductionError, ReductionOutput, Rp3SatInstance,
};
use crate::solvers::{
    all_dominating_sets_of_size, exact_mds, exact_mis, exact_mis_faces, exact_stab, target_faces, verify_solution,
    FaceFilter, Problem, SearchBudget, Solution,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConverseStatus {
    Verified,
    Inconclusive,
    Refuted,
}

/// One exhaustive check on a gadget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetCheck {
    pub name: String,
    pub expected: usize,
    /// `None` when the search ran out of budget.
    pub found: Option<usize>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub problem: Problem,
    pub variant: FaceFilter,
    pub n: usize,
    pub m: usize,
    pub target: usize,
    pub satisfiable: bool,
    pub witness_count: u64,
    /// Canonical solutions are feasible at target size exactly for the
    /// satisfying assignments.
    pub forward_check: bool,
    pub feasible_assignments: u64,
    /// Some combination of per-gadget optima reaches the target.
    pub target_solution_exists: bool,
    pub converse_check: ConverseStatus,
    pub gadgets: Vec<GadgetCheck>,
}

fn size_of(sol: &Solution) -> usize {
    match sol {
        Solution::Points(p) => p.len(),
        Solution::Faces(f) => f.len(),
    }
}

fn check(name: &str, expected: usize, found: usize, optimal: bool) -> GadgetCheck {
    GadgetCheck {
        name: name.into(),
        expected,
        found: optimal.then_some(found),
        passed: optimal && found == expected,
    }
}

/// Exact optimum of an isolated variable gadget, plus uniqueness of the two
/// canonical optima for dominating sets.
fn gadget_checks(problem: Problem, variant: FaceFilter, m: usize, budget: &SearchBudget) -> Result<Vec<GadgetCheck>, ReductionError> {
    let mut out = Vec::new();
    match problem {
        Problem::Stab => {
            let g = stab_gadget(m, variant)?;
            let s = exact_stab(&g.subdivision, variant, budget);
            out.push(check("variable gadget optimum", 4 * m + 2, s.size(), s.optimal));
        }
        Problem::Mis => {
            let g = mis_gadget(m.max(1), variant)?;
            let s = exact_mis(&g.subdivision, variant, budget);
            out.push(check("variable gadget optimum", 4 * m - 1, s.size(), s.optimal));
        }
        Problem::Mds => {
            let g = mds_gadget(m, variant)?;
            let k = 2 * m + 2;
            let s = exact_mds(&g.subdivision, variant, budget);
            out.push(check("variable gadget optimum", k, s.size(), s.optimal));
            let targets = target_faces(&g.subdivision, variant);
            let mut expected: Vec<Vec<usize>> = g.canonical[0].face_sets().expect("face sets").to_vec();
            expected.sort();
            let all = all_dominating_sets_of_size(&g.subdivision, &targets, k, budget);
            out.push(GadgetCheck {
                name: "optimal sets are exactly the two canonical ones".into(),
                expected: 2,
                found: all.as_ref().map(Vec::len),
                passed: all.map(|mut a| {
                    a.sort();
                    a == expected
                }) == Some(true),
            });
        }
    }
    Ok(out)
}

/// Independence number of each clause ring: four on the whole ring, three
/// once the legs are blocked.
fn ring_checks(out: &ReductionOutput, budget: &SearchBudget) -> Vec<GadgetCheck> {
    let mut checks = Vec::new();
    for (c, faces) in out.clause_faces.iter().enumerate() {
        let ring = &faces[..9];
        let all = exact_mis_faces(&out.subdivision, ring, budget);
        checks.push(check(&format!("clause {c} ring"), 4, all.size(), all.optimal));
        let blocked = exact_mis_faces(&out.subdivision, &ring[3..], budget);
        checks.push(check(&format!("clause {c} ring without legs"), 3, blocked.size(), blocked.optimal));
    }
    checks
}

/// Faces of different variable gadgets never touch.
fn separation_check(out: &ReductionOutput) -> GadgetCheck {
    let mut owner = vec![None; out.subdivision.face_count()];
    for (i, faces) in out.variable_faces.iter().enumerate() {
        for &f in faces {
            owner[f] = Some(i);
        }
    }
    let touching = out
        .subdivision
        .face_adjacency()
        .into_iter()
        .filter(|&(a, b)| matches!((owner[a], owner[b]), (Some(x), Some(y)) if x != y))
        .count();
    GadgetCheck { name: "variable gadgets pairwise separated".into(), expected: 0, found: Some(touching), passed: touching == 0 }
}

pub fn verify_lemma(
    inst: &Rp3SatInstance,
    problem: Problem,
    variant: FaceFilter,
    budget: &SearchBudget,
) -> Result<LemmaReport, ReductionError> {
    let sat = sat_brute_force(inst)?;
    let out = build_reduction(inst, problem, variant)?;
    let n = inst.variables;

    let mut forward = true;
    let mut feasible_assignments = 0u64;
    for mask in 0..(1u32 << n) {
        let a = assignment_from_mask(mask, n);
        let feasible = match canonical_solution(&out, &a) {
            Ok(sol) => {
                let report = verify_solution(&out.subdivision, problem, &sol, variant)
                    .map_err(|e| ReductionError::SelfCheck(e.to_string()))?;
                report.feasible && size_of(&sol) == out.target
            }
            Err(ReductionError::ClauseUnsatisfiedByAssignment(_)) => false,
            Err(e) => return Err(e),
        };
        feasible_assignments += u64::from(feasible);
        forward &= feasible == inst.satisfied_by(&a);
    }
    let exists = feasible_assignments > 0;

    let mut gadgets = gadget_checks(problem, variant, out.m(), budget)?;
    if problem == Problem::Mis {
        gadgets.extend(ring_checks(&out, budget));
    }
    gadgets.push(separation_check(&out));

    let converse = if gadgets.iter().any(|g| g.found.is_none()) {
        ConverseStatus::Inconclusive
    } else if gadgets.iter().all(|g| g.passed) && exists == sat.satisfiable {
        ConverseStatus::Verified
    } else {
        ConverseStatus::Refuted
    };

    Ok(LemmaReport {
        problem,
        variant,
        n,
        m: out.m(),
        target: out.target,
        satisfiable: sat.satisfiable,
        witness_count: sat.witness_count,
        forward_check: forward,
        feasible_assignments,
        target_solution_exists: exists,
        converse_check: converse,
        gadgets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::{Clause, Side};

    #[test]
    fn single_clause_all_problems() {
        let inst = Rp3SatInstance::new(3, vec![Clause::new([1, -2, 3], Side::Top)]);
        for (problem, target) in [(Problem::Stab, 18), (Problem::Mis, 13), (Problem::Mds, 12)] {
            let r = verify_lemma(&inst, problem, FaceFilter::Rect, &SearchBudget::default()).unwrap();
            assert_eq!(r.target, target);
            assert!(r.satisfiable);
            assert!(r.forward_check, "{problem}");
            assert_eq!(r.converse_check, ConverseStatus::Verified, "{problem}: {:?}", r.gadgets);
            assert_eq!(r.feasible_assignments, 7);
        }
    }

    #[test]
    fn mirrored_report_is_identical() {
        let inst = Rp3SatInstance::new(3, vec![Clause::new([1, -2, 3], Side::Top)]);
        for problem in [Problem::Stab, Problem::Mis, Problem::Mds] {
            let b = SearchBudget::default();
            let a = verify_lemma(&inst, problem, FaceFilter::Rect, &b).unwrap();
            let m = verify_lemma(&inst.mirrored(), problem, FaceFilter::Rect, &b).unwrap();
            assert_eq!(a, m);
        }
    }
}
