//! Stabbing instances: a ring of 8m+4 unit rectangles around a long middle
//! rectangle per variable, and one rectangle per clause resting on three
//! raised leg triples.

use std::collections::HashMap;

use super::draft::{mirror, Draft, Owner};
use super::{plan_layout, CanonicalPair, ReductionError, ReductionOutput, Rp3SatInstance, Side};
use crate::geometry::Point;
use crate::solvers::{FaceFilter, Problem, Solution};

/// Gadget height; bottom-side structures are mirrored through `y = HEIGHT/2`.
const HEIGHT: i64 = 3;
const GAP: i64 = 2;

fn width(m: usize) -> i64 {
    4 * m as i64 + 5
}

/// `v2` line of variable `var` (1-based).
fn v2(var: usize, m: usize) -> i64 {
    (var as i64 - 1) * (width(m) + GAP) + 2
}

/// Bottom edge of a depth-`d` clause rectangle, in top-side coordinates.
fn clause_base(depth: usize) -> i64 {
    HEIGHT + 2 * depth as i64
}

/// Index `j0` of the first of the two raised faces for a slot: faces `j0`
/// and `j0 + 1` of the row, with the middle leg at `v2 + j0`.
fn raised_face(side: Side, positive: bool, slot: usize) -> usize {
    match (side, positive) {
        (Side::Top, true) | (Side::Bottom, false) => 4 * slot - 2,
        (Side::Top, false) | (Side::Bottom, true) => 4 * slot - 1,
    }
}

pub fn build_stab_reduction(inst: &Rp3SatInstance, variant: FaceFilter) -> Result<ReductionOutput, ReductionError> {
    build(inst, inst.m(), variant)
}

/// A lone variable gadget with `m` slots per side and nothing attached.
pub fn stab_gadget(m: usize, variant: FaceFilter) -> Result<ReductionOutput, ReductionError> {
    build(&Rp3SatInstance::new(1, Vec::new()), m, variant)
}

fn build(inst: &Rp3SatInstance, m: usize, variant: FaceFilter) -> Result<ReductionOutput, ReductionError> {
    let plan = plan_layout(inst)?;
    let n = inst.variables;
    let rows = 4 * m + 1;

    // (side, var, face index) -> clause base of the raised face
    let mut raised: HashMap<(Side, usize, usize), i64> = HashMap::new();
    let mut d = Draft::default();
    let mut clause_faces = Vec::new();
    for (c, cp) in plan.clauses.iter().enumerate() {
        let yb = clause_base(cp.depth);
        let mut xl = i64::MAX;
        let mut xr = i64::MIN;
        for leg in &cp.legs {
            let j0 = raised_face(cp.side, leg.positive, leg.rank);
            raised.insert((cp.side, leg.var, j0), yb);
            raised.insert((cp.side, leg.var, j0 + 1), yb);
            let mid = v2(leg.var, m) + j0 as i64;
            xl = xl.min(mid - 1);
            xr = xr.max(mid + 1);
        }
        let mut r = (xl, yb, xr, yb + 1);
        if cp.side == Side::Bottom {
            r = mirror(r, HEIGHT);
        }
        clause_faces.push(vec![d.rect(r, Owner::Clause(c), "r_alpha")]);
    }

    let mut gadget_handles = Vec::new();
    let mut canonical_points = Vec::new();
    for var in 1..=n {
        let own = Owner::Variable(var);
        let x2 = v2(var, m);
        let x1 = x2 - 2;
        let x3 = x2 + rows as i64;
        let x4 = x3 + 2;
        let mut hs = vec![
            d.rect((x1, 0, x2, HEIGHT), own, "R1"),
            d.rect((x3, 0, x4, HEIGHT), own, "R3"),
            d.rect((x2, 1, x3, 2), own, "R5"),
        ];
        for j in 1..=rows {
            let x = x2 + j as i64 - 1;
            let top = raised.get(&(Side::Top, var, j)).copied().unwrap_or(HEIGHT);
            hs.push(d.rect((x, 2, x + 1, top), own, format!("r{j}")));
        }
        for q in 1..=rows {
            let x = x2 + q as i64 - 1;
            let depth = raised.get(&(Side::Bottom, var, q)).copied().unwrap_or(HEIGHT);
            hs.push(d.rect(mirror((x, 2, x + 1, depth), HEIGHT), own, format!("r{}", rows + q)));
        }
        gadget_handles.push(hs);

        // junction points J_0..J_{8m+3} around the ring; a leg in the middle of
        // a raised triple carries its point up to the clause rectangle
        let top_y = |x: i64| {
            let j = (x - x2) as usize;
            match (raised.get(&(Side::Top, var, j)), raised.get(&(Side::Top, var, j + 1))) {
                (Some(&a), Some(&b)) if a == b => a,
                _ => HEIGHT,
            }
        };
        let bottom_y = |x: i64| {
            let j = (x - x2) as usize;
            match (raised.get(&(Side::Bottom, var, j)), raised.get(&(Side::Bottom, var, j + 1))) {
                (Some(&a), Some(&b)) if a == b => HEIGHT - a,
                _ => 0,
            }
        };
        let mut junctions = vec![Point::new(x2, 2)];
        for t in 1..=4 * m as i64 {
            junctions.push(Point::new(x2 + t, top_y(x2 + t)));
        }
        junctions.push(Point::new(x3, 2));
        junctions.push(Point::new(x3, 0));
        for s in 1..=4 * m as i64 {
            let x = x2 + 4 * m as i64 + 1 - s;
            junctions.push(Point::new(x, bottom_y(x)));
        }
        junctions.push(Point::new(x2, 0));
        let even: Vec<Point> = junctions.iter().step_by(2).copied().collect();
        let odd: Vec<Point> = junctions.iter().skip(1).step_by(2).copied().collect();
        canonical_points.push((even, odd));
    }

    let drawn = d.finish()?;
    let canonical = canonical_points
        .into_iter()
        .enumerate()
        .map(|(i, (even, odd))| CanonicalPair {
            variable: i + 1,
            true_label: "P1".into(),
            true_set: Solution::Points(even),
            false_label: "P2".into(),
            false_set: Solution::Points(odd),
        })
        .collect();
    Ok(ReductionOutput {
        problem: Problem::Stab,
        variant,
        instance: inst.clone(),
        segments: drawn.segments,
        target: n * (4 * m + 2),
        manifest: drawn.manifest,
        canonical,
        clause_faces: clause_faces.iter().map(|hs| hs.iter().map(|&h| drawn.faces[h]).collect()).collect(),
        variable_faces: gadget_handles.iter().map(|hs| hs.iter().map(|&h| drawn.faces[h]).collect()).collect(),
        subdivision: drawn.subdivision,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::{canonical_solution, Clause};
    use crate::solvers::{exact_stab, verify_solution, SearchBudget};

    fn single() -> Rp3SatInstance {
        Rp3SatInstance::new(3, vec![Clause::new([1, -2, 3], Side::Top)])
    }

    #[test]
    fn gadget_census() {
        for m in 1..=3 {
            let g = stab_gadget(m, FaceFilter::Rect).unwrap();
            let (h, v) = g.segments.count_by_orientation();
            assert_eq!((v, h), (8 * m + 4, 4), "m={m}");
            assert_eq!(g.subdivision.rectangular_faces().len(), 8 * m + 5);
        }
    }

    #[test]
    fn gadget_optimum_and_canonical_sets() {
        let g = stab_gadget(1, FaceFilter::Rect).unwrap();
        let e = exact_stab(&g.subdivision, FaceFilter::Rect, &SearchBudget::default());
        assert!(e.optimal);
        assert_eq!(e.size(), 6);
        for a in [true, false] {
            let sol = canonical_solution(&g, &[a]).unwrap();
            assert!(verify_solution(&g.subdivision, Problem::Stab, &sol, FaceFilter::Rect).unwrap().feasible);
        }
    }

    #[test]
    fn single_clause_instance() {
        let out = build_stab_reduction(&single(), FaceFilter::Rect).unwrap();
        assert_eq!(out.target, 18);
        let clause = out.clause_faces[0][0];
        let touching = out.subdivision.neighbors(clause).len();
        assert_eq!(touching, 6);
        let good = canonical_solution(&out, &[true, true, false]).unwrap();
        let r = verify_solution(&out.subdivision, Problem::Stab, &good, FaceFilter::Rect).unwrap();
        assert!(r.feasible);
        let bad = canonical_solution(&out, &[false, true, false]).unwrap();
        let r = verify_solution(&out.subdivision, Problem::Stab, &bad, FaceFilter::Rect).unwrap();
        assert!(!r.feasible);
    }

    #[test]
    fn bottom_clause_mirrors() {
        let out = build_stab_reduction(&single().mirrored(), FaceFilter::Rect).unwrap();
        let good = canonical_solution(&out, &[true, true, false]).unwrap();
        assert!(verify_solution(&out.subdivision, Problem::Stab, &good, FaceFilter::Rect).unwrap().feasible);
    }
}
