//! Dominating-set instances: per variable a ring of 6m+6 rectangles around a
//! middle region, with 2m+2 small rectangles hanging into the middle at
//! every third junction; one rectangle per clause on three raised faces.

use super::draft::{mirror, Draft, Owner};
use super::{plan_layout, CanonicalPair, ReductionError, ReductionOutput, Rp3SatInstance, Side};
use crate::geometry::FaceClass;
use crate::solvers::{FaceFilter, Problem, Solution};

const HEIGHT: i64 = 8;
const GAP: i64 = 3;
const CELL: i64 = 3;

fn row_len(m: usize) -> usize {
    3 * m + 1
}

fn width(m: usize) -> i64 {
    CELL * row_len(m) as i64 + 4
}

fn v2(var: usize, m: usize) -> i64 {
    (var as i64 - 1) * (width(m) + GAP) + 2
}

fn clause_base(depth: usize) -> i64 {
    HEIGHT + 1 + 2 * depth as i64
}

/// Raised row index for a slot, and the left edge of that face.
fn raised_face(side: Side, positive: bool, rank: usize, var: usize, m: usize) -> (usize, i64) {
    let x2 = v2(var, m);
    match side {
        Side::Top => {
            let j = if positive { 3 * rank - 1 } else { 3 * rank - 2 };
            (j, x2 + CELL * (j as i64 - 1))
        }
        Side::Bottom => {
            let k = m + 1 - rank;
            let p = if positive { 3 * k - 1 } else { 3 * k - 2 };
            let x3 = x2 + CELL * row_len(m) as i64;
            (p, x3 - CELL * p as i64)
        }
    }
}

pub fn build_mds_reduction(inst: &Rp3SatInstance, variant: FaceFilter) -> Result<ReductionOutput, ReductionError> {
    build(inst, inst.m(), variant)
}

pub fn mds_gadget(m: usize, variant: FaceFilter) -> Result<ReductionOutput, ReductionError> {
    build(&Rp3SatInstance::new(1, Vec::new()), m, variant)
}

fn build(inst: &Rp3SatInstance, m: usize, variant: FaceFilter) -> Result<ReductionOutput, ReductionError> {
    let plan = plan_layout(inst)?;
    let n = inst.variables;
    let rl = row_len(m);
    let mi = m as i64;
    let mut d = Draft::default();

    // (side, var, row index) -> clause base
    let mut raised = std::collections::HashMap::new();
    let mut clause_handles = Vec::new();
    for (c, cp) in plan.clauses.iter().enumerate() {
        let yb = clause_base(cp.depth);
        let mut xl = i64::MAX;
        let mut xr = i64::MIN;
        for leg in &cp.legs {
            let (j, x) = raised_face(cp.side, leg.positive, leg.rank, leg.var, m);
            raised.insert((cp.side, leg.var, j), yb);
            xl = xl.min(x);
            xr = xr.max(x + CELL);
        }
        let mut r = (xl, yb, xr, yb + 1);
        if cp.side == Side::Bottom {
            r = mirror(r, HEIGHT);
        }
        clause_handles.push(vec![d.rect(r, Owner::Clause(c), "r_alpha")]);
    }

    let mut gadget_handles = Vec::new();
    let mut sets = Vec::new();
    for var in 1..=n {
        let own = Owner::Variable(var);
        let x2 = v2(var, m);
        let x1 = x2 - 2;
        let x3 = x2 + CELL * rl as i64;
        let x4 = x3 + 2;
        let mut top = Vec::new();
        for j in 1..=rl {
            let x = x2 + CELL * (j as i64 - 1);
            let y = raised.get(&(Side::Top, var, j)).copied().unwrap_or(HEIGHT);
            top.push(d.rect((x, 6, x + CELL, y), own, format!("r{j}")));
        }
        let r3_upper = d.rect((x3, 4, x4, HEIGHT), own, format!("r{}", rl + 1));
        let r3_lower = d.rect((x3, 0, x4, 4), own, format!("r{}", rl + 2));
        let mut bottom = Vec::new();
        for p in 1..=rl {
            let x = x3 - CELL * p as i64;
            let y = raised.get(&(Side::Bottom, var, p)).copied().unwrap_or(HEIGHT);
            bottom.push(d.rect(mirror((x, 6, x + CELL, y), HEIGHT), own, format!("r{}", rl + 2 + p)));
        }
        let r1_lower = d.rect((x1, 0, x2, 4), own, format!("r{}", 2 * rl + 3));
        let r1_upper = d.rect((x1, 4, x2, HEIGHT), own, format!("r{}", 2 * rl + 4));
        let mut hs = vec![r1_upper];
        hs.extend(top.iter().copied());
        hs.extend([r3_upper, r3_lower]);
        hs.extend(bottom.iter().copied());
        hs.push(r1_lower);
        // `hs` now runs around the ring; junction t sits between ring
        // positions 3t+1 and 3t+2
        let d1: Vec<usize> = (0..2 * m + 2).map(|t| hs[3 * t + 1]).collect();
        let d2: Vec<usize> = (0..2 * m + 2).map(|t| hs[3 * t + 2]).collect();
        sets.push((d1, d2));

        let mut s = Vec::new();
        for i in 1..=mi {
            let x = x2 + CELL * (3 * i - 2);
            s.push((x - 1, 5, x + 1, 6));
        }
        s.push((x3 - 1, 5, x3, 6));
        for q in 1..=mi {
            let x = x3 - CELL * (3 * q - 2);
            s.push((x - 1, 2, x + 1, 3));
        }
        s.push((x2, 2, x2 + 1, 3));
        for (i, r) in s.into_iter().enumerate() {
            hs.push(d.rect(r, own, format!("s{}", i + 1)));
        }

        if variant == FaceFilter::All {
            let mut b = Vec::new();
            let one_sided = |side: Side, left: usize, right: usize, x: i64, y0: i64| {
                let l = raised.contains_key(&(side, var, left));
                let r = raised.contains_key(&(side, var, right));
                match (l, r) {
                    (true, _) => (x, y0, x + 1, y0 + 1),
                    (_, true) => (x - 1, y0, x, y0 + 1),
                    _ => (x - 1, y0, x + 1, y0 + 1),
                }
            };
            for i in 1..=m {
                let x = x2 + CELL * (3 * i as i64 - 2);
                b.push(one_sided(Side::Top, 3 * i - 2, 3 * i - 1, x, HEIGHT));
            }
            b.push((x3 - 1, HEIGHT, x3 + 1, HEIGHT + 1));
            for q in 1..=m {
                // face 3q-1 lies left of the junction, 3q-2 right of it
                let x = x3 - CELL * (3 * q as i64 - 2);
                b.push(one_sided(Side::Bottom, 3 * q - 1, 3 * q - 2, x, -1));
            }
            b.push((x2 - 1, -1, x2 + 1, 0));
            for (i, r) in b.into_iter().enumerate() {
                hs.push(d.rect(r, own, format!("b{}", i + 1)));
            }
        }
        hs.push(d.region(x2, 4, FaceClass::Variable, own, "R5"));
        gadget_handles.push(hs);
    }

    let drawn = d.finish()?;
    let faces = |hs: &[usize]| -> Vec<usize> {
        let mut f: Vec<_> = hs.iter().map(|&h| drawn.faces[h]).collect();
        f.sort_unstable();
        f
    };
    let canonical = sets
        .iter()
        .enumerate()
        .map(|(i, (d1, d2))| CanonicalPair {
            variable: i + 1,
            true_label: "D2".into(),
            true_set: Solution::Faces(faces(d2)),
            false_label: "D1".into(),
            false_set: Solution::Faces(faces(d1)),
        })
        .collect();
    Ok(ReductionOutput {
        problem: Problem::Mds,
        variant,
        instance: inst.clone(),
        segments: drawn.segments.clone(),
        target: n * (2 * m + 2),
        manifest: drawn.manifest.clone(),
        canonical,
        clause_faces: clause_handles.iter().map(|hs| faces(hs)).collect(),
        variable_faces: gadget_handles.iter().map(|hs| faces(hs)).collect(),
        subdivision: drawn.subdivision,
    })
}
