//! Independent-set instances: a ring of 8m−2 rectangles around a middle
//! rectangle per variable, and a ring of nine rectangles per clause whose
//! three legs rest on the variable rings.

use super::draft::{mirror, Draft, Owner};
use super::{plan_layout, CanonicalPair, ReductionError, ReductionOutput, Rp3SatInstance, Side};
use crate::geometry::FaceClass;
use crate::solvers::{FaceFilter, Problem, Solution};

const HEIGHT: i64 = 3;
const GAP: i64 = 2;
const CELL: i64 = 3;

/// Small rectangles per row.
fn row_len(m: usize) -> usize {
    4 * m - 2
}

fn width(m: usize) -> i64 {
    CELL * row_len(m) as i64 + 4
}

fn v2(var: usize, m: usize) -> i64 {
    (var as i64 - 1) * (width(m) + GAP) + 2
}

fn ring_base(depth: usize) -> i64 {
    6 * depth as i64 - 1
}

/// Ring positions of `r^1..r^9` going around the clause cycle
/// r1–r4–r5–r2–r6–r7–r3–r8–r9.
const CYCLE: [usize; 9] = [0, 3, 4, 1, 5, 6, 2, 7, 8];

/// Four pairwise non-adjacent ring faces including leg `leg` (0..3) and no
/// other leg; indices into the `r^1..r^9` list.
pub(crate) fn ring_selection(leg: usize) -> [usize; 4] {
    let p = 3 * leg;
    [p, p + 2, p + 4, p + 7].map(|q| CYCLE[q % 9])
}

/// Left edge of the small rectangle a leg attaches to, and the row index.
fn attachment(side: Side, positive: bool, rank: usize, var: usize, m: usize) -> (i64, usize) {
    let x2 = v2(var, m);
    match side {
        Side::Top => {
            let j = if positive { 4 * rank - 3 } else { 4 * rank - 2 };
            (x2 + CELL * (j as i64 - 1), j)
        }
        Side::Bottom => {
            // bottom row is numbered right to left
            let k = m + 1 - rank;
            let p = if positive { 4 * k - 2 } else { 4 * k - 3 };
            let x3 = x2 + CELL * row_len(m) as i64;
            (x3 - CELL * p as i64, p)
        }
    }
}

pub fn build_mis_reduction(inst: &Rp3SatInstance, variant: FaceFilter) -> Result<ReductionOutput, ReductionError> {
    if inst.m() == 0 {
        return Err(ReductionError::Unsupported("independent-set gadgets need at least one clause".into()));
    }
    build(inst, inst.m(), variant)
}

pub fn mis_gadget(m: usize, variant: FaceFilter) -> Result<ReductionOutput, ReductionError> {
    if m == 0 {
        return Err(ReductionError::Unsupported("independent-set gadgets need m >= 1".into()));
    }
    build(&Rp3SatInstance::new(1, Vec::new()), m, variant)
}

fn build(inst: &Rp3SatInstance, m: usize, variant: FaceFilter) -> Result<ReductionOutput, ReductionError> {
    let plan = plan_layout(inst)?;
    let n = inst.variables;
    let rl = row_len(m);
    let mut d = Draft::default();

    let mut clause_handles = Vec::new();
    for (c, cp) in plan.clauses.iter().enumerate() {
        let own = Owner::Clause(c);
        let yb = ring_base(cp.depth);
        let a = cp.legs.map(|leg| {
            let (x, _) = attachment(cp.side, leg.positive, leg.rank, leg.var, m);
            x + 1
        });
        let m12 = (a[0] + 1 + a[1]) / 2;
        let m23 = (a[1] + 1 + a[2]) / 2;
        let boxes = [
            (a[0], HEIGHT, a[0] + 1, yb + 3),
            (a[1], HEIGHT, a[1] + 1, yb + 2),
            (a[2], HEIGHT, a[2] + 1, yb + 3),
            (a[0] + 1, yb, m12, yb + 1),
            (m12, yb, a[1], yb + 1),
            (a[1] + 1, yb, m23, yb + 1),
            (m23, yb, a[2], yb + 1),
            (a[1], yb + 3, a[2] + 1, yb + 4),
            (a[0], yb + 3, a[1], yb + 4),
        ];
        let flip = |r| if cp.side == Side::Bottom { mirror(r, HEIGHT) } else { r };
        let mut hs: Vec<_> = boxes
            .iter()
            .enumerate()
            .map(|(i, &r)| d.rect(flip(r), own, format!("r_alpha^{}", i + 1)))
            .collect();
        let hole = flip((a[0] + 1, yb + 1, a[0] + 2, yb + 2));
        hs.push(d.region(hole.0, hole.1, FaceClass::Outer, own, "hole"));
        clause_handles.push(hs);
    }

    let mut gadget_handles = Vec::new();
    let mut sets = Vec::new();
    for var in 1..=n {
        let own = Owner::Variable(var);
        let x2 = v2(var, m);
        let x1 = x2 - 2;
        let x3 = x2 + CELL * rl as i64;
        let x4 = x3 + 2;
        let r1 = d.rect((x1, 0, x2, HEIGHT), own, "R1");
        let r3 = d.rect((x3, 0, x4, HEIGHT), own, "R3");
        let r5 = d.rect((x2, 1, x3, 2), own, "R5");
        let mut top = Vec::new();
        for j in 1..=rl {
            let x = x2 + CELL * (j as i64 - 1);
            top.push(d.rect((x, 2, x + CELL, HEIGHT), own, format!("r{j}")));
        }
        let mut bottom = Vec::new();
        for p in 1..=rl {
            let x = x3 - CELL * p as i64;
            bottom.push(d.rect((x, 0, x + CELL, 1), own, format!("r{}", rl + p)));
        }
        // S1 = {R3, odd top, even bottom}; S2 = {R1, even top, odd bottom}
        let pick = |row: &[usize], odd: bool| -> Vec<usize> {
            row.iter().enumerate().filter(|(i, _)| (i % 2 == 0) == odd).map(|(_, &h)| h).collect()
        };
        let mut s1 = vec![r3];
        s1.extend(pick(&top, true));
        s1.extend(pick(&bottom, false));
        let mut s2 = vec![r1];
        s2.extend(pick(&top, false));
        s2.extend(pick(&bottom, true));
        sets.push((s1, s2));
        let mut hs = vec![r1, r3, r5];
        hs.extend(top);
        hs.extend(bottom);
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
        .map(|(i, (s1, s2))| CanonicalPair {
            variable: i + 1,
            true_label: "S2".into(),
            true_set: Solution::Faces(faces(s2)),
            false_label: "S1".into(),
            false_set: Solution::Faces(faces(s1)),
        })
        .collect();
    Ok(ReductionOutput {
        problem: Problem::Mis,
        variant,
        instance: inst.clone(),
        segments: drawn.segments.clone(),
        target: n * (4 * m - 1) + 4 * inst.m(),
        manifest: drawn.manifest.clone(),
        canonical,
        clause_faces: clause_handles.iter().map(|hs| hs.iter().map(|&h| drawn.faces[h]).collect()).collect(),
        variable_faces: gadget_handles.iter().map(|hs| hs.iter().map(|&h| drawn.faces[h]).collect()).collect(),
        subdivision: drawn.subdivision,
    })
}
