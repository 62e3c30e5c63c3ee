//! Rectilinear planar 3SAT formulas and their leg layout.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::ReductionError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Top,
    Bottom,
}

impl Side {
    pub fn flipped(self) -> Self {
        match self {
            Self::Top => Self::Bottom,
            Self::Bottom => Self::Top,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Top => "top",
            Self::Bottom => "bottom",
        }
    }
}

/// Three signed, 1-based variable indices; negative means negated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub literals: [i64; 3],
    pub side: Side,
}

impl Clause {
    pub fn new(literals: [i64; 3], side: Side) -> Self {
        Self { literals, side }
    }

    fn vars(&self) -> [usize; 3] {
        self.literals.map(|l| l.unsigned_abs() as usize)
    }

    /// Variable indices in left-to-right order.
    pub fn sorted_vars(&self) -> [usize; 3] {
        let mut v = self.vars();
        v.sort_unstable();
        v
    }

    pub fn span(&self) -> (usize, usize) {
        let v = self.sorted_vars();
        (v[0], v[2])
    }

    pub fn middle(&self) -> usize {
        self.sorted_vars()[1]
    }

    /// Sign of the literal on variable `var`.
    pub fn is_positive_on(&self, var: usize) -> bool {
        self.literals
            .iter()
            .find(|l| l.unsigned_abs() as usize == var)
            .map(|&l| l > 0)
            .expect("variable occurs in clause")
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.literals.iter().any(|&l| {
            let v = assignment[l.unsigned_abs() as usize - 1];
            if l > 0 {
                v
            } else {
                !v
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rp3SatInstance {
    pub variables: usize,
    pub clauses: Vec<Clause>,
}

impl Rp3SatInstance {
    pub fn new(variables: usize, clauses: Vec<Clause>) -> Self {
        Self { variables, clauses }
    }

    pub fn n(&self) -> usize {
        self.variables
    }

    pub fn m(&self) -> usize {
        self.clauses.len()
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.satisfied_by(assignment))
    }

    /// Same formula with every clause moved to the other side.
    pub fn mirrored(&self) -> Self {
        Self {
            variables: self.variables,
            clauses: self
                .clauses
                .iter()
                .map(|c| Clause::new(c.literals, c.side.flipped()))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LayoutViolation {
    MalformedClause { clause: usize, reason: String },
    NonLaminar { first: usize, second: usize },
    CrossingLegs { outer: usize, inner: usize },
}

impl fmt::Display for LayoutViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MalformedClause { clause, reason } => write!(f, "clause {clause}: {reason}"),
            Self::NonLaminar { first, second } => {
                write!(f, "clauses {first} and {second} overlap without nesting")
            }
            Self::CrossingLegs { outer, inner } => {
                write!(f, "a leg of clause {outer} crosses clause {inner}")
            }
        }
    }
}

/// Where one literal of a clause attaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LegPlacement {
    pub var: usize,
    pub positive: bool,
    /// 1-based left-to-right rank among same-side clauses touching `var`.
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClausePlan {
    pub side: Side,
    /// Nesting depth on its side; innermost clauses have depth 1.
    pub depth: usize,
    /// Legs ordered by variable.
    pub legs: [LegPlacement; 3],
}

/// Laminar, crossing-free placement of every clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayoutPlan {
    pub n: usize,
    pub m: usize,
    pub clauses: Vec<ClausePlan>,
}

/// Checks clause shape, laminarity of same-side spans and that the legs can
/// be drawn without crossing. Returns every violation found.
pub fn validate_layout(inst: &Rp3SatInstance) -> Vec<LayoutViolation> {
    let mut out = Vec::new();
    let n = inst.variables;
    for (i, c) in inst.clauses.iter().enumerate() {
        let vars = c.vars();
        if c.literals.contains(&0) || vars.iter().any(|&v| v > n) {
            out.push(LayoutViolation::MalformedClause {
                clause: i,
                reason: format!("variable index outside 1..={n}"),
            });
        } else if vars[0] == vars[1] || vars[1] == vars[2] || vars[0] == vars[2] {
            out.push(LayoutViolation::MalformedClause {
                clause: i,
                reason: "variables must be distinct".into(),
            });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for (i, ci) in inst.clauses.iter().enumerate() {
        for (j, cj) in inst.clauses.iter().enumerate().skip(i + 1) {
            if ci.side != cj.side {
                continue;
            }
            let (a1, b1) = ci.span();
            let (a2, b2) = cj.span();
            if (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1) {
                out.push(LayoutViolation::NonLaminar { first: i, second: j });
                continue;
            }
            // the outer clause's middle leg must not drop through the inner one
            for (outer, inner) in [(i, j), (j, i)] {
                let (oa, ob) = inst.clauses[outer].span();
                let (ia, ib) = inst.clauses[inner].span();
                let nested = oa <= ia && ib <= ob;
                let om = inst.clauses[outer].middle();
                if nested && ia < om && om < ib {
                    out.push(LayoutViolation::CrossingLegs { outer, inner });
                    break;
                }
            }
        }
    }
    out
}

/// Validates and computes depths and per-variable leg ranks.
pub fn plan_layout(inst: &Rp3SatInstance) -> Result<LayoutPlan, ReductionError> {
    let violations = validate_layout(inst);
    if !violations.is_empty() {
        return Err(ReductionError::LayoutInvalid(violations));
    }
    let m = inst.m();
    let spans: Vec<(usize, usize)> = inst.clauses.iter().map(Clause::span).collect();

    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&c| spans[c].1 - spans[c].0);
    let mut depth = vec![1usize; m];
    for (pos, &c) in order.iter().enumerate() {
        for &d in &order[..pos] {
            let same_side = inst.clauses[c].side == inst.clauses[d].side;
            if same_side && spans[c].0 <= spans[d].0 && spans[d].1 <= spans[c].1 {
                depth[c] = depth[c].max(depth[d] + 1);
            }
        }
    }

    // rank[c][k]: left-to-right position of clause c's k-th leg on its variable
    let mut rank = vec![[0usize; 3]; m];
    for side in [Side::Top, Side::Bottom] {
        for var in 1..=inst.variables {
            let mut here: Vec<usize> = (0..m)
                .filter(|&c| inst.clauses[c].side == side && inst.clauses[c].sorted_vars().contains(&var))
                .collect();
            here.sort_by_key(|&c| {
                let (a, b) = spans[c];
                let size = b - a;
                if b == var {
                    (0, size as i64)
                } else if a == var {
                    (2, -(size as i64))
                } else {
                    (1, 0)
                }
            });
            for (pos, &c) in here.iter().enumerate() {
                let k = inst.clauses[c].sorted_vars().iter().position(|&v| v == var).unwrap();
                rank[c][k] = pos + 1;
            }
        }
    }

    let clauses = inst
        .clauses
        .iter()
        .enumerate()
        .map(|(c, clause)| {
            let vars = clause.sorted_vars();
            let legs = [0, 1, 2].map(|k| LegPlacement {
                var: vars[k],
                positive: clause.is_positive_on(vars[k]),
                rank: rank[c][k],
            });
            ClausePlan { side: clause.side, depth: depth[c], legs }
        })
        .collect();
    Ok(LayoutPlan { n: inst.variables, m, clauses })
}

/// Result of exhaustive satisfiability search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatResult {
    pub satisfiable: bool,
    pub witness_count: u64,
    /// Satisfying assignments (bit `i` is variable `i + 1`), at most
    /// [`MAX_STORED_WITNESSES`] of them.
    pub witnesses: Vec<u32>,
}

pub const MAX_SAT_VARIABLES: usize = 24;
pub const MAX_STORED_WITNESSES: usize = 4096;

pub fn assignment_from_mask(mask: u32, n: usize) -> Vec<bool> {
    (0..n).map(|i| mask >> i & 1 == 1).collect()
}

pub fn sat_brute_force(inst: &Rp3SatInstance) -> Result<SatResult, ReductionError> {
    let n = inst.variables;
    if n > MAX_SAT_VARIABLES {
        return Err(ReductionError::TooLarge(n));
    }
    let mut witnesses = Vec::new();
    let mut count = 0u64;
    for mask in 0..(1u32 << n) {
        let a = assignment_from_mask(mask, n);
        if inst.satisfied_by(&a) {
            count += 1;
            if witnesses.len() < MAX_STORED_WITNESSES {
                witnesses.push(mask);
            }
        }
    }
    Ok(SatResult { satisfiable: count > 0, witness_count: count, witnesses })
}

/// All eight sign patterns over three variables; unsatisfiable.
pub fn sign_cube(top: usize) -> Rp3SatInstance {
    let clauses = (0..8)
        .map(|mask: i64| {
            let lits = [1, 2, 3].map(|v| if mask >> (v - 1) & 1 == 1 { -v } else { v });
            Clause::new(lits, if (mask as usize) < top { Side::Top } else { Side::Bottom })
        })
        .collect();
    Rp3SatInstance::new(3, clauses)
}
