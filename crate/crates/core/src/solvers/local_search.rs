//! k-level local search for stabbing.
//!
//! Starts from the full vertex set and repeatedly swaps a subset `X'` of at
//! most `k` chosen points for a strictly smaller set `Y` of vertices while the
//! result still stabs every target face. Subsets are tried by size, then in
//! lexicographic order of vertex index; the first improving swap is applied.

use super::bits::Bits;
use super::{target_faces, target_index, Algorithm, FaceFilter, PointSolution, SolverError};
use crate::geometry::Subdivision;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalSearchConfig {
    pub k: usize,
    pub iteration_cap: usize,
    pub filter: FaceFilter,
}

impl LocalSearchConfig {
    pub fn new(k: usize, filter: FaceFilter) -> Result<Self, SolverError> {
        if k == 0 {
            return Err(SolverError::InvalidConfig("k must be at least 1".into()));
        }
        Ok(Self { k, iteration_cap: 100_000, filter })
    }

    /// No limit on swap size; the local optimum is then a global one.
    pub fn unbounded(filter: FaceFilter) -> Self {
        Self { k: usize::MAX, iteration_cap: 100_000, filter }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LocalSearchStats {
    pub improvements: usize,
    pub capped: bool,
}

pub fn local_search_stab(sub: &Subdivision, cfg: &LocalSearchConfig) -> PointSolution {
    local_search_stab_with_stats(sub, cfg).0
}

struct Instance {
    n: usize,
    sets: Vec<Bits>,
    by_elem: Vec<Vec<usize>>,
}

impl Instance {
    /// Some cover of `need` using at most `limit` sets.
    fn cover_within(&self, need: &Bits, limit: usize) -> Option<Vec<usize>> {
        if need.is_empty() {
            return Some(Vec::new());
        }
        if limit == 0 {
            return None;
        }
        // elements pairwise sharing no candidate each need their own set
        let mut blocked = Bits::new(self.n);
        let mut packing = 0;
        for e in need.iter() {
            if blocked.contains(e) {
                continue;
            }
            packing += 1;
            if packing > limit || self.by_elem[e].is_empty() {
                return None;
            }
            for &s in &self.by_elem[e] {
                blocked.union_with(&self.sets[s]);
            }
        }
        let e = need.iter().min_by_key(|&e| self.by_elem[e].len())?;
        for &s in &self.by_elem[e] {
            let mut rest = need.clone();
            rest.difference_with(&self.sets[s]);
            if let Some(mut y) = self.cover_within(&rest, limit - 1) {
                y.push(s);
                return Some(y);
            }
        }
        None
    }
}

pub fn local_search_stab_with_stats(sub: &Subdivision, cfg: &LocalSearchConfig) -> (PointSolution, LocalSearchStats) {
    let targets = target_faces(sub, cfg.filter);
    let idx = target_index(sub, &targets);
    let nv = sub.vertices().len();
    let elems: Vec<Vec<usize>> = (0..nv)
        .map(|v| sub.vertex_faces(v).iter().filter_map(|&f| idx[f]).collect())
        .collect();
    let mut by_elem = vec![Vec::new(); targets.len()];
    for (v, es) in elems.iter().enumerate() {
        for &e in es {
            by_elem[e].push(v);
        }
    }
    let inst = Instance {
        n: targets.len(),
        sets: elems.iter().map(|es| Bits::from_indices(targets.len(), es.iter().copied())).collect(),
        by_elem,
    };

    let mut chosen: Vec<usize> = (0..nv).collect();
    let mut cover_count = vec![0usize; targets.len()];
    for es in &elems {
        for &e in es {
            cover_count[e] += 1;
        }
    }

    let mut stats = LocalSearchStats::default();
    'outer: loop {
        let max_size = cfg.k.min(chosen.len());
        for size in 1..=max_size {
            let mut comb: Vec<usize> = (0..size).collect();
            loop {
                let removed: Vec<usize> = comb.iter().map(|&i| chosen[i]).collect();
                // targets stabbed only by the removed points
                let mut local = std::collections::HashMap::new();
                for &v in &removed {
                    for &e in &elems[v] {
                        *local.entry(e).or_insert(0usize) += 1;
                    }
                }
                let need = Bits::from_indices(
                    inst.n,
                    local.iter().filter(|(&e, &c)| cover_count[e] == c).map(|(&e, _)| e),
                );
                if let Some(added) = inst.cover_within(&need, size - 1) {
                    for &v in &removed {
                        for &e in &elems[v] {
                            cover_count[e] -= 1;
                        }
                    }
                    chosen.retain(|v| !removed.contains(v));
                    for v in added {
                        if !chosen.contains(&v) {
                            chosen.push(v);
                            for &e in &elems[v] {
                                cover_count[e] += 1;
                            }
                        }
                    }
                    chosen.sort_unstable();
                    stats.improvements += 1;
                    if stats.improvements >= cfg.iteration_cap {
                        stats.capped = true;
                        break 'outer;
                    }
                    continue 'outer;
                }
                if !next_combination(&mut comb, chosen.len()) {
                    break;
                }
            }
        }
        break;
    }

    let optimal = !stats.capped && cfg.k >= chosen.len();
    let points = chosen.iter().map(|&v| sub.vertices()[v]).collect();
    (
        PointSolution { points, optimal, algorithm: Algorithm::LocalSearch },
        stats,
    )
}

/// Advances `comb` to the next `comb.len()`-subset of `0..n` in
/// lexicographic order.
fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
