//! Unweighted set cover: greedy and branch-and-bound.

use std::time::Instant;

use super::bits::Bits;
use super::SearchBudget;

/// Set-cover instance over elements `0..n`.
#[derive(Debug, Clone)]
pub(crate) struct CoverInstance {
    n: usize,
    sets: Vec<Bits>,
    by_elem: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub(crate) struct CoverResult {
    pub chosen: Vec<usize>,
    pub optimal: bool,
}

struct Tracker {
    nodes: u64,
    node_limit: u64,
    deadline: Instant,
    aborted: bool,
}

impl Tracker {
    fn new(budget: &SearchBudget) -> Self {
        Self {
            nodes: 0,
            node_limit: budget.node_limit,
            deadline: Instant::now() + budget.time_limit,
            aborted: false,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.node_limit || (self.nodes.is_multiple_of(1024) && Instant::now() > self.deadline) {
            self.aborted = true;
        }
        !self.aborted
    }
}

impl CoverInstance {
    pub fn new(n: usize, sets: Vec<Vec<usize>>) -> Self {
        let mut by_elem = vec![Vec::new(); n];
        for (s, elems) in sets.iter().enumerate() {
            for &e in elems {
                by_elem[e].push(s);
            }
        }
        let sets = sets
            .into_iter()
            .map(|elems| Bits::from_indices(n, elems))
            .collect();
        Self { n, sets, by_elem }
    }

    pub fn is_coverable(&self) -> bool {
        self.by_elem.iter().all(|c| !c.is_empty())
    }

    /// Max-new-coverage greedy; ties go to the lowest set index.
    pub fn greedy(&self) -> Vec<usize> {
        let mut covered = Bits::new(self.n);
        let mut chosen = Vec::new();
        while covered.count() < self.n {
            let mut best = None;
            let mut best_gain = 0;
            for (s, set) in self.sets.iter().enumerate() {
                let gain = set.count_minus(&covered);
                if gain > best_gain {
                    best_gain = gain;
                    best = Some(s);
                }
            }
            let Some(s) = best else { break };
            covered.union_with(&self.sets[s]);
            chosen.push(s);
        }
        chosen
    }

    /// Lower bound on sets still needed: uncovered elements that pairwise
    /// share no allowed set.
    fn packing_bound(&self, covered: &Bits, forbidden: &Bits, cap: usize) -> Option<usize> {
        let mut blocked = covered.clone();
        let mut count = 0;
        for e in 0..self.n {
            if blocked.contains(e) {
                continue;
            }
            let mut any = false;
            for &s in &self.by_elem[e] {
                if !forbidden.contains(s) {
                    blocked.union_with(&self.sets[s]);
                    any = true;
                }
            }
            if !any {
                return None;
            }
            count += 1;
            if count >= cap {
                break;
            }
        }
        Some(count)
    }

    fn branch_element(&self, covered: &Bits, forbidden: &Bits) -> Option<usize> {
        (0..self.n)
            .filter(|&e| !covered.contains(e))
            .min_by_key(|&e| self.by_elem[e].iter().filter(|&&s| !forbidden.contains(s)).count())
    }

    fn candidates(&self, e: usize, covered: &Bits, forbidden: &Bits) -> Vec<usize> {
        let mut c: Vec<usize> = self.by_elem[e]
            .iter()
            .copied()
            .filter(|&s| !forbidden.contains(s))
            .collect();
        c.sort_by_key(|&s| (std::cmp::Reverse(self.sets[s].count_minus(covered)), s));
        c
    }

    pub fn solve_exact(&self, budget: &SearchBudget) -> CoverResult {
        let mut best = self.greedy();
        if !self.is_coverable() {
            return CoverResult { chosen: best, optimal: false };
        }
        let mut tracker = Tracker::new(budget);
        let mut chosen = Vec::new();
        self.search(
            &Bits::new(self.n),
            &Bits::new(self.sets.len()),
            &mut chosen,
            &mut best,
            &mut tracker,
        );
        best.sort_unstable();
        CoverResult { chosen: best, optimal: !tracker.aborted }
    }

    fn search(
        &self,
        covered: &Bits,
        forbidden: &Bits,
        chosen: &mut Vec<usize>,
        best: &mut Vec<usize>,
        tracker: &mut Tracker,
    ) {
        if !tracker.tick() {
            return;
        }
        if covered.count() == self.n {
            if chosen.len() < best.len() {
                *best = chosen.clone();
            }
            return;
        }
        if chosen.len() + 1 >= best.len() {
            return;
        }
        let room = best.len() - chosen.len();
        match self.packing_bound(covered, forbidden, room) {
            Some(lb) if chosen.len() + lb < best.len() => {}
            _ => return,
        }
        let Some(e) = self.branch_element(covered, forbidden) else { return };
        let cands = self.candidates(e, covered, forbidden);
        let mut forbid = forbidden.clone();
        for s in cands {
            let mut next = covered.clone();
            next.union_with(&self.sets[s]);
            chosen.push(s);
            self.search(&next, &forbid, chosen, best, tracker);
            chosen.pop();
            if tracker.aborted {
                return;
            }
            forbid.insert(s);
        }
    }

    /// Every cover of exactly `size` sets, each sorted. `None` when the budget
    /// ran out first.
    pub fn all_covers_of_size(&self, size: usize, budget: &SearchBudget) -> Option<Vec<Vec<usize>>> {
        let mut tracker = Tracker::new(budget);
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        self.enumerate(
            &Bits::new(self.n),
            &Bits::new(self.sets.len()),
            size,
            &mut chosen,
            &mut out,
            &mut tracker,
        );
        if tracker.aborted {
            return None;
        }
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out.dedup();
        Some(out)
    }

    fn enumerate(
        &self,
        covered: &Bits,
        forbidden: &Bits,
        size: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        tracker: &mut Tracker,
    ) {
        if !tracker.tick() {
            return;
        }
        if covered.count() == self.n {
            if chosen.len() == size {
                out.push(chosen.clone());
            } else {
                // pad with every combination of unused sets
                self.pad(chosen, forbidden, size, 0, out);
            }
            return;
        }
        if chosen.len() >= size {
            return;
        }
        match self.packing_bound(covered, forbidden, size - chosen.len() + 1) {
            Some(lb) if chosen.len() + lb <= size => {}
            _ => return,
        }
        let Some(e) = self.branch_element(covered, forbidden) else { return };
        let cands = self.candidates(e, covered, forbidden);
        let mut forbid = forbidden.clone();
        for s in cands {
            let mut next = covered.clone();
            next.union_with(&self.sets[s]);
            chosen.push(s);
            self.enumerate(&next, &forbid, size, chosen, out, tracker);
            chosen.pop();
            if tracker.aborted {
                return;
            }
            forbid.insert(s);
        }
    }

    fn pad(&self, chosen: &mut Vec<usize>, forbidden: &Bits, size: usize, from: usize, out: &mut Vec<Vec<usize>>) {
        if chosen.len() == size {
            out.push(chosen.clone());
            return;
        }
        for s in from..self.sets.len() {
            if forbidden.contains(s) || chosen.contains(&s) {
                continue;
            }
            chosen.push(s);
            self.pad(chosen, forbidden, size, s + 1, out);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn exact_beats_greedy_on_classic_trap() {
        // greedy takes the big middle set first and then needs two more
        let inst = CoverInstance::new(
            6,
            vec![vec![0, 1, 2], vec![3, 4, 5], vec![1, 2, 3, 4]],
        );
        assert_eq!(inst.greedy().len(), 3);
        let r = inst.solve_exact(&budget());
        assert!(r.optimal);
        assert_eq!(r.chosen, vec![0, 1]);
    }

    #[test]
    fn enumerates_all_optimal_covers() {
        let inst = CoverInstance::new(4, vec![vec![0, 1], vec![2, 3], vec![1, 2], vec![0, 3]]);
        let all = inst.all_covers_of_size(2, &budget()).unwrap();
        assert_eq!(all, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn budget_exhaustion_reports_incumbent() {
        // odd cycle: the packing bound (15) cannot certify the optimum (16) at the root
        let sets: Vec<Vec<usize>> = (0..31).map(|i| vec![i, (i + 1) % 31]).collect();
        let inst = CoverInstance::new(31, sets);
        let r = inst.solve_exact(&SearchBudget::new(1, std::time::Duration::from_secs(10)));
        assert!(!r.optimal);
        assert!(!r.chosen.is_empty());
    }

    #[test]
    fn empty_universe() {
        let inst = CoverInstance::new(0, vec![]);
        let r = inst.solve_exact(&budget());
        assert!(r.optimal);
        assert!(r.chosen.is_empty());
    }
}
