//! Maximum independent set on small graphs.

use std::time::Instant;

use super::bits::Bits;
use super::SearchBudget;

pub(crate) struct Graph {
    adj: Vec<Bits>,
}

pub(crate) struct IndependentResult {
    pub chosen: Vec<usize>,
    pub optimal: bool,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Bits::new(n); n];
        for (a, b) in edges {
            if a != b {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        Self { adj }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    /// Repeatedly takes a minimum-degree vertex of what is left.
    pub fn greedy_min_degree(&self) -> Vec<usize> {
        let mut alive = Bits::full(self.len());
        let mut chosen = Vec::new();
        while let Some(v) = alive.iter().min_by_key(|&v| (self.adj[v].intersection_count(&alive), v)) {
            chosen.push(v);
            alive.remove(v);
            alive.difference_with(&self.adj[v]);
        }
        chosen.sort_unstable();
        chosen
    }

    /// Number of cliques in a greedy clique partition of `p`; an upper bound
    /// on the independence number of `p`.
    fn clique_cover_bound(&self, p: &Bits) -> usize {
        let mut rest = p.clone();
        let mut count = 0;
        while let Some(v) = rest.first() {
            rest.remove(v);
            let mut cand = rest.clone();
            cand.intersect_with(&self.adj[v]);
            while let Some(u) = cand.first() {
                rest.remove(u);
                cand.remove(u);
                cand.intersect_with(&self.adj[u]);
            }
            count += 1;
        }
        count
    }

    pub fn max_independent(&self, budget: &SearchBudget) -> IndependentResult {
        let mut best = self.greedy_min_degree();
        let mut state = Search {
            graph: self,
            nodes: 0,
            node_limit: budget.node_limit,
            deadline: Instant::now() + budget.time_limit,
            aborted: false,
        };
        let mut cur = Vec::new();
        state.run(Bits::full(self.len()), &mut cur, &mut best);
        best.sort_unstable();
        IndependentResult { chosen: best, optimal: !state.aborted }
    }
}

struct Search<'g> {
    graph: &'g Graph,
    nodes: u64,
    node_limit: u64,
    deadline: Instant,
    aborted: bool,
}

impl Search<'_> {
    fn run(&mut self, mut p: Bits, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
        self.nodes += 1;
        if self.nodes > self.node_limit || (self.nodes.is_multiple_of(1024) && Instant::now() > self.deadline) {
            self.aborted = true;
        }
        if self.aborted {
            return;
        }
        let depth = cur.len();
        // vertices of degree <= 1 are always safe to take
        loop {
            let forced = p
                .iter()
                .find(|&v| self.graph.adj[v].intersection_count(&p) <= 1);
            let Some(v) = forced else { break };
            cur.push(v);
            p.remove(v);
            p.difference_with(&self.graph.adj[v]);
        }
        if p.is_empty() {
            if cur.len() > best.len() {
                *best = cur.clone();
            }
            cur.truncate(depth);
            return;
        }
        if cur.len() + self.graph.clique_cover_bound(&p) <= best.len() {
            cur.truncate(depth);
            return;
        }
        let v = p
            .iter()
            .max_by_key(|&v| (self.graph.adj[v].intersection_count(&p), std::cmp::Reverse(v)))
            .expect("non-empty");
        let mut with = p.clone();
        with.remove(v);
        with.difference_with(&self.graph.adj[v]);
        cur.push(v);
        self.run(with, cur, best);
        cur.pop();
        let mut without = p;
        without.remove(v);
        self.run(without, cur, best);
        cur.truncate(depth);
    }
}
