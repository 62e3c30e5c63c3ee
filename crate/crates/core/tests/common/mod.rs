//! Shared corpus and brute-force oracles for the integration tests.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rectsub::io::{generate, grid, guillotine, GeneratorSpec};
use rectsub::solvers::{target_faces, FaceFilter, Problem};
use rectsub::{FaceId, SegmentSet, Subdivision};

pub struct Instance {
    pub name: String,
    pub set: SegmentSet,
    pub sub: Subdivision,
    pub filter: FaceFilter,
    /// Rooms of a guillotine partition.
    pub rooms: Option<usize>,
}

impl Instance {
    pub fn new(name: impl Into<String>, set: SegmentSet, filter: FaceFilter) -> Self {
        let sub = Subdivision::build(&set).expect("corpus instance builds");
        Self { name: name.into(), set, sub, filter, rooms: None }
    }
}

pub fn guillotine_instance(rooms: usize, seed: u64) -> Instance {
    let mut inst = Instance::new(format!("guillotine-{rooms}-{seed}"), guillotine(rooms, seed).unwrap(), FaceFilter::All);
    inst.rooms = Some(rooms);
    inst
}

/// Gadgets m=1 for every problem and variant.
pub fn gadgets() -> Vec<Instance> {
    let mut out = Vec::new();
    for problem in [Problem::Stab, Problem::Mis, Problem::Mds] {
        for variant in [FaceFilter::Rect, FaceFilter::All] {
            let set = generate(&GeneratorSpec::Gadget { problem, m: 1, variant }).unwrap();
            out.push(Instance::new(format!("gadget-{problem}-{}", variant.as_str()), set, variant));
        }
    }
    out
}

/// Small hand-made subdivisions with holes, slits and touching corners.
pub fn irregular() -> Vec<Instance> {
    let boxes = |b: &[(i64, i64, i64, i64)]| SegmentSet::from_boxes(b).unwrap();
    vec![
        Instance::new("ring", boxes(&[(0, 0, 3, 3), (1, 1, 2, 2)]), FaceFilter::All),
        Instance::new("double-ring", boxes(&[(0, 0, 5, 5), (1, 1, 4, 4), (2, 2, 3, 3)]), FaceFilter::All),
        Instance::new(
            "slit",
            SegmentSet::from_coords(&[(0, 0, 4, 0), (4, 0, 4, 2), (4, 2, 0, 2), (0, 2, 0, 0), (2, 0, 2, 1)]).unwrap(),
            FaceFilter::All,
        ),
        Instance::new("corners", boxes(&[(0, 0, 1, 1), (1, 1, 2, 2), (2, 0, 3, 1)]), FaceFilter::All),
        Instance::new("l-shape", boxes(&[(0, 0, 2, 1), (0, 1, 1, 2), (0, 0, 1, 1)]), FaceFilter::All),
        Instance::new("ring-rect", boxes(&[(0, 0, 3, 3), (1, 1, 2, 2), (3, 0, 4, 3)]), FaceFilter::Rect),
    ]
}

/// The 200-instance seeded corpus: all grids up to 4×4, gadgets with m=1 and
/// guillotine partitions with up to 12 rooms.
pub fn corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for a in 1..=4 {
        for b in 1..=4 {
            out.push(Instance::new(format!("grid-{a}x{b}"), grid(a, b).unwrap(), FaceFilter::All));
        }
    }
    out.extend(gadgets());
    let mut seed = 0u64;
    while out.len() < 200 {
        out.push(guillotine_instance(1 + (seed % 12) as usize, seed));
        seed += 1;
    }
    out
}

/// Grid corners touched by the closure of each face.
fn face_corners(sub: &Subdivision) -> Vec<HashSet<(u32, u32)>> {
    sub.faces()
        .iter()
        .map(|f| f.cells.iter().flat_map(|&(c, r)| [(c, r), (c + 1, r), (c, r + 1), (c + 1, r + 1)]).collect())
        .collect()
}

fn corner_of(sub: &Subdivision, x: i64, y: i64) -> (u32, u32) {
    let c = sub.xs().binary_search(&x).expect("vertex on grid line") as u32;
    let r = sub.ys().binary_search(&y).expect("vertex on grid line") as u32;
    (c, r)
}

/// Incidence data derived from face cells alone.
pub struct Naive {
    pub targets: Vec<FaceId>,
    /// Per vertex, the bitmask of targets it stabs.
    pub stab_masks: Vec<u32>,
    /// Per target, the bitmask of adjacent targets (excluding itself).
    pub adj: Vec<u32>,
}

impl Naive {
    pub fn new(sub: &Subdivision, filter: FaceFilter) -> Self {
        let targets = target_faces(sub, filter);
        assert!(targets.len() <= 32);
        let corners = face_corners(sub);
        let stab_masks = sub
            .vertices()
            .iter()
            .map(|p| {
                let k = corner_of(sub, p.x, p.y);
                targets.iter().enumerate().filter(|(_, &f)| corners[f].contains(&k)).fold(0u32, |m, (i, _)| m | 1 << i)
            })
            .collect();
        let adj = targets
            .iter()
            .enumerate()
            .map(|(i, &f)| {
                targets.iter().enumerate().fold(0u32, |m, (j, &g)| {
                    if i != j && !corners[f].is_disjoint(&corners[g]) {
                        m | 1 << j
                    } else {
                        m
                    }
                })
            })
            .collect();
        Self { targets, stab_masks, adj }
    }

    fn full(&self) -> u32 {
        if self.targets.len() == 32 {
            u32::MAX
        } else {
            (1u32 << self.targets.len()) - 1
        }
    }

    /// Minimum stabbing number over all vertex subsets.
    pub fn stab(&self) -> Option<usize> {
        let v = self.stab_masks.len();
        assert!(v <= 22, "too many vertices for enumeration");
        let mut union = vec![0u32; 1 << v];
        let mut best = None::<usize>;
        for s in 0..(1usize << v) {
            if s > 0 {
                union[s] = union[s & (s - 1)] | self.stab_masks[s.trailing_zeros() as usize];
            }
            if union[s] == self.full() {
                let k = s.count_ones() as usize;
                best = Some(best.map_or(k, |b| b.min(k)));
            }
        }
        best
    }

    /// Maximum independent set size over all target subsets.
    pub fn mis(&self) -> usize {
        let t = self.targets.len();
        (0..(1u32 << t))
            .filter(|&s| (0..t).all(|i| s & 1 << i == 0 || self.adj[i] & s == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Minimum dominating set size over all target subsets.
    pub fn mds(&self) -> usize {
        let t = self.targets.len();
        (0..(1u32 << t))
            .filter(|&s| {
                let dom = (0..t).filter(|&i| s & 1 << i != 0).fold(s, |m, i| m | self.adj[i]);
                dom == self.full()
            })
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    pub fn solve(&self, problem: Problem) -> Option<usize> {
        match problem {
            Problem::Stab => self.stab(),
            Problem::Mis => Some(self.mis()),
            Problem::Mds => Some(self.mds()),
        }
    }
}

/// Raw segments indexed by their supporting line.
struct Lines {
    vertical: HashMap<i64, Vec<(i64, i64)>>,
    horizontal: HashMap<i64, Vec<(i64, i64)>>,
}

impl Lines {
    fn new(set: &SegmentSet) -> Self {
        let mut vertical: HashMap<i64, Vec<(i64, i64)>> = HashMap::new();
        let mut horizontal: HashMap<i64, Vec<(i64, i64)>> = HashMap::new();
        for s in set.segments() {
            let (a, b) = (s.a(), s.b());
            if s.is_horizontal() {
                horizontal.entry(a.y).or_default().push((a.x.min(b.x), a.x.max(b.x)));
            } else {
                vertical.entry(a.x).or_default().push((a.y.min(b.y), a.y.max(b.y)));
            }
        }
        Self { vertical, horizontal }
    }

    fn covers(map: &HashMap<i64, Vec<(i64, i64)>>, line: i64, lo: i64, hi: i64) -> bool {
        map.get(&line).is_some_and(|v| v.iter().any(|&(a, b)| a <= lo && hi <= b))
    }

    fn v_blocked(&self, x: i64, y0: i64, y1: i64) -> bool {
        Self::covers(&self.vertical, x, y0, y1)
    }

    fn h_blocked(&self, y: i64, x0: i64, x1: i64) -> bool {
        Self::covers(&self.horizontal, y, x0, x1)
    }
}

/// Outcome of the point-location oracle on one instance.
#[derive(Debug, Default)]
pub struct LocationCheck {
    pub sampled: usize,
    pub mismatches: usize,
    pub leaks: usize,
    pub split_faces: usize,
}

impl LocationCheck {
    pub fn ok(&self) -> bool {
        self.mismatches == 0 && self.leaks == 0 && self.split_faces == 0
    }
}

/// Checks the face assignment against the raw segments:
/// every face is bounded by raw segments and connected through uncovered
/// edges, unassigned cells reach infinity, and even-odd ray casting against
/// each face's boundary locates `samples` random cell centres correctly.
pub fn check_point_location(set: &SegmentSet, sub: &Subdivision, samples: usize, seed: u64) -> LocationCheck {
    let lines = Lines::new(set);
    let (xs, ys) = (sub.xs(), sub.ys());
    let (cols, rows) = sub.grid_dims();
    let mut out = LocationCheck::default();
    let at = |c: isize, r: isize| -> Option<FaceId> {
        if c < 0 || r < 0 || c as usize >= cols || r as usize >= rows {
            None
        } else {
            sub.cell_face(c as usize, r as usize)
        }
    };

    // boundary edges in doubled coordinates, per face: vertical (x, y0, y1) only,
    // which suffices for horizontal rays
    let mut boundary: Vec<Vec<(i64, i64, i64)>> = vec![Vec::new(); sub.face_count()];
    for r in 0..rows {
        for c in 0..=cols {
            let (left, right) = (at(c as isize - 1, r as isize), at(c as isize, r as isize));
            let covered = lines.v_blocked(xs[c], ys[r], ys[r + 1]);
            if left != right && !covered {
                out.leaks += 1;
            }
            for f in [left, right].into_iter().flatten() {
                if left != right {
                    boundary[f].push((2 * xs[c], 2 * ys[r], 2 * ys[r + 1]));
                }
            }
        }
    }
    for r in 0..=rows {
        for c in 0..cols {
            let (below, above) = (at(c as isize, r as isize - 1), at(c as isize, r as isize));
            if below != above && !lines.h_blocked(ys[r], xs[c], xs[c + 1]) {
                out.leaks += 1;
            }
        }
    }

    // connectivity of each face and of the unbounded region through uncovered edges
    let open_right = |c: usize, r: usize| !lines.v_blocked(xs[c + 1], ys[r], ys[r + 1]);
    let open_up = |c: usize, r: usize| !lines.h_blocked(ys[r + 1], xs[c], xs[c + 1]);
    let mut comp = vec![usize::MAX; cols * rows];
    let mut n_comp = 0;
    let mut reaches_border = Vec::new();
    for start in 0..cols * rows {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut border = false;
        let mut queue = VecDeque::from([start]);
        comp[start] = n_comp;
        while let Some(i) = queue.pop_front() {
            let (c, r) = (i % cols, i / cols);
            border |= (c == 0 && !lines.v_blocked(xs[0], ys[r], ys[r + 1]))
                || (c + 1 == cols && !lines.v_blocked(xs[cols], ys[r], ys[r + 1]))
                || (r == 0 && !lines.h_blocked(ys[0], xs[c], xs[c + 1]))
                || (r + 1 == rows && !lines.h_blocked(ys[rows], xs[c], xs[c + 1]));
            let mut next = Vec::with_capacity(4);
            if c + 1 < cols && open_right(c, r) {
                next.push(i + 1);
            }
            if c > 0 && open_right(c - 1, r) {
                next.push(i - 1);
            }
            if r + 1 < rows && open_up(c, r) {
                next.push(i + cols);
            }
            if r > 0 && open_up(c, r - 1) {
                next.push(i - cols);
            }
            for j in next {
                if comp[j] == usize::MAX {
                    comp[j] = n_comp;
                    queue.push_back(j);
                }
            }
        }
        reaches_border.push(border);
        n_comp += 1;
    }
    let mut comp_of_face: HashMap<FaceId, usize> = HashMap::new();
    for r in 0..rows {
        for c in 0..cols {
            let k = comp[r * cols + c];
            match sub.cell_face(c, r) {
                Some(f) => {
                    if reaches_border[k] {
                        out.mismatches += 1;
                    }
                    if *comp_of_face.entry(f).or_insert(k) != k {
                        out.split_faces += 1;
                    }
                }
                None => {
                    // an unassigned cell must escape through an uncovered hull edge
                    if !reaches_border[k] {
                        out.mismatches += 1;
                    }
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let (c, r) = (rng.gen_range(0..cols), rng.gen_range(0..rows));
        let (px, py) = (xs[c] + xs[c + 1], ys[r] + ys[r + 1]);
        let located: Vec<FaceId> = (0..sub.face_count())
            .filter(|&f| boundary[f].iter().filter(|&&(x, y0, y1)| x > px && y0 < py && py < y1).count() % 2 == 1)
            .collect();
        let expected: Vec<FaceId> = sub.cell_face(c, r).into_iter().collect();
        out.sampled += 1;
        if located != expected {
            out.mismatches += 1;
        }
    }
    out
}

impl Naive {
    /// Whether `chosen` (vertex indices) stabs every target.
    pub fn stabs_all(&self, chosen: &[usize]) -> bool {
        chosen.iter().fold(0u32, |m, &v| m | self.stab_masks[v]) == self.full()
    }

    /// Whether some set of at most `budget` vertices covers `need`.
    fn coverable(&self, need: u32, budget: usize, from: usize) -> bool {
        if need == 0 {
            return true;
        }
        if budget == 0 {
            return false;
        }
        (from..self.stab_masks.len())
            .any(|v| self.stab_masks[v] & need != 0 && self.coverable(need & !self.stab_masks[v], budget - 1, v + 1))
    }

    /// No `X ⊆ chosen` with `|X| ≤ k` can be replaced by fewer vertices while
    /// still stabbing every target.
    pub fn is_locally_optimal(&self, chosen: &[usize], k: usize) -> bool {
        fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
            if !cur.is_empty() && !f(cur) {
                return false;
            }
            if cur.len() == k {
                return true;
            }
            for i in start..n {
                cur.push(i);
                let ok = subsets(n, k, i + 1, cur, f);
                cur.pop();
                if !ok {
                    return false;
                }
            }
            true
        }
        subsets(chosen.len(), k, 0, &mut Vec::new(), &mut |removed| {
            let kept = (0..chosen.len())
                .filter(|i| !removed.contains(i))
                .fold(0u32, |m, i| m | self.stab_masks[chosen[i]]);
            !self.coverable(self.full() & !kept, removed.len() - 1, 0)
        })
    }
}
