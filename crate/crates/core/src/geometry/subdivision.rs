use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::{GeometryError, Orientation, Point, SegmentSet};

pub type FaceId = usize;
pub type VertexId = usize;

/// Role of a face in a generated reduction instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceClass {
    #[default]
    Generic,
    Variable,
    Clause,
    Outer,
}

/// One bounded face, stored as a set of compressed-grid cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    /// `(column, row)` cells, in row-major order.
    pub cells: Vec<(u32, u32)>,
    pub is_rectangle: bool,
    pub class: FaceClass,
    /// Inclusive cell bounds `(c0, r0, c1, r1)`.
    pub cell_bounds: (u32, u32, u32, u32),
}

/// Planar subdivision induced by a [`SegmentSet`], built by coordinate
/// compression and flood fill over the resulting cell grid.
///
/// Column `c` of the grid spans `xs[c]..xs[c + 1]`, row `r` spans
/// `ys[r]..ys[r + 1]`. Everything outside the hull of the coordinates belongs
/// to the unbounded region.
#[derive(Debug, Clone)]
pub struct Subdivision {
    xs: Vec<i64>,
    ys: Vec<i64>,
    /// `blocked_v[c * (ny - 1) + r]`: line `x = xs[c]` covered on row `r`.
    blocked_v: Vec<bool>,
    /// `blocked_h[r * (nx - 1) + c]`: line `y = ys[r]` covered on column `c`.
    blocked_h: Vec<bool>,
    cell_face: Vec<Option<FaceId>>,
    vertices: Vec<Point>,
    vertex_index: HashMap<Point, VertexId>,
    vertex_faces: Vec<Vec<FaceId>>,
    faces: Vec<Face>,
    adjacency: Vec<Vec<FaceId>>,
}

/// Counts of the planar graph formed by the segment union.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerCounts {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
}

impl EulerCounts {
    /// Bounded faces predicted by Euler's formula, `E - V + C`.
    pub fn bounded_faces(&self) -> usize {
        self.edges + self.components - self.vertices
    }
}

const OUTSIDE: usize = usize::MAX;

impl Subdivision {
    pub fn build(set: &SegmentSet) -> Result<Self, GeometryError> {
        if set.is_empty() {
            return Err(GeometryError::EmptyInput);
        }
        let mut xs: Vec<i64> = Vec::with_capacity(set.len() * 2);
        let mut ys: Vec<i64> = Vec::with_capacity(set.len() * 2);
        for s in set.segments() {
            xs.extend([s.a().x, s.b().x]);
            ys.extend([s.a().y, s.b().y]);
        }
        xs.sort_unstable();
        xs.dedup();
        ys.sort_unstable();
        ys.dedup();
        let nx = xs.len();
        let ny = ys.len();
        let ix = |x: i64| xs.binary_search(&x).expect("x in compressed set");
        let iy = |y: i64| ys.binary_search(&y).expect("y in compressed set");

        let mut blocked_v = vec![false; nx * ny.saturating_sub(1)];
        let mut blocked_h = vec![false; ny * nx.saturating_sub(1)];
        let mut is_endpoint = vec![false; nx * ny];
        for s in set.segments() {
            let (a, b) = (s.a(), s.b());
            is_endpoint[iy(a.y) * nx + ix(a.x)] = true;
            is_endpoint[iy(b.y) * nx + ix(b.x)] = true;
            match s.orientation() {
                Orientation::Vertical => {
                    let c = ix(a.x);
                    for r in iy(a.y)..iy(b.y) {
                        blocked_v[c * (ny - 1) + r] = true;
                    }
                }
                Orientation::Horizontal => {
                    let r = iy(a.y);
                    for c in ix(a.x)..ix(b.x) {
                        blocked_h[r * (nx - 1) + c] = true;
                    }
                }
            }
        }

        let mut sub = Self {
            xs,
            ys,
            blocked_v,
            blocked_h,
            cell_face: Vec::new(),
            vertices: Vec::new(),
            vertex_index: HashMap::new(),
            vertex_faces: Vec::new(),
            faces: Vec::new(),
            adjacency: Vec::new(),
        };
        sub.label_cells();
        sub.collect_vertices(&is_endpoint);
        sub.collect_adjacency();
        Ok(sub)
    }

    fn cols(&self) -> usize {
        self.xs.len().saturating_sub(1)
    }

    fn rows(&self) -> usize {
        self.ys.len().saturating_sub(1)
    }

    /// Grid dimensions `(columns, rows)` of the cell grid.
    pub fn grid_dims(&self) -> (usize, usize) {
        (self.cols(), self.rows())
    }

    pub fn xs(&self) -> &[i64] {
        &self.xs
    }

    pub fn ys(&self) -> &[i64] {
        &self.ys
    }

    /// Whether the line `x = xs[c]` is covered between `ys[r]` and `ys[r + 1]`.
    pub fn is_blocked_v(&self, c: usize, r: usize) -> bool {
        self.blocked_v[c * self.rows() + r]
    }

    /// Whether the line `y = ys[r]` is covered between `xs[c]` and `xs[c + 1]`.
    pub fn is_blocked_h(&self, c: usize, r: usize) -> bool {
        self.blocked_h[r * self.cols() + c]
    }

    /// Neighbours of a cell across unblocked borders; `OUTSIDE` marks an
    /// exit through the hull.
    fn open_neighbors(&self, c: usize, r: usize, out: &mut Vec<usize>) {
        let (w, h) = (self.cols(), self.rows());
        out.clear();
        if !self.is_blocked_v(c, r) {
            out.push(if c == 0 { OUTSIDE } else { r * w + c - 1 });
        }
        if !self.is_blocked_v(c + 1, r) {
            out.push(if c + 1 == w { OUTSIDE } else { r * w + c + 1 });
        }
        if !self.is_blocked_h(c, r) {
            out.push(if r == 0 { OUTSIDE } else { (r - 1) * w + c });
        }
        if !self.is_blocked_h(c, r + 1) {
            out.push(if r + 1 == h { OUTSIDE } else { (r + 1) * w + c });
        }
    }

    fn label_cells(&mut self) {
        let (w, h) = (self.cols(), self.rows());
        let mut cell_face = vec![None; w * h];
        let mut seen = vec![false; w * h];
        let mut queue = VecDeque::new();
        let mut nbrs = Vec::with_capacity(4);
        let mut component = Vec::new();
        for start in 0..w * h {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            component.clear();
            let mut bounded = true;
            while let Some(cell) = queue.pop_front() {
                component.push(cell);
                self.open_neighbors(cell % w, cell / w, &mut nbrs);
                for &n in &nbrs {
                    if n == OUTSIDE {
                        bounded = false;
                    } else if !seen[n] {
                        seen[n] = true;
                        queue.push_back(n);
                    }
                }
            }
            if !bounded {
                continue;
            }
            component.sort_unstable();
            let id = self.faces.len();
            let cells: Vec<(u32, u32)> = component
                .iter()
                .map(|&i| ((i % w) as u32, (i / w) as u32))
                .collect();
            for &i in &component {
                cell_face[i] = Some(id);
            }
            let face = self.make_face(id, cells);
            self.faces.push(face);
        }
        self.cell_face = cell_face;
    }

    fn make_face(&self, id: FaceId, cells: Vec<(u32, u32)>) -> Face {
        let c0 = cells.iter().map(|c| c.0).min().unwrap();
        let c1 = cells.iter().map(|c| c.0).max().unwrap();
        let r0 = cells.iter().map(|c| c.1).min().unwrap();
        let r1 = cells.iter().map(|c| c.1).max().unwrap();
        let area = (c1 - c0 + 1) as usize * (r1 - r0 + 1) as usize;
        let mut is_rectangle = area == cells.len();
        if is_rectangle {
            'scan: for r in r0..=r1 {
                for c in c0..=c1 {
                    let (c, r) = (c as usize, r as usize);
                    if (c as u32 > c0 && self.is_blocked_v(c, r))
                        || (r as u32 > r0 && self.is_blocked_h(c, r))
                    {
                        is_rectangle = false;
                        break 'scan;
                    }
                }
            }
        }
        Face {
            id,
            cells,
            is_rectangle,
            class: FaceClass::Generic,
            cell_bounds: (c0, r0, c1, r1),
        }
    }

    /// Faces owning the (up to four) cells around grid point `(c, r)`.
    fn faces_around(&self, c: usize, r: usize) -> Vec<FaceId> {
        let (w, h) = (self.cols(), self.rows());
        let mut out = Vec::with_capacity(4);
        for (dc, dr) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            if c < dc || r < dr {
                continue;
            }
            let (cc, rr) = (c - dc, r - dr);
            if cc < w && rr < h {
                if let Some(f) = self.cell_face[rr * w + cc] {
                    if !out.contains(&f) {
                        out.push(f);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn has_vertical_at(&self, c: usize, r: usize) -> bool {
        let h = self.rows();
        (r > 0 && self.is_blocked_v(c, r - 1)) || (r < h && self.is_blocked_v(c, r))
    }

    fn has_horizontal_at(&self, c: usize, r: usize) -> bool {
        let w = self.cols();
        (c > 0 && self.is_blocked_h(c - 1, r)) || (c < w && self.is_blocked_h(c, r))
    }

    fn collect_vertices(&mut self, is_endpoint: &[bool]) {
        let (nx, ny) = (self.xs.len(), self.ys.len());
        for r in 0..ny {
            for c in 0..nx {
                let crossing = self.has_vertical_at(c, r) && self.has_horizontal_at(c, r);
                if is_endpoint[r * nx + c] || crossing {
                    let p = Point::new(self.xs[c], self.ys[r]);
                    self.vertex_index.insert(p, self.vertices.len());
                    self.vertices.push(p);
                    let around = self.faces_around(c, r);
                    self.vertex_faces.push(around);
                }
            }
        }
    }

    fn collect_adjacency(&mut self) {
        let mut adj = vec![Vec::new(); self.faces.len()];
        for r in 0..self.ys.len() {
            for c in 0..self.xs.len() {
                let around = self.faces_around(c, r);
                for (i, &f) in around.iter().enumerate() {
                    for &g in &around[i + 1..] {
                        adj[f].push(g);
                        adj[g].push(f);
                    }
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        self.adjacency = adj;
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id]
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex_id(&self, p: Point) -> Option<VertexId> {
        self.vertex_index.get(&p).copied()
    }

    /// Faces incident to vertex `v` (at most four), sorted.
    pub fn vertex_faces(&self, v: VertexId) -> &[FaceId] {
        &self.vertex_faces[v]
    }

    /// Faces whose closure contains the vertex `p`.
    pub fn stabbed_faces(&self, p: Point) -> Result<&[FaceId], GeometryError> {
        self.vertex_id(p)
            .map(|v| self.vertex_faces(v))
            .ok_or(GeometryError::NotAVertex(p))
    }

    /// Faces whose closures meet face `f`'s closure, sorted.
    pub fn neighbors(&self, f: FaceId) -> &[FaceId] {
        &self.adjacency[f]
    }

    /// All adjacent pairs `(f, g)` with `f < g`.
    pub fn face_adjacency(&self) -> Vec<(FaceId, FaceId)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(f, ns)| ns.iter().filter(move |&&g| g > f).map(move |&g| (f, g)))
            .collect()
    }

    pub fn are_adjacent(&self, f: FaceId, g: FaceId) -> bool {
        self.adjacency[f].binary_search(&g).is_ok()
    }

    pub fn rectangular_faces(&self) -> Vec<FaceId> {
        self.faces.iter().filter(|f| f.is_rectangle).map(|f| f.id).collect()
    }

    /// Face owning cell `(c, r)`, `None` for the unbounded region.
    pub fn cell_face(&self, c: usize, r: usize) -> Option<FaceId> {
        self.cell_face[r * self.cols() + c]
    }

    /// Face containing the cell whose lower-left corner is `(x, y)`.
    /// Both coordinates must be compressed coordinates.
    pub fn face_at_corner(&self, x: i64, y: i64) -> Option<FaceId> {
        let c = self.xs.binary_search(&x).ok()?;
        let r = self.ys.binary_search(&y).ok()?;
        if c >= self.cols() || r >= self.rows() {
            return None;
        }
        self.cell_face(c, r)
    }

    /// Real-coordinate bounding box `(x0, y0, x1, y1)` of a face.
    pub fn face_bounds(&self, f: FaceId) -> (i64, i64, i64, i64) {
        let (c0, r0, c1, r1) = self.faces[f].cell_bounds;
        (
            self.xs[c0 as usize],
            self.ys[r0 as usize],
            self.xs[c1 as usize + 1],
            self.ys[r1 as usize + 1],
        )
    }

    /// Attaches class labels to faces (one entry per face).
    pub fn with_classes(mut self, classes: &[FaceClass]) -> Self {
        for (face, &class) in self.faces.iter_mut().zip(classes) {
            face.class = class;
        }
        self
    }

    /// Vertex, edge and component counts of the segment-union graph.
    pub fn euler_counts(&self) -> EulerCounts {
        let (nx, ny) = (self.xs.len(), self.ys.len());
        let (w, h) = (self.cols(), self.rows());
        let mut parent: Vec<usize> = (0..nx * ny).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut unit_edges = 0;
        let mut on_union = vec![false; nx * ny];
        let join = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            if ra != rb {
                p[ra] = rb;
            }
        };
        for c in 0..nx {
            for r in 0..h {
                if self.is_blocked_v(c, r) {
                    unit_edges += 1;
                    let (a, b) = (r * nx + c, (r + 1) * nx + c);
                    on_union[a] = true;
                    on_union[b] = true;
                    join(&mut parent, a, b);
                }
            }
        }
        for r in 0..ny {
            for c in 0..w {
                if self.is_blocked_h(c, r) {
                    unit_edges += 1;
                    let (a, b) = (r * nx + c, r * nx + c + 1);
                    on_union[a] = true;
                    on_union[b] = true;
                    join(&mut parent, a, b);
                }
            }
        }
        let union_points = on_union.iter().filter(|&&b| b).count();
        let mut roots: Vec<usize> = (0..nx * ny)
            .filter(|&i| on_union[i])
            .map(|i| find(&mut parent, i))
            .collect();
        roots.sort_unstable();
        roots.dedup();
        let v = self.vertices.len();
        // Non-vertex points on the union have degree two; each one splits an edge.
        EulerCounts {
            vertices: v,
            edges: unit_edges - (union_points - v),
            components: roots.len(),
        }
    }
}
