use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::GeometryError;

/// Integer point in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn translate(self, dx: i64, dy: i64) -> Self {
        Self::new(self.x + dx, self.y + dy)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// Axis-parallel segment with `a <= b` lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    a: Point,
    b: Point,
}

impl Segment {
    pub fn new(p: Point, q: Point) -> Result<Self, GeometryError> {
        if p == q {
            return Err(GeometryError::ZeroLengthSegment(p));
        }
        if p.x != q.x && p.y != q.y {
            return Err(GeometryError::NonAxisParallel(p, q));
        }
        let (a, b) = if p <= q { (p, q) } else { (q, p) };
        Ok(Self { a, b })
    }

    pub fn from_coords(x1: i64, y1: i64, x2: i64, y2: i64) -> Result<Self, GeometryError> {
        Self::new(Point::new(x1, y1), Point::new(x2, y2))
    }

    pub fn a(&self) -> Point {
        self.a
    }

    pub fn b(&self) -> Point {
        self.b
    }

    pub fn orientation(&self) -> Orientation {
        if self.a.y == self.b.y {
            Orientation::Horizontal
        } else {
            Orientation::Vertical
        }
    }

    pub fn is_horizontal(&self) -> bool {
        self.orientation() == Orientation::Horizontal
    }

    /// Closed containment test.
    pub fn contains(&self, p: Point) -> bool {
        match self.orientation() {
            Orientation::Horizontal => p.y == self.a.y && self.a.x <= p.x && p.x <= self.b.x,
            Orientation::Vertical => p.x == self.a.x && self.a.y <= p.y && p.y <= self.b.y,
        }
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Self {
        Self {
            a: self.a.translate(dx, dy),
            b: self.b.translate(dx, dy),
        }
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.a.x, self.a.y, self.b.x, self.b.y)
    }
}

/// Validated, non-empty list of axis-parallel segments.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SegmentSet {
    segments: Vec<Segment>,
}

impl SegmentSet {
    pub fn new(segments: Vec<Segment>) -> Self {
        Self { segments }
    }

    pub fn from_coords(coords: &[(i64, i64, i64, i64)]) -> Result<Self, GeometryError> {
        coords
            .iter()
            .map(|&(x1, y1, x2, y2)| Segment::from_coords(x1, y1, x2, y2))
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }

    /// Closed boundaries of the given boxes `(x0, y0, x1, y1)`, merged.
    pub fn from_boxes(boxes: &[(i64, i64, i64, i64)]) -> Result<Self, GeometryError> {
        let mut segs = Vec::with_capacity(boxes.len() * 4);
        for &(x0, y0, x1, y1) in boxes {
            segs.push(Segment::from_coords(x0, y0, x1, y0)?);
            segs.push(Segment::from_coords(x0, y1, x1, y1)?);
            segs.push(Segment::from_coords(x0, y0, x0, y1)?);
            segs.push(Segment::from_coords(x1, y0, x1, y1)?);
        }
        Ok(Self::new(segs).merged())
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn push(&mut self, s: Segment) {
        self.segments.push(s);
    }

    pub fn count_by_orientation(&self) -> (usize, usize) {
        let h = self.segments.iter().filter(|s| s.is_horizontal()).count();
        (h, self.segments.len() - h)
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Self {
        Self::new(self.segments.iter().map(|s| s.translate(dx, dy)).collect())
    }

    /// Unions overlapping or touching collinear segments into maximal ones.
    /// Output is sorted, so equal unions compare equal.
    pub fn merged(&self) -> Self {
        // key: (is_vertical, fixed coordinate) -> intervals along the free axis
        let mut lines: BTreeMap<(bool, i64), Vec<(i64, i64)>> = BTreeMap::new();
        for s in &self.segments {
            match s.orientation() {
                Orientation::Horizontal => lines
                    .entry((false, s.a.y))
                    .or_default()
                    .push((s.a.x, s.b.x)),
                Orientation::Vertical => lines
                    .entry((true, s.a.x))
                    .or_default()
                    .push((s.a.y, s.b.y)),
            }
        }
        let mut out = Vec::new();
        for ((vertical, c), mut iv) in lines {
            iv.sort_unstable();
            let mut cur = iv[0];
            let mut flush = |lo: i64, hi: i64| {
                let seg = if vertical {
                    Segment { a: Point::new(c, lo), b: Point::new(c, hi) }
                } else {
                    Segment { a: Point::new(lo, c), b: Point::new(hi, c) }
                };
                out.push(seg);
            };
            for &(lo, hi) in &iv[1..] {
                if lo <= cur.1 {
                    cur.1 = cur.1.max(hi);
                } else {
                    flush(cur.0, cur.1);
                    cur = (lo, hi);
                }
            }
            flush(cur.0, cur.1);
        }
        out.sort_unstable();
        Self::new(out)
    }
}

impl FromIterator<Segment> for SegmentSet {
    fn from_iter<I: IntoIterator<Item = Segment>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_endpoint_order() {
        let s = Segment::from_coords(3, 1, 0, 1).unwrap();
        assert_eq!(s.a(), Point::new(0, 1));
        assert_eq!(s.b(), Point::new(3, 1));
        assert!(s.is_horizontal());
    }

    #[test]
    fn rejects_bad_segments() {
        assert!(matches!(
            Segment::from_coords(0, 0, 1, 1),
            Err(GeometryError::NonAxisParallel(..))
        ));
        assert!(matches!(
            Segment::from_coords(2, 2, 2, 2),
            Err(GeometryError::ZeroLengthSegment(..))
        ));
    }

    #[test]
    fn merge_unions_collinear_pieces() {
        let set = SegmentSet::from_coords(&[(0, 0, 2, 0), (1, 0, 4, 0), (5, 0, 6, 0), (4, 0, 5, 0)])
            .unwrap()
            .merged();
        assert_eq!(set.segments(), &[Segment::from_coords(0, 0, 6, 0).unwrap()]);
    }

    #[test]
    fn merge_keeps_gapped_collinear_segments_apart() {
        let set = SegmentSet::from_coords(&[(1, 0, 1, 1), (1, 2, 1, 3)]).unwrap().merged();
        assert_eq!(set.len(), 2);
    }

    #[test]
    fn boxes_share_edges() {
        let set = SegmentSet::from_boxes(&[(0, 0, 1, 1), (1, 0, 2, 1)]).unwrap();
        assert_eq!(set.count_by_orientation(), (2, 3));
    }
}
