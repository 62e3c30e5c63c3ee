//! Box-level drafting of gadget geometry with named faces and the
//! rectangular-face self-check.

use std::collections::HashMap;

use super::{ManifestEntry, ReductionError};
use crate::geometry::{FaceClass, FaceId, SegmentSet, Subdivision};

pub(crate) type Rect = (i64, i64, i64, i64);

#[derive(Debug, Clone, Copy)]
enum Anchor {
    /// A drawn box that must come out as exactly one rectangular face.
    Rect(Rect),
    /// Any face containing the cell with this lower-left corner.
    Region(i64, i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Owner {
    Variable(usize),
    Clause(usize),
}

pub(crate) type Handle = usize;

#[derive(Default)]
pub(crate) struct Draft {
    boxes: Vec<Rect>,
    named: Vec<(Anchor, FaceClass, Owner, String)>,
}

pub(crate) struct Drawn {
    pub segments: SegmentSet,
    pub subdivision: Subdivision,
    pub manifest: Vec<ManifestEntry>,
    /// Face of each handle, in creation order.
    pub faces: Vec<FaceId>,
}

/// Mirrors a box through the horizontal line `y = axis / 2`.
pub(crate) fn mirror(r: Rect, axis: i64) -> Rect {
    (r.0, axis - r.3, r.2, axis - r.1)
}

impl Draft {
    pub fn rect(&mut self, r: Rect, owner: Owner, name: impl Into<String>) -> Handle {
        debug_assert!(r.0 < r.2 && r.1 < r.3, "degenerate box {r:?}");
        self.boxes.push(r);
        let class = match owner {
            Owner::Variable(_) => FaceClass::Variable,
            Owner::Clause(_) => FaceClass::Clause,
        };
        self.named.push((Anchor::Rect(r), class, owner, name.into()));
        self.named.len() - 1
    }

    pub fn region(&mut self, x: i64, y: i64, class: FaceClass, owner: Owner, name: impl Into<String>) -> Handle {
        self.named.push((Anchor::Region(x, y), class, owner, name.into()));
        self.named.len() - 1
    }

    /// Unnamed boundary box (its face is labeled by what it encloses).
    #[cfg(test)]
    pub fn outline(&mut self, r: Rect) {
        self.boxes.push(r);
    }

    pub fn finish(self) -> Result<Drawn, ReductionError> {
        let segments = SegmentSet::from_boxes(&self.boxes)?;
        let sub = Subdivision::build(&segments)?;
        let mut faces = Vec::with_capacity(self.named.len());
        let mut by_face: HashMap<FaceId, usize> = HashMap::new();
        for (i, (anchor, _, _, name)) in self.named.iter().enumerate() {
            let (x, y) = match *anchor {
                Anchor::Rect(r) => (r.0, r.1),
                Anchor::Region(x, y) => (x, y),
            };
            let f = sub
                .face_at_corner(x, y)
                .ok_or_else(|| ReductionError::SelfCheck(format!("{name} has no face at ({x}, {y})")))?;
            if let Anchor::Rect(r) = *anchor {
                if !sub.face(f).is_rectangle || sub.face_bounds(f) != r {
                    return Err(ReductionError::SelfCheck(format!("{name} is not the rectangle {r:?}")));
                }
            }
            if let Some(j) = by_face.insert(f, i) {
                return Err(ReductionError::SelfCheck(format!(
                    "{name} and {} name the same face",
                    self.named[j].3
                )));
            }
            faces.push(f);
        }
        let mut classes = vec![FaceClass::Outer; sub.face_count()];
        let mut manifest = Vec::with_capacity(sub.face_count());
        for f in 0..sub.face_count() {
            let rectangular = sub.face(f).is_rectangle;
            let entry = match by_face.get(&f) {
                Some(&i) => {
                    let (_, class, owner, ref name) = self.named[i];
                    classes[f] = class;
                    let (variable, clause) = match owner {
                        Owner::Variable(v) => (Some(v), None),
                        Owner::Clause(c) => (None, Some(c)),
                    };
                    ManifestEntry { face: f, class, variable, clause, name: name.clone(), rectangular }
                }
                None if rectangular => {
                    let b = sub.face_bounds(f);
                    return Err(ReductionError::SelfCheck(format!("unnamed rectangular face at {b:?}")));
                }
                None => ManifestEntry {
                    face: f,
                    class: FaceClass::Outer,
                    variable: None,
                    clause: None,
                    name: "outer".into(),
                    rectangular,
                },
            };
            manifest.push(entry);
        }
        Ok(Drawn { segments, subdivision: sub.with_classes(&classes), manifest, faces })
    }
}
