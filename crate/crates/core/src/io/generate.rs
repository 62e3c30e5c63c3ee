//! Reproducible instance generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::IoError;
use crate::geometry::SegmentSet;
use crate::reductions::{mds_gadget, mis_gadget, stab_gadget};
use crate::solvers::{FaceFilter, Problem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GeneratorSpec {
    /// A square split by random axis-parallel cuts into `rooms` rectangles.
    Guillotine { rooms: usize, seed: u64 },
    /// A `cols` × `rows` lattice of unit squares.
    Grid { cols: usize, rows: usize },
    /// One isolated variable gadget with `m` slots per side.
    Gadget { problem: Problem, m: usize, variant: FaceFilter },
}

pub fn generate(spec: &GeneratorSpec) -> Result<SegmentSet, IoError> {
    match *spec {
        GeneratorSpec::Guillotine { rooms, seed } => guillotine(rooms, seed),
        GeneratorSpec::Grid { cols, rows } => grid(cols, rows),
        GeneratorSpec::Gadget { problem, m, variant } => {
            let out = match problem {
                Problem::Stab => stab_gadget(m, variant),
                Problem::Mis => mis_gadget(m, variant),
                Problem::Mds => mds_gadget(m, variant),
            }
            .map_err(|e| IoError::InvalidSpec(e.to_string()))?;
            Ok(out.segments)
        }
    }
}

pub fn guillotine(rooms: usize, seed: u64) -> Result<SegmentSet, IoError> {
    if rooms == 0 {
        return Err(IoError::InvalidSpec("rooms must be at least 1".into()));
    }
    let side = 2 * rooms as i64 + 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut boxes = vec![(0, 0, side, side)];
    while boxes.len() < rooms {
        let splittable: Vec<usize> = (0..boxes.len())
            .filter(|&i| {
                let (x0, y0, x1, y1) = boxes[i];
                x1 - x0 >= 2 || y1 - y0 >= 2
            })
            .collect();
        let i = splittable[rng.gen_range(0..splittable.len())];
        let (x0, y0, x1, y1) = boxes[i];
        let vertical = match (x1 - x0 >= 2, y1 - y0 >= 2) {
            (true, true) => rng.gen_bool(0.5),
            (v, _) => v,
        };
        if vertical {
            let x = rng.gen_range(x0 + 1..x1);
            boxes[i] = (x0, y0, x, y1);
            boxes.push((x, y0, x1, y1));
        } else {
            let y = rng.gen_range(y0 + 1..y1);
            boxes[i] = (x0, y0, x1, y);
            boxes.push((x0, y, x1, y1));
        }
    }
    Ok(SegmentSet::from_boxes(&boxes)?)
}

pub fn grid(cols: usize, rows: usize) -> Result<SegmentSet, IoError> {
    if cols == 0 || rows == 0 {
        return Err(IoError::InvalidSpec("grid dimensions must be positive".into()));
    }
    let (a, b) = (cols as i64, rows as i64);
    let mut coords: Vec<_> = (0..=a).map(|x| (x, 0, x, b)).collect();
    coords.extend((0..=b).map(|y| (0, y, a, y)));
    Ok(SegmentSet::from_coords(&coords)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Subdivision;

    #[test]
    fn single_room() {
        let s = guillotine(1, 0).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(Subdivision::build(&s).unwrap().face_count(), 1);
    }

    #[test]
    fn seven_rooms() {
        let s = guillotine(7, 42).unwrap();
        let sub = Subdivision::build(&s).unwrap();
        assert_eq!(sub.face_count(), 7);
        assert_eq!(sub.rectangular_faces().len(), 7);
        assert_eq!(guillotine(7, 42).unwrap(), s);
    }

    #[test]
    fn grid_faces() {
        assert_eq!(Subdivision::build(&grid(2, 2).unwrap()).unwrap().face_count(), 4);
        assert!(grid(0, 2).is_err());
        assert!(guillotine(0, 1).is_err());
    }

    #[test]
    fn gadget_spec() {
        let s = generate(&GeneratorSpec::Gadget { problem: Problem::Stab, m: 1, variant: FaceFilter::Rect }).unwrap();
        assert_eq!(Subdivision::build(&s).unwrap().face_count(), 13);
        assert!(generate(&GeneratorSpec::Gadget { problem: Problem::Mis, m: 0, variant: FaceFilter::Rect }).is_err());
    }
}
