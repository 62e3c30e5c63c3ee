mod common;

use common::{check_point_location, corpus, irregular};
use proptest::prelude::*;
use rectsub::io::guillotine;
use rectsub::solvers::{exact_stab, FaceFilter, SearchBudget};
use rectsub::{SegmentSet, Subdivision};

#[test]
fn euler_identity_on_corpus() {
    for inst in corpus().into_iter().chain(irregular()) {
        let e = inst.sub.euler_counts();
        assert_eq!(e.bounded_faces(), inst.sub.face_count(), "{}", inst.name);
    }
}

#[test]
fn point_location_on_corpus() {
    for (i, inst) in corpus().into_iter().chain(irregular()).enumerate() {
        let check = check_point_location(&inst.set, &inst.sub, 1000, i as u64);
        assert!(check.ok(), "{}: {check:?}", inst.name);
    }
}

#[test]
fn oracle_detects_a_wrong_subdivision() {
    // the subdivision of a 2x1 grid does not describe a single box
    let two = SegmentSet::from_boxes(&[(0, 0, 1, 1), (1, 0, 2, 1)]).unwrap();
    let one = SegmentSet::from_boxes(&[(0, 0, 2, 1)]).unwrap();
    let sub = Subdivision::build(&two).unwrap();
    let check = check_point_location(&one, &sub, 100, 0);
    assert!(check.leaks > 0);
}

#[test]
fn nested_rings_have_holes() {
    let set = SegmentSet::from_boxes(&[(0, 0, 5, 5), (1, 1, 4, 4), (2, 2, 3, 3)]).unwrap();
    let sub = Subdivision::build(&set).unwrap();
    assert_eq!(sub.face_count(), 3);
    assert_eq!(sub.rectangular_faces().len(), 1);
    assert_eq!(sub.face_adjacency().len(), 2);
}

fn boxes() -> impl Strategy<Value = Vec<(i64, i64, i64, i64)>> {
    prop::collection::vec((0i64..8, 0i64..8, 1i64..5, 1i64..5), 1..6)
        .prop_map(|v| v.into_iter().map(|(x, y, w, h)| (x, y, x + w, y + h)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn translation_invariance(b in boxes(), dx in -50i64..50, dy in -50i64..50) {
        let set = SegmentSet::from_boxes(&b).unwrap();
        let a = Subdivision::build(&set).unwrap();
        let t = Subdivision::build(&set.translate(dx, dy)).unwrap();
        prop_assert_eq!(a.face_count(), t.face_count());
        prop_assert_eq!(a.vertices().len(), t.vertices().len());
        prop_assert_eq!(a.rectangular_faces(), t.rectangular_faces());
        prop_assert_eq!(a.face_adjacency(), t.face_adjacency());
        let budget = SearchBudget::default();
        prop_assert_eq!(
            exact_stab(&a, FaceFilter::All, &budget).size(),
            exact_stab(&t, FaceFilter::All, &budget).size()
        );
    }

    #[test]
    fn faces_partition_the_bounded_cells(b in boxes()) {
        let set = SegmentSet::from_boxes(&b).unwrap();
        let sub = Subdivision::build(&set).unwrap();
        let (cols, rows) = sub.grid_dims();
        let mut seen = vec![false; cols * rows];
        for f in sub.faces() {
            prop_assert!(!f.cells.is_empty());
            for &(c, r) in &f.cells {
                let i = r as usize * cols + c as usize;
                prop_assert!(!seen[i]);
                seen[i] = true;
                prop_assert_eq!(sub.cell_face(c as usize, r as usize), Some(f.id));
            }
        }
        for r in 0..rows {
            for c in 0..cols {
                prop_assert_eq!(seen[r * cols + c], sub.cell_face(c, r).is_some());
            }
        }
        prop_assert_eq!(sub.euler_counts().bounded_faces(), sub.face_count());
        prop_assert!(check_point_location(&set, &sub, 50, 1).ok());
    }

    #[test]
    fn guillotine_rooms_are_rectangles(rooms in 1usize..20, seed in any::<u64>()) {
        let sub = Subdivision::build(&guillotine(rooms, seed).unwrap()).unwrap();
        prop_assert_eq!(sub.face_count(), rooms);
        prop_assert_eq!(sub.rectangular_faces().len(), rooms);
    }
}
