//! SVG 1.1 rendering of subdivisions with an optional solution overlay.

use std::collections::{HashMap, HashSet};
use std::fmt::Write;

use crate::geometry::{FaceClass, FaceId, Point, Subdivision};

/// Points and faces to highlight.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Overlay {
    pub points: Vec<Point>,
    pub faces: Vec<FaceId>,
}

fn fill(class: FaceClass) -> &'static str {
    match class {
        FaceClass::Generic => "#dce6f2",
        FaceClass::Variable => "#cfe3ff",
        FaceClass::Clause => "#ffe0b3",
        FaceClass::Outer => "#eeeeee",
    }
}

fn class_name(class: FaceClass) -> &'static str {
    match class {
        FaceClass::Generic => "generic",
        FaceClass::Variable => "variable",
        FaceClass::Clause => "clause",
        FaceClass::Outer => "outer",
    }
}

/// Closed boundary loops of face `f` in grid-index coordinates, each running
/// with the face on its left.
fn boundary_loops(sub: &Subdivision, f: FaceId) -> Vec<Vec<(usize, usize)>> {
    let (cols, rows) = sub.grid_dims();
    let inside = |c: isize, r: isize| {
        c >= 0 && r >= 0 && (c as usize) < cols && (r as usize) < rows && sub.cell_face(c as usize, r as usize) == Some(f)
    };
    let mut next: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
    let mut edge = |a: (usize, usize), b: (usize, usize)| next.entry(a).or_default().push(b);
    for &(c, r) in &sub.face(f).cells {
        let (c, r) = (c as usize, r as usize);
        let (ci, ri) = (c as isize, r as isize);
        if !inside(ci, ri - 1) {
            edge((c, r), (c + 1, r));
        }
        if !inside(ci + 1, ri) {
            edge((c + 1, r), (c + 1, r + 1));
        }
        if !inside(ci, ri + 1) {
            edge((c + 1, r + 1), (c, r + 1));
        }
        if !inside(ci - 1, ri) {
            edge((c, r + 1), (c, r));
        }
    }
    let mut starts: Vec<(usize, usize)> = next.keys().copied().collect();
    starts.sort_unstable();
    let mut loops = Vec::new();
    for s in starts {
        while next.get(&s).is_some_and(|v| !v.is_empty()) {
            let mut pts = vec![s];
            let mut cur = s;
            loop {
                let nxt = next.get_mut(&cur).and_then(Vec::pop).expect("closed boundary");
                if nxt == s {
                    break;
                }
                pts.push(nxt);
                cur = nxt;
            }
            loops.push(simplify(pts));
        }
    }
    loops
}

/// Drops points in the middle of straight runs.
fn simplify(pts: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    let n = pts.len();
    (0..n)
        .filter(|&i| {
            let (p, q, r) = (pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]);
            !((p.0 == q.0 && q.0 == r.0) || (p.1 == q.1 && q.1 == r.1))
        })
        .map(|i| pts[i])
        .collect()
}

pub fn render_svg(sub: &Subdivision, overlay: &Overlay) -> String {
    let (xs, ys) = (sub.xs(), sub.ys());
    let (x0, x1) = (xs[0], *xs.last().expect("non-empty grid"));
    let (y0, y1) = (ys[0], *ys.last().expect("non-empty grid"));
    let span = (x1 - x0).max(y1 - y0).max(1) as f64;
    let margin = span * 0.03;
    let stroke = span / 400.0;
    let radius = span / 120.0;
    // flip y so that the picture is upright
    let sy = |y: i64| (y1 + y0 - y) as f64;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" width=\"800\" height=\"{:.0}\">",
        x0 as f64 - margin,
        y0 as f64 - margin,
        (x1 - x0) as f64 + 2.0 * margin,
        (y1 - y0) as f64 + 2.0 * margin,
        800.0 * ((y1 - y0) as f64 + 2.0 * margin) / ((x1 - x0) as f64 + 2.0 * margin)
    );
    let selected: HashSet<FaceId> = overlay.faces.iter().copied().collect();
    for face in sub.faces() {
        let mut d = String::new();
        for lp in boundary_loops(sub, face.id) {
            for (i, &(c, r)) in lp.iter().enumerate() {
                let _ = write!(d, "{}{} {} ", if i == 0 { "M" } else { "L" }, xs[c], sy(ys[r]));
            }
            d.push_str("Z ");
        }
        let (cls, color) = if selected.contains(&face.id) {
            (format!("face {} selected", class_name(face.class)), "#e4572e")
        } else {
            (format!("face {}", class_name(face.class)), fill(face.class))
        };
        let _ = writeln!(
            out,
            "  <path class=\"{cls}\" data-face=\"{}\" fill=\"{color}\" fill-rule=\"evenodd\" stroke=\"none\" d=\"{}\"/>",
            face.id,
            d.trim_end()
        );
    }
    // unit blocked edges of the grid, drawn as strokes
    let (cols, rows) = sub.grid_dims();
    for r in 0..rows {
        for c in 0..=cols {
            if sub.is_blocked_v(c, r) {
                let _ = writeln!(
                    out,
                    "  <line class=\"segment\" x1=\"{x}\" y1=\"{}\" x2=\"{x}\" y2=\"{}\" stroke=\"#222\" stroke-width=\"{stroke}\"/>",
                    sy(ys[r]),
                    sy(ys[r + 1]),
                    x = xs[c]
                );
            }
        }
    }
    for r in 0..=rows {
        for c in 0..cols {
            if sub.is_blocked_h(c, r) {
                let _ = writeln!(
                    out,
                    "  <line class=\"segment\" x1=\"{}\" y1=\"{y}\" x2=\"{}\" y2=\"{y}\" stroke=\"#222\" stroke-width=\"{stroke}\"/>",
                    xs[c],
                    xs[c + 1],
                    y = sy(ys[r])
                );
            }
        }
    }
    for p in &overlay.points {
        let _ = writeln!(
            out,
            "  <circle class=\"point\" cx=\"{}\" cy=\"{}\" r=\"{radius}\" fill=\"#c0392b\"/>",
            p.x,
            sy(p.y)
        );
    }
    out.push_str("</svg>\n");
    out
}
