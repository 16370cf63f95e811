//! Deterministic ASCII and SVG renderings of diagrams.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{CellCoord, GridDiagram, LatticePoint};
use crate::polyomino::trace_perimeter;
use crate::validation::validate_venn;

/// Pixels per cell side.
pub const CELL_PX: f64 = 32.0;
/// Blank border around the drawing, in pixels.
pub const MARGIN_PX: f64 = 16.0;
/// Curve `i` is drawn inset by `INSET_STEP * (i + 1)` cell units.
pub const INSET_STEP: f64 = 0.06;
pub const PALETTE: [&str; 8] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999",
];

/// Grid of hex masks, top row first. Tokens are zero-padded to a common
/// width; empty cells are dots of the same width.
pub fn render_ascii(d: &GridDiagram) -> String {
    let Some(b) = d.bounds() else {
        return String::new();
    };
    let width = d
        .iter()
        .map(|(_, m)| format!("{:x}", m.bits()).len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for y in (b.min_y..=b.max_y).rev() {
        let row: Vec<String> = (b.min_x..=b.max_x)
            .map(|x| match d.get(CellCoord::new(x, y)) {
                Some(m) => format!("{:0width$x}", m.bits()),
                None => ".".repeat(width),
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Offsets each vertex of a counterclockwise orthogonal path toward the
/// interior by `by` units.
fn inset(points: &[LatticePoint], by: f64) -> Vec<(f64, f64)> {
    let len = points.len();
    let dir = |a: LatticePoint, b: LatticePoint| ((b.x - a.x) as f64, (b.y - a.y) as f64);
    (0..len)
        .map(|i| {
            let prev = points[(i + len - 1) % len];
            let here = points[i];
            let next = points[(i + 1) % len];
            let (ax, ay) = dir(prev, here);
            let (bx, by_) = dir(here, next);
            // left normals point inward on a counterclockwise path
            let (n1x, n1y) = (-ay, ax);
            let (n2x, n2y) = (-by_, bx);
            let (ox, oy) = if (n1x, n1y) == (n2x, n2y) {
                (n1x, n1y)
            } else {
                (n1x + n2x, n1y + n2y)
            };
            (here.x as f64 + by * ox, here.y as f64 + by * oy)
        })
        .collect()
}

/// One outlined path per curve over the occupied cells. Fails with the
/// first failing validity check if the diagram is not a valid Venn diagram.
pub fn render_svg(d: &GridDiagram) -> Result<String> {
    let report = validate_venn(d);
    if let Some(name) = report.first_failure() {
        return Err(Error::InvalidDiagram(name));
    }
    let b = d.bounds().ok_or(Error::EmptyDiagram)?;
    let px = |x: f64| MARGIN_PX + (x - b.min_x as f64) * CELL_PX;
    let py = |y: f64| MARGIN_PX + ((b.max_y + 1) as f64 - y) * CELL_PX;
    let width = 2.0 * MARGIN_PX + b.width() as f64 * CELL_PX;
    let height = 2.0 * MARGIN_PX + b.height() as f64 * CELL_PX;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    )
    .unwrap();
    writeln!(out, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##).unwrap();
    writeln!(out, r##"<g fill="#f4f4f4" stroke="#d0d0d0" stroke-width="0.5">"##).unwrap();
    for (c, m) in d.iter() {
        writeln!(
            out,
            r#"<rect x="{:.2}" y="{:.2}" width="{CELL_PX:.0}" height="{CELL_PX:.0}"><title>{m}</title></rect>"#,
            px(c.x as f64),
            py((c.y + 1) as f64),
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    for i in 0..d.n() {
        let perimeter = trace_perimeter(&d.curve_cells(i)?)?;
        let points = inset(perimeter.vertices(), INSET_STEP * (i + 1) as f64);
        let mut path = String::new();
        for (k, (x, y)) in points.iter().enumerate() {
            let cmd = if k == 0 { 'M' } else { 'L' };
            write!(path, "{cmd}{:.2} {:.2} ", px(*x), py(*y)).unwrap();
        }
        path.push('Z');
        writeln!(
            out,
            r#"<path data-curve="{}" d="{path}" fill="none" stroke="{}" stroke-width="1.5"/>"#,
            char::from(b'A' + i as u8),
            PALETTE[i as usize % PALETTE.len()],
        )
        .unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::{generate, Method};
    use crate::model::SubsetMask;

    fn row() -> GridDiagram {
        GridDiagram::from_cells(
            2,
            [(0, 1), (1, 3), (2, 2)].map(|(x, b)| (CellCoord::new(x, 0), SubsetMask::from_bits(b))),
        )
        .unwrap()
    }

    #[test]
    fn ascii_examples() {
        assert_eq!(render_ascii(&generate(2, Method::ScdAigner).unwrap()), "1\n3\n2\n");
        let one = GridDiagram::from_cells(5, [(CellCoord::ORIGIN, SubsetMask::full(5))]).unwrap();
        assert_eq!(render_ascii(&one), "1f\n");
        assert_eq!(render_ascii(&GridDiagram::new(3).unwrap()), "");
    }

    #[test]
    fn ascii_pads_to_common_width() {
        let d = generate(5, Method::ScdAigner).unwrap();
        let text = render_ascii(&d);
        let (w, h) = d.bounding_box().unwrap();
        assert_eq!(text.lines().count(), h as usize);
        for line in text.lines() {
            assert_eq!(line.split(' ').count(), w as usize);
            assert!(line.split(' ').all(|t| t.len() == 2));
        }
    }

    #[test]
    fn svg_row_paths() {
        let svg = render_svg(&row()).unwrap();
        let paths: Vec<&str> = svg.lines().filter(|l| l.starts_with("<path")).collect();
        assert_eq!(paths.len(), 2);
        // domino: six unit edges, so one move and five line commands
        assert_eq!(paths[0].matches('M').count(), 1);
        assert_eq!(paths[0].matches('L').count(), 5);
        // the first vertex of curve A is (0,0) inset by 0.06 cells
        assert!(paths[0].contains(r#"d="M17.92 46.08 "#), "{}", paths[0]);
    }

    #[test]
    fn svg_canvas_size() {
        let svg = render_svg(&generate(3, Method::ScdAigner).unwrap()).unwrap();
        assert!(svg.starts_with(r#"<svg xmlns="http://www.w3.org/2000/svg" width="128" height="192""#));
        assert_eq!(svg.matches("<path").count(), 3);
    }

    #[test]
    fn svg_rejects_invalid() {
        let mut d = GridDiagram::new(1).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                if (x, y) != (1, 1) {
                    d.insert(CellCoord::new(x, y), SubsetMask::from_bits(1)).unwrap();
                }
            }
        }
        assert_eq!(render_svg(&d), Err(Error::InvalidDiagram("empty_region_connected")));
    }

    #[test]
    fn inset_moves_corners_inward() {
        let square = [(0, 0), (1, 0), (1, 1), (0, 1)].map(|(x, y)| LatticePoint::new(x, y));
        let pts = inset(&square, 0.25);
        assert_eq!(pts, vec![(0.25, 0.25), (0.75, 0.25), (0.75, 0.75), (0.25, 0.75)]);
        let bar = [(0, 0), (1, 0), (2, 0), (2, 1), (1, 1), (0, 1)].map(|(x, y)| LatticePoint::new(x, y));
        assert_eq!(inset(&bar, 0.25)[1], (1.0, 0.25));
    }
}
