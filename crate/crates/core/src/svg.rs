//! Deterministic SVG rendering of a drawing.
//!
//! One grid unit is 16 px with a one-unit margin. The y-axis is flipped so
//! the picture reads with y pointing up. The root the layout started from is
//! drawn as a square; a four-quadrant drawing also marks the root of `T1` as
//! a diamond. Every other vertex is a circle.

use std::fmt::Write;

use crate::layout::Drawing;

pub const UNIT: i64 = 16;

pub fn render_svg(d: &Drawing) -> String {
    let (min_x, max_x) = bounds(d.coords.iter().map(|p| p.x));
    let (min_y, max_y) = bounds(d.coords.iter().map(|p| p.y));
    let width = (max_x - min_x + 2) * UNIT;
    let height = (max_y - min_y + 2) * UNIT;
    let sx = |x: i64| (x - min_x + 1) * UNIT;
    let sy = |y: i64| (max_y - y + 1) * UNIT;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<g stroke="silver" stroke-width="0.5">"#);
    for x in min_x..=max_x {
        let _ = writeln!(
            out,
            r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
            sx(x),
            sy(max_y),
            sy(min_y)
        );
    }
    for y in min_y..=max_y {
        let _ = writeln!(
            out,
            r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#,
            sy(y),
            sx(min_x),
            sx(max_x)
        );
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r#"<g stroke="black" stroke-width="2">"#);
    for (u, v) in d.tree.edges() {
        let (a, b) = (d.coords[u], d.coords[v]);
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            sx(a.x),
            sy(a.y),
            sx(b.x),
            sy(b.y)
        );
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r#"<g fill="white" stroke="black" stroke-width="1.5">"#);
    for (v, p) in d.coords.iter().enumerate() {
        let (x, y) = (sx(p.x), sy(p.y));
        if v == d.root_used {
            let _ = writeln!(
                out,
                r#"<rect x="{}" y="{}" width="10" height="10"/>"#,
                x - 5,
                y - 5
            );
        } else if Some(v) == d.secondary_root {
            let _ = writeln!(
                out,
                r#"<polygon points="{x},{} {},{y} {x},{} {},{y}"/>"#,
                y - 6,
                x + 6,
                y + 6,
                x - 6
            );
        } else {
            let _ = writeln!(out, r#"<circle cx="{x}" cy="{y}" r="4"/>"#);
        }
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}

fn bounds(values: impl Iterator<Item = i64>) -> (i64, i64) {
    values.fold((i64::MAX, i64::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::gen_path;
    use crate::layout::draw_four_quadrants;

    #[test]
    fn markers_and_viewbox() {
        let d = draw_four_quadrants(&gen_path(3));
        let svg = render_svg(&d);
        // 2 x 3 points plus margins.
        assert!(svg.contains(r#"viewBox="0 0 48 64""#));
        assert_eq!(svg.matches("<rect").count(), 1);
        // r' = r here, so no diamond.
        assert_eq!(svg.matches("<polygon").count(), 0);
        assert_eq!(svg.matches("<circle").count(), 2);
        assert_eq!(svg, render_svg(&d));

        let svg = render_svg(&draw_four_quadrants(&gen_path(15)));
        assert_eq!(svg.matches("<rect").count(), 1);
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert_eq!(svg.matches("<circle").count(), 13);
    }

    #[test]
    fn y_axis_points_up() {
        let d = draw_four_quadrants(&gen_path(2));
        let svg = render_svg(&d);
        // (0,0) is at the bottom, (0,1) one unit above it.
        assert!(svg.contains(r#"<line x1="16" y1="32" x2="16" y2="16"/>"#));
    }
}
