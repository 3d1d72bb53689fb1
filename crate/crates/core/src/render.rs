//! Static drawings of path objects: a character grid and a small SVG.
//!
//! Both outputs depend only on the object, so identical inputs give
//! byte-identical drawings. Sequences are drawn as point plots of
//! `(index, value)` joined left to right.

use std::fmt::Write as _;

use crate::bijection::schroder;
use crate::paths::PathObject;

/// Lattice points of the drawing, in path order, plus an optional caption.
fn geometry(obj: &PathObject) -> (Vec<(i64, i64)>, Option<String>) {
    match obj {
        PathObject::Schroder(p) => {
            let caption = schroder::heights_of(p).ok().map(|h| format!("heights: {h}"));
            (p.vertices(), caption)
        }
        PathObject::Kimberling(q) => (q.vertices().iter().map(|v| (v.x as i64, v.y as i64)).collect(), None),
        PathObject::Deutsch(p) => (p.vertices(), None),
        PathObject::Ramirez(q) => (q.vertices(), None),
        PathObject::Growth(g) => (index_plot(g.values()), None),
        PathObject::Bounded(u) => (index_plot(u.values()), Some(format!("j={}", u.ambient_j()))),
    }
}

fn index_plot(values: &[u32]) -> Vec<(i64, i64)> {
    values.iter().enumerate().map(|(i, &v)| (i as i64 + 1, v as i64)).collect()
}

fn extent(points: &[(i64, i64)]) -> (i64, i64, i64, i64) {
    let min_x = points.iter().map(|p| p.0).min().unwrap_or(0).min(0);
    let max_x = points.iter().map(|p| p.0).max().unwrap_or(0).max(0);
    let min_y = points.iter().map(|p| p.1).min().unwrap_or(0).min(0);
    let max_y = points.iter().map(|p| p.1).max().unwrap_or(0).max(0);
    (min_x, max_x, min_y, max_y)
}

fn stroke(dx: i64, dy: i64) -> char {
    if dx == 0 {
        '|'
    } else if 2 * dy.abs() < dx.abs() {
        '-'
    } else if dy.abs() > 2 * dx.abs() {
        '|'
    } else if (dx > 0) == (dy > 0) {
        '/'
    } else {
        '\\'
    }
}

/// Character drawing. Every lattice unit spans two cells in each direction:
/// lattice points sit on even cells (`.` for the grid, `o` for path
/// vertices) and segments fill the cells between them.
pub fn ascii(obj: &PathObject) -> String {
    let (points, caption) = geometry(obj);
    let (min_x, max_x, min_y, max_y) = extent(&points);
    let width = (2 * (max_x - min_x) + 1) as usize;
    let height = (2 * (max_y - min_y) + 1) as usize;
    let mut canvas = vec![vec![' '; width]; height];
    let cell = |x: i64, y: i64| ((2 * (max_y - y)) as usize, (2 * (x - min_x)) as usize);
    for x in min_x..=max_x {
        for y in min_y..=max_y {
            let (r, c) = cell(x, y);
            canvas[r][c] = '.';
        }
    }
    for w in points.windows(2) {
        let ((x0, y0), (x1, y1)) = (w[0], w[1]);
        let ch = stroke(x1 - x0, y1 - y0);
        let (c0, r0) = (2 * (x0 - min_x), 2 * (max_y - y0));
        let (c1, r1) = (2 * (x1 - min_x), 2 * (max_y - y1));
        let steps = (c1 - c0).abs().max((r1 - r0).abs());
        for t in 1..steps {
            // nearest cell on the segment, rounding halves away from the start
            let c = c0 + div_round(t * (c1 - c0), steps);
            let r = r0 + div_round(t * (r1 - r0), steps);
            let slot = &mut canvas[r as usize][c as usize];
            if *slot != 'o' {
                *slot = ch;
            }
        }
    }
    for &(x, y) in &points {
        let (r, c) = cell(x, y);
        canvas[r][c] = 'o';
    }
    let mut out = String::new();
    for row in canvas {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    if let Some(c) = caption {
        out.push_str(&c);
        out.push('\n');
    }
    out
}

fn div_round(num: i64, den: i64) -> i64 {
    let q = num.abs() * 2 + den;
    let r = q / (2 * den);
    if num < 0 {
        -r
    } else {
        r
    }
}

const SCALE: i64 = 40;
const MARGIN: i64 = 20;

/// SVG drawing with integer coordinates: one lattice unit is 40 user units.
pub fn svg(obj: &PathObject) -> String {
    let (points, caption) = geometry(obj);
    let (min_x, max_x, min_y, max_y) = extent(&points);
    let w = (max_x - min_x) * SCALE + 2 * MARGIN;
    let h = (max_y - min_y) * SCALE + 2 * MARGIN + if caption.is_some() { MARGIN } else { 0 };
    let px = |x: i64| MARGIN + (x - min_x) * SCALE;
    let py = |y: i64| MARGIN + (max_y - y) * SCALE;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(s, r##"<g stroke="#ccc" stroke-width="1">"##);
    for x in min_x..=max_x {
        let _ = writeln!(s, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, px(x), py(max_y), py(min_y));
    }
    for y in min_y..=max_y {
        let _ = writeln!(s, r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#, py(y), px(min_x), px(max_x));
    }
    s.push_str("</g>\n");
    let coords: Vec<String> = points.iter().map(|&(x, y)| format!("{},{}", px(x), py(y))).collect();
    let _ = writeln!(
        s,
        r##"<polyline fill="none" stroke="#000" stroke-width="3" points="{}"/>"##,
        coords.join(" ")
    );
    for &(x, y) in &points {
        let _ = writeln!(s, r##"<circle cx="{}" cy="{}" r="4" fill="#000"/>"##, px(x), py(y));
    }
    if let Some(c) = caption {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-family="monospace" font-size="14">{}</text>"#,
            MARGIN,
            h - MARGIN / 2,
            c
        );
    }
    s.push_str("</svg>\n");
    s
}
