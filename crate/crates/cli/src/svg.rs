//! Static SVG drawing of an arrangement and its nested depth regions.
//! Layout uses floats; nothing here feeds back into exact results.

use std::fmt::Write;

use combdepth::geom::hull::convex_hull;
use combdepth::geom::scalar::to_f64;
use combdepth::geom::Point;
use combdepth::regions::FeatureDepths;

const SIZE: f64 = 400.0;
const MARGIN: f64 = 20.0;

struct View {
    min: [f64; 2],
    scale: f64,
}

impl View {
    fn new(points: &[[f64; 2]]) -> View {
        let mut min = [f64::INFINITY; 2];
        let mut max = [f64::NEG_INFINITY; 2];
        for p in points {
            for k in 0..2 {
                min[k] = min[k].min(p[k]);
                max[k] = max[k].max(p[k]);
            }
        }
        if !min[0].is_finite() {
            min = [0.0, 0.0];
            max = [1.0, 1.0];
        }
        let span = (max[0] - min[0]).max(max[1] - min[1]).max(1e-9);
        View {
            min,
            scale: (SIZE - 2.0 * MARGIN) / span,
        }
    }

    fn map(&self, p: [f64; 2]) -> (f64, f64) {
        (
            MARGIN + (p[0] - self.min[0]) * self.scale,
            SIZE - MARGIN - (p[1] - self.min[1]) * self.scale,
        )
    }
}

fn coords(p: &Point) -> [f64; 2] {
    let x = to_f64(p.coord(0));
    let y = if p.dim() > 1 { to_f64(p.coord(1)) } else { 0.0 };
    [x, y]
}

fn region_hull(vertices: Vec<Point>) -> Vec<Point> {
    if vertices.first().map_or(true, |p| p.dim() == 2) {
        return convex_hull(&vertices);
    }
    let mut h: Vec<Point> = vertices
        .iter()
        .min()
        .into_iter()
        .chain(vertices.iter().max())
        .cloned()
        .collect();
    h.dedup();
    h
}

/// Arrangement lines, regions `D(α)` shaded darker with `α`, and the data
/// points on top.
pub fn render(fd: &FeatureDepths, data: &[Point]) -> String {
    let verts: Vec<[f64; 2]> = fd.arrangement.vertices().iter().map(coords).collect();
    let mut all = verts.clone();
    all.extend(data.iter().map(coords));
    let view = View::new(&all);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(out, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>");
    let lo = [view.min[0] - 1e3, view.min[1] - 1e3];
    for l in fd.arrangement.lines() {
        let (a, b, c) = (to_f64(&l.a), to_f64(&l.b), to_f64(&l.c));
        let norm = a * a + b * b;
        let base = [a * c / norm, b * c / norm];
        let dir = [-b, a];
        let t = (lo[0].abs() + lo[1].abs() + 2e3) / norm.sqrt();
        let (x1, y1) = view.map([base[0] - t * dir[0], base[1] - t * dir[1]]);
        let (x2, y2) = view.map([base[0] + t * dir[0], base[1] + t * dir[1]]);
        let _ = writeln!(
            out,
            "<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"#bbb\" stroke-width=\"0.5\"/>"
        );
    }
    let values = fd.positive_values();
    let levels = values.len().max(1) as f64;
    for (i, alpha) in values.iter().enumerate() {
        let hull = region_hull(fd.vertices_at(alpha));
        let opacity = 0.15 + 0.6 * (i as f64 + 1.0) / levels;
        let pts: Vec<String> = hull
            .iter()
            .map(|p| {
                let (x, y) = view.map(coords(p));
                format!("{x:.2},{y:.2}")
            })
            .collect();
        match pts.len() {
            0 => {}
            1 => {
                let (x, y) = view.map(coords(&hull[0]));
                let _ = writeln!(out, "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"4\" fill=\"#1f4e9c\" fill-opacity=\"{opacity:.2}\"/>");
            }
            _ => {
                let _ = writeln!(
                    out,
                    "<polygon points=\"{}\" fill=\"#1f4e9c\" fill-opacity=\"{opacity:.2}\" stroke=\"#1f4e9c\" stroke-width=\"1\"/>",
                    pts.join(" ")
                );
            }
        }
    }
    for p in data {
        let (x, y) = view.map(coords(p));
        let _ = writeln!(
            out,
            "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"2.5\" fill=\"black\"/>"
        );
    }
    out.push_str("</svg>\n");
    out
}
