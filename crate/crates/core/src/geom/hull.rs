//! Planar convex hulls by monotone chain, with exact orientation.

use std::cmp::Ordering;

use num::{Signed, Zero};

use super::point::Point;
use super::scalar::ExactScalar;

fn cross(o: &Point, a: &Point, b: &Point) -> ExactScalar {
    (a.coord(0) - o.coord(0)) * (b.coord(1) - o.coord(1))
        - (a.coord(1) - o.coord(1)) * (b.coord(0) - o.coord(0))
}

/// Strict hull vertices in counter-clockwise order, starting from the
/// lexicographically smallest point. Duplicates are dropped; a degenerate
/// input yields one or two vertices.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Whether `p` lies on the boundary of the convex polygon `hull` (as returned
/// by [`convex_hull`]). Degenerate hulls have no interior.
pub fn on_hull_boundary(hull: &[Point], p: &Point) -> bool {
    match hull.len() {
        0 => false,
        1 => &hull[0] == p,
        2 => on_segment(&hull[0], &hull[1], p),
        n => (0..n).any(|i| on_segment(&hull[i], &hull[(i + 1) % n], p)),
    }
}

/// Closed segment membership.
pub fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    if !cross(a, b, p).is_zero() {
        return false;
    }
    let between = |k: usize| {
        let (lo, hi) = match a.coord(k).cmp(b.coord(k)) {
            Ordering::Greater => (b.coord(k), a.coord(k)),
            _ => (a.coord(k), b.coord(k)),
        };
        lo <= p.coord(k) && p.coord(k) <= hi
    };
    between(0) && between(1)
}

/// Twice the signed area of a polygon.
pub fn doubled_area(poly: &[Point]) -> ExactScalar {
    let n = poly.len();
    let mut acc = ExactScalar::zero();
    for i in 0..n {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        acc += a.coord(0) * b.coord(1) - b.coord(0) * a.coord(1);
    }
    acc
}
