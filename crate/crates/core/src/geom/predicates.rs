//! Exact orientation, containment and position predicates.

use std::cmp::Ordering;

use num::{BigInt, Signed, Zero};

use super::frame::{self, cross2, dot, QueryFrame};
use super::lp;
use super::point::{Point, PointSet};
use super::scalar::ExactScalar;
use crate::error::{DepthError, Result};

/// Determinant of a square rational matrix by fraction-free elimination.
pub fn determinant(mut m: Vec<Vec<ExactScalar>>) -> ExactScalar {
    let n = m.len();
    let mut det = ExactScalar::from_integer(BigInt::from(1));
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return ExactScalar::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

fn signum(x: &ExactScalar) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Orientation of a simplex of `d + 1` points in dimension `d`: the sign of
/// `det(p1 - p0, ..., pd - p0)`.
pub fn orient(simplex: &[Point]) -> Result<i8> {
    let Some(first) = simplex.first() else {
        return Err(DepthError::DimensionMismatch {
            expected: 1,
            found: 0,
        });
    };
    let d = first.dim();
    if simplex.len() != d + 1 {
        return Err(DepthError::DimensionMismatch {
            expected: d + 1,
            found: simplex.len(),
        });
    }
    for p in simplex {
        p.check_dim(d)?;
    }
    let rows = simplex[1..].iter().map(|p| p.sub(first)).collect();
    Ok(signum(&determinant(rows)))
}

/// Closed containment of `q` in the hull of 1..=d+1 vertices; degenerate
/// simplices are allowed.
pub fn simplex_contains(q: &Point, vertices: &[Point]) -> Result<bool> {
    let d = q.dim();
    if vertices.is_empty() || vertices.len() > d + 1 {
        return Err(DepthError::DimensionMismatch {
            expected: d + 1,
            found: vertices.len(),
        });
    }
    for v in vertices {
        v.check_dim(d)?;
    }
    let frame = QueryFrame::new(vertices, q);
    let all: Vec<usize> = (0..vertices.len()).collect();
    Ok(frame.contains(&all))
}

/// Strategy for [`in_convex_hull_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HullMethod {
    /// No perturbed halfspace through `q` strictly separates all points.
    Sweep,
    /// Some subset of at most `d + 1` points contains `q`.
    Caratheodory,
    /// Exact linear feasibility of the barycentric system.
    LinearProgram,
}

/// Closed convex hull membership. `conv(∅) = ∅`.
pub fn in_convex_hull(q: &Point, s: &PointSet) -> Result<bool> {
    in_convex_hull_with(q, s, HullMethod::Sweep)
}

pub fn in_convex_hull_with(q: &Point, s: &PointSet, method: HullMethod) -> Result<bool> {
    s.check_query(q)?;
    if s.is_empty() {
        return Ok(false);
    }
    Ok(match method {
        HullMethod::Sweep => {
            let frame = QueryFrame::new(s.points(), q);
            hull_contains_query(&frame)
        }
        HullMethod::Caratheodory => {
            let frame = QueryFrame::new(s.points(), q);
            let d = s.dim();
            let n = s.len();
            let mut found = false;
            for_each_subset_up_to(n, d + 1, |idx| {
                if frame.contains(idx) {
                    found = true;
                }
                found
            });
            found
        }
        HullMethod::LinearProgram => {
            let refs: Vec<&Point> = s.points().iter().collect();
            lp::in_hull(&refs, q)
        }
    })
}

/// `q ∈ conv` of every point in the frame.
pub fn hull_contains_query(frame: &QueryFrame) -> bool {
    if frame.is_empty() {
        return false;
    }
    if (0..frame.len()).any(|i| frame.is_at_query(i)) {
        return true;
    }
    !frame
        .flags()
        .iter()
        .any(|f| frame.dirs().iter().all(|x| f.side(x) == Ordering::Greater))
}

/// Visits every index subset of `0..n` with `1..=max_size` elements, in
/// order of size and then lexicographically. Stops when `visit` returns true.
pub fn for_each_subset_up_to(n: usize, max_size: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    fn rec(
        start: usize,
        n: usize,
        size: usize,
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == size {
            return visit(cur);
        }
        for i in start..n {
            cur.push(i);
            if rec(i + 1, n, size, cur, visit) {
                return true;
            }
            cur.pop();
        }
        false
    }
    let mut cur = Vec::new();
    for size in 1..=max_size.min(n) {
        if rec(0, n, size, &mut cur, &mut visit) {
            return;
        }
    }
}

/// No hyperplane contains `q` together with `d` points of `s`.
pub fn is_general_position_rel(s: &PointSet, q: &Point) -> Result<bool> {
    s.check_query(q)?;
    let frame = QueryFrame::new(s.points(), q);
    Ok(frame_in_general_position(&frame))
}

pub fn frame_in_general_position(frame: &QueryFrame) -> bool {
    let n = frame.len();
    let x = frame.dirs();
    match frame.dim() {
        1 => (0..n).all(|i| !frame.is_at_query(i)),
        2 => {
            for i in 0..n {
                for j in i + 1..n {
                    if cross2(&x[i], &x[j]).is_zero() {
                        return false;
                    }
                }
            }
            true
        }
        _ => {
            for i in 0..n {
                for j in i + 1..n {
                    let c = frame::cross(&x[i], &x[j]);
                    for k in j + 1..n {
                        if dot(&c, &x[k]).is_zero() {
                            return false;
                        }
                    }
                }
            }
            true
        }
    }
}

/// Groups of point indices sorted counter-clockwise by the direction of
/// `s - q`, starting from the positive x-axis. Points in the same direction
/// share a group.
pub fn angular_order(s: &PointSet, q: &Point) -> Result<Vec<Vec<usize>>> {
    if s.dim() != 2 {
        return Err(DepthError::UnsupportedDimension(s.dim()));
    }
    s.check_query(q)?;
    let frame = QueryFrame::new(s.points(), q);
    if let Some(i) = (0..frame.len()).find(|&i| frame.is_at_query(i)) {
        return Err(DepthError::CoincidentPoint(i));
    }
    let mut idx: Vec<usize> = (0..frame.len()).collect();
    idx.sort_by(|&a, &b| compare_angle(frame.dir(a), frame.dir(b)).then(a.cmp(&b)));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in idx {
        match groups.last_mut() {
            Some(g) if compare_angle(frame.dir(g[0]), frame.dir(i)) == Ordering::Equal => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    Ok(groups)
}

fn upper_half(v: &[BigInt]) -> bool {
    v[1].is_positive() || (v[1].is_zero() && v[0].is_positive())
}

/// Compares the polar angles of two nonzero integer vectors in `[0, 2π)`.
pub fn compare_angle(a: &[BigInt], b: &[BigInt]) -> Ordering {
    let (ha, hb) = (upper_half(a), upper_half(b));
    if ha != hb {
        return if ha {
            Ordering::Less
        } else {
            Ordering::Greater
        };
    }
    let c = cross2(a, b);
    if c.is_positive() {
        Ordering::Less
    } else if c.is_negative() {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}
