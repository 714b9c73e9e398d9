//! Exact phase-one simplex for `A x = b, x >= 0` over the rationals.
//!
//! Bland's rule throughout, so the method terminates without cycling.

use num::{Signed, Zero};

use super::point::Point;
use super::scalar::{one, ExactScalar};

/// Returns a nonnegative solution of `a * x = b`, or `None` if infeasible.
/// `a` is given row-major, `a.len() == b.len()`.
pub fn feasible(a: &[Vec<ExactScalar>], b: &[ExactScalar]) -> Option<Vec<ExactScalar>> {
    let m = a.len();
    if m == 0 {
        return Some(Vec::new());
    }
    let n = a[0].len();
    let width = n + m + 1;
    let rhs = n + m;
    let mut t: Vec<Vec<ExactScalar>> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        debug_assert_eq!(row.len(), n);
        let flip = b[i].is_negative();
        let mut r = vec![ExactScalar::zero(); width];
        for j in 0..n {
            r[j] = if flip {
                -row[j].clone()
            } else {
                row[j].clone()
            };
        }
        r[n + i] = one();
        r[rhs] = if flip { -b[i].clone() } else { b[i].clone() };
        t.push(r);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let cost = |j: usize| j >= n && j < n + m;

    loop {
        // Reduced costs of the phase-one objective (sum of artificials).
        let mut entering = None;
        for j in 0..n + m {
            if basis.contains(&j) {
                continue;
            }
            let mut rc = if cost(j) { one() } else { ExactScalar::zero() };
            for (i, &bj) in basis.iter().enumerate() {
                if cost(bj) && !t[i][j].is_zero() {
                    rc -= &t[i][j];
                }
            }
            if rc.is_negative() {
                entering = Some(j);
                break;
            }
        }
        let Some(col) = entering else { break };

        let mut leave: Option<(usize, ExactScalar)> = None;
        for i in 0..m {
            if t[i][col].is_positive() {
                let ratio = &t[i][rhs] / &t[i][col];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // The phase-one objective is bounded below by zero, so a pivot row
        // always exists.
        let (row, _) = leave?;
        let pivot = t[row][col].clone();
        for v in t[row].iter_mut() {
            *v /= &pivot;
        }
        let pivot_row = t[row].clone();
        for (i, r) in t.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let factor = r[col].clone();
            for (v, p) in r.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        basis[row] = col;
    }

    let mut x = vec![ExactScalar::zero(); n];
    for (i, &bj) in basis.iter().enumerate() {
        if bj >= n {
            if !t[i][rhs].is_zero() {
                return None;
            }
        } else {
            x[bj] = t[i][rhs].clone();
        }
    }
    Some(x)
}

/// Barycentric weights expressing `q` as a convex combination of `points`.
pub fn convex_combination(points: &[&Point], q: &Point) -> Option<Vec<ExactScalar>> {
    if points.is_empty() {
        return None;
    }
    let d = q.dim();
    let mut a = Vec::with_capacity(d + 1);
    let mut b = Vec::with_capacity(d + 1);
    for k in 0..d {
        a.push(points.iter().map(|p| p.coord(k).clone()).collect());
        b.push(q.coord(k).clone());
    }
    a.push(vec![one(); points.len()]);
    b.push(one());
    feasible(&a, &b)
}

/// `q ∈ conv(points)` by linear feasibility.
pub fn in_hull(points: &[&Point], q: &Point) -> bool {
    convex_combination(points, q).is_some()
}

/// `v` is a nonnegative combination of `generators`.
pub fn in_cone(generators: &[Vec<ExactScalar>], v: &[ExactScalar]) -> bool {
    let d = v.len();
    if generators.is_empty() {
        return v.iter().all(|c| c.is_zero());
    }
    let a: Vec<Vec<ExactScalar>> = (0..d)
        .map(|k| generators.iter().map(|g| g[k].clone()).collect())
        .collect();
    feasible(&a, v).is_some()
}

/// A common point of `conv(a)` and `conv(b)`, if the hulls meet.
pub fn hull_intersection(a: &[&Point], b: &[&Point]) -> Option<Point> {
    if a.is_empty() || b.is_empty() {
        return None;
    }
    let d = a[0].dim();
    let (na, nb) = (a.len(), b.len());
    let mut rows = Vec::with_capacity(d + 2);
    let mut rhs = Vec::with_capacity(d + 2);
    for k in 0..d {
        let mut r: Vec<ExactScalar> = a.iter().map(|p| p.coord(k).clone()).collect();
        r.extend(b.iter().map(|p| -p.coord(k).clone()));
        rows.push(r);
        rhs.push(ExactScalar::zero());
    }
    let mut ra = vec![one(); na];
    ra.extend(vec![ExactScalar::zero(); nb]);
    rows.push(ra);
    rhs.push(one());
    let mut rb = vec![ExactScalar::zero(); na];
    rb.extend(vec![one(); nb]);
    rows.push(rb);
    rhs.push(one());
    let x = feasible(&rows, &rhs)?;
    let mut coords = vec![ExactScalar::zero(); d];
    for (lambda, p) in x[..na].iter().zip(a) {
        for (c, pc) in coords.iter_mut().zip(p.coords()) {
            *c += lambda * pc;
        }
    }
    Some(Point::new(coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::scalar::{int, ratio};

    #[test]
    fn simple_systems() {
        // x + y = 1, x - y = 0  ->  (1/2, 1/2)
        let a = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        let b = vec![int(1), int(0)];
        assert_eq!(feasible(&a, &b).unwrap(), vec![ratio(1, 2), ratio(1, 2)]);
        // x = -1 has no nonnegative solution
        assert!(feasible(&[vec![int(1)]], &[int(-1)]).is_none());
        // redundant rows
        let a = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        let b = vec![int(2), int(4)];
        assert!(feasible(&a, &b).is_some());
    }

    #[test]
    fn hull_queries() {
        let pts = [
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[4, 0]),
            Point::from_ints(&[0, 4]),
        ];
        let refs: Vec<&Point> = pts.iter().collect();
        assert!(in_hull(&refs, &Point::from_ints(&[1, 1])));
        assert!(in_hull(&refs, &Point::from_ints(&[2, 2])));
        assert!(!in_hull(&refs, &Point::from_ints(&[3, 3])));
        let seg = [Point::from_ints(&[0, 4]), Point::from_ints(&[4, 0])];
        let seg_refs: Vec<&Point> = seg.iter().collect();
        let other = [Point::from_ints(&[0, 0]), Point::from_ints(&[4, 4])];
        let other_refs: Vec<&Point> = other.iter().collect();
        assert_eq!(
            hull_intersection(&seg_refs, &other_refs),
            Some(Point::from_ints(&[2, 2]))
        );
    }
}
