use super::DepthResult;
use crate::error::{DepthError, Result};
use crate::geom::frame::QueryFrame;
use crate::geom::hull::{convex_hull, on_hull_boundary};
use crate::geom::predicates::hull_contains_query;
use crate::geom::scalar::int;
use crate::geom::{Point, PointSet};

/// Convex-hull peeling depth: the number of hull layers that must be
/// stripped before the hull of the remaining points misses `q`.
pub fn peeling_depth(s: &PointSet, q: &Point) -> Result<DepthResult> {
    s.check_query(q)?;
    if s.dim() > 2 {
        return Err(DepthError::UnsupportedDimension(s.dim()));
    }
    let mut rem: Vec<Point> = s.points().to_vec();
    let mut depth = 0i64;
    while !rem.is_empty() && hull_contains_query(&QueryFrame::new(&rem, q)) {
        depth += 1;
        let on_boundary: Vec<bool> = if s.dim() == 1 {
            let lo = rem.iter().min().unwrap().clone();
            let hi = rem.iter().max().unwrap().clone();
            rem.iter().map(|p| *p == lo || *p == hi).collect()
        } else {
            let hull = convex_hull(&rem);
            rem.iter().map(|p| on_hull_boundary(&hull, p)).collect()
        };
        rem = rem
            .into_iter()
            .zip(on_boundary)
            .filter(|(_, b)| !b)
            .map(|(p, _)| p)
            .collect();
    }
    Ok(DepthResult::exact(int(depth), None))
}
