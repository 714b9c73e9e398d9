use super::DepthResult;
use crate::error::Result;
use crate::geom::frame::QueryFrame;
use crate::geom::scalar::int;
use crate::geom::{Point, PointSet};

/// Number of `(d+1)`-point index subsets of `s` whose closed hull contains
/// `q`.
pub fn simplicial_depth(s: &PointSet, q: &Point) -> Result<DepthResult> {
    s.check_query(q)?;
    let frame = QueryFrame::new(s.points(), q);
    let k = s.dim() + 1;
    let mut count = 0i64;
    let mut cur = Vec::with_capacity(k);
    visit(&frame, 0, k, &mut cur, &mut count);
    Ok(DepthResult::exact(int(count), None))
}

fn visit(frame: &QueryFrame, start: usize, k: usize, cur: &mut Vec<usize>, count: &mut i64) {
    if cur.len() == k {
        if frame.contains(cur) {
            *count += 1;
        }
        return;
    }
    for i in start..frame.len() {
        cur.push(i);
        visit(frame, i + 1, k, cur, count);
        cur.pop();
    }
}
