use num::Zero;

use super::{DepthResult, Witness};
use crate::error::Result;
use crate::geom::frame::{to_rational, Flag, QueryFrame};
use crate::geom::scalar::ExactScalar;
use crate::geom::{OrientedHalfspace, Point, PointSet};

/// Minimum closed-halfspace weight over all flags, with the first minimizer.
///
/// Points at the query lie in every closed halfspace containing it and are
/// always counted.
pub fn minimizing_flag(frame: &QueryFrame, weights: &[ExactScalar]) -> (ExactScalar, Flag) {
    let mut best: Option<(ExactScalar, Flag)> = None;
    for flag in frame.flags() {
        let mut total = ExactScalar::zero();
        for (x, w) in frame.dirs().iter().zip(weights) {
            if flag.side(x) != std::cmp::Ordering::Less {
                total += w;
            }
        }
        if best.as_ref().map_or(true, |(b, _)| total < *b) {
            best = Some((total, flag));
        }
    }
    best.expect("flags are never empty")
}

/// Weighted Tukey depth of the query of `frame`.
pub fn tukey_value(frame: &QueryFrame, weights: &[ExactScalar]) -> ExactScalar {
    minimizing_flag(frame, weights).0
}

fn tukey(s: &PointSet, q: &Point, weights: Vec<ExactScalar>) -> Result<DepthResult> {
    s.check_query(q)?;
    let frame = QueryFrame::new(s.points(), q);
    let (value, flag) = minimizing_flag(&frame, &weights);
    let h = OrientedHalfspace::through(q, to_rational(&flag.normal(frame.dirs())))?;
    Ok(DepthResult::exact(value, Some(Witness::Halfspace(h))))
}

/// Tukey depth: the minimum number of points of `s` in a closed halfspace
/// containing `q`. Weights, if present, are ignored.
pub fn tukey_depth(s: &PointSet, q: &Point) -> Result<DepthResult> {
    let ones = vec![ExactScalar::from_integer(1.into()); s.len()];
    tukey(s, q, ones)
}

/// Weighted Tukey depth; unweighted sets use unit weights.
pub fn tukey_depth_weighted(s: &PointSet, q: &Point) -> Result<DepthResult> {
    let w = (0..s.len()).map(|i| s.weight(i)).collect();
    tukey(s, q, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::scalar::{int, ratio};
    use crate::geom::{halfspace_count, Point};

    fn p1(x: ExactScalar) -> Point {
        Point::new(vec![x])
    }

    #[test]
    fn one_dimensional() {
        let s = PointSet::from_ints(1, &[&[0], &[1], &[2], &[3], &[4]]).unwrap();
        assert_eq!(tukey_depth(&s, &p1(ratio(3, 2))).unwrap().value, int(2));
        assert_eq!(tukey_depth(&s, &p1(int(2))).unwrap().value, int(3));
        assert_eq!(tukey_depth(&s, &p1(int(7))).unwrap().value, int(0));
    }

    #[test]
    fn square_and_witness() {
        let s = PointSet::from_ints(2, &[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]).unwrap();
        let q = Point::from_ints(&[1, 1]);
        let r = tukey_depth(&s, &q).unwrap();
        assert_eq!(r.value, int(2));
        let Some(Witness::Halfspace(h)) = r.witness else {
            panic!()
        };
        assert!(h.contains(&q));
        assert_eq!(halfspace_count(&s, &h).unwrap(), int(2));
        assert_eq!(
            tukey_depth(&s, &Point::from_ints(&[5, 5])).unwrap().value,
            int(0)
        );
    }

    #[test]
    fn weighted() {
        let s = PointSet::weighted(
            1,
            vec![p1(int(0)), p1(int(1)), p1(int(2))],
            vec![ratio(1, 2), int(2), ratio(1, 2)],
        )
        .unwrap();
        assert_eq!(
            tukey_depth_weighted(&s, &p1(int(1))).unwrap().value,
            ratio(5, 2)
        );
        let z = s.reweighted(vec![int(0); 3]).unwrap();
        assert_eq!(tukey_depth_weighted(&z, &p1(int(1))).unwrap().value, int(0));
    }

    #[test]
    fn three_dimensional_simplex() {
        let s = PointSet::from_ints(3, &[&[0, 0, 0], &[4, 0, 0], &[0, 4, 0], &[0, 0, 4]]).unwrap();
        assert_eq!(
            tukey_depth(&s, &Point::from_ints(&[1, 1, 1]))
                .unwrap()
                .value,
            int(1)
        );
        assert_eq!(
            tukey_depth(&s, &Point::from_ints(&[3, 3, 3]))
                .unwrap()
                .value,
            int(0)
        );
        assert_eq!(
            tukey_depth(&s, &Point::from_ints(&[0, 0, 0]))
                .unwrap()
                .value,
            int(1)
        );
    }
}
