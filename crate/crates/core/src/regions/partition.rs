use super::arrangement::Arrangement2D;
use crate::depth::tukey_value;
use crate::error::{DepthError, Result};
use crate::geom::frame::QueryFrame;
use crate::geom::lp::hull_intersection;
use crate::geom::scalar::{int, one, ratio, ExactScalar};
use crate::geom::{Point, PointSet};

/// Vertices of the weighted Tukey median region. The region is the hull of
/// the arrangement vertices of maximal depth.
pub fn tukey_median_vertices(s: &PointSet) -> Vec<Point> {
    let arr = Arrangement2D::build(s);
    let weights: Vec<ExactScalar> = (0..s.len()).map(|i| s.weight(i)).collect();
    let depths: Vec<ExactScalar> = arr
        .vertices()
        .iter()
        .map(|v| tukey_value(&QueryFrame::new(s.points(), v), &weights))
        .collect();
    let best = depths.iter().max().cloned().unwrap_or_else(|| int(0));
    arr.vertices()
        .iter()
        .zip(&depths)
        .filter(|(_, d)| **d == best)
        .map(|(v, _)| v.clone())
        .collect()
}

/// Two weighted parts of `S` whose Tukey median regions share `point`.
/// Each part lists `(index, weight)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MedianPartition {
    pub parts: [Vec<(usize, ExactScalar)>; 2],
    pub point: Point,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MedianPartitionSearch {
    Found(MedianPartition),
    /// Nothing found in the searched space; this is not a proof that no
    /// partition exists.
    NotFound {
        bipartitions: usize,
        fractional: usize,
    },
}

/// Largest set size searched.
pub const PARTITION_CAP: usize = 14;

fn part_set(s: &PointSet, part: &[(usize, ExactScalar)]) -> Result<PointSet> {
    let idx: Vec<usize> = part.iter().map(|(i, _)| *i).collect();
    s.subset(&idx)
        .reweighted(part.iter().map(|(_, w)| w.clone()).collect())
}

fn try_parts(
    s: &PointSet,
    parts: [Vec<(usize, ExactScalar)>; 2],
) -> Result<Option<MedianPartition>> {
    let a = tukey_median_vertices(&part_set(s, &parts[0])?);
    let b = tukey_median_vertices(&part_set(s, &parts[1])?);
    let ra: Vec<&Point> = a.iter().collect();
    let rb: Vec<&Point> = b.iter().collect();
    Ok(hull_intersection(&ra, &rb).map(|point| MedianPartition { parts, point }))
}

/// Searches bipartitions of `S` into nonempty parts whose Tukey median
/// regions intersect, in order of the bitmask of the second part. With
/// `allow_fractional`, also splits one point's unit weight as
/// `(λ, 1 - λ)` for `λ ∈ {1/8, …, 7/8}`.
pub fn find_median_partition(
    s: &PointSet,
    allow_fractional: bool,
) -> Result<MedianPartitionSearch> {
    let n = s.len();
    let d = s.dim();
    if d > 2 {
        return Err(DepthError::UnsupportedDimension(d));
    }
    if n < d + 2 {
        return Err(DepthError::Precondition(format!(
            "need at least {} points, found {n}",
            d + 2
        )));
    }
    if n > PARTITION_CAP {
        return Err(DepthError::CapExceeded {
            what: "find_median_partition",
            size: n,
            cap: PARTITION_CAP,
            hint: "search a smaller subset",
        });
    }
    let mut bipartitions = 0;
    // Index 0 always lies in the first part.
    for mask in 1u32..1 << (n - 1) {
        let second: Vec<(usize, ExactScalar)> = (1..n)
            .filter(|i| mask >> (i - 1) & 1 == 1)
            .map(|i| (i, one()))
            .collect();
        let first: Vec<(usize, ExactScalar)> = (0..n)
            .filter(|&i| i == 0 || mask >> (i - 1) & 1 == 0)
            .map(|i| (i, one()))
            .collect();
        bipartitions += 1;
        if let Some(found) = try_parts(s, [first, second])? {
            return Ok(MedianPartitionSearch::Found(found));
        }
    }
    let mut fractional = 0;
    if allow_fractional {
        for p in 0..n {
            let rest: Vec<usize> = (0..n).filter(|&i| i != p).collect();
            for mask in 0u32..1 << rest.len() {
                for k in 1..8 {
                    let lambda = ratio(k, 8);
                    let mut first = vec![(p, lambda.clone())];
                    let mut second = vec![(p, one() - lambda)];
                    for (j, &i) in rest.iter().enumerate() {
                        if mask >> j & 1 == 1 {
                            second.push((i, one()));
                        } else {
                            first.push((i, one()));
                        }
                    }
                    first.sort();
                    second.sort();
                    fractional += 1;
                    if let Some(found) = try_parts(s, [first, second])? {
                        return Ok(MedianPartitionSearch::Found(found));
                    }
                }
            }
        }
    }
    Ok(MedianPartitionSearch::NotFound {
        bipartitions,
        fractional,
    })
}
