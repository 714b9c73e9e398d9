use num::Zero;

use super::arrangement::{Arrangement2D, Feature};
use crate::error::{DepthError, Result};
use crate::geom::hull::convex_hull;
use crate::geom::scalar::{format_scalar, int, ExactScalar};
use crate::geom::{Point, PointSet};
use crate::measure::MeasureId;
use crate::par;

/// Depth of a measure on every feature of the arrangement of `S`.
#[derive(Debug, Clone)]
pub struct FeatureDepths {
    pub arrangement: Arrangement2D,
    pub features: Vec<Feature>,
    pub depths: Vec<ExactScalar>,
}

impl FeatureDepths {
    pub fn evaluate(s: &PointSet, measure: MeasureId) -> Result<FeatureDepths> {
        if s.dim() > 2 {
            return Err(DepthError::UnsupportedDimension(s.dim()));
        }
        let arrangement = Arrangement2D::build(s);
        let features = arrangement.features();
        let depths = par::map(&features, |f| measure.eval(s, f.sample()));
        let depths = depths
            .into_iter()
            .enumerate()
            .map(|(i, r)| {
                r.map_err(|e| DepthError::Feature {
                    feature: i,
                    sample: features[i].sample().to_string(),
                    source: Box::new(e),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FeatureDepths {
            arrangement,
            features,
            depths,
        })
    }

    /// `t_α`: the largest feature dimension with depth at least `α`, or -1.
    pub fn dim_at(&self, alpha: &ExactScalar) -> i64 {
        self.features
            .iter()
            .zip(&self.depths)
            .filter(|(_, d)| *d >= alpha)
            .map(|(f, _)| f.dim as i64)
            .max()
            .unwrap_or(-1)
    }

    /// Sorted distinct positive depth values.
    pub fn positive_values(&self) -> Vec<ExactScalar> {
        let mut v: Vec<ExactScalar> = self
            .depths
            .iter()
            .filter(|d| *d > &int(0))
            .cloned()
            .collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn max_depth(&self) -> ExactScalar {
        self.depths.iter().max().cloned().unwrap_or_else(|| int(0))
    }

    /// Vertices of depth at least `α`.
    pub fn vertices_at(&self, alpha: &ExactScalar) -> Vec<Point> {
        let nv = self.arrangement.vertices().len();
        self.arrangement
            .vertices()
            .iter()
            .zip(&self.depths[..nv])
            .filter(|(_, d)| *d >= alpha)
            .map(|(v, _)| v.clone())
            .collect()
    }
}

/// The deepest nonempty region `D(α₀)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MedianRegion {
    pub value: ExactScalar,
    pub dim: i64,
    /// Arrangement vertices of depth `α₀`.
    pub vertices: Vec<Point>,
    /// Their convex hull: a counter-clockwise polygon in 2D, the endpoints
    /// of an interval in 1D.
    pub hull: Vec<Point>,
}

impl MedianRegion {
    fn from_depths(fd: &FeatureDepths) -> MedianRegion {
        let value = fd.max_depth();
        let vertices = fd.vertices_at(&value);
        let hull = if fd.arrangement.dim() == 1 {
            let mut h = Vec::new();
            if let (Some(a), Some(b)) = (vertices.iter().min(), vertices.iter().max()) {
                h.push(a.clone());
                if a != b {
                    h.push(b.clone());
                }
            }
            h
        } else {
            convex_hull(&vertices)
        };
        MedianRegion {
            dim: fd.dim_at(&value),
            value,
            vertices,
            hull,
        }
    }

    pub fn describe(&self) -> String {
        let pts: Vec<String> = self.hull.iter().map(|p| p.to_string()).collect();
        let kind = match (self.dim, self.hull.len()) {
            (_, 0) => "empty",
            (_, 1) => "point",
            (1, 2) => "segment",
            _ => "polygon",
        };
        format!("{kind} {}", pts.join(" "))
    }
}

/// Region dimensions of one measure on one point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionReport {
    pub measure: MeasureId,
    /// Sorted distinct positive depth values attained on features.
    pub depth_values: Vec<ExactScalar>,
    /// The `α` values at which dimensions were taken.
    pub grid: Vec<ExactScalar>,
    /// `t_α` for each grid value.
    pub dims: Vec<i64>,
    /// `Σ_{i=1}^n t_i`, when the grid is `1..=n`.
    pub cascade_sum: Option<i64>,
    pub cascade_integral: ExactScalar,
    pub median_value: ExactScalar,
    pub median_region: MedianRegion,
}

fn unit_grid(s: &PointSet, measure: MeasureId) -> bool {
    measure.is_integral() && !(measure.uses_weights() && s.is_weighted())
}

/// Mass the measure spreads its values over: `w(S)` for weighted measures,
/// `|S|` otherwise.
fn total_mass(s: &PointSet, measure: MeasureId) -> ExactScalar {
    if measure.uses_weights() {
        s.total_weight()
    } else {
        int(s.len() as i64)
    }
}

/// `Σ_j (v_j - v_{j-1}) t_{v_j} - (w - v_m)` over the positive values `v`.
fn integral(fd: &FeatureDepths, values: &[ExactScalar], mass: &ExactScalar) -> ExactScalar {
    let mut acc = ExactScalar::zero();
    let mut prev = int(0);
    for v in values {
        acc += (v - &prev) * int(fd.dim_at(v));
        prev = v.clone();
    }
    acc - (mass - prev)
}

pub fn report_from_depths(
    s: &PointSet,
    measure: MeasureId,
    fd: &FeatureDepths,
    grid: Option<&[ExactScalar]>,
) -> RegionReport {
    let depth_values = fd.positive_values();
    let unit = unit_grid(s, measure);
    let grid: Vec<ExactScalar> = match grid {
        Some(g) => g.to_vec(),
        None if unit => (1..=s.len() as i64).map(int).collect(),
        None => depth_values.clone(),
    };
    let dims: Vec<i64> = grid.iter().map(|a| fd.dim_at(a)).collect();
    let natural = grid.len() == s.len() && grid.iter().zip(1..).all(|(g, i)| *g == int(i));
    let cascade_sum = (unit && natural).then(|| dims.iter().sum());
    RegionReport {
        measure,
        cascade_integral: integral(fd, &depth_values, &total_mass(s, measure)),
        depth_values,
        grid,
        dims,
        cascade_sum,
        median_value: fd.max_depth(),
        median_region: MedianRegion::from_depths(fd),
    }
}

/// Evaluates `measure` on every feature and reports `t_α` on the grid
/// (`1..=n` for integral measures on unweighted sets, else the attained
/// values).
pub fn region_dims(
    s: &PointSet,
    measure: MeasureId,
    grid: Option<&[ExactScalar]>,
) -> Result<RegionReport> {
    let fd = FeatureDepths::evaluate(s, measure)?;
    Ok(report_from_depths(s, measure, &fd, grid))
}

/// Outcome of a cascade check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CascadeSum {
    pub value: i64,
    pub passes: bool,
}

/// `Σ_{i=1}^n t_i` for an integral measure on an unweighted set.
pub fn cascade_sum(s: &PointSet, measure: MeasureId) -> Result<CascadeSum> {
    if !measure.is_integral() {
        return Err(DepthError::Precondition(format!(
            "{measure} is not integral"
        )));
    }
    let fd = FeatureDepths::evaluate(s, measure)?;
    let value: i64 = (1..=s.len() as i64).map(|i| fd.dim_at(&int(i))).sum();
    Ok(CascadeSum {
        value,
        passes: value >= 0,
    })
}

/// `∫_0^{w(S)} t_α dα` for weighted Tukey depth, computed exactly over the
/// attained values.
pub fn cascade_integral(s: &PointSet) -> Result<ExactScalar> {
    let fd = FeatureDepths::evaluate(s, MeasureId::TdWeighted)?;
    Ok(integral(&fd, &fd.positive_values(), &s.total_weight()))
}

/// `D(α₀)`, the deepest nonempty region.
pub fn median_region(s: &PointSet, measure: MeasureId) -> Result<MedianRegion> {
    if s.is_empty() {
        return Err(DepthError::Empty);
    }
    Ok(MedianRegion::from_depths(&FeatureDepths::evaluate(
        s, measure,
    )?))
}

impl std::fmt::Display for RegionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let vals: Vec<String> = self.depth_values.iter().map(format_scalar).collect();
        writeln!(f, "measure {}", self.measure)?;
        writeln!(f, "values {}", vals.join(" "))?;
        for (a, t) in self.grid.iter().zip(&self.dims) {
            writeln!(f, "t {} {}", format_scalar(a), t)?;
        }
        if let Some(sum) = self.cascade_sum {
            writeln!(f, "cascade_sum {sum}")?;
        }
        writeln!(
            f,
            "cascade_integral {}",
            format_scalar(&self.cascade_integral)
        )?;
        writeln!(f, "median_value {}", format_scalar(&self.median_value))?;
        write!(f, "median_region {}", self.median_region.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::scalar::ratio;

    fn line5() -> PointSet {
        PointSet::from_ints(1, &[&[0], &[1], &[2], &[3], &[4]]).unwrap()
    }

    #[test]
    fn walkthrough_1d() {
        let r = region_dims(&line5(), MeasureId::Td, None).unwrap();
        assert_eq!(r.dims, vec![1, 1, 0, -1, -1]);
        assert_eq!(r.cascade_sum, Some(0));
        assert_eq!(r.cascade_integral, int(0));
        assert_eq!(r.median_value, int(3));
        assert_eq!(r.median_region.hull, vec![Point::from_ints(&[2])]);
    }

    #[test]
    fn triangle() {
        let s = PointSet::from_ints(2, &[&[0, 0], &[4, 0], &[0, 4]]).unwrap();
        let r = region_dims(&s, MeasureId::Td, None).unwrap();
        assert_eq!(r.dims, vec![2, -1, -1]);
        assert_eq!(cascade_sum(&s, MeasureId::Td).unwrap().value, 0);
        assert_eq!(r.median_region.hull.len(), 3);
    }

    #[test]
    fn single_point() {
        let s = PointSet::from_ints(2, &[&[1, 1]]).unwrap();
        assert_eq!(cascade_sum(&s, MeasureId::Td).unwrap().value, 0);
    }

    #[test]
    fn integral_scales() {
        let s = line5();
        let w = s.reweighted(vec![int(1); 5]).unwrap();
        assert_eq!(cascade_integral(&w).unwrap(), int(0));
        let s = PointSet::from_ints(2, &[&[0, 0], &[4, 0], &[0, 4], &[1, 1]]).unwrap();
        let base =
            cascade_integral(&s.reweighted(vec![int(1), int(2), int(1), int(3)]).unwrap()).unwrap();
        let scaled = cascade_integral(
            &s.reweighted(vec![ratio(1, 2), int(1), ratio(1, 2), ratio(3, 2)])
                .unwrap(),
        )
        .unwrap();
        assert_eq!(scaled * int(2), base);
    }
}
