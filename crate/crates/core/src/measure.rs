//! Named depth measures, evaluated uniformly as exact scalars.

use std::fmt;
use std::str::FromStr;

use crate::depth::{
    enclosing_depth_exact, peeling_depth, simplicial_depth, tukey_depth, tukey_depth_weighted,
    tverberg_depth_exact, DEFAULT_CAP,
};
use crate::error::{DepthError, Result};
use crate::geom::scalar::{int, ExactScalar};
use crate::geom::{in_convex_hull, Point, PointSet};
use crate::regions::Arrangement2D;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MeasureId {
    /// Tukey depth, counting points.
    Td,
    /// Tukey depth with point weights.
    TdWeighted,
    /// Tverberg depth.
    Tvd,
    /// Enclosing depth.
    Ed,
    /// Simplicial depth.
    Sd,
    /// Convex-hull peeling depth.
    Peel,
    /// Largest `α` whose query lies in the hull of the arrangement vertices
    /// of Tverberg depth at least `α`.
    TvdHull,
}

impl MeasureId {
    pub const ALL: [MeasureId; 7] = [
        MeasureId::Td,
        MeasureId::TdWeighted,
        MeasureId::Tvd,
        MeasureId::Ed,
        MeasureId::Sd,
        MeasureId::Peel,
        MeasureId::TvdHull,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MeasureId::Td => "td",
            MeasureId::TdWeighted => "td-weighted",
            MeasureId::Tvd => "tvd",
            MeasureId::Ed => "ed",
            MeasureId::Sd => "sd",
            MeasureId::Peel => "peel",
            MeasureId::TvdHull => "tvd-hull",
        }
    }

    /// Whether values are integers for every input.
    pub fn is_integral(self) -> bool {
        self != MeasureId::TdWeighted
    }

    pub fn uses_weights(self) -> bool {
        self == MeasureId::TdWeighted
    }

    /// Depth of `q` in `s`, with the default size cap for exhaustive
    /// measures.
    pub fn eval(self, s: &PointSet, q: &Point) -> Result<ExactScalar> {
        self.eval_with_cap(s, q, DEFAULT_CAP)
    }

    pub fn eval_with_cap(self, s: &PointSet, q: &Point, cap: usize) -> Result<ExactScalar> {
        Ok(match self {
            MeasureId::Td => tukey_depth(s, q)?.value,
            MeasureId::TdWeighted => tukey_depth_weighted(s, q)?.value,
            MeasureId::Tvd => tverberg_depth_exact(s, q, cap)?.value,
            MeasureId::Ed => enclosing_depth_exact(s, q, cap)?.value,
            MeasureId::Sd => simplicial_depth(s, q)?.value,
            MeasureId::Peel => peeling_depth(s, q)?.value,
            MeasureId::TvdHull => tvd_hull(s, q, cap)?,
        })
    }
}

fn tvd_hull(s: &PointSet, q: &Point, cap: usize) -> Result<ExactScalar> {
    s.check_query(q)?;
    if s.dim() > 2 {
        return Err(DepthError::UnsupportedDimension(s.dim()));
    }
    if s.is_empty() {
        return Ok(int(0));
    }
    let arr = Arrangement2D::build(s);
    let mut scored = Vec::with_capacity(arr.vertices().len());
    for v in arr.vertices() {
        scored.push((tverberg_depth_exact(s, v, cap)?.value, v.clone()));
    }
    let mut levels: Vec<ExactScalar> = scored.iter().map(|(d, _)| d.clone()).collect();
    levels.sort();
    levels.dedup();
    for alpha in levels.into_iter().rev() {
        if alpha <= int(0) {
            break;
        }
        let pts: Vec<Point> = scored
            .iter()
            .filter(|(d, _)| *d >= alpha)
            .map(|(_, v)| v.clone())
            .collect();
        if in_convex_hull(q, &PointSet::new(s.dim(), pts)?)? {
            return Ok(alpha);
        }
    }
    Ok(int(0))
}

impl fmt::Display for MeasureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MeasureId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        MeasureId::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown measure '{s}'"))
    }
}
