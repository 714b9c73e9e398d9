use std::fmt;

use num::{Signed, Zero};

use super::frame::{to_rational, QueryFrame};
use super::point::{Point, PointSet};
use super::scalar::{format_scalar, ExactScalar};
use crate::error::{DepthError, Result};

/// `normal · x >= offset` (closed) or `normal · x > offset` (open).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedHalfspace {
    normal: Vec<ExactScalar>,
    offset: ExactScalar,
    boundary_included: bool,
}

impl OrientedHalfspace {
    /// Builds a halfspace scaled so that the first nonzero normal entry is
    /// `±1`.
    pub fn new(
        normal: Vec<ExactScalar>,
        offset: ExactScalar,
        boundary_included: bool,
    ) -> Result<Self> {
        let Some(lead) = normal.iter().find(|c| !c.is_zero()).map(|c| c.abs()) else {
            return Err(DepthError::Precondition("zero halfspace normal".into()));
        };
        Ok(OrientedHalfspace {
            normal: normal.iter().map(|c| c / &lead).collect(),
            offset: offset / lead,
            boundary_included,
        })
    }

    /// Closed halfspace through `q` with the given normal.
    pub fn through(q: &Point, normal: Vec<ExactScalar>) -> Result<Self> {
        let offset = q.dot(&normal);
        Self::new(normal, offset, true)
    }

    pub fn normal(&self) -> &[ExactScalar] {
        &self.normal
    }

    pub fn offset(&self) -> &ExactScalar {
        &self.offset
    }

    pub fn boundary_included(&self) -> bool {
        self.boundary_included
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn contains(&self, x: &Point) -> bool {
        let v = x.dot(&self.normal);
        if self.boundary_included {
            v >= self.offset
        } else {
            v > self.offset
        }
    }

    pub fn on_boundary(&self, x: &Point) -> bool {
        x.dot(&self.normal) == self.offset
    }
}

impl fmt::Display for OrientedHalfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n: Vec<String> = self.normal.iter().map(format_scalar).collect();
        write!(
            f,
            "({})·x {} {}",
            n.join(","),
            if self.boundary_included { ">=" } else { ">" },
            format_scalar(&self.offset)
        )
    }
}

/// Total weight (or count) of the points of `s` inside `h`.
pub fn halfspace_count(s: &PointSet, h: &OrientedHalfspace) -> Result<ExactScalar> {
    if h.dim() != s.dim() {
        return Err(DepthError::DimensionMismatch {
            expected: s.dim(),
            found: h.dim(),
        });
    }
    let mut total = ExactScalar::zero();
    for (i, p) in s.points().iter().enumerate() {
        if h.contains(p) {
            total += s.weight(i);
        }
    }
    Ok(total)
}

/// Halfspaces with `q` on the boundary that represent every combinatorially
/// distinct closed halfspace containing `q`.
///
/// In 1D these are the four halflines `x >= q, x > q, x <= q, x < q`. In 2D
/// and 3D every hyperplane through `q` spanned by points of `s` is emitted in
/// both orientations and both perturbation senses; the perturbation is
/// realized by an exact tilt of the normal, so all entries are closed.
pub fn candidate_halfspaces_through(q: &Point, s: &PointSet) -> Result<Vec<OrientedHalfspace>> {
    s.check_query(q)?;
    if s.dim() == 1 {
        let one = vec![ExactScalar::from_integer(1.into())];
        let minus = vec![ExactScalar::from_integer((-1).into())];
        let x = q.coord(0).clone();
        return Ok(vec![
            OrientedHalfspace::new(one.clone(), x.clone(), true)?,
            OrientedHalfspace::new(one, x.clone(), false)?,
            OrientedHalfspace::new(minus.clone(), -x.clone(), true)?,
            OrientedHalfspace::new(minus, -x, false)?,
        ]);
    }
    let frame = QueryFrame::new(s.points(), q);
    frame
        .flags()
        .iter()
        .map(|f| OrientedHalfspace::through(q, to_rational(&f.normal(frame.dirs()))))
        .collect()
}
