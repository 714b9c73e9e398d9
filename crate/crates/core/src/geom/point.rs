use std::fmt;

use num::{Signed, Zero};

use super::scalar::{format_scalar, int, one, ExactScalar};
use crate::error::{DepthError, Result};

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 3;

/// A point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    coords: Vec<ExactScalar>,
}

impl Point {
    pub fn new(coords: Vec<ExactScalar>) -> Self {
        Point { coords }
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_ints(coords: &[i64]) -> Self {
        Point::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[ExactScalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &ExactScalar {
        &self.coords[i]
    }

    pub fn sub(&self, other: &Point) -> Vec<ExactScalar> {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect()
    }

    pub fn add_vec(&self, v: &[ExactScalar]) -> Point {
        Point::new(self.coords.iter().zip(v).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, s: &ExactScalar) -> Point {
        Point::new(self.coords.iter().map(|a| a * s).collect())
    }

    pub fn dot(&self, v: &[ExactScalar]) -> ExactScalar {
        self.coords
            .iter()
            .zip(v)
            .fold(ExactScalar::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Affine combination `(1 - t) * self + t * other`.
    pub fn lerp(&self, other: &Point, t: &ExactScalar) -> Point {
        let s = one() - t;
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a * &s + b * t)
                .collect(),
        )
    }

    /// Arithmetic mean of a nonempty list of points.
    pub fn centroid(points: &[Point]) -> Option<Point> {
        let first = points.first()?;
        let mut acc = vec![ExactScalar::zero(); first.dim()];
        for p in points {
            for (a, c) in acc.iter_mut().zip(&p.coords) {
                *a += c;
            }
        }
        let n = int(points.len() as i64);
        Some(Point::new(acc.into_iter().map(|a| a / &n).collect()))
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() != dim {
            return Err(DepthError::DimensionMismatch {
                expected: dim,
                found: self.dim(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_scalar(c))?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Red,
    Blue,
}

/// Indexed points of a common dimension, optionally weighted and/or
/// two-colored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Point>,
    weights: Option<Vec<ExactScalar>>,
    colors: Option<Vec<Color>>,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        Self::with_attributes(dim, points, None, None)
    }

    pub fn with_attributes(
        dim: usize,
        points: Vec<Point>,
        weights: Option<Vec<ExactScalar>>,
        colors: Option<Vec<Color>>,
    ) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(DepthError::UnsupportedDimension(dim));
        }
        for p in &points {
            p.check_dim(dim)?;
        }
        if let Some(w) = &weights {
            if w.len() != points.len() {
                return Err(DepthError::InvalidPointSet(format!(
                    "{} weights for {} points",
                    w.len(),
                    points.len()
                )));
            }
            if w.iter().any(|x| x.is_negative()) {
                return Err(DepthError::InvalidPointSet("negative weight".into()));
            }
        }
        if let Some(c) = &colors {
            if c.len() != points.len() {
                return Err(DepthError::InvalidPointSet(format!(
                    "{} colors for {} points",
                    c.len(),
                    points.len()
                )));
            }
        }
        Ok(PointSet {
            dim,
            points,
            weights,
            colors,
        })
    }

    /// Shorthand for tests and generators: integer coordinates.
    pub fn from_ints(dim: usize, coords: &[&[i64]]) -> Result<Self> {
        Self::new(dim, coords.iter().map(|c| Point::from_ints(c)).collect())
    }

    pub fn weighted(dim: usize, points: Vec<Point>, weights: Vec<ExactScalar>) -> Result<Self> {
        Self::with_attributes(dim, points, Some(weights), None)
    }

    pub fn colored(dim: usize, points: Vec<Point>, colors: Vec<Color>) -> Result<Self> {
        Self::with_attributes(dim, points, None, Some(colors))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn weights(&self) -> Option<&[ExactScalar]> {
        self.weights.as_deref()
    }

    pub fn colors(&self) -> Option<&[Color]> {
        self.colors.as_deref()
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    /// Weight of point `i`; unweighted sets weigh 1 per point.
    pub fn weight(&self, i: usize) -> ExactScalar {
        match &self.weights {
            Some(w) => w[i].clone(),
            None => one(),
        }
    }

    pub fn total_weight(&self) -> ExactScalar {
        match &self.weights {
            Some(w) => w.iter().sum(),
            None => int(self.points.len() as i64),
        }
    }

    pub fn color(&self, i: usize) -> Option<Color> {
        self.colors.as_ref().map(|c| c[i])
    }

    /// The sub-multiset given by `indices`, carrying weights and colors.
    pub fn subset(&self, indices: &[usize]) -> PointSet {
        PointSet {
            dim: self.dim,
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
            weights: self
                .weights
                .as_ref()
                .map(|w| indices.iter().map(|&i| w[i].clone()).collect()),
            colors: self
                .colors
                .as_ref()
                .map(|c| indices.iter().map(|&i| c[i]).collect()),
        }
    }

    /// A copy with `p` appended. Weighted sets need `weight`; colored sets
    /// need `color`.
    pub fn with_point(
        &self,
        p: Point,
        weight: Option<ExactScalar>,
        color: Option<Color>,
    ) -> Result<PointSet> {
        p.check_dim(self.dim)?;
        let mut out = self.clone();
        out.points.push(p);
        if let Some(w) = &mut out.weights {
            w.push(weight.unwrap_or_else(one));
        }
        if let Some(c) = &mut out.colors {
            c.push(color.ok_or_else(|| {
                DepthError::InvalidPointSet("colored set needs a color for the new point".into())
            })?);
        }
        Ok(out)
    }

    /// Same points with every weight replaced.
    pub fn reweighted(&self, weights: Vec<ExactScalar>) -> Result<PointSet> {
        PointSet::with_attributes(
            self.dim,
            self.points.clone(),
            Some(weights),
            self.colors.clone(),
        )
    }

    pub fn without_weights(&self) -> PointSet {
        PointSet {
            weights: None,
            ..self.clone()
        }
    }

    pub fn check_query(&self, q: &Point) -> Result<()> {
        q.check_dim(self.dim)
    }

    pub fn indices_of(&self, color: Color) -> Vec<usize> {
        match &self.colors {
            Some(c) => (0..c.len()).filter(|&i| c[i] == color).collect(),
            None => Vec::new(),
        }
    }
}
