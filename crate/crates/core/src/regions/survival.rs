use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{cascade_integral, FeatureDepths};
use crate::error::{DepthError, Result};
use crate::geom::scalar::{int, ExactScalar};
use crate::geom::{Point, PointSet};
use crate::measure::MeasureId;

/// Survival times of a flag basis for weighted Tukey depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurvivalProfile {
    /// Centroid of the median-region vertices; spans are taken around it.
    pub reference_point: Point,
    /// `f_1, …, f_d`; every region span is spanned by a prefix.
    pub basis: Vec<Vec<ExactScalar>>,
    /// `τ(f_0 = 0), τ(f_1), …, τ(f_d)`.
    pub taus: Vec<ExactScalar>,
}

/// Row-reduced generators of a linear subspace.
#[derive(Debug, Clone, Default)]
struct Span {
    rows: Vec<Vec<ExactScalar>>,
}

impl Span {
    /// Reduces `v` against the rows; zero iff `v` is in the span.
    fn residual(&self, v: &[ExactScalar]) -> Vec<ExactScalar> {
        let mut v = v.to_vec();
        for r in &self.rows {
            let pivot = r.iter().position(|x| !x.is_zero()).unwrap();
            if !v[pivot].is_zero() {
                let f = &v[pivot] / &r[pivot];
                for (a, b) in v.iter_mut().zip(r) {
                    *a -= &f * b;
                }
            }
        }
        v
    }

    fn contains(&self, v: &[ExactScalar]) -> bool {
        self.residual(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` if independent; returns whether it was added.
    fn push(&mut self, v: &[ExactScalar]) -> bool {
        let r = self.residual(v);
        if r.iter().all(Zero::is_zero) {
            return false;
        }
        let pivot = r.iter().position(|x| !x.is_zero()).unwrap();
        for row in &mut self.rows {
            if !row[pivot].is_zero() {
                let f = &row[pivot] / &r[pivot];
                for (a, b) in row.iter_mut().zip(&r) {
                    *a -= &f * b;
                }
            }
        }
        self.rows.push(r);
        true
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Spans of `D(v_j) - r` for the positive attained values `v_j`, with the
/// generating vectors used.
struct RegionSpans {
    values: Vec<ExactScalar>,
    spans: Vec<Span>,
    generators: Vec<Vec<Vec<ExactScalar>>>,
    reference: Point,
}

impl RegionSpans {
    fn new(s: &PointSet) -> Result<RegionSpans> {
        if s.is_empty() {
            return Err(DepthError::Empty);
        }
        let fd = FeatureDepths::evaluate(s, MeasureId::TdWeighted)?;
        let values = fd.positive_values();
        let alpha0 = fd.max_depth();
        let reference = Point::centroid(&fd.vertices_at(&alpha0)).ok_or(DepthError::Empty)?;
        let mut spans = Vec::new();
        let mut generators = Vec::new();
        for v in &values {
            let mut span = Span::default();
            let mut gens = Vec::new();
            for p in fd.vertices_at(v) {
                let g = p.sub(&reference);
                if span.push(&g) {
                    gens.push(g);
                }
            }
            // Tukey regions are convex hulls of arrangement vertices, so
            // their vertex span has the region's dimension.
            if span.dim() as i64 != fd.dim_at(v) {
                return Err(DepthError::ConstructionFailed(format!(
                    "region span of dimension {} at depth {v}, expected {}",
                    span.dim(),
                    fd.dim_at(v)
                )));
            }
            spans.push(span);
            generators.push(gens);
        }
        Ok(RegionSpans {
            values,
            spans,
            generators,
            reference,
        })
    }

    /// Largest attained value whose region span contains `f`, or 0.
    fn tau(&self, f: &[ExactScalar]) -> ExactScalar {
        (0..self.values.len())
            .rev()
            .find(|&j| self.spans[j].contains(f))
            .map_or_else(|| int(0), |j| self.values[j].clone())
    }

    /// A basis whose prefixes span each region span, smallest first.
    fn adapted_basis(&self, dim: usize) -> Vec<Vec<ExactScalar>> {
        let mut acc = Span::default();
        let mut basis = Vec::new();
        for gens in self.generators.iter().rev() {
            for g in gens {
                if acc.push(g) {
                    basis.push(g.clone());
                }
            }
        }
        for k in 0..dim {
            let e: Vec<ExactScalar> = (0..dim).map(|i| int((i == k) as i64)).collect();
            if acc.push(&e) {
                basis.push(e);
            }
        }
        basis
    }

    fn taus(&self, basis: &[Vec<ExactScalar>]) -> Vec<ExactScalar> {
        let alpha0 = self.values.last().cloned().unwrap_or_else(|| int(0));
        std::iter::once(alpha0)
            .chain(basis.iter().map(|f| self.tau(f)))
            .collect()
    }
}

/// Survival times of an adapted flag basis for weighted Tukey depth
/// (`d ≤ 2`).
pub fn survival_times(s: &PointSet) -> Result<SurvivalProfile> {
    let spans = RegionSpans::new(s)?;
    let basis = spans.adapted_basis(s.dim());
    Ok(SurvivalProfile {
        taus: spans.taus(&basis),
        reference_point: spans.reference.clone(),
        basis,
    })
}

/// Both sides of the integral identity, plus the inequality for random
/// bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralLemma {
    pub integral: ExactScalar,
    /// `Σ τ(f_i) - w(S)` for the adapted basis.
    pub adapted: ExactScalar,
    /// The same quantity for each random basis.
    pub random: Vec<ExactScalar>,
}

impl IntegralLemma {
    pub fn holds(&self) -> bool {
        self.integral == self.adapted && self.random.iter().all(|r| *r <= self.integral)
    }
}

/// Number of random bases tried per instance.
pub const RANDOM_BASES: usize = 20;

pub fn integral_lemma(s: &PointSet, seed: u64) -> Result<IntegralLemma> {
    let spans = RegionSpans::new(s)?;
    let d = s.dim();
    let w = s.total_weight();
    let side = |basis: &[Vec<ExactScalar>]| {
        spans
            .taus(basis)
            .into_iter()
            .fold(ExactScalar::zero(), |a, t| a + t)
            - &w
    };
    let adapted = side(&spans.adapted_basis(d));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random = Vec::with_capacity(RANDOM_BASES);
    while random.len() < RANDOM_BASES {
        let mut span = Span::default();
        let mut basis = Vec::new();
        while basis.len() < d {
            let v: Vec<ExactScalar> = (0..d).map(|_| int(rng.gen_range(-9..=9))).collect();
            if span.push(&v) {
                basis.push(v);
            }
        }
        random.push(side(&basis));
    }
    Ok(IntegralLemma {
        integral: cascade_integral(s)?,
        adapted,
        random,
    })
}

/// `cascade_integral = Σ τ(f_i) - w(S)` for the adapted basis, and `≥` for
/// random bases.
pub fn check_integral_lemma(s: &PointSet) -> Result<bool> {
    Ok(integral_lemma(s, 0x5eed)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn walkthrough_1d() {
        let s = PointSet::from_ints(1, &[&[0], &[1], &[2], &[3], &[4]]).unwrap();
        let p = survival_times(&s).unwrap();
        assert_eq!(p.reference_point, Point::from_ints(&[2]));
        assert_eq!(p.taus, vec![int(3), int(2)]);
        assert!(check_integral_lemma(&s).unwrap());
    }

    #[test]
    fn triangle() {
        let s = PointSet::from_ints(2, &[&[0, 0], &[4, 0], &[0, 4]]).unwrap();
        let p = survival_times(&s).unwrap();
        assert_eq!(p.taus, vec![int(1), int(1), int(1)]);
        let l = integral_lemma(&s, 1).unwrap();
        assert_eq!(l.integral, int(0));
        assert!(l.holds());
    }
}
