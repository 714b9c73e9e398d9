//! Depth measures as opaque oracles, checked against the super-additive and
//! central axioms on instance corpora.

mod chain;
mod checks;

pub use chain::{inequality_chain_check, ChainReport};
pub use checks::{
    check_centrality, check_locality, check_monotonicity, check_nontriviality, check_sensitivity,
    check_superadditivity, SUBSET_CAP,
};

use std::fmt;

use num::Signed;

use crate::error::Result;
use crate::geom::scalar::{format_scalar, int, ExactScalar};
use crate::geom::{in_convex_hull, Point, PointSet};
use crate::measure::MeasureId;
use crate::regions::Arrangement2D;

/// A measure with an instance-size cap for its exhaustive evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeasureOracle {
    pub id: MeasureId,
    pub cap: usize,
}

impl MeasureOracle {
    pub fn new(id: MeasureId) -> Self {
        MeasureOracle {
            id,
            cap: crate::depth::DEFAULT_CAP,
        }
    }

    pub fn evaluate(&self, s: &PointSet, q: &Point) -> Result<ExactScalar> {
        self.id.eval_with_cap(s, q, self.cap)
    }

    /// The allowance for adding `p` with weight `w`: `w` for weighted
    /// measures, 1 otherwise.
    fn step(&self, w: &ExactScalar) -> ExactScalar {
        if self.id.uses_weights() {
            w.clone()
        } else {
            int(1)
        }
    }

    /// Lower bound for hull points: the minimum weight for weighted
    /// measures, 1 otherwise.
    fn floor(&self, s: &PointSet) -> ExactScalar {
        if self.id.uses_weights() {
            (0..s.len())
                .map(|i| s.weight(i))
                .min()
                .unwrap_or_else(|| int(0))
        } else {
            int(1)
        }
    }

    /// `|S|`, or `w(S)` for weighted measures.
    fn mass(&self, s: &PointSet) -> ExactScalar {
        if self.id.uses_weights() {
            s.total_weight()
        } else {
            int(s.len() as i64)
        }
    }
}

/// One point set with optional extra query points and extra points to add.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub id: String,
    pub set: PointSet,
    pub queries: Vec<Point>,
    pub extras: Vec<Point>,
}

impl Instance {
    pub fn new(id: impl Into<String>, set: PointSet) -> Self {
        Instance {
            id: id.into(),
            set,
            queries: Vec::new(),
            extras: Vec::new(),
        }
    }

    /// One sample per arrangement feature, then the extra queries.
    pub fn query_points(&self) -> Vec<Point> {
        let mut qs = feature_samples(&self.set);
        qs.extend(self.queries.iter().cloned());
        qs
    }

    /// Points to add: feature samples, the data points, then the extras.
    pub fn candidate_points(&self) -> Vec<Point> {
        let mut ps = feature_samples(&self.set);
        ps.extend(self.set.points().iter().cloned());
        ps.extend(self.extras.iter().cloned());
        ps
    }
}

pub(crate) fn feature_samples(s: &PointSet) -> Vec<Point> {
    Arrangement2D::build(s)
        .features()
        .into_iter()
        .map(|f| f.samples[0].clone())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomId {
    Sensitivity,
    Locality,
    Nontriviality,
    Superadditivity,
    Monotonicity,
    Centrality(ExactScalar),
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomId::Sensitivity => f.write_str("sensitivity"),
            AxiomId::Locality => f.write_str("locality"),
            AxiomId::Nontriviality => f.write_str("nontriviality"),
            AxiomId::Superadditivity => f.write_str("superadditivity"),
            AxiomId::Monotonicity => f.write_str("monotonicity"),
            AxiomId::Centrality(a) => write!(f, "centrality({})", format_scalar(a)),
        }
    }
}

/// What makes a violation reproducible beyond `(S, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// The query alone.
    Query,
    /// A point added to `S` (weight 1 for weighted sets).
    Added(Point),
    /// Disjoint index sets of `S`.
    Split(Vec<usize>, Vec<usize>),
    /// No feature of `S` reaches `α·|S|`; the query is the deepest sample.
    NoCentralPoint,
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        match self {
            Evidence::Query => f.write_str("query"),
            Evidence::Added(p) => write!(f, "added {p}"),
            Evidence::Split(a, b) => write!(f, "split {} | {}", list(a), list(b)),
            Evidence::NoCentralPoint => f.write_str("no central point"),
        }
    }
}

/// A failed axiom instance with the values observed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub instance: String,
    pub set: PointSet,
    pub query: Point,
    pub evidence: Evidence,
    pub values: Vec<ExactScalar>,
}

fn added(s: &PointSet, p: &Point) -> Result<PointSet> {
    s.with_point(p.clone(), Some(int(1)), None)
}

impl Violation {
    /// Recomputes the violation from its stored data. True iff it still
    /// violates `axiom` under `m`.
    pub fn reverify(&self, axiom: &AxiomId, m: &MeasureOracle) -> Result<bool> {
        let s = &self.set;
        let q = &self.query;
        Ok(match (axiom, &self.evidence) {
            (AxiomId::Sensitivity, Evidence::Added(p)) => {
                let before = m.evaluate(s, q)?;
                let after = m.evaluate(&added(s, p)?, q)?;
                (after - before).abs() > m.step(&int(1))
            }
            (AxiomId::Monotonicity, Evidence::Added(p)) => {
                m.evaluate(&added(s, p)?, q)? < m.evaluate(s, q)?
            }
            (AxiomId::Locality, Evidence::Query) => {
                !in_convex_hull(q, s)? && m.evaluate(s, q)? != int(0)
            }
            (AxiomId::Nontriviality, Evidence::Query) => {
                in_convex_hull(q, s)? && m.evaluate(s, q)? < m.floor(s)
            }
            (AxiomId::Superadditivity, Evidence::Split(a, b)) => {
                let mut both: Vec<usize> = a.iter().chain(b).copied().collect();
                both.sort_unstable();
                m.evaluate(&s.subset(&both), q)?
                    < m.evaluate(&s.subset(a), q)? + m.evaluate(&s.subset(b), q)?
            }
            (AxiomId::Centrality(alpha), Evidence::NoCentralPoint) => {
                let target = alpha * m.mass(s);
                let mut found = false;
                for x in feature_samples(s) {
                    if m.evaluate(s, &x)? >= target {
                        found = true;
                        break;
                    }
                }
                !found
            }
            _ => false,
        })
    }
}

/// Outcome of one axiom for one measure over a corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: AxiomId,
    pub measure: MeasureId,
    pub instances: usize,
    pub checks: usize,
    /// Queries on the hull boundary, which locality does not constrain.
    pub boundary_cases: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    fn new(axiom: AxiomId, measure: MeasureId) -> Self {
        AxiomReport {
            axiom,
            measure,
            instances: 0,
            checks: 0,
            boundary_cases: 0,
            violations: Vec::new(),
        }
    }

    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}
