use num::Signed;

use super::{
    added, feature_samples, AxiomId, AxiomReport, Evidence, Instance, MeasureOracle, Violation,
};
use crate::error::{DepthError, Result};
use crate::geom::hull::{convex_hull, on_hull_boundary};
use crate::geom::scalar::{int, ratio, ExactScalar};
use crate::geom::{in_convex_hull, Point, PointSet};
use crate::par;

/// Largest set checked exhaustively for super-additivity.
pub const SUBSET_CAP: usize = 10;

fn merge(report: &mut AxiomReport, results: Vec<Result<(usize, Vec<Violation>)>>) -> Result<()> {
    for r in results {
        let (checks, violations) = r?;
        report.checks += checks;
        report.violations.extend(violations);
    }
    Ok(())
}

/// Compares `ϱ(S, q)` with `ϱ(S ∪ {p}, q)` for every candidate `p` and
/// every feature sample `q` of the enlarged set.
fn scan_additions(
    m: &MeasureOracle,
    corpus: &[Instance],
    axiom: AxiomId,
    violates: impl Fn(&ExactScalar, &ExactScalar) -> bool + Sync + Send,
) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(axiom, m.id);
    for inst in corpus {
        report.instances += 1;
        let results = par::map(&inst.candidate_points(), |p| {
            let bigger = added(&inst.set, p)?;
            let mut qs = feature_samples(&bigger);
            qs.extend(inst.queries.iter().cloned());
            let mut found = Vec::new();
            for q in &qs {
                let before = m.evaluate(&inst.set, q)?;
                let after = m.evaluate(&bigger, q)?;
                if violates(&before, &after) {
                    found.push(Violation {
                        instance: inst.id.clone(),
                        set: inst.set.clone(),
                        query: q.clone(),
                        evidence: Evidence::Added(p.clone()),
                        values: vec![before, after],
                    });
                }
            }
            Ok((qs.len(), found))
        });
        merge(&mut report, results)?;
    }
    Ok(report)
}

/// `|ϱ(S, q) - ϱ(S ∪ {p}, q)| ≤ 1` (at most `w(p)` for weighted measures;
/// added points carry weight 1).
pub fn check_sensitivity(m: &MeasureOracle, corpus: &[Instance]) -> Result<AxiomReport> {
    let step = m.step(&int(1));
    scan_additions(m, corpus, AxiomId::Sensitivity, move |b, a| {
        (a - b).abs() > step
    })
}

/// `ϱ(S ∪ {p}, q) ≥ ϱ(S, q)`.
pub fn check_monotonicity(m: &MeasureOracle, corpus: &[Instance]) -> Result<AxiomReport> {
    scan_additions(m, corpus, AxiomId::Monotonicity, |b, a| a < b)
}

fn on_boundary(s: &PointSet, q: &Point) -> bool {
    if s.dim() == 1 {
        let lo = s.points().iter().min();
        let hi = s.points().iter().max();
        return lo == Some(q) || hi == Some(q);
    }
    s.dim() == 2 && on_hull_boundary(&convex_hull(s.points()), q)
}

/// Applies `test(inside, value)` at every query; a `false` is a violation.
fn scan_queries(
    m: &MeasureOracle,
    corpus: &[Instance],
    axiom: AxiomId,
    count_boundary: bool,
    test: impl Fn(&PointSet, bool, &ExactScalar) -> bool + Sync + Send,
) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(axiom, m.id);
    for inst in corpus {
        report.instances += 1;
        let qs = inst.query_points();
        let results = par::map(&qs, |q| {
            let inside = in_convex_hull(q, &inst.set)?;
            let value = m.evaluate(&inst.set, q)?;
            let boundary = inside && on_boundary(&inst.set, q);
            let v = (!test(&inst.set, inside, &value)).then(|| Violation {
                instance: inst.id.clone(),
                set: inst.set.clone(),
                query: q.clone(),
                evidence: Evidence::Query,
                values: vec![value],
            });
            Ok((boundary, v))
        });
        for r in results {
            let (boundary, v) = r?;
            report.checks += 1;
            if boundary && count_boundary {
                report.boundary_cases += 1;
            }
            report.violations.extend(v);
        }
    }
    Ok(report)
}

/// `ϱ(S, q) = 0` for `q` outside the closed hull of `S`.
pub fn check_locality(m: &MeasureOracle, corpus: &[Instance]) -> Result<AxiomReport> {
    scan_queries(m, corpus, AxiomId::Locality, true, |_, inside, v| {
        inside || *v == int(0)
    })
}

/// `ϱ(S, q) ≥ 1` (the least point weight, for weighted measures) for `q` in
/// the closed hull of `S`.
pub fn check_nontriviality(m: &MeasureOracle, corpus: &[Instance]) -> Result<AxiomReport> {
    let m2 = *m;
    scan_queries(
        m,
        corpus,
        AxiomId::Nontriviality,
        false,
        move |s, inside, v| !inside || *v >= m2.floor(s),
    )
}

/// `ϱ(A ∪ B, q) ≥ ϱ(A, q) + ϱ(B, q)` for all disjoint nonempty `A, B ⊆ S`
/// and every feature sample `q` of `S`. The arrangement of `S` refines
/// that of every subset, so the queries are complete for each pair.
pub fn check_superadditivity(
    m: &MeasureOracle,
    corpus: &[Instance],
    subset_cap: usize,
) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(AxiomId::Superadditivity, m.id);
    for inst in corpus {
        let n = inst.set.len();
        if n > subset_cap || n > 20 {
            return Err(DepthError::CapExceeded {
                what: "check_superadditivity",
                size: n,
                cap: subset_cap.min(20),
                hint: "use a smaller instance",
            });
        }
        report.instances += 1;
        let masks: Vec<Vec<usize>> = (0u32..1 << n)
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
            .collect();
        let qs = inst.query_points();
        let results = par::map(&qs, |q| {
            let vals = masks
                .iter()
                .map(|idx| m.evaluate(&inst.set.subset(idx), q))
                .collect::<Result<Vec<_>>>()?;
            let mut found = Vec::new();
            let mut checks = 0;
            for u in 1u32..1 << n {
                let low = u & u.wrapping_neg();
                // A holds the lowest element of U, B the nonempty rest.
                let mut a = (u - 1) & u;
                loop {
                    if a & low != 0 && a != u {
                        let b = u & !a;
                        checks += 1;
                        let (va, vb, vu) =
                            (&vals[a as usize], &vals[b as usize], &vals[u as usize]);
                        if *vu < va + vb {
                            found.push(Violation {
                                instance: inst.id.clone(),
                                set: inst.set.clone(),
                                query: q.clone(),
                                evidence: Evidence::Split(
                                    masks[a as usize].clone(),
                                    masks[b as usize].clone(),
                                ),
                                values: vec![va.clone(), vb.clone(), vu.clone()],
                            });
                        }
                    }
                    if a == 0 {
                        break;
                    }
                    a = (a - 1) & u;
                }
            }
            Ok((checks, found))
        });
        merge(&mut report, results)?;
    }
    Ok(report)
}

/// Some point has `ϱ(S, q) ≥ α|S|` (`α·w(S)` for weighted measures). Every
/// feature is searched, so a violation means no such point exists.
/// `alpha` defaults to `1/(d+1)`.
pub fn check_centrality(
    m: &MeasureOracle,
    corpus: &[Instance],
    alpha: Option<ExactScalar>,
) -> Result<AxiomReport> {
    let d = corpus.first().map_or(1, |i| i.set.dim());
    let alpha = alpha.unwrap_or_else(|| ratio(1, d as i64 + 1));
    let mut report = AxiomReport::new(AxiomId::Centrality(alpha.clone()), m.id);
    let results = par::map(corpus, |inst| {
        let target = &alpha * m.mass(&inst.set);
        let mut best: Option<(ExactScalar, Point)> = None;
        let samples = inst.query_points();
        for q in &samples {
            let v = m.evaluate(&inst.set, q)?;
            let reached = v >= target;
            if best.as_ref().map_or(true, |(b, _)| v > *b) {
                best = Some((v, q.clone()));
            }
            if reached {
                return Ok((samples.len(), Vec::new()));
            }
        }
        let (value, query) = best.expect("arrangements have features");
        Ok((
            samples.len(),
            vec![Violation {
                instance: inst.id.clone(),
                set: inst.set.clone(),
                query,
                evidence: Evidence::NoCentralPoint,
                values: vec![value, target],
            }],
        ))
    });
    report.instances = corpus.len();
    merge(&mut report, results)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::MeasureId;

    fn line(xs: &[i64]) -> PointSet {
        let v: Vec<Vec<i64>> = xs.iter().map(|&x| vec![x]).collect();
        let r: Vec<&[i64]> = v.iter().map(Vec::as_slice).collect();
        PointSet::from_ints(1, &r).unwrap()
    }

    #[test]
    fn simplicial_sensitivity_violation() {
        let mut inst = Instance::new("sd", line(&[-2, -1, 1, 2]));
        inst.queries.push(Point::from_ints(&[0]));
        inst.extras.push(Point::from_ints(&[3]));
        let m = MeasureOracle::new(MeasureId::Sd);
        let r = check_sensitivity(&m, &[inst]).unwrap();
        assert!(!r.passes());
        let v = r
            .violations
            .iter()
            .find(|v| {
                v.query == Point::from_ints(&[0])
                    && v.evidence == Evidence::Added(Point::from_ints(&[3]))
            })
            .unwrap();
        assert_eq!(v.values, vec![int(4), int(6)]);
        for v in &r.violations {
            assert!(v.reverify(&r.axiom, &m).unwrap());
        }
    }

    #[test]
    fn tukey_passes_in_1d() {
        let corpus = [
            Instance::new("a", line(&[0, 1, 3, 4])),
            Instance::new("b", line(&[0, 0, 2])),
        ];
        let m = MeasureOracle::new(MeasureId::Td);
        assert!(check_sensitivity(&m, &corpus).unwrap().passes());
        assert!(check_monotonicity(&m, &corpus).unwrap().passes());
        assert!(check_locality(&m, &corpus).unwrap().passes());
        assert!(check_nontriviality(&m, &corpus).unwrap().passes());
        assert!(check_superadditivity(&m, &corpus, SUBSET_CAP)
            .unwrap()
            .passes());
        assert!(check_centrality(&m, &corpus, None).unwrap().passes());
    }

    #[test]
    fn fig1_enclosing_not_superadditive() {
        let s = PointSet::from_ints(
            2,
            &[&[-3, -1], &[5, -1], &[1, 5], &[-4, 1], &[4, 1], &[0, -5]],
        )
        .unwrap();
        let mut inst = Instance::new("fig1", s);
        inst.queries.push(Point::from_ints(&[0, 0]));
        let m = MeasureOracle::new(MeasureId::Ed);
        let r = check_superadditivity(&m, &[inst], SUBSET_CAP).unwrap();
        let v = r
            .violations
            .iter()
            .find(|v| {
                v.query == Point::from_ints(&[0, 0])
                    && v.evidence == Evidence::Split(vec![0, 1, 2], vec![3, 4, 5])
            })
            .unwrap();
        assert_eq!(v.values, vec![int(1), int(1), int(1)]);
        assert!(v.reverify(&r.axiom, &m).unwrap());
    }
}
