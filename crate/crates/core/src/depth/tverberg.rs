use super::tukey::tukey_value;
use super::{DepthResult, Witness};
use crate::error::{DepthError, Result};
use crate::geom::frame::QueryFrame;
use crate::geom::predicates::for_each_subset_up_to;
use crate::geom::scalar::{int, one, ExactScalar};
use crate::geom::{in_convex_hull, Point, PointSet};

/// Disjoint index classes whose convex hulls all contain `query`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RPartition {
    pub classes: Vec<Vec<usize>>,
    pub query: Point,
}

impl RPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Classes are nonempty, disjoint, in range, and each hull contains the
    /// query.
    pub fn verify(&self, s: &PointSet) -> Result<bool> {
        let mut seen = vec![false; s.len()];
        for class in &self.classes {
            if class.is_empty() {
                return Ok(false);
            }
            for &i in class {
                if i >= s.len() || seen[i] {
                    return Ok(false);
                }
                seen[i] = true;
            }
            if !in_convex_hull(&self.query, &s.subset(class))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn unit_weights(n: usize) -> Vec<ExactScalar> {
    vec![one(); n]
}

/// Inclusion-minimal index sets of size at most `d + 1` whose hull contains
/// the query, as bitmasks.
fn minimal_good_subsets(frame: &QueryFrame, alive: u64) -> Vec<u64> {
    let idx: Vec<usize> = (0..frame.len()).filter(|&i| alive >> i & 1 == 1).collect();
    let mut good: Vec<u64> = Vec::new();
    for_each_subset_up_to(idx.len(), frame.dim() + 1, |sub| {
        let mask = sub.iter().fold(0u64, |m, &j| m | 1 << idx[j]);
        if good.iter().any(|&g| g & mask == g) {
            return false;
        }
        let members: Vec<usize> = sub.iter().map(|&j| idx[j]).collect();
        if frame.contains(&members) {
            good.push(mask);
        }
        false
    });
    good
}

/// Packs `need` disjoint masks, deciding points in increasing order.
fn pack(by_min: &[Vec<u64>], p: usize, used: u64, need: usize, chosen: &mut Vec<u64>) -> bool {
    if need == 0 {
        return true;
    }
    let n = by_min.len();
    if p >= n {
        return false;
    }
    let free = (p..n).filter(|&i| used >> i & 1 == 0).count();
    if free < need {
        return false;
    }
    if used >> p & 1 == 0 {
        for &m in &by_min[p] {
            if m & used == 0 {
                chosen.push(m);
                if pack(by_min, p + 1, used | m, need - 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
    }
    pack(by_min, p + 1, used, need, chosen)
}

fn mask_indices(m: u64) -> Vec<usize> {
    (0..64).filter(|&i| m >> i & 1 == 1).collect()
}

/// Exact Tverberg depth: the largest number of classes of a partition of
/// `s` whose hulls all contain `q`. Fails with `CapExceeded` above `n_cap`
/// points.
pub fn tverberg_depth_exact(s: &PointSet, q: &Point, n_cap: usize) -> Result<DepthResult> {
    s.check_query(q)?;
    let n = s.len();
    if n > n_cap || n > 63 {
        return Err(DepthError::CapExceeded {
            what: "tverberg_depth_exact",
            size: n,
            cap: n_cap.min(63),
            hint: "use tverberg_greedy_lower for a lower bound",
        });
    }
    let frame = QueryFrame::new(s.points(), q);
    let upper =
        crate::geom::scalar::to_i64(&tukey_value(&frame, &unit_weights(n))).unwrap() as usize;
    let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let good = minimal_good_subsets(&frame, all);
    let mut by_min = vec![Vec::new(); n];
    for &m in &good {
        by_min[m.trailing_zeros() as usize].push(m);
    }
    let mut best: Vec<u64> = greedy_masks(&frame);
    let mut r = best.len() + 1;
    while r <= upper {
        let mut chosen = Vec::new();
        if !pack(&by_min, 0, 0, r, &mut chosen) {
            break;
        }
        best = chosen;
        r += 1;
    }
    if best.is_empty() {
        return Ok(DepthResult::exact(int(0), None));
    }
    let mut classes: Vec<Vec<usize>> = best.iter().map(|&m| mask_indices(m)).collect();
    let covered = best.iter().fold(0u64, |a, &m| a | m);
    classes[0].extend((0..n).filter(|&i| covered >> i & 1 == 0));
    classes[0].sort_unstable();
    let partition = RPartition {
        classes,
        query: q.clone(),
    };
    if !partition.verify(s)? {
        return Err(DepthError::ConstructionFailed(
            "tverberg partition failed verification".into(),
        ));
    }
    Ok(DepthResult::exact(
        int(best.len() as i64),
        Some(Witness::Partition(partition)),
    ))
}

/// Greedy simplex removal: repeatedly take the first good subset in
/// (size, lexicographic) order among the remaining points.
fn greedy_masks(frame: &QueryFrame) -> Vec<u64> {
    greedy_simplices(frame)
        .into_iter()
        .map(|c| c.iter().fold(0u64, |m, &i| m | 1 << i))
        .collect()
}

/// The index sets removed by the greedy procedure, in removal order.
pub fn greedy_simplices(frame: &QueryFrame) -> Vec<Vec<usize>> {
    let n = frame.len();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        let mut found: Option<Vec<usize>> = None;
        for_each_subset_up_to(alive.len(), frame.dim() + 1, |sub| {
            let members: Vec<usize> = sub.iter().map(|&j| alive[j]).collect();
            if frame.contains(&members) {
                found = Some(members);
                true
            } else {
                false
            }
        });
        match found {
            Some(members) => {
                alive.retain(|i| !members.contains(i));
                out.push(members);
            }
            None => break,
        }
    }
    out
}

/// Lower bound for Tverberg depth from greedy simplex removal. Each removal
/// lowers Tukey depth by at most `d`, so `r·d ≥ TD(S, q)`; this is checked.
pub fn tverberg_greedy_lower(s: &PointSet, q: &Point) -> Result<DepthResult> {
    s.check_query(q)?;
    let frame = QueryFrame::new(s.points(), q);
    let simplices = greedy_simplices(&frame);
    let d = s.dim() as i64;
    let mut alive = vec![true; s.len()];
    let td = |alive: &[bool]| {
        let w: Vec<ExactScalar> = alive
            .iter()
            .map(|&a| if a { one() } else { int(0) })
            .collect();
        tukey_value(&frame, &w)
    };
    let mut prev = td(&alive);
    let start = prev.clone();
    for simplex in &simplices {
        for &i in simplex {
            alive[i] = false;
        }
        let next = td(&alive);
        if prev.clone() - next.clone() > int(d) {
            return Err(DepthError::ConstructionFailed(
                "greedy removal dropped Tukey depth by more than d".into(),
            ));
        }
        prev = next;
    }
    let r = simplices.len() as i64;
    if int(r * d) + prev < start {
        return Err(DepthError::ConstructionFailed(
            "greedy accounting violated".into(),
        ));
    }
    let witness = (!simplices.is_empty()).then(|| {
        Witness::Partition(RPartition {
            classes: simplices,
            query: q.clone(),
        })
    });
    Ok(DepthResult {
        value: int(r),
        witness,
        exact: false,
    })
}
