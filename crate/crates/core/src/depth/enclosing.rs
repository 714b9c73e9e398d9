use std::cmp::Ordering;

use num::BigInt;

use super::tukey::tukey_value;
use super::{DepthResult, Witness};
use crate::error::{DepthError, Result};
use crate::geom::frame::{flags, origin_in_hull, primitive, rot90, to_rational, IVec, QueryFrame};
use crate::geom::lp::in_cone;
use crate::geom::predicates::frame_in_general_position;
use crate::geom::scalar::{int, one, to_i64, ExactScalar};
use crate::geom::{OrientedHalfspace, Point, PointSet};

/// `d + 1` disjoint classes of `k` indices each, claimed to enclose `query`:
/// every transversal simplex contains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnclosingWitness {
    pub classes: Vec<Vec<usize>>,
    pub query: Point,
    pub k: usize,
}

impl EnclosingWitness {
    pub fn new(classes: Vec<Vec<usize>>, query: Point) -> Self {
        let k = classes.first().map_or(0, Vec::len);
        EnclosingWitness { classes, query, k }
    }

    fn validate(&self, s: &PointSet) -> Result<()> {
        let d = s.dim();
        s.check_query(&self.query)?;
        if self.classes.len() != d + 1 {
            return Err(DepthError::MalformedWitness(format!(
                "expected {} classes, found {}",
                d + 1,
                self.classes.len()
            )));
        }
        let mut seen = vec![false; s.len()];
        for class in &self.classes {
            if class.len() != self.k {
                return Err(DepthError::MalformedWitness(format!(
                    "class of size {} in a {}-witness",
                    class.len(),
                    self.k
                )));
            }
            for &i in class {
                if i >= s.len() {
                    return Err(DepthError::MalformedWitness(format!(
                        "index {i} out of range"
                    )));
                }
                if seen[i] {
                    return Err(DepthError::MalformedWitness(format!("index {i} repeated")));
                }
                seen[i] = true;
            }
        }
        Ok(())
    }
}

/// Every transversal of `classes` (one index per class) spans a simplex
/// containing the query of `frame`. Classes may have different sizes.
pub fn encloses_by_transversals(frame: &QueryFrame, classes: &[Vec<usize>]) -> bool {
    fn rec(frame: &QueryFrame, classes: &[Vec<usize>], cur: &mut Vec<usize>) -> bool {
        if cur.len() == classes.len() {
            return frame.contains(cur);
        }
        for &i in &classes[cur.len()] {
            cur.push(i);
            let ok = rec(frame, classes, cur);
            cur.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    if classes.iter().any(Vec::is_empty) {
        return true;
    }
    rec(frame, classes, &mut Vec::with_capacity(classes.len()))
}

/// Exhaustive check of every transversal simplex.
pub fn verify_enclosing_oracle(s: &PointSet, w: &EnclosingWitness) -> Result<bool> {
    w.validate(s)?;
    if w.k == 0 {
        return Ok(true);
    }
    let frame = QueryFrame::new(s.points(), &w.query);
    Ok(encloses_by_transversals(&frame, &w.classes))
}

/// Result of the fast enclosing test. `fallback` is set when the input was
/// not in general position and the oracle was used instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FastVerdict {
    pub encloses: bool,
    pub fallback: bool,
}

/// Enclosure holds iff no open halfspace bounded through the query meets
/// every class. Only the flags of the witness rays need checking.
pub fn verify_enclosing_fast(s: &PointSet, w: &EnclosingWitness) -> Result<FastVerdict> {
    w.validate(s)?;
    if w.k == 0 {
        return Ok(FastVerdict {
            encloses: true,
            fallback: false,
        });
    }
    let union: Vec<usize> = w.classes.iter().flatten().copied().collect();
    let pts: Vec<Point> = union.iter().map(|&i| s.point(i).clone()).collect();
    let frame = QueryFrame::new(&pts, &w.query);
    if !frame_in_general_position(&frame) {
        return Ok(FastVerdict {
            encloses: verify_enclosing_oracle(s, w)?,
            fallback: true,
        });
    }
    Ok(FastVerdict {
        encloses: separating_flag(&frame, w.k, w.classes.len()).is_none(),
        fallback: false,
    })
}

/// A flag whose open positive side meets every class of the frame, where
/// the frame lists the classes consecutively in blocks of `k`.
fn separating_flag(
    frame: &QueryFrame,
    k: usize,
    classes: usize,
) -> Option<crate::geom::frame::Flag> {
    frame.flags().into_iter().find(|f| {
        (0..classes)
            .all(|c| (c * k..(c + 1) * k).any(|i| f.side(frame.dir(i)) == Ordering::Greater))
    })
}

/// Exact enclosing depth for `d ≤ 2` by branch and bound over class
/// assignments, starting from the largest feasible `k`.
pub fn enclosing_depth_exact(s: &PointSet, q: &Point, n_cap: usize) -> Result<DepthResult> {
    s.check_query(q)?;
    let d = s.dim();
    if d > 2 {
        return Err(DepthError::UnsupportedDimension(d));
    }
    let n = s.len();
    if n > n_cap {
        return Err(DepthError::CapExceeded {
            what: "enclosing_depth_exact",
            size: n,
            cap: n_cap,
            hint: "use construct_e2_witness for a constructive lower bound",
        });
    }
    let frame = QueryFrame::new(s.points(), q);
    let td = to_i64(&tukey_value(&frame, &vec![one(); n])).unwrap() as usize;
    let table = ContainTable::new(&frame);
    for k in (1..=(n / (d + 1)).min(td)).rev() {
        if let Some(classes) = search(&table, d + 1, k) {
            let w = EnclosingWitness::new(classes, q.clone());
            if !verify_enclosing_fast(s, &w)?.encloses || !verify_enclosing_oracle(s, &w)? {
                return Err(DepthError::ConstructionFailed(
                    "enclosing search produced an invalid witness".into(),
                ));
            }
            return Ok(DepthResult::exact(
                int(k as i64),
                Some(Witness::Enclosing(w)),
            ));
        }
    }
    Ok(DepthResult::exact(int(0), None))
}

/// Simplex containment for every `(d+1)`-tuple of indices.
struct ContainTable {
    n: usize,
    m: usize,
    bits: Vec<bool>,
}

impl ContainTable {
    fn new(frame: &QueryFrame) -> Self {
        let n = frame.len();
        let m = frame.dim() + 1;
        let size = n.pow(m as u32);
        let mut bits = vec![false; size];
        let mut tuple = vec![0usize; m];
        for (code, bit) in bits.iter_mut().enumerate() {
            let mut c = code;
            for t in tuple.iter_mut() {
                *t = c % n;
                c /= n;
            }
            *bit = frame.contains(&tuple);
        }
        ContainTable { n, m, bits }
    }

    fn get(&self, tuple: &[usize]) -> bool {
        let code = tuple.iter().rev().fold(0, |acc, &t| acc * self.n + t);
        self.bits[code]
    }
}

/// Round-robin DFS for `m` classes of size `k`. Class minima increase, and
/// members increase within a class. A new member is checked against every
/// transversal through it as soon as all classes are nonempty.
fn search(table: &ContainTable, m: usize, k: usize) -> Option<Vec<Vec<usize>>> {
    struct St<'a> {
        table: &'a ContainTable,
        m: usize,
        k: usize,
        used: Vec<bool>,
        classes: Vec<Vec<usize>>,
    }

    fn transversals_ok(st: &St, c: usize, e: usize) -> bool {
        fn rec(st: &St, c: usize, e: usize, j: usize, cur: &mut Vec<usize>) -> bool {
            if j == st.m {
                return st.table.get(cur);
            }
            if j == c {
                cur.push(e);
                let ok = rec(st, c, e, j + 1, cur);
                cur.pop();
                return ok;
            }
            for &x in &st.classes[j] {
                cur.push(x);
                let ok = rec(st, c, e, j + 1, cur);
                cur.pop();
                if !ok {
                    return false;
                }
            }
            true
        }
        rec(st, c, e, 0, &mut Vec::with_capacity(st.m))
    }

    fn go(st: &mut St, slot: usize) -> bool {
        let total = st.m * st.k;
        if slot == total {
            return true;
        }
        let n = st.table.n;
        let free = st.used.iter().filter(|u| !**u).count();
        if free < total - slot {
            return false;
        }
        let c = slot % st.m;
        let lo = match st.classes[c].last() {
            Some(&x) => x + 1,
            None if c > 0 => st.classes[c - 1][0] + 1,
            None => 0,
        };
        let full_round = slot >= st.m - 1;
        for e in lo..n {
            if st.used[e] {
                continue;
            }
            if full_round && !transversals_ok(st, c, e) {
                continue;
            }
            st.used[e] = true;
            st.classes[c].push(e);
            if go(st, slot + 1) {
                return true;
            }
            st.classes[c].pop();
            st.used[e] = false;
        }
        false
    }

    let mut st = St {
        table,
        m,
        k,
        used: vec![false; table.n],
        classes: vec![Vec::new(); m],
    };
    debug_assert_eq!(table.m, m);
    go(&mut st, 0).then_some(st.classes)
}

/// No hyperplane meets the convex hulls of all classes. Supports `d ≤ 2`.
pub fn wellseparated_check(classes: &[Vec<usize>], s: &PointSet) -> Result<bool> {
    let sets: Vec<Vec<&Point>> = classes
        .iter()
        .map(|c| c.iter().map(|&i| s.point(i)).collect())
        .collect();
    if sets.iter().any(Vec::is_empty) {
        return Err(DepthError::Precondition("empty class".into()));
    }
    let union: Vec<&Point> = sets.iter().flatten().copied().collect();
    let directions: Vec<Vec<ExactScalar>> = match s.dim() {
        1 => vec![vec![one()]],
        2 => {
            // A transversal line exists iff one exists with a normal
            // orthogonal to a difference of two input points.
            let mut dirs = Vec::new();
            for (a, p) in union.iter().enumerate() {
                for r in &union[a + 1..] {
                    let diff = primitive(&r.sub(p));
                    if diff.iter().any(|x| x != &BigInt::from(0)) {
                        dirs.push(to_rational(&rot90(&diff)));
                    }
                }
            }
            if dirs.is_empty() {
                dirs.push(vec![one(), int(0)]);
            }
            dirs
        }
        d => return Err(DepthError::UnsupportedDimension(d)),
    };
    for u in &directions {
        let mut max_min: Option<ExactScalar> = None;
        let mut min_max: Option<ExactScalar> = None;
        for set in &sets {
            let vals: Vec<ExactScalar> = set.iter().map(|p| p.dot(u)).collect();
            let lo = vals.iter().min().unwrap().clone();
            let hi = vals.iter().max().unwrap().clone();
            if max_min.as_ref().map_or(true, |m| lo > *m) {
                max_min = Some(lo);
            }
            if min_max.as_ref().map_or(true, |m| hi < *m) {
                min_max = Some(hi);
            }
        }
        if max_min <= min_max {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Three closed halfplanes through the query with `H_i ∩ W = S_i` that
/// together cover the plane. Requires a verified 2D witness with the query
/// in general position relative to its points.
pub fn cover_halfplanes(w: &EnclosingWitness, s: &PointSet) -> Result<[OrientedHalfspace; 3]> {
    if s.dim() != 2 {
        return Err(DepthError::UnsupportedDimension(s.dim()));
    }
    if !verify_enclosing_oracle(s, w)? {
        return Err(DepthError::Precondition(
            "witness does not enclose the query".into(),
        ));
    }
    let q = &w.query;
    let union: Vec<usize> = w.classes.iter().flatten().copied().collect();
    let pts: Vec<Point> = union.iter().map(|&i| s.point(i).clone()).collect();
    let frame = QueryFrame::new(&pts, q);
    if !frame_in_general_position(&frame) {
        return Err(DepthError::Precondition(
            "query not in general position relative to the witness".into(),
        ));
    }
    let dir_of = |i: usize| {
        frame
            .dir(union.iter().position(|&u| u == i).unwrap())
            .clone()
    };
    let generic: Vec<IVec> = flags(2, frame.dirs())
        .iter()
        .map(|f| f.normal(frame.dirs()))
        .collect();
    let mut candidates: Vec<Vec<IVec>> = Vec::new();
    for i in 0..3 {
        let others: Vec<usize> = (0..3).filter(|&j| j != i).collect();
        let mut cand: Vec<IVec> = Vec::new();
        for &a in &w.classes[others[0]] {
            for &b in &w.classes[others[1]] {
                let diff = primitive(&s.point(b).sub(s.point(a)));
                if diff.iter().all(|x| x == &BigInt::from(0)) {
                    continue;
                }
                let u = rot90(&diff);
                cand.push(u.iter().map(|x| -x).collect());
                cand.push(u);
            }
        }
        cand.extend(generic.iter().cloned());
        let own: Vec<IVec> = w.classes[i].iter().map(|&x| dir_of(x)).collect();
        let rest: Vec<IVec> = others
            .iter()
            .flat_map(|&j| w.classes[j].iter().map(|&x| dir_of(x)))
            .collect();
        let zero = BigInt::from(0);
        cand.retain(|u| {
            own.iter().all(|x| crate::geom::frame::dot(u, x) >= zero)
                && rest.iter().all(|x| crate::geom::frame::dot(u, x) < zero)
        });
        cand.sort();
        cand.dedup();
        candidates.push(cand);
    }
    for u1 in &candidates[0] {
        for u2 in &candidates[1] {
            for u3 in &candidates[2] {
                if origin_in_hull(2, &[u1, u2, u3]) {
                    let h = |u: &IVec| OrientedHalfspace::through(q, to_rational(u));
                    return Ok([h(u1)?, h(u2)?, h(u3)?]);
                }
            }
        }
    }
    Err(DepthError::ConstructionFailed(
        "no covering halfplane triple found".into(),
    ))
}

/// Outcome of extending class `i` by a point `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConeCheck {
    /// `p - q` lies in the cone spanned by class `i` around the query.
    pub in_cone: bool,
    /// The extended classes still enclose the query.
    pub encloses: bool,
}

/// Adds `p` to class `i` of the witness and rechecks every transversal. A
/// point inside the cone of its class around the query keeps the enclosure.
pub fn cone_extension_check(
    w: &EnclosingWitness,
    s: &PointSet,
    p: &Point,
    i: usize,
) -> Result<ConeCheck> {
    w.validate(s)?;
    p.check_dim(s.dim())?;
    if i >= w.classes.len() {
        return Err(DepthError::Precondition(format!("class {i} out of range")));
    }
    let q = &w.query;
    let gens: Vec<Vec<ExactScalar>> = w.classes[i].iter().map(|&x| s.point(x).sub(q)).collect();
    let in_cone = !gens.is_empty() && in_cone(&gens, &p.sub(q));
    let mut pts = s.points().to_vec();
    pts.push(p.clone());
    let frame = QueryFrame::new(&pts, q);
    let mut classes = w.classes.clone();
    classes[i].push(s.len());
    Ok(ConeCheck {
        in_cone,
        encloses: encloses_by_transversals(&frame, &classes),
    })
}
