//! Brute-force oracles and random instance builders shared by the test
//! targets. Every oracle decides hull membership by linear feasibility and
//! never touches the flag machinery used by the library.

#![allow(dead_code)]

use combdepth::geom::lp::in_hull;
use combdepth::geom::scalar::{int, ratio, zero, ExactScalar};
use combdepth::geom::{Point, PointSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn mask_points(s: &PointSet, mask: u32) -> Vec<&Point> {
    (0..s.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| s.point(i))
        .collect()
}

/// `good[m]`: the query lies in the hull of the points in mask `m`.
pub fn good_masks(s: &PointSet, q: &Point) -> Vec<bool> {
    let n = s.len();
    (0..1u32 << n)
        .map(|m| m != 0 && in_hull(&mask_points(s, m), q))
        .collect()
}

/// Tukey depth as the least weight whose removal puts the query outside
/// the hull of what remains.
pub fn td_oracle(s: &PointSet, q: &Point) -> ExactScalar {
    let n = s.len();
    let full = (1u32 << n) - 1;
    let mut best: Option<ExactScalar> = None;
    for removed in 0..=full {
        let rest = full & !removed;
        if rest != 0 && in_hull(&mask_points(s, rest), q) {
            continue;
        }
        let w: ExactScalar = (0..n)
            .filter(|i| removed >> i & 1 == 1)
            .map(|i| s.weight(i))
            .sum();
        if best.as_ref().map_or(true, |b| &w < b) {
            best = Some(w);
        }
    }
    best.unwrap_or_else(zero)
}

/// Largest number of disjoint subsets whose hulls all contain the query.
pub fn tvd_oracle(s: &PointSet, q: &Point) -> usize {
    let n = s.len();
    let good = good_masks(s, q);
    let mut f = vec![0usize; 1 << n];
    for mask in 1..1u32 << n {
        let low = mask & mask.wrapping_neg();
        let mut best = f[(mask & !low) as usize];
        let rest = mask & !low;
        let mut sub = rest;
        loop {
            let part = sub | low;
            if good[part as usize] {
                best = best.max(1 + f[(mask & !part) as usize]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        f[mask as usize] = best;
    }
    f[(1usize << n) - 1]
}

/// Largest `k` with `d + 1` disjoint `k`-sets every transversal of which
/// spans a simplex containing the query, by exhaustive labeling.
pub fn ed_oracle(s: &PointSet, q: &Point) -> usize {
    let n = s.len();
    let d = s.dim();
    let classes = d + 1;
    let contains = |t: &[usize]| in_hull(&t.iter().map(|&i| s.point(i)).collect::<Vec<_>>(), q);
    let mut table = std::collections::HashMap::new();
    let mut tuple = vec![0usize; classes];
    let total = n.pow(classes as u32);
    for code in 0..total {
        let mut c = code;
        for slot in tuple.iter_mut() {
            *slot = c % n;
            c /= n;
        }
        let mut sorted = tuple.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() == classes {
            table
                .entry(sorted.clone())
                .or_insert_with(|| contains(&sorted));
        }
    }
    let mut best = 0;
    let mut labels = vec![0usize; n];
    for code in 0..(classes + 1).pow(n as u32) {
        let mut c = code;
        for l in labels.iter_mut() {
            *l = c % (classes + 1);
            c /= classes + 1;
        }
        let groups: Vec<Vec<usize>> = (1..=classes)
            .map(|g| (0..n).filter(|&i| labels[i] == g).collect())
            .collect();
        let k = groups[0].len();
        if k <= best || groups.iter().any(|g| g.len() != k) {
            continue;
        }
        let mut ok = true;
        let mut idx = vec![0usize; classes];
        'outer: loop {
            let mut t: Vec<usize> = (0..classes).map(|g| groups[g][idx[g]]).collect();
            t.sort_unstable();
            if !table[&t] {
                ok = false;
                break;
            }
            for g in 0..classes {
                idx[g] += 1;
                if idx[g] < k {
                    continue 'outer;
                }
                idx[g] = 0;
            }
            break;
        }
        if ok {
            best = k;
        }
    }
    best
}

/// Points with small integer coordinates, so collinear and coincident
/// configurations are common.
pub fn small_int_set(rng: &mut ChaCha8Rng, n: usize, d: usize, bound: i64) -> PointSet {
    let pts = (0..n)
        .map(|_| Point::new((0..d).map(|_| int(rng.gen_range(-bound..=bound))).collect()))
        .collect();
    PointSet::new(d, pts).unwrap()
}

/// A query drawn from data points, midpoints of pairs, or a random
/// half-integer position.
pub fn query_for(rng: &mut ChaCha8Rng, s: &PointSet, bound: i64) -> Point {
    let d = s.dim();
    match rng.gen_range(0..3) {
        0 => s.point(rng.gen_range(0..s.len())).clone(),
        1 => {
            let a = s.point(rng.gen_range(0..s.len()));
            let b = s.point(rng.gen_range(0..s.len()));
            a.lerp(b, &ratio(1, 2))
        }
        _ => Point::new(
            (0..d)
                .map(|_| ratio(rng.gen_range(-2 * bound..=2 * bound), 2))
                .collect(),
        ),
    }
}

/// Points on the parabola with a query in general position relative to
/// them, or an error-free retry when the draw is degenerate.
pub fn moment_instance(rng: &mut ChaCha8Rng, n: usize) -> (PointSet, Point) {
    use combdepth::geom::is_general_position_rel;
    loop {
        let mut ts: Vec<i64> = (-12..=12).collect();
        for i in (1..ts.len()).rev() {
            ts.swap(i, rng.gen_range(0..=i));
        }
        let pts: Vec<Point> = ts[..n]
            .iter()
            .map(|&t| Point::new(vec![int(t), int(t * t)]))
            .collect();
        let s = PointSet::new(2, pts).unwrap();
        let q = Point::new(vec![
            ratio(rng.gen_range(-40..=40), 7),
            ratio(rng.gen_range(0..=400), 5),
        ]);
        if is_general_position_rel(&s, &q).unwrap() {
            return (s, q);
        }
    }
}

/// Random rational points jittered off a coarse grid, with a query in
/// general position relative to them.
pub fn jittered_instance(rng: &mut ChaCha8Rng, n: usize) -> (PointSet, Point) {
    use combdepth::geom::is_general_position_rel;
    loop {
        let pts: Vec<Point> = (0..n)
            .map(|_| {
                Point::new(
                    (0..2)
                        .map(|_| int(rng.gen_range(-6..=6)) + ratio(rng.gen_range(-50..=50), 101))
                        .collect(),
                )
            })
            .collect();
        let s = PointSet::new(2, pts).unwrap();
        let q = Point::new((0..2).map(|_| ratio(rng.gen_range(-30..=30), 13)).collect());
        if points_in_general_position(&s) && is_general_position_rel(&s, &q).unwrap() {
            return (s, q);
        }
    }
}

/// No three points of a planar set are collinear.
pub fn points_in_general_position(s: &PointSet) -> bool {
    use combdepth::geom::orient;
    let n = s.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let t = [s.point(i).clone(), s.point(j).clone(), s.point(k).clone()];
                if orient(&t).unwrap() == 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// A 1D bichromatic set where blue surrounds red: each red point gets a
/// blue partner on each side (possibly coincident), plus a few extra blue
/// points anywhere.
pub fn surrounding_line(rng: &mut ChaCha8Rng, reds: usize) -> combdepth::radon::BichromaticSet {
    let p1 = |x: ExactScalar| Point::new(vec![x]);
    let mut red = Vec::new();
    let mut blue = Vec::new();
    for _ in 0..reds {
        let x = ratio(rng.gen_range(-40..=40), rng.gen_range(1..=4));
        blue.push(p1(&x - ratio(rng.gen_range(0..=6), 2)));
        blue.push(p1(&x + ratio(rng.gen_range(0..=6), 2)));
        red.push(p1(x));
    }
    for _ in 0..rng.gen_range(0..=3) {
        blue.push(p1(int(rng.gen_range(-50..=50))));
    }
    combdepth::radon::BichromaticSet::from_parts(1, red, blue).unwrap()
}

/// A planar set with Tukey depth at least 3 at a query that is not a data
/// point and lies in general position relative to the set.
pub fn e2_instance(rng: &mut ChaCha8Rng, n: usize) -> (PointSet, Point) {
    use combdepth::depth::tukey_depth;
    use combdepth::geom::is_general_position_rel;
    loop {
        let pts: Vec<Point> = (0..n)
            .map(|_| {
                Point::new(
                    (0..2)
                        .map(|_| ratio(rng.gen_range(-1000..=1000), 7))
                        .collect(),
                )
            })
            .collect();
        let s = PointSet::new(2, pts).unwrap();
        let q = Point::new(
            (0..2)
                .map(|_| ratio(rng.gen_range(-300..=300), 11))
                .collect(),
        );
        if s.points().contains(&q) || !is_general_position_rel(&s, &q).unwrap() {
            continue;
        }
        if tukey_depth(&s, &q).unwrap().as_i64() >= 3 {
            return (s, q);
        }
    }
}
