//! Bichromatic point sets, the surrounds predicate, positive-fraction Radon
//! partitions that respect colors, and the planar enclosing construction
//! built on them.

use num::{BigInt, Signed};

use crate::depth::{minimizing_flag, verify_enclosing_oracle, EnclosingWitness};
use crate::error::{DepthError, Result};
use crate::geom::frame::{dot, flags, primitive, rot90, IVec, QueryFrame};
use crate::geom::lp::hull_intersection;
use crate::geom::predicates::frame_in_general_position;
use crate::geom::scalar::{int, one, ratio, ExactScalar};
use crate::geom::{Color, Point, PointSet};

/// A point set in which every point is red or blue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BichromaticSet {
    base: PointSet,
    red: Vec<usize>,
    blue: Vec<usize>,
}

impl BichromaticSet {
    pub fn new(base: PointSet) -> Result<Self> {
        if base.colors().is_none() {
            return Err(DepthError::InvalidPointSet(
                "bichromatic set needs colors".into(),
            ));
        }
        Ok(BichromaticSet {
            red: base.indices_of(Color::Red),
            blue: base.indices_of(Color::Blue),
            base,
        })
    }

    /// Red points first, then blue.
    pub fn from_parts(dim: usize, red: Vec<Point>, blue: Vec<Point>) -> Result<Self> {
        let colors = std::iter::repeat(Color::Red)
            .take(red.len())
            .chain(std::iter::repeat(Color::Blue).take(blue.len()))
            .collect();
        let points = red.into_iter().chain(blue).collect();
        BichromaticSet::new(PointSet::colored(dim, points, colors)?)
    }

    pub fn base(&self) -> &PointSet {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn red(&self) -> &[usize] {
        &self.red
    }

    pub fn blue(&self) -> &[usize] {
        &self.blue
    }

    pub fn point(&self, i: usize) -> &Point {
        self.base.point(i)
    }
}

/// Color classes of a Radon partition that respects colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadonFractionWitness {
    pub red_classes: Vec<Vec<usize>>,
    pub blue_classes: Vec<Vec<usize>>,
}

impl RadonFractionWitness {
    pub fn a(&self) -> usize {
        self.red_classes.len()
    }

    pub fn b(&self) -> usize {
        self.blue_classes.len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.red_classes
            .iter()
            .chain(&self.blue_classes)
            .map(Vec::len)
            .collect()
    }
}

/// Every halfspace contains at least as many blue points as red points.
/// Halfspaces are enumerated up to their intersection with `P`: for every
/// generic sweep direction, each prefix of the sorted order that does not
/// split coincident points.
pub fn surrounds(p: &BichromaticSet) -> Result<bool> {
    let d = p.dim();
    if d > 2 {
        return Err(DepthError::UnsupportedDimension(d));
    }
    if p.red.is_empty() {
        return Ok(true);
    }
    let pts = p.base.points();
    let mut diffs: Vec<IVec> = Vec::new();
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            if a != b {
                diffs.push(primitive(&b.sub(a)));
            }
        }
    }
    let colors = p.base.colors().unwrap();
    for flag in flags(d, &diffs) {
        let mut order: Vec<usize> = (0..pts.len()).collect();
        order.sort_by(|&i, &j| flag.compare_points(&pts[j], &pts[i]));
        let mut balance = 0i64;
        for (pos, &i) in order.iter().enumerate() {
            balance += if colors[i] == Color::Blue { 1 } else { -1 };
            let boundary = order.get(pos + 1).map_or(true, |&j| pts[j] != pts[i]);
            if boundary && balance < 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn sorted_by_value(p: &BichromaticSet, idx: &[usize]) -> Vec<usize> {
    let mut v = idx.to_vec();
    v.sort_by(|&i, &j| p.point(i).coord(0).cmp(p.point(j).coord(0)).then(i.cmp(&j)));
    v
}

/// The one-dimensional construction with `a = 1`, `b = 2`: the `⌊|R|/3⌋`
/// leftmost and rightmost blue points, and that many red points between
/// them.
pub fn radon1d_construct(p: &BichromaticSet) -> Result<RadonFractionWitness> {
    if p.dim() != 1 {
        return Err(DepthError::UnsupportedDimension(p.dim()));
    }
    if p.red.len() < 3 {
        return Err(DepthError::Precondition("too few red points".into()));
    }
    if !surrounds(p)? {
        return Err(DepthError::Precondition(
            "blue points do not surround red points".into(),
        ));
    }
    let m = p.red.len() / 3;
    let blue = sorted_by_value(p, &p.blue);
    let b1: Vec<usize> = blue[..m].to_vec();
    let b2: Vec<usize> = blue[blue.len() - m..].to_vec();
    let x1 = p.point(b1[m - 1]).coord(0).clone();
    let x2 = p.point(b2[0]).coord(0).clone();
    let r1: Vec<usize> = sorted_by_value(p, &p.red)
        .into_iter()
        .filter(|&i| {
            let x = p.point(i).coord(0);
            *x >= x1 && *x <= x2
        })
        .take(m)
        .collect();
    if r1.len() < m {
        return Err(DepthError::ConstructionFailed(
            "fewer red points between the split positions than the counting bound".into(),
        ));
    }
    let sorted = |mut v: Vec<usize>| {
        v.sort_unstable();
        v
    };
    Ok(RadonFractionWitness {
        red_classes: vec![sorted(r1)],
        blue_classes: vec![sorted(b1), sorted(b2)],
    })
}

/// `c₂ = ⌊|R|/3⌋ / |R|`, the fraction achieved by [`radon1d_construct`].
pub fn radon1d_fraction(p: &BichromaticSet) -> ExactScalar {
    ratio((p.red.len() / 3) as i64, p.red.len().max(1) as i64)
}

fn hulls_meet(dim: usize, a: &[&Point], b: &[&Point]) -> bool {
    if dim == 1 {
        let lo = |v: &[&Point]| v.iter().map(|p| p.coord(0)).min().unwrap().clone();
        let hi = |v: &[&Point]| v.iter().map(|p| p.coord(0)).max().unwrap().clone();
        return lo(a) <= hi(b) && lo(b) <= hi(a);
    }
    hull_intersection(a, b).is_some()
}

/// The first violated condition of a color-respecting fraction Radon
/// witness, or `None` if all hold.
pub fn fraction_radon_violation(
    p: &BichromaticSet,
    w: &RadonFractionWitness,
    c2: &ExactScalar,
) -> Result<Option<String>> {
    let d = p.dim();
    if d > 2 {
        return Err(DepthError::UnsupportedDimension(d));
    }
    let n = p.base.len();
    for class in w.red_classes.iter().chain(&w.blue_classes) {
        if class.is_empty() {
            return Err(DepthError::MalformedWitness("empty class".into()));
        }
        if let Some(&i) = class.iter().find(|&&i| i >= n) {
            return Err(DepthError::MalformedWitness(format!(
                "index {i} out of range"
            )));
        }
    }
    if w.a() + w.b() != d + 2 {
        return Ok(Some(format!(
            "a + b = {} but d + 2 = {}",
            w.a() + w.b(),
            d + 2
        )));
    }
    let mut seen = vec![false; n];
    for class in w.red_classes.iter().chain(&w.blue_classes) {
        for &i in class {
            if seen[i] {
                return Ok(Some("classes overlap".into()));
            }
            seen[i] = true;
        }
    }
    let colors = p.base.colors().unwrap();
    for (classes, color) in [(&w.red_classes, Color::Red), (&w.blue_classes, Color::Blue)] {
        for class in classes.iter() {
            if class.iter().any(|&i| colors[i] != color) {
                return Ok(Some(format!(
                    "a {color:?} class contains a point of the other color"
                )));
            }
        }
    }
    let bound = c2 * int(p.red.len() as i64);
    for class in w.red_classes.iter().chain(&w.blue_classes) {
        if int(class.len() as i64) < bound {
            return Ok(Some(format!("class of size {} below c2·|R|", class.len())));
        }
    }
    let classes: Vec<&Vec<usize>> = w.red_classes.iter().chain(&w.blue_classes).collect();
    let mut cur = Vec::with_capacity(classes.len());
    if let Some(t) = first_bad_transversal(p, &classes, w.a(), &mut cur) {
        return Ok(Some(format!("transversal {t:?} has disjoint color hulls")));
    }
    Ok(None)
}

fn first_bad_transversal(
    p: &BichromaticSet,
    classes: &[&Vec<usize>],
    a: usize,
    cur: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if cur.len() == classes.len() {
        let red: Vec<&Point> = cur[..a].iter().map(|&i| p.point(i)).collect();
        let blue: Vec<&Point> = cur[a..].iter().map(|&i| p.point(i)).collect();
        return (!hulls_meet(p.dim(), &red, &blue)).then(|| cur.clone());
    }
    for &i in classes[cur.len()] {
        cur.push(i);
        let bad = first_bad_transversal(p, classes, a, cur);
        cur.pop();
        if bad.is_some() {
            return bad;
        }
    }
    None
}

/// All four conditions: `a + b = d + 2`, disjoint classes of the right
/// colors, sizes at least `c₂·|R|`, and intersecting color hulls for every
/// transversal.
pub fn verify_fraction_radon(
    p: &BichromaticSet,
    w: &RadonFractionWitness,
    c2: &ExactScalar,
) -> Result<bool> {
    Ok(fraction_radon_violation(p, w, c2)?.is_none())
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// `count` pairwise disjoint classes from `pool`, first elements increasing.
fn disjoint_families(pool: &[Vec<usize>], count: usize) -> Vec<Vec<usize>> {
    fn rec(
        pool: &[Vec<usize>],
        count: usize,
        start: usize,
        used: u64,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == count {
            out.push(cur.clone());
            return;
        }
        for (ci, class) in pool.iter().enumerate().skip(start) {
            let mask = class.iter().fold(0u64, |m, &i| m | 1 << i);
            if mask & used == 0 {
                cur.push(ci);
                rec(pool, count, ci + 1, used | mask, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(pool, count, 0, 0, &mut Vec::new(), &mut out);
    out
}

/// Brute force over `(a, b)` with `a + b = d + 2` and classes of exactly
/// `size` points, returning the first verified witness. No result does not
/// mean none exists at a smaller size.
pub fn fraction_radon_search_small(
    p: &BichromaticSet,
    size: usize,
    n_cap: usize,
) -> Result<Option<RadonFractionWitness>> {
    let d = p.dim();
    if d > 2 {
        return Err(DepthError::UnsupportedDimension(d));
    }
    let n = p.base.len();
    if n > n_cap || n > 63 {
        return Err(DepthError::CapExceeded {
            what: "fraction_radon_search_small",
            size: n,
            cap: n_cap.min(63),
            hint: "search a smaller instance",
        });
    }
    if size == 0 || size > p.red.len() {
        return Ok(None);
    }
    let c2 = ratio(size as i64, p.red.len() as i64);
    let red_pool = combinations(&p.red, size);
    let blue_pool = combinations(&p.blue, size);
    for a in 1..=d + 1 {
        let b = d + 2 - a;
        let reds = disjoint_families(&red_pool, a);
        let blues = disjoint_families(&blue_pool, b);
        for rf in &reds {
            for bf in &blues {
                let w = RadonFractionWitness {
                    red_classes: rf.iter().map(|&c| red_pool[c].clone()).collect(),
                    blue_classes: bf.iter().map(|&c| blue_pool[c].clone()).collect(),
                };
                if verify_fraction_radon(p, &w, &c2)? {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

/// Projection of a planar set around `q` to a line, with the red side of a
/// minimal Tukey halfplane mapped through `q`.
#[derive(Debug, Clone)]
pub struct E2Projection {
    /// Red points lie on the closed minimal side.
    pub colors: Vec<Color>,
    /// Coordinate of each point on the tangent line.
    pub coords: Vec<ExactScalar>,
    pub depth: usize,
}

/// Colors each point by the minimizing Tukey flag and centrally projects it
/// from `q` onto the line `u·x = -1` opposite the red side.
pub fn project_e2(s: &PointSet, q: &Point) -> Result<E2Projection> {
    let frame = QueryFrame::new(s.points(), q);
    let (value, flag) = minimizing_flag(&frame, &vec![one(); s.len()]);
    let u = flag.normal(frame.dirs());
    let w = rot90(&u);
    let zero = BigInt::from(0);
    let mut colors = Vec::with_capacity(s.len());
    let mut coords = Vec::with_capacity(s.len());
    for x in frame.dirs() {
        let ux = dot(&u, x);
        if ux == zero {
            return Err(DepthError::Precondition(
                "point on the separating line".into(),
            ));
        }
        colors.push(if ux.is_positive() {
            Color::Red
        } else {
            Color::Blue
        });
        coords.push(-ExactScalar::new(dot(&w, x), ux));
    }
    Ok(E2Projection {
        colors,
        coords,
        depth: crate::geom::scalar::to_i64(&value).unwrap() as usize,
    })
}

/// A `⌊k/3⌋`-enclosing witness for `q` in a planar set of Tukey depth
/// `k ≥ 3`, built by projecting to a line and applying the
/// one-dimensional construction. The result is checked against the
/// transversal oracle before it is returned.
pub fn construct_e2_witness(s: &PointSet, q: &Point) -> Result<EnclosingWitness> {
    if s.dim() != 2 {
        return Err(DepthError::UnsupportedDimension(s.dim()));
    }
    s.check_query(q)?;
    if let Some(i) = s.points().iter().position(|p| p == q) {
        return Err(DepthError::CoincidentPoint(i));
    }
    if !frame_in_general_position(&QueryFrame::new(s.points(), q)) {
        return Err(DepthError::Precondition(
            "query not in general position".into(),
        ));
    }
    let proj = project_e2(s, q)?;
    if proj.depth < 3 {
        return Err(DepthError::Precondition(format!(
            "depth too small: {}",
            proj.depth
        )));
    }
    let line = BichromaticSet::new(PointSet::colored(
        1,
        proj.coords
            .iter()
            .map(|c| Point::new(vec![c.clone()]))
            .collect(),
        proj.colors.clone(),
    )?)?;
    if line.red().len() != proj.depth {
        return Err(DepthError::ConstructionFailed(
            "red side differs from the depth".into(),
        ));
    }
    if !surrounds(&line)? {
        return Err(DepthError::ConstructionFailed(
            "projected blue points do not surround the red points".into(),
        ));
    }
    let r = radon1d_construct(&line)?;
    let classes = vec![
        r.red_classes[0].clone(),
        r.blue_classes[0].clone(),
        r.blue_classes[1].clone(),
    ];
    let w = EnclosingWitness::new(classes, q.clone());
    if !verify_enclosing_oracle(s, &w)? {
        return Err(DepthError::ConstructionFailed(
            "construction bug: witness does not enclose".into(),
        ));
    }
    Ok(w)
}
