//! Feature decomposition of the line (or point) arrangement spanned by a
//! planar point set. Every combinatorial depth is constant on a feature.

use std::collections::{BTreeMap, BTreeSet};

use num::{Signed, Zero};

use crate::geom::frame::{primitive, to_rational};
use crate::geom::scalar::{int, ratio, ExactScalar};
use crate::geom::{Point, PointSet};

/// A line `a·x + b·y = c`, normalized so `(a, b)` is a primitive integer
/// vector whose first nonzero entry is positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line {
    pub a: ExactScalar,
    pub b: ExactScalar,
    pub c: ExactScalar,
}

impl Line {
    fn through(p: &Point, r: &Point) -> Option<Line> {
        let d = primitive(&r.sub(p));
        if d.iter().all(Zero::is_zero) {
            return None;
        }
        let mut n = to_rational(&[-d[1].clone(), d[0].clone()]);
        if n[0].is_negative() || (n[0].is_zero() && n[1].is_negative()) {
            n = n.into_iter().map(|x| -x).collect();
        }
        let c = p.dot(&n);
        let [a, b]: [ExactScalar; 2] = n.try_into().unwrap();
        Some(Line { a, b, c })
    }

    /// Sign of `a·x + b·y - c`.
    pub fn side(&self, p: &Point) -> i8 {
        let v = &self.a * p.coord(0) + &self.b * p.coord(1) - &self.c;
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    }

    fn intersect(&self, o: &Line) -> Option<Point> {
        let det = &self.a * &o.b - &self.b * &o.a;
        if det.is_zero() {
            return None;
        }
        let x = (&self.c * &o.b - &self.b * &o.c) / &det;
        let y = (&self.a * &o.c - &self.c * &o.a) / &det;
        Some(Point::new(vec![x, y]))
    }

    /// Position of `p` along the line's direction `(-b, a)`.
    fn param(&self, p: &Point) -> ExactScalar {
        -&self.b * p.coord(0) + &self.a * p.coord(1)
    }

    fn direction(&self) -> Vec<ExactScalar> {
        vec![-self.b.clone(), self.a.clone()]
    }
}

/// A relatively open cell of the decomposition with up to three exact
/// interior sample points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Feature {
    pub dim: usize,
    pub samples: Vec<Point>,
}

impl Feature {
    pub fn sample(&self) -> &Point {
        &self.samples[0]
    }
}

/// Decomposition of the line (`d = 1`: the real line) into vertices, edges
/// and cells.
#[derive(Debug, Clone)]
pub struct Arrangement2D {
    dim: usize,
    lines: Vec<Line>,
    vertices: Vec<Point>,
    edges: Vec<Feature>,
    cells: Vec<Feature>,
}

fn distinct_points(s: &PointSet) -> Vec<Point> {
    let set: BTreeSet<Point> = s.points().iter().cloned().collect();
    set.into_iter().collect()
}

fn mid(a: &ExactScalar, b: &ExactScalar, t: &ExactScalar) -> ExactScalar {
    a + (b - a) * t
}

fn fractions() -> [ExactScalar; 3] {
    [ratio(1, 2), ratio(1, 4), ratio(3, 4)]
}

impl Arrangement2D {
    pub fn build(s: &PointSet) -> Arrangement2D {
        match s.dim() {
            1 => Self::build_1d(s),
            2 => Self::build_2d(s),
            d => panic!("arrangements need dimension 1 or 2, got {d}"),
        }
    }

    fn build_1d(s: &PointSet) -> Arrangement2D {
        let xs: Vec<ExactScalar> = distinct_points(s)
            .into_iter()
            .map(|p| p.coord(0).clone())
            .collect();
        let p = |x: ExactScalar| Point::new(vec![x]);
        let mut cells = Vec::new();
        if xs.is_empty() {
            cells.push(Feature {
                dim: 1,
                samples: (0..3).map(|i| p(int(i))).collect(),
            });
        } else {
            let first = &xs[0];
            let last = &xs[xs.len() - 1];
            cells.push(Feature {
                dim: 1,
                samples: (1..=3).map(|i| p(first - int(i))).collect(),
            });
            for w in xs.windows(2) {
                cells.push(Feature {
                    dim: 1,
                    samples: fractions()
                        .iter()
                        .map(|t| p(mid(&w[0], &w[1], t)))
                        .collect(),
                });
            }
            cells.push(Feature {
                dim: 1,
                samples: (1..=3).map(|i| p(last + int(i))).collect(),
            });
        }
        Arrangement2D {
            dim: 1,
            lines: Vec::new(),
            vertices: xs.into_iter().map(p).collect(),
            edges: Vec::new(),
            cells,
        }
    }

    fn build_2d(s: &PointSet) -> Arrangement2D {
        let pts = distinct_points(s);
        let mut line_set = BTreeSet::new();
        for (i, p) in pts.iter().enumerate() {
            for r in &pts[i + 1..] {
                line_set.extend(Line::through(p, r));
            }
        }
        let lines: Vec<Line> = line_set.into_iter().collect();
        let mut vset: BTreeSet<Point> = pts.iter().cloned().collect();
        for (i, l) in lines.iter().enumerate() {
            for m in &lines[i + 1..] {
                vset.extend(l.intersect(m));
            }
        }
        let vertices: Vec<Point> = vset.into_iter().collect();

        let mut edges = Vec::new();
        for l in &lines {
            let mut on: Vec<(ExactScalar, &Point)> = vertices
                .iter()
                .filter(|v| l.side(v) == 0)
                .map(|v| (l.param(v), v))
                .collect();
            on.sort();
            let dir = l.direction();
            let step =
                |p: &Point, k: i64| p.add_vec(&dir.iter().map(|x| x * int(k)).collect::<Vec<_>>());
            let (first, last) = (on[0].1, on[on.len() - 1].1);
            edges.push(Feature {
                dim: 1,
                samples: (1..=3).map(|k| step(first, -k)).collect(),
            });
            for w in on.windows(2) {
                edges.push(Feature {
                    dim: 1,
                    samples: fractions().iter().map(|t| w[0].1.lerp(w[1].1, t)).collect(),
                });
            }
            edges.push(Feature {
                dim: 1,
                samples: (1..=3).map(|k| step(last, k)).collect(),
            });
        }

        let cells = Self::cells_2d(&lines, &vertices);
        Arrangement2D {
            dim: 2,
            lines,
            vertices,
            edges,
            cells,
        }
    }

    /// Cells via vertical slabs between consecutive vertex abscissae, merged
    /// by their sign vector against all lines.
    fn cells_2d(lines: &[Line], vertices: &[Point]) -> Vec<Feature> {
        let xs: Vec<ExactScalar> = vertices
            .iter()
            .map(|v| v.coord(0).clone())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut slab_xs: Vec<Vec<ExactScalar>> = Vec::new();
        if xs.is_empty() {
            slab_xs.push(vec![int(0), int(1), int(2)]);
        } else {
            slab_xs.push((1..=3).map(|i| &xs[0] - int(i)).collect());
            for w in xs.windows(2) {
                slab_xs.push(fractions().iter().map(|t| mid(&w[0], &w[1], t)).collect());
            }
            slab_xs.push((1..=3).map(|i| &xs[xs.len() - 1] + int(i)).collect());
        }
        let slanted: Vec<&Line> = lines.iter().filter(|l| !l.b.is_zero()).collect();
        let mut cells: BTreeMap<Vec<i8>, Vec<Point>> = BTreeMap::new();
        let mut order: Vec<Vec<i8>> = Vec::new();
        for group in &slab_xs {
            for x in group {
                let mut ys: Vec<ExactScalar> =
                    slanted.iter().map(|l| (&l.c - &l.a * x) / &l.b).collect();
                ys.sort();
                ys.dedup();
                let mut samples_y = Vec::new();
                match (ys.first(), ys.last()) {
                    (Some(lo), Some(hi)) => {
                        samples_y.push(lo - int(1));
                        for w in ys.windows(2) {
                            samples_y.push(mid(&w[0], &w[1], &ratio(1, 2)));
                        }
                        samples_y.push(hi + int(1));
                    }
                    _ => samples_y.push(int(0)),
                }
                for y in samples_y {
                    let p = Point::new(vec![x.clone(), y]);
                    let key: Vec<i8> = lines.iter().map(|l| l.side(&p)).collect();
                    let entry = cells.entry(key.clone()).or_insert_with(|| {
                        order.push(key);
                        Vec::new()
                    });
                    if entry.len() < 3 {
                        entry.push(p);
                    }
                }
            }
        }
        order
            .into_iter()
            .map(|k| Feature {
                dim: 2,
                samples: cells.remove(&k).unwrap(),
            })
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Feature] {
        &self.edges
    }

    pub fn cells(&self) -> &[Feature] {
        &self.cells
    }

    /// All features: vertices, then edges, then cells.
    pub fn features(&self) -> Vec<Feature> {
        self.vertices
            .iter()
            .map(|v| Feature {
                dim: 0,
                samples: vec![v.clone()],
            })
            .chain(self.edges.iter().cloned())
            .chain(self.cells.iter().cloned())
            .collect()
    }

    /// Euler characteristic check `V - E + F = 1 + components` on the
    /// complex clipped to a box that strictly contains every vertex.
    pub fn euler_check(&self) -> bool {
        if self.dim == 1 {
            let v = self.vertices.len() as i64;
            return self.cells.len() as i64 == v + 1;
        }
        if self.lines.is_empty() {
            // No edges: isolated vertices inside the box, plus its boundary.
            let v = self.vertices.len() as i64;
            let (vv, ee, ff) = (v + 4, 4, self.cells.len() as i64 + 1);
            return vv - ee + ff == 2 + v;
        }
        let coords = |i: usize| self.vertices.iter().map(move |v| v.coord(i).clone());
        let (x0, x1) = (coords(0).min().unwrap(), coords(0).max().unwrap());
        let (y0, y1) = (coords(1).min().unwrap(), coords(1).max().unwrap());
        let span = [&x1 - &x0, &y1 - &y0, int(1)].into_iter().max().unwrap();
        let m = span * int(2);
        let (bx0, bx1, by0, by1) = (x0 - &m, x1 + &m, y0 - &m, y1 + &m);
        let mut perimeter: BTreeSet<Point> = BTreeSet::new();
        for x in [&bx0, &bx1] {
            for y in [&by0, &by1] {
                perimeter.insert(Point::new(vec![x.clone(), y.clone()]));
            }
        }
        let mut segments = 0i64;
        for l in &self.lines {
            let on = self.vertices.iter().filter(|v| l.side(v) == 0).count() as i64;
            segments += on + 1;
            let mut hits = Vec::new();
            for x in [&bx0, &bx1] {
                if !l.b.is_zero() {
                    let y = (&l.c - &l.a * x) / &l.b;
                    if y >= by0 && y <= by1 {
                        hits.push(Point::new(vec![x.clone(), y]));
                    }
                }
            }
            for y in [&by0, &by1] {
                if !l.a.is_zero() {
                    let x = (&l.c - &l.b * y) / &l.a;
                    if x >= bx0 && x <= bx1 {
                        hits.push(Point::new(vec![x, y.clone()]));
                    }
                }
            }
            perimeter.extend(hits);
        }
        let v = self.vertices.len() as i64 + perimeter.len() as i64;
        let e = segments + perimeter.len() as i64;
        let f = self.cells.len() as i64 + 1;
        v - e + f == 2
    }

    /// Index of the feature containing `p`, in [`features`](Self::features)
    /// order.
    pub fn locate(&self, p: &Point) -> usize {
        if let Some(i) = self.vertices.iter().position(|v| v == p) {
            return i;
        }
        let nv = self.vertices.len();
        if self.dim == 1 {
            let x = p.coord(0);
            let below = self.vertices.iter().filter(|v| v.coord(0) < x).count();
            return nv + below;
        }
        let key: Vec<i8> = self.lines.iter().map(|l| l.side(p)).collect();
        if let Some(li) = self.lines.iter().position(|l| l.side(p) == 0) {
            let l = &self.lines[li];
            let before: usize = (0..li).map(|lj| self.edges_on(lj)).sum();
            let t = l.param(p);
            let k = self
                .vertices
                .iter()
                .filter(|v| l.side(v) == 0 && l.param(v) < t)
                .count();
            return nv + before + k;
        }
        let base = nv + self.edges.len();
        base + self
            .cells
            .iter()
            .position(|c| {
                self.lines
                    .iter()
                    .map(|l| l.side(c.sample()))
                    .collect::<Vec<i8>>()
                    == key
            })
            .expect("every point lies in a cell")
    }

    fn edges_on(&self, line: usize) -> usize {
        let l = &self.lines[line];
        self.vertices.iter().filter(|v| l.side(v) == 0).count() + 1
    }
}
