//! Directions around a query point.
//!
//! Every predicate that only depends on the rays `s - q` works on primitive
//! integer direction vectors: scaling a ray by a positive factor changes no
//! sign, so exact integer arithmetic is enough.
//!
//! A [`Flag`] is an ordered orthogonal frame `(f1, .., fd)` standing for the
//! infinitesimally perturbed direction `f1 + e f2 + e^2 f3`. Its side test is
//! lexicographic, and for the flags produced by [`flags`] it never returns
//! zero on a nonzero input. Every open cell of the great-sphere arrangement
//! cut out by the input rays is realized by at least one flag, which turns
//! "for all halfspaces through q" into a finite enumeration.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num::{BigInt, Integer, One, Signed, Zero};

use super::lp;
use super::point::Point;
use super::scalar::ExactScalar;

/// Integer vector in dimension 1..=3.
pub type IVec = Vec<BigInt>;

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

pub fn cross(a: &[BigInt], b: &[BigInt]) -> IVec {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// 2D cross product `a.x * b.y - a.y * b.x`.
pub fn cross2(a: &[BigInt], b: &[BigInt]) -> BigInt {
    &a[0] * &b[1] - &a[1] * &b[0]
}

pub fn is_zero(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn neg(v: &[BigInt]) -> IVec {
    v.iter().map(|x| -x).collect()
}

/// Counter-clockwise quarter turn.
pub fn rot90(v: &[BigInt]) -> IVec {
    vec![-v[1].clone(), v[0].clone()]
}

/// Divides out the gcd of the entries.
pub fn reduce(v: IVec) -> IVec {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        v
    } else {
        v.into_iter().map(|x| x / &g).collect()
    }
}

/// Primitive integer vector with the same direction as `v`.
pub fn primitive(v: &[ExactScalar]) -> IVec {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    reduce(v.iter().map(|x| x.numer() * (&l / x.denom())).collect())
}

/// Integer vector as rationals.
pub fn to_rational(v: &[BigInt]) -> Vec<ExactScalar> {
    v.iter()
        .map(|x| ExactScalar::from_integer(x.clone()))
        .collect()
}

fn sign(x: &BigInt) -> Ordering {
    x.cmp(&BigInt::zero())
}

/// An orthogonal frame standing for a perturbed direction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Flag {
    axes: Vec<IVec>,
}

impl Flag {
    pub fn new(axes: Vec<IVec>) -> Self {
        Flag { axes }
    }

    pub fn axes(&self) -> &[IVec] {
        &self.axes
    }

    pub fn primary(&self) -> &IVec {
        &self.axes[0]
    }

    /// Lexicographic sign of `x` against the perturbed direction.
    pub fn side(&self, x: &[BigInt]) -> Ordering {
        for f in &self.axes {
            let s = sign(&dot(f, x));
            if s != Ordering::Equal {
                return s;
            }
        }
        Ordering::Equal
    }

    /// Lexicographic comparison of two rational points along the flag.
    pub fn compare_points(&self, a: &Point, b: &Point) -> Ordering {
        for f in &self.axes {
            let fr = to_rational(f);
            let o = a.dot(&fr).cmp(&b.dot(&fr));
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    }

    /// An explicit integer normal `u` whose plain sign agrees with
    /// [`Flag::side`] on every vector in `xs`.
    pub fn normal(&self, xs: &[IVec]) -> IVec {
        let d = self.axes.len();
        if d == 1 {
            return self.axes[0].clone();
        }
        let mut bound = BigInt::zero();
        for x in xs {
            let tail = self.axes[1..]
                .iter()
                .fold(BigInt::zero(), |acc, f| acc + dot(f, x).abs());
            if tail > bound {
                bound = tail;
            }
        }
        let m = bound + BigInt::one();
        // u = m^(d-1) f1 + m^(d-2) f2 + ... + f_d
        let mut u = vec![BigInt::zero(); self.axes[0].len()];
        for f in &self.axes {
            for (ui, fi) in u.iter_mut().zip(f) {
                *ui = &*ui * &m + fi;
            }
        }
        reduce(u)
    }
}

fn unit(dim: usize, k: usize) -> IVec {
    (0..dim)
        .map(|i| {
            if i == k {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect()
}

fn any_perpendicular(f: &[BigInt]) -> IVec {
    (0..3)
        .map(|k| reduce(cross(f, &unit(3, k))))
        .find(|v| !is_zero(v))
        .expect("nonzero vector has a perpendicular")
}

/// Flags covering every open cell of the arrangement of hyperplanes
/// `{u : u . x = 0}` for the nonzero `x` in `xs`. Deterministic order.
pub fn flags(dim: usize, xs: &[IVec]) -> Vec<Flag> {
    let nonzero: Vec<&IVec> = xs.iter().filter(|x| !is_zero(x)).collect();
    match dim {
        1 => vec![
            Flag::new(vec![vec![BigInt::one()]]),
            Flag::new(vec![vec![-BigInt::one()]]),
        ],
        2 => {
            let mut primaries = BTreeSet::new();
            for x in &nonzero {
                let p = reduce(rot90(x));
                primaries.insert(neg(&p));
                primaries.insert(p);
            }
            if primaries.is_empty() {
                primaries.insert(unit(2, 0));
                primaries.insert(neg(&unit(2, 0)));
            }
            let mut out = Vec::with_capacity(primaries.len() * 2);
            for f1 in primaries {
                let f2 = rot90(&f1);
                out.push(Flag::new(vec![f1.clone(), f2.clone()]));
                out.push(Flag::new(vec![f1, neg(&f2)]));
            }
            out
        }
        3 => {
            let mut primaries = BTreeSet::new();
            for (i, a) in nonzero.iter().enumerate() {
                for b in &nonzero[i + 1..] {
                    let c = reduce(cross(a, b));
                    if !is_zero(&c) {
                        primaries.insert(neg(&c));
                        primaries.insert(c);
                    }
                }
            }
            if primaries.is_empty() {
                let a = match nonzero.first() {
                    Some(x) => reduce((*x).clone()),
                    None => unit(3, 0),
                };
                primaries.insert(neg(&a));
                primaries.insert(a);
            }
            let mut out = Vec::new();
            for f1 in primaries {
                let mut seconds = BTreeSet::new();
                for y in &nonzero {
                    if dot(&f1, y).is_zero() {
                        let s = reduce(cross(&f1, y));
                        seconds.insert(neg(&s));
                        seconds.insert(s);
                    }
                }
                if seconds.is_empty() {
                    let s = any_perpendicular(&f1);
                    seconds.insert(neg(&s));
                    seconds.insert(s);
                }
                for f2 in seconds {
                    let f3 = reduce(cross(&f1, &f2));
                    out.push(Flag::new(vec![f1.clone(), f2.clone(), f3.clone()]));
                    out.push(Flag::new(vec![f1.clone(), f2, neg(&f3)]));
                }
            }
            out
        }
        _ => panic!("unsupported dimension {dim}"),
    }
}

/// `0 ∈ conv(vs)` for integer vectors in dimension `dim`.
pub fn origin_in_hull(dim: usize, vs: &[&IVec]) -> bool {
    if vs.is_empty() {
        return false;
    }
    if vs.iter().any(|v| is_zero(v)) {
        return true;
    }
    match dim {
        1 => vs.iter().any(|v| v[0].is_positive()) && vs.iter().any(|v| v[0].is_negative()),
        2 => match vs.len() {
            1 => false,
            2 => antiparallel(vs[0], vs[1]),
            3 => triple_contains_origin(vs[0], vs[1], vs[2]),
            _ => {
                // Carathéodory: some triple or pair already contains the origin.
                let n = vs.len();
                for i in 0..n {
                    for j in i + 1..n {
                        if antiparallel(vs[i], vs[j]) {
                            return true;
                        }
                        for k in j + 1..n {
                            if triple_contains_origin(vs[i], vs[j], vs[k]) {
                                return true;
                            }
                        }
                    }
                }
                false
            }
        },
        _ => {
            let gens: Vec<Vec<ExactScalar>> = vs.iter().map(|v| to_rational(v)).collect();
            let pts: Vec<Point> = gens.into_iter().map(Point::new).collect();
            let refs: Vec<&Point> = pts.iter().collect();
            let origin = Point::new(vec![ExactScalar::zero(); dim]);
            lp::in_hull(&refs, &origin)
        }
    }
}

fn antiparallel(a: &[BigInt], b: &[BigInt]) -> bool {
    cross2(a, b).is_zero() && dot(a, b).is_negative()
}

fn triple_contains_origin(a: &[BigInt], b: &[BigInt], c: &[BigInt]) -> bool {
    if antiparallel(a, b) || antiparallel(b, c) || antiparallel(a, c) {
        return true;
    }
    let s1 = sign(&cross2(a, b));
    let s2 = sign(&cross2(b, c));
    let s3 = sign(&cross2(c, a));
    s1 != Ordering::Equal && s1 == s2 && s2 == s3
}

/// Rays from a query point to every point of a set.
#[derive(Debug, Clone)]
pub struct QueryFrame {
    dim: usize,
    dirs: Vec<IVec>,
}

impl QueryFrame {
    pub fn new(points: &[Point], q: &Point) -> Self {
        QueryFrame {
            dim: q.dim(),
            dirs: points.iter().map(|p| primitive(&p.sub(q))).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn dirs(&self) -> &[IVec] {
        &self.dirs
    }

    pub fn dir(&self, i: usize) -> &IVec {
        &self.dirs[i]
    }

    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }

    pub fn is_at_query(&self, i: usize) -> bool {
        is_zero(&self.dirs[i])
    }

    /// The query lies in the hull of the indexed points.
    pub fn contains(&self, indices: &[usize]) -> bool {
        let vs: Vec<&IVec> = indices.iter().map(|&i| &self.dirs[i]).collect();
        origin_in_hull(self.dim, &vs)
    }

    /// Flags for the rays of this frame.
    pub fn flags(&self) -> Vec<Flag> {
        flags(self.dim, &self.dirs)
    }

    /// Indices on the closed side of the flag's perturbed hyperplane through
    /// the query (points at the query always count).
    pub fn closed_side(&self, flag: &Flag) -> Vec<usize> {
        (0..self.dirs.len())
            .filter(|&i| flag.side(&self.dirs[i]) != Ordering::Less)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IVec {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn flags_are_generic() {
        let xs = vec![iv(&[1, 0]), iv(&[1, 1]), iv(&[-2, 3]), iv(&[0, 0])];
        let fl = flags(2, &xs);
        assert_eq!(fl.len(), 12);
        for f in &fl {
            for x in &xs {
                if !is_zero(x) {
                    assert_ne!(f.side(x), Ordering::Equal);
                    let u = f.normal(&xs);
                    assert_eq!(sign(&dot(&u, x)), f.side(x));
                }
            }
        }
        let xs3 = vec![
            iv(&[1, 0, 0]),
            iv(&[0, 1, 0]),
            iv(&[1, 1, 0]),
            iv(&[1, 2, 3]),
        ];
        for f in flags(3, &xs3) {
            let u = f.normal(&xs3);
            for x in &xs3 {
                assert_ne!(f.side(x), Ordering::Equal);
                assert_eq!(sign(&dot(&u, x)), f.side(x));
            }
        }
    }

    #[test]
    fn origin_tests() {
        let a = iv(&[1, 0]);
        let b = iv(&[-1, 1]);
        let c = iv(&[-1, -1]);
        assert!(origin_in_hull(2, &[&a, &b, &c]));
        assert!(!origin_in_hull(2, &[&a, &b]));
        let d = iv(&[-3, 0]);
        assert!(origin_in_hull(2, &[&a, &d]));
        assert!(origin_in_hull(1, &[&iv(&[2]), &iv(&[-1])]));
        assert!(!origin_in_hull(1, &[&iv(&[2]), &iv(&[1])]));
        let t = [
            iv(&[1, 0, 0]),
            iv(&[0, 1, 0]),
            iv(&[0, 0, 1]),
            iv(&[-1, -1, -1]),
        ];
        let tr: Vec<&IVec> = t.iter().collect();
        assert!(origin_in_hull(3, &tr));
        assert!(!origin_in_hull(3, &tr[..3]));
    }
}
