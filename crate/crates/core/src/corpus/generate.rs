//! Seeded instance families.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{DepthError, Result};
use crate::geom::scalar::{int, ratio, ExactScalar};
use crate::geom::{Point, PointSet, MAX_DIM};

/// Denominator used for jitter offsets.
pub const JITTER_DEN: i64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    RandomRational,
    Grid,
    MomentCurve,
    Collinear,
    Clusters,
    Fig1,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::RandomRational,
        Family::Grid,
        Family::MomentCurve,
        Family::Collinear,
        Family::Clusters,
        Family::Fig1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::RandomRational => "random_rational",
            Family::Grid => "grid",
            Family::MomentCurve => "moment_curve",
            Family::Collinear => "collinear",
            Family::Clusters => "clusters",
            Family::Fig1 => "fig1",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = DepthError;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| DepthError::Precondition(format!("unknown family '{s}'")))
    }
}

/// Family-specific knobs. Unused fields are ignored by a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusParams {
    /// Number of cluster centers.
    pub clusters: usize,
    /// Cluster radius per coordinate.
    pub spread: i64,
    /// Coordinate bound for random draws.
    pub extent: i64,
    /// Jitter bound in units of 1/JITTER_DEN.
    pub jitter: i64,
    /// Attach random weights in 1..=4.
    pub weighted: bool,
    /// Draw a random query point (fig1 always has one).
    pub query: bool,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams {
            clusters: 3,
            spread: 2,
            extent: 10,
            jitter: 0,
            weighted: false,
            query: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub family: Family,
    pub n: usize,
    pub d: usize,
    pub seed: u64,
    pub params: CorpusParams,
}

impl CorpusSpec {
    pub fn new(family: Family, n: usize, d: usize, seed: u64) -> Self {
        CorpusSpec {
            family,
            n,
            d,
            seed,
            params: CorpusParams::default(),
        }
    }

    pub fn with_params(mut self, params: CorpusParams) -> Self {
        self.params = params;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub set: PointSet,
    pub query: Option<Point>,
}

/// The two-triangle configuration: a blue and a red triangle around the
/// origin, each enclosing it, whose union has enclosing depth 1.
pub fn fig1_configuration() -> (PointSet, Point) {
    let s = PointSet::from_ints(
        2,
        &[&[-3, -1], &[5, -1], &[1, 5], &[-4, 1], &[4, 1], &[0, -5]],
    )
    .expect("static configuration");
    (s, Point::from_ints(&[0, 0]))
}

fn rational(rng: &mut ChaCha8Rng, bound: i64, max_den: i64) -> ExactScalar {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(-bound * den..=bound * den);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn jittered(rng: &mut ChaCha8Rng, p: &Point, jitter: i64) -> Point {
    if jitter == 0 {
        return p.clone();
    }
    Point::new(
        p.coords()
            .iter()
            .map(|c| c + ratio(rng.gen_range(-jitter..=jitter), JITTER_DEN))
            .collect(),
    )
}

/// Deterministic instance for `spec`.
pub fn generate(spec: &CorpusSpec) -> Result<Generated> {
    let CorpusSpec {
        family,
        n,
        d,
        seed,
        ref params,
    } = *spec;
    if d == 0 || d > MAX_DIM {
        return Err(DepthError::UnsupportedDimension(d));
    }
    if params.extent < 1 || params.spread < 0 || params.jitter < 0 {
        return Err(DepthError::Precondition(
            "extent must be positive; spread and jitter nonnegative".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let extent = params.extent;
    let points: Vec<Point> = match family {
        Family::RandomRational => (0..n)
            .map(|_| Point::new((0..d).map(|_| rational(&mut rng, extent, 8)).collect()))
            .collect(),
        Family::Grid => {
            let mut side = 1usize;
            while side.pow(d as u32) < n {
                side += 1;
            }
            (0..n)
                .map(|mut k| {
                    let mut c = vec![0i64; d];
                    for slot in c.iter_mut().rev() {
                        *slot = (k % side) as i64;
                        k /= side;
                    }
                    Point::from_ints(&c)
                })
                .collect()
        }
        Family::MomentCurve => {
            let range = (2 * n as i64).max(extent);
            let mut ts: Vec<i64> = (-range..=range).collect();
            ts.shuffle(&mut rng);
            ts.truncate(n);
            ts.into_iter()
                .map(|t| {
                    let t = ratio(t, 2);
                    let mut c = Vec::with_capacity(d);
                    let mut pow = t.clone();
                    for _ in 0..d {
                        c.push(pow.clone());
                        pow = &pow * &t;
                    }
                    Point::new(c)
                })
                .collect()
        }
        Family::Collinear => {
            let base: Vec<ExactScalar> = (0..d)
                .map(|_| int(rng.gen_range(-extent..=extent)))
                .collect();
            let mut dir: Vec<i64> = (0..d).map(|_| rng.gen_range(-3..=3)).collect();
            if dir.iter().all(|&x| x == 0) {
                dir[0] = 1;
            }
            let r = (n as i64 / 2).max(1);
            (0..n)
                .map(|_| {
                    let t = rng.gen_range(-r..=r);
                    Point::new(base.iter().zip(&dir).map(|(b, v)| b + int(t * v)).collect())
                })
                .collect()
        }
        Family::Clusters => {
            if params.clusters == 0 {
                return Err(DepthError::Precondition("clusters must be positive".into()));
            }
            let centers: Vec<Vec<i64>> = (0..params.clusters)
                .map(|_| (0..d).map(|_| rng.gen_range(-extent..=extent)).collect())
                .collect();
            (0..n)
                .map(|k| {
                    let c = &centers[k % centers.len()];
                    Point::new(
                        c.iter()
                            .map(|&x| int(x) + rational(&mut rng, params.spread, 4))
                            .collect(),
                    )
                })
                .collect()
        }
        Family::Fig1 => {
            if d != 2 {
                return Err(DepthError::Precondition("fig1 is planar".into()));
            }
            let (s, _) = fig1_configuration();
            if n != 0 && n != s.len() {
                return Err(DepthError::Precondition(format!(
                    "fig1 has {} points",
                    s.len()
                )));
            }
            s.points()
                .iter()
                .map(|p| jittered(&mut rng, p, params.jitter))
                .collect()
        }
    };
    let points = if family == Family::Fig1 {
        points
    } else {
        points
            .iter()
            .map(|p| jittered(&mut rng, p, params.jitter))
            .collect()
    };
    let weights = params.weighted.then(|| {
        (0..points.len())
            .map(|_| int(rng.gen_range(1..=4)))
            .collect()
    });
    let query = if family == Family::Fig1 {
        Some(fig1_configuration().1)
    } else if params.query {
        Some(Point::new(
            (0..d).map(|_| rational(&mut rng, extent, 4)).collect(),
        ))
    } else {
        None
    };
    let set = PointSet::with_attributes(d, points, weights, None)?;
    Ok(Generated { set, query })
}
