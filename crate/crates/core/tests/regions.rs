mod common;

use combdepth::corpus::{generate, CorpusSpec, Family};
use combdepth::depth::tukey_depth;
use combdepth::geom::scalar::{int, ratio};
use combdepth::geom::{Point, PointSet};
use combdepth::regions::{
    cascade_integral, cascade_sum, check_integral_lemma, median_region, Arrangement2D,
    FeatureDepths,
};
use combdepth::MeasureId;
use common::*;
use rand::Rng;

fn degenerate_or_random(r: &mut rand_chacha::ChaCha8Rng, i: u64) -> PointSet {
    let d = r.gen_range(1..=2);
    let n = r.gen_range(1..=7);
    match i % 3 {
        0 => small_int_set(r, n, d, 2),
        1 => {
            generate(&CorpusSpec::new(
                Family::Collinear,
                r.gen_range(2..=7),
                2,
                i,
            ))
            .unwrap()
            .set
        }
        _ => {
            generate(&CorpusSpec::new(
                Family::RandomRational,
                r.gen_range(1..=6),
                d,
                i,
            ))
            .unwrap()
            .set
        }
    }
}

#[test]
fn line_of_five_cascades_to_zero() {
    let s = PointSet::from_ints(1, &[&[0], &[1], &[2], &[3], &[4]]).unwrap();
    let c = cascade_sum(&s, MeasureId::Td).unwrap();
    assert_eq!(c.value, 0);
    assert!(c.passes);
}

#[test]
fn tukey_cascade_nonnegative() {
    let mut r = rng(21);
    for i in 0..120 {
        let s = degenerate_or_random(&mut r, i);
        let c = cascade_sum(&s, MeasureId::Td).unwrap();
        assert!(c.passes, "{s:?} sum {}", c.value);
        assert!(check_integral_lemma(&s).unwrap(), "{s:?}");
    }
}

#[test]
fn weighted_cascade_integral_nonnegative() {
    let mut r = rng(22);
    for i in 0..40 {
        let s = degenerate_or_random(&mut r, i);
        let w = (0..s.len())
            .map(|_| ratio(r.gen_range(1..=9), r.gen_range(1..=3)))
            .collect();
        let s = s.reweighted(w).unwrap();
        assert!(cascade_integral(&s).unwrap() >= int(0), "{s:?}");
        assert!(check_integral_lemma(&s).unwrap(), "{s:?}");
    }
}

#[test]
fn arrangements_satisfy_euler_and_locate() {
    let mut r = rng(23);
    for i in 0..60 {
        let s = degenerate_or_random(&mut r, i);
        let a = Arrangement2D::build(&s);
        assert!(a.euler_check(), "{s:?}");
        for (k, f) in a.features().iter().enumerate() {
            assert_eq!(a.locate(f.sample()), k);
        }
    }
}

#[test]
fn depth_is_constant_on_features() {
    let mut r = rng(24);
    for i in 0..40 {
        let s = degenerate_or_random(&mut r, i);
        let fd = FeatureDepths::evaluate(&s, MeasureId::Td).unwrap();
        for (f, d) in fd.features.iter().zip(&fd.depths) {
            for p in &f.samples {
                assert_eq!(&tukey_depth(&s, p).unwrap().value, d, "{s:?} at {p}");
            }
        }
    }
}

#[test]
fn median_region_is_convex() {
    let mut r = rng(25);
    for i in 0..200 {
        let s = degenerate_or_random(&mut r, i);
        let m = median_region(&s, MeasureId::Td).unwrap();
        let hull = &m.hull;
        let mut probes: Vec<Point> = hull.clone();
        for (a, b) in hull.iter().zip(hull.iter().cycle().skip(1)) {
            probes.push(a.lerp(b, &ratio(1, 3)));
        }
        if let Some(c) = Point::centroid(hull) {
            probes.push(c);
        }
        for p in probes {
            assert_eq!(tukey_depth(&s, &p).unwrap().value, m.value, "{s:?} at {p}");
        }
    }
}
