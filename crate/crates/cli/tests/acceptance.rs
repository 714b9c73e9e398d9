//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines always reach stdout.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use combdepth::axioms::{
    check_centrality, check_locality, check_monotonicity, check_nontriviality, check_sensitivity,
    check_superadditivity, inequality_chain_check, AxiomId, AxiomReport, Evidence, Instance,
    MeasureOracle, SUBSET_CAP,
};
use combdepth::corpus::{
    fig1_configuration, generate, CorpusParams, CorpusSpec, Family, InstanceFile,
};
use combdepth::depth::{
    enclosing_depth_exact, tukey_depth, tverberg_depth_exact, verify_enclosing_oracle, Witness,
    DEFAULT_CAP,
};
use combdepth::geom::scalar::{int, ratio};
use combdepth::geom::{is_general_position_rel, Point, PointSet};
use combdepth::radon::{
    construct_e2_witness, fraction_radon_violation, radon1d_construct, radon1d_fraction,
};
use combdepth::regions::{cascade_integral, cascade_sum, check_integral_lemma};
use combdepth::MeasureId;
use common::*;
use rand::Rng;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// A mix of degenerate small-integer sets and generic rational sets.
fn mixed_set(r: &mut rand_chacha::ChaCha8Rng, d: usize, n: usize, seed: u64) -> PointSet {
    if r.gen_bool(0.5) {
        small_int_set(r, n, d, 3)
    } else {
        generate(&CorpusSpec::new(Family::RandomRational, n, d, seed))
            .unwrap()
            .set
    }
}

fn oracle_equivalence() -> Result<String, String> {
    let start = Instant::now();
    let mut r = rng(101);
    let mut count = 0;
    for (d, max_n) in [(1usize, 10usize), (2, 9)] {
        for i in 0..200u64 {
            let n = r.gen_range(1..=max_n);
            let s = mixed_set(&mut r, d, n, i);
            let q = query_for(&mut r, &s, 3);
            let td = tukey_depth(&s, &q).map_err(|e| e.to_string())?.value;
            let tvd = tverberg_depth_exact(&s, &q, DEFAULT_CAP)
                .map_err(|e| e.to_string())?
                .as_i64();
            let ed = enclosing_depth_exact(&s, &q, DEFAULT_CAP)
                .map_err(|e| e.to_string())?
                .as_i64();
            let want = (
                td_oracle(&s, &q),
                tvd_oracle(&s, &q) as i64,
                ed_oracle(&s, &q) as i64,
            );
            ensure((td.clone(), tvd, ed) == want, || {
                format!("{s:?} q={q}: got ({td}, {tvd}, {ed}), oracle {want:?}")
            })?;
            count += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= Duration::from_secs(600), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{count} instances agree with the oracles in {:.1}s",
        elapsed.as_secs_f64()
    ))
}

fn inequality_chain() -> Result<String, String> {
    let mut r = rng(102);
    let mut count = 0;
    for i in 0..300u64 {
        let d = r.gen_range(1..=2);
        let n = r.gen_range(1..=9);
        let s = mixed_set(&mut r, d, n, i);
        let q = query_for(&mut r, &s, 3);
        let c = inequality_chain_check(&s, &q).map_err(|e| e.to_string())?;
        let ok = c.ed <= c.tvd && c.tvd <= c.td && c.td <= int(d as i64) * &c.tvd;
        ensure(ok && c.holds, || format!("{s:?} q={q}: {c:?}"))?;
        count += 1;
    }
    Ok(format!("ED <= TvD <= TD <= d*TvD on {count} instances"))
}

/// Eight points in general position with TD = 3 at the query. Each class
/// of a partition needs three points, so TvD is 2, not `ceil(8/3)`.
fn ceil_form_counterexample() -> (PointSet, Point) {
    let c = [
        (-554, -319),
        (564, 286),
        (-149, -297),
        (581, -437),
        (-407, -198),
        (-542, -485),
        (-465, 378),
        (-510, 116),
    ];
    let s = PointSet::new(
        2,
        c.iter()
            .map(|&(x, y)| Point::new(vec![ratio(x, 101), ratio(y, 101)]))
            .collect(),
    )
    .unwrap();
    (s, Point::new(vec![ratio(-27, 13), ratio(-30, 13)]))
}

fn reay_identity() -> Result<String, String> {
    let mut r = rng(103);
    let mut count = 0;
    for i in 0..200 {
        let n = r.gen_range(1..=9);
        let (s, q) = if i % 2 == 0 {
            moment_instance(&mut r, n)
        } else {
            jittered_instance(&mut r, n)
        };
        let td = tukey_depth(&s, &q).map_err(|e| e.to_string())?.value;
        let tvd = tverberg_depth_exact(&s, &q, DEFAULT_CAP)
            .map_err(|e| e.to_string())?
            .value;
        let want = td.clone().min(int(n as i64 / 3));
        ensure(tvd == want, || {
            format!("{s:?} q={q}: TvD {tvd}, min(TD, floor(n/3)) {want}")
        })?;
        count += 1;
    }
    let (s, q) = ceil_form_counterexample();
    ensure(
        points_in_general_position(&s) && is_general_position_rel(&s, &q).unwrap(),
        || "counterexample not in general position".into(),
    )?;
    let td = tukey_depth(&s, &q).map_err(|e| e.to_string())?.value;
    let tvd = tverberg_depth_exact(&s, &q, DEFAULT_CAP)
        .map_err(|e| e.to_string())?
        .value;
    ensure(
        td == int(3) && tvd == int(2) && tvd == int(tvd_oracle(&s, &q) as i64),
        || format!("counterexample gives TD {td}, TvD {tvd}"),
    )?;
    Ok(format!(
        "TvD = min(TD, floor(n/3)) on {count} general-position instances; the ceil(n/3) form fails on a stored 8-point set (TD 3, TvD 2)"
    ))
}

fn existence() -> Result<String, String> {
    let mut r = rng(104);
    let mut td_sets = 0;
    for i in 0..40u64 {
        let n = r.gen_range(1..=9);
        let family = [
            Family::RandomRational,
            Family::Clusters,
            Family::MomentCurve,
            Family::Grid,
        ][i as usize % 4];
        let s = generate(&CorpusSpec::new(family, n, 2, i)).unwrap().set;
        let rep = check_centrality(
            &MeasureOracle::new(MeasureId::Td),
            &[Instance::new(format!("td-{i}"), s)],
            Some(ratio(1, 3)),
        )
        .map_err(|e| e.to_string())?;
        ensure(rep.passes(), || {
            format!("no point of Tukey depth ceil(n/3): {:?}", rep.violations)
        })?;
        td_sets += 1;
    }
    let mut tvd_sets = 0;
    for rr in [2usize, 3] {
        let n = 3 * (rr - 1) + 1;
        for i in 0..10u64 {
            let family = [Family::RandomRational, Family::Clusters][i as usize % 2];
            let s = generate(&CorpusSpec::new(family, n, 2, 1000 + i))
                .unwrap()
                .set;
            let rep = check_centrality(
                &MeasureOracle::new(MeasureId::Tvd),
                &[Instance::new(format!("tvd-{n}-{i}"), s)],
                Some(ratio(rr as i64, n as i64)),
            )
            .map_err(|e| e.to_string())?;
            ensure(rep.passes(), || {
                format!(
                    "no point of Tverberg depth {rr} at n = {n}: {:?}",
                    rep.violations
                )
            })?;
            tvd_sets += 1;
        }
    }
    let _ = r.gen::<u8>();
    Ok(format!(
        "TD >= ceil(n/3) found on {td_sets} sets; TvD >= r found on {tvd_sets} sets"
    ))
}

fn cascade_corpus(r: &mut rand_chacha::ChaCha8Rng, i: u64) -> PointSet {
    let d = r.gen_range(1..=2);
    let n = r.gen_range(1..=7);
    match i % 5 {
        0 => small_int_set(r, n, d, 2),
        1 => {
            generate(&CorpusSpec::new(Family::Collinear, n, 2, i))
                .unwrap()
                .set
        }
        2 => {
            generate(&CorpusSpec::new(Family::Grid, n, d, i))
                .unwrap()
                .set
        }
        3 => {
            generate(
                &CorpusSpec::new(Family::Clusters, n, d, i).with_params(CorpusParams {
                    spread: 0,
                    ..CorpusParams::default()
                }),
            )
            .unwrap()
            .set
        }
        _ => {
            generate(&CorpusSpec::new(Family::RandomRational, n, d, i))
                .unwrap()
                .set
        }
    }
}

fn tukey_cascading() -> Result<String, String> {
    let mut r = rng(105);
    for i in 0..500u64 {
        let s = cascade_corpus(&mut r, i);
        let c = cascade_sum(&s, MeasureId::Td).map_err(|e| e.to_string())?;
        ensure(c.passes, || format!("{s:?}: cascade sum {}", c.value))?;
        ensure(check_integral_lemma(&s).map_err(|e| e.to_string())?, || {
            format!("{s:?}: integral identity")
        })?;
    }
    for i in 0..100u64 {
        let s = cascade_corpus(&mut r, 500 + i);
        let w = (0..s.len())
            .map(|_| ratio(r.gen_range(1..=9), r.gen_range(1..=4)))
            .collect();
        let s = s.reweighted(w).unwrap();
        let v = cascade_integral(&s).map_err(|e| e.to_string())?;
        ensure(v >= int(0), || format!("{s:?}: cascade integral {v}"))?;
        ensure(check_integral_lemma(&s).map_err(|e| e.to_string())?, || {
            format!("{s:?}: integral identity")
        })?;
    }
    Ok(
        "cascade sum >= 0 on 500 sets, integral >= 0 on 100 weighted sets, identity on all 600"
            .into(),
    )
}

fn tverberg_cascading() -> Result<String, String> {
    let mut r = rng(106);
    let mut count = 0;
    for i in 0..40u64 {
        let n = r.gen_range(1..=9);
        let s = match i % 3 {
            0 => small_int_set(&mut r, n, 2, 2),
            1 => moment_instance(&mut r, n).0,
            _ => {
                generate(&CorpusSpec::new(Family::Clusters, n, 2, i))
                    .unwrap()
                    .set
            }
        };
        let c = cascade_sum(&s, MeasureId::Tvd).map_err(|e| e.to_string())?;
        ensure(c.passes, || format!("{s:?}: cascade sum {}", c.value))?;
        count += 1;
    }
    Ok(format!("Tverberg cascade sum >= 0 on {count} planar sets"))
}

fn e2_construction() -> Result<String, String> {
    let mut r = rng(107);
    let mut slowest = Duration::ZERO;
    for _ in 0..200 {
        let n = r.gen_range(9..=60);
        let (s, q) = e2_instance(&mut r, n);
        let start = Instant::now();
        let w = construct_e2_witness(&s, &q).map_err(|e| format!("{s:?} q={q}: {e}"))?;
        let t = start.elapsed();
        slowest = slowest.max(t);
        ensure(t <= Duration::from_secs(1), || {
            format!("n = {n} took {t:?}")
        })?;
        ensure(
            verify_enclosing_oracle(&s, &w).map_err(|e| e.to_string())?,
            || format!("{s:?}: not verified"),
        )?;
        let td = tukey_depth(&s, &q).map_err(|e| e.to_string())?.as_i64() as usize;
        ensure(w.k == td / 3, || format!("k {} for TD {td}", w.k))?;
    }
    Ok(format!(
        "200 of 200 witnesses verified, slowest {:.1} ms",
        slowest.as_secs_f64() * 1e3
    ))
}

fn radon_1d() -> Result<String, String> {
    let mut r = rng(108);
    for _ in 0..500 {
        let reds = r.gen_range(3..=15);
        let p = surrounding_line(&mut r, reds);
        let w = radon1d_construct(&p).map_err(|e| format!("{p:?}: {e}"))?;
        let v =
            fraction_radon_violation(&p, &w, &radon1d_fraction(&p)).map_err(|e| e.to_string())?;
        ensure(v.is_none(), || format!("{p:?}: {v:?}"))?;
    }
    Ok("500 of 500 surrounding sets give verified witnesses".into())
}

fn line(xs: &[i64]) -> PointSet {
    PointSet::new(1, xs.iter().map(|&x| Point::from_ints(&[x])).collect()).unwrap()
}

fn axiom_corpus() -> Vec<Instance> {
    let mut c = vec![
        Instance::new("line4", line(&[-2, -1, 1, 2])),
        Instance::new("line5-dup", line(&[0, 1, 1, 3, 4])),
    ];
    for seed in 0..3 {
        let s = generate(&CorpusSpec::new(Family::RandomRational, 4, 2, seed))
            .unwrap()
            .set;
        c.push(Instance::new(format!("planar-{seed}"), s));
    }
    c.push(Instance::new(
        "collinear",
        generate(&CorpusSpec::new(Family::Collinear, 4, 2, 9))
            .unwrap()
            .set,
    ));
    c
}

fn run_axioms(m: MeasureId, corpus: &[Instance]) -> Result<Vec<AxiomReport>, String> {
    let o = MeasureOracle::new(m);
    let e = |x: combdepth::DepthError| x.to_string();
    Ok(vec![
        check_sensitivity(&o, corpus).map_err(e)?,
        check_locality(&o, corpus).map_err(e)?,
        check_nontriviality(&o, corpus).map_err(e)?,
        check_superadditivity(&o, corpus, SUBSET_CAP).map_err(e)?,
        check_centrality(&o, corpus, None).map_err(e)?,
        check_monotonicity(&o, corpus).map_err(e)?,
    ])
}

fn axiom_matrix() -> Result<String, String> {
    let corpus = axiom_corpus();
    let (fig1, q0) = fig1_configuration();
    let mut fig = Instance::new("fig1", fig1);
    fig.queries.push(q0.clone());
    let mut rows = Vec::new();
    for m in [MeasureId::Td, MeasureId::Tvd] {
        for rep in run_axioms(m, &corpus)? {
            ensure(rep.passes(), || {
                format!("{m} fails {}: {:?}", rep.axiom, rep.violations.first())
            })?;
        }
        let sup = check_superadditivity(
            &MeasureOracle::new(m),
            std::slice::from_ref(&fig),
            SUBSET_CAP,
        )
        .map_err(|e| e.to_string())?;
        ensure(sup.passes(), || {
            format!("{m} fails superadditivity on the two triangles")
        })?;
        rows.push(format!("{m}: all six hold"));
    }
    let ed = MeasureOracle::new(MeasureId::Ed);
    for rep in run_axioms(MeasureId::Ed, &corpus)? {
        if !matches!(rep.axiom, AxiomId::Superadditivity | AxiomId::Centrality(_)) {
            ensure(rep.passes(), || {
                format!("ed fails {}: {:?}", rep.axiom, rep.violations.first())
            })?;
        }
    }
    let sup = check_superadditivity(&ed, &[fig], SUBSET_CAP).map_err(|e| e.to_string())?;
    let v = sup
        .violations
        .iter()
        .find(|v| v.query == q0 && v.evidence == Evidence::Split(vec![0, 1, 2], vec![3, 4, 5]))
        .ok_or("ed: no superadditivity violation on the two triangles")?;
    ensure(v.values == vec![int(1), int(1), int(1)], || {
        format!("ed values {:?}", v.values)
    })?;
    ensure(
        v.reverify(&sup.axiom, &ed).map_err(|e| e.to_string())?,
        || "ed witness does not reverify".into(),
    )?;
    rows.push("ed: sensitivity, locality, nontriviality and monotonicity hold, superadditivity fails on the two triangles".into());
    let sd = MeasureOracle::new(MeasureId::Sd);
    let mut inst = Instance::new("sd", line(&[-2, -1, 1, 2]));
    inst.queries.push(Point::from_ints(&[0]));
    inst.extras.push(Point::from_ints(&[3]));
    let sens = check_sensitivity(&sd, &[inst]).map_err(|e| e.to_string())?;
    let v = sens
        .violations
        .iter()
        .find(|v| {
            v.query == Point::from_ints(&[0])
                && v.evidence == Evidence::Added(Point::from_ints(&[3]))
        })
        .ok_or("sd: stored sensitivity witness not found")?;
    ensure(v.values == vec![int(4), int(6)], || {
        format!("sd values {:?}", v.values)
    })?;
    ensure(
        v.reverify(&sens.axiom, &sd).map_err(|e| e.to_string())?,
        || "sd witness does not reverify".into(),
    )?;
    rows.push("sd: sensitivity fails 4 -> 6".into());
    Ok(rows.join("; "))
}

fn witness_restriction() -> Result<String, String> {
    let mut r = rng(110);
    let mut count = 0;
    for _ in 0..60 {
        let n = r.gen_range(9..=30);
        let (s, q) = e2_instance(&mut r, n);
        let w = construct_e2_witness(&s, &q).map_err(|e| e.to_string())?;
        let idx: Vec<usize> = w.classes.iter().flatten().copied().collect();
        let td = tukey_depth(&s.subset(&idx), &q)
            .map_err(|e| e.to_string())?
            .value;
        ensure(td == int(w.k as i64), || {
            format!("TD {td} on a {}-witness", w.k)
        })?;
        count += 1;
    }
    for _ in 0..60 {
        let n = r.gen_range(3..=8);
        let (s, q) = jittered_instance(&mut r, n);
        let res = enclosing_depth_exact(&s, &q, DEFAULT_CAP).map_err(|e| e.to_string())?;
        if let Some(Witness::Enclosing(w)) = res.witness {
            if w.k == 0 {
                continue;
            }
            let idx: Vec<usize> = w.classes.iter().flatten().copied().collect();
            let sub = s.subset(&idx);
            ensure(is_general_position_rel(&sub, &q).unwrap(), || {
                "query not in general position".into()
            })?;
            let td = tukey_depth(&sub, &q).map_err(|e| e.to_string())?.value;
            ensure(td == int(w.k as i64), || {
                format!("TD {td} on an exact {}-witness", w.k)
            })?;
            count += 1;
        }
    }
    Ok(format!(
        "TD of the witness points equals k on {count} witnesses"
    ))
}

fn cli(args: &[&str]) -> (Vec<u8>, Option<i32>) {
    let o = Command::new(env!("CARGO_BIN_EXE_combdepth"))
        .args(args)
        .output()
        .unwrap();
    (o.stdout, o.status.code())
}

fn determinism() -> Result<String, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let inst = dir.path().join("inst.txt");
    let inst_s = inst.to_str().unwrap();
    let gen = [
        "gen",
        "--family",
        "clusters",
        "--n",
        "7",
        "--d",
        "2",
        "--seed",
        "3",
        "--with-query",
        "--out",
        inst_s,
    ];
    ensure(cli(&gen).1 == Some(0), || "gen failed".into())?;
    let first = std::fs::read(&inst).unwrap();
    cli(&gen);
    ensure(std::fs::read(&inst).unwrap() == first, || {
        "gen output differs".into()
    })?;
    let runs: [&[&str]; 5] = [
        &["depth", "--in", inst_s],
        &["check", "--in", inst_s],
        &["regions", "--in", inst_s, "--measure", "td"],
        &["cascade", "--in", inst_s, "--measure", "tvd"],
        &[
            "axioms",
            "--measure",
            "td",
            "--suite",
            "central",
            "--corpus",
            "family=grid,n=4,d=2",
        ],
    ];
    for args in runs {
        let a = cli(args);
        let b = cli(args);
        ensure(a == b, || format!("{args:?} differs between runs"))?;
        ensure(a.1 == Some(0), || format!("{args:?} exited {:?}", a.1))?;
    }
    let mut r = rng(111);
    for i in 0..100u64 {
        let family = Family::ALL[i as usize % Family::ALL.len()];
        let (n, d) = if family == Family::Fig1 {
            (6, 2)
        } else {
            (r.gen_range(0..=9), r.gen_range(1..=3))
        };
        let params = CorpusParams {
            jitter: r.gen_range(0..=4),
            weighted: r.gen_bool(0.5),
            query: r.gen_bool(0.5),
            ..CorpusParams::default()
        };
        let g = generate(&CorpusSpec::new(family, n, d, i).with_params(params))
            .map_err(|e| e.to_string())?;
        let text = InstanceFile::new(g.set, g.query).serialize();
        let back = InstanceFile::parse(&text).map_err(|e| e.to_string())?;
        ensure(back.serialize() == text, || {
            format!("round trip differs:\n{text}")
        })?;
    }
    Ok("5 commands and gen byte-identical across runs; 100 files round-trip".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 11] = [
        ("oracle equivalence", oracle_equivalence),
        ("inequality chain", inequality_chain),
        ("Reay identity", reay_identity),
        ("existence", existence),
        ("Tukey cascading", tukey_cascading),
        ("Tverberg cascading", tverberg_cascading),
        ("planar enclosing construction", e2_construction),
        ("one-dimensional Radon construction", radon_1d),
        ("axiom matrix", axiom_matrix),
        ("witness restriction", witness_restriction),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
