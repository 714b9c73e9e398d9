//! Subcommand implementations. Each prints to stdout and returns whether
//! the property it checks held.

use std::path::Path;

use combdepth::axioms::{
    check_centrality, check_locality, check_monotonicity, check_nontriviality, check_sensitivity,
    check_superadditivity, inequality_chain_check, AxiomReport, Instance, MeasureOracle,
    SUBSET_CAP,
};
use combdepth::corpus::{generate, CorpusParams, CorpusSpec, Family, InstanceFile};
use combdepth::depth::{
    enclosing_depth_exact, peeling_depth, simplicial_depth, tukey_depth, tukey_depth_weighted,
    tverberg_depth_exact, verify_enclosing_oracle, DepthResult, Witness,
};
use combdepth::geom::scalar::{format_scalar, int, ExactScalar};
use combdepth::geom::{is_general_position_rel, orient, Point, PointSet};
use combdepth::radon::{
    construct_e2_witness, fraction_radon_violation, radon1d_construct, radon1d_fraction,
    BichromaticSet, RadonFractionWitness,
};
use combdepth::regions::{
    cascade_integral, cascade_sum, check_integral_lemma, report_from_depths, FeatureDepths,
};
use combdepth::MeasureId;

use crate::io::{self, csv, read_instance, resolve_query, write_file};
use crate::{svg, CliError, RegionMeasure, Suite, Verdict};

const DEPTH_SCHEMA: &str = "depth/1";
const REGIONS_SCHEMA: &str = "regions/1";
const AXIOMS_SCHEMA: &str = "axioms/1";

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn word(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn evaluate(m: MeasureId, s: &PointSet, q: &Point, cap: usize) -> Result<DepthResult, CliError> {
    let counted = s.without_weights();
    Ok(match m {
        MeasureId::Td => tukey_depth(&counted, q)?,
        MeasureId::TdWeighted => tukey_depth_weighted(s, q)?,
        MeasureId::Tvd => tverberg_depth_exact(&counted, q, cap)?,
        MeasureId::Ed => enclosing_depth_exact(&counted, q, cap)?,
        MeasureId::Sd => simplicial_depth(&counted, q)?,
        MeasureId::Peel => peeling_depth(&counted, q)?,
        MeasureId::TvdHull => DepthResult::exact(m.eval_with_cap(&counted, q, cap)?, None),
    })
}

pub fn depth(
    path: &Path,
    query: Option<&Point>,
    measures: &[MeasureId],
    cap: usize,
) -> Result<Verdict, CliError> {
    let file = read_instance(path)?;
    let q = resolve_query(&file, query)?;
    let mut rows = Vec::new();
    for &m in measures {
        let r = evaluate(m, &file.set, &q, cap)?;
        rows.push(vec![
            DEPTH_SCHEMA.to_string(),
            m.name().to_string(),
            format_scalar(&r.value),
            if r.exact { "yes" } else { "no" }.to_string(),
            r.witness.as_ref().map(io::witness).unwrap_or_default(),
        ]);
    }
    print!(
        "{}",
        csv(&["schema", "measure", "value", "exact", "witness"], &rows)?
    );
    Ok(Verdict::Pass)
}

fn region_input(
    file: &InstanceFile,
    measure: RegionMeasure,
    weighted: bool,
) -> Result<(PointSet, MeasureId), CliError> {
    match (measure, weighted) {
        (RegionMeasure::Td, true) => Ok((file.set.clone(), MeasureId::TdWeighted)),
        (RegionMeasure::Td, false) => Ok((file.set.without_weights(), MeasureId::Td)),
        (RegionMeasure::Tvd, false) => Ok((file.set.without_weights(), MeasureId::Tvd)),
        (RegionMeasure::Tvd, true) => Err(CliError::Usage("--weighted applies to td only".into())),
    }
}

pub fn regions(
    path: &Path,
    measure: RegionMeasure,
    weighted: bool,
    out: Option<&Path>,
    svg_out: Option<&Path>,
) -> Result<Verdict, CliError> {
    let file = read_instance(path)?;
    let (s, m) = region_input(&file, measure, weighted)?;
    if s.is_empty() {
        return Err(CliError::Usage("empty instance".into()));
    }
    let fd = FeatureDepths::evaluate(&s, m)?;
    let report = report_from_depths(&s, m, &fd, None);
    println!("{report}");
    if let Some(path) = out {
        let row = |key: &str, alpha: String, value: String| {
            vec![
                REGIONS_SCHEMA.to_string(),
                m.name().to_string(),
                key.to_string(),
                alpha,
                value,
            ]
        };
        let mut rows: Vec<Vec<String>> = report
            .grid
            .iter()
            .zip(&report.dims)
            .map(|(a, t)| row("t", format_scalar(a), t.to_string()))
            .collect();
        if let Some(sum) = report.cascade_sum {
            rows.push(row("cascade_sum", String::new(), sum.to_string()));
        }
        rows.push(row(
            "cascade_integral",
            String::new(),
            format_scalar(&report.cascade_integral),
        ));
        rows.push(row(
            "median_value",
            String::new(),
            format_scalar(&report.median_value),
        ));
        rows.push(row(
            "median_region",
            String::new(),
            report.median_region.describe(),
        ));
        write_file(
            path,
            &csv(&["schema", "measure", "key", "alpha", "value"], &rows)?,
        )?;
    }
    if let Some(path) = svg_out {
        write_file(path, &svg::render(&fd, s.points()))?;
    }
    Ok(Verdict::Pass)
}

pub fn cascade(path: &Path, measure: RegionMeasure, weighted: bool) -> Result<Verdict, CliError> {
    let file = read_instance(path)?;
    let (s, m) = region_input(&file, measure, weighted)?;
    if s.is_empty() {
        return Err(CliError::Usage("empty instance".into()));
    }
    if m == MeasureId::TdWeighted {
        let value = cascade_integral(&s)?;
        let lemma = check_integral_lemma(&s)?;
        let ok = value >= int(0);
        println!("cascade_integral {}", format_scalar(&value));
        println!("integral_identity {}", word(lemma));
        println!("{}", word(ok));
        return Ok(verdict(ok && lemma));
    }
    let c = cascade_sum(&s, m)?;
    println!("cascade_sum {}", c.value);
    println!("{}", word(c.passes));
    Ok(verdict(c.passes))
}

fn parse_corpus(text: &str) -> Result<(CorpusSpec, usize), CliError> {
    let bad = |m: String| CliError::Usage(format!("corpus: {m}"));
    let mut family = None;
    let (mut n, mut d, mut seed, mut count) = (6usize, 2usize, 0u64, 1usize);
    let mut params = CorpusParams::default();
    for pair in text.split(',').filter(|p| !p.is_empty()) {
        let (key, value) = pair
            .split_once('=')
            .ok_or_else(|| bad(format!("expected key=value, found '{pair}'")))?;
        let num = |v: &str| {
            v.parse::<i64>()
                .map_err(|_| bad(format!("bad number for {key}: '{v}'")))
        };
        let count_of = |v: &str| {
            v.parse::<usize>()
                .map_err(|_| bad(format!("bad count for {key}: '{v}'")))
        };
        match key {
            "family" => family = Some(value.parse::<Family>().map_err(|e| bad(e.to_string()))?),
            "n" => n = count_of(value)?,
            "d" => d = count_of(value)?,
            "seed" => {
                seed = value
                    .parse()
                    .map_err(|_| bad(format!("bad seed '{value}'")))?
            }
            "count" => count = count_of(value)?,
            "clusters" => params.clusters = count_of(value)?,
            "spread" => params.spread = num(value)?,
            "extent" => params.extent = num(value)?,
            "jitter" => params.jitter = num(value)?,
            "weighted" => params.weighted = value == "yes",
            "query" => params.query = value == "yes",
            _ => return Err(bad(format!("unknown key '{key}'"))),
        }
    }
    let family = family.ok_or_else(|| bad("missing family".into()))?;
    Ok((
        CorpusSpec::new(family, n, d, seed).with_params(params),
        count,
    ))
}

pub fn axioms(
    measure: MeasureId,
    suite: Suite,
    corpus: &str,
    out: Option<&Path>,
) -> Result<Verdict, CliError> {
    let (spec, count) = parse_corpus(corpus)?;
    let mut instances = Vec::with_capacity(count);
    for k in 0..count as u64 {
        let spec = CorpusSpec {
            seed: spec.seed + k,
            ..spec.clone()
        };
        let g = generate(&spec)?;
        let mut inst = Instance::new(
            format!("{}-{}-{}-{}", spec.family, spec.n, spec.d, spec.seed),
            g.set,
        );
        inst.queries.extend(g.query);
        instances.push(inst);
    }
    let m = MeasureOracle::new(measure);
    let c = &instances;
    let mut reports: Vec<AxiomReport> = vec![check_sensitivity(&m, c)?, check_locality(&m, c)?];
    if matches!(suite, Suite::Superadditive | Suite::All) {
        reports.push(check_nontriviality(&m, c)?);
        reports.push(check_superadditivity(&m, c, SUBSET_CAP)?);
    }
    if matches!(suite, Suite::Central | Suite::All) {
        reports.push(check_centrality(&m, c, None)?);
        reports.push(check_monotonicity(&m, c)?);
    }
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                AXIOMS_SCHEMA.to_string(),
                r.axiom.to_string(),
                r.measure.name().to_string(),
                r.instances.to_string(),
                r.checks.to_string(),
                r.boundary_cases.to_string(),
                r.violations.len().to_string(),
                word(r.passes()).to_string(),
            ]
        })
        .collect();
    let table = csv(
        &[
            "schema",
            "axiom",
            "measure",
            "instances",
            "checks",
            "boundary_cases",
            "violations",
            "verdict",
        ],
        &rows,
    )?;
    match out {
        Some(path) => write_file(path, &table)?,
        None => print!("{table}"),
    }
    for r in &reports {
        println!("{} {}", r.axiom, word(r.passes()));
        if let Some(v) = r.violations.first() {
            let values: Vec<String> = v.values.iter().map(format_scalar).collect();
            println!(
                "  first violation: instance {} query {} {} values {}",
                v.instance,
                v.query,
                v.evidence,
                values.join(" ")
            );
        }
    }
    Ok(Verdict::Pass)
}

fn print_radon_witness(w: &RadonFractionWitness) {
    for c in &w.red_classes {
        println!("red {}", io::classes(std::slice::from_ref(c)));
    }
    for c in &w.blue_classes {
        println!("blue {}", io::classes(std::slice::from_ref(c)));
    }
}

fn parse_radon_witness(text: &str) -> Result<RadonFractionWitness, CliError> {
    let mut w = RadonFractionWitness {
        red_classes: Vec::new(),
        blue_classes: Vec::new(),
    };
    for (i, line) in text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
    {
        let mut tokens = line.split_whitespace();
        let target = match tokens.next() {
            Some("red") => &mut w.red_classes,
            Some("blue") => &mut w.blue_classes,
            _ => {
                return Err(CliError::Usage(format!(
                    "witness line {}: expected 'red' or 'blue'",
                    i + 1
                )))
            }
        };
        let class = tokens
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CliError::Usage(format!("witness line {}: bad index", i + 1)))?;
        target.push(class);
    }
    Ok(w)
}

pub fn radon(
    path: &Path,
    construct: bool,
    verify: Option<&Path>,
    c2: Option<&ExactScalar>,
) -> Result<Verdict, CliError> {
    let file = read_instance(path)?;
    let p = BichromaticSet::new(file.set)?;
    match (construct, verify) {
        (true, _) => {
            let w = radon1d_construct(&p)?;
            let c2 = radon1d_fraction(&p);
            print_radon_witness(&w);
            println!("c2 {}", format_scalar(&c2));
            let violation = fraction_radon_violation(&p, &w, &c2)?;
            println!(
                "{}",
                if violation.is_none() {
                    "verified"
                } else {
                    "not verified"
                }
            );
            Ok(verdict(violation.is_none()))
        }
        (false, Some(wpath)) => {
            let text = std::fs::read_to_string(wpath)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", wpath.display())))?;
            let w = parse_radon_witness(&text)?;
            let c2 = c2.ok_or_else(|| CliError::Usage("--verify needs --c2".into()))?;
            match fraction_radon_violation(&p, &w, c2)? {
                None => {
                    println!("PASS");
                    Ok(Verdict::Pass)
                }
                Some(reason) => {
                    println!("FAIL {reason}");
                    Ok(Verdict::Fail)
                }
            }
        }
        (false, None) => Err(CliError::Usage("pass --construct or --verify".into())),
    }
}

pub fn enclose(
    path: &Path,
    query: Option<&Point>,
    exact: bool,
    cap: usize,
) -> Result<Verdict, CliError> {
    let file = read_instance(path)?;
    let q = resolve_query(&file, query)?;
    let s = file.set.without_weights();
    if exact {
        let r = enclosing_depth_exact(&s, &q, cap)?;
        println!("ed {}", format_scalar(&r.value));
        if let Some(Witness::Enclosing(w)) = &r.witness {
            println!("classes {}", io::classes(&w.classes));
            let ok = verify_enclosing_oracle(&s, w)?;
            println!("{}", if ok { "verified" } else { "not verified" });
            return Ok(verdict(ok));
        }
        return Ok(Verdict::Pass);
    }
    let td = tukey_depth(&s, &q)?;
    let w = construct_e2_witness(&s, &q)?;
    let ok = verify_enclosing_oracle(&s, &w)?;
    println!("td {}", td.as_i64());
    println!("k {}", w.k);
    println!("classes {}", io::classes(&w.classes));
    println!("{}", if ok { "verified" } else { "not verified" });
    Ok(verdict(ok))
}

fn planar_general_position(s: &PointSet, q: &Point) -> Result<bool, CliError> {
    if s.dim() != 2 || !is_general_position_rel(s, q)? {
        return Ok(false);
    }
    let n = s.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orient(&[s.point(i).clone(), s.point(j).clone(), s.point(k).clone()])? == 0 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn check(path: &Path, query: Option<&Point>) -> Result<Verdict, CliError> {
    let file = read_instance(path)?;
    let q = resolve_query(&file, query)?;
    let s = file.set.without_weights();
    let c = inequality_chain_check(&s, &q)?;
    for (name, v) in [("td", &c.td), ("tvd", &c.tvd), ("ed", &c.ed), ("sd", &c.sd)] {
        println!("{name} {}", format_scalar(v));
    }
    println!("chain {}", word(c.holds));
    let mut ok = c.holds;
    if planar_general_position(&s, &q)? {
        let expected = c.td.clone().min(int(s.len() as i64 / 3));
        let reay = c.tvd == expected;
        println!("reay {}", word(reay));
        ok &= reay;
    } else {
        println!("reay skipped: not a planar general-position instance");
    }
    Ok(verdict(ok))
}

pub fn gen(spec: &CorpusSpec, out: Option<&Path>) -> Result<Verdict, CliError> {
    let g = generate(spec)?;
    let text = InstanceFile::new(g.set, g.query).serialize();
    match out {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    Ok(Verdict::Pass)
}
