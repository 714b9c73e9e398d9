//! Reading instances and queries, and formatting witnesses.

use std::fs;
use std::path::Path;

use combdepth::corpus::InstanceFile;
use combdepth::depth::Witness;
use combdepth::geom::{parse_scalar, Point};

use crate::CliError;

pub fn read_instance(path: &Path) -> Result<InstanceFile, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    InstanceFile::parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

/// A point given as comma-separated rationals, e.g. `1/2,-3`.
pub fn parse_point(text: &str) -> Result<Point, String> {
    text.split(',')
        .map(|t| parse_scalar(t.trim()).map_err(|e| format!("bad coordinate '{t}': {e}")))
        .collect::<Result<Vec<_>, _>>()
        .map(Point::new)
}

/// The query from the command line, else the one stored in the file.
pub fn resolve_query(file: &InstanceFile, arg: Option<&Point>) -> Result<Point, CliError> {
    let q = arg.or(file.query.as_ref()).cloned().ok_or_else(|| {
        CliError::Usage("a query point is required: pass --query or add a query line".into())
    })?;
    if q.dim() != file.set.dim() {
        return Err(CliError::Usage(format!(
            "query has dimension {}, instance has dimension {}",
            q.dim(),
            file.set.dim()
        )));
    }
    Ok(q)
}

pub fn classes(classes: &[Vec<usize>]) -> String {
    classes
        .iter()
        .map(|c| c.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" | ")
}

pub fn witness(w: &Witness) -> String {
    match w {
        Witness::Partition(p) => format!("partition {}", classes(&p.classes)),
        Witness::Enclosing(e) => format!("enclosing {}", classes(&e.classes)),
        Witness::Halfspace(h) => format!("halfspace {h}"),
    }
}

/// Rows of a CSV report, written with a fixed header.
pub fn csv(header: &[&str], rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut w = ::csv::WriterBuilder::new()
        .terminator(::csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let err = |e: ::csv::Error| CliError::Io(e.to_string());
    w.write_record(header).map_err(err)?;
    for r in rows {
        w.write_record(r).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
