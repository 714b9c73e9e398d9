//! Line-oriented text format for point sets.
//!
//! ```text
//! combdepth-instance 1
//! dim 2
//! weighted no
//! colored yes
//! count 2
//! 0 1/2 R
//! -3 4 B
//! query 0 0
//! ```
//!
//! Each point line holds `dim` rationals, then a weight if weighted, then
//! `R` or `B` if colored. Tokens are separated by single spaces and lines
//! end with LF.

use std::fmt;

use crate::geom::scalar::{format_scalar, parse_scalar, ExactScalar};
use crate::geom::{Color, Point, PointSet, MAX_DIM};

pub const MAGIC: &str = "combdepth-instance";
pub const VERSION: u32 = 1;

/// A point set with an optional query point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub set: PointSet,
    pub query: Option<Point>,
}

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

/// A token with its 1-based column.
struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    text: &'a str,
    tokens: Vec<Token<'a>>,
}

impl<'a> Line<'a> {
    fn new(number: usize, text: &'a str) -> Result<Self, ParseError> {
        let mut tokens = Vec::new();
        let mut column = 1;
        for part in text.split(' ') {
            if part.is_empty() {
                return Err(ParseError {
                    line: number,
                    column,
                    message: "expected a single space between tokens".into(),
                });
            }
            tokens.push(Token { text: part, column });
            column += part.len() + 1;
        }
        Ok(Line {
            number,
            text,
            tokens,
        })
    }

    fn err(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    fn end_column(&self) -> usize {
        self.text.len() + 1
    }

    fn scalar(&self, i: usize) -> Result<ExactScalar, ParseError> {
        let t = &self.tokens[i];
        parse_scalar(t.text)
            .map_err(|e| self.err(t.column + e.offset, format!("bad rational: {}", e.message)))
    }

    /// `key value` with a fixed key.
    fn keyed(&self, key: &str) -> Result<&'a str, ParseError> {
        if self.tokens[0].text != key {
            return Err(self.err(1, format!("expected '{key}'")));
        }
        match self.tokens.len() {
            2 => Ok(self.tokens[1].text),
            1 => Err(self.err(self.end_column(), format!("missing value for '{key}'"))),
            _ => Err(self.err(self.tokens[2].column, "unexpected token")),
        }
    }

    fn flag(&self, key: &str) -> Result<bool, ParseError> {
        match self.keyed(key)? {
            "yes" => Ok(true),
            "no" => Ok(false),
            _ => Err(self.err(self.tokens[1].column, "expected 'yes' or 'no'")),
        }
    }

    fn number(&self, key: &str) -> Result<usize, ParseError> {
        let v = self.keyed(key)?;
        let canonical = v == "0" || (!v.starts_with('0') && v.bytes().all(|b| b.is_ascii_digit()));
        match v.parse::<usize>() {
            Ok(n) if canonical => Ok(n),
            _ => Err(self.err(self.tokens[1].column, "expected a nonnegative integer")),
        }
    }
}

impl InstanceFile {
    pub fn new(set: PointSet, query: Option<Point>) -> Self {
        InstanceFile { set, query }
    }

    /// Canonical text form.
    pub fn serialize(&self) -> String {
        let s = &self.set;
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let mut out = format!(
            "{MAGIC} {VERSION}\ndim {}\nweighted {}\ncolored {}\ncount {}\n",
            s.dim(),
            yes_no(s.is_weighted()),
            yes_no(s.colors().is_some()),
            s.len()
        );
        for i in 0..s.len() {
            let mut parts: Vec<String> = s.point(i).coords().iter().map(format_scalar).collect();
            if s.is_weighted() {
                parts.push(format_scalar(&s.weight(i)));
            }
            if let Some(c) = s.color(i) {
                parts.push(if c == Color::Red { "R" } else { "B" }.into());
            }
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        if let Some(q) = &self.query {
            let parts: Vec<String> = q.coords().iter().map(format_scalar).collect();
            out.push_str(&format!("query {}\n", parts.join(" ")));
        }
        out
    }

    pub fn parse(text: &str) -> Result<InstanceFile, ParseError> {
        let body = text.strip_suffix('\n').unwrap_or(text);
        let raw: Vec<&str> = body.split('\n').collect();
        let mut lines = Vec::with_capacity(raw.len());
        for (i, l) in raw.iter().enumerate() {
            if l.ends_with('\r') {
                return Err(ParseError {
                    line: i + 1,
                    column: l.len(),
                    message: "carriage return; lines must end with LF".into(),
                });
            }
            lines.push(Line::new(i + 1, l)?);
        }
        let header = |i: usize| {
            lines.get(i).ok_or_else(|| ParseError {
                line: i + 1,
                column: 1,
                message: "unexpected end of file in header".into(),
            })
        };

        let magic = header(0)?;
        if magic.tokens[0].text != MAGIC {
            return Err(magic.err(1, format!("expected '{MAGIC}'")));
        }
        let version = magic.number(MAGIC)?;
        if version != VERSION as usize {
            return Err(magic.err(
                magic.tokens[1].column,
                format!("unsupported version {version}"),
            ));
        }
        let dim_line = header(1)?;
        let dim = dim_line.number("dim")?;
        if dim == 0 || dim > MAX_DIM {
            return Err(dim_line.err(
                dim_line.tokens[1].column,
                format!("dimension must be 1..={MAX_DIM}"),
            ));
        }
        let weighted = header(2)?.flag("weighted")?;
        let colored = header(3)?.flag("colored")?;
        let count = header(4)?.number("count")?;

        let width = dim + weighted as usize + colored as usize;
        let mut points = Vec::with_capacity(count);
        let mut weights = Vec::new();
        let mut colors = Vec::new();
        for k in 0..count {
            let line = lines.get(5 + k).ok_or_else(|| ParseError {
                line: 6 + k,
                column: 1,
                message: format!("count mismatch: expected {count} points, found {k}"),
            })?;
            if line.tokens[0].text == "query" {
                return Err(line.err(
                    1,
                    format!("count mismatch: expected {count} points, found {k}"),
                ));
            }
            if line.tokens.len() != width {
                let column = line
                    .tokens
                    .get(width)
                    .map_or(line.end_column(), |t| t.column);
                return Err(line.err(
                    column,
                    format!(
                        "dimension mismatch: expected {width} tokens, found {}",
                        line.tokens.len()
                    ),
                ));
            }
            let coords = (0..dim)
                .map(|i| line.scalar(i))
                .collect::<Result<Vec<_>, _>>()?;
            points.push(Point::new(coords));
            if weighted {
                let w = line.scalar(dim)?;
                if w < ExactScalar::from_integer(0.into()) {
                    return Err(line.err(line.tokens[dim].column, "negative weight"));
                }
                weights.push(w);
            }
            if colored {
                let t = &line.tokens[width - 1];
                colors.push(match t.text {
                    "R" => Color::Red,
                    "B" => Color::Blue,
                    _ => return Err(line.err(t.column, "expected color 'R' or 'B'")),
                });
            }
        }

        let mut query = None;
        let mut next = 5 + count;
        if let Some(line) = lines.get(next) {
            if line.tokens[0].text != "query" {
                return Err(line.err(1, format!("count mismatch: more than {count} points")));
            }
            if line.tokens.len() != dim + 1 {
                let column = line
                    .tokens
                    .get(dim + 1)
                    .map_or(line.end_column(), |t| t.column);
                return Err(line.err(
                    column,
                    format!("dimension mismatch: query needs {dim} coordinates"),
                ));
            }
            let coords = (1..=dim)
                .map(|i| line.scalar(i))
                .collect::<Result<Vec<_>, _>>()?;
            query = Some(Point::new(coords));
            next += 1;
        }
        if let Some(line) = lines.get(next) {
            return Err(line.err(1, "unexpected content after the instance"));
        }

        let set = PointSet::with_attributes(
            dim,
            points,
            weighted.then_some(weights),
            colored.then_some(colors),
        )
        .map_err(|e| ParseError {
            line: 1,
            column: 1,
            message: e.to_string(),
        })?;
        Ok(InstanceFile { set, query })
    }
}
