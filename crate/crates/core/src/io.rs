//! Graph file formats, exact rational parsing and the result document.
//!
//! Edgelist: one `u v` pair per line, 0-indexed, `#` starts a comment. An
//! optional `# vertices: N` comment keeps trailing isolated vertices.
//!
//! DIMACS: a `p edge N M` header followed by `M` lines `e u v`, 1-indexed.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use clap::ValueEnum;
use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::{EdgeMask, Graph, GraphError};
use crate::verify::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Edgelist,
    Dimacs,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

pub fn parse_graph(path: &Path, format: Format) -> Result<Graph, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph_str(&text, format)
}

pub fn parse_graph_str(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Edgelist => parse_edgelist(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut declared = 0;
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b, Some(c)),
            None => (raw, None),
        };
        if let Some(n) = comment.and_then(|c| c.trim().strip_prefix("vertices:")) {
            declared = n
                .trim()
                .parse()
                .map_err(|_| syntax(line, format!("bad vertex count {:?}", n.trim())))?;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            [u, v] => pairs.push((vertex(u, line)?, vertex(v, line)?)),
            _ => return Err(syntax(line, "expected two vertex ids")),
        }
    }
    let n = pairs
        .iter()
        .map(|&(u, v)| u.max(v) + 1)
        .max()
        .unwrap_or(0)
        .max(declared);
    Ok(Graph::new(n, &pairs)?)
}

fn vertex(s: &str, line: usize) -> Result<usize, ParseError> {
    s.parse()
        .map_err(|_| syntax(line, format!("bad vertex id {s:?}")))
}

fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.as_slice() {
            [] | ["c", ..] => {}
            ["p", kind, n, m] => {
                if header.is_some() {
                    return Err(syntax(line, "second problem line"));
                }
                if *kind != "edge" && *kind != "col" {
                    return Err(syntax(line, format!("unsupported problem type {kind:?}")));
                }
                let n = n.parse().map_err(|_| syntax(line, "bad vertex count"))?;
                let m = m.parse().map_err(|_| syntax(line, "bad edge count"))?;
                header = Some((n, m));
            }
            ["e", u, v] => {
                let Some((n, _)) = header else {
                    return Err(syntax(line, "edge before the problem line"));
                };
                let one_based = |s: &str| -> Result<usize, ParseError> {
                    match s.parse::<usize>() {
                        Ok(x) if (1..=n).contains(&x) => Ok(x - 1),
                        _ => Err(syntax(line, format!("vertex {s:?} outside 1..={n}"))),
                    }
                };
                pairs.push((one_based(u)?, one_based(v)?));
            }
            _ => return Err(syntax(line, format!("unrecognised line {raw:?}"))),
        }
    }
    let Some((n, m)) = header else {
        return Err(syntax(last_line.max(1), "missing problem line"));
    };
    if pairs.len() != m {
        return Err(syntax(
            last_line.max(1),
            format!("header announces {m} edges, found {}", pairs.len()),
        ));
    }
    Ok(Graph::new(n, &pairs)?)
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("# vertices: {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Edgelist => write_edgelist(g),
        Format::Dimacs => write_dimacs(g),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValueError {
    #[error("not a rational number: {0:?}")]
    Rational(String),
    #[error("bad edge list {0:?}, expected \"u,v;u,v\"")]
    EdgeList(String),
    #[error("{0:?} is not an edge of the graph")]
    NotAnEdge((usize, usize)),
}

/// Exact value of `"3/2"`, `"1.5"`, `"-0.25"` or `"2"`.
pub fn parse_rational(s: &str) -> Result<Rational, ValueError> {
    let bad = || ValueError::Rational(s.to_string());
    let s = s.trim();
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.starts_with('-');
        let digits = int.trim_start_matches(['-', '+']);
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 18 {
            return Err(bad());
        }
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let whole: i64 = if digits.is_empty() {
            0
        } else {
            digits.parse().map_err(|_| bad())?
        };
        let scale = 10i64.pow(frac.len() as u32);
        let num = whole
            .checked_mul(scale)
            .and_then(|w| w.checked_add(frac.parse::<i64>().ok()?))
            .ok_or_else(bad)?;
        let r = Rational::new(num, scale);
        return Ok(if negative { -r } else { r });
    }
    let r = Rational::from_str(s).map_err(|_| bad())?;
    Ok(r)
}

/// Parses `"u,v;u,v"` into vertex pairs.
pub fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>, ValueError> {
    let bad = || ValueError::EdgeList(s.to_string());
    s.split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let (u, v) = p.split_once(',').ok_or_else(bad)?;
            Ok((
                u.trim().parse().map_err(|_| bad())?,
                v.trim().parse().map_err(|_| bad())?,
            ))
        })
        .collect()
}

pub fn mask_from_pairs(g: &Graph, pairs: &[(usize, usize)]) -> Result<EdgeMask, ValueError> {
    let mut mask = g.empty_mask();
    for &(u, v) in pairs {
        let valid = u < g.vertex_count() && v < g.vertex_count();
        let e = valid
            .then(|| g.edge_between(u, v))
            .flatten()
            .ok_or(ValueError::NotAnEdge((u, v)))?;
        mask.insert(e);
    }
    Ok(mask)
}

pub fn mask_pairs(g: &Graph, mask: &EdgeMask) -> Vec<(usize, usize)> {
    mask.iter().map(|e| g.endpoints(e)).collect()
}

/// Machine-readable command output: a JSON object with one top-level field
/// per line, in insertion order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ResultDoc {
    fields: Vec<(String, Value)>,
}

impl ResultDoc {
    pub fn new(command: &str) -> Self {
        ResultDoc::default().with("command", command)
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.set(key, value);
        self
    }

    /// Adds or replaces a field, keeping its original position.
    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        let value = value.into();
        match self.fields.iter_mut().find(|(k, _)| k == key) {
            Some(slot) => slot.1 = value,
            None => self.fields.push((key.to_string(), value)),
        }
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn render(&self) -> String {
        let mut out = String::from("{\n");
        for (i, (k, v)) in self.fields.iter().enumerate() {
            let sep = if i + 1 == self.fields.len() { "" } else { "," };
            writeln!(out, "  {}: {}{sep}", json!(k), v).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

pub fn pairs_value(pairs: &[(usize, usize)]) -> Value {
    Value::Array(pairs.iter().map(|&(u, v)| json!([u, v])).collect())
}
