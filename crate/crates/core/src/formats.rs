//! Text formats: spec files, edge tables, generator matrices and JSON
//! reports. Vertex indices in every external format are 1-based.
//!
//! Edge table:
//!
//! ```text
//! n = 6
//! # comment
//! (1, {2, 3, 4}), (2, {3, 5})
//! (3, {6})
//! ```
//!
//! Each `(i, {j, …})` adds the edges `i–j`; the header fixes the vertex
//! count and may be omitted, in which case the largest index is used.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::addcode::{AdditiveCode, CodeError, ProfileKind, WeightProfile};
use crate::gf4::Gf4Vector;
use crate::metagraph::{MetacirculantSpec, SimpleGraph};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },
    #[error("line {line}: vertex {v} outside 1..={n}")]
    OutOfRange { line: usize, v: usize, n: usize },
    #[error("spec file: {0}")]
    Spec(String),
    #[error("line {line}: {source}")]
    Row { line: usize, source: CodeError },
    #[error(transparent)]
    Code(#[from] CodeError),
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

pub fn parse_spec_toml(text: &str) -> Result<MetacirculantSpec, FormatError> {
    toml::from_str(text).map_err(|e| FormatError::Spec(e.message().to_string()))
}

pub fn render_spec_toml(spec: &MetacirculantSpec) -> String {
    let sets: Vec<String> = spec
        .sets
        .iter()
        .map(|s| format!("[{}]", s.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")))
        .collect();
    format!(
        "m = {}\nell = {}\nalpha = {}\nsets = [{}]\n",
        spec.m,
        spec.ell,
        spec.alpha,
        sets.join(", ")
    )
}

/// Minimal cursor over one line of an edge table.
struct Cursor<'a> {
    rest: &'a str,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        self.rest = self.rest.trim_start();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        match self.rest.strip_prefix(c) {
            Some(r) => {
                self.rest = r;
                true
            }
            None => false,
        }
    }

    fn expect(&mut self, c: char) -> Result<(), FormatError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn number(&mut self) -> Result<usize, FormatError> {
        self.skip_ws();
        let end = self.rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest.len());
        if end == 0 {
            return Err(self.error("expected a vertex index".into()));
        }
        let (digits, rest) = self.rest.split_at(end);
        self.rest = rest;
        digits.parse().map_err(|_| self.error(format!("index {digits} too large")))
    }

    fn error(&self, message: String) -> FormatError {
        let near: String = self.rest.chars().take(12).collect();
        let message = if near.is_empty() {
            format!("{message} at end of line")
        } else {
            format!("{message} near '{near}'")
        };
        FormatError::Malformed { line: self.line, message }
    }
}

fn parse_header(body: &str) -> Option<&str> {
    let (key, value) = body.split_once('=')?;
    (key.trim() == "n").then(|| value.trim())
}

pub fn parse_edge_table(text: &str) -> Result<SimpleGraph, FormatError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = strip_comment(raw).trim();
        if body.is_empty() {
            continue;
        }
        if let Some(value) = parse_header(body) {
            if n.is_some() || !edges.is_empty() {
                return Err(FormatError::Malformed {
                    line,
                    message: "the 'n = …' header must come first and only once".into(),
                });
            }
            n = Some(value.parse().map_err(|_| FormatError::Malformed {
                line,
                message: format!("bad vertex count '{value}'"),
            })?);
            continue;
        }
        let mut cur = Cursor { rest: body, line };
        loop {
            cur.expect('(')?;
            let i = cur.number()?;
            cur.expect(',')?;
            cur.expect('{')?;
            if !cur.eat('}') {
                loop {
                    edges.push((line, i, cur.number()?));
                    if cur.eat('}') {
                        break;
                    }
                    cur.expect(',')?;
                }
            }
            cur.expect(')')?;
            cur.eat(',');
            cur.skip_ws();
            if cur.rest.is_empty() {
                break;
            }
        }
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(_, i, j)| i.max(j)).max().unwrap_or(0));
    let mut g = SimpleGraph::empty(n);
    for (line, i, j) in edges {
        for v in [i, j] {
            if v == 0 || v > n {
                return Err(FormatError::OutOfRange { line, v, n });
            }
        }
        if i == j {
            return Err(FormatError::SelfLoop { line, v: i });
        }
        if g.has_edge(i - 1, j - 1) {
            return Err(FormatError::DuplicateEdge {
                line,
                u: i.min(j),
                v: i.max(j),
            });
        }
        g.insert_edge(i - 1, j - 1);
    }
    Ok(g)
}

/// One row per vertex with a higher-numbered neighbour.
pub fn render_edge_table(g: &SimpleGraph) -> String {
    let mut out = format!("n = {}\n", g.n());
    for u in 0..g.n() {
        let up: Vec<String> = g.neighbors(u).filter(|&v| v > u).map(|v| (v + 1).to_string()).collect();
        if !up.is_empty() {
            let _ = writeln!(out, "({}, {{{}}})", u + 1, up.join(", "));
        }
    }
    out
}

/// Rows of `0 1 w W` symbols, one generator per line.
pub fn parse_generator_matrix(text: &str) -> Result<AdditiveCode, FormatError> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let body = strip_comment(raw).trim();
        if body.is_empty() {
            continue;
        }
        let row = Gf4Vector::parse(body).map_err(|e| FormatError::Row {
            line: idx + 1,
            source: e.into(),
        })?;
        if let Some(first) = rows.first().map(Gf4Vector::len) {
            if row.len() != first {
                return Err(FormatError::Malformed {
                    line: idx + 1,
                    message: format!("row has {} symbols, expected {first}", row.len()),
                });
            }
        }
        rows.push(row);
    }
    Ok(AdditiveCode::new(rows)?)
}

pub fn render_generator_matrix(code: &AdditiveCode) -> String {
    code.generators().iter().map(|g| format!("{g}\n")).collect()
}

/// Serialized form of a distance computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub schema_version: u32,
    pub n: usize,
    pub kind: ProfileKind,
    /// Exact `d`, or an upper bound when `kind` is sampled.
    pub d: Option<usize>,
    /// Nonzero `A_w` only.
    pub counts: BTreeMap<usize, u64>,
    pub runtime_ms: u64,
    pub seed: Option<u64>,
    pub samples: Option<u64>,
}

impl ProfileReport {
    pub fn new(profile: &WeightProfile, runtime_ms: u64, seed: Option<u64>, samples: Option<u64>) -> Self {
        ProfileReport {
            schema_version: REPORT_SCHEMA_VERSION,
            n: profile.n,
            kind: profile.kind,
            d: profile.min_distance,
            counts: profile.nonzero_counts(),
            runtime_ms,
            seed,
            samples,
        }
    }
}
