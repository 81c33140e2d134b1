//! The `.tg` text format, its JSON twin, and witness files.
//!
//! Text layout: `n T` on the first line, then per snapshot a line holding the
//! edge count followed by that many `u v` lines. Lines starting with `#` are
//! ignored.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use timeline_core::{ActivityInterval, Edge, TemporalGraph, Timeline};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("not a non-negative integer: {0:?}")]
    BadNumber(String),
    #[error("need at least one vertex and one snapshot")]
    BadCounts,
    #[error("endpoint {vertex} outside 1..={n}")]
    EndpointOutOfRange { vertex: u32, n: u32 },
    #[error("self-loop on vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(u32, u32),
    #[error("unexpected trailing content")]
    Trailing,
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("invalid JSON: {0}")]
    Json(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

/// A whitespace-separated token with its 1-based position.
#[derive(Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

/// Tokens grouped by line, comments and blank lines dropped.
fn tokenize(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        if raw.trim_start().starts_with('#') {
            continue;
        }
        let mut toks = Vec::new();
        let mut start = None;
        for (pos, ch) in raw.char_indices().chain(std::iter::once((raw.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    toks.push(Token {
                        text: &raw[s..pos],
                        line: idx + 1,
                        column: s + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !toks.is_empty() {
            lines.push(toks);
        }
    }
    lines
}

fn err(tok: &Token, kind: ParseErrorKind) -> ParseError {
    ParseError {
        line: tok.line,
        column: tok.column,
        kind,
    }
}

fn number(tok: &Token) -> Result<u32, ParseError> {
    tok.text
        .parse()
        .map_err(|_| err(tok, ParseErrorKind::BadNumber(tok.text.to_string())))
}

/// Expects a line with exactly `count` tokens.
fn take_line<'a>(
    lines: &mut std::vec::IntoIter<Vec<Token<'a>>>,
    count: usize,
    what: &'static str,
    last: &mut (usize, usize),
) -> Result<Vec<Token<'a>>, ParseError> {
    let line = lines.next().ok_or(ParseError {
        line: last.0 + 1,
        column: 1,
        kind: ParseErrorKind::UnexpectedEnd,
    })?;
    *last = (line[0].line, line[0].column);
    if line.len() < count {
        let end = line.last().expect("lines are non-empty");
        return Err(ParseError {
            line: end.line,
            column: end.column + end.text.len(),
            kind: ParseErrorKind::Expected(what),
        });
    }
    if line.len() > count {
        return Err(err(&line[count], ParseErrorKind::Trailing));
    }
    Ok(line)
}

/// Parses the text format, or JSON when the input starts with `{`.
pub fn parse_instance(text: &str) -> Result<TemporalGraph, ParseError> {
    if text.trim_start().starts_with('{') {
        return parse_json_instance(text);
    }
    let mut lines = tokenize(text).into_iter();
    let mut last = (0, 1);
    let header = take_line(&mut lines, 2, "`n T`", &mut last)?;
    let n = number(&header[0])?;
    let lifetime = number(&header[1])?;
    if n == 0 || lifetime == 0 {
        return Err(err(&header[0], ParseErrorKind::BadCounts));
    }
    let mut snapshots = Vec::with_capacity(lifetime as usize);
    for _ in 0..lifetime {
        let count_line = take_line(&mut lines, 1, "an edge count", &mut last)?;
        let m = number(&count_line[0])?;
        let mut seen = HashSet::new();
        let mut edges = Vec::with_capacity(m as usize);
        for _ in 0..m {
            let pair = take_line(&mut lines, 2, "`u v`", &mut last)?;
            let (u, v) = (number(&pair[0])?, number(&pair[1])?);
            for (tok, x) in [(&pair[0], u), (&pair[1], v)] {
                if x == 0 || x > n {
                    return Err(err(tok, ParseErrorKind::EndpointOutOfRange { vertex: x, n }));
                }
            }
            if u == v {
                return Err(err(&pair[0], ParseErrorKind::SelfLoop(u)));
            }
            let e = Edge::new(u, v);
            if !seen.insert(e) {
                return Err(err(&pair[0], ParseErrorKind::DuplicateEdge(e.u, e.v)));
            }
            edges.push((u, v));
        }
        snapshots.push(edges);
    }
    if let Some(extra) = lines.next() {
        return Err(err(&extra[0], ParseErrorKind::Trailing));
    }
    Ok(TemporalGraph::new(n, snapshots).expect("validated while parsing"))
}

pub fn emit_instance(g: &TemporalGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.lifetime());
    for (_, snap) in g.snapshots() {
        out.push_str(&format!("{}\n", snap.edges().len()));
        for e in snap.edges() {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        }
    }
    out
}

#[derive(Serialize, Deserialize)]
pub struct InstanceJson {
    pub n: u32,
    pub snapshots: Vec<Vec<[u32; 2]>>,
}

fn parse_json_instance(text: &str) -> Result<TemporalGraph, ParseError> {
    let raw: InstanceJson = serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line(),
        column: e.column(),
        kind: ParseErrorKind::Json(e.to_string()),
    })?;
    let snapshots = raw
        .snapshots
        .into_iter()
        .map(|s| s.into_iter().map(|[u, v]| (u, v)).collect())
        .collect();
    TemporalGraph::new(raw.n, snapshots).map_err(|e| ParseError {
        line: 1,
        column: 1,
        kind: ParseErrorKind::Json(e.to_string()),
    })
}

pub fn emit_json_instance(g: &TemporalGraph) -> String {
    let raw = InstanceJson {
        n: g.n(),
        snapshots: g
            .snapshots()
            .map(|(_, s)| s.edges().iter().map(|e| [e.u, e.v]).collect())
            .collect(),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}

#[derive(Serialize, Deserialize)]
struct WitnessInterval {
    v: u32,
    a: u32,
    b: u32,
}

#[derive(Serialize, Deserialize)]
struct WitnessJson {
    intervals: Vec<WitnessInterval>,
}

/// `{"intervals":[{"v":..,"a":..,"b":..},…]}` in normalized order.
pub fn emit_witness(tl: &Timeline) -> String {
    let raw = WitnessJson {
        intervals: tl
            .normalized()
            .iter()
            .map(|iv| WitnessInterval { v: iv.v, a: iv.a, b: iv.b })
            .collect(),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}

pub fn parse_witness(text: &str) -> Result<Timeline, serde_json::Error> {
    let raw: WitnessJson = serde_json::from_str(text)?;
    Ok(Timeline::from_intervals(
        raw.intervals.into_iter().map(|w| ActivityInterval::new(w.v, w.a, w.b)),
    ))
}
