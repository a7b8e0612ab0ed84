//! Text formats: graph6 (one graph per line) and a plain edge list.
//!
//! The edge-list format is UTF-8 with one `u v` pair per line (0-based).
//! Blank lines and lines starting with `#` are ignored. An optional first
//! data line holding a single integer declares the vertex count; without it
//! the vertex count is one more than the largest index mentioned.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Graph, Vertex};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Largest vertex count an edge list may declare or imply. Guards against a
/// stray large index allocating gigabytes of empty adjacency.
pub const MAX_EDGE_LIST_VERTICES: usize = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edgelist" | "edge-list" => Ok(GraphFormat::EdgeList),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::Graph6 => "graph6",
            GraphFormat::EdgeList => "edgelist",
        })
    }
}

/// Parse failure with a 1-based line number and, where meaningful, a
/// 0-based byte offset within that line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("line {line}, byte {byte}: {msg}")]
    Malformed { line: usize, byte: usize, msg: String },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { line: usize, vertex: Vertex, n: usize },
}

impl ParseError {
    fn malformed(line: usize, byte: usize, msg: impl Into<String>) -> Self {
        ParseError::Malformed {
            line,
            byte,
            msg: msg.into(),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::Graph6 => {
            let mut lines = data_lines_g6(text);
            let (line, body) = lines.next().ok_or(ParseError::Empty)?;
            if let Some((extra, _)) = lines.next() {
                return Err(ParseError::malformed(
                    extra,
                    0,
                    "more than one graph6 record; use a stream reader",
                ));
            }
            parse_graph6_line(body, line)
        }
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => {
            let mut s = write_graph6(g);
            s.push('\n');
            s
        }
        GraphFormat::EdgeList => write_edge_list(g),
    }
}

fn data_lines_g6(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty())
}

/// Iterates over the graph6 records of a multi-line text, one result per
/// non-empty line, tagged with its line number.
pub fn graph6_records(text: &str) -> impl Iterator<Item = (usize, Result<Graph, ParseError>)> + '_ {
    data_lines_g6(text).map(|(line, body)| (line, parse_graph6_line(body, line)))
}

/// Parses a single graph6 record. `line` is only used for error positions.
pub fn parse_graph6_line(record: &str, line: usize) -> Result<Graph, ParseError> {
    let record = record.trim_end();
    let (offset, body) = match record.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest.as_bytes()),
        None => (0, record.as_bytes()),
    };
    if body.is_empty() {
        return Err(ParseError::malformed(line, offset, "missing graph6 size header"));
    }
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(ParseError::malformed(
            line,
            offset + pos,
            format!("byte {:#04x} outside the graph6 range 63..=126", body[pos]),
        ));
    }
    let six = |b: u8| (b - 63) as usize;

    let (n, header_len) = if body[0] < 126 {
        (six(body[0]), 1)
    } else if body.len() >= 2 && body[1] < 126 {
        if body.len() < 4 {
            return Err(ParseError::malformed(line, offset, "truncated 4-byte size header"));
        }
        ((six(body[1]) << 12) | (six(body[2]) << 6) | six(body[3]), 4)
    } else {
        if body.len() < 8 {
            return Err(ParseError::malformed(line, offset, "truncated 8-byte size header"));
        }
        let n = body[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | six(b));
        (n, 8)
    };

    let Some(bits) = n.checked_mul(n.saturating_sub(1)).map(|x| x / 2) else {
        return Err(ParseError::malformed(line, offset, format!("vertex count {n} too large")));
    };
    let expected = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() != expected {
        return Err(ParseError::malformed(
            line,
            offset + header_len,
            format!(
                "expected {expected} adjacency bytes for n = {n}, found {}",
                data.len()
            ),
        ));
    }

    let bit = |k: usize| (six(data[k / 6]) >> (5 - k % 6)) & 1 == 1;
    for k in bits..expected * 6 {
        if bit(k) {
            return Err(ParseError::malformed(
                line,
                offset + header_len + k / 6,
                "non-zero padding bits",
            ));
        }
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges).expect("graph6 upper triangle encodes a simple graph"))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    for &(u, v) in g.edges() {
        // column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
        let k = v * (v - 1) / 2 + u;
        data[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(data.into_iter().map(|b| b + 63));
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut seen_data = false;
    let mut pairs: Vec<(usize, Vertex, Vertex)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let tokens: Vec<(usize, &str)> = tokens_with_offsets(raw);
        match tokens.as_slice() {
            [(byte, tok)] if !seen_data => {
                let n = tok.parse::<usize>().map_err(|_| {
                    ParseError::malformed(line, *byte, format!("invalid vertex count `{tok}`"))
                })?;
                declared = Some(n);
            }
            [(bu, tu), (bv, tv)] => {
                let u = parse_vertex(tu, line, *bu)?;
                let v = parse_vertex(tv, line, *bv)?;
                pairs.push((line, u, v));
            }
            _ => {
                return Err(ParseError::malformed(
                    line,
                    tokens.first().map_or(0, |t| t.0),
                    "expected `u v`",
                ))
            }
        }
        seen_data = true;
    }

    let n = match declared {
        Some(n) => n,
        None => pairs.iter().map(|&(_, u, v)| u.max(v).saturating_add(1)).max().unwrap_or(0),
    };
    if n > MAX_EDGE_LIST_VERTICES {
        return Err(ParseError::malformed(
            1,
            0,
            format!("vertex count {n} exceeds the limit {MAX_EDGE_LIST_VERTICES}"),
        ));
    }
    let mut seen = HashSet::with_capacity(pairs.len());
    for &(line, u, v) in &pairs {
        for w in [u, v] {
            if w >= n {
                return Err(ParseError::VertexOutOfRange { line, vertex: w, n });
            }
        }
        if u == v {
            return Err(ParseError::Loop { line, vertex: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::DuplicateEdge { line, u, v });
        }
    }
    Ok(Graph::new(n, pairs.into_iter().map(|(_, u, v)| (u, v)))
        .expect("edge list was checked line by line"))
}

fn parse_vertex(tok: &str, line: usize, byte: usize) -> Result<Vertex, ParseError> {
    tok.parse::<Vertex>()
        .map_err(|_| ParseError::malformed(line, byte, format!("invalid vertex `{tok}`")))
}

pub(crate) fn tokens_with_offsets(raw: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in raw.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &raw[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &raw[s..]));
    }
    out
}

/// Writes the vertex count followed by one `u v` line per edge.
pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
