//! Edge colourings indexed by [`EdgeId`], and the `u v colour` text format.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::graph::io::tokens_with_offsets;
use crate::graph::{EdgeId, Graph, Vertex};

/// Colours are positive integers.
pub type Colour = u32;

/// Partial or total assignment of colours to the edges of one graph.
///
/// Serializes as one entry per edge, in edge order, `null` when uncoloured.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct EdgeColouring {
    colours: Vec<Option<Colour>>,
}

impl EdgeColouring {
    /// Uncoloured assignment for a graph with `edge_count` edges.
    pub fn new(edge_count: usize) -> Self {
        EdgeColouring {
            colours: vec![None; edge_count],
        }
    }

    pub fn for_graph(g: &Graph) -> Self {
        Self::new(g.edge_count())
    }

    /// Builds a total colouring from one colour per edge.
    ///
    /// # Panics
    /// If any colour is zero.
    pub fn from_colours(colours: impl IntoIterator<Item = Colour>) -> Self {
        let colours = colours
            .into_iter()
            .map(|c| {
                assert!(c > 0, "colours are positive");
                Some(c)
            })
            .collect();
        EdgeColouring { colours }
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn get(&self, e: EdgeId) -> Option<Colour> {
        self.colours[e]
    }

    /// # Panics
    /// If `colour` is zero.
    pub fn set(&mut self, e: EdgeId, colour: Colour) {
        assert!(colour > 0, "colours are positive");
        self.colours[e] = Some(colour);
    }

    pub fn clear(&mut self, e: EdgeId) {
        self.colours[e] = None;
    }

    pub fn is_total(&self) -> bool {
        self.colours.iter().all(Option::is_some)
    }

    pub fn coloured_count(&self) -> usize {
        self.colours.iter().flatten().count()
    }

    /// `(edge, colour)` for every coloured edge, in edge order.
    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, Colour)> + '_ {
        self.colours
            .iter()
            .enumerate()
            .filter_map(|(e, c)| c.map(|c| (e, c)))
    }

    pub fn as_slice(&self) -> &[Option<Colour>] {
        &self.colours
    }

    pub fn max_colour(&self) -> Option<Colour> {
        self.colours.iter().flatten().copied().max()
    }

    pub fn distinct_colours(&self) -> BTreeSet<Colour> {
        self.colours.iter().flatten().copied().collect()
    }

    /// Copies every coloured edge of `other` into `self`, overwriting.
    pub fn overlay(&mut self, other: &EdgeColouring) {
        assert_eq!(self.len(), other.len(), "colourings of different graphs");
        for (e, c) in other.iter() {
            self.colours[e] = Some(c);
        }
    }

    /// Adds `offset` to every colour.
    pub fn shifted(&self, offset: Colour) -> EdgeColouring {
        EdgeColouring {
            colours: self.colours.iter().map(|c| c.map(|c| c + offset)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringParseError {
    #[error("line {line}, byte {byte}: {msg}")]
    Malformed { line: usize, byte: usize, msg: String },
    #[error("line {line}: {u}-{v} is not an edge of the graph")]
    UnknownEdge { line: usize, u: Vertex, v: Vertex },
    #[error("line {line}: edge {u}-{v} coloured twice")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("line {line}: colours must be positive")]
    ZeroColour { line: usize },
}

/// Parses `u v colour` lines against `g`. Edges not listed stay uncoloured.
pub fn parse_colouring(g: &Graph, text: &str) -> Result<EdgeColouring, ColouringParseError> {
    let mut out = EdgeColouring::for_graph(g);
    let mut seen = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let tokens = tokens_with_offsets(raw);
        let [(bu, tu), (bv, tv), (bc, tc)] = tokens.as_slice() else {
            return Err(ColouringParseError::Malformed {
                line,
                byte: tokens.first().map_or(0, |t| t.0),
                msg: "expected `u v colour`".into(),
            });
        };
        let num = |tok: &str, byte: usize| {
            tok.parse::<usize>().map_err(|_| ColouringParseError::Malformed {
                line,
                byte,
                msg: format!("invalid integer `{tok}`"),
            })
        };
        let u = num(tu, *bu)?;
        let v = num(tv, *bv)?;
        let c = num(tc, *bc)?;
        let c = Colour::try_from(c).map_err(|_| ColouringParseError::Malformed {
            line,
            byte: *bc,
            msg: format!("colour {c} too large"),
        })?;
        if c == 0 {
            return Err(ColouringParseError::ZeroColour { line });
        }
        let e = g
            .edge_id(u, v)
            .ok_or(ColouringParseError::UnknownEdge { line, u, v })?;
        if !seen.insert(e) {
            return Err(ColouringParseError::DuplicateEdge { line, u, v });
        }
        out.set(e, c);
    }
    Ok(out)
}

/// One `u v colour` line per coloured edge, in edge order.
pub fn write_colouring(g: &Graph, c: &EdgeColouring) -> String {
    let mut s = String::new();
    for (e, colour) in c.iter() {
        let (u, v) = g.edge(e);
        s.push_str(&format!("{u} {v} {colour}\n"));
    }
    s
}
