//! Ground-truth checks for properness and palette inclusion.
//!
//! The palette of a vertex is the set of colours on its coloured incident
//! edges. A colouring is inclusion-free when it is proper, total, and no
//! vertex's palette is a subset of an adjacent vertex's palette.

use serde::Serialize;

use crate::colouring::{Colour, EdgeColouring};
use crate::graph::{Graph, Vertex};
use crate::par::{self, Execution};

/// Sorted set of colours.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct Palette(Vec<Colour>);

impl Palette {
    pub fn from_colours(colours: impl IntoIterator<Item = Colour>) -> Self {
        let mut v: Vec<Colour> = colours.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Palette(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: Colour) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn colours(&self) -> &[Colour] {
        &self.0
    }

    pub fn is_subset(&self, other: &Palette) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for c in &self.0 {
            for d in it.by_ref() {
                if d == c {
                    continue 'outer;
                }
                if d > c {
                    return false;
                }
            }
            return false;
        }
        true
    }

    /// Colours in `self` but not in `other`.
    pub fn difference(&self, other: &Palette) -> Vec<Colour> {
        self.0.iter().copied().filter(|&c| !other.contains(c)).collect()
    }
}

pub fn palette(g: &Graph, c: &EdgeColouring, v: Vertex) -> Palette {
    Palette::from_colours(g.incident(v).iter().filter_map(|&(_, e)| c.get(e)))
}

pub fn palettes(g: &Graph, c: &EdgeColouring) -> Vec<Palette> {
    (0..g.n()).map(|v| palette(g, c, v)).collect()
}

type Edge = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    /// Pairs of adjacent edges with the same colour.
    pub proper_violations: Vec<(Edge, Edge)>,
    /// Ordered adjacent pairs `(u, v)` with `palette(u) ⊆ palette(v)`.
    pub inclusion_violations: Vec<Edge>,
    pub uncoloured_edges: Vec<Edge>,
    pub colours_used: usize,
    /// Largest colour value; 0 when nothing is coloured.
    pub max_colour: Colour,
    /// Set when the graph has a vertex of degree at most one, in which case
    /// no inclusion-free colouring exists at all.
    pub no_colouring_exists: bool,
}

impl ValidationReport {
    /// True iff the colouring is a total inclusion-free proper colouring.
    pub fn is_valid(&self) -> bool {
        self.proper_violations.is_empty()
            && self.inclusion_violations.is_empty()
            && self.uncoloured_edges.is_empty()
    }
}

/// Which ordered adjacent pairs the inclusion check inspects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InclusionScope {
    /// Both directions of every edge.
    All,
    /// Only `(u, v)` with `d(u) <= d(v)`. Equivalent to `All` on total
    /// proper colourings, where a larger palette cannot fit in a smaller one.
    DegreeOrdered,
}

pub fn validate(g: &Graph, c: &EdgeColouring) -> ValidationReport {
    validate_with(g, c, Execution::default())
}

pub fn validate_with(g: &Graph, c: &EdgeColouring, mode: Execution) -> ValidationReport {
    assert_eq!(c.len(), g.edge_count(), "colouring belongs to a different graph");
    let pals: Vec<Palette> = par::map_range(mode, g.n(), |v| palette(g, c, v));

    let proper_violations = par::flat_map_range(mode, g.n(), |v| {
        let mut at: Vec<(Colour, usize)> = g
            .incident(v)
            .iter()
            .filter_map(|&(_, e)| c.get(e).map(|col| (col, e)))
            .collect();
        at.sort_unstable();
        let mut out = Vec::new();
        for (i, &(ci, ei)) in at.iter().enumerate() {
            for &(cj, ej) in &at[i + 1..] {
                if cj != ci {
                    break;
                }
                out.push((g.edge(ei), g.edge(ej)));
            }
        }
        out
    });

    let inclusion_violations = inclusion_pairs(g, &pals, InclusionScope::All, mode);
    let uncoloured_edges = (0..g.edge_count())
        .filter(|&e| c.get(e).is_none())
        .map(|e| g.edge(e))
        .collect();
    let distinct = c.distinct_colours();

    ValidationReport {
        proper_violations,
        inclusion_violations,
        uncoloured_edges,
        colours_used: distinct.len(),
        max_colour: distinct.last().copied().unwrap_or(0),
        no_colouring_exists: g.min_degree() <= 1,
    }
}

pub fn inclusion_violations(
    g: &Graph,
    c: &EdgeColouring,
    scope: InclusionScope,
) -> Vec<(Vertex, Vertex)> {
    let pals = palettes(g, c);
    inclusion_pairs(g, &pals, scope, Execution::default())
}

fn inclusion_pairs(
    g: &Graph,
    pals: &[Palette],
    scope: InclusionScope,
    mode: Execution,
) -> Vec<(Vertex, Vertex)> {
    par::flat_map_range(mode, g.edge_count(), |e| {
        let (u, v) = g.edge(e);
        let mut out = Vec::new();
        for (x, y) in [(u, v), (v, u)] {
            if scope == InclusionScope::DegreeOrdered && g.degree(x) > g.degree(y) {
                continue;
            }
            if pals[x].is_subset(&pals[y]) {
                out.push((x, y));
            }
        }
        out
    })
}
