//! Colouring `G_S − S0` through its doubled graph.

use super::partition::{Partition, VertexClass};
use crate::colouring::{Colour, EdgeColouring};
use crate::graph::{Graph, Vertex};
use crate::greedy::{greedy_colour, GreedyError};

#[derive(Debug, Clone)]
pub struct SmallColouring {
    /// Colours on the edges of `G_S`, in `offset+1 ..= offset+s`.
    pub colouring: EdgeColouring,
    pub s: usize,
}

/// Two copies of `h` joined by a matching on the degree-one vertices; the
/// second copy of vertex `x` is `x + h.n()`.
pub fn doubled_graph(h: &Graph) -> Graph {
    let m = h.n();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(2 * h.edge_count() + m);
    for &(u, v) in h.edges() {
        edges.push((u, v));
        edges.push((u + m, v + m));
    }
    for x in 0..m {
        if h.degree(x) == 1 {
            edges.push((x, x + m));
        }
    }
    Graph::new(2 * m, edges).expect("copies are disjoint")
}

pub fn colour_small(g: &Graph, part: &Partition, offset: Colour) -> Result<SmallColouring, GreedyError> {
    let vertices: Vec<Vertex> = part
        .small
        .iter()
        .copied()
        .filter(|&v| part.class[v] != VertexClass::S0)
        .collect();
    let (h, parent) = g.induced_subgraph(&vertices);
    let mut colouring = EdgeColouring::for_graph(g);
    if h.edge_count() == 0 {
        return Ok(SmallColouring { colouring, s: 0 });
    }
    let doubled = doubled_graph(&h);
    let c = greedy_colour(&doubled)?;
    let mut s = 0;
    for (he, &(u, v)) in h.edges().iter().enumerate() {
        let col = c.get(doubled.edge_id(u, v).expect("first copy")).expect("greedy is total");
        s = s.max(col as usize);
        colouring.set(parent[he], offset + col);
    }
    Ok(SmallColouring { colouring, s })
}
