//! Simple undirected graphs, multigraphs and the helpers every colouring
//! routine in the crate is built on.
//!
//! Vertices are dense integers `0..n`. Edges of a [`Graph`] are stored in
//! lexicographic order of their normalized `(min, max)` endpoints, so an
//! [`EdgeId`] is stable for a given edge set regardless of input order.

pub mod generate;
pub mod io;
pub mod ordering;

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

pub use ordering::{min_degree_last_ordering, VertexOrdering};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
}

/// Immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    // sorted by neighbour id
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in list.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// `(neighbour, edge id)` pairs around `v`, sorted by neighbour.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbours(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Minimum degree; 0 for the graph on no vertices.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let a = &self.adj[u];
        a.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| a[i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Other endpoint of `e`, seen from `v`.
    pub fn opposite(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// The graph on no vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Induced subgraph on `vertices` (in the given order); vertex `i` of the
    /// result is `vertices[i]`. Also returns, for every edge of the result,
    /// the id of the corresponding edge here.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Graph, Vec<EdgeId>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut pairs = Vec::new();
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                pairs.push(((index[u], index[v]), id));
            }
        }
        self.build_sub(vertices.len(), pairs)
    }

    /// Spanning subgraph keeping only the listed edges. Returns the subgraph
    /// and the parent edge id of each of its edges.
    pub fn edge_subgraph(&self, edge_ids: &[EdgeId]) -> (Graph, Vec<EdgeId>) {
        let pairs = edge_ids.iter().map(|&id| (self.edges[id], id)).collect();
        self.build_sub(self.n, pairs)
    }

    fn build_sub(&self, n: usize, pairs: Vec<((Vertex, Vertex), EdgeId)>) -> (Graph, Vec<EdgeId>) {
        let mut keyed: Vec<_> = pairs
            .into_iter()
            .map(|((u, v), id)| ((u.min(v), u.max(v)), id))
            .collect();
        keyed.sort_unstable();
        let g = Graph::new(n, keyed.iter().map(|&(p, _)| p))
            .expect("subgraph of a simple graph is simple");
        let parent = keyed.into_iter().map(|(_, id)| id).collect();
        (g, parent)
    }
}

/// Summary of a graph for reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl From<&Graph> for GraphSummary {
    fn from(g: &Graph) -> Self {
        GraphSummary {
            n: g.n(),
            edges: g.edge_count(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
        }
    }
}

/// Loopless undirected multigraph. Parallel edges are distinct edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    incidence: Vec<Vec<EdgeId>>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut m = Multigraph::new(n);
        for (u, v) in edges {
            m.add_edge(u, v)?;
        }
        Ok(m)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.incidence[u].push(id);
        self.incidence[v].push(id);
        Ok(id)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        &self.incidence[v]
    }

    /// Degree counts multiplicity.
    pub fn degree(&self, v: Vertex) -> usize {
        self.incidence[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn opposite(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }
}
