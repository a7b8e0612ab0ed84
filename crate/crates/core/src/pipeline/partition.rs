use serde::Serialize;

use crate::graph::{EdgeId, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexClass {
    /// Small vertex with no small neighbours.
    S0,
    /// Small vertex with exactly one small neighbour.
    S1,
    /// Small vertex with at least two small neighbours.
    S2,
    Big,
}

/// Split of the vertices at degree threshold `tau`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Partition {
    pub tau: f64,
    pub class: Vec<VertexClass>,
    /// Number of small neighbours, `d_S(v)`.
    pub small_degree: Vec<usize>,
    pub small: Vec<Vertex>,
    pub big: Vec<Vertex>,
    pub s0: Vec<Vertex>,
    pub s1: Vec<Vertex>,
    /// Edges between `S0 ∪ S1` and `B`.
    pub h_edges: Vec<EdgeId>,
    /// Edges with both ends small.
    pub gs_edges: Vec<EdgeId>,
    /// Edges with both ends big.
    pub gb_edges: Vec<EdgeId>,
}

impl Partition {
    pub fn is_small(&self, v: Vertex) -> bool {
        self.class[v] != VertexClass::Big
    }

    pub fn is_big(&self, v: Vertex) -> bool {
        self.class[v] == VertexClass::Big
    }

    /// `S0 ∪ S1`, the small side of `H`.
    pub fn in_x(&self, v: Vertex) -> bool {
        matches!(self.class[v], VertexClass::S0 | VertexClass::S1)
    }

    pub fn is_h_edge(&self, g: &Graph, e: EdgeId) -> bool {
        let (u, v) = g.edge(e);
        (self.in_x(u) && self.is_big(v)) || (self.in_x(v) && self.is_big(u))
    }

    pub fn is_gs_edge(&self, g: &Graph, e: EdgeId) -> bool {
        let (u, v) = g.edge(e);
        self.is_small(u) && self.is_small(v)
    }

    /// `d_H(v)`.
    pub fn h_degree(&self, g: &Graph, v: Vertex) -> usize {
        match self.class[v] {
            VertexClass::S0 | VertexClass::S1 => g.degree(v) - self.small_degree[v],
            VertexClass::Big => g.neighbours(v).filter(|&w| self.in_x(w)).count(),
            VertexClass::S2 => 0,
        }
    }
}

/// `S = {v : d(v) <= tau}`, `B` the rest.
pub fn partition(g: &Graph, tau: f64) -> Partition {
    let n = g.n();
    let small_flag: Vec<bool> = (0..n).map(|v| g.degree(v) as f64 <= tau).collect();
    let small_degree: Vec<usize> = (0..n)
        .map(|v| {
            if small_flag[v] {
                g.neighbours(v).filter(|&w| small_flag[w]).count()
            } else {
                0
            }
        })
        .collect();
    let class: Vec<VertexClass> = (0..n)
        .map(|v| match (small_flag[v], small_degree[v]) {
            (false, _) => VertexClass::Big,
            (true, 0) => VertexClass::S0,
            (true, 1) => VertexClass::S1,
            (true, _) => VertexClass::S2,
        })
        .collect();
    let pick = |c: &dyn Fn(VertexClass) -> bool| (0..n).filter(|&v| c(class[v])).collect::<Vec<_>>();
    let small = pick(&|c| c != VertexClass::Big);
    let big = pick(&|c| c == VertexClass::Big);
    let s0 = pick(&|c| c == VertexClass::S0);
    let s1 = pick(&|c| c == VertexClass::S1);

    let mut p = Partition {
        tau,
        class,
        small_degree,
        small,
        big,
        s0,
        s1,
        h_edges: Vec::new(),
        gs_edges: Vec::new(),
        gb_edges: Vec::new(),
    };
    for e in 0..g.edge_count() {
        let (u, v) = g.edge(e);
        if p.is_h_edge(g, e) {
            p.h_edges.push(e);
        } else if p.is_small(u) && p.is_small(v) {
            p.gs_edges.push(e);
        } else if p.is_big(u) && p.is_big(v) {
            p.gb_edges.push(e);
        }
    }
    p
}
