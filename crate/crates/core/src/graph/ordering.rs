use std::collections::BTreeSet;

use super::{Graph, Vertex};

/// A vertex permutation in which every vertex has minimum degree in the
/// subgraph induced by itself and its predecessors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrdering {
    order: Vec<Vertex>,
}

impl VertexOrdering {
    /// Wraps an arbitrary permutation. Use [`VertexOrdering::violation`] to
    /// check the minimum-degree property.
    pub fn from_order(order: Vec<Vertex>) -> Self {
        VertexOrdering { order }
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// First position `i` at which `order[i]` does not have minimum degree in
    /// `g[order[0..=i]]`, or a description of why the sequence is not a
    /// permutation. Recomputes every prefix from scratch.
    pub fn violation(&self, g: &Graph) -> Option<String> {
        let n = g.n();
        if self.order.len() != n {
            return Some(format!("ordering has {} entries for {n} vertices", self.order.len()));
        }
        let mut seen = vec![false; n];
        for &v in &self.order {
            if v >= n || seen[v] {
                return Some(format!("vertex {v} is repeated or out of range"));
            }
            seen[v] = true;
        }
        let mut in_prefix = vec![false; n];
        for (i, &v) in self.order.iter().enumerate() {
            in_prefix[v] = true;
            let deg = |x: Vertex| g.neighbours(x).filter(|&w| in_prefix[w]).count();
            let dv = deg(v);
            if let Some(&w) = self.order[..i].iter().find(|&&w| deg(w) < dv) {
                return Some(format!(
                    "position {i}: vertex {v} has induced degree {dv} but {w} has {}",
                    deg(w)
                ));
            }
        }
        None
    }
}

/// Repeatedly removes a minimum-degree vertex (smallest id on ties) and
/// places it at the end of the order.
pub fn min_degree_last_ordering(g: &Graph) -> VertexOrdering {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, Vertex)> = (0..n).map(|v| (degree[v], v)).collect();
    let mut removed = vec![false; n];
    let mut order = vec![0; n];
    for slot in (0..n).rev() {
        let (_, v) = queue.pop_first().expect("one vertex per slot");
        removed[v] = true;
        order[slot] = v;
        for w in g.neighbours(v) {
            if !removed[w] {
                queue.remove(&(degree[w], w));
                degree[w] -= 1;
                queue.insert((degree[w], w));
            }
        }
    }
    VertexOrdering { order }
}
