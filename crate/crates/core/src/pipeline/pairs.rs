//! Colouring `G′` from the pairs `P_i = {3i−2, 3i−1}`.

use serde::Serialize;

use super::partition::{Partition, VertexClass};
use super::shannon::{shannon_bound, shannon_multigraph_colour};
use super::{StageFailure, StageKind};
use crate::colouring::{Colour, EdgeColouring};
use crate::graph::{EdgeId, Graph, Multigraph, Vertex};

/// Where an edge of `G″` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    Edge(EdgeId),
    /// The two `H′`-edges `vu`, `vw` of `v ∈ S0`, merged into `uw`.
    Contracted { v: Vertex, edges: [EdgeId; 2] },
}

/// `G″` with its pair labels (1-based pair indices).
#[derive(Debug, Clone)]
pub struct Contraction {
    pub multigraph: Multigraph,
    pub origin: Vec<Origin>,
    pub labels: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct PairColouring {
    pub colouring: EdgeColouring,
    pub contraction: Contraction,
    pub r: usize,
    /// `r` as requested before any enlargement.
    pub r_requested: usize,
    /// Pairs appended because a recolouring found no free pair.
    pub enlargements: usize,
}

pub fn pair_low(i: usize) -> Colour {
    (3 * i - 2) as Colour
}

pub fn pair_high(i: usize) -> Colour {
    (3 * i - 1) as Colour
}

pub fn pair_of(c: Colour) -> usize {
    (c as usize).div_ceil(3)
}

/// Contracts the `H′`-edges at each `S0` vertex.
pub fn contract(g: &Graph, part: &Partition, g_prime: &[EdgeId], h_prime: &[EdgeId]) -> Result<(Multigraph, Vec<Origin>), StageFailure> {
    let mut in_h = vec![false; g.edge_count()];
    for &e in h_prime {
        in_h[e] = true;
    }
    let mut m = Multigraph::new(g.n());
    let mut origin = Vec::new();
    for &e in g_prime {
        let (u, v) = g.edge(e);
        let at_s0 = part.class[u] == VertexClass::S0 || part.class[v] == VertexClass::S0;
        if !(in_h[e] && at_s0) {
            m.add_edge(u, v).expect("edge of a simple graph");
            origin.push(Origin::Edge(e));
        }
    }
    for &v in &part.s0 {
        let hv: Vec<(Vertex, EdgeId)> = g.incident(v).iter().filter(|&&(_, e)| in_h[e]).copied().collect();
        let [(u, e1), (w, e2)] = hv[..] else {
            return Err(StageFailure::new(
                StageKind::Pairs,
                format!("vertex {v} of S0 has {} H' edges", hv.len()),
            ));
        };
        m.add_edge(u, w).expect("distinct neighbours");
        origin.push(Origin::Contracted { v, edges: [e1, e2] });
    }
    Ok((m, origin))
}

fn labels_at(m: &Multigraph, labels: &[usize], v: Vertex) -> Vec<usize> {
    m.incident(v).iter().map(|&e| labels[e]).collect()
}

pub fn pair_colour(
    g: &Graph,
    part: &Partition,
    g_prime: &[EdgeId],
    h_prime: &[EdgeId],
    r_requested: usize,
) -> Result<PairColouring, StageFailure> {
    let (m, origin) = contract(g, part, g_prime, h_prime)?;
    let mut r = r_requested.max(shannon_bound(m.max_degree())).max(1);
    let mut labels = shannon_multigraph_colour(&m, r)
        .map_err(|err| StageFailure::new(StageKind::Pairs, err.to_string()))?;

    let mut colour = EdgeColouring::for_graph(g);
    let label_of_edge: Vec<Option<usize>> = {
        let mut l = vec![None; g.edge_count()];
        for (i, o) in origin.iter().enumerate() {
            if let Origin::Edge(e) = *o {
                l[e] = Some(i);
            }
        }
        l
    };

    // components of G[S \ S0]
    let mut seen = vec![false; g.n()];
    for &start in &part.small {
        if seen[start] || part.class[start] == VertexClass::S0 {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            i += 1;
            for y in g.neighbours(x) {
                if part.is_small(y) && !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
        }
        comp.sort_unstable();
        let isolated_s1_edge = comp.len() == 2 && comp.iter().all(|&x| part.class[x] == VertexClass::S1);
        for (rank, &x) in comp.iter().enumerate() {
            let low = if isolated_s1_edge {
                rank == 0
            } else {
                part.class[x] == VertexClass::S1
            };
            for &(_, e) in g.incident(x) {
                if let Some(me) = label_of_edge[e] {
                    let i = labels[me];
                    colour.set(e, if low { pair_low(i) } else { pair_high(i) });
                }
            }
        }
    }

    let mut enlargements = 0;
    for (ce, o) in origin.iter().enumerate() {
        let Origin::Contracted { v, edges } = *o else {
            continue;
        };
        let i = labels[ce];
        for &me in m.incident(v) {
            if labels[me] != i {
                continue;
            }
            let y = m.opposite(me, v);
            let mut used = labels_at(&m, &labels, v);
            used.extend(labels_at(&m, &labels, y));
            used.push(i);
            let j = match (1..=r).find(|j| !used.contains(j)) {
                Some(j) => j,
                None => {
                    r += 1;
                    enlargements += 1;
                    r
                }
            };
            labels[me] = j;
        }
        let (mut a, mut b) = (edges[0], edges[1]);
        if g.opposite(a, v) > g.opposite(b, v) {
            std::mem::swap(&mut a, &mut b);
        }
        colour.set(a, pair_low(i));
        colour.set(b, pair_high(i));
    }

    for (me, o) in origin.iter().enumerate() {
        if let Origin::Edge(e) = *o {
            if colour.get(e).is_none() {
                colour.set(e, pair_low(labels[me]));
            }
        }
    }

    let out = PairColouring {
        colouring: colour,
        contraction: Contraction {
            multigraph: m,
            origin,
            labels,
        },
        r,
        r_requested,
        enlargements,
    };
    if let Some(problem) = pairs_violation(g, part, g_prime, &out.colouring, r) {
        return Err(StageFailure::new(StageKind::Pairs, problem));
    }
    Ok(out)
}

/// First failed postcondition of the pair colouring, if any.
pub fn pairs_violation(
    g: &Graph,
    part: &Partition,
    g_prime: &[EdgeId],
    c: &EdgeColouring,
    r: usize,
) -> Option<String> {
    let mut in_gp = vec![false; g.edge_count()];
    for &e in g_prime {
        in_gp[e] = true;
        match c.get(e) {
            None => return Some(format!("edge {:?} of G' uncoloured", g.edge(e))),
            Some(col) if col % 3 == 0 || col as usize > 3 * r => {
                return Some(format!("edge {:?} has colour {col}", g.edge(e)))
            }
            _ => {}
        }
    }
    let at = |v: Vertex| -> Vec<Colour> {
        let mut cs: Vec<Colour> = g
            .incident(v)
            .iter()
            .filter(|&&(_, e)| in_gp[e])
            .filter_map(|&(_, e)| c.get(e))
            .collect();
        cs.sort_unstable();
        cs
    };
    for v in 0..g.n() {
        let cs = at(v);
        if cs.windows(2).any(|w| w[0] == w[1]) {
            return Some(format!("colour repeated at vertex {v}"));
        }
        match part.class[v] {
            VertexClass::Big => {
                if cs.windows(2).any(|w| w[1] - w[0] < 2) {
                    return Some(format!("big vertex {v} has colours closer than 2"));
                }
            }
            VertexClass::S0 => {
                if !cs.windows(2).any(|w| w[1] - w[0] == 1) {
                    return Some(format!("S0 vertex {v} has no two consecutive colours"));
                }
            }
            VertexClass::S1 => {
                for u in g.neighbours(v).filter(|&u| part.is_small(u)) {
                    let cu = at(u);
                    if cs.iter().all(|x| cu.contains(x)) {
                        return Some(format!("S1 vertex {v} has no colour absent at {u}"));
                    }
                }
            }
            VertexClass::S2 => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_arithmetic() {
        assert_eq!((pair_low(1), pair_high(1)), (1, 2));
        assert_eq!((pair_low(4), pair_high(4)), (10, 11));
        assert_eq!(pair_of(10), 4);
        assert_eq!(pair_of(11), 4);
        assert_eq!(pair_of(2), 1);
    }
}
