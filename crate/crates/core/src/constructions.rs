//! Extremal colourings of complete bipartite graphs.

use thiserror::Error;

use crate::colouring::{Colour, EdgeColouring};
use crate::graph::generate::complete_bipartite;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("need 2 <= delta_min <= delta_max, got delta_max={delta_max}, delta_min={delta_min}")]
    InvalidParameters { delta_max: usize, delta_min: usize },
    #[error("index set Z_{{{n},{p}}} has {actual} members, expected {expected}")]
    CardinalityMismatch {
        n: usize,
        p: usize,
        expected: usize,
        actual: usize,
    },
    #[error("colour {colour} lies outside 0..{n}")]
    OutOfRange { colour: usize, n: usize },
    #[error("need 1 <= p <= n, got p={p}, n={n}")]
    InvalidInterval { p: usize, n: usize },
}

fn check(delta_max: usize, delta_min: usize) -> Result<(), ConstructionError> {
    if delta_min < 2 || delta_min > delta_max {
        return Err(ConstructionError::InvalidParameters {
            delta_max,
            delta_min,
        });
    }
    Ok(())
}

/// `⌈(1 + 1/(δ−1))·Δ⌉`, the inclusion chromatic index of `K_{Δ,δ}`.
pub fn kdd_bound(delta_max: usize, delta_min: usize) -> Result<usize, ConstructionError> {
    check(delta_max, delta_min)?;
    Ok(delta_max + delta_max.div_ceil(delta_min - 1))
}

/// Residues modulo `n` not divisible by `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicIndexSet {
    pub n: usize,
    pub p: usize,
    pub members: Vec<usize>,
}

impl CyclicIndexSet {
    pub fn new(n: usize, p: usize) -> Self {
        assert!(p >= 1, "period must be positive");
        CyclicIndexSet {
            n,
            p,
            members: (0..n).filter(|i| i % p != 0).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `n − ⌈n/p⌉`.
    pub fn expected_len(&self) -> usize {
        self.n - self.n.div_ceil(self.p)
    }
}

#[derive(Debug, Clone)]
pub struct KddColouring {
    pub graph: Graph,
    pub colouring: EdgeColouring,
    /// `(vertex, i)` for `x_i`, `i ∈ Z_δ`.
    pub x: Vec<(Vertex, usize)>,
    /// `(vertex, j)` for `y_j`, `j ∈ Z_{n,δ}`.
    pub y: Vec<(Vertex, usize)>,
    pub modulus: usize,
}

impl KddColouring {
    /// Colour of `x_i y_j` before the shift to positive colours.
    pub fn raw_colour(&self, e: usize) -> usize {
        self.colouring.get(e).expect("construction is total") as usize - 1
    }
}

/// `K_{Δ,δ}` coloured by `c(x_i y_j) = (i + j) mod n` with
/// `n = Δ + ⌈Δ/(δ−1)⌉`, colours shifted to `1..=n`.
///
/// X is the side of size δ (vertices `0..δ`), Y the side of size Δ.
pub fn kdd_colouring(delta_max: usize, delta_min: usize) -> Result<KddColouring, ConstructionError> {
    let n = kdd_bound(delta_max, delta_min)?;
    let index = CyclicIndexSet::new(n, delta_min);
    if index.len() != delta_max {
        return Err(ConstructionError::CardinalityMismatch {
            n,
            p: delta_min,
            expected: delta_max,
            actual: index.len(),
        });
    }
    let graph = complete_bipartite(delta_min, delta_max).expect("parameters checked");
    let x: Vec<(Vertex, usize)> = (0..delta_min).map(|i| (i, i)).collect();
    let y: Vec<(Vertex, usize)> = index
        .members
        .iter()
        .enumerate()
        .map(|(pos, &j)| (delta_min + pos, j))
        .collect();
    let mut colouring = EdgeColouring::for_graph(&graph);
    for &(xv, i) in &x {
        for &(yv, j) in &y {
            let e = graph.edge_id(xv, yv).expect("complete bipartite");
            colouring.set(e, ((i + j) % n + 1) as Colour);
        }
    }
    Ok(KddColouring {
        graph,
        colouring,
        x,
        y,
        modulus: n,
    })
}

/// Whether `s` contains `p` consecutive residues modulo `n`.
pub fn has_cyclic_interval(s: &[usize], p: usize, n: usize) -> Result<bool, ConstructionError> {
    if p == 0 || p > n {
        return Err(ConstructionError::InvalidInterval { p, n });
    }
    let mut member = vec![false; n];
    for &c in s {
        if c >= n {
            return Err(ConstructionError::OutOfRange { colour: c, n });
        }
        member[c] = true;
    }
    if member.iter().all(|&m| m) {
        return Ok(true);
    }
    // longest run, walking twice around the cycle to catch wraparound
    let mut run = 0;
    for i in 0..2 * n {
        if member[i % n] {
            run += 1;
            if run >= p {
                return Ok(true);
            }
        } else {
            run = 0;
        }
    }
    Ok(false)
}
