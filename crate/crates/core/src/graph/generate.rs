//! Graph families used by tests, benchmarks and the `gen` command. Random
//! families are pure functions of their parameters and seed.

use std::collections::HashSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: &'static str, reason: String },
}

fn invalid(family: &'static str, reason: impl Into<String>) -> GenerateError {
    GenerateError::InvalidParameters {
        family,
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    /// `G(n, p)` followed by random augmentation until every degree is at
    /// least `min_degree`.
    RandomMinDegree {
        n: usize,
        min_degree: usize,
        p: f64,
        seed: u64,
    },
    Petersen,
    /// A dense core of `hubs` high-degree vertices and `leaves` low-degree
    /// vertices, each joined to `leaf_degree` random hubs; leaves are also
    /// joined among themselves with probability `leaf_p`.
    TwoTier {
        hubs: usize,
        leaves: usize,
        leaf_degree: usize,
        hub_p: f64,
        leaf_p: f64,
        seed: u64,
    },
}

pub fn generate(family: &Family) -> Result<Graph, GenerateError> {
    match *family {
        Family::Cycle { n } => cycle(n),
        Family::Complete { n } => complete(n),
        Family::CompleteBipartite { a, b } => complete_bipartite(a, b),
        Family::RandomMinDegree {
            n,
            min_degree,
            p,
            seed,
        } => random_min_degree(n, min_degree, p, seed),
        Family::Petersen => Ok(petersen()),
        Family::TwoTier {
            hubs,
            leaves,
            leaf_degree,
            hub_p,
            leaf_p,
            seed,
        } => two_tier(hubs, leaves, leaf_degree, hub_p, leaf_p, seed),
    }
}

pub fn cycle(n: usize) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(invalid("cycle", format!("need n >= 3, got {n}")));
    }
    Ok(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple"))
}

pub fn complete(n: usize) -> Result<Graph, GenerateError> {
    if n < 1 {
        return Err(invalid("complete", "need n >= 1"));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::new(n, edges).expect("complete graph is simple"))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GenerateError> {
    if a < 1 || b < 1 {
        return Err(invalid("complete_bipartite", format!("need a, b >= 1, got {a}, {b}")));
    }
    let edges = (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y)));
    Ok(Graph::new(a + b, edges).expect("complete bipartite graph is simple"))
}

pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::new(10, edges).expect("Petersen graph is simple")
}

fn check_prob(family: &'static str, name: &str, p: f64) -> Result<(), GenerateError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(family, format!("{name} must lie in [0, 1], got {p}")));
    }
    Ok(())
}

pub fn random_min_degree(
    n: usize,
    min_degree: usize,
    p: f64,
    seed: u64,
) -> Result<Graph, GenerateError> {
    const NAME: &str = "random_min_degree";
    if n == 0 {
        return Err(invalid(NAME, "need n >= 1"));
    }
    if min_degree > n - 1 {
        return Err(invalid(NAME, format!("min degree {min_degree} exceeds n - 1 = {}", n - 1)));
    }
    check_prob(NAME, "p", p)?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: HashSet<(Vertex, Vertex)> = HashSet::new();
    let mut degree = vec![0usize; n];
    if p > 0.0 {
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.insert((u, v));
                    degree[u] += 1;
                    degree[v] += 1;
                }
            }
        }
    }
    for v in 0..n {
        while degree[v] < min_degree {
            let mut candidates: Vec<Vertex> = (0..n)
                .filter(|&w| w != v && !edges.contains(&(v.min(w), v.max(w))))
                .collect();
            // prefer partners that are themselves short of edges
            let deficient: Vec<Vertex> = candidates
                .iter()
                .copied()
                .filter(|&w| degree[w] < min_degree)
                .collect();
            if !deficient.is_empty() {
                candidates = deficient;
            }
            let w = candidates[rng.gen_range(0..candidates.len())];
            edges.insert((v.min(w), v.max(w)));
            degree[v] += 1;
            degree[w] += 1;
        }
    }
    let mut list: Vec<_> = edges.into_iter().collect();
    list.sort_unstable();
    Ok(Graph::new(n, list).expect("generated edges are simple"))
}

pub fn two_tier(
    hubs: usize,
    leaves: usize,
    leaf_degree: usize,
    hub_p: f64,
    leaf_p: f64,
    seed: u64,
) -> Result<Graph, GenerateError> {
    const NAME: &str = "two_tier";
    if hubs == 0 {
        return Err(invalid(NAME, "need at least one hub"));
    }
    if leaf_degree > hubs {
        return Err(invalid(NAME, format!("leaf degree {leaf_degree} exceeds hub count {hubs}")));
    }
    check_prob(NAME, "hub_p", hub_p)?;
    check_prob(NAME, "leaf_p", leaf_p)?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = hubs + leaves;
    let mut edges = Vec::new();
    for u in 0..hubs {
        for v in u + 1..hubs {
            if rng.gen_bool(hub_p) {
                edges.push((u, v));
            }
        }
    }
    for leaf in hubs..n {
        for h in sample(&mut rng, hubs, leaf_degree) {
            edges.push((h, leaf));
        }
    }
    if leaf_p > 0.0 {
        for u in hubs..n {
            for v in u + 1..n {
                if rng.gen_bool(leaf_p) {
                    edges.push((u, v));
                }
            }
        }
    }
    Ok(Graph::new(n, edges).expect("generated edges are simple"))
}
