//! Test-only helpers: an isomorph-free graph enumerator, random graph
//! sources and checkers written without the library's validator.
#![allow(dead_code)]

use std::collections::HashMap;

pub mod pipeline_check;

use inclusion_core::{EdgeColouring, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Rows = Vec<u16>;

fn degree_refinement(n: usize, rows: &Rows) -> Vec<usize> {
    let mut colour: Vec<usize> = (0..n).map(|v| rows[v].count_ones() as usize).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&w| rows[v] >> w & 1 == 1).map(|w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colour = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let Some(i) = (0..xs.len() - 1).rev().find(|&i| xs[i] < xs[i + 1]) else {
        xs.reverse();
        return false;
    };
    let j = (i + 1..xs.len()).rev().find(|&j| xs[j] > xs[i]).unwrap();
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

fn code_of(n: usize, rows: &Rows, perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | (rows[perm[i]] >> perm[j] & 1) as u64;
        }
    }
    code
}

/// Largest upper-triangle code over all relabellings that keep the refined
/// colour classes in order. Equal for isomorphic graphs, distinct otherwise.
fn canonical_code(n: usize, rows: &Rows) -> u64 {
    let colour = degree_refinement(n, rows);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by_key(|&v| (colour[v], v));
    let mut bounds = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || colour[perm[i]] != colour[perm[start]] {
            bounds.push((start, i));
            start = i;
        }
    }
    fn walk(n: usize, rows: &Rows, perm: &mut Vec<usize>, bounds: &[(usize, usize)], k: usize, best: &mut u64) {
        if k == bounds.len() {
            *best = (*best).max(code_of(n, rows, perm));
            return;
        }
        let (a, b) = bounds[k];
        perm[a..b].sort_unstable();
        loop {
            walk(n, rows, perm, bounds, k + 1, best);
            if !next_permutation(&mut perm[a..b]) {
                break;
            }
        }
    }
    let mut best = 0;
    walk(n, rows, &mut perm, &bounds, 0, &mut best);
    best
}

fn to_graph(n: usize, rows: &Rows) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| rows[u] >> v & 1 == 1).map(move |v| (u, v)));
    Graph::new(n, edges.collect::<Vec<_>>()).unwrap()
}

/// Every graph on exactly `n` vertices with at most `max_edges` edges, one
/// per isomorphism class, grown one edge at a time.
pub fn graphs_on(n: usize, max_edges: usize) -> Vec<Graph> {
    assert!(n <= 11, "codes are 64-bit");
    let mut level: HashMap<u64, Rows> = HashMap::new();
    let empty = vec![0u16; n];
    level.insert(canonical_code(n, &empty), empty);
    let mut out: Vec<Graph> = level.values().map(|r| to_graph(n, r)).collect();
    for _ in 0..max_edges.min(n * n.saturating_sub(1) / 2) {
        let mut next: HashMap<u64, Rows> = HashMap::new();
        let mut current: Vec<(&u64, &Rows)> = level.iter().collect();
        current.sort_unstable_by_key(|c| *c.0);
        for (_, rows) in current {
            for u in 0..n {
                for v in u + 1..n {
                    if rows[u] >> v & 1 == 0 {
                        let mut r = rows.clone();
                        r[u] |= 1 << v;
                        r[v] |= 1 << u;
                        next.entry(canonical_code(n, &r)).or_insert(r);
                    }
                }
            }
        }
        let mut batch: Vec<(u64, Graph)> = next.iter().map(|(&c, r)| (c, to_graph(n, r))).collect();
        batch.sort_by_key(|b| b.0);
        out.extend(batch.into_iter().map(|b| b.1));
        level = next;
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return false;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(w, _) in g.incident(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

pub fn min_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.incident(v).len()).min().unwrap_or(0)
}

pub fn max_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.incident(v).len()).max().unwrap_or(0)
}

/// Connected graphs on `n` vertices with minimum degree at least 2.
pub fn connected_min_degree_two(n: usize) -> Vec<Graph> {
    graphs_on(n, n * (n - 1) / 2)
        .into_iter()
        .filter(|g| min_degree(g) >= 2 && is_connected(g))
        .collect()
}

/// Palette of every vertex as a bitmask; colours must be below 128.
pub fn palette_masks(g: &Graph, colours: &[Option<u32>]) -> Vec<u128> {
    let mut masks = vec![0u128; g.n()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if let Some(c) = colours[e] {
            masks[u] |= 1 << c;
            masks[v] |= 1 << c;
        }
    }
    masks
}

/// Total, proper and inclusion-free, checked from scratch. Colours must be
/// below 128; this is the fast path for exhaustive enumeration.
pub fn is_inclusion_free_small(g: &Graph, colours: &[Option<u32>]) -> bool {
    if colours.iter().any(|c| c.is_none_or(|c| c >= 128)) {
        return false;
    }
    let masks = palette_masks(g, colours);
    let proper = (0..g.n()).all(|v| masks[v].count_ones() as usize == g.incident(v).len());
    proper
        && g
            .edges()
            .iter()
            .all(|&(u, v)| masks[u] & !masks[v] != 0 && masks[v] & !masks[u] != 0)
}

/// Sorted palettes, any colour values.
pub fn palettes_sorted(g: &Graph, colours: &[Option<u32>]) -> Vec<Vec<u32>> {
    let mut p = vec![Vec::new(); g.n()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if let Some(c) = colours[e] {
            p[u].push(c);
            p[v].push(c);
        }
    }
    for x in &mut p {
        x.sort_unstable();
    }
    p
}

fn subset(a: &[u32], b: &[u32]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
    }
    true
}

/// Total, proper and inclusion-free, for any colour values.
pub fn is_inclusion_free(g: &Graph, colours: &[Option<u32>]) -> bool {
    if colours.iter().any(Option::is_none) {
        return false;
    }
    let p = palettes_sorted(g, colours);
    if p.iter().any(|x| x.windows(2).any(|w| w[0] == w[1])) {
        return false;
    }
    g.edges().iter().all(|&(u, v)| !subset(&p[u], &p[v]) && !subset(&p[v], &p[u]))
}

pub fn colours_of(c: &EdgeColouring) -> Vec<Option<u32>> {
    (0..c.len()).map(|e| c.get(e)).collect()
}

pub fn distinct_colours(c: &EdgeColouring) -> usize {
    let mut v: Vec<u32> = (0..c.len()).filter_map(|e| c.get(e)).collect();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Smallest `k` for which one of the `k^m` assignments over `1..=k` passes
/// `accept`. Only for tiny graphs.
pub fn naive_index(g: &Graph, mut accept: impl FnMut(&[Option<u32>]) -> bool) -> usize {
    let m = g.edge_count();
    for k in 1u32.. {
        let mut a = vec![Some(1u32); m];
        loop {
            if accept(&a) {
                return k as usize;
            }
            let mut i = 0;
            while i < m && a[i] == Some(k) {
                a[i] = Some(1);
                i += 1;
            }
            if i == m {
                break;
            }
            a[i] = a[i].map(|x| x + 1);
        }
    }
    unreachable!()
}

/// Invariant of the greedy extension after the vertices marked `processed`
/// are done: exactly the edges of `G_i` are coloured, properly, and every
/// `xy ∈ E(G_i)` with `d_{G_i}(x) >= 2` has `S_i(x) ⊄ S_i(y)`.
pub fn greedy_prefix_violation(g: &Graph, processed: &[bool], c: &EdgeColouring) -> Option<String> {
    let inside = |e: usize| {
        let (u, v) = g.edge(e);
        processed[u] && processed[v]
    };
    for e in 0..g.edge_count() {
        if inside(e) != c.get(e).is_some() {
            return Some(format!("edge {:?} coloured = {}", g.edge(e), c.get(e).is_some()));
        }
    }
    let masks = palette_masks(g, &colours_of(c));
    for (v, mask) in masks.iter().enumerate() {
        let d = g.incident(v).iter().filter(|&&(_, e)| inside(e)).count();
        if mask.count_ones() as usize != d {
            return Some(format!("colour repeated at {v}"));
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if !inside(e) {
            continue;
        }
        for (x, y) in [(u, v), (v, u)] {
            if masks[x].count_ones() >= 2 && masks[x] & !masks[y] == 0 {
                return Some(format!("palette of {x} inside palette of {y}"));
            }
        }
    }
    None
}

/// Connected graph on `n` vertices with minimum degree at least 2: a random
/// spanning tree, random extra edges with probability `p`, then a random
/// extra edge at every vertex still below degree 2.
pub fn random_connected(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    assert!(n >= 3);
    let mut adj = vec![vec![false; n]; n];
    let add = |adj: &mut Vec<Vec<bool>>, u: usize, v: usize| {
        adj[u][v] = true;
        adj[v][u] = true;
    };
    for v in 1..n {
        let u = rng.gen_range(0..v);
        add(&mut adj, u, v);
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                add(&mut adj, u, v);
            }
        }
    }
    for v in 0..n {
        while adj[v].iter().filter(|&&x| x).count() < 2 {
            let w = rng.gen_range(0..n);
            if w != v {
                add(&mut adj, v, w);
            }
        }
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u][v])
        .collect();
    Graph::new(n, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph with a vertex forced to degree exactly one.
pub fn with_pendant(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let base = random_connected(n, p, rng);
    let mut edges: Vec<(usize, usize)> = base.edges().to_vec();
    let anchor = rng.gen_range(0..n);
    edges.push((anchor, n));
    Graph::new(n + 1, edges).unwrap()
}
