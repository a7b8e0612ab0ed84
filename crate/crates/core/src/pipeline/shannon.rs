//! Proper edge colouring of multigraphs with `⌊3Δ/2⌋` colours.

use thiserror::Error;

use super::table::EdgeTable;
use crate::graph::Multigraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShannonError {
    #[error("{labels} labels given, at least {needed} needed")]
    PaletteTooSmall { labels: usize, needed: usize },
}

/// Smallest label count the colouring routine accepts.
pub fn shannon_bound(max_degree: usize) -> usize {
    3 * max_degree / 2
}

/// Assigns every edge a label in `1..=labels` so that no two edges sharing
/// an endpoint get the same label.
///
/// Edges are coloured one at a time. For an edge `xy` with no common free
/// colour, pick `α` free at `x`, the `α`-edge `yz` at `y` and a colour `γ`
/// free at `z`; with at least `⌊3Δ/2⌋` colours, `γ` is free at `x` or `y`.
/// One alternating-path swap then frees a colour at both `x` and `y`.
pub fn shannon_multigraph_colour(m: &Multigraph, labels: usize) -> Result<Vec<usize>, ShannonError> {
    let needed = shannon_bound(m.max_degree()).max(usize::from(m.edge_count() > 0));
    if labels < needed {
        return Err(ShannonError::PaletteTooSmall { labels, needed });
    }
    let mut t = EdgeTable::new(m.n(), m.edges(), labels);
    for e in 0..m.edge_count() {
        colour_edge(&mut t, e, m.edge(e));
    }
    Ok(t.into_colours()
        .into_iter()
        .map(|c| c.expect("every edge coloured") + 1)
        .collect())
}

fn colour_edge(t: &mut EdgeTable, e: usize, (x, y): (usize, usize)) {
    if let Some(c) = t.common_free(x, y) {
        t.set(e, c);
        return;
    }
    let alpha = t.first_free(x).expect("x has a free colour");
    let yz = t.edge_at(y, alpha).expect("alpha is used at y");
    let z = t.other(yz, y);
    let gamma = (0..t.k())
        .find(|&c| t.is_free(z, c) && (t.is_free(y, c) || t.is_free(x, c)))
        .expect("counting guarantees a colour free at z and at x or y");
    if t.is_free(y, gamma) {
        t.unset(yz);
        t.set(yz, gamma);
        t.set(e, alpha);
        return;
    }
    // gamma free at x and z, used at y
    let beta = t.first_free(y).expect("y has a free colour");
    let (_, y_path) = t.path(y, gamma, beta);
    if *y_path.last().expect("path is non-empty") != x {
        t.swap_path(y, gamma, beta);
        t.set(e, gamma);
    } else {
        // z is the end of a different beta/gamma path
        t.swap_path(z, beta, gamma);
        t.unset(yz);
        t.set(yz, beta);
        t.set(e, alpha);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn is_proper(m: &Multigraph, lab: &[usize]) -> bool {
        (0..m.n()).all(|v| {
            let mut seen: Vec<usize> = m.incident(v).iter().map(|&e| lab[e]).collect();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        })
    }

    #[test]
    fn triple_edge() {
        let m = Multigraph::from_edges(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        let lab = shannon_multigraph_colour(&m, 4).unwrap();
        assert!(is_proper(&m, &lab));
        let mut distinct = lab.clone();
        distinct.dedup();
        assert_eq!(distinct.len(), 3);
        assert!(matches!(
            shannon_multigraph_colour(&m, 3),
            Err(ShannonError::PaletteTooSmall { needed: 4, .. })
        ));
    }

    #[test]
    fn path_needs_two() {
        let m = Multigraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let lab = shannon_multigraph_colour(&m, 3).unwrap();
        assert!(is_proper(&m, &lab));
        assert!(lab.iter().all(|&l| l <= 2));
    }

    #[test]
    fn shannon_triangle_is_tight() {
        // fat triangle with every multiplicity 2: Δ = 4, needs 6 labels
        let m = Multigraph::from_edges(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)]).unwrap();
        let lab = shannon_multigraph_colour(&m, 6).unwrap();
        assert!(is_proper(&m, &lab));
    }

    #[test]
    fn random_multigraphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(2..12);
            let mut m = Multigraph::new(n);
            let mut deg = vec![0; n];
            for _ in 0..rng.gen_range(0..60) {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u != v && deg[u] < 10 && deg[v] < 10 {
                    m.add_edge(u, v).unwrap();
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            let k = shannon_bound(m.max_degree()).max(1);
            let lab = shannon_multigraph_colour(&m, k).unwrap();
            assert!(is_proper(&m, &lab));
            assert!(lab.iter().all(|&l| (1..=k).contains(&l)));
        }
    }
}
