//! Random colouring of `F` with uncolouring of conflicts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::partition::Partition;
use super::sampling::{derive_seed, Margin};
use super::{ResolvedParams, StageFailure, StageKind};
use crate::colouring::{Colour, EdgeColouring};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::par;

#[derive(Debug, Clone)]
pub struct Distinguish {
    /// Raw colour in `1..=t` for each edge of `F`, aligned with the input.
    pub raw: Vec<Colour>,
    /// Whether each edge of `F` kept its colour.
    pub survives: Vec<bool>,
    /// Surviving edges coloured `offset + raw`.
    pub colouring: EdgeColouring,
    pub attempts: usize,
    pub worst: Option<Margin>,
}

/// Marks each `F`-edge whose colour is unique at both of its endpoints.
pub fn survivors(g: &Graph, f: &[EdgeId], raw: &[Colour]) -> Vec<bool> {
    let mut slot = vec![usize::MAX; g.edge_count()];
    for (i, &e) in f.iter().enumerate() {
        slot[e] = i;
    }
    (0..f.len())
        .map(|i| {
            let (u, x) = g.edge(f[i]);
            [u, x].iter().all(|&w| {
                g.incident(w)
                    .iter()
                    .all(|&(_, e2)| e2 == f[i] || slot[e2] == usize::MAX || raw[slot[e2]] != raw[i])
            })
        })
        .collect()
}

/// `|I_{u,v}| − quota(u)` for every ordered pair of adjacent big vertices.
pub fn distinguish_margins(
    g: &Graph,
    part: &Partition,
    f: &[EdgeId],
    raw: &[Colour],
    survives: &[bool],
    rp: &ResolvedParams,
) -> Vec<Margin> {
    let mut slot = vec![usize::MAX; g.edge_count()];
    for (i, &e) in f.iter().enumerate() {
        slot[e] = i;
    }
    let f_at = |w: Vertex| -> Vec<usize> {
        g.incident(w)
            .iter()
            .filter(|&&(_, e)| slot[e] != usize::MAX)
            .map(|&(_, e)| slot[e])
            .collect()
    };
    par::flat_map_range(rp.execution, part.big.len(), |bi| {
        let u = part.big[bi];
        let fu = f_at(u);
        let quota = rp.distinguish_quota(fu.len()) as f64;
        g.neighbours(u)
            .filter(|&v| part.is_big(v))
            .map(|v| {
                let at_v: Vec<Colour> = f_at(v).iter().map(|&i| raw[i]).collect();
                let count = fu
                    .iter()
                    .filter(|&&i| survives[i] && g.opposite(f[i], u) != v && !at_v.contains(&raw[i]))
                    .count();
                Margin {
                    value: count as f64 - quota,
                    at: vec![u, v],
                }
            })
            .collect()
    })
}

pub fn distinguish_round(
    g: &Graph,
    part: &Partition,
    f: &[EdgeId],
    rp: &ResolvedParams,
    offset: Colour,
    seed: u64,
) -> Result<Distinguish, StageFailure> {
    let t = rp.t as Colour;
    let mut last = None;
    for attempt in 0..rp.resample_cap {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, 4, attempt as u64));
        let raw: Vec<Colour> = f.iter().map(|_| rng.gen_range(1..=t)).collect();
        let survives = survivors(g, f, &raw);
        let worst = Margin::worst(distinguish_margins(g, part, f, &raw, &survives, rp));
        if worst.as_ref().is_none_or(|w| !w.is_violated()) {
            let mut colouring = EdgeColouring::for_graph(g);
            for (i, &e) in f.iter().enumerate() {
                if survives[i] {
                    colouring.set(e, offset + raw[i]);
                }
            }
            return Ok(Distinguish {
                raw,
                survives,
                colouring,
                attempts: attempt + 1,
                worst,
            });
        }
        last = worst;
    }
    Err(StageFailure::with_margin(
        StageKind::Distinguish,
        format!("pair quota missed after {} attempts", rp.resample_cap),
        last,
        rp.resample_cap,
    ))
}
