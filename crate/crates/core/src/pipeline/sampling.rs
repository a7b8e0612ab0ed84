//! The two edge-sampling stages: `G′ ⊇ H′` and `F ⊆ G₁`.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::partition::{Partition, VertexClass};
use super::{ResolvedParams, StageFailure, StageKind};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::par;

/// Independent seed for `attempt` of `stage`, via the splitmix64 finalizer.
pub fn derive_seed(seed: u64, stage: u64, attempt: u64) -> u64 {
    let mut z = seed
        ^ stage.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ attempt.wrapping_mul(0xD1B5_4A32_D192_ED03);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Closest approach to a window bound over all checked vertices; negative
/// means the window was violated at `at`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Margin {
    pub value: f64,
    pub at: Vec<Vertex>,
}

impl Margin {
    pub fn worst(margins: impl IntoIterator<Item = Margin>) -> Option<Margin> {
        margins
            .into_iter()
            .min_by(|a, b| a.value.total_cmp(&b.value).then_with(|| a.at.cmp(&b.at)))
    }

    pub fn is_violated(&self) -> bool {
        self.value < 0.0
    }
}

#[derive(Debug, Clone)]
pub struct GPrimeSample {
    pub g_prime: Vec<EdgeId>,
    pub h_prime: Vec<EdgeId>,
    pub attempts: usize,
    pub worst: Option<Margin>,
}

/// Probability for the extra coin flip on an `H`-edge at a small vertex with
/// `d_H(v) = d`, after `chosen` of its edges were picked uniformly, so that
/// every such edge lands in `G′` with probability `p`.
pub fn equalizing_probability(p: f64, d: usize, chosen: usize) -> f64 {
    if d <= chosen {
        return 0.0;
    }
    let (d, c) = (d as f64, chosen as f64);
    ((p * d - c) / (d - c)).clamp(0.0, 1.0)
}

fn degree_in(g: &Graph, member: &[bool], v: Vertex) -> usize {
    g.incident(v).iter().filter(|&&(_, e)| member[e]).count()
}

/// Split degree windows at every big vertex.
pub fn split_margins(g: &Graph, part: &Partition, in_g_prime: &[bool], rp: &ResolvedParams) -> Vec<Margin> {
    par::flat_map_range(rp.execution, part.big.len(), |i| {
        let v = part.big[i];
        let d_gp = degree_in(g, in_g_prime, v) as f64;
        let (lo, hi) = rp.split_window(g.degree(v));
        vec![Margin {
            value: (d_gp - lo).min(hi - d_gp),
            at: vec![v],
        }]
    })
}

pub fn sample_gprime(
    g: &Graph,
    part: &Partition,
    rp: &ResolvedParams,
    seed: u64,
) -> Result<GPrimeSample, StageFailure> {
    let m = g.edge_count();
    let mut last = None;
    for attempt in 0..rp.resample_cap {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, 1, attempt as u64));
        let mut in_g = vec![false; m];
        let mut in_h = vec![false; m];
        for v in 0..g.n() {
            let chosen = match part.class[v] {
                VertexClass::S0 => 2,
                VertexClass::S1 => 1,
                _ => continue,
            };
            let h: Vec<EdgeId> = g
                .incident(v)
                .iter()
                .filter(|&&(w, _)| part.is_big(w))
                .map(|&(_, e)| e)
                .collect();
            if h.len() < chosen {
                return Err(StageFailure::new(
                    StageKind::Split,
                    format!("vertex {v} has only {} edges into B", h.len()),
                ));
            }
            for i in sample(&mut rng, h.len(), chosen) {
                in_g[h[i]] = true;
                in_h[h[i]] = true;
            }
            let q = equalizing_probability(rp.keep_prob, h.len(), chosen);
            for &e in &h {
                if rng.gen_bool(q) {
                    in_g[e] = true;
                }
            }
        }
        for (e, keep) in in_g.iter_mut().enumerate() {
            if !part.is_h_edge(g, e) && !part.is_gs_edge(g, e) && rng.gen_bool(rp.keep_prob) {
                *keep = true;
            }
        }
        let worst = Margin::worst(split_margins(g, part, &in_g, rp));
        if worst.as_ref().is_none_or(|w| !w.is_violated()) {
            return Ok(GPrimeSample {
                g_prime: (0..m).filter(|&e| in_g[e]).collect(),
                h_prime: (0..m).filter(|&e| in_h[e]).collect(),
                attempts: attempt + 1,
                worst,
            });
        }
        last = worst;
    }
    Err(StageFailure::with_margin(
        StageKind::Split,
        format!("degree window violated after {} attempts", rp.resample_cap),
        last,
        rp.resample_cap,
    ))
}

/// Lower and upper bounds on `d_{G₁}` at big vertices.
pub fn residual_margins(g: &Graph, part: &Partition, in_g1: &[bool], rp: &ResolvedParams) -> Vec<Margin> {
    let cap = rp.residual_max();
    par::map_range(rp.execution, part.big.len(), |i| {
        let v = part.big[i];
        let d1 = degree_in(g, in_g1, v) as f64;
        Margin {
            value: (d1 - rp.residual_min(g.degree(v))).min(cap - d1),
            at: vec![v],
        }
    })
}

#[derive(Debug, Clone)]
pub struct FSample {
    pub f: Vec<EdgeId>,
    pub attempts: usize,
    pub worst: Option<Margin>,
}

/// Thinning windows: both bounds at big vertices, the cap at small ones.
pub fn thin_margins(g: &Graph, part: &Partition, in_f: &[bool], rp: &ResolvedParams) -> Vec<Margin> {
    let (lo, hi) = rp.thin_big_window();
    let small_cap = rp.thin_small_max();
    par::map_range(rp.execution, g.n(), |v| {
        let d = degree_in(g, in_f, v) as f64;
        let value = if part.is_big(v) {
            (d - lo).min(hi - d)
        } else {
            small_cap - d
        };
        Margin { value, at: vec![v] }
    })
}

pub fn sample_f(
    g: &Graph,
    part: &Partition,
    g1: &[EdgeId],
    rp: &ResolvedParams,
    seed: u64,
) -> Result<FSample, StageFailure> {
    let mut last = None;
    for attempt in 0..rp.resample_cap {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, 3, attempt as u64));
        let mut in_f = vec![false; g.edge_count()];
        for &e in g1 {
            if rng.gen_bool(rp.f_prob) {
                in_f[e] = true;
            }
        }
        let worst = Margin::worst(thin_margins(g, part, &in_f, rp));
        if worst.as_ref().is_none_or(|w| !w.is_violated()) {
            return Ok(FSample {
                f: (0..g.edge_count()).filter(|&e| in_f[e]).collect(),
                attempts: attempt + 1,
                worst,
            });
        }
        last = worst;
    }
    Err(StageFailure::with_margin(
        StageKind::Thin,
        format!("degree window violated after {} attempts", rp.resample_cap),
        last,
        rp.resample_cap,
    ))
}
