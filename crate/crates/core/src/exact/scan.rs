//! Checks `χ′⊂(G) <= ⌈(1 + 1/(δ−1))·Δ⌉` over a stream of graphs.

use serde::Serialize;

use super::{exact_index, Budget, SolveOutcome, SolveStatus};
use crate::graph::io::write_graph6;
use crate::graph::Graph;
use crate::par::{self, Execution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    #[serde(rename = "VIOLATED")]
    Violated,
    Unknown,
    #[serde(rename = "excluded_C5")]
    ExcludedC5,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureVerdict {
    pub graph_id: usize,
    pub graph6: String,
    pub delta_min: usize,
    pub delta_max: usize,
    pub bound: usize,
    pub chi: SolveOutcome,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ScanEntry {
    Verdict(ConjectureVerdict),
    Skipped {
        graph_id: usize,
        graph6: String,
        reason: String,
    },
}

impl ScanEntry {
    pub fn verdict(&self) -> Option<&ConjectureVerdict> {
        match self {
            ScanEntry::Verdict(v) => Some(v),
            ScanEntry::Skipped { .. } => None,
        }
    }
}

/// `Δ + ⌈Δ/(δ−1)⌉`, for `δ >= 2`.
pub fn conjecture_bound(delta_max: usize, delta_min: usize) -> usize {
    assert!(delta_min >= 2, "bound needs minimum degree at least 2");
    delta_max + delta_max.div_ceil(delta_min - 1)
}

/// Every connected 2-regular graph on five vertices is `C₅`.
pub fn is_c5(g: &Graph) -> bool {
    g.n() == 5 && g.edge_count() == 5 && g.is_regular() && g.min_degree() == 2 && g.is_connected()
}

pub fn conjecture_verdict(graph_id: usize, g: &Graph, budget: Budget) -> ScanEntry {
    let graph6 = write_graph6(g);
    if g.n() == 0 || !g.is_connected() {
        return ScanEntry::Skipped {
            graph_id,
            graph6,
            reason: "graph is not connected".into(),
        };
    }
    let delta_min = g.min_degree();
    if delta_min < 2 {
        return ScanEntry::Skipped {
            graph_id,
            graph6,
            reason: format!("minimum degree {delta_min} < 2"),
        };
    }
    let delta_max = g.max_degree();
    let bound = conjecture_bound(delta_max, delta_min);
    let chi = exact_index(g, budget);
    let verdict = if is_c5(g) {
        Verdict::ExcludedC5
    } else {
        match chi.status {
            SolveStatus::Exact if chi.value.is_some_and(|v| v > bound) => Verdict::Violated,
            SolveStatus::Exact => Verdict::Holds,
            _ if chi.upper <= bound => Verdict::Holds,
            _ => Verdict::Unknown,
        }
    };
    ScanEntry::Verdict(ConjectureVerdict {
        graph_id,
        graph6,
        delta_min,
        delta_max,
        bound,
        chi,
        verdict,
    })
}

/// One entry per input graph, in input order.
pub fn conjecture_scan(graphs: &[Graph], budget: Budget, mode: Execution) -> Vec<ScanEntry> {
    par::map_range(mode, graphs.len(), |i| conjecture_verdict(i, &graphs[i], budget))
}
