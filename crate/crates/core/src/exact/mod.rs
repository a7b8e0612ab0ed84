//! Exact inclusion chromatic index by backtracking, for small graphs.

pub mod scan;

use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::colouring::{Colour, EdgeColouring};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::greedy::greedy_colour;

pub use scan::{conjecture_bound, conjecture_scan, conjecture_verdict, is_c5, ConjectureVerdict, ScanEntry, Verdict};

/// Palettes are `u128` masks, so at most this many colours can be searched.
pub const MAX_COLOURS: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("vertex {vertex} has degree {degree}; no inclusion-free colouring exists")]
    NoColouringExists { vertex: Vertex, degree: usize },
    #[error("k must be at least 1")]
    ZeroColours,
    #[error("k = {0} exceeds the solver limit of {MAX_COLOURS} colours")]
    TooManyColours(usize),
}

/// Node and wall-clock limits; the search stops at whichever comes first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }

    pub fn with_time(mut self, t: Duration) -> Self {
        self.max_time = Some(t);
        self
    }
}

/// What counts as a conflict between adjacent complete palettes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PruneMode {
    /// One palette contained in the other.
    #[default]
    Inclusion,
    /// Equal palettes (adjacent-vertex-distinguishing).
    Distinct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(EdgeColouring),
    No,
    Unknown,
}

#[derive(Debug, Clone)]
pub struct DecisionOutcome {
    pub decision: Decision,
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Exact,
    BoundsOnly,
    NoColouring,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AttemptResult {
    Yes,
    No,
    Unknown,
}

/// One call of the decision procedure made while solving.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Attempt {
    pub k: usize,
    pub result: AttemptResult,
    pub nodes: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub value: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    pub witness: Option<EdgeColouring>,
    pub nodes_explored: u64,
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
    pub transcript: Vec<Attempt>,
}

fn as_secs<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

fn check_min_degree(g: &Graph) -> Result<(), ExactError> {
    match (0..g.n()).find(|&v| g.degree(v) <= 1) {
        Some(v) => Err(ExactError::NoColouringExists {
            vertex: v,
            degree: g.degree(v),
        }),
        None if g.n() == 0 => Err(ExactError::NoColouringExists {
            vertex: 0,
            degree: 0,
        }),
        None => Ok(()),
    }
}

/// Edges sorted by smaller endpoint degree, descending, then lexicographically.
pub fn search_order(g: &Graph) -> Vec<EdgeId> {
    let mut order: Vec<EdgeId> = (0..g.edge_count()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.edge(e);
        (std::cmp::Reverse(g.degree(u).min(g.degree(v))), u, v)
    });
    order
}

/// Decides whether `g` has an inclusion-free colouring with colours `1..=k`.
pub fn colourable_with(g: &Graph, k: usize, budget: Budget) -> Result<DecisionOutcome, ExactError> {
    colourable_with_mode(g, k, budget, PruneMode::Inclusion)
}

pub fn colourable_with_mode(
    g: &Graph,
    k: usize,
    budget: Budget,
    mode: PruneMode,
) -> Result<DecisionOutcome, ExactError> {
    check_min_degree(g)?;
    if k == 0 {
        return Err(ExactError::ZeroColours);
    }
    if k > MAX_COLOURS {
        return Err(ExactError::TooManyColours(k));
    }
    let start = Instant::now();
    let mut search = Search::new(g, k, mode, budget, start);
    let found = search.run();
    let decision = match found {
        Some(true) => Decision::Yes(search.witness()),
        Some(false) => Decision::No,
        None => Decision::Unknown,
    };
    Ok(DecisionOutcome {
        decision,
        nodes: search.nodes,
        elapsed: start.elapsed(),
    })
}

struct Search<'g> {
    g: &'g Graph,
    k: usize,
    mode: PruneMode,
    order: Vec<EdgeId>,
    ends: Vec<(Vertex, Vertex)>,
    colour: Vec<Colour>,
    pal: Vec<u128>,
    remaining: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    aborted: bool,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, k: usize, mode: PruneMode, budget: Budget, start: Instant) -> Self {
        let order = search_order(g);
        let ends = order.iter().map(|&e| g.edge(e)).collect();
        Search {
            g,
            k,
            mode,
            ends,
            colour: vec![0; order.len()],
            order,
            pal: vec![0; g.n()],
            remaining: (0..g.n()).map(|v| g.degree(v)).collect(),
            nodes: 0,
            max_nodes: budget.max_nodes.unwrap_or(u64::MAX),
            deadline: budget.max_time.map(|t| start + t),
            aborted: false,
        }
    }

    /// `Some(found)` when the search finished, `None` on budget exhaustion.
    fn run(&mut self) -> Option<bool> {
        let found = self.extend(0, 0);
        if self.aborted {
            None
        } else {
            Some(found)
        }
    }

    fn witness(&self) -> EdgeColouring {
        let mut c = EdgeColouring::for_graph(self.g);
        for (i, &e) in self.order.iter().enumerate() {
            c.set(e, self.colour[i]);
        }
        c
    }

    fn out_of_budget(&mut self) -> bool {
        if self.nodes >= self.max_nodes {
            self.aborted = true;
        } else if self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.aborted = true;
                }
            }
        }
        self.aborted
    }

    fn conflict(&self, x: Vertex, y: Vertex) -> bool {
        let (px, py) = (self.pal[x], self.pal[y]);
        let (cx, cy) = (self.remaining[x] == 0, self.remaining[y] == 0);
        match self.mode {
            // palettes only grow, so a complete palette inside a partial
            // one stays inside it
            PruneMode::Inclusion => (cx && px & !py == 0) || (cy && py & !px == 0),
            PruneMode::Distinct => cx && cy && px == py,
        }
    }

    /// Checks every edge at a vertex that just became complete.
    fn completes_badly(&self, x: Vertex) -> bool {
        self.g.neighbours(x).any(|y| self.conflict(x, y))
    }

    fn extend(&mut self, i: usize, max_used: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let (u, v) = self.ends[i];
        let top = self.k.min(max_used + 1);
        for c in 1..=top {
            let bit = 1u128 << (c - 1);
            if (self.pal[u] | self.pal[v]) & bit != 0 {
                continue;
            }
            self.nodes += 1;
            if self.out_of_budget() {
                return false;
            }
            self.pal[u] |= bit;
            self.pal[v] |= bit;
            self.remaining[u] -= 1;
            self.remaining[v] -= 1;
            self.colour[i] = c as Colour;
            let bad = (self.remaining[u] == 0 && self.completes_badly(u))
                || (self.remaining[v] == 0 && self.completes_badly(v));
            if !bad && self.extend(i + 1, max_used.max(c)) {
                return true;
            }
            self.pal[u] &= !bit;
            self.pal[v] &= !bit;
            self.remaining[u] += 1;
            self.remaining[v] += 1;
            if self.aborted {
                return false;
            }
        }
        false
    }
}

/// `Δ + 1` for every graph with an edge: with only `Δ` colours a vertex of
/// degree `Δ` sees them all, and its neighbours' palettes sit inside its own.
pub fn trivial_lower_bound(g: &Graph) -> usize {
    if g.edge_count() == 0 {
        0
    } else {
        g.max_degree() + 1
    }
}

pub fn exact_index(g: &Graph, budget: Budget) -> SolveOutcome {
    exact_index_with_mode(g, budget, PruneMode::Inclusion)
}

/// Tries `k = lower, lower + 1, …` until a colouring is found. The greedy
/// colouring supplies the upper bound and is returned as the witness when
/// every smaller `k` is refuted.
pub fn exact_index_with_mode(g: &Graph, budget: Budget, mode: PruneMode) -> SolveOutcome {
    let start = Instant::now();
    if check_min_degree(g).is_err() {
        return SolveOutcome {
            status: SolveStatus::NoColouring,
            value: None,
            lower: 0,
            upper: 0,
            witness: None,
            nodes_explored: 0,
            elapsed: start.elapsed(),
            transcript: Vec::new(),
        };
    }
    let greedy = greedy_colour(g).expect("minimum degree checked");
    let upper = greedy.max_colour().expect("graph has edges") as usize;
    let mut lower = trivial_lower_bound(g);
    let mut nodes = 0u64;
    let mut transcript = Vec::new();
    let mut witness = None;
    let mut exhausted = false;

    while lower < upper {
        let k = lower;
        if k > MAX_COLOURS {
            exhausted = true;
            break;
        }
        let remaining = Budget {
            max_nodes: budget.max_nodes.map(|m| m.saturating_sub(nodes)),
            max_time: budget.max_time.map(|t| t.saturating_sub(start.elapsed())),
        };
        let out = colourable_with_mode(g, k, remaining, mode).expect("arguments checked");
        nodes += out.nodes;
        let result = match out.decision {
            Decision::Yes(w) => {
                witness = Some(w);
                AttemptResult::Yes
            }
            Decision::No => AttemptResult::No,
            Decision::Unknown => AttemptResult::Unknown,
        };
        transcript.push(Attempt {
            k,
            result,
            nodes: out.nodes,
        });
        match result {
            AttemptResult::Yes => break,
            AttemptResult::No => lower = k + 1,
            AttemptResult::Unknown => {
                exhausted = true;
                break;
            }
        }
    }

    if exhausted {
        return SolveOutcome {
            status: SolveStatus::BoundsOnly,
            value: None,
            lower,
            upper,
            witness: Some(greedy),
            nodes_explored: nodes,
            elapsed: start.elapsed(),
            transcript,
        };
    }
    let witness = witness.unwrap_or(greedy);
    let value = witness.max_colour().expect("total colouring") as usize;
    debug_assert_eq!(value, lower);
    SolveOutcome {
        status: SolveStatus::Exact,
        value: Some(value),
        lower: value,
        upper: value,
        witness: Some(witness),
        nodes_explored: nodes,
        elapsed: start.elapsed(),
        transcript,
    }
}
