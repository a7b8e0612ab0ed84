//! Vertex-by-vertex greedy construction of an inclusion-free colouring with
//! at most `3Δ − 1` colours.
//!
//! Vertices are processed in a min-degree-last order `v_1, …, v_n`. Step `i`
//! colours the edges from `v_i` back into `G_{i−1}`, keeping the invariant
//! that for every edge `xy` of `G_i` with `d_{G_i}(x) >= 2` the palette of
//! `x` is not contained in the palette of `y`.

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::colouring::{Colour, EdgeColouring};
use crate::graph::{min_degree_last_ordering, Graph, Vertex, VertexOrdering};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GreedyError {
    #[error("vertex {vertex} has degree {degree}; no inclusion-free colouring exists")]
    NoColouringExists { vertex: Vertex, degree: usize },
    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
    #[error("no feasible colour for edge {vertex}-{neighbour} at step {step} ({case:?})")]
    PoolExhausted {
        step: usize,
        vertex: Vertex,
        neighbour: Vertex,
        case: ChoiceCase,
    },
}

/// Which rule produced a colour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChoiceCase {
    /// `v_i` has a single earlier neighbour `u`; `d_{G_i}(u)` is recorded.
    Single { neighbour_degree: usize },
    /// Every earlier choice lies in the palette of the next neighbour.
    AllInsideNext,
    /// Last neighbour, and `c_1` is the only earlier choice outside the
    /// palette of `u_1`.
    WrapAvoidFirst,
    /// Some earlier choice already escapes the palette of the next neighbour.
    Escaped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Choice {
    pub neighbour: Vertex,
    pub colour: Colour,
    pub case: ChoiceCase,
    /// For `k >= 2`: whether some `c_r`, `r <= j`, lies outside the palette
    /// of `u_{j+1}` (indices mod k) after this choice.
    pub escapes_next: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub step: usize,
    pub vertex: Vertex,
    pub choices: Vec<Choice>,
}

/// Partial colouring of `G_i` together with the palettes `S_i`.
#[derive(Debug, Clone)]
pub struct GreedyState<'g> {
    graph: &'g Graph,
    ordering: VertexOrdering,
    processed: usize,
    done: Vec<bool>,
    /// Number of processed neighbours, i.e. `d_{G_i}(v)` for processed `v`.
    prior_degree: Vec<usize>,
    palettes: Vec<FixedBitSet>,
    colouring: EdgeColouring,
    pool: Colour,
}

impl<'g> GreedyState<'g> {
    /// Starts from the empty colouring. The ordering must satisfy the
    /// min-degree property; the colour pool is `1..=3Δ−1`.
    pub fn new(graph: &'g Graph, ordering: VertexOrdering) -> Result<Self, GreedyError> {
        if let Some(msg) = ordering.violation(graph) {
            return Err(GreedyError::InvalidOrdering(msg));
        }
        Ok(Self::new_unchecked(graph, ordering))
    }

    fn new_unchecked(graph: &'g Graph, ordering: VertexOrdering) -> Self {
        let n = graph.n();
        let pool = (3 * graph.max_degree()).saturating_sub(1) as Colour;
        GreedyState {
            graph,
            ordering,
            processed: 0,
            done: vec![false; n],
            prior_degree: vec![0; n],
            palettes: vec![FixedBitSet::with_capacity(pool as usize + 1); n],
            colouring: EdgeColouring::for_graph(graph),
            pool,
        }
    }

    pub fn processed_count(&self) -> usize {
        self.processed
    }

    pub fn is_finished(&self) -> bool {
        self.processed == self.ordering.len()
    }

    pub fn ordering(&self) -> &VertexOrdering {
        &self.ordering
    }

    pub fn colouring(&self) -> &EdgeColouring {
        &self.colouring
    }

    pub fn into_colouring(self) -> EdgeColouring {
        self.colouring
    }

    pub fn pool_size(&self) -> Colour {
        self.pool
    }

    /// Palette of `v` in the current partial colouring.
    pub fn palette(&self, v: Vertex) -> Vec<Colour> {
        self.palettes[v].ones().map(|c| c as Colour).collect()
    }

    /// `S̄(u)`: colours `α` such that some processed neighbour `u′` of `u`
    /// has `S(u′) ∖ S(u) = {α}`.
    pub fn inclusion_forbidden(&self, u: Vertex) -> Vec<Colour> {
        self.forbidden_set(u).ones().map(|c| c as Colour).collect()
    }

    fn forbidden_set(&self, u: Vertex) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.pool as usize + 1);
        let su = &self.palettes[u];
        for w in self.graph.neighbours(u) {
            if !self.done[w] {
                continue;
            }
            let mut only = None;
            let mut count = 0;
            for c in self.palettes[w].ones() {
                if !su.contains(c) {
                    count += 1;
                    if count == 2 {
                        break;
                    }
                    only = Some(c);
                }
            }
            if count == 1 {
                out.insert(only.expect("counted one colour"));
            }
        }
        out
    }

    /// The unique processed neighbour of `u`, when `u` has exactly one.
    fn sole_prior_neighbour(&self, u: Vertex) -> Vertex {
        let mut it = self
            .graph
            .incident(u)
            .iter()
            .filter(|&&(_, e)| self.colouring.get(e).is_some())
            .map(|&(w, _)| w);
        let w = it.next().expect("u has a coloured edge");
        debug_assert!(it.next().is_none());
        w
    }

    /// Colours forbidden at `u` for distinguishing purposes, given that `u`
    /// will have degree `d_{G_i}(u) = prior + 1` after this step.
    fn base_exclusion(&self, u: Vertex) -> FixedBitSet {
        match self.prior_degree[u] + 1 {
            1 => FixedBitSet::with_capacity(self.pool as usize + 1),
            2 => self.palettes[self.sole_prior_neighbour(u)].clone(),
            _ => {
                let mut s = self.palettes[u].clone();
                s.union_with(&self.forbidden_set(u));
                s
            }
        }
    }

    fn smallest_outside(&self, excluded: &FixedBitSet) -> Option<Colour> {
        (1..=self.pool).find(|&c| !excluded.contains(c as usize))
    }

    /// Processes the next vertex of the ordering.
    ///
    /// # Panics
    /// If all vertices have been processed.
    pub fn extend_next(&mut self) -> Result<StepRecord, GreedyError> {
        assert!(!self.is_finished(), "all vertices processed");
        let step = self.processed + 1;
        let v = self.ordering.order()[self.processed];
        let mut back: Vec<(Vertex, usize)> = self
            .graph
            .incident(v)
            .iter()
            .filter(|&&(u, _)| self.done[u])
            .copied()
            .collect();
        back.sort_unstable();
        let k = back.len();
        let mut choices = Vec::with_capacity(k);

        if k == 1 {
            let (u, _) = back[0];
            let excluded = self.base_exclusion(u);
            let case = ChoiceCase::Single {
                neighbour_degree: self.prior_degree[u] + 1,
            };
            let colour = self.smallest_outside(&excluded).ok_or(GreedyError::PoolExhausted {
                step,
                vertex: v,
                neighbour: u,
                case,
            })?;
            choices.push(Choice {
                neighbour: u,
                colour,
                case,
                escapes_next: false,
            });
        } else if k >= 2 {
            let us: Vec<Vertex> = back.iter().map(|&(u, _)| u).collect();
            let mut chosen: Vec<Colour> = Vec::with_capacity(k);
            for j in 0..k {
                let next = us[(j + 1) % k];
                let next_pal = &self.palettes[next];
                let outside_next: Vec<usize> = (0..j)
                    .filter(|&r| !next_pal.contains(chosen[r] as usize))
                    .collect();
                let mut excluded = self.base_exclusion(us[j]);
                let case = if outside_next.is_empty() {
                    excluded.union_with(next_pal);
                    ChoiceCase::AllInsideNext
                } else if j == k - 1 && outside_next == [0] {
                    excluded.union_with(next_pal);
                    excluded.insert(chosen[0] as usize);
                    ChoiceCase::WrapAvoidFirst
                } else {
                    for &c in &chosen {
                        excluded.insert(c as usize);
                    }
                    ChoiceCase::Escaped
                };
                let colour = self.smallest_outside(&excluded).ok_or(GreedyError::PoolExhausted {
                    step,
                    vertex: v,
                    neighbour: us[j],
                    case,
                })?;
                chosen.push(colour);
                let escapes_next = chosen.iter().any(|&c| !next_pal.contains(c as usize));
                choices.push(Choice {
                    neighbour: us[j],
                    colour,
                    case,
                    escapes_next,
                });
            }
        }

        for (choice, &(u, e)) in choices.iter().zip(&back) {
            self.colouring.set(e, choice.colour);
            self.palettes[u].insert(choice.colour as usize);
            self.palettes[v].insert(choice.colour as usize);
            self.prior_degree[u] += 1;
        }
        self.prior_degree[v] = k;
        self.done[v] = true;
        self.processed += 1;
        Ok(StepRecord {
            step,
            vertex: v,
            choices,
        })
    }
}

/// Greedy colouring with the min-degree-last ordering.
pub fn greedy_colour(g: &Graph) -> Result<EdgeColouring, GreedyError> {
    check_min_degree(g)?;
    let ordering = min_degree_last_ordering(g);
    let mut state = GreedyState::new_unchecked(g, ordering);
    while !state.is_finished() {
        state.extend_next()?;
    }
    Ok(state.into_colouring())
}

/// Greedy colouring with an injected ordering, returning the per-step log.
pub fn greedy_colour_with(
    g: &Graph,
    ordering: VertexOrdering,
) -> Result<(EdgeColouring, Vec<StepRecord>), GreedyError> {
    check_min_degree(g)?;
    let mut state = GreedyState::new(g, ordering)?;
    let mut steps = Vec::with_capacity(g.n());
    while !state.is_finished() {
        steps.push(state.extend_next()?);
    }
    Ok((state.into_colouring(), steps))
}

fn check_min_degree(g: &Graph) -> Result<(), GreedyError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) <= 1) {
        return Err(GreedyError::NoColouringExists {
            vertex: v,
            degree: g.degree(v),
        });
    }
    Ok(())
}
