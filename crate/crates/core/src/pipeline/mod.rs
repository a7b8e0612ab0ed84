//! Randomized colouring pipeline for graphs with minimum degree at least 3.
//!
//! Stages, each with its own colour range:
//!
//! 1. split the vertices into small (`S`) and big (`B`) at degree `tau`;
//! 2. sample `G′ ⊇ H′` and colour `G′` from pairs `{3i−2, 3i−1}` in `1..=3r`;
//! 3. colour `G_S` with greedy on its doubled graph, in `3r+1..=3r+s`;
//! 4. sample `F` from the uncoloured edges, colour it at random in
//!    `3r+s+1..=3r+s+t` and drop colour conflicts;
//! 5. colour the rest with at most `Δ+1` fresh colours.
//!
//! Random stages are checked against degree windows and resampled with
//! derived seeds. If any stage gives up, the greedy colouring is returned
//! instead, so the result is always a valid colouring.

pub mod distinguish;
pub mod pairs;
pub mod partition;
pub mod sampling;
pub mod shannon;
pub mod small;
mod table;
pub mod vizing;

use serde::Serialize;
use thiserror::Error;

use crate::colouring::{Colour, EdgeColouring};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::greedy::greedy_colour;
use crate::par::Execution;
use crate::validator::{validate_with, ValidationReport};

pub use distinguish::{distinguish_round, Distinguish};
pub use pairs::{pair_colour, Contraction, Origin, PairColouring};
pub use partition::{partition, Partition, VertexClass};
pub use sampling::{sample_f, sample_gprime, Margin};
pub use shannon::shannon_multigraph_colour;
pub use small::colour_small;
pub use vizing::complete_vizing;

/// Multipliers on the deviation terms of each degree window. Larger values
/// widen the windows; 1 keeps the asymptotic thresholds unchanged.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Slack {
    pub split_low: f64,
    pub split_high: f64,
    pub residual_low: f64,
    pub residual_high: f64,
    pub thin_low: f64,
    pub thin_high: f64,
    pub thin_small: f64,
    pub distinguish: f64,
}

impl Slack {
    pub fn uniform(x: f64) -> Self {
        Slack {
            split_low: x,
            split_high: x,
            residual_low: x,
            residual_high: x,
            thin_low: x,
            thin_high: x,
            thin_small: x,
            distinguish: x,
        }
    }

    fn all(&self) -> [f64; 8] {
        [
            self.split_low,
            self.split_high,
            self.residual_low,
            self.residual_high,
            self.thin_low,
            self.thin_high,
            self.thin_small,
            self.distinguish,
        ]
    }
}

impl Default for Slack {
    fn default() -> Self {
        Slack::uniform(1.0)
    }
}

/// Overrides for the derived quantities; `None` uses the default formula.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PipelineParams {
    pub tau: Option<f64>,
    pub keep_prob: Option<f64>,
    pub r: Option<usize>,
    pub f_prob: Option<f64>,
    pub t: Option<usize>,
    pub slack: Slack,
    pub resample_cap: usize,
    #[serde(skip)]
    pub execution: Execution,
}

impl Default for PipelineParams {
    fn default() -> Self {
        PipelineParams {
            tau: None,
            keep_prob: None,
            r: None,
            f_prob: None,
            t: None,
            slack: Slack::default(),
            resample_cap: 100,
            execution: Execution::default(),
        }
    }
}

/// Parameters evaluated at a given `δ`, `Δ`. Logarithms are natural.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResolvedParams {
    pub delta_min: usize,
    pub delta_max: usize,
    pub tau: f64,
    pub keep_prob: f64,
    pub r: usize,
    pub f_prob: f64,
    pub t: usize,
    pub slack: Slack,
    pub resample_cap: usize,
    /// Names of the parameters that were overridden.
    pub overridden: Vec<&'static str>,
    #[serde(skip)]
    pub execution: Execution,
}

impl PipelineParams {
    pub fn resolve(&self, delta_min: usize, delta_max: usize) -> Result<ResolvedParams, PipelineError> {
        let big = delta_max as f64;
        let small = delta_min as f64;
        let ln = big.ln();
        let cbrt = big.cbrt();
        let mut overridden = Vec::new();
        let mut pick = |name: &'static str, o: Option<f64>, default: f64| {
            if o.is_some() {
                overridden.push(name);
            }
            o.unwrap_or(default)
        };
        let tau = pick("tau", self.tau, cbrt * cbrt * ln.powi(4));
        let keep_prob = pick("keep_prob", self.keep_prob, (2.0 / small).min(1.0));
        let f_prob = pick("f_prob", self.f_prob, (1.0 / (cbrt * cbrt * ln * ln)).min(1.0));
        let r_default = ((3.0 / small) * big * (1.0 + small / cbrt)).ceil() as usize;
        let r = pick("r", self.r.map(|x| x as f64), r_default as f64) as usize;
        let t = pick("t", self.t.map(|x| x as f64), cbrt.ceil()) as usize;

        let bad = |what: String| Err(PipelineError::InvalidParameters(what));
        for (name, p) in [("keep_prob", keep_prob), ("f_prob", f_prob)] {
            if !(p > 0.0 && p <= 1.0) {
                return bad(format!("{name} must lie in (0, 1], got {p}"));
            }
        }
        if tau.is_nan() {
            return bad("tau is not a number".into());
        }
        if t == 0 || r == 0 {
            return bad("r and t must be positive".into());
        }
        if self.resample_cap == 0 {
            return bad("resample cap must be at least 1".into());
        }
        if self.slack.all().iter().any(|&s| !(s > 0.0 && s.is_finite())) {
            return bad("slack multipliers must be positive and finite".into());
        }
        Ok(ResolvedParams {
            delta_min,
            delta_max,
            tau,
            keep_prob,
            r,
            f_prob,
            t,
            slack: self.slack,
            resample_cap: self.resample_cap,
            overridden,
            execution: self.execution,
        })
    }
}

impl ResolvedParams {
    fn ln(&self) -> f64 {
        (self.delta_max as f64).ln()
    }

    fn cbrt(&self) -> f64 {
        (self.delta_max as f64).cbrt()
    }

    /// `[p·d − 2√Δ·lnΔ, p·d·(1 + δ/Δ^{1/3})]` for `d_{G′}` at a big vertex.
    pub fn split_window(&self, d: usize) -> (f64, f64) {
        let pd = self.keep_prob * d as f64;
        let big = self.delta_max as f64;
        (
            pd - self.slack.split_low * 2.0 * big.sqrt() * self.ln(),
            pd * (1.0 + self.slack.split_high * self.delta_min as f64 / self.cbrt()),
        )
    }

    /// `d·(1 − p − 2/Δ^{1/3})`, the lower bound on `d_{G₁}` at a big vertex.
    pub fn residual_min(&self, d: usize) -> f64 {
        d as f64 * (1.0 - self.keep_prob - self.slack.residual_low * 2.0 / self.cbrt())
    }

    /// `(1 − p + 2·lnΔ/√Δ)·Δ`, the upper bound on `d_{G₁}` at a big vertex.
    pub fn residual_max(&self) -> f64 {
        let big = self.delta_max as f64;
        (1.0 - self.keep_prob + self.slack.residual_high * 2.0 * self.ln() / big.sqrt()) * big
    }

    /// `[ln²Δ/8, 2Δ^{1/3}/ln²Δ]` for `d_F` at a big vertex.
    pub fn thin_big_window(&self) -> (f64, f64) {
        let l2 = self.ln() * self.ln();
        (
            l2 / 8.0 / self.slack.thin_low,
            self.slack.thin_high * 2.0 * self.cbrt() / l2,
        )
    }

    /// `2·ln²Δ`, the cap on `d_F` at a small vertex.
    pub fn thin_small_max(&self) -> f64 {
        self.slack.thin_small * 2.0 * self.ln() * self.ln()
    }

    /// Required `|I_{u,v}|`: `(d_F(u)/4 − 1)` divided by the slack, rounded
    /// up, and never below 1.
    pub fn distinguish_quota(&self, d_f: usize) -> usize {
        let q = ((d_f as f64 / 4.0 - 1.0) / self.slack.distinguish).ceil();
        if q >= 1.0 {
            q as usize
        } else {
            1
        }
    }
}

/// `Δ(1 + 4/δ) + 4Δ^{2/3}·ln⁴Δ`.
pub fn target_bound(delta_max: usize, delta_min: usize) -> f64 {
    let big = delta_max as f64;
    big * (1.0 + 4.0 / delta_min as f64) + 4.0 * big.cbrt().powi(2) * big.ln().powi(4)
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PipelineError {
    #[error("vertex {vertex} has degree {degree}; no inclusion-free colouring exists")]
    NoColouringExists { vertex: Vertex, degree: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StageKind {
    Partition,
    Split,
    Pairs,
    Small,
    Residual,
    Thin,
    Distinguish,
    Vizing,
    Final,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StageFailure {
    pub stage: StageKind,
    pub reason: String,
    pub worst: Option<Margin>,
    pub attempts: usize,
}

impl StageFailure {
    pub fn new(stage: StageKind, reason: impl Into<String>) -> Self {
        StageFailure {
            stage,
            reason: reason.into(),
            worst: None,
            attempts: 1,
        }
    }

    pub fn with_margin(stage: StageKind, reason: impl Into<String>, worst: Option<Margin>, attempts: usize) -> Self {
        StageFailure {
            stage,
            reason: reason.into(),
            worst,
            attempts,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StageReport {
    pub stage: StageKind,
    pub accepted: bool,
    pub attempts: usize,
    /// Smallest distance to a window bound; negative on failure.
    pub worst_margin: Option<Margin>,
    /// Inclusive colour range reserved by the stage.
    pub colour_range: Option<(Colour, Colour)>,
    pub note: Option<String>,
}

impl StageReport {
    fn accepted(stage: StageKind) -> Self {
        StageReport {
            stage,
            accepted: true,
            attempts: 1,
            worst_margin: None,
            colour_range: None,
            note: None,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct StageArtifacts {
    pub partition: Option<Partition>,
    pub g_prime: Option<Vec<EdgeId>>,
    pub h_prime: Option<Vec<EdgeId>>,
    pub pairs: Option<PairColouring>,
    pub small: Option<EdgeColouring>,
    pub s: Option<usize>,
    pub g1: Option<Vec<EdgeId>>,
    pub f: Option<Vec<EdgeId>>,
    pub distinguish: Option<Distinguish>,
    pub residual: Option<Vec<EdgeId>>,
    pub vizing: Option<EdgeColouring>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PipelineReport {
    pub schema: &'static str,
    pub delta_min: usize,
    pub delta_max: usize,
    pub seed: u64,
    pub params: Option<ResolvedParams>,
    pub stages: Vec<StageReport>,
    /// Why the greedy colouring was used instead, if it was.
    pub fallback: Option<String>,
    pub r: Option<usize>,
    pub r_enlargements: Option<usize>,
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub colour_count: usize,
    pub max_colour: Colour,
    pub target: f64,
    pub validation: ValidationReport,
}

#[derive(Debug, Clone)]
pub struct PipelineResult {
    pub colouring: EdgeColouring,
    pub colour_count: usize,
    pub report: PipelineReport,
    pub artifacts: StageArtifacts,
}

impl PipelineResult {
    pub fn used_fallback(&self) -> bool {
        self.report.fallback.is_some()
    }
}

pub fn run_pipeline(g: &Graph, params: &PipelineParams, seed: u64) -> Result<PipelineResult, PipelineError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) <= 1) {
        return Err(PipelineError::NoColouringExists {
            vertex: v,
            degree: g.degree(v),
        });
    }
    if g.n() == 0 {
        return Err(PipelineError::NoColouringExists { vertex: 0, degree: 0 });
    }
    let (delta_min, delta_max) = (g.min_degree(), g.max_degree());
    let rp = params.resolve(delta_min, delta_max)?;
    let mut run = Run {
        g,
        rp: &rp,
        seed,
        stages: Vec::new(),
        artifacts: StageArtifacts::default(),
    };
    let staged = if delta_min == 2 {
        Err(StageFailure::new(StageKind::Partition, "minimum degree 2 is handled by greedy"))
    } else {
        run.stages()
    };
    let Run { stages, artifacts, .. } = run;
    let (colouring, fallback) = match staged {
        Ok(c) => (c, None),
        Err(failure) => {
            let c = greedy_colour(g).expect("minimum degree checked");
            (c, Some(format!("{:?}: {}", failure.stage, failure.reason)))
        }
    };
    let validation = validate_with(g, &colouring, rp.execution);
    let colour_count = validation.colours_used;
    let report = PipelineReport {
        schema: "pipeline-report/1",
        delta_min,
        delta_max,
        seed,
        params: Some(rp.clone()),
        stages,
        fallback,
        r: artifacts.pairs.as_ref().map(|p| p.r),
        r_enlargements: artifacts.pairs.as_ref().map(|p| p.enlargements),
        s: artifacts.s,
        t: Some(rp.t),
        colour_count,
        max_colour: validation.max_colour,
        target: target_bound(delta_max, delta_min),
        validation,
    };
    Ok(PipelineResult {
        colouring,
        colour_count,
        report,
        artifacts,
    })
}

struct Run<'a> {
    g: &'a Graph,
    rp: &'a ResolvedParams,
    seed: u64,
    stages: Vec<StageReport>,
    artifacts: StageArtifacts,
}

impl Run<'_> {
    fn fail(&mut self, f: StageFailure) -> StageFailure {
        self.stages.push(StageReport {
            stage: f.stage,
            accepted: false,
            attempts: f.attempts,
            worst_margin: f.worst.clone(),
            colour_range: None,
            note: Some(f.reason.clone()),
        });
        f
    }

    fn stages(&mut self) -> Result<EdgeColouring, StageFailure> {
        let g = self.g;
        let rp = self.rp;

        let part = partition(g, rp.tau);
        let mut rep = StageReport::accepted(StageKind::Partition);
        rep.note = Some(format!(
            "|S| = {}, |B| = {}, |S0| = {}, |S1| = {}, |H| = {}",
            part.small.len(),
            part.big.len(),
            part.s0.len(),
            part.s1.len(),
            part.h_edges.len()
        ));
        self.stages.push(rep);
        self.artifacts.partition = Some(part.clone());

        let gp = sample_gprime(g, &part, rp, self.seed).map_err(|f| self.fail(f))?;
        self.stages.push(StageReport {
            attempts: gp.attempts,
            worst_margin: gp.worst.clone(),
            ..StageReport::accepted(StageKind::Split)
        });
        self.artifacts.g_prime = Some(gp.g_prime.clone());
        self.artifacts.h_prime = Some(gp.h_prime.clone());

        let pc = pair_colour(g, &part, &gp.g_prime, &gp.h_prime, rp.r).map_err(|f| self.fail(f))?;
        let r = pc.r;
        let mut note = Vec::new();
        if pc.r > pc.r_requested + pc.enlargements {
            note.push(format!("r raised from {} to fit the multigraph degree", pc.r_requested));
        }
        if pc.enlargements > 0 {
            note.push(format!("{} pairs appended during recolouring", pc.enlargements));
        }
        self.stages.push(StageReport {
            colour_range: Some((1, 3 * r as Colour)),
            note: (!note.is_empty()).then(|| note.join("; ")),
            ..StageReport::accepted(StageKind::Pairs)
        });
        let mut colouring = pc.colouring.clone();
        self.artifacts.pairs = Some(pc);

        let base = 3 * r as Colour;
        let sc = colour_small(g, &part, base)
            .map_err(|e| self.fail(StageFailure::new(StageKind::Small, e.to_string())))?;
        let s = sc.s as Colour;
        self.stages.push(StageReport {
            colour_range: (s > 0).then_some((base + 1, base + s)),
            ..StageReport::accepted(StageKind::Small)
        });
        colouring.overlay(&sc.colouring);
        self.artifacts.small = Some(sc.colouring.clone());
        self.artifacts.s = Some(sc.s);
        if let Some(v) = uncovered_small_vertex(g, &part, &sc.colouring) {
            return Err(self.fail(StageFailure::new(
                StageKind::Small,
                format!("vertex {v} of S \\ S0 has no colour from the small range"),
            )));
        }

        let g1: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| colouring.get(e).is_none()).collect();
        self.artifacts.g1 = Some(g1.clone());
        let mut in_g1 = vec![false; g.edge_count()];
        for &e in &g1 {
            in_g1[e] = true;
        }
        let worst = Margin::worst(sampling::residual_margins(g, &part, &in_g1, rp));
        if let Some(w) = worst.clone().filter(Margin::is_violated) {
            return Err(self.fail(StageFailure::with_margin(
                StageKind::Residual,
                "uncoloured degree outside its window",
                Some(w),
                1,
            )));
        }
        self.stages.push(StageReport {
            worst_margin: worst,
            ..StageReport::accepted(StageKind::Residual)
        });

        let fs = sample_f(g, &part, &g1, rp, self.seed).map_err(|f| self.fail(f))?;
        self.stages.push(StageReport {
            attempts: fs.attempts,
            worst_margin: fs.worst.clone(),
            ..StageReport::accepted(StageKind::Thin)
        });
        self.artifacts.f = Some(fs.f.clone());

        let offset = base + s;
        let t = rp.t as Colour;
        let d = distinguish_round(g, &part, &fs.f, rp, offset, self.seed).map_err(|f| self.fail(f))?;
        self.stages.push(StageReport {
            attempts: d.attempts,
            worst_margin: d.worst.clone(),
            colour_range: Some((offset + 1, offset + t)),
            note: Some(format!(
                "{} of {} edges kept their colour",
                d.survives.iter().filter(|&&x| x).count(),
                fs.f.len()
            )),
            ..StageReport::accepted(StageKind::Distinguish)
        });
        colouring.overlay(&d.colouring);
        self.artifacts.distinguish = Some(d);

        let residual: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| colouring.get(e).is_none()).collect();
        let (rg, parent) = g.edge_subgraph(&residual);
        let offset = offset + t;
        let vc = complete_vizing(&rg, offset);
        let mut viz = EdgeColouring::for_graph(g);
        for (e, c) in vc.iter() {
            viz.set(parent[e], c);
        }
        self.stages.push(StageReport {
            colour_range: (rg.edge_count() > 0)
                .then(|| (offset + 1, offset + rg.max_degree() as Colour + 1)),
            ..StageReport::accepted(StageKind::Vizing)
        });
        colouring.overlay(&viz);
        self.artifacts.residual = Some(residual);
        self.artifacts.vizing = Some(viz);

        let report = validate_with(g, &colouring, rp.execution);
        if !report.is_valid() {
            return Err(self.fail(StageFailure::new(
                StageKind::Final,
                format!(
                    "{} proper and {} inclusion violations",
                    report.proper_violations.len(),
                    report.inclusion_violations.len()
                ),
            )));
        }
        self.stages.push(StageReport::accepted(StageKind::Final));
        Ok(colouring)
    }
}

/// A vertex of `S ∖ S0` without an edge coloured by the small stage.
fn uncovered_small_vertex(g: &Graph, part: &Partition, small: &EdgeColouring) -> Option<Vertex> {
    part.small.iter().copied().find(|&v| {
        part.class[v] != VertexClass::S0 && g.incident(v).iter().all(|&(_, e)| small.get(e).is_none())
    })
}
