//! Command-line front end. `run` does all the work so tests can drive it
//! with in-memory streams.
//!
//! Exit codes: 0 success, 1 violation found, 2 input or configuration
//! error, 3 search budget exhausted.

use std::fs;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use inclusion_core::colouring::{parse_colouring, write_colouring};
use inclusion_core::constructions::{kdd_bound, kdd_colouring};
use inclusion_core::exact::{
    colourable_with, conjecture_verdict, exact_index, Budget, Decision, ScanEntry, SolveStatus, Verdict,
};
use inclusion_core::graph::generate::{self, Family};
use inclusion_core::graph::io::{parse_graph, parse_graph6_line, write_graph, GraphFormat};
use inclusion_core::greedy::greedy_colour;
use inclusion_core::par::{self, Execution};
use inclusion_core::pipeline::{run_pipeline, PipelineParams, Slack};
use inclusion_core::validator::validate_with;
use inclusion_core::{EdgeColouring, Graph, Vertex};

pub const SCHEMA_VERSION: &str = "1";

/// Graphs per parallel batch in `scan`; bounds memory on long streams.
const SCAN_BATCH: usize = 256;

pub mod exit {
    pub const OK: i32 = 0;
    pub const VIOLATION: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const BUDGET: i32 = 3;
}

#[derive(Debug, Parser)]
#[command(name = "inclusion", version, about = "Inclusion-free edge colourings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a colouring file against a graph.
    Validate {
        #[command(flatten)]
        input: Input,
        /// Colouring file with `u v colour` lines (`-` for stdin).
        #[arg(long)]
        colouring: PathBuf,
    },
    /// Colour a graph and validate the result.
    Colour(ColourArgs),
    /// Compute the inclusion chromatic index, or decide a single `k`.
    Exact {
        #[command(flatten)]
        input: Input,
        /// Only decide whether `k` colours suffice.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check the conjectured bound over a graph6 stream, one JSON line per graph.
    Scan {
        /// graph6 file; stdin when absent or `-`.
        path: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Generate a graph (and for `kdd`, its colouring).
    Gen(GenArgs),
}

#[derive(Debug, Args)]
pub struct Input {
    /// Graph file; stdin when absent or `-`.
    pub path: Option<PathBuf>,
    /// Input format; guessed from the content when absent.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

impl From<Format> for GraphFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Graph6 => GraphFormat::Graph6,
            Format::Edgelist => GraphFormat::EdgeList,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
pub enum Algo {
    Greedy,
    Pipeline,
    Kdd,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    #[arg(long)]
    pub budget_nodes: Option<u64>,
    #[arg(long)]
    pub budget_secs: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ColourArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long, value_enum, default_value = "greedy")]
    pub algo: Algo,
    /// Required for `pipeline`.
    #[arg(long)]
    pub seed: Option<u64>,
    /// One multiplier for every window, or `name=value` pairs separated by
    /// commas (split_low, split_high, residual_low, residual_high, thin_low,
    /// thin_high, thin_small, distinguish).
    #[arg(long)]
    pub slack: Option<String>,
    #[arg(long)]
    pub tau: Option<f64>,
    #[arg(long)]
    pub keep_prob: Option<f64>,
    #[arg(long)]
    pub f_prob: Option<f64>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub resample_cap: Option<usize>,
    /// Write the colouring file here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyName {
    Kdd,
    Cycle,
    Complete,
    CompleteBipartite,
    Petersen,
    Random,
    TwoTier,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: FamilyName,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub delta_max: Option<usize>,
    #[arg(long)]
    pub delta_min: Option<usize>,
    #[arg(long)]
    pub min_degree: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub hubs: Option<usize>,
    #[arg(long)]
    pub leaves: Option<usize>,
    #[arg(long)]
    pub leaf_degree: Option<usize>,
    #[arg(long)]
    pub hub_p: Option<f64>,
    #[arg(long)]
    pub leaf_p: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: Format,
    /// Write the graph here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the `kdd` colouring here.
    #[arg(long)]
    pub colouring_out: Option<PathBuf>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("budget exhausted")]
    Budget,
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => exit::INPUT,
            CliError::Budget => exit::BUDGET,
        }
    }
}

fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: Option<&Path>) -> Result<String, CliError> {
        match path {
            None => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s).map_err(|e| input_err(format!("stdin: {e}")))?;
                Ok(s)
            }
            Some(p) if p.as_os_str() == "-" => self.read(None),
            Some(p) => fs::read_to_string(p).map_err(|e| input_err(format!("{}: {e}", p.display()))),
        }
    }

    fn emit(&mut self, doc: Value) {
        // a closed pipe is not worth a panic
        let _ = writeln!(self.out, "{doc}");
    }

    fn note(&mut self, msg: impl std::fmt::Display) {
        let _ = writeln!(self.err, "{msg}");
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT } else { exit::OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
            } else {
                let _ = write!(stdout, "{text}");
            }
            return code;
        }
    };
    let mut io = Io {
        stdin,
        out: stdout,
        err: stderr,
    };
    let result = match cli.command {
        Command::Validate { input, colouring } => cmd_validate(&mut io, &input, &colouring),
        Command::Colour(args) => cmd_colour(&mut io, &args),
        Command::Exact { input, k, budget } => cmd_exact(&mut io, &input, k, &budget),
        Command::Scan { path, budget, jobs } => cmd_scan(&mut io, path.as_deref(), &budget, jobs),
        Command::Gen(args) => cmd_gen(&mut io, &args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            io.note(format!("error: {e}"));
            e.code()
        }
    }
}

/// An edge list starts with a line of integers; graph6 never contains digits
/// only, since its characters start at `?`.
fn guess_format(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with(">>graph6<<") => GraphFormat::Graph6,
        Some(l) if l.split_whitespace().all(|t| t.bytes().all(|b| b.is_ascii_digit())) => GraphFormat::EdgeList,
        _ => GraphFormat::Graph6,
    }
}

fn read_graph(io: &mut Io, input: &Input) -> Result<Graph, CliError> {
    let text = io.read(input.path.as_deref())?;
    let format = input.format.map_or_else(|| guess_format(&text), GraphFormat::from);
    parse_graph(&text, format).map_err(input_err)
}

fn budget(b: &BudgetArgs) -> Result<Budget, CliError> {
    let mut out = match b.budget_nodes {
        Some(n) => Budget::nodes(n),
        None => Budget::unlimited(),
    };
    if let Some(s) = b.budget_secs {
        let d = Duration::try_from_secs_f64(s).map_err(|_| input_err(format!("invalid --budget-secs {s}")))?;
        out = out.with_time(d);
    }
    Ok(out)
}

fn graph_summary(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "m": g.edge_count(),
        "delta_min": g.min_degree(),
        "delta_max": g.max_degree(),
    })
}

fn colouring_triples(g: &Graph, c: &EdgeColouring) -> Vec<[usize; 3]> {
    c.iter()
        .map(|(e, col)| {
            let (u, v) = g.edge(e);
            [u, v, col as usize]
        })
        .collect()
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn cmd_validate(io: &mut Io, input: &Input, colouring: &Path) -> Result<i32, CliError> {
    if colouring.as_os_str() == "-" && input.path.as_ref().is_none_or(|p| p.as_os_str() == "-") {
        return Err(input_err("graph and colouring cannot both come from stdin"));
    }
    let g = read_graph(io, input)?;
    let text = io.read(Some(colouring))?;
    let c = parse_colouring(&g, &text).map_err(|e| input_err(format!("{}: {e}", colouring.display())))?;
    let report = validate_with(&g, &c, Execution::Sequential);
    io.note(format!(
        "{} proper, {} inclusion violations, {} uncoloured edges, {} colours",
        report.proper_violations.len(),
        report.inclusion_violations.len(),
        report.uncoloured_edges.len(),
        report.colours_used
    ));
    let ok = report.is_valid();
    io.emit(json!({
        "schema_version": SCHEMA_VERSION,
        "command": "validate",
        "graph": graph_summary(&g),
        "valid": ok,
        "report": report,
    }));
    Ok(if ok { exit::OK } else { exit::VIOLATION })
}

fn parse_slack(text: &str) -> Result<Slack, CliError> {
    if let Ok(x) = text.trim().parse::<f64>() {
        return Ok(Slack::uniform(x));
    }
    let mut s = Slack::default();
    for item in text.split(',') {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| input_err(format!("bad slack entry `{item}`")))?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| input_err(format!("bad slack value `{value}`")))?;
        let slot = match name.trim() {
            "split_low" => &mut s.split_low,
            "split_high" => &mut s.split_high,
            "residual_low" => &mut s.residual_low,
            "residual_high" => &mut s.residual_high,
            "thin_low" => &mut s.thin_low,
            "thin_high" => &mut s.thin_high,
            "thin_small" => &mut s.thin_small,
            "distinguish" => &mut s.distinguish,
            other => return Err(input_err(format!("unknown slack `{other}`"))),
        };
        *slot = value;
    }
    Ok(s)
}

/// Sides `(X, Y)` of a complete bipartite graph with `|X| <= |Y|`.
fn complete_bipartite_sides(g: &Graph) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    if g.n() == 0 || !g.is_connected() {
        return None;
    }
    let mut side = vec![usize::MAX; g.n()];
    side[0] = 0;
    let mut queue = vec![0];
    while let Some(v) = queue.pop() {
        for w in g.neighbours(v) {
            if side[w] == usize::MAX {
                side[w] = 1 - side[v];
                queue.push(w);
            } else if side[w] == side[v] {
                return None;
            }
        }
    }
    let a: Vec<Vertex> = (0..g.n()).filter(|&v| side[v] == 0).collect();
    let b: Vec<Vertex> = (0..g.n()).filter(|&v| side[v] == 1).collect();
    if g.edge_count() != a.len() * b.len() {
        return None;
    }
    Some(if a.len() <= b.len() { (a, b) } else { (b, a) })
}

/// The cyclic construction transported onto an input `K_{δ,Δ}`.
fn kdd_on(g: &Graph) -> Result<EdgeColouring, CliError> {
    let (x, y) = complete_bipartite_sides(g).ok_or_else(|| input_err("--algo kdd needs a complete bipartite graph"))?;
    let k = kdd_colouring(y.len(), x.len()).map_err(input_err)?;
    let map = |v: Vertex| if v < x.len() { x[v] } else { y[v - x.len()] };
    let mut c = EdgeColouring::for_graph(g);
    for (e, col) in k.colouring.iter() {
        let (u, v) = k.graph.edge(e);
        c.set(g.edge_id(map(u), map(v)).expect("same complete bipartite graph"), col);
    }
    Ok(c)
}

fn cmd_colour(io: &mut Io, args: &ColourArgs) -> Result<i32, CliError> {
    if args.algo != Algo::Pipeline {
        let pipeline_only = [
            ("--seed", args.seed.is_some()),
            ("--slack", args.slack.is_some()),
            ("--tau", args.tau.is_some()),
            ("--keep-prob", args.keep_prob.is_some()),
            ("--f-prob", args.f_prob.is_some()),
            ("--t", args.t.is_some()),
            ("--r", args.r.is_some()),
            ("--resample-cap", args.resample_cap.is_some()),
        ];
        if let Some((flag, _)) = pipeline_only.iter().find(|f| f.1) {
            return Err(input_err(format!("{flag} only applies to --algo pipeline")));
        }
    }
    let g = read_graph(io, &args.input)?;
    let mut doc = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "colour",
        "graph": graph_summary(&g),
    });
    let colouring = match args.algo {
        Algo::Greedy => {
            doc["algo"] = json!("greedy");
            doc["bound"] = json!((3 * g.max_degree()).saturating_sub(1));
            greedy_colour(&g).map_err(input_err)?
        }
        Algo::Kdd => {
            doc["algo"] = json!("kdd");
            let c = kdd_on(&g)?;
            doc["bound"] = json!(kdd_bound(g.max_degree(), g.min_degree()).map_err(input_err)?);
            c
        }
        Algo::Pipeline => {
            let seed = args
                .seed
                .ok_or_else(|| input_err("--algo pipeline needs --seed"))?;
            let mut params = PipelineParams {
                tau: args.tau,
                keep_prob: args.keep_prob,
                r: args.r,
                f_prob: args.f_prob,
                t: args.t,
                execution: Execution::Sequential,
                ..PipelineParams::default()
            };
            if let Some(s) = &args.slack {
                params.slack = parse_slack(s)?;
            }
            if let Some(cap) = args.resample_cap {
                params.resample_cap = cap;
            }
            let out = run_pipeline(&g, &params, seed).map_err(input_err)?;
            match &out.report.fallback {
                Some(why) => io.note(format!("pipeline fell back to greedy: {why}")),
                None => io.note("pipeline completed every stage"),
            }
            doc["algo"] = json!("pipeline");
            doc["seed"] = json!(seed);
            doc["config"] = json!(params);
            doc["pipeline"] = json!(out.report);
            out.colouring
        }
    };
    let report = validate_with(&g, &colouring, Execution::Sequential);
    let ok = report.is_valid();
    io.note(format!(
        "{} colours (max colour {}), {}",
        report.colours_used,
        report.max_colour,
        if ok { "valid" } else { "INVALID" }
    ));
    if let Some(path) = &args.out {
        write_file(path, &write_colouring(&g, &colouring))?;
    }
    doc["valid"] = json!(ok);
    doc["colours_used"] = json!(report.colours_used);
    doc["report"] = json!(report);
    doc["colouring"] = json!(colouring_triples(&g, &colouring));
    io.emit(doc);
    Ok(if ok { exit::OK } else { exit::VIOLATION })
}

fn cmd_exact(io: &mut Io, input: &Input, k: Option<usize>, b: &BudgetArgs) -> Result<i32, CliError> {
    let g = read_graph(io, input)?;
    let budget = budget(b)?;
    let mut doc = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "exact",
        "graph": graph_summary(&g),
    });
    if let Some(k) = k {
        let out = colourable_with(&g, k, budget).map_err(input_err)?;
        let (answer, witness) = match &out.decision {
            Decision::Yes(c) => ("yes", Some(colouring_triples(&g, c))),
            Decision::No => ("no", None),
            Decision::Unknown => ("unknown", None),
        };
        io.note(format!("{k} colours: {answer} ({} nodes)", out.nodes));
        doc["k"] = json!(k);
        doc["decision"] = json!(answer);
        doc["witness"] = json!(witness);
        doc["nodes_explored"] = json!(out.nodes);
        doc["elapsed_secs"] = json!(out.elapsed.as_secs_f64());
        io.emit(doc);
        return match out.decision {
            Decision::Unknown => Err(CliError::Budget),
            _ => Ok(exit::OK),
        };
    }
    let out = exact_index(&g, budget);
    match out.status {
        SolveStatus::Exact => io.note(format!("index {}", out.value.unwrap_or_default())),
        SolveStatus::BoundsOnly => io.note(format!("bounds {}..={}", out.lower, out.upper)),
        SolveStatus::NoColouring => io.note("no inclusion-free colouring exists (degree one vertex)"),
    }
    let status = out.status;
    let witness = out.witness.as_ref().map(|c| colouring_triples(&g, c));
    doc["outcome"] = json!(out);
    doc["witness"] = json!(witness);
    io.emit(doc);
    match status {
        SolveStatus::BoundsOnly => Err(CliError::Budget),
        _ => Ok(exit::OK),
    }
}

fn cmd_scan(io: &mut Io, path: Option<&Path>, b: &BudgetArgs, jobs: Option<usize>) -> Result<i32, CliError> {
    let budget = budget(b)?;
    if jobs == Some(0) {
        return Err(input_err("--jobs must be at least 1"));
    }
    let reader: Box<dyn BufRead + '_> = match path {
        Some(p) if p.as_os_str() != "-" => Box::new(BufReader::new(
            fs::File::open(p).map_err(|e| input_err(format!("{}: {e}", p.display())))?,
        )),
        _ => Box::new(BufReader::new(&mut *io.stdin)),
    };
    let out = &mut *io.out;
    let mut tally = Tally::default();
    let mut batch: Vec<(usize, Graph)> = Vec::new();
    let mut docs: Vec<Value> = Vec::new();
    let mut lines = reader.lines().enumerate();
    let mut graph_id = 0;
    loop {
        let next = lines.next();
        let done = next.is_none();
        if let Some((i, line)) = next {
            let line = line.map_err(|e| input_err(format!("line {}: {e}", i + 1)))?;
            let record = line.trim();
            if record.is_empty() || record.starts_with('#') {
                continue;
            }
            match parse_graph6_line(record, i + 1) {
                Ok(g) => batch.push((graph_id, g)),
                Err(e) => {
                    tally.bad_lines += 1;
                    docs.push(json!({
                        "schema_version": SCHEMA_VERSION,
                        "kind": "error",
                        "graph_id": graph_id,
                        "error": e.to_string(),
                    }));
                }
            }
            graph_id += 1;
            if batch.len() < SCAN_BATCH {
                continue;
            }
        }
        let entries = par::with_threads(jobs, || {
            par::map(Execution::Parallel, &batch, |(id, g)| conjecture_verdict(*id, g, budget))
        });
        for entry in entries {
            tally.add(&entry);
            let mut v = json!(entry);
            v["schema_version"] = json!(SCHEMA_VERSION);
            docs.push(v);
        }
        // keep input order: parse errors were queued before the batch they belong to
        docs.sort_by_key(|d| d["graph_id"].as_u64());
        for d in docs.drain(..) {
            let _ = writeln!(out, "{d}");
        }
        batch.clear();
        if done {
            break;
        }
    }
    drop(lines);
    io.note(format!(
        "{} holds, {} excluded, {} unknown, {} VIOLATED, {} skipped, {} unparsable",
        tally.holds, tally.excluded, tally.unknown, tally.violated, tally.skipped, tally.bad_lines
    ));
    Ok(if tally.violated > 0 {
        exit::VIOLATION
    } else if tally.bad_lines > 0 {
        exit::INPUT
    } else if tally.unknown > 0 {
        exit::BUDGET
    } else {
        exit::OK
    })
}

#[derive(Default)]
struct Tally {
    holds: usize,
    excluded: usize,
    unknown: usize,
    violated: usize,
    skipped: usize,
    bad_lines: usize,
}

impl Tally {
    fn add(&mut self, entry: &ScanEntry) {
        match entry.verdict().map(|v| v.verdict) {
            Some(Verdict::Holds) => self.holds += 1,
            Some(Verdict::ExcludedC5) => self.excluded += 1,
            Some(Verdict::Unknown) => self.unknown += 1,
            Some(Verdict::Violated) => self.violated += 1,
            None => self.skipped += 1,
        }
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| input_err(format!("this family needs {flag}")))
}

fn cmd_gen(io: &mut Io, args: &GenArgs) -> Result<i32, CliError> {
    let format = GraphFormat::from(args.format);
    let mut colouring = None;
    let g = match args.family {
        FamilyName::Kdd => {
            let k = kdd_colouring(need(args.delta_max, "--delta-max")?, need(args.delta_min, "--delta-min")?)
                .map_err(input_err)?;
            colouring = Some(k.colouring);
            k.graph
        }
        family => {
            let spec = match family {
                FamilyName::Cycle => Family::Cycle { n: need(args.n, "--n")? },
                FamilyName::Complete => Family::Complete { n: need(args.n, "--n")? },
                FamilyName::CompleteBipartite => Family::CompleteBipartite {
                    a: need(args.a, "--a")?,
                    b: need(args.b, "--b")?,
                },
                FamilyName::Petersen => Family::Petersen,
                FamilyName::Random => Family::RandomMinDegree {
                    n: need(args.n, "--n")?,
                    min_degree: need(args.min_degree, "--min-degree")?,
                    p: need(args.p, "--p")?,
                    seed: need(args.seed, "--seed")?,
                },
                FamilyName::TwoTier => Family::TwoTier {
                    hubs: need(args.hubs, "--hubs")?,
                    leaves: need(args.leaves, "--leaves")?,
                    leaf_degree: need(args.leaf_degree, "--leaf-degree")?,
                    hub_p: need(args.hub_p, "--hub-p")?,
                    leaf_p: need(args.leaf_p, "--leaf-p")?,
                    seed: need(args.seed, "--seed")?,
                },
                FamilyName::Kdd => unreachable!(),
            };
            generate::generate(&spec).map_err(input_err)?
        }
    };
    let text = write_graph(&g, format);
    if let Some(path) = &args.out {
        write_file(path, &text)?;
    }
    let colouring_text = colouring.as_ref().map(|c| write_colouring(&g, c));
    match (&args.colouring_out, &colouring_text) {
        (Some(path), Some(t)) => write_file(path, t)?,
        (Some(_), None) => return Err(input_err("--colouring-out only applies to --family kdd")),
        _ => {}
    }
    io.note(format!("{} vertices, {} edges", g.n(), g.edge_count()));
    io.emit(json!({
        "schema_version": SCHEMA_VERSION,
        "command": "gen",
        "graph": graph_summary(&g),
        "format": format.to_string(),
        "text": text,
        "colouring": colouring_text,
    }));
    Ok(exit::OK)
}
