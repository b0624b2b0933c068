//! Exact solvers: minimum facial-parity edge/vertex colorings, facial WORM
//! satisfiability, brute-force oracles and the gadget family search.

mod brute;
mod engine;
mod family;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::colorings::{
    verify_facial_worm, verify_fp_edge, verify_fp_vertex, ColoringError, EdgeColoring, VertexColoring, Violation,
};
use crate::planegraph::{GraphError, PlaneGraph};

pub use brute::{brute_force_min, brute_force_path_min, brute_force_worm, RestrictedGrowth, BRUTE_FORCE_LIMIT};
pub use family::{gadget_family_search, FamilyEntry};

use engine::{Model, ParityGroup, Probe, ProbeLimits};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("node budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("{elements} elements exceed the brute-force limit of {limit}")]
    TooLarge { elements: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// Which coloring problem a solve or check refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Problem {
    FpEdge,
    FpVertex,
    /// No rainbow facial path on `rainbow` vertices, no monochromatic one
    /// on `mono` vertices.
    Worm {
        rainbow: usize,
        mono: usize,
    },
}

impl Problem {
    pub fn name(&self) -> &'static str {
        match self {
            Problem::FpEdge => "fp-edge",
            Problem::FpVertex => "fp-vertex",
            Problem::Worm { .. } => "worm",
        }
    }

    /// Number of colored elements for `g`.
    pub fn element_count(&self, g: &PlaneGraph) -> usize {
        match self {
            Problem::FpEdge => g.edge_count(),
            _ => g.vertex_count(),
        }
    }

    /// Runs the independent verifier matching this problem.
    pub fn verify(&self, g: &PlaneGraph, colors: &[u32]) -> Result<Vec<Violation>, ColoringError> {
        match *self {
            Problem::FpEdge => verify_fp_edge(g, &EdgeColoring(colors.to_vec())),
            Problem::FpVertex => verify_fp_vertex(g, &VertexColoring(colors.to_vec())),
            Problem::Worm { rainbow, mono } => verify_facial_worm(g, &VertexColoring(colors.to_vec()), rainbow, mono),
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Problem::Worm { rainbow, mono } => write!(f, "worm(P{rainbow},P{mono})"),
            p => f.write_str(p.name()),
        }
    }
}

impl FromStr for Problem {
    type Err = String;

    /// Parses `fp-edge` or `fp-vertex`; WORM needs its path lengths and is
    /// built directly.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fp-edge" => Ok(Problem::FpEdge),
            "fp-vertex" => Ok(Problem::FpVertex),
            other => Err(format!("unknown problem {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest number of colors tried. `None` means the element count,
    /// which is always enough to decide the question exactly.
    pub color_cap: Option<usize>,
    pub workers: usize,
    /// Node budget across the whole solve; 0 = unlimited.
    pub node_budget: u64,
    /// Allow facial-parity solves on graphs outside their usual class
    /// (bridges for edges, cut vertices for vertices), counting walk
    /// appearances.
    pub extended_semantics: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { color_cap: None, workers: 1, node_budget: 0, extended_semantics: false }
    }
}

impl SearchConfig {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.color_cap = Some(cap);
        self
    }

    pub fn with_budget(mut self, nodes: u64) -> Self {
        self.node_budget = nodes;
        self
    }

    pub fn extended(mut self) -> Self {
        self.extended_semantics = true;
        self
    }

    fn validate(&self) -> Result<(), SolveError> {
        if self.color_cap == Some(0) {
            return Err(SolveError::InvalidConfig("color cap must be at least 1".into()));
        }
        if self.workers == 0 {
            return Err(SolveError::InvalidConfig("worker count must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// Minimum color count, with every smaller count refuted exhaustively.
    Optimal(usize),
    Sat,
    Unsat,
    /// No coloring within the configured cap; larger counts were not tried.
    UnsatUnderCap(usize),
}

impl SolveStatus {
    pub fn is_success(&self) -> bool {
        matches!(self, SolveStatus::Optimal(_) | SolveStatus::Sat)
    }
}

/// One fixed-color feasibility probe made during a solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProbeRecord {
    pub colors: usize,
    pub feasible: bool,
    pub nodes: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
    pub probes: Vec<ProbeRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub problem: Problem,
    pub status: SolveStatus,
    /// Colors indexed by edge (fp-edge) or vertex id, present iff the
    /// status is `Optimal` or `Sat`.
    pub witness: Option<Vec<u32>>,
    pub stats: SearchStats,
    pub config: SearchConfig,
    /// The graph is outside the problem's usual class and the result uses
    /// walk-appearance counting.
    pub extended_semantics: bool,
}

impl SolveResult {
    pub fn k(&self) -> Option<usize> {
        match self.status {
            SolveStatus::Optimal(k) => Some(k),
            _ => None,
        }
    }

    /// Re-checks the witness with the independent verifier.
    pub fn verify_witness(&self, g: &PlaneGraph) -> Result<Vec<Violation>, ColoringError> {
        match &self.witness {
            Some(w) => self.problem.verify(g, w),
            None => Ok(Vec::new()),
        }
    }
}

/// Outcome of [`probe_colors`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeOutcome {
    Feasible(Vec<u32>),
    /// Exhaustively refuted.
    Infeasible,
}

fn check_preconditions(g: &PlaneGraph, problem: Problem, cfg: &SearchConfig) -> Result<bool, SolveError> {
    cfg.validate()?;
    g.require_sphere()?;
    let profile = g.connectivity_profile();
    let (ok, what) = match problem {
        Problem::FpEdge => (profile.two_edge_connected, "graph has a bridge"),
        Problem::FpVertex => (profile.two_connected, "graph has a cut vertex"),
        Problem::Worm { rainbow, mono } => {
            if rainbow < 2 || mono < 2 {
                return Err(SolveError::InvalidConfig(format!(
                    "facial path lengths must be at least 2, got {rainbow} and {mono}"
                )));
            }
            (true, "")
        }
    };
    if ok {
        Ok(false)
    } else if cfg.extended_semantics {
        Ok(true)
    } else {
        Err(SolveError::PreconditionFailed(format!("{what}; {problem} needs extended semantics")))
    }
}

fn parity_groups(counts: impl Iterator<Item = Vec<(usize, u32)>>) -> Vec<ParityGroup> {
    counts.map(|members| ParityGroup { members }).collect()
}

fn build_model(g: &PlaneGraph, problem: Problem) -> Model {
    let incidence = g.incidence_counts();
    match problem {
        Problem::FpEdge => {
            let pairs: Vec<_> = g.facial_edge_pairs().into_iter().map(|p| p.pair).collect();
            Model {
                n: g.edge_count(),
                infeasible: pairs.iter().any(|(a, b)| a == b),
                distinct: pairs.into_iter().filter(|(a, b)| a != b).collect(),
                groups: parity_groups(
                    incidence.iter().map(|inc| inc.edges.iter().map(|(&e, &c)| (e, c as u32)).collect()),
                ),
                ..Default::default()
            }
        }
        Problem::FpVertex => Model {
            n: g.vertex_count(),
            distinct: g.facial_vertex_paths(2).into_iter().map(|p| (p.vertices[0], p.vertices[1])).collect(),
            groups: parity_groups(
                incidence.iter().map(|inc| inc.vertices.iter().map(|(&v, &c)| (v, c as u32)).collect()),
            ),
            ..Default::default()
        },
        Problem::Worm { rainbow, mono } => Model {
            n: g.vertex_count(),
            rainbow: g.facial_vertex_paths(rainbow).into_iter().map(|p| p.vertices).collect(),
            mono: g.facial_vertex_paths(mono).into_iter().map(|p| p.vertices).collect(),
            ..Default::default()
        },
    }
}

fn run_probe(
    model: &Model,
    colors: usize,
    cfg: &SearchConfig,
    nodes: &AtomicU64,
    stats: &mut SearchStats,
) -> Result<Option<Vec<u32>>, SolveError> {
    let before = nodes.load(Ordering::Relaxed);
    let limits = ProbeLimits { workers: cfg.workers, node_budget: cfg.node_budget };
    let outcome = engine::probe(model, colors as u32, limits, nodes);
    let used = nodes.load(Ordering::Relaxed) - before;
    let witness = match outcome {
        Probe::Feasible(w) => Some(w),
        Probe::Infeasible => None,
        Probe::BudgetExhausted => {
            return Err(SolveError::BudgetExhausted { nodes: nodes.load(Ordering::Relaxed) });
        }
    };
    stats.probes.push(ProbeRecord { colors, feasible: witness.is_some(), nodes: used });
    Ok(witness)
}

fn solve_min(g: &PlaneGraph, problem: Problem, cfg: &SearchConfig) -> Result<SolveResult, SolveError> {
    let extended = check_preconditions(g, problem, cfg)?;
    let start = Instant::now();
    let model = build_model(g, problem);
    let nodes = AtomicU64::new(0);
    let mut stats = SearchStats::default();
    let limit = cfg.color_cap.unwrap_or(model.n).min(model.n);
    let mut found = None;
    for k in 1..=limit {
        if let Some(w) = run_probe(&model, k, cfg, &nodes, &mut stats)? {
            found = Some((k, w));
            break;
        }
    }
    stats.nodes = nodes.load(Ordering::Relaxed);
    stats.elapsed = start.elapsed();
    let (status, witness) = match found {
        Some((k, w)) => (SolveStatus::Optimal(k), Some(w)),
        None if limit < model.n => (SolveStatus::UnsatUnderCap(limit), None),
        None => (SolveStatus::Unsat, None),
    };
    Ok(SolveResult { problem, status, witness, stats, config: *cfg, extended_semantics: extended })
}

/// Minimum number of colors in a facial-parity edge-coloring.
///
/// Feasibility is monotone in the number of colors, so counts are probed
/// upwards from 1; each refuted count is an exhaustive search.
pub fn solve_fp_edge_min(g: &PlaneGraph, cfg: &SearchConfig) -> Result<SolveResult, SolveError> {
    solve_min(g, Problem::FpEdge, cfg)
}

/// Minimum number of colors in a facial-parity vertex-coloring.
pub fn solve_fp_vertex_min(g: &PlaneGraph, cfg: &SearchConfig) -> Result<SolveResult, SolveError> {
    solve_min(g, Problem::FpVertex, cfg)
}

/// Decides whether a facial (P_rainbow, P_mono)-WORM coloring exists.
pub fn solve_worm(g: &PlaneGraph, rainbow: usize, mono: usize, cfg: &SearchConfig) -> Result<SolveResult, SolveError> {
    let problem = Problem::Worm { rainbow, mono };
    let extended = check_preconditions(g, problem, cfg)?;
    let start = Instant::now();
    let model = build_model(g, problem);
    let nodes = AtomicU64::new(0);
    let mut stats = SearchStats::default();
    let cap = cfg.color_cap.unwrap_or(model.n).min(model.n);
    let witness = run_probe(&model, cap, cfg, &nodes, &mut stats)?;
    stats.nodes = nodes.load(Ordering::Relaxed);
    stats.elapsed = start.elapsed();
    let status = match (&witness, cap < model.n) {
        (Some(_), _) => SolveStatus::Sat,
        (None, true) => SolveStatus::UnsatUnderCap(cap),
        (None, false) => SolveStatus::Unsat,
    };
    Ok(SolveResult { problem, status, witness, stats, config: *cfg, extended_semantics: extended })
}

/// Runs a single feasibility probe with exactly `colors` colors available.
pub fn probe_colors(
    g: &PlaneGraph,
    problem: Problem,
    colors: usize,
    cfg: &SearchConfig,
) -> Result<ProbeOutcome, SolveError> {
    check_preconditions(g, problem, cfg)?;
    let model = build_model(g, problem);
    let nodes = AtomicU64::new(0);
    let mut stats = SearchStats::default();
    Ok(match run_probe(&model, colors, cfg, &nodes, &mut stats)? {
        Some(w) => ProbeOutcome::Feasible(w),
        None => ProbeOutcome::Infeasible,
    })
}
