//! Named solver workloads shared by the criterion benchmarks.

use facolor_core::constructions::{bouquet_two_c5, theta, worm_gadget};
use facolor_core::solver::{solve_fp_edge_min, solve_fp_vertex_min, solve_worm};
use facolor_core::{PlaneGraph, Problem, SearchConfig, SolveError, SolveResult, ThetaSpec};

pub struct Workload {
    pub name: &'static str,
    pub graph: PlaneGraph,
    pub problem: Problem,
}

impl Workload {
    pub fn run(&self, cfg: &SearchConfig) -> Result<SolveResult, SolveError> {
        match self.problem {
            Problem::FpEdge => solve_fp_edge_min(&self.graph, cfg),
            Problem::FpVertex => solve_fp_vertex_min(&self.graph, cfg),
            Problem::Worm { rainbow, mono } => solve_worm(&self.graph, rainbow, mono, cfg),
        }
    }
}

fn theta_graph(i: usize, j: usize, k: usize) -> PlaneGraph {
    theta(ThetaSpec::new(i, j, k)).expect("valid lengths")
}

/// The headline instances, each small enough to time repeatedly.
pub fn workloads() -> Vec<Workload> {
    let line = theta_graph(4, 4, 4).line_graph().expect("theta has max degree 3").graph;
    vec![
        Workload { name: "fp-edge/theta-4-4-4", graph: theta_graph(4, 4, 4), problem: Problem::FpEdge },
        Workload { name: "fp-edge/theta-3-5-6", graph: theta_graph(3, 5, 6), problem: Problem::FpEdge },
        Workload { name: "fp-edge/bouquet-c5", graph: bouquet_two_c5(), problem: Problem::FpEdge },
        Workload { name: "fp-vertex/line-theta-4-4-4", graph: line, problem: Problem::FpVertex },
        Workload {
            name: "worm/gadget-18",
            graph: worm_gadget(18).expect("n >= 18"),
            problem: Problem::Worm { rainbow: 3, mono: 3 },
        },
        Workload {
            name: "worm/gadget-21",
            graph: worm_gadget(21).expect("n >= 18"),
            problem: Problem::Worm { rainbow: 3, mono: 3 },
        },
    ]
}

/// Slow enough that worker scaling is visible.
pub fn large_workload() -> Workload {
    Workload { name: "fp-edge/theta-4-4-8", graph: theta_graph(4, 4, 8), problem: Problem::FpEdge }
}
