use std::collections::HashMap;

use proptest::prelude::*;

use facolor_core::colorings::{min_odd_proper_colors, path_parity_coloring, verify_fp_edge, verify_fp_vertex};
use facolor_core::constructions::{cycle, path_graph, theta};
use facolor_core::format::{read_graph, write_graph};
use facolor_core::solver::{brute_force_min, solve_fp_edge_min, solve_fp_vertex_min, solve_worm};
use facolor_core::{EdgeColoring, PlaneGraph, Problem, SearchConfig, ThetaSpec, VertexColoring};

fn small_theta() -> impl Strategy<Value = ThetaSpec> {
    (1usize..=4, 2usize..=4, 2usize..=4).prop_map(|(i, j, k)| ThetaSpec::new(i, j, k))
}

fn relabel(colors: &[u32], shift: u32) -> HashMap<u32, u32> {
    let k = colors.iter().copied().max().unwrap_or(0);
    (1..=k).map(|c| (c, (c - 1 + shift) % k + 1)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn verifiers_ignore_color_names(spec in small_theta(), raw in prop::collection::vec(1u32..=6, 12), shift in 0u32..6) {
        let g = theta(spec).unwrap();
        let edges = EdgeColoring(raw[..g.edge_count()].to_vec());
        let permuted = edges.permuted(&relabel(&edges.0, shift));
        prop_assert_eq!(
            verify_fp_edge(&g, &edges).unwrap().is_empty(),
            verify_fp_edge(&g, &permuted).unwrap().is_empty()
        );
        let vertices = VertexColoring(raw[..g.vertex_count()].to_vec());
        let permuted = vertices.permuted(&relabel(&vertices.0, shift));
        prop_assert_eq!(
            verify_fp_vertex(&g, &vertices).unwrap().is_empty(),
            verify_fp_vertex(&g, &permuted).unwrap().is_empty()
        );
    }

    #[test]
    fn path_colorings_are_proper_and_odd(len in 1usize..=64) {
        let c = path_parity_coloring(len).unwrap();
        prop_assert!(c.windows(2).all(|w| w[0] != w[1]));
        let mut counts: HashMap<u32, usize> = HashMap::new();
        for x in &c {
            *counts.entry(*x).or_default() += 1;
        }
        prop_assert!(counts.values().all(|n| n % 2 == 1));
        prop_assert_eq!(counts.len(), min_odd_proper_colors(len).unwrap());
    }

    #[test]
    fn solver_matches_brute_force_on_small_thetas(spec in small_theta()) {
        let g = theta(spec).unwrap();
        prop_assume!(g.edge_count() <= 9);
        let r = solve_fp_edge_min(&g, &SearchConfig::default()).unwrap();
        prop_assert_eq!(r.k(), brute_force_min(Problem::FpEdge, &g).unwrap());
        let r = solve_fp_vertex_min(&g, &SearchConfig::default()).unwrap();
        prop_assert_eq!(r.k(), brute_force_min(Problem::FpVertex, &g).unwrap());
    }

    #[test]
    fn results_do_not_depend_on_worker_count(spec in small_theta(), workers in 2usize..=6) {
        let g = theta(spec).unwrap();
        let one = SearchConfig::default();
        let many = SearchConfig::default().with_workers(workers);
        let a = solve_fp_edge_min(&g, &one).unwrap();
        let b = solve_fp_edge_min(&g, &many).unwrap();
        prop_assert_eq!(a.status, b.status);
        prop_assert_eq!(a.witness, b.witness);
        let a = solve_worm(&g, 3, 3, &one).unwrap();
        let b = solve_worm(&g, 3, 3, &many).unwrap();
        prop_assert_eq!(a.witness, b.witness);
    }

    #[test]
    fn line_graph_invariants(spec in small_theta()) {
        let g = theta(spec).unwrap();
        let line = g.line_graph().unwrap();
        let l = &line.graph;
        prop_assert_eq!(l.vertex_count(), g.edge_count());
        prop_assert!(l.is_sphere());
        // Simple host: one line edge per pair of edges sharing an endpoint.
        let expected: usize = (0..g.vertex_count()).map(|v| g.degree(v) * (g.degree(v) - 1) / 2).sum();
        prop_assert_eq!(l.edge_count(), expected);
        let mut seen = line.vertex_of_edge.clone();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..g.edge_count()).collect::<Vec<_>>());
    }

    #[test]
    fn two_vertex_windows_cover_every_face_edge(spec in small_theta()) {
        let g = theta(spec).unwrap();
        let windows = g.facial_vertex_paths(2);
        // On a 2-connected graph every face walk is a cycle, so each edge
        // is a window once per side.
        prop_assert_eq!(windows.len(), 2 * g.edge_count());
        for w in &windows {
            let (a, b) = (w.vertices[0], w.vertices[1]);
            prop_assert!(g.faces()[w.face].vertices.contains(&a) && g.faces()[w.face].vertices.contains(&b));
        }
    }

    #[test]
    fn documents_round_trip(spec in small_theta()) {
        let g = theta(spec).unwrap();
        let text = write_graph(&g);
        let back: PlaneGraph = read_graph(&text).unwrap();
        prop_assert_eq!(write_graph(&back), text);
        prop_assert_eq!(back.faces(), g.faces());
    }
}

#[test]
fn cycles_match_brute_force() {
    for n in 3..=9 {
        let g = cycle(n).unwrap();
        for problem in [Problem::FpEdge, Problem::FpVertex] {
            let r = match problem {
                Problem::FpEdge => solve_fp_edge_min(&g, &SearchConfig::default()),
                _ => solve_fp_vertex_min(&g, &SearchConfig::default()),
            }
            .unwrap();
            assert_eq!(r.k(), brute_force_min(problem, &g).unwrap(), "cycle({n}) {problem}");
        }
    }
}

#[test]
fn pendant_paths_need_extended_semantics() {
    let g = path_graph(3).unwrap();
    assert!(solve_fp_edge_min(&g, &SearchConfig::default()).is_err());
    // Both sides of every bridge lie on the one face, so each edge is seen
    // twice: no facial-parity edge-coloring exists.
    let r = solve_fp_edge_min(&g, &SearchConfig::default().extended()).unwrap();
    assert_eq!(r.k(), None);
    assert_eq!(brute_force_min(Problem::FpEdge, &g).unwrap(), None);
}
