use facolor_core::constructions::{gadget_variants, worm_gadget, GadgetBlueprint, WORM_GADGET_VARIANT};
use facolor_core::solver::{brute_force_worm, solve_worm};
use facolor_core::{PlaneGraph, SearchConfig, SolveStatus};

fn ids(g: &PlaneGraph, labels: &[&str]) -> Vec<usize> {
    labels.iter().map(|l| g.vertex_by_label(l).unwrap_or_else(|| panic!("no {l}"))).collect()
}

fn is_facial_triple(g: &PlaneGraph, labels: [&str; 3]) -> bool {
    let t = ids(g, &labels);
    let rev: Vec<usize> = t.iter().rev().copied().collect();
    g.facial_vertex_paths(3).iter().any(|p| p.vertices == t || p.vertices == rev)
}

#[test]
fn gadget_counts() {
    let g = worm_gadget(18).unwrap();
    assert_eq!(g.vertex_count(), 18);
    assert_eq!(g.edge_count(), 30);
    assert_eq!(g.face_count(), 14);
    assert_eq!(g.max_degree(), 4);
    assert_eq!(g.euler_characteristic(), 2);
    assert!(g.connectivity_profile().two_connected);
}

#[test]
fn quoted_faces_exist() {
    let g = worm_gadget(18).unwrap();
    assert!(g.find_face(&ids(&g, &["v1", "v7", "v13"])).is_some());
    assert!(g.find_face(&ids(&g, &["v1", "v2", "v6", "v7"])).is_some());
    assert!(g.find_face(&ids(&g, &["v2", "v3", "v4"])).is_some());
    assert!(g.find_face(&ids(&g, &["v2", "v4", "v5"])).is_none());
}

#[test]
fn quoted_triples_are_facial() {
    let g = worm_gadget(18).unwrap();
    assert!(is_facial_triple(&g, ["v3", "v4", "v5"]));
    assert!(is_facial_triple(&g, ["v4", "v5", "v6"]));
    // Needed for the step that rules out c2 on v3, v4 and v5.
    assert!(is_facial_triple(&g, ["v2", "v3", "v6"]) || is_facial_triple(&g, ["v6", "v2", "v4"]));
}

#[test]
fn padded_gadgets_stay_unsat() {
    for n in 18..=23 {
        let g = worm_gadget(n).unwrap();
        assert_eq!(g.vertex_count(), n);
        assert_eq!(g.max_degree(), 4, "n = {n}");
        let r = solve_worm(&g, 3, 3, &SearchConfig::default()).unwrap();
        assert_eq!(r.status, SolveStatus::Unsat, "n = {n}");
    }
    assert!(worm_gadget(17).is_err());
}

#[test]
fn canonical_blueprint_is_the_certified_variant() {
    assert_eq!(GadgetBlueprint::worm().name, WORM_GADGET_VARIANT);
    assert!(gadget_variants().iter().any(|b| b.name == WORM_GADGET_VARIANT));
}

#[test]
fn worm_oracle_agrees_on_small_graphs() {
    use facolor_core::constructions::{cycle, theta};
    use facolor_core::ThetaSpec;
    let graphs = [
        cycle(4).unwrap(),
        cycle(7).unwrap(),
        theta(ThetaSpec::new(2, 2, 2)).unwrap(),
        theta(ThetaSpec::new(2, 3, 4)).unwrap(),
    ];
    for g in &graphs {
        for (k, l) in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 3)] {
            let r = solve_worm(g, k, l, &SearchConfig::default()).unwrap();
            let brute = brute_force_worm(g, k, l).unwrap();
            assert_eq!(r.status == SolveStatus::Sat, brute.is_some(), "({k},{l})");
        }
    }
}
