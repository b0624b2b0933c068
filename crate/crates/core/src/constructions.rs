//! Generators for the graph families used by the toolkit: Theta graphs,
//! cycles and paths, the bouquet of two pentagons, and the 18-vertex WORM
//! gadget with its pendant-path extensions.

use thiserror::Error;

use crate::planegraph::{GraphError, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid Theta path lengths {0:?}")]
    InvalidLengths([usize; 3]),
    #[error("invalid length {0}")]
    InvalidLength(usize),
    #[error("WORM gadget needs at least 18 vertices, got {0}")]
    TooSmall(usize),
    #[error("anchor vertex {vertex} has degree {degree}; at most 3 allowed")]
    AnchorDegreeTooHigh { vertex: usize, degree: usize },
    #[error("anchor vertex {vertex} is not on face {face}")]
    AnchorNotOnFace { vertex: usize, face: usize },
    #[error("face {0} does not exist")]
    NoSuchFace(usize),
    #[error("unknown gadget variant {0:?}")]
    UnknownVariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Lengths (in edges) of the three paths of a Theta graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThetaSpec {
    pub lengths: [usize; 3],
    /// Permit two or three paths of length 1 (parallel edges).
    pub multigraph: bool,
}

impl ThetaSpec {
    pub fn new(i: usize, j: usize, k: usize) -> Self {
        ThetaSpec { lengths: [i, j, k], multigraph: false }
    }

    pub fn multigraph(mut self) -> Self {
        self.multigraph = true;
        self
    }

    pub fn validate(&self) -> Result<(), ConstructionError> {
        let ones = self.lengths.iter().filter(|&&l| l == 1).count();
        if self.lengths.contains(&0) || (ones > 1 && !self.multigraph) {
            return Err(ConstructionError::InvalidLengths(self.lengths));
        }
        Ok(())
    }

    pub fn edge_count(&self) -> usize {
        self.lengths.iter().sum()
    }
}

/// Theta graph with branch vertices 0 and 1.
///
/// Edges are numbered path by path from vertex 0 towards vertex 1; dart
/// `2e` points towards vertex 1. The rotation at vertex 0 lists the paths
/// as P1, P2, P3 and the rotation at vertex 1 mirrors it, so the faces are
/// bounded by the path pairs (P1,P2), (P2,P3), (P3,P1).
pub fn theta(spec: ThetaSpec) -> Result<PlaneGraph, ConstructionError> {
    spec.validate()?;
    let vertex_count = spec.edge_count() - 1;
    let mut rotations = vec![Vec::new(); vertex_count];
    let mut next_vertex = 2;
    let mut edge = 0;
    let mut first_darts = [0; 3];
    let mut last_darts = [0; 3];
    for (p, &len) in spec.lengths.iter().enumerate() {
        let mut prev = 0;
        first_darts[p] = 2 * edge;
        for step in 0..len {
            let here = if step + 1 == len {
                1
            } else {
                next_vertex += 1;
                next_vertex - 1
            };
            if prev != 0 {
                rotations[prev].push(2 * edge);
            }
            if here != 1 {
                rotations[here].push(2 * edge + 1);
            } else {
                last_darts[p] = 2 * edge + 1;
            }
            prev = here;
            edge += 1;
        }
    }
    rotations[0] = first_darts.to_vec();
    rotations[1] = vec![last_darts[2], last_darts[1], last_darts[0]];
    let twin = (0..2 * edge).map(|d| d ^ 1).collect();
    Ok(PlaneGraph::new(rotations, twin)?)
}

/// Cycle on `n` vertices; edge `i` joins `i` and `i + 1 mod n`.
pub fn cycle(n: usize) -> Result<PlaneGraph, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::InvalidLength(n));
    }
    let rotations = (0..n).map(|i| vec![2 * i, 2 * ((i + n - 1) % n) + 1]).collect();
    let twin = (0..2 * n).map(|d| d ^ 1).collect();
    Ok(PlaneGraph::new(rotations, twin)?)
}

/// Path with `edges` edges on vertices `0..=edges`.
pub fn path_graph(edges: usize) -> Result<PlaneGraph, ConstructionError> {
    if edges < 1 {
        return Err(ConstructionError::InvalidLength(edges));
    }
    let rotations = (0..=edges)
        .map(|v| {
            let mut r = Vec::new();
            if v > 0 {
                r.push(2 * (v - 1) + 1);
            }
            if v < edges {
                r.push(2 * v);
            }
            r
        })
        .collect();
    let twin = (0..2 * edges).map(|d| d ^ 1).collect();
    Ok(PlaneGraph::new(rotations, twin)?)
}

/// Two 5-cycles sharing vertex 0: vertices 0..=4 and 0,5..=8.
pub fn bouquet_two_c5() -> PlaneGraph {
    let mut rotations = vec![Vec::new(); 9];
    let mut edge = 0;
    for cycle in [[0, 1, 2, 3, 4], [0, 5, 6, 7, 8]] {
        for i in 0..5 {
            let (a, b) = (cycle[i], cycle[(i + 1) % 5]);
            rotations[a].push(2 * edge);
            rotations[b].push(2 * edge + 1);
            edge += 1;
        }
    }
    let twin = (0..20).map(|d| d ^ 1).collect();
    PlaneGraph::new(rotations, twin).expect("bouquet rotation system is valid")
}

/// An 18-vertex gadget given as a list of face boundary cycles.
///
/// Vertices are `v1..=v18` (ids `0..18`). Hubs are `v1`, `v7`, `v13`; arm
/// `a` holds `w1..w5 = v(6a+2)..v(6a+6)` and runs from hub `a` to hub
/// `a+1 mod 3`. Every variant has the central triangle on the hubs and,
/// per arm, the quadrilateral `(h_a, w1, w5, h_(a+1))`; the variants differ
/// in how the arm interior and the outer face are divided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetBlueprint {
    pub name: &'static str,
    pub vertex_count: usize,
    pub faces: Vec<Vec<usize>>,
}

/// Name, interior faces over w1..w5 (1-based), and the arm's stretch of the
/// outer face after its first hub.
type ArmLayout = (&'static str, &'static [&'static [usize]], &'static [usize]);

const ARM_LAYOUTS: &[ArmLayout] = &[
    ("outer-chord-w2w5", &[&[1, 2, 3], &[1, 3, 4, 5], &[2, 3, 4, 5]], &[1, 2, 5]),
    ("fan-w3", &[&[1, 2, 3], &[3, 4, 5], &[1, 3, 5]], &[1, 2, 3, 4, 5]),
    ("outer-chord-w1w4", &[&[3, 4, 5], &[1, 2, 3, 5], &[1, 2, 3, 4]], &[1, 4, 5]),
    ("outer-chord-w2w5-split", &[&[1, 2, 3], &[1, 3, 4, 5], &[2, 3, 4], &[2, 4, 5]], &[1, 2, 5]),
    ("fan-w3-outer-w2w4", &[&[1, 2, 3], &[3, 4, 5], &[1, 3, 5], &[2, 3, 4]], &[1, 2, 4, 5]),
    ("inner-quad", &[&[1, 2, 3], &[1, 3, 4, 5]], &[1, 2, 3, 4, 5]),
    ("inner-quad-mirror", &[&[3, 4, 5], &[1, 2, 3, 5]], &[1, 2, 3, 4, 5]),
    ("open-pentagon", &[&[1, 2, 3, 4, 5]], &[1, 2, 3, 4, 5]),
];

/// Name of the blueprint `worm_gadget` is built from.
pub const WORM_GADGET_VARIANT: &str = "outer-chord-w2w5";

impl GadgetBlueprint {
    fn from_layout(name: &'static str, arm: &[&[usize]], outer: &[usize]) -> Self {
        let mut faces = vec![vec![0, 6, 12]];
        let mut outer_face = Vec::new();
        for a in 0..3 {
            let hub = 6 * a;
            let next_hub = (6 * a + 6) % 18;
            let w = |i: usize| 6 * a + i;
            faces.push(vec![hub, w(1), w(5), next_hub]);
            faces.extend(arm.iter().map(|f| f.iter().map(|&i| w(i)).collect()));
            outer_face.push(hub);
            outer_face.extend(outer.iter().map(|&i| w(i)));
        }
        faces.push(outer_face);
        GadgetBlueprint { name, vertex_count: 18, faces }
    }

    pub fn variant(name: &str) -> Result<Self, ConstructionError> {
        ARM_LAYOUTS
            .iter()
            .find(|(n, _, _)| *n == name)
            .map(|&(n, arm, outer)| Self::from_layout(n, arm, outer))
            .ok_or_else(|| ConstructionError::UnknownVariant(name.to_string()))
    }

    /// The blueprint certified to have no facial (P3,P3)-WORM coloring.
    pub fn worm() -> Self {
        Self::variant(WORM_GADGET_VARIANT).expect("default variant exists")
    }

    /// Undirected edges as sorted vertex pairs, in increasing order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self
            .faces
            .iter()
            .flat_map(|f| (0..f.len()).map(move |i| (f[i].min(f[(i + 1) % f.len()]), f[i].max(f[(i + 1) % f.len()]))))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        edges
    }

    pub fn labels(&self) -> Vec<String> {
        (1..=self.vertex_count).map(|i| format!("v{i}")).collect()
    }

    pub fn build(&self) -> Result<PlaneGraph, ConstructionError> {
        let g = PlaneGraph::from_face_cycles(self.vertex_count, &self.faces)?;
        g.require_sphere()?;
        Ok(g.with_labels(self.labels())?)
    }
}

/// The curated family of 3-fold symmetric 18-vertex gadgets.
pub fn gadget_variants() -> Vec<GadgetBlueprint> {
    ARM_LAYOUTS.iter().map(|&(n, arm, outer)| GadgetBlueprint::from_layout(n, arm, outer)).collect()
}

/// Connected plane graph on `n >= 18` vertices with maximum degree 4.
///
/// For `n > 18` a pendant path of `n - 18` vertices hangs from `v9` inside
/// the triangle `(v8, v9, v10)`.
pub fn worm_gadget(n: usize) -> Result<PlaneGraph, ConstructionError> {
    if n < 18 {
        return Err(ConstructionError::TooSmall(n));
    }
    let g = GadgetBlueprint::worm().build()?;
    if n == 18 {
        return Ok(g);
    }
    let face = g.find_face(&[7, 8, 9]).expect("gadget has triangle (v8, v9, v10)");
    attach_pendant_path(&g, face, 8, n - 18)
}

/// Embeds a path of `length` new vertices inside `face`, joined to
/// `anchor` by a bridge. Existing vertex, edge and dart ids are unchanged.
pub fn attach_pendant_path(
    g: &PlaneGraph,
    face: usize,
    anchor: usize,
    length: usize,
) -> Result<PlaneGraph, ConstructionError> {
    if length < 1 {
        return Err(ConstructionError::InvalidLength(length));
    }
    if face >= g.face_count() {
        return Err(ConstructionError::NoSuchFace(face));
    }
    if anchor >= g.vertex_count() {
        return Err(GraphError::VertexOutOfRange { vertex: anchor }.into());
    }
    let degree = g.degree(anchor);
    if degree > 3 {
        return Err(ConstructionError::AnchorDegreeTooHigh { vertex: anchor, degree });
    }
    let walk = g.face(face);
    let pos = walk
        .vertices
        .iter()
        .position(|&v| v == anchor)
        .ok_or(ConstructionError::AnchorNotOnFace { vertex: anchor, face })?;
    // The walk enters the anchor by `arriving` and leaves by
    // sigma(twin(arriving)); the new dart goes into that corner.
    let arriving = walk.darts[(pos + walk.len() - 1) % walk.len()];
    let back = g.twin(arriving);

    let base_darts = g.dart_count();
    let base_vertices = g.vertex_count();
    let mut rotations = g.rotations().to_vec();
    let mut twin = g.twins().to_vec();
    let rot = &mut rotations[anchor];
    let at = rot.iter().position(|&d| d == back).expect("twin of arriving dart leaves the anchor");
    rot.insert(at + 1, base_darts);
    for step in 0..length {
        let (out, inn) = (base_darts + 2 * step, base_darts + 2 * step + 1);
        twin.extend([inn, out]);
        let mut r = vec![inn];
        if step + 1 < length {
            r.push(out + 2);
        }
        rotations.push(r);
    }
    let mut out = PlaneGraph::new(rotations, twin)?;
    if let Some(labels) = g.labels() {
        let mut labels = labels.to_vec();
        labels.extend((1..=length).map(|i| format!("p{i}")));
        out = out.with_labels(labels)?;
    }
    debug_assert_eq!(out.vertex_count(), base_vertices + length);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sizes(g: &PlaneGraph) -> Vec<usize> {
        let mut s: Vec<_> = g.faces().iter().map(|f| f.len()).collect();
        s.sort_unstable();
        s
    }

    #[test]
    fn theta_444() {
        let g = theta(ThetaSpec::new(4, 4, 4)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (11, 12, 3));
        assert_eq!(sizes(&g), vec![8, 8, 8]);
        assert!(g.is_sphere());
    }

    #[test]
    fn theta_222_is_k23() {
        let g = theta(ThetaSpec::new(2, 2, 2)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (5, 6, 3));
        assert_eq!(sizes(&g), vec![4, 4, 4]);
    }

    #[test]
    fn theta_face_sizes_are_pair_sums() {
        for (i, j, k) in [(2, 3, 5), (1, 4, 6), (3, 3, 7)] {
            let g = theta(ThetaSpec::new(i, j, k)).unwrap();
            assert!(g.is_sphere());
            let mut want = vec![i + j, j + k, i + k];
            want.sort_unstable();
            assert_eq!(sizes(&g), want);
        }
    }

    #[test]
    fn theta_parallel_paths_need_multigraph_mode() {
        assert_eq!(theta(ThetaSpec::new(1, 1, 2)).unwrap_err(), ConstructionError::InvalidLengths([1, 1, 2]));
        let g = theta(ThetaSpec::new(1, 1, 2).multigraph()).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (3, 4, 3));
        assert!(theta(ThetaSpec::new(0, 2, 2)).is_err());
    }

    #[test]
    fn cycles_and_paths() {
        assert_eq!(sizes(&cycle(3).unwrap()), vec![3, 3]);
        assert_eq!(sizes(&cycle(6).unwrap()), vec![6, 6]);
        assert!(cycle(2).is_err());
        let p = path_graph(1).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count(), p.face_count()), (2, 1, 1));
        assert!(path_graph(0).is_err());
    }

    #[test]
    fn bouquet() {
        let g = bouquet_two_c5();
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 10));
        assert_eq!(sizes(&g), vec![5, 5, 10]);
        assert_eq!(g.degree(0), 4);
        let p = g.connectivity_profile();
        assert!(p.two_edge_connected && !p.two_connected);
    }

    #[test]
    fn gadget_counts() {
        let g = worm_gadget(18).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (18, 30, 14));
        assert_eq!(g.max_degree(), 4);
        assert_eq!(g.euler_characteristic(), 2);
        assert_eq!(sizes(&g), vec![3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 12]);
    }

    #[test]
    fn gadget_extension() {
        let base = worm_gadget(18).unwrap();
        let g = worm_gadget(19).unwrap();
        assert_eq!(g.vertex_count(), 19);
        assert_eq!(g.degree(8), base.degree(8) + 1);
        assert_eq!(g.max_degree(), 4);
        assert!(g.is_sphere());
        assert_eq!(g.vertex_label(18), "p1");
        for n in 20..24 {
            let g = worm_gadget(n).unwrap();
            assert_eq!(g.vertex_count(), n);
            assert_eq!(g.max_degree(), 4);
        }
        assert_eq!(worm_gadget(17).unwrap_err(), ConstructionError::TooSmall(17));
    }

    #[test]
    fn pendant_changes_one_face() {
        let g = worm_gadget(18).unwrap();
        let face = g.find_face(&[7, 8, 9]).unwrap();
        let h = attach_pendant_path(&g, face, 8, 2).unwrap();
        assert_eq!(h.face_count(), g.face_count());
        let changed: Vec<_> = (0..g.face_count()).filter(|&f| g.face(f) != h.face(f)).collect();
        assert_eq!(changed, vec![face]);
        assert_eq!(h.face(face).len(), 3 + 2 * 2);
        for e in 0..g.edge_count() {
            assert_eq!(g.edge_endpoints(e), h.edge_endpoints(e));
        }
    }

    #[test]
    fn pendant_errors() {
        let g = worm_gadget(18).unwrap();
        let face = g.find_face(&[0, 6, 12]).unwrap();
        assert_eq!(
            attach_pendant_path(&g, face, 0, 1).unwrap_err(),
            ConstructionError::AnchorDegreeTooHigh { vertex: 0, degree: 4 }
        );
        let tri = g.find_face(&[7, 8, 9]).unwrap();
        assert_eq!(
            attach_pendant_path(&g, tri, 2, 1).unwrap_err(),
            ConstructionError::AnchorNotOnFace { vertex: 2, face: tri }
        );
    }

    #[test]
    fn variants_validate() {
        let variants = gadget_variants();
        assert!(variants.len() <= 12);
        assert!(variants.iter().any(|b| b.name == "fan-w3"));
        for b in &variants {
            let g = b.build().unwrap();
            assert_eq!(g.vertex_count(), 18);
            assert!(g.max_degree() <= 4, "{}", b.name);
            assert!(g.is_sphere());
            assert_eq!(g.edge_count(), b.edges().len());
        }
    }
}
