//! Plane graphs stored as combinatorial maps.
//!
//! A map is a set of darts (half-edges) with two permutations: `twin`, a
//! fixed-point-free involution pairing the two darts of an edge, and
//! `sigma`, which sends a dart to the next dart counterclockwise around its
//! origin vertex. Faces are the orbits of `phi(d) = sigma(twin(d))`.
//!
//! Ids are canonical: edge `e` is the `e`-th twin pair ordered by its
//! smaller dart, and face walks start at their smallest dart and are sorted
//! by it. Everything downstream depends on this order being stable.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no darts")]
    EmptyGraph,
    #[error("dart {dart} is out of range (dart count {count})")]
    DartOutOfRange { dart: usize, count: usize },
    #[error("dart {dart} appears more than once in the rotation lists")]
    DuplicateDart { dart: usize },
    #[error("dart {dart} is missing from the rotation lists")]
    DanglingDart { dart: usize },
    #[error("dart {dart} is paired with itself")]
    FixedPointTwin { dart: usize },
    #[error("twin is not an involution at dart {dart}")]
    NotInvolution { dart: usize },
    #[error("dart {dart} forms a loop")]
    Loop { dart: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("embedding is not a sphere embedding (V - E + F = {euler})")]
    NonSphere { euler: i64 },
    #[error("maximum degree {degree} exceeds the supported bound {bound}")]
    DegreeTooHigh { degree: usize, bound: usize },
    #[error("invalid face list: {0}")]
    InvalidFaceList(String),
    #[error("vertex {vertex} out of range")]
    VertexOutOfRange { vertex: usize },
    #[error("label count {got} does not match vertex count {expected}")]
    LabelCount { expected: usize, got: usize },
}

/// One face's closed boundary walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalk {
    pub id: usize,
    pub darts: Vec<usize>,
    /// Origin of each dart in `darts`.
    pub vertices: Vec<usize>,
    /// Edge of each dart in `darts`.
    pub edges: Vec<usize>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

/// A facial path: `vertices` are consecutive along the walk of `face` and
/// pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FacialPath {
    pub face: usize,
    pub vertices: Vec<usize>,
}

/// Two edges consecutive on the walk of `face`, stored with `pair.0 <= pair.1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FacialEdgePair {
    pub face: usize,
    pub pair: (usize, usize),
}

/// Walk appearance counts for a single face.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FaceIncidence {
    pub edges: BTreeMap<usize, usize>,
    pub vertices: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectivityProfile {
    pub connected: bool,
    pub two_edge_connected: bool,
    pub two_connected: bool,
    pub max_degree: usize,
}

/// Result of [`PlaneGraph::line_graph`]. Vertex `vertex_of_edge[e]` of
/// `graph` stands for edge `e` of the host.
#[derive(Debug, Clone)]
pub struct LineGraph {
    pub graph: PlaneGraph,
    pub vertex_of_edge: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct PlaneGraph {
    rotations: Vec<Vec<usize>>,
    twin: Vec<usize>,
    origin: Vec<usize>,
    sigma: Vec<usize>,
    edge_of_dart: Vec<usize>,
    edge_darts: Vec<(usize, usize)>,
    faces: Vec<FaceWalk>,
    face_of_dart: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl PartialEq for PlaneGraph {
    fn eq(&self, other: &Self) -> bool {
        self.rotations == other.rotations && self.twin == other.twin && self.labels == other.labels
    }
}

impl Eq for PlaneGraph {}

impl PlaneGraph {
    /// Validates a rotation system and computes its faces.
    ///
    /// `rotations[v]` lists the darts leaving `v` in counterclockwise order,
    /// `twin[d]` is the opposite dart of `d`. Inputs whose Euler
    /// characteristic is not 2 are accepted; see [`PlaneGraph::is_sphere`].
    pub fn new(rotations: Vec<Vec<usize>>, twin: Vec<usize>) -> Result<Self, GraphError> {
        let dart_count = twin.len();
        if dart_count == 0 {
            return Err(GraphError::EmptyGraph);
        }
        for (d, &t) in twin.iter().enumerate() {
            if t >= dart_count {
                return Err(GraphError::DartOutOfRange { dart: t, count: dart_count });
            }
            if t == d {
                return Err(GraphError::FixedPointTwin { dart: d });
            }
            if twin[t] != d {
                return Err(GraphError::NotInvolution { dart: d });
            }
        }

        let mut origin = vec![usize::MAX; dart_count];
        let mut sigma = vec![usize::MAX; dart_count];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= dart_count {
                    return Err(GraphError::DartOutOfRange { dart: d, count: dart_count });
                }
                if origin[d] != usize::MAX {
                    return Err(GraphError::DuplicateDart { dart: d });
                }
                origin[d] = v;
                sigma[d] = rot[(i + 1) % rot.len()];
            }
        }
        if let Some(d) = origin.iter().position(|&o| o == usize::MAX) {
            return Err(GraphError::DanglingDart { dart: d });
        }
        for d in 0..dart_count {
            if origin[d] == origin[twin[d]] {
                return Err(GraphError::Loop { dart: d });
            }
        }

        // Connectivity over vertices; isolated vertices disconnect the map.
        let vertex_count = rotations.len();
        let mut seen = vec![false; vertex_count];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &d in &rotations[v] {
                let w = origin[twin[d]];
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(GraphError::Disconnected);
        }

        let mut edge_of_dart = vec![usize::MAX; dart_count];
        let mut edge_darts = Vec::with_capacity(dart_count / 2);
        for d in 0..dart_count {
            if edge_of_dart[d] == usize::MAX {
                let e = edge_darts.len();
                edge_of_dart[d] = e;
                edge_of_dart[twin[d]] = e;
                edge_darts.push((d, twin[d]));
            }
        }

        let mut face_of_dart = vec![usize::MAX; dart_count];
        let mut faces = Vec::new();
        for start in 0..dart_count {
            if face_of_dart[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                face_of_dart[d] = id;
                darts.push(d);
                d = sigma[twin[d]];
                if d == start {
                    break;
                }
            }
            let vertices = darts.iter().map(|&d| origin[d]).collect();
            let edges = darts.iter().map(|&d| edge_of_dart[d]).collect();
            faces.push(FaceWalk { id, darts, vertices, edges });
        }

        Ok(PlaneGraph { rotations, twin, origin, sigma, edge_of_dart, edge_darts, faces, face_of_dart, labels: None })
    }

    /// Builds a simple plane graph from its face boundary cycles.
    ///
    /// Faces may be listed in either orientation; they are reoriented
    /// consistently starting from the first face. Edge `e` is the `e`-th
    /// vertex pair in sorted order, with dart `2e` leaving the smaller
    /// endpoint.
    pub fn from_face_cycles(vertex_count: usize, cycles: &[Vec<usize>]) -> Result<Self, GraphError> {
        let bad = |msg: String| GraphError::InvalidFaceList(msg);
        if cycles.is_empty() {
            return Err(GraphError::EmptyGraph);
        }
        let mut edge_faces: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (f, cycle) in cycles.iter().enumerate() {
            if cycle.len() < 3 {
                return Err(bad(format!("face {f} has fewer than 3 vertices")));
            }
            for i in 0..cycle.len() {
                let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                if a >= vertex_count || b >= vertex_count {
                    return Err(GraphError::VertexOutOfRange { vertex: a.max(b) });
                }
                if a == b {
                    return Err(bad(format!("face {f} repeats vertex {a} consecutively")));
                }
                edge_faces.entry((a.min(b), a.max(b))).or_default().push(f);
            }
        }
        for (&(a, b), fs) in &edge_faces {
            if fs.len() != 2 {
                return Err(bad(format!("edge {a}-{b} lies on {} face sides", fs.len())));
            }
        }

        // Orient faces so every edge is traversed once in each direction.
        let mut oriented: Vec<Option<Vec<usize>>> = vec![None; cycles.len()];
        oriented[0] = Some(cycles[0].clone());
        let mut queue = VecDeque::from([0usize]);
        let directed =
            |c: &[usize]| -> Vec<(usize, usize)> { (0..c.len()).map(|i| (c[i], c[(i + 1) % c.len()])).collect() };
        while let Some(f) = queue.pop_front() {
            let walk = oriented[f].clone().expect("queued faces are oriented");
            for (a, b) in directed(&walk) {
                for &g in &edge_faces[&(a.min(b), a.max(b))] {
                    if g == f {
                        continue;
                    }
                    match &oriented[g] {
                        Some(other) => {
                            if directed(other).contains(&(a, b)) {
                                return Err(bad(format!("faces {f} and {g} cannot be oriented consistently")));
                            }
                        }
                        None => {
                            let mut c = cycles[g].clone();
                            if directed(&c).contains(&(a, b)) {
                                c.reverse();
                            }
                            oriented[g] = Some(c);
                            queue.push_back(g);
                        }
                    }
                }
            }
        }
        if oriented.iter().any(Option::is_none) {
            return Err(bad("face list is not connected".into()));
        }

        let edge_index: HashMap<(usize, usize), usize> = edge_faces.keys().enumerate().map(|(e, &k)| (k, e)).collect();
        let dart_of = |a: usize, b: usize| {
            let e = edge_index[&(a.min(b), a.max(b))];
            if a < b {
                2 * e
            } else {
                2 * e + 1
            }
        };
        let dart_count = 2 * edge_index.len();
        let mut sigma = vec![usize::MAX; dart_count];
        let mut origin = vec![usize::MAX; dart_count];
        for walk in oriented.iter().flatten() {
            let m = walk.len();
            for i in 0..m {
                let (prev, here, next) = (walk[i], walk[(i + 1) % m], walk[(i + 2) % m]);
                let from = dart_of(here, prev);
                if sigma[from] != usize::MAX {
                    return Err(bad(format!("corner at vertex {here} listed twice")));
                }
                sigma[from] = dart_of(here, next);
                origin[from] = here;
            }
        }
        let mut rotations = vec![Vec::new(); vertex_count];
        let mut placed = vec![false; dart_count];
        for d in 0..dart_count {
            if placed[d] {
                continue;
            }
            let v = origin[d];
            if !rotations[v].is_empty() {
                return Err(bad(format!("vertex {v} is pinched (its corners form several cycles)")));
            }
            let mut x = d;
            loop {
                placed[x] = true;
                rotations[v].push(x);
                x = sigma[x];
                if x == d {
                    break;
                }
            }
        }
        let twin = (0..dart_count).map(|d| d ^ 1).collect();
        PlaneGraph::new(rotations, twin)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.vertex_count() {
            return Err(GraphError::LabelCount { expected: self.vertex_count(), got: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Vertex id for a label, if the graph is labeled.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn vertex_label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_darts.len()
    }

    pub fn dart_count(&self) -> usize {
        self.twin.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn twins(&self) -> &[usize] {
        &self.twin
    }

    pub fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }

    pub fn origin(&self, d: usize) -> usize {
        self.origin[d]
    }

    pub fn sigma(&self, d: usize) -> usize {
        self.sigma[d]
    }

    pub fn phi(&self, d: usize) -> usize {
        self.sigma[self.twin[d]]
    }

    pub fn edge_of_dart(&self, d: usize) -> usize {
        self.edge_of_dart[d]
    }

    pub fn face_of_dart(&self, d: usize) -> usize {
        self.face_of_dart[d]
    }

    /// Endpoints of edge `e`, origin of its smaller dart first.
    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        let (d, t) = self.edge_darts[e];
        (self.origin[d], self.origin[t])
    }

    pub fn edge_darts(&self, e: usize) -> (usize, usize) {
        self.edge_darts[e]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.rotations.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Orientable genus of the map.
    pub fn genus(&self) -> i64 {
        (2 - self.euler_characteristic()) / 2
    }

    pub fn is_sphere(&self) -> bool {
        self.euler_characteristic() == 2
    }

    pub fn require_sphere(&self) -> Result<(), GraphError> {
        if self.is_sphere() {
            Ok(())
        } else {
            Err(GraphError::NonSphere { euler: self.euler_characteristic() })
        }
    }

    pub fn faces(&self) -> &[FaceWalk] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &FaceWalk {
        &self.faces[id]
    }

    /// Finds a face whose walk is the given cyclic vertex sequence, read in
    /// either direction.
    pub fn find_face(&self, vertices: &[usize]) -> Option<usize> {
        let n = vertices.len();
        self.faces
            .iter()
            .find(|f| {
                f.vertices.len() == n
                    && (0..n).any(|s| {
                        (0..n).all(|i| f.vertices[(s + i) % n] == vertices[i])
                            || (0..n).all(|i| f.vertices[(s + n - i) % n] == vertices[i])
                    })
            })
            .map(|f| f.id)
    }

    /// All windows of `k` consecutive, pairwise distinct vertices along each
    /// face walk. A window and its reverse count once per face.
    pub fn facial_vertex_paths(&self, k: usize) -> Vec<FacialPath> {
        assert!(k >= 2, "facial paths need at least two vertices");
        let mut out = Vec::new();
        for face in &self.faces {
            let m = face.vertices.len();
            if m < k {
                continue;
            }
            let mut seen = HashSet::new();
            for start in 0..m {
                let window: Vec<usize> = (0..k).map(|i| face.vertices[(start + i) % m]).collect();
                let distinct: HashSet<_> = window.iter().collect();
                if distinct.len() != k {
                    continue;
                }
                let reversed: Vec<usize> = window.iter().rev().copied().collect();
                let key = if reversed < window { reversed } else { window.clone() };
                if seen.insert(key) {
                    out.push(FacialPath { face: face.id, vertices: window });
                }
            }
        }
        out
    }

    /// Pairs of edges consecutive on a face walk, once per face. A bridge
    /// reached at a degree-1 vertex yields the pair `(e, e)`.
    pub fn facial_edge_pairs(&self) -> Vec<FacialEdgePair> {
        let mut out = Vec::new();
        for face in &self.faces {
            let m = face.edges.len();
            let mut seen = HashSet::new();
            for i in 0..m {
                let (a, b) = (face.edges[i], face.edges[(i + 1) % m]);
                let pair = (a.min(b), a.max(b));
                if seen.insert(pair) {
                    out.push(FacialEdgePair { face: face.id, pair });
                }
            }
        }
        out
    }

    pub fn incidence_counts(&self) -> Vec<FaceIncidence> {
        self.faces
            .iter()
            .map(|face| {
                let mut inc = FaceIncidence::default();
                for (&e, &v) in face.edges.iter().zip(&face.vertices) {
                    *inc.edges.entry(e).or_default() += 1;
                    *inc.vertices.entry(v).or_default() += 1;
                }
                inc
            })
            .collect()
    }

    fn neighbors_without(&self, v: usize, skip_edge: Option<usize>) -> impl Iterator<Item = usize> + '_ {
        self.rotations[v]
            .iter()
            .filter(move |&&d| Some(self.edge_of_dart[d]) != skip_edge)
            .map(|&d| self.origin[self.twin[d]])
    }

    fn connected_without(&self, skip_vertex: Option<usize>, skip_edge: Option<usize>) -> bool {
        let n = self.vertex_count();
        let Some(start) = (0..n).find(|&v| Some(v) != skip_vertex) else {
            return true;
        };
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut count = 1;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in self.neighbors_without(v, skip_edge) {
                if Some(w) != skip_vertex && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n - usize::from(skip_vertex.is_some())
    }

    pub fn bridges(&self) -> Vec<usize> {
        (0..self.edge_count()).filter(|&e| !self.connected_without(None, Some(e))).collect()
    }

    pub fn cut_vertices(&self) -> Vec<usize> {
        if self.vertex_count() < 3 {
            return Vec::new();
        }
        (0..self.vertex_count()).filter(|&v| !self.connected_without(Some(v), None)).collect()
    }

    pub fn connectivity_profile(&self) -> ConnectivityProfile {
        let two_edge_connected = self.bridges().is_empty();
        let two_connected = match self.vertex_count() {
            0 | 1 => false,
            2 => self.edge_count() >= 2,
            _ => self.cut_vertices().is_empty(),
        };
        ConnectivityProfile { connected: true, two_edge_connected, two_connected, max_degree: self.max_degree() }
    }

    /// The line graph with the embedding inherited from `self`.
    ///
    /// Edges consecutive in a vertex rotation become adjacent. Around the
    /// new vertex for edge `e` the neighbours are taken in the order the
    /// medial graph visits them, with the double connection through a
    /// degree-2 vertex merged into a single edge.
    pub fn line_graph(&self) -> Result<LineGraph, GraphError> {
        let degree = self.max_degree();
        if degree > 3 {
            return Err(GraphError::DegreeTooHigh { degree, bound: 3 });
        }
        // corner_edge[d] = line edge joining edge(d) and edge(sigma(d)).
        let mut corner_edge = vec![usize::MAX; self.dart_count()];
        // For each line edge, the line dart leaving each endpoint.
        let mut line_darts: Vec<[(usize, usize); 2]> = Vec::new();
        for rot in &self.rotations {
            let pairs = match rot.len() {
                0 | 1 => 0,
                2 => 1,
                m => m,
            };
            for i in 0..pairs {
                let (a, b) = (rot[i], rot[(i + 1) % rot.len()]);
                let id = line_darts.len();
                corner_edge[a] = id;
                if rot.len() == 2 {
                    corner_edge[b] = id;
                }
                line_darts.push([(self.edge_of_dart[a], 2 * id), (self.edge_of_dart[b], 2 * id + 1)]);
            }
        }
        let sigma_inv = {
            let mut inv = vec![0; self.dart_count()];
            for (d, &s) in self.sigma.iter().enumerate() {
                inv[s] = d;
            }
            inv
        };
        let corner_before = |d: usize| {
            let p = sigma_inv[d];
            if p == d {
                usize::MAX
            } else {
                corner_edge[p]
            }
        };
        let corner_after = |d: usize| if self.sigma[d] == d { usize::MAX } else { corner_edge[d] };

        let mut rotations = vec![Vec::new(); self.edge_count()];
        for (e, rotation) in rotations.iter_mut().enumerate() {
            let (d, t) = self.edge_darts[e];
            let around = [corner_before(t), corner_after(d), corner_before(d), corner_after(t)];
            let mut ids: Vec<usize> = Vec::with_capacity(4);
            for id in around {
                if id != usize::MAX && ids.last() != Some(&id) {
                    ids.push(id);
                }
            }
            if ids.len() > 1 && ids.first() == ids.last() {
                ids.pop();
            }
            for id in ids {
                let [(x, dx), (y, dy)] = line_darts[id];
                let dart = if x == e {
                    dx
                } else if y == e {
                    dy
                } else {
                    unreachable!("corner not at edge")
                };
                rotation.push(dart);
            }
        }
        let twin = (0..2 * line_darts.len()).map(|d| d ^ 1).collect();
        let graph = PlaneGraph::new(rotations, twin)?;
        Ok(LineGraph { graph, vertex_of_edge: (0..self.edge_count()).collect() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> PlaneGraph {
        PlaneGraph::new(vec![vec![0, 5], vec![2, 1], vec![4, 3]], vec![1, 0, 3, 2, 5, 4]).unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let g = triangle();
        assert_eq!(g.face_count(), 2);
        assert!(g.faces().iter().all(|f| f.len() == 3));
        assert!(g.is_sphere());
        assert_eq!(g.genus(), 0);
    }

    #[test]
    fn rejects_fixed_point_twin() {
        let err = PlaneGraph::new(vec![vec![0, 1]], vec![0, 1]).unwrap_err();
        assert_eq!(err, GraphError::FixedPointTwin { dart: 0 });
    }

    #[test]
    fn rejects_dangling_and_duplicate_darts() {
        let err = PlaneGraph::new(vec![vec![0], vec![]], vec![1, 0]).unwrap_err();
        assert_eq!(err, GraphError::DanglingDart { dart: 1 });
        let err = PlaneGraph::new(vec![vec![0, 1], vec![1]], vec![1, 0]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateDart { dart: 1 });
    }

    #[test]
    fn rejects_loops_and_disconnected_maps() {
        let err = PlaneGraph::new(vec![vec![0, 1]], vec![1, 0]).unwrap_err();
        assert_eq!(err, GraphError::Loop { dart: 0 });
        let err = PlaneGraph::new(vec![vec![0], vec![1], vec![2], vec![3]], vec![1, 0, 3, 2]).unwrap_err();
        assert_eq!(err, GraphError::Disconnected);
    }

    #[test]
    fn k5_rotation_system_is_not_spherical() {
        // Darts of edge (a,b), a<b: 2e leaves a. Rotations list neighbours in
        // increasing order, which is one of the many non-planar embeddings.
        let mut pairs = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                pairs.push((a, b));
            }
        }
        let mut rotations = vec![Vec::new(); 5];
        for (e, &(a, b)) in pairs.iter().enumerate() {
            rotations[a].push(2 * e);
            rotations[b].push(2 * e + 1);
        }
        let twin = (0..20).map(|d| d ^ 1).collect();
        let g = PlaneGraph::new(rotations, twin).unwrap();
        let euler = g.euler_characteristic();
        assert_ne!(euler, 2);
        assert_eq!(g.require_sphere(), Err(GraphError::NonSphere { euler }));
    }

    #[test]
    fn face_walks_are_canonical() {
        let g = triangle();
        for (i, f) in g.faces().iter().enumerate() {
            assert_eq!(f.id, i);
            assert_eq!(f.darts[0], *f.darts.iter().min().unwrap());
            for w in 0..f.len() {
                assert_eq!(g.phi(f.darts[w]), f.darts[(w + 1) % f.len()]);
            }
        }
        assert!(g.faces().windows(2).all(|w| w[0].darts[0] < w[1].darts[0]));
    }

    #[test]
    fn triangle_facial_paths() {
        let g = triangle();
        assert_eq!(g.facial_vertex_paths(3).len(), 6);
        assert_eq!(g.facial_vertex_paths(2).len(), 6);
        assert!(g.facial_vertex_paths(4).is_empty());
    }

    #[test]
    fn pendant_edge_pairs_and_windows() {
        // Path a - u: a single edge. Its one face walks the edge both ways.
        let g = PlaneGraph::new(vec![vec![0], vec![1]], vec![1, 0]).unwrap();
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.facial_edge_pairs(), vec![FacialEdgePair { face: 0, pair: (0, 0) }]);
        assert!(g.facial_vertex_paths(3).is_empty());
        assert_eq!(g.facial_vertex_paths(2).len(), 1);
        let p = g.connectivity_profile();
        assert!(!p.two_edge_connected);
        assert_eq!(g.bridges(), vec![0]);
    }

    #[test]
    fn from_face_cycles_orients_faces() {
        // Tetrahedron with arbitrary face orientations.
        let g = PlaneGraph::from_face_cycles(4, &[vec![0, 1, 2], vec![0, 1, 3], vec![1, 2, 3], vec![0, 2, 3]]).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.face_count(), 4);
        assert!(g.is_sphere());
        assert!(g.find_face(&[2, 1, 0]).is_some());
        assert!(g.find_face(&[0, 1, 2, 3]).is_none());
    }

    #[test]
    fn from_face_cycles_rejects_open_edges() {
        let err = PlaneGraph::from_face_cycles(4, &[vec![0, 1, 2], vec![0, 1, 3]]).unwrap_err();
        assert!(matches!(err, GraphError::InvalidFaceList(_)));
    }

    #[test]
    fn line_graph_rejects_degree_four() {
        let g = PlaneGraph::from_face_cycles(
            5,
            &[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4], vec![0, 4, 1], vec![1, 2, 3, 4]],
        )
        .unwrap();
        assert_eq!(g.max_degree(), 4);
        assert!(matches!(g.line_graph(), Err(GraphError::DegreeTooHigh { degree: 4, bound: 3 })));
    }

    #[test]
    fn line_graph_of_k4_is_octahedron() {
        let g = PlaneGraph::from_face_cycles(4, &[vec![0, 1, 2], vec![0, 1, 3], vec![1, 2, 3], vec![0, 2, 3]]).unwrap();
        let lg = g.line_graph().unwrap().graph;
        assert_eq!(lg.vertex_count(), 6);
        assert_eq!(lg.edge_count(), 12);
        assert_eq!(lg.face_count(), 8);
        assert!(lg.is_sphere());
        assert!(lg.faces().iter().all(|f| f.len() == 3));
    }
}
