//! Coloring values, the three facial verifiers, and the constructive path
//! colorings used for Theta graphs.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::constructions::{ConstructionError, ThetaSpec};
use crate::planegraph::{GraphError, LineGraph, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring is not total: expected {expected} entries, got {got}")]
    PartialColoring { expected: usize, got: usize },
    #[error("element {0} has no color")]
    Uncolored(usize),
    #[error("path length must be at least 1, got {0}")]
    InvalidLength(usize),
    #[error("facial path length must be at least 2, got {0}")]
    InvalidWindow(usize),
    #[error("coloring does not match the line graph mapping")]
    MappingMismatch,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

macro_rules! coloring_type {
    ($name:ident, $what:literal) => {
        #[doc = concat!("Total assignment of positive colors to the ", $what, " of a graph.")]
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(pub Vec<u32>);

        impl $name {
            pub fn colors(&self) -> &[u32] {
                &self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            /// Number of distinct colors used.
            pub fn color_count(&self) -> usize {
                let mut c = self.0.clone();
                c.sort_unstable();
                c.dedup();
                c.len()
            }

            /// Relabels colors to `1..=t` in order of first appearance.
            pub fn canonical(&self) -> Self {
                $name(canonical_colors(&self.0))
            }

            /// Applies a color relabeling; colors missing from `map` are kept.
            pub fn permuted(&self, map: &HashMap<u32, u32>) -> Self {
                $name(self.0.iter().map(|c| *map.get(c).unwrap_or(c)).collect())
            }

            fn check_total(&self, expected: usize) -> Result<(), ColoringError> {
                if self.0.len() != expected {
                    return Err(ColoringError::PartialColoring { expected, got: self.0.len() });
                }
                match self.0.iter().position(|&c| c == 0) {
                    Some(i) => Err(ColoringError::Uncolored(i)),
                    None => Ok(()),
                }
            }
        }
    };
}

coloring_type!(EdgeColoring, "edges");
coloring_type!(VertexColoring, "vertices");

pub(crate) fn canonical_colors(colors: &[u32]) -> Vec<u32> {
    let mut map = HashMap::new();
    colors
        .iter()
        .map(|&c| {
            let next = map.len() as u32 + 1;
            *map.entry(c).or_insert(next)
        })
        .collect()
}

/// A single failed constraint, precise enough to re-check on its own.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Violation {
    /// Two facially consecutive elements (edges or vertices) share a color.
    FacialProperness {
        face: usize,
        elements: (usize, usize),
        color: u32,
    },
    /// A color appears a positive even number of times on a face.
    FaceParity {
        face: usize,
        color: u32,
        count: usize,
    },
    RainbowPath {
        face: usize,
        vertices: Vec<usize>,
    },
    MonochromaticPath {
        face: usize,
        vertices: Vec<usize>,
        color: u32,
    },
}

impl Violation {
    pub fn face(&self) -> usize {
        match self {
            Violation::FacialProperness { face, .. }
            | Violation::FaceParity { face, .. }
            | Violation::RainbowPath { face, .. }
            | Violation::MonochromaticPath { face, .. } => *face,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FacialProperness { face, elements: (a, b), color } => {
                write!(f, "face {face}: consecutive elements {a} and {b} both have color {color}")
            }
            Violation::FaceParity { face, color, count } => {
                write!(f, "face {face}: color {color} appears {count} times")
            }
            Violation::RainbowPath { face, vertices } => write!(f, "face {face}: rainbow path {vertices:?}"),
            Violation::MonochromaticPath { face, vertices, color } => {
                write!(f, "face {face}: path {vertices:?} is monochromatic in color {color}")
            }
        }
    }
}

fn parity_violations(face: usize, counts: &BTreeMap<usize, usize>, colors: &[u32], out: &mut Vec<Violation>) {
    let mut per_color: BTreeMap<u32, usize> = BTreeMap::new();
    for (&element, &n) in counts {
        *per_color.entry(colors[element]).or_default() += n;
    }
    for (color, count) in per_color {
        if count % 2 == 0 {
            out.push(Violation::FaceParity { face, color, count });
        }
    }
}

/// Checks a facial-parity edge-coloring; an empty result means valid.
pub fn verify_fp_edge(g: &PlaneGraph, c: &EdgeColoring) -> Result<Vec<Violation>, ColoringError> {
    g.require_sphere()?;
    c.check_total(g.edge_count())?;
    let colors = c.colors();
    let mut out = Vec::new();
    for p in g.facial_edge_pairs() {
        let (a, b) = p.pair;
        if colors[a] == colors[b] {
            out.push(Violation::FacialProperness { face: p.face, elements: p.pair, color: colors[a] });
        }
    }
    for (face, inc) in g.incidence_counts().iter().enumerate() {
        parity_violations(face, &inc.edges, colors, &mut out);
    }
    Ok(out)
}

/// Checks a facial-parity vertex-coloring; an empty result means valid.
pub fn verify_fp_vertex(g: &PlaneGraph, c: &VertexColoring) -> Result<Vec<Violation>, ColoringError> {
    g.require_sphere()?;
    c.check_total(g.vertex_count())?;
    let colors = c.colors();
    let mut out = Vec::new();
    for p in g.facial_vertex_paths(2) {
        let (a, b) = (p.vertices[0], p.vertices[1]);
        if colors[a] == colors[b] {
            out.push(Violation::FacialProperness { face: p.face, elements: (a.min(b), a.max(b)), color: colors[a] });
        }
    }
    for (face, inc) in g.incidence_counts().iter().enumerate() {
        parity_violations(face, &inc.vertices, colors, &mut out);
    }
    Ok(out)
}

/// Checks a facial (P_rainbow, P_mono)-WORM coloring.
pub fn verify_facial_worm(
    g: &PlaneGraph,
    c: &VertexColoring,
    rainbow: usize,
    mono: usize,
) -> Result<Vec<Violation>, ColoringError> {
    for k in [rainbow, mono] {
        if k < 2 {
            return Err(ColoringError::InvalidWindow(k));
        }
    }
    g.require_sphere()?;
    c.check_total(g.vertex_count())?;
    let colors = c.colors();
    let mut out = Vec::new();
    for p in g.facial_vertex_paths(rainbow) {
        let mut seen: Vec<u32> = p.vertices.iter().map(|&v| colors[v]).collect();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() == rainbow {
            out.push(Violation::RainbowPath { face: p.face, vertices: p.vertices });
        }
    }
    for p in g.facial_vertex_paths(mono) {
        let first = colors[p.vertices[0]];
        if p.vertices.iter().all(|&v| colors[v] == first) {
            out.push(Violation::MonochromaticPath { face: p.face, vertices: p.vertices, color: first });
        }
    }
    Ok(out)
}

/// Fewest colors in a proper edge-coloring of a path with `len` edges in
/// which every color is used an odd number of times.
pub fn min_odd_proper_colors(len: usize) -> Result<usize, ColoringError> {
    match len {
        0 => Err(ColoringError::InvalidLength(0)),
        1 => Ok(1),
        l if l % 2 == 1 => Ok(3),
        l if l % 4 == 2 => Ok(2),
        _ => Ok(4),
    }
}

/// A proper coloring of the edges of a path of length `len`, every color
/// used an odd number of times, with exactly `min_odd_proper_colors(len)`
/// colors. Colors are numbered in order of first appearance.
pub fn path_parity_coloring(len: usize) -> Result<Vec<u32>, ColoringError> {
    let alternate = |n: usize| (0..n).map(|i| 1 + (i % 2) as u32);
    let colors: Vec<u32> = match len {
        0 => return Err(ColoringError::InvalidLength(0)),
        1 => vec![1],
        // 2m with m odd: two colors, m times each.
        l if l % 4 == 2 => alternate(l).collect(),
        // 2m+1 with m odd: two colors m times each, a third once.
        l if l % 4 == 3 => alternate(l - 1).chain([3]).collect(),
        // 2m+1 with m even: a third color three times, the other two m-1 times.
        l if l % 4 == 1 => [3, 1, 3, 2, 3].into_iter().chain(alternate(l - 5)).collect(),
        // 4m: two colors 2m-1 times each, two more once each.
        l => alternate(l - 2).chain([3, 4]).collect(),
    };
    Ok(canonical_colors(&colors))
}

/// Closed-form facial-parity edge chromatic number of a simple Theta graph
/// and a witness coloring using disjoint color ranges per path.
pub fn theta_fp_edge_bound(spec: ThetaSpec) -> Result<(usize, EdgeColoring), ColoringError> {
    spec.validate()?;
    let mut total = 0;
    let mut colors = Vec::with_capacity(spec.edge_count());
    for &len in &spec.lengths {
        let path = path_parity_coloring(len)?;
        colors.extend(path.iter().map(|c| c + total as u32));
        total += min_odd_proper_colors(len)?;
    }
    Ok((total, EdgeColoring(colors)))
}

/// Carries an edge-coloring of `host` to a vertex-coloring of its line graph.
pub fn edge_to_vertex_coloring(
    host: &PlaneGraph,
    line: &LineGraph,
    c: &EdgeColoring,
) -> Result<VertexColoring, ColoringError> {
    if c.len() != host.edge_count()
        || line.vertex_of_edge.len() != host.edge_count()
        || line.graph.vertex_count() != host.edge_count()
    {
        return Err(ColoringError::MappingMismatch);
    }
    let mut out = vec![0; line.graph.vertex_count()];
    for (e, &v) in line.vertex_of_edge.iter().enumerate() {
        out[v] = c.0[e];
    }
    Ok(VertexColoring(out))
}

/// Inverse of [`edge_to_vertex_coloring`].
pub fn vertex_to_edge_coloring(
    host: &PlaneGraph,
    line: &LineGraph,
    c: &VertexColoring,
) -> Result<EdgeColoring, ColoringError> {
    if c.len() != line.graph.vertex_count()
        || line.vertex_of_edge.len() != host.edge_count()
        || line.graph.vertex_count() != host.edge_count()
    {
        return Err(ColoringError::MappingMismatch);
    }
    Ok(EdgeColoring(line.vertex_of_edge.iter().map(|&v| c.0[v]).collect()))
}
