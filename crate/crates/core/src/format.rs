//! Interchange formats: graph documents (rotation systems), result
//! documents, and DOT export.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::colorings::{ColoringError, Violation};
use crate::planegraph::{GraphError, PlaneGraph};
use crate::solver::{Problem, SolveResult, SolveStatus};

pub const GRAPH_FORMAT: &str = "planegraph-v1";
pub const RESULT_FORMAT: &str = "facolor-result-v1";
pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("field `{field}`: {message}")]
    Field { field: &'static str, message: String },
    #[error("document describes an invalid graph: {0}")]
    Graph(#[from] GraphError),
}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        DocumentError::Parse { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

/// Serialized rotation system. `rotations[v]` lists the darts leaving `v`
/// counterclockwise and `twins[d]` is the opposite dart of `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub format: String,
    pub vertex_count: usize,
    pub rotations: Vec<Vec<usize>>,
    pub twins: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GraphDocument {
    pub fn from_graph(g: &PlaneGraph) -> Self {
        GraphDocument {
            format: GRAPH_FORMAT.to_string(),
            vertex_count: g.vertex_count(),
            rotations: g.rotations().to_vec(),
            twins: g.twins().to_vec(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }

    pub fn to_graph(&self) -> Result<PlaneGraph, DocumentError> {
        if self.format != GRAPH_FORMAT {
            return Err(DocumentError::Field {
                field: "format",
                message: format!("expected {GRAPH_FORMAT:?}, found {:?}", self.format),
            });
        }
        if self.rotations.len() != self.vertex_count {
            return Err(DocumentError::Field {
                field: "rotations",
                message: format!("{} rotation lists for {} vertices", self.rotations.len(), self.vertex_count),
            });
        }
        let g = PlaneGraph::new(self.rotations.clone(), self.twins.clone())?;
        Ok(match &self.labels {
            Some(labels) => g.with_labels(labels.clone())?,
            None => g,
        })
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

/// Canonical document bytes: fixed key order, one rotation per line.
pub fn write_graph(g: &PlaneGraph) -> String {
    let doc = GraphDocument::from_graph(g);
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"format\": {},", json(&doc.format));
    let _ = writeln!(out, "  \"vertex_count\": {},", doc.vertex_count);
    out.push_str("  \"rotations\": [\n");
    for (i, rot) in doc.rotations.iter().enumerate() {
        let sep = if i + 1 < doc.rotations.len() { "," } else { "" };
        let _ = writeln!(out, "    {}{sep}", json(rot));
    }
    out.push_str("  ],\n");
    match &doc.labels {
        Some(labels) => {
            let _ = writeln!(out, "  \"twins\": {},", json(&doc.twins));
            let _ = writeln!(out, "  \"labels\": {}", json(labels));
        }
        None => {
            let _ = writeln!(out, "  \"twins\": {}", json(&doc.twins));
        }
    }
    out.push_str("}\n");
    out
}

pub fn read_graph(text: &str) -> Result<PlaneGraph, DocumentError> {
    let doc: GraphDocument = serde_json::from_str(text)?;
    doc.to_graph()
}

/// Hex SHA-256 of the canonical document of `g`.
pub fn graph_digest(g: &PlaneGraph) -> String {
    let hash = Sha256::digest(write_graph(g).as_bytes());
    hash.iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeDocument {
    pub colors: usize,
    pub feasible: bool,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StatsDocument {
    pub nodes: u64,
    pub wall_time_us: u64,
    pub probes: Vec<ProbeDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDocument {
    pub color_cap: Option<usize>,
    pub workers: usize,
    pub node_budget: u64,
    /// The search uses no randomness.
    pub seed_free: bool,
}

/// Machine-readable solve outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultDocument {
    pub format: String,
    pub problem: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rainbow: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mono: Option<usize>,
    pub graph_digest: String,
    /// One of `optimal`, `sat`, `unsat`, `unsat-under-cap`.
    pub status: String,
    pub k: Option<usize>,
    /// Whether `witness` is indexed by edge or by vertex id.
    pub elements: String,
    pub witness: Option<Vec<u32>>,
    pub extended_semantics: bool,
    pub stats: StatsDocument,
    pub config: ConfigDocument,
    pub version: String,
}

impl ResultDocument {
    pub fn from_result(g: &PlaneGraph, r: &SolveResult) -> Self {
        let (rainbow, mono) = match r.problem {
            Problem::Worm { rainbow, mono } => (Some(rainbow), Some(mono)),
            _ => (None, None),
        };
        let status = match r.status {
            SolveStatus::Optimal(_) => "optimal",
            SolveStatus::Sat => "sat",
            SolveStatus::Unsat => "unsat",
            SolveStatus::UnsatUnderCap(_) => "unsat-under-cap",
        };
        ResultDocument {
            format: RESULT_FORMAT.to_string(),
            problem: r.problem.name().to_string(),
            rainbow,
            mono,
            graph_digest: graph_digest(g),
            status: status.to_string(),
            k: r.k(),
            elements: if r.problem == Problem::FpEdge { "edges" } else { "vertices" }.to_string(),
            witness: r.witness.clone(),
            extended_semantics: r.extended_semantics,
            stats: StatsDocument {
                nodes: r.stats.nodes,
                wall_time_us: r.stats.elapsed.as_micros() as u64,
                probes: r
                    .stats
                    .probes
                    .iter()
                    .map(|p| ProbeDocument { colors: p.colors, feasible: p.feasible, nodes: p.nodes })
                    .collect(),
            },
            config: ConfigDocument {
                color_cap: r.config.color_cap,
                workers: r.config.workers,
                node_budget: r.config.node_budget,
                seed_free: true,
            },
            version: TOOLKIT_VERSION.to_string(),
        }
    }

    pub fn problem(&self) -> Result<Problem, DocumentError> {
        match (self.problem.as_str(), self.rainbow, self.mono) {
            ("worm", Some(rainbow), Some(mono)) => Ok(Problem::Worm { rainbow, mono }),
            ("worm", _, _) => {
                Err(DocumentError::Field { field: "rainbow", message: "worm results need rainbow and mono".into() })
            }
            (name, _, _) => name.parse().map_err(|message| DocumentError::Field { field: "problem", message }),
        }
    }

    /// Pretty JSON with numeric arrays kept on one line.
    pub fn to_json(&self) -> String {
        let pretty = serde_json::to_string_pretty(self).expect("plain data serializes");
        let mut s = collapse_numeric_arrays(&pretty);
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: ResultDocument = serde_json::from_str(text)?;
        if doc.format != RESULT_FORMAT {
            return Err(DocumentError::Field {
                field: "format",
                message: format!("expected {RESULT_FORMAT:?}, found {:?}", doc.format),
            });
        }
        Ok(doc)
    }
}

fn collapse_numeric_arrays(pretty: &str) -> String {
    let mut out = String::with_capacity(pretty.len());
    let mut rest = pretty;
    while let Some(open) = rest.find('[') {
        out.push_str(&rest[..open]);
        let tail = &rest[open..];
        let close = tail.find(']').unwrap_or(tail.len() - 1);
        let body = &tail[1..close];
        if !body.trim().is_empty() && body.chars().all(|c| c.is_ascii_digit() || c == ',' || c.is_whitespace()) {
            let items: Vec<&str> = body.split(',').map(str::trim).collect();
            let _ = write!(out, "[{}]", items.join(", "));
            rest = &tail[close + 1..];
        } else {
            out.push('[');
            rest = &tail[1..];
        }
    }
    out.push_str(rest);
    out
}

/// Outcome of re-checking a result document against a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Valid,
    Invalid(Vec<Violation>),
    /// The document records no coloring (status is given).
    NoWitness(String),
    DigestMismatch {
        expected: String,
        found: String,
    },
    ProblemMismatch {
        expected: Problem,
        found: Problem,
    },
}

impl CheckOutcome {
    pub fn is_valid(&self) -> bool {
        *self == CheckOutcome::Valid
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// Re-verifies the witness in `doc` for `g`. When `expected` is given the
/// document must be about that problem (WORM path lengths come from the
/// document).
pub fn check_result(g: &PlaneGraph, doc: &ResultDocument, expected: Option<&str>) -> Result<CheckOutcome, CheckError> {
    let problem = doc.problem()?;
    if let Some(name) = expected {
        if name != problem.name() {
            let expected = match name {
                "worm" => Problem::Worm { rainbow: 0, mono: 0 },
                other => other.parse().map_err(|message| DocumentError::Field { field: "problem", message })?,
            };
            return Ok(CheckOutcome::ProblemMismatch { expected, found: problem });
        }
    }
    let digest = graph_digest(g);
    if digest != doc.graph_digest {
        return Ok(CheckOutcome::DigestMismatch { expected: digest, found: doc.graph_digest.clone() });
    }
    let Some(witness) = &doc.witness else {
        return Ok(CheckOutcome::NoWitness(doc.status.clone()));
    };
    let violations = problem.verify(g, witness)?;
    if violations.is_empty() {
        if let Some(k) = doc.k {
            let used = {
                let mut c = witness.clone();
                c.sort_unstable();
                c.dedup();
                c.len()
            };
            if used != k {
                return Err(DocumentError::Field {
                    field: "k",
                    message: format!("witness uses {used} colors but k = {k}"),
                }
                .into());
            }
        }
        Ok(CheckOutcome::Valid)
    } else {
        Ok(CheckOutcome::Invalid(violations))
    }
}

/// Coloring to draw in a DOT export.
#[derive(Debug, Clone, Copy)]
pub enum DotColoring<'a> {
    Edges(&'a [u32]),
    Vertices(&'a [u32]),
}

/// Undirected DOT rendering. The embedding is kept only as comments since
/// DOT has no notion of rotation systems.
pub fn write_dot(g: &PlaneGraph, coloring: Option<DotColoring<'_>>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "// {GRAPH_FORMAT}: DOT drops the embedding; rotations and twins follow");
    for (v, rot) in g.rotations().iter().enumerate() {
        let _ = writeln!(out, "// rotation {v}: {}", json(rot));
    }
    let _ = writeln!(out, "// twins: {}", json(g.twins()));
    out.push_str("graph G {\n");
    for v in 0..g.vertex_count() {
        let name = g.vertex_label(v);
        match coloring {
            Some(DotColoring::Vertices(c)) => {
                let _ = writeln!(out, "  {v} [label=\"{name}\\nc{0}\", class=\"c{0}\"];", c[v]);
            }
            _ => {
                let _ = writeln!(out, "  {v} [label=\"{name}\"];");
            }
        }
    }
    for e in 0..g.edge_count() {
        let (a, b) = g.edge_endpoints(e);
        match coloring {
            Some(DotColoring::Edges(c)) => {
                let _ = writeln!(out, "  {a} -- {b} [label=\"c{0}\", class=\"c{0}\"];", c[e]);
            }
            _ => {
                let _ = writeln!(out, "  {a} -- {b};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::theta_fp_edge_bound;
    use crate::constructions::{cycle, theta, worm_gadget, ThetaSpec};
    use crate::solver::{solve_fp_edge_min, solve_worm, SearchConfig};

    #[test]
    fn graph_round_trip() {
        let g = cycle(3).unwrap();
        let text = write_graph(&g);
        let back = read_graph(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(write_graph(&back), text);
        let labeled = worm_gadget(19).unwrap();
        assert_eq!(read_graph(&write_graph(&labeled)).unwrap(), labeled);
    }

    #[test]
    fn fixed_point_twin_in_document() {
        let text = r#"{"format":"planegraph-v1","vertex_count":1,"rotations":[[0,1]],"twins":[0,1]}"#;
        assert_eq!(read_graph(text), Err(DocumentError::Graph(GraphError::FixedPointTwin { dart: 0 })));
    }

    #[test]
    fn truncated_document() {
        let text = write_graph(&cycle(4).unwrap());
        let err = read_graph(&text[..text.len() / 2]).unwrap_err();
        assert!(matches!(err, DocumentError::Parse { .. }));
    }

    #[test]
    fn wrong_format_tag_and_counts() {
        let text = r#"{"format":"adjacency","vertex_count":1,"rotations":[[0,1]],"twins":[1,0]}"#;
        assert!(matches!(read_graph(text), Err(DocumentError::Field { field: "format", .. })));
        let text = r#"{"format":"planegraph-v1","vertex_count":3,"rotations":[[0],[1]],"twins":[1,0]}"#;
        assert!(matches!(read_graph(text), Err(DocumentError::Field { field: "rotations", .. })));
    }

    #[test]
    fn result_round_trip_and_check() {
        let g = cycle(5).unwrap();
        let r = solve_fp_edge_min(&g, &SearchConfig::default()).unwrap();
        let doc = ResultDocument::from_result(&g, &r);
        let parsed = ResultDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(check_result(&g, &parsed, Some("fp-edge")).unwrap(), CheckOutcome::Valid);
        assert!(matches!(check_result(&g, &parsed, Some("fp-vertex")).unwrap(), CheckOutcome::ProblemMismatch { .. }));
        let other = cycle(7).unwrap();
        assert!(matches!(check_result(&other, &parsed, None).unwrap(), CheckOutcome::DigestMismatch { .. }));
        let mut tampered = parsed.clone();
        tampered.witness = Some(vec![1; 5]);
        tampered.k = Some(1);
        assert!(matches!(check_result(&g, &tampered, None).unwrap(), CheckOutcome::Invalid(_)));
    }

    #[test]
    fn unsat_result_has_no_witness() {
        let g = worm_gadget(18).unwrap();
        let r = solve_worm(&g, 3, 3, &SearchConfig::default()).unwrap();
        let doc = ResultDocument::from_result(&g, &r);
        assert_eq!(doc.status, "unsat");
        assert_eq!((doc.rainbow, doc.mono), (Some(3), Some(3)));
        assert_eq!(check_result(&g, &doc, Some("worm")).unwrap(), CheckOutcome::NoWitness("unsat".into()));
    }

    #[test]
    fn digest_is_stable() {
        let a = graph_digest(&theta(ThetaSpec::new(4, 4, 4)).unwrap());
        let b = graph_digest(&theta(ThetaSpec::new(4, 4, 4)).unwrap());
        assert_eq!(a, b);
        assert_eq!(a.len(), 64);
        assert_ne!(a, graph_digest(&theta(ThetaSpec::new(4, 4, 5)).unwrap()));
    }

    fn count(text: &str, pat: &str) -> usize {
        text.lines().filter(|l| l.contains(pat)).count()
    }

    #[test]
    fn dot_exports() {
        let c3 = write_dot(&cycle(3).unwrap(), None);
        assert_eq!(count(&c3, " -- "), 3);
        assert_eq!(count(&c3, "[label="), 3);

        let g = theta(ThetaSpec::new(4, 4, 4)).unwrap();
        let (_, w) = theta_fp_edge_bound(ThetaSpec::new(4, 4, 4)).unwrap();
        let dot = write_dot(&g, Some(DotColoring::Edges(w.colors())));
        let mut classes: Vec<&str> = dot.lines().filter_map(|l| l.split("class=\"").nth(1)).collect();
        classes.sort_unstable();
        classes.dedup();
        assert_eq!(classes.len(), 12);

        let gadget = write_dot(&worm_gadget(18).unwrap(), None);
        assert_eq!(count(&gadget, " -- "), 30);
        assert_eq!(count(&gadget, "[label="), 18);
    }
}
