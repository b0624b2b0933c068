//! Exact toolkit for facially constrained colorings of plane graphs.
//!
//! Graphs are combinatorial maps ([`PlaneGraph`]); [`constructions`] builds
//! the standard families, [`colorings`] verifies colorings independently of
//! any search, and [`solver`] computes minimum facial-parity colorings and
//! decides facial WORM colorability exactly. [`format`] holds the document
//! formats and [`claims`] the reproduction harness behind `verify paper`.

pub mod claims;
pub mod colorings;
pub mod constructions;
pub mod format;
pub mod planegraph;
pub mod solver;

pub use colorings::{EdgeColoring, VertexColoring, Violation};
pub use constructions::{GadgetBlueprint, ThetaSpec};
pub use format::{DocumentError, GraphDocument, ResultDocument};
pub use planegraph::{ConnectivityProfile, FaceWalk, GraphError, LineGraph, PlaneGraph};
pub use solver::{Problem, SearchConfig, SolveError, SolveResult, SolveStatus};
