//! Inclusion-free proper edge colourings.
//!
//! A proper edge colouring is inclusion-free when no vertex's palette (the
//! set of colours on its edges) is a subset of a neighbour's palette. Such a
//! colouring exists iff the graph has minimum degree at least 2.

pub mod colouring;
pub mod constructions;
pub mod exact;
pub mod graph;
pub mod greedy;
pub mod par;
pub mod pipeline;
pub mod validator;

pub use colouring::{Colour, EdgeColouring};
pub use graph::{EdgeId, Graph, Multigraph, Vertex};
pub use par::Execution;
pub use validator::{palette, validate, ValidationReport};
