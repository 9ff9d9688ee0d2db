//! Square roots of graphs in restricted classes.
//!
//! The library decides whether a graph has a ptolemaic square root (and
//! constructs a minimum-edge one) and whether it has a 3-sun-free split
//! square root (and constructs one), together with the recognizers these
//! algorithms rest on, a brute-force minimum-root oracle for desk-scale
//! verification, and seeded corpus generators.

pub mod cliques;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod outcome;
pub mod ptolemaic;
pub mod recognizers;
pub mod split;
pub mod testgraphs;
pub mod vertexset;

pub use graph::{Graph, ParseError};
pub use outcome::RejectionStage;
pub use vertexset::VertexSet;
