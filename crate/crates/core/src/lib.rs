//! Exact Steiner tree algorithms for graph classes defined by forbidden
//! induced subgraphs, a complexity classifier for those classes, and the
//! hardness gadgets with checkable optimum certificates.

pub mod classify;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod instance;
pub mod io;
pub mod patterns;
pub mod rational;
pub mod solvers;
pub mod treewidth;

pub use error::{Error, Result};
pub use graph::{Edge, Graph};
pub use instance::{EdgeWeighting, SteinerInstance, SteinerSolution, Variant, VertexWeighting, Weighting};
pub use patterns::{make_named, Pattern};
pub use rational::Rational;
