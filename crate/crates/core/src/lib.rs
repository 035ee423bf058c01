//! Graph and hypergraph machinery for Berge path and cycle extremal problems.

pub mod berge;
pub mod blocks;
pub mod classify;
pub mod constructions;
pub mod error;
pub mod format;
pub mod graph;
pub mod hypergraph;
pub mod kelmans;
pub mod paths;
pub mod redblue;
pub mod search;
pub mod verify;
pub mod reduction;

pub use error::{FormatError, GraphError};
pub use graph::Graph;
pub use hypergraph::Hypergraph;
pub use redblue::{Color, RedBlueGraph};
