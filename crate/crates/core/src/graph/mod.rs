//! Bit-matrix graphs, induced-subgraph views, text formats and generators.

mod core;
pub mod generate;
pub mod parse;
pub mod samples;
mod vertex_set;

pub use self::core::{Graph, VertexPermutation, MAX_VERTICES};
pub use generate::{generate, GraphFamily};
pub use parse::{parse_graph, GraphFormat};
pub use vertex_set::{Iter, VertexSet};
