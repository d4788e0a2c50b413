//! Exact treedepth of small and medium graphs.
//!
//! The solver decides "is there an elimination forest of depth `k`?" for
//! `k = 0, 1, 2, ...` by recursive choice of a root per connected
//! component. Lower bounds cut off hopeless subproblems early, and
//! symmetry and domination rules thin out the root choices.
//!
//! ```
//! use treedepth::graph::{generate, GraphFamily};
//! use treedepth::solver::{td_optimise, SolverConfig};
//!
//! let g = generate(&GraphFamily::Cycle(10)).unwrap();
//! let result = td_optimise(&g, &SolverConfig::default());
//! assert_eq!(result.treedepth(), Some(5));
//! ```

pub mod bounds;
pub mod cli;
pub mod error;
pub mod forest;
pub mod graph;
pub mod solver;
pub mod symmetry;
pub mod verify;

pub use error::{Error, Result};
pub use forest::EliminationForest;
pub use graph::{Graph, VertexSet};
pub use solver::{td_optimise, SolveResult, SolveStatus, SolverConfig};
