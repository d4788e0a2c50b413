//! Symmetry breaking and domination rules for root selection.

mod candidates;
mod orbits;

pub use candidates::{dominates, has_smaller_orbit_mate, is_dominated, root_candidates, CandidateFilter, SkipReason};
pub use orbits::{is_automorphism, vertex_orbits, vertex_orbits_with, OrbitLabels, DEFAULT_NODE_BUDGET};
