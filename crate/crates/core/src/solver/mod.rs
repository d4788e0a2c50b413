//! Exact treedepth by a sequence of depth-`k` decision problems.

mod search;

use std::time::Duration;

use crate::forest::EliminationForest;

pub use search::{td_optimise, Decider, LimitReached};

/// Feature toggles and resource limits for one solve. Everything is on by
/// default.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Degree-based and path-based lower bounds before each recursion.
    pub use_lower_bounds: bool,
    /// Skip root choices with a smaller automorphic twin, top level only.
    pub use_orbit_symmetry: bool,
    /// Skip root choices dominated by a smaller vertex, at every level.
    pub use_domination: bool,
    /// Below a parent whose removal kept the graph connected, skip smaller vertices.
    pub use_only_child: bool,
    /// Renumber vertices by non-increasing degree before searching.
    pub use_degree_order: bool,
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            use_lower_bounds: true,
            use_orbit_symmetry: true,
            use_domination: true,
            use_only_child: true,
            use_degree_order: true,
            time_limit: None,
            node_limit: None,
        }
    }
}

impl SolverConfig {
    /// Every combination of the five feature toggles, limits unset.
    pub fn all_toggle_combinations() -> impl Iterator<Item = SolverConfig> {
        (0u32..32).map(|bits| SolverConfig {
            use_lower_bounds: bits & 1 != 0,
            use_orbit_symmetry: bits & 2 != 0,
            use_domination: bits & 4 != 0,
            use_only_child: bits & 8 != 0,
            use_degree_order: bits & 16 != 0,
            time_limit: None,
            node_limit: None,
        })
    }

    /// Configuration for an ablation label. `-Sym` switches off both
    /// symmetry rules (orbits and only-child); `-Orb` and `-OC` switch off
    /// one of them each. `-LB`, `-Dom` and `-Ord` switch off lower bounds,
    /// domination and degree ordering.
    pub fn from_label(label: &str) -> Option<SolverConfig> {
        let mut c = SolverConfig::default();
        match label {
            "All" => {}
            "-LB" => c.use_lower_bounds = false,
            "-Sym" => {
                c.use_orbit_symmetry = false;
                c.use_only_child = false;
            }
            "-Dom" => c.use_domination = false,
            "-Ord" => c.use_degree_order = false,
            "-Orb" => c.use_orbit_symmetry = false,
            "-OC" => c.use_only_child = false,
            _ => return None,
        }
        Some(c)
    }

    pub const LABELS: [&'static str; 7] = ["All", "-LB", "-Sym", "-Dom", "-Ord", "-Orb", "-OC"];
}

/// Counters collected during a solve.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Calls on a connected subproblem.
    pub nodes: u64,
    pub prune_simple_bound: u64,
    pub prune_path_bound: u64,
    pub skip_orbit: u64,
    pub skip_domination: u64,
    pub skip_only_child: u64,
    /// Most component sets held at once across the recursion.
    pub max_live_components: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal,
    /// Time or node limit hit; only a lower bound is known.
    LimitReached,
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Treedepth when optimal; otherwise the depth being decided when the
    /// limit struck, which is proven to be at most the treedepth.
    pub lower_bound: usize,
    /// Optimal elimination forest in the input numbering, when optimal.
    pub forest: Option<EliminationForest>,
    pub stats: SearchStats,
}

impl SolveResult {
    pub fn treedepth(&self) -> Option<usize> {
        (self.status == SolveStatus::Optimal).then_some(self.lower_bound)
    }
}
