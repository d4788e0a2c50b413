//! Filters that shrink the list of root choices for a connected subproblem.
//!
//! Each filter keeps the least vertex of any set of interchangeable choices,
//! so ascending iteration over the survivors still meets a best root.

use super::OrbitLabels;
use crate::graph::{Graph, VertexSet};
use crate::solver::SolverConfig;

/// Why a vertex was left out of the candidate list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SkipReason {
    /// A smaller vertex of `mask` lies in the same automorphism orbit.
    Orbit,
    /// The parent's removal left `mask` connected and this vertex is below it.
    OnlyChild,
    /// A smaller vertex of `mask` dominates this one.
    Domination,
}

/// True iff `v_prime` dominates `v` inside `g[mask]`:
/// `N(v') \ {v} ⊇ N(v) \ {v'}`, both neighbourhoods restricted to `mask`.
pub fn dominates(g: &Graph, mask: &VertexSet, v_prime: usize, v: usize) -> bool {
    let a = g.neighbours(v).words();
    let b = g.neighbours(v_prime).words();
    let skip = v_prime - 1;
    a.iter().zip(b).zip(mask.words()).enumerate().all(|(i, ((&x, &y), &m))| {
        let mut rest = x & m & !y;
        if i == skip / 64 {
            rest &= !(1u64 << (skip % 64));
        }
        rest == 0
    })
}

/// True iff some `v' < v` in `mask` dominates `v`.
///
/// A dominator must be adjacent to every neighbour of `v` other than
/// itself, so only the closed neighbourhood of one neighbour `u` of `v` is
/// scanned.
pub fn is_dominated(g: &Graph, mask: &VertexSet, v: usize) -> bool {
    let row = g.neighbours(v);
    let mut u = None;
    for (i, (&a, &m)) in row.words().iter().zip(mask.words()).enumerate() {
        if a & m != 0 {
            u = Some(i * 64 + (a & m).trailing_zeros() as usize + 1);
            break;
        }
    }
    let Some(u) = u else {
        // Isolated in mask: every smaller vertex dominates it.
        return mask.first().is_some_and(|f| f < v);
    };
    if u < v && dominates(g, mask, u, v) {
        return true;
    }
    let limit = v - 1;
    for (i, (&a, &m)) in g.neighbours(u).words().iter().zip(mask.words()).enumerate() {
        if i * 64 >= limit {
            break;
        }
        let mut bits = a & m;
        if (i + 1) * 64 > limit {
            bits &= (1u64 << (limit - i * 64)) - 1;
        }
        while bits != 0 {
            let w = i * 64 + bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            if w != v && dominates(g, mask, w, v) {
                return true;
            }
        }
    }
    false
}

/// True iff a smaller vertex of `mask` shares `v`'s orbit.
pub fn has_smaller_orbit_mate(orbits: &OrbitLabels, mask: &VertexSet, v: usize) -> bool {
    let r = orbits.orbit(v);
    if r == v {
        return false;
    }
    mask.contains(r) || mask.iter().take_while(|&x| x < v).any(|x| orbits.same_orbit(x, v))
}

/// Per-subproblem candidate test.
///
/// `orbits` is consulted only when `is_root_level`; `only_child_floor`
/// is the parent vertex when the parent's removal left `mask` connected,
/// and 0 otherwise.
pub struct CandidateFilter<'a> {
    g: &'a Graph,
    mask: &'a VertexSet,
    orbits: Option<&'a OrbitLabels>,
    domination: bool,
    floor: usize,
}

impl<'a> CandidateFilter<'a> {
    pub fn new(
        g: &'a Graph,
        mask: &'a VertexSet,
        is_root_level: bool,
        orbits: Option<&'a OrbitLabels>,
        config: &SolverConfig,
        only_child_floor: usize,
    ) -> Self {
        CandidateFilter {
            g,
            mask,
            orbits: orbits.filter(|_| is_root_level && config.use_orbit_symmetry),
            domination: config.use_domination,
            floor: if config.use_only_child { only_child_floor } else { 0 },
        }
    }

    /// `None` if `v` must be tried, otherwise the first rule that drops it.
    #[inline]
    pub fn check(&self, v: usize) -> Option<SkipReason> {
        if v < self.floor {
            return Some(SkipReason::OnlyChild);
        }
        if let Some(o) = self.orbits {
            if has_smaller_orbit_mate(o, self.mask, v) {
                return Some(SkipReason::Orbit);
            }
        }
        if self.domination && is_dominated(self.g, self.mask, v) {
            return Some(SkipReason::Domination);
        }
        None
    }
}

/// Vertices of `mask` that survive every enabled filter, ascending.
pub fn root_candidates(
    g: &Graph,
    mask: &VertexSet,
    is_root_level: bool,
    orbits: Option<&OrbitLabels>,
    config: &SolverConfig,
    only_child_floor: usize,
) -> Vec<usize> {
    let filter = CandidateFilter::new(g, mask, is_root_level, orbits, config, only_child_floor);
    mask.iter().filter(|&v| filter.check(v).is_none()).collect()
}
