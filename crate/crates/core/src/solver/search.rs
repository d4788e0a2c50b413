use std::time::Instant;

use super::{SearchStats, SolveResult, SolveStatus, SolverConfig};
use crate::bounds::{build_simple_bound_table, can_prune_by_path_lower_bound_with, PathScratch, SimpleBoundTable};
use crate::forest::EliminationForest;
use crate::graph::{Graph, VertexPermutation, VertexSet};
use crate::symmetry::{vertex_orbits_with, CandidateFilter, OrbitLabels, SkipReason, DEFAULT_NODE_BUDGET};

/// The search stopped on its time or node limit before deciding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LimitReached;

type Outcome = Result<bool, LimitReached>;

const DEADLINE_CHECK_MASK: u64 = (1 << 12) - 1;

/// State for the depth-`k` decision procedure on one graph.
///
/// `parent` is written as the search goes. After a successful call it holds
/// a valid forest for the mask that was decided; failed branches leave stale
/// entries only for vertices that a later success overwrites.
pub struct Decider<'a> {
    g: &'a Graph,
    config: SolverConfig,
    table: Option<SimpleBoundTable>,
    orbits: Option<&'a OrbitLabels>,
    parent: Vec<usize>,
    stats: SearchStats,
    deadline: Option<Instant>,
    node_limit: u64,
    live: usize,
    set_pool: Vec<VertexSet>,
    list_pool: Vec<Vec<VertexSet>>,
    path: PathScratch,
}

impl<'a> Decider<'a> {
    /// `orbits` must describe `g` itself. Any time limit in `config` counts
    /// from now.
    pub fn new(g: &'a Graph, config: &SolverConfig, orbits: Option<&'a OrbitLabels>) -> Self {
        let n = g.vertex_count();
        let b = g.max_degree();
        let table = (config.use_lower_bounds && b > 0)
            .then(|| build_simple_bound_table(b, n).expect("degree bound is positive"));
        Decider {
            g,
            config: config.clone(),
            table,
            orbits: orbits.filter(|_| config.use_orbit_symmetry),
            parent: vec![0; n + 1],
            stats: SearchStats::default(),
            deadline: config.time_limit.map(|t| Instant::now() + t),
            node_limit: config.node_limit.unwrap_or(u64::MAX),
            live: 0,
            set_pool: Vec::new(),
            list_pool: Vec::new(),
            path: PathScratch::new(n),
        }
    }

    /// Does `g[mask]` have an elimination forest of depth at most `k`? On
    /// success the roots of that forest get parent `w`.
    pub fn td_general(&mut self, mask: &VertexSet, k: usize, w: usize) -> Outcome {
        self.general(mask, k, w, 0)
    }

    /// As [`Self::td_general`] for a connected, non-empty `mask` and `k >= 1`.
    pub fn td_connected(&mut self, mask: &VertexSet, k: usize, w: usize) -> Outcome {
        debug_assert!(k >= 1 && !mask.is_empty() && self.g.is_connected(mask));
        self.connected(mask, k, w, 0)
    }

    /// Parent array indexed `0..=n`; entry 0 is padding.
    pub fn parent_array(&self) -> &[usize] {
        &self.parent
    }

    pub fn forest(&self) -> EliminationForest {
        EliminationForest::from_padded(self.parent.clone())
    }

    pub fn stats(&self) -> &SearchStats {
        &self.stats
    }

    /// `oc_parent` is the vertex just removed by the caller when the caller
    /// was a connected subproblem, 0 otherwise.
    fn general(&mut self, mask: &VertexSet, k: usize, w: usize, oc_parent: usize) -> Outcome {
        if mask.is_empty() {
            return Ok(true);
        }
        if k == 0 {
            return Ok(false);
        }
        let comps = self.components(mask);
        self.live += comps.len();
        self.stats.max_live_components = self.stats.max_live_components.max(self.live);
        let result = self.general_on(&comps, k, w, oc_parent);
        self.live -= comps.len();
        self.recycle(comps);
        result
    }

    fn general_on(&mut self, comps: &[VertexSet], k: usize, w: usize, oc_parent: usize) -> Outcome {
        if let Some(table) = &self.table {
            if comps.iter().any(|c| table.prunes(c.len(), k)) {
                self.stats.prune_simple_bound += 1;
                return Ok(false);
            }
        }
        if self.config.use_lower_bounds {
            for c in comps {
                // Both bounds are at most |C|, so they cannot prune when k >= |C|.
                if c.len() > k && can_prune_by_path_lower_bound_with(self.g, c, k, &mut self.path) {
                    self.stats.prune_path_bound += 1;
                    return Ok(false);
                }
            }
        }
        let floor = if comps.len() == 1 { oc_parent } else { 0 };
        for c in comps {
            if !self.connected(c, k, w, floor)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn connected(&mut self, mask: &VertexSet, k: usize, w: usize, floor: usize) -> Outcome {
        self.tick()?;
        if mask.len() == 1 {
            let v = mask.first().expect("non-empty");
            self.parent[v] = w;
            return Ok(true);
        }
        let is_root_level = mask.len() == self.g.vertex_count();
        let filter = CandidateFilter::new(self.g, mask, is_root_level, self.orbits, &self.config, floor);
        let oc = if self.config.use_only_child { 1 } else { 0 };
        let mut child = self.take_set();
        let mut result = Ok(false);
        for v in mask.iter() {
            match filter.check(v) {
                Some(SkipReason::Orbit) => self.stats.skip_orbit += 1,
                Some(SkipReason::Domination) => self.stats.skip_domination += 1,
                Some(SkipReason::OnlyChild) => self.stats.skip_only_child += 1,
                None => {
                    self.parent[v] = w;
                    child.copy_from(mask);
                    child.remove(v);
                    match self.general(&child, k - 1, v, v * oc) {
                        Ok(false) => continue,
                        done => {
                            result = done;
                            break;
                        }
                    }
                }
            }
        }
        self.set_pool.push(child);
        result
    }

    #[inline]
    fn tick(&mut self) -> Result<(), LimitReached> {
        self.stats.nodes += 1;
        if self.stats.nodes > self.node_limit {
            return Err(LimitReached);
        }
        if self.stats.nodes & DEADLINE_CHECK_MASK == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(LimitReached);
                }
            }
        }
        Ok(())
    }

    fn take_set(&mut self) -> VertexSet {
        self.set_pool.pop().unwrap_or_else(|| self.g.empty_set())
    }

    fn components(&mut self, mask: &VertexSet) -> Vec<VertexSet> {
        let mut list = self.list_pool.pop().unwrap_or_default();
        let mut remaining = self.take_set();
        let mut frontier = self.take_set();
        let mut next = self.take_set();
        remaining.copy_from(mask);
        while let Some(start) = remaining.first() {
            let mut comp = self.take_set();
            self.g.grow_component(start, &mut remaining, &mut comp, &mut frontier, &mut next);
            list.push(comp);
        }
        self.set_pool.extend([remaining, frontier, next]);
        list
    }

    fn recycle(&mut self, mut list: Vec<VertexSet>) {
        self.set_pool.append(&mut list);
        self.list_pool.push(list);
    }
}

/// Treedepth of `g` with an optimal elimination forest, by deciding
/// `k = 0, 1, 2, ...` in turn.
pub fn td_optimise(g: &Graph, config: &SolverConfig) -> SolveResult {
    let start = Instant::now();
    let deadline = config.time_limit.map(|t| start + t);
    let n = g.vertex_count();
    let (h, perm) = if config.use_degree_order {
        g.reorder_by_degree()
    } else {
        (g.clone(), VertexPermutation::identity(n))
    };
    let full = h.all_vertices();
    let orbits = (config.use_orbit_symmetry && n > 0 && h.is_connected(&full))
        .then(|| vertex_orbits_with(&h, DEFAULT_NODE_BUDGET, deadline));

    let mut config = config.clone();
    config.time_limit = deadline.map(|d| d.saturating_duration_since(Instant::now()));
    let mut decider = Decider::new(&h, &config, orbits.as_ref());
    let mut k = 0;
    let status = loop {
        match decider.td_general(&full, k, 0) {
            Ok(true) => break SolveStatus::Optimal,
            Ok(false) => k += 1,
            Err(LimitReached) => break SolveStatus::LimitReached,
        }
    };
    let forest = (status == SolveStatus::Optimal).then(|| {
        decider
            .forest()
            .relabel_to_old(&perm)
            .expect("permutation matches graph order")
    });
    let mut stats = decider.stats().clone();
    stats.elapsed = start.elapsed();
    SolveResult {
        status,
        lower_bound: k,
        forest,
        stats,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::samples::linked_squares;
    use crate::graph::{generate, GraphFamily};
    use crate::verify::check_forest;

    fn plain() -> SolverConfig {
        SolverConfig {
            use_lower_bounds: false,
            use_orbit_symmetry: false,
            use_domination: false,
            use_only_child: false,
            use_degree_order: false,
            ..SolverConfig::default()
        }
    }

    #[test]
    fn empty_mask_is_depth_zero() {
        let g = linked_squares();
        let mut d = Decider::new(&g, &SolverConfig::default(), None);
        assert_eq!(d.td_general(&g.empty_set(), 0, 0), Ok(true));
    }

    #[test]
    fn hub_removed_leaves_two_depth_three_squares() {
        let g = linked_squares();
        let mut mask = g.all_vertices();
        mask.remove(5);
        let mut d = Decider::new(&g, &plain(), None);
        assert_eq!(d.td_general(&mask, 3, 5), Ok(true));
        assert_eq!(d.td_general(&mask, 2, 5), Ok(false));
    }

    #[test]
    fn path_bound_refutes_depth_three_without_recursion() {
        let g = linked_squares();
        let mut d = Decider::new(&g, &SolverConfig::default(), None);
        assert_eq!(d.td_general(&g.all_vertices(), 3, 0), Ok(false));
        assert_eq!(d.stats().nodes, 0);
        assert_eq!(d.stats().prune_path_bound, 1);
    }

    #[test]
    fn depth_four_tree_for_linked_squares() {
        let g = linked_squares();
        for config in [plain(), SolverConfig::default()] {
            let mut d = Decider::new(&g, &config, None);
            assert_eq!(d.td_connected(&g.all_vertices(), 4, 0), Ok(true));
            let report = check_forest(&g, &d.forest());
            assert!(report.valid, "{report:?}");
            assert!(report.depth <= 4);
            let mut d = Decider::new(&g, &config, None);
            assert_eq!(d.td_connected(&g.all_vertices(), 3, 0), Ok(false));
        }
    }

    #[test]
    fn single_vertex_base_case() {
        let g = generate(&GraphFamily::Path(3)).unwrap();
        let mut d = Decider::new(&g, &plain(), None);
        let one = VertexSet::from_vertices(3, [2]);
        assert_eq!(d.td_connected(&one, 1, 0), Ok(true));
        assert_eq!(d.parent_array()[2], 0);
    }

    #[test]
    fn optimise_small_families() {
        let cases = [
            (GraphFamily::Path(10), 4),
            (GraphFamily::Cycle(10), 5),
            (GraphFamily::Clique(8), 8),
            (GraphFamily::CompleteBipartite(10), 6),
            (GraphFamily::BinaryTree(10), 3),
            (GraphFamily::SquareGrid(3), 5),
        ];
        for (family, td) in cases {
            let g = generate(&family).unwrap();
            let r = td_optimise(&g, &SolverConfig::default());
            assert_eq!(r.treedepth(), Some(td), "{family}");
            let report = check_forest(&g, r.forest.as_ref().unwrap());
            assert!(report.valid && report.depth == td, "{family}: {report:?}");
        }
    }

    #[test]
    fn empty_and_edgeless_graphs() {
        let r = td_optimise(&Graph::empty(0).unwrap(), &SolverConfig::default());
        assert_eq!(r.treedepth(), Some(0));
        assert!(r.forest.unwrap().is_empty());
        let r = td_optimise(&Graph::empty(5).unwrap(), &SolverConfig::default());
        assert_eq!(r.treedepth(), Some(1));
    }

    #[test]
    fn node_limit_reports_lower_bound() {
        let g = generate(&GraphFamily::SquareGrid(5)).unwrap();
        let config = SolverConfig {
            node_limit: Some(50),
            ..SolverConfig::default()
        };
        let r = td_optimise(&g, &config);
        assert_eq!(r.status, SolveStatus::LimitReached);
        assert!(r.forest.is_none() && r.treedepth().is_none());
        assert!(r.lower_bound <= 9);
    }

    #[test]
    fn decision_is_monotone_in_k() {
        let g = generate(&GraphFamily::Gnp { n: 10, p: 0.4, seed: 5 }).unwrap();
        let mut d = Decider::new(&g, &SolverConfig::default(), None);
        let all = g.all_vertices();
        let answers: Vec<bool> = (0..=10).map(|k| d.td_general(&all, k, 0).unwrap()).collect();
        assert!(answers.windows(2).all(|w| !w[0] || w[1]));
        assert!(answers[10]);
    }
}
