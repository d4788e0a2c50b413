use super::VertexSet;
use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] may have.
pub const MAX_VERTICES: usize = 1024;

/// Simple undirected graph on the vertices `1..=n`, stored as a bit matrix.
///
/// Immutable once built. Induced subgraphs are described by a `(Graph,
/// VertexSet)` pair rather than by copying rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    rows: Vec<VertexSet>,
}

/// Relabelling of `1..=n`. `forward[old] = new`, `inverse[new] = old`; index 0
/// maps to 0 so that the root sentinel of a parent array survives mapping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPermutation {
    forward: Vec<usize>,
    inverse: Vec<usize>,
}

impl VertexPermutation {
    pub fn identity(n: usize) -> Self {
        let ids: Vec<usize> = (0..=n).collect();
        VertexPermutation {
            forward: ids.clone(),
            inverse: ids,
        }
    }

    /// Build from the list of old vertices in their new order: `order[i]`
    /// becomes vertex `i + 1`.
    pub fn from_new_order(order: &[usize]) -> Result<Self> {
        let n = order.len();
        let mut forward = vec![0; n + 1];
        let mut inverse = vec![0; n + 1];
        for (i, &old) in order.iter().enumerate() {
            if old == 0 || old > n || forward[old] != 0 {
                return Err(Error::InvalidArgument(format!(
                    "{order:?} is not a permutation of 1..={n}"
                )));
            }
            forward[old] = i + 1;
            inverse[i + 1] = old;
        }
        Ok(VertexPermutation { forward, inverse })
    }

    pub fn len(&self) -> usize {
        self.forward.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn to_new(&self, old: usize) -> usize {
        self.forward[old]
    }

    #[inline]
    pub fn to_old(&self, new: usize) -> usize {
        self.inverse[new]
    }

    /// Old vertex numbers listed in new order.
    pub fn new_order(&self) -> &[usize] {
        &self.inverse[1..]
    }

    pub fn is_identity(&self) -> bool {
        self.forward.iter().enumerate().all(|(i, &v)| i == v)
    }
}

impl Graph {
    /// Build from an edge list over `1..=n`. Duplicate edges collapse;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut rows = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop {
                    vertex: u.to_string(),
                    line: None,
                });
            }
            rows[u - 1].insert(v);
            rows[v - 1].insert(u);
        }
        let m = rows.iter().map(VertexSet::len).sum::<usize>() / 2;
        Ok(Graph { n, m, rows })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, &[])
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.rows[v - 1]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v - 1].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u - 1].contains(v)
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| self.rows[u - 1].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Maximal connected vertex sets of `g[mask]`, ordered by least vertex.
    pub fn connected_components(&self, mask: &VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut remaining = mask.clone();
        let mut frontier = self.empty_set();
        let mut next = self.empty_set();
        while let Some(start) = remaining.first() {
            let mut comp = self.empty_set();
            self.grow_component(start, &mut remaining, &mut comp, &mut frontier, &mut next);
            out.push(comp);
        }
        out
    }

    /// Flood-fill from `start` inside `remaining`. The component ends up in
    /// `comp` and is removed from `remaining`. `frontier` and `next` are
    /// scratch sets of this graph's capacity.
    #[inline]
    pub(crate) fn grow_component(
        &self,
        start: usize,
        remaining: &mut VertexSet,
        comp: &mut VertexSet,
        frontier: &mut VertexSet,
        next: &mut VertexSet,
    ) {
        comp.clear();
        comp.insert(start);
        remaining.remove(start);
        frontier.clear();
        frontier.insert(start);
        while !frontier.is_empty() {
            next.clear();
            for u in frontier.iter() {
                next.union_with(&self.rows[u - 1]);
            }
            next.intersect_with(remaining);
            remaining.difference_with(next);
            comp.union_with(next);
            std::mem::swap(frontier, next);
        }
    }

    pub fn is_connected(&self, mask: &VertexSet) -> bool {
        match mask.first() {
            None => true,
            Some(start) => {
                let mut remaining = mask.clone();
                let mut comp = self.empty_set();
                let mut frontier = self.empty_set();
                let mut next = self.empty_set();
                self.grow_component(start, &mut remaining, &mut comp, &mut frontier, &mut next);
                remaining.is_empty()
            }
        }
    }

    /// Relabel so that vertex `perm.to_new(v)` of the result is vertex `v` here.
    pub fn permuted(&self, perm: &VertexPermutation) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation size differs from graph order");
        let mut rows = vec![VertexSet::new(self.n); self.n];
        for (u, v) in self.edges() {
            let (a, b) = (perm.to_new(u), perm.to_new(v));
            rows[a - 1].insert(b);
            rows[b - 1].insert(a);
        }
        Graph { n: self.n, m: self.m, rows }
    }

    /// Renumber by non-increasing degree, ties broken by ascending number.
    pub fn reorder_by_degree(&self) -> (Graph, VertexPermutation) {
        let mut order: Vec<usize> = self.vertices().collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let perm = VertexPermutation::from_new_order(&order).expect("sorted vertex list is a permutation");
        (self.permuted(&perm), perm)
    }

    /// Structural invariants: symmetric rows, no loops, edge count consistent.
    pub fn check_invariants(&self) -> bool {
        let mut degree_sum = 0;
        for u in self.vertices() {
            let row = &self.rows[u - 1];
            if row.capacity() != self.n || row.contains(u) {
                return false;
            }
            if row.iter().any(|v| !self.rows[v - 1].contains(u)) {
                return false;
            }
            degree_sum += row.len();
        }
        degree_sum == 2 * self.m
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges().collect::<Vec<_>>())
    }
}
