//! Cheap treedepth lower bounds used to cut off infeasible subproblems.
//!
//! The degree bound: deleting one vertex from a graph with maximum degree at
//! most `b` leaves at most `b` components, so one of them keeps at least
//! `⌈(n-1)/b⌉` vertices. Unrolling gives `lb(n) = 1 + lb(⌈(n-1)/b⌉)`,
//! `lb(0) = 0`.
//!
//! The path bound: a graph containing a `k`-vertex path has treedepth at
//! least `⌈log2(k+1)⌉`, and one containing a `c`-vertex cycle at least
//! `1 + ⌈log2(c)⌉`. A path is found greedily; chords between non-consecutive
//! path vertices close cycles.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Precomputed degree bound for component sizes `0..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleBoundTable {
    degree_bound: usize,
    table: Vec<usize>,
}

pub fn build_simple_bound_table(degree_bound: usize, n_max: usize) -> Result<SimpleBoundTable> {
    if degree_bound == 0 {
        return Err(Error::InvalidArgument(
            "degree bound must be positive; skip the bound for edgeless graphs".into(),
        ));
    }
    let mut table = vec![0; n_max + 1];
    for n in 1..=n_max {
        table[n] = 1 + table[(n - 1).div_ceil(degree_bound)];
    }
    Ok(SimpleBoundTable { degree_bound, table })
}

impl SimpleBoundTable {
    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn n_max(&self) -> usize {
        self.table.len() - 1
    }

    #[inline]
    pub fn bound(&self, size: usize) -> usize {
        self.table[size]
    }

    /// True iff a component of `size` vertices needs depth greater than `k`.
    #[inline]
    pub fn prunes(&self, size: usize, k: usize) -> bool {
        self.table[size] > k
    }
}

/// Reusable buffers for the greedy path search.
#[derive(Debug, Default)]
pub struct PathScratch {
    forward: Vec<usize>,
    backward: Vec<usize>,
    path: Vec<usize>,
    on_path: VertexSet,
    position: Vec<usize>,
}

impl PathScratch {
    pub fn new(n: usize) -> Self {
        PathScratch {
            on_path: VertexSet::new(n),
            position: vec![0; n + 1],
            ..Default::default()
        }
    }

    /// Path found by the most recent search, end to end.
    pub fn path(&self) -> &[usize] {
        &self.path
    }
}

#[inline]
fn ceil_log2(x: usize) -> usize {
    debug_assert!(x >= 1);
    (usize::BITS - (x - 1).leading_zeros()) as usize
}

/// `⌈log2(k+1)⌉`, the treedepth of a `k`-vertex path.
#[inline]
pub fn path_bound(k: usize) -> usize {
    ceil_log2(k + 1)
}

/// `1 + ⌈log2(c)⌉`, the treedepth of a `c`-vertex cycle.
#[inline]
pub fn cycle_bound(c: usize) -> usize {
    1 + ceil_log2(c)
}

fn least_unvisited_neighbour(g: &Graph, u: usize, mask: &VertexSet, on_path: &VertexSet) -> Option<usize> {
    let row = g.neighbours(u).words();
    for (i, ((&a, &m), &p)) in row.iter().zip(mask.words()).zip(on_path.words()).enumerate() {
        let w = a & m & !p;
        if w != 0 {
            return Some(i * 64 + w.trailing_zeros() as usize + 1);
        }
    }
    None
}

/// Grow a path from `min(mask)`: first away from it, taking the least
/// unvisited neighbour each step until stuck, then again from `min(mask)`
/// in the other direction. The result is stored in `scratch.path()`.
pub fn greedy_path_into(g: &Graph, mask: &VertexSet, scratch: &mut PathScratch) {
    scratch.path.clear();
    scratch.forward.clear();
    scratch.backward.clear();
    if scratch.on_path.capacity() != g.vertex_count() {
        *scratch = PathScratch::new(g.vertex_count());
    }
    scratch.on_path.clear();
    let Some(start) = mask.first() else {
        return;
    };
    scratch.on_path.insert(start);
    for phase in 0..2 {
        let mut u = start;
        while let Some(next) = least_unvisited_neighbour(g, u, mask, &scratch.on_path) {
            scratch.on_path.insert(next);
            if phase == 0 {
                scratch.forward.push(next);
            } else {
                scratch.backward.push(next);
            }
            u = next;
        }
    }
    scratch.path.extend(scratch.backward.iter().rev());
    scratch.path.push(start);
    scratch.path.extend(scratch.forward.iter());
}

pub fn greedy_path(g: &Graph, mask: &VertexSet) -> Vec<usize> {
    let mut scratch = PathScratch::new(g.vertex_count());
    greedy_path_into(g, mask, &mut scratch);
    scratch.path
}

/// Scan chords of the path in `scratch` (pairs at positions `i < j`,
/// `j - i >= 2`, ascending). Calls `visit(bound)` per chord; stops early when
/// it returns true.
fn scan_cycles(g: &Graph, scratch: &mut PathScratch, mut visit: impl FnMut(usize) -> bool) -> bool {
    let path = &scratch.path;
    if path.len() < 3 {
        return false;
    }
    for (i, &v) in path.iter().enumerate() {
        scratch.position[v] = i;
    }
    for (i, &v) in path.iter().enumerate() {
        let row = g.neighbours(v);
        for (wi, (&a, &p)) in row.words().iter().zip(scratch.on_path.words()).enumerate() {
            let mut bits = a & p;
            while bits != 0 {
                let w = wi * 64 + bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                let j = scratch.position[w];
                if j >= i + 2 && visit(cycle_bound(j - i + 1)) {
                    return true;
                }
            }
        }
    }
    false
}

/// Decides whether the greedy path (or a cycle it closes) proves that
/// `g[mask]` has treedepth greater than `target_depth`.
pub fn can_prune_by_path_lower_bound_with(
    g: &Graph,
    mask: &VertexSet,
    target_depth: usize,
    scratch: &mut PathScratch,
) -> bool {
    greedy_path_into(g, mask, scratch);
    if path_bound(scratch.path.len()) > target_depth {
        return true;
    }
    scan_cycles(g, scratch, |bound| bound > target_depth)
}

pub fn can_prune_by_path_lower_bound(g: &Graph, mask: &VertexSet, target_depth: usize) -> bool {
    let mut scratch = PathScratch::new(g.vertex_count());
    can_prune_by_path_lower_bound_with(g, mask, target_depth, &mut scratch)
}

/// Largest value the path bound (with cycle refinement) certifies for `g[mask]`.
pub fn path_lower_bound(g: &Graph, mask: &VertexSet) -> usize {
    let mut scratch = PathScratch::new(g.vertex_count());
    greedy_path_into(g, mask, &mut scratch);
    if scratch.path.is_empty() {
        return 0;
    }
    let mut best = path_bound(scratch.path.len());
    scan_cycles(g, &mut scratch, |bound| {
        best = best.max(bound);
        false
    });
    best
}
