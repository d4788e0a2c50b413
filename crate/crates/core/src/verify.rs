//! Independent checks: forest validation and a brute-force treedepth oracle.
//!
//! Nothing here calls into the solver, the bounds or the symmetry rules.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::forest::EliminationForest;
use crate::graph::{Graph, VertexSet};

/// Largest subgraph the oracle accepts.
pub const ORACLE_MAX_VERTICES: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestCheckReport {
    pub valid: bool,
    /// Longest root-to-leaf vertex count; 0 when the forest is malformed.
    pub depth: usize,
    pub violation: Option<String>,
}

impl ForestCheckReport {
    fn invalid(message: String) -> Self {
        ForestCheckReport {
            valid: false,
            depth: 0,
            violation: Some(message),
        }
    }
}

/// Is `f` a treedepth decomposition of `g`, and how deep is it?
pub fn check_forest(g: &Graph, f: &EliminationForest) -> ForestCheckReport {
    let n = g.vertex_count();
    if f.len() != n {
        return ForestCheckReport::invalid(format!("forest has {} entries for {n} vertices", f.len()));
    }
    if let Some(v) = g.vertices().find(|&v| f.parent(v) > n) {
        return ForestCheckReport::invalid(format!("parent of {v} is {}, outside 0..={n}", f.parent(v)));
    }
    if let Some(v) = g.vertices().find(|&v| f.parent(v) == v) {
        return ForestCheckReport::invalid(format!("vertex {v} is its own parent"));
    }
    // Depths by memoised walk; a walk that meets itself is a cycle.
    const UNSEEN: usize = 0;
    const ON_WALK: usize = usize::MAX;
    let mut depth = vec![UNSEEN; n + 1];
    let mut walk = Vec::new();
    for v in g.vertices() {
        let mut x = v;
        while x != 0 && depth[x] == UNSEEN {
            depth[x] = ON_WALK;
            walk.push(x);
            x = f.parent(x);
        }
        if x != 0 && depth[x] == ON_WALK {
            return ForestCheckReport::invalid(format!("parent pointers from {v} run into a cycle through {x}"));
        }
        let mut d = if x == 0 { 0 } else { depth[x] };
        while let Some(y) = walk.pop() {
            d += 1;
            depth[y] = d;
        }
    }
    for (u, v) in g.edges() {
        let (hi, lo) = if depth[u] <= depth[v] { (u, v) } else { (v, u) };
        if !f.is_ancestor(hi, lo) {
            return ForestCheckReport::invalid(format!("edge {u}-{v} joins vertices that are not ancestor and descendant"));
        }
    }
    ForestCheckReport {
        valid: true,
        depth: depth.iter().copied().max().unwrap_or(0),
        violation: None,
    }
}

/// Exact treedepth of `g[mask]` by exhaustive search, memoised per subset.
///
/// `td(∅) = 0`; a disconnected set takes the maximum over its components;
/// a connected set takes `1 + min over v of td(S - v)`.
pub fn brute_force_treedepth(g: &Graph, mask: &VertexSet) -> Result<usize> {
    let verts = mask.to_vec();
    if verts.len() > ORACLE_MAX_VERTICES {
        return Err(Error::OracleBudget {
            size: verts.len(),
            max: ORACLE_MAX_VERTICES,
        });
    }
    // Local adjacency over bit positions 0..s.
    let adj: Vec<u32> = verts
        .iter()
        .map(|&u| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &v)| g.has_edge(u, v))
                .fold(0u32, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let mut memo = HashMap::new();
    let full = if verts.is_empty() { 0 } else { u32::MAX >> (32 - verts.len()) };
    Ok(oracle(&adj, full, &mut memo))
}

fn oracle(adj: &[u32], set: u32, memo: &mut HashMap<u32, usize>) -> usize {
    if set == 0 {
        return 0;
    }
    if let Some(&d) = memo.get(&set) {
        return d;
    }
    // Flood fill the component of the lowest bit.
    let mut comp = set & set.wrapping_neg();
    loop {
        let mut grown = comp;
        let mut bits = comp;
        while bits != 0 {
            let i = bits.trailing_zeros();
            bits &= bits - 1;
            grown |= adj[i as usize] & set;
        }
        if grown == comp {
            break;
        }
        comp = grown;
    }
    let d = if comp != set {
        oracle(adj, comp, memo).max(oracle(adj, set & !comp, memo))
    } else {
        let mut best = usize::MAX;
        let mut bits = set;
        while bits != 0 {
            let i = bits.trailing_zeros();
            bits &= bits - 1;
            best = best.min(1 + oracle(adj, set & !(1 << i), memo));
        }
        best
    };
    memo.insert(set, d);
    d
}
