//! Vertex orbits under the automorphism group.
//!
//! For each pair `(u, v)` that colour refinement cannot tell apart, a
//! backtracking search looks for an automorphism with `u ↦ v`. The search
//! runs on two copies of the graph that share one colouring: `u` is
//! individualised in the left copy, `v` in the right copy, both copies are
//! refined together, and a target cell is split by individualising its least
//! left vertex against every right vertex of the same colour. A branch dies as
//! soon as some colour has different counts in the two copies. Discrete
//! leaves give a candidate bijection, which is checked edge by edge.
//!
//! Every automorphism found is kept as a generator, so each reported orbit
//! pair comes with a witness.

use std::time::Instant;

use crate::graph::Graph;

/// Default cap on refinement nodes across one orbit computation.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

/// Orbit partition of `1..=n`, each vertex labelled by the least member of
/// its orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitLabels {
    rep: Vec<usize>,
    generators: Vec<Vec<usize>>,
    exact: bool,
}

impl OrbitLabels {
    /// Every vertex alone in its orbit. Always a sound labelling.
    pub fn singletons(n: usize) -> Self {
        OrbitLabels {
            rep: (0..=n).collect(),
            generators: Vec::new(),
            exact: false,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rep.len() - 1
    }

    /// Least vertex of the orbit containing `v`.
    #[inline]
    pub fn orbit(&self, v: usize) -> usize {
        self.rep[v]
    }

    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.rep[u] == self.rep[v]
    }

    /// False when the search hit its budget and fell back to singletons.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Automorphisms found, as image arrays indexed `1..=n` (`g[0] = 0`).
    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    /// Orbits as ascending vertex lists, ordered by representative.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.rep.len()];
        for v in 1..self.rep.len() {
            let r = self.rep[v];
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(v);
        }
        out
    }

    /// An automorphism (image array) mapping `u` to `v`, composed from the
    /// stored generators. `None` if they are in different orbits.
    pub fn witness(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        if !self.same_orbit(u, v) {
            return None;
        }
        let n = self.vertex_count();
        let identity: Vec<usize> = (0..=n).collect();
        if u == v {
            return Some(identity);
        }
        // BFS over the Schreier graph from u; the permutation stored with x maps u to x.
        let mut reach: Vec<Option<Vec<usize>>> = vec![None; n + 1];
        reach[u] = Some(identity);
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            let to_x = reach[x].clone().expect("queued vertices are reached");
            for gen in &self.generators {
                let y = gen[x];
                if reach[y].is_none() {
                    let to_y: Vec<usize> = to_x.iter().map(|&i| gen[i]).collect();
                    if y == v {
                        return Some(to_y);
                    }
                    reach[y] = Some(to_y);
                    queue.push_back(y);
                }
            }
        }
        None
    }
}

/// True iff `perm` (image array, `perm[0] = 0`) is an automorphism of `g`.
pub fn is_automorphism(g: &Graph, perm: &[usize]) -> bool {
    let n = g.vertex_count();
    if perm.len() != n + 1 {
        return false;
    }
    let mut seen = vec![false; n + 1];
    for &x in &perm[1..] {
        if x == 0 || x > n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    g.edges().all(|(a, b)| g.has_edge(perm[a], perm[b]))
}

pub fn vertex_orbits(g: &Graph) -> OrbitLabels {
    vertex_orbits_with(g, DEFAULT_NODE_BUDGET, None)
}

/// As [`vertex_orbits`], with an explicit node budget and optional deadline.
/// Exhausting either yields [`OrbitLabels::singletons`].
pub fn vertex_orbits_with(g: &Graph, budget: u64, deadline: Option<Instant>) -> OrbitLabels {
    let n = g.vertex_count();
    let mut search = PairSearch::new(g, budget, deadline);
    let mut base = vec![0u32; 2 * n];
    search.refine(&mut base);

    let mut uf: Vec<usize> = (0..n).collect();
    let mut generators = Vec::new();
    for v in 1..n {
        if find(&mut uf, v) != v {
            continue;
        }
        for u in 0..v {
            if find(&mut uf, u) != u || base[u] != base[v] || find(&mut uf, v) == u {
                continue;
            }
            let mut cols = base.clone();
            let fresh = cols.iter().max().map_or(0, |m| m + 1);
            cols[u] = fresh;
            cols[n + v] = fresh;
            match search.search(cols) {
                Some(image) => {
                    for (i, &j) in image.iter().enumerate() {
                        union_min(&mut uf, i, j);
                    }
                    let mut gen = vec![0; n + 1];
                    for (i, &j) in image.iter().enumerate() {
                        gen[i + 1] = j + 1;
                    }
                    generators.push(gen);
                    break;
                }
                None if search.exhausted => return OrbitLabels::singletons(n),
                None => {}
            }
        }
    }
    let mut rep = vec![0; n + 1];
    for v in 0..n {
        rep[v + 1] = find(&mut uf, v) + 1;
    }
    OrbitLabels {
        rep,
        generators,
        exact: true,
    }
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

fn union_min(uf: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(uf, a), find(uf, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        uf[hi] = lo;
    }
}

/// Backtracking search for an isomorphism between two coloured copies of
/// one graph. Colours live in one array: `0..n` left, `n..2n` right.
struct PairSearch<'a> {
    g: &'a Graph,
    n: usize,
    adj: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
    deadline: Option<Instant>,
    exhausted: bool,
}

impl<'a> PairSearch<'a> {
    fn new(g: &'a Graph, budget: u64, deadline: Option<Instant>) -> Self {
        let n = g.vertex_count();
        let adj = (1..=n).map(|v| g.neighbours(v).iter().map(|w| w - 1).collect()).collect();
        PairSearch {
            g,
            n,
            adj,
            nodes: 0,
            budget,
            deadline,
            exhausted: false,
        }
    }

    /// Refine to the coarsest equitable colouring. Returns false if the two
    /// copies stop having matching colour counts.
    fn refine(&self, cols: &mut [u32]) -> bool {
        let n = self.n;
        let mut classes = count_classes(cols);
        let mut keyed: Vec<(Vec<u32>, usize)> = Vec::with_capacity(2 * n);
        loop {
            keyed.clear();
            for x in 0..2 * n {
                let offset = if x < n { 0 } else { n };
                let mut sig = Vec::with_capacity(self.adj[x - offset].len() + 1);
                sig.push(cols[x]);
                let start = sig.len();
                sig.extend(self.adj[x - offset].iter().map(|&y| cols[y + offset]));
                sig[start..].sort_unstable();
                keyed.push((sig, x));
            }
            keyed.sort_unstable();
            let mut colour = 0u32;
            let mut left = 0usize;
            let mut right = 0usize;
            for i in 0..keyed.len() {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    if left != right {
                        return false;
                    }
                    colour += 1;
                    left = 0;
                    right = 0;
                }
                let x = keyed[i].1;
                if x < n {
                    left += 1;
                } else {
                    right += 1;
                }
                cols[x] = colour;
            }
            if left != right {
                return false;
            }
            let now = if keyed.is_empty() { 0 } else { colour as usize + 1 };
            if now == classes {
                return true;
            }
            classes = now;
        }
    }

    fn search(&mut self, mut cols: Vec<u32>) -> Option<Vec<usize>> {
        self.nodes += 1;
        if self.nodes > self.budget || self.deadline.is_some_and(|d| self.nodes.is_multiple_of(256) && Instant::now() >= d) {
            self.exhausted = true;
            return None;
        }
        if !self.refine(&mut cols) {
            return None;
        }
        let n = self.n;
        // Smallest non-singleton cell, by left-copy membership.
        let mut size = vec![0usize; 2 * n + 1];
        for &c in &cols[..n] {
            size[c as usize] += 1;
        }
        let target = (0..size.len()).filter(|&c| size[c] > 1).min_by_key(|&c| size[c]);
        let Some(target) = target else {
            let mut right_of = vec![0; 2 * n + 1];
            for y in 0..n {
                right_of[cols[n + y] as usize] = y;
            }
            let image: Vec<usize> = (0..n).map(|x| right_of[cols[x] as usize]).collect();
            let ok = self.g.edges().all(|(a, b)| self.g.has_edge(image[a - 1] + 1, image[b - 1] + 1));
            return ok.then_some(image);
        };
        let target = target as u32;
        let x = (0..n).find(|&x| cols[x] == target).expect("target cell is non-empty");
        let mut choices: Vec<usize> = (0..n).filter(|&y| cols[n + y] == target).collect();
        if let Some(pos) = choices.iter().position(|&y| y == x) {
            choices.swap(0, pos);
        }
        let fresh = cols.iter().max().map_or(0, |m| m + 1);
        for y in choices {
            let mut next = cols.clone();
            next[x] = fresh;
            next[n + y] = fresh;
            if let Some(found) = self.search(next) {
                return Some(found);
            }
            if self.exhausted {
                return None;
            }
        }
        None
    }
}

fn count_classes(cols: &[u32]) -> usize {
    let mut c: Vec<u32> = cols.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}
