use std::fmt;

use crate::error::{Error, Result};
use crate::graph::VertexPermutation;

/// Rooted forest on `1..=n` stored as a parent array; parent 0 marks a root.
///
/// Nothing here checks acyclicity or the ancestor condition; that is the job
/// of [`crate::verify::check_forest`].
#[derive(Clone, PartialEq, Eq)]
pub struct EliminationForest {
    // parent[0] is padding so that parent[v] is the parent of v.
    parent: Vec<usize>,
}

impl EliminationForest {
    /// `parents[v - 1]` is the parent of `v`.
    pub fn from_parents(parents: &[usize]) -> Self {
        let mut parent = Vec::with_capacity(parents.len() + 1);
        parent.push(0);
        parent.extend_from_slice(parents);
        EliminationForest { parent }
    }

    /// Parent array indexed `0..=n` with a dummy entry at index 0.
    pub(crate) fn from_padded(parent: Vec<usize>) -> Self {
        debug_assert!(!parent.is_empty() && parent[0] == 0);
        EliminationForest { parent }
    }

    pub fn len(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn parent(&self, v: usize) -> usize {
        self.parent[v]
    }

    /// The parent array, `parents()[v - 1]` belonging to `v`.
    pub fn parents(&self) -> &[usize] {
        &self.parent[1..]
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len()).filter(|&v| self.parent[v] == 0)
    }

    /// Vertices on the path from `v` up to its root, `v` included. `None`
    /// if the walk leaves `1..=n` or revisits a vertex.
    pub fn depth_of(&self, v: usize) -> Option<usize> {
        let n = self.len();
        let mut depth = 0;
        let mut x = v;
        while x != 0 {
            if x > n || depth >= n {
                return None;
            }
            depth += 1;
            x = self.parent[x];
        }
        Some(depth)
    }

    /// Largest vertex count on a root-to-leaf path; `None` on a malformed array.
    pub fn depth(&self) -> Option<usize> {
        (1..=self.len()).try_fold(0, |best, v| self.depth_of(v).map(|d| best.max(d)))
    }

    /// True iff `a` is `b` or lies on the path from `b` to its root.
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        let mut x = b;
        for _ in 0..=self.len() {
            if x == a {
                return true;
            }
            if x == 0 || x > self.len() {
                return false;
            }
            x = self.parent[x];
        }
        false
    }

    /// Rename vertices: vertex `v` here becomes `perm.to_old(v)`.
    pub fn relabel_to_old(&self, perm: &VertexPermutation) -> Result<Self> {
        if perm.len() != self.len() {
            return Err(Error::InvalidArgument(format!(
                "permutation on {} vertices applied to a forest on {}",
                perm.len(),
                self.len()
            )));
        }
        let mut parent = vec![0; self.parent.len()];
        for v in 1..=self.len() {
            parent[perm.to_old(v)] = perm.to_old(self.parent[v]);
        }
        Ok(EliminationForest { parent })
    }

    /// Parse either `v parent` lines or a flat whitespace-separated parent
    /// array. Input is read as lines when every line holds two numbers and
    /// the first column lists each of `1..=n` once; a lone count may precede
    /// such lines. Anything else is read as a flat array.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<(usize, Vec<&str>)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>()))
            .filter(|(_, t)| !t.is_empty())
            .collect();
        let number = |tok: &str, line: usize| -> Result<usize> {
            tok.parse().map_err(|_| Error::Parse {
                line,
                message: format!("`{tok}` is not a vertex number"),
            })
        };
        let body = match lines.first() {
            Some((_, t)) if t.len() == 1 && lines.len() > 1 && lines[1..].iter().all(|(_, t)| t.len() == 2) => &lines[1..],
            _ => &lines[..],
        };
        if let Some(parent) = Self::parse_pairs(body) {
            return Ok(EliminationForest { parent });
        }
        let mut parents = Vec::new();
        for (line, t) in &lines {
            for tok in t {
                parents.push(number(tok, *line)?);
            }
        }
        Ok(Self::from_parents(&parents))
    }
}

impl EliminationForest {
    fn parse_pairs(body: &[(usize, Vec<&str>)]) -> Option<Vec<usize>> {
        let n = body.len();
        if n == 0 || body.iter().any(|(_, t)| t.len() != 2) {
            return None;
        }
        let mut parent = vec![usize::MAX; n + 1];
        parent[0] = 0;
        for (_, t) in body {
            let v: usize = t[0].parse().ok()?;
            let p: usize = t[1].parse().ok()?;
            if v == 0 || v > n || parent[v] != usize::MAX {
                return None;
            }
            parent[v] = p;
        }
        Some(parent)
    }
}

impl fmt::Debug for EliminationForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EliminationForest({:?})", self.parents())
    }
}

/// `v parent[v]` lines, one per vertex.
impl fmt::Display for EliminationForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in 1..=self.len() {
            writeln!(f, "{v} {}", self.parent[v])?;
        }
        Ok(())
    }
}
