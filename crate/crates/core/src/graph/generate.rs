//! Deterministic graph families and seeded Erdős–Rényi graphs.
//!
//! `G(n, p)` uses ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64(seed)`).
//! Pairs `(i, j)` with `i < j` are visited in lexicographic order; each
//! consumes one `next_u64()` draw `x` and becomes an edge iff
//! `(x >> 11) * 2^-53 < p`. ChaCha's output stream is value-stable, so the
//! same `(n, p, seed)` gives the same graph on every platform and release.

use std::fmt;
use std::str::FromStr;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum GraphFamily {
    Path(usize),
    Cycle(usize),
    Clique(usize),
    /// Balanced `K_{⌊n/2⌋, ⌈n/2⌉}` on `n` vertices.
    CompleteBipartite(usize),
    /// Complete binary tree in heap order: `v` has children `2v` and `2v+1`.
    BinaryTree(usize),
    /// `side × side` grid; vertex `(r, c)` is `r * side + c + 1`.
    SquareGrid(usize),
    Gnp { n: usize, p: f64, seed: u64 },
}

pub fn generate(family: &GraphFamily) -> Result<Graph> {
    use GraphFamily::*;
    let at_least = |what: &str, value: usize, min: usize| {
        if value < min {
            Err(Error::InvalidArgument(format!("{what} must be at least {min}, got {value}")))
        } else {
            Ok(())
        }
    };
    let mut edges = Vec::new();
    let n = match *family {
        Path(n) => {
            at_least("path length", n, 1)?;
            edges.extend((1..n).map(|v| (v, v + 1)));
            n
        }
        Cycle(n) => {
            at_least("cycle length", n, 3)?;
            edges.extend((1..n).map(|v| (v, v + 1)));
            edges.push((n, 1));
            n
        }
        Clique(n) => {
            at_least("clique size", n, 1)?;
            for u in 1..=n {
                edges.extend((u + 1..=n).map(|v| (u, v)));
            }
            n
        }
        CompleteBipartite(n) => {
            at_least("complete bipartite order", n, 1)?;
            let left = n / 2;
            for u in 1..=left {
                edges.extend((left + 1..=n).map(|v| (u, v)));
            }
            n
        }
        BinaryTree(n) => {
            at_least("binary tree order", n, 1)?;
            edges.extend((2..=n).map(|v| (v / 2, v)));
            n
        }
        SquareGrid(side) => {
            at_least("grid side", side, 1)?;
            let id = |r: usize, c: usize| r * side + c + 1;
            for r in 0..side {
                for c in 0..side {
                    if c + 1 < side {
                        edges.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < side {
                        edges.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            side * side
        }
        Gnp { n, p, seed } => {
            at_least("G(n,p) order", n, 1)?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidArgument(format!("edge probability {p} outside [0, 1]")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
            for u in 1..=n {
                for v in u + 1..=n {
                    let x = (rng.next_u64() >> 11) as f64 * SCALE;
                    if x < p {
                        edges.push((u, v));
                    }
                }
            }
            n
        }
    };
    Graph::from_edges(n, &edges)
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GraphFamily::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Clique(n) => write!(f, "clique:{n}"),
            CompleteBipartite(n) => write!(f, "complete_bipartite:{n}"),
            BinaryTree(n) => write!(f, "binary_tree:{n}"),
            SquareGrid(s) => write!(f, "square_grid:{s}"),
            Gnp { n, p, seed } => write!(f, "gnp:{n}:{p}:{seed}"),
        }
    }
}

impl GraphFamily {
    /// Build from a family name and its positional parameters, e.g.
    /// `("gnp", ["12", "0.3", "7"])`.
    pub fn from_parts(name: &str, params: &[&str]) -> Result<GraphFamily> {
        let bad = |msg: String| Error::InvalidArgument(msg);
        let size = |i: usize| -> Result<usize> {
            let s = params.get(i).ok_or_else(|| bad(format!("{name}: missing size parameter")))?;
            s.parse().map_err(|_| bad(format!("{name}: `{s}` is not a size")))
        };
        let arity = |expected: usize| {
            if params.len() == expected {
                Ok(())
            } else {
                Err(bad(format!("{name} takes {expected} parameter(s), got {}", params.len())))
            }
        };
        let family = match name {
            "path" => GraphFamily::Path(size(0)?),
            "cycle" => GraphFamily::Cycle(size(0)?),
            "clique" => GraphFamily::Clique(size(0)?),
            "complete_bipartite" => GraphFamily::CompleteBipartite(size(0)?),
            "binary_tree" => GraphFamily::BinaryTree(size(0)?),
            "square_grid" | "grid" => GraphFamily::SquareGrid(size(0)?),
            "gnp" => {
                arity(3)?;
                let p = params[1].parse().map_err(|_| bad(format!("gnp: `{}` is not a probability", params[1])))?;
                let seed = params[2].parse().map_err(|_| bad(format!("gnp: `{}` is not a seed", params[2])))?;
                return Ok(GraphFamily::Gnp { n: size(0)?, p, seed });
            }
            other => return Err(bad(format!("unknown graph family `{other}`"))),
        };
        arity(1)?;
        Ok(family)
    }
}

impl FromStr for GraphFamily {
    type Err = Error;

    /// Parses the `family:param[:param...]` form produced by `Display`.
    fn from_str(s: &str) -> Result<GraphFamily> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or("");
        let params: Vec<&str> = parts.collect();
        GraphFamily::from_parts(name, &params)
    }
}
