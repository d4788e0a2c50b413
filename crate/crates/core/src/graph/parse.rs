//! Edge-list and DIMACS-style (`p tdp n m`) text formats.
//!
//! Edge list: one whitespace-separated pair of vertex tokens per line, `#`
//! starts a comment. Tokens are arbitrary; vertices are numbered `1..=n` in
//! order of first appearance.
//!
//! DIMACS: optional `c` comment lines, a `p tdp <n> <m>` header, then `m`
//! lines `u v` with `1 <= u, v <= n`. The header's numbering is kept, so
//! isolated vertices are representable.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            "dimacs" | "dimacs-gr" | "gr" => Ok(GraphFormat::Dimacs),
            other => Err(Error::InvalidArgument(format!("unknown graph format `{other}`"))),
        }
    }
}

impl GraphFormat {
    /// Guess from a file name: `.gr` and `.dimacs` are DIMACS, the rest edge lists.
    pub fn from_path(path: &std::path::Path) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("gr") | Some("dimacs") => GraphFormat::Dimacs,
            _ => GraphFormat::EdgeList,
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected two vertex tokens, found {}", tokens.len()),
            });
        }
        if tokens[0] == tokens[1] {
            return Err(Error::SelfLoop {
                vertex: tokens[0].to_string(),
                line: Some(line_no),
            });
        }
        let mut id_of = |t| {
            let next = ids.len() + 1;
            *ids.entry(t).or_insert(next)
        };
        let u = id_of(tokens[0]);
        let v = id_of(tokens[1]);
        edges.push((u, v));
    }
    Graph::from_edges(ids.len(), &edges)
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "p" {
            if header.is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "duplicate `p` header".into(),
                });
            }
            if tokens.len() != 4 {
                return Err(Error::Parse {
                    line: line_no,
                    message: "header must read `p tdp <n> <m>`".into(),
                });
            }
            let n = parse_count(tokens[2], line_no)?;
            let m = parse_count(tokens[3], line_no)?;
            header = Some((n, m));
            continue;
        }
        let Some((n, _)) = header else {
            return Err(Error::Parse {
                line: line_no,
                message: "edge line before `p` header".into(),
            });
        };
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected `u v`, found {} tokens", tokens.len()),
            });
        }
        let u = parse_count(tokens[0], line_no)?;
        let v = parse_count(tokens[1], line_no)?;
        for x in [u, v] {
            if x == 0 || x > n {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("vertex {x} outside 1..={n}"),
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop {
                vertex: u.to_string(),
                line: Some(line_no),
            });
        }
        edges.push((u, v));
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing `p tdp <n> <m>` header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

fn parse_count(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("`{token}` is not a non-negative integer"),
    })
}

/// Render as an edge list (`u v` per line, `u < v`).
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Render in the DIMACS `p tdp` format.
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p tdp {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
