//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 success, 1 a verification failure or benchmark
//! disagreement, 2 bad input or usage, 3 time or node limit reached.

pub mod bench;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{build_simple_bound_table, greedy_path, path_lower_bound};
use crate::error::{Error, Result};
use crate::forest::EliminationForest;
use crate::graph::parse::{to_dimacs, to_edge_list};
use crate::graph::{parse_graph, Graph, GraphFamily, GraphFormat, VertexSet};
use crate::solver::{td_optimise, SolveStatus, SolverConfig};
use crate::symmetry::{root_candidates, vertex_orbits, CandidateFilter};
use crate::verify::check_forest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "treedepth", version, about = "Exact treedepth solver")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the treedepth of a graph file.
    Solve(SolveArgs),
    /// Write a generated graph to stdout.
    Gen(GenArgs),
    /// Check an elimination forest against a graph.
    Verify(VerifyArgs),
    /// Run a manifest of instances under several configurations, CSV to stdout.
    Bench(bench::BenchArgs),
    /// Show orbits, bounds and filtered root candidates of a graph.
    Debug(DebugArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Edgelist,
    Dimacs,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => GraphFormat::EdgeList,
            FormatArg::Dimacs => GraphFormat::Dimacs,
        }
    }
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Graph file, or `-` for stdin.
    pub input: PathBuf,
    /// Input format; guessed from the extension when omitted (`.gr` is DIMACS).
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
}

#[derive(Debug, Args)]
pub struct FeatureFlags {
    /// Disable both lower bounds.
    #[arg(long)]
    pub no_lb: bool,
    /// Disable orbit symmetry breaking (the bench label `-Sym` also disables the only-child rule).
    #[arg(long)]
    pub no_sym: bool,
    /// Disable the domination rule.
    #[arg(long)]
    pub no_dom: bool,
    /// Disable the only-child rule.
    #[arg(long)]
    pub no_only_child: bool,
    /// Keep the input numbering instead of sorting by degree.
    #[arg(long)]
    pub no_order: bool,
}

impl FeatureFlags {
    pub fn config(&self) -> SolverConfig {
        SolverConfig {
            use_lower_bounds: !self.no_lb,
            use_orbit_symmetry: !self.no_sym,
            use_domination: !self.no_dom,
            use_only_child: !self.no_only_child,
            use_degree_order: !self.no_order,
            ..SolverConfig::default()
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[command(flatten)]
    pub features: FeatureFlags,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    pub timeout: Option<f64>,
    /// Stop after this many search nodes.
    #[arg(long)]
    pub node_limit: Option<u64>,
    /// Print `v parent` for every vertex after the treedepth.
    #[arg(long)]
    pub print_forest: bool,
    /// Print search counters to stderr.
    #[arg(long)]
    pub stats: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// path, cycle, clique, complete_bipartite, binary_tree, square_grid or gnp.
    pub family: String,
    /// Size (grid side for square_grid); gnp takes `n p`.
    #[arg(required = true, num_args = 1..=2)]
    pub params: Vec<String>,
    /// Seed for gnp.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    /// Parent array (flat, 0 = root) or `v parent` lines, as written by `solve --print-forest`.
    pub forest: PathBuf,
    /// Also require this exact depth.
    #[arg(long)]
    pub expect_depth: Option<usize>,
}

#[derive(Debug, Args)]
pub struct DebugArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[command(flatten)]
    pub features: FeatureFlags,
}

/// Parse `args` (program name first) and run. Output goes to the given streams.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_INPUT
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            }
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(&a, out, err),
        Command::Gen(a) => cmd_gen(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Bench(a) => bench::cmd_bench(&a, out, err),
        Command::Debug(a) => cmd_debug(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

pub fn load_graph(path: &Path, format: Option<GraphFormat>) -> Result<Graph> {
    let text = read_input(path)?;
    let format = format.unwrap_or_else(|| GraphFormat::from_path(path));
    parse_graph(&text, format).map_err(|e| match e {
        Error::Parse { line, message } => Error::Io(format!("{}:{line}: {message}", path.display())),
        other => other,
    })
}

fn load(input: &GraphInput) -> Result<Graph> {
    load_graph(&input.input, input.format.map(Into::into))
}

fn seconds(s: f64) -> Result<Duration> {
    Duration::try_from_secs_f64(s).map_err(|_| Error::InvalidArgument(format!("invalid timeout {s}")))
}

pub fn cmd_solve(args: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let g = load(&args.graph)?;
    let mut config = args.features.config();
    config.time_limit = args.timeout.map(seconds).transpose()?;
    config.node_limit = args.node_limit;
    let r = td_optimise(&g, &config);
    if args.stats {
        let s = &r.stats;
        writeln!(
            err,
            "n={} m={} nodes={} prune_slb={} prune_plb={} skip_orbit={} skip_dom={} skip_onlychild={} max_live_components={} ms={:.3}",
            g.vertex_count(),
            g.edge_count(),
            s.nodes,
            s.prune_simple_bound,
            s.prune_path_bound,
            s.skip_orbit,
            s.skip_domination,
            s.skip_only_child,
            s.max_live_components,
            s.elapsed.as_secs_f64() * 1e3
        )?;
    }
    match (r.status, &r.forest) {
        (SolveStatus::Optimal, Some(forest)) => {
            writeln!(out, "{}", r.lower_bound)?;
            if args.print_forest {
                write!(out, "{forest}")?;
            }
            Ok(EXIT_OK)
        }
        _ => {
            writeln!(out, "TIMEOUT k>={}", r.lower_bound)?;
            Ok(EXIT_TIMEOUT)
        }
    }
}

pub fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<i32> {
    let mut params: Vec<&str> = args.params.iter().map(String::as_str).collect();
    let seed = args.seed.map(|s| s.to_string());
    if args.family == "gnp" {
        let seed = seed
            .as_deref()
            .ok_or_else(|| Error::InvalidArgument("gnp needs --seed".into()))?;
        params.push(seed);
    } else if seed.is_some() {
        return Err(Error::InvalidArgument(format!("{} takes no seed", args.family)));
    }
    let g = crate::graph::generate(&GraphFamily::from_parts(&args.family, &params)?)?;
    let text = match args.format {
        FormatArg::Edgelist => to_edge_list(&g),
        FormatArg::Dimacs => to_dimacs(&g),
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let g = load(&args.graph)?;
    let forest = EliminationForest::parse(&read_input(&args.forest)?)?;
    let report = check_forest(&g, &forest);
    if !report.valid {
        writeln!(out, "invalid: {}", report.violation.unwrap_or_default())?;
        return Ok(EXIT_FAILURE);
    }
    if let Some(want) = args.expect_depth {
        if report.depth != want {
            writeln!(out, "invalid: depth {} but {want} expected", report.depth)?;
            return Ok(EXIT_FAILURE);
        }
    }
    writeln!(out, "valid depth {}", report.depth)?;
    Ok(EXIT_OK)
}

fn join(vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Everything is reported in the numbering the solver searches in: the
/// degree order unless `--no-order` is given.
pub fn cmd_debug(args: &DebugArgs, out: &mut dyn Write) -> Result<i32> {
    let input = load(&args.graph)?;
    let config = args.features.config();
    let (g, perm) = if config.use_degree_order {
        input.reorder_by_degree()
    } else {
        (input.clone(), crate::graph::VertexPermutation::identity(input.vertex_count()))
    };
    let n = g.vertex_count();
    writeln!(out, "n={} m={} max_degree={}", n, g.edge_count(), g.max_degree())?;
    if !perm.is_identity() {
        writeln!(out, "numbering: new vertex i is input vertex order[i-1]; order = {}", join(perm.new_order().iter().copied()))?;
    }
    if n == 0 {
        return Ok(EXIT_OK);
    }
    let all = g.all_vertices();
    let connected = g.is_connected(&all);
    let orbits = (connected && config.use_orbit_symmetry).then(|| vertex_orbits(&g));
    match &orbits {
        Some(o) => {
            let list: Vec<String> = o.orbits().iter().map(|orb| format!("{{{}}}", join(orb.iter().copied()))).collect();
            writeln!(out, "orbits{}: {}", if o.is_exact() { "" } else { " (budget hit, singletons)" }, list.join(" "))?;
        }
        None => writeln!(out, "orbits: not used")?,
    }
    for comp in g.connected_components(&all) {
        let b = g.max_degree();
        let simple = if b > 0 { build_simple_bound_table(b, n)?.bound(comp.len()) } else { 1 };
        writeln!(
            out,
            "component {{{}}}: simple_bound={} path=[{}] path_bound={}",
            join(comp.iter()),
            simple,
            join(greedy_path(&g, &comp)),
            path_lower_bound(&g, &comp)
        )?;
    }
    if !connected {
        return Ok(EXIT_OK);
    }
    let top = root_candidates(&g, &all, true, orbits.as_ref(), &config, 0);
    writeln!(out, "root candidates: {}", join(top.iter().copied()))?;
    let filter = CandidateFilter::new(&g, &all, true, orbits.as_ref(), &config, 0);
    for v in all.iter() {
        if let Some(reason) = filter.check(v) {
            writeln!(out, "  skip {v}: {reason:?}")?;
        }
    }
    for &v in &top {
        let mut rest: VertexSet = all.clone();
        rest.remove(v);
        let comps = g.connected_components(&rest);
        let floor = if comps.len() == 1 { v } else { 0 };
        let parts: Vec<String> = comps
            .iter()
            .map(|c| {
                let cands = if c.len() == 1 {
                    c.to_vec()
                } else {
                    root_candidates(&g, c, false, None, &config, floor)
                };
                format!("{{{}}} -> [{}]", join(c.iter()), join(cands))
            })
            .collect();
        writeln!(out, "after {v}: {}", parts.join("  "))?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_from_args(std::iter::once("treedepth").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gen_examples() {
        let (code, out, _) = run_args(&["gen", "clique", "10"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), 45);
        assert_eq!(run_args(&["gen", "binary_tree", "10"]).1.lines().count(), 9);
        let (code, out, _) = run_args(&["gen", "gnp", "5", "0.0", "--seed", "1"]);
        assert_eq!((code, out.as_str()), (EXIT_OK, ""));
        assert_eq!(run_args(&["gen", "gnp", "5", "0.5"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["gen", "square_grid", "0"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["gen"]).0, EXIT_INPUT);
    }

    #[test]
    fn missing_file_is_an_input_error() {
        let (code, _, err) = run_args(&["solve", "/nonexistent/graph.gr"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("nonexistent"));
    }
}
