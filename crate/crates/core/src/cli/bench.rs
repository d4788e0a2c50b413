//! Ablation benchmark: every manifest instance under every chosen
//! configuration, one CSV row each.
//!
//! Manifest lines hold an instance and an optional expected treedepth:
//!
//! ```text
//! # comment
//! famous/petersen.gr 6
//! gen:square_grid:5 9
//! gen:gnp:12:0.3:7
//! ```
//!
//! Paths are relative to the manifest. Timeouts are written with `*` in
//! the `td` column.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use clap::Args;

use super::{load_graph, seconds, EXIT_FAILURE, EXIT_OK};
use crate::error::{Error, Result};
use crate::graph::{generate, Graph, GraphFamily};
use crate::solver::{td_optimise, SolveStatus, SolverConfig};
use crate::verify::check_forest;

pub const CSV_HEADER: [&str; 13] = [
    "name",
    "n",
    "m",
    "config",
    "td",
    "status",
    "ms",
    "nodes",
    "prune_slb",
    "prune_plb",
    "skip_orbit",
    "skip_dom",
    "skip_onlychild",
];

#[derive(Debug, Args)]
pub struct BenchArgs {
    pub manifest: PathBuf,
    /// Comma-separated subset of All,-LB,-Sym,-Dom,-Ord,-Orb,-OC. `-Sym` turns
    /// off both the orbit and only-child rules.
    #[arg(long, default_value = "All", allow_hyphen_values = true)]
    pub configs: String,
    /// Per-run limit in seconds.
    #[arg(long, default_value_t = 60.0)]
    pub timeout: f64,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub expected: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchStatus {
    Optimal,
    Timeout,
    /// Finished, but disagrees with another configuration or the manifest.
    Mismatch,
    /// Finished with a forest that fails verification.
    Invalid,
}

impl BenchStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            BenchStatus::Optimal => "optimal",
            BenchStatus::Timeout => "timeout",
            BenchStatus::Mismatch => "mismatch",
            BenchStatus::Invalid => "invalid",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "optimal" => BenchStatus::Optimal,
            "timeout" => BenchStatus::Timeout,
            "mismatch" => BenchStatus::Mismatch,
            "invalid" => BenchStatus::Invalid,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub config: String,
    /// `None` on timeout.
    pub td: Option<usize>,
    pub status: BenchStatus,
    pub ms: f64,
    pub nodes: u64,
    pub prune_slb: u64,
    pub prune_plb: u64,
    pub skip_orbit: u64,
    pub skip_dom: u64,
    pub skip_onlychild: u64,
}

impl BenchRecord {
    pub fn to_fields(&self) -> Vec<String> {
        vec![
            self.name.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.config.clone(),
            self.td.map_or("*".to_string(), |t| t.to_string()),
            self.status.as_str().to_string(),
            format!("{:.3}", self.ms),
            self.nodes.to_string(),
            self.prune_slb.to_string(),
            self.prune_plb.to_string(),
            self.skip_orbit.to_string(),
            self.skip_dom.to_string(),
            self.skip_onlychild.to_string(),
        ]
    }

    pub fn from_record(r: &csv::StringRecord) -> Result<Self> {
        let bad = |what: &str| Error::InvalidArgument(format!("bench row {:?}: bad {what}", r));
        if r.len() != CSV_HEADER.len() {
            return Err(bad("column count"));
        }
        let int = |i: usize| r[i].parse::<u64>().map_err(|_| bad(CSV_HEADER[i]));
        Ok(BenchRecord {
            name: r[0].to_string(),
            n: int(1)? as usize,
            m: int(2)? as usize,
            config: r[3].to_string(),
            td: if &r[4] == "*" { None } else { Some(int(4)? as usize) },
            status: BenchStatus::parse(&r[5]).ok_or_else(|| bad("status"))?,
            ms: r[6].parse().map_err(|_| bad("ms"))?,
            nodes: int(7)?,
            prune_slb: int(8)?,
            prune_plb: int(9)?,
            skip_orbit: int(10)?,
            skip_dom: int(11)?,
            skip_onlychild: int(12)?,
        })
    }
}

/// Read a manifest; `base` resolves relative paths.
pub fn parse_manifest(text: &str, base: &Path) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let parse_err = |message: String| Error::Parse { line: idx + 1, message };
        if tokens.len() > 2 {
            return Err(parse_err("expected `<instance> [treedepth]`".into()));
        }
        let expected = tokens
            .get(1)
            .map(|t| t.parse::<usize>().map_err(|_| parse_err(format!("`{t}` is not a treedepth"))))
            .transpose()?;
        let (name, graph) = match tokens[0].strip_prefix("gen:") {
            Some(spec) => {
                let family: GraphFamily = spec.parse()?;
                (family.to_string(), generate(&family)?)
            }
            None => {
                let path = base.join(tokens[0]);
                let name = Path::new(tokens[0])
                    .file_stem()
                    .map_or_else(|| tokens[0].to_string(), |s| s.to_string_lossy().into_owned());
                (name, load_graph(&path, None)?)
            }
        };
        out.push(Instance { name, graph, expected });
    }
    Ok(out)
}

pub fn parse_labels(list: &str) -> Result<Vec<(String, SolverConfig)>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|label| {
            SolverConfig::from_label(label)
                .map(|c| (label.to_string(), c))
                .ok_or_else(|| Error::InvalidArgument(format!("unknown config `{label}`; expected one of {:?}", SolverConfig::LABELS)))
        })
        .collect()
}

/// Solve every `(instance, config)` pair on `jobs` threads. Rows come back
/// instance-major in manifest order, then flagged by [`check_consistency`].
pub fn run_bench(instances: &[Instance], configs: &[(String, SolverConfig)], timeout: Duration, jobs: usize) -> Vec<BenchRecord> {
    let tasks: Vec<(usize, usize)> = (0..instances.len())
        .flat_map(|i| (0..configs.len()).map(move |c| (i, c)))
        .collect();
    let results: Mutex<Vec<Option<BenchRecord>>> = Mutex::new(vec![None; tasks.len()]);
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs.max(1).min(tasks.len().max(1)) {
            scope.spawn(|| loop {
                let t = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(i, c)) = tasks.get(t) else { break };
                let record = run_one(&instances[i], &configs[c].0, &configs[c].1, timeout);
                results.lock().expect("worker panicked")[t] = Some(record);
            });
        }
    });
    let mut rows: Vec<BenchRecord> = results
        .into_inner()
        .expect("worker panicked")
        .into_iter()
        .map(|r| r.expect("every task ran"))
        .collect();
    check_consistency(instances, &mut rows);
    rows
}

fn run_one(inst: &Instance, label: &str, config: &SolverConfig, timeout: Duration) -> BenchRecord {
    let mut config = config.clone();
    config.time_limit = Some(timeout);
    let r = td_optimise(&inst.graph, &config);
    let status = match (&r.status, &r.forest) {
        (SolveStatus::Optimal, Some(f)) => {
            let report = check_forest(&inst.graph, f);
            if report.valid && report.depth == r.lower_bound {
                BenchStatus::Optimal
            } else {
                BenchStatus::Invalid
            }
        }
        _ => BenchStatus::Timeout,
    };
    let s = &r.stats;
    BenchRecord {
        name: inst.name.clone(),
        n: inst.graph.vertex_count(),
        m: inst.graph.edge_count(),
        config: label.to_string(),
        td: r.treedepth(),
        status,
        ms: s.elapsed.as_secs_f64() * 1e3,
        nodes: s.nodes,
        prune_slb: s.prune_simple_bound,
        prune_plb: s.prune_path_bound,
        skip_orbit: s.skip_orbit,
        skip_dom: s.skip_domination,
        skip_onlychild: s.skip_only_child,
    }
}

/// Mark finished rows whose treedepth differs from the manifest value or,
/// without one, from another finished row of the same instance. Returns
/// the number of rows flagged.
pub fn check_consistency(instances: &[Instance], rows: &mut [BenchRecord]) -> usize {
    let mut flagged = 0;
    for inst in instances {
        let same: Vec<usize> = (0..rows.len()).filter(|&i| rows[i].name == inst.name).collect();
        let tds: Vec<usize> = same.iter().filter_map(|&i| rows[i].td).collect();
        let disagree = |td: usize| match inst.expected {
            Some(e) => td != e,
            None => tds.iter().any(|&t| t != td),
        };
        for &i in &same {
            if let Some(td) = rows[i].td {
                if rows[i].status == BenchStatus::Optimal && disagree(td) {
                    rows[i].status = BenchStatus::Mismatch;
                    flagged += 1;
                }
            }
        }
    }
    flagged
}

pub fn write_csv(rows: &[BenchRecord], out: &mut dyn Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in rows {
        w.write_record(r.to_fields()).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv(text: &str) -> Result<Vec<BenchRecord>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| Error::Io(e.to_string()))?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::InvalidArgument(format!("unexpected CSV header {header:?}")));
    }
    reader
        .records()
        .map(|r| BenchRecord::from_record(&r.map_err(|e| Error::Io(e.to_string()))?))
        .collect()
}

pub fn cmd_bench(args: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let configs = parse_labels(&args.configs)?;
    let text = std::fs::read_to_string(&args.manifest).map_err(|e| Error::Io(format!("{}: {e}", args.manifest.display())))?;
    let base = args.manifest.parent().unwrap_or(Path::new("."));
    let instances = parse_manifest(&text, base)?;
    let rows = run_bench(&instances, &configs, seconds(args.timeout)?, args.jobs);
    write_csv(&rows, out)?;
    let bad: Vec<&BenchRecord> = rows
        .iter()
        .filter(|r| matches!(r.status, BenchStatus::Mismatch | BenchStatus::Invalid))
        .collect();
    let timeouts = rows.iter().filter(|r| r.status == BenchStatus::Timeout).count();
    writeln!(err, "{} rows, {} timeouts, {} flagged", rows.len(), timeouts, bad.len())?;
    for r in &bad {
        writeln!(err, "flagged: {} under {}: {} ({})", r.name, r.config, r.td.map_or("*".into(), |t| t.to_string()), r.status.as_str())?;
    }
    Ok(if bad.is_empty() { EXIT_OK } else { EXIT_FAILURE })
}
