//! Solve the bundled named graphs and compare against their known treedepth.
//! Watkins snark is expected to hit the 10 s limit and print `*`.

use std::path::Path;
use std::time::Duration;

use treedepth::graph::{parse_graph, GraphFormat};
use treedepth::{td_optimise, SolverConfig};

fn main() -> treedepth::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("instances/famous");
    let manifest = std::fs::read_to_string(dir.join("famous.manifest"))?;
    let config = SolverConfig {
        time_limit: Some(Duration::from_secs(10)),
        ..SolverConfig::default()
    };
    println!("{:<14} {:>3} {:>4} {:>4} {:>10} {:>10}", "graph", "n", "m", "td", "nodes", "ms");
    for line in manifest.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let mut it = line.split_whitespace();
        let file = it.next().unwrap();
        let known: usize = it.next().unwrap().parse().unwrap();
        let g = parse_graph(&std::fs::read_to_string(dir.join(file))?, GraphFormat::Dimacs)?;
        let r = td_optimise(&g, &config);
        let td = r.treedepth().map_or("*".to_string(), |t| t.to_string());
        let flag = if r.treedepth().is_some_and(|t| t != known) { "  MISMATCH" } else { "" };
        println!(
            "{:<14} {:>3} {:>4} {:>4} {:>10} {:>10.1}{flag}",
            file.trim_end_matches(".gr"),
            g.vertex_count(),
            g.edge_count(),
            td,
            r.stats.nodes,
            r.stats.elapsed.as_secs_f64() * 1e3
        );
    }
    Ok(())
}
