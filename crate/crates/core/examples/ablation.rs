//! Switch pruning rules off one at a time and watch the search grow.
//!
//! `-Sym` disables both the orbit and the only-child rule; `-Orb` and `-OC`
//! disable them one at a time.

use std::time::Duration;

use treedepth::graph::{generate, parse_graph, GraphFamily, GraphFormat};
use treedepth::{td_optimise, Graph, SolverConfig};

fn main() -> treedepth::Result<()> {
    let paley = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/instances/famous/paley13.gr"))?;
    let graphs: Vec<(&str, Graph)> = vec![
        ("paley13", parse_graph(&paley, GraphFormat::Dimacs)?),
        ("grid4", generate(&GraphFamily::SquareGrid(4))?),
        ("clique16", generate(&GraphFamily::Clique(16))?),
    ];
    for (name, g) in &graphs {
        println!("{name}");
        for label in SolverConfig::LABELS {
            let config = SolverConfig {
                time_limit: Some(Duration::from_secs(20)),
                ..SolverConfig::from_label(label).unwrap()
            };
            let r = td_optimise(g, &config);
            let td = r.treedepth().map_or(format!(">={}", r.lower_bound), |t| t.to_string());
            println!("  {label:<5} td {td:<4} nodes {:>10}  {:?}", r.stats.nodes, r.stats.elapsed);
        }
    }
    Ok(())
}
