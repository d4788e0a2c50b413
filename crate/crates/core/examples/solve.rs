//! Solve one graph and print its elimination forest.
//!
//! ```text
//! cargo run --release --example solve -- instances/famous/petersen.gr
//! ```
//! Without an argument a 4x4 grid is solved.

use treedepth::graph::{generate, parse_graph, GraphFamily, GraphFormat};
use treedepth::{td_optimise, SolverConfig};

fn main() -> treedepth::Result<()> {
    let g = match std::env::args().nth(1) {
        Some(path) => {
            let text = std::fs::read_to_string(&path)?;
            parse_graph(&text, GraphFormat::from_path(path.as_ref()))?
        }
        None => generate(&GraphFamily::SquareGrid(4))?,
    };
    let r = td_optimise(&g, &SolverConfig::default());
    let forest = r.forest.as_ref().expect("no limits were set");
    println!("n = {}, m = {}, treedepth = {}", g.vertex_count(), g.edge_count(), r.lower_bound);
    println!("roots: {:?}", forest.roots().collect::<Vec<_>>());
    print!("{forest}");
    println!("{} search nodes in {:?}", r.stats.nodes, r.stats.elapsed);
    Ok(())
}
