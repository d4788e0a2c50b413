//! Treedepth of paths, cycles, cliques, balanced bicliques, binary trees and grids.

use treedepth::graph::{generate, GraphFamily};
use treedepth::{td_optimise, SolverConfig};

fn main() -> treedepth::Result<()> {
    let sizes = [10, 20, 30, 40, 50];
    let families = [
        ("path", GraphFamily::Path as fn(usize) -> GraphFamily),
        ("cycle", GraphFamily::Cycle),
        ("clique", GraphFamily::Clique),
        ("complete_bipartite", GraphFamily::CompleteBipartite),
        ("binary_tree", GraphFamily::BinaryTree),
    ];
    for (name, make) in families {
        let tds: Vec<String> = sizes
            .iter()
            .map(|&n| td_optimise(&generate(&make(n)).unwrap(), &SolverConfig::default()).lower_bound.to_string())
            .collect();
        println!("{name:<20} n = 10..50: {}", tds.join(" "));
    }
    // The 6x6 grid takes a few seconds in release mode.
    for side in 2..=6 {
        let r = td_optimise(&generate(&GraphFamily::SquareGrid(side))?, &SolverConfig::default());
        println!("grid {side}x{side}: td {} ({} nodes, {:?})", r.lower_bound, r.stats.nodes, r.stats.elapsed);
    }
    Ok(())
}
