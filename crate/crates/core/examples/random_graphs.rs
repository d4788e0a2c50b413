//! Seeded Erdős–Rényi graphs: the same seed always yields the same graph.
//! Prints the mean treedepth per edge probability.

use treedepth::graph::{generate, GraphFamily};
use treedepth::{td_optimise, SolverConfig};

fn main() -> treedepth::Result<()> {
    let n = std::env::args().nth(1).map_or(16, |s| s.parse().expect("n must be an integer"));
    let a = generate(&GraphFamily::Gnp { n, p: 0.5, seed: 7 })?;
    let b = generate(&GraphFamily::Gnp { n, p: 0.5, seed: 7 })?;
    assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());

    for p10 in 1..=9 {
        let p = p10 as f64 / 10.0;
        let mut total = 0;
        let mut nodes = 0;
        for seed in 1..=10 {
            let r = td_optimise(&generate(&GraphFamily::Gnp { n, p, seed })?, &SolverConfig::default());
            total += r.lower_bound;
            nodes += r.stats.nodes;
        }
        println!("n={n} p={p:.1}: mean td {:.1}, mean nodes {}", total as f64 / 10.0, nodes / 10);
    }
    Ok(())
}
