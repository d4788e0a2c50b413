//! Cross-check the solver under every toggle combination against exhaustive search.

use treedepth::graph::{generate, GraphFamily};
use treedepth::verify::brute_force_treedepth;
use treedepth::{td_optimise, SolverConfig};

fn main() -> treedepth::Result<()> {
    let configs: Vec<SolverConfig> = SolverConfig::all_toggle_combinations().collect();
    let mut checked = 0;
    for n in 1..=10 {
        for seed in 0..20 {
            let g = generate(&GraphFamily::Gnp { n, p: 0.4, seed })?;
            let td = brute_force_treedepth(&g, &g.all_vertices())?;
            for c in &configs {
                assert_eq!(td_optimise(&g, c).treedepth(), Some(td), "n={n} seed={seed} {c:?}");
                checked += 1;
            }
        }
    }
    println!("{checked} solves agree with the oracle across {} configurations", configs.len());
    Ok(())
}
