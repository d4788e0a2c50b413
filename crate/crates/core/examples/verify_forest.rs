//! Check elimination forests: a solver result, a hand-written one, and a broken one.

use treedepth::graph::samples::{linked_squares, linked_squares_forest};
use treedepth::verify::check_forest;
use treedepth::{td_optimise, EliminationForest, SolverConfig};

fn main() -> treedepth::Result<()> {
    let g = linked_squares();
    let solved = td_optimise(&g, &SolverConfig::default()).forest.unwrap();
    println!("solver forest: {:?}", check_forest(&g, &solved));

    let by_hand = EliminationForest::from_parents(&linked_squares_forest());
    println!("hand forest:   {:?}", check_forest(&g, &by_hand));

    // Nine roots: no edge joins an ancestor to a descendant.
    let star = EliminationForest::parse("0 0 0 0 0 0 0 0 0\n")?;
    println!("flat forest:   {:?}", check_forest(&g, &star));
    Ok(())
}
