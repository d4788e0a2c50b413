//! Vertex orbits under the automorphism group, with a witnessing automorphism
//! for each pair, and the root candidates that survive symmetry breaking.

use treedepth::graph::samples::linked_squares;
use treedepth::symmetry::{is_automorphism, root_candidates, vertex_orbits};
use treedepth::SolverConfig;

fn main() {
    let g = linked_squares();
    let orbits = vertex_orbits(&g);
    println!("orbits: {:?} (exact: {})", orbits.orbits(), orbits.is_exact());
    for orbit in orbits.orbits() {
        for &v in &orbit[1..] {
            let perm = orbits.witness(orbit[0], v).expect("same orbit");
            assert!(is_automorphism(&g, &perm));
            println!("  {} -> {v} via {:?}", orbit[0], &perm[1..]);
        }
    }
    let all = g.all_vertices();
    let orbit_only = SolverConfig {
        use_domination: false,
        ..SolverConfig::default()
    };
    println!("orbit rule keeps {:?}", root_candidates(&g, &all, true, Some(&orbits), &orbit_only, 0));
    println!("all rules keep {:?}", root_candidates(&g, &all, true, Some(&orbits), &SolverConfig::default(), 0));
}
