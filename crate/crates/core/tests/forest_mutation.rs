//! Perturbing one parent pointer of an optimal forest never yields a valid
//! forest shallower than the treedepth.

use proptest::prelude::*;
use treedepth::graph::{generate, GraphFamily};
use treedepth::solver::{td_optimise, SolverConfig};
use treedepth::verify::check_forest;
use treedepth::EliminationForest;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn single_pointer_mutation(n in 2usize..=12, p in 0.1f64..0.9, seed: u64, pick: usize, target: usize) {
        let g = generate(&GraphFamily::Gnp { n, p, seed }).unwrap();
        let r = td_optimise(&g, &SolverConfig::default());
        let td = r.treedepth().unwrap();
        let forest = r.forest.unwrap();
        let mut parents = forest.parents().to_vec();
        let v = pick % n;
        let new_parent = target % (n + 1);
        prop_assume!(parents[v] != new_parent);
        parents[v] = new_parent;
        let report = check_forest(&g, &EliminationForest::from_parents(&parents));
        if report.valid {
            prop_assert!(report.depth >= td);
        } else {
            prop_assert!(report.violation.is_some());
        }
    }
}
