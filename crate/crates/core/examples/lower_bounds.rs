//! The degree-based and longest-path lower bounds next to the true treedepth.

use treedepth::bounds::{build_simple_bound_table, greedy_path, path_lower_bound};
use treedepth::graph::samples::{linked_squares, seven_vertex_tree};
use treedepth::graph::{generate, GraphFamily};
use treedepth::{td_optimise, Graph, SolverConfig};

fn report(name: &str, g: &Graph) {
    let all = g.all_vertices();
    let simple = match g.max_degree() {
        0 => 1,
        b => build_simple_bound_table(b, g.vertex_count()).unwrap().bound(all.len()),
    };
    let td = td_optimise(g, &SolverConfig::default()).lower_bound;
    println!(
        "{name:<16} degree bound {simple:>2}  path bound {:>2}  td {td:>2}  path {:?}",
        path_lower_bound(g, &all),
        greedy_path(g, &all)
    );
}

fn main() {
    report("linked squares", &linked_squares());
    report("7-vertex tree", &seven_vertex_tree());
    report("path 31", &generate(&GraphFamily::Path(31)).unwrap());
    report("cycle 12", &generate(&GraphFamily::Cycle(12)).unwrap());
    report("grid 4x4", &generate(&GraphFamily::SquareGrid(4)).unwrap());
    report("binary tree 15", &generate(&GraphFamily::BinaryTree(15)).unwrap());
}
