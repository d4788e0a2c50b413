//! Small hand-built graphs used throughout the tests and examples.

use super::Graph;

/// Two 4-cycles `1-2-7-6` and `3-4-9-8` joined through a hub vertex 5
/// adjacent to 2, 3, 7 and 8. Treedepth 4, maximum degree 4.
pub fn linked_squares() -> Graph {
    Graph::from_edges(
        9,
        &[(1, 2), (3, 4), (6, 7), (8, 9), (1, 6), (2, 7), (3, 8), (4, 9), (2, 5), (3, 5), (5, 7), (5, 8)],
    )
    .expect("static edge list")
}

/// Complete binary tree on seven vertices with root 7, inner vertices 5 and
/// 6, leaves 1..=4. The degree bound beats the greedy path bound here.
pub fn seven_vertex_tree() -> Graph {
    Graph::from_edges(7, &[(1, 5), (2, 5), (3, 6), (4, 6), (5, 7), (6, 7)]).expect("static edge list")
}

/// Parent array of a depth-4 elimination tree of [`linked_squares`]:
/// root 5, children 1 and 3.
pub fn linked_squares_forest() -> Vec<usize> {
    //      v: 1  2  3  4  5  6  7  8  9
    vec![5, 7, 5, 9, 0, 7, 1, 9, 3]
}
