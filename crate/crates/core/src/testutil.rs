//! Shared fixtures for unit tests.

use crate::graph::Graph;

/// The 9-vertex demo cograph: (P3 + 2K1) joined with C4. Its cluster vertex
/// deletion number is 5.
pub(crate) fn nine_vertex_example() -> Graph {
    let mut g = Graph::new(9);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    for (u, v) in [(5, 7), (6, 7), (6, 8), (5, 8)] {
        g.add_edge(u, v);
    }
    for a in 0..5 {
        for b in 5..9 {
            g.add_edge(a, b);
        }
    }
    g
}
