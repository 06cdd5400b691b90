//! Fixtures shared by the benchmarks.

use ccrit::constructions::build_s_graph;
use ccrit::MultiGraph;

/// `S(n, m, 0)` as a plain graph.
pub fn staircase(n: usize, m: usize) -> MultiGraph {
    build_s_graph(n, m, 0).expect("valid staircase parameters").graph
}
