//! Shared inputs for the benchmark suite.

use dpcolor::Graph;

/// The 4-cycle joined with `K_s`; the workhorse family for sweep benches.
pub fn c4_join(s: usize) -> Graph {
    Graph::cycle(4).expect("4 >= 3").join(&Graph::complete(s))
}

/// A deterministic pseudo-random graph: edge `(u, v)` present when a mixed
/// congruence of the labels lands even.
pub fn scrambled_graph(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if (u * 31 + v * 17 + u * v) % 3 == 0 {
                g.add_edge(u, v).expect("labels in range");
            }
        }
    }
    g
}
