//! Chordal graph recognition via maximum cardinality search.

use crate::error::Error;
use crate::graph::Graph;

/// A vertex ordering `v_1, ..., v_n`. When produced by [`chordal_peo`] it is
/// perfect: each `v_i` is simplicial in the subgraph induced by
/// `{v_1, ..., v_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrdering {
    ordering: Vec<usize>,
}

impl EliminationOrdering {
    pub fn as_slice(&self) -> &[usize] {
        &self.ordering
    }
}

/// True iff `d(v) = 0` or `N(v)` is a clique. Rejects out-of-range vertices.
pub fn is_simplicial(g: &Graph, v: usize) -> Result<bool, Error> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    Ok(nbrs.is_empty() || g.is_clique(&nbrs))
}

/// Returns a perfect elimination ordering iff `g` is chordal.
///
/// Runs maximum cardinality search (ties to the smallest label) and then
/// verifies that every vertex is simplicial among its predecessors; the
/// verification step is what makes the answer exact on non-chordal inputs.
pub fn chordal_peo(g: &Graph) -> Option<EliminationOrdering> {
    let ordering = mcs_order(g);
    if is_perfect_elimination(g, &ordering) {
        Some(EliminationOrdering { ordering })
    } else {
        None
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    chordal_peo(g).is_some()
}

/// Maximum cardinality search order: repeatedly pick the unvisited vertex
/// with the most visited neighbors.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], usize::MAX - v))
            .unwrap();
        visited[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// Checks the perfect elimination property: for each position `i`, the
/// neighbors of `order[i]` among `order[..i]` form a clique.
pub fn is_perfect_elimination(g: &Graph, order: &[usize]) -> bool {
    let n = g.order();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    for (i, &v) in order.iter().enumerate() {
        let earlier: Vec<usize> = g.neighbors(v).filter(|&w| pos[w] < i).collect();
        if !g.is_clique(&earlier) {
            return false;
        }
    }
    true
}

/// The largest clique met along a perfect elimination ordering: for chordal
/// graphs this equals the clique number, the chromatic number and the
/// coloring number.
pub fn peo_clique_number(g: &Graph, peo: &EliminationOrdering) -> usize {
    let n = g.order();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in peo.as_slice().iter().enumerate() {
        pos[v] = i;
    }
    peo.as_slice()
        .iter()
        .enumerate()
        .map(|(i, &v)| 1 + g.neighbors(v).filter(|&w| pos[w] < i).count())
        .max()
        .unwrap_or(0)
}
