//! Graph isomorphism testing at desk scale.

use crate::graph::Graph;

/// Exact isomorphism test: degree-sequence prefilter, then a backtracking
/// search for a label bijection. Intended for the small recognition targets
/// in this crate (4-cycles, joins of a 5-cycle with a clique), not for large
/// instances.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    let n = a.order();
    // map vertices of `a` in descending degree order; highly constrained first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&v| usize::MAX - a.degree(v));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        a: &Graph,
        b: &Graph,
        order: &[usize],
        depth: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        'cand: for w in 0..b.order() {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            for &earlier in &order[..depth] {
                if a.has_edge(v, earlier) != b.has_edge(w, image[earlier]) {
                    continue 'cand;
                }
            }
            image[v] = w;
            used[w] = true;
            if rec(a, b, order, depth + 1, image, used) {
                return true;
            }
            used[w] = false;
            image[v] = usize::MAX;
        }
        false
    }
    rec(a, b, &order, 0, &mut image, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognizes_relabelings() {
        let c5 = Graph::cycle(5).unwrap();
        // pentagon with scrambled labels: 0-2-4-1-3-0
        let scrambled =
            Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(is_isomorphic(&c5, &scrambled));
        assert!(!is_isomorphic(&c5, &Graph::path(5)));
    }

    #[test]
    fn degree_sequence_is_not_enough() {
        // C6 vs two triangles: same degree sequence, not isomorphic
        let c6 = Graph::cycle(6).unwrap();
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_isomorphic(&c6, &two_triangles));
    }

    #[test]
    fn joins() {
        let a = Graph::cycle(4).unwrap().join(&Graph::complete(2));
        // K6 minus a perfect matching piece: C4 ∨ K2 is K6 minus two
        // independent edges
        let mut b = Graph::complete(6);
        let b = {
            let mut edges = b.edges();
            edges.retain(|&e| e != (0, 2) && e != (1, 3));
            b = Graph::from_edges(6, &edges).unwrap();
            b
        };
        assert!(is_isomorphic(&a, &b));
    }
}
