//! Exact chromatic number and coloring number.
//!
//! The chromatic number is decided by exhaustive k-colorability backtracking
//! with DSATUR-style branching, a clique lower bound and a greedy upper
//! bound. No heuristic shortcuts: every returned value is exact and comes
//! with a retrievable witness.

use crate::graph::Graph;

/// Exact chromatic number. `χ(K_0) = 0` by convention.
pub fn chromatic_number(g: &Graph) -> usize {
    chromatic_coloring(g).0
}

/// Exact chromatic number together with a witness proper coloring
/// (color classes `0..k-1`).
pub fn chromatic_coloring(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (0, Vec::new());
    }
    let lower = greedy_clique(g).len();
    let (upper, greedy) = greedy_coloring(g);
    if lower == upper {
        return (upper, greedy);
    }
    for k in lower..upper {
        if let Some(c) = k_coloring(g, k) {
            return (k, c);
        }
    }
    (upper, greedy)
}

/// Decides k-colorability by exhaustive backtracking; returns a witness.
///
/// Branches on the uncolored vertex with maximum saturation (distinct colors
/// in its neighborhood), breaking ties by degree then index. Only the first
/// unused color may open a new class, which prunes color permutations.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.order();
    if n == 0 {
        return Some(Vec::new());
    }
    if k >= n {
        return Some((0..n).collect());
    }
    if k == 0 {
        return None;
    }
    // neighbor-color sets live in u128 masks
    assert!(k <= 128, "k-colorability supports k <= 128, got {k}");
    let mut colors: Vec<Option<usize>> = vec![None; n];
    let mut neighbor_colors: Vec<u128> = vec![0; n];
    fn rec(
        g: &Graph,
        k: usize,
        colors: &mut Vec<Option<usize>>,
        neighbor_colors: &mut Vec<u128>,
        assigned: usize,
        used: usize,
    ) -> bool {
        let n = g.order();
        if assigned == n {
            return true;
        }
        // DSATUR: max saturation, then max degree, then min index
        let mut best = usize::MAX;
        let mut best_key = (0usize, 0usize);
        for v in 0..n {
            if colors[v].is_none() {
                let sat = neighbor_colors[v].count_ones() as usize;
                let key = (sat, g.degree(v));
                if best == usize::MAX || key > best_key {
                    best = v;
                    best_key = key;
                }
            }
        }
        let v = best;
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if neighbor_colors[v] & (1u128 << c) != 0 {
                continue;
            }
            colors[v] = Some(c);
            let mut touched = Vec::new();
            for w in g.neighbors(v) {
                if colors[w].is_none() && neighbor_colors[w] & (1u128 << c) == 0 {
                    neighbor_colors[w] |= 1u128 << c;
                    touched.push(w);
                }
            }
            let next_used = used.max(c + 1);
            if rec(g, k, colors, neighbor_colors, assigned + 1, next_used) {
                return true;
            }
            for w in touched {
                neighbor_colors[w] &= !(1u128 << c);
            }
            colors[v] = None;
        }
        false
    }
    if rec(g, k, &mut colors, &mut neighbor_colors, 0, 0) {
        Some(colors.into_iter().map(|c| c.unwrap()).collect())
    } else {
        None
    }
}

/// Greedy proper coloring in DSATUR order; an upper bound witness.
fn greedy_coloring(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.order();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    let mut neighbor_colors: Vec<u128> = vec![0; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v].is_none())
            .max_by_key(|&v| (neighbor_colors[v].count_ones(), g.degree(v), usize::MAX - v))
            .unwrap();
        let c = (0..128)
            .find(|&c| neighbor_colors[v] & (1u128 << c) == 0)
            .expect("fewer than 128 neighbor colors at desk scale");
        colors[v] = Some(c);
        for w in g.neighbors(v) {
            neighbor_colors[w] |= 1u128 << c;
        }
    }
    let cols: Vec<usize> = colors.into_iter().map(|c| c.unwrap()).collect();
    let k = cols.iter().max().map_or(0, |&m| m + 1);
    (k, cols)
}

/// A maximal clique found greedily from each seed vertex; a lower bound for
/// the chromatic number.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut best = Vec::new();
    for seed in 0..n {
        let mut clique = vec![seed];
        let mut cands: Vec<usize> = g.neighbors(seed).collect();
        cands.sort_unstable_by_key(|&v| usize::MAX - g.degree(v));
        for v in cands {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

/// Exact maximum clique by branch and bound over candidate sets.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut best = greedy_clique(g);
    let mut current = Vec::new();
    let cands: Vec<usize> = (0..n).collect();
    fn rec(g: &Graph, current: &mut Vec<usize>, cands: &[usize], best: &mut Vec<usize>) {
        if current.len() + cands.len() <= best.len() {
            return;
        }
        if cands.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        for (i, &v) in cands.iter().enumerate() {
            if current.len() + (cands.len() - i) <= best.len() {
                break;
            }
            current.push(v);
            let next: Vec<usize> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            rec(g, current, &next, best);
            current.pop();
        }
    }
    rec(g, &mut current, &cands, &mut best);
    best.sort_unstable();
    best
}

/// Coloring number `col(G) = degeneracy + 1`, with `col(K_0) = 0`.
pub fn coloring_number(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    degeneracy_ordering(g).0 + 1
}

/// Degeneracy and a witness ordering.
///
/// The ordering `v_1, ..., v_n` satisfies
/// `|N(v_i) ∩ {v_1, ..., v_{i-1}}| <= degeneracy` for every `i`, so it
/// witnesses `col(G) = degeneracy + 1`. Ties in the repeated minimum-degree
/// removal go to the smallest label, making the ordering deterministic.
pub fn degeneracy_ordering(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.order();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    let mut degeneracy = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        degeneracy = degeneracy.max(deg[v]);
        removed[v] = true;
        removal.push(v);
        for w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    removal.reverse();
    (degeneracy, removal)
}

/// Checks that `coloring` is a proper coloring of `g`.
pub fn is_proper_coloring(g: &Graph, coloring: &[usize]) -> bool {
    coloring.len() == g.order()
        && g.edges()
            .into_iter()
            .all(|(u, v)| coloring[u] != coloring[v])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chromatic_small_graphs() {
        assert_eq!(chromatic_number(&Graph::empty(0)), 0);
        assert_eq!(chromatic_number(&Graph::empty(3)), 1);
        assert_eq!(chromatic_number(&Graph::cycle(4).unwrap()), 2);
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()), 3);
        assert_eq!(chromatic_number(&Graph::complete(5)), 5);
        let w = Graph::cycle(4).unwrap().join(&Graph::complete(1));
        assert_eq!(chromatic_number(&w), 3);
    }

    #[test]
    fn witnesses_are_proper() {
        for g in [
            Graph::cycle(5).unwrap(),
            Graph::complete(4),
            Graph::path(6),
            Graph::cycle(4).unwrap().join(&Graph::complete(2)),
        ] {
            let (k, c) = chromatic_coloring(&g);
            assert!(is_proper_coloring(&g, &c));
            assert_eq!(c.iter().max().map_or(0, |&m| m + 1), k);
            assert!(k_coloring(&g, k.saturating_sub(1)).is_none());
        }
    }

    #[test]
    fn coloring_number_examples() {
        let w = Graph::cycle(4).unwrap().join(&Graph::complete(1));
        assert_eq!(coloring_number(&w), 4);
        assert_eq!(coloring_number(&Graph::complete(6)), 6);
        assert_eq!(coloring_number(&Graph::path(5)), 2);
        assert_eq!(coloring_number(&Graph::empty(0)), 0);
        assert_eq!(coloring_number(&Graph::empty(1)), 1);
    }

    #[test]
    fn degeneracy_ordering_witnesses_col() {
        for g in [
            Graph::cycle(4).unwrap().join(&Graph::complete(1)),
            Graph::complete(4),
            Graph::path(7),
        ] {
            let (d, order) = degeneracy_ordering(&g);
            let mut pos = vec![0; g.order()];
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i;
            }
            for (i, &v) in order.iter().enumerate() {
                let earlier = g.neighbors(v).filter(|&w| pos[w] < i).count();
                assert!(earlier <= d);
            }
        }
    }

    #[test]
    fn max_clique_exact() {
        assert_eq!(max_clique(&Graph::complete(5)).len(), 5);
        assert_eq!(max_clique(&Graph::cycle(5).unwrap()).len(), 2);
        assert_eq!(max_clique(&Graph::cycle(3).unwrap()).len(), 3);
        let w = Graph::cycle(4).unwrap().join(&Graph::complete(2));
        assert_eq!(max_clique(&w).len(), 4);
    }
}
