//! Simple undirected graphs with bitset adjacency.
//!
//! Vertices are labeled `0..n-1`. The adjacency relation is symmetric and
//! irreflexive; every mutation keeps it that way.

use fixedbitset::FixedBitSet;

use crate::error::Error;

/// A simple undirected graph on vertices `0..n-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<FixedBitSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices (`K_0` for `n = 0`).
    pub fn empty(n: usize) -> Self {
        Graph {
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.rows[u].insert(v);
                g.rows[v].insert(u);
            }
        }
        g
    }

    /// The cycle `C_n` with edges `(i, i+1 mod n)`. Rejects `n < 3`.
    pub fn cycle(n: usize) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::CycleTooSmall(n));
        }
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n)?;
        }
        Ok(g)
    }

    /// The path `P_n` with edges `(i, i+1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i).expect("consecutive labels are distinct");
        }
        g
    }

    /// Builds a graph from an edge list. Rejects loops and out-of-range labels.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<(), Error> {
        if v >= self.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].ones()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in self.vertices() {
            for v in self.rows[u].ones() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The join `self ∨ other`: disjoint union plus all edges between the two
    /// parts. Vertices of `self` keep their labels; `other` is shifted by
    /// `self.order()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let n1 = self.order();
        let n2 = other.order();
        let mut g = Graph::empty(n1 + n2);
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("labels in range");
        }
        for (u, v) in other.edges() {
            g.add_edge(n1 + u, n1 + v).expect("labels in range");
        }
        for u in 0..n1 {
            for v in 0..n2 {
                g.add_edge(u, n1 + v).expect("labels in range");
            }
        }
        g
    }

    /// Subgraph induced by `keep`, relabeled `0..keep.len()-1` in ascending
    /// order of the original labels. Duplicates are ignored.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut sel: Vec<usize> = keep.to_vec();
        sel.sort_unstable();
        sel.dedup();
        for &v in &sel {
            assert!(v < self.order(), "vertex {v} out of range");
        }
        let mut g = Graph::empty(sel.len());
        for (i, &u) in sel.iter().enumerate() {
            for (j, &v) in sel.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).expect("labels in range");
                }
            }
        }
        g
    }

    /// The graph with vertex `v` removed and the rest relabeled in order.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(v < self.order(), "vertex {v} out of range");
        let keep: Vec<usize> = self.vertices().filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// True when every pair of listed vertices is adjacent.
    pub fn is_clique(&self, verts: &[usize]) -> bool {
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if u == v || !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size() == n * n.saturating_sub(1) / 2
    }

    /// Number of connected components.
    pub fn components(&self) -> usize {
        let n = self.order();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            count += 1;
            seen.insert(s);
            stack.push(s);
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen.contains(v) {
                        seen.insert(v);
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    /// Cycle rank `|E| - |V| + components`; the exponent of the normalized
    /// cover search space.
    pub fn cycle_rank(&self) -> usize {
        self.size() + self.components() - self.order()
    }

    /// Degree sequence sorted descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// BFS spanning forest rooted at the smallest vertex of each component.
    ///
    /// Tree and non-tree edges are reported as `(u, v)` with `u < v`;
    /// non-tree edges come out ascending. The BFS queue order makes the
    /// forest deterministic.
    pub fn bfs_forest(&self) -> BfsForest {
        let n = self.order();
        let mut parent = vec![None; n];
        let mut seen = FixedBitSet::with_capacity(n);
        let mut tree_edges = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen.contains(v) {
                        seen.insert(v);
                        parent[v] = Some(u);
                        tree_edges.push((u.min(v), u.max(v)));
                        queue.push_back(v);
                    }
                }
            }
        }
        let tree_set: std::collections::BTreeSet<(usize, usize)> =
            tree_edges.iter().copied().collect();
        let non_tree_edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|e| !tree_set.contains(e))
            .collect();
        BfsForest {
            parent,
            tree_edges,
            non_tree_edges,
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

/// A BFS spanning forest; tree edges carry identity matches in normalized
/// covers and non-tree edges index the free permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsForest {
    /// BFS parent of each vertex; `None` for component roots.
    pub parent: Vec<Option<usize>>,
    /// Tree edges as `(u, v)` with `u < v`, in discovery order.
    pub tree_edges: Vec<(usize, usize)>,
    /// Remaining edges as `(u, v)` with `u < v`, ascending.
    pub non_tree_edges: Vec<(usize, usize)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_basics() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(c4.size(), 4);
        assert_eq!(c4.degree_sequence(), vec![2, 2, 2, 2]);
        assert_eq!(c4.components(), 1);
        assert!(Graph::cycle(2).is_err());
        // C3 = K3
        assert_eq!(Graph::cycle(3).unwrap(), Graph::complete(3));
    }

    #[test]
    fn complete_edge_counts() {
        assert_eq!(Graph::complete(0).order(), 0);
        assert_eq!(Graph::complete(1).size(), 0);
        let k4 = Graph::complete(4);
        assert_eq!(k4.size(), 6);
        assert!(k4.vertices().all(|v| k4.degree(v) == 3));
    }

    #[test]
    fn join_counts_and_labels() {
        let c4 = Graph::cycle(4).unwrap();
        let j = c4.join(&Graph::complete(1));
        assert_eq!(j.order(), 5);
        assert_eq!(j.size(), 8);
        // K0 is a join identity
        assert_eq!(Graph::empty(0).join(&c4), c4);
        assert_eq!(c4.join(&Graph::empty(0)), c4);
        // g1 keeps labels, g2 is shifted
        let j2 = Graph::path(2).join(&Graph::path(2));
        assert!(j2.has_edge(0, 1) && j2.has_edge(2, 3));
    }

    #[test]
    fn induced_and_delete() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.induced(&[0, 1, 2]), Graph::path(3));
        let w = c4.join(&Graph::complete(1));
        assert_eq!(w.delete_vertex(4), c4);
        let all: Vec<usize> = c4.vertices().collect();
        assert_eq!(c4.induced(&all), c4);
    }

    #[test]
    fn cycle_rank_and_forest() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.cycle_rank(), 1);
        let f = c4.bfs_forest();
        assert_eq!(f.tree_edges.len(), 3);
        assert_eq!(f.non_tree_edges, vec![(2, 3)]);
        let t = Graph::path(5);
        assert_eq!(t.cycle_rank(), 0);
        assert!(t.bfs_forest().non_tree_edges.is_empty());
        // disconnected: forest spans each component
        let two = Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(two.components(), 2);
        assert_eq!(two.cycle_rank(), 1);
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = Graph::empty(3);
        assert_eq!(g.add_edge(0, 0), Err(Error::SelfLoop(0)));
        assert!(matches!(
            g.add_edge(0, 7),
            Err(Error::VertexOutOfRange { vertex: 7, order: 3 })
        ));
    }
}
