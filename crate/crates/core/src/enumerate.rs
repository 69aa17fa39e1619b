//! Enumeration of normalized covers.
//!
//! Every full cover is relabeling-equivalent to one whose BFS spanning
//! forest carries identity matches, so the search space for a fixed fold
//! shrinks from one permutation per edge to one per non-forest edge:
//! exactly `(fold!)^rank` covers, where `rank` is the cycle rank.

use crate::cover::{Cover, EdgeMatch, NormalizedCover};
use crate::error::Error;
use crate::graph::{BfsForest, Graph};
use crate::perm::{factorial, Perm};

/// `(fold!)^rank`, or `None` on u128 overflow.
pub fn normalized_cover_count(g: &Graph, fold: u32) -> Option<u128> {
    let rank = u32::try_from(g.cycle_rank()).ok()?;
    if rank == 0 {
        return Some(1);
    }
    factorial(fold)?.checked_pow(rank)
}

/// Streams every normalized `fold`-cover of a graph in lexicographic order
/// of (non-forest edge order, permutation rank).
#[derive(Debug)]
pub struct CoverEnumerator<'g> {
    base: &'g Graph,
    fold: u32,
    tree_edges: Vec<(usize, usize)>,
    free_edges: Vec<(usize, usize)>,
    fact: u128,
    next: u128,
    end: u128,
}

/// Prepares enumeration, rejecting graphs whose cycle rank exceeds the cap.
pub fn enumerate_covers(
    g: &Graph,
    fold: u32,
    max_cycle_rank: usize,
) -> Result<CoverEnumerator<'_>, Error> {
    if fold < 1 {
        return Err(Error::FoldTooSmall);
    }
    if fold > crate::cover::MAX_FOLD {
        return Err(Error::FoldTooLarge(fold));
    }
    let rank = g.cycle_rank();
    if rank > max_cycle_rank {
        return Err(Error::CycleRankExceeded { required: rank, cap: max_cycle_rank });
    }
    let total = normalized_cover_count(g, fold)
        .ok_or(Error::CoverSpaceOverflow { fold, rank })?;
    let BfsForest { tree_edges, non_tree_edges, .. } = g.bfs_forest();
    Ok(CoverEnumerator {
        base: g,
        fold,
        tree_edges,
        free_edges: non_tree_edges,
        fact: factorial(fold).unwrap_or(1), // unused when there are no free edges
        next: 0,
        end: total,
    })
}

impl<'g> CoverEnumerator<'g> {
    /// Total number of covers in the full enumeration.
    pub fn total(&self) -> u128 {
        normalized_cover_count(self.base, self.fold).expect("checked at construction")
    }

    /// Restricts the stream to global ranks `lo..hi`; ranges compose, so
    /// disjoint ranges partition the space deterministically.
    pub fn with_range(mut self, lo: u128, hi: u128) -> Self {
        let total = self.total();
        self.next = lo.min(total);
        self.end = hi.min(total);
        self
    }

    /// Non-forest edges, ascending; one free permutation each.
    pub fn free_edges(&self) -> &[(usize, usize)] {
        &self.free_edges
    }

    /// Materializes the cover at a global rank.
    pub fn cover_at(&self, rank: u128) -> NormalizedCover {
        let mut cover = Cover::identity(self.base.clone(), self.fold)
            .expect("fold validated at construction");
        let mut rest = rank;
        for &(u, v) in self.free_edges.iter().rev() {
            let digit = rest % self.fact;
            rest /= self.fact;
            let perm = Perm::from_lex_rank(self.fold, digit);
            cover
                .set_match(u, v, EdgeMatch::from_perm(&perm))
                .expect("free edges are base edges");
        }
        debug_assert_eq!(rest, 0, "rank within range");
        NormalizedCover::from_parts(cover, self.tree_edges.clone(), self.free_edges.clone())
    }
}

impl<'g> Iterator for CoverEnumerator<'g> {
    type Item = NormalizedCover;

    fn next(&mut self) -> Option<NormalizedCover> {
        if self.next >= self.end {
            return None;
        }
        let item = self.cover_at(self.next);
        self.next += 1;
        Some(item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(normalized_cover_count(&c4, 2), Some(2));
        assert_eq!(normalized_cover_count(&c4, 3), Some(6));
        assert_eq!(normalized_cover_count(&Graph::path(5), 4), Some(1));
        let w = c4.join(&Graph::complete(1));
        assert_eq!(normalized_cover_count(&w, 3), Some(1296));
    }

    #[test]
    fn c4_fold2_enumeration() {
        let c4 = Graph::cycle(4).unwrap();
        let covers: Vec<_> = enumerate_covers(&c4, 2, 8).unwrap().collect();
        assert_eq!(covers.len(), 2);
        // rank 0 is all-identity, rank 1 twists the unique free edge
        assert_eq!(covers[0].cover(), &Cover::identity(c4.clone(), 2).unwrap());
        assert_eq!(covers[1].free_perms()[0].as_slice(), &[1, 0]);
        for (i, c) in covers.iter().enumerate() {
            assert_eq!(c.rank(), Some(i as u128));
            assert!(c.cover().validate().is_empty());
            assert!(c.cover().is_full());
        }
    }

    #[test]
    fn trees_have_one_cover() {
        let t = Graph::path(4);
        let covers: Vec<_> = enumerate_covers(&t, 3, 8).unwrap().collect();
        assert_eq!(covers.len(), 1);
        assert_eq!(covers[0].cover(), &Cover::identity(t, 3).unwrap());
    }

    #[test]
    fn rank_cap_enforced() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            enumerate_covers(&c4, 2, 0).unwrap_err(),
            Error::CycleRankExceeded { required: 1, cap: 0 }
        );
    }

    #[test]
    fn range_partition_is_exact() {
        let c5 = Graph::cycle(5).unwrap();
        let all: Vec<_> = enumerate_covers(&c5, 3, 8).unwrap().collect();
        assert_eq!(all.len(), 6);
        let lo: Vec<_> = enumerate_covers(&c5, 3, 8).unwrap().with_range(0, 2).collect();
        let hi: Vec<_> = enumerate_covers(&c5, 3, 8).unwrap().with_range(2, 6).collect();
        let merged: Vec<_> = lo.into_iter().chain(hi).collect();
        assert_eq!(all, merged);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let k4 = Graph::complete(4);
        let ranks: Vec<u128> = enumerate_covers(&k4, 2, 8)
            .unwrap()
            .map(|c| c.rank().expect("small space"))
            .collect();
        assert_eq!(ranks, (0..8).collect::<Vec<u128>>());
    }
}
