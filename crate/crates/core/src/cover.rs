//! Covers of a graph and the transversal search that decides colorability.
//!
//! A cover of `G` assigns each vertex `v` a list `L(v)` of `fold` elements
//! and each edge `(u, v)` a partial matching between `L(u)` and `L(v)`.
//! The implied conflict graph `H` has the lists as cliques and the matched
//! pairs as cross edges; a coloring is an independent set of `H` picking one
//! element per list. List indices are `0`-based in code and printed `1`-based
//! everywhere a human or a file sees them.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::graph::Graph;
use crate::perm::Perm;

/// Largest supported fold; list domains live in `u64` masks.
pub const MAX_FOLD: u32 = 64;

/// The matching data attached to one edge: raw pairs `(a, b)` joining
/// `(u, a)` to `(v, b)`. Pairs are kept exactly as constructed so that
/// validation can report malformed inputs instead of silently fixing them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeMatch {
    pairs: Vec<(u32, u32)>,
}

impl EdgeMatch {
    pub fn empty() -> EdgeMatch {
        EdgeMatch { pairs: Vec::new() }
    }

    pub fn from_pairs(pairs: Vec<(u32, u32)>) -> EdgeMatch {
        EdgeMatch { pairs }
    }

    /// The full matching `(a, σ(a))` for a permutation σ.
    pub fn from_perm(perm: &Perm) -> EdgeMatch {
        EdgeMatch {
            pairs: perm
                .as_slice()
                .iter()
                .enumerate()
                .map(|(a, &b)| (a as u32, b))
                .collect(),
        }
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// One-to-one in each coordinate.
    pub fn is_matching(&self) -> bool {
        for (i, &(a, b)) in self.pairs.iter().enumerate() {
            for &(c, d) in &self.pairs[i + 1..] {
                if a == c || b == d {
                    return false;
                }
            }
        }
        true
    }

    /// A perfect matching of `{0, ..., fold-1}`.
    pub fn is_full(&self, fold: u32) -> bool {
        self.pairs.len() == fold as usize && self.in_range(fold) && self.is_matching()
    }

    pub fn in_range(&self, fold: u32) -> bool {
        self.pairs.iter().all(|&(a, b)| a < fold && b < fold)
    }

    /// The permutation `a -> b`, when this is a full matching.
    pub fn to_perm(&self, fold: u32) -> Option<Perm> {
        if !self.is_full(fold) {
            return None;
        }
        let mut map = vec![0u32; fold as usize];
        for &(a, b) in &self.pairs {
            map[a as usize] = b;
        }
        Perm::from_map(map)
    }

    /// Partner of source index `a`, for matchings.
    pub fn partner(&self, a: u32) -> Option<u32> {
        self.pairs.iter().find(|&&(x, _)| x == a).map(|&(_, b)| b)
    }

    /// Pairs with coordinates swapped (the matching read in the other
    /// direction).
    pub fn inverted(&self) -> EdgeMatch {
        EdgeMatch {
            pairs: self.pairs.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }

    fn sorted(&self) -> EdgeMatch {
        let mut pairs = self.pairs.clone();
        pairs.sort_unstable();
        EdgeMatch { pairs }
    }
}

/// A violation of the cover conditions, reported as data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Two pairs on the edge share a source index: not a matching.
    RepeatedSource { u: usize, v: usize, index: u32 },
    /// Two pairs on the edge share a target index: not a matching.
    RepeatedTarget { u: usize, v: usize, index: u32 },
    /// A pair references a list index outside `1..=fold`.
    IndexOutOfRange { u: usize, v: usize, pair: (u32, u32) },
    /// Cross edges sit over a non-edge of the base graph.
    MatchOnNonEdge { u: usize, v: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Violation::RepeatedSource { u, v, index } => write!(
                f,
                "edge ({u}, {v}): not a matching (source index {} repeated)",
                index + 1
            ),
            Violation::RepeatedTarget { u, v, index } => write!(
                f,
                "edge ({u}, {v}): not a matching (target index {} repeated)",
                index + 1
            ),
            Violation::IndexOutOfRange { u, v, pair } => write!(
                f,
                "edge ({u}, {v}): pair ({}, {}) out of range",
                pair.0 + 1,
                pair.1 + 1
            ),
            Violation::MatchOnNonEdge { u, v } => {
                write!(f, "match on non-edge ({u}, {v})")
            }
        }
    }
}

/// A transversal `v -> index` realizing an independent set of size `n` in
/// the implied conflict graph. Indices are `0`-based; `Display` prints them
/// `1`-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringWitness {
    choice: Vec<u32>,
}

impl ColoringWitness {
    pub fn from_choices(choice: Vec<u32>) -> ColoringWitness {
        ColoringWitness { choice }
    }

    pub fn choices(&self) -> &[u32] {
        &self.choice
    }
}

impl std::fmt::Display for ColoringWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for &c in &self.choice {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", c + 1)?;
            first = false;
        }
        Ok(())
    }
}

/// Search effort counters for an exhaustive transversal search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Assignments attempted.
    pub nodes: u64,
    /// Branches cut when a later list lost its last allowed index.
    pub pruned: u64,
}

/// A cover of a base graph: uniform fold plus a partial matching per edge.
///
/// Matches are stored under the key `(u, v)` with `u < v`, oriented from
/// `L(u)` to `L(v)`. Every base edge always has an entry (possibly empty);
/// entries on non-edges can be ingested and are reported by validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    base: Graph,
    fold: u32,
    matches: BTreeMap<(usize, usize), EdgeMatch>,
}

impl Cover {
    /// A cover with every edge unmatched (the loosest valid cover).
    pub fn new(base: Graph, fold: u32) -> Result<Cover, Error> {
        if fold < 1 {
            return Err(Error::FoldTooSmall);
        }
        if fold > MAX_FOLD {
            return Err(Error::FoldTooLarge(fold));
        }
        let matches = base
            .edges()
            .into_iter()
            .map(|e| (e, EdgeMatch::empty()))
            .collect();
        Ok(Cover { base, fold, matches })
    }

    /// A full cover with the identity matching on every edge.
    pub fn identity(base: Graph, fold: u32) -> Result<Cover, Error> {
        let mut c = Cover::new(base, fold)?;
        let id = EdgeMatch::from_perm(&Perm::identity(fold));
        for e in c.base.edges() {
            c.matches.insert(e, id.clone());
        }
        Ok(c)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn fold(&self) -> u32 {
        self.fold
    }

    /// Sets the matching on `(u, v)`, reorienting so it is stored from the
    /// smaller label. Entries on non-edges are kept for validation to find.
    pub fn set_match(&mut self, u: usize, v: usize, m: EdgeMatch) -> Result<(), Error> {
        let n = self.base.order();
        if u >= n {
            return Err(Error::VertexOutOfRange { vertex: u, order: n });
        }
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, order: n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let (key, stored) = if u < v { ((u, v), m) } else { ((v, u), m.inverted()) };
        if stored.is_empty() && !self.base.has_edge(key.0, key.1) {
            self.matches.remove(&key);
        } else {
            // canonical pair order keeps structural equality label-free
            self.matches.insert(key, stored.sorted());
        }
        Ok(())
    }

    /// The matching oriented from `L(u)` to `L(v)`, if an entry exists.
    pub fn match_between(&self, u: usize, v: usize) -> Option<EdgeMatch> {
        if u < v {
            self.matches.get(&(u, v)).cloned()
        } else {
            self.matches.get(&(v, u)).map(EdgeMatch::inverted)
        }
    }

    pub fn match_entries(&self) -> impl Iterator<Item = (&(usize, usize), &EdgeMatch)> {
        self.matches.iter()
    }

    /// Total number of cross edges in the implied conflict graph.
    pub fn cross_edge_count(&self) -> usize {
        self.matches.values().map(|m| m.pairs.len()).sum()
    }

    /// Checks the cover conditions and reports every violation.
    ///
    /// The list partition and the list cliques are implicit in this
    /// representation, so the checkable conditions are the index ranges,
    /// cross edges only over base edges, and each match being a matching.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (&(u, v), m) in &self.matches {
            if !m.is_empty() && !self.base.has_edge(u, v) {
                out.push(Violation::MatchOnNonEdge { u, v });
            }
            for &pair in &m.pairs {
                if pair.0 >= self.fold || pair.1 >= self.fold {
                    out.push(Violation::IndexOutOfRange { u, v, pair });
                }
            }
            for (i, &(a, b)) in m.pairs.iter().enumerate() {
                for &(c, d) in &m.pairs[i + 1..] {
                    if a == c {
                        out.push(Violation::RepeatedSource { u, v, index: a });
                    }
                    if b == d {
                        out.push(Violation::RepeatedTarget { u, v, index: b });
                    }
                }
            }
        }
        out
    }

    /// True when every base edge carries a bijection and nothing sits on a
    /// non-edge.
    pub fn is_full(&self) -> bool {
        self.base
            .edges()
            .into_iter()
            .all(|(u, v)| {
                self.matches
                    .get(&(u, v))
                    .is_some_and(|m| m.is_full(self.fold))
            })
            && self
                .matches
                .iter()
                .all(|(&(u, v), m)| m.is_empty() || self.base.has_edge(u, v))
    }

    /// Finds the lexicographically smallest coloring witness, if any.
    /// Rejects invalid covers.
    pub fn find_coloring(&self) -> Result<Option<ColoringWitness>, Error> {
        Ok(self.search_coloring()?.0)
    }

    /// Exhaustive search with effort statistics. Rejects invalid covers.
    ///
    /// Backtracks over vertices in index order, so the returned witness is
    /// lexicographically smallest; forbidden indices propagate forward to
    /// undecided lists.
    pub fn search_coloring(&self) -> Result<(Option<ColoringWitness>, SearchStats), Error> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(Error::InvalidCover(violations.len()));
        }
        Ok(self.search_unchecked())
    }

    pub(crate) fn search_unchecked(&self) -> (Option<ColoringWitness>, SearchStats) {
        debug_assert!(self.validate().is_empty());
        let n = self.base.order();
        let mut tables: Vec<Vec<Option<u32>>> = Vec::new();
        let mut succs: Vec<Vec<(usize, Hook)>> = vec![Vec::new(); n];
        for (&(u, v), m) in &self.matches {
            if m.is_empty() {
                continue;
            }
            let mut table = vec![None; self.fold as usize];
            for &(a, b) in &m.pairs {
                table[a as usize] = Some(b);
            }
            succs[u].push((v, Hook::Table(tables.len())));
            tables.push(table);
        }
        let (choice, stats) = search_transversal(n, self.fold, &succs, &[], &tables);
        (choice.map(ColoringWitness::from_choices), stats)
    }

    /// Checks the witness invariant in `O(|E|)`: one in-range choice per
    /// vertex and no matched pair selected on any base edge.
    pub fn check_witness(&self, w: &ColoringWitness) -> bool {
        let n = self.base.order();
        if w.choice.len() != n || w.choice.iter().any(|&c| c >= self.fold) {
            return false;
        }
        self.base.edges().into_iter().all(|(u, v)| {
            self.matches
                .get(&(u, v))
                .is_none_or(|m| !m.pairs.contains(&(w.choice[u], w.choice[v])))
        })
    }
}

/// Edge hook used by the shared transversal search: how to map a chosen
/// source index to the forbidden target index.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Hook {
    /// Identity correspondence (normalized tree edges).
    Identity,
    /// Index into a permutation array (one-line notation).
    Perm(usize),
    /// Index into a partial partner table.
    Table(usize),
}

/// Exhaustive transversal search over lists of size `fold`.
///
/// `succs[u]` lists the later endpoints of edges leaving `u` together with
/// the hook resolving partner indices. Vertices are assigned in index order
/// and indices are tried ascending, so the first witness found is the
/// lexicographically smallest one.
pub(crate) fn search_transversal(
    n: usize,
    fold: u32,
    succs: &[Vec<(usize, Hook)>],
    perms: &[Vec<u32>],
    tables: &[Vec<Option<u32>>],
) -> (Option<Vec<u32>>, SearchStats) {
    struct Ctx<'a> {
        n: usize,
        succs: &'a [Vec<(usize, Hook)>],
        perms: &'a [Vec<u32>],
        tables: &'a [Vec<Option<u32>>],
    }

    impl Ctx<'_> {
        fn resolve(&self, hook: Hook, a: u32) -> Option<u32> {
            match hook {
                Hook::Identity => Some(a),
                Hook::Perm(i) => Some(self.perms[i][a as usize]),
                Hook::Table(t) => self.tables[t][a as usize],
            }
        }

        fn rec(
            &self,
            depth: usize,
            domains: &mut [u64],
            choice: &mut [u32],
            stats: &mut SearchStats,
        ) -> bool {
            if depth == self.n {
                return true;
            }
            let mut avail = domains[depth];
            while avail != 0 {
                let a = avail.trailing_zeros();
                avail &= avail - 1;
                stats.nodes += 1;
                choice[depth] = a;
                // forward propagation with undo
                let mut undo: Vec<(usize, u64)> = Vec::new();
                let mut wiped = false;
                for &(v, hook) in &self.succs[depth] {
                    if let Some(b) = self.resolve(hook, a) {
                        let bit = 1u64 << b;
                        if domains[v] & bit != 0 {
                            domains[v] &= !bit;
                            undo.push((v, bit));
                            if domains[v] == 0 {
                                wiped = true;
                                break;
                            }
                        }
                    }
                }
                if !wiped && self.rec(depth + 1, domains, choice, stats) {
                    return true;
                }
                if wiped {
                    stats.pruned += 1;
                }
                for (v, bit) in undo {
                    domains[v] |= bit;
                }
            }
            false
        }
    }

    let full: u64 = if fold == 64 { u64::MAX } else { (1u64 << fold) - 1 };
    let mut domains = vec![full; n];
    let mut choice = vec![0u32; n];
    let mut stats = SearchStats::default();
    let ctx = Ctx { n, succs, perms, tables };
    let found = ctx.rec(0, &mut domains, &mut choice, &mut stats);
    (if found { Some(choice) } else { None }, stats)
}

/// The classic 2-fold cover of the 4-cycle that admits no coloring: identity
/// correspondences on three edges and a swap on the fourth. Witnesses that
/// the DP-chromatic number of an even cycle exceeds 2.
pub fn c4_bad_cover() -> Cover {
    let c4 = Graph::cycle(4).expect("4 >= 3");
    let mut cover = Cover::identity(c4, 2).expect("fold 2 is valid");
    let swap = Perm::from_map(vec![1, 0]).expect("swap is a bijection");
    cover
        .set_match(2, 3, EdgeMatch::from_perm(&swap))
        .expect("(2, 3) is an edge of C4");
    cover
}

/// A full cover relabeled so that a BFS spanning forest carries identity
/// matches; the canonical representative of its relabeling class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedCover {
    cover: Cover,
    tree_edges: Vec<(usize, usize)>,
    free_edges: Vec<(usize, usize)>,
}

impl NormalizedCover {
    pub fn cover(&self) -> &Cover {
        &self.cover
    }

    pub fn into_cover(self) -> Cover {
        self.cover
    }

    /// Spanning forest edges (identity matches).
    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    /// Non-forest edges, ascending; their permutations are the cover's free
    /// coordinates.
    pub fn free_edges(&self) -> &[(usize, usize)] {
        &self.free_edges
    }

    /// The permutation on each free edge, in edge order.
    pub fn free_perms(&self) -> Vec<Perm> {
        self.free_edges
            .iter()
            .map(|&(u, v)| {
                self.cover
                    .match_between(u, v)
                    .expect("free edge has a match")
                    .to_perm(self.cover.fold())
                    .expect("normalized covers are full")
            })
            .collect()
    }

    /// Position in the lexicographic enumeration of normalized covers: the
    /// mixed-radix number over per-edge permutation ranks. `None` when the
    /// cover space overflows 128 bits.
    pub fn rank(&self) -> Option<u128> {
        let fact = crate::perm::factorial(self.cover.fold())?;
        self.free_perms().iter().try_fold(0u128, |acc, p| {
            acc.checked_mul(fact)?.checked_add(p.lex_rank())
        })
    }

    pub(crate) fn from_parts(
        cover: Cover,
        tree_edges: Vec<(usize, usize)>,
        free_edges: Vec<(usize, usize)>,
    ) -> NormalizedCover {
        NormalizedCover { cover, tree_edges, free_edges }
    }
}

/// Relabels each list along a BFS spanning forest so forest edges carry the
/// identity; conjugates the remaining matches accordingly. Colorability is
/// preserved because relabeling is an isomorphism of the conflict graph.
/// Rejects covers that are not full.
pub fn normalize(c: &Cover) -> Result<NormalizedCover, Error> {
    for (u, v) in c.base.edges() {
        if !c
            .matches
            .get(&(u, v))
            .is_some_and(|m| m.is_full(c.fold))
        {
            return Err(Error::NotFull { u, v });
        }
    }
    if !c.is_full() {
        // full base edges but stray non-edge matches
        let (&(u, v), _) = c
            .matches
            .iter()
            .find(|(&(u, v), m)| !m.is_empty() && !c.base.has_edge(u, v))
            .expect("is_full failed, so a stray entry exists");
        return Err(Error::NotFull { u, v });
    }

    let forest = c.base.bfs_forest();
    let n = c.base.order();
    let mut rho: Vec<Option<Perm>> = vec![None; n];
    // BFS discovery order: roots first, then children in tree-edge order
    for (v, parent) in forest.parent.iter().enumerate() {
        if parent.is_none() {
            rho[v] = Some(Perm::identity(c.fold));
        }
    }
    for &(a, b) in &forest.tree_edges {
        // orient parent -> child
        let (p, ch) = if forest.parent[b] == Some(a) { (a, b) } else { (b, a) };
        let sigma_pc = c
            .match_between(p, ch)
            .expect("tree edge has a match")
            .to_perm(c.fold)
            .expect("full cover");
        let rho_p = rho[p].clone().expect("parents are relabeled first");
        rho[ch] = Some(rho_p.compose(&sigma_pc.inverse()));
    }

    let mut out = Cover::new(c.base.clone(), c.fold)?;
    for (u, v) in c.base.edges() {
        let sigma = c
            .match_between(u, v)
            .expect("full cover")
            .to_perm(c.fold)
            .expect("full cover");
        let rho_u = rho[u].as_ref().expect("spanning forest covers all vertices");
        let rho_v = rho[v].as_ref().expect("spanning forest covers all vertices");
        let conj = rho_v.compose(&sigma).compose(&rho_u.inverse());
        out.set_match(u, v, EdgeMatch::from_perm(&conj))?;
    }
    for &(u, v) in &forest.tree_edges {
        debug_assert!(
            out.match_between(u, v).unwrap().to_perm(c.fold).unwrap().is_identity(),
            "tree edge ({u}, {v}) must carry the identity after relabeling"
        );
    }
    Ok(NormalizedCover {
        cover: out,
        tree_edges: forest.tree_edges,
        free_edges: forest.non_tree_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bad_cover_is_valid_and_uncolorable() {
        let c = c4_bad_cover();
        assert!(c.validate().is_empty());
        assert_eq!(c.cross_edge_count(), 8);
        let (w, stats) = c.search_coloring().unwrap();
        assert!(w.is_none());
        assert!(stats.nodes <= 16, "at most 2^4 transversals, got {stats:?}");
    }

    #[test]
    fn identity_cover_of_c4_alternates() {
        let c = Cover::identity(Graph::cycle(4).unwrap(), 2).unwrap();
        let w = c.find_coloring().unwrap().unwrap();
        assert_eq!(w.choices(), &[0, 1, 0, 1]);
        assert_eq!(w.to_string(), "1 2 1 2");
        assert!(c.check_witness(&w));
    }

    #[test]
    fn single_vertex_cover() {
        let c = Cover::new(Graph::empty(1), 1).unwrap();
        let w = c.find_coloring().unwrap().unwrap();
        assert_eq!(w.choices(), &[0]);
    }

    #[test]
    fn violations_are_reported() {
        // repeated source index on one edge
        let mut c = Cover::new(Graph::path(2), 2).unwrap();
        c.set_match(0, 1, EdgeMatch::from_pairs(vec![(0, 0), (0, 1)]))
            .unwrap();
        assert_eq!(
            c.validate(),
            vec![Violation::RepeatedSource { u: 0, v: 1, index: 0 }]
        );
        assert!(matches!(c.find_coloring(), Err(Error::InvalidCover(1))));

        // match on a non-edge of the base
        let mut c = Cover::new(Graph::path(3), 2).unwrap();
        c.set_match(0, 2, EdgeMatch::from_pairs(vec![(0, 0)])).unwrap();
        assert_eq!(c.validate(), vec![Violation::MatchOnNonEdge { u: 0, v: 2 }]);

        // out-of-range index
        let mut c = Cover::new(Graph::path(2), 2).unwrap();
        c.set_match(0, 1, EdgeMatch::from_pairs(vec![(0, 5)])).unwrap();
        assert_eq!(
            c.validate(),
            vec![Violation::IndexOutOfRange { u: 0, v: 1, pair: (0, 5) }]
        );
    }

    #[test]
    fn set_match_reorients() {
        let mut c = Cover::new(Graph::path(2), 3).unwrap();
        c.set_match(1, 0, EdgeMatch::from_pairs(vec![(2, 0)])).unwrap();
        assert_eq!(c.match_between(0, 1).unwrap().pairs(), &[(0, 2)]);
        assert_eq!(c.match_between(1, 0).unwrap().pairs(), &[(2, 0)]);
    }

    #[test]
    fn normalize_moves_twist_to_free_edge() {
        let nc = normalize(&c4_bad_cover()).unwrap();
        assert_eq!(nc.free_edges(), &[(2, 3)]);
        let perms = nc.free_perms();
        assert_eq!(perms.len(), 1);
        assert_eq!(perms[0].as_slice(), &[1, 0]);
        assert_eq!(nc.rank(), Some(1));
        // tree edges identity
        for &(u, v) in nc.tree_edges() {
            assert!(nc
                .cover()
                .match_between(u, v)
                .unwrap()
                .to_perm(2)
                .unwrap()
                .is_identity());
        }
    }

    #[test]
    fn normalize_is_idempotent() {
        let src = c4_bad_cover();
        let once = normalize(&src).unwrap();
        let twice = normalize(once.cover()).unwrap();
        assert_eq!(once, twice);
        // identity covers are fixed points
        let idc = Cover::identity(Graph::cycle(5).unwrap(), 3).unwrap();
        assert_eq!(normalize(&idc).unwrap().cover(), &idc);
    }

    #[test]
    fn normalize_rejects_partial() {
        let mut c = Cover::new(Graph::path(2), 2).unwrap();
        c.set_match(0, 1, EdgeMatch::from_pairs(vec![(0, 0)])).unwrap();
        assert_eq!(normalize(&c), Err(Error::NotFull { u: 0, v: 1 }));
    }

    #[test]
    fn fold_limits() {
        assert_eq!(Cover::new(Graph::path(2), 0).unwrap_err(), Error::FoldTooSmall);
        assert!(matches!(
            Cover::new(Graph::path(2), 65),
            Err(Error::FoldTooLarge(65))
        ));
    }
}
