//! DP-chromatic number by exhaustive cover enumeration, plus randomized
//! falsification.
//!
//! The fold loop starts at the chromatic number and stops at the coloring
//! number; both ends are theorems, so termination never depends on the
//! search. Resource caps produce bracketed results, never a wrong answer.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::coloring::{chromatic_number, coloring_number};
use crate::cover::{Hook, NormalizedCover, SearchStats, MAX_FOLD};
use crate::enumerate::{enumerate_covers, normalized_cover_count};
use crate::graph::Graph;
use crate::perm::{factorial, next_lex, Perm};

/// Resource limits for exhaustive sweeps.
#[derive(Clone, Debug)]
pub struct SearchCaps {
    /// Largest admissible cycle rank; the cover space is `(fold!)^rank`.
    pub max_cycle_rank: usize,
    /// Largest cover count enumerated per fold.
    pub max_covers: u64,
    /// Optional wall-clock budget for one sweep.
    pub time_budget: Option<Duration>,
    /// Worker threads; results are identical for any count.
    pub workers: usize,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            max_cycle_rank: 8,
            max_covers: 10_000_000,
            time_budget: None,
            workers: 1,
        }
    }
}

/// Why a sweep stopped short of a proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CapReason {
    CycleRank { required: usize, cap: usize },
    /// `total` saturates at `u128::MAX` when the space overflows 128 bits.
    CoverCount { total: u128, cap: u64 },
    TimeBudget,
}

impl std::fmt::Display for CapReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            CapReason::CycleRank { required, cap } => {
                write!(f, "cycle rank {required} exceeds cap {cap}")
            }
            CapReason::CoverCount { total, cap } => {
                if total == u128::MAX {
                    write!(f, "cover space overflows; cap {cap}")
                } else {
                    write!(f, "{total} covers exceed cap {cap}")
                }
            }
            CapReason::TimeBudget => write!(f, "time budget exhausted"),
        }
    }
}

/// Where an uncolorable cover came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertSource {
    /// Lexicographic position in the full enumeration.
    Enumerated { rank: u128 },
    /// Seeded random draw; replays from `(seed, sample)`.
    Sampled { seed: u64, sample: u64 },
}

/// A validated cover with no coloring, plus the exhaustion statistics of the
/// search that proved it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadCoverCertificate {
    pub fold: u32,
    pub cover: NormalizedCover,
    pub stats: SearchStats,
    pub source: CertSource,
}

impl BadCoverCertificate {
    /// Cover text followed by comment lines recording the provenance, so the
    /// file re-ingests as an ordinary cover.
    pub fn to_text(&self) -> String {
        let mut out = crate::format::write_cover(self.cover.cover())
            .expect("normalized covers serialize");
        let source = match self.source {
            CertSource::Enumerated { rank } => format!("rank:{rank}"),
            CertSource::Sampled { seed, sample } => format!("sample:{seed}:{sample}"),
        };
        out.push_str(&format!(
            "# uncolorable fold={} source={} nodes={} pruned={}\n",
            self.fold, source, self.stats.nodes, self.stats.pruned
        ));
        out
    }
}

/// Outcome of sweeping every normalized cover at one fold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SweepOutcome {
    AllColorable { covers: u128 },
    Uncolorable(Box<BadCoverCertificate>),
    Capped(CapReason),
}

/// Decides whether every normalized full `fold`-cover of `g` admits a
/// coloring. On failure returns the lexicographically first bad cover.
///
/// A capped sweep reports `Capped`, never a boolean; in particular a sweep
/// that hits the time budget discards partial findings so that the reported
/// certificate is always the lexicographically first one.
pub fn all_covers_colorable(g: &Graph, fold: u32, caps: &SearchCaps) -> SweepOutcome {
    assert!((1..=MAX_FOLD).contains(&fold), "fold must be in 1..=64");
    let rank = g.cycle_rank();
    if rank > caps.max_cycle_rank {
        return SweepOutcome::Capped(CapReason::CycleRank {
            required: rank,
            cap: caps.max_cycle_rank,
        });
    }
    let total = normalized_cover_count(g, fold).unwrap_or(u128::MAX);
    if total > caps.max_covers as u128 {
        return SweepOutcome::Capped(CapReason::CoverCount { total, cap: caps.max_covers });
    }
    let total = total as u64;

    let shape = SweepShape::new(g, fold);
    let deadline = caps.time_budget.map(|b| Instant::now() + b);
    let best = AtomicU64::new(u64::MAX);
    let timed_out = AtomicBool::new(false);
    let workers = caps.workers.max(1).min(usize::try_from(total.max(1)).unwrap_or(usize::MAX));
    let chunk = total.div_ceil(workers as u64).max(1);
    std::thread::scope(|scope| {
        for w in 0..workers as u64 {
            let lo = w.saturating_mul(chunk).min(total);
            let hi = (w + 1).saturating_mul(chunk).min(total);
            if lo >= hi {
                continue;
            }
            let shape = &shape;
            let best = &best;
            let timed_out = &timed_out;
            scope.spawn(move || {
                sweep_chunk(shape, lo, hi, best, timed_out, deadline);
            });
        }
    });
    if timed_out.load(Ordering::Relaxed) {
        return SweepOutcome::Capped(CapReason::TimeBudget);
    }
    match best.load(Ordering::Relaxed) {
        u64::MAX => SweepOutcome::AllColorable { covers: total as u128 },
        rank => {
            let nc = enumerate_covers(g, fold, usize::MAX)
                .expect("rank fits the cap")
                .cover_at(rank as u128);
            let (witness, stats) = nc
                .cover()
                .search_coloring()
                .expect("enumerated covers are valid");
            debug_assert!(witness.is_none(), "sweep flagged a colorable cover");
            SweepOutcome::Uncolorable(Box::new(BadCoverCertificate {
                fold,
                cover: nc,
                stats,
                source: CertSource::Enumerated { rank: rank as u128 },
            }))
        }
    }
}

/// Static search structure for one (graph, fold) pair: successor hooks with
/// identity on forest edges and one free permutation per non-forest edge.
struct SweepShape<'g> {
    g: &'g Graph,
    fold: u32,
    free: Vec<(usize, usize)>,
    succs: Vec<Vec<(usize, Hook)>>,
    fact: u128,
}

impl<'g> SweepShape<'g> {
    fn new(g: &'g Graph, fold: u32) -> SweepShape<'g> {
        let forest = g.bfs_forest();
        let mut succs: Vec<Vec<(usize, Hook)>> = vec![Vec::new(); g.order()];
        for &(u, v) in &forest.tree_edges {
            succs[u].push((v, Hook::Identity));
        }
        for (i, &(u, v)) in forest.non_tree_edges.iter().enumerate() {
            succs[u].push((v, Hook::Perm(i)));
        }
        SweepShape {
            g,
            fold,
            free: forest.non_tree_edges,
            succs,
            fact: factorial(fold).unwrap_or(1),
        }
    }

    /// Permutation vector at a global rank (most significant digit first).
    fn perms_at(&self, rank: u64) -> Vec<Vec<u32>> {
        let mut perms = vec![Vec::new(); self.free.len()];
        let mut rest = rank as u128;
        for i in (0..self.free.len()).rev() {
            let digit = rest % self.fact;
            rest /= self.fact;
            perms[i] = Perm::from_lex_rank(self.fold, digit).as_slice().to_vec();
        }
        perms
    }

    /// Odometer step in lexicographic order.
    fn advance(&self, perms: &mut [Vec<u32>]) {
        for i in (0..perms.len()).rev() {
            if next_lex(&mut perms[i]) {
                return;
            }
        }
    }
}

fn sweep_chunk(
    shape: &SweepShape<'_>,
    lo: u64,
    hi: u64,
    best: &AtomicU64,
    timed_out: &AtomicBool,
    deadline: Option<Instant>,
) {
    let mut perms = shape.perms_at(lo);
    for rank in lo..hi {
        if rank % 1024 == 0 {
            if best.load(Ordering::Relaxed) < lo {
                return;
            }
            if let Some(d) = deadline {
                if Instant::now() >= d {
                    timed_out.store(true, Ordering::Relaxed);
                    return;
                }
            }
        }
        let (witness, _) = crate::cover::search_transversal(
            shape.g.order(),
            shape.fold,
            &shape.succs,
            &perms,
            &[],
        );
        if witness.is_none() {
            best.fetch_min(rank, Ordering::Relaxed);
            return;
        }
        if rank + 1 < hi {
            shape.advance(&mut perms);
        }
    }
}

/// Per-fold evidence collected by [`dp_chromatic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FoldEvidence {
    /// Every normalized cover at this fold admits a coloring.
    AllColorable { fold: u32, covers: u128 },
    /// A bad cover certifies this fold is not enough.
    BadCover(Box<BadCoverCertificate>),
    /// Fold reached the coloring number, which bounds the DP-chromatic
    /// number from above; no enumeration needed.
    DegeneracyBound { fold: u32 },
    /// The sweep at this fold hit a resource cap.
    Capped { fold: u32, reason: CapReason },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DpStatus {
    Exact,
    Bracketed,
}

/// Result of a DP-chromatic computation: an exact value (`lo == hi`) or the
/// tightest proven bracket, with per-fold evidence either way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpResult {
    pub lo: u32,
    pub hi: u32,
    pub status: DpStatus,
    pub evidence: Vec<FoldEvidence>,
}

impl DpResult {
    pub fn value(&self) -> Option<u32> {
        match self.status {
            DpStatus::Exact => Some(self.lo),
            DpStatus::Bracketed => None,
        }
    }

    /// The certificate for the last fold that failed, if any.
    pub fn last_certificate(&self) -> Option<&BadCoverCertificate> {
        self.evidence.iter().rev().find_map(|e| match e {
            FoldEvidence::BadCover(c) => Some(c.as_ref()),
            _ => None,
        })
    }
}

impl std::fmt::Display for DpResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.status {
            DpStatus::Exact => write!(
                f,
                "result chi_dp={} status=exact lo={} hi={}",
                self.lo, self.lo, self.hi
            ),
            DpStatus::Bracketed => write!(
                f,
                "result chi_dp=- status=bracketed lo={} hi={}",
                self.lo, self.hi
            ),
        }
    }
}

/// The DP-chromatic number: the least fold at which every cover is
/// colorable.
///
/// Folds run from the chromatic number upward; when the fold reaches the
/// coloring number the value is certified by the inequality chain
/// `χ <= χ_DP <= col` without enumeration. Caps yield a bracket with the
/// evidence gathered so far.
pub fn dp_chromatic(g: &Graph, caps: &SearchCaps) -> DpResult {
    if g.order() == 0 {
        return DpResult { lo: 0, hi: 0, status: DpStatus::Exact, evidence: Vec::new() };
    }
    let chi = chromatic_number(g) as u32;
    let col = coloring_number(g) as u32;
    let mut evidence = Vec::new();
    for fold in chi..=col {
        if fold == col {
            evidence.push(FoldEvidence::DegeneracyBound { fold });
            return DpResult { lo: col, hi: col, status: DpStatus::Exact, evidence };
        }
        match all_covers_colorable(g, fold, caps) {
            SweepOutcome::AllColorable { covers } => {
                evidence.push(FoldEvidence::AllColorable { fold, covers });
                return DpResult { lo: fold, hi: fold, status: DpStatus::Exact, evidence };
            }
            SweepOutcome::Uncolorable(cert) => {
                evidence.push(FoldEvidence::BadCover(cert));
            }
            SweepOutcome::Capped(reason) => {
                evidence.push(FoldEvidence::Capped { fold, reason });
                return DpResult { lo: fold, hi: col, status: DpStatus::Bracketed, evidence };
            }
        }
    }
    unreachable!("fold loop returns at fold == col")
}

/// Draws seeded random normalized covers and returns the one with the
/// smallest sample index that admits no coloring, if any within `samples`
/// draws. Absence of a find is evidence, not proof.
///
/// Sample `i` draws its permutations from a ChaCha12 generator keyed by
/// `seed` on stream `i`, so results are identical for any worker count and
/// certificates replay from `(seed, sample)` alone.
pub fn falsify(
    g: &Graph,
    fold: u32,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Option<BadCoverCertificate> {
    assert!((1..=MAX_FOLD).contains(&fold), "fold must be in 1..=64");
    if samples == 0 {
        return None;
    }
    let shape = SweepShape::new(g, fold);
    let best = AtomicU64::new(u64::MAX);
    let workers = workers.max(1).min(usize::try_from(samples).unwrap_or(usize::MAX));
    let chunk = samples.div_ceil(workers as u64).max(1);
    std::thread::scope(|scope| {
        for w in 0..workers as u64 {
            let lo = w.saturating_mul(chunk).min(samples);
            let hi = (w + 1).saturating_mul(chunk).min(samples);
            if lo >= hi {
                continue;
            }
            let shape = &shape;
            let best = &best;
            scope.spawn(move || {
                for sample in lo..hi {
                    if best.load(Ordering::Relaxed) < lo {
                        return;
                    }
                    let perms = sample_perms(shape, seed, sample);
                    let (witness, _) = crate::cover::search_transversal(
                        shape.g.order(),
                        shape.fold,
                        &shape.succs,
                        &perms,
                        &[],
                    );
                    if witness.is_none() {
                        best.fetch_min(sample, Ordering::Relaxed);
                        return;
                    }
                }
            });
        }
    });
    let sample = match best.load(Ordering::Relaxed) {
        u64::MAX => return None,
        s => s,
    };
    let perms = sample_perms(&shape, seed, sample);
    let nc = materialize(&shape, &perms);
    let (witness, stats) = nc
        .cover()
        .search_coloring()
        .expect("sampled covers are valid");
    debug_assert!(witness.is_none());
    Some(BadCoverCertificate {
        fold,
        cover: nc,
        stats,
        source: CertSource::Sampled { seed, sample },
    })
}

fn sample_perms(shape: &SweepShape<'_>, seed: u64, sample: u64) -> Vec<Vec<u32>> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(sample);
    shape
        .free
        .iter()
        .map(|_| Perm::random(shape.fold, &mut rng).as_slice().to_vec())
        .collect()
}

fn materialize(shape: &SweepShape<'_>, perms: &[Vec<u32>]) -> NormalizedCover {
    let mut cover = crate::cover::Cover::identity(shape.g.clone(), shape.fold)
        .expect("fold validated");
    for (&(u, v), perm) in shape.free.iter().zip(perms) {
        let p = Perm::from_map(perm.clone()).expect("sampled maps are bijections");
        cover
            .set_match(u, v, crate::cover::EdgeMatch::from_perm(&p))
            .expect("free edges are base edges");
    }
    let forest = shape.g.bfs_forest();
    NormalizedCover::from_parts(cover, forest.tree_edges, shape.free.clone())
}
