//! Exact computation for DP-coloring (correspondence coloring).
//!
//! A cover of a graph `G` assigns each vertex a list of `m` elements and
//! each edge a matching between the endpoint lists; `G` is colorable under
//! the cover when a transversal avoids every matched pair. The DP-chromatic
//! number `χ_DP(G)` is the least `m` for which every `m`-fold cover is
//! colorable.
//!
//! The crate decides cover colorability, computes `χ_DP` exactly at desk
//! scale by enumerating normalized covers (spanning-forest symmetry
//! reduction), evaluates the closed-form bounds on `Z_DP`, and ships a
//! verification suite re-checking the known values it is built around.
//! Exactness is the contract throughout: resource caps yield explicit
//! brackets, never approximate answers.

pub mod bounds;
pub mod chordal;
pub mod classify;
pub mod coloring;
pub mod cover;
pub mod dp;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod graph;
pub mod iso;
pub mod perm;
pub mod verify;

pub use bounds::{
    bound_comparison, check_join_condition, deficiency_table, zdp_exact_small,
    zdp_order_bound, zdp_upper_bound, BoundCase, BoundComparison, DeficiencyTable,
    JoinConditionReport, JoinInstance, Rational, ZdpBound, ZdpOutcome,
};
pub use chordal::{chordal_peo, is_chordal, is_simplicial, peo_clique_number, EliminationOrdering};
pub use classify::{classify_chi_n_minus_2, ChiNMinus2Class};
pub use coloring::{
    chromatic_coloring, chromatic_number, coloring_number, degeneracy_ordering, k_coloring,
    max_clique,
};
pub use cover::{
    c4_bad_cover, normalize, ColoringWitness, Cover, EdgeMatch, NormalizedCover, SearchStats,
    Violation, MAX_FOLD,
};
pub use dp::{
    all_covers_colorable, dp_chromatic, falsify, BadCoverCertificate, CapReason, CertSource,
    DpResult, DpStatus, FoldEvidence, SearchCaps, SweepOutcome,
};
pub use enumerate::{enumerate_covers, normalized_cover_count, CoverEnumerator};
pub use error::{Error, ParseError};
pub use format::{parse_cover, parse_edge_list, parse_graph6, to_edge_list, to_graph6, write_cover};
pub use graph::{BfsForest, Graph};
pub use iso::is_isomorphic;
pub use perm::{factorial, Perm};
