//! Structure of graphs whose chromatic number is `n - 2`.
//!
//! Every graph with `χ(G) = n - 2` is either a join of a 5-cycle with a
//! clique, or has two vertices whose removal leaves a complete graph. The
//! classifier reports which description applies.

use crate::coloring::chromatic_number;
use crate::error::Error;
use crate::graph::Graph;
use crate::iso::is_isomorphic;

/// Classification of a graph with `χ = n - 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChiNMinus2Class {
    /// Isomorphic to `C_5 ∨ K_s`; carries `s = n - 5`.
    JoinC5Complete(usize),
    /// Deleting the two named vertices leaves a complete graph.
    TwoVertexComplete(usize, usize),
    /// `χ(G) != n - 2`, so neither description is claimed.
    NotApplicable,
}

/// Classifies a graph with `χ = n - 2`; `NotApplicable` otherwise.
///
/// The two-vertex description is checked first, scanning pairs in ascending
/// lexicographic order, so reports are deterministic; when both descriptions
/// apply the two-vertex one wins. Requires `n >= 3`.
pub fn classify_chi_n_minus_2(g: &Graph) -> Result<ChiNMinus2Class, Error> {
    let n = g.order();
    if n < 3 {
        return Err(Error::OrderBelowMinimum { required: 3, got: n });
    }
    if chromatic_number(g) + 2 != n {
        return Ok(ChiNMinus2Class::NotApplicable);
    }
    for u in 0..n {
        for v in (u + 1)..n {
            let keep: Vec<usize> = g.vertices().filter(|&w| w != u && w != v).collect();
            if g.induced(&keep).is_complete() {
                return Ok(ChiNMinus2Class::TwoVertexComplete(u, v));
            }
        }
    }
    if n >= 5 {
        let target = Graph::cycle(5).unwrap().join(&Graph::complete(n - 5));
        if is_isomorphic(g, &target) {
            return Ok(ChiNMinus2Class::JoinC5Complete(n - 5));
        }
    }
    Ok(ChiNMinus2Class::NotApplicable)
}
