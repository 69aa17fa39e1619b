//! Closed-form bounds on `Z_DP`, the join-condition checker, and exact
//! `Z_DP` for tiny graphs.
//!
//! `Z_DP(G)` is the least `s` with `χ_DP(G ∨ K_s) = χ(G ∨ K_s)`. All
//! inequality checks run in exact rational arithmetic; no floating point
//! touches bound logic anywhere.

use num_rational::Ratio;

use crate::coloring::{chromatic_number, coloring_number};
use crate::dp::{all_covers_colorable, SearchCaps, SweepOutcome};
use crate::error::Error;
use crate::graph::Graph;
use crate::iso::is_isomorphic;

/// Exact rational used throughout the bound logic. Prints as `p/q`
/// (plain `p` for integers).
pub type Rational = Ratio<i128>;

fn rat(n: i128) -> Rational {
    Rational::from_integer(n)
}

/// An instance of the join-colorability condition: a k-colorable graph `G`
/// joined with a clique `A`, plus the list sizes on both sides.
///
/// Construction enforces `k >= max(1, χ(G))` and the table lengths, so every
/// instance is well-formed.
#[derive(Clone, Debug)]
pub struct JoinInstance {
    g: Graph,
    chi: u32,
    k: u32,
    a_size: u64,
    g_lists: Vec<u64>,
    a_lists: Vec<u64>,
}

impl JoinInstance {
    pub fn new(
        g: Graph,
        k: u32,
        a_size: u64,
        g_lists: Vec<u64>,
        a_lists: Vec<u64>,
    ) -> Result<JoinInstance, Error> {
        let chi = chromatic_number(&g) as u32;
        if k < chi.max(1) {
            return Err(Error::KBelowChromatic { k, chi: chi.max(1) });
        }
        if g_lists.len() != g.order() {
            return Err(Error::ListSizeLength { expected: g.order(), got: g_lists.len() });
        }
        if a_lists.len() as u64 != a_size {
            return Err(Error::ListSizeLength {
                expected: a_size as usize,
                got: a_lists.len(),
            });
        }
        Ok(JoinInstance { g, chi, k, a_size, g_lists, a_lists })
    }

    /// All lists on both sides share one size.
    pub fn uniform(g: Graph, k: u32, a_size: u64, list_size: u64) -> Result<JoinInstance, Error> {
        let g_lists = vec![list_size; g.order()];
        let a_lists = vec![list_size; a_size as usize];
        JoinInstance::new(g, k, a_size, g_lists, a_lists)
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn chi(&self) -> u32 {
        self.chi
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn a_size(&self) -> u64 {
        self.a_size
    }
}

/// Per-vertex deficiency `max(d(v) - |L(v)| + |A| + k, 0)` and its sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeficiencyTable {
    pub per_vertex: Vec<u64>,
    pub total: u64,
}

/// Exact deficiency of every `G`-vertex of the instance.
pub fn deficiency_table(inst: &JoinInstance) -> DeficiencyTable {
    let per_vertex: Vec<u64> = inst
        .g
        .vertices()
        .map(|v| {
            let raw = inst.g.degree(v) as i128 - inst.g_lists[v] as i128
                + inst.a_size as i128
                + inst.k as i128;
            raw.max(0) as u64
        })
        .collect();
    let total = per_vertex.iter().sum();
    DeficiencyTable { per_vertex, total }
}

/// Result of checking the sufficient condition for `G ∨ A` to be colorable
/// under every conforming cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinConditionReport {
    /// Required list size on `A`-vertices: `|A| + χ(G)`.
    pub list_floor: u64,
    /// `A`-vertices whose list is below the floor.
    pub a_failures: Vec<usize>,
    /// `2(k+1) / (2k+1)`, exact.
    pub coefficient: Rational,
    /// `coefficient * total deficiency`; condition (b) needs `|A| >=` this.
    pub required: Rational,
    pub a_size: u64,
    pub deficiency: DeficiencyTable,
}

impl JoinConditionReport {
    /// Every `A`-vertex list reaches `|A| + χ(G)`.
    pub fn condition_a(&self) -> bool {
        self.a_failures.is_empty()
    }

    /// `|A| >= coefficient * total deficiency`, exactly.
    pub fn condition_b(&self) -> bool {
        rat(self.a_size as i128) >= self.required
    }

    pub fn passes(&self) -> bool {
        self.condition_a() && self.condition_b()
    }
}

/// Checks both hypotheses of the join condition in exact arithmetic.
pub fn check_join_condition(inst: &JoinInstance) -> JoinConditionReport {
    let list_floor = inst.a_size + inst.chi as u64;
    let a_failures: Vec<usize> = inst
        .a_lists
        .iter()
        .enumerate()
        .filter(|&(_, &sz)| sz < list_floor)
        .map(|(i, _)| i)
        .collect();
    let deficiency = deficiency_table(inst);
    let k = inst.k as i128;
    let coefficient = Rational::new(2 * (k + 1), 2 * k + 1);
    let required = coefficient * rat(deficiency.total as i128);
    JoinConditionReport {
        list_floor,
        a_failures,
        coefficient,
        required,
        a_size: inst.a_size,
        deficiency,
    }
}

/// Which case of the piecewise `Z_DP(G)` bound fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundCase {
    /// `2 <= k <= n-3`: the ceiling formula.
    Formula,
    /// `G ≅ C_4`: exactly 1.
    FourCycle,
    /// Everything else: 0.
    Zero,
}

impl std::fmt::Display for BoundCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundCase::Formula => write!(f, "formula"),
            BoundCase::FourCycle => write!(f, "c4"),
            BoundCase::Zero => write!(f, "zero"),
        }
    }
}

/// The piecewise upper bound on `Z_DP(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZdpBound {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub case: BoundCase,
    pub bound: u64,
    /// `4(k+1) / (2k+1)`, exact.
    pub coefficient: Rational,
}

impl std::fmt::Display for ZdpBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "zdp-bound case={} k={} m={} bound={}",
            self.case, self.k, self.m, self.bound
        )
    }
}

/// `Z_DP(G) <= ceil(4(k+1)m / (2k+1))` when `2 <= k <= n-3`; `= 1` for the
/// 4-cycle; `= 0` otherwise. The 4-cycle test runs first, mirroring the
/// piecewise precedence.
pub fn zdp_upper_bound(g: &Graph) -> ZdpBound {
    let n = g.order();
    let m = g.size();
    let k = chromatic_number(g);
    let coefficient = Rational::new(4 * (k as i128 + 1), 2 * k as i128 + 1);
    let c4 = Graph::cycle(4).expect("4 >= 3");
    let (case, bound) = if is_isomorphic(g, &c4) {
        (BoundCase::FourCycle, 1)
    } else if 2 <= k && k + 3 <= n {
        let value = (coefficient * rat(m as i128)).ceil().to_integer();
        (BoundCase::Formula, value as u64)
    } else {
        (BoundCase::Zero, 0)
    };
    ZdpBound { n, m, k, case, bound, coefficient }
}

/// `Z_DP(n) <= n^2 - (n+3)/2`, exactly (a half-integer). Defined for
/// `n >= 2`.
pub fn zdp_order_bound(n: u64) -> Result<Rational, Error> {
    if n < 2 {
        return Err(Error::OrderTooSmall(n));
    }
    let square = (n as i128)
        .checked_mul(n as i128)
        .ok_or(Error::OrderTooLarge(n))?;
    Ok(rat(square) - Rational::new(n as i128 + 3, 2))
}

/// Exact `Z_DP` of a small graph, or the tightest bracket when caps bite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZdpOutcome {
    Exact { s: u64 },
    Bracketed { lo: u64, hi: u64 },
}

impl ZdpOutcome {
    pub fn exact(&self) -> Option<u64> {
        match *self {
            ZdpOutcome::Exact { s } => Some(s),
            ZdpOutcome::Bracketed { .. } => None,
        }
    }
}

impl std::fmt::Display for ZdpOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            ZdpOutcome::Exact { s } => {
                write!(f, "result z_dp={s} status=exact lo={s} hi={s}")
            }
            ZdpOutcome::Bracketed { lo, hi } => {
                write!(f, "result z_dp=- status=bracketed lo={lo} hi={hi}")
            }
        }
    }
}

/// Probes `s = 0, 1, 2, ...` for the least `s` with
/// `χ_DP(G ∨ K_s) = χ(G ∨ K_s)`; the upper bound caps the scan because
/// equality is guaranteed at or before it.
///
/// Each probe needs only a sweep at fold `χ(G ∨ K_s)`: equality holds iff
/// every cover at that fold is colorable, and when the coloring number
/// already equals the chromatic number the inequality chain settles the
/// probe without enumeration. Probing is sequential because the difference
/// `χ_DP - χ` is not known to be monotone in `s`.
pub fn zdp_exact_small(g: &Graph, caps: &SearchCaps) -> ZdpOutcome {
    let hi = zdp_upper_bound(g).bound;
    for s in 0..=hi {
        let join = g.join(&Graph::complete(s as usize));
        let chi_j = chromatic_number(&join) as u32;
        if coloring_number(&join) as u32 == chi_j {
            return ZdpOutcome::Exact { s };
        }
        match all_covers_colorable(&join, chi_j, caps) {
            SweepOutcome::AllColorable { .. } => return ZdpOutcome::Exact { s },
            SweepOutcome::Uncolorable(_) => continue,
            SweepOutcome::Capped(_) => return ZdpOutcome::Bracketed { lo: s, hi },
        }
    }
    unreachable!("equality is a theorem at s = bound")
}

/// The ceiling formula next to the classical `3m` bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundComparison {
    /// `ceil(4(k+1)m / (2k+1))`.
    pub formula: u64,
    /// `ceil(12m / 5)`, the `k = 2` worst case of the formula.
    pub ceil_24: u64,
    /// The classical `3m` bound.
    pub triple_m: u64,
    /// `formula / 3m`, when `m > 0`.
    pub ratio: Option<Rational>,
}

impl std::fmt::Display for BoundComparison {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "zdp-compare bound={} bound_2_4m={} bound_3m={} ratio={}",
            self.formula,
            self.ceil_24,
            self.triple_m,
            match &self.ratio {
                Some(r) => r.to_string(),
                None => "-".to_string(),
            }
        )
    }
}

/// Evaluates the ceiling formula against `ceil(2.4 m)` and `3m`. For
/// `2 <= k <= n-3` the chain `formula <= ceil(2.4 m) <= 3m` is a theorem
/// and is asserted.
pub fn bound_comparison(g: &Graph) -> BoundComparison {
    let m = g.size() as i128;
    let k = chromatic_number(g) as i128;
    let formula = (Rational::new(4 * (k + 1), 2 * k + 1) * rat(m))
        .ceil()
        .to_integer() as u64;
    let ceil_24 = (Rational::new(12, 5) * rat(m)).ceil().to_integer() as u64;
    let triple_m = (3 * m) as u64;
    if 2 <= k && k + 3 <= g.order() as i128 {
        assert!(
            formula <= ceil_24 && ceil_24 <= triple_m,
            "bound chain violated for k={k}, m={m}"
        );
    }
    let ratio = (m > 0).then(|| Rational::new(formula as i128, triple_m as i128));
    BoundComparison { formula, ceil_24, triple_m, ratio }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::cycle(4).unwrap()
    }

    #[test]
    fn deficiency_examples() {
        // C4 with k=2, |A|=10, uniform lists of 12: deficiency 2 per vertex
        let inst = JoinInstance::uniform(c4(), 2, 10, 12).unwrap();
        let t = deficiency_table(&inst);
        assert_eq!(t.per_vertex, vec![2, 2, 2, 2]);
        assert_eq!(t.total, 8);

        // lists at least d + |A| + k clamp to zero
        let inst = JoinInstance::uniform(c4(), 2, 10, 14).unwrap();
        assert_eq!(deficiency_table(&inst).total, 0);

        // isolated vertex with empty lists and no clique
        let inst = JoinInstance::uniform(Graph::empty(1), 1, 0, 0).unwrap();
        assert_eq!(deficiency_table(&inst).per_vertex, vec![1]);
    }

    #[test]
    fn join_condition_boundary() {
        // passes at |A| = 10: 10 >= 6/5 * 8 = 48/5 and 12 = 10 + 2
        let inst = JoinInstance::uniform(c4(), 2, 10, 12).unwrap();
        let rep = check_join_condition(&inst);
        assert_eq!(rep.coefficient, Rational::new(6, 5));
        assert_eq!(rep.required, Rational::new(48, 5));
        assert!(rep.condition_a() && rep.condition_b() && rep.passes());

        // fails at |A| = 9 on condition (b) alone: 9 < 48/5
        let inst = JoinInstance::uniform(c4(), 2, 9, 11).unwrap();
        let rep = check_join_condition(&inst);
        assert_eq!(rep.required, Rational::new(48, 5));
        assert!(rep.condition_a());
        assert!(!rep.condition_b());
        assert!(!rep.passes());
    }

    #[test]
    fn join_condition_empty_graph() {
        // K0 side: zero deficiency, k must still be at least 1
        assert!(matches!(
            JoinInstance::uniform(Graph::empty(0), 0, 3, 5),
            Err(Error::KBelowChromatic { k: 0, chi: 1 })
        ));
        let inst = JoinInstance::uniform(Graph::empty(0), 1, 3, 5).unwrap();
        let rep = check_join_condition(&inst);
        assert_eq!(rep.deficiency.total, 0);
        assert!(rep.passes());
    }

    #[test]
    fn rejects_k_below_chi() {
        assert!(matches!(
            JoinInstance::uniform(Graph::complete(3), 2, 1, 10),
            Err(Error::KBelowChromatic { k: 2, chi: 3 })
        ));
    }

    #[test]
    fn zdp_bound_cases() {
        let b = zdp_upper_bound(&c4());
        assert_eq!((b.case, b.bound), (BoundCase::FourCycle, 1));
        assert_eq!(b.to_string(), "zdp-bound case=c4 k=2 m=4 bound=1");

        let b = zdp_upper_bound(&Graph::complete(5));
        assert_eq!((b.case, b.bound), (BoundCase::Zero, 0));

        // P5: n=5, m=4, k=2 <= n-3: ceil(48/5 * ... ) = ceil(9.6) = 10
        let b = zdp_upper_bound(&Graph::path(5));
        assert_eq!((b.case, b.bound), (BoundCase::Formula, 10));
        assert_eq!(b.coefficient, Rational::new(12, 5));
        assert_eq!(b.to_string(), "zdp-bound case=formula k=2 m=4 bound=10");
    }

    #[test]
    fn order_bound_values() {
        assert_eq!(zdp_order_bound(4).unwrap(), Rational::new(25, 2)); // 12.5
        assert_eq!(zdp_order_bound(2).unwrap(), Rational::new(3, 2)); // 1.5
        assert_eq!(zdp_order_bound(10).unwrap(), Rational::new(187, 2)); // 93.5
        assert_eq!(zdp_order_bound(1), Err(Error::OrderTooSmall(1)));
        assert_eq!(zdp_order_bound(u64::MAX), Err(Error::OrderTooLarge(u64::MAX)));
        assert_eq!(zdp_order_bound(4).unwrap().to_string(), "25/2");
    }

    #[test]
    fn zdp_exact_values() {
        let caps = SearchCaps::default();
        assert_eq!(zdp_exact_small(&c4(), &caps).exact(), Some(1));
        assert_eq!(zdp_exact_small(&Graph::path(3), &caps).exact(), Some(0));
        let out = zdp_exact_small(&c4(), &caps);
        assert_eq!(out.to_string(), "result z_dp=1 status=exact lo=1 hi=1");
    }

    #[test]
    fn zdp_bracket_on_caps() {
        // rank cap 0 blocks the very first probe of a non-tree graph
        let caps = SearchCaps { max_cycle_rank: 0, ..SearchCaps::default() };
        assert_eq!(
            zdp_exact_small(&c4(), &caps),
            ZdpOutcome::Bracketed { lo: 0, hi: 1 }
        );
    }

    #[test]
    fn comparison_values() {
        let c = bound_comparison(&Graph::path(5));
        assert_eq!((c.formula, c.ceil_24, c.triple_m), (10, 10, 12));
        assert_eq!(c.ratio, Some(Rational::new(5, 6)));
        assert_eq!(
            c.to_string(),
            "zdp-compare bound=10 bound_2_4m=10 bound_3m=12 ratio=5/6"
        );
        let c = bound_comparison(&Graph::empty(2));
        assert_eq!((c.formula, c.triple_m, c.ratio), (0, 0, None));
    }

    #[test]
    fn coefficient_monotone_from_2_4() {
        let coeff = |k: i128| Rational::new(4 * (k + 1), 2 * k + 1);
        assert_eq!(coeff(2), Rational::new(12, 5));
        for k in 2..1000 {
            assert!(coeff(k) > coeff(k + 1));
        }
        assert!(coeff(1000) > rat(2));
    }
}
