//! The built-in verification suite: every desk-checkable claim the crate is
//! built around, runnable from tests and from the command line.

use crate::bounds::{
    bound_comparison, check_join_condition, zdp_exact_small, zdp_order_bound, zdp_upper_bound,
    JoinInstance, Rational, ZdpOutcome,
};
use crate::classify::{classify_chi_n_minus_2, ChiNMinus2Class};
use crate::coloring::{chromatic_number, coloring_number};
use crate::cover::{c4_bad_cover, normalize};
use crate::dp::{all_covers_colorable, dp_chromatic, falsify, SearchCaps, SweepOutcome};
use crate::graph::Graph;

/// One verifiable claim; `run` returns a detail line on pass.
pub struct VerifyItem {
    pub id: &'static str,
    pub summary: &'static str,
    pub run: fn() -> Result<String, String>,
}

/// The full suite in execution order.
pub fn items() -> Vec<VerifyItem> {
    vec![
        VerifyItem {
            id: "c4-dp-chromatic",
            summary: "chi_DP(C4) = 3 by full enumeration at folds 2 and 3",
            run: c4_dp_chromatic,
        },
        VerifyItem {
            id: "c4-bad-cover",
            summary: "the shipped twisted 2-fold cover of C4 validates and is uncolorable",
            run: c4_bad_cover_item,
        },
        VerifyItem {
            id: "c4-join-k1",
            summary: "chi_DP(C4 v K1) = 3 over all 1296 covers; col = 4, chi = 3",
            run: c4_join_k1,
        },
        VerifyItem {
            id: "zdp-c4",
            summary: "Z_DP(C4) = 1: fold 2 fails at s=0, fold 3 closes at s=1",
            run: zdp_c4,
        },
        VerifyItem {
            id: "chordal-dp-equality",
            summary: "chi_DP = chi on every chordal graph with n <= 6, chi <= 3, rank <= 6",
            run: chordal_sweep,
        },
        VerifyItem {
            id: "chi-n-minus-2-classification",
            summary: "every graph with chi = n-2 (n = 4, 5, 6) classifies structurally",
            run: classifier_sweep,
        },
        VerifyItem {
            id: "zdp-bound-consistency",
            summary: "exact Z_DP <= graph bound <= order bound on feasible n <= 5 graphs",
            run: bound_consistency_sweep,
        },
        VerifyItem {
            id: "join-condition-boundary",
            summary: "C4 instance passes at |A| = 10 and fails at 9 (required 48/5)",
            run: join_condition_boundary,
        },
        VerifyItem {
            id: "join-condition-sampling",
            summary: "10^4 seeded covers find no counterexample on 3 passing instances",
            run: join_condition_sampling,
        },
        VerifyItem {
            id: "coefficient-facts",
            summary: "4(k+1)/(2k+1) = 12/5 at k = 2, strictly decreasing to k = 1000",
            run: coefficient_facts,
        },
    ]
}

/// Runs one item by id.
pub fn run_item(id: &str) -> Option<Result<String, String>> {
    items().into_iter().find(|i| i.id == id).map(|i| (i.run)())
}

fn fail(msg: impl Into<String>) -> Result<String, String> {
    Err(msg.into())
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

/// All labeled graphs on `n` vertices, by edge-subset bitmask.
fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    (0u64..(1u64 << pairs.len())).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).expect("generated edges are simple")
    })
}

fn c4_dp_chromatic() -> Result<String, String> {
    let c4 = Graph::cycle(4).expect("4 >= 3");
    let caps = SearchCaps::default();

    // fold 2: exactly 2 normalized covers, exactly 1 uncolorable, and it is
    // the normalized twisted cover
    let covers: Vec<_> = crate::enumerate::enumerate_covers(&c4, 2, 8)
        .map_err(|e| e.to_string())?
        .collect();
    ensure(covers.len() == 2, "expected 2 normalized 2-fold covers")?;
    let bad: Vec<_> = covers
        .iter()
        .filter(|c| c.cover().find_coloring().unwrap().is_none())
        .collect();
    ensure(bad.len() == 1, "expected exactly 1 uncolorable 2-fold cover")?;
    let twisted = normalize(&c4_bad_cover()).map_err(|e| e.to_string())?;
    ensure(*bad[0] == twisted, "the bad cover must normalize the shipped one")?;

    // fold 3: all 6 covers colorable
    match all_covers_colorable(&c4, 3, &caps) {
        SweepOutcome::AllColorable { covers: 6 } => {}
        other => return fail(format!("fold 3 sweep: {other:?}")),
    }

    let r = dp_chromatic(&c4, &caps);
    ensure(r.value() == Some(3), "dp_chromatic(C4) must be exactly 3")?;
    Ok("2 covers at fold 2 (1 bad, the twist), 6/6 colorable at fold 3, chi_DP = 3".into())
}

fn c4_bad_cover_item() -> Result<String, String> {
    let c = c4_bad_cover();
    ensure(c.validate().is_empty(), "cover must satisfy all four conditions")?;
    ensure(c.cross_edge_count() == 8, "cover must have 8 cross edges")?;
    let (witness, stats) = c.search_coloring().map_err(|e| e.to_string())?;
    ensure(witness.is_none(), "cover must admit no coloring")?;
    ensure(stats.nodes <= 16, "search must stay within 2^4 transversals")?;
    Ok(format!(
        "valid, uncolorable after {} assignments ({} prunes)",
        stats.nodes, stats.pruned
    ))
}

fn c4_join_k1() -> Result<String, String> {
    let w = Graph::cycle(4).expect("4 >= 3").join(&Graph::complete(1));
    ensure(w.cycle_rank() == 4, "C4 v K1 has cycle rank 4")?;
    ensure(chromatic_number(&w) == 3, "chi(C4 v K1) = 3")?;
    ensure(coloring_number(&w) == 4, "col(C4 v K1) = 4")?;
    let caps = SearchCaps::default();
    match all_covers_colorable(&w, 3, &caps) {
        SweepOutcome::AllColorable { covers: 1296 } => {}
        other => return fail(format!("fold 3 sweep: {other:?}")),
    }
    let r = dp_chromatic(&w, &caps);
    ensure(r.value() == Some(3), "chi_DP(C4 v K1) = 3")?;
    Ok("1296/1296 covers colorable at fold 3; chi = chi_DP = 3, col = 4".into())
}

fn zdp_c4() -> Result<String, String> {
    let c4 = Graph::cycle(4).expect("4 >= 3");
    let caps = SearchCaps::default();
    // step s = 0: some 2-fold cover is uncolorable
    match all_covers_colorable(&c4, 2, &caps) {
        SweepOutcome::Uncolorable(_) => {}
        other => return fail(format!("s=0 probe: {other:?}")),
    }
    // step s = 1: every 3-fold cover of C4 v K1 is colorable
    let join = c4.join(&Graph::complete(1));
    match all_covers_colorable(&join, 3, &caps) {
        SweepOutcome::AllColorable { .. } => {}
        other => return fail(format!("s=1 probe: {other:?}")),
    }
    match zdp_exact_small(&c4, &caps) {
        ZdpOutcome::Exact { s: 1 } => Ok("Z_DP(C4) = 1".into()),
        other => fail(format!("zdp_exact_small(C4): {other:?}")),
    }
}

fn chordal_sweep() -> Result<String, String> {
    let caps = SearchCaps { max_cycle_rank: 6, ..SearchCaps::default() };
    let mut checked = 0u64;
    for n in 0..=6 {
        for g in labeled_graphs(n) {
            if g.cycle_rank() > 6 || !crate::chordal::is_chordal(&g) {
                continue;
            }
            let chi = chromatic_number(&g);
            if chi > 3 {
                continue;
            }
            let r = dp_chromatic(&g, &caps);
            if r.value() != Some(chi as u32) {
                return fail(format!(
                    "chordal graph with edges {:?}: chi = {chi}, dp = {r:?}",
                    g.edges()
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} chordal graphs, chi_DP = chi on every one"))
}

fn classifier_sweep() -> Result<String, String> {
    let mut classified = 0u64;
    for n in 4..=6 {
        for g in labeled_graphs(n) {
            if chromatic_number(&g) + 2 != n {
                continue;
            }
            match classify_chi_n_minus_2(&g).map_err(|e| e.to_string())? {
                ChiNMinus2Class::TwoVertexComplete(u, v) => {
                    let keep: Vec<usize> =
                        g.vertices().filter(|&w| w != u && w != v).collect();
                    if !g.induced(&keep).is_complete() {
                        return fail(format!(
                            "two-vertex claim fails structurally on {:?}",
                            g.edges()
                        ));
                    }
                }
                ChiNMinus2Class::JoinC5Complete(s) => {
                    // independent re-check: s universal vertices whose
                    // removal leaves a 5-cycle
                    let universal: Vec<usize> =
                        g.vertices().filter(|&v| g.degree(v) == n - 1).collect();
                    let keep: Vec<usize> = g
                        .vertices()
                        .filter(|v| !universal.contains(v))
                        .collect();
                    let rim = g.induced(&keep);
                    if universal.len() != s
                        || keep.len() != 5
                        || !crate::iso::is_isomorphic(&rim, &Graph::cycle(5).unwrap())
                    {
                        return fail(format!(
                            "join claim fails structurally on {:?}",
                            g.edges()
                        ));
                    }
                }
                ChiNMinus2Class::NotApplicable => {
                    return fail(format!(
                        "graph with chi = n-2 left unclassified: {:?}",
                        g.edges()
                    ));
                }
            }
            classified += 1;
        }
    }
    Ok(format!("{classified} graphs with chi = n-2, all classified and re-verified"))
}

fn bound_consistency_sweep() -> Result<String, String> {
    let caps = SearchCaps { max_cycle_rank: 6, ..SearchCaps::default() };
    let mut exact = 0u64;
    let mut skipped = 0u64;
    for n in 2..=5 {
        let order_bound = zdp_order_bound(n as u64).map_err(|e| e.to_string())?;
        for g in labeled_graphs(n) {
            let graph_bound = zdp_upper_bound(&g);
            match zdp_exact_small(&g, &caps) {
                ZdpOutcome::Exact { s } => {
                    if s > graph_bound.bound {
                        return fail(format!(
                            "Z_DP = {s} exceeds bound {} on {:?}",
                            graph_bound.bound,
                            g.edges()
                        ));
                    }
                    if Rational::from_integer(graph_bound.bound as i128) > order_bound {
                        return fail(format!(
                            "graph bound {} exceeds order bound {order_bound} on {:?}",
                            graph_bound.bound,
                            g.edges()
                        ));
                    }
                    exact += 1;
                }
                ZdpOutcome::Bracketed { .. } => skipped += 1,
            }
        }
    }
    Ok(format!("{exact} graphs verified exactly, {skipped} beyond caps"))
}

fn join_condition_boundary() -> Result<String, String> {
    let c4 = Graph::cycle(4).expect("4 >= 3");
    let pass = JoinInstance::uniform(c4.clone(), 2, 10, 12).map_err(|e| e.to_string())?;
    let rep = check_join_condition(&pass);
    ensure(rep.required == Rational::new(48, 5), "required side must be 48/5")?;
    ensure(rep.passes(), "|A| = 10 must pass")?;
    let fail_inst = JoinInstance::uniform(c4, 2, 9, 11).map_err(|e| e.to_string())?;
    let rep9 = check_join_condition(&fail_inst);
    ensure(rep9.condition_a(), "|A| = 9 keeps the list floor")?;
    ensure(!rep9.condition_b(), "|A| = 9 must fail the rational inequality")?;
    Ok("pass at |A| = 10, fail at |A| = 9; threshold exactly 48/5".into())
}

/// Smallest `|A|` whose uniform instance (lists `|A| + chi`) passes.
fn minimal_passing_a(g: &Graph) -> Result<u64, String> {
    let chi = chromatic_number(g) as u64;
    let k = chi as u32;
    for a in 0..10_000 {
        let inst = JoinInstance::uniform(g.clone(), k, a, a + chi).map_err(|e| e.to_string())?;
        if check_join_condition(&inst).passes() {
            return Ok(a);
        }
    }
    Err("no passing |A| below 10^4".into())
}

fn join_condition_sampling() -> Result<String, String> {
    let instances = [
        ("C4", Graph::cycle(4).expect("4 >= 3")),
        ("P4", Graph::path(4)),
        ("K3", Graph::complete(3)),
    ];
    let mut detail = Vec::new();
    for (name, g) in instances {
        let a = minimal_passing_a(&g)?;
        let chi = chromatic_number(&g) as u64;
        let fold = (a + chi) as u32;
        let join = g.join(&Graph::complete(a as usize));
        if let Some(cert) = falsify(&join, fold, 10_000, 2024, 1) {
            return fail(format!(
                "{name} with |A| = {a}: sampled cover {:?} is uncolorable",
                cert.source
            ));
        }
        detail.push(format!("{name}:|A|={a},fold={fold}"));
    }
    Ok(format!("no bad cover in 10^4 draws each ({})", detail.join(" ")))
}

fn coefficient_facts() -> Result<String, String> {
    let coeff = |k: i128| Rational::new(4 * (k + 1), 2 * k + 1);
    ensure(coeff(2) == Rational::new(12, 5), "coefficient at k = 2 must be 12/5")?;
    for k in 2..1000 {
        if coeff(k) <= coeff(k + 1) {
            return fail(format!("coefficient not strictly decreasing at k = {k}"));
        }
    }
    let mut checked = 0u64;
    for n in 0..=6 {
        for g in labeled_graphs(n) {
            let k = chromatic_number(&g);
            if !(2 <= k && k + 3 <= n) {
                continue;
            }
            let cmp = bound_comparison(&g);
            if !(cmp.formula <= cmp.ceil_24 && cmp.ceil_24 <= cmp.triple_m) {
                return fail(format!("bound chain broken on {:?}", g.edges()));
            }
            checked += 1;
        }
    }
    Ok(format!(
        "12/5 at k = 2, strictly decreasing through k = 1000; chain holds on {checked} graphs"
    ))
}
