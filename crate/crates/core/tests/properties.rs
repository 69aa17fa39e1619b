//! Property suites: exhaustive small-order sweeps and randomized invariants.

mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use dpcolor::{
    all_covers_colorable, chordal_peo, chromatic_number, coloring_number, dp_chromatic,
    enumerate_covers, is_isomorphic, max_clique, normalize, parse_graph6, peo_clique_number,
    to_graph6, Cover, EdgeMatch, Graph, Perm, SearchCaps, SweepOutcome,
};

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
        Graph::from_edges(n, &edges).expect("simple edges")
    })
}

fn graph_from_seed(n: usize, mask: u64) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> (i % 64) & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edges(n, &edges).expect("simple edges")
}

/// Exhaustive n <= 6 sweep of the inequality chain and the chordal
/// equalities, plus the structure forced by chromatic number n-1 or more
/// (a clique on n-1 vertices, hence chordality).
#[test]
fn chain_chordal_and_high_chi_sweep() {
    for n in 0..=6 {
        for g in labeled_graphs(n) {
            let chi = chromatic_number(&g);
            let col = coloring_number(&g);
            assert!(chi <= col, "chain broken on {:?}", g.edges());
            if let Some(peo) = chordal_peo(&g) {
                let along = peo_clique_number(&g, &peo);
                assert_eq!(chi, col, "chordal equality broken on {:?}", g.edges());
                assert_eq!(chi, along, "peo clique mismatch on {:?}", g.edges());
            }
            if n >= 1 && chi >= n - 1 {
                assert!(max_clique(&g).len() >= n - 1, "missing big clique: {:?}", g.edges());
                assert!(chordal_peo(&g).is_some(), "high-chi graph not chordal: {:?}", g.edges());
            }
        }
    }
}

#[test]
fn join_with_clique_adds_to_chi() {
    let graphs = [
        Graph::cycle(4).unwrap(),
        Graph::cycle(5).unwrap(),
        Graph::path(3),
        Graph::complete(3),
        Graph::empty(2),
    ];
    for g in &graphs {
        let chi = chromatic_number(g);
        for s in 0..=3 {
            let j = g.join(&Graph::complete(s));
            assert_eq!(chromatic_number(&j), chi + s);
        }
    }
    // the join of C5 and K_{n-5} has chromatic number n - 2
    for s in 0..=2 {
        let g = Graph::cycle(5).unwrap().join(&Graph::complete(s));
        assert_eq!(chromatic_number(&g), g.order() - 2);
    }
}

/// Inequality chain for the DP-chromatic number on every graph with
/// n <= 5 and cycle rank <= 4, all exact.
#[test]
fn dp_chain_sweep() {
    let caps = SearchCaps { max_cycle_rank: 4, ..SearchCaps::default() };
    for n in 0..=5 {
        for g in labeled_graphs(n) {
            if g.cycle_rank() > 4 {
                continue;
            }
            let r = dp_chromatic(&g, &caps);
            let v = r.value().unwrap_or_else(|| {
                panic!("expected exact result on {:?}, got {r:?}", g.edges())
            });
            assert!(chromatic_number(&g) as u32 <= v && v <= coloring_number(&g) as u32);
        }
    }
}

/// Graphs with chi >= n-1 have dp = chi (such graphs are chordal), and
/// graphs with chi = n-2 have dp = chi unless they are the 4-cycle.
#[test]
fn high_chromatic_dp_sweep() {
    let caps = SearchCaps::default();
    let c4 = Graph::cycle(4).unwrap();
    assert_eq!(dp_chromatic(&c4, &caps).value(), Some(3));
    assert_eq!(chromatic_number(&c4), 2);
    for n in 1..=5 {
        for g in labeled_graphs(n) {
            let chi = chromatic_number(&g);
            let applies = chi + 1 >= n || (chi + 2 == n && !is_isomorphic(&g, &c4));
            if !applies {
                continue;
            }
            let r = dp_chromatic(&g, &caps);
            assert_eq!(
                r.value(),
                Some(chi as u32),
                "dp != chi on {:?} (chi = {chi})",
                g.edges()
            );
        }
    }
}

/// The solver agrees with the brute-force transversal oracle on every
/// normalized cover of C4, C5 and K4 with fold <= 3, and witnesses check.
#[test]
fn solver_agrees_with_brute_force() {
    let graphs = [
        Graph::cycle(4).unwrap(),
        Graph::cycle(5).unwrap(),
        Graph::complete(4),
    ];
    let mut agreements = 0u64;
    for g in &graphs {
        for fold in 1..=3 {
            for nc in enumerate_covers(g, fold, 8).unwrap() {
                let fast = nc.cover().find_coloring().unwrap();
                let slow = common::brute_force_coloring(nc.cover());
                assert_eq!(fast, slow, "disagreement on {:?} fold {fold}", g.edges());
                if let Some(w) = fast {
                    assert!(nc.cover().check_witness(&w));
                }
                agreements += 1;
            }
        }
    }
    // C4 and C5 contribute 1 + 2 + 6 covers each, K4 contributes
    // 1 + 8 + 216 over its three free edges
    assert_eq!(agreements, 243);
}

/// Every enumerated cover validates; counts follow (fold!)^rank.
#[test]
fn enumerated_covers_validate() {
    for (g, fold, expect) in [
        (Graph::cycle(4).unwrap(), 2, 2u128),
        (Graph::cycle(4).unwrap(), 3, 6),
        (Graph::complete(4), 2, 8),
        (Graph::path(4), 3, 1),
    ] {
        let mut count = 0u128;
        for nc in enumerate_covers(&g, fold, 8).unwrap() {
            assert!(nc.cover().validate().is_empty());
            assert!(nc.cover().is_full());
            count += 1;
        }
        assert_eq!(count, expect);
    }
}

/// graph6 round-trips byte-identically over 10^4 random graphs of order
/// <= 8.
#[test]
fn graph6_random_roundtrip() {
    let mut rng = StdRng::seed_from_u64(0x6702);
    for _ in 0..10_000 {
        let n = rng.random_range(0..=8);
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(0.5) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        let enc = to_graph6(&g);
        let back = parse_graph6(&enc).unwrap();
        assert_eq!(back, g);
        assert_eq!(to_graph6(&back), enc);
    }
}

fn random_full_cover(g: &Graph, fold: u32, rng: &mut StdRng) -> Cover {
    let mut c = Cover::new(g.clone(), fold).unwrap();
    for (u, v) in g.edges() {
        let p = Perm::random(fold, rng);
        c.set_match(u, v, EdgeMatch::from_perm(&p)).unwrap();
    }
    c
}

proptest! {
    /// Relabeling along the spanning forest never changes colorability.
    #[test]
    fn normalize_preserves_colorability(
        n in 1usize..=6,
        mask in any::<u64>(),
        fold in 1u32..=3,
        seed in any::<u64>(),
    ) {
        let g = graph_from_seed(n, mask);
        let mut rng = StdRng::seed_from_u64(seed);
        let c = random_full_cover(&g, fold, &mut rng);
        let nc = normalize(&c).unwrap();
        prop_assert!(nc.cover().validate().is_empty());
        prop_assert_eq!(
            c.find_coloring().unwrap().is_some(),
            nc.cover().find_coloring().unwrap().is_some()
        );
        // idempotent
        prop_assert_eq!(&normalize(nc.cover()).unwrap(), &nc);
        // the normalized form sits at its own rank in the enumeration, so
        // every full cover is relabeling-equivalent to an enumerated one
        let rank = nc.rank().expect("small space");
        let e = enumerate_covers(&g, fold, 64).unwrap();
        prop_assert!(rank < e.total());
        prop_assert_eq!(&e.cover_at(rank), &nc);
    }

    /// Adding pairs to matches only removes witnesses: any witness of the
    /// extended cover is a witness of the original.
    #[test]
    fn extending_matches_never_creates_witnesses(
        n in 1usize..=5,
        mask in any::<u64>(),
        fold in 1u32..=3,
        seed in any::<u64>(),
    ) {
        let g = graph_from_seed(n, mask);
        let mut rng = StdRng::seed_from_u64(seed);
        let mut partial = Cover::new(g.clone(), fold).unwrap();
        let mut extended = Cover::new(g.clone(), fold).unwrap();
        for (u, v) in g.edges() {
            let p = Perm::random(fold, &mut rng);
            let keep_small = rng.random_range(0..=fold);
            let keep_big = rng.random_range(keep_small..=fold);
            let pairs: Vec<(u32, u32)> =
                (0..fold).map(|a| (a, p.apply(a))).collect();
            partial
                .set_match(u, v, EdgeMatch::from_pairs(pairs[..keep_small as usize].to_vec()))
                .unwrap();
            extended
                .set_match(u, v, EdgeMatch::from_pairs(pairs[..keep_big as usize].to_vec()))
                .unwrap();
        }
        prop_assert!(partial.validate().is_empty());
        prop_assert!(extended.validate().is_empty());
        if let Some(w) = extended.find_coloring().unwrap() {
            prop_assert!(partial.check_witness(&w));
        }
        // and the contrapositive view: an uncolorable partial cover stays
        // uncolorable after extension
        if partial.find_coloring().unwrap().is_none() {
            prop_assert!(extended.find_coloring().unwrap().is_none());
        }
    }

    /// Cover text round-trips through parse and write.
    #[test]
    fn cover_text_roundtrip(
        n in 1usize..=6,
        mask in any::<u64>(),
        fold in 1u32..=4,
        seed in any::<u64>(),
    ) {
        let g = graph_from_seed(n, mask);
        let mut rng = StdRng::seed_from_u64(seed);
        let mut c = Cover::new(g.clone(), fold).unwrap();
        for (u, v) in g.edges() {
            let p = Perm::random(fold, &mut rng);
            let keep = rng.random_range(0..=fold);
            let pairs: Vec<(u32, u32)> =
                (0..keep).map(|a| (a, p.apply(a))).collect();
            c.set_match(u, v, EdgeMatch::from_pairs(pairs)).unwrap();
        }
        let text = dpcolor::write_cover(&c).unwrap();
        let parsed = dpcolor::parse_cover(&text, &g).unwrap();
        prop_assert_eq!(&parsed, &c);
        prop_assert_eq!(dpcolor::write_cover(&parsed).unwrap(), text);
    }

    /// graph6 round-trips on arbitrary edge masks.
    #[test]
    fn graph6_roundtrip_prop(n in 0usize..=9, mask in any::<u64>()) {
        let g = graph_from_seed(n, mask);
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }
}

/// The 6-cycle needs one joined vertex: its fold-2 twist cover fails at
/// s = 0, and at s = 1 all 6^6 normalized 3-fold covers are colorable.
#[test]
fn zdp_of_c6_is_one() {
    let c6 = Graph::cycle(6).unwrap();
    let caps = SearchCaps::default();
    match all_covers_colorable(&c6, 2, &caps) {
        SweepOutcome::Uncolorable(cert) => {
            assert_eq!(cert.cover.free_perms()[0].as_slice(), &[1, 0]);
        }
        other => panic!("expected the twist cover, got {other:?}"),
    }
    assert_eq!(dpcolor::zdp_exact_small(&c6, &caps).exact(), Some(1));
}

/// A capped sweep never reports a boolean, and caps reproduce brackets.
#[test]
fn caps_never_lie() {
    let c4 = Graph::cycle(4).unwrap();
    let tight = SearchCaps { max_covers: 1, ..SearchCaps::default() };
    assert!(matches!(
        all_covers_colorable(&c4, 2, &tight),
        SweepOutcome::Capped(_)
    ));
    let zero_time = SearchCaps {
        time_budget: Some(std::time::Duration::ZERO),
        ..SearchCaps::default()
    };
    assert!(matches!(
        all_covers_colorable(&c4, 2, &zero_time),
        SweepOutcome::Capped(_)
    ));
}
