//! Shared test-only oracles, kept independent of the solver paths they
//! check.

use dpcolor::{ColoringWitness, Cover};

/// Brute-force colorability oracle: walks all `fold^n` transversals in
/// lexicographic order and returns the first one that avoids every matched
/// pair. Validity is re-derived from the raw match pairs here, not from the
/// library's search.
pub fn brute_force_coloring(c: &Cover) -> Option<ColoringWitness> {
    let n = c.base().order();
    let fold = c.fold();
    let mut choice = vec![0u32; n];
    loop {
        if transversal_ok(c, &choice) {
            return Some(ColoringWitness::from_choices(choice));
        }
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < fold {
                break;
            }
            choice[i] = 0;
        }
    }
}

fn transversal_ok(c: &Cover, choice: &[u32]) -> bool {
    for (u, v) in c.base().edges() {
        if let Some(m) = c.match_between(u, v) {
            if m.pairs().contains(&(choice[u], choice[v])) {
                return false;
            }
        }
    }
    true
}
