//! Permutations of `{0, ..., m-1}` with lexicographic rank and unrank.

use rand::Rng;

/// A permutation in one-line notation: `map[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    map: Vec<u32>,
}

impl Perm {
    pub fn identity(m: u32) -> Perm {
        Perm { map: (0..m).collect() }
    }

    /// Validates that `map` is a bijection of `{0, ..., m-1}`.
    pub fn from_map(map: Vec<u32>) -> Option<Perm> {
        let m = map.len();
        let mut seen = vec![false; m];
        for &x in &map {
            if x as usize >= m || seen[x as usize] {
                return None;
            }
            seen[x as usize] = true;
        }
        Some(Perm { map })
    }

    pub fn degree(&self) -> u32 {
        self.map.len() as u32
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.map[i as usize]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.map.len()];
        for (i, &x) in self.map.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { map: inv }
    }

    /// Composition `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            map: other.map.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    /// Lexicographic rank of the one-line notation, in `0..m!`.
    pub fn lex_rank(&self) -> u128 {
        let m = self.map.len();
        let mut rank: u128 = 0;
        for i in 0..m {
            let smaller = self.map[i + 1..]
                .iter()
                .filter(|&&x| x < self.map[i])
                .count() as u128;
            rank += smaller * factorial((m - 1 - i) as u32).expect("degree within range");
        }
        rank
    }

    /// The permutation of degree `m` at the given lexicographic rank.
    pub fn from_lex_rank(m: u32, mut rank: u128) -> Perm {
        let total = factorial(m).expect("degree within range");
        assert!(rank < total, "rank {rank} out of range for degree {m}");
        let mut remaining: Vec<u32> = (0..m).collect();
        let mut map = Vec::with_capacity(m as usize);
        for i in (0..m).rev() {
            let f = factorial(i).expect("degree within range");
            let idx = (rank / f) as usize;
            rank %= f;
            map.push(remaining.remove(idx));
        }
        Perm { map }
    }

    /// Uniform random permutation by Fisher-Yates.
    pub fn random<R: Rng + ?Sized>(m: u32, rng: &mut R) -> Perm {
        let mut map: Vec<u32> = (0..m).collect();
        for i in (1..map.len()).rev() {
            let j = rng.random_range(0..=i);
            map.swap(i, j);
        }
        Perm { map }
    }
}

/// Advances `map` to its lexicographic successor in place. Returns `false`
/// (and leaves the ascending identity) when `map` was the last permutation.
pub fn next_lex(map: &mut [u32]) -> bool {
    if map.len() < 2 {
        return false;
    }
    let mut i = map.len() - 1;
    while i > 0 && map[i - 1] >= map[i] {
        i -= 1;
    }
    if i == 0 {
        map.sort_unstable();
        return false;
    }
    let pivot = i - 1;
    let mut j = map.len() - 1;
    while map[j] <= map[pivot] {
        j -= 1;
    }
    map.swap(pivot, j);
    map[i..].reverse();
    true
}

/// `m!` as a u128, or `None` on overflow (`m > 34`).
pub fn factorial(m: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for i in 2..=(m as u128) {
        acc = acc.checked_mul(i)?;
    }
    Some(acc)
}
