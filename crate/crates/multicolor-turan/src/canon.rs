//! Canonical forms under vertex relabeling, and exhaustive enumeration of
//! small graphs up to isomorphism.
//!
//! Canonicalization is by brute force over all vertex permutations, which is
//! exactly right at the sizes this crate searches (n <= 8): the canonical
//! form of a weight vector is the lexicographically smallest relabeled copy.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graphs::{all_pairs, binom2, pair_index, MultiGraph, SimpleGraph};

/// Lexicographically smallest relabeling of a flat weight vector on `n`
/// vertices.  The output is a weight vector in the same layout.
pub fn canonical_weights(n: usize, w: &[u32]) -> Vec<u32> {
    assert_eq!(w.len(), binom2(n) as usize);
    let mut best: Option<Vec<u32>> = None;
    let mut relabeled = vec![0u32; w.len()];
    for perm in (0..n).permutations(n) {
        for (idx, &(u, v)) in all_pairs(n).iter().enumerate() {
            let (a, b) = if perm[u] < perm[v] {
                (perm[u], perm[v])
            } else {
                (perm[v], perm[u])
            };
            relabeled[pair_index(n, a, b)] = w[idx];
        }
        if best.as_ref().map_or(true, |b| relabeled < *b) {
            best = Some(relabeled.clone());
        }
    }
    best.unwrap_or_default()
}

/// Canonical copy of a multigraph (same cap, relabeled vertices).
pub fn canonical_multigraph(g: &MultiGraph) -> MultiGraph {
    let w = canonical_weights(g.n(), g.weights());
    MultiGraph::from_weights(g.n(), g.k_cap(), w).expect("canonical weights stay within the cap")
}

/// Canonical key of a simple graph: its canonical 0/1 weight vector.
pub fn canonical_simple_key(g: &SimpleGraph) -> Vec<u32> {
    let mut w = vec![0u32; binom2(g.n()) as usize];
    for (u, v) in g.edges() {
        w[pair_index(g.n(), u, v)] = 1;
    }
    canonical_weights(g.n(), &w)
}

/// All simple graphs on `n` vertices up to isomorphism, in a deterministic
/// order.  Exhaustive over all edge subsets, so capped at `n <= 6`.
pub fn graphs_up_to_iso(n: usize) -> Result<Vec<SimpleGraph>> {
    if n > 6 {
        return Err(Error::size_limit(format!(
            "isomorphism-free enumeration is supported up to 6 vertices, got {n}"
        )));
    }
    let pairs = all_pairs(n);
    let m = pairs.len();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << m) {
        let g = SimpleGraph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p),
        )?;
        let key = canonical_simple_key(&g);
        if seen.insert(key) {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{seq::SliceRandom, Rng, SeedableRng};

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(2..6usize);
            let w: Vec<u32> = (0..binom2(n)).map(|_| rng.gen_range(0..4)).collect();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let mut relabeled = vec![0u32; w.len()];
            for (idx, &(u, v)) in all_pairs(n).iter().enumerate() {
                let (a, b) = if perm[u] < perm[v] {
                    (perm[u], perm[v])
                } else {
                    (perm[v], perm[u])
                };
                relabeled[pair_index(n, a, b)] = w[idx];
            }
            assert_eq!(canonical_weights(n, &w), canonical_weights(n, &relabeled));
        }
    }

    #[test]
    fn graph_counts_up_to_isomorphism() {
        // Known counts of simple graphs on 1..=5 vertices.
        let expected = [1usize, 2, 4, 11, 34];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(graphs_up_to_iso(i + 1).unwrap().len(), want);
        }
        assert!(graphs_up_to_iso(7).is_err());
    }
}
