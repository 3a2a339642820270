//! Multicolored-copy detection oracles.
//!
//! A pattern occurs multicolored in a colored host when some embedding of its
//! underlying graph assigns pairwise distinct colors to all edge instances
//! (a pair of multiplicity m contributes m instances, each needing its own
//! color).  Two oracles are provided:
//!
//! - the general oracle works on an arbitrary coloring and decides each
//!   embedding with a bipartite matching between instances and colors;
//! - the nested oracle works on a multiplicity map read as its level-set
//!   coloring, where the colors available to a pair form a prefix interval,
//!   so Hall's condition collapses to a sorted greedy check.
//!
//! The greedy check sorts (demand, capacity) pairs by capacity and verifies
//! that running demand totals never exceed the capacity at their position;
//! for prefix-interval color sets this is exact, which the unit tests pin
//! down against the matching-based oracle.

use serde::{Deserialize, Serialize};

use crate::colorings::ColoredMultigraph;
use crate::error::{Error, Result};
use crate::graphs::{pair_index, MultiGraph, Pair};
use crate::pattern::PatternMultigraph;

/// A certified multicolored occurrence: `embedding[p]` is the host vertex
/// for pattern vertex `p`, and `colors[i]` is the color of the i-th edge
/// instance, where instances enumerate the pattern's support pairs in
/// lexicographic order, each repeated multiplicity times.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowWitness {
    pub embedding: Vec<usize>,
    pub colors: Vec<u32>,
}

/// The edge-instance order used by [`RainbowWitness::colors`]: support pairs
/// lexicographically, each repeated multiplicity times.
pub fn witness_instance_pairs(pattern: &PatternMultigraph) -> Vec<Pair> {
    let mut out = Vec::with_capacity(pattern.h() as usize);
    for (u, v, mult) in pattern.support_pairs() {
        for _ in 0..mult {
            out.push((u, v));
        }
    }
    out
}

/// How a host is presented to the freeness checks.
#[derive(Clone, Copy, Debug)]
pub enum HostRepr<'a> {
    /// A multiplicity map, read as its nested level-set coloring.
    Profile(&'a MultiGraph),
    /// An explicit color list.
    Colored(&'a ColoredMultigraph),
}

/// Decide whether demands can be assigned pairwise distinct colors when the
/// i-th demand draws from the prefix interval `{0, ..., caps[i] - 1}`.
///
/// Sort by capacity ascending; running demand totals must stay within the
/// capacity at each position.  For prefix intervals this is exactly Hall's
/// condition, because a union of prefixes is the longest of them.
pub fn hall_greedy_check(demands: &[u32], caps: &[u32]) -> bool {
    assert_eq!(demands.len(), caps.len());
    let mut order: Vec<usize> = (0..caps.len()).collect();
    order.sort_by_key(|&i| (caps[i], std::cmp::Reverse(demands[i])));
    let mut running: u64 = 0;
    for &i in &order {
        running += u64::from(demands[i]);
        if running > u64::from(caps[i]) {
            return false;
        }
    }
    true
}

/// Like [`hall_greedy_check`], but on success return one explicit assignment:
/// `out[i]` lists the `demands[i]` distinct colors given to slot `i`, each
/// below `caps[i]`.  Colors are handed out smallest-first in capacity order,
/// so slot `i` receives a run of consecutive color indices.
pub fn hall_greedy_assign(demands: &[u32], caps: &[u32]) -> Option<Vec<Vec<u32>>> {
    assert_eq!(demands.len(), caps.len());
    let mut order: Vec<usize> = (0..caps.len()).collect();
    order.sort_by_key(|&i| (caps[i], std::cmp::Reverse(demands[i])));
    let mut out = vec![Vec::new(); demands.len()];
    let mut next_color: u64 = 0;
    for &i in &order {
        for _ in 0..demands[i] {
            if next_color >= u64::from(caps[i]) {
                return None;
            }
            out[i].push(next_color as u32);
            next_color += 1;
        }
    }
    Some(out)
}

/// A pattern preprocessed for embedding enumeration: support pairs in
/// lexicographic order with demands, and for each vertex the support
/// neighbors that precede it in vertex order.
#[derive(Clone, Debug)]
pub(crate) struct PreparedPattern {
    pub r: usize,
    pub support: Vec<(Pair, u32)>,
    back_edges: Vec<Vec<(usize, u32)>>,
    pub total_demand: u64,
}

impl PreparedPattern {
    pub fn new(pattern: &PatternMultigraph) -> Self {
        let r = pattern.r();
        let support: Vec<(Pair, u32)> = pattern
            .support_pairs()
            .into_iter()
            .map(|(u, v, mult)| ((u, v), mult))
            .collect();
        let mut back_edges = vec![Vec::new(); r];
        for &((u, v), d) in &support {
            back_edges[v].push((u, d));
        }
        PreparedPattern {
            r,
            support,
            back_edges,
            total_demand: pattern.h(),
        }
    }

    /// Run `visit` on every injective embedding of the pattern's support into
    /// the host profile's support that respects `weight >= demand` on every
    /// mapped pair.  `pins` fixes some pattern vertices up front.  Returns
    /// true as soon as a visit returns true.
    fn for_each_embedding(
        &self,
        host_n: usize,
        weights: &[u32],
        pins: &[(usize, usize)],
        visit: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if self.r > host_n {
            return false;
        }
        let mut phi: Vec<Option<usize>> = vec![None; self.r];
        let mut used = vec![false; host_n];
        for &(p, x) in pins {
            if phi[p].is_some() || used[x] {
                return false;
            }
            phi[p] = Some(x);
            used[x] = true;
        }
        self.rec(0, host_n, weights, &mut phi, &mut used, visit)
    }

    fn consistent(&self, p: usize, x: usize, host_n: usize, weights: &[u32], phi: &[Option<usize>]) -> bool {
        for &(q, demand) in &self.back_edges[p] {
            if let Some(y) = phi[q] {
                let (a, b) = if y < x { (y, x) } else { (x, y) };
                if weights[pair_index(host_n, a, b)] < demand {
                    return false;
                }
            }
        }
        true
    }

    fn rec(
        &self,
        p: usize,
        host_n: usize,
        weights: &[u32],
        phi: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        visit: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if p == self.r {
            let full: Vec<usize> = phi.iter().map(|x| x.unwrap()).collect();
            return visit(&full);
        }
        if let Some(x) = phi[p] {
            return self.consistent(p, x, host_n, weights, phi)
                && self.rec(p + 1, host_n, weights, phi, used, visit);
        }
        for x in 0..host_n {
            if used[x] || !self.consistent(p, x, host_n, weights, phi) {
                continue;
            }
            phi[p] = Some(x);
            used[x] = true;
            if self.rec(p + 1, host_n, weights, phi, used, visit) {
                return true;
            }
            phi[p] = None;
            used[x] = false;
        }
        false
    }

    /// Capacities of the host pairs under an embedding, in support order.
    fn image_caps(&self, host_n: usize, weights: &[u32], phi: &[usize]) -> Vec<u32> {
        self.support
            .iter()
            .map(|&((u, v), _)| {
                let (a, b) = if phi[u] < phi[v] {
                    (phi[u], phi[v])
                } else {
                    (phi[v], phi[u])
                };
                weights[pair_index(host_n, a, b)]
            })
            .collect()
    }

    fn demands(&self) -> Vec<u32> {
        self.support.iter().map(|&(_, d)| d).collect()
    }

    /// True when some embedding respecting the pins admits a multicolored
    /// copy under the level-set reading of `weights`.
    pub fn contains_nested_pinned(
        &self,
        host_n: usize,
        weights: &[u32],
        pins: &[(usize, usize)],
    ) -> bool {
        let demands = self.demands();
        self.for_each_embedding(host_n, weights, pins, &mut |phi| {
            hall_greedy_check(&demands, &self.image_caps(host_n, weights, phi))
        })
    }

    /// True when some embedding maps a support pair onto the host pair
    /// `anchor` and admits a multicolored copy under the level-set reading.
    /// Embeddings avoiding the anchor pair are not examined.
    pub fn contains_nested_anchored(
        &self,
        host_n: usize,
        weights: &[u32],
        anchor: Pair,
    ) -> bool {
        let (a, b) = anchor;
        for &((u, v), demand) in &self.support {
            if weights[pair_index(host_n, a, b)] < demand {
                continue;
            }
            for (x, y) in [(a, b), (b, a)] {
                if self.contains_nested_pinned(host_n, weights, &[(u, x), (v, y)]) {
                    return true;
                }
            }
        }
        false
    }
}

/// True when the multiplicity map, read as its nested level-set coloring,
/// contains a multicolored copy of the pattern.
pub fn contains_rainbow_nested(host: &MultiGraph, pattern: &PatternMultigraph) -> bool {
    let prep = PreparedPattern::new(pattern);
    prep.contains_nested_pinned(host.n(), host.weights(), &[])
}

/// Like [`contains_rainbow_nested`], but produce a certified witness.
/// Colors in the witness are level indices: level `c` holds the pairs of
/// multiplicity at least `c + 1`, so an instance on a pair of multiplicity w
/// may use any color below w.
pub fn has_rainbow_nested(
    host: &MultiGraph,
    pattern: &PatternMultigraph,
) -> Option<RainbowWitness> {
    let prep = PreparedPattern::new(pattern);
    let demands = prep.demands();
    let mut witness = None;
    prep.for_each_embedding(host.n(), host.weights(), &[], &mut |phi| {
        let caps = prep.image_caps(host.n(), host.weights(), phi);
        if let Some(assignment) = hall_greedy_assign(&demands, &caps) {
            let colors = assignment.into_iter().flatten().collect();
            witness = Some(RainbowWitness {
                embedding: phi.to_vec(),
                colors,
            });
            true
        } else {
            false
        }
    });
    witness
}

fn kuhn_augment(
    i: usize,
    adj: &[Vec<usize>],
    visited: &mut [bool],
    matched_to: &mut [Option<usize>],
) -> bool {
    for &c in &adj[i] {
        if visited[c] {
            continue;
        }
        visited[c] = true;
        let free = match matched_to[c] {
            None => true,
            Some(j) => kuhn_augment(j, adj, visited, matched_to),
        };
        if free {
            matched_to[c] = Some(i);
            return true;
        }
    }
    false
}

/// Maximum bipartite matching saturating the left side, if one exists:
/// `adj[i]` lists the right vertices available to left vertex `i`.
fn saturating_matching(adj: &[Vec<usize>], n_right: usize) -> Option<Vec<usize>> {
    let mut matched_to: Vec<Option<usize>> = vec![None; n_right];
    for i in 0..adj.len() {
        let mut visited = vec![false; n_right];
        if !kuhn_augment(i, adj, &mut visited, &mut matched_to) {
            return None;
        }
    }
    let mut left = vec![usize::MAX; adj.len()];
    for (c, m) in matched_to.iter().enumerate() {
        if let Some(i) = *m {
            left[i] = c;
        }
    }
    Some(left)
}

/// Like [`has_rainbow_general`], without building the witness.
pub fn contains_rainbow_general(host: &ColoredMultigraph, pattern: &PatternMultigraph) -> bool {
    has_rainbow_general(host, pattern).is_some()
}

/// True when the coloring contains a multicolored copy of the pattern,
/// decided per embedding by a bipartite matching between edge instances and
/// the colors containing their image pairs.  Witness colors are indices into
/// the host's color list.
pub fn has_rainbow_general(
    host: &ColoredMultigraph,
    pattern: &PatternMultigraph,
) -> Option<RainbowWitness> {
    let profile = host.multiplicity_profile();
    let prep = PreparedPattern::new(pattern);
    let instances = witness_instance_pairs(pattern);
    let mut witness = None;
    prep.for_each_embedding(host.n(), profile.weights(), &[], &mut |phi| {
        let adj: Vec<Vec<usize>> = instances
            .iter()
            .map(|&(u, v)| {
                let (a, b) = if phi[u] < phi[v] {
                    (phi[u], phi[v])
                } else {
                    (phi[v], phi[u])
                };
                host.colors_containing(a, b)
            })
            .collect();
        if let Some(left) = saturating_matching(&adj, host.k()) {
            witness = Some(RainbowWitness {
                embedding: phi.to_vec(),
                colors: left.into_iter().map(|c| c as u32).collect(),
            });
            true
        } else {
            false
        }
    });
    witness
}

/// True when the host contains no multicolored copy of the pattern.
pub fn is_multicolored_free(host: HostRepr<'_>, pattern: &PatternMultigraph) -> bool {
    match host {
        HostRepr::Profile(w) => !contains_rainbow_nested(w, pattern),
        HostRepr::Colored(g) => !contains_rainbow_general(g, pattern),
    }
}

/// Check a witness against the host it claims to certify: the embedding must
/// be injective, the colors pairwise distinct, and every instance's color
/// must actually contain its image pair.
pub fn validate_witness(
    host: HostRepr<'_>,
    pattern: &PatternMultigraph,
    witness: &RainbowWitness,
) -> Result<()> {
    let host_n = match host {
        HostRepr::Profile(w) => w.n(),
        HostRepr::Colored(g) => g.n(),
    };
    if witness.embedding.len() != pattern.r() {
        return Err(Error::contract(format!(
            "embedding has {} entries, pattern has {} vertices",
            witness.embedding.len(),
            pattern.r()
        )));
    }
    let mut seen = vec![false; host_n];
    for &x in &witness.embedding {
        if x >= host_n {
            return Err(Error::contract(format!("vertex {x} outside the host")));
        }
        if seen[x] {
            return Err(Error::contract(format!("embedding repeats vertex {x}")));
        }
        seen[x] = true;
    }
    let instances = witness_instance_pairs(pattern);
    if witness.colors.len() != instances.len() {
        return Err(Error::contract(format!(
            "{} colors for {} edge instances",
            witness.colors.len(),
            instances.len()
        )));
    }
    let mut used = std::collections::BTreeSet::new();
    for (&(u, v), &c) in instances.iter().zip(&witness.colors) {
        if !used.insert(c) {
            return Err(Error::contract(format!("color {c} used twice")));
        }
        let (a, b) = if witness.embedding[u] < witness.embedding[v] {
            (witness.embedding[u], witness.embedding[v])
        } else {
            (witness.embedding[v], witness.embedding[u])
        };
        let holds = match host {
            HostRepr::Profile(w) => {
                (c as u64) < u64::from(w.k_cap()) && w.multiplicity(a, b) >= c + 1
            }
            HostRepr::Colored(g) => (c as usize) < g.k() && g.colors()[c as usize].has_edge(a, b),
        };
        if !holds {
            return Err(Error::contract(format!(
                "color {c} does not contain the image pair ({a}, {b})"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::{candidate_complete, candidate_turan, from_multiplicity, nest};
    use crate::graphs::{binom2, SimpleGraph};
    use rand::{Rng, SeedableRng};

    fn k3() -> PatternMultigraph {
        PatternMultigraph::complete(3).unwrap()
    }

    fn host(n: usize, cap: u32, pairs: &[(usize, usize, u32)]) -> MultiGraph {
        MultiGraph::from_pairs(n, cap, pairs).unwrap()
    }

    #[test]
    fn greedy_check_known_cases() {
        assert!(hall_greedy_check(&[1, 1, 1], &[1, 2, 3]));
        assert!(!hall_greedy_check(&[1, 1, 1], &[2, 2, 2]));
        assert!(!hall_greedy_check(&[1, 1, 1], &[1, 1, 1]));
        assert!(hall_greedy_check(&[1, 1, 1], &[3, 3, 3]));
        assert!(hall_greedy_check(&[2], &[2]));
        assert!(!hall_greedy_check(&[2], &[1]));
        assert!(hall_greedy_check(&[2, 1], &[3, 1]));
        assert!(!hall_greedy_check(&[2, 1], &[2, 2]));
        assert!(hall_greedy_check(&[], &[]));
    }

    #[test]
    fn greedy_check_is_order_invariant_and_matches_assignment() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let m = rng.gen_range(1..7usize);
            let demands: Vec<u32> = (0..m).map(|_| rng.gen_range(0..4)).collect();
            let caps: Vec<u32> = (0..m).map(|_| rng.gen_range(0..8)).collect();
            let verdict = hall_greedy_check(&demands, &caps);
            let mut perm: Vec<usize> = (0..m).collect();
            for i in (1..m).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            let pd: Vec<u32> = perm.iter().map(|&i| demands[i]).collect();
            let pc: Vec<u32> = perm.iter().map(|&i| caps[i]).collect();
            assert_eq!(hall_greedy_check(&pd, &pc), verdict);

            let assignment = hall_greedy_assign(&demands, &caps);
            assert_eq!(assignment.is_some(), verdict);
            if let Some(assignment) = assignment {
                let mut all: Vec<u32> = Vec::new();
                for (i, colors) in assignment.iter().enumerate() {
                    assert_eq!(colors.len(), demands[i] as usize);
                    for &c in colors {
                        assert!(c < caps[i]);
                        all.push(c);
                    }
                }
                all.sort_unstable();
                all.dedup();
                assert_eq!(
                    all.len() as u64,
                    demands.iter().map(|&d| u64::from(d)).sum::<u64>()
                );
            }
        }
    }

    #[test]
    fn greedy_check_equals_exhaustive_interval_hall() {
        // Brute-force Hall over all subsets: a union of prefix intervals is
        // the longest one, so the subset condition compares demand sums with
        // the largest capacity in the subset.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for _ in 0..2000 {
            let m = rng.gen_range(1..6usize);
            let demands: Vec<u32> = (0..m).map(|_| rng.gen_range(0..4)).collect();
            let caps: Vec<u32> = (0..m).map(|_| rng.gen_range(0..6)).collect();
            let mut hall = true;
            for mask in 1u32..(1 << m) {
                let mut sum = 0u64;
                let mut max_cap = 0u32;
                for i in 0..m {
                    if mask & (1 << i) != 0 {
                        sum += u64::from(demands[i]);
                        max_cap = max_cap.max(caps[i]);
                    }
                }
                if sum > u64::from(max_cap) {
                    hall = false;
                    break;
                }
            }
            assert_eq!(hall_greedy_check(&demands, &caps), hall);
        }
    }

    #[test]
    fn nested_oracle_uniform_hosts() {
        // Triangle: h = 3, so two complete colors are safe and three are not.
        let free = MultiGraph::uniform(4, 2, 2).unwrap();
        assert!(!contains_rainbow_nested(&free, &k3()));
        let tight = MultiGraph::uniform(4, 3, 3).unwrap();
        assert!(contains_rainbow_nested(&tight, &k3()));

        // Five-cycle: h = 5; uniform multiplicity h - 1 on a complete host
        // stays free, multiplicity h does not.
        let c5 = PatternMultigraph::cycle(5).unwrap();
        let free = MultiGraph::uniform(5, 4, 4).unwrap();
        assert!(!contains_rainbow_nested(&free, &c5));
        let tight = MultiGraph::uniform(5, 5, 5).unwrap();
        assert!(contains_rainbow_nested(&tight, &c5));
    }

    #[test]
    fn nested_oracle_bipartite_support_has_no_triangle() {
        let profile = candidate_turan(5, 3, 6).unwrap().multiplicity_profile();
        assert!(!contains_rainbow_nested(&profile, &k3()));
        assert!(is_multicolored_free(HostRepr::Profile(&profile), &k3()));
    }

    #[test]
    fn nested_oracle_staircase_triangle() {
        let w = host(3, 3, &[(0, 1, 1), (0, 2, 2), (1, 2, 3)]);
        let witness = has_rainbow_nested(&w, &k3()).expect("staircase admits a rainbow");
        validate_witness(HostRepr::Profile(&w), &k3(), &witness).unwrap();
        assert_eq!(witness.colors.len(), 3);
    }

    #[test]
    fn nested_oracle_doubled_edge_pattern() {
        // Triangle with one doubled pair: four instances in total.
        let p = PatternMultigraph::new(3, &[(0, 1, 2), (0, 2, 1), (1, 2, 1)]).unwrap();
        let yes = host(3, 4, &[(0, 1, 4), (0, 2, 2), (1, 2, 1)]);
        let witness = has_rainbow_general(
            &from_multiplicity(&yes, 4).unwrap().into_colored(),
            &p,
        );
        assert!(witness.is_some());
        assert!(contains_rainbow_nested(&yes, &p));
        let no = host(3, 4, &[(0, 1, 3), (0, 2, 2), (1, 2, 1)]);
        assert!(!contains_rainbow_nested(&no, &p));
    }

    #[test]
    fn general_oracle_known_colorings() {
        let c01 = SimpleGraph::from_edges(3, [(0, 1), (0, 2)]).unwrap();
        let c02 = SimpleGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let c12 = SimpleGraph::from_edges(3, [(0, 2), (1, 2)]).unwrap();
        let g = ColoredMultigraph::new(3, vec![c01, c02, c12]).unwrap();
        let w = has_rainbow_general(&g, &k3()).expect("distinct representatives exist");
        validate_witness(HostRepr::Colored(&g), &k3(), &w).unwrap();

        // One full color plus a redundant single edge: two of the three pairs
        // can only take color zero.
        let full = SimpleGraph::complete(3);
        let extra = SimpleGraph::from_edges(3, [(0, 1)]).unwrap();
        let g = ColoredMultigraph::new(3, vec![full, extra, SimpleGraph::empty(3)]).unwrap();
        assert!(!contains_rainbow_general(&g, &k3()));
    }

    #[test]
    fn candidate_constructions_are_free() {
        for (n, pattern) in [(4, k3()), (5, k3()), (5, PatternMultigraph::cycle(5).unwrap())] {
            let h = pattern.h();
            for k in (h - 1) as u32..=(h + 1) as u32 {
                let ci = candidate_complete(n, h, k).unwrap();
                assert!(!contains_rainbow_general(&ci, &pattern));
                assert!(!contains_rainbow_nested(&ci.multiplicity_profile(), &pattern));
            }
            let r = pattern.chi();
            for k in 1..=4u32 {
                let cii = candidate_turan(n, r, k).unwrap();
                assert!(!contains_rainbow_general(&cii, &pattern));
            }
        }
    }

    #[test]
    fn oracles_agree_on_nested_colorings() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let patterns = [
            k3(),
            PatternMultigraph::complete(4).unwrap(),
            PatternMultigraph::new(3, &[(0, 1, 2), (0, 2, 1), (1, 2, 1)]).unwrap(),
        ];
        for _ in 0..400 {
            let n = rng.gen_range(3..6usize);
            let k = rng.gen_range(1..6u32);
            let w = MultiGraph::from_weights(
                n,
                k,
                (0..binom2(n)).map(|_| rng.gen_range(0..=k)).collect(),
            )
            .unwrap();
            let nested = from_multiplicity(&w, k).unwrap();
            for p in &patterns {
                if p.r() > n {
                    continue;
                }
                let fast = contains_rainbow_nested(&w, p);
                let slow = contains_rainbow_general(nested.colored(), p);
                assert_eq!(fast, slow, "n={n} k={k} w={:?}", w.weights());
                if let Some(witness) = has_rainbow_nested(&w, p) {
                    validate_witness(HostRepr::Profile(&w), p, &witness).unwrap();
                }
            }
        }
    }

    #[test]
    fn nesting_never_creates_rainbows() {
        // If the level-set reading of a coloring's profile has a rainbow,
        // the original coloring must have one too.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        let pats = [k3(), PatternMultigraph::cycle(4).unwrap()];
        for _ in 0..300 {
            let n = rng.gen_range(3..6usize);
            let k = rng.gen_range(1..5usize);
            let colors: Vec<SimpleGraph> = (0..k)
                .map(|_| {
                    SimpleGraph::from_edges(
                        n,
                        crate::graphs::all_pairs(n)
                            .into_iter()
                            .filter(|_| rng.gen_bool(0.45)),
                    )
                    .unwrap()
                })
                .collect();
            let g = ColoredMultigraph::new(n, colors).unwrap();
            let nested = nest(&g);
            for p in &pats {
                if p.r() > n {
                    continue;
                }
                if contains_rainbow_general(nested.colored(), p) {
                    assert!(contains_rainbow_general(&g, p));
                }
            }
        }
    }

    #[test]
    fn anchored_detection_covers_full_detection() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let pats = [k3(), PatternMultigraph::cycle(4).unwrap()];
        for _ in 0..300 {
            let n = rng.gen_range(3..6usize);
            let k = rng.gen_range(1..5u32);
            let w = MultiGraph::from_weights(
                n,
                k,
                (0..binom2(n)).map(|_| rng.gen_range(0..=k)).collect(),
            )
            .unwrap();
            for p in &pats {
                if p.r() > n {
                    continue;
                }
                let prep = PreparedPattern::new(p);
                let full = contains_rainbow_nested(&w, p);
                let anchored_any = crate::graphs::all_pairs(n)
                    .into_iter()
                    .any(|(a, b)| prep.contains_nested_anchored(n, w.weights(), (a, b)));
                assert_eq!(full, anchored_any);
            }
        }
    }

    #[test]
    fn witness_validation_rejects_corruption() {
        let w = host(3, 3, &[(0, 1, 1), (0, 2, 2), (1, 2, 3)]);
        let witness = has_rainbow_nested(&w, &k3()).unwrap();
        let mut bad = witness.clone();
        bad.colors[0] = bad.colors[1];
        assert!(validate_witness(HostRepr::Profile(&w), &k3(), &bad).is_err());
        let mut bad = witness.clone();
        bad.embedding[0] = bad.embedding[1];
        assert!(validate_witness(HostRepr::Profile(&w), &k3(), &bad).is_err());
        // Greedy assignment hands out colors smallest-first in capacity
        // order, so the staircase witness is pinned exactly.
        assert_eq!(witness.embedding, vec![0, 1, 2]);
        assert_eq!(witness.colors, vec![0, 1, 2]);
        let mut bad = witness;
        bad.colors = vec![1, 0, 2];
        // Color 1 requires multiplicity 2 on the pair (0, 1), which the
        // staircase host does not grant.
        assert!(validate_witness(HostRepr::Profile(&w), &k3(), &bad).is_err());
    }

    #[test]
    fn single_edge_pattern_needs_enough_levels() {
        let p = PatternMultigraph::new(2, &[(0, 1, 3)]).unwrap();
        assert!(!contains_rainbow_nested(&host(2, 3, &[(0, 1, 2)]), &p));
        assert!(contains_rainbow_nested(&host(2, 3, &[(0, 1, 3)]), &p));
        // Pattern larger than the host embeds nowhere.
        assert!(!contains_rainbow_nested(&MultiGraph::uniform(2, 5, 5).unwrap(), &k3()));
    }
}
