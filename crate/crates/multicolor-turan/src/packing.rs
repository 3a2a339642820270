//! Graph packing: edge-disjoint placement of two graphs on a shared vertex
//! set.
//!
//! A packing of graphs G and H on n vertices is a bijection σ of the vertex
//! set with σ(u)σ(v) ∉ E(H) whenever uv ∈ E(G); equivalently, G embeds into
//! the complement of H.  Two classical sufficient conditions are checked and
//! exercised here:
//!
//! - product bound: e(G)·e(H) < C(n, 2);
//! - sum bound: e(G) + e(H) ≤ 3(n − 1)/2, compared in integers as
//!   2·(e(G) + e(H)) ≤ 3·(n − 1).
//!
//! [`verify_packing_theorems`] stress-tests both: exhaustively over all
//! isomorphism classes for small n, by seeded sampling above that.

use serde::{Deserialize, Serialize};

use crate::canon::graphs_up_to_iso;
use crate::error::{Error, Result};
use crate::graphs::{all_pairs, binom2, SimpleGraph};
use rand::{Rng, SeedableRng};

/// A certified packing: `sigma[u]` is the image of vertex `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingBijection {
    pub sigma: Vec<usize>,
}

/// Check that `sigma` is a bijection sending every edge of `g` to a non-edge
/// of `h`.
pub fn verify_packing(g: &SimpleGraph, h: &SimpleGraph, packing: &PackingBijection) -> Result<()> {
    let n = g.n();
    if h.n() != n {
        return Err(Error::invalid("graphs must share a vertex count"));
    }
    if packing.sigma.len() != n {
        return Err(Error::contract(format!(
            "bijection has {} entries for {n} vertices",
            packing.sigma.len()
        )));
    }
    let mut seen = vec![false; n];
    for &x in &packing.sigma {
        if x >= n || seen[x] {
            return Err(Error::contract("not a bijection"));
        }
        seen[x] = true;
    }
    for (u, v) in g.edges() {
        if h.has_edge(packing.sigma[u], packing.sigma[v]) {
            return Err(Error::contract(format!(
                "edge ({u}, {v}) collides at ({}, {})",
                packing.sigma[u], packing.sigma[v]
            )));
        }
    }
    Ok(())
}

/// Search for a packing of `g` and `h` by backtracking.  Vertices of `g` are
/// placed in order of decreasing degree and candidate images are tried in
/// order of increasing degree in `h`, so the tightest constraints bind first.
/// Returns None only when no packing exists.
pub fn find_packing(g: &SimpleGraph, h: &SimpleGraph) -> Option<PackingBijection> {
    let n = g.n();
    if h.n() != n {
        return None;
    }
    if g.edge_count() == 0 || h.edge_count() == 0 {
        return Some(PackingBijection {
            sigma: (0..n).collect(),
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| std::cmp::Reverse(g.degree(u)));
    let mut images: Vec<usize> = (0..n).collect();
    images.sort_by_key(|&x| h.degree(x));

    let mut sigma = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        i: usize,
        order: &[usize],
        images: &[usize],
        g: &SimpleGraph,
        h: &SimpleGraph,
        sigma: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let u = order[i];
        'candidates: for &x in images {
            if used[x] {
                continue;
            }
            for q in g.neighbors(u) {
                if sigma[q] != usize::MAX && h.has_edge(sigma[q], x) {
                    continue 'candidates;
                }
            }
            sigma[u] = x;
            used[x] = true;
            if rec(i + 1, order, images, g, h, sigma, used) {
                return true;
            }
            sigma[u] = usize::MAX;
            used[x] = false;
        }
        false
    }
    if rec(0, &order, &images, g, h, &mut sigma, &mut used) {
        let packing = PackingBijection { sigma };
        debug_assert!(verify_packing(g, h, &packing).is_ok());
        Some(packing)
    } else {
        None
    }
}

/// True when the product bound guarantees a packing: e(G)·e(H) < C(n, 2).
pub fn product_bound_applies(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    g.n() == h.n() && g.edge_count() * h.edge_count() < binom2(g.n())
}

/// True when the sum bound guarantees a packing, compared exactly in
/// integers: 2·(e(G) + e(H)) ≤ 3·(n − 1).
pub fn sum_bound_applies(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    g.n() == h.n() && g.n() >= 1 && 2 * (g.edge_count() + h.edge_count()) <= 3 * (g.n() as u64 - 1)
}

/// Extend a graph to `n` vertices by adding isolated vertices.
pub fn pad(g: &SimpleGraph, n: usize) -> Result<SimpleGraph> {
    if n < g.n() {
        return Err(Error::invalid(format!(
            "cannot pad a {} vertex graph down to {n}",
            g.n()
        )));
    }
    SimpleGraph::from_edges(n, g.edges())
}

/// Outcome of a packing-theorem stress test.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PackingReport {
    /// Pairs whose hypotheses held and that were searched.
    pub pairs_checked: u64,
    /// Of those, how many satisfied the product bound.
    pub product_cases: u64,
    /// Of those, how many satisfied the sum bound.
    pub sum_cases: u64,
    /// Hypothesis-satisfying pairs with no packing found.  Each entry is the
    /// edge lists of the offending pair; the theorems promise this is empty.
    pub failures: Vec<(Vec<(usize, usize)>, Vec<(usize, usize)>)>,
}

impl PackingReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

fn random_graph_with_edges(rng: &mut impl Rng, n: usize, edges: u64) -> SimpleGraph {
    let mut pairs = all_pairs(n);
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.gen_range(0..=i));
    }
    pairs.truncate(edges as usize);
    SimpleGraph::from_edges(n, pairs).expect("shuffled pairs are valid edges")
}

fn check_pair(g: &SimpleGraph, h: &SimpleGraph, report: &mut PackingReport) {
    let product = product_bound_applies(g, h);
    let sum = sum_bound_applies(g, h);
    if !product && !sum {
        return;
    }
    report.pairs_checked += 1;
    report.product_cases += u64::from(product);
    report.sum_cases += u64::from(sum);
    if find_packing(g, h).is_none() {
        report
            .failures
            .push((g.edges().collect(), h.edges().collect()));
    }
}

/// Stress-test the two packing theorems.  For every n up to
/// `min(exhaustive_n_max, 5)` all ordered pairs of isomorphism classes are
/// checked; for n from 6 to `n_max`, `samples_per_n` random pairs are drawn
/// with edge counts lying inside at least one hypothesis.
pub fn verify_packing_theorems(n_max: usize, samples_per_n: u64, seed: u64) -> PackingReport {
    let mut report = PackingReport {
        pairs_checked: 0,
        product_cases: 0,
        sum_cases: 0,
        failures: Vec::new(),
    };
    for n in 1..=n_max.min(5) {
        let classes = graphs_up_to_iso(n).expect("iso enumeration is supported up to n = 6");
        for g in &classes {
            for h in &classes {
                check_pair(g, h, &mut report);
            }
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for n in 6..=n_max {
        let mut drawn = 0;
        while drawn < samples_per_n {
            // Draw edge counts uniformly inside the union of hypotheses:
            // either both small enough for the sum bound or with a product
            // below C(n, 2).
            let budget_sum = (3 * (n as u64 - 1)) / 2;
            let eg = rng.gen_range(0..=binom2(n) / 2);
            let eh_max_product = if eg == 0 {
                binom2(n)
            } else {
                ((binom2(n) - 1) / eg).min(binom2(n))
            };
            let eh_max = eh_max_product.max(budget_sum.saturating_sub(eg));
            let eh = rng.gen_range(0..=eh_max);
            let g = random_graph_with_edges(&mut rng, n, eg);
            let h = random_graph_with_edges(&mut rng, n, eh);
            if !product_bound_applies(&g, &h) && !sum_bound_applies(&g, &h) {
                continue;
            }
            check_pair(&g, &h, &mut report);
            drawn += 1;
        }
    }
    report
}
