//! Forbidden patterns: multigraphs whose multicolored (rainbow) copies the
//! hosts must avoid, together with color-criticality structure.
//!
//! A pattern is a multigraph `H` on vertices `0..r-1` with per-pair edge
//! multiplicities.  Its chromatic number is that of the underlying simple
//! graph; an edge is critical if deleting it lowers the chromatic number
//! (only possible for pairs of multiplicity one).  A critical coloring is a
//! proper partition into exactly `chi` classes such that some class pair is
//! joined by exactly one edge counted with multiplicity; contracting the
//! classes of such a coloring yields the color-reduced pattern.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{
    binom2, chromatic_number, MultiGraph, Pair, SimpleGraph,
    CHROMATIC_SIZE_CAP,
};

/// A forbidden pattern: an immutable multigraph with precomputed chromatic
/// number, total edge count and critical edge list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternMultigraph {
    weights: MultiGraph,
    underlying: SimpleGraph,
    h: u64,
    chi: usize,
    critical_edges: Vec<Pair>,
}

impl PatternMultigraph {
    /// Build a pattern from `(u, v, multiplicity)` triples on `r` vertices.
    ///
    /// Rejects patterns with isolated vertices (every vertex must carry at
    /// least one edge) and patterns too large for the exact chromatic solver.
    pub fn new(r: usize, pairs: &[(usize, usize, u32)]) -> Result<Self> {
        if r < 2 {
            return Err(Error::invalid(format!(
                "a pattern needs at least 2 vertices, got {r}"
            )));
        }
        let max_mult = pairs.iter().map(|&(_, _, m)| m).max().unwrap_or(0);
        let weights = MultiGraph::from_pairs(r, max_mult.max(1), pairs)?;
        let underlying = weights.support();
        for v in 0..r {
            if underlying.degree(v) == 0 {
                return Err(Error::invalid(format!(
                    "pattern vertex {v} is isolated; patterns must have no isolated vertices"
                )));
            }
        }
        let chi = chromatic_number(&underlying)?;
        let critical_edges = compute_critical_edges(&weights, &underlying, chi)?;
        let h = weights.total();
        Ok(PatternMultigraph {
            weights,
            underlying,
            h,
            chi,
            critical_edges,
        })
    }

    /// The complete pattern `K_r` with all multiplicities one.
    pub fn complete(r: usize) -> Result<Self> {
        let pairs: Vec<(usize, usize, u32)> = crate::graphs::all_pairs(r)
            .into_iter()
            .map(|(u, v)| (u, v, 1))
            .collect();
        PatternMultigraph::new(r, &pairs)
    }

    /// The cycle pattern `C_len` with all multiplicities one.
    pub fn cycle(len: usize) -> Result<Self> {
        if len < 3 {
            return Err(Error::invalid(format!(
                "cycle pattern needs >= 3 vertices, got {len}"
            )));
        }
        let pairs: Vec<(usize, usize, u32)> =
            (0..len).map(|i| (i, (i + 1) % len, 1)).collect();
        PatternMultigraph::new(len, &pairs)
    }

    /// Number of vertices.
    pub fn r(&self) -> usize {
        self.weights.n()
    }

    /// Total edge count with multiplicity.
    pub fn h(&self) -> u64 {
        self.h
    }

    /// Chromatic number of the underlying simple graph.
    pub fn chi(&self) -> usize {
        self.chi
    }

    /// The critical edges (pairs whose deletion lowers the chromatic number).
    pub fn critical_edges(&self) -> &[Pair] {
        &self.critical_edges
    }

    /// True iff the pattern has a critical edge, i.e. it is
    /// chromatic-number-critical in the edge sense.
    pub fn is_color_critical(&self) -> bool {
        !self.critical_edges.is_empty()
    }

    /// The multiplicity of pair `(u, v)`.
    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.weights.multiplicity(u, v)
    }

    /// The multiplicity map.
    pub fn weights(&self) -> &MultiGraph {
        &self.weights
    }

    /// The underlying simple graph.
    pub fn underlying(&self) -> &SimpleGraph {
        &self.underlying
    }

    /// Pairs with positive multiplicity, lexicographic, as
    /// `(u, v, multiplicity)` triples.
    pub fn support_pairs(&self) -> Vec<(usize, usize, u32)> {
        crate::graphs::all_pairs(self.r())
            .into_iter()
            .filter_map(|(u, v)| {
                let m = self.multiplicity(u, v);
                (m > 0).then_some((u, v, m))
            })
            .collect()
    }

    /// Weighted degree of a vertex.
    pub fn degree(&self, v: usize) -> u64 {
        self.weights.degree(v)
    }

    /// True iff every pair of the pattern has multiplicity at most one.
    pub fn is_simple(&self) -> bool {
        self.weights.max_multiplicity() <= 1
    }
}

/// Critical edges: support pairs of multiplicity one whose removal lowers the
/// chromatic number.  (Removing one copy of a heavier pair leaves the
/// underlying graph unchanged, so such pairs are never critical.)
fn compute_critical_edges(
    weights: &MultiGraph,
    underlying: &SimpleGraph,
    chi: usize,
) -> Result<Vec<Pair>> {
    let mut out = Vec::new();
    for (u, v) in underlying.edges() {
        if weights.multiplicity(u, v) != 1 {
            continue;
        }
        let reduced = underlying.without_edge(u, v);
        if chromatic_number(&reduced)? < chi {
            out.push((u, v));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Critical colorings and color reduction
// ---------------------------------------------------------------------------

/// A proper partition of a pattern's vertices into exactly `chi` classes,
/// with a witness class pair joined by exactly one edge (with multiplicity).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalColoring {
    /// The color classes, each sorted ascending, ordered by smallest element.
    pub classes: Vec<Vec<usize>>,
    /// The lexicographically smallest class pair `(i, j)` with exactly one
    /// edge between class `i` and class `j`.
    pub witness_pair: (usize, usize),
}

/// Total multiplicity between two vertex classes of a pattern.
pub fn class_pair_weight(h: &PatternMultigraph, a: &[usize], b: &[usize]) -> u64 {
    let mut total = 0u64;
    for &u in a {
        for &v in b {
            total += h.multiplicity(u, v) as u64;
        }
    }
    total
}

/// All class pairs `(i, j)`, `i < j`, joined by exactly one edge.
pub fn witness_pairs(h: &PatternMultigraph, classes: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..classes.len() {
        for j in (i + 1)..classes.len() {
            if class_pair_weight(h, &classes[i], &classes[j]) == 1 {
                out.push((i, j));
            }
        }
    }
    out
}

/// Enumerate every critical coloring of the pattern: each proper partition
/// into exactly `chi` independent classes that has at least one witness pair.
///
/// Requires `chi >= 3` (a bipartite pattern is not a valid critical input)
/// and at most [`CHROMATIC_SIZE_CAP`] vertices.
pub fn critical_colorings(h: &PatternMultigraph) -> Result<Vec<CriticalColoring>> {
    if h.chi() < 3 {
        return Err(Error::invalid(format!(
            "critical colorings need chromatic number >= 3, got {}",
            h.chi()
        )));
    }
    if h.r() > CHROMATIC_SIZE_CAP {
        return Err(Error::size_limit(format!(
            "critical coloring enumeration is capped at {CHROMATIC_SIZE_CAP} vertices, got {}",
            h.r()
        )));
    }
    let r = h.chi();
    let n = h.r();
    let underlying = h.underlying();
    let mut out = Vec::new();
    // Canonical partition enumeration: vertex 0 opens class 0, and each
    // vertex may only open the next unused class, so each unordered partition
    // appears exactly once.
    let mut assignment = vec![0usize; n];
    fn descend(
        underlying: &SimpleGraph,
        h: &PatternMultigraph,
        r: usize,
        v: usize,
        used: usize,
        assignment: &mut Vec<usize>,
        out: &mut Vec<CriticalColoring>,
    ) {
        let n = assignment.len();
        if v == n {
            if used != r {
                return;
            }
            let mut classes = vec![Vec::new(); r];
            for (vert, &c) in assignment.iter().enumerate() {
                classes[c].push(vert);
            }
            let wits = witness_pairs(h, &classes);
            if let Some(&first) = wits.first() {
                out.push(CriticalColoring {
                    classes,
                    witness_pair: first,
                });
            }
            return;
        }
        // Classes that would remain unopened must still be fillable.
        let remaining = n - v;
        for c in 0..=used.min(r - 1) {
            if c == used && remaining < r - used {
                continue;
            }
            let conflict = (0..v).any(|u| assignment[u] == c && underlying.has_edge(u, v));
            if conflict {
                continue;
            }
            assignment[v] = c;
            let next_used = used.max(c + 1);
            descend(underlying, h, r, v + 1, next_used, assignment, out);
        }
    }
    descend(underlying, h, r, 0, 0, &mut assignment, &mut out);
    Ok(out)
}

/// Validate that `classes` is a proper partition of the pattern's vertices
/// into exactly `chi` independent classes with at least one witness pair.
pub fn validate_critical_coloring(h: &PatternMultigraph, classes: &[Vec<usize>]) -> Result<()> {
    if classes.len() != h.chi() {
        return Err(Error::contract(format!(
            "coloring has {} classes but the pattern's chromatic number is {}",
            classes.len(),
            h.chi()
        )));
    }
    let mut seen = vec![false; h.r()];
    for class in classes {
        if class.is_empty() {
            return Err(Error::contract("empty color class"));
        }
        for &v in class {
            if v >= h.r() {
                return Err(Error::contract(format!("vertex {v} out of range")));
            }
            if seen[v] {
                return Err(Error::contract(format!("vertex {v} appears twice")));
            }
            seen[v] = true;
        }
        if !h.underlying().is_independent_set(class) {
            return Err(Error::contract(format!(
                "class {class:?} is not independent"
            )));
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::contract("classes do not cover all vertices"));
    }
    if witness_pairs(h, classes).is_empty() {
        return Err(Error::contract(
            "no class pair is joined by exactly one edge",
        ));
    }
    Ok(())
}

/// Contract the classes of a critical coloring: the color-reduced pattern on
/// `chi` vertices whose pair `(i, j)` carries the total multiplicity between
/// classes `i` and `j`.  The edge total is preserved.
pub fn color_reduce(h: &PatternMultigraph, classes: &[Vec<usize>]) -> Result<PatternMultigraph> {
    validate_critical_coloring(h, classes)?;
    let r = classes.len();
    let mut pairs = Vec::new();
    for i in 0..r {
        for j in (i + 1)..r {
            let w = class_pair_weight(h, &classes[i], &classes[j]);
            let w32 = u32::try_from(w)
                .map_err(|_| Error::invalid("class pair weight exceeds u32".to_string()))?;
            if w32 > 0 {
                pairs.push((i, j, w32));
            }
        }
    }
    let reduced = PatternMultigraph::new(r, &pairs)?;
    debug_assert_eq!(reduced.h(), h.h(), "color reduction must preserve the edge total");
    Ok(reduced)
}

// ---------------------------------------------------------------------------
// Structural validation of vertex-minimal critical patterns
// ---------------------------------------------------------------------------

/// One failed structural check from [`validate_pattern`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PatternViolation {
    /// A pair with zero multiplicity (every pair must carry an edge).
    ZeroMultiplicity {
        /// The offending pair.
        pair: Pair,
    },
    /// A pair subset too heavy for the complement to stay populated: the
    /// heaviest `size` pairs sum to `sum`, above `h - (binom(r,2) - size)`.
    SubsetTooHeavy {
        /// Number of pairs in the violating subset.
        size: usize,
        /// Their total multiplicity.
        sum: u64,
        /// The violated bound.
        bound: i64,
        /// The heaviest pairs realizing the subset.
        pairs: Vec<Pair>,
    },
    /// A vertex degree above `h - binom(r-1, 2)`.
    DegreeTooHigh {
        /// The offending vertex.
        vertex: usize,
        /// Its weighted degree.
        degree: u64,
        /// The violated bound.
        bound: i64,
    },
}

/// Report of the structural checks on a pattern with as many vertices as its
/// chromatic number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternReport {
    /// Violations found; empty iff the pattern passes.
    pub violations: Vec<PatternViolation>,
}

impl PatternReport {
    /// True iff no check failed.
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the structural consequences of being a vertex-minimal critical
/// pattern on `r` vertices with `h` edges:
///
/// 1. every pair has multiplicity at least one;
/// 2. for every pair subset `E`, `w(E) <= h - (binom(r,2) - |E|)` (checked
///    exactly via sorted prefix sums: the binding subset of each size is the
///    heaviest one);
/// 3. every vertex degree is at most `h - binom(r-1, 2)`.
pub fn validate_pattern(h: &PatternMultigraph) -> PatternReport {
    let r = h.r();
    let m = binom2(r) as i64;
    let total = h.h() as i64;
    let mut violations = Vec::new();

    let pairs = crate::graphs::all_pairs(r);
    for &(u, v) in &pairs {
        if h.multiplicity(u, v) == 0 {
            violations.push(PatternViolation::ZeroMultiplicity { pair: (u, v) });
        }
    }

    // Sorted descending multiplicities; the heaviest j pairs maximize w(E)
    // over subsets of size j, so checking prefixes checks all subsets.
    let mut weighted: Vec<(u32, Pair)> = pairs
        .iter()
        .map(|&(u, v)| (h.multiplicity(u, v), (u, v)))
        .collect();
    weighted.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut prefix = 0u64;
    for (j, &(w, _)) in weighted.iter().enumerate() {
        prefix += w as u64;
        let bound = total - (m - (j as i64 + 1));
        if (prefix as i64) > bound {
            violations.push(PatternViolation::SubsetTooHeavy {
                size: j + 1,
                sum: prefix,
                bound,
                pairs: weighted[..=j].iter().map(|&(_, p)| p).collect(),
            });
        }
    }

    let degree_bound = total - binom2(r.saturating_sub(1)) as i64;
    for v in 0..r {
        let d = h.degree(v);
        if (d as i64) > degree_bound {
            violations.push(PatternViolation::DegreeTooHigh {
                vertex: v,
                degree: d,
                bound: degree_bound,
            });
        }
    }

    PatternReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(r: usize) -> PatternMultigraph {
        PatternMultigraph::complete(r).unwrap()
    }

    fn c5() -> PatternMultigraph {
        PatternMultigraph::cycle(5).unwrap()
    }

    #[test]
    fn pattern_basics() {
        let h = k(3);
        assert_eq!(h.r(), 3);
        assert_eq!(h.h(), 3);
        assert_eq!(h.chi(), 3);
        let c = c5();
        assert_eq!(c.h(), 5);
        assert_eq!(c.chi(), 3);
        assert!(PatternMultigraph::new(3, &[(0, 1, 1)]).is_err(), "isolated vertex");
        assert!(PatternMultigraph::new(1, &[]).is_err());
    }

    #[test]
    fn critical_edges_known_patterns() {
        assert_eq!(c5().critical_edges().len(), 5);
        assert_eq!(k(4).critical_edges().len(), 6);
        // K_4 plus a pendant edge: only the clique edges are critical.
        let mut pairs: Vec<(usize, usize, u32)> = crate::graphs::all_pairs(4)
            .into_iter()
            .map(|(u, v)| (u, v, 1))
            .collect();
        pairs.push((3, 4, 1));
        let hp = PatternMultigraph::new(5, &pairs).unwrap();
        assert_eq!(hp.chi(), 4);
        let crit = hp.critical_edges();
        assert_eq!(crit.len(), 6);
        assert!(!crit.contains(&(3, 4)));
        // A doubled edge is never critical.
        let doubled =
            PatternMultigraph::new(3, &[(0, 1, 2), (0, 2, 1), (1, 2, 1)]).unwrap();
        assert!(!doubled.critical_edges().contains(&(0, 1)));
    }

    #[test]
    fn critical_colorings_of_triangle() {
        let h = k(3);
        let cols = critical_colorings(&h).unwrap();
        assert_eq!(cols.len(), 1);
        assert_eq!(cols[0].classes, vec![vec![0], vec![1], vec![2]]);
        // Every class pair is a witness.
        assert_eq!(witness_pairs(&h, &cols[0].classes), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn critical_colorings_of_five_cycle() {
        let h = c5();
        let cols = critical_colorings(&h).unwrap();
        // The five rotations of {v0, v2}, {v1, v3}, {v4}.
        assert_eq!(cols.len(), 5);
        for col in &cols {
            let sizes: Vec<usize> = col.classes.iter().map(|c| c.len()).collect();
            let mut sorted = sizes.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, vec![1, 2, 2]);
            assert_eq!(witness_pairs(&h, &col.classes).len(), 2);
        }
        // The specific partition {0,2}, {1,3}, {4} has witnesses where the
        // singleton meets each doubleton exactly once.
        let target = vec![vec![0, 2], vec![1, 3], vec![4]];
        let found = cols.iter().find(|c| c.classes == target).unwrap();
        assert_eq!(witness_pairs(&h, &found.classes), vec![(0, 2), (1, 2)]);
        assert_eq!(found.witness_pair, (0, 2));
    }

    #[test]
    fn critical_colorings_reject_bipartite() {
        let p4 = PatternMultigraph::new(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1)]).unwrap();
        assert!(matches!(
            critical_colorings(&p4),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn color_reduce_five_cycle_to_weighted_triangle() {
        let h = c5();
        let classes = vec![vec![0, 2], vec![1, 3], vec![4]];
        let reduced = color_reduce(&h, &classes).unwrap();
        assert_eq!(reduced.r(), 3);
        assert_eq!(reduced.h(), 5);
        let mut mults = vec![
            reduced.multiplicity(0, 1),
            reduced.multiplicity(0, 2),
            reduced.multiplicity(1, 2),
        ];
        mults.sort_unstable();
        assert_eq!(mults, vec![1, 1, 3]);
        assert!(reduced.is_color_critical());
    }

    #[test]
    fn color_reduce_complete_is_identity() {
        let h = k(4);
        let classes = vec![vec![0], vec![1], vec![2], vec![3]];
        let reduced = color_reduce(&h, &classes).unwrap();
        assert_eq!(reduced.weights(), h.weights());
    }

    #[test]
    fn color_reduce_rejects_invalid_colorings() {
        // Non-independent class in K_4.
        let h = k(4);
        let bad = vec![vec![0, 1], vec![2], vec![3]];
        assert!(matches!(
            color_reduce(&h, &bad),
            Err(Error::ContractViolation(_))
        ));
        // Wrong class count.
        let badcount = vec![vec![0], vec![1], vec![2], vec![3], vec![]];
        assert!(color_reduce(&h, &badcount).is_err());
    }

    #[test]
    fn validate_pattern_examples() {
        // K_5 passes with equality in the subset bound.
        let report = validate_pattern(&k(5));
        assert!(report.pass());

        // A zero-multiplicity pair fails the first check.
        let missing = PatternMultigraph::new(
            4,
            &[(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1)],
        )
        .unwrap();
        let report = validate_pattern(&missing);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, PatternViolation::ZeroMultiplicity { pair } if *pair == (2, 3))));

        // K_5 with one pair tripled: h = 12, max degree 6 <= 12 - 6, passes.
        let mut pairs: Vec<(usize, usize, u32)> = crate::graphs::all_pairs(5)
            .into_iter()
            .map(|(u, v)| (u, v, 1))
            .collect();
        pairs[0] = (0, 1, 3);
        let heavy = PatternMultigraph::new(5, &pairs).unwrap();
        assert_eq!(heavy.h(), 12);
        assert!(validate_pattern(&heavy).pass());
    }

    // Any pattern on r vertices with all multiplicities >= 1 satisfies all
    // three checks; the subset and degree bounds follow from the complement
    // pairs each carrying at least one edge.
    #[test]
    fn validate_pattern_passes_all_positive_patterns() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..300 {
            let r = rng.gen_range(3..7usize);
            let pairs: Vec<(usize, usize, u32)> = crate::graphs::all_pairs(r)
                .into_iter()
                .map(|(u, v)| (u, v, rng.gen_range(1..5u32)))
                .collect();
            let h = PatternMultigraph::new(r, &pairs).unwrap();
            assert!(validate_pattern(&h).pass());
        }
    }
}
