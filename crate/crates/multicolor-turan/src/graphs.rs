//! Core graph types: simple graphs, edge-weighted multigraphs, Turán graphs
//! and an exact chromatic-number solver for small instances.
//!
//! Vertices are dense integer indices `0..n-1`.  Unordered pairs are always
//! canonicalized to `(min, max)`, and multigraph weights live in a flat
//! upper-triangular vector indexed lexicographically, so multiplicity lookup
//! is constant time.  All types are immutable after construction; operations
//! that "modify" return new values.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered vertex pair, canonicalized as `(min, max)`.
pub type Pair = (usize, usize);

/// Canonicalize an unordered pair.  Panics on loops; loops are rejected by
/// every public constructor before this is reached.
pub fn pair(u: usize, v: usize) -> Pair {
    assert!(u != v, "loops are not representable");
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// `n` choose 2.
pub fn binom2(n: usize) -> u64 {
    (n as u64) * (n.saturating_sub(1) as u64) / 2
}

/// Index of pair `(u, v)` (with `u < v`) in the flat lexicographic
/// upper-triangular layout `(0,1), (0,2), ..., (0,n-1), (1,2), ...`.
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// All unordered pairs of `0..n-1` in lexicographic order, i.e. exactly the
/// order of [`pair_index`].
pub fn all_pairs(n: usize) -> Vec<Pair> {
    let mut out = Vec::with_capacity(binom2(n) as usize);
    for u in 0..n {
        for v in (u + 1)..n {
            out.push((u, v));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Simple graphs
// ---------------------------------------------------------------------------

/// A finite simple graph on vertices `0..n-1` with a set of unordered edges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<Pair>,
}

impl SimpleGraph {
    /// The empty graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Build from an edge list.  Edges are canonicalized; duplicates collapse.
    /// Errors on loops or endpoints out of range.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            set.insert(pair(u, v));
        }
        Ok(SimpleGraph { n, edges: set })
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        SimpleGraph {
            n,
            edges: all_pairs(n).into_iter().collect(),
        }
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`.  Requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("cycle needs >= 3 vertices, got {n}")));
        }
        SimpleGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> u64 {
        self.edges.len() as u64
    }

    /// Edge membership.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&pair(u, v))
    }

    /// The edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Pair> + '_ {
        self.edges.iter().copied()
    }

    /// Degree of a vertex.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// The neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Minimum degree; zero for the empty vertex set.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// True iff no two vertices of `set` are adjacent.
    pub fn is_independent_set(&self, set: &[usize]) -> bool {
        for (idx, &u) in set.iter().enumerate() {
            for &v in &set[idx + 1..] {
                if self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// The same graph with edge `(u, v)` removed (a no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> SimpleGraph {
        let mut edges = self.edges.clone();
        edges.remove(&pair(u, v));
        SimpleGraph { n: self.n, edges }
    }

    /// Adjacency bitmask rows; only valid for `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64);
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }
}

// ---------------------------------------------------------------------------
// Turán graphs
// ---------------------------------------------------------------------------

/// The balanced part sizes of the Turán graph `T_parts(n)`: sizes differ by
/// at most one and are listed largest first.  Requires `1 <= parts <= n`.
pub fn turan_part_sizes(n: usize, parts: usize) -> Result<Vec<usize>> {
    if parts == 0 || parts > n {
        return Err(Error::invalid(format!(
            "turan graph needs 1 <= parts <= n, got parts = {parts}, n = {n}"
        )));
    }
    let q = n / parts;
    let r = n % parts;
    Ok((0..parts)
        .map(|i| if i < r { q + 1 } else { q })
        .collect())
}

/// The complete multipartite Turán graph `T_parts(n)` with balanced classes.
/// Vertices are assigned to classes in contiguous blocks, largest class first.
pub fn turan_graph(n: usize, parts: usize) -> Result<SimpleGraph> {
    let sizes = turan_part_sizes(n, parts)?;
    let mut class_of = vec![0usize; n];
    let mut next = 0;
    for (c, &s) in sizes.iter().enumerate() {
        for _ in 0..s {
            class_of[next] = c;
            next += 1;
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if class_of[u] != class_of[v] {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(n, edges)
}

/// `t_parts(n)`: the number of edges of the Turán graph, computed from the
/// balanced part sizes without materializing the graph.
pub fn turan_count(n: usize, parts: usize) -> Result<u64> {
    let sizes = turan_part_sizes(n, parts)?;
    let sq: u64 = sizes.iter().map(|&s| (s * s) as u64).sum();
    Ok(((n * n) as u64 - sq) / 2)
}

// ---------------------------------------------------------------------------
// Chromatic number (exact, small instances)
// ---------------------------------------------------------------------------

/// Default vertex-count cap for the exact chromatic-number search.
pub const CHROMATIC_SIZE_CAP: usize = 16;

/// Exact chromatic number via branch and bound, using a maximum clique as the
/// lower bound and a greedy coloring as the upper bound.  Errors with
/// [`Error::SizeLimit`] above [`CHROMATIC_SIZE_CAP`] vertices.
pub fn chromatic_number(g: &SimpleGraph) -> Result<usize> {
    chromatic_number_bounded(g, CHROMATIC_SIZE_CAP)
}

/// [`chromatic_number`] with an explicit vertex-count cap.
pub fn chromatic_number_bounded(g: &SimpleGraph, cap: usize) -> Result<usize> {
    if g.n() > cap {
        return Err(Error::size_limit(format!(
            "chromatic number is exact only up to {cap} vertices, got {}",
            g.n()
        )));
    }
    if g.n() == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let adj = g.adjacency_masks();
    let order = degree_descending_order(g);
    let upper = greedy_coloring_count(&adj, &order);
    let lower = max_clique_size(&adj, g.n());
    for k in lower..upper {
        if is_k_colorable(&adj, &order, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn degree_descending_order(g: &SimpleGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn greedy_coloring_count(adj: &[u64], order: &[usize]) -> usize {
    let mut color = vec![usize::MAX; adj.len()];
    let mut used = 0;
    for &v in order {
        let mut taken = 0u64;
        for u in 0..adj.len() {
            if color[u] != usize::MAX && adj[v] >> u & 1 == 1 {
                taken |= 1 << color[u];
            }
        }
        let c = (0..).find(|&c| taken >> c & 1 == 0).unwrap();
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Size of a maximum clique, exact, by recursive candidate-set expansion.
fn max_clique_size(adj: &[u64], n: usize) -> usize {
    fn grow(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grow(adj, rest & adj[v], size + 1, best);
            if size + 1 + rest.count_ones() as usize <= *best {
                return;
            }
        }
    }
    let mut best = 0;
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    grow(adj, all, 0, &mut best);
    best
}

/// Exact k-colorability by backtracking; the first vertex in `order` is
/// pinned to color 0 and each later vertex may open at most one new color.
fn is_k_colorable(adj: &[u64], order: &[usize], k: usize) -> bool {
    fn assign(adj: &[u64], order: &[usize], k: usize, idx: usize, color: &mut [usize]) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        let mut max_used = 0;
        for &u in &order[..idx] {
            max_used = max_used.max(color[u] + 1);
        }
        let limit = k.min(max_used + 1);
        for c in 0..limit {
            let conflict = order[..idx]
                .iter()
                .any(|&u| color[u] == c && adj[v] >> u & 1 == 1);
            if !conflict {
                color[v] = c;
                if assign(adj, order, k, idx + 1, color) {
                    return true;
                }
            }
        }
        false
    }
    if k == 0 {
        return order.is_empty();
    }
    let mut color = vec![usize::MAX; adj.len()];
    assign(adj, order, k, 0, &mut color)
}

// ---------------------------------------------------------------------------
// Multigraphs
// ---------------------------------------------------------------------------

/// An edge multigraph on `0..n-1`, stored as a multiplicity per unordered
/// pair, each bounded by `k_cap`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiGraph {
    n: usize,
    k_cap: u32,
    w: Vec<u32>,
}

impl MultiGraph {
    /// The zero multigraph on `n` vertices with multiplicity cap `k_cap`.
    pub fn zero(n: usize, k_cap: u32) -> Self {
        MultiGraph {
            n,
            k_cap,
            w: vec![0; binom2(n) as usize],
        }
    }

    /// Build from a flat upper-triangular weight vector in lexicographic
    /// pair order.  Errors if the length is wrong or a weight exceeds `k_cap`.
    pub fn from_weights(n: usize, k_cap: u32, w: Vec<u32>) -> Result<Self> {
        if w.len() != binom2(n) as usize {
            return Err(Error::invalid(format!(
                "weight vector has length {}, expected {}",
                w.len(),
                binom2(n)
            )));
        }
        if let Some(&bad) = w.iter().find(|&&x| x > k_cap) {
            return Err(Error::invalid(format!(
                "multiplicity {bad} exceeds the cap {k_cap}"
            )));
        }
        Ok(MultiGraph { n, k_cap, w })
    }

    /// Build from `(u, v, multiplicity)` triples; unlisted pairs get zero.
    /// Listing the same pair twice is an error.
    pub fn from_pairs(n: usize, k_cap: u32, pairs: &[(usize, usize, u32)]) -> Result<Self> {
        let mut w = vec![0u32; binom2(n) as usize];
        let mut seen = vec![false; w.len()];
        for &(u, v, m) in pairs {
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "pair ({u}, {v}) out of range for n = {n}"
                )));
            }
            let (a, b) = pair(u, v);
            let idx = pair_index(n, a, b);
            if seen[idx] {
                return Err(Error::invalid(format!("pair ({a}, {b}) listed twice")));
            }
            seen[idx] = true;
            w[idx] = m;
        }
        MultiGraph::from_weights(n, k_cap, w)
    }

    /// The multigraph with every pair at multiplicity `value`.
    pub fn uniform(n: usize, k_cap: u32, value: u32) -> Result<Self> {
        MultiGraph::from_weights(n, k_cap, vec![value; binom2(n) as usize])
    }

    /// `mult` copies of a simple graph as a multigraph.
    pub fn from_simple_scaled(g: &SimpleGraph, mult: u32, k_cap: u32) -> Result<Self> {
        let mut w = vec![0u32; binom2(g.n()) as usize];
        for (u, v) in g.edges() {
            w[pair_index(g.n(), u, v)] = mult;
        }
        MultiGraph::from_weights(g.n(), k_cap, w)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The multiplicity cap.
    pub fn k_cap(&self) -> u32 {
        self.k_cap
    }

    /// Multiplicity of the pair `(u, v)`.
    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        let (a, b) = pair(u, v);
        self.w[pair_index(self.n, a, b)]
    }

    /// The flat weight vector in lexicographic pair order.
    pub fn weights(&self) -> &[u32] {
        &self.w
    }

    /// Total edge count, with multiplicity.
    pub fn total(&self) -> u64 {
        self.w.iter().map(|&x| x as u64).sum()
    }

    /// Weighted degree of a vertex.
    pub fn degree(&self, v: usize) -> u64 {
        (0..self.n)
            .filter(|&u| u != v)
            .map(|u| self.multiplicity(u, v) as u64)
            .sum()
    }

    /// Largest pair multiplicity.
    pub fn max_multiplicity(&self) -> u32 {
        self.w.iter().copied().max().unwrap_or(0)
    }

    /// The simple graph of pairs with positive multiplicity.
    pub fn support(&self) -> SimpleGraph {
        let pairs = all_pairs(self.n);
        SimpleGraph::from_edges(
            self.n,
            pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| self.w[i] > 0)
                .map(|(_, &p)| p),
        )
        .expect("support edges are in range by construction")
    }

    /// A copy with one pair set to a new multiplicity.
    pub fn with_multiplicity(&self, u: usize, v: usize, m: u32) -> Result<Self> {
        if m > self.k_cap {
            return Err(Error::invalid(format!(
                "multiplicity {m} exceeds the cap {}",
                self.k_cap
            )));
        }
        let (a, b) = pair(u, v);
        let mut w = self.w.clone();
        w[pair_index(self.n, a, b)] = m;
        Ok(MultiGraph {
            n: self.n,
            k_cap: self.k_cap,
            w,
        })
    }

    /// A copy with the cap raised (never lowered below the current maximum).
    pub fn with_cap(&self, k_cap: u32) -> Result<Self> {
        MultiGraph::from_weights(self.n, k_cap, self.w.clone())
    }
}
