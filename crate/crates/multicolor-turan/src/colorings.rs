//! Simple k-colorings of multigraphs and the nesting reduction.
//!
//! A simply k-colored multigraph is an ordered list of k simple graphs
//! ("colors") on a common vertex set; the multiplicity of a pair is the
//! number of colors containing it.  A coloring is nested when its colors can
//! be ordered into an inclusion chain.  Nesting a coloring replaces its
//! colors by the level sets of its multiplicity map; this preserves the edge
//! multiset and never destroys multicolored-freeness, which is why exhaustive
//! searches may restrict to multiplicity maps.
//!
//! Colors are stored sparsely as edge sets at every size this crate handles.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{all_pairs, MultiGraph, SimpleGraph};

/// A simply k-colored multigraph: an ordered list of simple graphs on `n`
/// vertices.  Empty colors are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredMultigraph {
    n: usize,
    colors: Vec<SimpleGraph>,
}

impl ColoredMultigraph {
    /// Build from a color list; every color must live on `n` vertices.
    pub fn new(n: usize, colors: Vec<SimpleGraph>) -> Result<Self> {
        for (i, c) in colors.iter().enumerate() {
            if c.n() != n {
                return Err(Error::invalid(format!(
                    "color {i} has {} vertices, expected {n}",
                    c.n()
                )));
            }
        }
        Ok(ColoredMultigraph { n, colors })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of colors.
    pub fn k(&self) -> usize {
        self.colors.len()
    }

    /// The colors in order.
    pub fn colors(&self) -> &[SimpleGraph] {
        &self.colors
    }

    /// Total edge count over all colors (the multigraph's edge multiset size).
    pub fn total_edges(&self) -> u64 {
        self.colors.iter().map(|c| c.edge_count()).sum()
    }

    /// Edge counts per color.
    pub fn color_sizes(&self) -> Vec<u64> {
        self.colors.iter().map(|c| c.edge_count()).collect()
    }

    /// The colors whose edge sets contain the pair `(u, v)`, ascending.
    pub fn colors_containing(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.k())
            .filter(|&i| self.colors[i].has_edge(u, v))
            .collect()
    }

    /// The multiplicity map of the coloring; the cap is the color count.
    pub fn multiplicity_profile(&self) -> MultiGraph {
        let k = self.k() as u32;
        let mut w = vec![0u32; crate::graphs::binom2(self.n) as usize];
        for color in &self.colors {
            for (u, v) in color.edges() {
                w[crate::graphs::pair_index(self.n, u, v)] += 1;
            }
        }
        MultiGraph::from_weights(self.n, k, w).expect("profile multiplicities are bounded by k")
    }

    /// The canonical presentation with colors sorted by descending size
    /// (ties broken by edge-set order), so colorings differing only by a
    /// permutation of equal colors or empty colors compare equal.
    pub fn sorted_by_size(&self) -> ColoredMultigraph {
        let mut colors = self.colors.clone();
        colors.sort_by(|a, b| b.edge_count().cmp(&a.edge_count()).then_with(|| a.cmp(b)));
        ColoredMultigraph {
            n: self.n,
            colors,
        }
    }
}

/// A coloring whose colors form an inclusion chain, together with the
/// witnessing order: `colors[chain[0]] ⊆ colors[chain[1]] ⊆ ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestedColoredMultigraph {
    colored: ColoredMultigraph,
    chain: Vec<usize>,
}

impl NestedColoredMultigraph {
    /// Wrap a coloring known to be nested, verifying the chain witness.
    pub fn new(colored: ColoredMultigraph, chain: Vec<usize>) -> Result<Self> {
        let k = colored.k();
        let mut seen = vec![false; k];
        for &i in &chain {
            if i >= k || seen[i] {
                return Err(Error::contract("chain is not a permutation of colors"));
            }
            seen[i] = true;
        }
        if chain.len() != k {
            return Err(Error::contract("chain is not a permutation of colors"));
        }
        for win in chain.windows(2) {
            let (small, large) = (&colored.colors()[win[0]], &colored.colors()[win[1]]);
            for (u, v) in small.edges() {
                if !large.has_edge(u, v) {
                    return Err(Error::contract(format!(
                        "color {} is not contained in color {}",
                        win[0], win[1]
                    )));
                }
            }
        }
        Ok(NestedColoredMultigraph { colored, chain })
    }

    /// The underlying coloring.
    pub fn colored(&self) -> &ColoredMultigraph {
        &self.colored
    }

    /// The inclusion order witness.
    pub fn chain(&self) -> &[usize] {
        &self.chain
    }

    /// Unwrap.
    pub fn into_colored(self) -> ColoredMultigraph {
        self.colored
    }
}

/// Nest a coloring: replace its colors by the level sets of its multiplicity
/// map.  Level `i` (0-based) holds the pairs of multiplicity at least `i+1`,
/// so levels weakly shrink and the color multiset forms a chain.  The edge
/// multiset (hence the total count and the profile) is preserved.
pub fn nest(g: &ColoredMultigraph) -> NestedColoredMultigraph {
    let profile = g.multiplicity_profile();
    let nested = from_multiplicity(&profile, g.k() as u32)
        .expect("profile multiplicities are bounded by the color count");
    debug_assert_eq!(nested.colored().total_edges(), g.total_edges());
    nested
}

/// The unique nested coloring with `k` colors realizing a multiplicity map:
/// color `i` is the level set of pairs with multiplicity at least `i+1`.
/// Errors if some multiplicity exceeds `k`.
pub fn from_multiplicity(w: &MultiGraph, k: u32) -> Result<NestedColoredMultigraph> {
    if w.max_multiplicity() > k {
        return Err(Error::invalid(format!(
            "multiplicity {} exceeds the color count {k}",
            w.max_multiplicity()
        )));
    }
    let n = w.n();
    let pairs = all_pairs(n);
    let mut colors = Vec::with_capacity(k as usize);
    for level in 1..=k {
        let edges = pairs
            .iter()
            .copied()
            .filter(|&(u, v)| w.multiplicity(u, v) >= level);
        colors.push(SimpleGraph::from_edges(n, edges)?);
    }
    let colored = ColoredMultigraph::new(n, colors)?;
    // Levels shrink as the threshold rises, so the reversed order is a chain.
    let chain: Vec<usize> = (0..k as usize).rev().collect();
    NestedColoredMultigraph::new(colored, chain)
}

/// First extremal candidate: `h - 1` copies of the complete graph plus
/// `k - (h - 1)` empty colors.  Requires `h >= 1` and `k >= h - 1`.
pub fn candidate_complete(n: usize, h: u64, k: u32) -> Result<ColoredMultigraph> {
    if h == 0 {
        return Err(Error::invalid("candidate needs h >= 1"));
    }
    if (k as u64) < h - 1 {
        return Err(Error::invalid(format!(
            "candidate needs k >= h - 1, got k = {k}, h = {h}"
        )));
    }
    let mut colors = Vec::with_capacity(k as usize);
    for _ in 0..(h - 1) {
        colors.push(SimpleGraph::complete(n));
    }
    while colors.len() < k as usize {
        colors.push(SimpleGraph::empty(n));
    }
    ColoredMultigraph::new(n, colors)
}

/// Second extremal candidate: `k` identical copies of the Turán graph
/// `T_{r-1}(n)`.  Requires `3 <= r` and `r - 1 <= n`.
pub fn candidate_turan(n: usize, r: usize, k: u32) -> Result<ColoredMultigraph> {
    if r < 3 {
        return Err(Error::invalid(format!("candidate needs r >= 3, got {r}")));
    }
    if r - 1 > n {
        return Err(Error::invalid(format!(
            "candidate needs r - 1 <= n, got r = {r}, n = {n}"
        )));
    }
    let t = crate::graphs::turan_graph(n, r - 1)?;
    ColoredMultigraph::new(n, vec![t; k as usize])
}
