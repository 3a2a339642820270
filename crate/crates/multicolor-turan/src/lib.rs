//! Exact combinatorics for multicolor Turán numbers.
//!
//! A multigraph is simply k-colored when its edge multiset is split into k
//! simple graphs.  A pattern occurs multicolored when some embedding of it
//! uses pairwise distinct colors on its edge instances.  This crate computes
//! the largest edge count of a simply k-colored multigraph on n vertices
//! avoiding a multicolored copy of a pattern, along with the machinery that
//! surrounds that quantity: extremal candidate constructions, rainbow
//! detection oracles, the nesting reduction, color-critical pattern analysis,
//! graph packing theorems, friendliness certificates for partite hosts, and
//! exact-arithmetic audits of the supporting inequalities.
//!
//! Entry points:
//! - [`solver::exk_branch_and_bound`] / [`solver::exk_bruteforce`] compute
//!   the extremal value with certified optima.
//! - [`rainbow`] holds the multicolored-copy oracles (general matching-based
//!   and the fast nested one).
//! - [`colorings`] builds colorings, nests them, and constructs the two
//!   extremal candidates.
//! - [`pattern`] validates color-critical patterns and enumerates critical
//!   colorings.
//! - [`cli`] backs the `mct` binary; the `examples/` directory shows one
//!   runnable scenario per capability.

#![forbid(unsafe_code)]

pub mod audit;
pub mod cache;
pub mod canon;
pub mod cli;
pub mod colorings;
pub mod error;
pub mod friendliness;
pub mod graphs;
pub mod io;
pub mod packing;
pub mod pattern;
pub mod rainbow;
pub mod rational;
pub mod solver;

pub use error::{Error, Result};
