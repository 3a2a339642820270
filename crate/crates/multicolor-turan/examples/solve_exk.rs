//! Exact maximization on small hosts: for each (n, k) the search returns the
//! largest edge total of an n-vertex multigraph that still admits a
//! rainbow-free simple k-coloring, every optimal multiplicity map, and how
//! the optimum relates to the two closed-form candidates.
//!
//! Run with: cargo run --example solve_exk

use multicolor_turan::io::builtin_pattern;
use multicolor_turan::solver::{exk_branch_and_bound, exk_bruteforce, ExkInstance, SolverOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let triangle = builtin_pattern("k3").expect("k3 is a builtin alias");
    let options = SolverOptions::default();

    println!("n  k  value  classification   optima  work");
    for (n, k) in [(4, 3), (4, 4), (5, 3), (5, 4), (6, 3)] {
        let inst = ExkInstance::new(n, k, triangle.clone())?;
        let result = exk_branch_and_bound(&inst, &options)?;
        println!(
            "{n}  {k}  {:5}  {:15}  {:6}  {}",
            result.value,
            result.classification.label(),
            result.optima.len(),
            result.work,
        );
    }

    // The exhaustive odometer confirms the branch-and-bound value on a cell
    // small enough to enumerate outright.
    let inst = ExkInstance::new(4, 3, triangle.clone())?;
    let fast = exk_branch_and_bound(&inst, &options)?;
    let slow = exk_bruteforce(&inst, &options)?;
    assert_eq!(fast.value, slow.value);
    assert_eq!(fast.optima, slow.optima);
    println!(
        "\nodometer cross-check at (n=4, k=3): both engines report {} \
         with {} optima",
        slow.value,
        slow.optima.len(),
    );

    // Symmetry pruning cuts the tree without touching the answer.
    let pruned = exk_branch_and_bound(
        &inst,
        &SolverOptions {
            symmetry: true,
            ..SolverOptions::default()
        },
    )?;
    assert_eq!(pruned.value, fast.value);
    assert_eq!(pruned.optima, fast.optima);
    println!(
        "symmetry pruning: {} nodes instead of {}, same optima",
        pruned.work, fast.work,
    );
    Ok(())
}
