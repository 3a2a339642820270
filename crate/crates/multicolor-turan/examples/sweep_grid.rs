//! A grid sweep over (n, k) for the triangle, tabulating each exact value
//! against the two candidate formulas.  The crossover between the formulas
//! sits at k = (chi-1)(h-1)/(chi-2) = 4: below it the k-fold partite host
//! is predicted, at and above it the (h-1)-fold complete host — and the
//! classifications make the switch visible already at this scale.
//!
//! Run with: cargo run --example sweep_grid

use multicolor_turan::cli::{in_cap_band, regime_boundary, regime_label};
use multicolor_turan::io::builtin_pattern;
use multicolor_turan::solver::{exk_branch_and_bound, ExkInstance, SolverOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let triangle = builtin_pattern("k3").expect("k3 is a builtin alias");
    let chi = triangle.chi();
    let h = triangle.h();
    println!(
        "regime boundary for the triangle: k = {}",
        regime_boundary(chi, h),
    );
    println!("n  k  value  cand_i  cand_ii  classification   regime  cap_band");

    let options = SolverOptions::default();
    for n in 3..=5 {
        for k in 2..=6 {
            let inst = ExkInstance::new(n, k, triangle.clone())?;
            let result = exk_branch_and_bound(&inst, &options)?;
            println!(
                "{n}  {k}  {:5}  {:6}  {:7}  {:15}  {:6}  {}",
                result.value,
                result
                    .candidate_i
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| "-".to_string()),
                result.candidate_ii,
                result.classification.label(),
                regime_label(chi, h, k),
                in_cap_band(chi, h, k),
            );
        }
    }
    Ok(())
}
