//! Exact-arithmetic audits of the inequalities behind the large-n argument:
//! two families of availability lower bounds swept over all parameters up
//! to r = 100, and the tail-sum bound on sorted multiplicity vectors.
//! Margins are exact rationals; a negative one anywhere is a violation.
//!
//! Run with: cargo run --example audit_sweep

use multicolor_turan::audit::{
    check_final_availability_bounds, check_step_availability_bounds, check_tail_sum_bounds,
};
use multicolor_turan::io::builtin_pattern;
use multicolor_turan::pattern::PatternMultigraph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, report) in [
        ("per-step", check_step_availability_bounds(100)?),
        ("final-step", check_final_availability_bounds(100)?),
    ] {
        let worst = report.worst_margin.as_ref().expect("sweeps are non-empty");
        println!(
            "{name} availability: {} cases, violations {}, worst margin {} at r={}, l={}",
            report.cases_checked,
            report.violations.len(),
            worst.margin_at_base,
            worst.r,
            worst.ell,
        );
        assert!(report.pass());
    }

    // Tail-sum bound on the complete pattern with five vertices.
    let k5 = builtin_pattern("k5").expect("k5 is a builtin alias");
    let report = check_tail_sum_bounds(&k5)?;
    println!("tail sums for k5 (h = {}):", report.h);
    for row in &report.rows {
        println!(
            "  j={}: sum {} <= {} (margin {}, holds {})",
            row.j, row.tail_sum, row.bound, row.margin, row.holds,
        );
    }
    assert!(report.pass());

    // The same bound on a lopsided multiplicity vector.
    let mut pairs = Vec::new();
    for u in 0..5usize {
        for v in (u + 1)..5 {
            pairs.push((u, v, if u == 0 { 3 } else { 1 }));
        }
    }
    let lopsided = PatternMultigraph::new(5, &pairs)?;
    let report = check_tail_sum_bounds(&lopsided)?;
    println!(
        "lopsided pattern (h = {}): all rows hold = {}",
        report.h,
        report.pass(),
    );
    Ok(())
}
