//! Graph packing: a bijection of the shared vertex set sending every edge of
//! one graph to a non-edge of the other.  Two classical sufficient
//! conditions — the product bound e(G)e(H) < C(n,2) and the sum bound
//! 2(e(G)+e(H)) <= 3(n-1) — are checked here by explicit search.
//!
//! Run with: cargo run --example packing_theorems

use multicolor_turan::graphs::SimpleGraph;
use multicolor_turan::packing::{
    find_packing, pad, product_bound_applies, sum_bound_applies, verify_packing,
    verify_packing_theorems,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A perfect matching and a Hamilton path on four vertices pack.
    let matching = SimpleGraph::from_edges(4, [(0, 1), (2, 3)])?;
    let path = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)])?;
    println!(
        "matching vs path: product bound {}, sum bound {}",
        product_bound_applies(&matching, &path),
        sum_bound_applies(&matching, &path),
    );
    let packing = find_packing(&matching, &path).expect("2 x 3 edges pack on 4 vertices");
    verify_packing(&matching, &path, &packing)?;
    println!("  packing sigma = {:?}", packing.sigma);

    // Two triangles on three vertices cannot pack: there is no room.
    let triangle = SimpleGraph::from_edges(3, [(0, 1), (0, 2), (1, 2)])?;
    assert!(find_packing(&triangle, &triangle).is_none());
    println!("triangle vs triangle on 3 vertices: no packing, as it must be");

    // Graphs of different orders are padded with isolated vertices first.
    let edge = SimpleGraph::from_edges(2, [(0, 1)])?;
    let padded = pad(&edge, 4)?;
    let packing = find_packing(&padded, &path).expect("one edge packs into a path complement");
    verify_packing(&padded, &path, &packing)?;
    println!("padded edge vs path: sigma = {:?}", packing.sigma);

    // Sweep both guarantees: exhaustive over all pairs of isomorphism
    // classes up to five vertices, then random in-hypothesis pairs on six.
    let report = verify_packing_theorems(6, 200, 2026);
    println!(
        "guarantee sweep: {} pairs ({} product, {} sum), failures {}",
        report.pairs_checked,
        report.product_cases,
        report.sum_cases,
        report.failures.len(),
    );
    assert!(report.pass(), "both packing guarantees must hold");
    Ok(())
}
