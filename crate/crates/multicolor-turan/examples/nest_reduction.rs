//! Nesting: any simple k-coloring can be rewritten so its color classes form
//! a chain, by re-slicing the multiplicity map into level sets.  The rewrite
//! keeps the edge multiset and never creates a rainbow copy, which is why
//! the extremal search may restrict itself to nested colorings.
//!
//! Run with: cargo run --example nest_reduction

use multicolor_turan::colorings::{nest, ColoredMultigraph};
use multicolor_turan::graphs::SimpleGraph;
use multicolor_turan::io::builtin_pattern;
use multicolor_turan::rainbow::{contains_rainbow_general, has_rainbow_general};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A scattered 3-coloring of a 4-vertex host: classes overlap and none
    // contains another.
    let colors = vec![
        SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)])?,
        SimpleGraph::from_edges(4, [(0, 1), (0, 2)])?,
        SimpleGraph::from_edges(4, [(1, 2), (0, 3)])?,
    ];
    let host = ColoredMultigraph::new(4, colors)?;
    println!("input class sizes:  {:?}", host.color_sizes());

    let nested = nest(&host);
    println!("nested class sizes: {:?}", nested.colored().color_sizes());
    assert_eq!(
        host.multiplicity_profile(),
        nested.colored().multiplicity_profile(),
        "nesting re-slices the same edge multiset",
    );

    // Safety: a rainbow in the nested form forces one in the original.
    let triangle = builtin_pattern("k3").expect("k3 is a builtin alias");
    let before = contains_rainbow_general(&host, &triangle);
    let after = contains_rainbow_general(nested.colored(), &triangle);
    println!("rainbow triangle before nesting: {before}, after: {after}");
    assert!(!after || before, "nesting must never create a rainbow");

    if let Some(w) = has_rainbow_general(&host, &triangle) {
        println!(
            "original witness: embedding {:?}, colors {:?}",
            w.embedding, w.colors,
        );
    }
    Ok(())
}
