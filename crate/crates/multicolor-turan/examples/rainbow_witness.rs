//! Rainbow detection with certified witnesses.  A copy of the pattern is
//! rainbow when its edge instances can be given pairwise distinct colors;
//! the nested oracle reads a multiplicity map through its level sets, the
//! general oracle matches instances to explicit color classes.
//!
//! Run with: cargo run --example rainbow_witness

use multicolor_turan::colorings::ColoredMultigraph;
use multicolor_turan::graphs::{MultiGraph, SimpleGraph};
use multicolor_turan::io::builtin_pattern;
use multicolor_turan::rainbow::{
    has_rainbow_general, has_rainbow_nested, validate_witness, witness_instance_pairs, HostRepr,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let triangle = builtin_pattern("k3").expect("k3 is a builtin alias");

    // A triangle colored with three distinct colors is rainbow.
    let colors = vec![
        SimpleGraph::from_edges(3, [(0, 1)])?,
        SimpleGraph::from_edges(3, [(0, 2)])?,
        SimpleGraph::from_edges(3, [(1, 2)])?,
    ];
    let host = ColoredMultigraph::new(3, colors)?;
    let witness = has_rainbow_general(&host, &triangle).expect("three colors suffice");
    validate_witness(HostRepr::Colored(&host), &triangle, &witness)?;
    println!("instance order: {:?}", witness_instance_pairs(&triangle));
    println!(
        "general oracle: embedding {:?} uses colors {:?}",
        witness.embedding, witness.colors,
    );

    // The same triangle squeezed into two colors cannot be rainbow: three
    // instances would need three distinct colors.
    let colors = vec![
        SimpleGraph::from_edges(3, [(0, 1), (1, 2)])?,
        SimpleGraph::from_edges(3, [(0, 2)])?,
    ];
    let host = ColoredMultigraph::new(3, colors)?;
    assert!(has_rainbow_general(&host, &triangle).is_none());
    println!("two colors on a triangle: no witness, as it must be");

    // Multiplicity maps are read through their level sets.  Every pair at
    // multiplicity 3 gives each triangle edge three color choices.
    let full = MultiGraph::uniform(4, 3, 3)?;
    let witness = has_rainbow_nested(&full, &triangle).expect("capacities 3,3,3 pass");
    validate_witness(HostRepr::Profile(&full), &triangle, &witness)?;
    println!(
        "nested oracle on the tripled host: embedding {:?}, levels {:?}",
        witness.embedding, witness.colors,
    );

    // At multiplicity 2 the greedy prefix check fails (1, 2 then 3 > 2),
    // so the doubled complete host is rainbow-free — it is the first
    // extremal candidate.
    let doubled = MultiGraph::uniform(4, 3, 2)?;
    assert!(has_rainbow_nested(&doubled, &triangle).is_none());
    println!("doubled host: rainbow-free, matching the candidate construction");
    Ok(())
}
