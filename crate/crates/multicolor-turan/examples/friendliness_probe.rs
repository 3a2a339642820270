//! Friendliness: a partite colored host is friendly toward a pattern when
//! every sufficiently heavy one-vertex attachment creates a rainbow copy.
//! Monotonicity lets the check run over the minimal attachment frontier
//! only; a failing attachment is returned and independently revalidated.
//!
//! Run with: cargo run --example friendliness_probe

use multicolor_turan::friendliness::{is_h_friendly, kplus_friendly_probe, PartiteHost};
use multicolor_turan::io::builtin_pattern;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let triangle = builtin_pattern("k3").expect("k3 is a builtin alias");

    // Two singleton classes joined by a quadrupled pair, four colors: every
    // minimal attachment (one vertex adding 4 cross edges) forces a rainbow
    // triangle, so the host is friendly.
    let heavy = PartiteHost::complete(2, 1, 4, 4)?;
    let report = is_h_friendly(&heavy, &triangle)?;
    println!(
        "quadrupled pair, k=4: friendly = {}, {} minimal attachments checked",
        report.friendly, report.attachments_checked,
    );
    assert!(report.friendly);

    // The same shape with a single cross edge is not friendly; the report
    // carries the first failing attachment in lexicographic order.
    let light = PartiteHost::complete(2, 1, 4, 1)?;
    let report = is_h_friendly(&light, &triangle)?;
    let counterexample = report.counterexample.expect("a single edge cannot force rainbows");
    println!(
        "single pair, k=4: friendly = {}, counterexample attachment {:?}",
        report.friendly, counterexample.a,
    );

    // Without a host in hand, probe the k-fold surrogate: the complete
    // balanced partite host with every cross pair at min(h, k).
    let probe = kplus_friendly_probe(&triangle, 4, None)?;
    println!(
        "surrogate probe for the triangle at k=4: t = {}, multiplicity = {}, evidence {:?}",
        probe.t, probe.multiplicity, probe.evidence,
    );

    let pentagon = builtin_pattern("c5").expect("c5 is a builtin alias");
    let probe = kplus_friendly_probe(&pentagon, 8, None)?;
    println!(
        "surrogate probe for the five-cycle at k=8: t = {}, multiplicity = {}, evidence {:?}",
        probe.t, probe.multiplicity, probe.evidence,
    );
    Ok(())
}
