//! Independent-set counts of regular graphs against the occupancy bound
//! i(G)^{2d} <= (2^{d+1} - 1)^n, compared cross-multiplied so all
//! arithmetic stays exact. Tightness characterizes unions of K_{d,d}.

use cliquanta::{bounds, canon, enumerate, families, verify};

fn main() -> cliquanta::Result<()> {
    let kdd = families::complete_bipartite(3, 3);
    let report = bounds::kahn_zhao_check(&kdd)?;
    println!(
        "K_{{3,3}}: i(G) = {}, bound holds = {}, tight = {}",
        bounds::independence_count(&kdd)?,
        report.holds(),
        report.tight
    );

    println!("\nall 3-regular classes on 8 vertices:");
    for g in enumerate::enumerate_regular(8, 3)? {
        let report = bounds::kahn_zhao_check(&g)?;
        assert!(report.holds());
        println!(
            "  {:<12} i(G) = {:>3}, slack = {}{}",
            canon::canonical_g6(&g)?,
            bounds::independence_count(&g)?,
            report.slack,
            if report.tight { "  <- tight" } else { "" }
        );
    }

    // the full sweep: only disjoint unions of K_{d,d} are tight
    for (n, d) in [(6, 2), (8, 2), (8, 3)] {
        let cert = verify::verify_kahn_zhao(n, d)?;
        assert!(cert.is_verified());
        println!(
            "\nn = {n}, d = {d}: {} classes, equality cases {:?}",
            cert.classes_examined, cert.equality_cases
        );
    }
    Ok(())
}
