//! The certified-verification workflow: run each desk-scale sweep, print
//! one summary line per claim, and show a full certificate.

use cliquanta::{families, verify};

fn main() -> cliquanta::Result<()> {
    let fig = families::figure1_graph();
    let runs = vec![
        ("counting identities", verify::verify_identities(&fig)?),
        ("colex clique caps", verify::verify_kruskal_katona(6)?),
        ("max clique count at degree <= 2", verify::verify_extremal(7, 2)?),
        ("independent sets of 2-regular graphs", verify::verify_kahn_zhao(8, 2)?),
        ("gadget cap", verify::verify_gadget_cap(2, 2)?),
        ("matched gadget cap", verify::verify_matched_gadget_cap(3, 2, 1)?),
        ("weight-gap positivity", verify::verify_h_positivity(12)?),
    ];
    println!("{:<38} {:<10} {:>8} {:>9}", "claim", "verdict", "classes", "time(ms)");
    for (name, cert) in &runs {
        println!(
            "{name:<38} {:<10} {:>8} {:>9}",
            format!("{:?}", cert.verdict),
            cert.classes_examined,
            cert.runtime_ms
        );
        assert!(cert.is_verified());
    }

    println!("\na certificate in full:");
    let cert = verify::verify_split(&fig, &[0, 1, 2, 3], &[2, 3, 4, 5])?;
    println!("{}", serde_json::to_string_pretty(&cert).expect("serializable"));

    // a deliberately bad hypothesis is refuted, not an error: the witness
    // names a maximal clique crossing the two sides
    let bad = verify::verify_split(&families::complete(3), &[0, 1], &[1, 2])?;
    assert!(!bad.is_verified());
    println!("\nrefuted split witness: {:?}", bad.witnesses);
    Ok(())
}
