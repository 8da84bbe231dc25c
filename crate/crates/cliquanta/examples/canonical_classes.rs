//! Isomorph-free enumeration and canonical forms: list all classes of a
//! given order under a degree cap, with automorphism groups and orbits.

use cliquanta::{canon, cliques, enumerate, families};
use std::collections::BTreeMap;

fn main() -> cliquanta::Result<()> {
    // canonical labeling is a complete isomorphism invariant
    let c5 = families::cycle(5)?;
    let relabeled = c5.relabel(&[3, 1, 4, 0, 2]);
    let form = canon::canonical_form(&c5)?;
    assert_eq!(form.graph6, canon::canonical_form(&relabeled)?.graph6);
    println!(
        "C_5: canonical {}, |Aut| = {}, orbits {:?}",
        form.graph6, form.automorphism_group_size, form.orbits
    );

    // every 4-vertex class, with its clique total
    println!("\nall graphs on 4 vertices:");
    for g in enumerate::enumerate_graphs(4, 3)? {
        let form = canon::canonical_form(&g)?;
        println!(
            "  {:<8} m = {}, k = {:>2}, |Aut| = {}",
            form.graph6,
            g.m(),
            cliques::k_total(&g)?,
            form.automorphism_group_size
        );
    }

    // class counts by order under a max-degree-3 cap
    let mut table = BTreeMap::new();
    for n in 1..=8 {
        table.insert(n, enumerate::enumerate_graphs(n, 3)?.len());
    }
    println!("\nclasses with max degree <= 3: {table:?}");
    Ok(())
}
