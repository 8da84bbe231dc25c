//! Full clique census of one small graph: the profile by clique size, the
//! per-vertex clique weights, and the identity tying the two together.

use cliquanta::{cliques, families, report};
use num::BigRational;

fn main() -> cliquanta::Result<()> {
    let g = families::figure1_graph();
    println!("graph: n = {}, m = {}", g.n(), g.m());
    for u in 0..g.n() {
        println!("  vertex {u}: neighbors {:?}", g.neighbors(u));
    }

    let profile = cliques::clique_profile(&g)?;
    println!("\nclique profile (index = clique size, empty set included):");
    for (size, count) in profile.counts().iter().enumerate() {
        println!("  k_{size} = {count}");
    }
    println!("  omega = {}", profile.omega());
    println!("  total = {}", profile.total());

    println!("\nper-vertex clique weights w(u) = sum_i k_i(u)/i:");
    let weights = cliques::weight_map(&g)?;
    for (u, w) in weights.iter().enumerate() {
        println!("  w({u}) = {}", report::rational_string(w));
    }

    let sum: BigRational = weights.into_iter().sum();
    println!(
        "\nidentity check: 1 + sum of weights = 1 + {} = {} = total",
        report::rational_string(&sum),
        profile.total()
    );
    Ok(())
}
