//! Gadget graphs: a clique pair joined by constrained cross edges, with
//! certified caps on the number of cliques meeting the designated edges.

use cliquanta::{cliques, families, verify};
use num::BigUint;

fn main() -> cliquanta::Result<()> {
    // t = 0 form: K_{2p} joined to K_q, every vertex meeting at most p
    // cross edges; no single cross edge lies in more than 2^p cliques
    let (p, q) = (2, 2);
    let cap = BigUint::from(1u32) << p;
    let placements = families::gamma_placements_29(p, q)?;
    println!("p = {p}, q = {q}: {} admissible placements, cap 2^{p} = {cap}", placements.len());
    let mut worst = BigUint::from(0u32);
    for spec in &placements {
        let gadget = families::gamma_gadget(spec)?;
        for &e in &gadget.designated {
            let count = cliques::edge_clique_count(&gadget.graph, e)?;
            assert!(count <= cap);
            worst = worst.max(count);
        }
    }
    println!("largest per-edge count observed: {worst}");

    // t >= 1 form: K_{2p} - tK_2 with one designated far-side vertex; the
    // cap tightens to 2^{p-t} + k(K_{p+t+1} - tK_2) - k(K_{p+t} - tK_2)
    for (p, t, qq) in [(2, 1, 2), (3, 1, 2), (3, 2, 2)] {
        let cap = verify::matched_gadget_bound(p, t)?;
        let placements = families::gamma_placements_210(p, t, qq)?;
        let mut worst = BigUint::from(0u32);
        for spec in &placements {
            let gadget = families::gamma_gadget(spec)?;
            let count =
                cliques::edges_union_clique_count(&gadget.graph, &gadget.designated)?;
            assert!(count <= cap);
            worst = worst.max(count);
        }
        println!(
            "p = {p}, t = {t}, q = {qq}: {} placements, cap {cap}, worst {worst}",
            placements.len()
        );
    }

    // the sweeps as certified claims
    let cert = verify::verify_gadget_cap(3, 2)?;
    println!("\ncap sweep: {:?} over {} placements", cert.verdict, cert.classes_examined);
    let cert = verify::verify_matched_gadget_cap(3, 2, 2)?;
    println!("matched-cap sweep: {:?} over {} placements", cert.verdict, cert.classes_examined);
    Ok(())
}
