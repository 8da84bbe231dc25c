//! Edge-local clique counts: how many cliques contain a given edge, how the
//! total splits when an edge is deleted, and counts over unions of edges.

use cliquanta::{cliques, decompose, families, Edge};

fn main() -> cliquanta::Result<()> {
    let g = families::figure1_graph();
    let total = cliques::k_total(&g)?;
    println!("k(G) = {total}");

    println!("\nper-edge counts and the deletion identity k(G) = k(G-e) + k(e;G):");
    for e in g.edges() {
        let (without, through) = decompose::count_via_edge_deletion(&g, e)?;
        println!("  e = {e}: k(e;G) = {through}, k(G-e) = {without}");
        assert_eq!(total, without.clone() + through);
    }

    let picked = [Edge::new(2, 4)?, Edge::new(3, 4)?];
    let meeting = cliques::edges_union_clique_count(&g, &picked)?;
    println!("\ncliques meeting {{2,4}} or {{3,4}}: {meeting}");
    let rest = cliques::k_total(&g.delete_edges(&picked)?)?;
    println!("cliques avoiding both:          {rest}");
    assert_eq!(total, meeting + rest);
    println!("the two add up to k(G) = {total}");
    Ok(())
}
