//! Named graph families and their serialization: graph6 strings, edge
//! lists, and the closed forms for clique counts of colex graphs.

use cliquanta::{bounds, cliques, families, graph, graph6, report};
use num::BigUint;

fn main() -> cliquanta::Result<()> {
    println!("family            graph6     k(G)");
    let rows: Vec<(&str, cliquanta::Graph)> = vec![
        ("K_5", families::complete(5)),
        ("C_6", families::cycle(6)?),
        ("P_4", families::path(4)),
        ("K_{3,3}", families::complete_bipartite(3, 3)),
        ("K_6 - 2K_2", families::complete_minus_matching(6, 2)?),
    ];
    for (name, g) in &rows {
        println!(
            "{name:<17} {:<10} {}",
            graph6::encode(g)?,
            cliques::k_total(g)?
        );
    }

    // a graph survives the round trip through both formats
    let g = families::complete_bipartite(3, 3);
    let text = graph::to_edge_list(&g);
    assert_eq!(graph::from_edge_list(&text)?.edges(), g.edges());
    assert_eq!(graph6::decode(&graph6::encode(&g)?)?.edges(), g.edges());
    println!("\nedge-list form of K_{{3,3}}:\n{}", text.trim_end());

    // colex graphs: first m pairs in colexicographic order; when
    // m = C(r,2) + p + 1 the clique count has the closed form
    // 2^r + 2^{p+2} - 2^{p+1} on r+1 vertices
    println!("\ncolex clique counts vs. the closed form:");
    for r in 3..=7 {
        for p in 0..r - 1 {
            let m = r * (r - 1) / 2 + p + 1;
            let spec = families::ColexSpec::new(r + 1, m)?;
            let total = cliques::k_total(&families::colex_graph(&spec))?;
            let closed =
                BigUint::from(1u32) << r | (BigUint::from(1u32) << (p + 1));
            assert_eq!(total, closed);
            let w = bounds::colex_weight_formula(r, p);
            println!(
                "  C({:>2},{:>2}): k = {total:>4}, max vertex weight {}",
                r + 1,
                m,
                report::rational_string(&w)
            );
        }
    }
    Ok(())
}
