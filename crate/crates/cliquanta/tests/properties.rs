//! Randomized invariant checks: every property here is an exact identity
//! or inequality that must hold for all graphs, exercised over seeded
//! random instances.

use cliquanta::{bounds, canon, cliques, graph6, Edge, Graph};
use num::{BigRational, One};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Erdos-Renyi graph from a seed; the density is also drawn from the seed.
fn random_graph(seed: u64, n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prob: f64 = rng.gen_range(0.05..0.95);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(prob) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_pairs(n, &pairs).expect("valid pairs")
}

fn random_perm(seed: u64, n: usize) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    perm
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The fast profile agrees with the subset-enumeration oracle.
    #[test]
    fn profile_matches_brute_force(seed in any::<u64>(), n in 1usize..10) {
        let g = random_graph(seed, n);
        let fast = cliques::clique_profile(&g).unwrap();
        let slow = cliques::brute_force_profile(&g).unwrap();
        prop_assert_eq!(fast.counts(), slow.counts());
    }

    /// k(G) = 1 + sum of the vertex clique weights, and that sum equals the
    /// number of nonempty cliques.
    #[test]
    fn weight_sum_identity(seed in any::<u64>(), n in 1usize..12) {
        let g = random_graph(seed, n);
        let profile = cliques::clique_profile(&g).unwrap();
        let sum: BigRational = cliques::weight_map(&g).unwrap().into_iter().sum();
        prop_assert!(sum.is_integer());
        prop_assert_eq!(
            BigRational::from_integer(profile.total().into()),
            sum + BigRational::one()
        );
    }

    /// For every edge e, k(G) = k(G - e) + k(e; G).
    #[test]
    fn edge_deletion_identity(seed in any::<u64>(), n in 2usize..11) {
        let g = random_graph(seed, n);
        let total = cliques::k_total(&g).unwrap();
        for e in g.edges() {
            let without = cliques::k_total(&g.delete_edge(e).unwrap()).unwrap();
            let through = cliques::edge_clique_count(&g, e).unwrap();
            prop_assert_eq!(&total, &(without + through));
        }
    }

    /// Encoding to graph6 and decoding gives back the same graph.
    #[test]
    fn graph6_roundtrip(seed in any::<u64>(), n in 0usize..30) {
        let g = random_graph(seed, n);
        let decoded = graph6::decode(&graph6::encode(&g).unwrap()).unwrap();
        prop_assert_eq!(g.edges(), decoded.edges());
        prop_assert_eq!(g.n(), decoded.n());
    }

    /// The canonical graph6 string is invariant under relabeling.
    #[test]
    fn canonical_form_is_relabel_invariant(
        seed in any::<u64>(),
        perm_seed in any::<u64>(),
        n in 1usize..9,
    ) {
        let g = random_graph(seed, n);
        let relabeled = g.relabel(&random_perm(perm_seed, n));
        prop_assert_eq!(
            canon::canonical_g6(&g).unwrap(),
            canon::canonical_g6(&relabeled).unwrap()
        );
    }

    /// Cliques of a disjoint union live entirely in one side, so the totals
    /// add up minus one shared empty clique.
    #[test]
    fn disjoint_union_totals(sa in any::<u64>(), sb in any::<u64>(),
                             na in 1usize..8, nb in 1usize..8) {
        let a = random_graph(sa, na);
        let b = random_graph(sb, nb);
        let lhs = cliques::k_total(&a.disjoint_union(&b)).unwrap();
        let rhs = cliques::k_total(&a).unwrap() + cliques::k_total(&b).unwrap()
            - num::BigUint::one();
        prop_assert_eq!(lhs, rhs);
    }

    /// No graph beats the colex graph of the same order and size in any
    /// clique-size slot.
    #[test]
    fn colex_bound_holds(seed in any::<u64>(), n in 1usize..9) {
        let g = random_graph(seed, n);
        let profile = cliques::clique_profile(&g).unwrap();
        for t in 2..=g.n() {
            let cap = bounds::kruskal_katona_bound(g.n(), g.m(), t).unwrap();
            prop_assert!(profile.k(t) <= cap);
        }
    }

    /// Each vertex weight is capped by the closed form for its degree, with
    /// equality exactly when the neighborhood is a clique.
    #[test]
    fn vertex_weight_cap(seed in any::<u64>(), n in 2usize..11) {
        let g = random_graph(seed, n);
        for u in 0..g.n() {
            if g.degree(u) == 0 {
                continue;
            }
            let w = cliques::vertex_weight(&g, u).unwrap();
            let cap = bounds::vertex_weight_cap(g.degree(u)).unwrap();
            prop_assert!(w <= cap);
            let nbhd = g.neighbors(u);
            let complete = nbhd
                .iter()
                .all(|&a| nbhd.iter().all(|&b| a == b || g.has_edge(a, b)));
            prop_assert_eq!(w == cap, complete);
        }
    }

    /// Deleting several edges at once counts cliques meeting their union.
    #[test]
    fn union_count_is_inclusion_of_deletion(seed in any::<u64>(), n in 2usize..10) {
        let g = random_graph(seed, n);
        let edges = g.edges();
        if edges.len() < 2 {
            return Ok(());
        }
        let picked: Vec<Edge> = edges.iter().step_by(2).copied().collect();
        let meeting = cliques::edges_union_clique_count(&g, &picked).unwrap();
        let remaining = cliques::k_total(&g.delete_edges(&picked).unwrap()).unwrap();
        prop_assert_eq!(cliques::k_total(&g).unwrap(), meeting + remaining);
    }
}
