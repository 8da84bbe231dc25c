//! Split and edge-deletion counting identities, and a divide-and-conquer
//! counter driven by clique separators.
//!
//! A split (G1, G2, H) is valid when no clique of the parent uses edges
//! exclusive to both sides; then k(G) = k(G1) + k(G2) - k(H) and the same
//! recombination holds for the weight of any shared vertex.

use crate::cliques;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, LabeledGraph};
use num::bigint::BigUint;
use num::rational::BigRational;
use serde::Serialize;
use std::collections::BTreeSet;

/// Validated split of a parent graph into two labeled parts with
/// intersection `h`.
#[derive(Clone, Debug)]
pub struct SplitWitness {
    pub parent: Graph,
    pub g1: LabeledGraph,
    pub g2: LabeledGraph,
    pub h: LabeledGraph,
}

/// Validates the split of `g` into the induced subgraphs on `a` and `b`.
/// `a` and `b` must cover the vertex set; every clique of `g` must lie
/// within one side.
pub fn validate_split(g: &Graph, a: &[usize], b: &[usize]) -> Result<SplitWitness> {
    let g1 = LabeledGraph::induced_labeled(g, a)?;
    let g2 = LabeledGraph::induced_labeled(g, b)?;
    validate_split_parts(g, g1, g2)
}

/// Validates a split given explicit (possibly non-induced) parts. The part
/// edge sets must be subgraphs of `g` and union to `E(g)`; `h` is their
/// intersection. Rejection carries one offending clique.
pub fn validate_split_parts(g: &Graph, g1: LabeledGraph, g2: LabeledGraph) -> Result<SplitWitness> {
    let mut covered = vec![false; g.n()];
    for part in [&g1, &g2] {
        for &l in &part.labels {
            if l >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: l, n: g.n() });
            }
            covered[l] = true;
        }
        for e in part.graph.edges() {
            let (x, y) = (part.labels[e.u()], part.labels[e.v()]);
            if !g.has_edge(x, y) {
                return Err(Error::InvalidParam(format!(
                    "part edge {{{x},{y}}} is not an edge of the parent"
                )));
            }
        }
    }
    if !covered.iter().all(|&c| c) {
        return Err(Error::InvalidParam(
            "parts must cover the parent vertex set".into(),
        ));
    }
    // union of the part edge sets must be exactly E(g)
    let in_part = |part: &LabeledGraph, x: usize, y: usize| -> bool {
        match (part.position_of(x), part.position_of(y)) {
            (Some(i), Some(j)) => part.graph.has_edge(i, j),
            _ => false,
        }
    };
    for e in g.edges() {
        if !in_part(&g1, e.u(), e.v()) && !in_part(&g2, e.u(), e.v()) {
            return Err(Error::SplitViolation(vec![e.u(), e.v()]));
        }
    }
    // h = g1 intersect g2: shared labels, common edges
    let shared: Vec<usize> = g1
        .labels
        .iter()
        .copied()
        .filter(|&l| g2.position_of(l).is_some())
        .collect();
    let mut h_graph = Graph::empty(shared.len());
    for (i, &x) in shared.iter().enumerate() {
        for (j, &y) in shared.iter().enumerate().skip(i + 1) {
            if in_part(&g1, x, y) && in_part(&g2, x, y) {
                h_graph.insert_edge_unchecked(i, j);
            }
        }
    }
    let h = LabeledGraph::new(h_graph, shared)?;

    // the no-crossing hypothesis: no clique of g contains an edge exclusive
    // to g1 and an edge exclusive to g2. Maximal cliques suffice: any
    // violating clique extends to a violating maximal clique.
    let exclusive = |x: usize, y: usize| -> (bool, bool) {
        let in1 = in_part(&g1, x, y);
        let in2 = in_part(&g2, x, y);
        (in1 && !in2, in2 && !in1)
    };
    for clique in cliques::maximal_cliques(g) {
        let mut has1 = false;
        let mut has2 = false;
        for (i, &x) in clique.iter().enumerate() {
            for &y in &clique[i + 1..] {
                let (e1, e2) = exclusive(x, y);
                has1 |= e1;
                has2 |= e2;
            }
        }
        if has1 && has2 {
            return Err(Error::SplitViolation(clique));
        }
    }
    Ok(SplitWitness {
        parent: g.clone(),
        g1,
        g2,
        h,
    })
}

/// k(G1) + k(G2) - k(H) for a validated split.
pub fn count_via_split(w: &SplitWitness) -> Result<BigUint> {
    let k1 = cliques::k_total(&w.g1.graph)?;
    let k2 = cliques::k_total(&w.g2.graph)?;
    let kh = cliques::k_total(&w.h.graph)?;
    Ok(k1 + k2 - kh)
}

/// w_{G1}(u) + w_{G2}(u) - w_H(u) for a shared vertex named by its parent
/// label.
pub fn weight_via_split(w: &SplitWitness, label: usize) -> Result<BigRational> {
    let pos_h = w.h.position_of(label).ok_or_else(|| {
        Error::InvalidParam(format!("vertex {label} is not shared by both sides"))
    })?;
    let pos1 = w.g1.position_of(label).expect("shared vertex is in g1");
    let pos2 = w.g2.position_of(label).expect("shared vertex is in g2");
    Ok(cliques::vertex_weight(&w.g1.graph, pos1)?
        + cliques::vertex_weight(&w.g2.graph, pos2)?
        - cliques::vertex_weight(&w.h.graph, pos_h)?)
}

/// The pair (k(G-e), k(e;G)); their sum is k(G).
pub fn count_via_edge_deletion(g: &Graph, e: Edge) -> Result<(BigUint, BigUint)> {
    let deleted = g.delete_edge(e)?;
    Ok((
        cliques::k_total(&deleted)?,
        cliques::edge_clique_count(g, e)?,
    ))
}

/// Default cap on the size of separator cliques scanned.
pub const SEPARATOR_SIZE_CAP: usize = 8;

/// Finds a clique whose removal disconnects `g`, minimizing the largest
/// resulting side (component plus separator), ties broken by the smallest
/// sorted vertex set. The empty clique qualifies when `g` is disconnected.
pub fn find_clique_separator(g: &Graph) -> Option<(Vec<usize>, Vec<Vec<usize>>)> {
    find_clique_separator_capped(g, SEPARATOR_SIZE_CAP)
}

pub fn find_clique_separator_capped(
    g: &Graph,
    size_cap: usize,
) -> Option<(Vec<usize>, Vec<Vec<usize>>)> {
    let mut candidates: BTreeSet<Vec<usize>> = BTreeSet::new();
    candidates.insert(Vec::new());
    for clique in cliques::maximal_cliques(g) {
        subsets_upto(&clique, size_cap, &mut candidates);
    }
    let mut best: Option<(usize, Vec<usize>, Vec<Vec<usize>>)> = None;
    for s in candidates {
        if s.len() >= g.n() {
            continue;
        }
        let rest: Vec<usize> = (0..g.n()).filter(|v| !s.contains(v)).collect();
        let sub = g.induced(&rest).expect("rest is in range");
        let comps = sub.components();
        if comps.len() < 2 {
            continue;
        }
        let comps: Vec<Vec<usize>> = comps
            .into_iter()
            .map(|c| c.into_iter().map(|i| rest[i]).collect())
            .collect();
        let side = comps.iter().map(|c| c.len()).max().unwrap_or(0) + s.len();
        // smallest largest side, then smallest separator, then lexicographic
        let better = match &best {
            None => true,
            Some((b_side, b_s, _)) => {
                (side, s.len(), &s) < (*b_side, b_s.len(), b_s)
            }
        };
        if better {
            best = Some((side, s, comps));
        }
    }
    best.map(|(_, s, comps)| (s, comps))
}

fn subsets_upto(clique: &[usize], cap: usize, out: &mut BTreeSet<Vec<usize>>) {
    fn go(rest: &[usize], cap: usize, cur: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if !cur.is_empty() {
            out.insert(cur.clone());
        }
        if cur.len() == cap {
            return;
        }
        for (i, &v) in rest.iter().enumerate() {
            cur.push(v);
            go(&rest[i + 1..], cap, cur, out);
            cur.pop();
        }
    }
    go(clique, cap, &mut Vec::new(), out);
}

/// Recursive record of the splits used to count a graph. Vertex names are
/// in the coordinates of the original graph handed to `decompose_count`.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DecompositionTree {
    Leaf {
        total: String,
    },
    Split {
        separator: Vec<usize>,
        total: String,
        children: Vec<DecompositionTree>,
    },
    EdgeDelete {
        edge: (usize, usize),
        total: String,
        children: Vec<DecompositionTree>,
    },
}

impl DecompositionTree {
    pub fn total(&self) -> &str {
        match self {
            DecompositionTree::Leaf { total }
            | DecompositionTree::Split { total, .. }
            | DecompositionTree::EdgeDelete { total, .. } => total,
        }
    }
}

/// Default leaf threshold: graphs at most this large are counted directly.
pub const LEAF_THRESHOLD: usize = 12;

pub fn decompose_count(g: &Graph) -> Result<(BigUint, DecompositionTree)> {
    decompose_count_with(g, LEAF_THRESHOLD)
}

pub fn decompose_count_with(
    g: &Graph,
    leaf_threshold: usize,
) -> Result<(BigUint, DecompositionTree)> {
    let labels: Vec<usize> = (0..g.n()).collect();
    decompose_rec(g, &labels, leaf_threshold)
}

fn decompose_rec(
    g: &Graph,
    labels: &[usize],
    leaf_threshold: usize,
) -> Result<(BigUint, DecompositionTree)> {
    if g.n() > leaf_threshold {
        if let Some((sep, comps)) = find_clique_separator(g) {
            // first component plus separator on one side, the rest opposite
            let mut side_a: Vec<usize> = sep.iter().chain(&comps[0]).copied().collect();
            side_a.sort_unstable();
            let mut side_b: Vec<usize> = sep
                .iter()
                .chain(comps[1..].iter().flatten())
                .copied()
                .collect();
            side_b.sort_unstable();
            let ga = g.induced(&side_a)?;
            let gb = g.induced(&side_b)?;
            let labels_a: Vec<usize> = side_a.iter().map(|&v| labels[v]).collect();
            let labels_b: Vec<usize> = side_b.iter().map(|&v| labels[v]).collect();
            let (ka, tree_a) = decompose_rec(&ga, &labels_a, leaf_threshold)?;
            let (kb, tree_b) = decompose_rec(&gb, &labels_b, leaf_threshold)?;
            // the separator induces a complete graph, so k(H) = 2^|S|
            let kh = BigUint::from(1u32) << sep.len();
            let total = ka + kb - kh;
            let sep_labels: Vec<usize> = sep.iter().map(|&v| labels[v]).collect();
            return Ok((
                total.clone(),
                DecompositionTree::Split {
                    separator: sep_labels,
                    total: total.to_string(),
                    children: vec![tree_a, tree_b],
                },
            ));
        }
    }
    let total = cliques::k_total(g)?;
    Ok((
        total.clone(),
        DecompositionTree::Leaf {
            total: total.to_string(),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use num::bigint::BigInt;
    use num::BigUint;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn figure1_split() {
        let g = families::figure1_graph();
        // one-based labels {1,2,3,4} and {3,4,5,6}
        let w = validate_split(&g, &[0, 1, 2, 3], &[2, 3, 4, 5]).unwrap();
        assert_eq!(w.h.labels, vec![2, 3]);
        assert_eq!(w.h.graph.m(), 1); // K_2 on {3,4}
        assert_eq!(count_via_split(&w).unwrap(), big(24)); // 16 + 12 - 4
        let rat = |p: i64, q: i64| BigRational::new(BigInt::from(p), BigInt::from(q));
        // w(3) = 15/4 + 19/6 - 3/2 = 65/12
        assert_eq!(weight_via_split(&w, 2).unwrap(), rat(65, 12));
        assert_eq!(
            weight_via_split(&w, 2).unwrap(),
            cliques::vertex_weight(&g, 2).unwrap()
        );
        assert!(weight_via_split(&w, 0).is_err()); // not shared
    }

    #[test]
    fn noninduced_crossing_clique_rejected() {
        // K_3 with the edge {0,1} kept only on the A-side copy
        let g = families::complete(3);
        let g1 = LabeledGraph::new(Graph::from_pairs(2, &[(0, 1)]).unwrap(), vec![0, 1]).unwrap();
        let g2 = LabeledGraph::new(
            Graph::from_pairs(3, &[(0, 2), (1, 2)]).unwrap(),
            vec![0, 1, 2],
        )
        .unwrap();
        match validate_split_parts(&g, g1, g2) {
            Err(Error::SplitViolation(clique)) => assert_eq!(clique, vec![0, 1, 2]),
            other => panic!("expected split violation, got {other:?}"),
        }
    }

    #[test]
    fn induced_overlap_without_conflict_is_valid() {
        // same vertex sets as above but induced parts: E(G1)\E(H) empty
        let g = families::complete(3);
        let w = validate_split(&g, &[0, 1], &[0, 1, 2]).unwrap();
        assert_eq!(count_via_split(&w).unwrap(), big(8));
    }

    #[test]
    fn disjoint_components_split() {
        let g = families::complete(3).disjoint_union(&families::complete(2));
        let w = validate_split(&g, &[0, 1, 2], &[3, 4]).unwrap();
        assert_eq!(w.h.graph.n(), 0);
        assert_eq!(count_via_split(&w).unwrap(), cliques::k_total(&g).unwrap());
    }

    #[test]
    fn colex_split_closed_form() {
        // colex(r+1, C(r,2)+p+1) = K_r u K_{p+2} over K_{p+1}:
        // k = 2^r + 2^{p+2} - 2^{p+1}
        for (r, p) in [(4usize, 1usize), (5, 2), (6, 0), (7, 4)] {
            let m = r * (r - 1) / 2 + p + 1;
            let g = families::colex_graph(&families::ColexSpec::new(r + 1, m).unwrap());
            let a: Vec<usize> = (0..r).collect();
            let b: Vec<usize> = (0..=p).chain([r]).collect();
            let w = validate_split(&g, &a, &b).unwrap();
            let expect = big(1u64 << r) + big(1u64 << (p + 2)) - big(1u64 << (p + 1));
            assert_eq!(count_via_split(&w).unwrap(), expect);
            assert_eq!(cliques::k_total(&g).unwrap(), expect);
        }
    }

    #[test]
    fn edge_deletion_identity() {
        let k3 = families::complete(3);
        let e = Edge::new(0, 1).unwrap();
        assert_eq!(count_via_edge_deletion(&k3, e).unwrap(), (big(6), big(2)));
        let fig = families::figure1_graph();
        let e34 = Edge::new(2, 3).unwrap();
        let (rest, on_edge) = count_via_edge_deletion(&fig, e34).unwrap();
        assert_eq!((rest.clone(), on_edge.clone()), (big(18), big(6)));
        assert_eq!(rest + on_edge, cliques::k_total(&fig).unwrap());
    }

    #[test]
    fn separator_examples() {
        let fig = families::figure1_graph();
        let (s, comps) = find_clique_separator(&fig).unwrap();
        assert_eq!(s, vec![2, 3]); // one-based {3,4}
        assert_eq!(comps.len(), 3);
        assert!(find_clique_separator(&families::complete(5)).is_none());
        let p4 = families::path(4);
        let (s, _) = find_clique_separator(&p4).unwrap();
        assert_eq!(s, vec![1]);
        // disconnected graph: the empty separator wins the tie-break
        let two = families::complete(3).disjoint_union(&families::complete(3));
        let (s, comps) = find_clique_separator(&two).unwrap();
        assert_eq!(s, Vec::<usize>::new());
        assert_eq!(comps.len(), 2);
    }

    #[test]
    fn decompose_totals() {
        let fig = families::figure1_graph();
        // force a split on this small graph to exercise the tree shape
        let (total, tree) = decompose_count_with(&fig, 4).unwrap();
        assert_eq!(total, big(24));
        match &tree {
            DecompositionTree::Split { separator, children, .. } => {
                assert_eq!(separator, &vec![2, 3]);
                assert_eq!(children.len(), 2);
            }
            other => panic!("expected split root, got {other:?}"),
        }
        // defaults: small graphs are leaves
        let (total, tree) = decompose_count(&families::complete(6)).unwrap();
        assert_eq!(total, big(64));
        assert!(matches!(tree, DecompositionTree::Leaf { .. }));
        // three disjoint triangles via component splits
        let t = families::complete(3);
        let g = t.disjoint_union(&t).disjoint_union(&t);
        let (total, _) = decompose_count_with(&g, 3).unwrap();
        assert_eq!(total, big(22)); // 1 + 3*7 nonempty cliques
        assert_eq!(total, cliques::k_total(&g).unwrap());
    }
}
