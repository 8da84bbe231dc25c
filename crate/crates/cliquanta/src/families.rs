//! Constructors for the named graph families: complete graphs, cycles,
//! colex graphs, the extremal unions aK_{r+1} u K_b, the fixed 6-vertex
//! example graph, and the two-sided gadgets with hypothesis validation.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use std::collections::HashSet;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.insert_edge_unchecked(u, v);
        }
    }
    g
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParam(format!("cycle needs n >= 3, got {n}")));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        g.insert_edge_unchecked(u, (u + 1) % n);
    }
    Ok(g)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.insert_edge_unchecked(u, v);
        }
    }
    g
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 1..n {
        g.insert_edge_unchecked(u - 1, u);
    }
    g
}

/// Disjoint union of a list of graphs, relabeled left to right.
pub fn disjoint_union_many(parts: &[Graph]) -> Graph {
    parts
        .iter()
        .fold(Graph::empty(0), |acc, g| acc.disjoint_union(g))
}

/// Parameters of the extremal decomposition n = a(r+1) + b, 0 <= b <= r.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremalParams {
    pub n: usize,
    pub r: usize,
    pub a: usize,
    pub b: usize,
}

/// The clique-count maximizer aK_{r+1} u K_b among graphs of order n with
/// maximum degree at most r.
pub fn extremal_graph(n: usize, r: usize) -> Result<(Graph, ExtremalParams)> {
    if r == 0 {
        return Err(Error::InvalidParam("extremal_graph needs r >= 1".into()));
    }
    let a = n / (r + 1);
    let b = n % (r + 1);
    let mut parts = vec![complete(r + 1); a];
    if b > 0 {
        parts.push(complete(b));
    }
    Ok((disjoint_union_many(&parts), ExtremalParams { n, r, a, b }))
}

/// Colex graph parameters: m = C(r,2) + s with 0 <= s < r.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColexSpec {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub s: usize,
}

impl ColexSpec {
    pub fn new(n: usize, m: usize) -> Result<ColexSpec> {
        if m > n * n.saturating_sub(1) / 2 {
            return Err(Error::InvalidParam(format!(
                "m = {m} exceeds C({n},2)"
            )));
        }
        let mut r = 1;
        while (r + 1) * r / 2 <= m {
            r += 1;
        }
        let s = m - r * (r - 1) / 2;
        Ok(ColexSpec { n, m, r, s })
    }
}

/// Graph on [n] (internally 0-based) whose edges are the first m pairs in
/// colex order: {1,2},{1,3},{2,3},{1,4},...
pub fn colex_graph(spec: &ColexSpec) -> Graph {
    let mut g = Graph::empty(spec.n);
    let mut left = spec.m;
    'outer: for v in 1..spec.n {
        for u in 0..v {
            if left == 0 {
                break 'outer;
            }
            g.insert_edge_unchecked(u, v);
            left -= 1;
        }
    }
    g
}

/// K_r minus the matching {0-1, 2-3, ...} of t edges; t <= floor(r/2).
pub fn complete_minus_matching(r: usize, t: usize) -> Result<Graph> {
    if 2 * t > r {
        return Err(Error::InvalidParam(format!(
            "matching size {t} too large for K_{r}"
        )));
    }
    let mut g = complete(r);
    for i in 0..t {
        g = g.delete_edge(Edge::new(2 * i, 2 * i + 1)?)?;
    }
    Ok(g)
}

/// The fixed 6-vertex, 10-edge worked-example graph. One-based labels
/// 1..6 in external write-ups map to vertices 0..5.
pub fn figure1_graph() -> Graph {
    Graph::from_pairs(
        6,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (0, 3),
            (1, 3),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
        ],
    )
    .expect("fixed edge list is valid")
}

/// Gadget specification. The P-side occupies vertices 0..2p-1, the Q-side
/// 2p..2p+q-1. `t = 0` selects the K_{2p} form with two-sided degree caps;
/// `t >= 1` selects the K_{2p} - tK_2 form with a designated Q-vertex w
/// (the first Q vertex) whose P-neighborhood is exactly {0..p+t-1}, the
/// deleted matching lying on pairs (0,1),...,(2t-2,2t-1) of that
/// neighborhood.
#[derive(Clone, Debug)]
pub struct GammaSpec {
    pub p: usize,
    pub q: usize,
    pub t: usize,
    pub cross: Vec<Edge>,
}

/// Validated gadget: the assembled graph plus the designated edges the
/// lemma bounds (all cross edges for t = 0; the 2t edges u_i w for t >= 1).
#[derive(Clone, Debug)]
pub struct GammaGadget {
    pub graph: Graph,
    pub p: usize,
    pub q: usize,
    pub t: usize,
    pub cross: Vec<Edge>,
    pub designated: Vec<Edge>,
}

impl GammaGadget {
    pub fn p_side(&self) -> std::ops::Range<usize> {
        0..2 * self.p
    }

    pub fn q_side(&self) -> std::ops::Range<usize> {
        2 * self.p..2 * self.p + self.q
    }
}

pub fn gamma_gadget(spec: &GammaSpec) -> Result<GammaGadget> {
    let (p, q, t) = (spec.p, spec.q, spec.t);
    if p < 1 || q < 1 {
        return Err(Error::InvalidParam("gadget needs p >= 1 and q >= 1".into()));
    }
    if t > p {
        return Err(Error::GadgetHypothesis(format!("t = {t} exceeds p = {p}")));
    }
    if spec.cross.len() != 2 * p {
        return Err(Error::GadgetHypothesis(format!(
            "expected exactly {} cross edges, got {}",
            2 * p,
            spec.cross.len()
        )));
    }
    let pn = 2 * p;
    let n = pn + q;
    let mut seen = HashSet::new();
    for e in &spec.cross {
        if e.u() >= pn || e.v() < pn || e.v() >= n {
            return Err(Error::GadgetHypothesis(format!(
                "cross edge {e} does not join the P-side to the Q-side"
            )));
        }
        if !seen.insert(*e) {
            return Err(Error::GadgetHypothesis(format!("duplicate cross edge {e}")));
        }
    }
    // P-side, then Q-side, then cross edges
    let mut g = if t == 0 {
        complete(pn)
    } else {
        complete_minus_matching(pn, t)?
    };
    let mut full = Graph::empty(n);
    for e in g.edges() {
        full.insert_edge_unchecked(e.u(), e.v());
    }
    for u in pn..n {
        for v in u + 1..n {
            full.insert_edge_unchecked(u, v);
        }
    }
    for e in &spec.cross {
        full.insert_edge_unchecked(e.u(), e.v());
    }
    g = full;

    let d_p = |w: usize| spec.cross.iter().filter(|e| e.v() == w).count();
    let d_q = |u: usize| spec.cross.iter().filter(|e| e.u() == u).count();
    let designated = if t == 0 {
        for w in pn..n {
            if d_p(w) > p {
                return Err(Error::GadgetHypothesis(format!(
                    "Q-vertex {w} has {} P-neighbors, cap is p = {p}",
                    d_p(w)
                )));
            }
        }
        for u in 0..pn {
            if d_q(u) > p {
                return Err(Error::GadgetHypothesis(format!(
                    "P-vertex {u} has {} Q-neighbors, cap is p = {p}",
                    d_q(u)
                )));
            }
        }
        spec.cross.clone()
    } else {
        let w = pn;
        let nbhd: HashSet<usize> = spec
            .cross
            .iter()
            .filter(|e| e.v() == w)
            .map(|e| e.u())
            .collect();
        let expected: HashSet<usize> = (0..p + t).collect();
        if nbhd != expected {
            return Err(Error::GadgetHypothesis(format!(
                "designated vertex {w} must have P-neighborhood {{0..{}}}, got {:?}",
                p + t - 1,
                {
                    let mut v: Vec<_> = nbhd.into_iter().collect();
                    v.sort_unstable();
                    v
                }
            )));
        }
        // matching pattern inside w's neighborhood
        for i in 0..t {
            if g.has_edge(2 * i, 2 * i + 1) {
                return Err(Error::GadgetHypothesis(format!(
                    "pair ({}, {}) must be a non-edge of P",
                    2 * i,
                    2 * i + 1
                )));
            }
        }
        (0..2 * t)
            .map(|i| Edge::new(i, w))
            .collect::<Result<Vec<_>>>()?
    };
    Ok(GammaGadget {
        graph: g,
        p,
        q,
        t,
        cross: spec.cross.clone(),
        designated,
    })
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(k - 1) {
        for pos in 0..k {
            let mut perm = rest.clone();
            perm.insert(pos, k - 1);
            out.push(perm);
        }
    }
    out
}

fn combinations(pool: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, pool: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let needed = k - cur.len();
        for i in start..=pool.saturating_sub(needed) {
            cur.push(i);
            go(i + 1, pool, k, cur, out);
            cur.pop();
        }
    }
    go(0, pool, k, &mut cur, &mut out);
    out
}

/// Canonical key of a cross placement up to independent relabelings of the
/// two fully symmetric sides: minimize the sorted list of per-P-vertex
/// Q-neighborhood masks over all Q permutations.
fn placement_key_29(rows: &[u16], q: usize) -> Vec<u16> {
    let mut best: Option<Vec<u16>> = None;
    for perm in permutations(q) {
        let mut mapped: Vec<u16> = rows
            .iter()
            .map(|&mask| {
                let mut out = 0u16;
                for j in 0..q {
                    if mask >> j & 1 == 1 {
                        out |= 1 << perm[j];
                    }
                }
                out
            })
            .collect();
        mapped.sort_unstable();
        if best.as_ref().is_none_or(|b| &mapped < b) {
            best = Some(mapped);
        }
    }
    best.unwrap_or_default()
}

/// All valid cross-edge placements for the t = 0 gadget, one representative
/// per symmetry class, in deterministic order.
pub fn gamma_placements_29(p: usize, q: usize) -> Result<Vec<GammaSpec>> {
    if p < 1 || q < 1 {
        return Err(Error::InvalidParam("need p >= 1 and q >= 1".into()));
    }
    let pn = 2 * p;
    let pairs: Vec<(usize, usize)> = (0..pn)
        .flat_map(|u| (pn..pn + q).map(move |w| (u, w)))
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for combo in combinations(pairs.len(), pn) {
        let chosen: Vec<(usize, usize)> = combo.iter().map(|&i| pairs[i]).collect();
        let mut rows = vec![0u16; pn];
        let mut cols = vec![0usize; q];
        for &(u, w) in &chosen {
            rows[u] |= 1 << (w - pn);
            cols[w - pn] += 1;
        }
        if rows.iter().any(|r| r.count_ones() as usize > p) || cols.iter().any(|&c| c > p) {
            continue;
        }
        let key = placement_key_29(&rows, q);
        if !seen.insert(key) {
            continue;
        }
        let cross = chosen
            .iter()
            .map(|&(u, w)| Edge::new(u, w))
            .collect::<Result<Vec<_>>>()?;
        out.push(GammaSpec { p, q, t: 0, cross });
    }
    Ok(out)
}

/// All valid cross-edge placements for the t >= 1 gadget: the designated
/// vertex's p+t edges are fixed by the lemma's labeling, the remaining
/// p-t edges range over P x (Q \ {w}), deduplicated up to permuting the
/// undesignated Q-vertices.
pub fn gamma_placements_210(p: usize, t: usize, q: usize) -> Result<Vec<GammaSpec>> {
    if p < 1 || q < 1 || t < 1 {
        return Err(Error::InvalidParam("need p, q, t >= 1".into()));
    }
    if t > p {
        return Err(Error::InvalidParam(format!("t = {t} exceeds p = {p}")));
    }
    let pn = 2 * p;
    let w = pn;
    let fixed: Vec<(usize, usize)> = (0..p + t).map(|u| (u, w)).collect();
    let rest = p - t;
    if rest > 0 && q == 1 {
        return Ok(Vec::new());
    }
    let free_pairs: Vec<(usize, usize)> = (0..pn)
        .flat_map(|u| (pn + 1..pn + q).map(move |x| (u, x)))
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for combo in combinations(free_pairs.len(), rest) {
        let chosen: Vec<(usize, usize)> = combo.iter().map(|&i| free_pairs[i]).collect();
        // key: sorted P-masks of the undesignated Q-vertices
        let mut cols = vec![0u16; q.saturating_sub(1)];
        for &(u, x) in &chosen {
            cols[x - pn - 1] |= 1 << u;
        }
        cols.sort_unstable();
        if !seen.insert(cols) {
            continue;
        }
        let cross = fixed
            .iter()
            .chain(&chosen)
            .map(|&(u, x)| Edge::new(u, x))
            .collect::<Result<Vec<_>>>()?;
        let spec = GammaSpec { p, q, t, cross };
        if gamma_gadget(&spec).is_ok() {
            out.push(spec);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{cliques, graph6};
    use num::BigUint;

    #[test]
    fn standard_families() {
        assert_eq!(complete(4).m(), 6);
        let c5 = cycle(5).unwrap();
        assert_eq!((c5.n(), c5.m()), (5, 5));
        assert!((0..5).all(|u| c5.degree(u) == 2));
        assert!(cycle(2).is_err());
        let k33 = complete_bipartite(3, 3);
        assert_eq!(k33.m(), 9);
        assert!((0..6).all(|u| k33.degree(u) == 3));
    }

    #[test]
    fn extremal_graphs() {
        let (g, p) = extremal_graph(10, 4).unwrap();
        assert_eq!((p.a, p.b), (2, 0));
        assert_eq!((g.n(), g.m()), (10, 20)); // 2K_5
        let (g, p) = extremal_graph(7, 2).unwrap();
        assert_eq!((p.a, p.b), (2, 1));
        assert_eq!((g.n(), g.m()), (7, 6)); // 2K_3 u K_1
        let (g, p) = extremal_graph(3, 5).unwrap();
        assert_eq!((p.a, p.b), (0, 3));
        assert_eq!((g.n(), g.m()), (3, 3)); // K_3
        // degree bound and component count
        assert!(g.max_degree() <= 5);
        let (g, p) = extremal_graph(9, 3).unwrap();
        assert_eq!(g.components().len(), p.a + (p.b > 0) as usize);
    }

    #[test]
    fn colex_first_ten_edges() {
        let spec = ColexSpec::new(5, 10).unwrap();
        let g = colex_graph(&spec);
        // first 10 colex edges on [5] are all of K_5
        assert_eq!(g, complete(5));
        let expected_order = [
            (0, 1),
            (0, 2),
            (1, 2),
            (0, 3),
            (1, 3),
            (2, 3),
            (0, 4),
            (1, 4),
            (2, 4),
            (3, 4),
        ];
        for (m, &(u, v)) in expected_order.iter().enumerate() {
            let h = colex_graph(&ColexSpec::new(5, m + 1).unwrap());
            assert!(h.has_edge(u, v), "edge {m} should be {{{u},{v}}}");
            assert_eq!(h.m(), m + 1);
        }
    }

    #[test]
    fn colex_structure() {
        // colex(5,7): K_4 on {1..4} plus vertex 5 adjacent to vertex 1
        let spec = ColexSpec::new(5, 7).unwrap();
        assert_eq!((spec.r, spec.s), (4, 1));
        let g = colex_graph(&spec);
        assert_eq!(g.induced(&[0, 1, 2, 3]).unwrap(), complete(4));
        assert_eq!(g.degree(4), 1);
        assert!(g.has_edge(0, 4));
        // m = 0 is edgeless
        assert_eq!(colex_graph(&ColexSpec::new(4, 0).unwrap()).m(), 0);
        assert!(ColexSpec::new(4, 7).is_err());
    }

    #[test]
    fn colex_clique_restriction() {
        // colex(n, C(r,2)) on its non-isolated vertices is K_r
        for (n, r) in [(7usize, 4usize), (6, 5), (9, 3)] {
            let m = r * (r - 1) / 2;
            let g = colex_graph(&ColexSpec::new(n, m).unwrap());
            let nonisolated: Vec<usize> = (0..n).filter(|&u| g.degree(u) > 0).collect();
            assert_eq!(g.induced(&nonisolated).unwrap(), complete(r));
        }
    }

    #[test]
    fn minus_matching() {
        let g = complete_minus_matching(4, 1).unwrap();
        assert_eq!(g.m(), 5);
        let g = complete_minus_matching(6, 3).unwrap();
        assert_eq!(g.m(), 12);
        assert!((0..6).all(|u| g.degree(u) == 4));
        assert_eq!(complete_minus_matching(5, 0).unwrap(), complete(5));
        assert!(complete_minus_matching(5, 3).is_err());
    }

    #[test]
    fn figure1_shape() {
        let g = figure1_graph();
        assert_eq!((g.n(), g.m()), (6, 10));
        assert_eq!(g.induced(&[0, 1, 2, 3]).unwrap(), complete(4));
        let degs: Vec<usize> = (0..6).map(|u| g.degree(u)).collect();
        assert_eq!(degs, vec![3, 3, 5, 5, 2, 2]);
        assert_eq!(g.max_degree(), 5);
        // G_2 = G[{3,4,5,6}] is K_4 minus one edge
        let g2 = g.induced(&[2, 3, 4, 5]).unwrap();
        assert_eq!((g2.n(), g2.m()), (4, 5));
        // constructor outputs survive graph6 round-trips
        for h in [g, complete(5), cycle(7).unwrap()] {
            assert_eq!(graph6::decode(&graph6::encode(&h).unwrap()).unwrap(), h);
        }
    }

    #[test]
    fn gadget_29_valid_and_counts() {
        let spec = GammaSpec {
            p: 1,
            q: 2,
            t: 0,
            cross: vec![Edge::new(0, 2).unwrap(), Edge::new(1, 3).unwrap()],
        };
        let gadget = gamma_gadget(&spec).unwrap();
        assert_eq!(gadget.graph.n(), 4);
        assert_eq!(
            cliques::edge_clique_count(&gadget.graph, gadget.cross[0]).unwrap(),
            BigUint::from(1u32)
        );
    }

    #[test]
    fn gadget_29_degree_cap_rejected() {
        // p=2, all 4 cross edges on the single Q-vertex: d_P(w) = 4 > p
        let cross = (0..4).map(|u| Edge::new(u, 4).unwrap()).collect();
        let spec = GammaSpec { p: 2, q: 1, t: 0, cross };
        match gamma_gadget(&spec) {
            Err(Error::GadgetHypothesis(msg)) => assert!(msg.contains("cap is p")),
            other => panic!("expected hypothesis rejection, got {other:?}"),
        }
    }

    #[test]
    fn gadget_210_valid() {
        // p=2, t=1, q=2: w = vertex 4 adjacent to u_1,u_2,u_3 = 0,1,2 with
        // the pair (0,1) a non-edge of P; one more cross edge to the other
        // Q-vertex.
        let cross = vec![
            Edge::new(0, 4).unwrap(),
            Edge::new(1, 4).unwrap(),
            Edge::new(2, 4).unwrap(),
            Edge::new(3, 5).unwrap(),
        ];
        let spec = GammaSpec { p: 2, q: 2, t: 1, cross };
        let gadget = gamma_gadget(&spec).unwrap();
        assert_eq!(gadget.designated.len(), 2);
        assert!(!gadget.graph.has_edge(0, 1));
        assert!(gadget.graph.has_edge(2, 3));
    }

    #[test]
    fn gadget_210_bad_neighborhood_rejected() {
        // w's P-neighborhood must be exactly {0..p+t-1}
        let cross = vec![
            Edge::new(0, 4).unwrap(),
            Edge::new(1, 4).unwrap(),
            Edge::new(3, 4).unwrap(),
            Edge::new(2, 5).unwrap(),
        ];
        let spec = GammaSpec { p: 2, q: 2, t: 1, cross };
        assert!(matches!(
            gamma_gadget(&spec),
            Err(Error::GadgetHypothesis(_))
        ));
    }

    #[test]
    fn placement_generators_basic() {
        let placements = gamma_placements_29(1, 2).unwrap();
        assert!(!placements.is_empty());
        for spec in &placements {
            assert!(gamma_gadget(spec).is_ok());
        }
        // distinct canonical keys means no duplicates slipped through
        let placements = gamma_placements_210(2, 1, 2).unwrap();
        assert!(!placements.is_empty());
        // p = t with q = 1 is fine: no free edges remain
        let placements = gamma_placements_210(1, 1, 1).unwrap();
        assert_eq!(placements.len(), 1);
    }
}
