//! Certified verification runs: each routine sweeps an exhaustively
//! enumerated family, checks a claim with exact arithmetic, and returns a
//! machine-readable certificate listing what was examined, any
//! counterexample witnesses, and the equality cases found.

use crate::bounds::{self, HParams};
use crate::canon;
use crate::cliques;
use crate::decompose;
use crate::enumerate;
use crate::error::Result;
use crate::families::{self, GammaGadget};
use crate::graph::{Edge, Graph};
use num::bigint::BigUint;
use num::rational::BigRational;
use num::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
    Partial,
}

/// Outcome of one verification run. `witnesses` carries counterexamples
/// (graph6 strings or parameter tuples); `equality_cases` the inputs that
/// meet the bound exactly.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub claim: String,
    pub params: serde_json::Value,
    pub verdict: Verdict,
    pub witnesses: Vec<String>,
    pub equality_cases: Vec<String>,
    pub classes_examined: u64,
    pub runtime_ms: u128,
}

impl Certificate {
    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }
}

fn finish(
    claim: &str,
    params: serde_json::Value,
    witnesses: Vec<String>,
    equality_cases: Vec<String>,
    classes_examined: u64,
    start: Instant,
) -> Certificate {
    Certificate {
        claim: claim.to_string(),
        params,
        verdict: if witnesses.is_empty() {
            Verdict::Verified
        } else {
            Verdict::Refuted
        },
        witnesses,
        equality_cases,
        classes_examined,
        runtime_ms: start.elapsed().as_millis(),
    }
}

fn g6_of(g: &Graph) -> Result<String> {
    if g.n() <= canon::CANON_MAX_N {
        canon::canonical_g6(g)
    } else {
        crate::graph6::encode(g)
    }
}

/// Checks the counting identities on one graph: the total count equals one
/// plus the sum of the vertex weights, and for every edge the count splits
/// as k(G) = k(G-e) + k(e;G).
pub fn verify_identities(g: &Graph) -> Result<Certificate> {
    let start = Instant::now();
    let mut witnesses = Vec::new();
    let total = cliques::k_total(g)?;
    let weight_sum: BigRational = cliques::weight_map(g)?.into_iter().sum();
    let recombined = BigRational::from(num::BigInt::from(total.clone())) - BigRational::one();
    if weight_sum != recombined {
        witnesses.push(format!(
            "weight sum {} differs from k(G) - 1 = {}",
            crate::report::rational_string(&weight_sum),
            crate::report::rational_string(&recombined)
        ));
    }
    for e in g.edges() {
        let (rest, on_edge) = decompose::count_via_edge_deletion(g, e)?;
        if rest.clone() + on_edge.clone() != total {
            witnesses.push(format!(
                "edge {e}: k(G-e) + k(e;G) = {} + {} differs from k(G) = {total}",
                rest, on_edge
            ));
        }
    }
    let checked = 1 + g.m() as u64;
    Ok(finish(
        "counting identities (weight sum; edge deletion)",
        serde_json::json!({ "n": g.n(), "m": g.m(), "g6": g6_of(g)? }),
        witnesses,
        vec![],
        checked,
        start,
    ))
}

/// For every isomorphism class on up to `n_max` vertices and every t,
/// checks k_t(G) <= k_t of the colex graph with the same order and size,
/// and that among 5-vertex, 7-edge classes the triangle bound is met only
/// by the colex graph itself.
pub fn verify_kruskal_katona(n_max: usize) -> Result<Certificate> {
    let start = Instant::now();
    let mut witnesses = Vec::new();
    let mut equality = BTreeSet::new();
    let mut examined = 0u64;
    for n in 0..=n_max {
        let classes = enumerate::enumerate_graphs(n, n.saturating_sub(1))?;
        examined += classes.len() as u64;
        let results: Vec<(Vec<String>, Vec<String>)> = classes
            .par_iter()
            .map(|g| -> Result<(Vec<String>, Vec<String>)> {
                let mut bad = Vec::new();
                let mut tight_57 = Vec::new();
                let profile = cliques::clique_profile(g)?;
                for t in 0..=n {
                    let bound = bounds::kruskal_katona_bound(n, g.m(), t)?;
                    let observed = profile.k(t);
                    if observed > bound {
                        bad.push(format!(
                            "{}: k_{t} = {observed} exceeds colex value {bound}",
                            g6_of(g)?
                        ));
                    }
                    if n == 5 && g.m() == 7 && t == 3 && observed == bound {
                        tight_57.push(g6_of(g)?);
                    }
                }
                Ok((bad, tight_57))
            })
            .collect::<Result<_>>()?;
        for (bad, tight) in results {
            witnesses.extend(bad);
            equality.extend(tight);
        }
    }
    // the (5,7,3) equality case must be exactly the colex graph
    if n_max >= 5 {
        let colex57 = families::colex_graph(&families::ColexSpec::new(5, 7)?);
        let expect: BTreeSet<String> = [g6_of(&colex57)?].into();
        if equality != expect {
            witnesses.push(format!(
                "triangle equality at n=5, m=7 held for {:?}, expected exactly {:?}",
                equality, expect
            ));
        }
    }
    Ok(finish(
        "colex graphs maximize every clique count at fixed order and size",
        serde_json::json!({ "n_max": n_max }),
        witnesses,
        equality.into_iter().collect(),
        examined,
        start,
    ))
}

/// Expected clique-count maximizers at order n, degree bound r: the graph
/// aK_{r+1} u K_b, plus (for r = 2 and a >= 1) the cycle variants
/// (a-1)K_3 u C_4 when b = 1 and (a-1)K_3 u C_5 when b = 2.
fn expected_maximizers(n: usize, r: usize) -> Result<BTreeSet<String>> {
    let (g, params) = families::extremal_graph(n, r)?;
    let mut expect: BTreeSet<String> = [g6_of(&g)?].into();
    if r == 2 && params.a >= 1 && (params.b == 1 || params.b == 2) {
        let mut parts = vec![families::complete(3); params.a - 1];
        parts.push(families::cycle(3 + params.b)?);
        expect.insert(g6_of(&families::disjoint_union_many(&parts))?);
    }
    Ok(expect)
}

/// Exhaustively checks that no graph of order n with maximum degree at
/// most r beats the closed-form clique-count bound, and that the
/// maximizers are exactly the expected family.
pub fn verify_extremal(n: usize, r: usize) -> Result<Certificate> {
    let start = Instant::now();
    let mut witnesses = Vec::new();
    let bound = bounds::cutler_radcliffe_bound(n, r)?;
    let classes = enumerate::enumerate_graphs(n, r)?;
    let counted: Vec<(String, BigUint)> = classes
        .par_iter()
        .map(|g| Ok((g6_of(g)?, cliques::k_total(g)?)))
        .collect::<Result<_>>()?;
    let mut maximizers = BTreeSet::new();
    let mut best = BigUint::zero();
    for (g6, k) in &counted {
        if *k > bound {
            witnesses.push(format!("{g6}: k = {k} exceeds the bound {bound}"));
        }
        if *k > best {
            best = k.clone();
            maximizers.clear();
        }
        if *k == best {
            maximizers.insert(g6.clone());
        }
    }
    if best != bound {
        witnesses.push(format!("maximum observed k = {best}, bound is {bound}"));
    }
    let expect = expected_maximizers(n, r)?;
    if maximizers != expect {
        witnesses.push(format!(
            "maximizers {:?} differ from the expected family {:?}",
            maximizers, expect
        ));
    }
    Ok(finish(
        "maximum clique count at bounded degree, with maximizer characterization",
        serde_json::json!({ "n": n, "r": r, "bound": bound.to_string() }),
        witnesses,
        maximizers.into_iter().collect(),
        classes.len() as u64,
        start,
    ))
}

/// Exhaustively checks i(G)^{2d} <= (2^{d+1} - 1)^n over all d-regular
/// graphs of order n, and that the tight cases are exactly the disjoint
/// unions of K_{d,d}.
pub fn verify_kahn_zhao(n: usize, d: usize) -> Result<Certificate> {
    let start = Instant::now();
    let mut witnesses = Vec::new();
    let classes = enumerate::enumerate_regular(n, d)?;
    let reports: Vec<(String, bool, bool)> = classes
        .par_iter()
        .map(|g| {
            let rep = bounds::kahn_zhao_check(g)?;
            Ok((g6_of(g)?, rep.holds(), rep.tight))
        })
        .collect::<Result<_>>()?;
    let mut tight_set = BTreeSet::new();
    for (g6, holds, tight) in reports {
        if !holds {
            witnesses.push(format!("{g6}: independent-set bound violated"));
        }
        if tight {
            tight_set.insert(g6);
        }
    }
    let mut expect = BTreeSet::new();
    if d >= 1 && n % (2 * d) == 0 {
        let blocks = vec![families::complete_bipartite(d, d); n / (2 * d)];
        expect.insert(g6_of(&families::disjoint_union_many(&blocks))?);
    }
    if tight_set != expect {
        witnesses.push(format!(
            "tight cases {:?} differ from the expected family {:?}",
            tight_set, expect
        ));
    }
    Ok(finish(
        "independent-set bound for regular graphs, with tightness characterization",
        serde_json::json!({ "n": n, "d": d }),
        witnesses,
        tight_set.into_iter().collect(),
        classes.len() as u64,
        start,
    ))
}

/// Sweeps every admissible cross-edge placement of the K_{2p} gadget for
/// p <= p_max, q <= q_max and checks k(e; gadget) <= 2^p for each cross
/// edge. Equality cases are recorded.
pub fn verify_gadget_cap(p_max: usize, q_max: usize) -> Result<Certificate> {
    let start = Instant::now();
    let mut witnesses = Vec::new();
    let mut equality = BTreeSet::new();
    let mut examined = 0u64;
    for p in 1..=p_max {
        for q in 1..=q_max {
            let specs = families::gamma_placements_29(p, q)?;
            examined += specs.len() as u64;
            let results: Vec<(Vec<String>, Vec<String>)> = specs
                .par_iter()
                .map(|spec| {
                    let gadget = families::gamma_gadget(spec)?;
                    check_cap_29(&gadget)
                })
                .collect::<Result<_>>()?;
            for (bad, tight) in results {
                witnesses.extend(bad);
                equality.extend(tight);
            }
        }
    }
    Ok(finish(
        "cross-edge clique cap for the matched-clique gadget",
        serde_json::json!({ "p_max": p_max, "q_max": q_max }),
        witnesses,
        equality.into_iter().collect(),
        examined,
        start,
    ))
}

fn check_cap_29(gadget: &GammaGadget) -> Result<(Vec<String>, Vec<String>)> {
    let cap = BigUint::one() << gadget.p;
    let mut bad = Vec::new();
    let mut tight = Vec::new();
    for &e in &gadget.designated {
        let count = cliques::edge_clique_count(&gadget.graph, e)?;
        if count > cap {
            bad.push(format!(
                "{} edge {e}: k(e) = {count} exceeds 2^{} = {cap}",
                g6_of(&gadget.graph)?,
                gadget.p
            ));
        } else if count == cap {
            tight.push(g6_of(&gadget.graph)?);
        }
    }
    Ok((bad, tight))
}

/// The matched-deletion gadget bound:
/// 2^{p-t} + k(K_{p+t+1} - tK_2) - k(K_{p+t} - tK_2).
pub fn matched_gadget_bound(p: usize, t: usize) -> Result<BigUint> {
    let big = cliques::k_total(&families::complete_minus_matching(p + t + 1, t)?)?;
    let small = cliques::k_total(&families::complete_minus_matching(p + t, t)?)?;
    Ok((BigUint::one() << (p - t)) + big - small)
}

/// Sweeps every admissible placement of the K_{2p} - tK_2 gadget and
/// checks that the cliques through the designated vertex's matched edges
/// number at most the closed-form bound.
pub fn verify_matched_gadget_cap(p_max: usize, t_max: usize, q_max: usize) -> Result<Certificate> {
    let start = Instant::now();
    let mut witnesses = Vec::new();
    let mut equality = BTreeSet::new();
    let mut examined = 0u64;
    for p in 1..=p_max {
        for t in 1..=t_max.min(p) {
            let bound = matched_gadget_bound(p, t)?;
            for q in 1..=q_max {
                let specs = families::gamma_placements_210(p, t, q)?;
                examined += specs.len() as u64;
                let results: Vec<(Vec<String>, Vec<String>)> = specs
                    .par_iter()
                    .map(|spec| {
                        let gadget = families::gamma_gadget(spec)?;
                        let count = cliques::edges_union_clique_count(
                            &gadget.graph,
                            &gadget.designated,
                        )?;
                        let g6 = g6_of(&gadget.graph)?;
                        let mut bad = Vec::new();
                        let mut tight = Vec::new();
                        if count > bound {
                            bad.push(format!(
                                "{g6}: k(E*) = {count} exceeds the bound {bound}"
                            ));
                        } else if count == bound {
                            tight.push(g6);
                        }
                        Ok((bad, tight))
                    })
                    .collect::<Result<_>>()?;
                for (bad, tight) in results {
                    witnesses.extend(bad);
                    equality.extend(tight);
                }
            }
        }
    }
    Ok(finish(
        "designated-edge clique cap for the matched-deletion gadget",
        serde_json::json!({ "p_max": p_max, "t_max": t_max, "q_max": q_max }),
        witnesses,
        equality.into_iter().collect(),
        examined,
        start,
    ))
}

/// Checks strict positivity of h(s,p,r) over the piecewise admissible
/// region for 3 <= r <= r_max, and that the single boundary point
/// (r,s,p) = (3,2,1) gives exactly zero.
pub fn verify_h_positivity(r_max: usize) -> Result<Certificate> {
    use num::Signed;
    let start = Instant::now();
    let mut witnesses = Vec::new();
    let mut equality = Vec::new();
    let mut examined = 0u64;
    for r in 3..=r_max {
        for s in 0..=r {
            for p in 0..=2 * r / 3 + 1 {
                if !bounds::lemma31_region(r, s, p) {
                    continue;
                }
                examined += 1;
                let h = bounds::h_function(HParams { r, s, p })?;
                if !h.is_positive() {
                    witnesses.push(format!(
                        "h at r={r}, s={s}, p={p} is {}, not positive",
                        crate::report::rational_string(&h)
                    ));
                }
            }
        }
    }
    if r_max >= 3 {
        examined += 1;
        let boundary = bounds::h_function(HParams { r: 3, s: 2, p: 1 })?;
        if boundary.is_zero() {
            equality.push("r=3, s=2, p=1".to_string());
        } else {
            witnesses.push(format!(
                "h at the boundary point r=3, s=2, p=1 is {}, expected 0",
                crate::report::rational_string(&boundary)
            ));
        }
    }
    Ok(finish(
        "strict positivity of the weight-gap function on its region",
        serde_json::json!({ "r_max": r_max }),
        witnesses,
        equality,
        examined,
        start,
    ))
}

/// Checks the split identity on one graph for a given vertex bipartition
/// (induced sides): validates the no-crossing hypothesis, then compares
/// the recombined count and any shared-vertex weights against direct
/// computation.
pub fn verify_split(g: &Graph, a: &[usize], b: &[usize]) -> Result<Certificate> {
    let start = Instant::now();
    let mut witnesses = Vec::new();
    let witness = match decompose::validate_split(g, a, b) {
        Ok(w) => w,
        Err(e) => {
            return Ok(finish(
                "split identity for counts and shared-vertex weights",
                serde_json::json!({ "g6": g6_of(g)?, "a": a, "b": b }),
                vec![format!("hypothesis rejected: {e}")],
                vec![],
                0,
                start,
            ));
        }
    };
    let direct = cliques::k_total(g)?;
    let split = decompose::count_via_split(&witness)?;
    if direct != split {
        witnesses.push(format!(
            "recombined count {split} differs from direct count {direct}"
        ));
    }
    let mut checked = 1u64;
    for &label in &witness.h.labels {
        let via_split = decompose::weight_via_split(&witness, label)?;
        let direct_w = cliques::vertex_weight(g, label)?;
        if via_split != direct_w {
            witnesses.push(format!(
                "weight of shared vertex {label}: split gives {}, direct {}",
                crate::report::rational_string(&via_split),
                crate::report::rational_string(&direct_w)
            ));
        }
        checked += 1;
    }
    Ok(finish(
        "split identity for counts and shared-vertex weights",
        serde_json::json!({ "g6": g6_of(g)?, "a": a, "b": b }),
        witnesses,
        vec![],
        checked,
        start,
    ))
}

/// Checks one edge Edge::new(u,v) for the deletion identity on `g`.
pub fn verify_edge_deletion(g: &Graph, u: usize, v: usize) -> Result<Certificate> {
    let start = Instant::now();
    let e = Edge::new(u, v)?;
    let mut witnesses = Vec::new();
    let total = cliques::k_total(g)?;
    let (rest, on_edge) = decompose::count_via_edge_deletion(g, e)?;
    if rest.clone() + on_edge.clone() != total {
        witnesses.push(format!(
            "k(G-e) + k(e;G) = {rest} + {on_edge} differs from k(G) = {total}"
        ));
    }
    Ok(finish(
        "edge-deletion counting identity",
        serde_json::json!({ "g6": g6_of(g)?, "edge": [u, v] }),
        witnesses,
        vec![],
        1,
        start,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn identities_on_samples() {
        for g in [
            families::figure1_graph(),
            families::complete(5),
            families::cycle(7).unwrap(),
            families::complete_bipartite(3, 4),
            Graph::empty(4),
        ] {
            let cert = verify_identities(&g).unwrap();
            assert!(cert.is_verified(), "witnesses: {:?}", cert.witnesses);
        }
    }

    #[test]
    fn kruskal_katona_small() {
        let cert = verify_kruskal_katona(5).unwrap();
        assert!(cert.is_verified(), "witnesses: {:?}", cert.witnesses);
        // 1 + 2 + 4 + 11 + 34 classes at n = 1..5, plus K_0
        assert_eq!(cert.classes_examined, 53);
        assert_eq!(cert.equality_cases.len(), 1);
    }

    #[test]
    fn extremal_unique_maximizer() {
        let cert = verify_extremal(6, 3).unwrap();
        assert!(cert.is_verified(), "witnesses: {:?}", cert.witnesses);
        assert_eq!(cert.classes_examined, 62);
        assert_eq!(
            cert.equality_cases,
            vec![g6_of(&families::extremal_graph(6, 3).unwrap().0).unwrap()]
        );
    }

    #[test]
    fn extremal_cycle_exceptions() {
        // n = 7, r = 2: K_3 u C_4 ties 2K_3 u K_1
        let cert = verify_extremal(7, 2).unwrap();
        assert!(cert.is_verified(), "witnesses: {:?}", cert.witnesses);
        assert_eq!(cert.equality_cases.len(), 2);
        // n = 5, r = 2: C_5 ties K_3 u K_2
        let cert = verify_extremal(5, 2).unwrap();
        assert!(cert.is_verified(), "witnesses: {:?}", cert.witnesses);
        assert_eq!(cert.equality_cases.len(), 2);
        // n = 6, r = 2: unique maximizer 2K_3
        let cert = verify_extremal(6, 2).unwrap();
        assert!(cert.is_verified());
        assert_eq!(cert.equality_cases.len(), 1);
    }

    #[test]
    fn kahn_zhao_sweeps() {
        let cert = verify_kahn_zhao(8, 3).unwrap();
        assert!(cert.is_verified(), "witnesses: {:?}", cert.witnesses);
        assert_eq!(cert.classes_examined, 6);
        assert_eq!(cert.equality_cases.len(), 0); // 6 does not divide 8
        let cert = verify_kahn_zhao(8, 2).unwrap();
        assert!(cert.is_verified(), "witnesses: {:?}", cert.witnesses);
        assert_eq!(cert.equality_cases.len(), 1); // 2C_4
        let cert = verify_kahn_zhao(6, 1).unwrap();
        assert!(cert.is_verified());
        assert_eq!(cert.classes_examined, 1); // the perfect matching
        assert_eq!(cert.equality_cases.len(), 1);
    }

    #[test]
    fn gadget_cap_sweep() {
        let cert = verify_gadget_cap(1, 3).unwrap();
        assert!(cert.is_verified(), "witnesses: {:?}", cert.witnesses);
        assert!(cert.classes_examined > 0);
        let cert = verify_gadget_cap(2, 2).unwrap();
        assert!(cert.is_verified(), "witnesses: {:?}", cert.witnesses);
    }

    #[test]
    fn matched_gadget_sweep() {
        // bound for p=2, t=1: 2^1 + k(K_4 - K_2) - k(K_3 - K_2)
        let b = matched_gadget_bound(2, 1).unwrap();
        assert_eq!(b, BigUint::from(2u32 + 12 - 6));
        let cert = verify_matched_gadget_cap(2, 1, 2).unwrap();
        assert!(cert.is_verified(), "witnesses: {:?}", cert.witnesses);
        assert!(cert.classes_examined > 0);
    }

    #[test]
    fn h_positivity_sweep() {
        let cert = verify_h_positivity(20).unwrap();
        assert!(cert.is_verified(), "witnesses: {:?}", cert.witnesses);
        assert_eq!(cert.equality_cases, vec!["r=3, s=2, p=1".to_string()]);
        assert!(cert.classes_examined > 100);
    }

    #[test]
    fn split_certificates() {
        let g = families::figure1_graph();
        let cert = verify_split(&g, &[0, 1, 2, 3], &[2, 3, 4, 5]).unwrap();
        assert!(cert.is_verified(), "witnesses: {:?}", cert.witnesses);
        assert_eq!(cert.classes_examined, 3); // count + two shared weights
        // a crossing bipartition is a refutation, not an error
        let k3 = families::complete(3);
        let cert = verify_split(&k3, &[0, 1], &[2]).unwrap();
        assert_eq!(cert.verdict, Verdict::Refuted);
    }

    #[test]
    fn edge_deletion_certificate() {
        let g = families::figure1_graph();
        let cert = verify_edge_deletion(&g, 2, 3).unwrap();
        assert!(cert.is_verified());
        assert!(verify_edge_deletion(&g, 0, 0).is_err());
    }

    #[test]
    fn certificate_serialization() {
        let cert = verify_h_positivity(4).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        assert!(json.contains("\"verdict\":\"verified\""));
        assert!(json.contains("\"classes_examined\""));
    }
}
