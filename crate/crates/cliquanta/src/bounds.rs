//! Closed-form bounds and inequality machinery in exact arithmetic: the
//! colex (Kruskal-Katona) counts, the per-vertex weight cap, the maximum
//! clique count at bounded degree, the independent-set comparison for
//! regular graphs, and the h(s,p,r) positivity region.

use crate::cliques;
use crate::error::{Error, Result};
use crate::families::{self, ColexSpec};
use crate::graph::Graph;
use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::Serialize;

/// Result of comparing an observed quantity against a bound. Values are
/// exact rationals rendered as strings in JSON.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub bound_name: String,
    pub params: serde_json::Value,
    #[serde(serialize_with = "crate::report::serialize_rational")]
    pub bound: BigRational,
    #[serde(serialize_with = "crate::report::serialize_rational")]
    pub observed: BigRational,
    #[serde(serialize_with = "crate::report::serialize_rational")]
    pub slack: BigRational,
    pub tight: bool,
}

impl BoundReport {
    fn new(
        name: &str,
        params: serde_json::Value,
        bound: BigRational,
        observed: BigRational,
    ) -> BoundReport {
        let slack = &bound - &observed;
        BoundReport {
            bound_name: name.to_string(),
            params,
            tight: slack.is_zero(),
            bound,
            observed,
            slack,
        }
    }

    pub fn holds(&self) -> bool {
        !self.slack.is_negative()
    }
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

/// k_t of the colex graph C(n,m): the Kruskal-Katona upper bound on k_t
/// for any graph with n vertices and m edges.
pub fn kruskal_katona_bound(n: usize, m: usize, t: usize) -> Result<BigUint> {
    let spec = ColexSpec::new(n, m)?;
    let profile = cliques::clique_profile(&families::colex_graph(&spec))?;
    Ok(profile.k(t))
}

/// (2^{r+1} - 1) / (r+1): the maximum clique weight of a degree-r vertex,
/// attained exactly when the neighborhood induces K_r.
pub fn vertex_weight_cap(r: usize) -> Result<BigRational> {
    if r == 0 {
        return Err(Error::InvalidParam("weight cap needs r >= 1".into()));
    }
    Ok(BigRational::new(pow2(r + 1) - 1, BigInt::from(r + 1)))
}

/// a(2^{r+1} - 1) + 2^b with n = a(r+1) + b: the maximum clique count
/// among graphs of order n with maximum degree at most r.
pub fn cutler_radcliffe_bound(n: usize, r: usize) -> Result<BigUint> {
    if r == 0 {
        return Err(Error::InvalidParam("bound needs r >= 1".into()));
    }
    let a = n / (r + 1);
    let b = n % (r + 1);
    let val: BigInt = BigInt::from(a) * (pow2(r + 1) - 1) + pow2(b);
    Ok(val.to_biguint().expect("bound is positive"))
}

/// i(G): the number of independent sets (empty set included), computed as
/// the clique count of the complement.
pub fn independence_count(g: &Graph) -> Result<BigUint> {
    cliques::k_total(&g.complement())
}

/// Exact comparison i(G)^{2d} <= (2^{d+1} - 1)^n for a d-regular graph,
/// cross-multiplied so no roots are taken.
pub fn kahn_zhao_check(g: &Graph) -> Result<BoundReport> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParam("empty graph has no degree".into()));
    }
    let d = g.degree(0);
    for v in 1..n {
        if g.degree(v) != d {
            return Err(Error::NotRegular {
                u: 0,
                du: d,
                v,
                dv: g.degree(v),
            });
        }
    }
    if d == 0 {
        return Err(Error::InvalidParam("regularity degree must be >= 1".into()));
    }
    let i = independence_count(g)?;
    let observed = num::pow::pow(BigInt::from(i), 2 * d);
    let bound = num::pow::pow(pow2(d + 1) - 1, n);
    Ok(BoundReport::new(
        "kahn-zhao",
        serde_json::json!({ "n": n, "d": d }),
        BigRational::from(bound),
        BigRational::from(observed),
    ))
}

/// Parameter triple for the h positivity lemma.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HParams {
    pub r: usize,
    pub s: usize,
    pub p: usize,
}

/// The maximum-weight value of the colex graph C(r+1, C(r,2)+p+1):
/// (2^r - 1)/r + (2^{p+2} - 1)/(p+2) - (2^{p+1} - 1)/(p+1).
pub fn colex_weight_formula(r: usize, p: usize) -> BigRational {
    BigRational::new(pow2(r) - 1, BigInt::from(r))
        + BigRational::new(pow2(p + 2) - 1, BigInt::from(p + 2))
        - BigRational::new(pow2(p + 1) - 1, BigInt::from(p + 1))
}

/// h(s,p,r) = 2^{r+1} + 2^s - 1 - (r+1+s) * colex_weight_formula(r,p).
pub fn h_function(params: HParams) -> Result<BigRational> {
    let HParams { r, s, p } = params;
    if r < 3 || s > r {
        return Err(Error::InvalidParam(format!(
            "h needs r >= 3 and 0 <= s <= r, got r={r}, s={s}"
        )));
    }
    let lead = BigRational::from(pow2(r + 1) + pow2(s) - 1);
    Ok(lead - BigRational::from(BigInt::from(r + 1 + s)) * colex_weight_formula(r, p))
}

/// True iff (r,s,p) lies in the positivity region: one of the four case
/// ranges, minus the single boundary-equality point (3,2,1). The real
/// bound 2r/3 of case 1 is read as the integer cap floor(2r/3).
pub fn lemma31_region(r: usize, s: usize, p: usize) -> bool {
    if r < 3 || s > r {
        return false;
    }
    if (r, s, p) == (3, 2, 1) {
        return false;
    }
    match r {
        3 => p <= 1,
        4..=6 => p <= r - 3,
        7..=11 => p <= r - 4,
        _ => p <= 2 * r / 3,
    }
}

/// The colex-argument p used by the piecewise weight threshold for each
/// r-range. Case 1's real exponent 2r/3 is rounded up, matching the
/// integrality fix used alongside the colex comparison.
fn threshold_p(r: usize) -> usize {
    match r {
        3 => 1,
        4..=6 => r - 3,
        7..=11 => r - 4,
        _ => (2 * r).div_ceil(3),
    }
}

/// The piecewise weight threshold and the edge-deficit cap used by the
/// degree-r positivity assertions, for a given r >= 3.
pub fn assertion_thresholds(r: usize) -> Result<(BigRational, usize)> {
    if r < 3 {
        return Err(Error::InvalidParam(format!(
            "thresholds need r >= 3, got {r}"
        )));
    }
    let threshold = colex_weight_formula(r, threshold_p(r));
    let p_cap = match r {
        3 => 0,
        4..=6 => 1,
        7..=11 => 2,
        _ => r / 3 - 1,
    };
    Ok((threshold, p_cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use num::BigUint;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn kk_bound_examples() {
        // colex(5,7) has 4 triangles (those of its K_4)
        assert_eq!(kruskal_katona_bound(5, 7, 3).unwrap(), BigUint::from(4u32));
        // complete graph: C(n,t)
        assert_eq!(kruskal_katona_bound(6, 15, 3).unwrap(), BigUint::from(20u32));
        assert_eq!(kruskal_katona_bound(6, 0, 2).unwrap(), BigUint::zero());
        assert!(kruskal_katona_bound(4, 10, 2).is_err());
    }

    #[test]
    fn weight_cap_values() {
        assert_eq!(vertex_weight_cap(1).unwrap(), rat(3, 2));
        assert_eq!(vertex_weight_cap(2).unwrap(), rat(7, 3));
        assert_eq!(vertex_weight_cap(4).unwrap(), rat(31, 5));
        assert!(vertex_weight_cap(0).is_err());
    }

    #[test]
    fn cr_bound_values() {
        assert_eq!(cutler_radcliffe_bound(7, 2).unwrap(), BigUint::from(16u32));
        assert_eq!(cutler_radcliffe_bound(5, 4).unwrap(), BigUint::from(32u32));
        assert_eq!(cutler_radcliffe_bound(10, 4).unwrap(), BigUint::from(63u32));
        // cross-check against actual counts of the extremal graphs
        for (n, r) in [(7usize, 2usize), (10, 4), (9, 3), (4, 1)] {
            let (g, _) = families::extremal_graph(n, r).unwrap();
            assert_eq!(
                cliques::k_total(&g).unwrap(),
                cutler_radcliffe_bound(n, r).unwrap()
            );
        }
    }

    #[test]
    fn independence_counts() {
        assert_eq!(
            independence_count(&families::complete_bipartite(3, 3)).unwrap(),
            BigUint::from(15u32)
        );
        assert_eq!(
            independence_count(&families::complete(7)).unwrap(),
            BigUint::from(8u32)
        );
        assert_eq!(
            independence_count(&families::cycle(4).unwrap()).unwrap(),
            BigUint::from(7u32)
        );
    }

    #[test]
    fn kahn_zhao_examples() {
        let c4 = families::cycle(4).unwrap();
        let rep = kahn_zhao_check(&c4).unwrap();
        assert!(rep.holds() && rep.tight); // 7^4 vs 7^4
        let c5 = families::cycle(5).unwrap();
        let rep = kahn_zhao_check(&c5).unwrap();
        assert!(rep.holds() && !rep.tight); // 11^4 = 14641 <= 7^5 = 16807
        assert_eq!(rep.observed, BigRational::from(BigInt::from(14641)));
        assert_eq!(rep.bound, BigRational::from(BigInt::from(16807)));
        for d in 1..=8 {
            let rep = kahn_zhao_check(&families::complete_bipartite(d, d)).unwrap();
            assert!(rep.tight, "K_{{{d},{d}}} must be tight");
        }
    }

    #[test]
    fn kahn_zhao_rejects_irregular() {
        let p3 = families::path(3);
        assert!(matches!(
            kahn_zhao_check(&p3),
            Err(Error::NotRegular { .. })
        ));
        assert!(kahn_zhao_check(&Graph::empty(3)).is_err());
    }

    #[test]
    fn h_values() {
        assert_eq!(
            h_function(HParams { r: 3, s: 2, p: 1 }).unwrap(),
            BigRational::zero()
        );
        assert!(h_function(HParams { r: 12, s: 12, p: 0 })
            .unwrap()
            .is_positive());
        assert!(h_function(HParams { r: 3, s: 3, p: 0 })
            .unwrap()
            .is_positive());
        assert!(h_function(HParams { r: 2, s: 0, p: 0 }).is_err());
    }

    #[test]
    fn region_membership() {
        assert!(lemma31_region(12, 5, 8));
        assert!(!lemma31_region(3, 2, 1));
        assert!(!lemma31_region(7, 0, 4));
        assert!(lemma31_region(7, 0, 3));
        assert!(!lemma31_region(5, 6, 0)); // s > r
    }

    #[test]
    fn threshold_values() {
        let (w3, p3) = assertion_thresholds(3).unwrap();
        assert_eq!(w3, rat(19, 6));
        assert_eq!(p3, 0);
        let (_, p8) = assertion_thresholds(8).unwrap();
        assert_eq!(p8, 2);
        let (_, p15) = assertion_thresholds(15).unwrap();
        assert_eq!(p15, 4);
        let (w5, _) = assertion_thresholds(5).unwrap();
        // 4 <= r <= 6 threshold uses p = r-3
        assert_eq!(w5, colex_weight_formula(5, 2));
        assert!(assertion_thresholds(2).is_err());
    }
}
