//! Exact clique enumeration and the weight statistics built on it.
//!
//! Every nonempty clique is charged to its first vertex in a degeneracy
//! (smallest-last) order and enumerated inside that vertex's later
//! neighborhood, so the work is bounded by sum over u of 2^{d+(u)}. All
//! totals are arbitrary precision; the per-neighborhood kernels run on
//! u128 masks, which caps a single later-neighborhood at 127 vertices —
//! far beyond anything enumerable anyway.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use num::bigint::BigUint;
use num::rational::BigRational;
use num::{BigInt, One, Zero};

/// Exact clique counts by size; index `t` holds k_t(G). The empty clique is
/// counted, so `counts[0] = 1` always.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueProfile {
    counts: Vec<BigUint>,
}

impl CliqueProfile {
    fn from_counts(mut counts: Vec<BigUint>) -> CliqueProfile {
        while counts.len() > 1 && counts.last() == Some(&BigUint::zero()) {
            counts.pop();
        }
        CliqueProfile { counts }
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// k_t(G); zero beyond the clique number.
    pub fn k(&self, t: usize) -> BigUint {
        self.counts.get(t).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Clique number omega(G).
    pub fn omega(&self) -> usize {
        self.counts.len() - 1
    }

    /// k(G) including the empty clique.
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// k(G) - 1, for reports that exclude the empty clique.
    pub fn total_nonempty(&self) -> BigUint {
        self.total() - BigUint::one()
    }
}

/// Smallest-last (degeneracy) order. The i-th removed vertex is order[i];
/// every vertex has few neighbors later in the order.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n.max(1)];
    for u in 0..n {
        buckets[deg[u]].push(u);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut floor = 0;
    while order.len() < n {
        while floor < buckets.len() && buckets[floor].is_empty() {
            floor += 1;
        }
        let u = match buckets[floor].pop() {
            Some(u) if !removed[u] && deg[u] == floor => u,
            Some(_) => continue, // stale entry
            None => continue,
        };
        removed[u] = true;
        order.push(u);
        for &v in g.neighbors(u) {
            if !removed[v] {
                deg[v] -= 1;
                buckets[deg[v]].push(v);
                floor = floor.min(deg[v]);
            }
        }
    }
    order
}

/// Counts cliques of a graph presented as local adjacency masks over at most
/// 127 elements. Returns counts by size, index 0 = the empty clique.
fn count_subcliques(adj: &[u128], nodes: &mut u64) -> Vec<u128> {
    let mut counts = vec![1u128];
    let full: u128 = if adj.len() == 128 {
        !0
    } else {
        (1u128 << adj.len()) - 1
    };
    rec(full, 0, adj, &mut counts, nodes);
    counts
}

fn rec(cand: u128, depth: usize, adj: &[u128], counts: &mut Vec<u128>, nodes: &mut u64) {
    let mut c = cand;
    while c != 0 {
        let i = c.trailing_zeros() as usize;
        c &= c - 1;
        *nodes += 1;
        if counts.len() <= depth + 1 {
            counts.push(0);
        }
        counts[depth + 1] += 1;
        let next = c & adj[i];
        if next != 0 {
            rec(next, depth + 1, adj, counts, nodes);
        }
    }
}

/// Local adjacency masks for an explicit vertex list.
fn local_masks(g: &Graph, verts: &[usize]) -> Result<Vec<u128>> {
    if verts.len() > 127 {
        return Err(Error::SizeCap {
            what: "enumeration neighborhood",
            got: verts.len(),
            cap: 127,
        });
    }
    let mut masks = vec![0u128; verts.len()];
    for (i, &u) in verts.iter().enumerate() {
        for (j, &v) in verts.iter().enumerate() {
            if i != j && g.has_edge(u, v) {
                masks[i] |= 1 << j;
            }
        }
    }
    Ok(masks)
}

/// Clique counts of the subgraph induced on `verts`, empty clique included.
fn induced_subclique_counts(g: &Graph, verts: &[usize]) -> Result<Vec<u128>> {
    let masks = local_masks(g, verts)?;
    let mut nodes = 0;
    Ok(count_subcliques(&masks, &mut nodes))
}

/// Exact clique profile plus the number of enumeration nodes visited.
pub fn clique_profile_with_work(g: &Graph) -> Result<(CliqueProfile, u64)> {
    let order = degeneracy_order(g);
    let mut pos = vec![0usize; g.n()];
    for (i, &u) in order.iter().enumerate() {
        pos[u] = i;
    }
    let mut totals: Vec<BigUint> = vec![BigUint::one()];
    let mut nodes = 0u64;
    for &u in &order {
        // later neighbors of u in the degeneracy order
        let mut later: Vec<usize> =
            g.neighbors(u).iter().copied().filter(|&v| pos[v] > pos[u]).collect();
        later.sort_unstable_by_key(|&v| pos[v]);
        let masks = local_masks(g, &later)?;
        let local = count_subcliques(&masks, &mut nodes);
        for (j, &c) in local.iter().enumerate() {
            if totals.len() <= j + 1 {
                totals.push(BigUint::zero());
            }
            totals[j + 1] += BigUint::from(c);
        }
    }
    Ok((CliqueProfile::from_counts(totals), nodes))
}

pub fn clique_profile(g: &Graph) -> Result<CliqueProfile> {
    clique_profile_with_work(g).map(|(p, _)| p)
}

/// k(G), the total number of cliques including the empty one.
pub fn k_total(g: &Graph) -> Result<BigUint> {
    Ok(clique_profile(g)?.total())
}

/// Per-size counts k_i(u;G) for i >= 1, index 0 holding k_1(u) = 1.
pub fn vertex_profile(g: &Graph, u: usize) -> Result<Vec<BigUint>> {
    if u >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: g.n() });
    }
    let nbrs = g.neighbors(u).to_vec();
    let local = induced_subclique_counts(g, &nbrs)?;
    // a clique of size j inside N(u), together with u, is an (j+1)-clique at u
    Ok(local.iter().map(|&c| BigUint::from(c)).collect())
}

/// w_G(u) = sum over i >= 1 of k_i(u;G) / i, as an exact rational.
pub fn vertex_weight(g: &Graph, u: usize) -> Result<BigRational> {
    let prof = vertex_profile(g, u)?;
    let mut w = BigRational::zero();
    for (j, c) in prof.iter().enumerate() {
        w += BigRational::new(BigInt::from(c.clone()), BigInt::from(j + 1));
    }
    Ok(w)
}

/// Clique weights for every vertex, indexed by vertex.
pub fn weight_map(g: &Graph) -> Result<Vec<BigRational>> {
    (0..g.n()).map(|u| vertex_weight(g, u)).collect()
}

/// k(e;G): cliques containing both endpoints of `e`. Equals the full clique
/// count of the common neighborhood of the endpoints.
pub fn edge_clique_count(g: &Graph, e: Edge) -> Result<BigUint> {
    if !g.has_edge(e.u(), e.v()) {
        return Err(Error::EdgeAbsent(e));
    }
    let common = sorted_intersection(g.neighbors(e.u()), g.neighbors(e.v()));
    let counts = induced_subclique_counts(g, &common)?;
    Ok(counts.iter().map(|&c| BigUint::from(c)).sum())
}

/// Members common to two sorted vertex slices.
fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Cliques containing at least one edge of `es`, computed as
/// k(G) - k(G - E*).
pub fn edges_union_clique_count(g: &Graph, es: &[Edge]) -> Result<BigUint> {
    if es.is_empty() {
        return Err(Error::InvalidParam("edge set must be nonempty".into()));
    }
    let reduced = g.delete_edges(es)?;
    Ok(k_total(g)? - k_total(&reduced)?)
}

/// All inclusion-maximal cliques via pivoting backtracking search, sorted
/// for deterministic output. For the empty graph K_0 the single maximal
/// clique is the empty set.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let rows: Vec<BitSet> = (0..n)
        .map(|u| BitSet::from_iter_cap(n, g.neighbors(u).iter().copied()))
        .collect();
    let mut out = Vec::new();
    let mut r = Vec::new();
    let p = BitSet::from_iter_cap(n, 0..n);
    let x = BitSet::new(n);
    bron_kerbosch(&rows, &mut r, p, x, &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    rows: &[BitSet],
    r: &mut Vec<usize>,
    p: BitSet,
    x: BitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    // pivot: vertex of P union X with most neighbors in P
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| rows[u].intersection(&p).len())
        .expect("P or X nonempty");
    let mut todo = p.clone();
    todo.difference_with(&rows[pivot]);
    let mut p = p;
    let mut x = x;
    for v in todo.iter() {
        r.push(v);
        let np = p.intersection(&rows[v]);
        let nx = x.intersection(&rows[v]);
        bron_kerbosch(rows, r, np, nx, out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Brute-force oracle: iterates all 2^n subsets and tests completeness.
/// Independent of the degeneracy-order engine; hard-capped at n = 25.
pub fn brute_force_profile(g: &Graph) -> Result<CliqueProfile> {
    let n = g.n();
    if n > 25 {
        return Err(Error::SizeCap {
            what: "brute-force vertex count",
            got: n,
            cap: 25,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    let total = 1usize << n;
    // is_clique[mask] packed as bits
    let mut is_clique = vec![0u64; total.div_ceil(64)];
    is_clique[0] |= 1; // empty set
    let mut counts = vec![BigUint::zero(); n + 1];
    counts[0] = BigUint::one();
    let mut raw = vec![0u64; n + 1];
    for mask in 1..total {
        let v = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
        let rest = mask & !(1 << v);
        let rest_clique = is_clique[rest / 64] >> (rest % 64) & 1 == 1;
        if rest_clique && rest as u32 & !adj[v] == 0 {
            is_clique[mask / 64] |= 1 << (mask % 64);
            raw[mask.count_ones() as usize] += 1;
        }
    }
    for (t, &c) in raw.iter().enumerate() {
        if t > 0 {
            counts[t] = BigUint::from(c);
        }
    }
    Ok(CliqueProfile::from_counts(counts))
}
