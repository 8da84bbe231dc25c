//! Canonical labeling for graphs on at most 16 vertices.
//!
//! Iterated degree/neighborhood refinement plus backtracking over the
//! remaining choices; discovered automorphisms prune sibling branches and
//! generate the automorphism group, whose order is computed with a
//! stabilizer chain. Equal canonical strings characterize isomorphism in
//! the supported range.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use std::collections::HashMap;

pub const CANON_MAX_N: usize = 16;

/// Permutation as a map `x -> perm[x]`.
type Perm = Vec<usize>;

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    /// graph6 of the canonically relabeled graph.
    pub graph6: String,
    /// Map from original vertex to canonical label.
    pub labeling: Vec<usize>,
    pub automorphism_group_size: u64,
    /// Orbit representative (smallest member) per vertex.
    pub orbits: Vec<usize>,
    /// Generating set of the automorphism group discovered by the search.
    pub generators: Vec<Vec<usize>>,
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANON_MAX_N {
        return Err(Error::SizeCap {
            what: "canonical-form vertex count",
            got: n,
            cap: CANON_MAX_N,
        });
    }
    if n == 0 {
        return Ok(CanonicalForm {
            graph6: graph6::encode(g)?,
            labeling: Vec::new(),
            automorphism_group_size: 1,
            orbits: Vec::new(),
            generators: Vec::new(),
        });
    }
    let adj: Vec<u16> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u16, |m, &v| m | 1 << v))
        .collect();
    let mut search = Search {
        adj: &adj,
        n,
        best_key: None,
        best_labeling: Vec::new(),
        auts: Vec::new(),
    };
    let mut cells = vec![(0..n).collect::<Vec<usize>>()];
    refine(&adj, &mut cells);
    search.descend(cells, &mut Vec::new());

    let labeling = search.best_labeling.clone();
    let canon = g.relabel(&labeling);
    let order = group_order(n, &search.auts);
    let orbits = orbits_from_generators(n, &search.auts);
    Ok(CanonicalForm {
        graph6: graph6::encode(&canon)?,
        labeling,
        automorphism_group_size: order,
        orbits,
        generators: search.auts,
    })
}

/// Canonical graph6 string only.
pub fn canonical_g6(g: &Graph) -> Result<String> {
    Ok(canonical_form(g)?.graph6)
}

struct Search<'a> {
    adj: &'a [u16],
    n: usize,
    best_key: Option<u128>,
    best_labeling: Vec<usize>,
    auts: Vec<Perm>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>, fixed: &mut Vec<usize>) {
        if cells.iter().all(|c| c.len() == 1) {
            self.leaf(&cells);
            return;
        }
        let target = cells
            .iter()
            .position(|c| c.len() > 1)
            .expect("non-discrete partition has a splittable cell");
        let candidates = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &candidates {
            if self.pruned_by_automorphism(v, &tried, fixed) {
                tried.push(v);
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, cell) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&x| x != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            refine(self.adj, &mut child);
            fixed.push(v);
            self.descend(child, fixed);
            fixed.pop();
            tried.push(v);
        }
    }

    fn pruned_by_automorphism(&self, v: usize, tried: &[usize], fixed: &[usize]) -> bool {
        self.auts.iter().any(|a| {
            fixed.iter().all(|&x| a[x] == x) && tried.iter().any(|&t| a[t] == v)
        })
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let mut labeling = vec![0usize; self.n];
        for (label, cell) in cells.iter().enumerate() {
            labeling[cell[0]] = label;
        }
        let key = adjacency_key(self.adj, &labeling, self.n);
        match self.best_key {
            None => {
                self.best_key = Some(key);
                self.best_labeling = labeling;
            }
            Some(best) => {
                if key > best {
                    // larger key wins; earlier automorphisms stay valid
                    self.best_key = Some(key);
                    self.best_labeling = labeling;
                } else if key == best {
                    // two labelings with the same image give an automorphism
                    let mut inv_best = vec![0usize; self.n];
                    for (x, &l) in self.best_labeling.iter().enumerate() {
                        inv_best[l] = x;
                    }
                    let aut: Perm = (0..self.n).map(|x| inv_best[labeling[x]]).collect();
                    if aut.iter().enumerate().any(|(x, &y)| x != y) {
                        self.auts.push(aut);
                    }
                }
            }
        }
    }
}

/// Upper-triangle adjacency bits of the relabeled graph, packed so that
/// lexicographically larger keys correspond to denser low-label prefixes.
fn adjacency_key(adj: &[u16], labeling: &[usize], n: usize) -> u128 {
    let mut inv = vec![0usize; n];
    for (x, &l) in labeling.iter().enumerate() {
        inv[l] = x;
    }
    let mut key = 0u128;
    for b in 1..n {
        for a in 0..b {
            key <<= 1;
            if adj[inv[a]] >> inv[b] & 1 == 1 {
                key |= 1;
            }
        }
    }
    key
}

/// Equitable refinement: split cells by the multiset of neighbor counts per
/// cell until a fixpoint. Splitting order depends only on invariants, so
/// the result is isomorphism-invariant.
fn refine(adj: &[u16], cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u16> = cells
            .iter()
            .map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v))
            .collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: Vec<(Vec<u32>, Vec<usize>)> = Vec::new();
            for &v in cell {
                let sig: Vec<u32> = masks
                    .iter()
                    .map(|&m| (adj[v] & m).count_ones())
                    .collect();
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, members)) => members.push(v),
                    None => groups.push((sig, vec![v])),
                }
            }
            groups.sort_by(|a, b| a.0.cmp(&b.0));
            if groups.len() > 1 {
                changed = true;
            }
            for (_, members) in groups {
                next.push(members);
            }
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

fn compose(f: &Perm, g: &Perm) -> Perm {
    g.iter().map(|&x| f[x]).collect()
}

fn inverse(f: &Perm) -> Perm {
    let mut inv = vec![0usize; f.len()];
    for (x, &y) in f.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

fn is_identity(f: &Perm) -> bool {
    f.iter().enumerate().all(|(x, &y)| x == y)
}

/// Order of the permutation group generated by `gens`, via a
/// Schreier-Sims stabilizer chain. Level i's orbit is computed under every
/// generator fixing the base points of levels < i; missing Schreier
/// residues are inserted until the chain closes.
pub fn group_order(n: usize, gens: &[Perm]) -> u64 {
    let mut base: Vec<usize> = Vec::new();
    let mut level_gens: Vec<Vec<Perm>> = Vec::new();
    for g in gens {
        insert_generator(&mut base, &mut level_gens, g.clone());
    }
    loop {
        let transversals = build_transversals(n, &base, &level_gens);
        match missing_residue(&base, &level_gens, &transversals) {
            Some(residue) => insert_generator(&mut base, &mut level_gens, residue),
            None => return transversals.iter().map(|t| t.len() as u64).product(),
        }
    }
}

/// Files a non-identity generator at the deepest level whose earlier base
/// points it all fixes, extending the base when it fixes every point.
fn insert_generator(base: &mut Vec<usize>, level_gens: &mut Vec<Vec<Perm>>, g: Perm) {
    if is_identity(&g) {
        return;
    }
    let level = base
        .iter()
        .position(|&b| g[b] != b)
        .unwrap_or_else(|| {
            let point = g
                .iter()
                .enumerate()
                .find(|&(x, &y)| x != y)
                .map(|(x, _)| x)
                .expect("non-identity perm moves a point");
            base.push(point);
            level_gens.push(Vec::new());
            base.len() - 1
        });
    level_gens[level].push(g);
}

/// transversals[i][x] maps base[i] to x, built from the generators at
/// levels >= i (exactly those fixing the earlier base points).
fn build_transversals(
    n: usize,
    base: &[usize],
    level_gens: &[Vec<Perm>],
) -> Vec<HashMap<usize, Perm>> {
    base.iter()
        .enumerate()
        .map(|(i, &point)| {
            let mut transversal: HashMap<usize, Perm> = HashMap::new();
            transversal.insert(point, (0..n).collect());
            let mut queue = vec![point];
            while let Some(x) = queue.pop() {
                let tx = transversal[&x].clone();
                for g in level_gens[i..].iter().flatten() {
                    let y = g[x];
                    if !transversal.contains_key(&y) {
                        transversal.insert(y, compose(g, &tx));
                        queue.push(y);
                    }
                }
            }
            transversal
        })
        .collect()
}

/// First Schreier generator that fails to sift through the chain, reduced
/// to its residue; None when the chain is closed.
fn missing_residue(
    base: &[usize],
    level_gens: &[Vec<Perm>],
    transversals: &[HashMap<usize, Perm>],
) -> Option<Perm> {
    for i in 0..base.len() {
        for tx in transversals[i].values() {
            for g in level_gens[i..].iter().flatten() {
                let schreier = {
                    let gx = compose(g, tx);
                    let ty = &transversals[i][&gx[base[i]]];
                    compose(&inverse(ty), &gx)
                };
                let mut h = schreier;
                let mut sifted = true;
                for (j, t) in transversals.iter().enumerate().skip(i + 1) {
                    match t.get(&h[base[j]]) {
                        Some(tj) => h = compose(&inverse(tj), &h),
                        None => {
                            sifted = false;
                            break;
                        }
                    }
                }
                if !sifted || !is_identity(&h) {
                    return Some(h);
                }
            }
        }
    }
    None
}

/// Vertex orbits under the group generated by `gens`: smallest orbit member
/// per vertex.
pub fn orbits_from_generators(n: usize, gens: &[Perm]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
            r
        } else {
            x
        }
    }
    for g in gens {
        for x in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g[x]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use rand::prelude::*;

    #[test]
    fn permutation_invariance() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=10);
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        pairs.push((u, v));
                    }
                }
            }
            let g = Graph::from_pairs(n, &pairs).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm);
            assert_eq!(
                canonical_g6(&g).unwrap(),
                canonical_g6(&h).unwrap(),
                "relabeling changed the canonical form"
            );
        }
    }

    #[test]
    fn known_automorphism_groups() {
        let c5 = families::cycle(5).unwrap();
        assert_eq!(canonical_form(&c5).unwrap().automorphism_group_size, 10);
        let k4 = families::complete(4);
        assert_eq!(canonical_form(&k4).unwrap().automorphism_group_size, 24);
        let p3 = families::path(3);
        assert_eq!(canonical_form(&p3).unwrap().automorphism_group_size, 2);
        let e5 = Graph::empty(5);
        assert_eq!(canonical_form(&e5).unwrap().automorphism_group_size, 120);
        let k33 = families::complete_bipartite(3, 3);
        assert_eq!(canonical_form(&k33).unwrap().automorphism_group_size, 72);
    }

    #[test]
    fn aut_size_matches_brute_force() {
        // oracle: count permutations fixing the edge set, n <= 6
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..40 {
            let n = rng.gen_range(1..=6);
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        pairs.push((u, v));
                    }
                }
            }
            let g = Graph::from_pairs(n, &pairs).unwrap();
            let mut count = 0u64;
            let mut perm: Vec<usize> = (0..n).collect();
            permute_all(&mut perm, 0, &g, &mut count);
            assert_eq!(
                canonical_form(&g).unwrap().automorphism_group_size,
                count,
                "graph {:?}",
                g
            );
        }
    }

    fn permute_all(perm: &mut Vec<usize>, k: usize, g: &Graph, count: &mut u64) {
        let n = perm.len();
        if k == n {
            let is_aut = (0..n).all(|u| {
                (u + 1..n).all(|v| g.has_edge(u, v) == g.has_edge(perm[u], perm[v]))
            });
            *count += is_aut as u64;
            return;
        }
        for i in k..n {
            perm.swap(k, i);
            permute_all(perm, k + 1, g, count);
            perm.swap(k, i);
        }
    }

    #[test]
    fn k4_minus_edge_single_class() {
        let g = families::complete_minus_matching(4, 1).unwrap();
        let base = canonical_g6(&g).unwrap();
        let mut rng = StdRng::seed_from_u64(1);
        for _ in 0..20 {
            let mut perm: Vec<usize> = (0..4).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_g6(&g.relabel(&perm)).unwrap(), base);
        }
    }

    #[test]
    fn size_cap_is_hard() {
        assert!(canonical_form(&Graph::empty(17)).is_err());
        assert_eq!(canonical_form(&Graph::empty(0)).unwrap().automorphism_group_size, 1);
    }
}

