//! Isomorph-free exhaustive generation of small graphs under a maximum
//! degree constraint, by canonical augmentation: vertices are added one at
//! a time, extensions are taken up to the parent's automorphisms, and a
//! child survives only if its new vertex sits in the orbit of the
//! canonical deletion vertex. Size caps are hard errors, never silent
//! truncation.

use crate::canon::{self, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::BTreeMap;

/// Largest order accepted when the degree bound is at most 3.
pub const ENUM_MAX_N_LOW_DEG: usize = 12;
/// Largest order accepted otherwise.
pub const ENUM_MAX_N: usize = 10;

fn check_cap(n: usize, max_deg: usize) -> Result<()> {
    let cap = if max_deg <= 3 { ENUM_MAX_N_LOW_DEG } else { ENUM_MAX_N };
    if n > cap {
        return Err(Error::SizeCap {
            what: "enumeration order",
            got: n,
            cap,
        });
    }
    Ok(())
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices with maximum degree at most `max_deg`, sorted by canonical
/// graph6 string. `max_deg >= n-1` enumerates all graphs on n vertices.
pub fn enumerate_graphs(n: usize, max_deg: usize) -> Result<Vec<Graph>> {
    check_cap(n, max_deg)?;
    if n == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    level.insert(canon::canonical_g6(&Graph::empty(1))?, Graph::empty(1));
    for size in 1..n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for parent in level.values() {
            let parent_cf = canon::canonical_form(parent)?;
            for child in extensions(parent, &parent_cf, max_deg)? {
                let cf = canon::canonical_form(&child)?;
                if accepts(&cf, size) {
                    next.entry(cf.graph6).or_insert(child);
                }
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// Candidate children of `parent`: a new last vertex joined to every
/// degree-feasible neighbor set, one set per orbit of the parent's
/// automorphism group.
fn extensions(parent: &Graph, cf: &CanonicalForm, max_deg: usize) -> Result<Vec<Graph>> {
    let k = parent.n();
    let mut feasible: u16 = 0;
    for v in 0..k {
        if parent.degree(v) < max_deg {
            feasible |= 1 << v;
        }
    }
    let mut out = Vec::new();
    for mask in 0u16..(1u16 << k) {
        if mask & !feasible != 0 || (mask.count_ones() as usize) > max_deg {
            continue;
        }
        if !is_orbit_min(mask, &cf.generators) {
            continue;
        }
        let mut child = Graph::empty(k + 1);
        for e in parent.edges() {
            child.insert_edge_unchecked(e.u(), e.v());
        }
        for v in 0..k {
            if mask >> v & 1 == 1 {
                child.insert_edge_unchecked(v, k);
            }
        }
        out.push(child);
    }
    Ok(out)
}

/// True iff `mask` is the smallest member of its orbit under the group
/// generated by `gens`, acting on subsets.
fn is_orbit_min(mask: u16, gens: &[Vec<usize>]) -> bool {
    let mut seen = vec![mask];
    let mut queue = vec![mask];
    while let Some(m) = queue.pop() {
        for g in gens {
            let mut image: u16 = 0;
            for v in 0..g.len() {
                if m >> v & 1 == 1 {
                    image |= 1 << g[v];
                }
            }
            if image < mask {
                return false;
            }
            if !seen.contains(&image) {
                seen.push(image);
                queue.push(image);
            }
        }
    }
    true
}

/// Canonical-deletion acceptance: the new vertex (the last one) must share
/// an orbit with the vertex carrying the highest canonical label.
fn accepts(cf: &CanonicalForm, new_vertex: usize) -> bool {
    let deletion_vertex = cf
        .labeling
        .iter()
        .position(|&l| l == new_vertex)
        .expect("labels are a permutation");
    cf.orbits[deletion_vertex] == cf.orbits[new_vertex]
}

/// One representative per isomorphism class of d-regular graphs on n
/// vertices. An odd n*d gives an empty stream (no such graph exists).
pub fn enumerate_regular(n: usize, d: usize) -> Result<Vec<Graph>> {
    check_cap(n, d)?;
    if n * d % 2 == 1 {
        return Ok(Vec::new());
    }
    Ok(enumerate_graphs(n, d)?
        .into_iter()
        .filter(|g| (0..g.n()).all(|v| g.degree(v) == d))
        .collect())
}
