//! Immutable simple-graph values with sorted adjacency lists, so memory
//! stays proportional to n + m even at large sparse orders.
//!
//! Vertices are `0..n` internally; one-based labels only appear
//! at the I/O boundary. Every edit returns a new value, so graphs can be
//! shared freely across workers.

use crate::error::{Error, Result};

/// Undirected edge, stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes endpoint order; rejects self-loops.
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// Inserts into a sorted list; returns false when already present.
fn insert_sorted(list: &mut Vec<usize>, v: usize) -> bool {
    match list.binary_search(&v) {
        Ok(_) => false,
        Err(i) => {
            list.insert(i, v);
            true
        }
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices; `n = 0` gives K_0.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse silently;
    /// out-of-range endpoints and self-loops are rejected.
    pub fn build(n: usize, edges: &[Edge]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for e in edges {
            if e.v >= n {
                return Err(Error::VertexOutOfRange { vertex: e.v, n });
            }
            if insert_sorted(&mut g.adj[e.u], e.v) {
                insert_sorted(&mut g.adj[e.v], e.u);
                g.m += 1;
            }
        }
        Ok(g)
    }

    /// Convenience constructor from `(u, v)` pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        let edges = pairs
            .iter()
            .map(|&(a, b)| Edge::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Graph::build(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Open neighborhood N(u) as a sorted vertex slice.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if v > u {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    /// Subgraph induced on `set`, relabeled by increasing original index.
    pub fn induced(&self, set: &[usize]) -> Result<Graph> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &v in &sorted {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let mut g = Graph::empty(sorted.len());
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i].push(j);
                    g.adj[j].push(i);
                    g.m += 1;
                }
            }
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.adj[u].push(v);
                    g.adj[v].push(u);
                    g.m += 1;
                }
            }
        }
        g
    }

    /// Removes an edge; the vertex set is retained.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::EdgeAbsent(e));
        }
        let mut g = self.clone();
        g.remove_half(e.u, e.v);
        g.remove_half(e.v, e.u);
        g.m -= 1;
        Ok(g)
    }

    fn remove_half(&mut self, u: usize, v: usize) {
        let i = self.adj[u].binary_search(&v).expect("edge present");
        self.adj[u].remove(i);
    }

    /// Removes a set of edges; all must be present.
    pub fn delete_edges(&self, es: &[Edge]) -> Result<Graph> {
        let mut g = self.clone();
        for &e in es {
            if !g.has_edge(e.u, e.v) {
                return Err(Error::EdgeAbsent(e));
            }
            g.remove_half(e.u, e.v);
            g.remove_half(e.v, e.u);
            g.m -= 1;
        }
        Ok(g)
    }

    pub fn add_edge(&self, e: Edge) -> Result<Graph> {
        if e.v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: e.v, n: self.n });
        }
        if self.has_edge(e.u, e.v) {
            return Err(Error::EdgePresent(e));
        }
        let mut g = self.clone();
        insert_sorted(&mut g.adj[e.u], e.v);
        insert_sorted(&mut g.adj[e.v], e.u);
        g.m += 1;
        Ok(g)
    }

    /// In-place edge insert for decoders and family constructors; assumes
    /// `u != v`, both in range, edge absent.
    pub(crate) fn insert_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        let inserted = insert_sorted(&mut self.adj[u], v);
        debug_assert!(inserted);
        insert_sorted(&mut self.adj[v], u);
        self.m += 1;
    }

    /// Disjoint union; vertices of `other` are relabeled after `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for u in 0..self.n {
            g.adj[u] = self.adj[u].clone();
        }
        for u in 0..other.n {
            g.adj[self.n + u] = other.adj[u].iter().map(|&v| self.n + v).collect();
        }
        g.m = self.m + other.m;
        g
    }

    /// Relabels this graph by a permutation: vertex `u` becomes `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if v > u {
                    let (a, b) = (perm[u], perm[v]);
                    insert_sorted(&mut g.adj[a], b);
                    insert_sorted(&mut g.adj[b], a);
                }
            }
        }
        g.m = self.m;
        g
    }

    /// Checks the structural invariants; used by tests and after decoding.
    pub fn check_invariants(&self) -> bool {
        let mut m = 0;
        for u in 0..self.n {
            let row = &self.adj[u];
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false; // unsorted or duplicated
            }
            if row.binary_search(&u).is_ok() || row.iter().any(|&v| v >= self.n) {
                return false;
            }
            if row.iter().any(|&v| self.adj[v].binary_search(&u).is_err()) {
                return false;
            }
            m += row.len();
        }
        m % 2 == 0 && m / 2 == self.m
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

/// A graph carrying external vertex labels, as in `G[{3,4,5,6}]` written with one-based labels.
/// `labels[i]` is the external name of internal vertex `i`; labels are
/// strictly increasing.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<usize>,
}

impl LabeledGraph {
    pub fn new(graph: Graph, labels: Vec<usize>) -> Result<LabeledGraph> {
        if labels.len() != graph.n() {
            return Err(Error::InvalidParam(
                "label count must match vertex count".into(),
            ));
        }
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParam(
                "labels must be strictly increasing".into(),
            ));
        }
        Ok(LabeledGraph { graph, labels })
    }

    /// Labeled induced subgraph, labels carried from the parent namespace.
    pub fn induced_labeled(g: &Graph, set: &[usize]) -> Result<LabeledGraph> {
        let mut labels = set.to_vec();
        labels.sort_unstable();
        labels.dedup();
        let graph = g.induced(&labels)?;
        Ok(LabeledGraph { graph, labels })
    }

    pub fn position_of(&self, label: usize) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }
}

/// Union on shared external labels. Requires the two graphs to agree on the
/// adjacency of every shared label pair; the result's labels are the sorted
/// union.
pub fn union_on_labels(a: &LabeledGraph, b: &LabeledGraph) -> Result<LabeledGraph> {
    let mut labels: Vec<usize> = a.labels.iter().chain(&b.labels).copied().collect();
    labels.sort_unstable();
    labels.dedup();
    // agreement check on shared labels
    for (i, &x) in a.labels.iter().enumerate() {
        for (j, &y) in a.labels.iter().enumerate().skip(i + 1) {
            if let (Some(bi), Some(bj)) = (b.position_of(x), b.position_of(y)) {
                if a.graph.has_edge(i, j) != b.graph.has_edge(bi, bj) {
                    return Err(Error::UnionConflict(x, y));
                }
            }
        }
    }
    let mut g = Graph::empty(labels.len());
    let pos = |l: usize| labels.binary_search(&l).unwrap();
    for part in [a, b] {
        for e in part.graph.edges() {
            let (x, y) = (pos(part.labels[e.u()]), pos(part.labels[e.v()]));
            if insert_sorted(&mut g.adj[x], y) {
                insert_sorted(&mut g.adj[y], x);
                g.m += 1;
            }
        }
    }
    Ok(LabeledGraph { graph: g, labels })
}

/// Plain edge-list text format: first line `n m`, then one `u v` pair per
/// line, 0-based.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        s.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    s
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::EdgeList("missing header line".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::EdgeList("bad vertex count".into()))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::EdgeList("bad edge count".into()))?;
    let mut pairs = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("bad edge line: {line:?}")))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("bad edge line: {line:?}")))?;
        pairs.push((u, v));
    }
    let g = Graph::from_pairs(n, &pairs)?;
    if g.m() != m {
        return Err(Error::EdgeList(format!(
            "header claims {m} edges, found {}",
            g.m()
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_k3() {
        let g = Graph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert!(g.check_invariants());
    }

    #[test]
    fn build_k0() {
        let g = Graph::build(0, &[]).unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(g.m(), 0);
        assert!(g.check_invariants());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_pairs(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Edge::new(2, 2).is_err());
        assert!(Graph::from_pairs(3, &[(0, 5)]).is_err());
    }

    #[test]
    fn delete_and_add_are_inverse() {
        let g = Graph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let e = Edge::new(1, 2).unwrap();
        let h = g.delete_edge(e).unwrap();
        assert_eq!(h.m(), 2);
        assert_eq!(h.add_edge(e).unwrap(), g);
        assert!(h.delete_edge(e).is_err());
        assert!(g.add_edge(e).is_err());
    }

    #[test]
    fn complement_involution() {
        let g = Graph::from_pairs(5, &[(0, 1), (2, 3), (1, 4)]).unwrap();
        assert_eq!(g.complement().complement(), g);
        // complement(K_n) is edgeless
        let k4 = Graph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.complement().m(), 0);
    }

    #[test]
    fn disjoint_union_counts() {
        let k3 = Graph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let k2 = Graph::from_pairs(2, &[(0, 1)]).unwrap();
        let u = k3.disjoint_union(&k2);
        assert_eq!((u.n(), u.m()), (5, 4));
        // K_0 is the identity element
        assert_eq!(Graph::empty(0).disjoint_union(&k3), k3);
    }

    #[test]
    fn induced_relabels() {
        let g = Graph::from_pairs(5, &[(0, 2), (2, 4), (0, 4), (1, 3)]).unwrap();
        let h = g.induced(&[0, 2, 4]).unwrap();
        assert_eq!((h.n(), h.m()), (3, 3)); // triangle
        assert_eq!(g.induced(&[]).unwrap().n(), 0);
        assert!(g.induced(&[9]).is_err());
    }

    #[test]
    fn union_on_labels_rebuilds_parent() {
        let g = Graph::from_pairs(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (2, 3), (4, 5)]).unwrap();
        let a = LabeledGraph::induced_labeled(&g, &[0, 1, 2, 3]).unwrap();
        let b = LabeledGraph::induced_labeled(&g, &[2, 3, 4, 5]).unwrap();
        let u = union_on_labels(&a, &b).unwrap();
        assert_eq!(u.graph, g);
        assert_eq!(u.labels, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn union_on_labels_conflict() {
        let a = LabeledGraph::new(Graph::from_pairs(2, &[(0, 1)]).unwrap(), vec![0, 1]).unwrap();
        let b = LabeledGraph::new(Graph::empty(2), vec![0, 1]).unwrap();
        assert!(matches!(
            union_on_labels(&a, &b),
            Err(Error::UnionConflict(0, 1))
        ));
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = Graph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(from_edge_list(&text).unwrap(), g);
        assert!(from_edge_list("3 5\n0 1\n").is_err());
    }
}
