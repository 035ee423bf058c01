//! `r`-uniform hypergraphs and their connectivity notions.

use std::collections::HashMap;

use crate::error::GraphError;
use crate::graph::Graph;

/// An `r`-uniform hypergraph on `0..n`.
///
/// Every hyperedge is stored as a sorted vertex list and the hyperedge list is
/// kept in lexicographic order, so hyperedge indices are canonical for a given
/// edge set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        if r < 2 {
            return Err(GraphError::Uniformity(r));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            if let Some(&bad) = e.iter().find(|&&v| v >= n) {
                return Err(GraphError::VertexOutOfRange { vertex: bad, n });
            }
            let len = e.len();
            e.dedup();
            if e.len() != r || len != r {
                return Err(GraphError::WrongArity { edge: e, r });
            }
            normalized.push(e);
        }
        normalized.sort();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateHyperedge(w[0].clone()));
        }
        Ok(Self {
            n,
            r,
            edges: normalized,
        })
    }

    pub fn empty(n: usize, r: usize) -> Result<Self, GraphError> {
        Self::new(n, r, Vec::new())
    }

    /// All `r`-subsets of `0..n`.
    pub fn complete(n: usize, r: usize) -> Result<Self, GraphError> {
        Self::new(n, r, combinations(n, r))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    /// Index of the hyperedge with vertex set `e` (any order), if present.
    pub fn find_edge(&self, e: &[usize]) -> Option<usize> {
        let mut key = e.to_vec();
        key.sort_unstable();
        self.edges.binary_search(&key).ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    /// Hyperedge indices containing each vertex.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Hyperedge indices containing both `u` and `v`, for every pair covered at least once.
    pub fn pair_cover(&self) -> HashMap<(usize, usize), Vec<usize>> {
        let mut map: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            for (a, &u) in e.iter().enumerate() {
                for &v in &e[a + 1..] {
                    map.entry((u, v)).or_default().push(i);
                }
            }
        }
        map
    }

    /// The 2-shadow: `uv` is an edge iff some hyperedge contains both.
    pub fn shadow(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for e in &self.edges {
            for (a, &u) in e.iter().enumerate() {
                for &v in &e[a + 1..] {
                    g.insert_unchecked(u, v);
                }
            }
        }
        g
    }

    /// A copy with hyperedge `e` added.
    pub fn with_edge(&self, e: &[usize]) -> Result<Self, GraphError> {
        let mut edges = self.edges.clone();
        edges.push(e.to_vec());
        Self::new(self.n, self.r, edges)
    }

    /// A copy without the hyperedge at index `i`.
    pub fn without_edge(&self, i: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.remove(i);
        Self {
            n: self.n,
            r: self.r,
            edges,
        }
    }
}

/// All `r`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut c: Vec<usize> = (0..r).collect();
    loop {
        out.push(c.clone());
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if c[i] < n - r + i {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        c[i] += 1;
        for j in i + 1..r {
            c[j] = c[j - 1] + 1;
        }
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Number of components of the hypergraph on `vertices`, using the hyperedges
/// yielded by `edges` truncated to `vertices`.
fn component_count<'a>(
    n: usize,
    vertices: &[bool],
    edges: impl Iterator<Item = &'a Vec<usize>>,
) -> usize {
    let mut ds = DisjointSet::new(n);
    for e in edges {
        let mut kept = e.iter().copied().filter(|&v| vertices[v]);
        if let Some(first) = kept.next() {
            for v in kept {
                ds.union(first, v);
            }
        }
    }
    (0..n).filter(|&v| vertices[v] && ds.find(v) == v).count()
}

/// Connectivity: no partition of the vertices into two non-empty parts is avoided by
/// every hyperedge. The one-vertex hypergraph is connected; a vertex of degree zero
/// disconnects any hypergraph with at least two vertices.
pub fn is_connected_hypergraph(h: &Hypergraph) -> bool {
    h.n <= 1 || component_count(h.n, &vec![true; h.n], h.edges.iter()) == 1
}

/// Vertices `v` for which `V - {v}` splits into two non-empty parts with no hyperedge
/// meeting both. Rejects disconnected input.
pub fn hypergraph_cut_vertices(h: &Hypergraph) -> Result<Vec<usize>, GraphError> {
    if !is_connected_hypergraph(h) {
        return Err(GraphError::Disconnected);
    }
    let mut out = Vec::new();
    let mut keep = vec![true; h.n];
    for v in 0..h.n {
        keep[v] = false;
        if component_count(h.n, &keep, h.edges.iter()) >= 2 {
            out.push(v);
        }
        keep[v] = true;
    }
    Ok(out)
}

/// Indices of hyperedges whose removal disconnects `h`. Rejects disconnected input.
pub fn hypergraph_cut_hyperedges(h: &Hypergraph) -> Result<Vec<usize>, GraphError> {
    if !is_connected_hypergraph(h) {
        return Err(GraphError::Disconnected);
    }
    let all = vec![true; h.n];
    Ok((0..h.edges.len())
        .filter(|&i| {
            let rest = h.edges.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, e)| e);
            component_count(h.n, &all, rest) >= 2
        })
        .collect())
}

/// Connected with neither cut vertices nor cut hyperedges.
pub fn is_two_connected_hypergraph(h: &Hypergraph) -> bool {
    is_connected_hypergraph(h)
        && hypergraph_cut_vertices(h).is_ok_and(|c| c.is_empty())
        && hypergraph_cut_hyperedges(h).is_ok_and(|c| c.is_empty())
}
