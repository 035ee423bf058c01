//! Simple undirected graphs on the dense vertex set `0..n`.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::GraphError;

/// A simple graph with vertices `0..n`, stored as one adjacency bitset per vertex.
///
/// Edge iteration is always in lexicographic order of `(u, v)` with `u < v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![FixedBitSet::with_capacity(n); n],
            m: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if !g.add_edge(u, v)? {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.insert_unchecked(v - 1, v);
        }
        g
    }

    /// The cycle `0-1-...-(n-1)-0`; `n` must be at least 3.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Self::path(n);
        g.insert_unchecked(0, n - 1);
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn insert_unchecked(&mut self, u: usize, v: usize) -> bool {
        if self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
        true
    }

    pub(crate) fn remove_unchecked(&mut self, u: usize, v: usize) -> bool {
        if !self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
        self.m -= 1;
        true
    }

    /// Adds `uv`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        Ok(self.insert_unchecked(u, v))
    }

    /// Removes `uv`; returns `false` if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(u != v && self.remove_unchecked(u, v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    /// All edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            out.extend(self.adj[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Position of each edge in [`Graph::edges`] order.
    pub(crate) fn edge_index(&self) -> std::collections::HashMap<(usize, usize), usize> {
        self.edges()
            .into_iter()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect()
    }

    /// `G[S]` with the original labels kept: vertices outside `keep` become isolated.
    pub fn restrict(&self, keep: &FixedBitSet) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            if keep.contains(u) && keep.contains(v) {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    /// `G[S]` relabelled to `0..|S|` in increasing order of the original labels.
    pub fn induced_compact(&self, vertices: &[usize]) -> Graph {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut g = Graph::empty(sorted.len());
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_unchecked(i, j);
                }
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.adj[u].ones() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two-connectivity read off the block decomposition: `n >= 3`, connected, no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        crate::blocks::blocks(self).cut_vertices.is_empty()
    }

    /// Whether every component is a complete graph on exactly `size` vertices.
    pub fn is_disjoint_union_of_cliques(&self, size: usize) -> bool {
        self.components().iter().all(|c| {
            c.len() == size
                && c.iter()
                    .all(|&v| self.degree(v) == size.saturating_sub(1))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Number of complete subgraphs on `j` vertices.
pub fn count_cliques(g: &Graph, j: usize) -> u64 {
    match j {
        0 => 1,
        1 => g.n() as u64,
        2 => g.edge_count() as u64,
        _ => {
            let n = g.n();
            if j > n {
                return 0;
            }
            let higher: Vec<FixedBitSet> = (0..n)
                .map(|v| {
                    let mut s = g.neighbor_set(v).clone();
                    s.set_range(..v + 1, false);
                    s
                })
                .collect();
            let mut all = FixedBitSet::with_capacity(n);
            all.insert_range(..);
            extend_cliques(&higher, &all, j)
        }
    }
}

fn extend_cliques(higher: &[FixedBitSet], candidates: &FixedBitSet, remaining: usize) -> u64 {
    if remaining == 1 {
        return candidates.count_ones(..) as u64;
    }
    let mut total = 0;
    for v in candidates.ones() {
        let mut next = candidates.clone();
        next.intersect_with(&higher[v]);
        if next.count_ones(..) + 1 >= remaining {
            total += extend_cliques(higher, &next, remaining - 1);
        }
    }
    total
}

/// Vertex sets of all `j`-cliques, each sorted, in lexicographic order.
pub fn list_cliques(g: &Graph, j: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if j == 0 || j > g.n() {
        return out;
    }
    let mut current = Vec::with_capacity(j);
    fn rec(g: &Graph, j: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == j {
            out.push(current.clone());
            return;
        }
        for v in start..g.n() {
            if current.iter().all(|&u| g.has_edge(u, v)) {
                current.push(v);
                rec(g, j, v + 1, current, out);
                current.pop();
            }
        }
    }
    rec(g, j, 0, &mut current, &mut out);
    out
}
