//! Exact longest paths and cycles in small graphs.
//!
//! Orders count vertices: a path on `k` vertices has order `k`. All searches are
//! exhaustive depth-first searches pruned by the number of unvisited vertices
//! still reachable from the current endpoint.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::graph::Graph;

struct Dfs<'a> {
    g: &'a Graph,
    visited: FixedBitSet,
    /// Vertices the walk may use.
    allowed: FixedBitSet,
    path: Vec<usize>,
    best: Vec<usize>,
    scratch: FixedBitSet,
    queue: VecDeque<usize>,
}

impl<'a> Dfs<'a> {
    fn new(g: &'a Graph, allowed: FixedBitSet) -> Self {
        let n = g.n();
        Self {
            g,
            visited: FixedBitSet::with_capacity(n),
            allowed,
            path: Vec::new(),
            best: Vec::new(),
            scratch: FixedBitSet::with_capacity(n),
            queue: VecDeque::new(),
        }
    }

    /// Number of unvisited allowed vertices reachable from `from` through unvisited allowed vertices.
    fn reachable(&mut self, from: usize) -> usize {
        self.scratch.clear();
        self.queue.clear();
        self.queue.push_back(from);
        let mut count = 0;
        while let Some(u) = self.queue.pop_front() {
            for w in self.g.neighbors(u) {
                if self.allowed.contains(w) && !self.visited.contains(w) && !self.scratch.contains(w) {
                    self.scratch.insert(w);
                    count += 1;
                    self.queue.push_back(w);
                }
            }
        }
        count
    }

    fn push(&mut self, v: usize) {
        self.visited.insert(v);
        self.path.push(v);
    }

    fn pop(&mut self) {
        let v = self.path.pop().expect("non-empty path");
        self.visited.set(v, false);
    }

    /// Longest path extending the current one; stops early once `cap` vertices are reached.
    fn longest_open(&mut self, cap: usize) {
        if self.path.len() > self.best.len() {
            self.best = self.path.clone();
        }
        if self.best.len() >= cap {
            return;
        }
        let last = *self.path.last().unwrap();
        if self.path.len() + self.reachable(last) <= self.best.len() {
            return;
        }
        let next: Vec<usize> = self.g.neighbors(last).collect();
        for w in next {
            if self.allowed.contains(w) && !self.visited.contains(w) {
                self.push(w);
                self.longest_open(cap);
                self.pop();
                if self.best.len() >= cap {
                    return;
                }
            }
        }
    }

    /// Longest cycle through `path[0]` using only allowed vertices.
    fn longest_closed(&mut self, cap: usize) {
        let first = self.path[0];
        let last = *self.path.last().unwrap();
        if self.path.len() >= 3 && self.path.len() > self.best.len() && self.g.has_edge(first, last) {
            self.best = self.path.clone();
        }
        if self.best.len() >= cap {
            return;
        }
        if self.path.len() + self.reachable(last) <= self.best.len() {
            return;
        }
        let next: Vec<usize> = self.g.neighbors(last).collect();
        for w in next {
            if self.allowed.contains(w) && !self.visited.contains(w) {
                self.push(w);
                self.longest_closed(cap);
                self.pop();
                if self.best.len() >= cap {
                    return;
                }
            }
        }
    }

    /// Longest path from the current walk to `target`, which must be its last vertex.
    fn longest_to(&mut self, target: usize, cap: usize) {
        let last = *self.path.last().unwrap();
        if last == target {
            if self.path.len() > self.best.len() {
                self.best = self.path.clone();
            }
            return;
        }
        if self.best.len() >= cap {
            return;
        }
        let reach = self.reachable(last);
        if !self.scratch.contains(target) || self.path.len() + reach <= self.best.len() {
            return;
        }
        let next: Vec<usize> = self.g.neighbors(last).collect();
        for w in next {
            if self.allowed.contains(w) && !self.visited.contains(w) {
                self.push(w);
                self.longest_to(target, cap);
                self.pop();
                if self.best.len() >= cap {
                    return;
                }
            }
        }
    }
}

fn all_vertices(n: usize) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    s.insert_range(..);
    s
}

/// A longest path, as a vertex sequence (empty only for the empty graph).
pub fn longest_path(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut best: Vec<usize> = Vec::new();
    for comp in g.components() {
        if comp.len() <= best.len() {
            continue;
        }
        let mut allowed = FixedBitSet::with_capacity(n);
        comp.iter().for_each(|&v| allowed.insert(v));
        let mut dfs = Dfs::new(g, allowed);
        dfs.best = best.clone();
        for &s in &comp {
            dfs.push(s);
            dfs.longest_open(comp.len());
            dfs.pop();
            if dfs.best.len() == comp.len() {
                break;
            }
        }
        best = dfs.best;
    }
    best
}

pub fn longest_path_order(g: &Graph) -> usize {
    longest_path(g).len()
}

/// A longest cycle as a vertex sequence starting at its smallest vertex; empty if acyclic.
pub fn longest_cycle(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut best: Vec<usize> = Vec::new();
    for s in 0..n {
        if n - s <= best.len() {
            break;
        }
        let mut allowed = all_vertices(n);
        allowed.set_range(..s, false);
        let mut dfs = Dfs::new(g, allowed);
        dfs.best = best.clone();
        dfs.push(s);
        dfs.longest_closed(n - s);
        best = dfs.best;
    }
    best
}

pub fn longest_cycle_order(g: &Graph) -> usize {
    longest_cycle(g).len()
}

/// A longest path starting at `v`.
pub fn longest_path_from(g: &Graph, v: usize) -> Vec<usize> {
    let mut dfs = Dfs::new(g, all_vertices(g.n()));
    dfs.push(v);
    dfs.longest_open(g.n());
    dfs.best
}

/// A longest `x`-`y` path, or `None` if `x` and `y` lie in different components.
pub fn longest_path_between(g: &Graph, x: usize, y: usize) -> Option<Vec<usize>> {
    if x == y {
        return Some(vec![x]);
    }
    let mut dfs = Dfs::new(g, all_vertices(g.n()));
    dfs.push(x);
    dfs.longest_to(y, g.n());
    (!dfs.best.is_empty()).then_some(dfs.best)
}

/// Maximum number of internally vertex-disjoint `u`-`v` paths, capped at `cap`.
///
/// Computed as a unit-capacity max flow on the vertex-split digraph, independently
/// of the block decomposition.
pub fn internally_disjoint_paths(g: &Graph, u: usize, v: usize, cap: usize) -> usize {
    let n = g.n();
    // Node 2x is x_in, 2x+1 is x_out; internal vertices have capacity one.
    let nodes = 2 * n;
    let mut capacity = vec![vec![0i32; nodes]; nodes];
    for x in 0..n {
        capacity[2 * x][2 * x + 1] = if x == u || x == v { cap as i32 } else { 1 };
    }
    for (a, b) in g.edges() {
        capacity[2 * a + 1][2 * b] = 1;
        capacity[2 * b + 1][2 * a] = 1;
    }
    if g.has_edge(u, v) {
        // A direct edge is one path; count it once.
        capacity[2 * v + 1][2 * u] = 0;
    }
    let source = 2 * u + 1;
    let sink = 2 * v;
    let mut flow = 0;
    while flow < cap {
        let mut parent = vec![usize::MAX; nodes];
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            for b in 0..nodes {
                if parent[b] == usize::MAX && capacity[a][b] > 0 {
                    parent[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut b = sink;
        while b != source {
            let a = parent[b];
            capacity[a][b] -= 1;
            capacity[b][a] += 1;
            b = a;
        }
        flow += 1;
    }
    flow
}
