//! Backtracking search for Berge paths and cycles.
//!
//! The search grows a sequence of defining vertices in the 2-shadow and keeps a
//! matching from consecutive vertex pairs to distinct hyperedges, repaired
//! incrementally with augmenting paths whenever a pair is appended. Vertices that
//! are interchangeable (same hyperedges up to swapping the two) are tried only in
//! increasing order, which never discards the lexicographically least embedding.

use std::collections::VecDeque;

const NONE: usize = usize::MAX;

use crate::hypergraph::Hypergraph;

/// What the cycle search must satisfy.
#[derive(Debug, Clone, Copy)]
pub(crate) struct CycleGoal {
    /// Minimum number of defining vertices.
    pub min_len: usize,
    /// Stop at the first success instead of maximizing.
    pub first: bool,
    /// Fixed first vertex; otherwise every vertex is tried as the minimum of the cycle.
    pub anchor: Option<usize>,
    /// A vertex that must lie on the cycle.
    pub through: Option<usize>,
}

pub(crate) struct Engine<'a> {
    h: &'a Hypergraph,
    n: usize,
    /// Hyperedges containing `{u, v}`, indexed by `u * n + v` for both orders.
    cover: Vec<Vec<usize>>,
    /// Shadow neighbours in increasing order.
    shadow: Vec<Vec<usize>>,
    /// Smaller vertices interchangeable with each vertex.
    twins_below: Vec<Vec<usize>>,
    seq: Vec<usize>,
    visited: Vec<bool>,
    /// Vertices the current search may place after the start.
    allowed: Vec<bool>,
    pair_ends: Vec<(usize, usize)>,
    pair_edge: Vec<usize>,
    edge_owner: Vec<usize>,
    stamp: Vec<u32>,
    epoch: u32,
    queue: VecDeque<usize>,
    seen: Vec<bool>,
    pub best: Option<(Vec<usize>, Vec<usize>)>,
    pub nodes: u64,
}

impl<'a> Engine<'a> {
    /// `fixed` vertices are excluded from interchangeability (endpoints, anchors).
    pub fn new(h: &'a Hypergraph, fixed: &[usize]) -> Self {
        let n = h.n();
        let mut cover = vec![Vec::new(); n * n];
        for (i, e) in h.edges().iter().enumerate() {
            for (a, &u) in e.iter().enumerate() {
                for &v in &e[a + 1..] {
                    cover[u * n + v].push(i);
                    cover[v * n + u].push(i);
                }
            }
        }
        let shadow: Vec<Vec<usize>> = (0..n)
            .map(|u| (0..n).filter(|&v| !cover[u * n + v].is_empty()).collect())
            .collect();
        let twins_below = twin_classes(h, fixed);
        Self {
            h,
            n,
            cover,
            shadow,
            twins_below,
            seq: Vec::new(),
            visited: vec![false; n],
            allowed: vec![true; n],
            pair_ends: Vec::new(),
            pair_edge: Vec::new(),
            edge_owner: vec![NONE; h.edge_count()],
            stamp: vec![0; h.edge_count()],
            epoch: 0,
            queue: VecDeque::new(),
            seen: vec![false; n],
            best: None,
            nodes: 0,
        }
    }

    fn try_pair(&mut self, a: usize, b: usize) -> bool {
        let p = self.pair_ends.len();
        self.pair_ends.push((a, b));
        self.pair_edge.push(NONE);
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        if self.augment(p) {
            true
        } else {
            self.pair_ends.pop();
            self.pair_edge.pop();
            false
        }
    }

    fn augment(&mut self, p: usize) -> bool {
        let (a, b) = self.pair_ends[p];
        let key = a * self.n + b;
        for idx in 0..self.cover[key].len() {
            let e = self.cover[key][idx];
            if self.stamp[e] == self.epoch {
                continue;
            }
            self.stamp[e] = self.epoch;
            let owner = self.edge_owner[e];
            if owner == NONE || self.augment(owner) {
                self.edge_owner[e] = p;
                self.pair_edge[p] = e;
                return true;
            }
        }
        false
    }

    fn release_pair(&mut self) {
        let e = self.pair_edge.pop().expect("pair to release");
        self.pair_ends.pop();
        self.edge_owner[e] = NONE;
    }

    fn push_vertex(&mut self, v: usize) {
        self.visited[v] = true;
        self.seq.push(v);
    }

    fn pop_vertex(&mut self) {
        let v = self.seq.pop().unwrap();
        self.visited[v] = false;
    }

    fn record(&mut self) {
        self.best = Some((self.seq.clone(), self.pair_edge.clone()));
    }

    fn current_len(&self) -> usize {
        self.best.as_ref().map_or(0, |b| b.0.len())
    }

    /// Unvisited allowed vertices reachable from `from` through unvisited allowed vertices.
    /// Leaves the reached set in `self.seen`.
    fn reach(&mut self, from: usize) -> usize {
        self.seen.iter_mut().for_each(|s| *s = false);
        self.queue.clear();
        self.queue.push_back(from);
        let mut count = 0;
        while let Some(u) = self.queue.pop_front() {
            for i in 0..self.shadow[u].len() {
                let w = self.shadow[u][i];
                if self.allowed[w] && !self.visited[w] && !self.seen[w] {
                    self.seen[w] = true;
                    count += 1;
                    self.queue.push_back(w);
                }
            }
        }
        count
    }

    fn pruned_as_twin(&self, x: usize) -> bool {
        self.twins_below[x]
            .iter()
            .any(|&y| self.allowed[y] && !self.visited[y])
    }

    fn candidates(&self, last: usize) -> Vec<usize> {
        self.shadow[last]
            .iter()
            .copied()
            .filter(|&x| self.allowed[x] && !self.visited[x] && !self.pruned_as_twin(x))
            .collect()
    }

    /// Longest (or first with `target` vertices) Berge path extending the current sequence.
    fn grow_path(&mut self, target: usize, end: Option<usize>, exact: bool) -> bool {
        self.nodes += 1;
        let last = *self.seq.last().unwrap();
        let done = match end {
            Some(y) => last == y,
            None => true,
        };
        if done && self.seq.len() > self.current_len() {
            self.record();
            if self.seq.len() >= target {
                return true;
            }
        }
        if end.is_some_and(|y| last == y) {
            return false;
        }
        let reach = self.reach(last);
        if end.is_some_and(|y| !self.seen[y]) {
            return false;
        }
        let room = reach.min(self.h.edge_count() + 1 - self.seq.len());
        if self.seq.len() + room <= self.current_len() || (exact && self.seq.len() + room < target) {
            return false;
        }
        for x in self.candidates(last) {
            if !self.try_pair(last, x) {
                continue;
            }
            self.push_vertex(x);
            let found = self.grow_path(target, end, exact);
            self.pop_vertex();
            self.release_pair();
            if found {
                return true;
            }
        }
        false
    }

    /// Searches for a path on `target` vertices, recording the longest seen. With `exact`
    /// branches that cannot reach `target` are cut; otherwise the search maximizes.
    /// With `ends = Some((x, y))` only `x`-`y` paths count.
    pub fn search_paths(&mut self, target: usize, ends: Option<(usize, usize)>, exact: bool) -> bool {
        let n = self.n;
        let starts: Vec<usize> = match ends {
            Some((x, _)) => vec![x],
            None => (0..n).collect(),
        };
        for s in starts {
            if ends.is_none() && self.pruned_as_twin(s) {
                continue;
            }
            self.push_vertex(s);
            let found = self.grow_path(target, ends.map(|e| e.1), exact);
            self.pop_vertex();
            if found {
                return true;
            }
        }
        false
    }

    fn grow_cycle(&mut self, goal: &CycleGoal, start: usize) -> bool {
        self.nodes += 1;
        let last = *self.seq.last().unwrap();
        let len = self.seq.len();
        let through_ok = goal.through.is_none_or(|t| self.visited[t]);
        if len >= goal.min_len.max(2)
            && len > self.current_len()
            && through_ok
            && self.try_pair(last, start)
        {
            self.record();
            self.release_pair();
            if goal.first {
                return true;
            }
        }
        let reach = self.reach(last);
        if goal.through.is_some_and(|t| !self.visited[t] && !self.seen[t]) {
            return false;
        }
        let room = reach.min(self.h.edge_count().saturating_sub(len));
        let bar = if goal.first {
            goal.min_len.saturating_sub(1)
        } else {
            self.current_len().max(goal.min_len.saturating_sub(1))
        };
        if len + room <= bar {
            return false;
        }
        for x in self.candidates(last) {
            if !self.try_pair(last, x) {
                continue;
            }
            self.push_vertex(x);
            let found = self.grow_cycle(goal, start);
            self.pop_vertex();
            self.release_pair();
            if found {
                return true;
            }
        }
        false
    }

    /// Searches Berge cycles per `goal`; returns whether one was recorded.
    pub fn search_cycles(&mut self, goal: CycleGoal) -> bool {
        let n = self.n;
        match goal.anchor {
            Some(a) => {
                self.allowed = vec![true; n];
                self.allowed[a] = false;
                self.push_vertex(a);
                self.grow_cycle(&goal, a);
                self.pop_vertex();
            }
            None => {
                for s in 0..n {
                    if n - s < goal.min_len.max(self.current_len() + 1) {
                        break;
                    }
                    self.allowed = (0..n).map(|v| v > s).collect();
                    // A twin below `s` gives an isomorphic search that was already done.
                    if !self.twins_below[s].is_empty() {
                        continue;
                    }
                    self.push_vertex(s);
                    let found = self.grow_cycle(&goal, s);
                    self.pop_vertex();
                    if found && goal.first {
                        break;
                    }
                }
                self.allowed = vec![true; n];
            }
        }
        self.best.is_some()
    }
}

/// For each vertex, the smaller vertices `y` such that swapping `x` and `y` maps the
/// hyperedge set onto itself. Fixed vertices belong to no class.
fn twin_classes(h: &Hypergraph, fixed: &[usize]) -> Vec<Vec<usize>> {
    let n = h.n();
    let inc = h.incidence();
    let mut out = vec![Vec::new(); n];
    for x in 0..n {
        if fixed.contains(&x) {
            continue;
        }
        for y in 0..x {
            if fixed.contains(&y) || inc[x].len() != inc[y].len() {
                continue;
            }
            let swaps_onto_itself = inc[x].iter().all(|&i| {
                let e = h.edge(i);
                if e.contains(&y) {
                    return true;
                }
                let image: Vec<usize> = e.iter().map(|&v| if v == x { y } else { v }).collect();
                h.find_edge(&image).is_some()
            });
            if swaps_onto_itself {
                out[x].push(y);
            }
        }
    }
    out
}
