//! Canonical labeling of small graphs by partition refinement and individualization.
//!
//! The canonical code packs the upper triangle of the relabeled adjacency matrix into a
//! `u64`, pair `(0, 1)` in the most significant used bit; the canonical labeling is the
//! one maximizing the code over all leaves of the search tree.

use crate::graph::Graph;

/// Largest order with a code that fits in 64 bits.
pub const MAX_CANONICAL_ORDER: usize = 11;

fn pair_bit(n: usize, i: usize, j: usize) -> u32 {
    let total = n * (n - 1) / 2;
    let index = i * (2 * n - i - 1) / 2 + (j - i - 1);
    (total - 1 - index) as u32
}

fn rows(g: &Graph) -> Vec<u16> {
    (0..g.n())
        .map(|v| g.neighbors(v).fold(0u16, |acc, x| acc | 1 << x))
        .collect()
}

fn refine(adj: &[u16], cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u16> = cells
            .iter()
            .map(|c| c.iter().fold(0u16, |acc, &v| acc | 1 << v))
            .collect();
        let mut next = Vec::with_capacity(adj.len());
        let mut changed = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut group = vec![keyed[0].1];
            for w in keyed.windows(2) {
                if w[0].0 != w[1].0 {
                    next.push(std::mem::take(&mut group));
                    changed = true;
                }
                group.push(w[1].1);
            }
            next.push(group);
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

struct Search<'a> {
    adj: &'a [u16],
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let n = self.adj.len();
        let mut label = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            label[c[0]] = i;
        }
        let mut code = 0u64;
        for u in 0..n {
            let mut row = self.adj[u];
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                if u < v {
                    let (i, j) = (label[u].min(label[v]), label[u].max(label[v]));
                    code |= 1 << pair_bit(n, i, j);
                }
            }
        }
        if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
            self.best = Some((code, label));
        }
    }

    fn run(&mut self, mut cells: Vec<Vec<usize>>) {
        refine(self.adj, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            // A transposition of twins is an automorphism fixing the current partition.
            let twin = tried.iter().any(|&w| {
                let both = (1u16 << v) | (1u16 << w);
                (self.adj[v] ^ self.adj[w]) & !both == 0
            });
            if twin {
                continue;
            }
            tried.push(v);
            let mut split = Vec::with_capacity(cells.len() + 1);
            split.extend_from_slice(&cells[..target]);
            split.push(vec![v]);
            split.push(cell.iter().copied().filter(|&x| x != v).collect());
            split.extend_from_slice(&cells[target + 1..]);
            self.run(split);
        }
    }
}

/// Canonical code and the labeling `old -> new` that realizes it.
pub fn canonical_labeling(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.n();
    assert!(n <= MAX_CANONICAL_ORDER, "canonical codes support at most {MAX_CANONICAL_ORDER} vertices");
    if n == 0 {
        return (0, Vec::new());
    }
    let adj = rows(g);
    let mut search = Search { adj: &adj, best: None };
    search.run(vec![(0..n).collect()]);
    search.best.expect("at least one leaf")
}

pub fn canonical_code(g: &Graph) -> u64 {
    canonical_labeling(g).0
}

/// The graph on `n` vertices encoded by `code`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if code >> pair_bit(n, i, j) & 1 == 1 {
                g.insert_unchecked(i, j);
            }
        }
    }
    g
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    graph_from_code(g.n(), canonical_code(g))
}
