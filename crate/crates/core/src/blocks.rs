//! Biconnected components (blocks), cut vertices and the block-cut tree.

use fixedbitset::FixedBitSet;

use crate::graph::Graph;

/// Block decomposition of a graph.
///
/// Isolated vertices form one-vertex blocks. Blocks are stored as sorted vertex
/// lists and ordered lexicographically, so the decomposition is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    /// Edges of the block-cut tree as `(block index, cut vertex)`.
    pub tree_edges: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Cut vertices contained in block `b`.
    pub fn cut_vertices_of(&self, b: usize) -> Vec<usize> {
        self.blocks[b]
            .iter()
            .copied()
            .filter(|&v| self.is_cut_vertex(v))
            .collect()
    }

    /// Indices of the blocks containing at most one cut vertex.
    pub fn leaf_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.cut_vertices_of(b).len() <= 1)
            .collect()
    }
}

/// Number of edges of `g` with both ends in `vertices`.
pub fn edges_within(g: &Graph, vertices: &[usize]) -> usize {
    let mut count = 0;
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if g.has_edge(u, v) {
                count += 1;
            }
        }
    }
    count
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
    is_cut: FixedBitSet,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        let mut children = 0;
        let neighbors: Vec<usize> = self.g.neighbors(u).collect();
        for w in neighbors {
            if self.disc[w] == 0 {
                children += 1;
                self.edge_stack.push((u, w));
                self.visit(w, Some(u));
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent.is_some() || children > 1 {
                        self.is_cut.insert(u);
                    }
                    self.pop_block(u, w);
                }
            } else if Some(w) != parent && self.disc[w] < self.disc[u] {
                self.edge_stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }

    fn pop_block(&mut self, u: usize, w: usize) {
        let mut members = FixedBitSet::with_capacity(self.g.n());
        while let Some((a, b)) = self.edge_stack.pop() {
            members.insert(a);
            members.insert(b);
            if (a, b) == (u, w) {
                break;
            }
        }
        self.blocks.push(members.ones().collect());
    }
}

pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut t = Tarjan {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        is_cut: FixedBitSet::with_capacity(n),
    };
    for v in 0..n {
        if t.disc[v] == 0 {
            if g.degree(v) == 0 {
                t.disc[v] = usize::MAX;
                t.blocks.push(vec![v]);
            } else {
                t.visit(v, None);
            }
        }
    }
    let mut blocks = t.blocks;
    blocks.sort();
    let cut_vertices: Vec<usize> = t.is_cut.ones().collect();
    let mut tree_edges = Vec::new();
    for (b, block) in blocks.iter().enumerate() {
        for &v in block {
            if t.is_cut.contains(v) {
                tree_edges.push((b, v));
            }
        }
    }
    BlockDecomposition {
        blocks,
        cut_vertices,
        tree_edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_has_edge_blocks() {
        let d = blocks(&Graph::path(4));
        assert_eq!(d.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(d.cut_vertices, vec![1, 2]);
        assert_eq!(d.leaf_blocks(), vec![0, 2]);
    }

    #[test]
    fn bowtie() {
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let d = blocks(&g);
        assert_eq!(d.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(d.cut_vertices, vec![2]);
        assert_eq!(d.leaf_blocks(), vec![0, 1]);
        assert_eq!(d.tree_edges, vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn isolated_vertices_are_blocks() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let d = blocks(&g);
        assert_eq!(d.blocks, vec![vec![0, 1], vec![2]]);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn cycle_is_one_block() {
        let d = blocks(&Graph::cycle(6));
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(edges_within(&Graph::cycle(6), &d.blocks[0]), 6);
    }
}
