//! Peel-based classification of components and leaf blocks, plus the long-path
//! dichotomy for graphs of large minimum degree.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::blocks::{blocks, edges_within};
use crate::graph::Graph;
use crate::kelmans::{per_vertex_bound, KelmansError, VertexBound};
use crate::paths::longest_path_from;
use crate::redblue::{Color, RedBlueGraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("component classification needs k >= 8, got {0}")]
    SmallK(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("need at least {needed} vertices, graph has {n}")]
    TooFewVertices { n: usize, needed: usize },
    #[error("minimum degree {delta} is below {t}")]
    LowMinDegree { delta: usize, t: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PeelReason {
    LowDegree,
    CliqueBlockNonCut,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Removal {
    pub vertex: usize,
    /// Degree in the remaining graph at the moment of removal.
    pub degree: usize,
    pub reason: PeelReason,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Nice,
    Strong,
    Bad,
    Troublesome,
}

impl Label {
    fn of(removed: usize, residue: usize) -> Label {
        if removed == 0 {
            Label::Nice
        } else if residue > 0 {
            Label::Strong
        } else {
            Label::Bad
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentClass {
    pub vertices: Vec<usize>,
    pub label: Label,
    pub core_set: Vec<usize>,
    pub peel_trace: Vec<Removal>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockClass {
    pub block: Vec<usize>,
    pub cut_vertex: Option<usize>,
    pub edges: usize,
    pub label: Label,
    /// Surviving vertices other than the cut vertex.
    pub residue: Vec<usize>,
    pub peel_trace: Vec<Removal>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Peel {
    /// `g` restricted to the residue, labels kept.
    pub residual: Graph,
    pub residue: Vec<usize>,
    pub trace: Vec<Removal>,
}

fn members(set: &FixedBitSet) -> Vec<usize> {
    set.ones().collect()
}

/// Removes, lowest label first, vertices of degree below `threshold` until none is left.
pub fn peel_low_degree(g: &Graph, threshold: usize) -> Peel {
    let mut alive = FixedBitSet::with_capacity(g.n());
    alive.insert_range(..);
    let mut current = g.clone();
    let mut trace = Vec::new();
    while let Some(v) = alive.ones().find(|&v| current.degree(v) < threshold) {
        trace.push(Removal {
            vertex: v,
            degree: current.degree(v),
            reason: PeelReason::LowDegree,
        });
        alive.set(v, false);
        current = g.restrict(&alive);
    }
    Peel {
        residual: current,
        residue: members(&alive),
        trace,
    }
}

fn peel_component(g: &Graph, component: &[usize], k: usize) -> ComponentClass {
    let h = k / 2;
    let mut alive = FixedBitSet::with_capacity(g.n());
    for &v in component {
        alive.insert(v);
    }
    let mut trace = Vec::new();
    loop {
        let current = g.restrict(&alive);
        let low = alive.ones().find(|&v| current.degree(v) + 1 < h);
        let decomposition = blocks(&current);
        let clique = decomposition
            .blocks
            .iter()
            .filter(|b| b.len() == h && edges_within(&current, b) == h * (h - 1) / 2)
            .flat_map(|b| b.iter().copied().filter(|&v| !decomposition.is_cut_vertex(v)))
            .filter(|&v| alive.contains(v))
            .min();
        let (vertex, reason) = match (low, clique) {
            (Some(a), Some(b)) if b < a => (b, PeelReason::CliqueBlockNonCut),
            (Some(a), _) => (a, PeelReason::LowDegree),
            (None, Some(b)) => (b, PeelReason::CliqueBlockNonCut),
            (None, None) => break,
        };
        trace.push(Removal {
            vertex,
            degree: current.degree(vertex),
            reason,
        });
        alive.set(vertex, false);
    }
    let core_set = members(&alive);
    ComponentClass {
        vertices: component.to_vec(),
        label: Label::of(trace.len(), core_set.len()),
        core_set,
        peel_trace: trace,
    }
}

/// Labels every component by peeling vertices of degree below `floor(k/2) - 1` and
/// non-cut vertices of blocks that are cliques on `floor(k/2)` vertices, lowest label first.
pub fn classify_components(g: &Graph, k: usize) -> Result<Vec<ComponentClass>, ClassifyError> {
    if k < 8 {
        return Err(ClassifyError::SmallK(k));
    }
    Ok(g
        .components()
        .par_iter()
        .map(|c| peel_component(g, c, k))
        .collect())
}

/// Labels every leaf block with at least two vertices. Non-cut vertices of degree below
/// `floor(k/2)` are peeled inside the block; for even `k`, a bad block with at least
/// `size_threshold` vertices (default `4k`) and at least `(floor(k/2) - 4/3)(|B| - 1)`
/// edges is troublesome.
pub fn classify_leaf_blocks(g: &Graph, k: usize, size_threshold: Option<usize>) -> Vec<BlockClass> {
    let h = k / 2;
    let threshold = size_threshold.unwrap_or(4 * k);
    let decomposition = blocks(g);
    decomposition
        .leaf_blocks()
        .into_iter()
        .filter(|&b| decomposition.blocks[b].len() >= 2)
        .map(|b| {
            let block = decomposition.blocks[b].clone();
            let cut_vertex = decomposition.cut_vertices_of(b).first().copied();
            let mut alive = FixedBitSet::with_capacity(g.n());
            for &v in &block {
                alive.insert(v);
            }
            let mut trace = Vec::new();
            loop {
                let current = g.restrict(&alive);
                let Some(v) = alive
                    .ones()
                    .find(|&v| Some(v) != cut_vertex && current.degree(v) < h)
                else {
                    break;
                };
                trace.push(Removal {
                    vertex: v,
                    degree: current.degree(v),
                    reason: PeelReason::LowDegree,
                });
                alive.set(v, false);
            }
            let residue: Vec<usize> = alive.ones().filter(|&v| Some(v) != cut_vertex).collect();
            let edges = edges_within(g, &block);
            let mut label = Label::of(trace.len(), residue.len());
            let dense = 3 * edges >= (3 * h).saturating_sub(4) * (block.len() - 1);
            if label == Label::Bad && k.is_multiple_of(2) && block.len() >= threshold && dense {
                label = Label::Troublesome;
            }
            BlockClass {
                block,
                cut_vertex,
                edges,
                label,
                residue,
                peel_trace: trace,
            }
        })
        .collect()
}

/// Replays a peel trace on a coloring: for each removal, the number of blue edges to
/// still-present vertices goes into [`per_vertex_bound`] with the recorded degree.
pub fn peel_accounting(
    g: &RedBlueGraph,
    start: &[usize],
    trace: &[Removal],
    r: usize,
    t: usize,
) -> Result<Vec<VertexBound>, KelmansError> {
    let mut alive = FixedBitSet::with_capacity(g.n());
    for &v in start {
        alive.insert(v);
    }
    let mut bounds = Vec::with_capacity(trace.len());
    for removal in trace {
        let v = removal.vertex;
        let blue = g
            .graph()
            .neighbors(v)
            .filter(|&x| alive.contains(x) && g.color(v, x) == Some(Color::Blue))
            .count();
        bounds.push(per_vertex_bound(removal.degree as u64, blue as u64, r as u64, t as u64)?);
        alive.set(v, false);
    }
    Ok(bounds)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum LongPathOutcome {
    /// A path on at least `t + 2` vertices starting at the vertex.
    Path { path: Vec<usize> },
    /// The vertex is a cut vertex of a block that is a clique on `t + 1` vertices.
    CliqueBlockException { block: Vec<usize> },
    Neither,
}

/// In a connected graph with at least `t + 2` vertices and minimum degree at least `t`,
/// finds a path on `t + 2` or more vertices from `v`, or reports the clique-block exception.
pub fn min_degree_long_path(g: &Graph, v: usize, t: usize) -> Result<LongPathOutcome, ClassifyError> {
    let n = g.n();
    if v >= n {
        return Err(ClassifyError::VertexOutOfRange { vertex: v, n });
    }
    if n < t + 2 {
        return Err(ClassifyError::TooFewVertices { n, needed: t + 2 });
    }
    if !g.is_connected() {
        return Err(ClassifyError::Disconnected);
    }
    if g.min_degree() < t {
        return Err(ClassifyError::LowMinDegree {
            delta: g.min_degree(),
            t,
        });
    }
    let path = longest_path_from(g, v);
    if path.len() >= t + 2 {
        return Ok(LongPathOutcome::Path { path });
    }
    let decomposition = blocks(g);
    if decomposition.is_cut_vertex(v) {
        if let Some(block) = decomposition.blocks.iter().find(|b| {
            b.contains(&v) && b.len() == t + 1 && edges_within(g, b) == t * (t + 1) / 2
        }) {
            return Ok(LongPathOutcome::CliqueBlockException {
                block: block.clone(),
            });
        }
    }
    Ok(LongPathOutcome::Neither)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::construct_w;

    fn pendant_k5() -> Graph {
        let mut g = Graph::complete(6);
        for v in 1..5 {
            g.remove_edge(v, 5).unwrap();
        }
        g
    }

    #[test]
    fn component_labels() {
        let nice = classify_components(&Graph::complete(5), 8).unwrap();
        assert_eq!(nice[0].label, Label::Nice);
        let strong = classify_components(&pendant_k5(), 8).unwrap();
        assert_eq!(strong[0].label, Label::Strong);
        assert_eq!(strong[0].core_set, vec![0, 1, 2, 3, 4]);
        let bad = classify_components(&Graph::complete(4), 8).unwrap();
        assert_eq!(bad[0].label, Label::Bad);
        assert_eq!(bad[0].peel_trace[0].reason, PeelReason::CliqueBlockNonCut);
        assert!(classify_components(&Graph::complete(4), 6).is_err());
    }

    #[test]
    fn low_degree_peel() {
        let p = peel_low_degree(&Graph::complete(4), 4);
        assert!(p.residue.is_empty());
        let degrees: Vec<usize> = p.trace.iter().map(|r| r.degree).collect();
        assert_eq!(degrees, vec![3, 2, 1, 0]);
        assert_eq!(peel_low_degree(&Graph::complete(5), 4).residue.len(), 5);
        let w = peel_low_degree(&construct_w(10, 7, 2).unwrap(), 3);
        assert_eq!(w.residue, vec![0, 1, 2, 3, 4]);
        assert_eq!(w.residual.edge_count(), 10);
    }

    #[test]
    fn leaf_block_labels() {
        let nice = classify_leaf_blocks(&Graph::complete(6), 8, None);
        assert_eq!(nice[0].label, Label::Nice);

        let mut g = Graph::complete(6);
        for (u, v) in [(5, 6), (5, 7), (6, 7)] {
            g = Graph::from_edges(8, g.edges().into_iter().chain([(u, v)])).unwrap();
        }
        let classes = classify_leaf_blocks(&g, 8, None);
        let triangle = classes.iter().find(|c| c.block == vec![5, 6, 7]).unwrap();
        assert_eq!(triangle.label, Label::Bad);
        assert_eq!(triangle.cut_vertex, Some(5));

        let w = construct_w(40, 7, 3).unwrap();
        let classes = classify_leaf_blocks(&w, 8, None);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].edges, 114);
        assert_eq!(classes[0].label, Label::Troublesome);
        let odd = classify_leaf_blocks(&w, 9, Some(32));
        assert_eq!(odd[0].label, Label::Bad);
    }

    #[test]
    fn long_path_dichotomy() {
        assert!(matches!(
            min_degree_long_path(&Graph::complete(4), 1, 3),
            Err(ClassifyError::TooFewVertices { .. })
        ));
        let mut glued = Graph::complete(4);
        glued = Graph::from_edges(
            7,
            glued
                .edges()
                .into_iter()
                .chain([(0, 4), (0, 5), (0, 6), (4, 5), (4, 6), (5, 6)]),
        )
        .unwrap();
        assert_eq!(
            min_degree_long_path(&glued, 0, 3).unwrap(),
            LongPathOutcome::CliqueBlockException {
                block: vec![0, 1, 2, 3]
            }
        );
        match min_degree_long_path(&Graph::cycle(6), 2, 2).unwrap() {
            LongPathOutcome::Path { path } => assert!(path.len() >= 4 && path[0] == 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn accounting_stays_within_cap() {
        let g = pendant_k5();
        let rb = RedBlueGraph::monochrome(g.clone(), Color::Blue);
        let class = &classify_components(&g, 8).unwrap()[0];
        let bounds = peel_accounting(&rb, &class.vertices, &class.peel_trace, 3, 3).unwrap();
        assert_eq!(bounds.len(), 1);
        assert!(bounds[0].within_cap);
    }
}
