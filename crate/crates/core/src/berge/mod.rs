//! Exact detection of Berge paths and cycles.
//!
//! Orders count defining vertices: a Berge path of order `k` has `k` defining
//! vertices and `k - 1` defining hyperedges (its length), a Berge cycle of order
//! `k` has `k` of each.

mod engine;
pub mod validate;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::hypergraph::Hypergraph;
use engine::{CycleGoal, Engine};

pub use validate::{validate_disjoint_pair, validate_disjoint_paths, validate_embedding, EmbeddingError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pattern {
    Path,
    Cycle,
}

/// A Berge path or cycle: defining vertices in pattern order and, for each pattern
/// edge in the same order, the hyperedge it is mapped to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BergeEmbedding {
    pub pattern: Pattern,
    pub vertices: Vec<usize>,
    pub hyperedges: Vec<Vec<usize>>,
}

impl BergeEmbedding {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("embedding serializes")
    }

    fn from_search(h: &Hypergraph, pattern: Pattern, found: (Vec<usize>, Vec<usize>)) -> Self {
        let (vertices, edge_ids) = found;
        Self {
            pattern,
            vertices,
            hyperedges: edge_ids.iter().map(|&i| h.edge(i).to_vec()).collect(),
        }
    }
}

/// A Berge path on exactly `k` defining vertices, if one exists.
pub fn find_berge_path(h: &Hypergraph, k: usize) -> Option<BergeEmbedding> {
    assert!(k >= 2, "a Berge path needs at least two defining vertices");
    if k > h.n() || k > h.edge_count() + 1 {
        return None;
    }
    let mut engine = Engine::new(h, &[]);
    if engine.search_paths(k, None, true) {
        let (mut vertices, mut edges) = engine.best.take().unwrap();
        vertices.truncate(k);
        edges.truncate(k - 1);
        Some(BergeEmbedding::from_search(h, Pattern::Path, (vertices, edges)))
    } else {
        None
    }
}

pub fn has_berge_path(h: &Hypergraph, k: usize) -> bool {
    find_berge_path(h, k).is_some()
}

/// A Berge path with the most defining vertices; `None` when there is no hyperedge.
pub fn longest_berge_path(h: &Hypergraph) -> Option<BergeEmbedding> {
    if h.edge_count() == 0 {
        return None;
    }
    let mut engine = Engine::new(h, &[]);
    engine.search_paths(h.n().min(h.edge_count() + 1), None, false);
    engine
        .best
        .take()
        .map(|b| BergeEmbedding::from_search(h, Pattern::Path, b))
}

/// Defining-vertex count of a longest Berge path: 0 for the empty vertex set, 1 when
/// there are vertices but no hyperedges.
pub fn longest_berge_path_order(h: &Hypergraph) -> usize {
    match longest_berge_path(h) {
        Some(p) => p.order(),
        None => usize::from(h.n() > 0),
    }
}

/// A Berge cycle with at least `k` defining vertices.
pub fn has_berge_cycle_at_least(h: &Hypergraph, k: usize) -> Option<BergeEmbedding> {
    assert!(k >= 3, "Berge cycles have at least three defining vertices");
    if k > h.n() || k > h.edge_count() {
        return None;
    }
    let mut engine = Engine::new(h, &[]);
    let goal = CycleGoal {
        min_len: k,
        first: true,
        anchor: None,
        through: None,
    };
    engine
        .search_cycles(goal)
        .then(|| BergeEmbedding::from_search(h, Pattern::Cycle, engine.best.take().unwrap()))
}

/// A longest Berge cycle (at least three defining vertices), if any.
pub fn longest_berge_cycle(h: &Hypergraph) -> Option<BergeEmbedding> {
    let mut engine = Engine::new(h, &[]);
    let goal = CycleGoal {
        min_len: 3,
        first: false,
        anchor: None,
        through: None,
    };
    engine
        .search_cycles(goal)
        .then(|| BergeEmbedding::from_search(h, Pattern::Cycle, engine.best.take().unwrap()))
}

pub fn longest_berge_cycle_order(h: &Hypergraph) -> usize {
    longest_berge_cycle(h).map_or(0, |c| c.order())
}

/// Some Berge path with defining endpoints `u` and `v`.
///
/// A shortest `u`-`v` path in the 2-shadow is always a Berge path: if one hyperedge
/// covered two of its pairs it would contain two non-consecutive path vertices,
/// giving a shortcut.
pub fn berge_path_between(h: &Hypergraph, u: usize, v: usize) -> Option<BergeEmbedding> {
    assert_ne!(u, v, "endpoints must differ");
    let n = h.n();
    let shadow = h.shadow();
    let mut parent = vec![usize::MAX; n];
    parent[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(a) = queue.pop_front() {
        if a == v {
            break;
        }
        for b in shadow.neighbors(a) {
            if parent[b] == usize::MAX {
                parent[b] = a;
                queue.push_back(b);
            }
        }
    }
    if parent[v] == usize::MAX {
        return None;
    }
    let mut vertices = vec![v];
    while *vertices.last().unwrap() != u {
        vertices.push(parent[*vertices.last().unwrap()]);
    }
    vertices.reverse();
    let hyperedges = vertices
        .windows(2)
        .map(|w| {
            h.edges()
                .iter()
                .find(|e| e.contains(&w[0]) && e.contains(&w[1]))
                .expect("shadow edge is covered")
                .clone()
        })
        .collect();
    Some(BergeEmbedding {
        pattern: Pattern::Path,
        vertices,
        hyperedges,
    })
}

/// A longest Berge path with defining endpoints `u` and `v`.
pub fn longest_berge_path_between(h: &Hypergraph, u: usize, v: usize) -> Option<BergeEmbedding> {
    assert_ne!(u, v, "endpoints must differ");
    let mut engine = Engine::new(h, &[u, v]);
    engine.search_paths(h.n().min(h.edge_count() + 1), Some((u, v)), false);
    engine
        .best
        .take()
        .map(|b| BergeEmbedding::from_search(h, Pattern::Path, b))
}

/// Two Berge paths from `u` to `v` sharing no defining vertex other than `u`, `v` and no
/// defining hyperedge; found as a Berge cycle through both (a cycle of order two uses
/// two distinct hyperedges containing `u` and `v`).
pub fn two_disjoint_berge_paths(
    h: &Hypergraph,
    u: usize,
    v: usize,
) -> Option<(BergeEmbedding, BergeEmbedding)> {
    assert_ne!(u, v, "endpoints must differ");
    if h.degree(u) < 2 || h.degree(v) < 2 {
        return None;
    }
    let mut engine = Engine::new(h, &[u, v]);
    let goal = CycleGoal {
        min_len: 2,
        first: true,
        anchor: Some(u),
        through: Some(v),
    };
    if !engine.search_cycles(goal) {
        return None;
    }
    let cycle = BergeEmbedding::from_search(h, Pattern::Cycle, engine.best.take().unwrap());
    Some(split_cycle(&cycle, v))
}

/// Splits a cycle starting at `u` into its two arcs from `u` to `v`.
fn split_cycle(cycle: &BergeEmbedding, v: usize) -> (BergeEmbedding, BergeEmbedding) {
    let len = cycle.vertices.len();
    let j = cycle.vertices.iter().position(|&x| x == v).unwrap();
    let first = BergeEmbedding {
        pattern: Pattern::Path,
        vertices: cycle.vertices[..=j].to_vec(),
        hyperedges: cycle.hyperedges[..j].to_vec(),
    };
    let mut back_vertices = vec![cycle.vertices[0]];
    back_vertices.extend(cycle.vertices[j..].iter().rev());
    let mut back_edges: Vec<Vec<usize>> = cycle.hyperedges[j..].to_vec();
    back_edges.reverse();
    debug_assert_eq!(back_vertices.len(), len - j + 1);
    let second = BergeEmbedding {
        pattern: Pattern::Path,
        vertices: back_vertices,
        hyperedges: back_edges,
    };
    (first, second)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SetPathsError {
    #[error("the two vertex sets overlap")]
    Overlap,
    #[error("each vertex set needs at least two vertices")]
    Undersized,
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
}

/// Two disjoint Berge paths between the vertex sets `s1` and `s2`.
///
/// Each set gets an apex vertex, and for every `x` in the set a hyperedge `{x, apex}`
/// padded with `r - 2` new vertices is added. Two disjoint apex-to-apex paths in the
/// enlarged hypergraph are then cut down to their segments between the last vertex of
/// `s1` and the first vertex of `s2`.
pub fn two_disjoint_berge_paths_between_sets(
    h: &Hypergraph,
    s1: &[usize],
    s2: &[usize],
) -> Result<Option<(BergeEmbedding, BergeEmbedding)>, SetPathsError> {
    if s1.len() < 2 || s2.len() < 2 {
        return Err(SetPathsError::Undersized);
    }
    if let Some(&bad) = s1.iter().chain(s2).find(|&&x| x >= h.n()) {
        return Err(SetPathsError::OutOfRange(bad));
    }
    if s1.iter().any(|x| s2.contains(x)) {
        return Err(SetPathsError::Overlap);
    }
    let n = h.n();
    let r = h.r();
    let mut edges: Vec<Vec<usize>> = h.edges().to_vec();
    let mut next = n;
    let mut add_side = |set: &[usize], edges: &mut Vec<Vec<usize>>| -> usize {
        let apex = next;
        next += 1;
        for &x in set {
            let mut e = vec![x, apex];
            for _ in 0..r - 2 {
                e.push(next);
                next += 1;
            }
            edges.push(e);
        }
        apex
    };
    let a1 = add_side(s1, &mut edges);
    let a2 = add_side(s2, &mut edges);
    let total = next;
    let gadget = Hypergraph::new(total, r, edges).expect("gadget hyperedges are valid");
    let Some((p, q)) = two_disjoint_berge_paths(&gadget, a1, a2) else {
        return Ok(None);
    };
    let strip = |path: BergeEmbedding| -> BergeEmbedding {
        let start = path
            .vertices
            .iter()
            .rposition(|x| s1.contains(x))
            .expect("path leaves through s1");
        let end = start
            + path.vertices[start..]
                .iter()
                .position(|x| s2.contains(x))
                .expect("path enters s2");
        BergeEmbedding {
            pattern: Pattern::Path,
            vertices: path.vertices[start..=end].to_vec(),
            hyperedges: path.hyperedges[start..end].to_vec(),
        }
    };
    Ok(Some((strip(p), strip(q))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hyper(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, 3, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn single_hyperedge() {
        let h = hyper(3, &[&[0, 1, 2]]);
        let p = find_berge_path(&h, 2).unwrap();
        assert_eq!(p.vertices, vec![0, 1]);
        assert_eq!(p.hyperedges, vec![vec![0, 1, 2]]);
        assert_eq!(longest_berge_path_order(&h), 2);
        assert!(has_berge_cycle_at_least(&h, 3).is_none());
        assert_eq!(longest_berge_path_order(&Hypergraph::empty(3, 3).unwrap()), 1);
        assert_eq!(longest_berge_path_order(&Hypergraph::empty(0, 3).unwrap()), 0);
    }

    #[test]
    fn complete_three_graph_on_five() {
        let h = Hypergraph::complete(5, 3).unwrap();
        let c = has_berge_cycle_at_least(&h, 5).unwrap();
        assert_eq!(c.order(), 5);
        validate_embedding(&h, &c).unwrap();
        let (p, q) = two_disjoint_berge_paths(&h, 0, 1).unwrap();
        validate_disjoint_pair(&h, &p, &q, 0, 1).unwrap();
    }

    #[test]
    fn two_hyperedges_sharing_a_pair() {
        let h = hyper(4, &[&[0, 1, 2], &[0, 1, 3]]);
        let (p, q) = two_disjoint_berge_paths(&h, 0, 1).unwrap();
        assert_eq!(p.order(), 2);
        assert_eq!(q.order(), 2);
        validate_disjoint_pair(&h, &p, &q, 0, 1).unwrap();
    }

    #[test]
    fn between_sets() {
        let h = Hypergraph::complete(6, 3).unwrap();
        let (p, q) = two_disjoint_berge_paths_between_sets(&h, &[0, 1], &[2, 3]).unwrap().unwrap();
        validate_embedding(&h, &p).unwrap();
        validate_embedding(&h, &q).unwrap();
        let apart = hyper(6, &[&[0, 1, 2], &[3, 4, 5]]);
        assert_eq!(
            two_disjoint_berge_paths_between_sets(&apart, &[0, 1], &[3, 4]).unwrap(),
            None
        );
        assert_eq!(
            two_disjoint_berge_paths_between_sets(&h, &[0, 1], &[1, 2]),
            Err(SetPathsError::Overlap)
        );
        assert_eq!(
            two_disjoint_berge_paths_between_sets(&h, &[0], &[1, 2]),
            Err(SetPathsError::Undersized)
        );
    }

    #[test]
    fn path_between() {
        let h = hyper(6, &[&[0, 1, 2], &[2, 3, 4]]);
        let p = berge_path_between(&h, 0, 4).unwrap();
        validate_embedding(&h, &p).unwrap();
        assert_eq!(berge_path_between(&h, 0, 5), None);
        assert_eq!(berge_path_between(&h, 0, 1).unwrap().order(), 2);
        let longest = longest_berge_path_between(&h, 0, 4).unwrap();
        assert_eq!(longest.order(), 3);
    }
}
