//! Stand-alone certificate checks for Berge embeddings.
//!
//! Nothing here calls into the search engine: hyperedges are looked up in the
//! host's sorted edge list and every condition is checked directly.

use std::collections::BTreeSet;

use super::{BergeEmbedding, Pattern};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EmbeddingError {
    #[error("too few defining vertices ({0})")]
    TooShort(usize),
    #[error("expected {expected} hyperedges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("defining vertex {0} repeated or out of range")]
    BadVertex(usize),
    #[error("{0:?} is not a hyperedge of the host")]
    NotAHyperedge(Vec<usize>),
    #[error("hyperedge {0:?} used twice")]
    RepeatedHyperedge(Vec<usize>),
    #[error("pattern edge {0}-{1} is not inside its hyperedge")]
    NotContained(usize, usize),
    #[error("paths do not run between the required endpoints")]
    WrongEndpoints,
    #[error("paths share defining vertex {0}")]
    SharedVertex(usize),
    #[error("paths share hyperedge {0:?}")]
    SharedHyperedge(Vec<usize>),
}

pub fn validate_embedding(h: &Hypergraph, emb: &BergeEmbedding) -> Result<(), EmbeddingError> {
    let k = emb.vertices.len();
    let min = match emb.pattern {
        Pattern::Path => 1,
        Pattern::Cycle => 2,
    };
    if k < min {
        return Err(EmbeddingError::TooShort(k));
    }
    let expected = match emb.pattern {
        Pattern::Path => k - 1,
        Pattern::Cycle => k,
    };
    if emb.hyperedges.len() != expected {
        return Err(EmbeddingError::EdgeCount {
            expected,
            found: emb.hyperedges.len(),
        });
    }
    let mut seen_vertices = BTreeSet::new();
    for &v in &emb.vertices {
        if v >= h.n() || !seen_vertices.insert(v) {
            return Err(EmbeddingError::BadVertex(v));
        }
    }
    let mut seen_edges = BTreeSet::new();
    for (i, e) in emb.hyperedges.iter().enumerate() {
        let mut sorted = e.clone();
        sorted.sort_unstable();
        if h.find_edge(&sorted).is_none() {
            return Err(EmbeddingError::NotAHyperedge(e.clone()));
        }
        if !seen_edges.insert(sorted) {
            return Err(EmbeddingError::RepeatedHyperedge(e.clone()));
        }
        let a = emb.vertices[i];
        let b = emb.vertices[(i + 1) % k];
        if !e.contains(&a) || !e.contains(&b) {
            return Err(EmbeddingError::NotContained(a, b));
        }
    }
    Ok(())
}

/// Checks two `u`-`v` Berge paths that may share only `u` and `v`, and no hyperedge.
pub fn validate_disjoint_pair(
    h: &Hypergraph,
    p: &BergeEmbedding,
    q: &BergeEmbedding,
    u: usize,
    v: usize,
) -> Result<(), EmbeddingError> {
    validate_embedding(h, p)?;
    validate_embedding(h, q)?;
    for path in [p, q] {
        let ends = (path.vertices.first().copied(), path.vertices.last().copied());
        if path.pattern != Pattern::Path || (ends != (Some(u), Some(v)) && ends != (Some(v), Some(u))) {
            return Err(EmbeddingError::WrongEndpoints);
        }
    }
    validate_disjoint_paths(p, q, &[u, v])
}

/// Checks that two paths share no defining vertex outside `allowed_shared` and no hyperedge.
pub fn validate_disjoint_paths(
    p: &BergeEmbedding,
    q: &BergeEmbedding,
    allowed_shared: &[usize],
) -> Result<(), EmbeddingError> {
    for x in &p.vertices {
        if q.vertices.contains(x) && !allowed_shared.contains(x) {
            return Err(EmbeddingError::SharedVertex(*x));
        }
    }
    let normalize = |e: &Vec<usize>| {
        let mut s = e.clone();
        s.sort_unstable();
        s
    };
    let mine: BTreeSet<Vec<usize>> = p.hyperedges.iter().map(normalize).collect();
    for e in &q.hyperedges {
        if mine.contains(&normalize(e)) {
            return Err(EmbeddingError::SharedHyperedge(e.clone()));
        }
    }
    Ok(())
}
