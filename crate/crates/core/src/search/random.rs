//! Seeded random instances. Every generator draws from a ChaCha8 stream seeded by a
//! `u64`, so the same arguments give the same instance on every platform.

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SearchError;
use crate::graph::Graph;
use crate::hypergraph::{combinations, is_connected_hypergraph, Hypergraph};
use crate::redblue::{Color, RedBlueGraph};

const CONNECTED_ATTEMPTS: usize = 10_000;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pick<T: Clone>(rng: &mut ChaCha8Rng, pool: &[T], m: usize) -> Vec<T> {
    let mut idx = sample(rng, pool.len(), m).into_vec();
    idx.sort_unstable();
    idx.into_iter().map(|i| pool[i].clone()).collect()
}

/// Uniform graph with exactly `m` edges.
pub fn random_graph_from(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Result<Graph, SearchError> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    if m > pairs.len() {
        return Err(SearchError::Invalid(format!("{m} edges do not fit on {n} vertices")));
    }
    Ok(Graph::from_edges(n, pick(rng, &pairs, m)).expect("distinct pairs"))
}

pub fn random_graph(n: usize, m: usize, seed: u64) -> Result<Graph, SearchError> {
    random_graph_from(&mut seeded(seed), n, m)
}

/// Uniform `r`-graph with exactly `m` hyperedges.
pub fn random_hypergraph_from(
    rng: &mut ChaCha8Rng,
    n: usize,
    r: usize,
    m: usize,
) -> Result<Hypergraph, SearchError> {
    let all = combinations(n, r);
    if m > all.len() {
        return Err(SearchError::Invalid(format!(
            "{m} hyperedges do not fit in C({n}, {r}) = {}",
            all.len()
        )));
    }
    Hypergraph::new(n, r, pick(rng, &all, m)).map_err(|e| SearchError::Invalid(e.to_string()))
}

pub fn random_hypergraph(n: usize, r: usize, m: usize, seed: u64) -> Result<Hypergraph, SearchError> {
    random_hypergraph_from(&mut seeded(seed), n, r, m)
}

/// Uniform connected `r`-graph with `m` hyperedges, by rejection.
pub fn random_connected_hypergraph(n: usize, r: usize, m: usize, seed: u64) -> Result<Hypergraph, SearchError> {
    let mut rng = seeded(seed);
    for _ in 0..CONNECTED_ATTEMPTS {
        let h = random_hypergraph_from(&mut rng, n, r, m)?;
        if is_connected_hypergraph(&h) {
            return Ok(h);
        }
    }
    Err(SearchError::Invalid(format!(
        "no connected {r}-graph with {m} hyperedges on {n} vertices after {CONNECTED_ATTEMPTS} attempts"
    )))
}

/// A 2-connected graph with `m` edges: a random cycle, random ears until every vertex is
/// covered, then uniformly chosen extra edges.
pub fn random_two_connected_graph(n: usize, m: usize, seed: u64) -> Result<Graph, SearchError> {
    if n < 3 || m < n || m > n * (n - 1) / 2 {
        return Err(SearchError::Invalid(format!(
            "no 2-connected graph on {n} vertices with {m} edges"
        )));
    }
    let mut rng = seeded(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let cycle_len = rng.gen_range((2 * n).saturating_sub(m).max(3)..=n);
    let mut g = Graph::empty(n);
    for i in 0..cycle_len {
        g.insert_unchecked(order[i], order[(i + 1) % cycle_len]);
    }
    let mut covered = cycle_len;
    while covered < n {
        let len = rng.gen_range(1..=n - covered);
        let ends = sample(&mut rng, covered, 2).into_vec();
        let mut prev = order[ends[0]];
        for &x in &order[covered..covered + len] {
            g.insert_unchecked(prev, x);
            prev = x;
        }
        g.insert_unchecked(prev, order[ends[1]]);
        covered += len;
    }
    let missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let extra = m - g.edge_count();
    for (u, v) in pick(&mut rng, &missing, extra) {
        g.insert_unchecked(u, v);
    }
    Ok(g)
}

/// Each edge red or blue with probability one half.
pub fn random_coloring_from(rng: &mut ChaCha8Rng, g: &Graph) -> RedBlueGraph {
    RedBlueGraph::from_colored_edges(
        g.n(),
        g.edges()
            .into_iter()
            .map(|(u, v)| (u, v, if rng.gen_bool(0.5) { Color::Red } else { Color::Blue })),
    )
    .expect("edges of a simple graph")
}

pub fn random_coloring(g: &Graph, seed: u64) -> RedBlueGraph {
    random_coloring_from(&mut seeded(seed), g)
}
