//! Hypergraph to red-blue graph reduction with checkable certificates.
//!
//! Pairs of vertices covered by some hyperedge are matched to hyperedges by a
//! maximum matching. Hyperedges reachable from an unmatched hyperedge by
//! alternating walks become red cliques; every other hyperedge is matched and
//! contributes its partner pair as a blue edge. Each hyperedge then contains a
//! blue edge or a red `K_r`, so `e(H) <= g_r(G)`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::berge::{BergeEmbedding, Pattern};
use crate::graph::{count_cliques, Graph};
use crate::hypergraph::Hypergraph;
use crate::redblue::{Color, RedBlueGraph};

/// Bipartite containment structure between covered pairs and hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Auxiliary {
    /// Covered pairs in lexicographic order.
    pub pairs: Vec<(usize, usize)>,
    /// Hyperedge indices containing each pair.
    pub pair_edges: Vec<Vec<usize>>,
    /// Pair indices contained in each hyperedge.
    pub edge_pairs: Vec<Vec<usize>>,
}

pub fn build_auxiliary(h: &Hypergraph) -> Auxiliary {
    let cover: BTreeMap<(usize, usize), Vec<usize>> = h.pair_cover().into_iter().collect();
    let mut edge_pairs = vec![Vec::new(); h.edge_count()];
    let mut pairs = Vec::with_capacity(cover.len());
    let mut pair_edges = Vec::with_capacity(cover.len());
    for (i, (pair, edges)) in cover.into_iter().enumerate() {
        for &e in &edges {
            edge_pairs[e].push(i);
        }
        pairs.push(pair);
        pair_edges.push(edges);
    }
    Auxiliary {
        pairs,
        pair_edges,
        edge_pairs,
    }
}

/// Maximum matching pair -> hyperedge, augmenting from pairs in lexicographic order.
fn maximum_matching(aux: &Auxiliary, m: usize) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let mut pair_match = vec![None; aux.pairs.len()];
    let mut edge_match = vec![None; m];
    fn augment(
        p: usize,
        aux: &Auxiliary,
        seen: &mut [bool],
        pair_match: &mut [Option<usize>],
        edge_match: &mut [Option<usize>],
    ) -> bool {
        for &e in &aux.pair_edges[p] {
            if seen[e] {
                continue;
            }
            seen[e] = true;
            if edge_match[e].is_none_or(|q| augment(q, aux, seen, pair_match, edge_match)) {
                pair_match[p] = Some(e);
                edge_match[e] = Some(p);
                return true;
            }
        }
        false
    }
    for p in 0..aux.pairs.len() {
        let mut seen = vec![false; m];
        augment(p, aux, &mut seen, &mut pair_match, &mut edge_match);
    }
    (pair_match, edge_match)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub source: Hypergraph,
    pub output: RedBlueGraph,
    /// Each output edge with the hyperedge it is matched to, in edge order.
    pub matching: Vec<((usize, usize), Vec<usize>)>,
    pub red_hyperedges: Vec<Vec<usize>>,
    pub blue_hyperedges: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct CertificateJson<'a> {
    graph: GraphJson,
    colors: Vec<Color>,
    matching: Vec<([usize; 2], &'a [usize])>,
    red_hyperedges: &'a [Vec<usize>],
    blue_hyperedges: &'a [Vec<usize>],
}

#[derive(Serialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl ReductionCertificate {
    pub fn to_json(&self) -> String {
        let colored = self.output.colored_edges();
        let doc = CertificateJson {
            graph: GraphJson {
                n: self.output.n(),
                edges: colored.iter().map(|&(u, v, _)| [u, v]).collect(),
            },
            colors: colored.iter().map(|&(_, _, c)| c).collect(),
            matching: self
                .matching
                .iter()
                .map(|((u, v), e)| ([*u, *v], e.as_slice()))
                .collect(),
            red_hyperedges: &self.red_hyperedges,
            blue_hyperedges: &self.blue_hyperedges,
        };
        serde_json::to_string(&doc).expect("certificate serializes")
    }
}

pub fn reduce(h: &Hypergraph) -> ReductionCertificate {
    let aux = build_auxiliary(h);
    let m = h.edge_count();
    let (pair_match, edge_match) = maximum_matching(&aux, m);

    let mut red = vec![false; m];
    let mut queue: VecDeque<usize> = (0..m).filter(|&e| edge_match[e].is_none()).collect();
    queue.iter().for_each(|&e| red[e] = true);
    while let Some(e) = queue.pop_front() {
        for &p in &aux.edge_pairs[e] {
            if edge_match[e] == Some(p) {
                continue;
            }
            let partner = pair_match[p].expect("pairs next to unmatched hyperedges are matched");
            if !red[partner] {
                red[partner] = true;
                queue.push_back(partner);
            }
        }
    }

    let mut output = RedBlueGraph::monochrome(Graph::empty(h.n()), Color::Red);
    let mut assigned: HashMap<(usize, usize), usize> = HashMap::new();
    for e in (0..m).filter(|&e| red[e]) {
        for &p in &aux.edge_pairs[e] {
            let (u, v) = aux.pairs[p];
            output.add_edge(u, v, Color::Red).expect("valid pair");
            assigned.insert((u, v), pair_match[p].expect("red pairs are matched"));
        }
    }
    for e in (0..m).filter(|&e| !red[e]) {
        let p = edge_match[e].expect("non-red hyperedges are matched");
        let (u, v) = aux.pairs[p];
        let added = output.add_edge(u, v, Color::Blue).expect("valid pair");
        debug_assert!(added, "a blue pair never lies inside a red hyperedge");
        assigned.insert((u, v), e);
    }

    let matching = output
        .graph()
        .edges()
        .into_iter()
        .map(|uv| (uv, h.edge(assigned[&uv]).to_vec()))
        .collect();
    let pick = |want: bool| -> Vec<Vec<usize>> {
        (0..m).filter(|&e| red[e] == want).map(|e| h.edge(e).to_vec()).collect()
    };
    ReductionCertificate {
        source: h.clone(),
        output,
        matching,
        red_hyperedges: pick(true),
        blue_hyperedges: pick(false),
    }
}

/// The first violated certificate invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum CertificateViolation {
    #[error("output vertex set differs from source")]
    VertexSet,
    #[error("matching does not cover the output edges")]
    MatchingCoverage,
    #[error("matched hyperedge not in source")]
    UnknownHyperedge,
    #[error("edge not contained in its matched hyperedge")]
    EdgeNotContained,
    #[error("matching not injective")]
    MatchingNotInjective,
    #[error("hyperedge partition mismatch")]
    Partition,
    #[error("blue hyperedge missing its blue edge")]
    BlueHyperedge,
    #[error("red hyperedge not a clique")]
    RedHyperedgeNotClique,
    #[error("hyperedge count exceeds g_r")]
    CountExceedsGr,
}

/// Re-checks every certificate invariant from the raw data.
pub fn verify_certificate(c: &ReductionCertificate) -> Result<(), CertificateViolation> {
    let source: BTreeSet<Vec<usize>> = c.source.edges().iter().cloned().collect();
    let norm = |e: &Vec<usize>| {
        let mut s = e.clone();
        s.sort_unstable();
        s
    };
    if c.output.n() != c.source.n() {
        return Err(CertificateViolation::VertexSet);
    }
    let edges = c.output.colored_edges();
    let matched: BTreeMap<(usize, usize), Vec<usize>> = c
        .matching
        .iter()
        .map(|((u, v), e)| ((*u.min(v), *u.max(v)), norm(e)))
        .collect();
    if matched.len() != c.matching.len()
        || matched.len() != edges.len()
        || edges.iter().any(|(u, v, _)| !matched.contains_key(&(*u, *v)))
    {
        return Err(CertificateViolation::MatchingCoverage);
    }
    for ((u, v), e) in &matched {
        if !source.contains(e) {
            return Err(CertificateViolation::UnknownHyperedge);
        }
        if !e.contains(u) || !e.contains(v) {
            return Err(CertificateViolation::EdgeNotContained);
        }
    }
    let targets: BTreeSet<&Vec<usize>> = matched.values().collect();
    if targets.len() != matched.len() {
        return Err(CertificateViolation::MatchingNotInjective);
    }
    let red: BTreeSet<Vec<usize>> = c.red_hyperedges.iter().map(norm).collect();
    let blue: BTreeSet<Vec<usize>> = c.blue_hyperedges.iter().map(norm).collect();
    let disjoint = red.is_disjoint(&blue);
    let union: BTreeSet<Vec<usize>> = red.union(&blue).cloned().collect();
    if !disjoint
        || union != source
        || red.len() != c.red_hyperedges.len()
        || blue.len() != c.blue_hyperedges.len()
    {
        return Err(CertificateViolation::Partition);
    }
    for b in &blue {
        let has_blue_edge = edges.iter().any(|&(u, v, col)| {
            col == Color::Blue && matched.get(&(u, v)) == Some(b) && b.contains(&u) && b.contains(&v)
        });
        if !has_blue_edge {
            return Err(CertificateViolation::BlueHyperedge);
        }
    }
    let red_edges: BTreeSet<(usize, usize)> = edges
        .iter()
        .filter(|e| e.2 == Color::Red)
        .map(|&(u, v, _)| (u, v))
        .collect();
    for e in &red {
        for (i, &u) in e.iter().enumerate() {
            for &v in &e[i + 1..] {
                if !red_edges.contains(&(u, v)) {
                    return Err(CertificateViolation::RedHyperedgeNotClique);
                }
            }
        }
    }
    let mut red_graph = Graph::empty(c.output.n());
    for &(u, v) in &red_edges {
        red_graph.add_edge(u, v).expect("valid edge");
    }
    let blue_count = edges.len() - red_edges.len();
    let g_r = blue_count as u64 + count_cliques(&red_graph, c.source.r());
    if c.source.edge_count() as u64 > g_r {
        return Err(CertificateViolation::CountExceedsGr);
    }
    Ok(())
}

/// Blue edges plus red `r`-cliques.
pub fn g_r(g: &RedBlueGraph, r: usize) -> u64 {
    g.g_r(r)
}

/// The Berge path in the source carried by a path of the output graph: each output edge
/// is sent to its matched hyperedge. `None` if some step is not an output edge.
pub fn lift_path(c: &ReductionCertificate, path: &[usize]) -> Option<BergeEmbedding> {
    let hyperedges = path
        .windows(2)
        .map(|w| {
            let key = (w[0].min(w[1]), w[0].max(w[1]));
            c.matching
                .binary_search_by(|(uv, _)| uv.cmp(&key))
                .ok()
                .map(|i| c.matching[i].1.clone())
        })
        .collect::<Option<Vec<_>>>()?;
    Some(BergeEmbedding {
        pattern: Pattern::Path,
        vertices: path.to_vec(),
        hyperedges,
    })
}
