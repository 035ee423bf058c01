use std::collections::BTreeSet;

use berge_core::format::parse_hypergraph;
use berge_core::hypergraph::{combinations, is_connected_hypergraph};
use berge_core::search::canonical::canonical_code;
use berge_core::search::random::{
    random_connected_hypergraph, random_graph, random_hypergraph, random_two_connected_graph,
};
use berge_core::search::{
    enumerate_graphs, exact_hypergraph_turan, verify_graph_turan, BergePattern, GraphCatalog, GraphTuranKind,
    HyperSearchOptions, Mode, SearchError,
};
use berge_core::Graph;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism classes of labeled graphs on `n` vertices, each as its smallest relabeled
/// edge list.
fn classes_by_permutation(n: usize) -> BTreeSet<Vec<(usize, usize)>> {
    let pairs = combinations(n, 2);
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| (p[0], p[1])).collect();
        let form = perms
            .iter()
            .map(|p| {
                let mut e: Vec<(usize, usize)> =
                    edges.iter().map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b]))).collect();
                e.sort_unstable();
                e
            })
            .min()
            .unwrap();
        classes.insert(form);
    }
    classes
}

#[test]
fn enumeration_matches_permutation_oracle() {
    for n in 1..=5 {
        let oracle = classes_by_permutation(n);
        let graphs = enumerate_graphs(n, Mode::All).unwrap();
        assert_eq!(graphs.len(), oracle.len(), "n = {n}");
        let codes: BTreeSet<u64> = graphs.iter().map(canonical_code).collect();
        assert_eq!(codes.len(), graphs.len());
        let oracle_codes: BTreeSet<u64> = oracle
            .iter()
            .map(|e| canonical_code(&Graph::from_edges(n, e.iter().copied()).unwrap()))
            .collect();
        assert_eq!(codes, oracle_codes);
    }
}

#[test]
fn eight_vertex_counts() {
    let mut catalog = GraphCatalog::new();
    assert_eq!(catalog.graphs(8, Mode::All).unwrap().len(), 12346);
    assert_eq!(catalog.graphs(8, Mode::Connected).unwrap().len(), 11117);
    assert_eq!(catalog.graphs(8, Mode::TwoConnected).unwrap().len(), 7123);
}

fn exact(n: usize, r: usize, pattern: BergePattern) -> u64 {
    exact_hypergraph_turan(n, r, pattern, Mode::All, HyperSearchOptions::default()).unwrap().value.unwrap()
}

#[test]
fn known_small_berge_turan_numbers() {
    assert_eq!(exact(5, 3, BergePattern::Path(5)), 4);
    assert_eq!(exact(6, 3, BergePattern::Path(5)), 4);
    for n in 3..=7 {
        assert_eq!(exact(n, 3, BergePattern::Path(3)), n as u64 / 3, "n = {n}");
    }
    assert_eq!(exact(7, 3, BergePattern::Path(4)), 3);
}

#[test]
fn exact_values_grow_with_n_and_witnesses_hold() {
    for k in 3..=5 {
        let mut previous = 0;
        for n in 3..=7 {
            let report =
                exact_hypergraph_turan(n, 3, BergePattern::Path(k), Mode::All, HyperSearchOptions::default()).unwrap();
            let value = report.value.unwrap();
            assert!(value >= previous, "k = {k}, n = {n}");
            previous = value;
            let h = parse_hypergraph(report.witness.as_deref().unwrap()).unwrap();
            assert_eq!(h.edge_count() as u64, value);
            assert!(!BergePattern::Path(k).occurs_in(&h));
            for e in combinations(n, 3) {
                if h.find_edge(&e).is_none() {
                    assert!(BergePattern::Path(k).occurs_in(&h.with_edge(&e).unwrap()), "optimum not maximal");
                }
            }
        }
    }
}

#[test]
fn connected_mode_witness_is_connected() {
    let report = exact_hypergraph_turan(6, 3, BergePattern::Path(5), Mode::Connected, HyperSearchOptions::default())
        .unwrap();
    let h = parse_hypergraph(report.witness.as_deref().unwrap()).unwrap();
    assert!(is_connected_hypergraph(&h));
    assert!(report.value.unwrap() <= 4);
}

#[test]
fn search_budgets() {
    let big = exact_hypergraph_turan(12, 3, BergePattern::Path(5), Mode::All, HyperSearchOptions::default());
    assert!(matches!(big, Err(SearchError::TooLarge(_))));
    let options = HyperSearchOptions { heuristic: true, ..HyperSearchOptions::default() };
    let report = exact_hypergraph_turan(12, 3, BergePattern::Path(5), Mode::All, options).unwrap();
    assert!(report.flags.iter().any(|f| f == "lower-bound"));
    let capped = HyperSearchOptions { node_cap: 10, ..HyperSearchOptions::default() };
    let report = exact_hypergraph_turan(7, 3, BergePattern::Path(6), Mode::All, capped).unwrap();
    assert!(report.flags.iter().any(|f| f == "node-cap"));
    assert!(enumerate_graphs(10, Mode::All).is_err());
}

#[test]
fn classical_checks_pass_on_small_orders() {
    let mut catalog = GraphCatalog::new();
    for kind in GraphTuranKind::ALL {
        let reports = verify_graph_turan(kind, 6, &mut catalog).unwrap();
        assert!(!reports.is_empty(), "{}", kind.name());
    }
}

/// Whether the graph stays connected after deleting any single vertex.
fn two_connected_oracle(g: &Graph) -> bool {
    let n = g.n();
    (0..n).all(|skip| {
        let start = (0..n).find(|&v| v != skip).unwrap();
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for y in g.neighbors(x) {
                if y != skip && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..n).filter(|&v| v != skip).all(|v| seen[v])
    }) && n >= 3
}

#[test]
fn random_generators() {
    for seed in 0..30 {
        let g = random_two_connected_graph(9, 13, seed).unwrap();
        assert_eq!(g.edge_count(), 13);
        assert!(two_connected_oracle(&g), "seed {seed}: {:?}", g.edges());
        assert_eq!(random_graph(8, 10, seed).unwrap().edge_count(), 10);
        let h = random_hypergraph(8, 3, 9, seed).unwrap();
        assert_eq!((h.n(), h.r(), h.edge_count()), (8, 3, 9));
        assert_eq!(h, random_hypergraph(8, 3, 9, seed).unwrap());
        assert!(is_connected_hypergraph(&random_connected_hypergraph(8, 3, 6, seed).unwrap()));
    }
    assert!(random_graph(4, 7, 0).is_err());
    assert!(random_two_connected_graph(6, 5, 0).is_err());
}
