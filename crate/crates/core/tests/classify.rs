use std::collections::BTreeSet;

use berge_core::classify::{
    classify_components, classify_leaf_blocks, min_degree_long_path, peel_accounting, peel_low_degree, Label,
    LongPathOutcome, PeelReason,
};
use berge_core::constructions::construct_w;
use berge_core::hypergraph::{binomial, combinations};
use berge_core::search::random::random_coloring;
use berge_core::search::{GraphCatalog, Mode};
use berge_core::{Color, Graph};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1usize..=max_n).prop_flat_map(|n| {
        let pairs = combinations(n, 2);
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            Graph::from_edges(n, pairs.iter().zip(&keep).filter(|p| *p.1).map(|(e, _)| (e[0], e[1]))).unwrap()
        })
    })
}

/// Degree of `v` among `alive`.
fn degree_in(g: &Graph, alive: &BTreeSet<usize>, v: usize) -> usize {
    alive.iter().filter(|&&x| x != v && g.has_edge(v, x)).count()
}

/// Whether deleting `v` from the component of `v` disconnects it.
fn is_cut(g: &Graph, v: usize) -> bool {
    let reach = |skip: Option<usize>, start: usize| {
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for y in g.neighbors(x) {
                if Some(y) != skip && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen
    };
    let Some(start) = g.neighbors(v).next() else {
        return false;
    };
    let mut with = reach(None, v);
    with.remove(&v);
    reach(Some(v), start).len() < with.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn low_degree_peel_replays(g in graph(12), threshold in 0usize..5) {
        let p = peel_low_degree(&g, threshold);
        let mut alive: BTreeSet<usize> = (0..g.n()).collect();
        for removal in &p.trace {
            prop_assert_eq!(removal.degree, degree_in(&g, &alive, removal.vertex));
            prop_assert!(removal.degree < threshold);
            alive.remove(&removal.vertex);
        }
        prop_assert_eq!(alive.iter().copied().collect::<Vec<_>>(), p.residue.clone());
        for &v in &p.residue {
            prop_assert!(degree_in(&g, &alive, v) >= threshold);
            prop_assert_eq!(p.residual.degree(v), degree_in(&g, &alive, v));
        }
    }

    #[test]
    fn component_peels_are_consistent(g in graph(12), k in 8usize..=12) {
        let h = k / 2;
        let classes = classify_components(&g, k).unwrap();
        let covered: usize = classes.iter().map(|c| c.vertices.len()).sum();
        prop_assert_eq!(covered, g.n());
        for c in &classes {
            let mut alive: BTreeSet<usize> = c.vertices.iter().copied().collect();
            for removal in &c.peel_trace {
                prop_assert_eq!(removal.degree, degree_in(&g, &alive, removal.vertex));
                if removal.reason == PeelReason::LowDegree {
                    prop_assert!(removal.degree + 1 < h);
                }
                alive.remove(&removal.vertex);
            }
            prop_assert_eq!(alive.iter().copied().collect::<Vec<_>>(), c.core_set.clone());
            for &v in &c.core_set {
                prop_assert!(degree_in(&g, &alive, v) + 1 >= h);
            }
            let expected = match (c.peel_trace.is_empty(), c.core_set.is_empty()) {
                (true, _) => Label::Nice,
                (false, false) => Label::Strong,
                (false, true) => Label::Bad,
            };
            prop_assert_eq!(c.label, expected);
        }
    }

    #[test]
    fn leaf_block_peels_are_consistent(g in graph(12), k in 8usize..=12) {
        let h = k / 2;
        for b in classify_leaf_blocks(&g, k, None) {
            let mut alive: BTreeSet<usize> = b.block.iter().copied().collect();
            for removal in &b.peel_trace {
                prop_assert!(Some(removal.vertex) != b.cut_vertex);
                prop_assert_eq!(removal.degree, degree_in(&g, &alive, removal.vertex));
                prop_assert!(removal.degree < h);
                alive.remove(&removal.vertex);
            }
            for &v in &b.residue {
                prop_assert!(alive.contains(&v) && degree_in(&g, &alive, v) >= h);
            }
            if let Some(c) = b.cut_vertex {
                prop_assert!(is_cut(&g, c) && !b.residue.contains(&c));
            }
            let pairs = combinations(b.block.len(), 2);
            let edges = pairs.iter().filter(|p| g.has_edge(b.block[p[0]], b.block[p[1]])).count();
            prop_assert_eq!(b.edges, edges);
        }
    }

    #[test]
    fn peel_accounting_follows_the_trace(g in graph(10), seed in any::<u64>()) {
        let rb = random_coloring(&g, seed);
        let p = peel_low_degree(&g, 4);
        let all: Vec<usize> = (0..g.n()).collect();
        let bounds = peel_accounting(&rb, &all, &p.trace, 3, 3).unwrap();
        prop_assert_eq!(bounds.len(), p.trace.len());
        let mut alive: BTreeSet<usize> = all.iter().copied().collect();
        for (b, removal) in bounds.iter().zip(&p.trace) {
            let v = removal.vertex;
            let blue = alive.iter().filter(|&&x| rb.color(v, x) == Some(Color::Blue)).count() as u64;
            let d = removal.degree as u64;
            prop_assert_eq!(b.value, blue + binomial(d - blue, 2));
            alive.remove(&v);
        }
    }
}

#[test]
fn min_degree_long_paths_exhaustive() {
    let mut catalog = GraphCatalog::new();
    for n in 3..=7 {
        for g in catalog.graphs(n, Mode::Connected).unwrap() {
            for t in 2..=3 {
                if g.min_degree() < t || n < t + 2 {
                    continue;
                }
                for v in 0..n {
                    match min_degree_long_path(&g, v, t).unwrap() {
                        LongPathOutcome::Path { path } => {
                            assert!(path.len() >= t + 2 && path[0] == v);
                            assert_eq!(path.iter().collect::<BTreeSet<_>>().len(), path.len());
                            assert!(path.windows(2).all(|w| g.has_edge(w[0], w[1])));
                        }
                        LongPathOutcome::CliqueBlockException { block } => {
                            assert!(block.len() == t + 1 && block.contains(&v) && is_cut(&g, v));
                            assert!(combinations(block.len(), 2).iter().all(|p| g.has_edge(block[p[0]], block[p[1]])));
                        }
                        LongPathOutcome::Neither => panic!("no outcome for {:?}, v = {v}, t = {t}", g.edges()),
                    }
                }
            }
        }
    }
}

#[test]
fn dense_w_block_is_troublesome_only_for_even_k() {
    let w = construct_w(40, 7, 3).unwrap();
    let even = classify_leaf_blocks(&w, 8, None);
    assert_eq!(even.len(), 1);
    assert_eq!(even[0].label, Label::Troublesome);
    assert_eq!(even[0].cut_vertex, None);
    assert_eq!(classify_leaf_blocks(&w, 9, None)[0].label, Label::Bad);
    assert_eq!(classify_leaf_blocks(&w, 8, Some(41))[0].label, Label::Bad);
}

#[test]
fn argument_errors() {
    let g = Graph::complete(5);
    assert!(classify_components(&g, 7).is_err());
    assert!(min_degree_long_path(&g, 9, 2).is_err());
    assert!(min_degree_long_path(&g, 0, 4).is_err());
    assert!(min_degree_long_path(&Graph::path(6), 0, 2).is_err());
    let two = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    assert!(min_degree_long_path(&two, 0, 2).is_err());
}
