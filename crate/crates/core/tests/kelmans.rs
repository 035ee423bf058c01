use berge_core::constructions::{construct_w, WShape};
use berge_core::graph::count_cliques;
use berge_core::hypergraph::{binomial, combinations};
use berge_core::kelmans::{
    evaluate, kelmans, kelmans_colored, monochrome_color, p_star, per_vertex_bound, recolor_pipeline, KelmansError,
    ParamInput, ParameterSpec, PipelineBranch,
};
use berge_core::paths::{longest_cycle_order, longest_path_order};
use berge_core::search::random::random_coloring;
use berge_core::{Color, Graph, RedBlueGraph};
use proptest::prelude::*;

fn graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (2usize..=max_n).prop_flat_map(move |n| {
        let pairs = combinations(n, 2);
        let len = pairs.len();
        proptest::sample::subsequence(pairs, 0..=len.min(max_m))
            .prop_map(move |es| Graph::from_edges(n, es.iter().map(|e| (e[0], e[1]))).unwrap())
    })
}

fn colored(max_n: usize, max_m: usize) -> impl Strategy<Value = RedBlueGraph> {
    (graph(max_n, max_m), any::<u64>()).prop_map(|(g, seed)| random_coloring(&g, seed))
}

/// `G[u -> v]` on an adjacency matrix.
fn kelmans_oracle(g: &Graph, u: usize, v: usize) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut adj = vec![vec![false; n]; n];
    for (a, b) in g.edges() {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let before = adj.clone();
    for x in 0..n {
        if x != v && before[u][x] && !before[v][x] {
            adj[u][x] = false;
            adj[x][u] = false;
            adj[v][x] = true;
            adj[x][v] = true;
        }
    }
    let mut out = Vec::new();
    for (a, row) in adj.iter().enumerate() {
        for (b, &present) in row.iter().enumerate().skip(a + 1) {
            if present {
                out.push((a, b));
            }
        }
    }
    out
}

fn cliques_oracle(g: &Graph, j: usize) -> u64 {
    combinations(g.n(), j)
        .iter()
        .filter(|s| s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| g.has_edge(a, b))))
        .count() as u64
}

fn g_r_oracle(g: &RedBlueGraph, r: usize) -> u64 {
    let blue = g.colored_edges().iter().filter(|e| e.2 == Color::Blue).count() as u64;
    let red = combinations(g.n(), r)
        .iter()
        .filter(|s| s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| g.color(a, b) == Some(Color::Red))))
        .count() as u64;
    blue + red
}

/// Maximum of `g_r` over every red-blue coloring.
fn p_star_oracle(g: &Graph, r: usize) -> u64 {
    let edges = g.edges();
    (0u32..1 << edges.len())
        .map(|mask| {
            let rb = RedBlueGraph::from_colored_edges(
                g.n(),
                edges.iter().enumerate().map(|(i, &(a, b))| (a, b, if mask >> i & 1 == 1 { Color::Red } else { Color::Blue })),
            )
            .unwrap();
            g_r_oracle(&rb, r)
        })
        .max()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn operation_matches_oracle_and_keeps_counts(g in graph(8, 18)) {
        let before: Vec<u64> = (2..=4).map(|j| cliques_oracle(&g, j)).collect();
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u == v {
                    continue;
                }
                let out = kelmans(&g, u, v).unwrap();
                prop_assert_eq!(out.edges(), kelmans_oracle(&g, u, v));
                prop_assert_eq!(out.edge_count(), g.edge_count());
                for (j, &b) in (2..=4).zip(&before) {
                    let after = cliques_oracle(&out, j);
                    prop_assert!(after >= b, "K_{} count {} -> {} for {}->{}", j, b, after, u, v);
                    prop_assert_eq!(after, count_cliques(&out, j));
                }
            }
        }
    }

    #[test]
    fn colored_operation_keeps_graph_and_blue_count(rb in colored(8, 18)) {
        for u in 0..rb.n() {
            for v in 0..rb.n() {
                if u == v {
                    continue;
                }
                let out = kelmans_colored(&rb, u, v).unwrap();
                prop_assert_eq!(out.graph(), &kelmans(rb.graph(), u, v).unwrap());
                prop_assert_eq!(out.blue_count(), rb.blue_count());
            }
        }
    }

    #[test]
    fn exact_p_star_matches_oracle(g in graph(7, 10)) {
        let best = p_star(&g, 3, 22, false).unwrap();
        prop_assert!(best.exact);
        prop_assert_eq!(best.value, p_star_oracle(&g, 3));
        prop_assert_eq!(best.coloring.graph(), &g);
        prop_assert_eq!(g_r_oracle(&best.coloring, 3), best.value);
        if g.edge_count() > 0 {
            let greedy = p_star(&g, 3, 0, true).unwrap();
            prop_assert!(!greedy.exact && greedy.value <= best.value);
            prop_assert_eq!(g_r_oracle(&greedy.coloring, 3), greedy.value);
        }
    }

    #[test]
    fn p_star_is_feasible(g in graph(6, 9)) {
        let base = p_star_oracle(&g, 3);
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u == v {
                    continue;
                }
                prop_assert!(p_star(&kelmans(&g, u, v).unwrap(), 3, 22, false).unwrap().value >= base);
                if u < v && !g.has_edge(u, v) {
                    let mut plus = g.clone();
                    plus.add_edge(u, v).unwrap();
                    prop_assert!(p_star(&plus, 3, 22, false).unwrap().value > base);
                }
            }
        }
    }
}

#[test]
fn non_adjacent_pairs_can_lengthen_paths_and_cycles() {
    let g = Graph::from_edges(6, [(1, 4), (3, 5)]).unwrap();
    let out = kelmans(&g, 1, 3).unwrap();
    assert_eq!((longest_path_order(&g), longest_path_order(&out)), (2, 3));

    let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (1, 4), (3, 4)]).unwrap();
    let out = kelmans(&g, 1, 2).unwrap();
    assert_eq!((longest_cycle_order(&g), longest_cycle_order(&out)), (3, 4));
}

#[test]
fn evaluation_dispatch() {
    let k4 = Graph::complete(4);
    let red = RedBlueGraph::monochrome(k4.clone(), Color::Red);
    let clique = evaluate(ParamInput::Graph(&k4), ParameterSpec::CliqueCount(3)).unwrap();
    assert_eq!(clique.value, 4);
    assert_eq!(evaluate(ParamInput::RedBlue(&red), ParameterSpec::GR(3)).unwrap().value, 4);
    assert_eq!(evaluate(ParamInput::Graph(&k4), ParameterSpec::GR(3)), Err(KelmansError::NeedsColoring));
    let star = evaluate(ParamInput::Graph(&k4), ParameterSpec::p_star(3)).unwrap();
    assert_eq!(star.value, p_star_oracle(&k4, 3));
    assert_eq!(kelmans(&k4, 2, 2), Err(KelmansError::SameVertex));
}

#[test]
fn per_vertex_bound_values() {
    for t in 3..=8u64 {
        for d in 0..=t {
            for i in 0..=d {
                let b = per_vertex_bound(d, i, 3, t).unwrap();
                assert_eq!(b.value, i + binomial(d - i, 2));
                let cap = binomial(t, 2) - u64::from(d < t);
                assert_eq!(b.cap, cap);
                assert_eq!(b.within_cap, b.value <= cap);
            }
        }
    }
    assert!(per_vertex_bound(3, 4, 3, 5).is_err());
    assert!(per_vertex_bound(3, 1, 2, 5).is_err());
}

#[test]
fn pipeline_is_monotone_and_ends_monochrome() {
    for (shape, k) in [(WShape::new(20, 9, 4).unwrap(), 10), (WShape::new(20, 7, 3).unwrap(), 8)] {
        let base = construct_w(shape.n, shape.k, shape.s).unwrap();
        for seed in 0..20 {
            let rb = random_coloring(&base, seed);
            let run = recolor_pipeline(&rb, shape, 3, k).unwrap();
            assert!(run.is_monotone());
            assert_eq!(monochrome_color(&run.terminal), run.terminal_color);
            assert!(run.terminal_color.is_some());
            let mut current = g_r_oracle(&rb, 3);
            for step in &run.steps {
                assert_eq!(step.g_r_before, current);
                current = step.g_r_after;
            }
            assert_eq!(current, g_r_oracle(&run.terminal, 3));
            if run.branch == PipelineBranch::SmallBlue {
                assert_eq!(run.terminal_color, Some(Color::Blue));
            }
        }
    }
}

#[test]
fn pipeline_rejects_other_graphs() {
    let shape = WShape::new(20, 9, 4).unwrap();
    let wrong = RedBlueGraph::monochrome(Graph::complete(20), Color::Red);
    assert!(matches!(recolor_pipeline(&wrong, shape, 3, 10), Err(KelmansError::NotWShaped { .. })));
    let base = RedBlueGraph::monochrome(construct_w(20, 9, 4).unwrap(), Color::Red);
    assert!(recolor_pipeline(&base, shape, 3, 12).is_err());
}
