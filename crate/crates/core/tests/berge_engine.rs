use berge_core::berge::{
    BergeEmbedding, Pattern,
    berge_path_between, find_berge_path, has_berge_cycle_at_least, longest_berge_cycle_order,
    longest_berge_path, longest_berge_path_order, two_disjoint_berge_paths,
    two_disjoint_berge_paths_between_sets, validate_disjoint_pair, validate_disjoint_paths,
    validate_embedding,
};
use berge_core::constructions::construct_h;
use berge_core::hypergraph::{combinations, is_connected_hypergraph, is_two_connected_hypergraph};
use berge_core::Hypergraph;
use proptest::prelude::*;

/// Whether the pairs of `seq` (closed up when `cycle`) admit distinct hyperedges,
/// by trying every assignment.
fn assignable(h: &Hypergraph, seq: &[usize], cycle: bool) -> bool {
    let mut pairs: Vec<(usize, usize)> = seq.windows(2).map(|w| (w[0], w[1])).collect();
    if cycle {
        pairs.push((seq[seq.len() - 1], seq[0]));
    }
    fn rec(h: &Hypergraph, pairs: &[(usize, usize)], used: &mut Vec<bool>) -> bool {
        let Some(&(a, b)) = pairs.first() else {
            return true;
        };
        for (i, e) in h.edges().iter().enumerate() {
            if !used[i] && e.contains(&a) && e.contains(&b) {
                used[i] = true;
                if rec(h, &pairs[1..], used) {
                    used[i] = false;
                    return true;
                }
                used[i] = false;
            }
        }
        false
    }
    rec(h, &pairs, &mut vec![false; h.edge_count()])
}

/// Longest Berge path and cycle orders over all injective vertex sequences.
fn brute_force(h: &Hypergraph) -> (usize, usize) {
    fn rec(h: &Hypergraph, seq: &mut Vec<usize>, best: &mut (usize, usize)) {
        if seq.len() >= 2 && !assignable(h, seq, false) {
            return;
        }
        best.0 = best.0.max(seq.len());
        if seq.len() >= 3 && assignable(h, seq, true) {
            best.1 = best.1.max(seq.len());
        }
        for v in 0..h.n() {
            if !seq.contains(&v) {
                seq.push(v);
                rec(h, seq, best);
                seq.pop();
            }
        }
    }
    let mut best = (0, 0);
    rec(h, &mut Vec::new(), &mut best);
    best
}

fn hypergraph_strategy(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (4..=max_n).prop_flat_map(move |n| {
        let all = combinations(n, 3);
        let len = all.len();
        proptest::sample::subsequence(all, 0..=max_m.min(len))
            .prop_map(move |edges| Hypergraph::new(n, 3, edges).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn longest_orders_match_brute_force(h in hypergraph_strategy(7, 8)) {
        let (path, cycle) = brute_force(&h);
        prop_assert_eq!(longest_berge_path_order(&h), path);
        prop_assert_eq!(longest_berge_cycle_order(&h), cycle);
        if let Some(p) = longest_berge_path(&h) {
            prop_assert!(validate_embedding(&h, &p).is_ok());
        }
    }

    #[test]
    fn path_existence_is_monotone(h in hypergraph_strategy(8, 12)) {
        let longest = longest_berge_path_order(&h);
        for k in 2..=h.n() {
            let found = find_berge_path(&h, k);
            prop_assert_eq!(found.is_some(), k <= longest);
            if let Some(p) = found {
                prop_assert_eq!(p.order(), k);
                prop_assert!(validate_embedding(&h, &p).is_ok());
            }
        }
        for k in 3..=h.n() {
            if let Some(c) = has_berge_cycle_at_least(&h, k) {
                prop_assert!(c.order() >= k);
                prop_assert!(validate_embedding(&h, &c).is_ok());
            }
        }
    }

    #[test]
    fn connectivity_matches_pairwise_paths(h in hypergraph_strategy(8, 12)) {
        let mut all_joined = true;
        for u in 0..h.n() {
            for v in u + 1..h.n() {
                match berge_path_between(&h, u, v) {
                    Some(p) => {
                        prop_assert!(validate_embedding(&h, &p).is_ok());
                        prop_assert_eq!((p.vertices[0], *p.vertices.last().unwrap()), (u, v));
                    }
                    None => all_joined = false,
                }
            }
        }
        prop_assert_eq!(is_connected_hypergraph(&h), all_joined);
    }

    #[test]
    fn two_connected_instances_have_disjoint_paths(h in hypergraph_strategy(8, 12)) {
        if is_two_connected_hypergraph(&h) {
            for u in 0..h.n() {
                for v in u + 1..h.n() {
                    let (p, q) = two_disjoint_berge_paths(&h, u, v).expect("2-connected");
                    prop_assert!(validate_disjoint_pair(&h, &p, &q, u, v).is_ok());
                }
            }
            let (s1, s2) = ([0, 1], [2, 3]);
            let (p, q) = two_disjoint_berge_paths_between_sets(&h, &s1, &s2).unwrap().expect("2-connected");
            prop_assert!(validate_embedding(&h, &p).is_ok());
            prop_assert!(validate_embedding(&h, &q).is_ok());
            prop_assert!(validate_disjoint_paths(&p, &q, &[]).is_ok());
            for path in [&p, &q] {
                prop_assert!(s1.contains(&path.vertices[0]));
                prop_assert!(s2.contains(path.vertices.last().unwrap()));
            }
        }
    }
}

#[test]
fn longest_paths_in_h_at_k_2r() {
    for n in 10..=12 {
        assert_eq!(longest_berge_path_order(&construct_h(n, 6, 3).unwrap().hypergraph), 4);
    }
}

#[test]
fn parity_vertices_extend_paths_at_k_2r_plus_1() {
    // L = {0, 1}, parity pair {2, 3}; the parity vertex 2 also forms {0, 1, 2}.
    let h = construct_h(12, 7, 3).unwrap().hypergraph;
    let p = BergeEmbedding {
        pattern: Pattern::Path,
        vertices: vec![4, 0, 2, 3, 1, 5],
        hyperedges: vec![vec![0, 1, 4], vec![0, 1, 2], vec![0, 2, 3], vec![1, 2, 3], vec![0, 1, 5]],
    };
    validate_embedding(&h, &p).unwrap();
    assert_eq!(longest_berge_path_order(&h), 6);
}

#[test]
fn h_12_8_3_has_a_path_on_seven() {
    let h = construct_h(12, 8, 3).unwrap().hypergraph;
    let p = find_berge_path(&h, 7).unwrap();
    validate_embedding(&h, &p).unwrap();
    assert!(find_berge_path(&h, 8).is_none());
}

#[test]
fn h_20_8_3_has_no_long_cycle() {
    let h = construct_h(20, 8, 3).unwrap().hypergraph;
    assert!(has_berge_cycle_at_least(&h, 7).is_none());
    assert_eq!(longest_berge_cycle_order(&h), 6);
}

#[test]
fn degree_one_vertices_have_no_disjoint_pair() {
    let h = construct_h(12, 7, 3).unwrap().hypergraph;
    let low: Vec<usize> = (0..12).filter(|&v| h.degree(v) == 1).collect();
    assert!(low.len() >= 2);
    assert!(two_disjoint_berge_paths(&h, low[0], low[1]).is_none());
}

#[test]
fn embedding_json_shape() {
    let h = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
    let p = find_berge_path(&h, 2).unwrap();
    assert_eq!(p.to_json(), r#"{"pattern":"path","vertices":[0,1],"hyperedges":[[0,1,2]]}"#);
}
