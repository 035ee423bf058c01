use std::collections::BTreeSet;

use berge_core::hypergraph::combinations;
use berge_core::paths::longest_path;
use berge_core::reduction::{lift_path, reduce, verify_certificate, CertificateViolation};
use berge_core::{Color, Hypergraph, RedBlueGraph};
use proptest::prelude::*;

fn hypergraph() -> impl Strategy<Value = Hypergraph> {
    (4usize..=9, 3usize..=4).prop_flat_map(|(n, r)| {
        let all = combinations(n, r);
        let len = all.len();
        proptest::sample::subsequence(all, 0..=len.min(16)).prop_map(move |edges| Hypergraph::new(n, r, edges).unwrap())
    })
}

/// Blue edges plus red `r`-cliques, by checking every `r`-set.
fn g_r_oracle(g: &RedBlueGraph, r: usize) -> u64 {
    let blue = g.colored_edges().iter().filter(|e| e.2 == Color::Blue).count() as u64;
    let red = combinations(g.n(), r)
        .into_iter()
        .filter(|s| s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| g.color(u, v) == Some(Color::Red))))
        .count() as u64;
    blue + red
}

/// Every simple path of the graph, as vertex sequences with `u < v` for the ends.
fn paths_up_to(g: &RedBlueGraph, max_vertices: usize) -> Vec<Vec<usize>> {
    fn extend(g: &RedBlueGraph, path: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if path.len() >= 2 && path[0] < path[path.len() - 1] {
            out.push(path.clone());
        }
        if path.len() == max {
            return;
        }
        let last = *path.last().unwrap();
        for w in 0..g.n() {
            if g.color(last, w).is_some() && !path.contains(&w) {
                path.push(w);
                extend(g, path, max, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.n() {
        extend(g, &mut vec![s], max_vertices, &mut out);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn certificate_contract(h in hypergraph()) {
        let c = reduce(&h);
        prop_assert_eq!(verify_certificate(&c), Ok(()));
        let value = g_r_oracle(&c.output, h.r());
        prop_assert!(h.edge_count() as u64 <= value);
        prop_assert_eq!(value, c.output.g_r(h.r()));

        let source: BTreeSet<&Vec<usize>> = h.edges().iter().collect();
        let mut used = BTreeSet::new();
        for ((u, v), e) in &c.matching {
            prop_assert!(source.contains(e) && e.contains(u) && e.contains(v));
            prop_assert!(used.insert(e.clone()), "hyperedge matched twice");
        }
        prop_assert_eq!(c.red_hyperedges.len() + c.blue_hyperedges.len(), h.edge_count());
    }

    #[test]
    fn output_paths_lift(h in hypergraph()) {
        let c = reduce(&h);
        for path in paths_up_to(&c.output, 5) {
            let emb = lift_path(&c, &path).expect("every output path lifts");
            prop_assert_eq!(&emb.vertices, &path);
            let distinct: BTreeSet<&Vec<usize>> = emb.hyperedges.iter().collect();
            prop_assert_eq!(distinct.len(), path.len() - 1);
            for (w, e) in path.windows(2).zip(&emb.hyperedges) {
                prop_assert!(e.contains(&w[0]) && e.contains(&w[1]));
                prop_assert!(h.find_edge(e).is_some());
            }
        }
    }
}

#[test]
fn lifting_a_longest_path() {
    let h = Hypergraph::new(7, 3, vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4], vec![4, 5, 6], vec![0, 5, 6]]).unwrap();
    let c = reduce(&h);
    let path = longest_path(c.output.graph());
    assert!(path.len() >= 5);
    assert!(lift_path(&c, &path).is_some());
    assert!(lift_path(&c, &[0, 4]).is_none());
}

#[test]
fn tampered_certificates_are_rejected() {
    let h = Hypergraph::complete(5, 3).unwrap();
    let c = reduce(&h);
    assert_eq!(verify_certificate(&c), Ok(()));

    let mut moved = c.clone();
    let (_, e) = &mut moved.matching[0];
    *e = h.edges().iter().find(|x| *x != e).unwrap().clone();
    assert!(verify_certificate(&moved).is_err());

    let mut partition = c.clone();
    let stolen = partition.blue_hyperedges.pop().or_else(|| partition.red_hyperedges.pop()).unwrap();
    partition.red_hyperedges.push(stolen.clone());
    partition.blue_hyperedges.push(stolen);
    assert_eq!(verify_certificate(&partition), Err(CertificateViolation::Partition));

    let mut shrunk = c;
    shrunk.source = Hypergraph::new(6, 3, h.edges().to_vec()).unwrap();
    assert_eq!(verify_certificate(&shrunk), Err(CertificateViolation::VertexSet));
}
