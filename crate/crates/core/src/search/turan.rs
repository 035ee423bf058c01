//! Exhaustive checks of classical graph extremal results over all isomorphism classes.

use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{GraphCatalog, Mode};
use super::{SearchError, SearchReport};
use crate::classify::{min_degree_long_path, LongPathOutcome};
use crate::constructions::{formula_ratio, FormulaFamily, FormulaQuery};
use crate::format::serialize_graph;
use crate::graph::Graph;
use crate::paths::{internally_disjoint_paths, longest_cycle_order, longest_path_between, longest_path_order};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphTuranKind {
    /// Erdős–Gallai for paths: `e <= (k-2)n/2`, equality exactly for disjoint `K_{k-1}`'s.
    EgPath,
    /// Erdős–Gallai for long cycles: `e <= (k-1)(n-1)/2`.
    EgCycle,
    /// Kopylov's exact maximum for connected graphs without `P_k`.
    ConnPath,
    /// Kopylov's threshold forcing a cycle of length at least `k` in 2-connected graphs.
    Kopylov,
    /// From every vertex of a connected graph with minimum degree `t`, a path on `t + 2`
    /// vertices or the clique-block exception.
    MinDegreePath,
    /// Li–Ning: enough vertices of degree `s` outside `x, y` force an `x`-`y` path on `s + 1`.
    LiNing,
    /// Whitney: 2-connected iff every pair has two internally disjoint paths.
    Whitney,
}

impl GraphTuranKind {
    pub const ALL: [GraphTuranKind; 7] = [
        GraphTuranKind::EgPath,
        GraphTuranKind::EgCycle,
        GraphTuranKind::ConnPath,
        GraphTuranKind::Kopylov,
        GraphTuranKind::MinDegreePath,
        GraphTuranKind::LiNing,
        GraphTuranKind::Whitney,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphTuranKind::EgPath => "eg-path",
            GraphTuranKind::EgCycle => "eg-cycle",
            GraphTuranKind::ConnPath => "conn-path",
            GraphTuranKind::Kopylov => "kopylov",
            GraphTuranKind::MinDegreePath => "min-degree-path",
            GraphTuranKind::LiNing => "li-ning",
            GraphTuranKind::Whitney => "whitney",
        }
    }

    fn max_order(self) -> usize {
        match self {
            GraphTuranKind::LiNing => 7,
            _ => 8,
        }
    }
}

impl FromStr for GraphTuranKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphTuranKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown verification kind {s:?}"))
    }
}

struct Profile {
    graph: Graph,
    edges: usize,
    path: usize,
    cycle: usize,
}

fn profiles(catalog: &mut GraphCatalog, n: usize, mode: Mode) -> Result<Vec<Profile>, SearchError> {
    Ok(catalog
        .graphs(n, mode)?
        .into_par_iter()
        .map(|graph| Profile {
            edges: graph.edge_count(),
            path: longest_path_order(&graph),
            cycle: longest_cycle_order(&graph),
            graph,
        })
        .collect())
}

fn counterexample(kind: GraphTuranKind, detail: String, g: &Graph) -> SearchError {
    SearchError::Counterexample {
        problem: kind.name().to_string(),
        detail,
        witness: serialize_graph(g),
    }
}

fn half(twice: i64) -> String {
    if twice % 2 == 0 {
        (twice / 2).to_string()
    } else {
        format!("{twice}/2")
    }
}

/// Maximum edge count among the profiles passing `free`, with the first graph attaining it.
fn extremal(ps: &[Profile], free: impl Fn(&Profile) -> bool) -> Option<&Profile> {
    ps.iter()
        .filter(|p| free(p))
        .fold(None, |best: Option<&Profile>, p| match best {
            Some(b) if b.edges >= p.edges => Some(b),
            _ => Some(p),
        })
}

fn extremal_report(kind: GraphTuranKind, n: usize, k: usize, mode: Mode, best: Option<&Profile>, count: usize) -> SearchReport {
    let mut report = SearchReport::new(kind.name(), n, mode);
    report.k = Some(k);
    report.value = best.map(|p| p.edges as u64);
    report.witness = best.map(|p| serialize_graph(&p.graph));
    report.nodes = count as u64;
    report
}

/// Runs the check `kind` for every order up to `n_max`, returning one report per `(n, k)`
/// (or per `n`) with the exact extremal value where one is defined.
pub fn verify_graph_turan(
    kind: GraphTuranKind,
    n_max: usize,
    catalog: &mut GraphCatalog,
) -> Result<Vec<SearchReport>, SearchError> {
    if n_max > kind.max_order() {
        return Err(SearchError::TooLarge(format!(
            "{} is exhaustive up to n = {}, got {n_max}",
            kind.name(),
            kind.max_order()
        )));
    }
    let mut reports = Vec::new();
    match kind {
        GraphTuranKind::EgPath => {
            for n in 2..=n_max {
                let ps = profiles(catalog, n, Mode::All)?;
                for k in 2..=n {
                    let bound2 = ((k - 2) * n) as i64;
                    for p in ps.iter().filter(|p| p.path < k) {
                        let twice = 2 * p.edges as i64;
                        if twice > bound2 {
                            return Err(counterexample(kind, format!("n={n} k={k}: {} edges", p.edges), &p.graph));
                        }
                        if (twice == bound2) != p.graph.is_disjoint_union_of_cliques(k - 1) {
                            return Err(counterexample(kind, format!("n={n} k={k}: equality case"), &p.graph));
                        }
                    }
                    let best = extremal(&ps, |p| p.path < k);
                    let mut report = extremal_report(kind, n, k, Mode::All, best, ps.len());
                    report.bound = Some(half(bound2));
                    if best.is_some_and(|b| 2 * b.edges as i64 == bound2) {
                        report.flags.push("bound-attained".into());
                    }
                    reports.push(report);
                }
            }
        }
        GraphTuranKind::EgCycle => {
            for n in 3..=n_max {
                let ps = profiles(catalog, n, Mode::All)?;
                for k in 3..=n {
                    let bound2 = ((k - 1) * (n - 1)) as i64;
                    let best = extremal(&ps, |p| p.cycle < k);
                    if let Some(b) = best.filter(|b| 2 * b.edges as i64 > bound2) {
                        return Err(counterexample(kind, format!("n={n} k={k}: {} edges", b.edges), &b.graph));
                    }
                    let mut report = extremal_report(kind, n, k, Mode::All, best, ps.len());
                    report.bound = Some(half(bound2));
                    reports.push(report);
                }
            }
        }
        GraphTuranKind::ConnPath => {
            for n in 5..=n_max {
                let ps = profiles(catalog, n, Mode::Connected)?;
                for k in 5..=n {
                    let q = FormulaQuery::new(FormulaFamily::ConnPathGraph, n as u64, k as u64, 2);
                    let expected = formula_ratio(&q).to_integer() as u64;
                    let best = extremal(&ps, |p| p.path < k);
                    let value = best.map_or(0, |b| b.edges as u64);
                    if value != expected {
                        let g = best.map_or_else(|| Graph::empty(n), |b| b.graph.clone());
                        return Err(counterexample(kind, format!("n={n} k={k}: maximum {value}, formula {expected}"), &g));
                    }
                    let mut report = extremal_report(kind, n, k, Mode::Connected, best, ps.len());
                    report.bound = Some(expected.to_string());
                    reports.push(report);
                }
            }
        }
        GraphTuranKind::Kopylov => {
            for n in 5..=n_max {
                let ps = profiles(catalog, n, Mode::TwoConnected)?;
                for k in 5..=n {
                    let q = FormulaQuery::new(FormulaFamily::Kopylov, n as u64, k as u64, 2);
                    let threshold = formula_ratio(&q).to_integer() as u64;
                    let best = extremal(&ps, |p| p.cycle < k);
                    if let Some(b) = best.filter(|b| b.edges as u64 > threshold) {
                        return Err(counterexample(kind, format!("n={n} k={k}: {} edges, no long cycle", b.edges), &b.graph));
                    }
                    let mut report = extremal_report(kind, n, k, Mode::TwoConnected, best, ps.len());
                    report.bound = Some(threshold.to_string());
                    reports.push(report);
                }
            }
        }
        GraphTuranKind::MinDegreePath => {
            for n in 4..=n_max {
                let graphs = catalog.graphs(n, Mode::Connected)?;
                for t in 2..=3 {
                    if n < t + 2 {
                        continue;
                    }
                    let mut checked = 0u64;
                    let mut exceptions = 0u64;
                    for g in graphs.iter().filter(|g| g.min_degree() >= t) {
                        for v in 0..n {
                            checked += 1;
                            match min_degree_long_path(g, v, t).map_err(|e| SearchError::Invalid(e.to_string()))? {
                                LongPathOutcome::Path { .. } => {}
                                LongPathOutcome::CliqueBlockException { .. } => exceptions += 1,
                                LongPathOutcome::Neither => {
                                    return Err(counterexample(kind, format!("t={t} vertex {v}"), g));
                                }
                            }
                        }
                    }
                    let mut report = SearchReport::new(kind.name(), n, Mode::Connected);
                    report.k = Some(t);
                    report.value = Some(exceptions);
                    report.nodes = checked;
                    reports.push(report);
                }
            }
        }
        GraphTuranKind::LiNing => {
            for n in 3..=n_max {
                let graphs = catalog.graphs(n, Mode::TwoConnected)?;
                let mut checked = 0u64;
                for g in &graphs {
                    for x in 0..n {
                        for y in x + 1..n {
                            let longest = longest_path_between(g, x, y).map_or(0, |p| p.len());
                            for s in 1..n {
                                let heavy = (0..n).filter(|&v| v != x && v != y && g.degree(v) >= s).count();
                                if 2 * heavy < n - 1 {
                                    continue;
                                }
                                checked += 1;
                                if longest < s + 1 {
                                    return Err(counterexample(
                                        kind,
                                        format!("x={x} y={y} s={s}: longest x-y path has {longest} vertices"),
                                        g,
                                    ));
                                }
                            }
                        }
                    }
                }
                let mut report = SearchReport::new(kind.name(), n, Mode::TwoConnected);
                report.value = Some(graphs.len() as u64);
                report.nodes = checked;
                reports.push(report);
            }
        }
        GraphTuranKind::Whitney => {
            for n in 3..=n_max {
                let graphs = catalog.graphs(n, Mode::All)?;
                let mut two_connected = 0u64;
                for g in &graphs {
                    let by_blocks = g.is_two_connected();
                    let by_paths = (0..n).all(|u| (u + 1..n).all(|v| internally_disjoint_paths(g, u, v, 2) >= 2));
                    if by_blocks != by_paths {
                        return Err(counterexample(kind, format!("blocks say {by_blocks}, paths say {by_paths}"), g));
                    }
                    two_connected += u64::from(by_blocks);
                }
                let mut report = SearchReport::new(kind.name(), n, Mode::All);
                report.value = Some(two_connected);
                report.nodes = graphs.len() as u64;
                reports.push(report);
            }
        }
    }
    Ok(reports)
}
