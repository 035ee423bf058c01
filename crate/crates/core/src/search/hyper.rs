//! Exact Berge–Turán numbers of small uniform hypergraphs by branch and bound.

use serde::Serialize;

use super::enumerate::Mode;
use super::{SearchError, SearchReport};
use crate::berge::{has_berge_cycle_at_least, has_berge_path};
use crate::constructions::{binom, formula_ratio, FormulaFamily, FormulaQuery};
use crate::format::serialize_hypergraph;
use crate::hypergraph::{combinations, is_connected_hypergraph, is_two_connected_hypergraph, Hypergraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "pattern", content = "k")]
pub enum BergePattern {
    /// Berge path on `k` vertices.
    Path(usize),
    /// Berge cycles of length at least `k`.
    LongCycle(usize),
}

impl BergePattern {
    pub fn k(self) -> usize {
        match self {
            BergePattern::Path(k) | BergePattern::LongCycle(k) => k,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BergePattern::Path(_) => "berge-path",
            BergePattern::LongCycle(_) => "berge-cycle",
        }
    }

    pub fn occurs_in(self, h: &Hypergraph) -> bool {
        match self {
            BergePattern::Path(k) => has_berge_path(h, k),
            BergePattern::LongCycle(k) => has_berge_cycle_at_least(h, k).is_some(),
        }
    }

    /// The closed form that applies at `(n, k, r)`, if one is known for all `n`.
    pub fn formula(self, n: usize, r: usize) -> Option<(FormulaFamily, u64)> {
        let BergePattern::Path(k) = self else {
            return None;
        };
        let family = if k == 3 {
            FormulaFamily::BergeP3
        } else if (4..=r + 1).contains(&k) {
            FormulaFamily::BergePathSmall
        } else if k >= r + 2 {
            FormulaFamily::BergePath
        } else {
            return None;
        };
        let q = FormulaQuery::new(family, n as u64, k as u64, r as u64);
        Some((family, formula_ratio(&q).to_integer() as u64))
    }
}

fn mode_holds(mode: Mode, h: &Hypergraph) -> bool {
    match mode {
        Mode::All => true,
        Mode::Connected => is_connected_hypergraph(h),
        Mode::TwoConnected => is_two_connected_hypergraph(h),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HyperSearchOptions {
    /// Search nodes before the run stops with a flagged lower bound.
    pub node_cap: u64,
    /// Largest `C(n, r)` searched exactly.
    pub exact_limit: u64,
    /// Above `exact_limit`, return a greedy lower bound instead of an error.
    pub heuristic: bool,
}

impl Default for HyperSearchOptions {
    fn default() -> Self {
        Self {
            node_cap: 50_000_000,
            exact_limit: 40,
            heuristic: false,
        }
    }
}

struct BranchAndBound {
    n: usize,
    r: usize,
    pattern: BergePattern,
    mode: Mode,
    candidates: Vec<Vec<usize>>,
    included: Vec<usize>,
    touched: Vec<u32>,
    best: Vec<usize>,
    found: bool,
    nodes: u64,
    cap: u64,
    capped: bool,
}

impl BranchAndBound {
    fn hypergraph(&self, idx: &[usize]) -> Hypergraph {
        Hypergraph::new(self.n, self.r, idx.iter().map(|&i| self.candidates[i].clone()).collect())
            .expect("distinct candidates")
    }

    /// Whether including `e` maps, under a transposition of two untouched vertices, to an
    /// earlier candidate the current branch has already excluded.
    fn symmetric_duplicate(&self, e: &[usize]) -> bool {
        let Some(&x) = e.iter().rev().find(|&&x| self.touched[x] == 0) else {
            return false;
        };
        (0..x).any(|y| self.touched[y] == 0 && !e.contains(&y))
    }

    fn go(&mut self, idx: usize) {
        self.nodes += 1;
        if self.nodes > self.cap {
            self.capped = true;
            return;
        }
        if (!self.found || self.included.len() > self.best.len())
            && mode_holds(self.mode, &self.hypergraph(&self.included))
        {
            self.best = self.included.clone();
            self.found = true;
        }
        let len = self.candidates.len();
        if idx == len || (self.found && self.included.len() + (len - idx) <= self.best.len()) {
            return;
        }
        if self.included.is_empty() && idx > 0 {
            return;
        }
        let e = self.candidates[idx].clone();
        if !self.symmetric_duplicate(&e) {
            self.included.push(idx);
            if !self.pattern.occurs_in(&self.hypergraph(&self.included)) {
                for &v in &e {
                    self.touched[v] += 1;
                }
                self.go(idx + 1);
                for &v in &e {
                    self.touched[v] -= 1;
                }
            }
            self.included.pop();
        }
        if !self.capped {
            self.go(idx + 1);
        }
    }
}

/// Maximum number of hyperedges in an `n`-vertex `r`-graph without `pattern` that satisfies
/// `mode`, with a witness.
///
/// Candidates are the `r`-sets in lexicographic order, decided include-first. A nonempty
/// optimum is searched only among sets containing `{0, ..., r-1}`, and a candidate is never
/// included when swapping one of its untouched vertices with a smaller untouched vertex
/// outside it gives an earlier candidate.
pub fn exact_hypergraph_turan(
    n: usize,
    r: usize,
    pattern: BergePattern,
    mode: Mode,
    options: HyperSearchOptions,
) -> Result<SearchReport, SearchError> {
    if r < 2 || n < r {
        return Err(SearchError::Invalid(format!("need 2 <= r <= n, got n = {n}, r = {r}")));
    }
    let min_k = match pattern {
        BergePattern::Path(_) => 2,
        BergePattern::LongCycle(_) => 3,
    };
    if pattern.k() < min_k {
        return Err(SearchError::Invalid(format!("pattern length {} too small", pattern.k())));
    }
    let candidates = combinations(n, r);
    let mut report = SearchReport::new(format!("ex-{}", pattern.name()), n, mode);
    report.r = Some(r);
    report.k = Some(pattern.k());
    let formula = pattern.formula(n, r);
    report.bound = formula.map(|(_, v)| v.to_string());

    let size = binom(n as u64, r as u64) as u64;
    let (value, witness) = if size > options.exact_limit {
        if !options.heuristic {
            return Err(SearchError::TooLarge(format!(
                "C({n}, {r}) = {size} candidate hyperedges exceeds the exact limit {}",
                options.exact_limit
            )));
        }
        let mut chosen: Vec<Vec<usize>> = Vec::new();
        for e in &candidates {
            report.nodes += 1;
            chosen.push(e.clone());
            if pattern.occurs_in(&Hypergraph::new(n, r, chosen.clone()).expect("distinct")) {
                chosen.pop();
            }
        }
        let h = Hypergraph::new(n, r, chosen).expect("distinct");
        report.flags.push("heuristic".into());
        report.flags.push("lower-bound".into());
        if !mode_holds(mode, &h) {
            report.flags.push("mode-unsatisfied".into());
        }
        (h.edge_count() as u64, h)
    } else {
        let mut bb = BranchAndBound {
            n,
            r,
            pattern,
            mode,
            candidates,
            included: Vec::new(),
            touched: vec![0; n],
            best: Vec::new(),
            found: false,
            nodes: 0,
            cap: options.node_cap,
            capped: false,
        };
        bb.go(0);
        report.nodes = bb.nodes;
        if bb.capped {
            report.flags.push("node-cap".into());
            report.flags.push("lower-bound".into());
        }
        if !bb.found {
            report.flags.push("no-feasible-hypergraph".into());
            report.value = None;
            return Ok(report);
        }
        let best = bb.best.clone();
        (best.len() as u64, bb.hypergraph(&best))
    };
    report.value = Some(value);
    report.witness = Some(serialize_hypergraph(&witness));
    if let Some((family, v)) = formula {
        let exact = !report.flags.iter().any(|f| f == "lower-bound");
        if exact && mode == Mode::All {
            report.flags.push(if v == value {
                format!("matches-{}", family.name())
            } else {
                format!("differs-from-{}", family.name())
            });
        }
    }
    Ok(report)
}

/// Outcome of adding each missing `r`-set to a pattern-free hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalMaximality {
    pub pattern: BergePattern,
    pub base_free: bool,
    pub tested: usize,
    /// Added hyperedges after which the hypergraph is still free.
    pub still_free: Vec<Vec<usize>>,
}

impl LocalMaximality {
    pub fn is_locally_maximal(&self) -> bool {
        self.base_free && self.still_free.is_empty()
    }
}

pub fn local_maximality(h: &Hypergraph, pattern: BergePattern) -> LocalMaximality {
    let base_free = !pattern.occurs_in(h);
    let mut tested = 0;
    let mut still_free = Vec::new();
    for e in combinations(h.n(), h.r()) {
        if h.find_edge(&e).is_some() {
            continue;
        }
        tested += 1;
        if !pattern.occurs_in(&h.with_edge(&e).expect("new r-set")) {
            still_free.push(e);
        }
    }
    LocalMaximality {
        pattern,
        base_free,
        tested,
        still_free,
    }
}
