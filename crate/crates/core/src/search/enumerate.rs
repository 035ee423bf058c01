//! Graphs up to isomorphism, generated one vertex at a time.
//!
//! Level `n` is built from level `n - 1` by adding a vertex joined to every subset of the
//! old vertices and keeping one canonical code per class.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::canonical::{canonical_code, graph_from_code};
use super::SearchError;
use crate::graph::Graph;

pub const MAX_ENUMERATION_ORDER: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    All,
    Connected,
    TwoConnected,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::All => "all",
            Mode::Connected => "connected",
            Mode::TwoConnected => "two_connected",
        }
    }

    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Mode::All => true,
            Mode::Connected => g.is_connected(),
            Mode::TwoConnected => g.is_two_connected(),
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Mode::All),
            "connected" => Ok(Mode::Connected),
            "two_connected" | "two-connected" | "2-connected" => Ok(Mode::TwoConnected),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

/// Canonical codes of all graphs per order, computed on demand and kept.
#[derive(Debug, Default, Clone)]
pub struct GraphCatalog {
    levels: Vec<Vec<u64>>,
}

impl GraphCatalog {
    pub fn new() -> Self {
        Self { levels: vec![vec![0]] }
    }

    /// Sorted canonical codes of all graphs on `n` vertices.
    pub fn codes(&mut self, n: usize) -> Result<&[u64], SearchError> {
        if n > MAX_ENUMERATION_ORDER {
            return Err(SearchError::TooLarge(format!(
                "graph enumeration supports n <= {MAX_ENUMERATION_ORDER}, got {n}"
            )));
        }
        while self.levels.len() <= n {
            let m = self.levels.len() - 1;
            let next: BTreeSet<u64> = self.levels[m]
                .par_iter()
                .flat_map_iter(|&code| {
                    let base = graph_from_code(m, code);
                    (0u32..1 << m).map(move |subset| {
                        let mut g = Graph::empty(m + 1);
                        for (u, v) in base.edges() {
                            g.insert_unchecked(u, v);
                        }
                        for u in 0..m {
                            if subset >> u & 1 == 1 {
                                g.insert_unchecked(u, m);
                            }
                        }
                        canonical_code(&g)
                    })
                })
                .collect::<Vec<_>>()
                .into_iter()
                .collect();
            self.levels.push(next.into_iter().collect());
        }
        Ok(&self.levels[n])
    }

    pub fn graphs(&mut self, n: usize, mode: Mode) -> Result<Vec<Graph>, SearchError> {
        let codes = self.codes(n)?;
        Ok(codes
            .iter()
            .map(|&c| graph_from_code(n, c))
            .filter(|g| mode.accepts(g))
            .collect())
    }
}

/// One representative per isomorphism class of `n`-vertex graphs satisfying `mode`,
/// in increasing order of canonical code.
pub fn enumerate_graphs(n: usize, mode: Mode) -> Result<Vec<Graph>, SearchError> {
    GraphCatalog::new().graphs(n, mode)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let mut catalog = GraphCatalog::new();
        let all: Vec<usize> = (1..=7).map(|n| catalog.codes(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156, 1044]);
        let connected: Vec<usize> = (1..=7)
            .map(|n| catalog.graphs(n, Mode::Connected).unwrap().len())
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853]);
        let two: Vec<usize> = (3..=7)
            .map(|n| catalog.graphs(n, Mode::TwoConnected).unwrap().len())
            .collect();
        assert_eq!(two, vec![1, 3, 10, 56, 468]);
        assert!(catalog.codes(10).is_err());
    }
}
