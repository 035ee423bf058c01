//! Exhaustive and branch-and-bound searches over small graphs and hypergraphs.

pub mod canonical;
pub mod enumerate;
pub mod hyper;
pub mod random;
pub mod turan;

use serde::Serialize;

pub use enumerate::{enumerate_graphs, GraphCatalog, Mode};
pub use hyper::{exact_hypergraph_turan, local_maximality, BergePattern, HyperSearchOptions};
pub use turan::{verify_graph_turan, GraphTuranKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("invalid arguments: {0}")]
    Invalid(String),
    #[error("counterexample to {problem}: {detail}\n{witness}")]
    Counterexample {
        problem: String,
        detail: String,
        witness: String,
    },
}

/// One computed quantity, with the structure attaining it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub problem: String,
    pub n: usize,
    pub r: Option<usize>,
    pub k: Option<usize>,
    pub mode: Mode,
    pub value: Option<u64>,
    /// The closed-form value or threshold the search is compared with, if any.
    pub bound: Option<String>,
    /// Text serialization of the witness.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_file: Option<String>,
    /// Search nodes, or checked instances for exhaustive sweeps.
    pub nodes: u64,
    /// Wall-clock time; left empty in canonical outputs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
    pub flags: Vec<String>,
}

impl SearchReport {
    pub fn new(problem: impl Into<String>, n: usize, mode: Mode) -> Self {
        Self {
            problem: problem.into(),
            n,
            r: None,
            k: None,
            mode,
            value: None,
            bound: None,
            witness: None,
            witness_file: None,
            nodes: 0,
            seconds: None,
            flags: Vec::new(),
        }
    }

    pub const CSV_HEADER: [&'static str; 11] = [
        "problem",
        "n",
        "r",
        "k",
        "mode",
        "value",
        "bound",
        "witness_file",
        "nodes",
        "seconds",
        "flags",
    ];

    pub fn csv_record(&self) -> [String; 11] {
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        [
            self.problem.clone(),
            self.n.to_string(),
            opt(self.r),
            opt(self.k),
            self.mode.name().to_string(),
            self.value.map(|v| v.to_string()).unwrap_or_default(),
            self.bound.clone().unwrap_or_default(),
            self.witness_file.clone().unwrap_or_default(),
            self.nodes.to_string(),
            self.seconds.map(|s| format!("{s:.3}")).unwrap_or_default(),
            self.flags.join(";"),
        ]
    }
}

/// Reports as CSV with a header row.
pub fn reports_csv(reports: &[SearchReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SearchReport::CSV_HEADER).expect("in-memory write");
    for r in reports {
        w.write_record(r.csv_record()).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}
