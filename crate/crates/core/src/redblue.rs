//! Graphs whose edges are colored red or blue.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{count_cliques, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "R")]
    Red,
    #[serde(rename = "B")]
    Blue,
}

impl Color {
    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

/// A graph together with a red/blue coloring of its edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RedBlueGraph {
    graph: Graph,
    blue: Vec<FixedBitSet>,
}

impl RedBlueGraph {
    /// Every edge of `graph` gets `color`.
    pub fn monochrome(graph: Graph, color: Color) -> Self {
        let n = graph.n();
        let blue = match color {
            Color::Red => vec![FixedBitSet::with_capacity(n); n],
            Color::Blue => (0..n).map(|v| graph.neighbor_set(v).clone()).collect(),
        };
        Self { graph, blue }
    }

    pub fn from_colored_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Color)>,
    {
        let mut rb = Self::monochrome(Graph::empty(n), Color::Red);
        for (u, v, c) in edges {
            if !rb.graph.add_edge(u, v)? {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            if c == Color::Blue {
                rb.blue[u].insert(v);
                rb.blue[v].insert(u);
            }
        }
        Ok(rb)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        if !self.graph.has_edge(u, v) {
            None
        } else if self.blue[u].contains(v) {
            Some(Color::Blue)
        } else {
            Some(Color::Red)
        }
    }

    pub fn set_color(&mut self, u: usize, v: usize, c: Color) -> Result<(), GraphError> {
        if !self.graph.has_edge(u, v) {
            return Err(GraphError::MissingEdge(format!("{u}-{v}")));
        }
        let blue = c == Color::Blue;
        self.blue[u].set(v, blue);
        self.blue[v].set(u, blue);
        Ok(())
    }

    /// Adds a colored edge; returns `false` (leaving the graph unchanged) if it already exists.
    pub fn add_edge(&mut self, u: usize, v: usize, c: Color) -> Result<bool, GraphError> {
        if !self.graph.add_edge(u, v)? {
            return Ok(false);
        }
        self.set_color(u, v, c)?;
        Ok(true)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let removed = self.graph.remove_edge(u, v)?;
        if removed {
            self.blue[u].set(v, false);
            self.blue[v].set(u, false);
        }
        Ok(removed)
    }

    /// Edges with colors, in lexicographic order.
    pub fn colored_edges(&self) -> Vec<(usize, usize, Color)> {
        self.graph
            .edges()
            .into_iter()
            .map(|(u, v)| (u, v, self.color(u, v).unwrap()))
            .collect()
    }

    pub fn red_graph(&self) -> Graph {
        self.graph_of(Color::Red)
    }

    pub fn blue_graph(&self) -> Graph {
        self.graph_of(Color::Blue)
    }

    fn graph_of(&self, c: Color) -> Graph {
        let mut g = Graph::empty(self.n());
        for (u, v, col) in self.colored_edges() {
            if col == c {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    pub fn blue_count(&self) -> usize {
        self.blue.iter().map(|s| s.count_ones(..)).sum::<usize>() / 2
    }

    /// Blue edges plus red `r`-cliques.
    pub fn g_r(&self, r: usize) -> u64 {
        self.blue_count() as u64 + count_cliques(&self.red_graph(), r)
    }
}

impl fmt::Debug for RedBlueGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RedBlueGraph(n={}, edges={:?})", self.n(), self.colored_edges())
    }
}
