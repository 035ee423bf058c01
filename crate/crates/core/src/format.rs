//! Line-oriented text formats for hypergraphs, graphs and red-blue graphs.
//!
//! * hypergraph: header `n r m`, then `m` lines of `r` strictly increasing vertex ids;
//! * graph: header `n m`, then `m` lines `u v` with `u < v`;
//! * red-blue graph: header `n m`, then `m` lines `u v c` with `u < v` and `c` in `{R, B}`.
//!
//! Lines starting with `#` and blank lines are ignored when parsing. Serialization
//! writes sorted lines separated by `\n`, each ending in `\n`, with no trailing spaces.

use std::fmt::Write as _;

use crate::error::FormatError;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::redblue::{Color, RedBlueGraph};

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    /// Next significant line as `(line number, tokens)`.
    fn next_tokens(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, line) in self.inner.by_ref() {
            self.last = i + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            return Some((i + 1, trimmed.split_whitespace().collect()));
        }
        None
    }

    fn expect_tokens(&mut self, what: &str) -> Result<(usize, Vec<&'a str>), FormatError> {
        self.next_tokens()
            .ok_or_else(|| FormatError::new(self.last + 1, format!("unexpected end of input, expected {what}")))
    }

    fn finish(mut self) -> Result<(), FormatError> {
        match self.next_tokens() {
            Some((line, _)) => Err(FormatError::new(line, "more lines than declared in the header")),
            None => Ok(()),
        }
    }
}

fn number(line: usize, token: &str, name: &str) -> Result<usize, FormatError> {
    token
        .parse()
        .map_err(|_| FormatError::new(line, format!("{name} must be a non-negative integer, got `{token}`")))
}

fn arity(line: usize, tokens: &[&str], expected: usize, shape: &str) -> Result<(), FormatError> {
    if tokens.len() == expected {
        Ok(())
    } else {
        Err(FormatError::new(
            line,
            format!("expected `{shape}` ({expected} fields), got {} fields", tokens.len()),
        ))
    }
}

fn vertex(line: usize, token: &str, n: usize) -> Result<usize, FormatError> {
    let v = number(line, token, "vertex id")?;
    if v >= n {
        return Err(FormatError::new(line, format!("vertex {v} out of range 0..{n}")));
    }
    Ok(v)
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, FormatError> {
    let mut lines = Lines::new(text);
    let (hl, header) = lines.expect_tokens("header `n r m`")?;
    arity(hl, &header, 3, "n r m")?;
    let n = number(hl, header[0], "n")?;
    let r = number(hl, header[1], "r")?;
    let m = number(hl, header[2], "m")?;
    if r < 2 {
        return Err(FormatError::new(hl, format!("uniformity must be at least 2, got {r}")));
    }
    let mut edges: Vec<(usize, Vec<usize>)> = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, tokens) = lines.expect_tokens("a hyperedge line")?;
        arity(line, &tokens, r, "v1 ... vr")?;
        let e = tokens
            .iter()
            .map(|t| vertex(line, t, n))
            .collect::<Result<Vec<_>, _>>()?;
        if e.windows(2).any(|w| w[0] >= w[1]) {
            return Err(FormatError::new(line, "hyperedge vertices must be strictly increasing"));
        }
        edges.push((line, e));
    }
    lines.finish()?;
    let mut sorted = edges.clone();
    sorted.sort_by(|a, b| a.1.cmp(&b.1));
    if let Some(w) = sorted.windows(2).find(|w| w[0].1 == w[1].1) {
        let line = w[0].0.max(w[1].0);
        return Err(FormatError::new(line, format!("duplicate hyperedge {:?}", w[1].1)));
    }
    Hypergraph::new(n, r, edges.into_iter().map(|(_, e)| e).collect())
        .map_err(|e| FormatError::new(hl, e.to_string()))
}

pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {} {}\n", h.n(), h.r(), h.edge_count());
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

type PairLines = (usize, Vec<(usize, usize, Option<Color>)>);

fn parse_pair_lines(
    text: &str,
    colored: bool,
) -> Result<PairLines, FormatError> {
    let mut lines = Lines::new(text);
    let (hl, header) = lines.expect_tokens("header `n m`")?;
    arity(hl, &header, 2, "n m")?;
    let n = number(hl, header[0], "n")?;
    let m = number(hl, header[1], "m")?;
    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(m);
    let shape = if colored { "u v c" } else { "u v" };
    for _ in 0..m {
        let (line, tokens) = lines.expect_tokens("an edge line")?;
        arity(line, &tokens, if colored { 3 } else { 2 }, shape)?;
        let u = vertex(line, tokens[0], n)?;
        let v = vertex(line, tokens[1], n)?;
        if u >= v {
            return Err(FormatError::new(line, format!("edge endpoints must satisfy u < v, got {u} {v}")));
        }
        if !seen.insert((u, v)) {
            return Err(FormatError::new(line, format!("duplicate edge {u} {v}")));
        }
        let color = if colored {
            Some(match tokens[2] {
                "R" => Color::Red,
                "B" => Color::Blue,
                other => {
                    return Err(FormatError::new(line, format!("color must be R or B, got `{other}`")))
                }
            })
        } else {
            None
        };
        edges.push((u, v, color));
    }
    lines.finish()?;
    Ok((n, edges))
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let (n, edges) = parse_pair_lines(text, false)?;
    Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v))).map_err(|e| FormatError::new(1, e.to_string()))
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_red_blue(text: &str) -> Result<RedBlueGraph, FormatError> {
    let (n, edges) = parse_pair_lines(text, true)?;
    RedBlueGraph::from_colored_edges(n, edges.into_iter().map(|(u, v, c)| (u, v, c.unwrap())))
        .map_err(|e| FormatError::new(1, e.to_string()))
}

pub fn serialize_red_blue(g: &RedBlueGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.graph().edge_count());
    for (u, v, c) in g.colored_edges() {
        let _ = writeln!(out, "{u} {v} {}", c.letter());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypergraph_round_trip() {
        let text = "5 3 2\n0 1 2\n1 3 4\n";
        let h = parse_hypergraph(text).unwrap();
        assert_eq!(serialize_hypergraph(&h), text);
    }

    #[test]
    fn comments_and_unsorted_lines() {
        let h = parse_hypergraph("# two triangles\n5 3 2\n2 3 4\n# middle\n0 1 2\n").unwrap();
        assert_eq!(serialize_hypergraph(&h), "5 3 2\n0 1 2\n2 3 4\n");
    }

    #[test]
    fn line_numbered_errors() {
        let err = parse_hypergraph("4 3 2\n0 1 2\n2 1 3\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = parse_hypergraph("4 3 2\n0 1 2\n0 1 2\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = parse_hypergraph("4 3 1\n0 1 9\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_graph("3 1\n0 1\n1 2\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = parse_red_blue("3 1\n0 1 G\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_graph("3 2\n0 1\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = parse_graph("3 1\n1 0\n").unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn red_blue_round_trip() {
        let text = "4 3\n0 1 R\n1 2 B\n2 3 R\n";
        assert_eq!(serialize_red_blue(&parse_red_blue(text).unwrap()), text);
        let g = "4 2\n0 3\n1 2\n";
        assert_eq!(serialize_graph(&parse_graph(g).unwrap()), g);
    }
}
