//! The Kelmans operation, red-blue graph parameters and the recoloring pipeline on
//! `W(n, k, s)` graphs.

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{binom, w_graph, WShape};
use crate::graph::{count_cliques, list_cliques, Graph};
use crate::redblue::{Color, RedBlueGraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KelmansError {
    #[error("the two vertices of a Kelmans operation must differ")]
    SameVertex,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("parameter index must be at least 2, got {0}")]
    SmallIndex(usize),
    #[error("g_r needs a red-blue graph")]
    NeedsColoring,
    #[error("exact P* is limited to {limit} edges, graph has {edges}; enable the heuristic for a lower bound")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("need 0 <= i <= d <= t and r >= 3, got d = {d}, i = {i}, t = {t}, r = {r}")]
    BoundArguments { d: u64, i: u64, r: u64, t: u64 },
    #[error("input is not the labeled W({n}, {k}, {s})")]
    NotWShaped { n: usize, k: usize, s: usize },
    #[error("pipeline needs k >= 2r + 2 and a W(n, k-1, s) or W(n, k, s) input; got k = {k}, r = {r}, W order {order}")]
    PipelineParameters { k: usize, r: usize, order: usize },
}

fn check_pair(n: usize, u: usize, v: usize) -> Result<(), KelmansError> {
    if u == v {
        return Err(KelmansError::SameVertex);
    }
    for vertex in [u, v] {
        if vertex >= n {
            return Err(KelmansError::VertexOutOfRange { vertex, n });
        }
    }
    Ok(())
}

/// `G[u -> v]`: every edge `ux` with `x` not adjacent to `v` (and `x != v`) is replaced by `vx`.
pub fn kelmans(g: &Graph, u: usize, v: usize) -> Result<Graph, KelmansError> {
    check_pair(g.n(), u, v)?;
    let mut out = g.clone();
    let moving: Vec<usize> = g.neighbors(u).filter(|&x| x != v && !g.has_edge(v, x)).collect();
    for x in moving {
        out.remove_unchecked(u, x);
        out.insert_unchecked(v, x);
    }
    Ok(out)
}

/// Colored Kelmans operation: an edge `ux` with `x` not adjacent to `v` moves to `vx` keeping
/// its color; when `ux` is red and `vx` is blue the two colors are exchanged.
pub fn kelmans_colored(g: &RedBlueGraph, u: usize, v: usize) -> Result<RedBlueGraph, KelmansError> {
    check_pair(g.n(), u, v)?;
    let mut out = g.clone();
    let under = g.graph();
    for x in under.neighbors(u).filter(|&x| x != v).collect::<Vec<_>>() {
        let cu = g.color(u, x).unwrap();
        match g.color(v, x) {
            None => {
                out.remove_edge(u, x).expect("edge present");
                out.add_edge(v, x, cu).expect("edge absent");
            }
            Some(Color::Blue) if cu == Color::Red => {
                out.set_color(u, x, Color::Blue).expect("edge present");
                out.set_color(v, x, Color::Red).expect("edge present");
            }
            Some(_) => {}
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParameterSpec {
    /// Number of `j`-cliques.
    CliqueCount(usize),
    /// Blue edges plus red `r`-cliques of a colored graph.
    GR(usize),
    /// Best `g_r` over all red-blue colorings, exact up to `brute_limit` edges.
    PStar { r: usize, brute_limit: usize, heuristic: bool },
}

impl ParameterSpec {
    pub const DEFAULT_BRUTE_LIMIT: usize = 22;

    pub fn p_star(r: usize) -> Self {
        ParameterSpec::PStar {
            r,
            brute_limit: Self::DEFAULT_BRUTE_LIMIT,
            heuristic: false,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum ParamInput<'a> {
    Graph(&'a Graph),
    RedBlue(&'a RedBlueGraph),
}

impl ParamInput<'_> {
    fn graph(&self) -> &Graph {
        match self {
            ParamInput::Graph(g) => g,
            ParamInput::RedBlue(g) => g.graph(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamValue {
    pub value: u64,
    /// `false` when the value is only a heuristic lower bound.
    pub exact: bool,
}

pub fn evaluate(input: ParamInput<'_>, spec: ParameterSpec) -> Result<ParamValue, KelmansError> {
    let exact = |value| Ok(ParamValue { value, exact: true });
    match spec {
        ParameterSpec::CliqueCount(j) if j < 2 => Err(KelmansError::SmallIndex(j)),
        ParameterSpec::CliqueCount(j) => exact(count_cliques(input.graph(), j)),
        ParameterSpec::GR(r) if r < 2 => Err(KelmansError::SmallIndex(r)),
        ParameterSpec::GR(r) => match input {
            ParamInput::RedBlue(g) => exact(g.g_r(r)),
            ParamInput::Graph(_) => Err(KelmansError::NeedsColoring),
        },
        ParameterSpec::PStar { r, brute_limit, heuristic } => {
            let best = p_star(input.graph(), r, brute_limit, heuristic)?;
            Ok(ParamValue {
                value: best.value,
                exact: best.exact,
            })
        }
    }
}

/// An optimal (or, when not `exact`, a locally optimal) coloring for `g_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PStar {
    pub value: u64,
    pub exact: bool,
    pub coloring: RedBlueGraph,
}

/// Maximum of `g_r` over all red-blue colorings of `g`.
///
/// Exact search enumerates colorings as bitmasks over the lexicographic edge list (bit set
/// means red); ties go to the smallest mask. Above `brute_limit` edges a greedy single-edge
/// recoloring from the better monochrome coloring gives a lower bound, if `heuristic` is set.
pub fn p_star(g: &Graph, r: usize, brute_limit: usize, heuristic: bool) -> Result<PStar, KelmansError> {
    if r < 2 {
        return Err(KelmansError::SmallIndex(r));
    }
    let edges = g.edges();
    let m = edges.len();
    if m > brute_limit.min(30) {
        if !heuristic {
            return Err(KelmansError::TooManyEdges {
                edges: m,
                limit: brute_limit.min(30),
            });
        }
        return Ok(greedy_p_star(g, r));
    }
    let index = g.edge_index();
    let cliques: Vec<u32> = list_cliques(g, r)
        .iter()
        .map(|c| {
            let mut mask = 0u32;
            for (a, &u) in c.iter().enumerate() {
                for &v in &c[a + 1..] {
                    mask |= 1 << index[&(u, v)];
                }
            }
            mask
        })
        .collect();
    let value_of = |mask: u32| -> u64 {
        (m as u64 - u64::from(mask.count_ones())) + cliques.iter().filter(|&&c| c & mask == c).count() as u64
    };
    let total: u64 = 1 << m;
    let chunk: u64 = 1 << 14;
    let (value, mask) = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut best = (0u64, u32::MAX);
            for mask in c * chunk..((c + 1) * chunk).min(total) {
                let v = value_of(mask as u32);
                if v > best.0 || best.1 == u32::MAX {
                    best = (v, mask as u32);
                }
            }
            best
        })
        .reduce(
            || (0, u32::MAX),
            |a, b| {
                if b.1 == u32::MAX || (a.1 != u32::MAX && (a.0 > b.0 || (a.0 == b.0 && a.1 < b.1))) {
                    a
                } else {
                    b
                }
            },
        );
    let coloring = RedBlueGraph::from_colored_edges(
        g.n(),
        edges.iter().enumerate().map(|(i, &(u, v))| {
            (u, v, if mask >> i & 1 == 1 { Color::Red } else { Color::Blue })
        }),
    )
    .expect("edges of a simple graph");
    Ok(PStar {
        value,
        exact: true,
        coloring,
    })
}

fn greedy_p_star(g: &Graph, r: usize) -> PStar {
    let red = RedBlueGraph::monochrome(g.clone(), Color::Red);
    let blue = RedBlueGraph::monochrome(g.clone(), Color::Blue);
    let (mut current, mut value) = if red.g_r(r) >= blue.g_r(r) {
        let v = red.g_r(r);
        (red, v)
    } else {
        let v = blue.g_r(r);
        (blue, v)
    };
    let edges = g.edges();
    loop {
        let mut improved = false;
        for &(u, v) in &edges {
            let old = current.color(u, v).unwrap();
            let flipped = if old == Color::Red { Color::Blue } else { Color::Red };
            current.set_color(u, v, flipped).unwrap();
            let candidate = current.g_r(r);
            if candidate > value {
                value = candidate;
                improved = true;
            } else {
                current.set_color(u, v, old).unwrap();
            }
        }
        if !improved {
            break;
        }
    }
    PStar {
        value,
        exact: false,
        coloring: current,
    }
}

/// Blue edges plus red `r`-cliques at one vertex, against its cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexBound {
    /// `i + C(d - i, r - 1)`.
    pub value: u64,
    /// `C(t, r - 1)` for `d = t`, `C(t, r - 1) - 1` for `d < t`.
    pub cap: u64,
    pub within_cap: bool,
}

/// Bound on the blue edges and red `r`-cliques at a vertex of degree `d` with `i` blue edges.
pub fn per_vertex_bound(d: u64, i: u64, r: u64, t: u64) -> Result<VertexBound, KelmansError> {
    if i > d || d > t || r < 3 {
        return Err(KelmansError::BoundArguments { d, i, r, t });
    }
    let value = i + binom(d - i, r - 1) as u64;
    let full = binom(t, r - 1) as u64;
    let cap = if d == t { full } else { full.saturating_sub(1) };
    Ok(VertexBound {
        value,
        cap,
        within_cap: value <= cap,
    })
}

/// Which extremal family the pipeline input comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PipelineCase {
    /// `W(n, k - 1, s)`, with `t = floor(k/2) - 1`.
    Path,
    /// `W(n, k, s)`, with `t = floor((k - 1)/2)`.
    Cycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PipelineBranch {
    /// `t > r`: recolor toward monored.
    General,
    /// `t = r` with every edge inside `X` red: recolor toward monored.
    SmallRed,
    /// `t = r` with a blue edge inside `X`: recolor toward monoblue.
    SmallBlue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecolorStep {
    pub step_id: usize,
    pub description: String,
    pub g_r_before: u64,
    pub g_r_after: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineRun {
    pub case: PipelineCase,
    pub branch: PipelineBranch,
    pub t: usize,
    pub terminal: RedBlueGraph,
    pub terminal_color: Option<Color>,
    /// Only steps that changed at least one edge color.
    pub steps: Vec<RecolorStep>,
}

impl PipelineRun {
    pub fn steps_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for step in &self.steps {
            w.serialize(step).expect("step serializes");
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
    }

    pub fn is_monotone(&self) -> bool {
        self.steps.iter().all(|s| s.g_r_after >= s.g_r_before)
    }
}

/// The common color of all edges, if there is one.
pub fn monochrome_color(g: &RedBlueGraph) -> Option<Color> {
    let blue = g.blue_count();
    let m = g.graph().edge_count();
    if blue == m {
        Some(Color::Blue)
    } else if blue == 0 {
        Some(Color::Red)
    } else {
        None
    }
}

/// Recolors a red-blue coloring of `W(n, k-1, s)` (path case) or `W(n, k, s)` (cycle case)
/// into a monochrome one, one edge class at a time, logging `g_r` around every step.
///
/// With `t > r` the edges at `Z` are made red together with the edges inside `X`, then the
/// `X`-`Y` edges, then the edges inside `Y`. With `t = r` and all of `X` red the same order
/// is used without touching `X`; with a blue edge inside `X` the edges at `Z` turn blue and
/// then everything else does.
pub fn recolor_pipeline(
    g: &RedBlueGraph,
    shape: WShape,
    r: usize,
    k: usize,
) -> Result<PipelineRun, KelmansError> {
    let case = if shape.k + 1 == k {
        PipelineCase::Path
    } else if shape.k == k {
        PipelineCase::Cycle
    } else {
        return Err(KelmansError::PipelineParameters { k, r, order: shape.k });
    };
    if r < 2 || k < 2 * r + 2 {
        return Err(KelmansError::PipelineParameters { k, r, order: shape.k });
    }
    if g.graph() != &w_graph(&shape) {
        return Err(KelmansError::NotWShaped {
            n: shape.n,
            k: shape.k,
            s: shape.s,
        });
    }
    let t = match case {
        PipelineCase::Path => k / 2 - 1,
        PipelineCase::Cycle => (k - 1) / 2,
    };
    let (x, y, z) = (shape.x(), shape.y(), shape.z());
    let in_x = |v: usize| x.contains(&v);
    let in_y = |v: usize| y.contains(&v);
    let in_z = |v: usize| z.contains(&v);
    let x_internal = move |u: usize, v: usize| in_x(u) && in_x(v);
    let x_y = move |u: usize, v: usize| (in_x(u) && in_y(v)) || (in_y(u) && in_x(v));
    let y_internal = move |u: usize, v: usize| in_y(u) && in_y(v);
    let z_incident = move |u: usize, v: usize| in_z(u) || in_z(v);

    let x_all_red = g
        .colored_edges()
        .iter()
        .all(|&(u, v, c)| !x_internal(u, v) || c == Color::Red);
    let branch = if t > r {
        PipelineBranch::General
    } else if x_all_red {
        PipelineBranch::SmallRed
    } else {
        PipelineBranch::SmallBlue
    };

    type Class<'a> = Box<dyn Fn(usize, usize) -> bool + 'a>;
    let plan: Vec<(&str, Class<'_>, Color)> = match branch {
        PipelineBranch::General => vec![
            (
                "edges at Z and inside X to red",
                Box::new(move |u, v| z_incident(u, v) || x_internal(u, v)),
                Color::Red,
            ),
            ("X-Y edges to red", Box::new(x_y), Color::Red),
            ("edges inside Y to red", Box::new(y_internal), Color::Red),
        ],
        PipelineBranch::SmallRed => vec![
            ("edges at Z to red", Box::new(z_incident), Color::Red),
            ("X-Y edges to red", Box::new(x_y), Color::Red),
            ("edges inside Y to red", Box::new(y_internal), Color::Red),
        ],
        PipelineBranch::SmallBlue => vec![
            ("edges at Z to blue", Box::new(z_incident), Color::Blue),
            ("remaining edges to blue", Box::new(|_, _| true), Color::Blue),
        ],
    };

    let mut current = g.clone();
    let mut steps = Vec::new();
    for (description, class, color) in plan {
        let targets: Vec<(usize, usize)> = current
            .colored_edges()
            .into_iter()
            .filter(|&(u, v, c)| c != color && class(u, v))
            .map(|(u, v, _)| (u, v))
            .collect();
        if targets.is_empty() {
            continue;
        }
        let before = current.g_r(r);
        for (u, v) in targets {
            current.set_color(u, v, color).expect("edge present");
        }
        steps.push(RecolorStep {
            step_id: steps.len() + 1,
            description: description.to_string(),
            g_r_before: before,
            g_r_after: current.g_r(r),
        });
    }
    Ok(PipelineRun {
        case,
        branch,
        t,
        terminal_color: monochrome_color(&current),
        terminal: current,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::construct_w;

    #[test]
    fn kelmans_on_c5() {
        let c5 = Graph::cycle(5);
        let out = kelmans(&c5, 3, 0).unwrap();
        assert_eq!(out.edges(), vec![(0, 1), (0, 2), (0, 4), (1, 2), (3, 4)]);
        assert_eq!(count_cliques(&out, 3), 1);
        assert_eq!(kelmans(&Graph::path(3), 0, 2).unwrap(), Graph::path(3));
        assert_eq!(kelmans(&c5, 1, 1), Err(KelmansError::SameVertex));
    }

    #[test]
    fn star_moves_to_leaf() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let moved = kelmans(&star, 0, 1).unwrap();
        assert_eq!(moved.edges(), vec![(0, 1), (1, 2), (1, 3)]);
    }

    #[test]
    fn colored_exchange() {
        let rb = RedBlueGraph::from_colored_edges(3, [(0, 2, Color::Red), (1, 2, Color::Blue)]).unwrap();
        let out = kelmans_colored(&rb, 0, 1).unwrap();
        assert_eq!(out.color(0, 2), Some(Color::Blue));
        assert_eq!(out.color(1, 2), Some(Color::Red));

        let mut c5 = RedBlueGraph::monochrome(Graph::cycle(5), Color::Red);
        c5.set_color(3, 4, Color::Blue).unwrap();
        let out = kelmans_colored(&c5, 3, 0).unwrap();
        assert_eq!(out.blue_count(), 1);
        assert_eq!(out.graph(), &kelmans(&Graph::cycle(5), 3, 0).unwrap());
    }

    #[test]
    fn p_star_small() {
        assert_eq!(p_star(&Graph::complete(3), 3, 22, false).unwrap().value, 3);
        assert_eq!(p_star(&Graph::complete(4), 3, 22, false).unwrap().value, 6);
        assert!(p_star(&Graph::complete(8), 3, 22, false).is_err());
        let approx = p_star(&Graph::complete(8), 3, 22, true).unwrap();
        assert!(!approx.exact);
        assert!(approx.value >= 56);
    }

    #[test]
    fn vertex_bounds() {
        assert_eq!(per_vertex_bound(4, 0, 3, 4).unwrap().value, 6);
        let b = per_vertex_bound(4, 4, 3, 4).unwrap();
        assert_eq!((b.value, b.within_cap), (4, true));
        let b = per_vertex_bound(3, 0, 3, 4).unwrap();
        assert_eq!((b.value, b.cap, b.within_cap), (3, 5, true));
        assert!(per_vertex_bound(5, 0, 3, 4).is_err());
    }

    #[test]
    fn monored_input_is_a_fixed_point() {
        let shape = WShape::new(33, 9, 4).unwrap();
        let g = RedBlueGraph::monochrome(construct_w(33, 9, 4).unwrap(), Color::Red);
        let run = recolor_pipeline(&g, shape, 3, 10).unwrap();
        assert!(run.steps.is_empty());
        assert_eq!(run.terminal, g);
        assert_eq!(run.steps_csv(), "");
    }

    #[test]
    fn rejects_foreign_graphs() {
        let shape = WShape::new(20, 7, 3).unwrap();
        let g = RedBlueGraph::monochrome(Graph::complete(20), Color::Red);
        assert!(matches!(
            recolor_pipeline(&g, shape, 3, 8),
            Err(KelmansError::NotWShaped { .. })
        ));
    }
}
