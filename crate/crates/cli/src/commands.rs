use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;
use std::{fmt, fs, io};

use berge_core::berge::{find_berge_path, has_berge_cycle_at_least, longest_berge_cycle, longest_berge_path};
use berge_core::classify::{classify_components, classify_leaf_blocks, ClassifyError};
use berge_core::constructions::{
    construct_g2, construct_g3, construct_h, construct_w, formula, monochrome, ConstructionError, FormulaFamily,
    FormulaQuery, WShape,
};
use berge_core::format::{
    parse_graph, parse_hypergraph, parse_red_blue, serialize_graph, serialize_hypergraph, serialize_red_blue,
};
use berge_core::hypergraph::{hypergraph_cut_hyperedges, hypergraph_cut_vertices, is_connected_hypergraph};
use berge_core::kelmans::{
    evaluate, kelmans, kelmans_colored, p_star, recolor_pipeline, KelmansError, ParamInput, ParameterSpec,
};
use berge_core::reduction::{g_r, reduce, verify_certificate};
use berge_core::search::random::{
    random_connected_hypergraph, random_graph, random_hypergraph, random_two_connected_graph,
};
use berge_core::search::{
    exact_hypergraph_turan, local_maximality, reports_csv, verify_graph_turan, BergePattern, GraphCatalog,
    GraphTuranKind, HyperSearchOptions, Mode, SearchError, SearchReport,
};
use berge_core::verify::run_all;
use berge_core::{Color, FormatError, Graph, GraphError, Hypergraph};
use serde_json::{json, Value};

use crate::{
    CheckArgs, ClassifyArgs, Cli, ColorArg, Command, ConstructArgs, ConstructKind, FormulaArgs, GrArgs, KelmansArgs,
    ModeArg, OutputFormat, Param, PatternArg, Property, RandomKind, ReduceArgs, SearchProblem, VerifyArgs,
};

const OK: u8 = 0;
const VIOLATED: u8 = 1;
const BUDGET: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input { path: PathBuf, error: FormatError },
    Io { path: PathBuf, error: io::Error },
    Violated(String),
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Violated(_) => VIOLATED,
            CliError::Budget(_) => BUDGET,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Violated(m) | CliError::Budget(m) => f.write_str(m),
            CliError::Input { path, error } => write!(f, "{}: {error}", path.display()),
            CliError::Io { path, error } => write!(f, "{}: {error}", path.display()),
        }
    }
}

fn usage(e: impl fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        usage(e)
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        usage(e)
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        usage(e)
    }
}

impl From<KelmansError> for CliError {
    fn from(e: KelmansError) -> Self {
        match e {
            KelmansError::TooManyEdges { .. } => CliError::Budget(e.to_string()),
            _ => usage(e),
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::TooLarge(_) => CliError::Budget(e.to_string()),
            SearchError::Invalid(_) => usage(e),
            SearchError::Counterexample { .. } => CliError::Violated(e.to_string()),
        }
    }
}

type CliResult = Result<u8, CliError>;

pub fn run(cli: &Cli) -> CliResult {
    let fmt = cli.format;
    match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Check(a) => check(a, fmt),
        Command::Reduce(a) => reduce_cmd(a, fmt),
        Command::Kelmans(a) => kelmans_cmd(a),
        Command::Gr(a) => gr(a, fmt),
        Command::Classify(a) => classify(a, fmt),
        Command::Formula(a) => formula_cmd(a, fmt),
        Command::Verify(a) => verify(a, fmt),
        Command::Search(a) => search(&a.problem, fmt),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|error| CliError::Io { path: path.to_path_buf(), error })
}

fn parsed<T>(path: &Path, parse: fn(&str) -> Result<T, FormatError>) -> Result<T, CliError> {
    parse(&read(path)?).map_err(|error| CliError::Input { path: path.to_path_buf(), error })
}

/// A plain graph file, or the underlying graph of a red-blue file.
fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = read(path)?;
    match parse_graph(&text) {
        Ok(g) => Ok(g),
        Err(plain) => match parse_red_blue(&text) {
            Ok(rb) => Ok(rb.graph().clone()),
            Err(_) => Err(CliError::Input { path: path.to_path_buf(), error: plain }),
        },
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text).map_err(|error| CliError::Io { path: path.to_path_buf(), error }),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable output")
}

fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}

fn need(v: Option<usize>, flag: &str, what: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("{what} needs --{flag}")))
}

fn construct(a: &ConstructArgs) -> CliResult {
    let n = a.n;
    let graph = match a.kind {
        ConstructKind::HPath | ConstructKind::HCycle => {
            let k = need(a.k, "k", "construct h-path/h-cycle")?;
            let r = need(a.r, "r", "construct h-path/h-cycle")?;
            let order = if a.kind == ConstructKind::HCycle { k + 1 } else { k };
            let h = construct_h(n, order, r)?;
            if h.degenerate {
                eprintln!("note: H({n},{order},{r}) has a core of at most r-2 vertices and is not extremal");
            }
            emit(a.output.as_deref(), &serialize_hypergraph(&h.hypergraph))?;
            return Ok(OK);
        }
        ConstructKind::W => construct_w(n, need(a.k, "k", "construct w")?, need(a.s, "s", "construct w")?)?,
        ConstructKind::G2 => construct_g2(n, need(a.j, "j", "construct g2")?)?,
        ConstructKind::G3 => {
            if a.stars.is_empty() {
                return Err(usage("construct g3 needs --stars"));
            }
            construct_g3(n, &a.stars)?
        }
    };
    let text = match a.color {
        Some(ColorArg::Red) => serialize_red_blue(&monochrome(&graph, Color::Red)),
        Some(ColorArg::Blue) => serialize_red_blue(&monochrome(&graph, Color::Blue)),
        None => serialize_graph(&graph),
    };
    emit(a.output.as_deref(), &text)?;
    Ok(OK)
}

/// Outcome of a property query, rendered in any output format.
struct Outcome {
    property: &'static str,
    k: Option<usize>,
    holds: Option<bool>,
    value: Option<usize>,
    witness: Option<Value>,
    notes: Vec<String>,
}

impl Outcome {
    fn new(property: &'static str, k: Option<usize>) -> Self {
        Self { property, k, holds: None, value: None, witness: None, notes: Vec::new() }
    }

    fn render(&self, fmt: OutputFormat) -> String {
        match fmt {
            OutputFormat::Json => pretty(&json!({
                "property": self.property,
                "k": self.k,
                "holds": self.holds,
                "value": self.value,
                "witness": self.witness,
                "notes": self.notes,
            })),
            OutputFormat::Csv => csv_table(
                &["property", "k", "holds", "value"],
                &[vec![
                    self.property.to_string(),
                    self.k.map(|k| k.to_string()).unwrap_or_default(),
                    self.holds.map(|h| h.to_string()).unwrap_or_default(),
                    self.value.map(|v| v.to_string()).unwrap_or_default(),
                ]],
            ),
            OutputFormat::Text => {
                let mut s = String::from(self.property);
                if let Some(k) = self.k {
                    write!(s, " k={k}").unwrap();
                }
                match self.holds {
                    Some(true) => s.push_str(": holds"),
                    Some(false) => s.push_str(": violated"),
                    None => {}
                }
                if let Some(v) = self.value {
                    write!(s, ": {v}").unwrap();
                }
                s.push('\n');
                for note in &self.notes {
                    writeln!(s, "{note}").unwrap();
                }
                if let Some(w) = &self.witness {
                    writeln!(s, "witness: {w}").unwrap();
                }
                s
            }
        }
    }

    fn code(&self) -> u8 {
        if self.holds == Some(false) {
            VIOLATED
        } else {
            OK
        }
    }
}

fn check(a: &CheckArgs, fmt: OutputFormat) -> CliResult {
    let h = parsed(&a.input, parse_hypergraph)?;
    let to_value = |e| serde_json::to_value(e).expect("embedding serializes");
    let out = match a.property {
        Property::BergePathFree => {
            let k = need(a.k, "k", "berge-path-free")?;
            let mut o = Outcome::new("berge-path-free", Some(k));
            let found = find_berge_path(&h, k);
            o.holds = Some(found.is_none());
            o.witness = found.map(to_value);
            o
        }
        Property::BergeCycleFree => {
            let k = need(a.k, "k", "berge-cycle-free")?;
            let mut o = Outcome::new("berge-cycle-free", Some(k));
            let found = has_berge_cycle_at_least(&h, k);
            o.holds = Some(found.is_none());
            o.witness = found.map(to_value);
            o
        }
        Property::Connected => {
            let mut o = Outcome::new("connected", None);
            o.holds = Some(is_connected_hypergraph(&h));
            o
        }
        Property::TwoConnected => two_connected(&h),
        Property::LongestPath => {
            let mut o = Outcome::new("longest-path", None);
            let best = longest_berge_path(&h);
            o.value = Some(best.as_ref().map_or(usize::from(h.n() > 0), |e| e.order()));
            o.witness = best.map(to_value);
            o
        }
        Property::LongestCycle => {
            let mut o = Outcome::new("longest-cycle", None);
            let best = longest_berge_cycle(&h);
            o.value = Some(best.as_ref().map_or(0, |e| e.order()));
            o.witness = best.map(to_value);
            o
        }
    };
    emit(None, &out.render(fmt))?;
    Ok(out.code())
}

fn two_connected(h: &Hypergraph) -> Outcome {
    let mut o = Outcome::new("two-connected", None);
    if !is_connected_hypergraph(h) {
        o.holds = Some(false);
        o.notes.push("disconnected".into());
        return o;
    }
    let vertices = hypergraph_cut_vertices(h).expect("connected");
    let edges: Vec<Vec<usize>> = hypergraph_cut_hyperedges(h)
        .expect("connected")
        .into_iter()
        .map(|i| h.edge(i).to_vec())
        .collect();
    o.holds = Some(vertices.is_empty() && edges.is_empty());
    if !vertices.is_empty() {
        o.notes.push(format!("cut vertices: {vertices:?}"));
    }
    if !edges.is_empty() {
        o.notes.push(format!("cut hyperedges: {edges:?}"));
    }
    if o.holds == Some(false) {
        o.witness = Some(json!({ "cut_vertices": vertices, "cut_hyperedges": edges }));
    }
    o
}

fn reduce_cmd(a: &ReduceArgs, fmt: OutputFormat) -> CliResult {
    let h = parsed(&a.input, parse_hypergraph)?;
    let cert = reduce(&h);
    let verified = verify_certificate(&cert);
    if let Some(path) = &a.graph_out {
        emit(Some(path), &serialize_red_blue(&cert.output))?;
    }
    let Some(path) = &a.output else {
        emit(None, &cert.to_json())?;
        return match verified {
            Ok(()) => Ok(OK),
            Err(v) => Err(CliError::Violated(format!("certificate rejected: {v}"))),
        };
    };
    emit(Some(path), &cert.to_json())?;
    let value = g_r(&cert.output, h.r());
    let blue = cert.output.blue_count();
    let red = cert.output.graph().edge_count() - blue;
    let summary = match fmt {
        OutputFormat::Json => pretty(&json!({
            "hyperedges": h.edge_count(),
            "g_r": value,
            "red_edges": red,
            "blue_edges": blue,
            "verified": verified.is_ok(),
        })),
        OutputFormat::Csv => csv_table(
            &["hyperedges", "g_r", "red_edges", "blue_edges", "verified"],
            &[vec![
                h.edge_count().to_string(),
                value.to_string(),
                red.to_string(),
                blue.to_string(),
                verified.is_ok().to_string(),
            ]],
        ),
        OutputFormat::Text => format!(
            "e(H) = {}, g_r = {value}, red edges = {red}, blue edges = {blue}, certificate {}\n",
            h.edge_count(),
            if verified.is_ok() { "verified" } else { "rejected" }
        ),
    };
    emit(None, &summary)?;
    match verified {
        Ok(()) => Ok(OK),
        Err(v) => Err(CliError::Violated(format!("certificate rejected: {v}"))),
    }
}

fn kelmans_cmd(a: &KelmansArgs) -> CliResult {
    let text = if a.colored {
        let g = parsed(&a.input, parse_red_blue)?;
        serialize_red_blue(&kelmans_colored(&g, a.u, a.v)?)
    } else {
        serialize_graph(&kelmans(&load_graph(&a.input)?, a.u, a.v)?)
    };
    emit(a.output.as_deref(), &text)?;
    Ok(OK)
}

fn gr(a: &GrArgs, fmt: OutputFormat) -> CliResult {
    let (name, value, exact, coloring) = match a.param {
        Param::Recolor => return recolor(a, fmt),
        Param::Cliques => {
            let g = load_graph(&a.input)?;
            let v = evaluate(ParamInput::Graph(&g), ParameterSpec::CliqueCount(a.j))?;
            (format!("cliques j={}", a.j), v.value, v.exact, None)
        }
        Param::GR => {
            let g = parsed(&a.input, parse_red_blue)?;
            let v = evaluate(ParamInput::RedBlue(&g), ParameterSpec::GR(a.r))?;
            (format!("g_r r={}", a.r), v.value, v.exact, None)
        }
        Param::PStar => {
            let g = load_graph(&a.input)?;
            let best = p_star(&g, a.r, a.brute_limit, a.heuristic)?;
            (format!("p_star r={}", a.r), best.value, best.exact, Some(best.coloring))
        }
    };
    let text = match fmt {
        OutputFormat::Json => pretty(&json!({
            "parameter": name,
            "value": value,
            "exact": exact,
            "coloring": coloring.as_ref().map(serialize_red_blue),
        })),
        OutputFormat::Csv => csv_table(
            &["parameter", "value", "exact"],
            &[vec![name, value.to_string(), exact.to_string()]],
        ),
        OutputFormat::Text => {
            let mut s = format!("{name}: {value}{}\n", if exact { "" } else { " (lower bound)" });
            if let Some(c) = &coloring {
                s.push_str(&serialize_red_blue(c));
            }
            s
        }
    };
    emit(None, &text)?;
    Ok(OK)
}

fn recolor(a: &GrArgs, fmt: OutputFormat) -> CliResult {
    let g = parsed(&a.input, parse_red_blue)?;
    let k = need(a.k, "k", "--param recolor")?;
    let shape = WShape::new(g.n(), need(a.w_order, "w-order", "--param recolor")?, need(a.s, "s", "--param recolor")?)?;
    let run = recolor_pipeline(&g, shape, a.r, k)?;
    let text = match fmt {
        OutputFormat::Csv => {
            if run.steps.is_empty() {
                "step_id,description,g_r_before,g_r_after\n".to_string()
            } else {
                run.steps_csv()
            }
        }
        OutputFormat::Json => pretty(&json!({
            "case": run.case,
            "branch": run.branch,
            "t": run.t,
            "terminal_color": run.terminal_color,
            "terminal_g_r": run.terminal.g_r(a.r),
            "monotone": run.is_monotone(),
            "steps": run.steps,
        })),
        OutputFormat::Text => {
            let mut s = String::new();
            for step in &run.steps {
                writeln!(s, "{}. {}: {} -> {}", step.step_id, step.description, step.g_r_before, step.g_r_after)
                    .unwrap();
            }
            let color = match run.terminal_color {
                Some(Color::Red) => "monored",
                Some(Color::Blue) => "monoblue",
                None => "mixed",
            };
            writeln!(s, "terminal: {color}, g_r = {}", run.terminal.g_r(a.r)).unwrap();
            s
        }
    };
    emit(None, &text)?;
    Ok(if run.is_monotone() && run.terminal_color.is_some() { OK } else { VIOLATED })
}

fn classify(a: &ClassifyArgs, fmt: OutputFormat) -> CliResult {
    let g = load_graph(&a.input)?;
    let text = if a.leaf_blocks {
        let classes = classify_leaf_blocks(&g, a.k, a.threshold);
        match fmt {
            OutputFormat::Json => pretty(&classes),
            OutputFormat::Csv => csv_table(
                &["block", "cut_vertex", "edges", "label", "residue", "peeled"],
                &classes
                    .iter()
                    .map(|c| {
                        vec![
                            join(&c.block),
                            c.cut_vertex.map(|v| v.to_string()).unwrap_or_default(),
                            c.edges.to_string(),
                            label(&c.label),
                            join(&c.residue),
                            c.peel_trace.len().to_string(),
                        ]
                    })
                    .collect::<Vec<_>>(),
            ),
            OutputFormat::Text => classes
                .iter()
                .map(|c| {
                    format!(
                        "block {:?}{}: {}, {} edges, residue {:?}\n",
                        c.block,
                        c.cut_vertex.map(|v| format!(" at {v}")).unwrap_or_default(),
                        label(&c.label),
                        c.edges,
                        c.residue
                    )
                })
                .collect(),
        }
    } else {
        let classes = classify_components(&g, a.k)?;
        match fmt {
            OutputFormat::Json => pretty(&classes),
            OutputFormat::Csv => csv_table(
                &["vertices", "label", "core", "peeled"],
                &classes
                    .iter()
                    .map(|c| vec![join(&c.vertices), label(&c.label), join(&c.core_set), c.peel_trace.len().to_string()])
                    .collect::<Vec<_>>(),
            ),
            OutputFormat::Text => classes
                .iter()
                .map(|c| format!("component {:?}: {}, core {:?}\n", c.vertices, label(&c.label), c.core_set))
                .collect(),
        }
    };
    emit(None, &text)?;
    Ok(OK)
}

fn label(l: &impl serde::Serialize) -> String {
    match serde_json::to_value(l) {
        Ok(Value::String(s)) => s,
        other => format!("{other:?}"),
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn formula_cmd(a: &FormulaArgs, fmt: OutputFormat) -> CliResult {
    let family = FormulaFamily::from_str(&a.family)?;
    let v = formula(&FormulaQuery::new(family, a.n, a.k, a.r));
    if !v.in_hypothesis {
        eprintln!("note: parameters are outside the hypotheses of {family}");
    }
    let text = match fmt {
        OutputFormat::Json => pretty(&v),
        OutputFormat::Csv => csv_table(
            &["family", "n", "k", "r", "exact", "value", "in_hypothesis"],
            &[vec![
                family.name().into(),
                v.n.to_string(),
                v.k.to_string(),
                v.r.to_string(),
                v.exact.clone(),
                v.value.to_string(),
                v.in_hypothesis.to_string(),
            ]],
        ),
        OutputFormat::Text => v.value.to_string(),
    };
    emit(None, &text)?;
    Ok(OK)
}

/// First non-comment line of a seed file: `N` or `seed = N`.
fn read_seed(path: &Path) -> Result<u64, CliError> {
    let text = read(path)?;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let value = line.strip_prefix("seed").map_or(line, |rest| rest.trim_start().trim_start_matches('=').trim());
        return value.parse().map_err(|_| CliError::Input {
            path: path.to_path_buf(),
            error: FormatError { line: i + 1, message: format!("expected an integer seed, found `{line}`") },
        });
    }
    Err(CliError::Input {
        path: path.to_path_buf(),
        error: FormatError { line: text.lines().count().max(1), message: "no seed found".into() },
    })
}

fn verify(a: &VerifyArgs, fmt: OutputFormat) -> CliResult {
    if a.target != "all" {
        return Err(CliError::Usage(format!("unknown verify target `{}`; expected `all`", a.target)));
    }
    let seed = match &a.seed_file {
        Some(path) => read_seed(path)?,
        None => 1,
    };
    let report = run_all(seed);
    if let Some(path) = &a.output {
        emit(Some(path), &report.to_json())?;
    }
    let text = match fmt {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv => csv_table(
            &["criterion", "title", "pass"],
            &report
                .criteria
                .iter()
                .map(|c| vec![c.id.to_string(), c.title.to_string(), c.pass.to_string()])
                .collect::<Vec<_>>(),
        ),
        OutputFormat::Text => report.summary_lines().join("\n"),
    };
    emit(None, &text)?;
    Ok(if report.pass { OK } else { VIOLATED })
}

fn mode(m: ModeArg) -> Mode {
    match m {
        ModeArg::All => Mode::All,
        ModeArg::Connected => Mode::Connected,
        ModeArg::TwoConnected => Mode::TwoConnected,
    }
}

fn render_reports(reports: &[SearchReport], fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Json => pretty(&reports),
        OutputFormat::Csv => reports_csv(reports),
        OutputFormat::Text => reports
            .iter()
            .map(|r| {
                let mut s = format!("{} n={}", r.problem, r.n);
                if let Some(rr) = r.r {
                    write!(s, " r={rr}").unwrap();
                }
                if let Some(k) = r.k {
                    write!(s, " k={k}").unwrap();
                }
                write!(s, " mode={}", r.mode.name()).unwrap();
                if let Some(v) = r.value {
                    write!(s, " value={v}").unwrap();
                }
                if let Some(b) = &r.bound {
                    write!(s, " bound={b}").unwrap();
                }
                if let Some(t) = r.seconds {
                    write!(s, " seconds={t:.3}").unwrap();
                }
                if !r.flags.is_empty() {
                    write!(s, " [{}]", r.flags.join(", ")).unwrap();
                }
                s.push('\n');
                if let Some(w) = &r.witness {
                    s.push_str(w);
                }
                s
            })
            .collect(),
    }
}

fn search(problem: &SearchProblem, fmt: OutputFormat) -> CliResult {
    match problem {
        SearchProblem::Enumerate { n, mode: m, list } => {
            let graphs = GraphCatalog::new().graphs(*n, mode(*m))?;
            let edges = |g: &Graph| g.edges().iter().map(|&(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ");
            let text = match fmt {
                OutputFormat::Json => {
                    let mut doc = json!({ "n": n, "mode": mode(*m), "count": graphs.len() });
                    if *list {
                        doc["graphs"] = json!(graphs.iter().map(|g| g.edges()).collect::<Vec<_>>());
                    }
                    pretty(&doc)
                }
                OutputFormat::Csv if *list => csv_table(
                    &["index", "edges"],
                    &graphs.iter().enumerate().map(|(i, g)| vec![i.to_string(), edges(g)]).collect::<Vec<_>>(),
                ),
                OutputFormat::Csv => csv_table(
                    &["n", "mode", "count"],
                    &[vec![n.to_string(), mode(*m).name().into(), graphs.len().to_string()]],
                ),
                OutputFormat::Text => {
                    let mut s = format!("{} graphs (n={n}, mode={})\n", graphs.len(), mode(*m).name());
                    if *list {
                        for g in &graphs {
                            writeln!(s, "{}", edges(g)).unwrap();
                        }
                    }
                    s
                }
            };
            emit(None, &text)?;
            Ok(OK)
        }
        SearchProblem::Graph { kind, n_max } => {
            let kind = GraphTuranKind::from_str(kind).map_err(CliError::Usage)?;
            let reports = verify_graph_turan(kind, *n_max, &mut GraphCatalog::new())?;
            emit(None, &render_reports(&reports, fmt))?;
            Ok(OK)
        }
        SearchProblem::Hyper { n, r, k, pattern, mode: m, node_cap, exact_limit, heuristic, timings, witness_file } => {
            let pattern = match pattern {
                PatternArg::Path => BergePattern::Path(*k),
                PatternArg::Cycle => BergePattern::LongCycle(*k),
            };
            let options = HyperSearchOptions { node_cap: *node_cap, exact_limit: *exact_limit, heuristic: *heuristic };
            let start = Instant::now();
            let mut report = exact_hypergraph_turan(*n, *r, pattern, mode(*m), options)?;
            if *timings {
                report.seconds = Some(start.elapsed().as_secs_f64());
            }
            if let Some(path) = witness_file {
                if let Some(w) = report.witness.take() {
                    emit(Some(path), &w)?;
                    report.witness_file = Some(path.display().to_string());
                }
            }
            emit(None, &render_reports(std::slice::from_ref(&report), fmt))?;
            Ok(if report.flags.iter().any(|f| f == "node-cap") { BUDGET } else { OK })
        }
        SearchProblem::Random { kind, n, r, m, seed, output } => {
            let text = match kind {
                RandomKind::Graph => serialize_graph(&random_graph(*n, *m, *seed)?),
                RandomKind::TwoConnectedGraph => serialize_graph(&random_two_connected_graph(*n, *m, *seed)?),
                RandomKind::Hypergraph => serialize_hypergraph(&random_hypergraph(*n, *r, *m, *seed)?),
                RandomKind::ConnectedHypergraph => {
                    serialize_hypergraph(&random_connected_hypergraph(*n, *r, *m, *seed)?)
                }
            };
            emit(output.as_deref(), &text)?;
            Ok(OK)
        }
        SearchProblem::Maximality { n, k, r, cycle } => {
            let (order, pattern) = if *cycle { (k + 1, BergePattern::LongCycle(*k)) } else { (*k, BergePattern::Path(*k)) };
            let h = construct_h(*n, order, *r)?.hypergraph;
            let result = local_maximality(&h, pattern);
            let text = match fmt {
                OutputFormat::Json => pretty(&json!({
                    "n": n,
                    "r": r,
                    "pattern": result.pattern,
                    "base_free": result.base_free,
                    "tested": result.tested,
                    "still_free": result.still_free,
                    "locally_maximal": result.is_locally_maximal(),
                })),
                OutputFormat::Csv => csv_table(
                    &["n", "k", "r", "pattern", "base_free", "tested", "still_free", "locally_maximal"],
                    &[vec![
                        n.to_string(),
                        k.to_string(),
                        r.to_string(),
                        pattern.name().into(),
                        result.base_free.to_string(),
                        result.tested.to_string(),
                        result.still_free.len().to_string(),
                        result.is_locally_maximal().to_string(),
                    ]],
                ),
                OutputFormat::Text => format!(
                    "H({n},{order},{r}) against {} k={k}: {} ({} additions tested, {} keep it free)\n",
                    pattern.name(),
                    if result.is_locally_maximal() { "locally maximal" } else { "not locally maximal" },
                    result.tested,
                    result.still_free.len()
                ),
            };
            emit(None, &text)?;
            Ok(if result.is_locally_maximal() { OK } else { VIOLATED })
        }
    }
}
