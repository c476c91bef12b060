// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! `sgraph` command-line front end.
//!
//! Graph files are JSON graph documents, or whitespace-separated edge lists
//! when the file name ends in `.edges`. Machine-readable output goes to
//! stdout (or `--out`), diagnostics to stderr. Exit codes: 0 success, 1 a
//! negative answer (no mapping, cycle, unreachable target), 2 bad input.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use serde::ser::{Serialize, Serializer};
use serde::Serialize as DeriveSerialize;
use serde_json::Value;
use sgraph::generators::{binomial_tree, generalized_petersen, grid_graph, hexagonal_lattice};
use sgraph::isomorphism::{is_isomorphic, vf2_layout, vf2_mappings};
use sgraph::matching::{greedy_maximal_matching, max_matching_exact};
use sgraph::serialization::{from_edge_list, from_json, to_dot, to_dot_with_labels, to_json};
use sgraph::shortest_paths::dijkstra;
use sgraph::traversal::topological_sort;
use sgraph::{GraphError, IsoMapping, JsonGraph, MatchSemantics, NodeIndex};

#[derive(Parser)]
#[command(name = "sgraph", version, about = "Graph algorithms over graph files")]
struct Cli {
    /// Suppress diagnostics on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    /// Write the result here instead of stdout. For `generate`, the graph
    /// document goes here and the node/edge counts go to stdout.
    #[arg(short, long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Read `.edges` input as directed.
    #[arg(long, global = true)]
    directed: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from a named family.
    Generate {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        cols: Option<usize>,
        #[arg(long)]
        order: Option<u32>,
    },
    /// Summarize a graph file.
    Info { graph: PathBuf },
    /// Dijkstra distances from a source, plus a path when a target is given.
    ShortestPath {
        graph: PathBuf,
        #[arg(long)]
        source: usize,
        #[arg(long)]
        target: Option<usize>,
        /// Numeric field of the edge payload used as the weight.
        #[arg(long)]
        weight_key: Option<String>,
        /// Weight for edges lacking the field.
        #[arg(long)]
        default_weight: Option<f64>,
    },
    /// Topological order of a directed graph.
    Topo { graph: PathBuf },
    /// Test two graphs for isomorphism.
    Isomorphic { first: PathBuf, second: PathBuf },
    /// Search for copies of a pattern inside a host.
    Subisomorphic {
        host: PathBuf,
        pattern: PathBuf,
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        induced: bool,
        #[arg(long, default_value_t = 1)]
        mappings: usize,
    },
    /// Place an interaction graph onto a device coupling graph.
    Layout { device: PathBuf, circuit: PathBuf },
    /// Edge indices of a matching.
    Matching {
        graph: PathBuf,
        /// Maximum-cardinality matching instead of the greedy maximal one.
        #[arg(long)]
        exact: bool,
    },
    /// Graphviz DOT text.
    Dot {
        graph: PathBuf,
        /// Payload field used as the node label.
        #[arg(long)]
        label_key: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Petersen,
    HexagonalLattice,
    BinomialTree,
    Grid,
}

enum Failure {
    /// Exit 1, optionally with a payload that is still printed.
    Negative(String, Option<String>),
    /// Exit 2.
    Usage(String),
}

type Outcome = Result<String, Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (payload, diagnostic, code) = match run(&cli) {
        Ok(text) => (Some(text), None, 0),
        Err(Failure::Negative(msg, text)) => (text, Some(msg), 1),
        Err(Failure::Usage(msg)) => (None, Some(msg), 2),
    };
    // `generate` has already written its document to `--out`.
    let dest = match cli.command {
        Command::Generate { .. } => None,
        _ => cli.out.as_deref(),
    };
    if let Some(text) = payload {
        if let Err(e) = write_output(dest, &text) {
            if !cli.quiet {
                eprintln!("sgraph: {e}");
            }
            return ExitCode::from(2);
        }
    }
    if let (Some(msg), false) = (diagnostic, cli.quiet) {
        eprintln!("sgraph: {msg}");
    }
    ExitCode::from(code)
}

fn write_output(out: Option<&Path>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Generate {
            family,
            n,
            k,
            rows,
            cols,
            order,
        } => generate(cli, *family, *n, *k, *rows, *cols, *order),
        Command::Info { graph } => info(&load(cli, graph)?),
        Command::ShortestPath {
            graph,
            source,
            target,
            weight_key,
            default_weight,
        } => shortest_path(
            &load(cli, graph)?,
            *source,
            *target,
            weight_key.as_deref(),
            *default_weight,
        ),
        Command::Topo { graph } => topo(&load(cli, graph)?),
        Command::Isomorphic { first, second } => {
            isomorphic(&load(cli, first)?, &load(cli, second)?)
        }
        Command::Subisomorphic {
            host,
            pattern,
            induced,
            mappings,
        } => subisomorphic(&load(cli, host)?, &load(cli, pattern)?, *induced, *mappings),
        Command::Layout { device, circuit } => layout(&load(cli, device)?, &load(cli, circuit)?),
        Command::Matching { graph, exact } => matching(&load(cli, graph)?, *exact),
        Command::Dot { graph, label_key } => Ok(dot(&load(cli, graph)?, label_key.as_deref())),
    }
}

fn load(cli: &Cli, path: &Path) -> Result<JsonGraph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let parsed = if path.extension().is_some_and(|ext| ext == "edges") {
        from_edge_list(&text, cli.directed)
    } else {
        from_json(&text)
    };
    parsed.map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn line(value: impl Serialize) -> String {
    let mut text = serde_json::to_string(&value).expect("output is always serializable");
    text.push('\n');
    text
}

/// Node-keyed JSON object in ascending id order; keys are decimal strings.
struct IdMap<V>(Vec<(NodeIndex, V)>);

impl<V: Serialize> Serialize for IdMap<V> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(self.0.iter().map(|(k, v)| (k.index().to_string(), v)))
    }
}

// Output records; field order is the emitted key order.

#[derive(DeriveSerialize)]
struct Counts {
    nodes: usize,
    edges: usize,
}

#[derive(DeriveSerialize)]
struct Info {
    directed: bool,
    multigraph: bool,
    nodes: usize,
    edges: usize,
    node_bound: usize,
    edge_bound: usize,
    self_loops: usize,
}

#[derive(DeriveSerialize)]
struct Distances {
    distances: IdMap<f64>,
    /// Absent without a target, null when the target is unreachable.
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<Option<Vec<usize>>>,
}

#[derive(DeriveSerialize)]
struct Isomorphism {
    isomorphic: bool,
    mapping: Option<IdMap<usize>>,
}

#[derive(DeriveSerialize)]
struct Found {
    found: bool,
    mappings: Vec<IdMap<usize>>,
}

fn mapping_json(m: &IsoMapping) -> IdMap<usize> {
    IdMap(m.iter().map(|(p, h)| (*p, h.index())).collect())
}

fn ids(nodes: impl IntoIterator<Item = NodeIndex>) -> Vec<usize> {
    nodes.into_iter().map(|n| n.index()).collect()
}

#[allow(clippy::too_many_arguments)]
fn generate(
    cli: &Cli,
    family: Family,
    n: Option<usize>,
    k: Option<usize>,
    rows: Option<usize>,
    cols: Option<usize>,
    order: Option<u32>,
) -> Outcome {
    fn need<T>(v: Option<T>, flag: &str) -> Result<T, Failure> {
        v.ok_or_else(|| usage(format!("missing --{flag}")))
    }
    let g = match family {
        Family::Petersen => generalized_petersen(need(n, "n")?, need(k, "k")?),
        Family::HexagonalLattice => hexagonal_lattice(need(rows, "rows")?, need(cols, "cols")?),
        Family::BinomialTree => binomial_tree(need(order, "order")?),
        Family::Grid => grid_graph(need(rows, "rows")?, need(cols, "cols")?),
    }
    .map_err(usage)?;
    let mut doc = to_json(&g).map_err(usage)?;
    doc.push('\n');
    match &cli.out {
        Some(path) => {
            fs::write(path, doc)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(line(Counts {
                nodes: g.node_count(),
                edges: g.edge_count(),
            }))
        }
        None => Ok(doc),
    }
}

fn info(g: &JsonGraph) -> Outcome {
    let self_loops = g.edge_list().filter(|(_, u, v)| u == v).count();
    Ok(line(Info {
        directed: g.is_directed(),
        multigraph: g.is_multigraph(),
        nodes: g.node_count(),
        edges: g.edge_count(),
        node_bound: g.node_bound(),
        edge_bound: g.edge_bound(),
        self_loops,
    }))
}

fn shortest_path(
    g: &JsonGraph,
    source: usize,
    target: Option<usize>,
    weight_key: Option<&str>,
    default_weight: Option<f64>,
) -> Outcome {
    let source = NodeIndex::new(source);
    let target = target.map(NodeIndex::new);
    if let Some(t) = target.filter(|t| !g.contains_node(*t)) {
        return Err(usage(GraphError::InvalidNode(t)));
    }
    let weight = |payload: &Value| -> sgraph::Result<f64> {
        let Some(key) = weight_key else {
            return Ok(1.0);
        };
        match payload.get(key).and_then(Value::as_f64).or(default_weight) {
            Some(w) => Ok(w),
            None => Err(GraphError::Callback(format!(
                "edge payload has no numeric field {key:?}"
            ))),
        }
    };
    let result = dijkstra(g, source, target, weight).map_err(usage)?;
    let distances = IdMap(result.distances.iter().map(|(k, v)| (*k, *v)).collect());
    let Some(t) = target else {
        return Ok(line(Distances {
            distances,
            path: None,
        }));
    };
    match result.path_to(t) {
        Some(path) => Ok(line(Distances {
            distances,
            path: Some(Some(ids(path))),
        })),
        None => Err(Failure::Negative(
            format!("node {t} is unreachable from node {source}"),
            Some(line(Distances {
                distances,
                path: Some(None),
            })),
        )),
    }
}

fn topo(g: &JsonGraph) -> Outcome {
    match topological_sort(g) {
        Ok(order) => Ok(line(ids(order))),
        Err(e @ GraphError::Cycle { .. }) => Err(Failure::Negative(e.to_string(), None)),
        Err(e) => Err(usage(e)),
    }
}

fn isomorphic(a: &JsonGraph, b: &JsonGraph) -> Outcome {
    let sem = MatchSemantics::induced();
    let mapping = if is_isomorphic(a, b, &sem).map_err(usage)? {
        // Keys are ids of the first graph.
        vf2_mappings(b, a, &sem, Some(1)).map_err(usage)?.pop()
    } else {
        None
    };
    match mapping {
        Some(m) => Ok(line(Isomorphism {
            isomorphic: true,
            mapping: Some(mapping_json(&m)),
        })),
        None => Err(Failure::Negative(
            "graphs are not isomorphic".into(),
            Some(line(Isomorphism {
                isomorphic: false,
                mapping: None,
            })),
        )),
    }
}

fn subisomorphic(host: &JsonGraph, pattern: &JsonGraph, induced: bool, limit: usize) -> Outcome {
    if limit == 0 {
        return Err(usage("--mappings must be at least 1"));
    }
    let sem = MatchSemantics {
        induced,
        ..MatchSemantics::induced()
    };
    let found = vf2_mappings(host, pattern, &sem, Some(limit)).map_err(usage)?;
    let text = line(Found {
        found: !found.is_empty(),
        mappings: found.iter().map(mapping_json).collect(),
    });
    if found.is_empty() {
        Err(Failure::Negative("no mapping found".into(), Some(text)))
    } else {
        Ok(text)
    }
}

fn layout(device: &JsonGraph, circuit: &JsonGraph) -> Outcome {
    match vf2_layout(device, circuit).map_err(usage)? {
        Some(m) => Ok(line(mapping_json(&m))),
        None => Err(Failure::Negative(
            "circuit does not fit the device".into(),
            None,
        )),
    }
}

fn matching(g: &JsonGraph, exact: bool) -> Outcome {
    let m = if exact {
        max_matching_exact(g)
    } else {
        greedy_maximal_matching(g)
    }
    .map_err(usage)?;
    Ok(line(m.iter().map(|e| e.index()).collect::<Vec<_>>()))
}

fn dot(g: &JsonGraph, label_key: Option<&str>) -> String {
    let Some(key) = label_key else {
        return to_dot(g);
    };
    to_dot_with_labels(g, |payload: &Value| match payload.get(key) {
        Some(Value::String(s)) => s.clone(),
        Some(other) => other.to_string(),
        None => String::new(),
    })
}
