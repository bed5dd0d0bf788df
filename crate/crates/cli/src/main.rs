//! `knitgraph`: decide, cover, classify and generate knitting graphs.
//!
//! Exit status 0 means yes or success, 1 a negative answer (infeasible,
//! invalid, not plane) and 2 bad input or usage.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use knitgraph::cover::feasible_thread_counts;
use knitgraph::feasibility::render_table;
use knitgraph::io::Meta;
use knitgraph::layout::row_segments;
use knitgraph::patterns::{generate, PatternKind, PatternSpec};
use knitgraph::yarn::{imbalance, yarn_check_with_boundary};
use knitgraph::*;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "knitgraph",
    version,
    about = "Knitting graphs: feasibility, thread covers, yarns and layouts"
)]
struct Cli {
    /// Print results as JSON on stdout
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a colored graph's threads and loop configurations
    Validate {
        file: PathBuf,
        /// Expected number of threads (default: meta.k, else whatever the coloring has)
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value = "strict")]
        rule: RedRule,
    },
    /// Decide whether a DAG can be knit with exactly k threads
    Decide {
        file: PathBuf,
        /// Thread count; without it every feasible count is listed
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value = "strict")]
        rule: RedRule,
    },
    /// Path covers of a DAG, ignoring loop restrictions
    Cover {
        file: PathBuf,
        /// Compute a minimum path cover (otherwise look for a single path)
        #[arg(long)]
        min: bool,
    },
    /// Complexity class of a colored graph and its layout
    Classify {
        file: PathBuf,
        #[arg(long, default_value = "strict")]
        rule: RedRule,
    },
    /// Rows of a single-thread graph in its layout
    Rows { file: PathBuf },
    /// Largest cable in the layout
    Cablewidth { file: PathBuf },
    /// Yarn graph checks
    Yarn {
        #[command(subcommand)]
        action: YarnAction,
    },
    /// Generate a fixture as a graph file
    Gen {
        #[arg(long)]
        pattern: PatternKind,
        #[arg(long, default_value_t = 3)]
        rows: usize,
        #[arg(long, default_value_t = 4)]
        cols: usize,
        /// Knit in the round instead of flat
        #[arg(long)]
        round: bool,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Re-emit a graph file as normalized JSON or Graphviz DOT
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Format,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Exhaustive search for k threads, for small graphs
    Oracle {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = cover::DEFAULT_ORACLE_CAP)]
        cap: usize,
        #[arg(long, default_value = "strict")]
        rule: RedRule,
    },
    /// Roles available at each in/out-degree combination
    Table {
        #[arg(long, default_value = "strict")]
        rule: RedRule,
    },
}

#[derive(Subcommand)]
enum YarnAction {
    /// Could this be the yarn of a k-knittable object?
    Check {
        file: PathBuf,
        /// Number of yarns (default: meta.k, else the minimum)
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value = "strict")]
        rule: RedRule,
    },
    /// Fewest yarns the arcs split into
    MinK { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

/// What a command produced: JSON for `--json`, text otherwise.
struct Reply {
    json: Value,
    text: String,
    status: u8,
}

impl Reply {
    fn new(json: Value, text: impl Into<String>, yes: bool) -> Self {
        Reply {
            json,
            text: text.into(),
            status: if yes { 0 } else { 1 },
        }
    }
}

type Outcome = std::result::Result<Reply, String>;

fn load(path: &Path) -> std::result::Result<Document, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn directed(doc: &Document) -> std::result::Result<&DirectedKnitGraph, String> {
    doc.directed().map_err(|e| e.to_string())
}

fn write_out(output: Option<&Path>, text: &str) -> std::result::Result<(), String> {
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Threads from the file, or else the blue paths of its coloring.
fn threads_of(doc: &Document, g: &DirectedKnitGraph) -> std::result::Result<ThreadCover, String> {
    if let Some(cover) = doc.threads() {
        cover.validate(g).map_err(|e| e.to_string())?;
        return Ok(cover);
    }
    let report = check_coloring(g, 0, RedRule::Extended).map_err(|e| e.to_string())?;
    if !report.paths_ok {
        return Err("blue edges do not form vertex-disjoint paths".into());
    }
    Ok(ThreadCover::new(report.threads))
}

fn layout_of(doc: &Document) -> std::result::Result<&NaturalLayout, String> {
    doc.layout
        .as_ref()
        .ok_or_else(|| "the file has no layout".to_string())
}

fn validate(file: &Path, k: Option<usize>, rule: RedRule) -> Outcome {
    let doc = load(file)?;
    let g = directed(&doc)?;
    let boundary = doc
        .layout
        .as_ref()
        .map(|l| l.boundary())
        .unwrap_or_default();
    let mut report =
        check_coloring_with_boundary(g, k.or(doc.meta.k).unwrap_or(0), rule, &boundary)
            .map_err(|e| e.to_string())?;
    if k.is_none() && doc.meta.k.is_none() {
        report.expected_k = report.path_count;
    }
    let mut text = String::new();
    if report.is_valid() {
        text.push_str(&format!("valid: {} thread(s)\n", report.path_count));
    } else {
        if !report.paths_ok {
            text.push_str("blue edges do not form vertex-disjoint paths\n");
        } else if report.path_count != report.expected_k {
            text.push_str(&format!(
                "{} thread(s), expected {}\n",
                report.path_count, report.expected_k
            ));
        }
        for v in &report.violations {
            text.push_str(&format!(
                "vertex {}: {:?} with red ({}, {}) is not allowed\n",
                v.vertex, v.position, v.red_in, v.red_out
            ));
        }
    }
    let valid = report.is_valid();
    Ok(Reply::new(
        serde_json::to_value(&report).expect("report serializes"),
        text,
        valid,
    ))
}

fn witness_document(w: &Witness, k: usize) -> Document {
    let mut doc = Document::new(LoadedGraph::Directed(w.graph.clone()));
    doc.meta = Meta {
        k: Some(k),
        threads: Some(w.cover.threads.clone()),
        ..Meta::default()
    };
    doc
}

fn decide(file: &Path, k: Option<usize>, rule: RedRule) -> Outcome {
    let doc = load(file)?;
    let g = directed(&doc)?;
    let Some(k) = k else {
        let ks = feasible_thread_counts(g, rule).map_err(|e| e.to_string())?;
        let text = if ks.is_empty() {
            "no thread count works\n".to_string()
        } else {
            format!(
                "feasible k: {}\n",
                ks.iter()
                    .map(|k| k.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            )
        };
        let yes = !ks.is_empty();
        return Ok(Reply::new(json!({ "feasible_k": ks }), text, yes));
    };
    match decide_k_knittable(g, k, rule).map_err(|e| e.to_string())? {
        Some(w) => {
            let doc = witness_document(&w, k);
            let json: Value =
                serde_json::from_str(&doc.to_json()).expect("round trip through Value");
            Ok(Reply::new(json, doc.to_json() + "\n", true))
        }
        None => Ok(Reply::new(
            json!({ "feasible": false, "k": k }),
            format!("not {k}-knittable\n"),
            false,
        )),
    }
}

fn cover_cmd(file: &Path, min: bool) -> Outcome {
    let doc = load(file)?;
    let g = directed(&doc)?;
    if min {
        let (k, cover) = minimum_path_cover(g).map_err(|e| e.to_string())?;
        let mut text = format!("minimum path cover: {k}\n");
        for t in &cover.threads {
            text.push_str(&format!("{t:?}\n"));
        }
        return Ok(Reply::new(
            json!({ "k": k, "threads": cover.threads }),
            text,
            true,
        ));
    }
    match has_hamiltonian_path_dag(g).map_err(|e| e.to_string())? {
        Some(path) => Ok(Reply::new(
            json!({ "hamiltonian": true, "path": path }),
            format!("{path:?}\n"),
            true,
        )),
        None => Ok(Reply::new(
            json!({ "hamiltonian": false }),
            "no single path covers the graph\n",
            false,
        )),
    }
}

fn classify(file: &Path, rule: RedRule) -> Outcome {
    let doc = load(file)?;
    let g = directed(&doc)?;
    let c = classify_complexity(g, doc.layout.as_ref(), rule, doc.multi_orientation())
        .map_err(|e| e.to_string())?;
    let mut text = format!("{}\n", c.class);
    if c.layout_crossings > 0 {
        text.push_str(&format!(
            "{} crossing(s) in the layout\n",
            c.layout_crossings
        ));
    }
    if !c.planar {
        text.push_str("not planar\n");
    }
    let mut json = serde_json::to_value(&c).expect("complexity serializes");
    json["is_1a"] = c.is_1a().into();
    json["is_1b"] = c.is_1b().into();
    Ok(Reply::new(json, text, true))
}

fn rows(file: &Path) -> Outcome {
    let doc = load(file)?;
    let g = directed(&doc)?;
    let cover = threads_of(&doc, g)?;
    let layout = layout_of(&doc)?;
    match row_segments(g, &cover, layout) {
        Ok(rows) => {
            let mut text = format!("{} rows\n", rows.len());
            for (i, r) in rows.iter().enumerate() {
                text.push_str(&format!("row {}: {r:?}\n", i + 1));
            }
            Ok(Reply::new(
                json!({ "rows": rows.len(), "segments": rows }),
                text,
                true,
            ))
        }
        Err(Error::NotPlanarLayout) => Ok(Reply::new(
            json!({ "error": "layout is not plane" }),
            "layout is not plane; rows are undefined\n",
            false,
        )),
        Err(e) => Err(e.to_string()),
    }
}

fn cablewidth(file: &Path) -> Outcome {
    let doc = load(file)?;
    let g = directed(&doc)?;
    let layout = layout_of(&doc)?;
    match cable_width(g, layout) {
        Ok(w) => {
            let cg = crossing_graph(g, layout).map_err(|e| e.to_string())?;
            let crossings: Vec<_> = cg
                .links
                .iter()
                .map(|&(i, j)| (g.edge(i).key(), g.edge(j).key()))
                .collect();
            Ok(Reply::new(
                json!({ "cable_width": w, "crossings": crossings }),
                format!("{w}\n"),
                true,
            ))
        }
        Err(e @ Error::BlueCrossing(..)) => Ok(Reply::new(
            json!({ "error": e.to_string() }),
            format!("{e}\n"),
            false,
        )),
        Err(e) => Err(e.to_string()),
    }
}

/// The file's yarn graph, expanding a colored graph along its threads.
fn yarn_of(doc: &Document) -> std::result::Result<YarnGraph, String> {
    match &doc.graph {
        LoadedGraph::Yarn(y) => Ok(y.clone()),
        LoadedGraph::Directed(g) => Ok(yarn_from_threads(g, &threads_of(doc, g)?)),
        LoadedGraph::Undirected(_) => Err("an undirected graph has no yarn".into()),
    }
}

fn yarn_check(file: &Path, k: Option<usize>, rule: RedRule) -> Outcome {
    let doc = load(file)?;
    let y = yarn_of(&doc)?;
    let k = k.or(doc.meta.k).unwrap_or_else(|| minimum_yarns(&y).0);
    let boundary = doc
        .layout
        .as_ref()
        .map(|l| l.boundary())
        .unwrap_or_default();
    let check = yarn_check_with_boundary(&y, k, rule, &boundary);
    let mut text = format!(
        "{} with {k} yarn(s) (minimum {})\n",
        if check.feasible {
            "feasible"
        } else {
            "infeasible"
        },
        check.minimum_yarns
    );
    if let Some(e) = &check.reduction_error {
        text.push_str(&format!("{e}\n"));
    }
    let feasible = check.feasible;
    Ok(Reply::new(
        serde_json::to_value(&check).expect("check serializes"),
        text,
        feasible,
    ))
}

fn yarn_min_k(file: &Path) -> Outcome {
    let doc = load(file)?;
    let y = yarn_of(&doc)?;
    let (k, decomposition) = minimum_yarns(&y);
    let trails: Vec<Vec<VertexId>> = decomposition
        .trails
        .iter()
        .map(|t| t.vertices(&y))
        .chain(decomposition.isolated.iter().map(|&v| vec![v]))
        .collect();
    let imbalances: serde_json::Map<String, Value> = imbalance(&y)
        .into_iter()
        .enumerate()
        .filter(|&(_, d)| d != 0)
        .map(|(v, d)| (v.to_string(), d.into()))
        .collect();
    let mut text = format!("{k}\n");
    for t in &trails {
        text.push_str(&format!("{t:?}\n"));
    }
    Ok(Reply::new(
        json!({ "k": k, "trails": trails, "imbalances": imbalances }),
        text,
        true,
    ))
}

fn gen(kind: PatternKind, rows: usize, cols: usize, round: bool, output: Option<&Path>) -> Outcome {
    let f = generate(&PatternSpec {
        kind,
        rows,
        cols,
        round,
    })
    .map_err(|e| e.to_string())?;
    let doc = fixture_document(&f);
    let text = doc.to_json() + "\n";
    let summary = json!({
        "name": f.name,
        "n": f.graph.n(),
        "k": f.cover.k(),
        "expected_class": f.expected_class,
    });
    match output {
        Some(path) => {
            write_out(Some(path), &text)?;
            Ok(Reply::new(summary, "", true))
        }
        None => Ok(Reply::new(
            serde_json::from_str(&text).expect("valid JSON"),
            text,
            true,
        )),
    }
}

fn convert(file: &Path, to: Format, output: Option<&Path>) -> Outcome {
    let doc = load(file)?;
    let text = match to {
        Format::Dot => to_dot(&doc),
        Format::Json => doc.to_json() + "\n",
    };
    if output.is_some() {
        write_out(output, &text)?;
        return Ok(Reply::new(json!({ "written": true }), "", true));
    }
    let json = match to {
        Format::Dot => json!({ "dot": text }),
        Format::Json => serde_json::from_str(&text).expect("valid JSON"),
    };
    Ok(Reply::new(json, text, true))
}

fn oracle(file: &Path, k: usize, cap: usize, rule: RedRule) -> Outcome {
    let doc = load(file)?;
    let input = match &doc.graph {
        LoadedGraph::Directed(g) => OracleInput::Directed(g),
        LoadedGraph::Undirected(g) => OracleInput::Undirected(g),
        LoadedGraph::Yarn(_) => {
            return Err("the oracle takes a simple graph, not a yarn graph".into())
        }
    };
    match brute_force_knittable(input, k, rule, cap).map_err(|e| e.to_string())? {
        Some(w) => {
            let doc = witness_document(&w, k);
            let json: Value = serde_json::from_str(&doc.to_json()).expect("valid JSON");
            Ok(Reply::new(json, doc.to_json() + "\n", true))
        }
        None => Ok(Reply::new(
            json!({ "feasible": false, "k": k }),
            format!("not {k}-knittable\n"),
            false,
        )),
    }
}

fn table(rule: RedRule) -> Outcome {
    let t = feasibility_table(rule);
    let cells: Vec<Value> = (0..4)
        .flat_map(|indeg| (0..4).map(move |outdeg| (indeg, outdeg)))
        .map(|(indeg, outdeg)| {
            json!({
                "indeg": indeg,
                "outdeg": outdeg,
                "roles": t[indeg][outdeg].roles(),
                "label": t[indeg][outdeg].label(),
            })
        })
        .collect();
    Ok(Reply::new(
        json!({ "rule": rule, "cells": cells }),
        render_table(&t),
        true,
    ))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate { file, k, rule } => validate(file, *k, *rule),
        Command::Decide { file, k, rule } => decide(file, *k, *rule),
        Command::Cover { file, min } => cover_cmd(file, *min),
        Command::Classify { file, rule } => classify(file, *rule),
        Command::Rows { file } => rows(file),
        Command::Cablewidth { file } => cablewidth(file),
        Command::Yarn { action } => match action {
            YarnAction::Check { file, k, rule } => yarn_check(file, *k, *rule),
            YarnAction::MinK { file } => yarn_min_k(file),
        },
        Command::Gen {
            pattern,
            rows,
            cols,
            round,
            output,
        } => gen(*pattern, *rows, *cols, *round, output.as_deref()),
        Command::Convert { file, to, output } => convert(file, *to, output.as_deref()),
        Command::Oracle { file, k, cap, rule } => oracle(file, *k, *cap, *rule),
        Command::Table { rule } => table(*rule),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(reply) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&reply.json).expect("JSON values serialize")
                );
            } else {
                print!("{}", reply.text);
            }
            ExitCode::from(reply.status)
        }
        Err(message) => {
            eprintln!("error: {message}");
            if cli.json {
                println!("{}", json!({ "error": message }));
            }
            ExitCode::from(2)
        }
    }
}
