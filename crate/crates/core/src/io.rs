//! JSON graph files and DOT export.
//!
//! ```json
//! {"n": 3, "directed": true, "multigraph": false,
//!  "edges": [{"src": 0, "dst": 1, "color": "blue"}, {"src": 1, "dst": 2, "color": null}],
//!  "layout": {"0": [0, 0], "1": [0, 1], "2": [1, 1]},
//!  "meta": {"k": 1}}
//! ```
//!
//! A directed simple file is a colored knitting graph, a directed
//! multigraph is a yarn graph and an undirected simple file is an
//! uncolored knitting graph.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cover::ThreadCover;
use crate::error::{Error, Result};
use crate::graph::{DirectedKnitGraph, Edge, EdgeColor, KnittingGraph, VertexId, YarnGraph};
use crate::layout::NaturalLayout;
use crate::patterns::Fixture;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub src: usize,
    pub dst: usize,
    #[serde(default)]
    pub color: Option<EdgeColor>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, serde_json::Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threads: Option<Vec<Vec<VertexId>>>,
    /// Declares that stitches are worked in more than one orientation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multi_orientation: Option<bool>,
}

impl Meta {
    fn is_empty(&self) -> bool {
        *self == Meta::default()
    }
}

/// The raw file contents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub directed: bool,
    pub multigraph: bool,
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub layout: Option<BTreeMap<String, (i64, f64)>>,
    #[serde(default, skip_serializing_if = "Meta::is_empty")]
    pub meta: Meta,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadedGraph {
    Directed(DirectedKnitGraph),
    Undirected(KnittingGraph),
    Yarn(YarnGraph),
}

impl LoadedGraph {
    pub fn n(&self) -> usize {
        match self {
            LoadedGraph::Directed(g) => g.n(),
            LoadedGraph::Undirected(g) => g.n(),
            LoadedGraph::Yarn(y) => y.n(),
        }
    }
}

/// A validated graph file.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub graph: LoadedGraph,
    pub layout: Option<NaturalLayout>,
    pub meta: Meta,
}

fn schema(context: impl Into<String>, message: impl Into<String>) -> Error {
    Error::SchemaError {
        context: context.into(),
        message: message.into(),
    }
}

impl Document {
    pub fn new(graph: LoadedGraph) -> Self {
        Document {
            graph,
            layout: None,
            meta: Meta::default(),
        }
    }

    pub fn directed(&self) -> Result<&DirectedKnitGraph> {
        match &self.graph {
            LoadedGraph::Directed(g) => Ok(g),
            _ => Err(schema("directed", "expected a directed simple graph")),
        }
    }

    pub fn threads(&self) -> Option<ThreadCover> {
        self.meta.threads.clone().map(ThreadCover::new)
    }

    pub fn multi_orientation(&self) -> bool {
        self.meta.multi_orientation.unwrap_or(false)
    }

    pub fn to_file(&self) -> GraphFile {
        let (n, directed, multigraph, edges) = match &self.graph {
            LoadedGraph::Directed(g) => (
                g.n(),
                true,
                false,
                g.edges()
                    .iter()
                    .map(|e| EdgeRecord {
                        src: e.src,
                        dst: e.dst,
                        color: (e.color != EdgeColor::Uncolored).then_some(e.color),
                    })
                    .collect(),
            ),
            LoadedGraph::Undirected(g) => (
                g.n(),
                false,
                false,
                g.edges()
                    .iter()
                    .map(|&(src, dst)| EdgeRecord {
                        src,
                        dst,
                        color: None,
                    })
                    .collect(),
            ),
            LoadedGraph::Yarn(y) => (
                y.n(),
                true,
                true,
                y.arcs()
                    .iter()
                    .map(|&(src, dst)| EdgeRecord {
                        src,
                        dst,
                        color: None,
                    })
                    .collect(),
            ),
        };
        let layout = self.layout.as_ref().map(|l| {
            l.to_f64()
                .into_iter()
                .enumerate()
                .map(|(v, p)| (v.to_string(), p))
                .collect()
        });
        GraphFile {
            n,
            directed,
            multigraph,
            edges,
            layout,
            meta: self.meta.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("graph files always serialize")
    }

    pub fn from_file(file: GraphFile) -> Result<Self> {
        for (i, e) in file.edges.iter().enumerate() {
            for v in [e.src, e.dst] {
                if v >= file.n {
                    return Err(schema(
                        format!("edges[{i}]"),
                        Error::IndexOutOfRange {
                            index: v,
                            n: file.n,
                        }
                        .to_string(),
                    ));
                }
            }
        }
        let graph = match (file.directed, file.multigraph) {
            (true, false) => LoadedGraph::Directed(DirectedKnitGraph::new(
                file.n,
                file.edges
                    .iter()
                    .map(|e| Edge::new(e.src, e.dst, e.color.unwrap_or(EdgeColor::Uncolored))),
            )?),
            (true, true) => LoadedGraph::Yarn(YarnGraph::new(
                file.n,
                file.edges.iter().map(|e| (e.src, e.dst)).collect(),
            )?),
            (false, false) => {
                if let Some(i) = file.edges.iter().position(|e| e.color.is_some()) {
                    return Err(schema(
                        format!("edges[{i}].color"),
                        "undirected edges carry no color",
                    ));
                }
                LoadedGraph::Undirected(KnittingGraph::new(
                    file.n,
                    file.edges.iter().map(|e| (e.src, e.dst)),
                )?)
            }
            (false, true) => {
                return Err(schema(
                    "multigraph",
                    "undirected multigraphs are not supported",
                ))
            }
        };
        let layout = match file.layout {
            None => None,
            Some(map) => Some(parse_layout(file.n, &map)?),
        };
        if let Some(threads) = &file.meta.threads {
            for (t, thread) in threads.iter().enumerate() {
                if let Some(&v) = thread.iter().find(|&&v| v >= file.n) {
                    return Err(schema(
                        format!("meta.threads[{t}]"),
                        Error::IndexOutOfRange {
                            index: v,
                            n: file.n,
                        }
                        .to_string(),
                    ));
                }
            }
        }
        Ok(Document {
            graph,
            layout,
            meta: file.meta,
        })
    }
}

fn parse_layout(n: usize, map: &BTreeMap<String, (i64, f64)>) -> Result<NaturalLayout> {
    let mut points: Vec<Option<(i64, f64)>> = vec![None; n];
    for (key, &p) in map {
        let v: usize = key
            .parse()
            .map_err(|_| schema(format!("layout.{key}"), "vertex ids must be integers"))?;
        if v >= n {
            return Err(schema(
                format!("layout.{key}"),
                Error::IndexOutOfRange { index: v, n }.to_string(),
            ));
        }
        if !p.1.is_finite() {
            return Err(schema(format!("layout.{key}"), "column must be finite"));
        }
        points[v] = Some(p);
    }
    let points = points
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or(Error::MissingPosition(v)))
        .collect::<Result<Vec<_>>>()?;
    NaturalLayout::from_f64(&points)
}

/// Parses and validates a graph file.
pub fn parse_json(text: &str) -> Result<Document> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| {
        let message = e.to_string();
        // serde_json appends the position; keep the message itself short
        let message = message
            .rsplit_once(" at line ")
            .map_or(message.clone(), |(m, _)| m.to_string());
        schema(format!("line {} column {}", e.line(), e.column()), message)
    })?;
    Document::from_file(file)
}

/// A fixture as a graph file. Tubes are written without their drawing,
/// since the cut-open drawing crosses itself along the seam.
pub fn fixture_document(f: &Fixture) -> Document {
    let labels = (!f.labels.is_empty()).then(|| {
        f.labels
            .iter()
            .map(|(v, l)| (v.to_string(), serde_json::Value::String(l.clone())))
            .collect()
    });
    Document {
        graph: LoadedGraph::Directed(f.graph.clone()),
        layout: (!f.round).then(|| f.layout.clone()),
        meta: Meta {
            k: Some(f.cover.k()),
            labels,
            threads: Some(f.cover.threads.clone()),
            multi_orientation: None,
        },
    }
}

/// Graphviz rendering; every file type is written as a `digraph`.
pub fn to_dot(doc: &Document) -> String {
    let mut out = String::from("digraph knit {\n");
    let n = doc.graph.n();
    for v in 0..n {
        match doc.layout.as_ref() {
            Some(l) => {
                let (r, c) = l.to_f64()[v];
                let _ = writeln!(out, "  {v} [pos=\"{c},{r}!\"];");
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    match &doc.graph {
        LoadedGraph::Directed(g) => {
            for e in g.edges() {
                let _ = writeln!(
                    out,
                    "  {} -> {} [color={}];",
                    e.src,
                    e.dst,
                    e.color.dot_name()
                );
            }
        }
        LoadedGraph::Undirected(g) => {
            for &(u, v) in g.edges() {
                let _ = writeln!(out, "  {u} -> {v} [color=gray, dir=none];");
            }
        }
        LoadedGraph::Yarn(y) => {
            for &(u, v) in y.arcs() {
                let _ = writeln!(out, "  {u} -> {v} [color=gray];");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::gen_stitch_fixture;

    #[test]
    fn round_trip_with_layout() {
        let f = gen_stitch_fixture("kfb").unwrap();
        let doc = fixture_document(&f);
        let back = parse_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.layout.unwrap(), f.layout);
    }

    #[test]
    fn null_color_is_uncolored() {
        let doc = parse_json(
            r#"{"n":2,"directed":true,"multigraph":false,"edges":[{"src":0,"dst":1,"color":null}]}"#,
        )
        .unwrap();
        let g = doc.directed().unwrap();
        assert_eq!(g.edge(0).color, EdgeColor::Uncolored);
        assert!(doc.to_json().contains("\"color\": null"));
    }

    #[test]
    fn schema_errors_carry_context() {
        let err = parse_json(r#"{"n":2,"directed":true}"#).unwrap_err();
        assert!(
            matches!(err, Error::SchemaError { ref message, .. } if message.contains("multigraph"))
        );
        let err = parse_json(
            r#"{"n":2,"directed":true,"multigraph":false,"edges":[{"src":0,"dst":5,"color":"blue"}]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::SchemaError { ref context, .. } if context == "edges[0]"));
        let err = parse_json(
            r#"{"n":2,"directed":true,"multigraph":false,"edges":[{"src":0,"dst":1,"color":"green"}]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::SchemaError { .. }));
    }

    #[test]
    fn graph_errors_pass_through() {
        let err = parse_json(
            r#"{"n":2,"directed":true,"multigraph":false,"edges":[{"src":1,"dst":1,"color":"red"}]}"#,
        )
        .unwrap_err();
        assert_eq!(err, Error::SelfLoop(1));
    }

    #[test]
    fn partial_layout_is_rejected() {
        let err = parse_json(
            r#"{"n":2,"directed":true,"multigraph":false,"edges":[],"layout":{"0":[0,0]}}"#,
        )
        .unwrap_err();
        assert_eq!(err, Error::MissingPosition(1));
    }

    #[test]
    fn multigraph_is_a_yarn_graph() {
        let doc = parse_json(
            r#"{"n":2,"directed":true,"multigraph":true,"edges":[{"src":0,"dst":1},{"src":1,"dst":0}]}"#,
        )
        .unwrap();
        assert!(matches!(doc.graph, LoadedGraph::Yarn(ref y) if y.arcs().len() == 2));
    }

    #[test]
    fn dot_output() {
        let f = gen_stitch_fixture("c1b").unwrap();
        let dot = to_dot(&fixture_document(&f));
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("0 -> 1 [color=blue];"));
        assert!(dot.contains("3 -> 4 [color=purple];"));
        assert!(dot.contains("5 -> 9 [color=red];"));
    }
}
