//! Yarn graphs: expansion from threads, Eulerian trails and the minimum
//! number of yarns.

use serde::Serialize;

use crate::cover::ThreadCover;
use crate::error::{Error, Result};
use crate::feasibility::{check_coloring_with_boundary, Boundary, RedRule};
use crate::graph::{DirectedKnitGraph, EdgeColor, VertexId, YarnGraph};

/// A directed trail, stored as indices into the yarn graph's arc list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trail {
    pub arcs: Vec<usize>,
}

impl Trail {
    pub fn vertices(&self, y: &YarnGraph) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.arcs.len() + 1);
        if let Some(&first) = self.arcs.first() {
            out.push(y.arcs()[first].0);
        }
        out.extend(self.arcs.iter().map(|&a| y.arcs()[a].1));
        out
    }

    pub fn is_closed(&self, y: &YarnGraph) -> bool {
        let v = self.vertices(y);
        v.first() == v.last()
    }
}

/// Arc-disjoint trails jointly using every arc once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrailDecomposition {
    pub trails: Vec<Trail>,
    /// Stitches no arc touches. Each is worked from a yarn of its own.
    pub isolated: Vec<VertexId>,
}

/// Expands a colored graph into its yarn graph: one arc per blue edge,
/// an opposite pair per red edge and both per purple edge. Thread arcs are
/// emitted first, in thread order; a purple edge emits its sequential
/// strand before the loop pair.
pub fn yarn_from_threads(g: &DirectedKnitGraph, cover: &ThreadCover) -> YarnGraph {
    let mut arcs = Vec::new();
    let mut used = vec![false; g.edges().len()];
    for thread in &cover.threads {
        for w in thread.windows(2) {
            if let Some(i) = g.find_arc(w[0], w[1]) {
                used[i] = true;
                push_strands(&mut arcs, g.edge(i).src, g.edge(i).dst, g.edge(i).color);
            }
        }
    }
    for (i, e) in g.edges().iter().enumerate() {
        if !used[i] {
            push_strands(&mut arcs, e.src, e.dst, e.color);
        }
    }
    let mut y = YarnGraph::new(g.n(), arcs).expect("arcs come from a valid graph");
    y.yarn_count_hint = Some(cover.k());
    y
}

fn push_strands(arcs: &mut Vec<(VertexId, VertexId)>, u: VertexId, v: VertexId, c: EdgeColor) {
    match c {
        EdgeColor::Blue | EdgeColor::Uncolored => arcs.push((u, v)),
        EdgeColor::Red => arcs.extend([(u, v), (v, u)]),
        EdgeColor::Purple => arcs.extend([(u, v), (u, v), (v, u)]),
    }
}

/// One yarn graph per thread. A loop belongs to the yarn of the stitch
/// that passes through it (the head of the red edge).
pub fn yarns_by_thread(g: &DirectedKnitGraph, cover: &ThreadCover) -> Vec<YarnGraph> {
    let pos = cover.positions(g.n());
    let mut on_thread = vec![false; g.edges().len()];
    let mut per_thread: Vec<Vec<(VertexId, VertexId)>> = cover
        .threads
        .iter()
        .map(|thread| {
            let mut arcs = Vec::new();
            for w in thread.windows(2) {
                if let Some(i) = g.find_arc(w[0], w[1]) {
                    on_thread[i] = true;
                    push_strands(&mut arcs, w[0], w[1], g.edge(i).color);
                }
            }
            arcs
        })
        .collect();
    for (i, e) in g.edges().iter().enumerate() {
        if let (false, Some((t, _))) = (on_thread[i], pos[e.dst]) {
            push_strands(&mut per_thread[t], e.src, e.dst, e.color);
        }
    }
    per_thread
        .into_iter()
        .map(|arcs| YarnGraph::new(g.n(), arcs).expect("subset of a valid yarn graph"))
        .collect()
}

// Iterative Hierholzer; `adj[v]` lists arc ids leaving `v` in preference
// order. Returns the arcs of the trail from `start` in traversal order.
fn hierholzer(arcs: &[(usize, usize)], adj: &[Vec<usize>], start: usize) -> Vec<usize> {
    let mut next = vec![0usize; adj.len()];
    let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
    let mut out = Vec::with_capacity(arcs.len());
    while let Some(&(v, via)) = stack.last() {
        if next[v] < adj[v].len() {
            let id = adj[v][next[v]];
            next[v] += 1;
            stack.push((arcs[id].1, Some(id)));
        } else {
            stack.pop();
            if let Some(id) = via {
                out.push(id);
            }
        }
    }
    out.reverse();
    out
}

// Weakly connected components over vertices that carry arcs.
fn components(y: &YarnGraph) -> Vec<Vec<VertexId>> {
    let n = y.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut touched = vec![false; n];
    for &(u, v) in y.arcs() {
        touched[u] = true;
        touched[v] = true;
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru.max(rv)] = ru.min(rv);
        }
    }
    let mut by_root: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for v in (0..n).filter(|&v| touched[v]) {
        let r = find(&mut parent, v);
        by_root[r].push(v);
    }
    by_root.into_iter().filter(|c| !c.is_empty()).collect()
}

/// Out-degree minus in-degree of every vertex.
pub fn imbalance(y: &YarnGraph) -> Vec<i64> {
    let mut diff = vec![0i64; y.n()];
    for &(u, v) in y.arcs() {
        diff[u] += 1;
        diff[v] -= 1;
    }
    diff
}

fn adjacency(n: usize, arcs: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, _)) in arcs.iter().enumerate() {
        adj[u].push(i);
    }
    adj
}

/// A directed trail through every arc of `y`.
pub fn eulerian_path(y: &YarnGraph) -> Result<Trail> {
    if y.arcs().is_empty() {
        return Ok(Trail { arcs: Vec::new() });
    }
    let comps = components(y);
    if comps.len() > 1 {
        return Err(Error::NoEulerianPath(format!(
            "disconnected ({} components)",
            comps.len()
        )));
    }
    let diff = imbalance(y);
    let surplus: Vec<VertexId> = (0..y.n()).filter(|&v| diff[v] > 0).collect();
    let deficit: Vec<VertexId> = (0..y.n()).filter(|&v| diff[v] < 0).collect();
    let ok = surplus.len() <= 1 && deficit.len() <= 1 && diff.iter().all(|d| d.abs() <= 1);
    if !ok {
        let list: Vec<String> = (0..y.n())
            .filter(|&v| diff[v] != 0)
            .map(|v| format!("{v}:{:+}", diff[v]))
            .collect();
        return Err(Error::NoEulerianPath(format!(
            "imbalanced {}",
            list.join(" ")
        )));
    }
    let start = surplus.first().copied().unwrap_or(comps[0][0]);
    let arcs = hierholzer(y.arcs(), &adjacency(y.n(), y.arcs()), start);
    Ok(Trail { arcs })
}

/// Minimum number of trails decomposing the arcs: per component the
/// total out-degree surplus, or one trail for a balanced component. An
/// isolated stitch counts as one yarn.
pub fn minimum_yarns(y: &YarnGraph) -> (usize, TrailDecomposition) {
    let n = y.n();
    let diff = imbalance(y);
    let mut trails = Vec::new();
    for comp in components(y) {
        let excess: i64 = comp.iter().map(|&v| diff[v].max(0)).sum();
        let in_comp = {
            let mut mark = vec![false; n];
            comp.iter().for_each(|&v| mark[v] = true);
            mark
        };
        let mut arcs: Vec<(usize, usize)> = Vec::new();
        let mut original: Vec<Option<usize>> = Vec::new();
        for (i, &(u, v)) in y.arcs().iter().enumerate() {
            if in_comp[u] {
                arcs.push((u, v));
                original.push(Some(i));
            }
        }
        if excess == 0 {
            let adj = adjacency(n, &arcs);
            let circuit = hierholzer(&arcs, &adj, comp[0]);
            trails.push(Trail {
                arcs: circuit.into_iter().filter_map(|a| original[a]).collect(),
            });
            continue;
        }
        // Route the imbalance through a virtual hub: hub -> surplus and
        // deficit -> hub. Real arcs come first in every adjacency list.
        let hub = n;
        for &v in &comp {
            for _ in 0..diff[v].max(0) {
                arcs.push((hub, v));
                original.push(None);
            }
        }
        for &v in &comp {
            for _ in 0..(-diff[v]).max(0) {
                arcs.push((v, hub));
                original.push(None);
            }
        }
        let adj = adjacency(n + 1, &arcs);
        let circuit = hierholzer(&arcs, &adj, hub);
        let mut current = Vec::new();
        for a in circuit {
            match original[a] {
                Some(i) => current.push(i),
                None if !current.is_empty() => trails.push(Trail {
                    arcs: std::mem::take(&mut current),
                }),
                None => {}
            }
        }
        debug_assert!(current.is_empty());
    }
    let mut touched = vec![false; n];
    for &(u, v) in y.arcs() {
        touched[u] = true;
        touched[v] = true;
    }
    let isolated: Vec<VertexId> = (0..n).filter(|&v| !touched[v]).collect();
    (
        trails.len() + isolated.len(),
        TrailDecomposition { trails, isolated },
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct YarnCheck {
    pub feasible: bool,
    pub k: usize,
    pub minimum_yarns: usize,
    pub reduction_error: Option<String>,
    /// Paths formed by the single-strand (and purple) arcs.
    pub blue_paths: Option<usize>,
    pub coloring_valid: bool,
}

/// Whether `y` can be the yarn graph of a k-knittable object.
pub fn is_yarn_graph_of_k_knittable(y: &YarnGraph, k: usize, rule: RedRule) -> YarnCheck {
    yarn_check_with_boundary(y, k, rule, &Boundary::default())
}

/// [`is_yarn_graph_of_k_knittable`] with cast-on and bind-off rows relaxed.
pub fn yarn_check_with_boundary(
    y: &YarnGraph,
    k: usize,
    rule: RedRule,
    boundary: &Boundary,
) -> YarnCheck {
    let (minimum, _) = minimum_yarns(y);
    let mut report = YarnCheck {
        feasible: false,
        k,
        minimum_yarns: minimum,
        reduction_error: None,
        blue_paths: None,
        coloring_valid: false,
    };
    let reduced = match y.reduce_to_directed(None) {
        Ok(g) => g,
        Err(e) => {
            report.reduction_error = Some(e.to_string());
            return report;
        }
    };
    let coloring = check_coloring_with_boundary(&reduced, 0, rule, boundary)
        .expect("reduction emits colored edges");
    if coloring.paths_ok {
        report.blue_paths = Some(coloring.path_count);
        report.coloring_valid = coloring.degrees_ok();
    }
    report.feasible =
        minimum <= k && report.coloring_valid && report.blue_paths.is_some_and(|paths| paths <= k);
    report
}
