//! Deciding k-knittability of DAGs and computing path covers.
//!
//! Every vertex `v` is split into `v_in -> v_out` with flow exactly one, so
//! each vertex lies on exactly one thread. Threads enter at start vertices
//! from `s_out` and leave at end vertices towards `t_in`; the arcs
//! `s_in -> s_out` and `t_in -> t_out` carry exactly `k` units.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::feasibility::{check_coloring, classify_vertex, RedRule, RoleSet};
use crate::flow::BoundedNetwork;
use crate::graph::{DirectedKnitGraph, Edge, EdgeColor, KnittingGraph, VertexId};

/// Ordered vertex-disjoint directed paths covering every vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ThreadCover {
    pub threads: Vec<Vec<VertexId>>,
}

impl ThreadCover {
    pub fn new(threads: Vec<Vec<VertexId>>) -> Self {
        ThreadCover { threads }
    }

    pub fn k(&self) -> usize {
        self.threads.len()
    }

    /// Thread index and position of every vertex.
    pub fn positions(&self, n: usize) -> Vec<Option<(usize, usize)>> {
        let mut pos = vec![None; n];
        for (t, thread) in self.threads.iter().enumerate() {
            for (i, &v) in thread.iter().enumerate() {
                if v < n {
                    pos[v] = Some((t, i));
                }
            }
        }
        pos
    }

    /// Checks disjointness, coverage and that consecutive vertices are
    /// joined by an arc of `g`.
    pub fn validate(&self, g: &DirectedKnitGraph) -> Result<()> {
        let mut seen = vec![false; g.n()];
        for thread in &self.threads {
            if thread.is_empty() {
                return Err(Error::InvalidCover("empty thread".into()));
            }
            for &v in thread {
                if v >= g.n() {
                    return Err(Error::IndexOutOfRange { index: v, n: g.n() });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidCover(format!("vertex {v} covered twice")));
                }
            }
            for w in thread.windows(2) {
                if g.find_arc(w[0], w[1]).is_none() {
                    return Err(Error::InvalidCover(format!("no arc {} -> {}", w[0], w[1])));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidCover(format!("vertex {v} not covered")));
        }
        Ok(())
    }

    /// Per-edge colors: Blue on consecutive thread pairs, Red elsewhere.
    pub fn coloring(&self, g: &DirectedKnitGraph) -> Vec<EdgeColor> {
        let mut colors = vec![EdgeColor::Red; g.edges().len()];
        for thread in &self.threads {
            for w in thread.windows(2) {
                if let Some(i) = g.find_arc(w[0], w[1]) {
                    colors[i] = EdgeColor::Blue;
                }
            }
        }
        colors
    }
}

/// Linear-time check: a DAG has a Hamiltonian path iff its topological
/// order is unique, and then that order is the path.
pub fn has_hamiltonian_path_dag(g: &DirectedKnitGraph) -> Result<Option<Vec<VertexId>>> {
    let n = g.n();
    let mut indeg: Vec<usize> = (0..n).map(|v| g.in_degree(v)).collect();
    let mut ready: Vec<VertexId> = (0..n).filter(|&v| indeg[v] == 0).collect();
    ready.reverse();
    let mut order = Vec::with_capacity(n);
    let mut unique = true;
    while let Some(v) = ready.pop() {
        if !ready.is_empty() {
            unique = false;
        }
        order.push(v);
        for w in g.successors(v) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(w);
            }
        }
    }
    if order.len() != n {
        return Err(Error::NotADag);
    }
    Ok(unique.then_some(order))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcKind {
    /// Arc of the input graph; carries the edge index.
    Original(usize),
    /// `v_in -> v_out`.
    Split(VertexId),
    /// `s_out -> v_in`.
    Source(VertexId),
    /// `v_out -> t_in`.
    Sink(VertexId),
    /// `s_in -> s_out` or `t_in -> t_out`.
    Super,
}

/// The split-vertex network for a DAG.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    pub network: BoundedNetwork,
    pub kinds: Vec<ArcKind>,
    pub n: usize,
    pub k: usize,
    pub roles: Vec<RoleSet>,
}

impl FlowNetwork {
    pub fn v_in(v: VertexId) -> usize {
        2 * v
    }

    pub fn v_out(v: VertexId) -> usize {
        2 * v + 1
    }

    pub fn s_in(&self) -> usize {
        2 * self.n
    }

    pub fn s_out(&self) -> usize {
        2 * self.n + 1
    }

    pub fn t_in(&self) -> usize {
        2 * self.n + 2
    }

    pub fn t_out(&self) -> usize {
        2 * self.n + 3
    }

    fn empty(n: usize, k: usize, roles: Vec<RoleSet>) -> Self {
        FlowNetwork {
            network: BoundedNetwork::new(2 * n + 4, 2 * n, 2 * n + 3),
            kinds: Vec::new(),
            n,
            k,
            roles,
        }
    }

    fn push(&mut self, kind: ArcKind, from: usize, to: usize, lower: i64, upper: i64) {
        self.network.add_arc(from, to, lower, upper);
        self.kinds.push(kind);
    }

    fn add_split_arcs(&mut self) {
        for v in 0..self.n {
            self.push(ArcKind::Split(v), Self::v_in(v), Self::v_out(v), 1, 1);
        }
    }
}

pub fn build_flow_network(g: &DirectedKnitGraph, k: usize, rule: RedRule) -> Result<FlowNetwork> {
    if g.has_color(EdgeColor::Purple) {
        return Err(Error::PurplePresent);
    }
    let n = g.n();
    let mut roles = Vec::with_capacity(n);
    for v in 0..n {
        let (indeg, outdeg) = (g.in_degree(v), g.out_degree(v));
        let r = classify_vertex(indeg, outdeg, rule);
        if r.is_empty() {
            return Err(Error::InfeasibleVertex {
                vertex: v,
                indeg,
                outdeg,
            });
        }
        roles.push(r);
    }
    let mut net = FlowNetwork::empty(n, k, roles);
    net.add_split_arcs();
    for (i, e) in g.edges().iter().enumerate() {
        let (ru, rv) = (net.roles[e.src], net.roles[e.dst]);
        if (ru.start || ru.middle) && (rv.middle || rv.end) {
            net.push(
                ArcKind::Original(i),
                FlowNetwork::v_out(e.src),
                FlowNetwork::v_in(e.dst),
                0,
                1,
            );
        }
    }
    let (s_out, t_in) = (net.s_out(), net.t_in());
    for v in 0..n {
        if net.roles[v].start {
            net.push(ArcKind::Source(v), s_out, FlowNetwork::v_in(v), 0, 1);
        }
    }
    for v in 0..n {
        if net.roles[v].end {
            net.push(ArcKind::Sink(v), FlowNetwork::v_out(v), t_in, 0, 1);
        }
    }
    let k = k as i64;
    let (s_in, t_out) = (net.s_in(), net.t_out());
    net.push(ArcKind::Super, s_in, s_out, k, k);
    net.push(ArcKind::Super, t_in, t_out, k, k);
    Ok(net)
}

/// Any integral flow respecting all bounds.
pub fn solve_flow_with_bounds(net: &FlowNetwork) -> Option<Vec<i64>> {
    net.network.feasible_flow()
}

/// Follows every unit of flow leaving `s_out`; threads are ordered by
/// their start vertex.
pub fn extract_threads(net: &FlowNetwork, g: &DirectedKnitGraph, flow: &[i64]) -> ThreadCover {
    let mut next = vec![None; net.n];
    let mut starts = Vec::new();
    for (kind, &f) in net.kinds.iter().zip(flow) {
        if f == 0 {
            continue;
        }
        match *kind {
            ArcKind::Original(i) => {
                let e = g.edge(i);
                next[e.src] = Some(e.dst);
            }
            ArcKind::Source(v) => starts.push(v),
            _ => {}
        }
    }
    starts.sort_unstable();
    let threads = starts
        .into_iter()
        .map(|s| {
            let mut thread = vec![s];
            let mut cur = s;
            while let Some(w) = next[cur] {
                thread.push(w);
                cur = w;
            }
            thread
        })
        .collect();
    ThreadCover { threads }
}

/// A coloring together with the threads it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// The input arcs, colored Blue along threads and Red elsewhere.
    pub graph: DirectedKnitGraph,
    pub cover: ThreadCover,
}

/// Decides whether the DAG can be knit with exactly `k` threads under
/// class-0 degree restrictions.
pub fn decide_k_knittable(
    g: &DirectedKnitGraph,
    k: usize,
    rule: RedRule,
) -> Result<Option<Witness>> {
    if g.has_color(EdgeColor::Purple) {
        return Err(Error::PurplePresent);
    }
    if !g.is_dag() {
        return Err(Error::NotADag);
    }
    let net = match build_flow_network(g, k, rule) {
        Ok(net) => net,
        Err(Error::InfeasibleVertex { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let Some(flow) = solve_flow_with_bounds(&net) else {
        return Ok(None);
    };
    let cover = extract_threads(&net, g, &flow);
    let graph = g.with_colors(&cover.coloring(g));
    Ok(Some(Witness { graph, cover }))
}

/// Every `k` in `1..=n` for which [`decide_k_knittable`] succeeds.
pub fn feasible_thread_counts(g: &DirectedKnitGraph, rule: RedRule) -> Result<Vec<usize>> {
    let mut ks = Vec::new();
    for k in 1..=g.n() {
        if decide_k_knittable(g, k, rule)?.is_some() {
            ks.push(k);
        }
    }
    Ok(ks)
}

/// Minimum number of vertex-disjoint paths covering a DAG, ignoring
/// colors and degree restrictions, via minimum flow.
pub fn minimum_path_cover(g: &DirectedKnitGraph) -> Result<(usize, ThreadCover)> {
    if !g.is_dag() {
        return Err(Error::NotADag);
    }
    let n = g.n();
    let all = RoleSet {
        start: true,
        middle: true,
        end: true,
    };
    let mut net = FlowNetwork::empty(n, 0, vec![all; n]);
    net.add_split_arcs();
    for (i, e) in g.edges().iter().enumerate() {
        net.push(
            ArcKind::Original(i),
            FlowNetwork::v_out(e.src),
            FlowNetwork::v_in(e.dst),
            0,
            1,
        );
    }
    let (s_in, s_out, t_in, t_out) = (net.s_in(), net.s_out(), net.t_in(), net.t_out());
    for v in 0..n {
        net.push(ArcKind::Source(v), s_out, FlowNetwork::v_in(v), 0, 1);
        net.push(ArcKind::Sink(v), FlowNetwork::v_out(v), t_in, 0, 1);
    }
    net.push(ArcKind::Super, s_in, s_out, 0, n as i64);
    net.push(ArcKind::Super, t_in, t_out, 0, n as i64);
    let flow = net
        .network
        .min_flow()
        .expect("one thread per vertex is always feasible");
    let cover = extract_threads(&net, g, &flow);
    Ok((cover.k(), cover))
}

/// Input to the exhaustive oracle.
#[derive(Debug, Clone, Copy)]
pub enum OracleInput<'a> {
    Directed(&'a DirectedKnitGraph),
    Undirected(&'a KnittingGraph),
}

pub const DEFAULT_ORACLE_CAP: usize = 10;

/// Exhaustive search over systems of `k` vertex-disjoint paths.
///
/// Directed inputs keep their arcs; undirected inputs get thread edges
/// oriented along the thread and every other edge oriented from the lower
/// to the higher position in the concatenated thread order. The first
/// candidate accepted by [`check_coloring`] is returned.
pub fn brute_force_knittable(
    input: OracleInput<'_>,
    k: usize,
    rule: RedRule,
    cap: usize,
) -> Result<Option<Witness>> {
    let n = match input {
        OracleInput::Directed(g) => g.n(),
        OracleInput::Undirected(g) => g.n(),
    };
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    if n == 0 {
        return Ok((k == 0).then(|| Witness {
            graph: DirectedKnitGraph::new(0, []).expect("empty graph"),
            cover: ThreadCover::default(),
        }));
    }
    if k == 0 || k > n {
        return Ok(None);
    }
    let adjacency: Vec<Vec<VertexId>> = match input {
        OracleInput::Directed(g) => (0..n).map(|v| g.successors(v).collect()).collect(),
        OracleInput::Undirected(g) => g.adjacency(),
    };
    let mut search = PathSearch {
        input,
        adjacency,
        k,
        rule,
        visited: vec![false; n],
        threads: Vec::new(),
        placed: 0,
        found: None,
    };
    search.open_thread(None)?;
    Ok(search.found)
}

struct PathSearch<'a> {
    input: OracleInput<'a>,
    adjacency: Vec<Vec<VertexId>>,
    k: usize,
    rule: RedRule,
    visited: Vec<bool>,
    threads: Vec<Vec<VertexId>>,
    placed: usize,
    found: Option<Witness>,
}

impl PathSearch<'_> {
    fn n(&self) -> usize {
        self.visited.len()
    }

    // Starts a new thread. Directed covers are unordered sets, so their
    // starts are increasing; undirected covers are ordered sequences.
    fn open_thread(&mut self, last_start: Option<VertexId>) -> Result<()> {
        let from = match (self.input, last_start) {
            (OracleInput::Directed(_), Some(s)) => s + 1,
            _ => 0,
        };
        for s in from..self.n() {
            if self.visited[s] {
                continue;
            }
            self.visit(s, true);
            self.extend()?;
            self.unvisit(true);
            if self.found.is_some() {
                return Ok(());
            }
        }
        Ok(())
    }

    fn visit(&mut self, v: VertexId, new_thread: bool) {
        self.visited[v] = true;
        self.placed += 1;
        if new_thread {
            self.threads.push(vec![v]);
        } else {
            self.threads.last_mut().expect("open thread").push(v);
        }
    }

    fn unvisit(&mut self, close_thread: bool) {
        let v = if close_thread {
            self.threads.pop().expect("open thread")[0]
        } else {
            self.threads
                .last_mut()
                .expect("open thread")
                .pop()
                .expect("vertex")
        };
        self.visited[v] = false;
        self.placed -= 1;
    }

    fn extend(&mut self) -> Result<()> {
        let last = *self
            .threads
            .last()
            .and_then(|t| t.last())
            .expect("open thread");
        for i in 0..self.adjacency[last].len() {
            let w = self.adjacency[last][i];
            if self.visited[w] {
                continue;
            }
            self.visit(w, false);
            self.extend()?;
            self.unvisit(false);
            if self.found.is_some() {
                return Ok(());
            }
        }
        // close the current thread here
        if self.placed == self.n() {
            if self.threads.len() == self.k {
                self.evaluate()?;
            }
        } else if self.threads.len() < self.k {
            let start = self.threads.last().expect("open thread")[0];
            self.open_thread(Some(start))?;
        }
        Ok(())
    }

    fn evaluate(&mut self) -> Result<()> {
        let cover = ThreadCover::new(self.threads.clone());
        let graph = match self.input {
            OracleInput::Directed(g) => g.with_colors(&cover.coloring(g)),
            OracleInput::Undirected(g) => orient(g, &cover),
        };
        if check_coloring(&graph, self.k, self.rule)?.is_valid() {
            self.found = Some(Witness { graph, cover });
        }
        Ok(())
    }
}

/// Orients an undirected graph along a thread cover: thread edges follow
/// the threads, all other edges run from the earlier to the later vertex
/// of the concatenated thread order.
pub fn orient(g: &KnittingGraph, cover: &ThreadCover) -> DirectedKnitGraph {
    let mut rank = vec![0usize; g.n()];
    let mut thread_of = vec![usize::MAX; g.n()];
    let mut r = 0;
    for (t, thread) in cover.threads.iter().enumerate() {
        for &v in thread {
            rank[v] = r;
            thread_of[v] = t;
            r += 1;
        }
    }
    let edges = g.edges().iter().map(|&(u, v)| {
        let (a, b) = if rank[u] < rank[v] { (u, v) } else { (v, u) };
        let sequential = thread_of[a] == thread_of[b] && rank[b] == rank[a] + 1;
        let color = if sequential {
            EdgeColor::Blue
        } else {
            EdgeColor::Red
        };
        Edge::new(a, b, color)
    });
    DirectedKnitGraph::new(g.n(), edges).expect("orientation of a simple graph is simple")
}
