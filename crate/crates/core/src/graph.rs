//! Graph data model: directed knitting graphs, yarn graphs and the
//! undirected knitting graph they reduce to.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense vertex index, `0..n`.
pub type VertexId = usize;

/// Semantic color of a directed knitting graph edge.
///
/// Blue edges are sequential along the yarn, red edges are loop
/// connections (a stitch passing through another), purple edges are both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeColor {
    Blue,
    Red,
    Purple,
    Uncolored,
}

impl EdgeColor {
    /// The edge is part of a thread (blue or purple).
    pub fn is_sequential(self) -> bool {
        matches!(self, EdgeColor::Blue | EdgeColor::Purple)
    }

    /// The edge carries a loop (red or purple).
    pub fn is_loop(self) -> bool {
        matches!(self, EdgeColor::Red | EdgeColor::Purple)
    }

    pub fn dot_name(self) -> &'static str {
        match self {
            EdgeColor::Blue => "blue",
            EdgeColor::Red => "red",
            EdgeColor::Purple => "purple",
            EdgeColor::Uncolored => "gray",
        }
    }
}

impl fmt::Display for EdgeColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.dot_name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub src: VertexId,
    pub dst: VertexId,
    pub color: EdgeColor,
}

impl Edge {
    pub fn new(src: VertexId, dst: VertexId, color: EdgeColor) -> Self {
        Edge { src, dst, color }
    }

    /// Endpoints as an unordered pair `(min, max)`.
    pub fn key(&self) -> (VertexId, VertexId) {
        (self.src.min(self.dst), self.src.max(self.dst))
    }
}

/// Directed simple graph with colored edges.
///
/// Edges are kept sorted by `(src, dst)`, so two graphs with the same arc
/// set compare equal regardless of insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedKnitGraph {
    n: usize,
    edges: Vec<Edge>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl DirectedKnitGraph {
    /// Validates and builds a graph. Rejects self-loops, out-of-range
    /// indices and any two edges on the same unordered pair.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        let mut seen = BTreeSet::new();
        for e in &edges {
            for index in [e.src, e.dst] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            if e.src == e.dst {
                return Err(Error::SelfLoop(e.src));
            }
            if !seen.insert(e.key()) {
                return Err(Error::DuplicateEdge(e.src, e.dst));
            }
        }
        edges.sort_by_key(|e| (e.src, e.dst));
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            out_adj[e.src].push(i);
            in_adj[e.dst].push(i);
        }
        Ok(DirectedKnitGraph {
            n,
            edges,
            out_adj,
            in_adj,
        })
    }

    /// Convenience constructor for tests and generators.
    pub fn from_arcs(n: usize, arcs: &[(VertexId, VertexId, EdgeColor)]) -> Result<Self> {
        Self::new(n, arcs.iter().map(|&(s, d, c)| Edge::new(s, d, c)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &Edge {
        &self.edges[index]
    }

    /// Indices of edges leaving `v`, ordered by destination.
    pub fn out_edges(&self, v: VertexId) -> &[usize] {
        &self.out_adj[v]
    }

    /// Indices of edges entering `v`, ordered by source.
    pub fn in_edges(&self, v: VertexId) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_adj[v].len()
    }

    pub fn successors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.out_adj[v].iter().map(move |&i| self.edges[i].dst)
    }

    /// Index of the arc `u -> v`, if present.
    pub fn find_arc(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.out_adj[u]
            .binary_search_by_key(&v, |&i| self.edges[i].dst)
            .ok()
            .map(|pos| self.out_adj[u][pos])
    }

    pub fn has_color(&self, color: EdgeColor) -> bool {
        self.edges.iter().any(|e| e.color == color)
    }

    /// Same arcs, every color replaced by `color`.
    pub fn recolored(&self, color: EdgeColor) -> Self {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.color = color;
        }
        g
    }

    /// Same arcs with colors taken from `colors` (indexed like `edges()`).
    pub fn with_colors(&self, colors: &[EdgeColor]) -> Self {
        assert_eq!(colors.len(), self.edges.len());
        let mut g = self.clone();
        for (e, &c) in g.edges.iter_mut().zip(colors) {
            e.color = c;
        }
        g
    }

    /// Kahn's algorithm with a min-heap, so ties go to the smallest id.
    pub fn topological_sort(&self) -> Result<Vec<VertexId>> {
        let mut indeg: Vec<usize> = (0..self.n).map(|v| self.in_degree(v)).collect();
        let mut heap: BinaryHeap<Reverse<VertexId>> = (0..self.n)
            .filter(|&v| indeg[v] == 0)
            .map(Reverse)
            .collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(Reverse(v)) = heap.pop() {
            order.push(v);
            for w in self.successors(v) {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    heap.push(Reverse(w));
                }
            }
        }
        if order.len() == self.n {
            Ok(order)
        } else {
            Err(Error::CycleDetected(self.find_cycle(&indeg)))
        }
    }

    pub fn is_dag(&self) -> bool {
        self.topological_sort().is_ok()
    }

    // Every vertex left with positive in-degree after Kahn has a predecessor
    // that is also left, so walking predecessors must revisit a vertex.
    fn find_cycle(&self, remaining: &[usize]) -> Vec<VertexId> {
        let start = match (0..self.n).find(|&v| remaining[v] > 0) {
            Some(v) => v,
            None => return Vec::new(),
        };
        let mut pos = vec![usize::MAX; self.n];
        let mut walk = Vec::new();
        let mut v = start;
        while pos[v] == usize::MAX {
            pos[v] = walk.len();
            walk.push(v);
            v = self.in_adj[v]
                .iter()
                .map(|&i| self.edges[i].src)
                .find(|&u| remaining[u] > 0)
                .expect("stuck vertex has a stuck predecessor");
        }
        let mut cycle = walk[pos[v]..].to_vec();
        cycle.reverse();
        cycle
    }

    /// Drops directions and colors.
    pub fn underlying(&self) -> KnittingGraph {
        KnittingGraph::new(self.n, self.edges.iter().map(|e| (e.src, e.dst)))
            .expect("a simple directed graph reduces to a simple graph")
    }
}

/// Undirected simple knitting graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnittingGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl KnittingGraph {
    /// Builds a simple undirected graph; edges are stored as sorted
    /// `(min, max)` pairs.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for index in [u, v] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        Ok(KnittingGraph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn adjacency(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}

/// Directed multigraph tracing the physical yarn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YarnGraph {
    n: usize,
    arcs: Vec<(VertexId, VertexId)>,
    pub yarn_count_hint: Option<usize>,
}

impl YarnGraph {
    pub fn new(n: usize, arcs: Vec<(VertexId, VertexId)>) -> Result<Self> {
        for &(u, v) in &arcs {
            for index in [u, v] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
        }
        Ok(YarnGraph {
            n,
            arcs,
            yarn_count_hint: None,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(VertexId, VertexId)] {
        &self.arcs
    }

    /// Reduces the multigraph to a colored simple graph.
    ///
    /// Per unordered pair, one arc becomes Blue, an opposite pair becomes
    /// Red and three arcs become Purple oriented along the majority
    /// direction. Red edges point along `order` (lower position to higher)
    /// when it is given, otherwise along the first arc seen for the pair.
    pub fn reduce_to_directed(&self, order: Option<&[VertexId]>) -> Result<DirectedKnitGraph> {
        let position: Option<Vec<usize>> = order.map(|ord| {
            let mut pos = vec![usize::MAX; self.n];
            for (i, &v) in ord.iter().enumerate() {
                pos[v] = i;
            }
            pos
        });
        // pair -> arcs in traversal order
        let mut groups: BTreeMap<(VertexId, VertexId), Vec<(VertexId, VertexId)>> = BTreeMap::new();
        for &(u, v) in &self.arcs {
            groups.entry((u.min(v), u.max(v))).or_default().push((u, v));
        }
        let mut edges = Vec::with_capacity(groups.len());
        for (pair, arcs) in groups {
            let forward = arcs.iter().filter(|&&(u, _)| u == pair.0).count();
            let backward = arcs.len() - forward;
            let edge = match arcs.len() {
                1 => Edge::new(arcs[0].0, arcs[0].1, EdgeColor::Blue),
                2 => {
                    if forward != 1 {
                        return Err(Error::InconsistentPair(pair));
                    }
                    let (u, v) = match &position {
                        Some(pos) if pos[pair.0] != usize::MAX && pos[pair.1] != usize::MAX => {
                            if pos[pair.0] < pos[pair.1] {
                                pair
                            } else {
                                (pair.1, pair.0)
                            }
                        }
                        _ => arcs[0],
                    };
                    Edge::new(u, v, EdgeColor::Red)
                }
                3 => match (forward, backward) {
                    (2, 1) => Edge::new(pair.0, pair.1, EdgeColor::Purple),
                    (1, 2) => Edge::new(pair.1, pair.0, EdgeColor::Purple),
                    _ => return Err(Error::InconsistentPair(pair)),
                },
                count => return Err(Error::MultiplicityTooHigh { pair, count }),
            };
            edges.push(edge);
        }
        DirectedKnitGraph::new(self.n, edges)
    }
}
