//! Integral flows with lower and upper arc bounds.
//!
//! Lower bounds are removed with the usual excess transformation and the
//! resulting max-flow instance is solved with Dinic's algorithm. All
//! searches are iterative so long augmenting paths cannot overflow the
//! stack, and arcs are scanned in insertion order, which keeps results
//! deterministic.

use std::collections::VecDeque;

pub const INF: i64 = i64::MAX / 4;

#[derive(Debug, Clone)]
struct ResidualArc {
    to: usize,
    cap: i64,
}

/// Residual graph with paired arcs (`i ^ 1` is the reverse of `i`).
#[derive(Debug, Clone)]
pub struct Dinic {
    arcs: Vec<ResidualArc>,
    adj: Vec<Vec<usize>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    pub fn new(nodes: usize) -> Self {
        Dinic {
            arcs: Vec::new(),
            adj: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    pub fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.level.push(0);
        self.iter.push(0);
        self.adj.len() - 1
    }

    /// Returns the index of the forward residual arc.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(ResidualArc { to, cap });
        self.arcs.push(ResidualArc { to: from, cap: 0 });
        self.adj[from].push(id);
        self.adj[to].push(id + 1);
        id
    }

    /// Flow currently pushed through forward arc `id`.
    pub fn flow_on(&self, id: usize) -> i64 {
        self.arcs[id ^ 1].cap
    }

    pub fn residual(&self, id: usize) -> i64 {
        self.arcs[id].cap
    }

    pub fn set_capacity(&mut self, id: usize, cap: i64) {
        self.arcs[id].cap = cap;
    }

    pub fn set_flow(&mut self, id: usize, flow: i64) {
        self.arcs[id ^ 1].cap = flow;
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &id in &self.adj[v] {
                let arc = &self.arcs[id];
                if arc.cap > 0 && self.level[arc.to] < 0 {
                    self.level[arc.to] = self.level[v] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        self.level[t] >= 0
    }

    // Walks the level graph from `s`, augmenting whenever `t` is reached.
    fn blocking_flow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        let mut total = 0;
        let mut path: Vec<usize> = Vec::new();
        let mut v = s;
        while total < limit {
            if v == t {
                let mut push = limit - total;
                for &id in &path {
                    push = push.min(self.arcs[id].cap);
                }
                let mut cut = path.len();
                for (i, &id) in path.iter().enumerate() {
                    self.arcs[id].cap -= push;
                    self.arcs[id ^ 1].cap += push;
                    if self.arcs[id].cap == 0 && cut == path.len() {
                        cut = i;
                    }
                }
                total += push;
                path.truncate(cut);
                v = match path.last() {
                    Some(&id) => self.arcs[id].to,
                    None => s,
                };
                continue;
            }
            let mut advanced = false;
            while self.iter[v] < self.adj[v].len() {
                let id = self.adj[v][self.iter[v]];
                let arc = &self.arcs[id];
                if arc.cap > 0 && self.level[arc.to] == self.level[v] + 1 {
                    path.push(id);
                    v = arc.to;
                    advanced = true;
                    break;
                }
                self.iter[v] += 1;
            }
            if !advanced {
                // dead end: prune and retreat
                self.level[v] = -1;
                match path.pop() {
                    Some(id) => {
                        v = self.arcs[id ^ 1].to;
                        self.iter[v] += 1;
                    }
                    None => break,
                }
            }
        }
        total
    }

    /// Pushes up to `limit` units from `s` to `t`; returns the amount pushed.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        let mut total = 0;
        while total < limit && self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            let pushed = self.blocking_flow(s, t, limit - total);
            if pushed == 0 {
                break;
            }
            total += pushed;
        }
        total
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundedArc {
    pub from: usize,
    pub to: usize,
    pub lower: i64,
    pub upper: i64,
}

/// A network with bounded arcs and a designated source and sink. Flow is
/// conserved at every node except `source` and `sink`.
#[derive(Debug, Clone)]
pub struct BoundedNetwork {
    pub nodes: usize,
    pub arcs: Vec<BoundedArc>,
    pub source: usize,
    pub sink: usize,
}

struct Reduced {
    dinic: Dinic,
    arc_ids: Vec<usize>,
    closure: usize,
    super_source: usize,
    super_sink: usize,
    required: i64,
}

impl BoundedNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Self {
        BoundedNetwork {
            nodes,
            arcs: Vec::new(),
            source,
            sink,
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, lower: i64, upper: i64) -> usize {
        debug_assert!(0 <= lower && lower <= upper);
        self.arcs.push(BoundedArc {
            from,
            to,
            lower,
            upper,
        });
        self.arcs.len() - 1
    }

    fn reduce(&self) -> Reduced {
        let mut dinic = Dinic::new(self.nodes + 2);
        let super_source = self.nodes;
        let super_sink = self.nodes + 1;
        let mut excess = vec![0i64; self.nodes];
        let arc_ids = self
            .arcs
            .iter()
            .map(|a| {
                excess[a.to] += a.lower;
                excess[a.from] -= a.lower;
                dinic.add_arc(a.from, a.to, a.upper - a.lower)
            })
            .collect();
        let closure = dinic.add_arc(self.sink, self.source, INF);
        let mut required = 0;
        for (v, &ex) in excess.iter().enumerate() {
            if ex > 0 {
                dinic.add_arc(super_source, v, ex);
                required += ex;
            } else if ex < 0 {
                dinic.add_arc(v, super_sink, -ex);
            }
        }
        Reduced {
            dinic,
            arc_ids,
            closure,
            super_source,
            super_sink,
            required,
        }
    }

    fn extract(&self, reduced: &Reduced) -> Vec<i64> {
        self.arcs
            .iter()
            .zip(&reduced.arc_ids)
            .map(|(a, &id)| a.lower + reduced.dinic.flow_on(id))
            .collect()
    }

    /// Any integral flow meeting every bound, or `None` if none exists.
    pub fn feasible_flow(&self) -> Option<Vec<i64>> {
        let mut reduced = self.reduce();
        let pushed =
            reduced
                .dinic
                .max_flow(reduced.super_source, reduced.super_sink, reduced.required);
        (pushed == reduced.required).then(|| self.extract(&reduced))
    }

    /// A feasible flow of minimum value out of `source`.
    pub fn min_flow(&self) -> Option<Vec<i64>> {
        let mut reduced = self.reduce();
        let pushed =
            reduced
                .dinic
                .max_flow(reduced.super_source, reduced.super_sink, reduced.required);
        if pushed != reduced.required {
            return None;
        }
        // Freeze the closure and the super arcs, then cancel as much
        // source-to-sink flow as the residual graph allows.
        let closure = reduced.closure;
        reduced.dinic.set_capacity(closure, 0);
        reduced.dinic.set_flow(closure, 0);
        for id in reduced.dinic.adj[reduced.super_source].clone() {
            reduced.dinic.set_capacity(id, 0);
            reduced.dinic.set_flow(id, 0);
        }
        for id in reduced.dinic.adj[reduced.super_sink].clone() {
            reduced.dinic.set_capacity(id ^ 1, 0);
            reduced.dinic.set_flow(id ^ 1, 0);
        }
        reduced.dinic.max_flow(self.sink, self.source, INF);
        Some(self.extract(&reduced))
    }

    /// Net flow leaving `source`.
    pub fn value(&self, flow: &[i64]) -> i64 {
        self.arcs
            .iter()
            .zip(flow)
            .map(|(a, &f)| {
                let mut d = 0;
                if a.from == self.source {
                    d += f;
                }
                if a.to == self.source {
                    d -= f;
                }
                d
            })
            .sum()
    }

    /// Bounds met and flow conserved away from `source` and `sink`.
    pub fn is_valid_flow(&self, flow: &[i64]) -> bool {
        if flow.len() != self.arcs.len() {
            return false;
        }
        let mut balance = vec![0i64; self.nodes];
        for (a, &f) in self.arcs.iter().zip(flow) {
            if f < a.lower || f > a.upper {
                return false;
            }
            balance[a.from] -= f;
            balance[a.to] += f;
        }
        balance
            .iter()
            .enumerate()
            .all(|(v, &b)| b == 0 || v == self.source || v == self.sink)
    }
}
