//! Left-right planarity test (de Fraysseix–Rosenstiehl criterion, in the
//! formulation of Brandes). Only the yes/no verdict is computed.

use crate::graph::KnittingGraph;

type EdgeId = usize;
type PairId = usize;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Interval {
    low: Option<EdgeId>,
    high: Option<EdgeId>,
}

impl Interval {
    fn new(low: EdgeId, high: EdgeId) -> Self {
        Interval {
            low: Some(low),
            high: Some(high),
        }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState {
    n: usize,
    // undirected edges; orientation fixed during the first DFS
    ends: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, EdgeId)>>,
    oriented: Vec<bool>,
    src: Vec<usize>,
    dst: Vec<usize>,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<EdgeId>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    out: Vec<Vec<EdgeId>>,
    roots: Vec<usize>,
    reference: Vec<Option<EdgeId>>,
    lowpt_edge: Vec<Option<EdgeId>>,
    stack_bottom: Vec<Option<PairId>>,
    stack: Vec<(PairId, ConflictPair)>,
    next_pair: PairId,
}

/// Exact planarity verdict.
pub fn is_planar(g: &KnittingGraph) -> bool {
    let n = g.n();
    let m = g.edges().len();
    if n >= 3 && m > 3 * n - 6 {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        adj[u].push((v, id));
        adj[v].push((u, id));
    }
    let mut st = LrState {
        n,
        ends: g.edges().to_vec(),
        adj,
        oriented: vec![false; m],
        src: vec![0; m],
        dst: vec![0; m],
        height: vec![None; n],
        parent_edge: vec![None; n],
        lowpt: vec![0; m],
        lowpt2: vec![0; m],
        nesting_depth: vec![0; m],
        out: vec![Vec::new(); n],
        roots: Vec::new(),
        reference: vec![None; m],
        lowpt_edge: vec![None; m],
        stack_bottom: vec![None; m],
        stack: Vec::new(),
        next_pair: 0,
    };
    st.run()
}

impl LrState {
    fn run(&mut self) -> bool {
        debug_assert_eq!(self.ends.len(), self.oriented.len());
        for v in 0..self.n {
            if self.height[v].is_none() {
                self.height[v] = Some(0);
                self.roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..self.n {
            let depth = &self.nesting_depth;
            self.out[v].sort_by_key(|&e| depth[e]);
        }
        let roots = self.roots.clone();
        roots.into_iter().all(|r| self.test(r))
    }

    fn h(&self, v: usize) -> usize {
        self.height[v].expect("visited")
    }

    fn orient(&mut self, root: usize) {
        let mut stack = vec![root];
        let mut index = vec![0usize; self.n];
        let mut resumed = vec![false; self.oriented.len()];
        while let Some(v) = stack.pop() {
            let parent = self.parent_edge[v];
            while index[v] < self.adj[v].len() {
                let (w, e) = self.adj[v][index[v]];
                if !resumed[e] {
                    if self.oriented[e] {
                        index[v] += 1;
                        continue;
                    }
                    self.oriented[e] = true;
                    self.src[e] = v;
                    self.dst[e] = w;
                    self.out[v].push(e);
                    self.lowpt[e] = self.h(v);
                    self.lowpt2[e] = self.h(v);
                    if self.height[w].is_none() {
                        self.parent_edge[w] = Some(e);
                        self.height[w] = Some(self.h(v) + 1);
                        stack.push(v);
                        stack.push(w);
                        resumed[e] = true;
                        break;
                    }
                    self.lowpt[e] = self.h(w);
                }
                self.nesting_depth[e] = 2 * self.lowpt[e];
                if self.lowpt2[e] < self.h(v) {
                    self.nesting_depth[e] += 1;
                }
                if let Some(pe) = parent {
                    if self.lowpt[e] < self.lowpt[pe] {
                        self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
                        self.lowpt[pe] = self.lowpt[e];
                    } else if self.lowpt[e] > self.lowpt[pe] {
                        self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
                    } else {
                        self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
                    }
                }
                index[v] += 1;
            }
        }
    }

    fn top_id(&self) -> Option<PairId> {
        self.stack.last().map(|&(id, _)| id)
    }

    fn push_pair(&mut self, pair: ConflictPair) {
        let id = self.next_pair;
        self.next_pair += 1;
        self.stack.push((id, pair));
    }

    fn conflicting(&self, interval: &Interval, b: EdgeId) -> bool {
        match interval.high {
            Some(high) if !interval.is_empty() => self.lowpt[high] > self.lowpt[b],
            _ => false,
        }
    }

    fn lowest(&self, pair: &ConflictPair) -> usize {
        let low = |i: &Interval| self.lowpt[i.low.expect("non-empty interval")];
        if pair.left.is_empty() {
            return low(&pair.right);
        }
        if pair.right.is_empty() {
            return low(&pair.left);
        }
        low(&pair.left).min(low(&pair.right))
    }

    fn test(&mut self, root: usize) -> bool {
        let mut stack = vec![root];
        let mut index = vec![0usize; self.n];
        let mut resumed = vec![false; self.oriented.len()];
        while let Some(v) = stack.pop() {
            let parent = self.parent_edge[v];
            let mut descended = false;
            while index[v] < self.out[v].len() {
                let e = self.out[v][index[v]];
                let w = self.dst[e];
                if !resumed[e] {
                    self.stack_bottom[e] = self.top_id();
                    if self.parent_edge[w] == Some(e) {
                        stack.push(v);
                        stack.push(w);
                        resumed[e] = true;
                        descended = true;
                        break;
                    }
                    self.lowpt_edge[e] = Some(e);
                    self.push_pair(ConflictPair {
                        left: Interval::default(),
                        right: Interval::new(e, e),
                    });
                }
                if self.lowpt[e] < self.h(v) {
                    if e == self.out[v][0] {
                        let pe = parent.expect("return edge below the root");
                        self.lowpt_edge[pe] = self.lowpt_edge[e];
                    } else if !self.add_constraints(e, parent.expect("return edge below the root"))
                    {
                        return false;
                    }
                }
                index[v] += 1;
            }
            if !descended {
                if let Some(pe) = parent {
                    self.remove_back_edges(pe);
                }
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: EdgeId, e: EdgeId) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let (_, mut q) = self
                .stack
                .pop()
                .expect("return edges of ei are on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("non-empty");
            if self.lowpt[q_low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low.expect("non-empty")] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q_low] = self.lowpt_edge[e];
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(&(_, top)) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let (_, mut q) = self.stack.pop().expect("checked");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(low) = p.right.low {
                self.reference[low] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(low) = p.left.low {
                self.reference[low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.push_pair(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: EdgeId) {
        let u = self.src[e];
        let hu = self.h(u);
        while let Some(&(_, top)) = self.stack.last() {
            if self.lowest(&top) != hu {
                break;
            }
            self.stack.pop();
        }
        if let Some((id, mut p)) = self.stack.pop() {
            while let Some(high) = p.left.high {
                if self.dst[high] != u {
                    break;
                }
                p.left.high = self.reference[high];
            }
            if p.left.high.is_none() {
                if let Some(low) = p.left.low {
                    self.reference[low] = p.right.low;
                    p.left.low = None;
                }
            }
            while let Some(high) = p.right.high {
                if self.dst[high] != u {
                    break;
                }
                p.right.high = self.reference[high];
            }
            if p.right.high.is_none() {
                if let Some(low) = p.right.low {
                    self.reference[low] = p.left.low;
                    p.right.low = None;
                }
            }
            self.stack.push((id, p));
        }
        if self.lowpt[e] < hu {
            if let Some(&(_, top)) = self.stack.last() {
                let hl = top.left.high;
                let hr = top.right.high;
                self.reference[e] = match (hl, hr) {
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => hl,
                    (Some(_), None) => hl,
                    _ => hr,
                };
            }
        }
    }
}
