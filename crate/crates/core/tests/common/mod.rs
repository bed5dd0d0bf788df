//! Helpers shared by the oracle and acceptance targets.
#![allow(dead_code)]

use knitgraph::*;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const RULES: [RedRule; 2] = [RedRule::Strict, RedRule::Extended];

/// Every labeled DAG on `n` vertices: each unordered pair is absent,
/// forward or backward, keeping only the acyclic choices.
pub fn all_dags(n: usize) -> Vec<DirectedKnitGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let total = 3usize.pow(pairs.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut arcs = Vec::new();
        for &(i, j) in &pairs {
            match c % 3 {
                1 => arcs.push((i, j, EdgeColor::Uncolored)),
                2 => arcs.push((j, i, EdgeColor::Uncolored)),
                _ => {}
            }
            c /= 3;
        }
        let g = DirectedKnitGraph::from_arcs(n, &arcs).unwrap();
        if g.is_dag() {
            out.push(g);
        }
    }
    out
}

pub fn random_dag(rng: &mut ChaCha8Rng, n: usize, p: f64) -> DirectedKnitGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                arcs.push((order[i], order[j], EdgeColor::Uncolored));
            }
        }
    }
    DirectedKnitGraph::from_arcs(n, &arcs).unwrap()
}

/// Maximum bipartite matching between tails and heads by augmenting paths.
pub fn max_matching(g: &DirectedKnitGraph) -> usize {
    fn augment(
        g: &DirectedKnitGraph,
        u: usize,
        seen: &mut [bool],
        mate: &mut [Option<usize>],
    ) -> bool {
        for v in g.successors(u) {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if mate[v].is_none_or(|w| augment(g, w, seen, mate)) {
                mate[v] = Some(u);
                return true;
            }
        }
        false
    }
    let mut mate = vec![None; g.n()];
    (0..g.n())
        .filter(|&u| augment(g, u, &mut vec![false; g.n()], &mut mate))
        .count()
}

/// Smallest number of vertex-disjoint paths covering `g`, by trying every
/// choice of successor for every vertex.
pub fn brute_min_path_cover(g: &DirectedKnitGraph) -> usize {
    fn go(g: &DirectedKnitGraph, v: usize, taken: &mut [bool], links: usize) -> usize {
        if v == g.n() {
            return links;
        }
        let mut best = go(g, v + 1, taken, links);
        for w in g.successors(v).collect::<Vec<_>>() {
            if !taken[w] {
                taken[w] = true;
                best = best.max(go(g, v + 1, taken, links + 1));
                taken[w] = false;
            }
        }
        best
    }
    g.n() - go(g, 0, &mut vec![false; g.n()], 0)
}

/// Every fixture the generators produce at small sizes.
pub fn all_fixtures() -> Vec<Fixture> {
    let mut out: Vec<Fixture> = ["k", "yo", "kfb", "k2tog", "c1b"]
        .iter()
        .map(|name| gen_stitch_fixture(name).unwrap())
        .collect();
    out.push(gen_brioche_maximal(4).unwrap());
    out.push(gen_brioche_maximal(6).unwrap());
    for rows in 1..=4 {
        for cols in 1..=4 {
            if rows * cols > 1 {
                out.push(gen_stockinette(rows, cols, false).unwrap());
            }
            if rows >= 2 && cols >= 2 {
                out.push(gen_stockinette(rows, cols, true).unwrap());
            }
        }
    }
    out
}
