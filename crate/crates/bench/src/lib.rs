//! Inputs shared by the benchmarks.

use knitgraph::{DirectedKnitGraph, EdgeColor, KnittingGraph};

/// A path 0 -> 1 -> ... -> n-1 with uncolored arcs.
pub fn chain(n: usize) -> DirectedKnitGraph {
    let arcs: Vec<_> = (0..n.saturating_sub(1))
        .map(|v| (v, v + 1, EdgeColor::Uncolored))
        .collect();
    DirectedKnitGraph::from_arcs(n, &arcs).expect("a chain is simple")
}

/// A rows x cols grid with every cell split by a diagonal.
pub fn triangulated_grid(rows: usize, cols: usize) -> KnittingGraph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
                if c + 1 < cols {
                    edges.push((id(r, c), id(r + 1, c + 1)));
                }
            }
        }
    }
    KnittingGraph::new(rows * cols, edges).expect("grid edges are distinct")
}
