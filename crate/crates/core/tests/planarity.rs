//! Planarity verdicts checked against a frozen corpus of random graphs
//! whose verdicts were computed with an independent implementation.

use knitgraph::planarity::is_planar;
use knitgraph::KnittingGraph;
use serde::Deserialize;

#[derive(Deserialize)]
struct Case {
    n: usize,
    edges: Vec<(usize, usize)>,
    planar: bool,
}

#[test]
fn matches_frozen_verdicts() {
    let cases: Vec<Case> = serde_json::from_str(include_str!("data/planarity_cases.json")).unwrap();
    assert_eq!(cases.len(), 400);
    for (i, case) in cases.iter().enumerate() {
        let g = KnittingGraph::new(case.n, case.edges.iter().copied()).unwrap();
        assert_eq!(is_planar(&g), case.planar, "case {i}: {:?}", case.edges);
    }
}
