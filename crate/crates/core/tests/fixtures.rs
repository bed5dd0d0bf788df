//! End-to-end checks on the generated fixtures.

mod common;

use common::all_fixtures;
use knitgraph::layout::{row_segments, ComplexityClass};
use knitgraph::yarn::yarns_by_thread;
use knitgraph::*;

#[test]
fn colorings_are_valid_except_brioche_degrees() {
    for f in all_fixtures() {
        let report = f.check();
        assert!(report.structure_ok(), "{}: {report:?}", f.name);
        assert_eq!(report.threads, f.cover.threads, "{}", f.name);
        if f.name == "brioche" {
            // three loops in and three out: a many-to-many stitch
            assert!(!report.degrees_ok());
        } else {
            assert!(report.degrees_ok(), "{}: {report:?}", f.name);
        }
    }
}

#[test]
fn expected_classes() {
    for f in all_fixtures() {
        assert_eq!(f.classify().unwrap().class, f.expected_class, "{}", f.name);
    }
    let c1b = gen_stitch_fixture("c1b").unwrap().classify().unwrap();
    assert!(c1b.is_1b());
    assert!(!c1b.is_1a());
}

#[test]
fn yarn_round_trip_and_decomposition() {
    for f in all_fixtures() {
        assert_eq!(f.yarn, yarn_from_threads(&f.graph, &f.cover));
        assert_eq!(
            f.yarn.reduce_to_directed(None).unwrap(),
            f.graph,
            "{}",
            f.name
        );
        let (count, decomposition) = minimum_yarns(&f.yarn);
        assert_eq!(count, f.cover.k(), "{}", f.name);
        let used: usize = decomposition.trails.iter().map(|t| t.arcs.len()).sum();
        assert_eq!(used, f.yarn.arcs().len());
        for y in yarns_by_thread(&f.graph, &f.cover) {
            eulerian_path(&y).unwrap();
        }
    }
}

#[test]
fn json_round_trip() {
    for f in all_fixtures() {
        let doc = fixture_document(&f);
        let back = parse_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc, "{}", f.name);
        assert_eq!(back.directed().unwrap(), &f.graph);
    }
}

#[test]
fn flat_class0_fixtures_are_simple() {
    for f in all_fixtures() {
        if f.round || f.expected_class != ComplexityClass::Class0 {
            continue;
        }
        assert!(is_planar(&f.graph.underlying()), "{}", f.name);
        assert_eq!(cable_width(&f.graph, &f.layout).unwrap(), 0, "{}", f.name);
        assert_eq!(
            count_rows(&f.graph, &f.cover, &f.layout).unwrap(),
            f.rows,
            "{}",
            f.name
        );
        let simple = test_simple_knittable(&f.graph, &f.cover).unwrap();
        assert_eq!(simple.swap_count, 0, "{}", f.name);
        assert!(simple.layout.is_some());
    }
}

#[test]
fn round_stockinette_decides_with_its_own_thread() {
    for rows in 2..=6 {
        for cols in 2..=6 {
            let f = gen_stockinette(rows, cols, true).unwrap();
            let w =
                decide_k_knittable(&f.graph.recolored(EdgeColor::Uncolored), 1, RedRule::Strict)
                    .unwrap()
                    .unwrap_or_else(|| panic!("{rows}x{cols} should be 1-knittable"));
            assert_eq!(w.cover, f.cover);
            assert_eq!(w.graph, f.graph);
            let simple = test_simple_knittable(&f.graph, &f.cover).unwrap();
            assert_eq!(simple.swap_count, 0);
        }
    }
    // a single round is a bare chain: its ends have no loops at all
    for cols in 2..=6 {
        let f = gen_stockinette(1, cols, true).unwrap();
        assert!(decide_k_knittable(&f.graph, 1, RedRule::Strict)
            .unwrap()
            .is_none());
    }
}

#[test]
fn c1b_has_one_cabled_crossing() {
    let f = gen_stitch_fixture("c1b").unwrap();
    let cg = crossing_graph(&f.graph, &f.layout).unwrap();
    assert_eq!(cg.links.len(), 1);
    let (i, j) = cg.links[0];
    let mut pair = [f.graph.edge(i).key(), f.graph.edge(j).key()];
    pair.sort();
    assert_eq!(pair, [(5, 9), (6, 10)]);
    assert_eq!(cable_width(&f.graph, &f.layout).unwrap(), 1);
    let simple = test_simple_knittable(&f.graph, &f.cover).unwrap();
    assert_eq!(simple.swap_count, 1);
    assert!(simple.layout.is_none());
    assert_eq!(
        count_rows(&f.graph, &f.cover, &f.layout),
        Err(Error::NotPlanarLayout)
    );
}

#[test]
fn kfb_rows_and_instructions() {
    let f = gen_stitch_fixture("kfb").unwrap();
    assert_eq!(count_rows(&f.graph, &f.cover, &f.layout).unwrap(), 3);
    let rows = row_segments(&f.graph, &f.cover, &f.layout).unwrap();
    assert_eq!(
        rows,
        vec![vec![0, 1, 2], vec![3, 4, 5, 6], vec![7, 8, 9, 10]]
    );
    let text = emit_instructions(&f).unwrap();
    assert_eq!(text.matches("kfb").count(), 1);
    assert!(text.lines().nth(1).unwrap().contains("kfb"));
}

#[test]
fn brioche_diagonals_cross_once() {
    for cols in [4, 6, 8] {
        let f = gen_brioche_maximal(cols).unwrap();
        let cg = crossing_graph(&f.graph, &f.layout).unwrap();
        for (i, e) in f.graph.edges().iter().enumerate() {
            let diagonal = f.layout.row(e.src) != f.layout.row(e.dst)
                && f.layout.col(e.src) != f.layout.col(e.dst);
            assert_eq!(cg.degree(i), usize::from(diagonal), "edge {:?}", e.key());
        }
        assert_eq!(cg.links.len(), 2 * (cols - 1));
        assert_eq!(cable_width(&f.graph, &f.layout).unwrap(), 1);
        assert_eq!(minimum_yarns(&f.yarn).0, 4);
    }
}

#[test]
fn many_to_many_stitch_is_class1() {
    // flat 3x3 stockinette whose centre stitch is also pulled through the
    // stitch diagonally below it and worked into diagonally above
    let base = gen_stockinette(3, 3, false).unwrap();
    let mut edges: Vec<Edge> = base.graph.edges().to_vec();
    edges.push(Edge::new(0, 4, EdgeColor::Red));
    edges.push(Edge::new(4, 6, EdgeColor::Red));
    let g = DirectedKnitGraph::new(9, edges).unwrap();
    assert!(is_planar(&g.underlying()));
    assert!(crossing_graph(&g, &base.layout).unwrap().is_empty());
    let c = classify_complexity(&g, Some(&base.layout), RedRule::Strict, false).unwrap();
    assert_eq!(c.class, ComplexityClass::Class1);
    assert_eq!(classify_vertex(3, 3, RedRule::Strict), RoleSet::EMPTY);
}

#[test]
fn k3tog_needs_the_extended_rule() {
    // stitch 4 is worked through 0, 1 and 2 and is itself worked by 6
    let mut arcs: Vec<(usize, usize, EdgeColor)> =
        (0..6).map(|v| (v, v + 1, EdgeColor::Blue)).collect();
    arcs.extend([(0, 4), (1, 4), (2, 4), (4, 6)].map(|(u, v)| (u, v, EdgeColor::Red)));
    let g = DirectedKnitGraph::from_arcs(7, &arcs).unwrap();
    let strict = check_coloring(&g, 1, RedRule::Strict).unwrap();
    let extended = check_coloring(&g, 1, RedRule::Extended).unwrap();
    assert!(strict.violations.iter().any(|v| v.vertex == 4));
    assert!(!extended.violations.iter().any(|v| v.vertex == 4));
}

#[test]
fn lone_stitch_is_one_row_but_not_class0() {
    let f = gen_stockinette(1, 1, false).unwrap();
    assert_eq!(count_rows(&f.graph, &f.cover, &f.layout).unwrap(), 1);
    assert!(!f.check().degrees_ok());
    assert_eq!(f.classify().unwrap().class, ComplexityClass::Class1);
    assert_eq!(minimum_yarns(&f.yarn).0, 1);
}

#[test]
fn single_column_turns_every_stitch() {
    for rows in 2..=8 {
        let f = gen_stockinette(rows, 1, false).unwrap();
        assert!(f.graph.edges().iter().all(|e| e.color == EdgeColor::Purple));
        assert!(f.check().is_valid(), "{rows}");
        assert_eq!(count_rows(&f.graph, &f.cover, &f.layout).unwrap(), rows);
    }
}
