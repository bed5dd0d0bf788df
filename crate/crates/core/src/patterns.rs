//! Generated fabrics and the small stitch fixtures, plus a plain-text
//! rendering of knitting instructions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::cover::ThreadCover;
use crate::error::{Error, Result};
use crate::feasibility::{check_coloring_with_boundary, Boundary, ColoringReport, RedRule};
use crate::graph::{DirectedKnitGraph, EdgeColor, VertexId, YarnGraph};
use crate::layout::{
    classify_complexity, row_segments, Complexity, ComplexityClass, NaturalLayout,
};
use crate::yarn::yarn_from_threads;

use EdgeColor::{Blue, Purple, Red};

/// A colored graph with its thread cover, drawing and expected class.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub graph: DirectedKnitGraph,
    pub cover: ThreadCover,
    pub layout: NaturalLayout,
    pub yarn: YarnGraph,
    pub expected_class: ComplexityClass,
    pub rule: RedRule,
    pub labels: BTreeMap<VertexId, String>,
    pub rows: usize,
    /// Worked as a tube. The drawing is the tube cut open, so the edges
    /// that close each round cross the loops of that round.
    pub round: bool,
}

impl Fixture {
    fn build(
        name: &str,
        graph: DirectedKnitGraph,
        threads: Vec<Vec<VertexId>>,
        layout: NaturalLayout,
        expected_class: ComplexityClass,
        rows: usize,
    ) -> Self {
        let cover = ThreadCover::new(threads);
        let yarn = yarn_from_threads(&graph, &cover);
        Fixture {
            name: name.to_string(),
            graph,
            cover,
            layout,
            yarn,
            expected_class,
            rule: RedRule::Strict,
            labels: BTreeMap::new(),
            rows,
            round: false,
        }
    }

    /// Cast-on and top rows of a flat drawing. A tube's drawing is cut
    /// open, so no boundary is inferred from it.
    pub fn boundary(&self) -> Boundary {
        if self.round {
            Boundary::default()
        } else {
            self.layout.boundary()
        }
    }

    /// The coloring checked against the fixture's own thread count.
    pub fn check(&self) -> ColoringReport {
        check_coloring_with_boundary(&self.graph, self.cover.k(), self.rule, &self.boundary())
            .expect("fixtures are fully colored")
    }

    /// Complexity class, using the drawing unless the fixture is a tube.
    pub fn classify(&self) -> Result<Complexity> {
        let layout = (!self.round).then_some(&self.layout);
        classify_complexity(&self.graph, layout, self.rule, false)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternKind {
    Stockinette,
    Knit,
    Yo,
    Kfb,
    K2tog,
    C1b,
    Brioche,
}

impl FromStr for PatternKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "stockinette" => PatternKind::Stockinette,
            "k" | "knit" => PatternKind::Knit,
            "yo" => PatternKind::Yo,
            "kfb" => PatternKind::Kfb,
            "k2tog" => PatternKind::K2tog,
            "c1b" => PatternKind::C1b,
            "brioche" => PatternKind::Brioche,
            other => return Err(Error::BadDims(format!("unknown pattern {other:?}"))),
        })
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PatternKind::Stockinette => "stockinette",
            PatternKind::Knit => "k",
            PatternKind::Yo => "yo",
            PatternKind::Kfb => "kfb",
            PatternKind::K2tog => "k2tog",
            PatternKind::C1b => "c1b",
            PatternKind::Brioche => "brioche",
        };
        f.write_str(s)
    }
}

/// What to generate. `rows` and `round` only apply to stockinette and
/// `cols` to stockinette and brioche.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatternSpec {
    pub kind: PatternKind,
    pub rows: usize,
    pub cols: usize,
    pub round: bool,
}

pub fn generate(spec: &PatternSpec) -> Result<Fixture> {
    match spec.kind {
        PatternKind::Stockinette => gen_stockinette(spec.rows, spec.cols, spec.round),
        PatternKind::Brioche => gen_brioche_maximal(spec.cols),
        other => gen_stitch_fixture(&other.to_string()),
    }
}

/// Stockinette fabric of `rows` x `cols` stitches.
///
/// Flat work turns at the end of every row: the thread runs back and forth
/// and the turning edge is purple. In the round the thread spirals, each
/// stitch is pulled through the one `cols` positions earlier, and nothing
/// is purple.
pub fn gen_stockinette(rows: usize, cols: usize, round: bool) -> Result<Fixture> {
    if rows < 1 || cols < 1 || (round && cols < 2) {
        return Err(Error::BadDims(format!(
            "stockinette needs rows >= 1 and cols >= 1 (2 in the round), got {rows}x{cols}"
        )));
    }
    let n = rows * cols;
    let mut points = Vec::with_capacity(n);
    let mut column = Vec::with_capacity(n);
    for v in 0..n {
        let (r, i) = (v / cols, v % cols);
        let c = if round || r.is_multiple_of(2) {
            i
        } else {
            cols - 1 - i
        };
        points.push((r as i64, c as i64));
        column.push(c);
    }
    let mut arcs = Vec::with_capacity(2 * n);
    for v in 0..n.saturating_sub(1) {
        let turn = !round && (v + 1) % cols == 0;
        arcs.push((v, v + 1, if turn { Purple } else { Blue }));
    }
    for (v, &col) in column.iter().enumerate().take(n.saturating_sub(cols)) {
        let r = v / cols;
        let above = (r + 1) * cols
            + if round || (r + 1).is_multiple_of(2) {
                col
            } else {
                cols - 1 - col
            };
        if above != v + 1 {
            arcs.push((v, above, Red));
        }
    }
    let graph = DirectedKnitGraph::from_arcs(n, &arcs)?;
    let mut f = Fixture::build(
        if round {
            "stockinette-round"
        } else {
            "stockinette"
        },
        graph,
        vec![(0..n).collect()],
        NaturalLayout::from_grid(&points),
        // a lone stitch would have to start and end its thread at once
        if n == 1 {
            ComplexityClass::Class1
        } else {
            ComplexityClass::Class0
        },
        rows,
    );
    f.round = round;
    Ok(f)
}

/// One of the small stitch fixtures, numbered as in the usual diagrams
/// minus one: the thread visits 0, 1, 2, ... in order.
pub fn gen_stitch_fixture(name: &str) -> Result<Fixture> {
    let kind: PatternKind = name.parse()?;
    type Arcs = &'static [(usize, usize, EdgeColor)];
    let (arcs, layout, class): (Arcs, Vec<(i64, f64)>, _) = match kind {
        PatternKind::Knit | PatternKind::Stockinette => {
            let mut f = gen_stockinette(3, 3, false)?;
            f.name = "k".into();
            return Ok(f);
        }
        PatternKind::Brioche => return gen_brioche_maximal(6),
        PatternKind::Yo => (
            &[
                (0, 1, Blue),
                (1, 2, Purple),
                (2, 3, Blue),
                (3, 4, Blue),
                (4, 5, Purple),
                (5, 6, Blue),
                (6, 7, Blue),
                (0, 4, Red),
                (2, 7, Red),
                (3, 6, Red),
            ],
            vec![
                (0, 0.65),
                (0, 1.95),
                (1, 2.6),
                (1, 1.3),
                (1, 0.0),
                (2, 0.0),
                (2, 1.3),
                (2, 2.6),
            ],
            ComplexityClass::Class0,
        ),
        PatternKind::Kfb => (
            &[
                (0, 1, Blue),
                (1, 2, Blue),
                (2, 3, Purple),
                (3, 4, Blue),
                (4, 5, Blue),
                (5, 6, Blue),
                (6, 7, Purple),
                (7, 8, Blue),
                (8, 9, Blue),
                (9, 10, Blue),
                (0, 6, Red),
                (1, 4, Red),
                (1, 5, Red),
                (3, 10, Red),
                (4, 9, Red),
                (5, 8, Red),
            ],
            vec![
                (0, 0.0),
                (0, 1.0),
                (0, 2.0),
                (1, 2.6),
                (1, 1.6),
                (1, 0.6),
                (1, -0.6),
                (2, -0.6),
                (2, 0.6),
                (2, 1.6),
                (2, 2.6),
            ],
            ComplexityClass::Class0,
        ),
        PatternKind::K2tog => (
            &[
                (0, 1, Blue),
                (1, 2, Blue),
                (2, 3, Blue),
                (3, 4, Purple),
                (4, 5, Blue),
                (5, 6, Blue),
                (6, 7, Blue),
                (7, 8, Purple),
                (8, 9, Blue),
                (9, 10, Blue),
                (0, 7, Red),
                (1, 6, Red),
                (2, 5, Red),
                (4, 10, Red),
                (5, 9, Red),
                (6, 9, Red),
            ],
            vec![
                (0, -0.6),
                (0, 0.6),
                (0, 1.6),
                (0, 2.6),
                (1, 2.6),
                (1, 1.6),
                (1, 0.6),
                (1, -0.6),
                (2, 0.0),
                (2, 1.0),
                (2, 2.0),
            ],
            ComplexityClass::Class0,
        ),
        PatternKind::C1b => (
            &[
                (0, 1, Blue),
                (1, 2, Blue),
                (2, 3, Blue),
                (3, 4, Purple),
                (4, 5, Blue),
                (5, 6, Blue),
                (6, 7, Blue),
                (7, 8, Purple),
                (8, 9, Blue),
                (9, 10, Blue),
                (10, 11, Blue),
                (0, 7, Red),
                (1, 6, Red),
                (2, 5, Red),
                (4, 11, Red),
                (5, 9, Red),
                (6, 10, Red),
            ],
            vec![
                (0, 0.0),
                (0, 1.0),
                (0, 2.0),
                (0, 3.0),
                (1, 3.0),
                (1, 2.0),
                (1, 1.0),
                (1, 0.0),
                (2, 0.0),
                (2, 1.0),
                (2, 2.0),
                (2, 3.0),
            ],
            ComplexityClass::Class2,
        ),
    };
    let n = layout.len();
    let graph = DirectedKnitGraph::from_arcs(n, arcs)?;
    Ok(Fixture::build(
        &kind.to_string(),
        graph,
        vec![(0..n).collect()],
        NaturalLayout::from_f64(&layout)?,
        class,
        3,
    ))
}

/// Three rows of brioche worked with four strands.
///
/// Every stitch of rows 1 and 2 is pulled through the stitch below it and
/// both diagonal neighbours, so each square of the grid holds two crossing
/// diagonals. Rows 0 and 2 are one strand each; row 1 is held as two
/// strands, one per half. Stitches alternate between yarns `a` and `b`.
/// The strip is the tube cut open along one column.
pub fn gen_brioche_maximal(cols: usize) -> Result<Fixture> {
    if cols < 4 || !cols.is_multiple_of(2) {
        return Err(Error::BadDims(format!(
            "brioche needs an even number of columns >= 4, got {cols}"
        )));
    }
    let id = |r: usize, c: usize| r * cols + c;
    let n = 3 * cols;
    let half = cols / 2;
    let mut arcs = Vec::new();
    for r in 0..3 {
        for c in 0..cols - 1 {
            if r != 1 || c + 1 != half {
                arcs.push((id(r, c), id(r, c + 1), Blue));
            }
        }
    }
    for r in 0..2 {
        for c in 0..cols {
            arcs.push((id(r, c), id(r + 1, c), Red));
            if c + 1 < cols {
                arcs.push((id(r, c), id(r + 1, c + 1), Red));
                arcs.push((id(r, c + 1), id(r + 1, c), Red));
            }
        }
    }
    let graph = DirectedKnitGraph::from_arcs(n, &arcs)?;
    let threads = vec![
        (0..cols).map(|c| id(0, c)).collect(),
        (0..half).map(|c| id(1, c)).collect(),
        (half..cols).map(|c| id(1, c)).collect(),
        (0..cols).map(|c| id(2, c)).collect(),
    ];
    let points: Vec<(i64, i64)> = (0..n)
        .map(|v| ((v / cols) as i64, (v % cols) as i64))
        .collect();
    let mut f = Fixture::build(
        "brioche",
        graph,
        threads,
        NaturalLayout::from_grid(&points),
        ComplexityClass::Class2,
        3,
    );
    f.labels = (0..n)
        .map(|v| {
            let label = if (v / cols + v % cols).is_multiple_of(2) {
                "a"
            } else {
                "b"
            };
            (v, label.to_string())
        })
        .collect();
    Ok(f)
}

fn stitch_token(loops_in: usize) -> String {
    match loops_in {
        0 => "yo".into(),
        1 => "k".into(),
        n => format!("k{n}tog"),
    }
}

/// Knitting instructions, one line per row. Each stitch is named by how
/// many loops it is pulled through; a second stitch worked into the same
/// loop is marked `kfb-second-leg`.
pub fn emit_instructions(fixture: &Fixture) -> Result<String> {
    instructions(&fixture.graph, &fixture.cover, &fixture.layout)
}

pub fn instructions(
    g: &DirectedKnitGraph,
    cover: &ThreadCover,
    layout: &NaturalLayout,
) -> Result<String> {
    let rows = row_segments(g, cover, layout)?;
    let mut worked = vec![false; g.n()];
    let mut lines = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let tokens: Vec<String> = row
            .iter()
            .map(|&v| {
                let parents: Vec<VertexId> = g
                    .in_edges(v)
                    .iter()
                    .map(|&id| g.edge(id))
                    .filter(|e| e.color.is_loop())
                    .map(|e| e.src)
                    .collect();
                let second_leg = parents.len() == 1 && worked[parents[0]];
                for &p in &parents {
                    worked[p] = true;
                }
                if second_leg {
                    "kfb-second-leg".to_string()
                } else {
                    stitch_token(parents.len())
                }
            })
            .collect();
        lines.push(format!("row {}: {}", r + 1, tokens.join(" ")));
    }
    Ok(lines.join("\n"))
}
