//! Drawings of knitting graphs: crossings, cable width, complexity
//! classes, row counting and the swap test for simple knittability.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use serde::Serialize;

use crate::cover::ThreadCover;
use crate::error::{Error, Result};
use crate::feasibility::{check_coloring_with_boundary, Boundary, RedRule};
use crate::graph::{DirectedKnitGraph, EdgeColor, VertexId};
use crate::planarity::is_planar;

/// Row and column of every vertex. Rows are integers; columns are exact
/// rationals so that crossing tests never depend on rounding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalLayout {
    points: Vec<(i64, Rational64)>,
}

impl NaturalLayout {
    pub fn new(points: Vec<(i64, Rational64)>) -> Self {
        NaturalLayout { points }
    }

    /// Integer grid positions.
    pub fn from_grid(points: &[(i64, i64)]) -> Self {
        Self::new(
            points
                .iter()
                .map(|&(r, c)| (r, Rational64::from_integer(c)))
                .collect(),
        )
    }

    /// Converts float columns to the nearest simple fraction.
    pub fn from_f64(points: &[(i64, f64)]) -> Result<Self> {
        points
            .iter()
            .map(|&(r, c)| {
                Rational64::approximate_float(c)
                    .map(|c| (r, c))
                    .ok_or_else(|| {
                        Error::DegenerateLayout(format!("column {c} is not representable"))
                    })
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn row(&self, v: VertexId) -> i64 {
        self.points[v].0
    }

    pub fn col(&self, v: VertexId) -> Rational64 {
        self.points[v].1
    }

    pub fn points(&self) -> &[(i64, Rational64)] {
        &self.points
    }

    pub fn to_f64(&self) -> Vec<(i64, f64)> {
        self.points
            .iter()
            .map(|&(r, c)| (r, *c.numer() as f64 / *c.denom() as f64))
            .collect()
    }

    /// Vertices in the lowest and highest rows.
    pub fn boundary(&self) -> Boundary {
        let mut b = Boundary::default();
        let (Some(lo), Some(hi)) = (
            self.points.iter().map(|p| p.0).min(),
            self.points.iter().map(|p| p.0).max(),
        ) else {
            return b;
        };
        for (v, p) in self.points.iter().enumerate() {
            if p.0 == lo {
                b.bottom.insert(v);
            }
            if p.0 == hi {
                b.top.insert(v);
            }
        }
        b
    }

    fn check_covers(&self, n: usize) -> Result<()> {
        if self.points.len() < n {
            return Err(Error::MissingPosition(self.points.len()));
        }
        Ok(())
    }

    // Scales columns by the common denominator so that all arithmetic is
    // on integers: x = col * d, y = row.
    fn integer_points(&self) -> Result<(Vec<(i128, i128)>, i128)> {
        let mut d: i128 = 1;
        for &(_, c) in &self.points {
            d = d.lcm(&(*c.denom() as i128));
            if d > 1 << 40 {
                return Err(Error::DegenerateLayout(
                    "column denominators too large".into(),
                ));
            }
        }
        let pts = self
            .points
            .iter()
            .map(|&(r, c)| (*c.numer() as i128 * (d / *c.denom() as i128), r as i128))
            .collect();
        Ok((pts, d))
    }
}

/// Pairs of edges whose straight segments cross in a layout. Nodes are
/// edge indices into the graph's edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingGraph {
    pub edge_count: usize,
    /// Sorted pairs `(i, j)` with `i < j`.
    pub links: Vec<(usize, usize)>,
}

impl CrossingGraph {
    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.links.binary_search(&(i.min(j), i.max(j))).is_ok()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.links
            .iter()
            .filter(|&&(a, b)| a == i || b == i)
            .count()
    }

    /// Link count of every connected component that has at least one link.
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.edge_count).collect();
        fn find(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                p[v] = p[p[v]];
                v = p[v];
            }
            v
        }
        for &(a, b) in &self.links {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut count: BTreeMap<usize, usize> = BTreeMap::new();
        for &(a, _) in &self.links {
            *count.entry(find(&mut parent, a)).or_default() += 1;
        }
        count.into_values().collect()
    }
}

fn cross(o: (i128, i128), a: (i128, i128), b: (i128, i128)) -> i128 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn on_segment(p: (i128, i128), a: (i128, i128), b: (i128, i128)) -> bool {
    cross(a, b, p) == 0
        && p.0 >= a.0.min(b.0)
        && p.0 <= a.0.max(b.0)
        && p.1 >= a.1.min(b.1)
        && p.1 <= a.1.max(b.1)
}

enum PairTest {
    Apart,
    Cross((i128, i128, i128)),
    Degenerate(String),
}

fn fmt_point(p: (i128, i128), d: i128) -> String {
    let x = p.0 as f64 / d as f64;
    format!("({}, {})", p.1, x)
}

fn test_pair(
    pts: &[(i128, i128)],
    d: i128,
    (a, b): (usize, usize),
    (c, e): (usize, usize),
) -> PairTest {
    let (pa, pb, pc, pe) = (pts[a], pts[b], pts[c], pts[e]);
    let shared = [a, b].iter().filter(|v| **v == c || **v == e).count();
    if shared > 0 {
        // Edges meeting at a vertex only conflict when they overlap.
        let (far1, far2, common) = if a == c {
            (b, e, a)
        } else if a == e {
            (b, c, a)
        } else if b == c {
            (a, e, b)
        } else {
            (a, c, b)
        };
        let (pc0, p1, p2) = (pts[common], pts[far1], pts[far2]);
        if on_segment(p1, pc0, p2) || on_segment(p2, pc0, p1) {
            return PairTest::Degenerate(format!("overlapping edges at {}", fmt_point(pc0, d)));
        }
        return PairTest::Apart;
    }
    let o1 = cross(pa, pb, pc).signum();
    let o2 = cross(pa, pb, pe).signum();
    let o3 = cross(pc, pe, pa).signum();
    let o4 = cross(pc, pe, pb).signum();
    if o1 * o2 < 0 && o3 * o4 < 0 {
        let dir1 = (pb.0 - pa.0, pb.1 - pa.1);
        let dir2 = (pe.0 - pc.0, pe.1 - pc.1);
        let den = dir1.0 * dir2.1 - dir1.1 * dir2.0;
        let t = (pc.0 - pa.0) * dir2.1 - (pc.1 - pa.1) * dir2.0;
        let mut xn = pa.0 * den + dir1.0 * t;
        let mut yn = pa.1 * den + dir1.1 * t;
        let mut dn = den;
        let g = xn.gcd(&yn).gcd(&dn);
        if g != 0 {
            xn /= g;
            yn /= g;
            dn /= g;
        }
        if dn < 0 {
            xn = -xn;
            yn = -yn;
            dn = -dn;
        }
        return PairTest::Cross((xn, yn, dn));
    }
    for (p, (s, t)) in [
        (pc, (pa, pb)),
        (pe, (pa, pb)),
        (pa, (pc, pe)),
        (pb, (pc, pe)),
    ] {
        if on_segment(p, s, t) {
            return PairTest::Degenerate(format!("vertex on an edge at {}", fmt_point(p, d)));
        }
    }
    PairTest::Apart
}

/// Crossing pairs among straight-segment `segments` (vertex pairs).
///
/// Edges are bucketed by the rows they span and swept by column, so a
/// grid-like drawing costs close to linear time.
pub fn segment_crossings(
    segments: &[(VertexId, VertexId)],
    layout: &NaturalLayout,
) -> Result<Vec<(usize, usize)>> {
    let (pts, d) = layout.integer_points()?;
    let mut seen: HashMap<(i128, i128), VertexId> = HashMap::new();
    for (v, &p) in pts.iter().enumerate() {
        if let Some(u) = seen.insert(p, v) {
            return Err(Error::DegenerateLayout(format!(
                "vertices {u} and {v} coincide at {}",
                fmt_point(p, d)
            )));
        }
    }
    struct Span {
        ymin: i128,
        ymax: i128,
        xmin: i128,
        xmax: i128,
    }
    let spans: Vec<Span> = segments
        .iter()
        .map(|&(u, v)| Span {
            ymin: pts[u].1.min(pts[v].1),
            ymax: pts[u].1.max(pts[v].1),
            xmin: pts[u].0.min(pts[v].0),
            xmax: pts[u].0.max(pts[v].0),
        })
        .collect();
    let mut buckets: BTreeMap<i128, Vec<usize>> = BTreeMap::new();
    for (i, s) in spans.iter().enumerate() {
        for r in s.ymin..=s.ymax {
            buckets.entry(r).or_default().push(i);
        }
    }
    let mut links = Vec::new();
    let mut at_point: HashMap<(i128, i128, i128), Vec<usize>> = HashMap::new();
    for (&row, bucket) in buckets.iter_mut() {
        bucket.sort_by_key(|&i| spans[i].xmin);
        for (x, &i) in bucket.iter().enumerate() {
            for &j in &bucket[x + 1..] {
                if spans[j].xmin > spans[i].xmax {
                    break;
                }
                // each pair is tested once, in the lowest row both span
                if spans[i].ymin.max(spans[j].ymin) != row {
                    continue;
                }
                match test_pair(&pts, d, segments[i], segments[j]) {
                    PairTest::Apart => {}
                    PairTest::Cross(point) => {
                        links.push((i.min(j), i.max(j)));
                        at_point.entry(point).or_default().extend([i, j]);
                    }
                    PairTest::Degenerate(msg) => return Err(Error::DegenerateLayout(msg)),
                }
            }
        }
    }
    for ((xn, yn, dn), mut edges) in at_point {
        edges.sort_unstable();
        edges.dedup();
        if edges.len() > 2 {
            let x = xn as f64 / (dn * d) as f64;
            let y = yn as f64 / dn as f64;
            return Err(Error::DegenerateLayout(format!(
                "{} edges meet at ({y}, {x})",
                edges.len()
            )));
        }
    }
    links.sort_unstable();
    links.dedup();
    Ok(links)
}

pub fn crossing_graph(g: &DirectedKnitGraph, layout: &NaturalLayout) -> Result<CrossingGraph> {
    layout.check_covers(g.n())?;
    let segments: Vec<_> = g.edges().iter().map(|e| e.key()).collect();
    Ok(CrossingGraph {
        edge_count: segments.len(),
        links: segment_crossings(&segments, layout)?,
    })
}

/// Largest number of links in a component of the crossing graph.
pub fn cable_width(g: &DirectedKnitGraph, layout: &NaturalLayout) -> Result<usize> {
    let cg = crossing_graph(g, layout)?;
    for &(i, j) in &cg.links {
        let (a, b) = (g.edge(i), g.edge(j));
        if a.color == EdgeColor::Blue && b.color == EdgeColor::Blue {
            return Err(Error::BlueCrossing(a.key(), b.key()));
        }
    }
    Ok(cg.component_sizes().into_iter().max().unwrap_or(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ComplexityClass {
    Class0,
    Class1,
    Class2,
    Class3,
}

impl fmt::Display for ComplexityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self {
            ComplexityClass::Class0 => 0,
            ComplexityClass::Class1 => 1,
            ComplexityClass::Class2 => 2,
            ComplexityClass::Class3 => 3,
        };
        write!(f, "Class {k}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Complexity {
    pub class: ComplexityClass,
    /// Planarity of the underlying undirected graph.
    pub planar: bool,
    /// Some crossing in the layout involves a loop (red or purple) edge.
    pub crossings_on_red: bool,
    /// Some crossing in the layout involves a sequential (blue or purple) edge.
    pub crossings_on_blue: bool,
    pub layout_crossings: usize,
}

impl Complexity {
    /// Crossings avoid the loop edges.
    pub fn is_1a(&self) -> bool {
        self.class == ComplexityClass::Class2 && !self.crossings_on_red
    }

    /// Crossings avoid the sequential edges.
    pub fn is_1b(&self) -> bool {
        self.class == ComplexityClass::Class2 && !self.crossings_on_blue
    }
}

/// Assigns a complexity class. With a layout, the lowest and highest rows
/// are treated as cast-on and top rows when degrees are checked.
pub fn classify_complexity(
    g: &DirectedKnitGraph,
    layout: Option<&NaturalLayout>,
    rule: RedRule,
    multi_orientation: bool,
) -> Result<Complexity> {
    let planar = is_planar(&g.underlying());
    let mut c = Complexity {
        class: ComplexityClass::Class0,
        planar,
        crossings_on_red: false,
        crossings_on_blue: false,
        layout_crossings: 0,
    };
    let mut boundary = Boundary::default();
    if let Some(layout) = layout {
        let cg = crossing_graph(g, layout)?;
        c.layout_crossings = cg.links.len();
        for &(i, j) in &cg.links {
            for e in [g.edge(i), g.edge(j)] {
                c.crossings_on_red |= e.color.is_loop();
                c.crossings_on_blue |= e.color.is_sequential();
            }
        }
        boundary = layout.boundary();
    }
    c.class = if multi_orientation {
        ComplexityClass::Class3
    } else if !planar || c.layout_crossings > 0 {
        ComplexityClass::Class2
    } else {
        let ok = check_coloring_with_boundary(g, 0, rule, &boundary)
            .map(|r| r.paths_ok && r.degrees_ok())
            .unwrap_or(false);
        if ok {
            ComplexityClass::Class0
        } else {
            ComplexityClass::Class1
        }
    };
    Ok(c)
}

fn single_thread(cover: &ThreadCover) -> Result<&[VertexId]> {
    match cover.threads.as_slice() {
        [t] => Ok(t),
        ts => Err(Error::NotSingleThread(ts.len())),
    }
}

/// Splits the thread into rows: a new row starts whenever the loops
/// change sides relative to the direction of travel.
///
/// The direction at a stitch runs from its predecessor to its successor.
/// Each incident loop votes with the sign of the cross product of that
/// direction and the loop's vector; a stitch without votes, or with a
/// tied vote, stays in the current row.
pub fn row_segments(
    g: &DirectedKnitGraph,
    cover: &ThreadCover,
    layout: &NaturalLayout,
) -> Result<Vec<Vec<VertexId>>> {
    let thread = single_thread(cover)?;
    if !crossing_graph(g, layout)?.is_empty() {
        return Err(Error::NotPlanarLayout);
    }
    let (pts, _) = layout.integer_points()?;
    let pos = cover.positions(g.n());
    let adjacent_on_thread = |u: VertexId, v: VertexId| match (pos[u], pos[v]) {
        (Some((_, i)), Some((_, j))) => i.abs_diff(j) == 1,
        _ => false,
    };
    let mut rows: Vec<Vec<VertexId>> = Vec::new();
    let mut side = 0i128;
    for (i, &v) in thread.iter().enumerate() {
        let before = if i > 0 { thread[i - 1] } else { v };
        let after = thread.get(i + 1).copied().unwrap_or(v);
        let dir = (pts[after].0 - pts[before].0, pts[after].1 - pts[before].1);
        let mut sum = 0i128;
        for &id in g.out_edges(v).iter().chain(g.in_edges(v)) {
            let e = g.edge(id);
            // purple turns are loops as well and vote like one
            if adjacent_on_thread(e.src, e.dst) && !e.color.is_loop() {
                continue;
            }
            let vec = (pts[e.dst].0 - pts[e.src].0, pts[e.dst].1 - pts[e.src].1);
            sum += (dir.0 * vec.1 - dir.1 * vec.0).signum();
        }
        let s = sum.signum();
        let flip = s != 0 && side != 0 && s != side;
        if s != 0 {
            side = s;
        }
        // a turn starts a row even when a single column leaves nothing to vote
        let turned = i > 0
            && g.find_arc(thread[i - 1], v)
                .is_some_and(|id| g.edge(id).color == EdgeColor::Purple);
        if flip || turned || rows.is_empty() {
            rows.push(Vec::new());
        }
        rows.last_mut().expect("pushed above").push(v);
    }
    Ok(rows)
}

/// Number of rows a single-thread graph is knit in.
pub fn count_rows(
    g: &DirectedKnitGraph,
    cover: &ThreadCover,
    layout: &NaturalLayout,
) -> Result<usize> {
    Ok(row_segments(g, cover, layout)?.len())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleKnitReport {
    pub swap_count: usize,
    /// Row of every vertex, inferred from the thread and its loops.
    pub rows: Vec<usize>,
    /// Present iff `swap_count` is zero.
    pub layout: Option<NaturalLayout>,
}

/// Counts stitches that swap order between consecutive rows.
///
/// Rows are inferred along the thread: a stitch sits at least as high as
/// its predecessor and one row above every stitch it is pulled through.
/// Within each band of loops between two rows, the children sorted by
/// parent should be monotone (one direction for flat work, the other for
/// work in the round); every pair against the band's majority direction
/// is a swap.
pub fn test_simple_knittable(
    g: &DirectedKnitGraph,
    cover: &ThreadCover,
) -> Result<SimpleKnitReport> {
    let thread = single_thread(cover)?;
    let n = g.n();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in thread.iter().enumerate() {
        index[v] = i;
    }
    let mut row = vec![0usize; n];
    for (i, &v) in thread.iter().enumerate() {
        let mut r = if i > 0 { row[thread[i - 1]] } else { 0 };
        for &id in g.in_edges(v) {
            let e = g.edge(id);
            if e.color.is_loop() || e.color == EdgeColor::Uncolored && index[e.src] + 1 != i {
                r = r.max(row[e.src] + 1);
            }
        }
        row[v] = r;
    }
    let rows = row.iter().max().map_or(0, |&r| r + 1);
    let mut bands: Vec<Vec<(usize, usize)>> = vec![Vec::new(); rows];
    let mut turns = vec![false; rows];
    for e in g.edges() {
        if e.color.is_loop() && row[e.dst] == row[e.src] + 1 {
            bands[row[e.src]].push((index[e.src], index[e.dst]));
            turns[row[e.src]] |= e.color == EdgeColor::Purple;
        }
    }
    let mut swaps = 0;
    let mut reversed = vec![false; rows];
    for (r, band) in bands.iter().enumerate() {
        let (mut against_up, mut against_down) = (0usize, 0usize);
        for (x, &(p1, c1)) in band.iter().enumerate() {
            for &(p2, c2) in &band[x + 1..] {
                if p1 == p2 || c1 == c2 {
                    continue;
                }
                if (p1 < p2) == (c1 < c2) {
                    against_down += 1;
                } else {
                    against_up += 1;
                }
            }
        }
        swaps += against_up.min(against_down);
        let opposite = match against_down.cmp(&against_up) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => turns[r],
        };
        if r + 1 < rows {
            reversed[r + 1] = reversed[r] ^ opposite;
        }
    }
    let layout = (swaps == 0).then(|| {
        let mut members: Vec<Vec<VertexId>> = vec![Vec::new(); rows];
        for &v in thread {
            members[row[v]].push(v);
        }
        let mut points = vec![(0i64, 0i64); n];
        for (r, m) in members.iter().enumerate() {
            for (rank, &v) in m.iter().enumerate() {
                let col = if reversed[r] {
                    m.len() - 1 - rank
                } else {
                    rank
                };
                points[v] = (r as i64, col as i64);
            }
        }
        NaturalLayout::from_grid(&points)
    });
    Ok(SimpleKnitReport {
        swap_count: swaps,
        rows: row,
        layout,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use EdgeColor::*;

    fn graph(n: usize, edges: &[(usize, usize, EdgeColor)]) -> DirectedKnitGraph {
        DirectedKnitGraph::from_arcs(n, edges).unwrap()
    }

    // 3x3 flat stockinette, 0-based, with its grid drawing
    fn knit() -> (DirectedKnitGraph, ThreadCover, NaturalLayout) {
        let g = graph(
            9,
            &[
                (0, 1, Blue),
                (1, 2, Blue),
                (2, 3, Purple),
                (3, 4, Blue),
                (4, 5, Blue),
                (5, 6, Purple),
                (6, 7, Blue),
                (7, 8, Blue),
                (0, 5, Red),
                (1, 4, Red),
                (4, 7, Red),
                (3, 8, Red),
            ],
        );
        let layout = NaturalLayout::from_grid(&[
            (0, 0),
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 1),
            (1, 0),
            (2, 0),
            (2, 1),
            (2, 2),
        ]);
        (g, ThreadCover::new(vec![(0..9).collect()]), layout)
    }

    #[test]
    fn stockinette_is_plane_and_class0() {
        let (g, cover, layout) = knit();
        assert!(crossing_graph(&g, &layout).unwrap().is_empty());
        assert_eq!(cable_width(&g, &layout).unwrap(), 0);
        let c = classify_complexity(&g, Some(&layout), RedRule::Strict, false).unwrap();
        assert_eq!(c.class, ComplexityClass::Class0);
        assert_eq!(count_rows(&g, &cover, &layout).unwrap(), 3);
        let simple = test_simple_knittable(&g, &cover).unwrap();
        assert_eq!(simple.swap_count, 0);
        assert_eq!(simple.rows, vec![0, 0, 0, 1, 1, 1, 2, 2, 2]);
        assert_eq!(simple.layout.unwrap(), layout);
    }

    #[test]
    fn declared_multi_orientation_is_class3() {
        let (g, _, layout) = knit();
        let c = classify_complexity(&g, Some(&layout), RedRule::Strict, true).unwrap();
        assert_eq!(c.class, ComplexityClass::Class3);
    }

    #[test]
    fn crossing_blue_edges() {
        // an X of two blue edges plus nothing else
        let g = graph(4, &[(0, 3, Blue), (1, 2, Blue)]);
        let layout = NaturalLayout::from_grid(&[(0, 0), (0, 1), (1, 0), (1, 1)]);
        let cg = crossing_graph(&g, &layout).unwrap();
        assert_eq!(cg.links, vec![(0, 1)]);
        assert!(matches!(
            cable_width(&g, &layout),
            Err(Error::BlueCrossing(..))
        ));
        let c = classify_complexity(&g, Some(&layout), RedRule::Strict, false).unwrap();
        assert_eq!(c.class, ComplexityClass::Class2);
        assert!(c.is_1a());
        assert!(!c.is_1b());
    }

    #[test]
    fn vertex_on_edge_is_degenerate() {
        let g = graph(3, &[(0, 2, Red)]);
        let layout = NaturalLayout::from_grid(&[(0, 0), (1, 0), (2, 0)]);
        // vertex 1 is isolated, so it never meets the edge
        assert!(crossing_graph(&g, &layout).unwrap().is_empty());
        let g = graph(4, &[(0, 2, Red), (1, 3, Blue)]);
        let layout = NaturalLayout::from_grid(&[(0, 0), (1, 0), (2, 0), (1, 1)]);
        assert!(matches!(
            crossing_graph(&g, &layout),
            Err(Error::DegenerateLayout(_))
        ));
    }

    #[test]
    fn three_concurrent_edges_are_degenerate() {
        let g = graph(6, &[(0, 5, Red), (1, 4, Red), (2, 3, Red)]);
        // three segments through (1, 1)
        let layout = NaturalLayout::from_grid(&[(0, 0), (0, 1), (0, 2), (2, 0), (2, 1), (2, 2)]);
        assert!(
            matches!(crossing_graph(&g, &layout), Err(Error::DegenerateLayout(m)) if m.contains("3 edges"))
        );
    }

    #[test]
    fn coincident_vertices_are_degenerate() {
        let g = DirectedKnitGraph::new(2, [Edge::new(0, 1, Blue)]).unwrap();
        let layout = NaturalLayout::from_grid(&[(0, 0), (0, 0)]);
        assert!(crossing_graph(&g, &layout).is_err());
    }

    #[test]
    fn missing_positions() {
        let g = graph(3, &[(0, 1, Blue)]);
        let layout = NaturalLayout::from_grid(&[(0, 0)]);
        assert_eq!(crossing_graph(&g, &layout), Err(Error::MissingPosition(1)));
    }

    #[test]
    fn fractional_columns() {
        let layout = NaturalLayout::from_f64(&[(0, -0.6), (1, 1.3)]).unwrap();
        assert_eq!(layout.col(0), Rational64::new(-3, 5));
        assert_eq!(layout.col(1), Rational64::new(13, 10));
        assert_eq!(layout.to_f64(), vec![(0, -0.6), (1, 1.3)]);
    }

    #[test]
    fn single_row_counts_one() {
        let g = graph(4, &[(0, 1, Blue), (1, 2, Blue), (2, 3, Blue)]);
        let layout = NaturalLayout::from_grid(&[(0, 0), (0, 1), (0, 2), (0, 3)]);
        let cover = ThreadCover::new(vec![vec![0, 1, 2, 3]]);
        assert_eq!(count_rows(&g, &cover, &layout).unwrap(), 1);
        let simple = test_simple_knittable(&g, &cover).unwrap();
        assert_eq!(simple.swap_count, 0);
        assert_eq!(simple.layout.unwrap(), layout);
    }

    #[test]
    fn rows_need_single_thread() {
        let (g, _, layout) = knit();
        let cover = ThreadCover::new(vec![vec![0], vec![1]]);
        assert_eq!(
            count_rows(&g, &cover, &layout),
            Err(Error::NotSingleThread(2))
        );
    }
}
