//! Vertex-level degree feasibility.
//!
//! A vertex's red configuration is the pair (red in-degree, red out-degree).
//! Which pairs are admissible depends on the [`RedRule`]. From the total
//! degrees of a vertex we derive the thread roles it can take: start (S),
//! middle (M) or end (T).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DirectedKnitGraph, EdgeColor, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RedRule {
    /// yo (0,1), top-row stitch (1,0), knit (1,1), kfb (1,2), k2tog (2,1).
    #[default]
    Strict,
    /// Anything except many-to-many, isolated, or a fresh loop with
    /// several stitches worked into it.
    Extended,
}

impl std::str::FromStr for RedRule {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "strict" => Ok(RedRule::Strict),
            "extended" => Ok(RedRule::Extended),
            other => Err(format!("unknown rule `{other}` (expected strict|extended)")),
        }
    }
}

pub fn red_config_allowed(r_in: usize, r_out: usize, rule: RedRule) -> bool {
    match rule {
        RedRule::Strict => matches!((r_in, r_out), (0, 1) | (1, 0) | (1, 1) | (1, 2) | (2, 1)),
        RedRule::Extended => {
            (r_in, r_out) != (0, 0) && !(r_in >= 2 && r_out >= 2) && !(r_in == 0 && r_out >= 2)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Role {
    S,
    M,
    T,
}

/// Subset of `{S, M, T}`; empty means the vertex is infeasible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RoleSet {
    pub start: bool,
    pub middle: bool,
    pub end: bool,
}

impl RoleSet {
    pub const EMPTY: RoleSet = RoleSet {
        start: false,
        middle: false,
        end: false,
    };

    pub fn is_empty(&self) -> bool {
        !(self.start || self.middle || self.end)
    }

    pub fn contains(&self, role: Role) -> bool {
        match role {
            Role::S => self.start,
            Role::M => self.middle,
            Role::T => self.end,
        }
    }

    pub fn is_subset(&self, other: &RoleSet) -> bool {
        (!self.start || other.start) && (!self.middle || other.middle) && (!self.end || other.end)
    }

    pub fn roles(&self) -> BTreeSet<Role> {
        [Role::S, Role::M, Role::T]
            .into_iter()
            .filter(|&r| self.contains(r))
            .collect()
    }

    /// `"S, M, T"` style, `"non-feasible"` when empty.
    pub fn label(&self) -> String {
        if self.is_empty() {
            return "non-feasible".to_owned();
        }
        self.roles()
            .iter()
            .map(|r| format!("{r:?}"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for RoleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Roles available to a vertex with the given total degrees.
///
/// A thread's first stitch must be passed through later (`outdeg >= 2`)
/// and its last stitch must pass through an earlier one (`indeg >= 2`);
/// otherwise the free yarn end is not secured.
pub fn classify_vertex(indeg: usize, outdeg: usize, rule: RedRule) -> RoleSet {
    RoleSet {
        start: outdeg >= 2 && red_config_allowed(indeg, outdeg - 1, rule),
        middle: indeg >= 1 && outdeg >= 1 && red_config_allowed(indeg - 1, outdeg - 1, rule),
        end: indeg >= 2 && red_config_allowed(indeg - 1, outdeg, rule),
    }
}

/// `table[indeg][outdeg]` for degrees 0..=3.
pub fn feasibility_table(rule: RedRule) -> [[RoleSet; 4]; 4] {
    let mut table = [[RoleSet::EMPTY; 4]; 4];
    for (indeg, row) in table.iter_mut().enumerate() {
        for (outdeg, cell) in row.iter_mut().enumerate() {
            *cell = classify_vertex(indeg, outdeg, rule);
        }
    }
    table
}

/// Aligned text rendering with indegree columns and outdegree rows.
pub fn render_table(table: &[[RoleSet; 4]; 4]) -> String {
    let headers = ["0", "1", "2", ">=3"];
    let width = 14;
    let mut out = format!("{:<10}", "out\\in");
    for h in headers {
        out.push_str(&format!("{h:<width$}"));
    }
    out.push('\n');
    for (outdeg, h) in headers.iter().enumerate() {
        out.push_str(&format!("{h:<10}"));
        for row in table.iter() {
            out.push_str(&format!("{:<width$}", row[outdeg].label()));
        }
        out.push('\n');
    }
    out
}

/// Role of one vertex within a thread cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ThreadPosition {
    Start,
    Middle,
    End,
    Single,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexViolation {
    pub vertex: VertexId,
    pub position: ThreadPosition,
    pub red_in: usize,
    pub red_out: usize,
}

/// Outcome of [`check_coloring`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringReport {
    /// Blue (and purple) edges form vertex-disjoint directed paths covering V.
    pub paths_ok: bool,
    /// Number of paths, when `paths_ok`.
    pub path_count: usize,
    pub expected_k: usize,
    pub threads: Vec<Vec<VertexId>>,
    pub violations: Vec<VertexViolation>,
}

impl ColoringReport {
    pub fn structure_ok(&self) -> bool {
        self.paths_ok && self.path_count == self.expected_k
    }

    pub fn degrees_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        self.structure_ok() && self.degrees_ok()
    }
}

/// Vertices whose missing neighbors lie outside the fabric: the cast-on
/// row has no stitches below and the top row has nothing worked above.
/// Each listed vertex receives one virtual loop on that side before its
/// configuration is checked.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Boundary {
    pub bottom: BTreeSet<VertexId>,
    pub top: BTreeSet<VertexId>,
}

/// Verifies a complete coloring against `k` threads.
pub fn check_coloring(g: &DirectedKnitGraph, k: usize, rule: RedRule) -> Result<ColoringReport> {
    check_coloring_with_boundary(g, k, rule, &Boundary::default())
}

/// [`check_coloring`] with boundary rows relaxed.
///
/// Purple edges count both as thread edges and as loops. Each vertex's
/// position in its thread must be a role permitted by [`classify_vertex`]
/// at the vertex's effective degrees (blue + red, purple counted twice).
pub fn check_coloring_with_boundary(
    g: &DirectedKnitGraph,
    k: usize,
    rule: RedRule,
    boundary: &Boundary,
) -> Result<ColoringReport> {
    if g.has_color(EdgeColor::Uncolored) {
        return Err(Error::UncoloredPresent);
    }
    let n = g.n();
    let mut next = vec![None; n];
    let mut prev = vec![None; n];
    let mut paths_ok = true;
    let mut red_in = vec![0usize; n];
    let mut red_out = vec![0usize; n];
    for e in g.edges() {
        if e.color.is_sequential() {
            if next[e.src].is_some() || prev[e.dst].is_some() {
                paths_ok = false;
            }
            next[e.src] = Some(e.dst);
            prev[e.dst] = Some(e.src);
        }
        if e.color.is_loop() {
            red_out[e.src] += 1;
            red_in[e.dst] += 1;
        }
    }
    let mut threads = Vec::new();
    if paths_ok {
        let mut visited = vec![false; n];
        for v in (0..n).filter(|&v| prev[v].is_none()) {
            let mut thread = vec![v];
            visited[v] = true;
            let mut cur = v;
            while let Some(w) = next[cur] {
                if visited[w] {
                    paths_ok = false;
                    break;
                }
                visited[w] = true;
                thread.push(w);
                cur = w;
            }
            threads.push(thread);
        }
        if visited.iter().any(|&seen| !seen) {
            paths_ok = false;
        }
    }
    let path_count = if paths_ok { threads.len() } else { 0 };
    if !paths_ok {
        threads.clear();
    }

    let mut violations = Vec::new();
    for v in 0..n {
        let r_in = red_in[v] + usize::from(boundary.bottom.contains(&v));
        let r_out = red_out[v] + usize::from(boundary.top.contains(&v));
        let b_in = usize::from(prev[v].is_some());
        let b_out = usize::from(next[v].is_some());
        let roles = classify_vertex(r_in + b_in, r_out + b_out, rule);
        let (position, ok) = match (b_in, b_out) {
            (0, 1) => (ThreadPosition::Start, roles.start),
            (1, 1) => (ThreadPosition::Middle, roles.middle),
            (1, 0) => (ThreadPosition::End, roles.end),
            _ => (ThreadPosition::Single, roles.start && roles.end),
        };
        if !ok {
            violations.push(VertexViolation {
                vertex: v,
                position,
                red_in: r_in,
                red_out: r_out,
            });
        }
    }
    Ok(ColoringReport {
        paths_ok,
        path_count,
        expected_k: k,
        threads,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use EdgeColor::*;

    fn set(s: bool, m: bool, t: bool) -> RoleSet {
        RoleSet {
            start: s,
            middle: m,
            end: t,
        }
    }

    #[test]
    fn red_configs() {
        assert!(red_config_allowed(1, 1, RedRule::Strict));
        assert!(!red_config_allowed(2, 2, RedRule::Strict));
        assert!(red_config_allowed(3, 1, RedRule::Extended));
        assert!(!red_config_allowed(3, 1, RedRule::Strict));
        assert!(!red_config_allowed(0, 0, RedRule::Extended));
        assert!(!red_config_allowed(0, 2, RedRule::Extended));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_vertex(2, 2, RedRule::Strict),
            set(true, true, true)
        );
        assert!(classify_vertex(1, 1, RedRule::Strict).is_empty());
        assert_eq!(
            classify_vertex(3, 1, RedRule::Strict),
            set(false, false, true)
        );
        assert_eq!(
            classify_vertex(0, 2, RedRule::Strict),
            set(true, false, false)
        );
    }

    #[test]
    fn corner_cell_is_empty_under_both_rules() {
        for rule in [RedRule::Strict, RedRule::Extended] {
            assert!(feasibility_table(rule)[0][0].is_empty());
        }
    }

    #[test]
    fn extended_contains_strict() {
        for i in 0..=6 {
            for o in 0..=6 {
                let strict = classify_vertex(i, o, RedRule::Strict);
                let extended = classify_vertex(i, o, RedRule::Extended);
                assert!(strict.is_subset(&extended), "({i},{o})");
            }
        }
    }

    // The flow network cannot forbid the middle role for a vertex that is
    // both a possible start and a possible end.
    #[test]
    fn start_and_end_imply_middle() {
        for rule in [RedRule::Strict, RedRule::Extended] {
            for i in 0..=12 {
                for o in 0..=12 {
                    let r = classify_vertex(i, o, rule);
                    if r.start && r.end {
                        assert!(r.middle, "({i},{o}) {rule:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn chain_interior_is_rejected() {
        let g = DirectedKnitGraph::from_arcs(3, &[(0, 1, Blue), (1, 2, Blue)]).unwrap();
        let report = check_coloring(&g, 1, RedRule::Strict).unwrap();
        assert!(report.structure_ok());
        assert!(!report.is_valid());
        assert!(report.violations.iter().any(|v| v.vertex == 1));
    }

    #[test]
    fn path_count_mismatch() {
        let g = DirectedKnitGraph::from_arcs(4, &[(0, 1, Blue), (2, 3, Blue)]).unwrap();
        let report = check_coloring(&g, 1, RedRule::Strict).unwrap();
        assert!(report.paths_ok);
        assert_eq!(report.path_count, 2);
        assert!(!report.is_valid());
    }

    #[test]
    fn branching_blue_is_not_a_path_system() {
        let g = DirectedKnitGraph::from_arcs(3, &[(0, 1, Blue), (0, 2, Blue)]).unwrap();
        let report = check_coloring(&g, 2, RedRule::Strict).unwrap();
        assert!(!report.paths_ok);
    }

    #[test]
    fn uncolored_rejected() {
        let g = DirectedKnitGraph::from_arcs(2, &[(0, 1, Uncolored)]).unwrap();
        assert_eq!(
            check_coloring(&g, 1, RedRule::Strict),
            Err(Error::UncoloredPresent)
        );
    }

    // 0 -> 1 -> 2 -> 3 thread over 0' row: 0 -> 2 and 1 -> 3 are loops.
    #[test]
    fn two_row_round_strip_is_valid() {
        let g = DirectedKnitGraph::from_arcs(
            4,
            &[
                (0, 1, Blue),
                (1, 2, Blue),
                (2, 3, Blue),
                (0, 2, Red),
                (1, 3, Red),
            ],
        )
        .unwrap();
        assert!(check_coloring(&g, 1, RedRule::Strict).unwrap().is_valid());
    }

    #[test]
    fn boundary_relaxes_edge_rows() {
        // cast-on stitch 1 carries two stitches (kfb into the cast-on)
        let g = DirectedKnitGraph::from_arcs(
            5,
            &[
                (0, 1, Blue),
                (1, 2, Blue),
                (2, 3, Blue),
                (3, 4, Blue),
                (1, 3, Red),
                (1, 4, Red),
                (0, 2, Red),
            ],
        )
        .unwrap();
        assert!(!check_coloring(&g, 1, RedRule::Strict).unwrap().is_valid());
        let boundary = Boundary {
            bottom: [0, 1].into(),
            top: [2, 3, 4].into(),
        };
        let report = check_coloring_with_boundary(&g, 1, RedRule::Strict, &boundary).unwrap();
        assert!(report.is_valid(), "{report:?}");
    }
}
