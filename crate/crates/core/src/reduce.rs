//! Instance-shrinking rewrite rules with certificate lifting.
//!
//! Each rule mirrors a structural property that a smallest graph without k
//! disjoint cycles cannot avoid, recast as a rewrite on arbitrary instances
//! with bookkeeping on (k, i):
//!
//! - R1: delete an isolated vertex, i -= 1.
//! - F3: delete the leaf set X of a vertex v when |X| >= 3, or |X| = 2 and
//!   d(v) = 2k-1; i -= |X| - 1 - [d(v) = 2k]. Fires only for d(v) <= 2k,
//!   which is what the accompanying arithmetic needs.
//! - R3: delete an edge with both ends in L ∪ V^{>=2k+1}; (k, i) unchanged.
//! - R4: contract an edge xy where x is low, d(x) >= 2, and xy lies in no
//!   triangle; i -= 1.
//! - R5: delete the union X of a packing T of good triangles when fewer
//!   than two outside vertices have attachment >= 2|T| + 1; k -= |T|,
//!   i -= |T|, applied only when k - |T| >= 2.
//!
//! Rules apply in the fixed order R1, F3, R3, R4, R5, lowest-id element
//! first, and every step strictly decreases σ = (k, i, |G| + ‖G‖)
//! lexicographically. A step that would push i below -3k is refused and the
//! state reported as stuck.
//!
//! Lifting: R1/F3/R3/R5 preserve any packing of the reduced graph (R5 adds
//! its deleted triangles back); a cycle through a contracted vertex expands
//! to x, to y, or to the path x-y. R3, R4, and R5 do not reflect
//! non-existence, so a NotExist answer on the reduced instance is re-proved
//! on the original graph unless only R1/F3 fired.

use crate::augment;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMap, VertexSet};
use crate::packing::{self, CyclePacking, SearchLimits, SearchOutcome, TriangleFilter};
use std::fmt;

/// Identifiers of the rewrite rules, in application order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleId {
    R1Isolated,
    F3Leaves,
    R3SpecialEdge,
    R4Contract,
    R5Triangles,
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleId::R1Isolated => "R1_ISOLATED",
            RuleId::F3Leaves => "F3_LEAVES",
            RuleId::R3SpecialEdge => "R3_SPECIAL_EDGE",
            RuleId::R4Contract => "R4_CONTRACT",
            RuleId::R5Triangles => "R5_TRIANGLES",
        })
    }
}

/// Rule parameters, in the vertex coordinates of the graph the rule fired on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleParams {
    Isolated { v: usize },
    Leaves { v: usize, leaves: Vec<usize> },
    EdgeDeleted { u: usize, v: usize },
    Contracted { x: usize, y: usize },
    TrianglesDeleted { triangles: Vec<[usize; 3]> },
}

/// One applied rule with enough data to replay it forward and to lift
/// certificates backward.
#[derive(Clone, Debug)]
pub struct ReductionRecord {
    pub rule: RuleId,
    pub params: RuleParams,
    pub map: VertexMap,
    pub dk: i64,
    pub di: i64,
}

impl ReductionRecord {
    /// Formats the rule id and parameters (state suffix added by callers).
    pub fn describe(&self) -> String {
        match &self.params {
            RuleParams::Isolated { v } => format!("{} v={v}", self.rule),
            RuleParams::Leaves { v, leaves } => {
                let ls: Vec<String> = leaves.iter().map(|l| l.to_string()).collect();
                format!("{} v={v} leaves=[{}]", self.rule, ls.join(","))
            }
            RuleParams::EdgeDeleted { u, v } => format!("{} e=({u},{v})", self.rule),
            RuleParams::Contracted { x, y } => format!("{} e=({x},{y})", self.rule),
            RuleParams::TrianglesDeleted { triangles } => {
                let ts: Vec<String> = triangles
                    .iter()
                    .map(|t| format!("({},{},{})", t[0], t[1], t[2]))
                    .collect();
                format!("{} T=[{}]", self.rule, ts.join(","))
            }
        }
    }
}

/// Ordered reduction history rooted at the original graph.
#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub original: Graph,
    pub records: Vec<ReductionRecord>,
}

impl ReductionTrace {
    pub fn new(original: Graph) -> Self {
        ReductionTrace {
            original,
            records: Vec::new(),
        }
    }

    /// Replays the records forward, returning every intermediate graph:
    /// `result[j]` is the graph before record j; the last entry is final.
    pub fn replay(&self) -> Vec<Graph> {
        let mut graphs = vec![self.original.clone()];
        for rec in &self.records {
            let (next, map) = apply_params(graphs.last().expect("non-empty"), &rec.params);
            debug_assert_eq!(map, rec.map, "replay must reproduce the recorded surgery");
            graphs.push(next);
        }
        graphs
    }
}

fn apply_params(g: &Graph, params: &RuleParams) -> (Graph, VertexMap) {
    match params {
        RuleParams::Isolated { v } => g.delete_vertices(&VertexSet::from_iter(g.n(), [*v])),
        RuleParams::Leaves { leaves, .. } => {
            g.delete_vertices(&VertexSet::from_iter(g.n(), leaves.iter().copied()))
        }
        RuleParams::EdgeDeleted { u, v } => (
            g.delete_edge(*u, *v).expect("recorded edge exists"),
            VertexMap::identity(g.n()),
        ),
        RuleParams::Contracted { x, y } => {
            let (h, _, map) = g.contract_edge(*x, *y).expect("recorded edge exists");
            (h, map)
        }
        RuleParams::TrianglesDeleted { triangles } => {
            let x = VertexSet::from_iter(g.n(), triangles.iter().flatten().copied());
            g.delete_vertices(&x)
        }
    }
}

/// Reduction state: current graph plus the (k, i) bookkeeping and history.
#[derive(Clone, Debug)]
pub struct ReductionState {
    pub graph: Graph,
    pub k: usize,
    pub i: i64,
    pub trace: ReductionTrace,
}

impl ReductionState {
    pub fn new(graph: Graph, k: usize, i: i64) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidK(k));
        }
        if i > k as i64 {
            return Err(Error::InvalidArgument(format!("i = {i} exceeds k = {k}")));
        }
        let trace = ReductionTrace::new(graph.clone());
        Ok(ReductionState { graph, k, i, trace })
    }

    /// σ = (k, i, |G| + ‖G‖); every applied rule strictly decreases it.
    pub fn sigma(&self) -> (usize, i64, usize) {
        (self.k, self.i, self.graph.n() + self.graph.edge_count())
    }
}

/// Result of attempting one reduction step.
#[derive(Debug)]
pub enum StepOutcome {
    Applied(ReductionState),
    NoRuleApplies(ReductionState),
    /// The first applicable rule would push i below -3k; hypothesis can
    /// never hold again, so the pipeline stops here.
    Stuck { state: ReductionState, rule: RuleId },
}

fn fire(mut state: ReductionState, rule: RuleId, params: RuleParams, dk: i64, di: i64) -> StepOutcome {
    let new_k = (state.k as i64 + dk) as usize;
    let new_i = state.i + di;
    if new_i < -3 * new_k as i64 {
        return StepOutcome::Stuck { state, rule };
    }
    let (graph, map) = apply_params(&state.graph, &params);
    state.trace.records.push(ReductionRecord {
        rule,
        params,
        map,
        dk,
        di,
    });
    StepOutcome::Applied(ReductionState {
        graph,
        k: new_k,
        i: new_i,
        trace: state.trace,
    })
}

/// Applies the first applicable rule in the order R1, F3, R3, R4, R5
/// (lowest-id element first within a rule).
pub fn reduce_step(state: ReductionState) -> StepOutcome {
    let g = &state.graph;
    let k = state.k;
    let n = g.n();
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();

    // R1: isolated vertex.
    if let Some(v) = (0..n).find(|&v| deg[v] == 0) {
        return fire(state, RuleId::R1Isolated, RuleParams::Isolated { v }, 0, -1);
    }

    // F3: leaf cluster on a vertex of degree 2k-1 or 2k.
    for v in 0..n {
        if deg[v] > 2 * k {
            continue;
        }
        let leaves: Vec<usize> = g.neighbors(v).filter(|&u| deg[u] == 1).collect();
        let fires = leaves.len() >= 3 || (leaves.len() == 2 && deg[v] == 2 * k - 1);
        if fires {
            let di = -((leaves.len() as i64 - 1) - i64::from(deg[v] == 2 * k));
            return fire(state, RuleId::F3Leaves, RuleParams::Leaves { v, leaves }, 0, di);
        }
    }

    // R3: edge with both ends low or of degree >= 2k+1.
    let special = |v: usize| deg[v] + 2 <= 2 * k || deg[v] >= 2 * k + 1;
    for (u, v) in g.edges() {
        if special(u) && special(v) {
            return fire(state, RuleId::R3SpecialEdge, RuleParams::EdgeDeleted { u, v }, 0, 0);
        }
    }

    // R4: low vertex with an edge in no triangle.
    for x in 0..n {
        if deg[x] + 2 > 2 * k || deg[x] < 2 {
            continue;
        }
        for y in g.neighbors(x) {
            if g.common_neighbor_count(x, y) == 0 {
                return fire(state, RuleId::R4Contract, RuleParams::Contracted { x, y }, 0, -1);
            }
        }
    }

    // R5: a good-triangle packing with fewer than two attachment-heavy
    // outside vertices. Candidates: single good triangles in lexicographic
    // order, then the greedily grown packing truncated to k-2 triangles.
    if k >= 3 {
        let singles = packing::enumerate_triangles(g, &TriangleFilter::Good { k })
            .expect("k >= 3 here");
        for t in &singles {
            let x = VertexSet::from_iter(n, t.iter().copied());
            let heavy = augment::attachment_heavy_vertices(g, &x, 1).expect("|X| = 3");
            if heavy.len() < 2 {
                return fire(
                    state,
                    RuleId::R5Triangles,
                    RuleParams::TrianglesDeleted { triangles: vec![*t] },
                    -1,
                    -1,
                );
            }
        }
        if k >= 4 {
            let grown = augment::grow_good_packing(g, k).expect("k >= 3 here");
            let mut tris = grown.triangles;
            tris.truncate(k - 2);
            if tris.len() >= 2 {
                let t = tris.len();
                let x = VertexSet::from_iter(n, tris.iter().flatten().copied());
                let heavy = augment::attachment_heavy_vertices(g, &x, t).expect("|X| = 3t");
                if heavy.len() < 2 {
                    return fire(
                        state,
                        RuleId::R5Triangles,
                        RuleParams::TrianglesDeleted { triangles: tris },
                        -(t as i64),
                        -(t as i64),
                    );
                }
            }
        }
    }

    StepOutcome::NoRuleApplies(state)
}

/// Why `reduce_fully` stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    FixedPoint,
    Stuck(RuleId),
    MaxSteps,
}

/// Iterates `reduce_step` to a fixed point (or `max_steps`), asserting that
/// σ strictly decreases at every step.
pub fn reduce_fully(mut state: ReductionState, max_steps: usize) -> (ReductionState, StopReason) {
    for _ in 0..max_steps {
        let sigma = state.sigma();
        match reduce_step(state) {
            StepOutcome::Applied(next) => {
                assert!(next.sigma() < sigma, "σ must strictly decrease");
                state = next;
            }
            StepOutcome::NoRuleApplies(s) => return (s, StopReason::FixedPoint),
            StepOutcome::Stuck { state: s, rule } => return (s, StopReason::Stuck(rule)),
        }
    }
    (state, StopReason::MaxSteps)
}

fn renumber_back(map: &VertexMap, cycles: Vec<Vec<usize>>) -> Result<Vec<Vec<usize>>> {
    cycles
        .into_iter()
        .map(|c| {
            c.into_iter()
                .map(|v| {
                    map.preimage_unique(v).ok_or_else(|| {
                        Error::InvalidPacking(format!("vertex {v} has no unique preimage"))
                    })
                })
                .collect()
        })
        .collect()
}

/// Lifts cycles over one contraction record: cycles avoiding the merged
/// vertex renumber back; a cycle through it expands to x, to y, or to the
/// path between them, whichever the pre-contraction adjacency supports.
fn lift_contraction(
    g_pre: &Graph,
    map: &VertexMap,
    x: usize,
    y: usize,
    cycles: Vec<Vec<usize>>,
) -> Result<Vec<Vec<usize>>> {
    let merged = map.to_new(x).expect("merged vertex survives");
    let mut out = Vec::with_capacity(cycles.len());
    for cycle in cycles {
        let pos = cycle.iter().position(|&v| v == merged);
        let pos = match pos {
            None => {
                out.push(renumber_back(map, vec![cycle])?.pop().expect("one cycle"));
                continue;
            }
            Some(p) => p,
        };
        let len = cycle.len();
        let back = |v: usize| -> Result<usize> {
            map.preimage_unique(v)
                .ok_or_else(|| Error::InvalidPacking(format!("vertex {v} has no unique preimage")))
        };
        let succ = back(cycle[(pos + 1) % len])?;
        let pred = back(cycle[(pos + len - 1) % len])?;
        // Splice: first element attaches to pred, last to succ.
        let splice: Vec<usize> = if g_pre.has_edge(x, pred) && g_pre.has_edge(x, succ) {
            vec![x]
        } else if g_pre.has_edge(y, pred) && g_pre.has_edge(y, succ) {
            vec![y]
        } else if g_pre.has_edge(x, pred) && g_pre.has_edge(y, succ) {
            vec![x, y]
        } else if g_pre.has_edge(y, pred) && g_pre.has_edge(x, succ) {
            vec![y, x]
        } else {
            return Err(Error::InvalidPacking(
                "contracted cycle has no consistent expansion".into(),
            ));
        };
        let mut lifted = splice;
        for off in 1..len {
            lifted.push(back(cycle[(pos + off) % len])?);
        }
        out.push(lifted);
    }
    Ok(out)
}

/// Translates a packing of the trace's final graph into a verified packing
/// of the original, re-adding every triangle deleted by R5 along the way.
pub fn lift_packing(trace: &ReductionTrace, p: &CyclePacking) -> Result<CyclePacking> {
    let graphs = trace.replay();
    let final_g = graphs.last().expect("replay includes the original");
    if !p.verify(final_g) {
        return Err(Error::InvalidPacking(
            "packing does not verify in the reduced graph".into(),
        ));
    }
    let mut cycles = p.cycles.clone();
    let mut r5_triangles = 0usize;
    for (rec, g_pre) in trace.records.iter().zip(graphs.iter()).rev() {
        cycles = match &rec.params {
            RuleParams::Isolated { .. } | RuleParams::Leaves { .. } => {
                renumber_back(&rec.map, cycles)?
            }
            RuleParams::EdgeDeleted { .. } => cycles,
            RuleParams::Contracted { x, y } => lift_contraction(g_pre, &rec.map, *x, *y, cycles)?,
            RuleParams::TrianglesDeleted { triangles } => {
                let mut lifted = renumber_back(&rec.map, cycles)?;
                for t in triangles {
                    lifted.push(t.to_vec());
                    r5_triangles += 1;
                }
                lifted
            }
        };
    }
    let mut out = CyclePacking { cycles };
    out.normalize();
    if !out.verify(&trace.original) {
        return Err(Error::InvalidPacking(
            "lifted packing does not verify in the original graph".into(),
        ));
    }
    assert!(out.len() >= p.len() + r5_triangles);
    Ok(out)
}

fn reflects_nonexistence(rule: RuleId) -> bool {
    // Deleting cycle-free vertices never destroys a packing; edge deletion,
    // contraction, and triangle-set deletion can.
    matches!(rule, RuleId::R1Isolated | RuleId::F3Leaves)
}

/// Pipeline: reduce to a fixed point, search the reduced instance
/// (heuristic first, exact fallback), lift. A NotExist on the reduced
/// instance certifies the original only when every applied rule reflects
/// non-existence; otherwise the exact search reruns on the original graph.
pub fn solve_with_reduction(g: &Graph, k: usize, limits: &SearchLimits) -> Result<SearchOutcome> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let state = ReductionState::new(g.clone(), k, k as i64)?;
    let max_steps = g.n() + g.edge_count() + k + 8;
    let (fin, _) = reduce_fully(state, max_steps);
    let needed = fin.k;

    let heuristic = packing::heuristic_cycle_packing(&fin.graph, fin.k, needed)?;
    if heuristic.len() >= needed {
        return Ok(SearchOutcome::Found(lift_packing(&fin.trace, &heuristic)?));
    }

    match packing::find_disjoint_cycles(&fin.graph, needed, limits) {
        SearchOutcome::Found(p) => Ok(SearchOutcome::Found(lift_packing(&fin.trace, &p)?)),
        SearchOutcome::Exhausted => Ok(SearchOutcome::Exhausted),
        SearchOutcome::NotExist => {
            if fin.trace.records.iter().all(|r| reflects_nonexistence(r.rule)) {
                Ok(SearchOutcome::NotExist)
            } else {
                Ok(packing::find_disjoint_cycles(g, k, limits))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{self, Family, FamilySpec};
    use crate::graph::{complete, complete_bipartite, cycle_graph, path_graph};

    fn state(g: Graph, k: usize, i: i64) -> ReductionState {
        ReductionState::new(g, k, i).unwrap()
    }

    #[test]
    fn r1_fires_on_isolated() {
        let g = complete(4).disjoint_union(&Graph::empty(1));
        match reduce_step(state(g, 2, 2)) {
            StepOutcome::Applied(s) => {
                assert_eq!(s.graph, complete(4));
                assert_eq!((s.k, s.i), (2, 1));
                assert_eq!(s.trace.records[0].rule, RuleId::R1Isolated);
            }
            other => panic!("expected Applied, got {other:?}"),
        }
    }

    #[test]
    fn r3_fires_on_c5() {
        // All five vertices are low for k = 2, so the lex-first edge goes.
        match reduce_step(state(cycle_graph(5), 2, 2)) {
            StepOutcome::Applied(s) => {
                let rec = &s.trace.records[0];
                assert_eq!(rec.rule, RuleId::R3SpecialEdge);
                assert_eq!(rec.params, RuleParams::EdgeDeleted { u: 0, v: 1 });
                assert_eq!((s.k, s.i), (2, 2));
            }
            other => panic!("expected Applied, got {other:?}"),
        }
    }

    #[test]
    fn r3_fires_on_p5_too() {
        match reduce_step(state(path_graph(5), 2, 2)) {
            StepOutcome::Applied(s) => {
                assert_eq!(s.trace.records[0].rule, RuleId::R3SpecialEdge);
            }
            other => panic!("expected Applied, got {other:?}"),
        }
    }

    #[test]
    fn g1_is_a_fixed_point() {
        // x carries exactly 2 leaves but d(x) = 2k, not 2k-1: F3 must not
        // fire, and no other rule applies either.
        let g1 = extremal::generate(&FamilySpec::with_k(Family::G1, 2)).unwrap();
        match reduce_step(state(g1, 2, 2)) {
            StepOutcome::NoRuleApplies(_) => {}
            other => panic!("expected NoRuleApplies, got {other:?}"),
        }
    }

    #[test]
    fn f3_fires_on_two_leaves_at_degree_2k_minus_1() {
        // Triangle {0,1,2}, v = 3 adjacent to 0, leaves 4 and 5 on v:
        // d(v) = 3 = 2k - 1 for k = 2.
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        match reduce_step(state(g, 2, 2)) {
            StepOutcome::Applied(s) => {
                let rec = &s.trace.records[0];
                assert_eq!(rec.rule, RuleId::F3Leaves);
                assert_eq!(
                    rec.params,
                    RuleParams::Leaves { v: 3, leaves: vec![4, 5] }
                );
                assert_eq!(s.i, 1); // i -= |X| - 1 - [d(v) = 2k] = 1
            }
            other => panic!("expected Applied, got {other:?}"),
        }
    }

    #[test]
    fn f3_three_leaves_at_degree_2k() {
        // v = 0 adjacent to one triangle vertex and three leaves: d = 4 = 2k.
        let g = Graph::from_edges(
            7,
            &[(1, 2), (2, 3), (1, 3), (0, 1), (0, 4), (0, 5), (0, 6)],
        )
        .unwrap();
        match reduce_step(state(g, 2, 2)) {
            StepOutcome::Applied(s) => {
                let rec = &s.trace.records[0];
                assert_eq!(rec.rule, RuleId::F3Leaves);
                assert_eq!(
                    rec.params,
                    RuleParams::Leaves { v: 0, leaves: vec![4, 5, 6] }
                );
                assert_eq!(s.i, 1); // i -= 3 - 1 - 1 = 1
            }
            other => panic!("expected Applied, got {other:?}"),
        }
    }

    #[test]
    fn f3_skips_high_degree_centers() {
        // Hub of degree 2k+2 with three leaves: the leaf edges are special
        // (leaf in L, hub in V^{>=2k+1}), so R3 handles them instead.
        let mut edges = vec![(0, 7), (0, 8), (0, 9)];
        for v in 1..=6 {
            edges.push((0, v));
        }
        edges.push((1, 2));
        let g = Graph::from_edges(10, &edges).unwrap();
        match reduce_step(state(g, 2, 2)) {
            StepOutcome::Applied(s) => {
                assert_eq!(s.trace.records[0].rule, RuleId::R3SpecialEdge);
            }
            other => panic!("expected Applied, got {other:?}"),
        }
    }

    /// Split-expansion witness: x = 0 is low, xy = (0,1) lies in no
    /// triangle, and the contracted cycle's neighbors attach to x and y on
    /// opposite sides.
    fn split_instance() -> Graph {
        Graph::from_edges(
            5,
            &[(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 4), (1, 4)],
        )
        .unwrap()
    }

    #[test]
    fn r4_contracts_and_split_lift() {
        let g = split_instance();
        let (fin, reason) = reduce_fully(state(g.clone(), 2, 2), 100);
        assert_eq!(reason, StopReason::FixedPoint);
        assert_eq!(fin.trace.records.len(), 1);
        let rec = &fin.trace.records[0];
        assert_eq!(rec.rule, RuleId::R4Contract);
        assert_eq!(rec.params, RuleParams::Contracted { x: 0, y: 1 });
        assert_eq!(fin.graph, complete(4));

        // Triangle through the merged vertex expands to a 4-cycle using the
        // inserted edge xy.
        let p = CyclePacking { cycles: vec![vec![0, 1, 2]] };
        let lifted = lift_packing(&fin.trace, &p).unwrap();
        assert_eq!(lifted.cycles, vec![vec![0, 1, 3, 2]]);
        assert!(lifted.verify(&g));
    }

    /// Single-vertex expansion witness for both the x and the y side.
    /// x = 0 (low, k = 3), y = 1; a = 2, b = 3 form a triangle with x;
    /// u-pads {4..7} keep a, b at degree 6; p-pads {8..11} give y degree 5.
    fn one_sided_instance() -> Graph {
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (2, 3)];
        for u in 4..8 {
            edges.push((2, u));
            edges.push((3, u));
        }
        for (a, b) in [(4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)] {
            edges.push((a, b));
        }
        for p in 8..12 {
            edges.push((1, p));
        }
        for (a, b) in [(8, 9), (8, 10), (8, 11), (9, 10), (9, 11), (10, 11)] {
            edges.push((a, b));
        }
        for (u, p) in [(4, 8), (5, 9), (6, 10), (7, 11)] {
            edges.push((u, p));
        }
        Graph::from_edges(12, &edges).unwrap()
    }

    #[test]
    fn r4_lift_single_vertex_expansions() {
        let g = one_sided_instance();
        let (fin, reason) = reduce_fully(state(g.clone(), 3, 3), 100);
        assert_eq!(reason, StopReason::FixedPoint);
        assert_eq!(fin.trace.records.len(), 1);
        assert_eq!(
            fin.trace.records[0].params,
            RuleParams::Contracted { x: 0, y: 1 }
        );

        // (merged, a, b): both neighbors see x, so the cycle lifts to x.
        let p = CyclePacking { cycles: vec![vec![0, 1, 2]] };
        let lifted = lift_packing(&fin.trace, &p).unwrap();
        assert_eq!(lifted.cycles, vec![vec![0, 2, 3]]);
        assert!(lifted.verify(&g));

        // (merged, p1, p2): both neighbors see only y.
        let p = CyclePacking { cycles: vec![vec![0, 7, 8]] };
        let lifted = lift_packing(&fin.trace, &p).unwrap();
        assert_eq!(lifted.cycles, vec![vec![1, 8, 9]]);
        assert!(lifted.verify(&g));
    }

    /// Isolated-ish good triangle for R5: {0,1,2} with 0 low, and a K_6 the
    /// triangle touches so lightly that no outside vertex is heavy.
    fn r5_instance() -> Graph {
        let mut edges = vec![(0, 1), (0, 2), (1, 2)];
        for v in [3, 4, 5] {
            edges.push((1, v));
        }
        for v in [6, 7, 8] {
            edges.push((2, v));
        }
        for a in 3..9 {
            for b in (a + 1)..9 {
                edges.push((a, b));
            }
        }
        Graph::from_edges(9, &edges).unwrap()
    }

    #[test]
    fn r5_fires_and_solve_lifts_its_triangles() {
        let g = r5_instance();
        match reduce_step(state(g.clone(), 3, 3)) {
            StepOutcome::Applied(s) => {
                let rec = &s.trace.records[0];
                assert_eq!(rec.rule, RuleId::R5Triangles);
                assert_eq!(
                    rec.params,
                    RuleParams::TrianglesDeleted { triangles: vec![[0, 1, 2]] }
                );
                assert_eq!((s.k, s.i), (2, 2));
                assert_eq!(s.graph, complete(6));
            }
            other => panic!("expected Applied, got {other:?}"),
        }

        // End to end: 3 disjoint cycles, one of them the lifted triangle.
        match solve_with_reduction(&g, 3, &SearchLimits::default()).unwrap() {
            SearchOutcome::Found(p) => {
                assert_eq!(p.len(), 3);
                assert!(p.verify(&g));
                assert!(p.cycles.contains(&vec![0, 1, 2]));
            }
            other => panic!("expected Found, got {other:?}"),
        }
    }

    #[test]
    fn sigma_descends_and_terminates() {
        // K_4 plus an isolated vertex plus a pendant path.
        let g = complete(4)
            .disjoint_union(&Graph::empty(1))
            .disjoint_union(&path_graph(3));
        let bound = g.n() + g.edge_count() + 2;
        let (fin, reason) = reduce_fully(state(g, 2, 2), bound);
        assert_eq!(reason, StopReason::FixedPoint);
        assert!(fin.trace.records.len() <= bound);
        assert_eq!(fin.graph, complete(4));
    }

    #[test]
    fn solve_examples() {
        let limits = SearchLimits::default();
        let g1 = extremal::generate(&FamilySpec::with_k(Family::G1, 2)).unwrap();
        assert_eq!(solve_with_reduction(&g1, 2, &limits).unwrap(), SearchOutcome::NotExist);

        let k93 = complete_bipartite(9, 3);
        assert_eq!(solve_with_reduction(&k93, 2, &limits).unwrap(), SearchOutcome::NotExist);

        // K_7 with three pendant leaves: leaves go away during reduction,
        // two triangles remain and lift.
        let mut edges = Vec::new();
        for a in 0..7 {
            for b in (a + 1)..7 {
                edges.push((a, b));
            }
        }
        edges.extend([(0, 7), (1, 8), (2, 9)]);
        let g = Graph::from_edges(10, &edges).unwrap();
        match solve_with_reduction(&g, 2, &limits).unwrap() {
            SearchOutcome::Found(p) => {
                assert_eq!(p.len(), 2);
                assert!(p.verify(&g));
            }
            other => panic!("expected Found, got {other:?}"),
        }
    }

    #[test]
    fn stuck_when_i_would_sink_below_floor() {
        // A lone isolated vertex with i already at the floor -3k.
        let g = Graph::empty(1);
        match reduce_step(ReductionState::new(g, 2, -6).unwrap()) {
            StepOutcome::Stuck { rule, .. } => assert_eq!(rule, RuleId::R1Isolated),
            other => panic!("expected Stuck, got {other:?}"),
        }
    }
}
