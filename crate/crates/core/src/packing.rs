//! Exact oracles for c(G) and t(G): certified branch-and-bound search for k
//! vertex-disjoint cycles and maximum disjoint triangle packings.
//!
//! The cycle search branches on a minimum-degree vertex v: either v is
//! unused (delete it) or v lies on some cycle, in which case the chordless
//! cycles through v are enumerated shortest first. Restricting to chordless
//! cycles is complete: any cycle with a chord can be replaced by a shorter
//! cycle on a subset of its vertices, preserving disjointness.
//!
//! Everything is deterministic: ties break on lowest vertex id, cycles are
//! reported with their minimum vertex first in the lexicographically smaller
//! orientation, and a fixed work budget separates `NotExist` (complete
//! search) from `Exhausted`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use serde::Serialize;

/// Limits for the exact searches.
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    /// Largest n for which `max_cycle_packing` / `max_triangle_packing`
    /// agree to run.
    pub exact_limit: usize,
    /// Work-unit budget per search (branch nodes and path extensions).
    pub node_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            exact_limit: 40,
            node_budget: 10_000_000,
        }
    }
}

/// Certificate: vertex-disjoint cycles, each a closed vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclePacking {
    pub cycles: Vec<Vec<usize>>,
}

impl CyclePacking {
    pub fn empty() -> Self {
        CyclePacking { cycles: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Canonical form: each cycle rotated so its minimum vertex comes first,
    /// oriented so the second vertex is the smaller of the two neighbors,
    /// and cycles sorted by first vertex.
    pub fn normalize(&mut self) {
        for cycle in &mut self.cycles {
            let len = cycle.len();
            let min_pos = (0..len).min_by_key(|&i| cycle[i]).expect("cycle non-empty");
            let next = cycle[(min_pos + 1) % len];
            let prev = cycle[(min_pos + len - 1) % len];
            let mut canon = Vec::with_capacity(len);
            if next <= prev {
                for i in 0..len {
                    canon.push(cycle[(min_pos + i) % len]);
                }
            } else {
                for i in 0..len {
                    canon.push(cycle[(min_pos + len - i) % len]);
                }
            }
            *cycle = canon;
        }
        self.cycles.sort_by_key(|c| c[0]);
    }

    pub fn verify(&self, g: &Graph) -> bool {
        verify_cycle_packing(g, self)
    }
}

/// Checks both certificate invariants in time linear in the certificate:
/// every sequence induces a cycle and the cycles are pairwise disjoint.
pub fn verify_cycle_packing(g: &Graph, p: &CyclePacking) -> bool {
    let mut used = VertexSet::empty(g.n());
    for cycle in &p.cycles {
        if cycle.len() < 3 {
            return false;
        }
        for &v in cycle {
            if v >= g.n() || used.contains(v) {
                return false;
            }
            used.insert(v);
        }
        for i in 0..cycle.len() {
            if !g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]) {
                return false;
            }
        }
    }
    true
}

/// Certificate: pairwise disjoint triangles together with their vertex union.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrianglePacking {
    pub triangles: Vec<[usize; 3]>,
    pub union: VertexSet,
}

impl TrianglePacking {
    pub fn empty(n: usize) -> Self {
        TrianglePacking {
            triangles: Vec::new(),
            union: VertexSet::empty(n),
        }
    }

    /// Validates and canonicalizes (triples sorted internally, list sorted).
    pub fn new(g: &Graph, triangles: Vec<[usize; 3]>) -> Result<Self> {
        let mut triangles: Vec<[usize; 3]> = triangles
            .into_iter()
            .map(|mut t| {
                t.sort_unstable();
                t
            })
            .collect();
        triangles.sort_unstable();
        let mut union = VertexSet::empty(g.n());
        for t in &triangles {
            if t[0] == t[1] || t[1] == t[2] {
                return Err(Error::InvalidPacking(format!("repeated vertex in {t:?}")));
            }
            for &v in t {
                if v >= g.n() {
                    return Err(Error::InvalidPacking(format!("vertex {v} out of range")));
                }
                if union.contains(v) {
                    return Err(Error::InvalidPacking(format!("vertex {v} used twice")));
                }
                union.insert(v);
            }
            if !(g.has_edge(t[0], t[1]) && g.has_edge(t[0], t[2]) && g.has_edge(t[1], t[2])) {
                return Err(Error::InvalidPacking(format!("{t:?} does not induce a triangle")));
            }
        }
        Ok(TrianglePacking { triangles, union })
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn verify(&self, g: &Graph) -> bool {
        match TrianglePacking::new(g, self.triangles.clone()) {
            Ok(p) => p.union == self.union,
            Err(_) => false,
        }
    }

    pub fn as_cycles(&self) -> Vec<Vec<usize>> {
        self.triangles.iter().map(|t| t.to_vec()).collect()
    }
}

/// Result of a search for k disjoint cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(CyclePacking),
    /// Complete search proved no packing of the requested size exists.
    NotExist,
    /// The work budget ran out before the search completed.
    Exhausted,
}

/// True iff `N(x) ∩ mask` is exactly `{b1}` (or `{b1, b2}`).
fn row_masked_eq_bits(g: &Graph, x: usize, mask: &VertexSet, b1: usize, b2: Option<usize>) -> bool {
    for (i, (r, m)) in g.row(x).iter().zip(mask.words().iter()).enumerate() {
        let mut e = 0u64;
        if b1 / 64 == i {
            e |= 1 << (b1 % 64);
        }
        if let Some(b2) = b2 {
            if b2 / 64 == i {
                e |= 1 << (b2 % 64);
            }
        }
        if r & m != e {
            return false;
        }
    }
    true
}

/// 2-core of the subgraph induced on `avail`: iteratively drops vertices of
/// induced degree <= 1 (lowest id first). Cycles only live in the core.
pub(crate) fn induced_two_core(g: &Graph, avail: &VertexSet) -> VertexSet {
    let mut core = avail.clone();
    loop {
        let victim = core.iter().find(|&v| g.degree_in(v, &core) <= 1);
        match victim {
            Some(v) => core.remove(v),
            None => return core,
        }
    }
}

struct Searcher<'g> {
    g: &'g Graph,
    budget: u64,
    work: u64,
    exhausted: bool,
    chosen: Vec<Vec<usize>>,
}

impl<'g> Searcher<'g> {
    fn charge(&mut self) -> bool {
        self.work += 1;
        if self.work > self.budget {
            self.exhausted = true;
        }
        !self.exhausted
    }

    fn search(&mut self, avail: &VertexSet, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if self.exhausted {
            return false;
        }
        let core = induced_two_core(self.g, avail);
        if core.len() < 3 * need {
            return false;
        }
        if !self.charge() {
            return false;
        }
        let g = self.g;
        let v = core
            .iter()
            .min_by_key(|&v| (g.degree_in(v, &core), v))
            .expect("core non-empty");

        // Cycles through v, shortest first. A cycle longer than
        // core.len() - 3(need-1) leaves too few vertices for the rest.
        let longest = core.len() - 3 * (need - 1);
        let mut path = Vec::with_capacity(longest);
        let mut path_set = VertexSet::empty(g.n());
        for target in 3..=longest {
            path.clear();
            path.push(v);
            path_set.clear();
            path_set.insert(v);
            if self.dfs_cycle(&core, need, target, &mut path, &mut path_set) {
                return true;
            }
            if self.exhausted {
                return false;
            }
        }

        // v on no cycle.
        let mut rest = core;
        rest.remove(v);
        self.search(&rest, need)
    }

    fn dfs_cycle(
        &mut self,
        core: &VertexSet,
        need: usize,
        target: usize,
        path: &mut Vec<usize>,
        path_set: &mut VertexSet,
    ) -> bool {
        if !self.charge() {
            return false;
        }
        let g = self.g;
        let pos = path.len();
        let last = *path.last().expect("path starts at v");
        let first = path[0];
        let closing = pos == target - 1;
        for x in g.neighbors_in(last, core) {
            if path_set.contains(x) {
                continue;
            }
            if closing {
                // Final vertex: adjacent to both ends, chordless otherwise,
                // and above path[1] to skip the mirrored orientation.
                if x <= path[1] {
                    continue;
                }
                if !row_masked_eq_bits(g, x, path_set, last, Some(first)) {
                    continue;
                }
                let mut cycle = path.clone();
                cycle.push(x);
                let mut rest = core.clone();
                for &w in &cycle {
                    rest.remove(w);
                }
                self.chosen.push(cycle);
                if self.search(&rest, need - 1) {
                    return true;
                }
                self.chosen.pop();
                if self.exhausted {
                    return false;
                }
            } else {
                // Interior vertex: adjacent only to its predecessor among
                // the path so far.
                if !row_masked_eq_bits(g, x, path_set, last, None) {
                    continue;
                }
                path.push(x);
                path_set.insert(x);
                let hit = self.dfs_cycle(core, need, target, path, path_set);
                path.pop();
                path_set.remove(x);
                if hit {
                    return true;
                }
                if self.exhausted {
                    return false;
                }
            }
        }
        false
    }
}

/// Searches for exactly `k` vertex-disjoint cycles.
///
/// `NotExist` is returned only after a complete search; running out of
/// budget yields `Exhausted`. Any returned packing is verified before it is
/// handed back. `k = 0` trivially succeeds with the empty packing.
pub fn find_disjoint_cycles(g: &Graph, k: usize, limits: &SearchLimits) -> SearchOutcome {
    if k == 0 {
        return SearchOutcome::Found(CyclePacking::empty());
    }
    let mut s = Searcher {
        g,
        budget: limits.node_budget,
        work: 0,
        exhausted: false,
        chosen: Vec::new(),
    };
    let all = VertexSet::full(g.n());
    if s.search(&all, k) {
        let mut p = CyclePacking { cycles: s.chosen };
        p.normalize();
        assert!(p.verify(g), "search produced an invalid packing");
        assert_eq!(p.len(), k);
        SearchOutcome::Found(p)
    } else if s.exhausted {
        SearchOutcome::Exhausted
    } else {
        SearchOutcome::NotExist
    }
}

/// Exact c(G) by incremental search, for graphs within the exact limit.
pub fn max_cycle_packing(g: &Graph, limits: &SearchLimits) -> Result<usize> {
    if g.n() > limits.exact_limit {
        return Err(Error::ExactLimitExceeded {
            n: g.n(),
            limit: limits.exact_limit,
        });
    }
    let mut best = 0;
    while 3 * (best + 1) <= g.n() {
        match find_disjoint_cycles(g, best + 1, limits) {
            SearchOutcome::Found(_) => best += 1,
            SearchOutcome::NotExist => break,
            SearchOutcome::Exhausted => return Err(Error::BudgetExhausted),
        }
    }
    Ok(best)
}

/// Which triangles a packing may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleFilter {
    All,
    /// Good triangles: at least one vertex of degree <= 2k-2.
    Good { k: usize },
    /// Triangles entirely inside V^{<=2k}.
    LowDeg { k: usize },
}

/// All triangles `(a, b, c)` with `a < b < c` passing the filter, in
/// lexicographic order.
pub(crate) fn enumerate_triangles(g: &Graph, filter: &TriangleFilter) -> Result<Vec<[usize; 3]>> {
    if let TriangleFilter::Good { k } | TriangleFilter::LowDeg { k } = filter {
        if *k < 2 {
            return Err(Error::InvalidK(*k));
        }
    }
    let deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let passes = |t: &[usize; 3]| match filter {
        TriangleFilter::All => true,
        TriangleFilter::Good { k } => t.iter().any(|&v| deg[v] + 2 <= 2 * k),
        TriangleFilter::LowDeg { k } => t.iter().all(|&v| deg[v] <= 2 * k),
    };
    let mut out = Vec::new();
    for a in 0..g.n() {
        let row_a = g.neighbors_set(a);
        for b in row_a.iter() {
            if b <= a {
                continue;
            }
            for c in g.neighbors_in(b, &row_a) {
                if c > b {
                    let t = [a, b, c];
                    if passes(&t) {
                        out.push(t);
                    }
                }
            }
        }
    }
    Ok(out)
}

struct TriSearcher<'a> {
    tris: &'a [[usize; 3]],
    by_vertex: Vec<Vec<usize>>,
    best: Vec<usize>,
    cur: Vec<usize>,
    budget: u64,
    work: u64,
    aborted: bool,
}

impl TriSearcher<'_> {
    fn fits(&self, idx: usize, avail: &VertexSet) -> bool {
        self.tris[idx].iter().all(|&v| avail.contains(v))
    }

    fn bb(&mut self, avail: &VertexSet) {
        self.work += 1;
        if self.work > self.budget {
            self.aborted = true;
            return;
        }
        if self.cur.len() + avail.len() / 3 <= self.best.len() {
            return;
        }
        let pivot = avail
            .iter()
            .find(|&v| self.by_vertex[v].iter().any(|&i| self.fits(i, avail)));
        let pivot = match pivot {
            Some(v) => v,
            None => {
                if self.cur.len() > self.best.len() {
                    self.best = self.cur.clone();
                }
                return;
            }
        };
        let candidates: Vec<usize> = self.by_vertex[pivot]
            .iter()
            .copied()
            .filter(|&i| self.fits(i, avail))
            .collect();
        for idx in candidates {
            let mut rest = avail.clone();
            for &v in &self.tris[idx] {
                rest.remove(v);
            }
            self.cur.push(idx);
            self.bb(&rest);
            self.cur.pop();
            if self.aborted {
                return;
            }
        }
        let mut rest = avail.clone();
        rest.remove(pivot);
        self.bb(&rest);
    }
}

/// Maximum-cardinality disjoint set of triangles passing `filter`, by
/// complete search. Ties resolve to the first packing found in the
/// deterministic branch order.
pub fn max_triangle_packing(
    g: &Graph,
    filter: TriangleFilter,
    limits: &SearchLimits,
) -> Result<TrianglePacking> {
    if g.n() > limits.exact_limit {
        return Err(Error::ExactLimitExceeded {
            n: g.n(),
            limit: limits.exact_limit,
        });
    }
    let tris = enumerate_triangles(g, &filter)?;
    let mut by_vertex = vec![Vec::new(); g.n()];
    for (i, t) in tris.iter().enumerate() {
        for &v in t {
            by_vertex[v].push(i);
        }
    }
    let mut s = TriSearcher {
        tris: &tris,
        by_vertex,
        best: Vec::new(),
        cur: Vec::new(),
        budget: limits.node_budget,
        work: 0,
        aborted: false,
    };
    s.bb(&VertexSet::full(g.n()));
    if s.aborted {
        return Err(Error::BudgetExhausted);
    }
    TrianglePacking::new(g, s.best.iter().map(|&i| tris[i]).collect())
}

/// t(G): the maximum number of disjoint triangles.
pub fn max_triangle_count(g: &Graph, limits: &SearchLimits) -> Result<usize> {
    Ok(max_triangle_packing(g, TriangleFilter::All, limits)?.len())
}

/// Globally shortest chordless cycle inside `avail`, lowest-vertex and then
/// lexicographically first among those of minimal length.
pub(crate) fn shortest_chordless_cycle(g: &Graph, avail: &VertexSet) -> Option<Vec<usize>> {
    let core = induced_two_core(g, avail);
    if core.len() < 3 {
        return None;
    }
    for target in 3..=core.len() {
        for v in core.iter() {
            let mut path = vec![v];
            let mut path_set = VertexSet::empty(g.n());
            path_set.insert(v);
            if let Some(c) = first_cycle_from(g, &core, target, &mut path, &mut path_set) {
                return Some(c);
            }
        }
    }
    None
}

/// Lexicographically first chordless cycle of length exactly `target`
/// extending `path`, with every vertex after `path[0]` above `path[0]`.
fn first_cycle_from(
    g: &Graph,
    core: &VertexSet,
    target: usize,
    path: &mut Vec<usize>,
    path_set: &mut VertexSet,
) -> Option<Vec<usize>> {
    let pos = path.len();
    let last = *path.last().expect("non-empty");
    let first = path[0];
    let closing = pos == target - 1;
    for x in g.neighbors_in(last, core) {
        if x <= first || path_set.contains(x) {
            continue;
        }
        if closing {
            if x <= path[1] {
                continue;
            }
            if row_masked_eq_bits(g, x, path_set, last, Some(first)) {
                let mut cycle = path.clone();
                cycle.push(x);
                return Some(cycle);
            }
        } else {
            if !row_masked_eq_bits(g, x, path_set, last, None) {
                continue;
            }
            path.push(x);
            path_set.insert(x);
            let hit = first_cycle_from(g, core, target, path, path_set);
            path.pop();
            path_set.remove(x);
            if hit.is_some() {
                return hit;
            }
        }
    }
    None
}

/// Greedy heuristic packing: good triangles first (grown by the rotation
/// machinery), then repeated extraction of a shortest chordless cycle.
/// Returns at most `want` cycles; no completeness guarantee.
pub fn heuristic_cycle_packing(g: &Graph, k: usize, want: usize) -> Result<CyclePacking> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut avail = VertexSet::full(g.n());
    let grown = crate::augment::grow_good_packing(g, k)?;
    for t in grown.triangles.iter().take(want) {
        cycles.push(t.to_vec());
        for &v in t {
            avail.remove(v);
        }
    }
    while cycles.len() < want {
        match shortest_chordless_cycle(g, &avail) {
            Some(c) => {
                for &v in &c {
                    avail.remove(v);
                }
                cycles.push(c);
            }
            None => break,
        }
    }
    let mut p = CyclePacking { cycles };
    p.normalize();
    debug_assert!(p.verify(g));
    Ok(p)
}
