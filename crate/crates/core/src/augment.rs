//! Good-triangle augmentation: the auxiliary digraph over a triangle
//! packing, reachability, and the rotation that trades a path of triangles
//! for a packing one larger.
//!
//! For a packing S, the digraph ℋ has an arc C -> D exactly when some
//! vertex v of C is adjacent to all three vertices of D. Given a low vertex
//! x outside S sitting in a triangle xyz with z inside a triangle C of S,
//! a rotation walks a path D = C_1, ..., C_j = C of ℋ: an external vertex w
//! adjacent to all of D replaces the pivot of C_1, each pivot shifts one
//! triangle forward, z leaves C_j for the pivot of C_{j-1}, and xyz joins
//! the packing.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::packing::{self, SearchLimits, TriangleFilter, TrianglePacking};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Directed graph over the triangles of a packing.
#[derive(Clone, Debug)]
pub struct AuxDigraph {
    node_count: usize,
    /// Arcs (C, D), lexicographically sorted.
    arcs: Vec<(usize, usize)>,
    /// Lowest-id vertex v in C with ‖v, D‖ = 3, per arc.
    witness: BTreeMap<(usize, usize), usize>,
    out: Vec<Vec<usize>>,
    rev: Vec<Vec<usize>>,
}

impl AuxDigraph {
    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, c: usize, d: usize) -> bool {
        self.witness.contains_key(&(c, d))
    }

    pub fn witness(&self, c: usize, d: usize) -> Option<usize> {
        self.witness.get(&(c, d)).copied()
    }

    /// Out-neighbors of triangle `c`, ascending.
    pub fn out_neighbors(&self, c: usize) -> &[usize] {
        &self.out[c]
    }
}

/// Builds ℋ for a valid packing: arc (C, D) iff some v in C sees all of D.
pub fn build_aux_digraph(g: &Graph, s: &TrianglePacking) -> Result<AuxDigraph> {
    if !s.verify(g) {
        return Err(Error::InvalidPacking("triangle packing does not verify".into()));
    }
    let t = s.len();
    let mut arcs = Vec::new();
    let mut witness = BTreeMap::new();
    let mut out = vec![Vec::new(); t];
    let mut rev = vec![Vec::new(); t];
    for c in 0..t {
        for d in 0..t {
            if c == d {
                continue;
            }
            let target = &s.triangles[d];
            let w = s.triangles[c]
                .iter()
                .copied()
                .find(|&v| target.iter().all(|&u| g.has_edge(v, u)));
            if let Some(v) = w {
                arcs.push((c, d));
                witness.insert((c, d), v);
                out[c].push(d);
                rev[d].push(c);
            }
        }
    }
    Ok(AuxDigraph {
        node_count: t,
        arcs,
        witness,
        out,
        rev,
    })
}

/// All triangles from which `c` is reachable in ℋ, including `c` itself.
/// Panics if `c` is not a node of `h`.
pub fn reachable_sources(h: &AuxDigraph, c: usize) -> BTreeSet<usize> {
    assert!(c < h.node_count, "triangle id {c} out of range");
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(c);
    queue.push_back(c);
    while let Some(d) = queue.pop_front() {
        for &p in &h.rev[d] {
            if seen.insert(p) {
                queue.push_back(p);
            }
        }
    }
    seen
}

/// Vertices outside X with attachment at least 2t + 1, where X must be the
/// union of a packing of t triangles (so |X| = 3t).
pub fn attachment_heavy_vertices(g: &Graph, x: &VertexSet, t: usize) -> Result<VertexSet> {
    if x.len() != 3 * t {
        return Err(Error::Precondition(format!(
            "|X| = {} but 3t = {}",
            x.len(),
            3 * t
        )));
    }
    let mut heavy = VertexSet::empty(g.n());
    for v in 0..g.n() {
        if !x.contains(v) && g.attachment(v, x) >= 2 * t + 1 {
            heavy.insert(v);
        }
    }
    Ok(heavy)
}

/// A rotation: the path in ℋ, its pivot witnesses, the external vertex w
/// replacing the pivot of the first triangle, and the new triangle (x, y, z)
/// whose z belongs to the last path triangle.
#[derive(Clone, Debug)]
pub struct RotationPlan {
    /// Triangle ids D = C_1, ..., C_j = C (indices into the packing).
    pub path: Vec<usize>,
    /// x_i in C_i with ‖x_i, C_{i+1}‖ = 3, one per consecutive pair.
    pub pivots: Vec<usize>,
    /// w with ‖w, C_1‖ = 3, outside the packing and distinct from x, y.
    pub external: usize,
    /// (x, y, z): a triangle of g with z in the last path triangle.
    pub new_triangle: [usize; 3],
}

fn plan_err(msg: impl Into<String>) -> Error {
    Error::InvalidPlan(msg.into())
}

/// Applies a rotation plan to a packing, producing a packing one larger:
/// C_1' = C_1 - x_1 + w, C_i' = C_i - x_i + x_{i-1}, C_j' = C_j - z + x_{j-1}
/// (for j = 1 simply C_1' = C_1 - z + w), plus the new triangle xyz.
/// Every precondition is checked; violations report the offending triple.
pub fn rotate_augment(g: &Graph, s: &TrianglePacking, plan: &RotationPlan) -> Result<TrianglePacking> {
    if !s.verify(g) {
        return Err(Error::InvalidPacking("input packing does not verify".into()));
    }
    let j = plan.path.len();
    if j == 0 {
        return Err(plan_err("empty path"));
    }
    let mut seen = BTreeSet::new();
    for &c in &plan.path {
        if c >= s.len() {
            return Err(plan_err(format!("path triangle id {c} out of range")));
        }
        if !seen.insert(c) {
            return Err(plan_err(format!("triangle id {c} repeated on the path")));
        }
    }
    if plan.pivots.len() + 1 != j {
        return Err(plan_err(format!(
            "expected {} pivots for a path of {} triangles, got {}",
            j - 1,
            j,
            plan.pivots.len()
        )));
    }
    for (idx, &p) in plan.pivots.iter().enumerate() {
        let from = &s.triangles[plan.path[idx]];
        let to = &s.triangles[plan.path[idx + 1]];
        if !from.contains(&p) {
            return Err(plan_err(format!("pivot {p} not in triangle {from:?}")));
        }
        if !to.iter().all(|&u| g.has_edge(p, u)) {
            return Err(plan_err(format!("pivot {p} does not see all of {to:?}")));
        }
    }

    let [x, y, z] = plan.new_triangle;
    let w = plan.external;
    if !(g.has_edge(x, y) && g.has_edge(x, z) && g.has_edge(y, z)) {
        return Err(plan_err(format!("({x}, {y}, {z}) does not induce a triangle")));
    }
    let last = &s.triangles[*plan.path.last().expect("non-empty path")];
    if !last.contains(&z) {
        return Err(plan_err(format!("z = {z} is not in the last path triangle {last:?}")));
    }
    if s.union.contains(x) || s.union.contains(y) {
        return Err(plan_err(format!("({x}, {y}, {z}) has x or y inside the packing")));
    }
    if s.union.contains(w) {
        return Err(plan_err(format!("external vertex {w} lies inside the packing")));
    }
    if w == x || w == y {
        return Err(plan_err(format!("external vertex {w} collides with the new triangle")));
    }
    let first = &s.triangles[plan.path[0]];
    if !first.iter().all(|&u| g.has_edge(w, u)) {
        return Err(plan_err(format!("external vertex {w} does not see all of {first:?}")));
    }

    let replace = |tri: &[usize; 3], gone: usize, added: usize| -> [usize; 3] {
        let mut out = [0; 3];
        let mut i = 0;
        for &v in tri {
            if v != gone {
                out[i] = v;
                i += 1;
            }
        }
        out[2] = added;
        out
    };

    let mut result: Vec<[usize; 3]> = Vec::with_capacity(s.len() + 1);
    for (idx, tri) in s.triangles.iter().enumerate() {
        if !plan.path.contains(&idx) {
            result.push(*tri);
        }
    }
    if j == 1 {
        result.push(replace(&s.triangles[plan.path[0]], z, w));
    } else {
        result.push(replace(&s.triangles[plan.path[0]], plan.pivots[0], w));
        for i in 1..j - 1 {
            result.push(replace(&s.triangles[plan.path[i]], plan.pivots[i], plan.pivots[i - 1]));
        }
        result.push(replace(&s.triangles[plan.path[j - 1]], z, plan.pivots[j - 2]));
    }
    result.push([x, y, z]);

    let rotated = TrianglePacking::new(g, result)?;
    assert_eq!(rotated.len(), s.len() + 1, "rotation must grow the packing by one");
    Ok(rotated)
}

fn low_set(g: &Graph, k: usize) -> VertexSet {
    let mut low = VertexSet::empty(g.n());
    for v in 0..g.n() {
        if g.degree(v) + 2 <= 2 * k {
            low.insert(v);
        }
    }
    low
}

fn all_good(tris: &[[usize; 3]], low: &VertexSet) -> bool {
    tris.iter().all(|t| t.iter().any(|&v| low.contains(v)))
}

/// Grows a packing of good triangles greedily and then by rotations until
/// no further greedy addition or single rotation applies. The result is
/// maximal but not necessarily maximum; rotations that would leave a
/// triangle without a low vertex are logged and skipped so the output is
/// always all-good.
pub fn grow_good_packing(g: &Graph, k: usize) -> Result<TrianglePacking> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let low = low_set(g, k);
    let good_tris = packing::enumerate_triangles(g, &TriangleFilter::Good { k })?;

    let mut current: Vec<[usize; 3]> = Vec::new();
    let mut used = VertexSet::empty(g.n());
    loop {
        // Greedy phase: lexicographically first disjoint good triangle.
        let mut grew = false;
        for t in &good_tris {
            if t.iter().all(|&v| !used.contains(v)) {
                current.push(*t);
                for &v in t {
                    used.insert(v);
                }
                grew = true;
            }
        }
        if grew {
            continue;
        }
        // Rotation phase.
        match try_rotation(g, &low, &current, &used)? {
            Some(bigger) => {
                current = bigger.triangles.clone();
                used = bigger.union.clone();
            }
            None => break,
        }
    }
    TrianglePacking::new(g, current)
}

/// Exact variant: the true maximum good-triangle packing via complete search.
pub fn grow_good_packing_exact(g: &Graph, k: usize, limits: &SearchLimits) -> Result<TrianglePacking> {
    packing::max_triangle_packing(g, TriangleFilter::Good { k }, limits)
}

/// Looks for one applicable rotation, preferring shorter paths (BFS), then
/// lower external vertices, then lower path sources. Returns the grown
/// packing, or None when no rotation yields an all-good packing.
fn try_rotation(
    g: &Graph,
    low: &VertexSet,
    current: &[[usize; 3]],
    used: &VertexSet,
) -> Result<Option<TrianglePacking>> {
    if current.is_empty() {
        return Ok(None);
    }
    let s = TrianglePacking::new(g, current.to_vec())?;
    let aux = build_aux_digraph(g, &s)?;
    let tri_of_vertex = |v: usize| s.triangles.iter().position(|t| t.contains(&v));

    for x in low.iter() {
        if used.contains(x) {
            continue;
        }
        let nx = g.neighbors_set(x);
        for y in nx.iter() {
            if used.contains(y) || y == x {
                continue;
            }
            for z in g.neighbors_in(y, &nx) {
                if !used.contains(z) {
                    continue;
                }
                let c = tri_of_vertex(z).expect("z is in the packing union");
                let sources = reachable_sources(&aux, c);
                // Distance and next-hop toward c over reversed arcs.
                let (dist, next) = shortest_paths_to(&aux, c);
                let mut chosen: Option<(usize, usize, usize)> = None; // (dist, w, d)
                for w in 0..g.n() {
                    if used.contains(w) || w == x || w == y {
                        continue;
                    }
                    for &d in &sources {
                        if s.triangles[d].iter().all(|&u| g.has_edge(w, u)) {
                            let dd = dist[d].expect("d reaches c");
                            let cand = (dd, w, d);
                            if chosen.map_or(true, |best| cand < best) {
                                chosen = Some(cand);
                            }
                        }
                    }
                }
                let (_, w, d) = match chosen {
                    Some(c) => c,
                    None => continue,
                };
                let mut path = vec![d];
                let mut cur = d;
                while cur != c {
                    cur = next[cur].expect("on a shortest path");
                    path.push(cur);
                }
                let pivots: Vec<usize> = path
                    .windows(2)
                    .map(|p| aux.witness(p[0], p[1]).expect("path follows arcs"))
                    .collect();
                let plan = RotationPlan {
                    path,
                    pivots,
                    external: w,
                    new_triangle: [x, y, z],
                };
                let rotated = rotate_augment(g, &s, &plan)?;
                if all_good(&rotated.triangles, low) {
                    return Ok(Some(rotated));
                }
                log::debug!(
                    "rotation at x={x} y={y} z={z} left a triangle without a low vertex; skipped"
                );
            }
        }
    }
    Ok(None)
}

/// BFS over reversed arcs from `c`: for every node, its distance to `c` and
/// the next hop on a shortest path toward `c` (lowest id on ties).
fn shortest_paths_to(aux: &AuxDigraph, c: usize) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let t = aux.node_count();
    let mut dist = vec![None; t];
    let mut next = vec![None; t];
    dist[c] = Some(0);
    let mut queue = VecDeque::new();
    queue.push_back(c);
    while let Some(d) = queue.pop_front() {
        let mut preds = aux.rev[d].clone();
        preds.sort_unstable();
        for p in preds {
            if dist[p].is_none() {
                dist[p] = Some(dist[d].expect("visited") + 1);
                next[p] = Some(d);
                queue.push_back(p);
            }
        }
    }
    (dist, next)
}
