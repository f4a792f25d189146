//! Brute-force reference oracles, deliberately independent of cyclepack's
//! branch-and-bound search path.
//!
//! c(G) is computed by dynamic programming over vertex subsets: a subset
//! contributes a cycle exactly when it carries a spanning (Hamiltonian)
//! cycle, and the packing number of an available set is the best over
//! "drop the lowest vertex" and "spend a spanning-cycle subset containing
//! it". Exponential in n; intended for n <= 16 and used at n <= 9.

use cyclepack::Graph;

const MAX_N: usize = 16;

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= MAX_N, "oracle supports n <= {MAX_N}");
    let mut adj = vec![0u64; g.n()];
    for u in 0..g.n() {
        for v in 0..g.n() {
            if g.has_edge(u, v) {
                adj[u] |= 1 << v;
            }
        }
    }
    adj
}

/// For every subset mask, whether the induced subgraph has a spanning cycle.
fn spanning_cycle_table(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let adj = adjacency_masks(g);
    let size = 1usize << n;
    // path_ends[m]: endpoints v of paths that start at the lowest vertex of
    // m and visit exactly m.
    let mut path_ends = vec![0u64; size];
    for v in 0..n {
        path_ends[1 << v] = 1 << v;
    }
    for m in 1..size {
        if m.count_ones() < 2 {
            continue;
        }
        let root = m.trailing_zeros() as usize;
        let mut ends = 0u64;
        let mut rest = (m as u64) & !(1 << root);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if path_ends[m & !(1 << v)] & adj[v] != 0 {
                ends |= 1 << v;
            }
        }
        path_ends[m] = ends;
    }
    (0..size)
        .map(|m| {
            if m.count_ones() < 3 {
                return false;
            }
            let root = m.trailing_zeros() as usize;
            path_ends[m] & adj[root] != 0
        })
        .collect()
}

/// Maximum number of vertex-disjoint cycles, by subset enumeration.
pub fn max_cycle_packing_naive(g: &Graph) -> usize {
    let n = g.n();
    if n < 3 {
        return 0;
    }
    let spanning = spanning_cycle_table(g);
    let size = 1usize << n;
    let mut best = vec![0usize; size];
    for m in 1..size {
        let low = m.trailing_zeros() as usize;
        let mut b = best[m & !(1 << low)];
        // Every subset containing the lowest vertex that spans a cycle.
        let mut s = m;
        loop {
            if s & (1 << low) != 0 && spanning[s] {
                b = b.max(1 + best[m & !s]);
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & m;
        }
        best[m] = b;
    }
    best[size - 1]
}

pub fn has_k_disjoint_cycles_naive(g: &Graph, k: usize) -> bool {
    max_cycle_packing_naive(g) >= k
}

/// Maximum number of disjoint triangles passing `keep`, by subset DP over
/// the triangle list.
pub fn max_triangle_packing_naive<F>(g: &Graph, keep: F) -> usize
where
    F: Fn(&[usize; 3]) -> bool,
{
    let n = g.n();
    assert!(n <= MAX_N);
    let mut tris: Vec<[usize; 3]> = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in (b + 1)..n {
                if g.has_edge(a, c) && g.has_edge(b, c) && keep(&[a, b, c]) {
                    tris.push([a, b, c]);
                }
            }
        }
    }
    let size = 1usize << n;
    let mut best = vec![0usize; size];
    for m in 1..size {
        let low = m.trailing_zeros() as usize;
        let mut b = best[m & !(1 << low)];
        for t in &tris {
            if t[0] != low && t[1] != low && t[2] != low {
                continue;
            }
            let tmask = (1usize << t[0]) | (1 << t[1]) | (1 << t[2]);
            if tmask & m == tmask {
                b = b.max(1 + best[m & !tmask]);
            }
        }
        best[m] = b;
    }
    best[size - 1]
}

/// Filter selecting good triangles: at least one vertex of degree <= 2k-2.
pub fn good_triangle_filter(g: &Graph, k: usize) -> impl Fn(&[usize; 3]) -> bool + '_ {
    move |t: &[usize; 3]| t.iter().any(|&v| g.degree(v) + 2 <= 2 * k)
}
