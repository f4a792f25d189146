//! Simple undirected graphs on vertex ids `0..n`, stored as one bit row per
//! vertex for O(1) edge queries and word-parallel neighborhood intersection.
//!
//! Graphs are immutable values: every surgery (edge contraction, vertex
//! deletion, 2-core, join) returns a fresh graph together with a
//! [`VertexMap`] recording the old->new renumbering, so certificates found
//! in the result can be translated back mechanically.

use crate::error::{Error, ParseError, Result};
use std::fmt;

const WORD_BITS: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS).max(1)
}

/// Set of vertex ids out of a fixed universe `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; words_for(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(universe: usize, iter: I) -> Self {
        let mut s = Self::empty(universe);
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn iter(&self) -> BitIter<'_> {
        BitIter {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over set bits, ascending.
pub struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD_BITS + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
    }
}

/// Old->new vertex renumbering produced by a graph surgery.
///
/// `to_new(v)` is `None` when `v` was deleted. Contractions map both merged
/// endpoints to the same new id, so the inverse is only defined where the
/// preimage is unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    old_to_new: Vec<Option<usize>>,
    new_n: usize,
}

impl VertexMap {
    fn new(old_to_new: Vec<Option<usize>>, new_n: usize) -> Self {
        VertexMap { old_to_new, new_n }
    }

    pub fn identity(n: usize) -> Self {
        VertexMap {
            old_to_new: (0..n).map(Some).collect(),
            new_n: n,
        }
    }

    pub fn old_n(&self) -> usize {
        self.old_to_new.len()
    }

    pub fn new_n(&self) -> usize {
        self.new_n
    }

    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    /// Inverse lookup; `None` when no old vertex or more than one maps there.
    pub fn preimage_unique(&self, new: usize) -> Option<usize> {
        let mut found = None;
        for (old, mapped) in self.old_to_new.iter().enumerate() {
            if *mapped == Some(new) {
                if found.is_some() {
                    return None;
                }
                found = Some(old);
            }
        }
        found
    }
}

/// Simple undirected graph with value semantics.
///
/// Invariants: no self-loops, no parallel edges, symmetric adjacency,
/// `edge_count` equal to half the degree sum. The empty graph (`n == 0`) is
/// legal everywhere.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            adj: vec![0; n.max(1) * words],
            m: 0,
        }
    }

    /// Builds a graph from an explicit edge list, rejecting out-of-range
    /// endpoints, self-loops, and duplicates.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidArgument(format!("duplicate edge {u}-{v}")));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// Labeled graph on `n <= 11` vertices from a bitmask over the
    /// `C(n,2)` vertex pairs in lexicographic order (0,1),(0,2),...,(n-2,n-1).
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 11, "edge mask only covers C(n,2) <= 55 bits");
        let mut g = Graph::empty(n);
        let mut idx = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if mask >> idx & 1 == 1 {
                    g.add_edge_unchecked(u, v);
                }
                idx += 1;
            }
        }
        g
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        debug_assert!(!self.has_edge(u, v));
        self.adj[u * self.words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.adj[v * self.words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
        self.m += 1;
    }

    pub(crate) fn delete_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(self.has_edge(u, v));
        self.adj[u * self.words + v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        self.adj[v * self.words + u / WORD_BITS] &= !(1 << (u % WORD_BITS));
        self.m -= 1;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> BitIter<'_> {
        let row = self.row(v);
        BitIter {
            words: row,
            word_idx: 0,
            current: row.first().copied().unwrap_or(0),
        }
    }

    pub fn neighbors_set(&self, v: usize) -> VertexSet {
        VertexSet {
            universe: self.n,
            words: self.row(v).to_vec(),
        }
    }

    /// Iterates `N(v) ∩ set` without allocating.
    pub fn neighbors_in<'a>(&'a self, v: usize, set: &'a VertexSet) -> MaskedBitIter<'a> {
        MaskedBitIter {
            a: self.row(v),
            b: set.words(),
            word_idx: 0,
            current: self.row(v)[0] & set.words().first().copied().unwrap_or(0),
        }
    }

    /// Degree of `v` inside `set`, i.e. `|N(v) ∩ set|`.
    pub fn degree_in(&self, v: usize, set: &VertexSet) -> usize {
        self.row(v)
            .iter()
            .zip(set.words())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// The attachment `‖v, X‖`: number of edges from `v` into `X`.
    pub fn attachment(&self, v: usize, x: &VertexSet) -> usize {
        self.degree_in(v, x)
    }

    /// `‖U, U′‖` for disjoint vertex sets.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        debug_assert!(a.is_disjoint(b), "edges_between expects disjoint sets");
        a.iter().map(|v| self.degree_in(v, b)).sum()
    }

    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.degree_in(v, set) == 0)
    }

    /// All edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Contracts the edge `uv`. The merged vertex takes `min(u,v)`'s slot,
    /// `max(u,v)`'s slot is removed, and later vertices shift down by one.
    /// Returns the new graph, the merged vertex's new id, and the renumbering.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<(Graph, usize, VertexMap)> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let keep = u.min(v);
        let gone = u.max(v);
        let remap = |w: usize| -> usize {
            if w == gone {
                keep
            } else if w > gone {
                w - 1
            } else {
                w
            }
        };
        let mut g = Graph::empty(self.n - 1);
        for (a, b) in self.edges() {
            let (ma, mb) = (remap(a), remap(b));
            if ma != mb && !g.has_edge(ma, mb) {
                g.add_edge_unchecked(ma, mb);
            }
        }
        let old_to_new = (0..self.n).map(|w| Some(remap(w))).collect();
        Ok((g, keep, VertexMap::new(old_to_new, self.n - 1)))
    }

    /// Induced subgraph on `V \ x`, with surviving vertices renumbered in
    /// increasing order of their old ids.
    pub fn delete_vertices(&self, x: &VertexSet) -> (Graph, VertexMap) {
        let mut old_to_new = vec![None; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !x.contains(v) {
                old_to_new[v] = Some(next);
                next += 1;
            }
        }
        let mut g = Graph::empty(next);
        for (a, b) in self.edges() {
            if let (Some(ma), Some(mb)) = (old_to_new[a], old_to_new[b]) {
                g.add_edge_unchecked(ma, mb);
            }
        }
        (g, VertexMap::new(old_to_new, next))
    }

    pub(crate) fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let mut g = self.clone();
        g.delete_edge_unchecked(u, v);
        Ok(g)
    }

    /// The 2-core: the unique maximal subgraph of minimum degree >= 2,
    /// obtained by iteratively deleting vertices of degree at most 1
    /// (lowest id first). Returns the core, the deleted vertices in deletion
    /// order, and the renumbering.
    pub fn two_core(&self) -> (Graph, Vec<usize>, VertexMap) {
        let mut alive = VertexSet::full(self.n);
        let mut removed = Vec::new();
        loop {
            let victim = alive
                .iter()
                .find(|&v| self.degree_in(v, &alive) <= 1);
            match victim {
                Some(v) => {
                    alive.remove(v);
                    removed.push(v);
                }
                None => break,
            }
        }
        let gone = VertexSet::from_iter(self.n, removed.iter().copied());
        let (core, map) = self.delete_vertices(&gone);
        (core, removed, map)
    }

    /// The join `G ∨ H`: disjoint union plus all edges between the two
    /// vertex sets. `self`'s vertices keep their ids; `other`'s shift up by
    /// `self.n()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge_unchecked(u, self.n + v);
            }
        }
        g
    }

    /// Disjoint union; `other`'s vertices shift up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (a, b) in self.edges() {
            g.add_edge_unchecked(a, b);
        }
        for (a, b) in other.edges() {
            g.add_edge_unchecked(self.n + a, self.n + b);
        }
        g
    }

    /// Parses the edge-list text format: a header line `n m` followed by
    /// exactly `m` lines `u v` (0-indexed, whitespace-separated).
    /// Whitespace-only lines are ignored.
    pub fn parse_edge_list(text: &str) -> std::result::Result<Graph, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.trim().is_empty());

        let (header_line, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, "missing header line \"n m\""))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .ok_or_else(|| ParseError::new(header_line, "missing vertex count"))?
            .parse()
            .map_err(|_| ParseError::new(header_line, "vertex count is not a number"))?;
        let m: usize = it
            .next()
            .ok_or_else(|| ParseError::new(header_line, "missing edge count"))?
            .parse()
            .map_err(|_| ParseError::new(header_line, "edge count is not a number"))?;
        if it.next().is_some() {
            return Err(ParseError::new(header_line, "trailing tokens after \"n m\""));
        }

        let mut g = Graph::empty(n);
        let mut seen = 0usize;
        let mut last_line = header_line;
        for (line_no, line) in lines {
            last_line = line_no;
            if seen == m {
                return Err(ParseError::new(
                    line_no,
                    format!("more than the declared {m} edge lines"),
                ));
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(ParseError::new(
                    line_no,
                    format!("expected \"u v\", got {} tokens", toks.len()),
                ));
            }
            let u: usize = toks[0]
                .parse()
                .map_err(|_| ParseError::new(line_no, format!("bad vertex id {:?}", toks[0])))?;
            let v: usize = toks[1]
                .parse()
                .map_err(|_| ParseError::new(line_no, format!("bad vertex id {:?}", toks[1])))?;
            if u >= n || v >= n {
                return Err(ParseError::new(
                    line_no,
                    format!("vertex id {} out of range (n = {n})", u.max(v)),
                ));
            }
            if u == v {
                return Err(ParseError::new(line_no, format!("self-loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(ParseError::new(line_no, format!("duplicate edge {u} {v}")));
            }
            g.add_edge_unchecked(u, v);
            seen += 1;
        }
        if seen != m {
            return Err(ParseError::new(
                last_line,
                format!("expected {m} edge lines, found {seen}"),
            ));
        }
        Ok(g)
    }

    /// Serializes to the edge-list format: header, then edges sorted
    /// lexicographically with `u < v`, one per line. Bit-exact inverse of
    /// [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

/// Iterator over the set bits of `a[i] & b[i]`.
pub struct MaskedBitIter<'a> {
    a: &'a [u64],
    b: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for MaskedBitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD_BITS + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.a.len() || self.word_idx >= self.b.len() {
                return None;
            }
            self.current = self.a[self.word_idx] & self.b[self.word_idx];
        }
    }
}

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge_unchecked(u, v);
        }
    }
    g
}

/// `K_{a,b}` with side A on `0..a` and side B on `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in 0..b {
            g.add_edge_unchecked(u, a + v);
        }
    }
    g
}

/// `C_n` (n >= 3) on vertices `0..n` in cyclic order.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut g = Graph::empty(n);
    for v in 0..n {
        g.add_edge_unchecked(v, (v + 1) % n);
    }
    g
}

/// `P_n`: the path 0-1-...-(n-1).
pub fn path_graph(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge_unchecked(v - 1, v);
    }
    g
}
