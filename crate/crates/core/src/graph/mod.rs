//! Simple undirected graphs on at most 64 vertices.
//!
//! Each row of the adjacency matrix is a single `u64`, so neighbourhood and
//! subset operations are word operations. Vertices are `0..n`.

mod canon;
mod generate;
mod graph6;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use canon::{canonical_form, enumerate_graphs, is_isomorphic, CanonicalForm};
pub use generate::{generate, GeneratorSpec};
pub use graph6::{from_graph6, to_graph6};

pub const MAX_VERTICES: usize = 64;

/// A set of vertices of some graph, stored as a bitset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Lowest vertex in the set.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `self` with exactly `k` elements, in increasing order
    /// of their bit patterns.
    pub fn subsets_of_size(self, k: usize) -> SubsetsOfSize {
        SubsetsOfSize::new(self, k)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Enumerates the `k`-subsets of a ground set (Gosper's hack on the ranks).
pub struct SubsetsOfSize {
    ground: Vec<usize>,
    rank_mask: u64,
    next: Option<u64>,
}

impl SubsetsOfSize {
    fn new(ground: VertexSet, k: usize) -> Self {
        let ground: Vec<usize> = ground.to_vec();
        let m = ground.len();
        let next = if k > m {
            None
        } else if k == 0 {
            Some(0)
        } else {
            Some(VertexSet::full(k).bits())
        };
        SubsetsOfSize {
            rank_mask: VertexSet::full(m).bits(),
            ground,
            next,
        }
    }
}

impl Iterator for SubsetsOfSize {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let ranks = self.next?;
        let mut set = VertexSet::EMPTY;
        for r in VertexSet(ranks) {
            set.insert(self.ground[r]);
        }
        self.next = if ranks == 0 {
            None
        } else {
            let c = ranks & ranks.wrapping_neg();
            let r = ranks.wrapping_add(c);
            if r == 0 || r & !self.rank_mask != 0 {
                None
            } else {
                Some((((r ^ ranks) >> 2) / c) | r)
            }
        };
        Some(set)
    }
}

/// An undirected simple graph on vertices `0..n`, `n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity { requested: n });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from neighbour bitsets, checking symmetry and
    /// irreflexivity.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::Capacity { requested: n });
        }
        let g = Graph { n, adj };
        g.check_invariants()?;
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub fn check_invariants(&self) -> Result<()> {
        let all = VertexSet::full(self.n).bits();
        for v in 0..self.n {
            let row = self.adj[v];
            if row & !all != 0 {
                return Err(Error::invalid(format!("vertex {v} has a neighbour out of range")));
            }
            if (row >> v) & 1 == 1 {
                return Err(Error::invalid(format!("self-loop at vertex {v}")));
            }
            for u in VertexSet(row) {
                if (self.adj[u] >> v) & 1 == 0 {
                    return Err(Error::invalid(format!("asymmetric edge {v}->{u}")));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.adj[u] >> v) & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Vertices other than `v` that are not adjacent to `v`.
    #[inline]
    pub fn non_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(!self.adj[v] & self.vertices().bits()).without(v)
    }

    /// Vertices outside `s` adjacent to every vertex of `s`. For empty `s`
    /// this is every vertex.
    pub fn common_neighbors(&self, s: VertexSet) -> VertexSet {
        let mut acc = self.vertices();
        for v in s {
            acc = acc.intersection(self.neighbors(v));
        }
        acc.difference(s)
    }

    /// Vertices with at least one neighbour in `s`.
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut acc = VertexSet::EMPTY;
        for v in s {
            acc = acc.union(self.neighbors(v));
        }
        acc
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn degree_in(&self, v: usize, s: VertexSet) -> usize {
        (self.adj[v] & s.bits()).count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u).wrapping_sub(1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_stable(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors(v).is_disjoint(s))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    /// The subgraph induced on `s`, with vertices renumbered in increasing
    /// order. The returned map sends new indices to original vertices.
    pub fn induced(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let map = s.to_vec();
        let mut g = Graph {
            n: map.len(),
            adj: vec![0; map.len()],
        };
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, map)
    }

    /// Renumbers vertices: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices().bits();
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !(1u64 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        Ok(g)
    }

    /// Complete join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, v + self.n);
            }
        }
        Ok(g)
    }

    /// Appends a path of `len` new vertices, the first of which is joined to
    /// `anchor`.
    pub fn with_pendant_path(&self, anchor: usize, len: usize) -> Result<Graph> {
        if anchor >= self.n {
            return Err(Error::invalid(format!("anchor {anchor} out of range")));
        }
        let n = self.n + len;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        let mut prev = anchor;
        for v in self.n..n {
            g.add_edge(prev, v);
            prev = v;
        }
        Ok(g)
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        if !within.contains(start) {
            return VertexSet::EMPTY;
        }
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.neighbors(v));
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.component_of(v, s) == s,
        }
    }

    /// Largest subset of `s` in which every vertex has at least `k`
    /// neighbours.
    pub fn k_core(&self, s: VertexSet, k: usize) -> VertexSet {
        let mut core = s;
        loop {
            let weak: VertexSet = core.iter().filter(|&v| self.degree_in(v, core) < k).collect();
            if weak.is_empty() {
                return core;
            }
            core = core.difference(weak);
        }
    }

    /// A shortest path from `from` to any vertex of `targets`, staying inside
    /// `within`. Among shortest paths the lexicographically least vertex
    /// sequence is returned.
    pub fn shortest_path_to(
        &self,
        from: usize,
        targets: VertexSet,
        within: VertexSet,
    ) -> Option<Vec<usize>> {
        let targets = targets.intersection(within);
        if !within.contains(from) || targets.is_empty() {
            return None;
        }
        // Layers of distance from the target set.
        let mut layers = vec![targets];
        let mut seen = targets;
        while !seen.contains(from) {
            let last = *layers.last().unwrap();
            let next = self.neighborhood(last).intersection(within).difference(seen);
            if next.is_empty() {
                return None;
            }
            seen = seen.union(next);
            layers.push(next);
        }
        let mut path = vec![from];
        let mut cur = from;
        for layer in layers.iter().rev().skip(1) {
            cur = self.neighbors(cur).intersection(*layer).first()?;
            path.push(cur);
        }
        Some(path)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}
