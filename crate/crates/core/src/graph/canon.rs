//! Canonical labelling for small graphs and exhaustive enumeration of
//! isomorphism classes.
//!
//! Vertices are first split into cells by colour refinement (degree, then
//! multisets of neighbour colours, iterated to a fixpoint). The canonical
//! labelling is the cell-respecting vertex order whose adjacency code is
//! largest; the search places one vertex per position and prunes any prefix
//! whose partial code already falls below the best one seen.

use std::collections::HashSet;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_form`] (the code must fit in 64 bits).
pub const MAX_CANON_VERTICES: usize = 11;

/// Largest order accepted by [`enumerate_graphs`].
pub const MAX_ENUM_VERTICES: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    /// Upper-triangle bits in graph6 column order, first pair most significant.
    pub code: u64,
}

fn refine(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut colour: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    loop {
        let mut sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<u32> = g.neighbors(v).iter().map(|u| colour[u]).collect();
                ns.sort_unstable();
                (colour[v], ns)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<u32> = sigs
            .drain(..)
            .map(|s| distinct.binary_search(&s).unwrap() as u32)
            .collect();
        let before = {
            let mut c = colour.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        let changed = distinct.len() != before;
        colour = next;
        if !changed {
            return colour;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// Cell index for each position.
    cell_at: Vec<u32>,
    colour: Vec<u32>,
    order: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    /// Bits contributed by placing `order[i]` at position `i`, i.e. column `i`.
    fn column(&self, i: usize) -> u64 {
        let v = self.order[i];
        let mut bits = 0u64;
        for j in 0..i {
            bits = (bits << 1) | self.g.has_edge(self.order[j], v) as u64;
        }
        bits
    }

    fn run(&mut self, i: usize, used: VertexSet, prefix: u64, prefix_len: usize) {
        if i == self.n {
            let code = prefix;
            if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
                self.best = Some((code, self.order.clone()));
            }
            return;
        }
        let want = self.cell_at[i];
        for v in 0..self.n {
            if used.contains(v) || self.colour[v] != want {
                continue;
            }
            self.order.push(v);
            let col = self.column(i);
            let len = prefix_len + i;
            let code = if i == 0 { prefix } else { (prefix << i) | col };
            let total = self.n * (self.n - 1) / 2;
            let prune = match &self.best {
                Some((b, _)) => {
                    let best_prefix = if len == 0 { 0 } else { b >> (total - len) };
                    code < best_prefix
                }
                None => false,
            };
            if !prune {
                self.run(i + 1, used.with(v), code, len);
            }
            self.order.pop();
        }
    }
}

/// Canonical form plus the labelling that realises it: `order[i]` is the
/// original vertex placed at position `i`.
pub fn canonical_labelling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(Error::invalid(format!(
            "canonical form supports at most {MAX_CANON_VERTICES} vertices"
        )));
    }
    if n <= 1 {
        return Ok((CanonicalForm { n, code: 0 }, (0..n).collect()));
    }
    let colour = refine(g);
    let mut cell_at = colour.clone();
    cell_at.sort_unstable();
    let mut s = Search {
        g,
        n,
        cell_at,
        colour,
        order: Vec::with_capacity(n),
        best: None,
    };
    s.run(0, VertexSet::EMPTY, 0, 0);
    let (code, order) = s.best.expect("at least one labelling");
    Ok((CanonicalForm { n, code }, order))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labelling(g).map(|(c, _)| c)
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, order) = canonical_labelling(g)?;
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(g.relabel(&perm))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// `1 <= n <= 7`. Representatives are canonically labelled and sorted by
/// canonical code.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_ENUM_VERTICES).contains(&n) {
        return Err(Error::invalid(format!(
            "enumeration supports 1 <= n <= {MAX_ENUM_VERTICES}, got {n}"
        )));
    }
    let mut layer = vec![Graph::empty(1)?];
    for m in 2..=n {
        let mut seen: HashSet<u64> = HashSet::new();
        let mut next = Vec::new();
        for base in &layer {
            for nbrs in 0..(1u64 << (m - 1)) {
                let mut adj = base.adj.clone();
                adj.push(nbrs);
                for u in VertexSet::from_bits(nbrs) {
                    adj[u] |= 1u64 << (m - 1);
                }
                let g = Graph { n: m, adj };
                let (form, _) = canonical_labelling(&g)?;
                if seen.insert(form.code) {
                    next.push((form.code, canonical_graph(&g)?));
                }
            }
        }
        next.sort_by_key(|(code, _)| *code);
        layer = next.into_iter().map(|(_, g)| g).collect();
    }
    Ok(layer)
}
