//! Exact chromatic number, clique number and k-colouring.
//!
//! Everything works on a vertex mask of a host graph, so `χ(G[S])` never
//! builds the induced subgraph. The exact solver is DSATUR branch and bound:
//! a maximum clique is precoloured, the lower bound is its size, the upper
//! bound is a largest-degree-first greedy colouring, and `k` is raised from
//! the lower bound until a `k`-colouring is found.

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A proper colouring of a whole graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    /// Builds a colouring of `g` from colour classes covering `0..n`.
    pub fn from_classes(n: usize, classes: &[VertexSet]) -> Self {
        let mut colors = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            for v in *class {
                colors[v] = c;
            }
        }
        Coloring {
            colors,
            k: classes.len(),
        }
    }

    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = vec![VertexSet::EMPTY; self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            if c < self.k {
                classes[c].insert(v);
            }
        }
        classes
    }

    /// Independent check: right length, colours in range, every class used,
    /// no monochromatic edge.
    pub fn is_proper(&self, g: &Graph) -> bool {
        if self.colors.len() != g.n() || self.colors.iter().any(|&c| c >= self.k) {
            return false;
        }
        let mut used = vec![false; self.k];
        for &c in &self.colors {
            used[c] = true;
        }
        if used.iter().any(|u| !u) {
            return false;
        }
        g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Checks that `classes` partition `s` into stable sets of `g`.
pub fn is_proper_partition(g: &Graph, s: VertexSet, classes: &[VertexSet]) -> bool {
    let mut seen = VertexSet::EMPTY;
    for &c in classes {
        if c.is_empty() || !c.is_disjoint(seen) || !g.is_stable(c) {
            return false;
        }
        seen = seen.union(c);
    }
    seen == s
}

/// A maximum clique of `g[s]`.
pub fn max_clique_in(g: &Graph, s: VertexSet, budget: &Budget) -> Result<VertexSet> {
    let mut best = VertexSet::EMPTY;
    clique_expand(g, VertexSet::EMPTY, s, &mut best, budget)?;
    Ok(best)
}

fn clique_expand(
    g: &Graph,
    r: VertexSet,
    p: VertexSet,
    best: &mut VertexSet,
    budget: &Budget,
) -> Result<()> {
    budget.tick()?;
    if p.is_empty() {
        if r.len() > best.len() {
            *best = r;
        }
        return Ok(());
    }
    // Greedy colour classes of p give the bound; vertices are visited from
    // the highest colour down.
    let mut order: Vec<(usize, usize)> = Vec::with_capacity(p.len());
    let mut rest = p;
    let mut colour = 0;
    while !rest.is_empty() {
        colour += 1;
        let mut avail = rest;
        while let Some(v) = avail.first() {
            order.push((v, colour));
            rest.remove(v);
            avail = avail.without(v).difference(g.neighbors(v));
        }
    }
    let mut p = p;
    for &(v, c) in order.iter().rev() {
        if r.len() + c <= best.len() {
            return Ok(());
        }
        clique_expand(g, r.with(v), p.intersection(g.neighbors(v)), best, budget)?;
        p.remove(v);
    }
    Ok(())
}

/// Clique number of `g` with a witness clique.
pub fn clique_number(g: &Graph, budget: &Budget) -> Result<(usize, VertexSet)> {
    let c = max_clique_in(g, g.vertices(), budget)?;
    Ok((c.len(), c))
}

/// Largest-degree-first greedy colouring of `g[s]`; ties go to the lower
/// index. Returns colour classes.
pub fn greedy_classes(g: &Graph, s: VertexSet) -> Vec<VertexSet> {
    let mut order = s.to_vec();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree_in(v, s)), v));
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in order {
        let nv = g.neighbors(v);
        match classes.iter_mut().find(|c| c.is_disjoint(nv)) {
            Some(c) => c.insert(v),
            None => classes.push(VertexSet::singleton(v)),
        }
    }
    classes
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    degree: Vec<usize>,
    classes: Vec<VertexSet>,
    budget: &'a Budget,
}

impl Dsatur<'_> {
    fn saturation(&self, v: usize) -> u64 {
        let nv = self.g.neighbors(v);
        let mut sat = 0u64;
        for (c, class) in self.classes.iter().enumerate() {
            if !class.is_disjoint(nv) {
                sat |= 1 << c;
            }
        }
        sat
    }

    fn search(&mut self, uncoloured: VertexSet) -> Result<bool> {
        self.budget.tick()?;
        if uncoloured.is_empty() {
            return Ok(true);
        }
        let mut pick = None;
        let mut pick_key = (0u32, 0usize);
        for v in uncoloured {
            let sat = self.saturation(v);
            let key = (sat.count_ones(), self.degree[v]);
            if pick.is_none() || key > pick_key {
                pick = Some((v, sat));
                pick_key = key;
            }
        }
        let (v, sat) = pick.expect("nonempty");
        let used = self.classes.len();
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if sat >> c & 1 == 1 {
                continue;
            }
            if c == used {
                self.classes.push(VertexSet::singleton(v));
            } else {
                self.classes[c].insert(v);
            }
            if self.search(uncoloured.without(v))? {
                return Ok(true);
            }
            if c == used {
                self.classes.pop();
            } else {
                self.classes[c].remove(v);
            }
        }
        Ok(false)
    }
}

fn colour_with(
    g: &Graph,
    s: VertexSet,
    k: usize,
    clique: VertexSet,
    budget: &Budget,
) -> Result<Option<Vec<VertexSet>>> {
    if s.is_empty() {
        return Ok(Some(Vec::new()));
    }
    if k < clique.len() || k == 0 {
        return Ok(None);
    }
    if k > 64 {
        return Err(Error::invalid("at most 64 colours are supported"));
    }
    let degree = (0..g.n()).map(|v| g.degree_in(v, s)).collect();
    let mut d = Dsatur {
        g,
        k,
        degree,
        classes: clique.iter().map(VertexSet::singleton).collect(),
        budget,
    };
    if d.search(s.difference(clique))? {
        Ok(Some(d.classes))
    } else {
        Ok(None)
    }
}

/// Optimal colour classes of `g[s]`.
pub fn optimal_classes(g: &Graph, s: VertexSet, budget: &Budget) -> Result<Vec<VertexSet>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let clique = max_clique_in(g, s, budget)?;
    let greedy = greedy_classes(g, s);
    for k in clique.len()..greedy.len() {
        if let Some(classes) = colour_with(g, s, k, clique, budget)? {
            return Ok(classes);
        }
    }
    Ok(greedy)
}

/// `χ(G[S])`, with `χ(∅) = 0`.
pub fn chromatic_of_subset(g: &Graph, s: VertexSet, budget: &Budget) -> Result<usize> {
    optimal_classes(g, s, budget).map(|c| c.len())
}

/// `χ(G)` with an optimal colouring.
pub fn chromatic_number(g: &Graph, budget: &Budget) -> Result<(usize, Coloring)> {
    let classes = optimal_classes(g, g.vertices(), budget)?;
    let col = Coloring::from_classes(g.n(), &classes);
    Ok((col.k, col))
}

/// A proper colouring with at most `k` colours, if one exists.
pub fn proper_coloring(g: &Graph, k: usize, budget: &Budget) -> Result<Option<Coloring>> {
    let s = g.vertices();
    if s.is_empty() {
        return Ok(Some(Coloring {
            colors: Vec::new(),
            k: 0,
        }));
    }
    let greedy = greedy_classes(g, s);
    if greedy.len() <= k {
        return Ok(Some(Coloring::from_classes(g.n(), &greedy)));
    }
    let clique = max_clique_in(g, s, budget)?;
    Ok(colour_with(g, s, k, clique, budget)?.map(|c| Coloring::from_classes(g.n(), &c)))
}

/// Whether `χ(G[S]) >= q`, using the cheap bounds before the exact solver.
pub fn chromatic_at_least(g: &Graph, s: VertexSet, q: usize, budget: &Budget) -> Result<bool> {
    if q == 0 {
        return Ok(true);
    }
    if s.len() < q {
        return Ok(false);
    }
    if greedy_classes(g, s).len() < q {
        return Ok(false);
    }
    let clique = max_clique_in(g, s, budget)?;
    if clique.len() >= q {
        return Ok(true);
    }
    Ok(colour_with(g, s, q - 1, clique, budget)?.is_none())
}
