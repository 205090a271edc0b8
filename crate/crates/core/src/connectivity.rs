//! Vertex connectivity and t-connected induced subgraphs.
//!
//! `κ` is computed from local connectivities (vertex-disjoint path counts via
//! unit-capacity max-flow on the split graph). Only pairs `(u, v)` with `u`
//! among the first `κ + 1` vertices and `v` nonadjacent to `u` need checking:
//! a minimum separator misses one of any `κ + 1` vertices, and that vertex
//! has a non-neighbour on the far side.
//!
//! Conventions: `κ(K_n) = n - 1`; a disconnected graph or one with at most
//! one vertex has `κ = 0`.

use crate::budget::Budget;
use crate::chromatic::{chromatic_at_least, chromatic_of_subset};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// Number of internally vertex-disjoint `u`-`v` paths inside `s`, capped at
/// `cap`. `u` and `v` must be distinct and nonadjacent.
pub fn local_connectivity(g: &Graph, s: VertexSet, u: usize, v: usize, cap: usize) -> usize {
    let map = s.to_vec();
    let m = map.len();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &x) in map.iter().enumerate() {
        index[x] = i;
    }
    // Node 2i is the in-copy of map[i], 2i+1 the out-copy.
    let nodes = 2 * m;
    let mut cap_m = vec![0i32; nodes * nodes];
    let big = m as i32 + 1;
    for (i, &x) in map.iter().enumerate() {
        let inner = if x == u || x == v { big } else { 1 };
        cap_m[2 * i * nodes + 2 * i + 1] = inner;
        for y in g.neighbors(x).intersection(s) {
            let j = index[y];
            cap_m[(2 * i + 1) * nodes + 2 * j] = big;
        }
    }
    let source = 2 * index[u] + 1;
    let sink = 2 * index[v];
    let mut flow = 0;
    let mut prev = vec![usize::MAX; nodes];
    let mut queue = Vec::with_capacity(nodes);
    while flow < cap {
        prev.iter_mut().for_each(|p| *p = usize::MAX);
        prev[source] = source;
        queue.clear();
        queue.push(source);
        let mut head = 0;
        while head < queue.len() && prev[sink] == usize::MAX {
            let a = queue[head];
            head += 1;
            let row = &cap_m[a * nodes..(a + 1) * nodes];
            for (b, &c) in row.iter().enumerate() {
                if c > 0 && prev[b] == usize::MAX {
                    prev[b] = a;
                    queue.push(b);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut b = sink;
        while b != source {
            let a = prev[b];
            cap_m[a * nodes + b] -= 1;
            cap_m[b * nodes + a] += 1;
            b = a;
        }
        flow += 1;
    }
    flow
}

/// `min(κ(G[s]), cap)`.
pub fn connectivity_capped(g: &Graph, s: VertexSet, cap: usize) -> usize {
    let m = s.len();
    if m <= 1 || !g.is_connected_set(s) {
        return 0;
    }
    if g.is_clique(s) {
        return (m - 1).min(cap);
    }
    let min_deg = s.iter().map(|v| g.degree_in(v, s)).min().unwrap_or(0);
    let mut best = min_deg.min(cap);
    for (i, u) in s.iter().enumerate() {
        if i > best {
            break;
        }
        for v in s.difference(g.neighbors(u)).without(u) {
            let k = local_connectivity(g, s, u, v, best);
            if k < best {
                best = k;
            }
            if best == 0 {
                return 0;
            }
        }
    }
    best
}

pub fn vertex_connectivity(g: &Graph) -> usize {
    connectivity_capped(g, g.vertices(), usize::MAX)
}

pub fn vertex_connectivity_of(g: &Graph, s: VertexSet) -> usize {
    connectivity_capped(g, s, usize::MAX)
}

/// `|s| > t` and `κ(G[s]) >= t`.
pub fn is_t_connected_set(g: &Graph, s: VertexSet, t: usize) -> bool {
    if s.len() <= t {
        return false;
    }
    if s.iter().any(|v| g.degree_in(v, s) < t) {
        return false;
    }
    connectivity_capped(g, s, t) >= t
}

pub fn is_t_connected(g: &Graph, t: usize) -> bool {
    is_t_connected_set(g, g.vertices(), t)
}

/// A subset of `within` inducing a `t`-connected subgraph of largest
/// chromatic number, or `None` if there is none.
///
/// Exhaustive: within each component of the `t`-core, subsets are scanned by
/// decreasing size (increasing bit pattern within a size). The scan stops
/// when the size drops to the best value found, or when the best value
/// reaches the chromatic number of the component.
pub fn extract_t_connected_in(
    g: &Graph,
    within: VertexSet,
    t: usize,
    budget: &Budget,
) -> Result<Option<(VertexSet, usize)>> {
    let core = g.k_core(within, t);
    let mut best: Option<(VertexSet, usize)> = None;
    let mut rest = core;
    while let Some(start) = rest.first() {
        let comp = g.component_of(start, core);
        rest = rest.difference(comp);
        let best_val = best.map_or(0, |b| b.1);
        if comp.len() <= t.max(best_val) {
            continue;
        }
        if is_t_connected_set(g, comp, t) {
            let val = chromatic_of_subset(g, comp, budget)?;
            if val > best_val {
                best = Some((comp, val));
            }
            continue;
        }
        let ceiling = chromatic_of_subset(g, comp, budget)?;
        if ceiling <= best_val {
            continue;
        }
        'sizes: for m in (t + 1..comp.len()).rev() {
            if m <= best.map_or(0, |b| b.1) {
                break;
            }
            for cand in comp.subsets_of_size(m) {
                budget.tick()?;
                let cur = best.map_or(0, |b| b.1);
                if !is_t_connected_set(g, cand, t) {
                    continue;
                }
                if !chromatic_at_least(g, cand, cur + 1, budget)? {
                    continue;
                }
                let val = chromatic_of_subset(g, cand, budget)?;
                best = Some((cand, val));
                if val == ceiling {
                    break 'sizes;
                }
            }
        }
    }
    Ok(best)
}

pub fn extract_t_connected(g: &Graph, t: usize, budget: &Budget) -> Result<Option<VertexSet>> {
    Ok(extract_t_connected_in(g, g.vertices(), t, budget)?.map(|(s, _)| s))
}
