#![allow(dead_code)]

use chi_certify::graph::enumerate_graphs;
use chi_certify::{Graph, VertexSet};

pub fn all_graphs(lo: usize, hi: usize) -> Vec<Graph> {
    (lo..=hi).flat_map(|n| enumerate_graphs(n).unwrap()).collect()
}

fn stable(g: &Graph, bits: u64) -> bool {
    let s = VertexSet::from_bits(bits);
    s.iter().all(|v| g.neighbors(v).intersection(s).is_empty())
}

/// `χ(G[S])` for every subset `S`, by splitting off a stable set that holds
/// the lowest vertex.
pub fn chi_table(g: &Graph) -> Vec<u8> {
    let size = 1usize << g.n();
    let mut chi = vec![0u8; size];
    for s in 1..size {
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut best = u8::MAX;
        let mut sub = rest;
        loop {
            let part = sub | low;
            if stable(g, part as u64) {
                best = best.min(1 + chi[s ^ part]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        chi[s] = best;
    }
    chi
}

pub fn chi_of(table: &[u8], s: VertexSet) -> usize {
    table[s.bits() as usize] as usize
}

pub fn connected(g: &Graph, s: VertexSet) -> bool {
    let Some(start) = s.first() else {
        return true;
    };
    let mut seen = VertexSet::singleton(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for u in s.iter() {
            if g.has_edge(u, v) && !seen.contains(u) {
                seen.insert(u);
                stack.push(u);
            }
        }
    }
    seen == s
}

/// More than `t` vertices, and still connected after deleting any fewer
/// than `t` of them.
pub fn t_connected(g: &Graph, s: VertexSet, t: usize) -> bool {
    s.len() > t
        && (0..1u64 << g.n())
            .map(VertexSet::from_bits)
            .filter(|r| r.is_subset(s) && r.len() < t)
            .all(|r| connected(g, s.difference(r)))
}

/// Smallest vertex set whose removal disconnects the graph or leaves one
/// vertex.
pub fn kappa(g: &Graph) -> usize {
    let n = g.n();
    let all = g.vertices();
    (0..1u64 << n)
        .map(VertexSet::from_bits)
        .filter(|r| {
            let rest = all.difference(*r);
            rest.len() <= 1 || !connected(g, rest)
        })
        .map(|r| r.len())
        .min()
        .unwrap_or(0)
}

/// Every induced path on `p` vertices as a vertex sequence, both directions.
pub fn induced_paths(g: &Graph, p: usize) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for v in 0..g.n() {
            if cur.contains(&v) {
                continue;
            }
            let k = cur.len();
            let ok = (0..k).all(|i| g.has_edge(cur[i], v) == (i + 1 == k));
            if ok {
                cur.push(v);
                grow(g, p, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(g, p, &mut Vec::new(), &mut out);
    out
}

/// The balloon conditions checked one by one.
pub fn is_balloon(g: &Graph, path: &[usize], y: VertexSet, t: usize) -> bool {
    let p = path.len();
    let vp = path[p - 1];
    if !y.contains(vp) || path[..p - 1].iter().any(|&v| y.contains(v)) {
        return false;
    }
    if p >= 3 && path[..p - 2].iter().any(|&v| !g.neighbors(v).intersection(y).is_empty()) {
        return false;
    }
    if p >= 2 && g.neighbors(path[p - 2]).intersection(y) != VertexSet::singleton(vp) {
        return false;
    }
    t_connected(g, y, t)
}

/// Largest value of a `(p,t)`-balloon, if any exists.
pub fn best_balloon(g: &Graph, chi: &[u8], p: usize, t: usize) -> Option<usize> {
    let mut best = None;
    for path in induced_paths(g, p) {
        let vp = path[p - 1];
        for bits in 0..1u64 << g.n() {
            let y = VertexSet::from_bits(bits);
            if is_balloon(g, &path, y, t) {
                let z = y.difference(g.neighbors(vp)).without(vp);
                best = best.max(Some(chi_of(chi, z)));
            }
        }
    }
    best
}

/// Largest value of a `t`-biclique, if any `t`-set exists.
pub fn best_biclique(g: &Graph, chi: &[u8], t: usize) -> Option<usize> {
    (0..1u64 << g.n())
        .map(VertexSet::from_bits)
        .filter(|x| x.len() == t)
        .map(|x| {
            let y = (0..g.n())
                .filter(|&v| !x.contains(v) && x.iter().all(|u| g.has_edge(u, v)))
                .collect::<VertexSet>();
            chi_of(chi, y)
        })
        .max()
}

/// `K_d(t)` as a subgraph: `d` disjoint `t`-sets, complete between parts.
pub fn has_kdt(g: &Graph, d: usize, t: usize) -> bool {
    fn place(g: &Graph, d: usize, t: usize, parts: &mut Vec<VertexSet>, used: VertexSet) -> bool {
        if parts.len() == d {
            return true;
        }
        for bits in 0..1u64 << g.n() {
            let part = VertexSet::from_bits(bits);
            if part.len() != t || !part.is_disjoint(used) {
                continue;
            }
            if parts.last().is_some_and(|last| bits <= last.bits()) {
                continue;
            }
            let complete = parts
                .iter()
                .all(|q| q.iter().all(|u| part.iter().all(|v| g.has_edge(u, v))));
            if complete {
                parts.push(part);
                if place(g, d, t, parts, used.union(part)) {
                    return true;
                }
                parts.pop();
            }
        }
        false
    }
    place(g, d, t, &mut Vec::new(), VertexSet::EMPTY)
}
