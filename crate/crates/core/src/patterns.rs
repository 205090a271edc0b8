//! Finders and validators for induced patterns, `K_d(t)` subgraph copies,
//! `t`-bicliques and `(p,t)`-balloons.
//!
//! Every finder takes a `within` mask and searches `G[within]`; witnesses
//! always use the host graph's labels. Values are recomputed with the exact
//! colouring solver.

use std::fmt;

use serde::Serialize;

use crate::budget::Budget;
use crate::chromatic::{chromatic_at_least, chromatic_of_subset};
use crate::connectivity::is_t_connected_set;
use crate::error::{Error, Result};
use crate::graph::{generate, Graph, GeneratorSpec, VertexSet};

#[derive(Debug, Clone, PartialEq)]
pub enum PatternSpec {
    Path(usize),
    /// `S_k`: a centre and `k` leaves.
    Star(usize),
    Broom { p: usize, r: usize },
    DoubleBroom { p: usize, r: usize, s: usize },
    Forest(Vec<PatternSpec>),
    Arbitrary(Graph),
}

impl PatternSpec {
    /// The pattern graph, labelled as the corresponding generator.
    pub fn graph(&self) -> Result<Graph> {
        use PatternSpec::*;
        let positive = |name: &str, v: usize| {
            if v == 0 {
                Err(Error::invalid(format!("{name} must be at least 1")))
            } else {
                Ok(())
            }
        };
        match self {
            Path(p) => {
                positive("p", *p)?;
                generate(&GeneratorSpec::Path(*p))
            }
            Star(k) => {
                positive("k", *k)?;
                generate(&GeneratorSpec::Star(*k))
            }
            Broom { p, r } => {
                positive("p", *p)?;
                positive("r", *r)?;
                generate(&GeneratorSpec::Broom { p: *p, r: *r })
            }
            DoubleBroom { p, r, s } => {
                positive("p", *p)?;
                positive("r", *r)?;
                positive("s", *s)?;
                generate(&GeneratorSpec::DoubleBroom {
                    p: *p,
                    r: *r,
                    s: *s,
                })
            }
            Forest(parts) => {
                if parts.is_empty() {
                    return Err(Error::invalid("forest needs at least one component"));
                }
                let mut g = Graph::empty(0)?;
                for part in parts {
                    g = g.disjoint_union(&part.graph()?)?;
                }
                Ok(g)
            }
            Arbitrary(h) => Ok(h.clone()),
        }
    }

    pub fn size(&self) -> usize {
        use PatternSpec::*;
        match self {
            Path(p) => *p,
            Star(k) => k + 1,
            Broom { p, r } => p + r,
            DoubleBroom { p, r, s } => p + r + s,
            Forest(parts) => parts.iter().map(PatternSpec::size).sum(),
            Arbitrary(h) => h.n(),
        }
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PatternSpec::*;
        match self {
            Path(p) => write!(f, "path:{p}"),
            Star(k) => write!(f, "star:{k}"),
            Broom { p, r } => write!(f, "broom:{p}:{r}"),
            DoubleBroom { p, r, s } => write!(f, "double_broom:{p}:{r}:{s}"),
            Forest(parts) => {
                write!(f, "forest(")?;
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    write!(f, "{part}")?;
                }
                write!(f, ")")
            }
            Arbitrary(h) => write!(f, "graph6:{h}"),
        }
    }
}

impl Serialize for PatternSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Independent witness checking.
pub trait Validate {
    fn validate(&self, g: &Graph) -> bool;
}

/// An induced copy of a pattern: pattern vertex `i` goes to `map[i]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Embedding {
    pub pattern: PatternSpec,
    #[serde(rename = "vertices")]
    pub map: Vec<usize>,
}

/// `true` iff `map` is an injective map into `g` under which `h` is an
/// induced subgraph.
pub fn is_induced_map(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    if map.len() != h.n() || map.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let image: VertexSet = map.iter().collect();
    if image.len() != map.len() {
        return false;
    }
    (0..h.n()).all(|i| (0..i).all(|j| h.has_edge(i, j) == g.has_edge(map[i], map[j])))
}

impl Validate for Embedding {
    fn validate(&self, g: &Graph) -> bool {
        match self.pattern.graph() {
            Ok(h) => is_induced_map(g, &h, &self.map),
            Err(_) => false,
        }
    }
}

impl Embedding {
    pub fn image(&self) -> VertexSet {
        self.map.iter().collect()
    }
}

/// `d` disjoint `t`-sets with every cross pair adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KdtCopy {
    pub d: usize,
    pub t: usize,
    pub parts: Vec<VertexSet>,
}

impl Validate for KdtCopy {
    fn validate(&self, g: &Graph) -> bool {
        if self.parts.len() != self.d || self.d == 0 || self.t == 0 {
            return false;
        }
        let full = g.vertices();
        let mut seen = VertexSet::EMPTY;
        for &p in &self.parts {
            if p.len() != self.t || !p.is_subset(full) || !p.is_disjoint(seen) {
                return false;
            }
            seen = seen.union(p);
        }
        self.parts.iter().enumerate().all(|(i, &a)| {
            self.parts[i + 1..]
                .iter()
                .all(|&b| a.iter().all(|u| b.is_subset(g.neighbors(u))))
        })
    }
}

/// `|X| = t`, every vertex of `Y` adjacent to every vertex of `X`,
/// `value = χ(Y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Biclique {
    #[serde(rename = "X")]
    pub x: VertexSet,
    #[serde(rename = "Y")]
    pub y: VertexSet,
    pub t: usize,
    pub value: usize,
}

impl Validate for Biclique {
    fn validate(&self, g: &Graph) -> bool {
        let full = g.vertices();
        self.x.len() == self.t
            && self.t >= 1
            && self.x.is_subset(full)
            && self.y.is_subset(full)
            && self.x.is_disjoint(self.y)
            && self.x.iter().all(|u| self.y.is_subset(g.neighbors(u)))
            && chromatic_of_subset(g, self.y, &Budget::unlimited()).ok() == Some(self.value)
    }
}

/// A `(p,t)`-balloon: induced path `v_1..v_p` and a `t`-connected set `Y`
/// that the path enters only through `v_p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Balloon {
    pub path: Vec<usize>,
    #[serde(rename = "Y")]
    pub y: VertexSet,
    pub t: usize,
    pub value: usize,
}

impl Balloon {
    pub fn p(&self) -> usize {
        self.path.len()
    }

    /// Vertices of `Y` nonadjacent to (and different from) `v_p`.
    pub fn z(&self, g: &Graph) -> VertexSet {
        let vp = *self.path.last().expect("nonempty path");
        self.y.difference(g.neighbors(vp)).without(vp)
    }
}

pub fn is_induced_path(g: &Graph, path: &[usize]) -> bool {
    if path.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let set: VertexSet = path.iter().collect();
    if set.len() != path.len() {
        return false;
    }
    (0..path.len()).all(|i| {
        (0..i).all(|j| g.has_edge(path[i], path[j]) == (i == j + 1))
    })
}

/// The balloon conditions apart from the value.
pub fn is_balloon_shape(g: &Graph, path: &[usize], y: VertexSet, t: usize) -> bool {
    let p = path.len();
    if p == 0 || t == 0 || !y.is_subset(g.vertices()) || !is_induced_path(g, path) {
        return false;
    }
    if !y.contains(path[p - 1]) || path[..p - 1].iter().any(|&v| y.contains(v)) {
        return false;
    }
    if p >= 3 && path[..p - 2].iter().any(|&v| !g.neighbors(v).is_disjoint(y)) {
        return false;
    }
    if p >= 2 && g.neighbors(path[p - 2]).intersection(y) != VertexSet::singleton(path[p - 1]) {
        return false;
    }
    is_t_connected_set(g, y, t)
}

impl Validate for Balloon {
    fn validate(&self, g: &Graph) -> bool {
        is_balloon_shape(g, &self.path, self.y, self.t)
            && chromatic_of_subset(g, self.z(g), &Budget::unlimited()).ok() == Some(self.value)
    }
}

/// Backtracking search for an induced copy of `h` in `g[within]`.
pub fn find_induced_in(
    g: &Graph,
    h: &Graph,
    within: VertexSet,
    budget: &Budget,
) -> Result<Option<Vec<usize>>> {
    let k = h.n();
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    if k > within.len() {
        return Ok(None);
    }
    let order = match_order(h);
    let mut pos = vec![0; k];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut images = vec![usize::MAX; k];
    let degree_h: Vec<usize> = order.iter().map(|&v| h.degree(v)).collect();
    let degree_g: Vec<usize> = (0..g.n()).map(|v| g.degree_in(v, within)).collect();
    let ok = extend(
        g,
        h,
        &order,
        &degree_h,
        &degree_g,
        within,
        0,
        VertexSet::EMPTY,
        &mut images,
        budget,
    )?;
    Ok(if ok {
        let mut map = vec![0; k];
        for (i, &v) in order.iter().enumerate() {
            map[v] = images[i];
        }
        Some(map)
    } else {
        None
    })
}

/// Components by decreasing size (ties by least vertex), each in BFS order
/// from its least vertex.
fn match_order(h: &Graph) -> Vec<usize> {
    let mut comps = Vec::new();
    let mut rest = h.vertices();
    while let Some(v) = rest.first() {
        let c = h.component_of(v, h.vertices());
        rest = rest.difference(c);
        comps.push(c);
    }
    comps.sort_by_key(|c| (std::cmp::Reverse(c.len()), c.first()));
    let mut order = Vec::with_capacity(h.n());
    for c in comps {
        let start = c.first().expect("nonempty component");
        let mut seen = VertexSet::singleton(start);
        let mut queue = vec![start];
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for u in h.neighbors(v).difference(seen) {
                seen.insert(u);
                queue.push(u);
            }
        }
        order.extend(queue);
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    degree_h: &[usize],
    degree_g: &[usize],
    within: VertexSet,
    i: usize,
    used: VertexSet,
    images: &mut [usize],
    budget: &Budget,
) -> Result<bool> {
    if i == order.len() {
        return Ok(true);
    }
    budget.tick()?;
    let hv = order[i];
    let mut cand = within.difference(used);
    for j in 0..i {
        let gv = images[j];
        if h.has_edge(hv, order[j]) {
            cand = cand.intersection(g.neighbors(gv));
        } else {
            cand = cand.difference(g.neighbors(gv));
        }
    }
    for v in cand {
        if degree_g[v] < degree_h[i] {
            continue;
        }
        images[i] = v;
        if extend(g, h, order, degree_h, degree_g, within, i + 1, used.with(v), images, budget)? {
            return Ok(true);
        }
    }
    images[i] = usize::MAX;
    Ok(false)
}

pub fn contains_induced(
    g: &Graph,
    spec: &PatternSpec,
    budget: &Budget,
) -> Result<Option<Embedding>> {
    contains_induced_in(g, spec, g.vertices(), budget)
}

pub fn contains_induced_in(
    g: &Graph,
    spec: &PatternSpec,
    within: VertexSet,
    budget: &Budget,
) -> Result<Option<Embedding>> {
    let h = spec.graph()?;
    Ok(find_induced_in(g, &h, within, budget)?.map(|map| Embedding {
        pattern: spec.clone(),
        map,
    }))
}

/// `K_d(t)` as a (not necessarily induced) subgraph of `g[within]`.
pub fn contains_subgraph_kdt_in(
    g: &Graph,
    within: VertexSet,
    d: usize,
    t: usize,
    budget: &Budget,
) -> Result<Option<KdtCopy>> {
    if d == 0 || t == 0 {
        return Err(Error::invalid("d and t must be at least 1"));
    }
    let mut parts = Vec::with_capacity(d);
    if kdt_search(g, within, d, t, &mut parts, budget)? {
        Ok(Some(KdtCopy { d, t, parts }))
    } else {
        Ok(None)
    }
}

pub fn contains_subgraph_kdt(
    g: &Graph,
    d: usize,
    t: usize,
    budget: &Budget,
) -> Result<Option<KdtCopy>> {
    contains_subgraph_kdt_in(g, g.vertices(), d, t, budget)
}

/// Parts are interchangeable, so the least candidate is either in the next
/// part or unused.
fn kdt_search(
    g: &Graph,
    cand: VertexSet,
    d: usize,
    t: usize,
    parts: &mut Vec<VertexSet>,
    budget: &Budget,
) -> Result<bool> {
    if d == 0 {
        return Ok(true);
    }
    let mut cand = if d >= 2 { g.k_core(cand, (d - 1) * t) } else { cand };
    while cand.len() >= d * t {
        budget.tick()?;
        let v = cand.first().expect("nonempty");
        if d == 1 {
            let part: VertexSet = cand.iter().take(t).collect();
            parts.push(part);
            return Ok(true);
        }
        let rest = cand.without(v);
        let common = g.neighbors(v).intersection(cand);
        if grow_part(g, d, t, VertexSet::singleton(v), rest, common, parts, budget)? {
            return Ok(true);
        }
        cand = g.k_core(rest, (d - 1) * t);
    }
    Ok(false)
}

#[allow(clippy::too_many_arguments)]
fn grow_part(
    g: &Graph,
    d: usize,
    t: usize,
    part: VertexSet,
    pool: VertexSet,
    common: VertexSet,
    parts: &mut Vec<VertexSet>,
    budget: &Budget,
) -> Result<bool> {
    budget.tick()?;
    if common.len() < (d - 1) * t {
        return Ok(false);
    }
    if part.len() == t {
        parts.push(part);
        if kdt_search(g, common, d - 1, t, parts, budget)? {
            return Ok(true);
        }
        parts.pop();
        return Ok(false);
    }
    let need = t - part.len();
    let mut pool = pool;
    while pool.len() >= need {
        let u = pool.first().expect("nonempty");
        pool.remove(u);
        let next_common = common.intersection(g.neighbors(u));
        if grow_part(g, d, t, part.with(u), pool, next_common, parts, budget)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A `t`-biclique in `g[within]` of value at least `s`. The sets `X` are
/// tried in the order of [`VertexSet::subsets_of_size`], with
/// `Y = CN(X) ∩ within`.
pub fn find_t_biclique_in(
    g: &Graph,
    within: VertexSet,
    t: usize,
    s: usize,
    budget: &Budget,
) -> Result<Option<Biclique>> {
    if t == 0 {
        return Err(Error::invalid("t must be at least 1"));
    }
    let pool: VertexSet = within.iter().filter(|&v| g.degree_in(v, within) >= s).collect();
    for x in pool.subsets_of_size(t) {
        budget.tick()?;
        let y = g.common_neighbors(x).intersection(within);
        if chromatic_at_least(g, y, s, budget)? {
            let value = chromatic_of_subset(g, y, budget)?;
            return Ok(Some(Biclique { x, y, t, value }));
        }
    }
    Ok(None)
}

pub fn find_t_biclique(g: &Graph, t: usize, s: usize, budget: &Budget) -> Result<Option<Biclique>> {
    find_t_biclique_in(g, g.vertices(), t, s, budget)
}

/// All induced paths on `p` vertices inside `within`, as ordered sequences,
/// in lexicographic order.
pub fn induced_paths(g: &Graph, within: VertexSet, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if p == 0 {
        return out;
    }
    let mut path = Vec::with_capacity(p);
    for v in within {
        path.push(v);
        grow_path(g, within, p, &mut path, VertexSet::EMPTY, &mut out);
        path.pop();
    }
    out
}

fn grow_path(
    g: &Graph,
    within: VertexSet,
    p: usize,
    path: &mut Vec<usize>,
    blocked: VertexSet,
    out: &mut Vec<Vec<usize>>,
) {
    if path.len() == p {
        out.push(path.clone());
        return;
    }
    let last = *path.last().expect("nonempty");
    // Earlier vertices and their neighbours (except via `last`) are blocked.
    let used: VertexSet = path.iter().collect();
    let next = g.neighbors(last).intersection(within).difference(used).difference(blocked);
    let blocked_next = blocked.union(used).union(if path.len() >= 2 {
        g.neighbors(path[path.len() - 2])
    } else {
        VertexSet::EMPTY
    });
    for v in next {
        if blocked_next.contains(v) {
            continue;
        }
        path.push(v);
        grow_path(g, within, p, path, blocked_next, out);
        path.pop();
    }
}

/// Vertices allowed in `Y` for a balloon on `path`: not on `v_1..v_{p-1}`,
/// not adjacent to `v_1..v_{p-2}`, and adjacent to `v_{p-1}` only at `v_p`.
pub fn balloon_pool(g: &Graph, within: VertexSet, path: &[usize]) -> VertexSet {
    let p = path.len();
    let mut pool = within;
    for &v in &path[..p - 1] {
        pool.remove(v);
    }
    if p >= 3 {
        for &v in &path[..p - 2] {
            pool = pool.difference(g.neighbors(v));
        }
    }
    if p >= 2 {
        pool = pool.difference(g.neighbors(path[p - 2]).without(path[p - 1]));
    }
    pool
}

/// A `(p,t)`-balloon in `g[within]` of value at least `q`.
///
/// Paths are taken in lexicographic order. For each, `Y` ranges over
/// subsets of the component of `v_p` in the `t`-core of the allowed pool,
/// by decreasing size.
pub fn find_balloon_in(
    g: &Graph,
    within: VertexSet,
    p: usize,
    t: usize,
    q: usize,
    budget: &Budget,
) -> Result<Option<Balloon>> {
    if p == 0 || t == 0 {
        return Err(Error::invalid("p and t must be at least 1"));
    }
    for path in induced_paths(g, within, p) {
        budget.tick()?;
        let vp = path[p - 1];
        let pool = balloon_pool(g, within, &path);
        let core = g.k_core(pool, t);
        let comp = g.component_of(vp, core);
        if comp.len() <= t {
            continue;
        }
        let far = comp.difference(g.neighbors(vp)).without(vp);
        if !chromatic_at_least(g, far, q, budget)? {
            continue;
        }
        let others = comp.without(vp);
        for m in (t..others.len() + 1).rev() {
            for rest in others.subsets_of_size(m) {
                budget.tick()?;
                let y = rest.with(vp);
                let z = y.difference(g.neighbors(vp)).without(vp);
                if z.len() < q || !is_t_connected_set(g, y, t) {
                    continue;
                }
                if chromatic_at_least(g, z, q, budget)? {
                    let value = chromatic_of_subset(g, z, budget)?;
                    return Ok(Some(Balloon {
                        path,
                        y,
                        t,
                        value,
                    }));
                }
            }
        }
    }
    Ok(None)
}

pub fn find_balloon(
    g: &Graph,
    p: usize,
    t: usize,
    q: usize,
    budget: &Budget,
) -> Result<Option<Balloon>> {
    find_balloon_in(g, g.vertices(), p, t, q, budget)
}

/// A stable set of `k` vertices inside `cand`, least vertices first.
pub fn stable_subset(g: &Graph, cand: VertexSet, k: usize) -> Option<VertexSet> {
    if k == 0 {
        return Some(VertexSet::EMPTY);
    }
    let mut cand = cand;
    while cand.len() >= k {
        let v = cand.first()?;
        cand.remove(v);
        if let Some(s) = stable_subset(g, cand.difference(g.neighbors(v)), k - 1) {
            return Some(s.with(v));
        }
    }
    None
}

/// A centre `a` and a stable `k`-set of its neighbours, all inside `within`.
pub fn find_induced_star_in(
    g: &Graph,
    within: VertexSet,
    k: usize,
) -> Option<(usize, VertexSet)> {
    within.iter().find_map(|a| {
        stable_subset(g, g.neighbors(a).intersection(within), k).map(|s| (a, s))
    })
}

pub fn find_induced_star(g: &Graph, k: usize) -> Option<(usize, VertexSet)> {
    find_induced_star_in(g, g.vertices(), k)
}

/// An induced double broom `B(p', r, s)` with `p' >= p`, trying the
/// smallest `p'` first.
pub fn detect_double_broom(
    g: &Graph,
    p: usize,
    r: usize,
    s: usize,
    budget: &Budget,
) -> Result<Option<Embedding>> {
    if p == 0 || r == 0 || s == 0 {
        return Err(Error::invalid("p, r and s must be at least 1"));
    }
    let mut pp = p;
    while pp + r + s <= g.n() {
        let spec = PatternSpec::DoubleBroom { p: pp, r, s };
        if let Some(e) = contains_induced(g, &spec, budget)? {
            return Ok(Some(e));
        }
        pp += 1;
    }
    Ok(None)
}
