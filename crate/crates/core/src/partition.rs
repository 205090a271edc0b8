//! Graph classes given by predicates, good sets, the measure `μ`, q-maps
//! with minions, minimum good partitions, and the arithmetic used when
//! combining bounds over disjoint unions.
//!
//! Freeness and measure are tabulated over all `2^n` subsets of the vertex
//! set, so the table-based functions accept at most
//! [`MAX_TABLE_VERTICES`] vertices.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalForm, Graph, VertexSet};
use crate::patterns::{contains_subgraph_kdt_in, find_induced_in};

pub use crate::patterns::detect_double_broom;

pub const MAX_TABLE_VERTICES: usize = 16;

pub type Predicate = Arc<dyn Fn(&Graph) -> bool + Send + Sync>;

#[derive(Clone)]
pub enum Membership {
    /// Graphs isomorphic to one fixed graph.
    Isomorphic(CanonicalForm),
    /// Graphs on exactly `d·t` vertices containing `K_d(t)` as a subgraph.
    Kdt { d: usize, t: usize },
    Custom(Predicate),
}

#[derive(Clone)]
pub struct GraphClass {
    pub name: String,
    pub min_size: usize,
    pub max_size: Option<usize>,
    /// A member with `min_size` vertices.
    pub representative: Graph,
    pub membership: Membership,
}

impl fmt::Debug for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GraphClass")
            .field("name", &self.name)
            .field("min_size", &self.min_size)
            .field("max_size", &self.max_size)
            .finish()
    }
}

impl GraphClass {
    /// The class `{h}`.
    pub fn single(name: impl Into<String>, h: Graph) -> Result<Self> {
        if h.n() == 0 {
            return Err(Error::invalid("classes contain non-null graphs only"));
        }
        Ok(GraphClass {
            name: name.into(),
            min_size: h.n(),
            max_size: Some(h.n()),
            membership: Membership::Isomorphic(canonical_form(&h)?),
            representative: h,
        })
    }

    /// Graphs with exactly `d·t` vertices that contain `K_d(t)` as a subgraph.
    pub fn kdt(d: usize, t: usize) -> Result<Self> {
        if d == 0 || t == 0 {
            return Err(Error::invalid("d and t must be at least 1"));
        }
        let rep = crate::graph::generate(&crate::graph::GeneratorSpec::CompleteMultipartite { d, t })?;
        Ok(GraphClass {
            name: format!("K{d}({t})"),
            min_size: d * t,
            max_size: Some(d * t),
            representative: rep,
            membership: Membership::Kdt { d, t },
        })
    }

    pub fn custom(
        name: impl Into<String>,
        min_size: usize,
        max_size: Option<usize>,
        representative: Graph,
        predicate: Predicate,
    ) -> Result<Self> {
        if min_size == 0 || representative.n() != min_size || !predicate(&representative) {
            return Err(Error::invalid(
                "representative must be a member with min_size >= 1 vertices",
            ));
        }
        Ok(GraphClass {
            name: name.into(),
            min_size,
            max_size,
            representative,
            membership: Membership::Custom(predicate),
        })
    }

    fn size_ok(&self, m: usize) -> bool {
        m >= self.min_size && self.max_size.is_none_or(|x| m <= x)
    }

    /// Whether `G[s]` is a member.
    pub fn is_member(&self, g: &Graph, s: VertexSet, budget: &Budget) -> Result<bool> {
        if !self.size_ok(s.len()) {
            return Ok(false);
        }
        match &self.membership {
            Membership::Isomorphic(form) => {
                if form.n != s.len() {
                    return Ok(false);
                }
                let (h, _) = g.induced(s);
                Ok(canonical_form(&h)? == *form)
            }
            Membership::Kdt { d, t } => Ok(contains_subgraph_kdt_in(g, s, *d, *t, budget)?.is_some()),
            Membership::Custom(f) => Ok(f(&g.induced(s).0)),
        }
    }
}

/// No induced subgraph of `G[s]` is a member of `class`.
pub fn is_class_free(g: &Graph, s: VertexSet, class: &GraphClass, budget: &Budget) -> Result<bool> {
    Ok(class_member_in(g, s, class, budget)?.is_none())
}

/// Some subset of `s` inducing a member of `class`, smallest size first.
pub fn class_member_in(
    g: &Graph,
    s: VertexSet,
    class: &GraphClass,
    budget: &Budget,
) -> Result<Option<VertexSet>> {
    let top = class.max_size.map_or(s.len(), |m| m.min(s.len()));
    for m in class.min_size..=top {
        for sub in s.subsets_of_size(m) {
            budget.tick()?;
            if class.is_member(g, sub, budget)? {
                return Ok(Some(sub));
            }
        }
    }
    Ok(None)
}

/// `𝓗₁, 𝓗₂, 𝓙₁, 𝓙₂`, in this order.
#[derive(Debug, Clone)]
pub struct Classes {
    pub h1: GraphClass,
    pub h2: GraphClass,
    pub j1: GraphClass,
    pub j2: GraphClass,
}

impl Classes {
    pub fn new(h1: GraphClass, h2: GraphClass, j1: GraphClass, j2: GraphClass) -> Self {
        Classes { h1, h2, j1, j2 }
    }

    /// All four classes equal to `c`.
    pub fn uniform(c: GraphClass) -> Self {
        Classes {
            h1: c.clone(),
            h2: c.clone(),
            j1: c.clone(),
            j2: c,
        }
    }

    pub fn as_array(&self) -> [&GraphClass; 4] {
        [&self.h1, &self.h2, &self.j1, &self.j2]
    }

    /// Smallest `k` with `max-size(𝓗₁), max-size(𝓙₁) <= k - 2`.
    pub fn minimal_k(&self) -> Option<usize> {
        Some(self.h1.max_size?.max(self.j1.max_size?) + 2)
    }

    /// `|S|` for the chosen `S ∈ 𝓗₁` (a smallest member).
    pub fn s(&self) -> usize {
        self.h1.min_size
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GoodTag {
    H1Free,
    H2Free,
    J1Free,
    J2Free,
}

impl GoodTag {
    pub const ALL: [GoodTag; 4] = [GoodTag::H1Free, GoodTag::H2Free, GoodTag::J1Free, GoodTag::J2Free];

    pub fn as_str(self) -> &'static str {
        match self {
            GoodTag::H1Free => "H1-free",
            GoodTag::H2Free => "H2-free",
            GoodTag::J1Free => "J1-free",
            GoodTag::J2Free => "J2-free",
        }
    }
}

impl Serialize for GoodTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// First freeness condition satisfied by `G[s]`, in the order H1, H2, J1, J2.
pub fn is_good(g: &Graph, s: VertexSet, classes: &Classes, budget: &Budget) -> Result<Option<GoodTag>> {
    for (tag, class) in GoodTag::ALL.iter().zip(classes.as_array()) {
        if is_class_free(g, s, class, budget)? {
            return Ok(Some(*tag));
        }
    }
    Ok(None)
}

fn check_table_size(g: &Graph) -> Result<()> {
    if g.n() > MAX_TABLE_VERTICES {
        Err(Error::Capacity { requested: g.n() })
    } else {
        Ok(())
    }
}

/// Membership and containment of one class over every subset of `V(G)`.
#[derive(Debug, Clone)]
pub struct ClassTable {
    pub member: Vec<bool>,
    pub contains: Vec<bool>,
}

impl ClassTable {
    pub fn new(g: &Graph, class: &GraphClass, budget: &Budget) -> Result<Self> {
        check_table_size(g)?;
        let size = 1usize << g.n();
        let mut member = vec![false; size];
        let mut contains = vec![false; size];
        for bits in 0..size {
            budget.tick()?;
            let s = VertexSet::from_bits(bits as u64);
            member[bits] = class.is_member(g, s, budget)?;
            contains[bits] = member[bits] || s.iter().any(|v| contains[bits & !(1 << v)]);
        }
        Ok(ClassTable { member, contains })
    }

    /// A member inside `s`, least bit pattern first.
    pub fn member_within(&self, s: VertexSet) -> Option<VertexSet> {
        if !self.contains[s.bits() as usize] {
            return None;
        }
        (0..self.member.len())
            .find(|&b| self.member[b] && VertexSet::from_bits(b as u64).is_subset(s))
            .map(|b| VertexSet::from_bits(b as u64))
    }
}

const INFINITE: u8 = u8::MAX;

/// Goodness and measure of every subset of `V(G)`.
#[derive(Debug, Clone)]
pub struct MeasureTable {
    n: usize,
    tag: Vec<Option<GoodTag>>,
    mu: Vec<u8>,
    choice: Vec<u32>,
}

impl MeasureTable {
    pub fn new(g: &Graph, classes: &Classes, budget: &Budget) -> Result<Self> {
        let tables = [
            ClassTable::new(g, &classes.h1, budget)?,
            ClassTable::new(g, &classes.h2, budget)?,
            ClassTable::new(g, &classes.j1, budget)?,
            ClassTable::new(g, &classes.j2, budget)?,
        ];
        Self::from_tables(g, [&tables[0], &tables[1], &tables[2], &tables[3]], budget)
    }

    pub fn from_tables(g: &Graph, tables: [&ClassTable; 4], budget: &Budget) -> Result<Self> {
        check_table_size(g)?;
        let n = g.n();
        let size = 1usize << n;
        let tag: Vec<Option<GoodTag>> = (0..size)
            .map(|b| {
                GoodTag::ALL
                    .iter()
                    .zip(tables.iter())
                    .find(|(_, t)| !t.contains[b])
                    .map(|(tag, _)| *tag)
            })
            .collect();
        let mut mu = vec![INFINITE; size];
        let mut choice = vec![0u32; size];
        mu[0] = 0;
        for s in 1..size {
            budget.tick()?;
            let low = s & s.wrapping_neg();
            let rest = s ^ low;
            let mut sub = rest;
            loop {
                let part = sub | low;
                if tag[part].is_some() {
                    let r = mu[s ^ part];
                    if r != INFINITE && r + 1 < mu[s] {
                        mu[s] = r + 1;
                        choice[s] = part as u32;
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
        }
        Ok(MeasureTable { n, tag, mu, choice })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tag(&self, s: VertexSet) -> Option<GoodTag> {
        self.tag[s.bits() as usize]
    }

    /// `μ(s)`: the least number of good sets partitioning `s`.
    pub fn measure(&self, s: VertexSet) -> Result<usize> {
        match self.mu[s.bits() as usize] {
            INFINITE => Err(Error::Infeasible),
            m => Ok(m as usize),
        }
    }

    /// A partition of `s` into `μ(s)` good sets.
    pub fn optimal_parts(&self, s: VertexSet) -> Result<Vec<VertexSet>> {
        self.measure(s)?;
        let mut parts = Vec::new();
        let mut rest = s.bits() as usize;
        while rest != 0 {
            let part = self.choice[rest] as usize;
            parts.push(VertexSet::from_bits(part as u64));
            rest ^= part;
        }
        Ok(parts)
    }

    /// Inclusion-minimal subsets with measure at least `t`.
    pub fn minimal_sets(&self, t: usize) -> Vec<VertexSet> {
        (0..self.mu.len())
            .filter(|&b| {
                let m = self.mu[b];
                m != INFINITE
                    && m as usize >= t
                    && VertexSet::from_bits(b as u64)
                        .iter()
                        .all(|v| (self.mu[b & !(1 << v)] as usize) < t)
            })
            .map(|b| VertexSet::from_bits(b as u64))
            .collect()
    }
}

/// `μ(X)` computed from scratch.
pub fn measure(g: &Graph, x: VertexSet, classes: &Classes, budget: &Budget) -> Result<usize> {
    MeasureTable::new(g, classes, budget)?.measure(x)
}

/// A partial embedding of `S⁺`: `map[i]` is the image of `h_{q+i}`, where
/// `h_1..h_s` are the vertices `0..s-1` of `S` and `h_0` is an extra
/// isolated vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMap {
    pub q: usize,
    pub map: Vec<usize>,
    pub minions: Option<Vec<VertexSet>>,
}

fn splus_adjacent(s_graph: &Graph, a: usize, b: usize) -> bool {
    a != 0 && b != 0 && s_graph.has_edge(a - 1, b - 1)
}

impl QMap {
    pub fn new(q: usize, map: Vec<usize>) -> Self {
        QMap {
            q,
            map,
            minions: None,
        }
    }

    pub fn image(&self) -> VertexSet {
        self.map.iter().collect()
    }

    /// Whether this is an isomorphism from `S[{h_q..h_s}]` onto an induced
    /// subgraph of `g`.
    pub fn is_valid(&self, g: &Graph, s_graph: &Graph) -> bool {
        let s = s_graph.n();
        if self.q == 0 || self.q > s || self.map.len() != s - self.q + 1 {
            return false;
        }
        if self.map.iter().any(|&v| v >= g.n()) || self.image().len() != self.map.len() {
            return false;
        }
        (0..self.map.len()).all(|i| {
            (0..i).all(|j| {
                splus_adjacent(s_graph, self.q + i, self.q + j) == g.has_edge(self.map[i], self.map[j])
            })
        })
    }

    /// Vertices allowed in `Y_p`.
    fn pool(&self, g: &Graph, s_graph: &Graph, p: usize) -> VertexSet {
        let mut pool = g.vertices().difference(self.image());
        for (i, &x) in self.map.iter().enumerate() {
            if splus_adjacent(s_graph, self.q + i, p) {
                pool = pool.intersection(g.neighbors(x));
            } else {
                pool = pool.difference(g.neighbors(x));
            }
        }
        pool
    }
}

/// Checks the `t`-minion conditions for a proposed list `Y_0..Y_{q-1}`.
pub fn are_minions(
    g: &Graph,
    s_graph: &Graph,
    phi: &QMap,
    t: usize,
    table: &MeasureTable,
    minions: &[VertexSet],
) -> bool {
    if minions.len() != phi.q || !phi.is_valid(g, s_graph) {
        return false;
    }
    let mut seen = VertexSet::EMPTY;
    for (p, &y) in minions.iter().enumerate() {
        if !y.is_disjoint(seen) || !y.is_subset(phi.pool(g, s_graph, p)) {
            return false;
        }
        if table.measure(y).map_or(true, |m| m < t) {
            return false;
        }
        seen = seen.union(y);
    }
    true
}

/// Whether `phi` is `t`-general, with a choice of `t`-minions as witness.
pub fn is_general(
    g: &Graph,
    s_graph: &Graph,
    phi: &QMap,
    t: usize,
    table: &MeasureTable,
    budget: &Budget,
) -> Result<Option<Vec<VertexSet>>> {
    if !phi.is_valid(g, s_graph) {
        return Err(Error::invalid("not a q-map"));
    }
    let minimal = table.minimal_sets(t);
    let pools: Vec<VertexSet> = (0..phi.q).map(|p| phi.pool(g, s_graph, p)).collect();
    let mut chosen = Vec::with_capacity(phi.q);
    if assign_minions(&minimal, &pools, VertexSet::EMPTY, &mut chosen, budget)? {
        debug_assert!(are_minions(g, s_graph, phi, t, table, &chosen));
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

fn assign_minions(
    minimal: &[VertexSet],
    pools: &[VertexSet],
    used: VertexSet,
    chosen: &mut Vec<VertexSet>,
    budget: &Budget,
) -> Result<bool> {
    let p = chosen.len();
    if p == pools.len() {
        return Ok(true);
    }
    let avail = pools[p].difference(used);
    for &y in minimal {
        if !y.is_subset(avail) {
            continue;
        }
        budget.tick()?;
        chosen.push(y);
        if assign_minions(minimal, pools, used.union(y), chosen, budget)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

/// Every `1`-map of `s_graph` into `g` (one per image set).
pub fn one_maps(g: &Graph, s_graph: &Graph, budget: &Budget) -> Result<Vec<QMap>> {
    let mut out = Vec::new();
    for sub in g.vertices().subsets_of_size(s_graph.n()) {
        if let Some(map) = find_induced_in(g, s_graph, sub, budget)? {
            out.push(QMap::new(1, map));
        }
    }
    Ok(out)
}

/// A violated hypothesis of the partition theorem, if any.
pub fn check_hypotheses(
    g: &Graph,
    classes: &Classes,
    k: usize,
    budget: &Budget,
) -> Result<Option<Error>> {
    let violated = |h: &str, w: Option<VertexSet>| {
        Some(Error::HypothesisViolated {
            hypothesis: h.to_string(),
            witness: w,
        })
    };
    for (name, c) in [("H1", &classes.h1), ("J1", &classes.j1)] {
        if c.max_size.is_none_or(|m| m + 2 > k) {
            return Ok(violated(&format!("max-size of {name} is at most k-2"), None));
        }
    }
    if classes.as_array().iter().all(|c| c.min_size < 2) {
        return Ok(violated("some class has min-size at least two", None));
    }
    check_table_size(g)?;
    let h1 = ClassTable::new(g, &classes.h1, budget)?;
    let h2 = ClassTable::new(g, &classes.h2, budget)?;
    let j1 = ClassTable::new(g, &classes.j1, budget)?;
    let j2 = ClassTable::new(g, &classes.j2, budget)?;
    if let Some(w) = union_witness(g, &h1, &h2) {
        return Ok(violated("G is H1⊎H2-free", Some(w)));
    }
    if let Some(w) = join_witness(g, &j1, &j2) {
        return Ok(violated("G is J1*J2-free", Some(w)));
    }
    Ok(None)
}

/// A member of `𝓗₁` and a member of `𝓗₂` with no edges between them.
pub fn union_witness(g: &Graph, h1: &ClassTable, h2: &ClassTable) -> Option<VertexSet> {
    (0..h1.member.len()).filter(|&b| h1.member[b]).find_map(|b| {
        let a = VertexSet::from_bits(b as u64);
        let far = g.vertices().difference(a).difference(g.neighborhood(a));
        h2.member_within(far).map(|w| w.union(a))
    })
}

/// A member of `𝓙₁` and a member of `𝓙₂` complete to each other.
pub fn join_witness(g: &Graph, j1: &ClassTable, j2: &ClassTable) -> Option<VertexSet> {
    (0..j1.member.len()).filter(|&b| j1.member[b]).find_map(|b| {
        let a = VertexSet::from_bits(b as u64);
        j2.member_within(g.common_neighbors(a)).map(|w| w.union(a))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Part {
    pub vertices: VertexSet,
    pub good_as: GoodTag,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub parts: Vec<Part>,
    pub bound: u64,
}

impl Partition {
    /// Exact cover of `V(G)`, each part good under its tag (rechecked by
    /// direct search), and at most `bound` parts.
    pub fn validate(&self, g: &Graph, classes: &Classes, budget: &Budget) -> Result<bool> {
        let mut seen = VertexSet::EMPTY;
        for part in &self.parts {
            if part.vertices.is_empty() || !part.vertices.is_disjoint(seen) {
                return Ok(false);
            }
            seen = seen.union(part.vertices);
            let class = match part.good_as {
                GoodTag::H1Free => &classes.h1,
                GoodTag::H2Free => &classes.h2,
                GoodTag::J1Free => &classes.j1,
                GoodTag::J2Free => &classes.j2,
            };
            if !is_class_free(g, part.vertices, class, budget)? {
                return Ok(false);
            }
        }
        Ok(seen == g.vertices() && self.parts.len() as u64 <= self.bound)
    }
}

/// `s·k^s + 3`.
pub fn partition_bound(s: usize, k: usize) -> Result<u64> {
    let e = u32::try_from(s).map_err(|_| Error::Overflow("partition bound"))?;
    (k as u64)
        .checked_pow(e)
        .and_then(|x| x.checked_mul(s as u64))
        .and_then(|x| x.checked_add(3))
        .ok_or(Error::Overflow("partition bound"))
}

/// A minimum-cardinality partition of `V(G)` into good sets, after checking
/// the theorem's hypotheses for `k`.
pub fn good_partition(g: &Graph, classes: &Classes, k: usize, budget: &Budget) -> Result<Partition> {
    if let Some(e) = check_hypotheses(g, classes, k, budget)? {
        return Err(e);
    }
    let bound = partition_bound(classes.s(), k)?;
    let table = MeasureTable::new(g, classes, budget)?;
    let parts = table
        .optimal_parts(g.vertices())?
        .into_iter()
        .map(|vertices| Part {
            vertices,
            good_as: table.tag(vertices).expect("parts are good"),
        })
        .collect::<Vec<_>>();
    if parts.len() as u64 > bound {
        return Err(Error::ProofStep(format!(
            "minimum good partition has {} parts, above {bound}",
            parts.len()
        )));
    }
    Ok(Partition { parts, bound })
}

/// `(s·k^s + 3)·g`.
pub fn union_bound(s: usize, k: usize, g: u64) -> Result<u64> {
    partition_bound(s, k)?
        .checked_mul(g)
        .ok_or(Error::Overflow("union bound"))
}

/// `k = 2 + |H_1| + d_1·t`, used with `K_d(t)` classes.
pub fn join_k(h1: usize, d1: usize, t: usize) -> usize {
    2 + h1 + d1 * t
}

/// `k = 2 + max(d_1, |H_1|)`, used with clique classes.
pub fn esperet_k(d1: usize, h1: usize) -> usize {
    2 + d1.max(h1)
}

/// Relative slack allowed when comparing the two sides in floating point.
pub const NEAR_ESPERET_REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NearEsperetCheck {
    pub c: f64,
    pub first: bool,
    pub second: bool,
}

impl NearEsperetCheck {
    pub fn holds(&self) -> bool {
        self.first && self.second
    }
}

fn geq(lhs: f64, rhs: f64) -> bool {
    lhs >= rhs - NEAR_ESPERET_REL_TOL * lhs.abs().max(rhs.abs())
}

/// With `x = log₂ d`, `ε = log₂(3/2)` and `c = max(b + c₀, b/ε)`: whether
/// `c x² ≥ b x + c₀ x²` and `2cεx ≥ bx + cε²`.
pub fn near_esperet(b: f64, c0: f64, d: u64) -> Result<NearEsperetCheck> {
    if !(b >= 0.0 && c0 >= 0.0) || d < 2 {
        return Err(Error::invalid("need b, c0 >= 0 and d >= 2"));
    }
    let x = (d as f64).log2();
    let eps = 1.5f64.log2();
    let c = (b + c0).max(b / eps);
    Ok(NearEsperetCheck {
        c,
        first: geq(c * x * x, b * x + c0 * x * x),
        second: geq(2.0 * c * eps * x, b * x + c * eps * eps),
    })
}

pub fn near_esperet_check(b: f64, c0: f64, d: u64) -> bool {
    near_esperet(b, c0, d).is_ok_and(|r| r.holds())
}

/// Outcome of checking the per-vertex measure statement on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMeasure {
    pub v: usize,
    pub mu_n: usize,
    pub mu_m: usize,
}

/// Vertices `v` with both `μ(N(v))` and `μ(M(v))` at least `s·k^{s-1}`.
pub fn neighbourhood_measure_violations(
    g: &Graph,
    s: usize,
    k: usize,
    table: &MeasureTable,
) -> Result<Vec<VertexMeasure>> {
    let threshold = s * k.pow(s as u32 - 1);
    let mut out = Vec::new();
    for v in 0..g.n() {
        let mu_n = table.measure(g.neighbors(v))?;
        let mu_m = table.measure(g.non_neighbors(v))?;
        if mu_n >= threshold && mu_m >= threshold {
            out.push(VertexMeasure { v, mu_n, mu_m });
        }
    }
    Ok(out)
}

/// `1`-maps that are `2`-general, with their minions.
pub fn one_map_violations(
    g: &Graph,
    s_graph: &Graph,
    table: &MeasureTable,
    budget: &Budget,
) -> Result<Vec<QMap>> {
    let mut out = Vec::new();
    for mut phi in one_maps(g, s_graph, budget)? {
        if let Some(m) = is_general(g, s_graph, &phi, 2, table, budget)? {
            phi.minions = Some(m);
            out.push(phi);
        }
    }
    Ok(out)
}

/// `s`-maps (single vertices) that are `k^{s-1}`-general.
pub fn s_map_violations(
    g: &Graph,
    s_graph: &Graph,
    k: usize,
    table: &MeasureTable,
    budget: &Budget,
) -> Result<Vec<QMap>> {
    let s = s_graph.n();
    let t = k.pow(s as u32 - 1);
    let mut out = Vec::new();
    for v in 0..g.n() {
        let mut phi = QMap::new(s, vec![v]);
        if let Some(m) = is_general(g, s_graph, &phi, t, table, budget)? {
            phi.minions = Some(m);
            out.push(phi);
        }
    }
    Ok(out)
}
