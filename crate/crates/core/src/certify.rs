//! Bound calculators, the balloon/biclique structure recursion, and the
//! path and broom certificate pipelines.
//!
//! `find_structure` follows the induction on `p` step by step. Each step
//! that the argument settles with "we may assume" is executed: either the
//! assumed situation holds and the recursion continues, or the witness that
//! would contradict the hypothesis is built and returned. Every returned
//! witness is validated; a witness that fails validation is reported as
//! [`Error::ProofStep`].

use serde::Serialize;

use crate::budget::Budget;
use crate::chromatic::{
    chromatic_at_least, chromatic_number, chromatic_of_subset, greedy_classes, max_clique_in,
    Coloring,
};
use crate::connectivity::extract_t_connected_in;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::patterns::{
    contains_induced, contains_subgraph_kdt, find_induced_star_in, Balloon, Biclique, Embedding,
    KdtCopy, PatternSpec, Validate,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundParams {
    pub p: u64,
    pub q: u64,
    pub s: u64,
    pub t: u64,
    pub d: u64,
    pub r: u64,
}

fn at_least_one(vals: &[(&str, u64)]) -> Result<()> {
    for (name, v) in vals {
        if *v == 0 {
            return Err(Error::invalid(format!("{name} must be at least 1")));
        }
    }
    Ok(())
}

fn pow(base: u64, exp: u64, what: &'static str) -> Result<u64> {
    let exp = u32::try_from(exp).map_err(|_| Error::Overflow(what))?;
    base.checked_pow(exp).ok_or(Error::Overflow(what))
}

/// `(1 + t + .. + t^{p-1})(s + t(2t+9)) + t^p q`.
pub fn bound_k(p: u64, q: u64, s: u64, t: u64) -> Result<u64> {
    at_least_one(&[("p", p), ("q", q), ("s", s), ("t", t)])?;
    const W: &str = "bound_k";
    let mut geometric = 0u64;
    let mut power = 1u64;
    for _ in 0..p {
        geometric = geometric.checked_add(power).ok_or(Error::Overflow(W))?;
        power = power.checked_mul(t).ok_or(Error::Overflow(W))?;
    }
    let inner = t
        .checked_mul(2 * t + 9)
        .and_then(|x| x.checked_add(s))
        .ok_or(Error::Overflow(W))?;
    geometric
        .checked_mul(inner)
        .and_then(|x| x.checked_add(power.checked_mul(q)?))
        .ok_or(Error::Overflow(W))
}

/// `s + t(2t+9) + tq`, the balloon value used one level down.
pub fn q_prime(q: u64, s: u64, t: u64) -> Result<u64> {
    const W: &str = "q_prime";
    t.checked_mul(2 * t + 9)
        .and_then(|x| x.checked_add(s))
        .and_then(|x| x.checked_add(t.checked_mul(q)?))
        .ok_or(Error::Overflow(W))
}

/// `F_1 = t`, `F_d = bound_k(p, 1, F_{d-1} + 1, t)`.
pub fn path_bound(p: u64, d: u64, t: u64) -> Result<u64> {
    at_least_one(&[("p", p), ("d", d), ("t", t)])?;
    let mut f = t;
    for _ in 1..d {
        let s = f.checked_add(1).ok_or(Error::Overflow("path_bound"))?;
        f = bound_k(p, 1, s, t)?;
    }
    Ok(f)
}

/// `f_1 = t`, `f_d = bound_k(p, (dt)^{2r}, f_{d-1} + 1, t)`.
pub fn broom_bound(p: u64, r: u64, d: u64, t: u64) -> Result<u64> {
    at_least_one(&[("p", p), ("r", r), ("d", d), ("t", t)])?;
    let mut f = t;
    for level in 2..=d {
        let dt = level.checked_mul(t).ok_or(Error::Overflow("broom_bound"))?;
        let q = pow(dt, 2 * r, "broom_bound")?;
        let s = f.checked_add(1).ok_or(Error::Overflow("broom_bound"))?;
        f = bound_k(p, q, s, t)?;
    }
    Ok(f)
}

/// One of the two structures `find_structure` can return.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Structure {
    Balloon(Balloon),
    Biclique(Biclique),
}

impl Validate for Structure {
    fn validate(&self, g: &Graph) -> bool {
        match self {
            Structure::Balloon(b) => b.validate(g),
            Structure::Biclique(b) => b.validate(g),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    InducedCopy(Embedding),
    KdtCopy(KdtCopy),
    BoundedColoring {
        colors: Vec<usize>,
        value: usize,
        stated_bound: u64,
    },
    Balloon(Balloon),
    Biclique(Biclique),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::InducedCopy(_) => "induced_copy",
            Certificate::KdtCopy(_) => "kdt_copy",
            Certificate::BoundedColoring { .. } => "bounded_coloring",
            Certificate::Balloon(_) => "balloon",
            Certificate::Biclique(_) => "biclique",
        }
    }

    fn bounded(coloring: Coloring, stated_bound: u64) -> Self {
        Certificate::BoundedColoring {
            value: coloring.k,
            colors: coloring.colors,
            stated_bound,
        }
    }
}

impl From<Structure> for Certificate {
    fn from(s: Structure) -> Self {
        match s {
            Structure::Balloon(b) => Certificate::Balloon(b),
            Structure::Biclique(b) => Certificate::Biclique(b),
        }
    }
}

impl Validate for Certificate {
    fn validate(&self, g: &Graph) -> bool {
        match self {
            Certificate::InducedCopy(e) => e.validate(g),
            Certificate::KdtCopy(k) => k.validate(g),
            Certificate::BoundedColoring {
                colors,
                value,
                stated_bound,
            } => {
                let col = Coloring {
                    colors: colors.clone(),
                    k: *value,
                };
                col.is_proper(g) && (*value as u64) <= *stated_bound
            }
            Certificate::Balloon(b) => b.validate(g),
            Certificate::Biclique(b) => b.validate(g),
        }
    }
}

fn to_usize(x: u64) -> usize {
    usize::try_from(x).unwrap_or(usize::MAX)
}

/// Whether `χ(G[s]) > bound`.
fn exceeds(g: &Graph, s: VertexSet, bound: u64, budget: &Budget) -> Result<bool> {
    if bound >= s.len() as u64 || greedy_classes(g, s).len() as u64 <= bound {
        return Ok(false);
    }
    chromatic_at_least(g, s, to_usize(bound) + 1, budget)
}

fn checked(g: &Graph, s: Structure, what: &str) -> Result<Structure> {
    if s.validate(g) {
        Ok(s)
    } else {
        Err(Error::ProofStep(format!("{what}: witness fails validation")))
    }
}

fn biclique(g: &Graph, x: VertexSet, y: VertexSet, t: usize, budget: &Budget) -> Result<Biclique> {
    Ok(Biclique {
        x,
        y,
        t,
        value: chromatic_of_subset(g, y, budget)?,
    })
}

fn balloon(g: &Graph, path: Vec<usize>, y: VertexSet, t: usize, budget: &Budget) -> Result<Balloon> {
    let vp = *path.last().expect("nonempty path");
    let z = y.difference(g.neighbors(vp)).without(vp);
    Ok(Balloon {
        path,
        y,
        t,
        value: chromatic_of_subset(g, z, budget)?,
    })
}

/// A `(p,t)`-balloon of value at least `q` or a `t`-biclique of value at
/// least `s`, for a graph with `χ(G) > bound_k(p,q,s,t)`.
pub fn find_structure(
    g: &Graph,
    p: usize,
    q: usize,
    s: usize,
    t: usize,
    budget: &Budget,
) -> Result<Structure> {
    find_structure_in(g, g.vertices(), p, q, s, t, budget)
}

pub fn find_structure_in(
    g: &Graph,
    within: VertexSet,
    p: usize,
    q: usize,
    s: usize,
    t: usize,
    budget: &Budget,
) -> Result<Structure> {
    let bound = bound_k(p as u64, q as u64, s as u64, t as u64)?;
    if !exceeds(g, within, bound, budget)? {
        return Err(Error::Precondition(format!(
            "chromatic number does not exceed bound_k({p},{q},{s},{t}) = {bound}"
        )));
    }
    structure_rec(g, within, p, q, s, t, budget)
}

fn structure_rec(
    g: &Graph,
    within: VertexSet,
    p: usize,
    q: usize,
    s: usize,
    t: usize,
    budget: &Budget,
) -> Result<Structure> {
    if p == 1 {
        return base_case(g, within, q, s, t, budget);
    }
    let qp = to_usize(q_prime(q as u64, s as u64, t as u64)?);
    match structure_rec(g, within, p - 1, qp, s, t, budget)? {
        Structure::Biclique(b) => Ok(Structure::Biclique(b)),
        Structure::Balloon(b) => balloon_step(g, &b, q, s, t, budget),
    }
}

fn base_case(
    g: &Graph,
    within: VertexSet,
    q: usize,
    s: usize,
    t: usize,
    budget: &Budget,
) -> Result<Structure> {
    let chi = chromatic_of_subset(g, within, budget)?;
    let (z, chi_z) = extract_t_connected_in(g, within, t, budget)?.ok_or_else(|| {
        Error::ProofStep("no t-connected induced subgraph despite large chromatic number".into())
    })?;
    if chi_z + 2 * t < chi {
        return Err(Error::ProofStep(format!(
            "t-connected subgraph has chromatic number {chi_z}, expected at least {chi} - 2t"
        )));
    }
    let zs: Vec<usize> = z.iter().take(t).collect();
    for &zi in &zs {
        let xi = z.difference(g.neighbors(zi)).without(zi);
        if chromatic_at_least(g, xi, q, budget)? {
            let b = balloon(g, vec![zi], z, t, budget)?;
            return checked(g, Structure::Balloon(b), "base case balloon");
        }
    }
    let x: VertexSet = zs.iter().collect();
    let y = g.common_neighbors(x).intersection(z);
    let b = biclique(g, x, y, t, budget)?;
    if b.value < s {
        return Err(Error::ProofStep(format!(
            "base case biclique has value {} < {s}",
            b.value
        )));
    }
    checked(g, Structure::Biclique(b), "base case biclique")
}

/// One inductive step: from a `(p-1,t)`-balloon of value at least
/// `q' = s + t(2t+9) + tq`, build a `(p,t)`-balloon of value at least `q`
/// or a `t`-biclique of value at least `s`.
pub fn balloon_step(
    g: &Graph,
    prev: &Balloon,
    q: usize,
    s: usize,
    t: usize,
    budget: &Budget,
) -> Result<Structure> {
    let qp = to_usize(q_prime(q as u64, s as u64, t as u64)?);
    if prev.t != t || prev.value < qp || !prev.validate(g) {
        return Err(Error::invalid(format!(
            "expected a valid (p-1,{t})-balloon of value at least {qp}"
        )));
    }
    let p = prev.p() + 1;
    let vlast = *prev.path.last().expect("nonempty path");
    let y_prev = prev.y;
    let z_prev = prev.z(g);

    let (y, chi_y) = extract_t_connected_in(g, z_prev, 3 * t, budget)?
        .ok_or_else(|| Error::ProofStep("no 3t-connected subgraph in the balloon".into()))?;
    if chi_y + 6 * t < qp {
        return Err(Error::ProofStep(format!(
            "3t-connected subgraph has chromatic number {chi_y} < q' - 6t"
        )));
    }

    let mut x = VertexSet::EMPTY;
    for v in y_prev {
        let far = y.difference(g.neighbors(v)).without(v);
        if !chromatic_at_least(g, far, q + 2 * t, budget)? {
            x.insert(v);
        }
    }

    if x.len() >= t {
        let xs: VertexSet = x.iter().take(t).collect();
        let yb = g.common_neighbors(xs).intersection(y);
        let b = biclique(g, xs, yb, t, budget)?;
        if b.value < s {
            return Err(Error::ProofStep(format!(
                "biclique from the dangerous set has value {} < {s}",
                b.value
            )));
        }
        return checked(g, Structure::Biclique(b), "dangerous-set biclique");
    }

    let path_q = g
        .shortest_path_to(vlast, y, y_prev.difference(x))
        .ok_or_else(|| Error::ProofStep("no path from the balloon tip to Y avoiding X".into()))?;
    let k = path_q.len();
    if k < 3 {
        return Err(Error::ProofStep(format!("connecting path has {k} vertices, expected >= 3")));
    }
    let mut r: Vec<usize> = prev.path.clone();
    r.extend_from_slice(&path_q[1..]);
    let uk = path_q[k - 1];
    let uk1 = path_q[k - 2];
    let y_clean = y.difference(x);
    let nbrs = g.neighbors(uk1).intersection(y_clean);

    let b = if nbrs.len() >= t {
        let without_tip = &r[..r.len() - 1];
        let path = without_tip[without_tip.len() - p..].to_vec();
        balloon(g, path, y_clean.with(uk1), t, budget)?
    } else {
        let n = nbrs.without(uk);
        let path = r[r.len() - p..].to_vec();
        balloon(g, path, y.difference(x.union(n)), t, budget)?
    };
    if b.value < q {
        return Err(Error::ProofStep(format!("step balloon has value {} < {q}", b.value)));
    }
    checked(g, Structure::Balloon(b), "step balloon")
}

/// Result of turning a balloon into a broom.
#[derive(Debug, Clone, PartialEq)]
pub enum BroomOutcome {
    Broom(Embedding),
    /// `G[Y]` has no induced star with `2r` leaves.
    NoStar,
}

/// Builds an induced `broom(p, r)` from a `(p,t)`-balloon whose `Y` holds
/// an induced star with `2r` leaves.
pub fn extract_broom_from_balloon(g: &Graph, b: &Balloon, r: usize) -> Result<BroomOutcome> {
    if r == 0 {
        return Err(Error::invalid("r must be at least 1"));
    }
    if !b.validate(g) {
        return Err(Error::invalid("balloon does not validate"));
    }
    let Some((a, leaves)) = find_induced_star_in(g, b.y, 2 * r) else {
        return Ok(BroomOutcome::NoStar);
    };
    let p = b.p();
    let vp = b.path[p - 1];
    let bs = leaves.to_vec();
    let star = leaves.with(a);
    let spec = PatternSpec::Broom { p, r };

    let last_p = |seq: &[usize]| seq[seq.len() - p..].to_vec();
    let map: Vec<usize> = if vp == a {
        let mut m = b.path.clone();
        m.extend(bs.iter().take(r));
        m
    } else if star.contains(vp) {
        let mut m: Vec<usize> = b.path[1..].to_vec();
        m.push(a);
        m.extend(bs.iter().filter(|&&x| x != vp).take(r));
        m
    } else {
        let q = g
            .shortest_path_to(vp, VertexSet::singleton(a), b.y)
            .ok_or_else(|| Error::ProofStep("star centre unreachable inside Y".into()))?;
        let i = q
            .iter()
            .position(|&v| star.contains(v) || !g.neighbors(v).is_disjoint(star))
            .expect("the path ends at the centre");
        let qi = q[i];
        let mut walk = b.path.clone();
        walk.extend_from_slice(&q[1..=i]);
        let n = g.neighbors(qi).intersection(star);
        let n_leaves = n.without(a);
        let outside: Vec<usize> = bs.iter().copied().filter(|&x| !n.contains(x)).take(r).collect();
        let mut m;
        if n_leaves.len() >= r {
            m = last_p(&walk);
            m.extend(n_leaves.iter().take(r));
        } else if n.contains(a) {
            walk.push(a);
            m = last_p(&walk);
            m.extend(outside);
        } else {
            let bx = n_leaves.first().ok_or_else(|| {
                Error::ProofStep("first vertex touching the star has no neighbour in it".into())
            })?;
            walk.push(bx);
            walk.push(a);
            m = last_p(&walk);
            m.extend(outside);
        }
        m
    };
    let e = Embedding { pattern: spec, map };
    if e.validate(g) {
        Ok(BroomOutcome::Broom(e))
    } else {
        Err(Error::ProofStep("broom built from the balloon is not induced".into()))
    }
}

fn split_into_parts(vertices: &[usize], d: usize, t: usize) -> Vec<VertexSet> {
    (0..d)
        .map(|i| vertices[i * t..(i + 1) * t].iter().collect())
        .collect()
}

fn kdt_result(g: &Graph, parts: Vec<VertexSet>, d: usize, t: usize) -> Result<KdtCopy> {
    let k = KdtCopy { d, t, parts };
    if k.validate(g) {
        Ok(k)
    } else {
        Err(Error::ProofStep("assembled K_d(t) copy does not validate".into()))
    }
}

enum Peeled {
    Parts(Vec<VertexSet>),
    Induced(Embedding),
}

fn last_level(within: VertexSet, t: usize) -> Result<Peeled> {
    if within.len() < t {
        return Err(Error::ProofStep("fewer than t vertices at the last level".into()));
    }
    Ok(Peeled::Parts(vec![within.iter().take(t).collect()]))
}

fn with_part(inner: Peeled, x: VertexSet) -> Peeled {
    match inner {
        Peeled::Parts(mut parts) => {
            parts.insert(0, x);
            Peeled::Parts(parts)
        }
        found => found,
    }
}

fn peeled_certificate(g: &Graph, peeled: Peeled, d: usize, t: usize) -> Result<Certificate> {
    match peeled {
        Peeled::Parts(parts) => Ok(Certificate::KdtCopy(kdt_result(g, parts, d, t)?)),
        Peeled::Induced(e) if e.validate(g) => Ok(Certificate::InducedCopy(e)),
        Peeled::Induced(_) => Err(Error::ProofStep("induced copy does not validate".into())),
    }
}

/// Path pipeline: an induced `P_p`, a `K_d(t)` subgraph, or a colouring with
/// at most `path_bound(p, d, t)` colours.
///
/// Above the bound the proof is run: bicliques of value `F_{d-1} + 1` are
/// peeled until `d = 1`, and a balloon of value 1 met on the way yields the
/// induced path. Otherwise an exhaustive `K_d(t)` search, then an induced
/// path search, then an optimal colouring.
pub fn certify_path_theorem(
    g: &Graph,
    p: usize,
    d: usize,
    t: usize,
    budget: &Budget,
) -> Result<Certificate> {
    let bound = path_bound(p as u64, d as u64, t as u64)?;
    if exceeds(g, g.vertices(), bound, budget)? {
        let peeled = path_peel(g, g.vertices(), p, d, t, budget)?;
        return peeled_certificate(g, peeled, d, t);
    }
    finish(g, &PatternSpec::Path(p), d, t, bound, budget)
}

fn path_peel(
    g: &Graph,
    within: VertexSet,
    p: usize,
    d: usize,
    t: usize,
    budget: &Budget,
) -> Result<Peeled> {
    if d == 1 {
        return last_level(within, t);
    }
    let s = to_usize(path_bound(p as u64, d as u64 - 1, t as u64)?) + 1;
    match find_structure_in(g, within, p, 1, s, t, budget)? {
        Structure::Balloon(b) => Ok(Peeled::Induced(Embedding {
            pattern: PatternSpec::Path(p),
            map: b.path,
        })),
        Structure::Biclique(b) => Ok(with_part(path_peel(g, b.y, p, d - 1, t, budget)?, b.x)),
    }
}

/// Broom pipeline: an induced `broom(p, r)`, a `K_d(t)` subgraph, or a
/// colouring with at most `broom_bound(p, r, d, t)` colours.
///
/// Above the bound: a clique of size `dt` is split into parts; otherwise
/// the structure search runs with balloon value `(dt)^{2r}`, a balloon is
/// turned into a broom, and a biclique is peeled as in the path pipeline.
pub fn certify_broom_theorem(
    g: &Graph,
    p: usize,
    r: usize,
    d: usize,
    t: usize,
    budget: &Budget,
) -> Result<Certificate> {
    let bound = broom_bound(p as u64, r as u64, d as u64, t as u64)?;
    if exceeds(g, g.vertices(), bound, budget)? {
        let peeled = broom_peel(g, g.vertices(), p, r, d, t, budget)?;
        return peeled_certificate(g, peeled, d, t);
    }
    finish(g, &PatternSpec::Broom { p, r }, d, t, bound, budget)
}

fn broom_peel(
    g: &Graph,
    within: VertexSet,
    p: usize,
    r: usize,
    d: usize,
    t: usize,
    budget: &Budget,
) -> Result<Peeled> {
    if d == 1 {
        return last_level(within, t);
    }
    let clique = max_clique_in(g, within, budget)?;
    if clique.len() >= d * t {
        return Ok(Peeled::Parts(split_into_parts(&clique.to_vec(), d, t)));
    }
    let q = to_usize(pow((d * t) as u64, 2 * r as u64, "broom value")?);
    let s = to_usize(broom_bound(p as u64, r as u64, d as u64 - 1, t as u64)?) + 1;
    match find_structure_in(g, within, p, q, s, t, budget)? {
        Structure::Balloon(b) => match extract_broom_from_balloon(g, &b, r)? {
            BroomOutcome::Broom(e) => Ok(Peeled::Induced(e)),
            BroomOutcome::NoStar => Err(Error::ProofStep(
                "balloon of large value has no induced star although ω < dt".into(),
            )),
        },
        Structure::Biclique(b) => {
            Ok(with_part(broom_peel(g, b.y, p, r, d - 1, t, budget)?, b.x))
        }
    }
}

fn finish(
    g: &Graph,
    h: &PatternSpec,
    d: usize,
    t: usize,
    bound: u64,
    budget: &Budget,
) -> Result<Certificate> {
    if d * t <= g.n() {
        if let Some(k) = contains_subgraph_kdt(g, d, t, budget)? {
            return Ok(Certificate::KdtCopy(k));
        }
    }
    if let Some(e) = contains_induced(g, h, budget)? {
        return Ok(Certificate::InducedCopy(e));
    }
    let (chi, coloring) = chromatic_number(g, budget)?;
    if chi as u64 > bound {
        return Err(Error::ProofStep(format!(
            "chromatic number {chi} exceeds the bound {bound} without a certificate"
        )));
    }
    Ok(Certificate::bounded(coloring, bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn gen(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn bound_values() {
        assert_eq!(bound_k(1, 1, 1, 1).unwrap(), 13);
        assert_eq!(bound_k(2, 1, 1, 2).unwrap(), 85);
        assert_eq!(q_prime(2, 1, 2).unwrap(), 31);
        assert_eq!(bound_k(3, 2, 1, 2).unwrap(), 205);
        assert_eq!(bound_k(2, 31, 1, 2).unwrap(), 205);
        assert_eq!(path_bound(1, 2, 1).unwrap(), 14);
        assert_eq!(broom_bound(1, 1, 2, 1).unwrap(), 17);
        for t in 1..6 {
            assert_eq!(path_bound(3, 1, t).unwrap(), t);
            assert_eq!(broom_bound(3, 2, 1, t).unwrap(), t);
        }
        assert!(matches!(bound_k(0, 1, 1, 1), Err(Error::InvalidArgument(_))));
        assert!(matches!(bound_k(60, 1, 1, 3), Err(Error::Overflow(_))));
    }

    #[test]
    fn complete_graph_gives_biclique() {
        let b = Budget::unlimited();
        let k14 = gen("complete:14");
        match find_structure(&k14, 1, 1, 1, 1, &b).unwrap() {
            Structure::Biclique(bc) => {
                assert_eq!(bc.value, 13);
                assert!(bc.validate(&k14));
            }
            other => panic!("{other:?}"),
        }
        let k26 = gen("complete:26");
        assert!(matches!(find_structure(&k26, 2, 1, 1, 1, &b).unwrap(), Structure::Biclique(_)));
        assert!(matches!(
            find_structure(&gen("complete:13"), 1, 1, 1, 1, &b),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn path_pipeline_examples() {
        let b = Budget::unlimited();
        let c9 = gen("cycle:9");
        let c = certify_path_theorem(&c9, 5, 2, 2, &b).unwrap();
        assert_eq!(c.kind(), "induced_copy");
        assert!(c.validate(&c9));
        let k222 = gen("complete_multipartite:3:2");
        let c = certify_path_theorem(&k222, 4, 3, 2, &b).unwrap();
        assert_eq!(c.kind(), "kdt_copy");
        assert!(c.validate(&k222));
        let k3 = gen("complete:3");
        let c = certify_path_theorem(&k3, 4, 2, 2, &b).unwrap();
        assert!(matches!(c, Certificate::BoundedColoring { value: 3, .. }));
        assert!(c.validate(&k3));
    }

    #[test]
    fn broom_pipeline_examples() {
        let b = Budget::unlimited();
        let star = gen("star:5");
        let c = certify_broom_theorem(&star, 1, 3, 2, 2, &b).unwrap();
        assert_eq!(c.kind(), "induced_copy");
        assert!(c.validate(&star));
        let k222 = gen("complete_multipartite:3:2");
        let c = certify_broom_theorem(&k222, 2, 1, 3, 2, &b).unwrap();
        assert_eq!(c.kind(), "kdt_copy");
        let k3 = gen("complete:3");
        let c = certify_broom_theorem(&k3, 2, 2, 2, 2, &b).unwrap();
        assert_eq!(c.kind(), "bounded_coloring");
        assert!(c.validate(&k3));
    }

    #[test]
    fn broom_from_hand_built_balloon() {
        let g = gen("broom:3:2");
        let bl = Balloon {
            path: vec![0, 1],
            y: [1, 2, 3, 4].iter().collect(),
            t: 1,
            value: 1,
        };
        assert!(bl.validate(&g));
        match extract_broom_from_balloon(&g, &bl, 1).unwrap() {
            BroomOutcome::Broom(e) => {
                assert_eq!(e.pattern, PatternSpec::Broom { p: 2, r: 1 });
                assert!(e.validate(&g));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn broom_outcomes_on_small_balloons() {
        let k4 = gen("complete:4");
        let bl = Balloon {
            path: vec![0],
            y: k4.vertices(),
            t: 1,
            value: 0,
        };
        assert_eq!(extract_broom_from_balloon(&k4, &bl, 1).unwrap(), BroomOutcome::NoStar);
        let c5 = gen("cycle:5");
        let bl = Balloon {
            path: vec![0],
            y: c5.vertices(),
            t: 1,
            value: 2,
        };
        let BroomOutcome::Broom(e) = extract_broom_from_balloon(&c5, &bl, 1).unwrap() else {
            panic!()
        };
        assert!(e.validate(&c5));
    }

    #[test]
    fn certificate_json_shape() {
        let k3 = gen("complete:3");
        let c = certify_path_theorem(&k3, 4, 2, 2, &Budget::unlimited()).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["kind"], "bounded_coloring");
        assert_eq!(v["value"], 3);
        assert_eq!(v["stated_bound"], path_bound(4, 2, 2).unwrap());
    }
}
