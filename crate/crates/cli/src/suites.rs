//! Bundled verification suites. Each suite checks a list of properties over
//! exhaustively enumerated or generated graphs and reports a status per
//! property, with the first counterexample in graph6.

use std::fmt;
use std::str::FromStr;

use chi_certify::certify::{bound_k, broom_bound, find_structure, path_bound, q_prime};
use chi_certify::chromatic::{chromatic_number, chromatic_of_subset, clique_number};
use chi_certify::connectivity::{extract_t_connected_in, is_t_connected_set};
use chi_certify::graph::{enumerate_graphs, to_graph6, GeneratorSpec};
use chi_certify::partition::{
    is_class_free, join_witness, near_esperet, one_maps, partition_bound,
    neighbourhood_measure_violations, s_map_violations, union_witness, ClassTable, Classes,
    GoodTag, GraphClass, MeasureTable,
};
use chi_certify::patterns::{contains_induced, find_balloon, find_t_biclique, PatternSpec, Validate};
use chi_certify::{Budget, Error, Graph, Result, VertexSet};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub status: Status,
    pub checked: u64,
    pub failures: u64,
    pub skipped: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub detail: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub properties: Vec<PropertyReport>,
}

impl SuiteReport {
    pub fn status(&self) -> Status {
        let all = self.properties.iter().map(|p| p.status);
        if all.clone().any(|s| s == Status::Fail) {
            Status::Fail
        } else if all.clone().any(|s| s == Status::Skipped) {
            Status::Skipped
        } else {
            Status::Pass
        }
    }

    pub fn property(&self, name: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.name == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Extraction,
    Structure,
    StarFree,
    Partition,
    BoundsIdentities,
    NearEsperet,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Extraction,
        Suite::Structure,
        Suite::StarFree,
        Suite::Partition,
        Suite::BoundsIdentities,
        Suite::NearEsperet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Extraction => "thm2_1",
            Suite::Structure => "thm2_3",
            Suite::StarFree => "thm3_1",
            Suite::Partition => "sec4_statements",
            Suite::BoundsIdentities => "bounds_identities",
            Suite::NearEsperet => "near_esperet",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    /// Largest enumerated graph order (at most 7).
    pub max_n: usize,
    pub budget_ms: Option<u64>,
    pub node_limit: Option<u64>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_n: 7,
            budget_ms: None,
            node_limit: None,
        }
    }
}

impl SuiteOptions {
    pub fn budget(&self) -> Budget {
        Budget::new(
            self.node_limit,
            self.budget_ms.map(std::time::Duration::from_millis),
        )
    }
}

pub struct Tally {
    name: String,
    checked: u64,
    failures: u64,
    skipped: u64,
    counterexample: Option<String>,
    detail: Vec<String>,
}

impl Tally {
    pub fn new(name: &str) -> Self {
        Tally {
            name: name.to_string(),
            checked: 0,
            failures: 0,
            skipped: 0,
            counterexample: None,
            detail: Vec::new(),
        }
    }

    pub fn record(&mut self, outcome: Result<bool>, g: &Graph) {
        match outcome {
            Ok(true) => self.checked += 1,
            Ok(false) => self.fail(g, None),
            Err(Error::BudgetExhausted) => self.skipped += 1,
            Err(e) => self.fail(g, Some(e.to_string())),
        }
    }

    pub fn fail(&mut self, g: &Graph, note: Option<String>) {
        self.checked += 1;
        self.failures += 1;
        if self.counterexample.is_none() {
            self.counterexample = Some(to_graph6(g));
            if let Some(n) = note {
                self.detail.push(n);
            }
        }
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.detail.push(line.into());
    }

    pub fn finish(self) -> PropertyReport {
        let status = if self.failures > 0 {
            Status::Fail
        } else if self.skipped > 0 {
            Status::Skipped
        } else {
            Status::Pass
        };
        PropertyReport {
            name: self.name,
            status,
            checked: self.checked,
            failures: self.failures,
            skipped: self.skipped,
            counterexample: self.counterexample,
            detail: self.detail,
        }
    }
}

/// Every graph with `lo <= n <= hi` vertices up to isomorphism.
pub fn graphs_between(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo.max(1)..=hi {
        out.extend(enumerate_graphs(n)?);
    }
    Ok(out)
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    let properties = match suite {
        Suite::Extraction => vec![extraction_contract(opts)?, extraction_optimal(opts)?],
        Suite::Structure => vec![hypothesis_bound(opts)?, dense_dichotomy(opts)?],
        Suite::StarFree => vec![star_free_bound(opts)?],
        Suite::Partition => {
            let mut v = partition_claims(opts)?;
            v.push(measure_is_chromatic(opts)?);
            v
        }
        Suite::BoundsIdentities => bounds_identities()?,
        Suite::NearEsperet => vec![near_esperet_grid(NEAR_ESPERET_D_MAX)],
    };
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        properties,
    })
}

/// For `n` in `4..=max_n`, `t` in `{1, 2}` and `χ(G) >= 4t`: the extracted
/// set is `t`-connected with `χ >= χ(G) - 2t`.
pub fn extraction_contract(opts: &SuiteOptions) -> Result<PropertyReport> {
    let mut tally = Tally::new("t-connected extraction keeps chi - 2t");
    for g in graphs_between(4, opts.max_n)? {
        let (chi, _) = chromatic_number(&g, &Budget::unlimited())?;
        for t in 1..=2 {
            if chi < 4 * t {
                continue;
            }
            let budget = opts.budget();
            let outcome = extract_t_connected_in(&g, g.vertices(), t, &budget).map(|r| match r {
                Some((s, val)) => {
                    is_t_connected_set(&g, s, t)
                        && val + 2 * t >= chi
                        && chromatic_of_subset(&g, s, &Budget::unlimited()).ok() == Some(val)
                }
                None => false,
            });
            tally.record(outcome, &g);
        }
    }
    Ok(tally.finish())
}

fn naive_t_connected(g: &Graph, s: VertexSet, t: usize) -> bool {
    if s.len() <= t {
        return false;
    }
    (0..t).all(|m| s.subsets_of_size(m).all(|r| g.is_connected_set(s.difference(r))))
}

/// The extracted value equals the best `χ` over all `t`-connected induced
/// subgraphs found by a plain scan of every subset.
pub fn extraction_optimal(opts: &SuiteOptions) -> Result<PropertyReport> {
    let mut tally = Tally::new("t-connected extraction is optimal");
    let unlimited = Budget::unlimited();
    for g in graphs_between(1, opts.max_n.min(6))? {
        for t in 1..=2 {
            let mut best = 0;
            for bits in 0..(1u64 << g.n()) {
                let s = VertexSet::from_bits(bits);
                if naive_t_connected(&g, s, t) {
                    best = best.max(chromatic_of_subset(&g, s, &unlimited)?);
                }
            }
            let budget = opts.budget();
            let outcome = extract_t_connected_in(&g, g.vertices(), t, &budget)
                .map(|r| r.map_or(0, |(_, v)| v) == best);
            tally.record(outcome, &g);
        }
    }
    Ok(tally.finish())
}

/// Whenever no `(p,t)`-balloon of value `>= q` and no `t`-biclique of value
/// `>= s` exist, `χ(G) <= bound_k(p,q,s,t)`.
pub fn hypothesis_bound(opts: &SuiteOptions) -> Result<PropertyReport> {
    let mut tally = Tally::new("no balloon and no biclique implies chi <= bound_k");
    let mut premise_held = 0u64;
    for g in graphs_between(1, opts.max_n)? {
        let (chi, _) = chromatic_number(&g, &Budget::unlimited())?;
        for (p, q, s, t) in unit_grid() {
            let budget = opts.budget();
            let outcome = (|| -> Result<bool> {
                let bound = bound_k(p as u64, q as u64, s as u64, t as u64)?;
                if let Some(b) = find_balloon(&g, p, t, q, &budget)? {
                    return Ok(b.validate(&g) && b.value >= q);
                }
                if let Some(b) = find_t_biclique(&g, t, s, &budget)? {
                    return Ok(b.validate(&g) && b.value >= s);
                }
                premise_held += 1;
                Ok(chi as u64 <= bound)
            })();
            tally.record(outcome, &g);
        }
    }
    tally.note(format!("instances with neither structure: {premise_held}"));
    Ok(tally.finish())
}

/// `(p, q, s, t)` over `{1, 2}^4`.
pub fn unit_grid() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..16).map(|i| (1 + (i & 1), 1 + ((i >> 1) & 1), 1 + ((i >> 2) & 1), 1 + ((i >> 3) & 1)))
}

/// `K_n` minus a perfect matching (`n` even).
pub fn complete_minus_matching(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !(u % 2 == 0 && v == u + 1) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// The dense family for the structure search: complete graphs `K_14..K_20`,
/// `K_n` minus a perfect matching for even `n` up to 64, and `K_14` with
/// pendant paths.
pub fn dense_family() -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for n in 14..=20 {
        out.push((format!("complete:{n}"), chi_certify::graph::generate(&GeneratorSpec::Complete(n))?));
    }
    for n in (28..=64).step_by(2) {
        out.push((format!("complete_minus_matching:{n}"), complete_minus_matching(n)?));
    }
    let k14 = chi_certify::graph::generate(&GeneratorSpec::Complete(14))?;
    for len in 1..=4 {
        out.push((format!("complete:14+pendant:{len}"), k14.with_pendant_path(0, len)?));
    }
    out.push((
        "complete:14+pendant:2+pendant:3".to_string(),
        k14.with_pendant_path(0, 2)?.with_pendant_path(1, 3)?,
    ));
    Ok(out)
}

/// On the dense family, every parameter choice in `{1,2}^4` with
/// `χ(G) > bound_k` yields a witness that validates and meets its value.
pub fn dense_dichotomy(opts: &SuiteOptions) -> Result<PropertyReport> {
    let mut tally = Tally::new("find_structure witness validates above bound_k");
    let mut kinds = [0u64; 2];
    for (_, g) in dense_family()? {
        let (chi, _) = chromatic_number(&g, &Budget::unlimited())?;
        for (p, q, s, t) in unit_grid() {
            let bound = bound_k(p as u64, q as u64, s as u64, t as u64)?;
            if chi as u64 <= bound {
                continue;
            }
            let budget = opts.budget();
            let outcome = find_structure(&g, p, q, s, t, &budget).map(|st| {
                use chi_certify::certify::Structure;
                match &st {
                    Structure::Balloon(b) => {
                        kinds[0] += 1;
                        st.validate(&g) && b.p() == p && b.t == t && b.value >= q
                    }
                    Structure::Biclique(b) => {
                        kinds[1] += 1;
                        st.validate(&g) && b.t == t && b.value >= s
                    }
                }
            });
            tally.record(outcome, &g);
        }
    }
    tally.note(format!("balloons: {}, bicliques: {}", kinds[0], kinds[1]));
    Ok(tally.finish())
}

/// For `k` in `{2, 3}`, `S_k`-free graphs have `χ <= ω^k`.
pub fn star_free_bound(opts: &SuiteOptions) -> Result<PropertyReport> {
    let mut tally = Tally::new("S_k-free implies chi <= omega^k");
    let stars = [PatternSpec::Star(2), PatternSpec::Star(3)];
    let mut premise_held = 0u64;
    for g in graphs_between(1, opts.max_n)? {
        for (i, star) in stars.iter().enumerate() {
            let k = i as u32 + 2;
            let budget = opts.budget();
            let outcome = (|| -> Result<bool> {
                if contains_induced(&g, star, &budget)?.is_some() {
                    return Ok(true);
                }
                premise_held += 1;
                let (chi, _) = chromatic_number(&g, &budget)?;
                let (omega, _) = clique_number(&g, &budget)?;
                Ok(chi <= omega.pow(k))
            })();
            tally.record(outcome, &g);
        }
    }
    tally.note(format!("star-free instances: {premise_held}"));
    Ok(tally.finish())
}

/// `{P3}`, `{K2}`, `{2K2}` and the `K_d(t)` classes with `d, t <= 2`.
pub fn small_classes() -> Result<Vec<GraphClass>> {
    let mut out = vec![
        GraphClass::single("P3", chi_certify::graph::generate(&GeneratorSpec::Path(3))?)?,
        GraphClass::single("K2", chi_certify::graph::generate(&GeneratorSpec::Complete(2))?)?,
        GraphClass::single("2K2", Graph::from_edges(4, &[(0, 1), (2, 3)])?)?,
    ];
    for d in 1..=2 {
        for t in 1..=2 {
            out.push(GraphClass::kdt(d, t)?);
        }
    }
    Ok(out)
}

pub const ONE_MAPS: &str = "no 1-map is 2-general";
pub const S_MAPS: &str = "no s-map is k^(s-1)-general";
pub const NEIGHBOURHOOD_MEASURE: &str = "mu(N(v)) or mu(M(v)) below s*k^(s-1)";
pub const PARTITION_BOUND: &str = "good partition within s*k^s+3 parts";
pub const MEASURE_IS_CHI: &str = "measure with all classes {K2} equals chi";

#[derive(Default)]
struct SplitCount {
    s_one: u64,
    s_more: u64,
}

impl SplitCount {
    fn add(&mut self, s: usize) {
        if s == 1 {
            self.s_one += 1;
        } else {
            self.s_more += 1;
        }
    }
}

/// Checks the 1-map, s-map and neighbourhood measure claims and the partition bound over every
/// hypothesis-satisfying instance: graphs on at most `min(max_n, 6)`
/// vertices, each class drawn from [`small_classes`], and the least
/// admissible `k`.
pub fn partition_claims(opts: &SuiteOptions) -> Result<Vec<PropertyReport>> {
    let classes = small_classes()?;
    let c = classes.len();
    let mut one = Tally::new(ONE_MAPS);
    let mut two = Tally::new(S_MAPS);
    let mut three = Tally::new(NEIGHBOURHOOD_MEASURE);
    let mut part = Tally::new(PARTITION_BOUND);
    let mut instances = SplitCount::default();
    let mut two_bad = SplitCount::default();
    let mut three_bad = SplitCount::default();
    let unlimited = Budget::unlimited();
    for g in graphs_between(1, opts.max_n.min(6))? {
        let tables = classes
            .iter()
            .map(|cl| ClassTable::new(&g, cl, &unlimited))
            .collect::<Result<Vec<_>>>()?;
        let maps = classes
            .iter()
            .map(|cl| one_maps(&g, &cl.representative, &unlimited))
            .collect::<Result<Vec<_>>>()?;
        for idx in 0..c * c * c * c {
            let ix = [idx % c, (idx / c) % c, (idx / (c * c)) % c, idx / (c * c * c)];
            let quad = Classes::new(
                classes[ix[0]].clone(),
                classes[ix[1]].clone(),
                classes[ix[2]].clone(),
                classes[ix[3]].clone(),
            );
            if quad.as_array().iter().all(|cl| cl.min_size < 2) {
                continue;
            }
            let k = quad.minimal_k().expect("bounded classes");
            if union_witness(&g, &tables[ix[0]], &tables[ix[1]]).is_some()
                || join_witness(&g, &tables[ix[2]], &tables[ix[3]]).is_some()
            {
                continue;
            }
            let s = quad.s();
            instances.add(s);
            let budget = opts.budget();
            let table = MeasureTable::from_tables(
                &g,
                [&tables[ix[0]], &tables[ix[1]], &tables[ix[2]], &tables[ix[3]]],
                &budget,
            );
            let table = match table {
                Ok(t) => t,
                Err(e) => {
                    for tally in [&mut one, &mut two, &mut three, &mut part] {
                        tally.record(Err(e.clone()), &g);
                    }
                    continue;
                }
            };
            let s_graph = &quad.h1.representative;
            let outcome = maps[ix[0]].iter().try_fold(true, |ok, phi| {
                Ok::<_, Error>(ok && chi_certify::partition::is_general(&g, s_graph, phi, 2, &table, &budget)?.is_none())
            });
            tally_with(&mut one, outcome, &g, &quad, k);

            let outcome = s_map_violations(&g, s_graph, k, &table, &budget).map(|v| v.is_empty());
            if outcome == Ok(false) {
                two_bad.add(s);
            }
            tally_with(&mut two, outcome, &g, &quad, k);

            let outcome = neighbourhood_measure_violations(&g, s, k, &table).map(|v| v.is_empty());
            if outcome == Ok(false) {
                three_bad.add(s);
            }
            tally_with(&mut three, outcome, &g, &quad, k);

            let outcome = (|| -> Result<bool> {
                let bound = partition_bound(s, k)?;
                let parts = table.optimal_parts(g.vertices())?;
                let mut ok = parts.len() as u64 <= bound;
                for p in &parts {
                    let class = match table.tag(*p) {
                        Some(GoodTag::H1Free) => &quad.h1,
                        Some(GoodTag::H2Free) => &quad.h2,
                        Some(GoodTag::J1Free) => &quad.j1,
                        Some(GoodTag::J2Free) => &quad.j2,
                        None => return Ok(false),
                    };
                    ok &= is_class_free(&g, *p, class, &budget)?;
                }
                Ok(ok)
            })();
            tally_with(&mut part, outcome, &g, &quad, k);
        }
    }
    let header = format!(
        "hypothesis-satisfying instances: {} with s = 1, {} with s >= 2",
        instances.s_one, instances.s_more
    );
    for (tally, bad) in [(&mut two, &two_bad), (&mut three, &three_bad)] {
        tally.note(format!(
            "violations: {} with s = 1, {} with s >= 2",
            bad.s_one, bad.s_more
        ));
    }
    for tally in [&mut one, &mut two, &mut three, &mut part] {
        tally.note(header.clone());
    }
    Ok(vec![one.finish(), two.finish(), three.finish(), part.finish()])
}

fn tally_with(tally: &mut Tally, outcome: Result<bool>, g: &Graph, quad: &Classes, k: usize) {
    if outcome == Ok(false) && tally.counterexample.is_none() {
        tally.note(format!(
            "first counterexample: H1={}, H2={}, J1={}, J2={}, k={k}",
            quad.h1.name, quad.h2.name, quad.j1.name, quad.j2.name
        ));
    }
    tally.record(outcome, g);
}

/// With all four classes `{K2}`, `μ(V(G)) = χ(G)`.
pub fn measure_is_chromatic(opts: &SuiteOptions) -> Result<PropertyReport> {
    let mut tally = Tally::new(MEASURE_IS_CHI);
    let k2 = Classes::uniform(GraphClass::single(
        "K2",
        chi_certify::graph::generate(&GeneratorSpec::Complete(2))?,
    )?);
    for g in graphs_between(1, opts.max_n)? {
        let budget = opts.budget();
        let outcome = (|| -> Result<bool> {
            let mu = MeasureTable::new(&g, &k2, &budget)?.measure(g.vertices())?;
            let (chi, _) = chromatic_number(&g, &budget)?;
            Ok(mu == chi)
        })();
        tally.record(outcome, &g);
    }
    Ok(tally.finish())
}

/// `Σ_{i<p} t^i (s + t(2t+9)) + t^p q`, evaluated in `u128`.
fn bound_k_reference(p: u64, q: u64, s: u64, t: u64) -> u128 {
    let (q, s, t) = (q as u128, s as u128, t as u128);
    let geometric = if t == 1 {
        p as u128
    } else {
        (t.pow(p as u32) - 1) / (t - 1)
    };
    geometric * (s + t * (2 * t + 9)) + t.pow(p as u32) * q
}

pub const BOUND_FORMULA: &str = "bound_k matches its closed form";
pub const BOUND_TELESCOPING: &str = "bound_k(p-1, q', s, t) = bound_k(p, q, s, t)";

pub fn bounds_identities() -> Result<Vec<PropertyReport>> {
    let dummy = Graph::empty(0)?;
    let mut formula = Tally::new(BOUND_FORMULA);
    let mut tele = Tally::new(BOUND_TELESCOPING);
    for p in 1..=5u64 {
        for q in 1..=5u64 {
            for s in 1..=5u64 {
                for t in 1..=5u64 {
                    formula.record(
                        bound_k(p, q, s, t).map(|b| b as u128 == bound_k_reference(p, q, s, t)),
                        &dummy,
                    );
                    if p >= 2 {
                        tele.record(
                            (|| -> Result<bool> { Ok(bound_k(p - 1, q_prime(q, s, t)?, s, t)? == bound_k(p, q, s, t)?) })(),
                            &dummy,
                        );
                    }
                }
            }
        }
    }
    let mut rec = Tally::new("path_bound and broom_bound recursions");
    for p in 1..=4u64 {
        for t in 1..=3u64 {
            for d in 2..=3u64 {
                rec.record(
                    (|| -> Result<bool> { Ok(path_bound(p, d, t)? == bound_k(p, 1, path_bound(p, d - 1, t)? + 1, t)?) })(),
                    &dummy,
                );
                for r in 1..=2u64 {
                    rec.record(
                        (|| -> Result<bool> {
                            let q = (d * t).pow(2 * r as u32);
                            let prev = broom_bound(p, r, d - 1, t)?;
                            Ok(broom_bound(p, r, d, t)? == bound_k(p, q, prev + 1, t)?)
                        })(),
                        &dummy,
                    );
                }
            }
            rec.record(path_bound(p, 1, t).map(|f| f == t), &dummy);
        }
    }
    Ok(vec![formula.finish(), tele.finish(), rec.finish()])
}

pub const NEAR_ESPERET_D_MAX: u64 = 1_000_000;
pub const NEAR_ESPERET_GRID: [f64; 5] = [0.0, 0.5, 1.0, 2.0, 5.0];

/// Both inequalities for every `d` in `2..=d_max` and `b, c0` on the grid.
pub fn near_esperet_grid(d_max: u64) -> PropertyReport {
    let mut tally = Tally::new("near-Esperet inequalities hold");
    let dummy = Graph::empty(0).expect("null graph");
    for &b in &NEAR_ESPERET_GRID {
        for &c0 in &NEAR_ESPERET_GRID {
            let mut bad = None;
            let mut count = 0u64;
            for d in 2..=d_max {
                count += 1;
                if !near_esperet(b, c0, d).is_ok_and(|r| r.holds()) {
                    bad.get_or_insert(d);
                }
            }
            match bad {
                None => tally.checked += count,
                Some(d) => {
                    tally.fail(&dummy, Some(format!("b={b}, c0={c0}, d={d}")));
                    tally.checked += count - 1;
                }
            }
        }
    }
    tally.finish()
}
