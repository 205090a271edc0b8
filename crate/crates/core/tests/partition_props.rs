mod common;

use chi_certify::graph::generate;
use chi_certify::partition::{
    good_partition, join_k, measure, near_esperet, partition_bound, union_bound, Classes,
    GraphClass, MeasureTable,
};
use chi_certify::{Budget, Error, Graph, VertexSet};
use common::*;
use proptest::prelude::*;

fn gen(s: &str) -> Graph {
    generate(&s.parse().unwrap()).unwrap()
}

fn budget() -> Budget {
    Budget::unlimited()
}

#[derive(Clone)]
enum Naive {
    Iso(Graph),
    Kdt(usize, usize),
}

impl Naive {
    fn class(&self, name: &str) -> GraphClass {
        match self {
            Naive::Iso(h) => GraphClass::single(name, h.clone()).unwrap(),
            Naive::Kdt(d, t) => GraphClass::kdt(*d, *t).unwrap(),
        }
    }

    fn size(&self) -> usize {
        match self {
            Naive::Iso(h) => h.n(),
            Naive::Kdt(d, t) => d * t,
        }
    }

    fn matches(&self, g: &Graph, s: VertexSet) -> bool {
        let (sub, _) = g.induced(s);
        match self {
            Naive::Iso(h) => permutations(h.n()).iter().any(|p| {
                h.edges().all(|(u, v)| sub.has_edge(p[u], p[v]))
                    && sub.edge_count() == h.edge_count()
            }),
            Naive::Kdt(d, t) => has_kdt(&sub, *d, *t),
        }
    }

    fn free(&self, g: &Graph, block: VertexSet) -> bool {
        block
            .subsets_of_size(self.size())
            .all(|s| !self.matches(g, s))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Fewest blocks over all set partitions, each block free of some class.
fn naive_measure(g: &Graph, classes: &[Naive; 4]) -> Option<usize> {
    fn go(
        g: &Graph,
        classes: &[Naive; 4],
        v: usize,
        blocks: &mut Vec<VertexSet>,
        best: &mut Option<usize>,
    ) {
        if best.is_some_and(|b| blocks.len() >= b) && v < g.n() {
            return;
        }
        if v == g.n() {
            let ok = blocks
                .iter()
                .all(|&b| classes.iter().any(|c| c.free(g, b)));
            if ok && best.is_none_or(|b| blocks.len() < b) {
                *best = Some(blocks.len());
            }
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].insert(v);
            go(g, classes, v + 1, blocks, best);
            blocks[i].remove(v);
        }
        blocks.push(VertexSet::singleton(v));
        go(g, classes, v + 1, blocks, best);
        blocks.pop();
    }
    let mut best = None;
    go(g, classes, 0, &mut Vec::new(), &mut best);
    best
}

fn family(naive: &[Naive; 4]) -> Classes {
    Classes::new(
        naive[0].class("h1"),
        naive[1].class("h2"),
        naive[2].class("j1"),
        naive[3].class("j2"),
    )
}

fn two_k2() -> Graph {
    Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
}

fn families() -> Vec<[Naive; 4]> {
    let iso = |s: &str| Naive::Iso(gen(s));
    vec![
        [iso("complete:2"), iso("complete:2"), iso("complete:2"), iso("complete:2")],
        [iso("path:3"), iso("path:3"), iso("complete:2"), iso("complete:2")],
        [iso("path:3"), Naive::Iso(two_k2()), iso("complete:3"), iso("path:4")],
        [Naive::Kdt(2, 2), iso("path:3"), Naive::Kdt(3, 1), Naive::Iso(two_k2())],
        [Naive::Kdt(1, 1), Naive::Kdt(1, 1), Naive::Kdt(1, 1), iso("complete:2")],
    ]
}

#[test]
fn measure_matches_set_partitions() {
    for naive in families() {
        let classes = family(&naive);
        for g in all_graphs(1, 6) {
            let table = MeasureTable::new(&g, &classes, &budget()).unwrap();
            let got = match table.measure(g.vertices()) {
                Ok(m) => Some(m),
                Err(Error::Infeasible) => None,
                Err(e) => panic!("{e}"),
            };
            assert_eq!(got, naive_measure(&g, &naive), "{:?}", g);
            if got.is_some() {
                let parts = table.optimal_parts(g.vertices()).unwrap();
                assert_eq!(Some(parts.len()), got);
                for p in parts {
                    assert!(naive.iter().any(|c| c.free(&g, p)));
                }
            }
        }
    }
}

#[test]
fn complete_two_classes_give_chromatic_number() {
    let classes = family(&families()[0]);
    for g in all_graphs(1, 6) {
        let chi = chi_table(&g);
        assert_eq!(
            measure(&g, g.vertices(), &classes, &budget()).unwrap(),
            chi_of(&chi, g.vertices())
        );
    }
}

#[test]
fn five_cycle_partition() {
    let c5 = gen("cycle:5");
    let naive = families()[1].clone();
    let classes = family(&naive);
    let part = good_partition(&c5, &classes, 5, &budget()).unwrap();
    assert_eq!(Some(part.parts.len()), naive_measure(&c5, &naive));
    assert_eq!(part.parts.len(), 2);
    assert!(part.validate(&c5, &classes, &budget()).unwrap());
    let json = serde_json::to_value(&part).unwrap();
    assert_eq!(json["bound"], 3 * 125 + 3);
    let parts = json["parts"].as_array().unwrap();
    assert_eq!(parts.len(), 2);
    for p in parts {
        assert!(p["vertices"].as_array().unwrap().iter().all(|v| v.is_u64()));
        assert!(["H1-free", "H2-free", "J1-free", "J2-free"].contains(&p["good_as"].as_str().unwrap()));
    }
}

#[test]
fn composed_bound_arithmetic() {
    // |H1| = 1, t = 1: k = 4, 1·4 + 3 = 7 parts
    let k = join_k(1, 1, 1);
    assert_eq!(k, 4);
    assert_eq!(partition_bound(1, k).unwrap(), 7);
    assert_eq!(union_bound(1, k, 5).unwrap(), 35);
    assert_eq!(partition_bound(2, 3).unwrap(), 21);
    assert!(partition_bound(64, 64).is_err());
}

#[test]
fn near_esperet_at_four() {
    let r = near_esperet(1.0, 1.0, 4).unwrap();
    let eps = 1.5f64.ln() / 2f64.ln();
    assert_eq!(r.c, 2.0);
    assert!(8.0 * eps > 2.0 + 2.0 * eps * eps);
    assert!(r.first && r.second);
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn measure_is_monotone_and_subadditive(g in arb_graph(10), a in any::<u64>(), b in any::<u64>()) {
        let classes = family(&families()[2]);
        let table = MeasureTable::new(&g, &classes, &budget()).unwrap();
        let a = VertexSet::from_bits(a).intersection(g.vertices());
        let b = VertexSet::from_bits(b).intersection(g.vertices());
        let (ma, mb) = (table.measure(a).unwrap(), table.measure(b).unwrap());
        let mab = table.measure(a.union(b)).unwrap();
        prop_assert!(mab <= ma + mb);
        prop_assert!(ma <= mab && mb <= mab);
        prop_assert!(table.measure(a.intersection(b)).unwrap() <= ma.min(mb));
    }
}
