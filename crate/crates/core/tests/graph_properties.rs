use std::collections::{BTreeSet, HashMap};

use chi_certify::graph::{
    canonical_form, enumerate_graphs, from_graph6, is_isomorphic, to_graph6,
};
use chi_certify::{Graph, VertexSet};
use proptest::prelude::*;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
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

/// Least edge mask over all relabellings.
fn naive_code(
    edges: &[(usize, usize)],
    perms: &[Vec<usize>],
    index: &HashMap<(usize, usize), usize>,
) -> u64 {
    perms
        .iter()
        .map(|p| {
            edges.iter().fold(0u64, |m, &(u, v)| {
                let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                m | 1 << index[&(a, b)]
            })
        })
        .min()
        .unwrap_or(0)
}

fn labelled(n: usize, mask: u64) -> Vec<(usize, usize)> {
    pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect()
}

#[test]
fn enumeration_matches_naive_isomorphism_classes() {
    for n in 1..=6 {
        let ps = pairs(n);
        let index: HashMap<_, _> = ps.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let perms = permutations(n);
        let mut naive = BTreeSet::new();
        let mut forms = HashMap::new();
        for mask in 0..1u64 << ps.len() {
            let edges = labelled(n, mask);
            let code = naive_code(&edges, &perms, &index);
            naive.insert(code);
            if n <= 5 {
                let form = canonical_form(&Graph::from_edges(n, &edges).unwrap()).unwrap();
                let prev = forms.insert(form.clone(), code);
                assert!(prev.is_none_or(|c| c == code), "form shared by two classes at n={n}");
            }
        }
        let listed = enumerate_graphs(n).unwrap();
        assert_eq!(listed.len(), naive.len(), "n = {n}");
        let listed_codes: BTreeSet<u64> = listed
            .iter()
            .map(|g| naive_code(&g.edges().collect::<Vec<_>>(), &perms, &index))
            .collect();
        assert_eq!(listed_codes, naive, "n = {n}");
        if n <= 5 {
            assert_eq!(forms.len(), naive.len());
        }
    }
}

#[test]
fn seven_vertex_count() {
    assert_eq!(enumerate_graphs(7).unwrap().len(), 1044);
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
            let edges: Vec<_> = pairs(n)
                .into_iter()
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in arb_graph(64)) {
        let text = to_graph6(&g);
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn induced_is_functorial(g in arb_graph(20), bits in any::<u64>()) {
        let s = VertexSet::from_bits(bits).intersection(g.vertices());
        let (h, map) = g.induced(s);
        prop_assert_eq!(h.n(), s.len());
        prop_assert_eq!(map.iter().collect::<VertexSet>(), s);
        for i in 0..h.n() {
            for j in 0..h.n() {
                prop_assert_eq!(h.has_edge(i, j), i != j && g.has_edge(map[i], map[j]));
            }
        }
        let inner = VertexSet::from_bits(bits >> 7).intersection(h.vertices());
        let (hh, inner_map) = h.induced(inner);
        let outer: VertexSet = inner_map.iter().map(|&i| map[i]).collect();
        prop_assert_eq!(hh, g.induced(outer).0);
    }

    #[test]
    fn relabelling_keeps_canonical_form((g, perm) in arb_graph_with_perm(9)) {
        let h = g.relabel(&perm);
        for (u, v) in g.edges() {
            prop_assert!(h.has_edge(perm[u], perm[v]));
        }
        prop_assert_eq!(h.edge_count(), g.edge_count());
        prop_assert_eq!(canonical_form(&h).unwrap(), canonical_form(&g).unwrap());
        prop_assert!(is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(64)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * (g.n() - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }
}
