use proptest::prelude::*;

use grundy_core::graph::{parse_graph6, to_graph6};
use grundy_core::grundy::{greedy_coloring, grundy_number, is_grundy_coloring};
use grundy_core::invariants::{chromatic_number, clique_number, coloring_number, delta2};
use grundy_core::{Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for j in 1..n {
                for i in 0..j {
                    if it.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn adjacency_is_symmetric_and_loopless(g in graph(16)) {
        for u in 0..g.order() {
            prop_assert!(!g.has_edge(u, u));
            for v in g.neighbors(u).iter() {
                prop_assert!(g.has_edge(v, u));
                prop_assert!(v < g.order());
            }
        }
    }

    #[test]
    fn graph6_and_complement_round_trip(g in graph(20)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g).unwrap()).unwrap(), g.clone());
        prop_assert_eq!(g.complement().complement(), g.clone());
        let n = g.order();
        prop_assert_eq!(g.size() + g.complement().size(), n * (n - 1) / 2);
    }

    #[test]
    fn grundy_certificate_and_bounds(g in graph(11)) {
        let (gamma, cert) = grundy_number(&g).unwrap();
        prop_assert!(cert.verify(&g));
        prop_assert!(is_grundy_coloring(&g, &cert.coloring).unwrap().is_grundy());
        let chi = chromatic_number(&g).unwrap().0;
        let omega = clique_number(&g).unwrap();
        prop_assert!(omega <= chi && chi <= gamma);
        prop_assert!(gamma <= delta2(&g) + 1);
        prop_assert!(2 * gamma <= g.order() + omega);
        prop_assert!(chi <= coloring_number(&g).unwrap());
    }

    #[test]
    fn invariants_ignore_labels((g, perm) in graph_with_perm(10)) {
        let h = g.permuted(&perm).unwrap();
        prop_assert_eq!(grundy_number(&g).unwrap().0, grundy_number(&h).unwrap().0);
        prop_assert_eq!(chromatic_number(&g).unwrap().0, chromatic_number(&h).unwrap().0);
        prop_assert_eq!(coloring_number(&g).unwrap(), coloring_number(&h).unwrap());
        prop_assert_eq!(delta2(&g), delta2(&h));
    }

    #[test]
    fn first_fit_is_grundy_and_bounded((g, order) in graph_with_perm(12)) {
        let c = greedy_coloring(&g, &order).unwrap();
        prop_assert!(is_grundy_coloring(&g, &c).unwrap().is_grundy());
        prop_assert!(c.num_colors() <= grundy_number(&g).unwrap().0);
    }

    #[test]
    fn grundy_is_monotone_on_induced_subgraphs(g in graph(10), mask in any::<u64>()) {
        let s = VertexSet(mask) & g.vertices();
        prop_assume!(!s.is_empty());
        let h = g.induced_subgraph(s);
        prop_assert!(grundy_number(&h).unwrap().0 <= grundy_number(&g).unwrap().0);
    }
}
