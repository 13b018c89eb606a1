use grundy_core::graph::enumerate_graphs;
use grundy_core::invariants::{
    back_degree_bound, chromatic_number, clique_number, degeneracy, delta2, independence_number,
    maximal_clique_count, randic_index, InvariantReport,
};
use grundy_core::oracle::{
    chromatic_brute_force, clique_number_brute_force, degeneracy_brute_force,
    independence_brute_force, maximal_clique_count_brute_force,
};
use grundy_core::recognition::{is_chordal, simplicial_vertices};
use grundy_core::Graph;

fn corpus(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| enumerate_graphs(n).unwrap())
        .collect()
}

#[test]
fn solvers_match_subset_oracles() {
    for g in corpus(6) {
        assert_eq!(
            degeneracy(&g).unwrap().degeneracy,
            degeneracy_brute_force(&g).unwrap(),
            "{g}"
        );
        assert_eq!(
            clique_number(&g).unwrap(),
            clique_number_brute_force(&g).unwrap(),
            "{g}"
        );
        assert_eq!(
            independence_number(&g).unwrap(),
            independence_brute_force(&g).unwrap(),
            "{g}"
        );
        assert_eq!(
            maximal_clique_count(&g).unwrap(),
            maximal_clique_count_brute_force(&g).unwrap(),
            "{g}"
        );
    }
}

#[test]
fn chromatic_matches_partition_oracle() {
    for g in corpus(7) {
        let (chi, coloring) = chromatic_number(&g).unwrap();
        assert!(coloring.is_proper(&g));
        assert_eq!(coloring.num_colors(), chi);
        if g.order() <= 7 {
            assert_eq!(chi, chromatic_brute_force(&g).unwrap(), "{g}");
        }
    }
}

#[test]
fn degeneracy_ordering_certifies_coloring_number() {
    for g in corpus(7) {
        let d = degeneracy(&g).unwrap();
        assert_eq!(d.coloring_number, d.degeneracy + 1);
        assert_eq!(back_degree_bound(&g, &d.ordering), d.coloring_number);
    }
}

#[test]
fn degree_chain_on_every_class() {
    for g in corpus(6) {
        let r = InvariantReport::compute(&g).unwrap();
        assert!(
            r.omega <= r.chi && r.chi <= r.col && r.col <= r.max_degree + 1,
            "{g}"
        );
        let gamma = r.gamma.unwrap();
        assert!(
            r.chi <= gamma && gamma <= r.delta2 + 1 && r.delta2 <= r.max_degree,
            "{g}"
        );
        assert!(gamma <= r.psi.unwrap(), "{g}");
        assert!(r.bound_violations().is_empty());
        assert_eq!(delta2(&g), r.delta2);
    }
}

/// Complete graph plus isolated vertices.
fn is_clique_plus_isolated(g: &Graph) -> bool {
    let touched: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) > 0).collect();
    touched.iter().all(|&v| g.degree(v) == touched.len() - 1)
}

#[test]
fn randic_lower_bound_and_its_equality_case() {
    for g in corpus(7) {
        let m = g.size() as f64;
        let floor = ((8.0 * m + 1.0).sqrt() + 1.0) / 4.0;
        let r = randic_index(&g).unwrap();
        if g.size() == 0 {
            assert_eq!(r, 0.0);
            continue;
        }
        assert!(r >= floor - 1e-9, "{g}");
        assert_eq!(
            (r - floor).abs() <= 1e-9,
            is_clique_plus_isolated(&g),
            "{g}"
        );
    }
}

#[test]
fn chordal_graphs_have_simplicial_vertices() {
    for g in corpus(7) {
        if is_chordal(&g).holds {
            assert!(!simplicial_vertices(&g).is_empty(), "{g}");
            assert!(g.min_degree() < clique_number(&g).unwrap(), "{g}");
        }
    }
}
