use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use grundy_core::families::complete_bipartite;
use grundy_core::graph::{are_isomorphic, enumerate_connected, enumerate_graphs};
use grundy_core::grundy::{
    achromatic_coloring, greedy_coloring, grundy_brute_force, grundy_number, is_grundy_coloring,
};
use grundy_core::invariants::{chromatic_number, clique_number, coloring_number, randic_index};
use grundy_core::oracle::achromatic_brute_force;
use grundy_core::Graph;

fn corpus(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| enumerate_graphs(n).unwrap())
        .collect()
}

#[test]
fn exact_matches_first_fit_over_all_orders() {
    for g in corpus(6) {
        let (gamma, cert) = grundy_number(&g).unwrap();
        assert_eq!(gamma, grundy_brute_force(&g).unwrap(), "{g}");
        assert!(is_grundy_coloring(&g, &cert.coloring).unwrap().is_grundy());
        assert!(cert.verify(&g));
    }
}

#[test]
fn achromatic_matches_partition_oracle() {
    for g in corpus(7) {
        let c = achromatic_coloring(&g).unwrap();
        assert!(c.is_proper(&g) && c.is_complete(&g));
        assert_eq!(c.num_colors(), achromatic_brute_force(&g).unwrap(), "{g}");
    }
}

#[test]
fn first_fit_always_yields_grundy_colorings() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in corpus(7).iter().step_by(3) {
        let mut order: Vec<usize> = (0..g.order()).collect();
        for _ in 0..4 {
            order.shuffle(&mut rng);
            let c = greedy_coloring(g, &order).unwrap();
            assert!(is_grundy_coloring(g, &c).unwrap().is_grundy());
        }
    }
}

#[test]
fn upper_bounds_hold_on_every_class() {
    for g in corpus(6) {
        let n = g.order();
        let gamma = grundy_number(&g).unwrap().0;
        let chi = chromatic_number(&g).unwrap().0;
        let col = coloring_number(&g).unwrap();
        let omega = clique_number(&g).unwrap();
        let chi_co = chromatic_number(&g.complement()).unwrap().0;
        let psi = achromatic_coloring(&g).unwrap().num_colors();
        assert!(2 * gamma <= n + omega, "{g}");
        assert!(2 * gamma <= n + chi && chi <= col, "{g}");
        assert!(2 * gamma <= (chi_co + 1) * omega, "{g}");
        if n >= 2 && g.is_connected() {
            let two_r = 2.0 * randic_index(&g).unwrap();
            assert!(gamma as f64 <= two_r + 1e-9, "{g}");
            assert!(psi as f64 <= two_r + 1e-9, "{g}");
        }
    }
}

#[test]
fn grundy_two_exactly_on_complete_bipartite() {
    for n in 2..=6 {
        let bipartite: Vec<Graph> = (1..=n / 2)
            .map(|a| complete_bipartite(a, n - a).unwrap())
            .collect();
        for g in enumerate_connected(n).unwrap() {
            let is_kab = bipartite.iter().any(|h| are_isomorphic(&g, h).unwrap());
            assert_eq!(grundy_number(&g).unwrap().0 == 2, is_kab, "{g}");
        }
    }
}
