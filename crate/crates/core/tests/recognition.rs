use grundy_core::graph::{are_isomorphic, enumerate_connected, enumerate_graphs};
use grundy_core::oracle::{contains_induced_brute_force, has_long_induced_cycle_brute_force};
use grundy_core::recognition::{
    find_induced, is_chordal, is_perfect_elimination_ordering, is_trivially_perfect,
    perfectness_sweep, Certificate, Mode, Pattern, PerfectnessPair,
};
use grundy_core::Graph;

fn corpus(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| enumerate_graphs(n).unwrap())
        .collect()
}

fn free_of(g: &Graph, patterns: &[Pattern]) -> bool {
    patterns.iter().all(|&p| find_induced(g, p).is_none())
}

#[test]
fn pattern_search_matches_oracle() {
    for g in corpus(6) {
        for p in [Pattern::P4, Pattern::C4, Pattern::K3] {
            let hit = find_induced(&g, p);
            assert_eq!(
                hit.is_some(),
                contains_induced_brute_force(&g, &p.graph()).unwrap()
            );
            if let Some(s) = hit {
                assert!(are_isomorphic(&g.induced_subgraph(s), &p.graph()).unwrap());
            }
        }
    }
}

#[test]
fn chordality_certificates() {
    for g in corpus(7) {
        let r = is_chordal(&g);
        assert_eq!(
            r.holds,
            !has_long_induced_cycle_brute_force(&g).unwrap(),
            "{g}"
        );
        match r.certificate {
            Certificate::EliminationOrdering(order) => {
                assert!(is_perfect_elimination_ordering(&g, &order));
            }
            Certificate::InducedSubgraph(s) => {
                assert!(s.len() >= 4);
                assert!(s.iter().all(|v| (g.neighbors(v) & s).len() == 2));
                assert_eq!(g.components_within(s).len(), 1);
            }
            Certificate::None => panic!("chordality always carries a certificate"),
        }
    }
}

#[test]
fn chordal_iff_col_omega_perfect() {
    for g in corpus(6) {
        let sweep = perfectness_sweep(&g, PerfectnessPair::ColOmega).unwrap();
        assert_eq!(is_chordal(&g).holds, sweep.holds, "{g}");
    }
}

#[test]
fn p4_free_iff_gamma_omega_iff_gamma_chi() {
    for g in corpus(6) {
        let free = free_of(&g, &[Pattern::P4]);
        assert_eq!(
            perfectness_sweep(&g, PerfectnessPair::GammaOmega)
                .unwrap()
                .holds,
            free,
            "{g}"
        );
        assert_eq!(
            perfectness_sweep(&g, PerfectnessPair::GammaChi)
                .unwrap()
                .holds,
            free,
            "{g}"
        );
    }
}

#[test]
fn trivially_perfect_modes_agree() {
    for g in corpus(6) {
        let fast = is_trivially_perfect(&g, Mode::Fast).unwrap();
        let def = is_trivially_perfect(&g, Mode::Definitional).unwrap();
        assert_eq!(fast.holds, def.holds, "{g}");
    }
}

#[test]
fn p4_c4_free_iff_gamma_col_perfect() {
    for g in corpus(6) {
        let free = free_of(&g, &[Pattern::P4, Pattern::C4]);
        assert_eq!(
            perfectness_sweep(&g, PerfectnessPair::GammaCol)
                .unwrap()
                .holds,
            free,
            "{g}"
        );
    }
}

#[test]
fn sweep_witnesses_really_differ() {
    let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let r = perfectness_sweep(&c4, PerfectnessPair::GammaCol).unwrap();
    assert!(!r.holds);
    assert_eq!(r.certificate.vertices(), vec![0, 1, 2, 3]);
}

#[test]
fn regular_p4_c4_free_connected_graphs_are_complete() {
    for n in 1..=7 {
        for g in enumerate_connected(n).unwrap() {
            if g.is_regular() && free_of(&g, &[Pattern::P4, Pattern::C4]) {
                assert!(g.is_complete(), "{g}");
            }
        }
    }
}
