use grundy_core::families::{b_graph, Family, FamilySpec};
use grundy_core::grundy::{achromatic_number, grundy_value};
use grundy_core::invariants::{chromatic_number, clique_number, coloring_number};
use grundy_core::recognition::{find_induced, Pattern};
use grundy_core::Graph;

fn measure(g: &Graph, key: &str) -> usize {
    match key {
        "gamma" => grundy_value(g).unwrap(),
        "omega" => clique_number(g).unwrap(),
        "chi" => chromatic_number(g).unwrap().0,
        "psi" => achromatic_number(g).unwrap(),
        "col" => coloring_number(g).unwrap(),
        "n" => g.order(),
        "max_degree" => g.max_degree(),
        "chi_complement" => chromatic_number(&g.complement()).unwrap().0,
        other => panic!("no measurement for {other}"),
    }
}

fn assert_expected(family: Family, values: &[usize]) {
    let spec = FamilySpec::new(family, values).unwrap();
    let g = spec.build().unwrap();
    for (key, &want) in &spec.expected {
        assert_eq!(measure(&g, key), want, "{family} {values:?} {key}");
    }
}

#[test]
fn simple_families_meet_their_metadata() {
    for n in 1..=8 {
        assert_expected(Family::Complete, &[n]);
        assert_expected(Family::Empty, &[n]);
        assert_expected(Family::Path, &[n]);
    }
    for n in 3..=9 {
        assert_expected(Family::Cycle, &[n]);
    }
    for a in 1..=4 {
        for b in 1..=4 {
            assert_expected(Family::CompleteBipartite, &[a, b]);
        }
    }
}

#[test]
fn b_graphs() {
    for k in 2..=8 {
        assert_expected(Family::BGraph, &[k]);
        let g = b_graph(k).unwrap();
        assert!(g.is_connected());
        assert!(find_induced(&g, Pattern::K3).is_none());
    }
}

#[test]
fn crowns() {
    for t in 1..=7 {
        assert_expected(Family::Crown, &[t]);
    }
}

#[test]
fn zaker_soltani_attains_the_order_clique_bound() {
    for n in 2..=14 {
        for k in (2..=n).filter(|k| (n - k) % 2 == 0) {
            assert_expected(Family::ZakerSoltani, &[k, n]);
            let g = FamilySpec::new(Family::ZakerSoltani, &[k, n])
                .unwrap()
                .build()
                .unwrap();
            let omega = clique_number(&g).unwrap();
            assert_eq!(grundy_value(&g).unwrap(), (n + omega) / 2);
        }
    }
}

#[test]
fn sharp_nordhaus_gaddum_family() {
    for n in 2..=12 {
        for k in 1..n {
            assert_expected(Family::NgSharp, &[n, k]);
        }
    }
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(FamilySpec::new(Family::ZakerSoltani, &[3, 6]).is_err());
    assert!(FamilySpec::new(Family::ZakerSoltani, &[1, 3]).is_err());
    assert!(FamilySpec::new(Family::NgSharp, &[4, 4]).is_err());
    assert!(FamilySpec::new(Family::BGraph, &[1]).is_err());
    assert!(FamilySpec::new(Family::Cycle, &[2]).is_err());
    assert!(FamilySpec::new(Family::Crown, &[1, 2]).is_err());
}
