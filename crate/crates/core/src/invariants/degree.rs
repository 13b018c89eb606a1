//! Degree-based invariants: Randić index, Δ₂ and the Chang–Hsu bound.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::degeneracy::coloring_number;

/// R(G) = Σ_{uv ∈ E} 1/√(d(u)d(v)), summed in ascending edge order.
pub fn randic_index(g: &Graph) -> Result<f64> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph("Randić index"));
    }
    Ok(g.edges()
        .map(|(u, v)| 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt())
        .sum())
}

/// Δ₂(G): the largest degree of a neighbour `v` of some `u` with
/// `d(v) <= d(u)`. Zero for edgeless graphs.
pub fn delta2(g: &Graph) -> usize {
    (0..g.order())
        .flat_map(|u| {
            let du = g.degree(u);
            g.neighbors(u)
                .iter()
                .map(|v| g.degree(v))
                .filter(move |&dv| dv <= du)
        })
        .max()
        .unwrap_or(0)
}

/// log(n) / log(col/(col-1)) + 2. Requires at least one edge.
pub fn chang_hsu_bound(g: &Graph) -> Result<f64> {
    if g.size() == 0 {
        return Err(Error::BoundUndefined);
    }
    Ok(chang_hsu_from(g.order(), coloring_number(g)?))
}

/// The Chang–Hsu bound from `n` and `col >= 2`.
pub(crate) fn chang_hsu_from(n: usize, col: usize) -> f64 {
    let col = col as f64;
    (n as f64).ln() / (col / (col - 1.0)).ln() + 2.0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn randic_examples() {
        for n in 2..8 {
            let k = Graph::edgeless(n).unwrap().complement();
            assert!((randic_index(&k).unwrap() - n as f64 / 2.0).abs() < 1e-12);
        }
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(randic_index(&c4).unwrap(), 2.0);
        let expected = 2.0 / 2f64.sqrt() + 0.5;
        assert!((randic_index(&path(4)).unwrap() - expected).abs() < 1e-12);
        assert_eq!(randic_index(&Graph::edgeless(3).unwrap()).unwrap(), 0.0);
    }

    #[test]
    fn delta2_examples() {
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(delta2(&star), 1);
        assert_eq!(delta2(&path(4)), 2);
        let k5 = Graph::edgeless(5).unwrap().complement();
        assert_eq!(delta2(&k5), 4);
        assert_eq!(delta2(&Graph::edgeless(4).unwrap()), 0);
    }

    #[test]
    fn chang_hsu_examples() {
        assert!((chang_hsu_bound(&path(2)).unwrap() - 3.0).abs() < 1e-12);
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let expected = 4f64.ln() / 1.5f64.ln() + 2.0;
        assert!((chang_hsu_bound(&c4).unwrap() - expected).abs() < 1e-12);
        assert!((expected - 5.419).abs() < 1e-3);
        assert_eq!(
            chang_hsu_bound(&Graph::edgeless(3).unwrap()),
            Err(Error::BoundUndefined)
        );
    }
}
