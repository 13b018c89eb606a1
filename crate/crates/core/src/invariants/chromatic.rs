//! Exact chromatic number.
//!
//! The search is bracketed by ω(G) below and col(G) above. A maximum clique
//! is precoloured, then each `k` in `ω..col` is tried with DSATUR-ordered
//! backtracking; the smallest-last first-fit colouring witnesses `k = col`.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::limits::solver_limit;

use super::cliques::maximum_clique;
use super::degeneracy::degeneracy;

pub fn chromatic_number(g: &Graph) -> Result<(usize, Coloring)> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph("chromatic number"));
    }
    let limit = solver_limit();
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "chromatic number",
            n,
            limit,
        });
    }
    let clique = maximum_clique(g);
    let lower = clique.len();
    let upper_coloring = first_fit(g, &degeneracy(g)?.ordering);
    if upper_coloring.num_colors() == lower {
        return Ok((lower, upper_coloring));
    }
    for k in lower..upper_coloring.num_colors() {
        if let Some(colors) = try_color(g, k, clique) {
            let c = Coloring::from_colors(&colors)?;
            debug_assert!(c.is_proper(g) && c.num_colors() == k);
            return Ok((k, c));
        }
    }
    let k = upper_coloring.num_colors();
    Ok((k, upper_coloring))
}

fn first_fit(g: &Graph, order: &[usize]) -> Coloring {
    let mut colors = vec![usize::MAX; g.order()];
    for &v in order {
        let used = g
            .neighbors(v)
            .iter()
            .filter(|&w| colors[w] != usize::MAX)
            .fold(0u64, |acc, w| acc | 1 << colors[w]);
        colors[v] = (!used).trailing_zeros() as usize;
    }
    Coloring::from_colors(&colors).expect("first fit colours every vertex")
}

/// Searches for a proper `k`-colouring extending the clique precolouring.
fn try_color(g: &Graph, k: usize, clique: VertexSet) -> Option<Vec<usize>> {
    let mut state = Search {
        g,
        k,
        classes: vec![0u64; k],
        colors: vec![usize::MAX; g.order()],
    };
    for (c, v) in clique.iter().enumerate() {
        state.classes[c] |= 1 << v;
        state.colors[v] = c;
    }
    let uncolored = g.vertices() - clique;
    if state.extend(uncolored, clique.len()) {
        Some(state.colors)
    } else {
        None
    }
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    classes: Vec<u64>,
    colors: Vec<usize>,
}

impl Search<'_> {
    fn available(&self, v: usize, used: usize) -> u64 {
        let row = self.g.adjacency()[v];
        (0..used)
            .filter(|&c| self.classes[c] & row == 0)
            .fold(0u64, |acc, c| acc | 1 << c)
    }

    fn extend(&mut self, uncolored: VertexSet, used: usize) -> bool {
        if uncolored.is_empty() {
            return true;
        }
        // DSATUR pick: fewest available colours, then most uncoloured
        // neighbours, then smallest index.
        let v = uncolored
            .iter()
            .min_by_key(|&v| {
                let avail = self.available(v, used).count_ones();
                let open = (self.g.neighbors(v) & uncolored).len();
                (avail, usize::MAX - open, v)
            })
            .expect("nonempty");
        let avail = self.available(v, used);
        let mut rest = uncolored;
        rest.remove(v);
        for c in VertexSet(avail).iter() {
            self.classes[c] |= 1 << v;
            self.colors[v] = c;
            if self.extend(rest, used) {
                return true;
            }
            self.classes[c] &= !(1 << v);
        }
        // opening a fresh colour: all unused colours are interchangeable
        if used < self.k {
            self.classes[used] |= 1 << v;
            self.colors[v] = used;
            if self.extend(rest, used + 1) {
                return true;
            }
            self.classes[used] &= !(1 << v);
        }
        self.colors[v] = usize::MAX;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn odd_cycle_needs_three() {
        let (chi, c) = chromatic_number(&cycle(5)).unwrap();
        assert_eq!(chi, 3);
        assert!(c.is_proper(&cycle(5)));
        assert_eq!(c.num_colors(), 3);
    }

    #[test]
    fn edgeless_and_complete() {
        assert_eq!(chromatic_number(&Graph::edgeless(5).unwrap()).unwrap().0, 1);
        let k6 = Graph::edgeless(6).unwrap().complement();
        assert_eq!(chromatic_number(&k6).unwrap().0, 6);
    }

    #[test]
    fn grotzsch_like_gap() {
        // Mycielski of C5 (Grötzsch graph): triangle-free, χ = 4
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for i in 0..5 {
            edges.push((5 + i, (i + 1) % 5));
            edges.push((5 + i, (i + 4) % 5));
            edges.push((5 + i, 10));
        }
        let g = Graph::from_edges(11, &edges).unwrap();
        let (chi, c) = chromatic_number(&g).unwrap();
        assert_eq!(chi, 4);
        assert!(c.is_proper(&g));
    }

    #[test]
    fn limits() {
        assert!(chromatic_number(&Graph::edgeless(0).unwrap()).is_err());
        assert!(matches!(
            chromatic_number(&Graph::edgeless(30).unwrap()),
            Err(Error::LimitExceeded { .. })
        ));
    }
}
