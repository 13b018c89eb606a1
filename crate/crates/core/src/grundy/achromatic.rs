//! Exact achromatic number for n <= 10.
//!
//! Complete `k`-colourings are searched top-down from the largest `k` with
//! `k(k-1)/2 <= m`. Vertices are coloured in decreasing-degree order; a branch
//! dies when fewer vertices remain than unused colours, or when more colour
//! pairs are unrealised than there are edges left with an uncoloured end.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::ACHROMATIC_LIMIT;

pub fn achromatic_number(g: &Graph) -> Result<usize> {
    Ok(achromatic_coloring(g)?.num_colors())
}

/// ψ(G) with a witness complete colouring.
pub fn achromatic_coloring(g: &Graph) -> Result<Coloring> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph("achromatic number"));
    }
    if n > ACHROMATIC_LIMIT {
        return Err(Error::LimitExceeded {
            what: "achromatic number",
            n,
            limit: ACHROMATIC_LIMIT,
        });
    }
    let m = g.size();
    let mut top = 1;
    while top < n && (top + 1) * top / 2 <= m {
        top += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for k in (1..=top).rev() {
        let mut search = CompleteSearch::new(g, k, &order);
        if search.run(0, 0, m) {
            let c = Coloring::from_colors(&search.colors)?;
            debug_assert!(c.is_proper(g) && c.is_complete(g));
            return Ok(c);
        }
    }
    unreachable!("a χ-colouring is always complete")
}

struct CompleteSearch<'a> {
    g: &'a Graph,
    k: usize,
    order: &'a [usize],
    colors: Vec<usize>,
    class_bits: Vec<u64>,
    pair_hits: Vec<u32>,
    realized: usize,
}

impl<'a> CompleteSearch<'a> {
    fn new(g: &'a Graph, k: usize, order: &'a [usize]) -> Self {
        CompleteSearch {
            g,
            k,
            order,
            colors: vec![usize::MAX; g.order()],
            class_bits: vec![0; k],
            pair_hits: vec![0; k * k],
            realized: 0,
        }
    }

    fn run(&mut self, depth: usize, used: usize, open_edges: usize) -> bool {
        let needed_pairs = self.k * (self.k - 1) / 2;
        if self.realized + open_edges < needed_pairs {
            return false;
        }
        let remaining = self.order.len() - depth;
        if self.k - used > remaining {
            return false;
        }
        if depth == self.order.len() {
            return used == self.k && self.realized == needed_pairs;
        }
        let v = self.order[depth];
        let row = self.g.adjacency()[v];
        let colored_nbrs: Vec<usize> = self
            .g
            .neighbors(v)
            .iter()
            .filter(|&w| self.colors[w] != usize::MAX)
            .collect();
        let open_after = open_edges - colored_nbrs.len();
        let choices = if used < self.k { used + 1 } else { used };
        for c in 0..choices {
            if self.class_bits[c] & row != 0 {
                continue;
            }
            self.assign(v, c, &colored_nbrs);
            if self.run(depth + 1, used.max(c + 1), open_after) {
                return true;
            }
            self.unassign(v, c, &colored_nbrs);
        }
        false
    }

    fn assign(&mut self, v: usize, c: usize, colored_nbrs: &[usize]) {
        self.colors[v] = c;
        self.class_bits[c] |= 1 << v;
        for &w in colored_nbrs {
            let d = self.colors[w];
            let idx = c.min(d) * self.k + c.max(d);
            if self.pair_hits[idx] == 0 {
                self.realized += 1;
            }
            self.pair_hits[idx] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize, colored_nbrs: &[usize]) {
        for &w in colored_nbrs {
            let d = self.colors[w];
            let idx = c.min(d) * self.k + c.max(d);
            self.pair_hits[idx] -= 1;
            if self.pair_hits[idx] == 0 {
                self.realized -= 1;
            }
        }
        self.class_bits[c] &= !(1 << v);
        self.colors[v] = usize::MAX;
    }
}
