//! Bron–Kerbosch with pivoting over bitsets. The same routine enumerates
//! maximal independent sets by running on the complement's rows.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Calls `emit` for every maximal clique of the graph whose rows are `nbr`,
/// restricted to the vertices of `within`.
pub(crate) fn for_each_maximal_clique<F>(nbr: &[u64], within: u64, emit: &mut F)
where
    F: FnMut(u64),
{
    fn expand<F: FnMut(u64)>(nbr: &[u64], r: u64, mut p: u64, mut x: u64, emit: &mut F) {
        if p == 0 {
            if x == 0 {
                emit(r);
            }
            return;
        }
        // pivot maximising |P ∩ N(u)|, smallest index on ties
        let mut pivot = 0;
        let mut best = -1i32;
        for u in VertexSet(p | x).iter() {
            let c = (p & nbr[u]).count_ones() as i32;
            if c > best {
                best = c;
                pivot = u;
            }
        }
        for v in VertexSet(p & !nbr[pivot]).iter() {
            let bit = 1u64 << v;
            expand(nbr, r | bit, p & nbr[v], x & nbr[v], emit);
            p &= !bit;
            x |= bit;
        }
    }
    if within == 0 {
        return;
    }
    expand(nbr, 0, within, 0, emit);
}

/// Maximal independent sets of `G[within]`.
pub(crate) fn for_each_maximal_independent_set<F>(g: &Graph, within: VertexSet, emit: &mut F)
where
    F: FnMut(u64),
{
    let s = within.bits();
    let co: Vec<u64> = (0..g.order())
        .map(|v| !g.adjacency()[v] & s & !(1u64 << v))
        .collect();
    for_each_maximal_clique(&co, s, emit);
}

/// Size of a maximum clique of `G[within]`, by branch and bound.
pub(crate) fn max_clique_within(g: &Graph, within: VertexSet) -> usize {
    max_clique_set(g.adjacency(), within.bits()).count_ones() as usize
}

/// A maximum clique of the graph with rows `nbr`, restricted to `within`.
/// Ties go to the first clique found in ascending-index search order.
pub(crate) fn max_clique_set(nbr: &[u64], within: u64) -> u64 {
    fn search(nbr: &[u64], r: u64, mut p: u64, best: &mut u64) {
        if p == 0 {
            if r.count_ones() > best.count_ones() {
                *best = r;
            }
            return;
        }
        while p != 0 {
            if r.count_ones() + p.count_ones() <= best.count_ones() {
                return;
            }
            let v = p.trailing_zeros() as usize;
            let bit = 1u64 << v;
            search(nbr, r | bit, p & nbr[v], best);
            p &= !bit;
        }
    }
    let mut best = 0;
    search(nbr, 0, within, &mut best);
    best
}

/// All inclusion-maximal cliques, each reported once.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph("maximal cliques"));
    }
    let mut out = Vec::new();
    for_each_maximal_clique(g.adjacency(), g.vertices().bits(), &mut |c| {
        out.push(VertexSet(c))
    });
    out.sort();
    Ok(out)
}

/// m(G).
pub fn maximal_clique_count(g: &Graph) -> Result<usize> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph("maximal clique count"));
    }
    let mut count = 0;
    for_each_maximal_clique(g.adjacency(), g.vertices().bits(), &mut |_| count += 1);
    Ok(count)
}

/// ω(G).
pub fn clique_number(g: &Graph) -> Result<usize> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph("clique number"));
    }
    Ok(max_clique_within(g, g.vertices()))
}

/// α(G) = ω(Ḡ).
pub fn independence_number(g: &Graph) -> Result<usize> {
    clique_number(&g.complement())
}

/// A maximum clique (used to seed colouring searches).
pub fn maximum_clique(g: &Graph) -> VertexSet {
    VertexSet(max_clique_set(g.adjacency(), g.vertices().bits()))
}
