//! Brute-force reference implementations.
//!
//! Everything here enumerates orders, subsets or set partitions directly from
//! the definitions and shares no search code with the exact solvers. The
//! verification harness uses these to re-derive any reported violation, and
//! the test suites use them as independent oracles.

use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, Graph, VertexSet};
use crate::grundy::greedy::first_fit_count;
use crate::limits::BRUTE_FORCE_LIMIT;

/// Subset sweeps stay cheap well past the permutation limit.
const SUBSET_LIMIT: usize = 16;

fn guard(what: &'static str, g: &Graph, limit: usize) -> Result<()> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph(what));
    }
    if n > limit {
        return Err(Error::LimitExceeded { what, n, limit });
    }
    Ok(())
}

/// Max colours used by first-fit over all `n!` vertex orders.
pub fn grundy_brute_force(g: &Graph) -> Result<usize> {
    guard("brute-force Grundy number", g, BRUTE_FORCE_LIMIT)?;
    let n = g.order();
    let adj = g.adjacency();
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = first_fit_count(adj, &order);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                order.swap(0, i);
            } else {
                order.swap(c[i], i);
            }
            best = best.max(first_fit_count(adj, &order));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

/// Calls `visit` with the blocks of every set partition of `0..n`.
fn for_each_partition<F: FnMut(&[u64])>(n: usize, visit: &mut F) {
    fn rec<F: FnMut(&[u64])>(v: usize, n: usize, blocks: &mut Vec<u64>, visit: &mut F) {
        if v == n {
            visit(blocks);
            return;
        }
        for b in 0..blocks.len() {
            blocks[b] |= 1 << v;
            rec(v + 1, n, blocks, visit);
            blocks[b] &= !(1 << v);
        }
        blocks.push(1 << v);
        rec(v + 1, n, blocks, visit);
        blocks.pop();
    }
    rec(0, n, &mut Vec::new(), visit);
}

fn blocks_independent(g: &Graph, blocks: &[u64]) -> bool {
    blocks.iter().all(|&b| g.is_independent(VertexSet(b)))
}

fn blocks_complete(g: &Graph, blocks: &[u64]) -> bool {
    let reach: Vec<u64> = blocks
        .iter()
        .map(|&b| VertexSet(b).iter().fold(0, |acc, v| acc | g.adjacency()[v]))
        .collect();
    (0..blocks.len()).all(|i| (i + 1..blocks.len()).all(|j| reach[i] & blocks[j] != 0))
}

/// χ(G): fewest blocks in a partition into independent sets.
pub fn chromatic_brute_force(g: &Graph) -> Result<usize> {
    guard("brute-force chromatic number", g, BRUTE_FORCE_LIMIT)?;
    let mut best = usize::MAX;
    for_each_partition(g.order(), &mut |blocks| {
        if blocks.len() < best && blocks_independent(g, blocks) {
            best = blocks.len();
        }
    });
    Ok(best)
}

/// ψ(G): most blocks in a proper, complete partition.
pub fn achromatic_brute_force(g: &Graph) -> Result<usize> {
    guard("brute-force achromatic number", g, BRUTE_FORCE_LIMIT)?;
    let mut best = 0;
    for_each_partition(g.order(), &mut |blocks| {
        if blocks.len() > best && blocks_independent(g, blocks) && blocks_complete(g, blocks) {
            best = blocks.len();
        }
    });
    Ok(best)
}

/// Nonempty vertex subsets of `g`.
fn subsets(g: &Graph) -> impl Iterator<Item = VertexSet> {
    (1..=g.vertices().bits()).map(VertexSet)
}

/// ω(G) by testing every subset.
pub fn clique_number_brute_force(g: &Graph) -> Result<usize> {
    guard("brute-force clique number", g, SUBSET_LIMIT)?;
    Ok(subsets(g)
        .filter(|&s| g.is_clique(s))
        .map(VertexSet::len)
        .max()
        .unwrap_or(0))
}

/// α(G) by testing every subset.
pub fn independence_brute_force(g: &Graph) -> Result<usize> {
    guard("brute-force independence number", g, SUBSET_LIMIT)?;
    Ok(subsets(g)
        .filter(|&s| g.is_independent(s))
        .map(VertexSet::len)
        .max()
        .unwrap_or(0))
}

/// Inclusion-maximal cliques by testing every subset, in ascending mask order.
pub fn maximal_cliques_brute_force(g: &Graph) -> Result<Vec<VertexSet>> {
    guard("brute-force maximal cliques", g, SUBSET_LIMIT)?;
    Ok(subsets(g)
        .filter(|&s| {
            g.is_clique(s)
                && (g.vertices() - s)
                    .iter()
                    .all(|v| !g.is_clique(s | VertexSet::singleton(v)))
        })
        .collect())
}

pub fn maximal_clique_count_brute_force(g: &Graph) -> Result<usize> {
    Ok(maximal_cliques_brute_force(g)?.len())
}

/// max δ(H) over all induced subgraphs H.
pub fn degeneracy_brute_force(g: &Graph) -> Result<usize> {
    guard("brute-force degeneracy", g, SUBSET_LIMIT)?;
    Ok(subsets(g)
        .map(|s| {
            s.iter()
                .map(|v| (g.neighbors(v) & s).len())
                .min()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0))
}

/// True when some subset of size >= 4 induces a cycle.
pub fn has_long_induced_cycle_brute_force(g: &Graph) -> Result<bool> {
    guard("brute-force induced cycle search", g, SUBSET_LIMIT)?;
    Ok(subsets(g).any(|s| {
        s.len() >= 4
            && s.iter().all(|v| (g.neighbors(v) & s).len() == 2)
            && g.components_within(s).len() == 1
    }))
}

/// True when some induced subgraph is isomorphic to `pattern`.
pub fn contains_induced_brute_force(g: &Graph, pattern: &Graph) -> Result<bool> {
    guard("brute-force induced pattern search", g, SUBSET_LIMIT)?;
    let k = pattern.order();
    for s in subsets(g).filter(|s| s.len() == k) {
        if are_isomorphic(&g.induced_subgraph(s), pattern)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_are_counted_by_bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in bell.iter().enumerate() {
            let mut count = 0;
            for_each_partition(n, &mut |_| count += 1);
            assert_eq!(count, b);
        }
    }

    #[test]
    fn p4_and_c4() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(grundy_brute_force(&p4).unwrap(), 3);
        assert_eq!(grundy_brute_force(&c4).unwrap(), 2);
        assert_eq!(achromatic_brute_force(&p4).unwrap(), 3);
        assert_eq!(achromatic_brute_force(&c4).unwrap(), 2);
        assert_eq!(chromatic_brute_force(&c4).unwrap(), 2);
        assert_eq!(degeneracy_brute_force(&c4).unwrap(), 2);
        assert_eq!(maximal_clique_count_brute_force(&c4).unwrap(), 4);
        assert!(has_long_induced_cycle_brute_force(&c4).unwrap());
        assert!(!has_long_induced_cycle_brute_force(&p4).unwrap());
    }

    #[test]
    fn brute_force_limits() {
        assert!(grundy_brute_force(&Graph::edgeless(9).unwrap()).is_err());
        assert!(grundy_brute_force(&Graph::edgeless(0).unwrap()).is_err());
    }
}
