//! Exhaustive isomorphism testing and canonical forms for small graphs.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

pub const DEFAULT_ISOMORPHISM_LIMIT: usize = 10;

/// Largest order whose upper triangle fits in a `u64` code.
const MAX_CANONICAL_ORDER: usize = 11;

/// Isomorphism test with the default vertex cap.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    are_isomorphic_with_limit(g, h, DEFAULT_ISOMORPHISM_LIMIT)
}

/// Backtracking search for an edge-preserving bijection. Candidates are
/// pruned by degree and by the sorted degree multiset of the neighbourhood.
pub fn are_isomorphic_with_limit(g: &Graph, h: &Graph, limit: usize) -> Result<bool> {
    let n = g.order().max(h.order());
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "isomorphism test",
            n,
            limit,
        });
    }
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    let sig_g = signatures(g);
    let sig_h = signatures(h);
    let mut sorted_g = sig_g.clone();
    let mut sorted_h = sig_h.clone();
    sorted_g.sort();
    sorted_h.sort();
    if sorted_g != sorted_h {
        return Ok(false);
    }
    // most constrained (highest degree) first
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut map = vec![usize::MAX; g.order()];
    Ok(extend(g, h, &sig_g, &sig_h, &order, 0, &mut map, 0))
}

fn signatures(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    sig_g: &[(usize, Vec<usize>)],
    sig_h: &[(usize, Vec<usize>)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in VertexSet(!used & h.vertices().0).iter() {
        if sig_g[v] != sig_h[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        if extend(g, h, sig_g, sig_h, order, depth + 1, map, used | 1 << w) {
            return true;
        }
    }
    map[v] = usize::MAX;
    false
}

/// Canonical code: the lexicographically smallest upper-triangle bit string
/// (column-major, first bit most significant) over all relabellings.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    Ok(canonical_labelling(g)?.0)
}

/// The canonical representative of `g`'s isomorphism class with its code.
pub fn canonical_form(g: &Graph) -> Result<(Graph, u64)> {
    let (code, perm) = canonical_labelling(g)?;
    // perm[position] = original vertex; invert for `permuted`.
    let mut inverse = vec![0; perm.len()];
    for (pos, &v) in perm.iter().enumerate() {
        inverse[v] = pos;
    }
    Ok((g.permuted(&inverse)?, code))
}

fn canonical_labelling(g: &Graph) -> Result<(u64, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::LimitExceeded {
            what: "canonical form",
            n,
            limit: MAX_CANONICAL_ORDER,
        });
    }
    let mut search = CanonSearch {
        g,
        total_bits: n * n.saturating_sub(1) / 2,
        best: None,
        best_perm: Vec::new(),
        perm: Vec::with_capacity(n),
    };
    search.place(0, 0, 0);
    let best = search.best.unwrap_or(0);
    Ok((best, search.best_perm))
}

struct CanonSearch<'a> {
    g: &'a Graph,
    total_bits: usize,
    best: Option<u64>,
    best_perm: Vec<usize>,
    perm: Vec<usize>,
}

impl CanonSearch<'_> {
    /// Column `j` of the placed prefix when `v` takes position `j`.
    fn column(&self, v: usize) -> u64 {
        self.perm
            .iter()
            .fold(0u64, |acc, &u| acc << 1 | self.g.has_edge(u, v) as u64)
    }

    fn place(&mut self, used: u64, prefix: u64, len: usize) {
        let n = self.g.order();
        let j = self.perm.len();
        if j == n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
                self.best_perm = self.perm.clone();
            }
            return;
        }
        let free = VertexSet(!used & VertexSet::full(n).0);
        // Given a fixed prefix, only the smallest next column can lead to the
        // minimum string.
        let min_col = free.iter().map(|v| self.column(v)).min().unwrap_or(0);
        let next = prefix << j | min_col;
        let next_len = len + j;
        if let Some(best) = self.best {
            let best_prefix = if next_len == 0 {
                0
            } else {
                best >> (self.total_bits - next_len)
            };
            if next > best_prefix {
                return;
            }
        }
        for v in free.iter() {
            if self.column(v) != min_col {
                continue;
            }
            self.perm.push(v);
            self.place(used | 1 << v, next, next_len);
            self.perm.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = cycle(5);
        assert!(are_isomorphic(&c5, &c5.complement()).unwrap());
    }

    #[test]
    fn p4_is_not_a_claw() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&path(4), &claw).unwrap());
    }

    #[test]
    fn isomorphism_limit() {
        let g = Graph::edgeless(11).unwrap();
        assert!(matches!(
            are_isomorphic(&g, &g),
            Err(Error::LimitExceeded { .. })
        ));
        assert!(are_isomorphic_with_limit(&g, &g, 11).unwrap());
    }

    #[test]
    fn same_degrees_different_graphs() {
        // C6 vs two triangles: 2-regular on 6 vertices
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&cycle(6), &two_triangles).unwrap());
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = path(5);
        let h = g.permuted(&[3, 0, 4, 1, 2]).unwrap();
        let (cg, code_g) = canonical_form(&g).unwrap();
        let (ch, code_h) = canonical_form(&h).unwrap();
        assert_eq!(code_g, code_h);
        assert_eq!(cg, ch);
        assert!(are_isomorphic(&cg, &g).unwrap());
    }

    #[test]
    fn canonical_code_of_edgeless_and_complete() {
        assert_eq!(canonical_code(&Graph::edgeless(6).unwrap()).unwrap(), 0);
        let k4 = Graph::edgeless(4).unwrap().complement();
        assert_eq!(canonical_code(&k4).unwrap(), 0b111111);
    }
}
