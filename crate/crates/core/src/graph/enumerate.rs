//! One representative per isomorphism class, for n <= 8.
//!
//! Level `n` is built from level `n-1` by attaching a new vertex with every
//! possible neighbourhood and keeping the canonical form of each result.
//! Levels are cached for the life of the process.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::iso::canonical_form;
use super::{Graph, VertexSet};
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_ORDER: usize = 8;

static LEVELS: [OnceLock<Vec<Graph>>; MAX_ENUMERATION_ORDER + 1] =
    [const { OnceLock::new() }; MAX_ENUMERATION_ORDER + 1];

fn level(n: usize) -> &'static [Graph] {
    LEVELS[n].get_or_init(|| {
        if n == 0 {
            return vec![Graph::edgeless(0).expect("empty graph")];
        }
        let mut classes = BTreeMap::new();
        for base in level(n - 1) {
            for nbhd in 0..1u64 << (n - 1) {
                let mut adj = base.adjacency().to_vec();
                for v in VertexSet(nbhd).iter() {
                    adj[v] |= 1 << (n - 1);
                }
                adj.push(nbhd);
                let g = Graph::from_adjacency(adj).expect("extension stays simple");
                let (canon, code) = canonical_form(&g).expect("order within canonical limit");
                classes.entry(code).or_insert(canon);
            }
        }
        classes.into_values().collect()
    })
}

/// Streams every isomorphism class of order `n` in ascending canonical-code
/// order; each graph is its class's canonical representative.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::LimitExceeded {
            what: "graph enumeration",
            n,
            limit: MAX_ENUMERATION_ORDER,
        });
    }
    Ok(level(n).iter().cloned())
}

/// As [`enumerate_graphs`], restricted to connected graphs.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(enumerate_graphs(n)?.filter(Graph::is_connected))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=5)
            .map(|n| enumerate_graphs(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
    }

    #[test]
    fn refuses_large_orders() {
        assert!(enumerate_graphs(9).is_err());
        assert!(enumerate_connected(9).is_err());
    }
}
