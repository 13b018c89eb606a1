use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegeneracyResult {
    /// Reverse removal order: every vertex has fewer than `coloring_number`
    /// neighbours before it.
    pub ordering: Vec<usize>,
    pub degeneracy: usize,
    pub coloring_number: usize,
}

/// Repeatedly removes a minimum-degree vertex (smallest index on ties).
pub fn degeneracy(g: &Graph) -> Result<DegeneracyResult> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph("degeneracy"));
    }
    let mut alive = g.vertices();
    let mut removal = Vec::with_capacity(g.order());
    let mut k = 0;
    while !alive.is_empty() {
        let (v, d) = alive
            .iter()
            .map(|v| (v, (g.neighbors(v) & alive).len()))
            .min_by_key(|&(v, d)| (d, v))
            .expect("alive is nonempty");
        k = k.max(d);
        alive.remove(v);
        removal.push(v);
    }
    removal.reverse();
    Ok(DegeneracyResult {
        ordering: removal,
        degeneracy: k,
        coloring_number: k + 1,
    })
}

/// col(G) = deg(G) + 1.
pub fn coloring_number(g: &Graph) -> Result<usize> {
    Ok(degeneracy(g)?.coloring_number)
}

/// Largest number of earlier neighbours of any vertex in `order`, plus one.
pub fn back_degree_bound(g: &Graph, order: &[usize]) -> usize {
    let mut before = VertexSet::EMPTY;
    let mut worst = 0;
    for &v in order {
        worst = worst.max((g.neighbors(v) & before).len());
        before.insert(v);
    }
    worst + 1
}
