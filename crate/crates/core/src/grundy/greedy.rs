use std::collections::BTreeMap;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{check_permutation, Graph, VertexSet};

/// First-fit: each vertex in `order` takes the smallest colour missing from
/// its already-coloured neighbours.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Result<Coloring> {
    check_permutation(order, g.order())?;
    Ok(first_fit(g, order))
}

pub(crate) fn first_fit(g: &Graph, order: &[usize]) -> Coloring {
    let mut classes: Vec<u64> = Vec::new();
    for &v in order {
        let row = g.adjacency()[v];
        match classes.iter().position(|&c| c & row == 0) {
            Some(c) => classes[c] |= 1 << v,
            None => classes.push(1 << v),
        }
    }
    Coloring::new(g.order(), classes.into_iter().map(VertexSet).collect())
        .expect("first fit colours every vertex once")
}

/// Number of colours first-fit uses along `order`; no allocation per class.
pub(crate) fn first_fit_count(adj: &[u64], order: &[usize]) -> usize {
    let mut classes = [0u64; 64];
    let mut k = 0;
    for &v in order {
        let row = adj[v];
        let mut c = 0;
        while c < k && classes[c] & row != 0 {
            c += 1;
        }
        classes[c] |= 1 << v;
        if c == k {
            k += 1;
        }
    }
    k
}

/// Why a colouring fails to be a Grundy colouring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrundyViolation {
    /// Class `class` contains the edge `u v`.
    NotIndependent { class: usize, u: usize, v: usize },
    /// `vertex` has no neighbour in the lower class `class`.
    MissingNeighbor { vertex: usize, class: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrundyVerdict {
    Grundy,
    Violation(GrundyViolation),
}

impl GrundyVerdict {
    pub fn is_grundy(self) -> bool {
        self == GrundyVerdict::Grundy
    }
}

/// Checks every class is independent and every vertex of `V_i` sees each
/// `V_j`, `j < i`. Reports the first violation in class order, then vertex
/// order, then lower-class order.
pub fn is_grundy_coloring(g: &Graph, c: &Coloring) -> Result<GrundyVerdict> {
    let covered = c.classes().iter().fold(VertexSet::EMPTY, |acc, &s| acc | s);
    let total: usize = c.classes().iter().map(|s| s.len()).sum();
    if covered != g.vertices() || total != g.order() {
        return Err(Error::NotPartition(format!(
            "classes do not partition the {} vertices",
            g.order()
        )));
    }
    for (i, &class) in c.classes().iter().enumerate() {
        for v in class.iter() {
            if let Some(w) = (g.neighbors(v) & class).first() {
                return Ok(GrundyVerdict::Violation(GrundyViolation::NotIndependent {
                    class: i,
                    u: v.min(w),
                    v: v.max(w),
                }));
            }
            for (j, &lower) in c.classes()[..i].iter().enumerate() {
                if (g.neighbors(v) & lower).is_empty() {
                    return Ok(GrundyVerdict::Violation(GrundyViolation::MissingNeighbor {
                        vertex: v,
                        class: j,
                    }));
                }
            }
        }
    }
    Ok(GrundyVerdict::Grundy)
}

/// A Grundy colouring together with, for every vertex `v` in class `i` and
/// every `j < i`, a neighbour of `v` in class `j` (the smallest one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrundyCertificate {
    pub coloring: Coloring,
    /// `witnesses[v][j]` is a neighbour of `v` in class `j`.
    pub witnesses: Vec<Vec<usize>>,
}

impl GrundyCertificate {
    /// Derives witnesses for a Grundy colouring; fails if `coloring` is not one.
    pub fn new(g: &Graph, coloring: Coloring) -> Result<Self> {
        if let GrundyVerdict::Violation(v) = is_grundy_coloring(g, &coloring)? {
            return Err(Error::InvalidParameter(format!(
                "not a Grundy colouring: {v:?}"
            )));
        }
        let colors = coloring.colors();
        let witnesses = (0..g.order())
            .map(|v| {
                coloring.classes()[..colors[v]]
                    .iter()
                    .map(|&lower| (g.neighbors(v) & lower).first().expect("checked above"))
                    .collect()
            })
            .collect();
        Ok(GrundyCertificate {
            coloring,
            witnesses,
        })
    }

    pub fn num_colors(&self) -> usize {
        self.coloring.num_colors()
    }

    /// Re-checks every listed witness against `g` without trusting the
    /// construction.
    pub fn verify(&self, g: &Graph) -> bool {
        let colors = self.coloring.colors();
        colors.len() == g.order()
            && self.coloring.is_proper(g)
            && self.witnesses.len() == g.order()
            && (0..g.order()).all(|v| {
                self.witnesses[v].len() == colors[v]
                    && self.witnesses[v]
                        .iter()
                        .enumerate()
                        .all(|(j, &w)| w < g.order() && g.has_edge(v, w) && colors[w] == j)
            })
    }
}

impl Serialize for GrundyCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let witnesses: BTreeMap<usize, BTreeMap<usize, usize>> = self
            .witnesses
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_empty())
            .map(|(v, w)| (v, w.iter().copied().enumerate().collect()))
            .collect();
        let mut s = serializer.serialize_struct("GrundyCertificate", 2)?;
        s.serialize_field("classes", &self.coloring.as_vecs())?;
        s.serialize_field("witnesses", &witnesses)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn first_fit_on_p4_uses_three_colours() {
        // a-b-c-d coloured in order a, d, c, b
        let c = greedy_coloring(&p4(), &[0, 3, 2, 1]).unwrap();
        assert_eq!(
            c.classes(),
            &[VertexSet(0b1001), VertexSet(0b0100), VertexSet(0b0010)]
        );
        assert_eq!(first_fit_count(p4().adjacency(), &[0, 3, 2, 1]), 3);
    }

    #[test]
    fn first_fit_on_complete_and_edgeless() {
        let k5 = Graph::edgeless(5).unwrap().complement();
        assert_eq!(
            greedy_coloring(&k5, &[4, 2, 0, 1, 3]).unwrap().num_colors(),
            5
        );
        let e5 = Graph::edgeless(5).unwrap();
        assert_eq!(
            greedy_coloring(&e5, &[4, 2, 0, 1, 3]).unwrap().num_colors(),
            1
        );
    }

    #[test]
    fn greedy_rejects_bad_orders() {
        assert!(greedy_coloring(&p4(), &[0, 1, 2]).is_err());
        assert!(greedy_coloring(&p4(), &[0, 1, 2, 2]).is_err());
        assert!(greedy_coloring(&p4(), &[0, 1, 2, 4]).is_err());
    }

    #[test]
    fn c4_bipartition_is_grundy() {
        let c = Coloring::new(4, vec![VertexSet(0b0101), VertexSet(0b1010)]).unwrap();
        assert!(is_grundy_coloring(&c4(), &c).unwrap().is_grundy());
    }

    #[test]
    fn c4_singletons_are_not_grundy() {
        let c = Coloring::from_colors(&[0, 1, 2, 3]).unwrap();
        assert_eq!(
            is_grundy_coloring(&c4(), &c).unwrap(),
            GrundyVerdict::Violation(GrundyViolation::MissingNeighbor {
                vertex: 2,
                class: 0
            })
        );
    }

    #[test]
    fn proper_but_not_greedy() {
        // P4 with V1 = {0}, V2 = {1, 3}, V3 = {2}: vertex 3 misses V1
        let c = Coloring::from_colors(&[0, 1, 2, 1]).unwrap();
        assert_eq!(
            is_grundy_coloring(&p4(), &c).unwrap(),
            GrundyVerdict::Violation(GrundyViolation::MissingNeighbor {
                vertex: 3,
                class: 0
            })
        );
        let improper = Coloring::from_colors(&[0, 0, 1, 1]).unwrap();
        assert_eq!(
            is_grundy_coloring(&p4(), &improper).unwrap(),
            GrundyVerdict::Violation(GrundyViolation::NotIndependent {
                class: 0,
                u: 0,
                v: 1
            })
        );
    }

    #[test]
    fn partition_must_match_graph() {
        let c = Coloring::from_colors(&[0, 1, 0]).unwrap();
        assert!(matches!(
            is_grundy_coloring(&p4(), &c),
            Err(Error::NotPartition(_))
        ));
    }

    #[test]
    fn certificate_json_shape() {
        let c = greedy_coloring(&p4(), &[0, 3, 2, 1]).unwrap();
        let cert = GrundyCertificate::new(&p4(), c).unwrap();
        assert!(cert.verify(&p4()));
        let json = serde_json::to_string(&cert).unwrap();
        assert_eq!(
            json,
            r#"{"classes":[[0,3],[2],[1]],"witnesses":{"1":{"0":0,"1":2},"2":{"0":3}}}"#
        );
    }

    #[test]
    fn tampered_certificate_fails_verification() {
        let c = greedy_coloring(&p4(), &[0, 3, 2, 1]).unwrap();
        let mut cert = GrundyCertificate::new(&p4(), c).unwrap();
        cert.witnesses[1][0] = 3;
        assert!(!cert.verify(&p4()));
    }
}
