use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// An ordered partition of the vertex set into colour classes `V_1..V_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    classes: Vec<VertexSet>,
}

impl Coloring {
    /// Wraps `classes`, checking that they are nonempty, pairwise disjoint
    /// and cover exactly `0..n`. Independence is not checked here.
    pub fn new(n: usize, classes: Vec<VertexSet>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for (i, &c) in classes.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::NotPartition(format!("class {i} is empty")));
            }
            if !(c & seen).is_empty() {
                return Err(Error::NotPartition(format!(
                    "class {i} overlaps an earlier class"
                )));
            }
            if !c.is_subset(VertexSet::full(n)) {
                return Err(Error::NotPartition(format!(
                    "class {i} has a vertex >= {n}"
                )));
            }
            seen = seen | c;
        }
        if seen != VertexSet::full(n) {
            return Err(Error::NotPartition(format!(
                "vertices {:?} are uncoloured",
                VertexSet::full(n) - seen
            )));
        }
        Ok(Coloring { classes })
    }

    /// Builds the colouring from a colour per vertex (colours `0..k`, all used).
    pub fn from_colors(colors: &[usize]) -> Result<Self> {
        let k = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut classes = vec![VertexSet::EMPTY; k];
        for (v, &c) in colors.iter().enumerate() {
            classes[c].insert(v);
        }
        Coloring::new(colors.len(), classes)
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn num_colors(&self) -> usize {
        self.classes.len()
    }

    /// Colour index of every vertex.
    pub fn colors(&self) -> Vec<usize> {
        let n = self.classes.iter().map(|c| c.len()).sum();
        let mut out = vec![0; n];
        for (i, c) in self.classes.iter().enumerate() {
            for v in c.iter() {
                out[v] = i;
            }
        }
        out
    }

    /// Every class is an independent set of `g`.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.classes.iter().all(|&c| g.is_independent(c))
    }

    /// Every pair of classes is joined by at least one edge.
    pub fn is_complete(&self, g: &Graph) -> bool {
        let k = self.classes.len();
        (0..k).all(|i| {
            let reach = self.classes[i]
                .iter()
                .fold(0u64, |acc, v| acc | g.neighbors(v).bits());
            (i + 1..k).all(|j| reach & self.classes[j].bits() != 0)
        })
    }

    pub fn as_vecs(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(|c| c.to_vec()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_validation() {
        assert!(Coloring::new(3, vec![VertexSet(0b011), VertexSet(0b100)]).is_ok());
        assert!(Coloring::new(3, vec![VertexSet(0b011)]).is_err());
        assert!(Coloring::new(3, vec![VertexSet(0b011), VertexSet(0b110)]).is_err());
        assert!(Coloring::new(3, vec![VertexSet(0b111), VertexSet(0)]).is_err());
        assert!(Coloring::new(2, vec![VertexSet(0b111)]).is_err());
    }

    #[test]
    fn colors_round_trip() {
        let c = Coloring::from_colors(&[1, 0, 1, 2]).unwrap();
        assert_eq!(
            c.classes(),
            &[VertexSet(0b0010), VertexSet(0b0101), VertexSet(0b1000)]
        );
        assert_eq!(c.colors(), vec![1, 0, 1, 2]);
        assert!(Coloring::from_colors(&[0, 2]).is_err());
    }
}
