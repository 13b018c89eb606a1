//! The two independent ways of computing everything a check needs.

use crate::error::{Error, Result};
use crate::graph::{are_isomorphic_with_limit, canonical_code, Graph, VertexSet};
use crate::grundy::{achromatic_number, grundy_value};
use crate::invariants::{
    chromatic_number, clique_number, coloring_number, independence_number, maximal_cliques,
};
use crate::limits::solver_limit;
use crate::oracle;
use crate::recognition::{find_induced, is_chordal, Parameter, Pattern};

pub trait Evaluator: Sync {
    fn name(&self) -> &'static str;
    fn gamma(&self, g: &Graph) -> Result<usize>;
    fn chi(&self, g: &Graph) -> Result<usize>;
    fn psi(&self, g: &Graph) -> Result<usize>;
    fn omega(&self, g: &Graph) -> Result<usize>;
    fn alpha(&self, g: &Graph) -> Result<usize>;
    fn col(&self, g: &Graph) -> Result<usize>;
    fn maximal_cliques(&self, g: &Graph) -> Result<Vec<VertexSet>>;
    fn is_chordal(&self, g: &Graph) -> Result<bool>;
    fn contains(&self, g: &Graph, pattern: Pattern) -> Result<bool>;
    fn isomorphic(&self, g: &Graph, h: &Graph) -> Result<bool>;

    fn parameter(&self, g: &Graph, p: Parameter) -> Result<usize> {
        match p {
            Parameter::Omega => self.omega(g),
            Parameter::Chi => self.chi(g),
            Parameter::Gamma => self.gamma(g),
            Parameter::Psi => self.psi(g),
            Parameter::Col => self.col(g),
        }
    }
}

/// The branch-and-bound solvers and linear-time recognisers.
#[derive(Clone, Copy, Debug, Default)]
pub struct Exact;

impl Evaluator for Exact {
    fn name(&self) -> &'static str {
        "exact"
    }

    fn gamma(&self, g: &Graph) -> Result<usize> {
        grundy_value(g)
    }

    fn chi(&self, g: &Graph) -> Result<usize> {
        Ok(chromatic_number(g)?.0)
    }

    fn psi(&self, g: &Graph) -> Result<usize> {
        achromatic_number(g)
    }

    fn omega(&self, g: &Graph) -> Result<usize> {
        clique_number(g)
    }

    fn alpha(&self, g: &Graph) -> Result<usize> {
        independence_number(g)
    }

    fn col(&self, g: &Graph) -> Result<usize> {
        coloring_number(g)
    }

    fn maximal_cliques(&self, g: &Graph) -> Result<Vec<VertexSet>> {
        maximal_cliques(g)
    }

    fn is_chordal(&self, g: &Graph) -> Result<bool> {
        Ok(is_chordal(g).holds)
    }

    fn contains(&self, g: &Graph, pattern: Pattern) -> Result<bool> {
        Ok(find_induced(g, pattern).is_some())
    }

    fn isomorphic(&self, g: &Graph, h: &Graph) -> Result<bool> {
        are_isomorphic_with_limit(g, h, solver_limit())
    }
}

/// Direct enumeration of orders, partitions and subsets.
#[derive(Clone, Copy, Debug, Default)]
pub struct BruteForce;

impl Evaluator for BruteForce {
    fn name(&self) -> &'static str {
        "brute_force"
    }

    fn gamma(&self, g: &Graph) -> Result<usize> {
        oracle::grundy_brute_force(g)
    }

    fn chi(&self, g: &Graph) -> Result<usize> {
        oracle::chromatic_brute_force(g)
    }

    fn psi(&self, g: &Graph) -> Result<usize> {
        oracle::achromatic_brute_force(g)
    }

    fn omega(&self, g: &Graph) -> Result<usize> {
        oracle::clique_number_brute_force(g)
    }

    fn alpha(&self, g: &Graph) -> Result<usize> {
        oracle::independence_brute_force(g)
    }

    fn col(&self, g: &Graph) -> Result<usize> {
        Ok(oracle::degeneracy_brute_force(g)? + 1)
    }

    fn maximal_cliques(&self, g: &Graph) -> Result<Vec<VertexSet>> {
        oracle::maximal_cliques_brute_force(g)
    }

    fn is_chordal(&self, g: &Graph) -> Result<bool> {
        Ok(!oracle::has_long_induced_cycle_brute_force(g)?)
    }

    fn contains(&self, g: &Graph, pattern: Pattern) -> Result<bool> {
        oracle::contains_induced_brute_force(g, &pattern.graph())
    }

    fn isomorphic(&self, g: &Graph, h: &Graph) -> Result<bool> {
        if g.order() != h.order() {
            return Ok(false);
        }
        if g.order() == 0 {
            return Err(Error::EmptyGraph("isomorphism test"));
        }
        Ok(canonical_code(g)? == canonical_code(h)?)
    }
}
