//! Exact non-Grundy invariants: degeneracy and colouring number, cliques,
//! independence, chromatic number, Randić index, Δ₂ and the Chang–Hsu bound.

mod chromatic;
pub(crate) mod cliques;
pub(crate) mod degeneracy;
pub(crate) mod degree;
pub(crate) mod report;

pub use chromatic::chromatic_number;
pub use cliques::{
    clique_number, independence_number, maximal_clique_count, maximal_cliques, maximum_clique,
};
pub use degeneracy::{back_degree_bound, coloring_number, degeneracy, DegeneracyResult};
pub use degree::{chang_hsu_bound, delta2, randic_index};
pub use report::InvariantReport;
