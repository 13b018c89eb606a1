//! Greedy colouring, Grundy-colouring validation and the exact solvers for
//! Γ(G) and ψ(G).

mod achromatic;
pub(crate) mod greedy;
mod solver;

pub use crate::coloring::Coloring;
pub use crate::oracle::grundy_brute_force;
pub use achromatic::{achromatic_coloring, achromatic_number};
pub use greedy::{
    greedy_coloring, is_grundy_coloring, GrundyCertificate, GrundyVerdict, GrundyViolation,
};
pub use solver::{greedy_lower_bound, grundy_number, grundy_value};
