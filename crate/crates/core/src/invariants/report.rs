use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::graph::{to_graph6, Graph};
use crate::grundy::{achromatic_number, grundy_value};
use crate::limits::{solver_limit, ACHROMATIC_LIMIT};

use super::{
    chromatic_number, clique_number, degeneracy, delta2, independence_number, maximal_clique_count,
    randic_index,
};

/// Every invariant of one graph. `gamma` and `psi` are absent when the
/// graph is above the respective solver limit.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub delta2: usize,
    pub omega: usize,
    pub alpha: usize,
    pub chi: usize,
    pub col: usize,
    pub degeneracy: usize,
    #[serde(serialize_with = "twelve_significant")]
    pub randic: f64,
    pub maximal_clique_count: usize,
    pub gamma: Option<usize>,
    pub psi: Option<usize>,
}

/// Rounds to 12 significant digits before serialising.
pub(crate) fn twelve_significant<S: Serializer>(
    x: &f64,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(round_significant(*x))
}

pub(crate) fn round_significant(x: f64) -> f64 {
    format!("{x:.11e}").parse().unwrap_or(x)
}

impl InvariantReport {
    pub fn compute(g: &Graph) -> Result<Self> {
        let deg = degeneracy(g)?;
        let n = g.order();
        Ok(InvariantReport {
            graph6: to_graph6(g)?,
            n,
            m: g.size(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            delta2: delta2(g),
            omega: clique_number(g)?,
            alpha: independence_number(g)?,
            chi: chromatic_number(g)?.0,
            col: deg.coloring_number,
            degeneracy: deg.degeneracy,
            randic: randic_index(g)?,
            maximal_clique_count: maximal_clique_count(g)?,
            gamma: if n <= solver_limit() {
                Some(grundy_value(g)?)
            } else {
                None
            },
            psi: if n <= ACHROMATIC_LIMIT {
                Some(achromatic_number(g)?)
            } else {
                None
            },
        })
    }

    /// Names of the textbook bound chains this report breaks; always empty
    /// for a correct report.
    pub fn bound_violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !(self.omega <= self.chi && self.chi <= self.col && self.col <= self.max_degree + 1) {
            out.push("omega <= chi <= col <= max_degree + 1");
        }
        if self.col != self.degeneracy + 1 {
            out.push("col = degeneracy + 1");
        }
        if let Some(gamma) = self.gamma {
            if !(self.chi <= gamma && gamma <= self.delta2 + 1 && self.delta2 <= self.max_degree) {
                out.push("chi <= gamma <= delta2 + 1 <= max_degree + 1");
            }
            if let Some(psi) = self.psi {
                if gamma > psi {
                    out.push("gamma <= psi");
                }
            }
        }
        out
    }

    pub const CSV_HEADER: [&'static str; 15] = [
        "graph6",
        "n",
        "m",
        "min_degree",
        "max_degree",
        "delta2",
        "omega",
        "alpha",
        "chi",
        "col",
        "degeneracy",
        "randic",
        "maximal_clique_count",
        "gamma",
        "psi",
    ];

    pub fn csv_record(&self) -> Vec<String> {
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        vec![
            self.graph6.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.min_degree.to_string(),
            self.max_degree.to_string(),
            self.delta2.to_string(),
            self.omega.to_string(),
            self.alpha.to_string(),
            self.chi.to_string(),
            self.col.to_string(),
            self.degeneracy.to_string(),
            round_significant(self.randic).to_string(),
            self.maximal_clique_count.to_string(),
            opt(self.gamma),
            opt(self.psi),
        ]
    }
}
