//! Bound and characterization checks over single graphs and whole corpora.
//!
//! Every check is evaluated with the exact solvers. A violation is then
//! recomputed from the graph alone through the brute-force oracles before it
//! is reported; disagreement between the two paths is an internal fault.

mod checks;
mod evaluator;
mod suite;

use std::fmt;
use std::str::FromStr;

use serde::ser::{Serialize, SerializeStruct, Serializer};
use serde_json::{Map, Value};

use crate::error::Error;

pub use checks::check;
pub use evaluator::{BruteForce, Evaluator, Exact};
pub use suite::{
    run_suite, search_counterexample, zs_minimum_order, CheckSummary, Conjecture, Corpus,
    SearchOutcome, SuiteReport, SuiteRun, MAX_SEARCH_ORDER,
};

/// A verifiable bound or characterization. The string ids are stable and
/// used by the CLI and in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    /// ω ≤ χ ≤ col ≤ Δ+1.
    DegreeChain,
    /// Γ ≤ Δ₂+1 ≤ Δ+1.
    Delta2Bound,
    /// Γ ≤ ψ.
    GrundyBelowAchromatic,
    /// ψ ≤ 2R on connected graphs, tight exactly on complete graphs.
    AchromaticRandic,
    /// Γ ≤ 2R on connected graphs, tight exactly on complete graphs.
    GrundyRandic,
    /// col ≤ 2R on connected graphs, tight exactly on complete graphs.
    ColoringNumberRandic,
    /// 2Γ ≤ n + ω.
    OrderCliqueBound,
    /// Connected triangle-free graphs reach 2Γ = n + 2 exactly at B_k.
    TriangleFreeExtremal,
    /// 2Γ ≤ (χ(Ḡ)+1)·ω.
    ComplementChromaticBound,
    /// 2Γ ≤ 3ω when Ḡ is bipartite.
    CoBipartiteBound,
    /// 2Γ ≤ n + χ ≤ n + col.
    OrderChromaticBound,
    /// Γ ≤ log_{col/(col-1)} n + 2.
    ChangHsu,
    /// χ(G−S) ≥ χ(G) − |S| + 1 for every maximal clique S.
    MaximalCliqueRemoval,
    /// Γ(G) + χ(Ḡ) ≤ n + 1.
    NordhausGaddum,
    /// Γ + α ≤ n + 1.
    GrundyIndependence,
    /// Chordal ⟺ col(H) = ω(H) on every induced subgraph.
    ChordalColOmega,
    /// P4-free ⟺ Γω-perfect ⟺ Γχ-perfect.
    CographPerfectness,
    /// {P4, C4}-free ⟺ α(H) = m(H) on every induced subgraph.
    TriviallyPerfect,
    /// {P4, C4}-free ⟺ Γ(H) = col(H) on every induced subgraph.
    GammaColPerfect,
    /// δ ≤ ω − 1 on chordal graphs.
    ChordalMinDegree,
    /// Γ ≥ δ + 1 on C4-free graphs.
    C4FreeMinDegree,
    /// Γ = r + 1 on C4-free r-regular graphs, r ≥ 1.
    C4FreeRegular,
    /// 2Γ ≤ n + 2 on triangle-free graphs.
    TriangleFreeOrder,
}

impl CheckId {
    pub const ALL: [CheckId; 23] = [
        CheckId::DegreeChain,
        CheckId::Delta2Bound,
        CheckId::GrundyBelowAchromatic,
        CheckId::AchromaticRandic,
        CheckId::GrundyRandic,
        CheckId::ColoringNumberRandic,
        CheckId::OrderCliqueBound,
        CheckId::TriangleFreeExtremal,
        CheckId::ComplementChromaticBound,
        CheckId::CoBipartiteBound,
        CheckId::OrderChromaticBound,
        CheckId::ChangHsu,
        CheckId::MaximalCliqueRemoval,
        CheckId::NordhausGaddum,
        CheckId::GrundyIndependence,
        CheckId::ChordalColOmega,
        CheckId::CographPerfectness,
        CheckId::TriviallyPerfect,
        CheckId::GammaColPerfect,
        CheckId::ChordalMinDegree,
        CheckId::C4FreeMinDegree,
        CheckId::C4FreeRegular,
        CheckId::TriangleFreeOrder,
    ];

    pub fn id(self) -> &'static str {
        match self {
            CheckId::DegreeChain => "eq2",
            CheckId::Delta2Bound => "eq34",
            CheckId::GrundyBelowAchromatic => "eq5",
            CheckId::AchromaticRandic => "thm22",
            CheckId::GrundyRandic => "cor23",
            CheckId::ColoringNumberRandic => "thm24",
            CheckId::OrderCliqueBound => "thm26i",
            CheckId::TriangleFreeExtremal => "thm26iii",
            CheckId::ComplementChromaticBound => "cor27",
            CheckId::CoBipartiteBound => "cor28",
            CheckId::OrderChromaticBound => "cor29",
            CheckId::ChangHsu => "changhsu",
            CheckId::MaximalCliqueRemoval => "lem31",
            CheckId::NordhausGaddum => "thm32",
            CheckId::GrundyIndependence => "cor33",
            CheckId::ChordalColOmega => "thm43",
            CheckId::CographPerfectness => "thm44",
            CheckId::TriviallyPerfect => "thm45",
            CheckId::GammaColPerfect => "thm46",
            CheckId::ChordalMinDegree => "cor42",
            CheckId::C4FreeMinDegree => "conj2",
            CheckId::C4FreeRegular => "conj1",
            CheckId::TriangleFreeOrder => "zs_min",
        }
    }

    /// Parses `all` or a comma-separated list of ids, keeping list order and
    /// dropping repeats.
    pub fn parse_list(text: &str) -> Result<Vec<CheckId>, Error> {
        if text.trim() == "all" {
            return Ok(CheckId::ALL.to_vec());
        }
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let id: CheckId = part.parse()?;
            if !out.contains(&id) {
                out.push(id);
            }
        }
        if out.is_empty() {
            return Err(Error::UnknownCheck(text.to_string()));
        }
        Ok(out)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

impl Serialize for CheckId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    Skipped(String),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Skipped(_) => "skipped",
        }
    }
}

/// Outcome of one check on one graph. Vertex indices in `details` refer to
/// the labelling encoded by `graph`.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub check: CheckId,
    pub graph: String,
    pub verdict: Verdict,
    /// The bound is attained (or the characterized extremal case occurs).
    pub equality: bool,
    pub details: Map<String, Value>,
}

impl CheckResult {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn is_violation(&self) -> bool {
        self.verdict == Verdict::Violated
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self.verdict, Verdict::Skipped(_))
    }

    /// `graph6,check,verdict,detail` where `detail` is the skip reason or the
    /// details object as compact JSON.
    pub fn csv_record(&self) -> [String; 4] {
        let detail = match &self.verdict {
            Verdict::Skipped(reason) => reason.clone(),
            _ => Value::Object(self.details.clone()).to_string(),
        };
        [
            self.graph.clone(),
            self.check.id().to_string(),
            self.verdict.label().to_string(),
            detail,
        ]
    }

    pub const CSV_HEADER: [&'static str; 4] = ["graph6", "check", "verdict", "detail"];
}

impl Serialize for CheckResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let skipped = matches!(self.verdict, Verdict::Skipped(_));
        let mut st = s.serialize_struct("CheckResult", if skipped { 6 } else { 5 })?;
        st.serialize_field("check", &self.check)?;
        st.serialize_field("graph", &self.graph)?;
        st.serialize_field("verdict", self.verdict.label())?;
        if let Verdict::Skipped(reason) = &self.verdict {
            st.serialize_field("reason", reason)?;
        }
        st.serialize_field("equality", &self.equality)?;
        st.serialize_field("details", &self.details)?;
        st.end()
    }
}
