use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::families::b_graph;
use crate::graph::{enumerate_graphs, parse_graph6, to_graph6, Graph, MAX_ENUMERATION_ORDER};
use crate::grundy::grundy_value;
use crate::oracle::grundy_brute_force;
use crate::recognition::{find_induced, Pattern};

use super::checks::check;
use super::{CheckId, CheckResult, Verdict};

/// A named, ordered list of graphs.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub descriptor: String,
    pub graphs: Vec<Graph>,
}

impl Corpus {
    /// Every isomorphism class on `1..=max_n` vertices, by order and then
    /// canonical code.
    pub fn enumerated(max_n: usize) -> Result<Self> {
        let mut graphs = Vec::new();
        for n in 1..=max_n {
            graphs.extend(enumerate_graphs(n)?);
        }
        Ok(Corpus {
            descriptor: format!("enumerated n=1..{max_n}"),
            graphs,
        })
    }

    /// One graph6 string per nonblank line.
    pub fn from_graph6(descriptor: impl Into<String>, text: &str) -> Result<Self> {
        let graphs = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(parse_graph6)
            .collect::<Result<Vec<_>>>()?;
        Ok(Corpus {
            descriptor: descriptor.into(),
            graphs,
        })
    }

    pub fn from_graphs(descriptor: impl Into<String>, graphs: Vec<Graph>) -> Self {
        Corpus {
            descriptor: descriptor.into(),
            graphs,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckSummary {
    pub check: CheckId,
    pub holds: usize,
    pub violated: usize,
    pub skipped: usize,
    /// Graphs attaining the bound, in corpus order.
    pub equality: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SuiteReport {
    pub corpus: String,
    pub graphs: usize,
    pub checks: Vec<CheckSummary>,
    pub violations: Vec<CheckResult>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn violation_count(&self) -> usize {
        self.violations.len()
    }

    pub fn summary(&self, id: CheckId) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.check == id)
    }
}

/// The report plus every individual result in corpus-major order.
#[derive(Clone, Debug)]
pub struct SuiteRun {
    pub report: SuiteReport,
    pub results: Vec<CheckResult>,
}

/// Evaluates every `(graph, check)` pair on `jobs` workers. The output does
/// not depend on `jobs`.
pub fn run_suite(corpus: &Corpus, checks: &[CheckId], jobs: usize) -> Result<SuiteRun> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?;
    let per_graph: Vec<Vec<CheckResult>> = pool.install(|| {
        corpus
            .graphs
            .par_iter()
            .map(|g| {
                checks
                    .iter()
                    .map(|&id| check(g, id))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let mut summaries: Vec<CheckSummary> = checks
        .iter()
        .map(|&check| CheckSummary {
            check,
            holds: 0,
            violated: 0,
            skipped: 0,
            equality: Vec::new(),
        })
        .collect();
    let mut violations = Vec::new();
    for row in &per_graph {
        for (summary, r) in summaries.iter_mut().zip(row) {
            match r.verdict {
                Verdict::Holds => summary.holds += 1,
                Verdict::Violated => {
                    summary.violated += 1;
                    violations.push(r.clone());
                }
                Verdict::Skipped(_) => summary.skipped += 1,
            }
            if r.equality && !r.is_skipped() {
                summary.equality.push(r.graph.clone());
            }
        }
    }
    let report = SuiteReport {
        corpus: corpus.descriptor.clone(),
        graphs: corpus.graphs.len(),
        checks: summaries,
        violations,
        elapsed: start.elapsed(),
    };
    Ok(SuiteRun {
        report,
        results: per_graph.into_iter().flatten().collect(),
    })
}

pub const MAX_SEARCH_ORDER: usize = MAX_ENUMERATION_ORDER;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjecture {
    /// C4-free r-regular graphs have Γ = r + 1.
    RegularC4Free,
    /// C4-free graphs have Γ ≥ δ + 1.
    C4FreeMinDegree,
}

impl Conjecture {
    pub fn id(self) -> &'static str {
        self.check().id()
    }

    pub fn check(self) -> CheckId {
        match self {
            Conjecture::RegularC4Free => CheckId::C4FreeRegular,
            Conjecture::C4FreeMinDegree => CheckId::C4FreeMinDegree,
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "conj1" => Ok(Conjecture::RegularC4Free),
            "conj2" => Ok(Conjecture::C4FreeMinDegree),
            other => Err(Error::UnknownCheck(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchOutcome {
    pub conjecture: &'static str,
    pub max_n: usize,
    /// Graphs satisfying the hypothesis.
    pub examined: usize,
    pub witness: Option<CheckResult>,
}

/// First enumerated graph on `1..=max_n` vertices violating `conjecture`.
/// A returned witness has already been confirmed by brute force.
pub fn search_counterexample(conjecture: Conjecture, max_n: usize) -> Result<SearchOutcome> {
    if max_n > MAX_SEARCH_ORDER {
        return Err(Error::LimitExceeded {
            what: "counterexample search",
            n: max_n,
            limit: MAX_SEARCH_ORDER,
        });
    }
    let mut examined = 0;
    for n in 1..=max_n {
        for g in enumerate_graphs(n)? {
            if conjecture == Conjecture::RegularC4Free && (!g.is_regular() || g.min_degree() == 0) {
                continue;
            }
            if find_induced(&g, Pattern::C4).is_some() {
                continue;
            }
            examined += 1;
            let r = check(&g, conjecture.check())?;
            if r.is_violation() {
                return Ok(SearchOutcome {
                    conjecture: conjecture.id(),
                    max_n,
                    examined,
                    witness: Some(r),
                });
            }
        }
    }
    Ok(SearchOutcome {
        conjecture: conjecture.id(),
        max_n,
        examined,
        witness: None,
    })
}

/// Triangle-free graphs below order `2k - 2` have Γ < k, and B_k reaches
/// Γ = k at order `2k - 2`. Requires `2 <= k <= 5`.
pub fn zs_minimum_order(k: usize) -> Result<CheckResult> {
    if !(2..=5).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "zs_minimum_order needs 2 <= k <= 5, got {k}"
        )));
    }
    let order = 2 * k - 2;
    let mut examined = 0;
    let mut max_below = 0;
    let mut offender: Option<Graph> = None;
    for n in 1..order {
        for g in enumerate_graphs(n)? {
            if find_induced(&g, Pattern::K3).is_some() {
                continue;
            }
            examined += 1;
            let gamma = grundy_value(&g)?;
            max_below = max_below.max(gamma);
            if gamma >= k && offender.is_none() {
                offender = Some(g);
            }
        }
    }
    let b = b_graph(k)?;
    let b_triangle_free = find_induced(&b, Pattern::K3).is_none();
    let b_gamma = grundy_value(&b)?;
    let holds = offender.is_none() && b_triangle_free && b.order() == order && b_gamma == k;
    let mut details = json!({
        "k": k,
        "order": order,
        "examined": examined,
        "max_gamma_below": max_below,
        "b_triangle_free": b_triangle_free,
        "b_gamma": b_gamma,
    });
    if !holds {
        let confirmed = match &offender {
            Some(g) => grundy_brute_force(g)? >= k,
            None => grundy_brute_force(&b)? != k || !b_triangle_free,
        };
        assert!(
            confirmed,
            "internal fault: zs_min({k}) violation not confirmed by brute force"
        );
        details["reverified"] = json!(true);
        if let Some(g) = &offender {
            details["offender"] = json!(to_graph6(g)?);
        }
    }
    let serde_json::Value::Object(details) = details else {
        unreachable!()
    };
    Ok(CheckResult {
        check: CheckId::TriangleFreeOrder,
        graph: to_graph6(&b)?,
        verdict: if holds {
            Verdict::Holds
        } else {
            Verdict::Violated
        },
        equality: b_gamma == k,
        details,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path};

    #[test]
    fn small_corpus_has_no_violations() {
        let corpus = Corpus::enumerated(4).unwrap();
        assert_eq!(corpus.graphs.len(), 1 + 2 + 4 + 11);
        let run = run_suite(&corpus, &CheckId::ALL, 2).unwrap();
        assert_eq!(run.report.violation_count(), 0);
        for s in &run.report.checks {
            assert_eq!(s.holds + s.violated + s.skipped, corpus.graphs.len());
        }
        assert_eq!(run.results.len(), corpus.graphs.len() * CheckId::ALL.len());
    }

    #[test]
    fn gamma_col_sweep_fails_on_c4_and_p4() {
        let corpus = Corpus::from_graphs("c4,p4", vec![cycle(4).unwrap(), path(4).unwrap()]);
        let run = run_suite(&corpus, &[CheckId::GammaColPerfect], 1).unwrap();
        for r in &run.results {
            assert!(r.holds());
            assert_eq!(r.details["gamma_col"]["perfect"], json!(false));
        }
    }

    #[test]
    fn graph6_corpus() {
        let c = Corpus::from_graph6("inline", "Cl\n\nD?{\n").unwrap();
        assert_eq!(c.graphs.len(), 2);
        assert!(Corpus::from_graph6("bad", "Cl\n!!\n").is_err());
    }

    #[test]
    fn search_limits() {
        assert!(search_counterexample(Conjecture::C4FreeMinDegree, 9).is_err());
        let out = search_counterexample(Conjecture::C4FreeMinDegree, 5).unwrap();
        assert!(out.witness.is_none());
        assert!(out.examined > 0);
        assert_eq!(
            "conj1".parse::<Conjecture>().unwrap(),
            Conjecture::RegularC4Free
        );
    }

    #[test]
    fn minimum_order_small_k() {
        for k in 2..=4 {
            let r = zs_minimum_order(k).unwrap();
            assert!(r.holds(), "k={k}: {:?}", r.details);
            assert_eq!(r.details["max_gamma_below"], json!(k - 1));
        }
        assert!(zs_minimum_order(1).is_err());
        assert!(zs_minimum_order(6).is_err());
    }
}
