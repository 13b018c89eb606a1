//! Forbidden-induced-subgraph and structural recognisers.
//!
//! Pattern search is exhaustive over 3- and 4-subsets. Chordality uses
//! maximum cardinality search; a failure is certified separately by the
//! shortest induced cycle of length at least four.

use std::collections::VecDeque;
use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::grundy::{achromatic_number, grundy_value};
use crate::invariants::{
    chromatic_number, clique_number, coloring_number, independence_number, maximal_clique_count,
};
use crate::limits::SWEEP_LIMIT;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    P4,
    C4,
    K3,
}

impl Pattern {
    pub fn graph(self) -> Graph {
        let edges: &[(usize, usize)] = match self {
            Pattern::P4 => &[(0, 1), (1, 2), (2, 3)],
            Pattern::C4 => &[(0, 1), (1, 2), (2, 3), (3, 0)],
            Pattern::K3 => &[(0, 1), (1, 2), (2, 0)],
        };
        let n = if self == Pattern::K3 { 3 } else { 4 };
        Graph::from_edges(n, edges).expect("pattern graphs are simple")
    }

    fn matches(self, g: &Graph, s: VertexSet) -> bool {
        let mut degs: Vec<usize> = s.iter().map(|v| (g.neighbors(v) & s).len()).collect();
        degs.sort_unstable();
        match self {
            Pattern::P4 => degs == [1, 1, 2, 2],
            Pattern::C4 => degs == [2, 2, 2, 2],
            Pattern::K3 => degs == [2, 2, 2],
        }
    }
}

/// The first vertex set (in lexicographic order of sorted vertex tuples)
/// inducing `pattern`, if any.
pub fn find_induced(g: &Graph, pattern: Pattern) -> Option<VertexSet> {
    let n = g.order();
    let k = if pattern == Pattern::K3 { 3 } else { 4 };
    let mut found = None;
    combinations(n, k, &mut |s| {
        if pattern.matches(g, s) {
            found = Some(s);
            true
        } else {
            false
        }
    });
    found
}

/// Visits `k`-subsets of `0..n` in lexicographic order until `visit` says stop.
fn combinations<F: FnMut(VertexSet) -> bool>(n: usize, k: usize, visit: &mut F) {
    fn rec<F: FnMut(VertexSet) -> bool>(
        start: usize,
        n: usize,
        left: usize,
        acc: VertexSet,
        visit: &mut F,
    ) -> bool {
        if left == 0 {
            return visit(acc);
        }
        for v in start..=n.saturating_sub(left) {
            let mut next = acc;
            next.insert(v);
            if rec(v + 1, n, left - 1, next, visit) {
                return true;
            }
        }
        false
    }
    if k <= n {
        rec(0, n, k, VertexSet::EMPTY, visit);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    Chordal,
    TriviallyPerfect,
    Free(Pattern),
    Perfectness(PerfectnessPair),
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Chordal => f.write_str("chordal"),
            Property::TriviallyPerfect => f.write_str("trivially_perfect"),
            Property::Free(p) => write!(f, "{}_free", format!("{p:?}").to_lowercase()),
            Property::Perfectness(pair) => write!(f, "{}_perfect", pair.id()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    None,
    /// Perfect elimination ordering, in elimination order.
    EliminationOrdering(Vec<usize>),
    /// Vertex set of a violating induced subgraph.
    InducedSubgraph(VertexSet),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::None => "none",
            Certificate::EliminationOrdering(_) => "elimination_ordering",
            Certificate::InducedSubgraph(_) => "induced_subgraph",
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Certificate::None => Vec::new(),
            Certificate::EliminationOrdering(o) => o.clone(),
            Certificate::InducedSubgraph(s) => s.to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionResult {
    pub property: Property,
    pub holds: bool,
    pub certificate: Certificate,
}

impl Serialize for RecognitionResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RecognitionResult", 4)?;
        s.serialize_field("property", &self.property.to_string())?;
        s.serialize_field("holds", &self.holds)?;
        s.serialize_field("certificate_kind", self.certificate.kind())?;
        s.serialize_field("vertices", &self.certificate.vertices())?;
        s.end()
    }
}

/// H-freeness for a single pattern, with the first occurrence as certificate.
pub fn is_free(g: &Graph, pattern: Pattern) -> RecognitionResult {
    let hit = find_induced(g, pattern);
    RecognitionResult {
        property: Property::Free(pattern),
        holds: hit.is_none(),
        certificate: hit.map_or(Certificate::None, Certificate::InducedSubgraph),
    }
}

/// Maximum cardinality search order (smallest index on ties).
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut unvisited = g.vertices();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = unvisited
        .iter()
        .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
    {
        unvisited.remove(v);
        order.push(v);
        for w in (g.neighbors(v) & unvisited).iter() {
            weight[w] += 1;
        }
    }
    order
}

/// Reversed MCS order if it is a perfect elimination ordering.
fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let order = mcs_order(g);
    let mut before = VertexSet::EMPTY;
    for &v in &order {
        if !g.is_clique(g.neighbors(v) & before) {
            return None;
        }
        before.insert(v);
    }
    Some(order.into_iter().rev().collect())
}

/// Checks that every vertex's later neighbours in `order` form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    if crate::graph::check_permutation(order, g.order()).is_err() {
        return false;
    }
    let mut later = g.vertices();
    order.iter().all(|&v| {
        later.remove(v);
        g.is_clique(g.neighbors(v) & later)
    })
}

/// A shortest induced cycle of length >= 4, or `None` for chordal graphs.
///
/// Any such cycle passes through some `v` with non-adjacent neighbours `a`,
/// `b`; a shortest `a`–`b` path avoiding `N[v] - {a, b}` closes it without
/// chords.
pub fn shortest_long_induced_cycle(g: &Graph) -> Option<VertexSet> {
    let mut best: Option<VertexSet> = None;
    for v in 0..g.order() {
        let nbrs = g.neighbors(v);
        for a in nbrs.iter() {
            for b in nbrs.iter().filter(|&b| b > a && !g.has_edge(a, b)) {
                let allowed = (g.vertices() - nbrs - VertexSet::singleton(v))
                    | VertexSet::singleton(a)
                    | VertexSet::singleton(b);
                if let Some(path) = shortest_path(g, a, b, allowed) {
                    let cycle = path | VertexSet::singleton(v);
                    if best.is_none_or(|c| cycle.len() < c.len()) {
                        best = Some(cycle);
                    }
                }
            }
        }
    }
    best
}

fn shortest_path(g: &Graph, from: usize, to: usize, allowed: VertexSet) -> Option<VertexSet> {
    let mut parent = vec![usize::MAX; g.order()];
    let mut seen = VertexSet::singleton(from);
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = VertexSet::singleton(to);
            let mut x = to;
            while x != from {
                x = parent[x];
                path.insert(x);
            }
            return Some(path);
        }
        for w in (g.neighbors(u) & (allowed - seen)).iter() {
            seen.insert(w);
            parent[w] = u;
            queue.push_back(w);
        }
    }
    None
}

pub fn is_chordal(g: &Graph) -> RecognitionResult {
    match perfect_elimination_ordering(g) {
        Some(peo) => {
            debug_assert!(is_perfect_elimination_ordering(g, &peo));
            RecognitionResult {
                property: Property::Chordal,
                holds: true,
                certificate: Certificate::EliminationOrdering(peo),
            }
        }
        None => {
            let cycle = shortest_long_induced_cycle(g)
                .expect("a graph without a perfect elimination ordering has a long induced cycle");
            RecognitionResult {
                property: Property::Chordal,
                holds: false,
                certificate: Certificate::InducedSubgraph(cycle),
            }
        }
    }
}

/// Vertices whose neighbourhoods are cliques.
pub fn simplicial_vertices(g: &Graph) -> Vec<usize> {
    (0..g.order())
        .filter(|&v| g.is_clique(g.neighbors(v)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// No induced P4 and no induced C4.
    Fast,
    /// α(H) = m(H) for every nonempty induced subgraph H.
    Definitional,
}

pub fn is_trivially_perfect(g: &Graph, mode: Mode) -> Result<RecognitionResult> {
    let witness = match mode {
        Mode::Fast => find_induced(g, Pattern::P4).or_else(|| find_induced(g, Pattern::C4)),
        Mode::Definitional => {
            check_sweep_limit(g, "trivially perfect (definitional)")?;
            let mut hit = None;
            for s in induced_subsets(g.order()) {
                let h = g.induced_subgraph(s);
                if independence_number(&h)? != maximal_clique_count(&h)? {
                    hit = Some(s);
                    break;
                }
            }
            hit
        }
    };
    Ok(RecognitionResult {
        property: Property::TriviallyPerfect,
        holds: witness.is_none(),
        certificate: witness.map_or(Certificate::None, Certificate::InducedSubgraph),
    })
}

/// Graph invariants that can be paired in a perfectness sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parameter {
    Omega,
    Chi,
    Gamma,
    Psi,
    Col,
}

impl Parameter {
    /// Exact value via the solvers.
    pub fn evaluate(self, g: &Graph) -> Result<usize> {
        match self {
            Parameter::Omega => clique_number(g),
            Parameter::Chi => Ok(chromatic_number(g)?.0),
            Parameter::Gamma => grundy_value(g),
            Parameter::Psi => achromatic_number(g),
            Parameter::Col => coloring_number(g),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PerfectnessPair {
    GammaOmega,
    GammaChi,
    ColOmega,
    GammaCol,
    PsiOmega,
    PsiChi,
    PsiGamma,
}

impl PerfectnessPair {
    pub fn parameters(self) -> (Parameter, Parameter) {
        use Parameter::*;
        match self {
            PerfectnessPair::GammaOmega => (Gamma, Omega),
            PerfectnessPair::GammaChi => (Gamma, Chi),
            PerfectnessPair::ColOmega => (Col, Omega),
            PerfectnessPair::GammaCol => (Gamma, Col),
            PerfectnessPair::PsiOmega => (Psi, Omega),
            PerfectnessPair::PsiChi => (Psi, Chi),
            PerfectnessPair::PsiGamma => (Psi, Gamma),
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            PerfectnessPair::GammaOmega => "gamma_omega",
            PerfectnessPair::GammaChi => "gamma_chi",
            PerfectnessPair::ColOmega => "col_omega",
            PerfectnessPair::GammaCol => "gamma_col",
            PerfectnessPair::PsiOmega => "psi_omega",
            PerfectnessPair::PsiChi => "psi_chi",
            PerfectnessPair::PsiGamma => "psi_gamma",
        }
    }
}

fn check_sweep_limit(g: &Graph, what: &'static str) -> Result<()> {
    if g.order() > SWEEP_LIMIT {
        return Err(Error::LimitExceeded {
            what,
            n: g.order(),
            limit: SWEEP_LIMIT,
        });
    }
    Ok(())
}

/// Nonempty subsets of `0..n` ordered by size, then by bitmask.
pub fn induced_subsets(n: usize) -> Vec<VertexSet> {
    let mut all: Vec<VertexSet> = (1..=VertexSet::full(n).bits()).map(VertexSet).collect();
    all.sort_by_key(|s| (s.len(), s.bits()));
    all
}

/// Checks `left(H) = right(H)` on every nonempty induced subgraph, reporting
/// the smallest violating vertex set.
pub fn perfectness_sweep(g: &Graph, pair: PerfectnessPair) -> Result<RecognitionResult> {
    perfectness_sweep_with(g, pair, &mut |h, p| p.evaluate(h))
}

/// [`perfectness_sweep`] with a caller-supplied evaluator, so the same sweep
/// can run on independent oracle implementations.
pub fn perfectness_sweep_with<F>(
    g: &Graph,
    pair: PerfectnessPair,
    eval: &mut F,
) -> Result<RecognitionResult>
where
    F: FnMut(&Graph, Parameter) -> Result<usize>,
{
    check_sweep_limit(g, "perfectness sweep")?;
    let (left, right) = pair.parameters();
    for s in induced_subsets(g.order()) {
        let h = g.induced_subgraph(s);
        if eval(&h, left)? != eval(&h, right)? {
            return Ok(RecognitionResult {
                property: Property::Perfectness(pair),
                holds: false,
                certificate: Certificate::InducedSubgraph(s),
            });
        }
    }
    Ok(RecognitionResult {
        property: Property::Perfectness(pair),
        holds: true,
        certificate: Certificate::None,
    })
}
