//! Deterministic constructions for the named graph families, each carrying
//! the invariant values it is known to attain.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Complete,
    Empty,
    Path,
    Cycle,
    CompleteBipartite,
    Crown,
    BGraph,
    ZakerSoltani,
    NgSharp,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Complete,
        Family::Empty,
        Family::Path,
        Family::Cycle,
        Family::CompleteBipartite,
        Family::Crown,
        Family::BGraph,
        Family::ZakerSoltani,
        Family::NgSharp,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Empty => "empty",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Crown => "crown",
            Family::BGraph => "b_graph",
            Family::ZakerSoltani => "zaker_soltani",
            Family::NgSharp => "ng_sharp",
        }
    }

    /// Parameter names, in the order `build` expects them.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Family::Complete | Family::Empty | Family::Path | Family::Cycle => &["n"],
            Family::CompleteBipartite => &["a", "b"],
            Family::Crown => &["t"],
            Family::BGraph => &["k"],
            Family::ZakerSoltani => &["k", "n"],
            Family::NgSharp => &["n", "k"],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family `{s}`")))
    }
}

/// A family member: identifier, parameters and the invariant values the
/// construction is known to attain (keys are `InvariantReport` field names,
/// plus `chi_complement`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: BTreeMap<&'static str, usize>,
    pub expected: BTreeMap<&'static str, usize>,
}

impl FamilySpec {
    /// Validates `values` against the family's parameter list.
    pub fn new(family: Family, values: &[usize]) -> Result<Self> {
        let names = family.params();
        if names.len() != values.len() {
            return Err(Error::InvalidParameter(format!(
                "{family} takes parameters {names:?}, got {} values",
                values.len()
            )));
        }
        let params: BTreeMap<_, _> = names.iter().copied().zip(values.iter().copied()).collect();
        let p = |k: &str| params[k];
        let expected = match family {
            Family::Complete => {
                let n = p("n");
                check(n >= 1, "complete graph needs n >= 1")?;
                BTreeMap::from([("gamma", n), ("omega", n), ("chi", n), ("psi", n)])
            }
            Family::Empty => {
                let n = p("n");
                check(n >= 1, "empty graph needs n >= 1")?;
                BTreeMap::from([("gamma", 1), ("omega", 1), ("chi", 1)])
            }
            Family::Path => {
                let n = p("n");
                check(n >= 1, "path needs n >= 1")?;
                let mut e = BTreeMap::from([("omega", n.min(2))]);
                if n == 4 {
                    e.extend([("gamma", 3), ("psi", 3), ("col", 2)]);
                }
                e
            }
            Family::Cycle => {
                let n = p("n");
                check(n >= 3, "cycle needs n >= 3")?;
                let mut e = BTreeMap::from([("omega", if n == 3 { 3 } else { 2 })]);
                if n == 4 {
                    e.extend([("gamma", 2), ("psi", 2), ("col", 3)]);
                }
                e
            }
            Family::CompleteBipartite => {
                let (a, b) = (p("a"), p("b"));
                check(a >= 1 && b >= 1, "complete bipartite needs a, b >= 1")?;
                BTreeMap::from([("gamma", 2), ("omega", 2), ("chi", 2)])
            }
            Family::Crown => {
                let t = p("t");
                check(t >= 1, "crown needs t >= 1")?;
                BTreeMap::from([("gamma", t), ("n", 2 * t)])
            }
            Family::BGraph => {
                let k = p("k");
                check(k >= 2, "b_graph needs k >= 2")?;
                BTreeMap::from([("gamma", k), ("n", 2 * k - 2), ("omega", 2)])
            }
            Family::ZakerSoltani => {
                let (k, n) = (p("k"), p("n"));
                check(k >= 2, "zaker_soltani needs k >= 2")?;
                check(k <= n, "zaker_soltani needs k <= n")?;
                check((n - k).is_multiple_of(2), "zaker_soltani needs n - k even")?;
                let t = (n - k) / 2;
                BTreeMap::from([
                    ("omega", k),
                    ("gamma", (n + k) / 2),
                    ("max_degree", t + k - 1),
                    ("n", n),
                ])
            }
            Family::NgSharp => {
                let (n, k) = (p("n"), p("k"));
                check(k >= 1 && k < n, "ng_sharp needs 1 <= k <= n - 1")?;
                BTreeMap::from([("gamma", k + 1), ("chi_complement", n - k), ("n", n)])
            }
        };
        Ok(FamilySpec {
            family,
            params,
            expected,
        })
    }

    pub fn build(&self) -> Result<Graph> {
        let p = |k: &str| self.params[k];
        match self.family {
            Family::Complete => complete(p("n")),
            Family::Empty => empty(p("n")),
            Family::Path => path(p("n")),
            Family::Cycle => cycle(p("n")),
            Family::CompleteBipartite => complete_bipartite(p("a"), p("b")),
            Family::Crown => crown(p("t")),
            Family::BGraph => b_graph(p("k")),
            Family::ZakerSoltani => zaker_soltani(p("k"), p("n")),
            Family::NgSharp => ng_sharp(p("n"), p("k")),
        }
    }
}

fn check(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.to_string()))
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    check(n >= 1, "complete graph needs n >= 1")?;
    Ok(Graph::edgeless(n)?.complement())
}

pub fn empty(n: usize) -> Result<Graph> {
    check(n >= 1, "empty graph needs n >= 1")?;
    Graph::edgeless(n)
}

pub fn path(n: usize) -> Result<Graph> {
    check(n >= 1, "path needs n >= 1")?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    check(n >= 3, "cycle needs n >= 3")?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// K_{a,b}: vertices `0..a` on one side, `a..a+b` on the other.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    check(a >= 1 && b >= 1, "complete bipartite needs a, b >= 1")?;
    Graph::edgeless(a)?.join(&Graph::edgeless(b)?)
}

/// Bipartite graph on parts `a_i = i-1` and `b_i = t+i-1` (`i = 1..=r`)
/// with `a_i ~ b_j` for `i != j`, plus `a_r b_r` when `keep_last`.
fn bipartite_minus_matching(r: usize, keep_last: bool) -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..r {
        for j in 0..r {
            if i != j || (keep_last && i == r - 1) {
                edges.push((i, r + j));
            }
        }
    }
    Graph::from_edges(2 * r, &edges)
}

/// H_t: K_{t,t} minus a perfect matching. `a_i ~ b_j` iff `i != j`.
pub fn crown(t: usize) -> Result<Graph> {
    check(t >= 1, "crown needs t >= 1")?;
    bipartite_minus_matching(t, false)
}

/// B_k: K_{k-1,k-1} minus the matching `a_i b_i`, `i = 1..k-2`; `a_{k-1}`
/// and `b_{k-1}` keep full degree.
pub fn b_graph(k: usize) -> Result<Graph> {
    check(k >= 2, "b_graph needs k >= 2")?;
    bipartite_minus_matching(k - 1, true)
}

/// G_{k,n}: a clique `K_k = A ∪ B` (`|A| = ⌈k/2⌉`, vertices `0..|A|`, then
/// `B`), followed by the crown H_t on `t = (n-k)/2` pairs `(a_i, b_i)`, with
/// all of `A` joined to every `a_i` and all of `B` to every `b_i`.
pub fn zaker_soltani(k: usize, n: usize) -> Result<Graph> {
    check(k >= 2, "zaker_soltani needs k >= 2")?;
    check(k <= n, "zaker_soltani needs k <= n")?;
    check((n - k).is_multiple_of(2), "zaker_soltani needs n - k even")?;
    let t = (n - k) / 2;
    let a_size = k.div_ceil(2);
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    let a = |i: usize| k + i;
    let b = |i: usize| k + t + i;
    for i in 0..t {
        for j in 0..t {
            if i != j {
                edges.push((a(i), b(j)));
            }
        }
        for x in 0..a_size {
            edges.push((x, a(i)));
        }
        for y in a_size..k {
            edges.push((y, b(i)));
        }
    }
    Graph::from_edges(n, &edges)
}

/// G_{n,k}: K_k joined to the edgeless graph on `n-k` vertices.
pub fn ng_sharp(n: usize, k: usize) -> Result<Graph> {
    check(k >= 1 && k < n, "ng_sharp needs 1 <= k <= n - 1")?;
    Graph::edgeless(k)?
        .complement()
        .join(&Graph::edgeless(n - k)?)
}
