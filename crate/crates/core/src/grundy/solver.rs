//! Exact Grundy number by maximal-independent-set recursion.
//!
//! The first class of any Grundy colouring is a maximal independent set `I`,
//! and the remaining classes form a Grundy colouring of `G - I`. Conversely,
//! prefixing a maximal independent set to a Grundy colouring of `G - I` keeps
//! every vertex Grundy. Hence
//!
//! ```text
//! Γ(G[S]) = 1 + max { Γ(G[S - I]) : I maximal independent in G[S] },  Γ(∅) = 0
//! ```
//!
//! and Γ of a disconnected set is the maximum over its components. Values are
//! memoised on the surviving vertex set. Children are visited in decreasing
//! order of an upper bound and abandoned once the bound cannot beat the best
//! value found so far, so every memoised value is exact.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::cliques::{for_each_maximal_independent_set, max_clique_within};
use crate::invariants::degeneracy::degeneracy;
use crate::limits::solver_limit;

use super::greedy::{first_fit, GrundyCertificate};

const RANDOM_ORDERS: usize = 32;
const SEED: u64 = 0x4752_554e_4459;
const FLOAT_SLACK: f64 = 1e-9;

/// Γ(G) with a validated certificate.
pub fn grundy_number(g: &Graph) -> Result<(usize, GrundyCertificate)> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph("Grundy number"));
    }
    let limit = solver_limit();
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "Grundy number",
            n,
            limit,
        });
    }
    let mut solver = Solver::new(g);
    let (value, coloring) = solver.solve_root()?;
    let cert =
        GrundyCertificate::new(g, coloring).expect("solver produced an invalid Grundy colouring");
    assert!(cert.verify(g), "Grundy certificate failed verification");
    assert_eq!(
        cert.num_colors(),
        value,
        "certificate colour count disagrees with Γ"
    );
    Ok((value, cert))
}

/// Γ(G) only.
pub fn grundy_value(g: &Graph) -> Result<usize> {
    Ok(grundy_number(g)?.0)
}

/// Best first-fit colouring over the degeneracy order, its reverse and a
/// fixed set of seeded random orders.
pub fn greedy_lower_bound(g: &Graph) -> Result<Coloring> {
    let mut order = degeneracy(g)?.ordering;
    let mut best = first_fit(g, &order);
    order.reverse();
    let rev = first_fit(g, &order);
    if rev.num_colors() > best.num_colors() {
        best = rev;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_ORDERS {
        order.shuffle(&mut rng);
        let c = first_fit(g, &order);
        if c.num_colors() > best.num_colors() {
            best = c;
        }
    }
    Ok(best)
}

#[derive(Clone, Copy)]
struct Entry {
    value: u32,
    /// First class of an optimal colouring; 0 for a disconnected set.
    first_class: u64,
}

struct Solver<'a> {
    g: &'a Graph,
    memo: HashMap<u64, Entry>,
    bounds: HashMap<u64, u32>,
}

impl<'a> Solver<'a> {
    fn new(g: &'a Graph) -> Self {
        Solver {
            g,
            memo: HashMap::new(),
            bounds: HashMap::new(),
        }
    }

    fn solve_root(&mut self) -> Result<(usize, Coloring)> {
        let g = self.g;
        let all = g.vertices().bits();
        let greedy = greedy_lower_bound(g)?;
        let floor = greedy.num_colors() as u32;
        if self.upper_bound(all) == floor {
            return Ok((floor as usize, greedy));
        }
        if g.components_within(g.vertices()).len() > 1 {
            let value = self.solve(all);
            if value <= floor {
                return Ok((floor as usize, greedy));
            }
        } else {
            let (value, first) = self.best_split(all, floor);
            match first {
                Some(first_class) => {
                    self.memo.insert(all, Entry { value, first_class });
                }
                None => return Ok((floor as usize, greedy)),
            }
        }
        let classes = self.classes(all);
        let coloring = Coloring::new(g.order(), classes.into_iter().map(VertexSet).collect())?;
        Ok((coloring.num_colors(), coloring))
    }

    fn solve(&mut self, s: u64) -> u32 {
        if s == 0 {
            return 0;
        }
        if let Some(e) = self.memo.get(&s) {
            return e.value;
        }
        let entry = if self.is_edgeless(s) {
            Entry {
                value: 1,
                first_class: s,
            }
        } else {
            let comps = self.g.components_within(VertexSet(s));
            if comps.len() > 1 {
                let value = comps
                    .iter()
                    .map(|c| self.solve(c.bits()))
                    .max()
                    .unwrap_or(0);
                Entry {
                    value,
                    first_class: 0,
                }
            } else {
                let (value, first) = self.best_split(s, 0);
                Entry {
                    value,
                    first_class: first.expect("floor 0 is always beaten"),
                }
            }
        };
        self.memo.insert(s, entry);
        entry.value
    }

    /// Best `1 + Γ(S - I)` over maximal independent sets `I` of the connected
    /// set `s`, or `(floor, None)` if nothing beats `floor`.
    fn best_split(&mut self, s: u64, floor: u32) -> (u32, Option<u64>) {
        let ceiling = self.upper_bound(s);
        let mut children = Vec::new();
        for_each_maximal_independent_set(self.g, VertexSet(s), &mut |i| children.push(i));
        let mut ranked: Vec<(u32, u64)> = children
            .into_iter()
            .map(|i| (1 + self.upper_bound(s & !i), i))
            .collect();
        ranked.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut best = floor;
        let mut first = None;
        for (bound, i) in ranked {
            if bound <= best {
                break;
            }
            let value = 1 + self.solve(s & !i);
            if value > best {
                best = value;
                first = Some(i);
                if best >= ceiling {
                    break;
                }
            }
        }
        (best, first)
    }

    fn is_edgeless(&self, s: u64) -> bool {
        VertexSet(s).iter().all(|v| self.g.adjacency()[v] & s == 0)
    }

    /// Upper bound on Γ(G[s]); the maximum over components when disconnected.
    fn upper_bound(&mut self, s: u64) -> u32 {
        if s == 0 {
            return 0;
        }
        if let Some(&b) = self.bounds.get(&s) {
            return b;
        }
        let comps = self.g.components_within(VertexSet(s));
        let b = if comps.len() > 1 {
            comps
                .iter()
                .map(|c| self.connected_bound(c.bits()))
                .max()
                .unwrap_or(0)
        } else {
            self.connected_bound(s)
        };
        self.bounds.insert(s, b);
        b
    }

    /// min(|S|, Δ₂+1, ⌊(|S|+ω)/2⌋, ⌊2R⌋) for a connected set.
    fn connected_bound(&self, s: u64) -> u32 {
        let size = s.count_ones();
        if size <= 1 {
            return size;
        }
        let adj = self.g.adjacency();
        let deg = |v: usize| (adj[v] & s).count_ones();
        let mut delta2 = 0;
        let mut randic = 0.0f64;
        for u in VertexSet(s).iter() {
            let du = deg(u);
            for v in VertexSet(adj[u] & s).iter() {
                let dv = deg(v);
                if dv <= du {
                    delta2 = delta2.max(dv);
                }
                if u < v {
                    randic += 1.0 / ((du * dv) as f64).sqrt();
                }
            }
        }
        let omega = max_clique_within(self.g, VertexSet(s)) as u32;
        let by_randic = (2.0 * randic + FLOAT_SLACK).floor() as u32;
        size.min(delta2 + 1).min((size + omega) / 2).min(by_randic)
    }

    /// Classes of an optimal Grundy colouring of the solved set `s`.
    fn classes(&self, s: u64) -> Vec<u64> {
        if s == 0 {
            return Vec::new();
        }
        let entry = self.memo[&s];
        if entry.first_class == 0 {
            let mut merged: Vec<u64> = Vec::new();
            for comp in self.g.components_within(VertexSet(s)) {
                for (i, c) in self.classes(comp.bits()).into_iter().enumerate() {
                    if i == merged.len() {
                        merged.push(0);
                    }
                    merged[i] |= c;
                }
            }
            merged
        } else {
            let mut out = vec![entry.first_class];
            out.extend(self.classes(s & !entry.first_class));
            out
        }
    }
}
