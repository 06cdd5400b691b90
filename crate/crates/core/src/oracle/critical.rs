//! Crossing-criticality of graphs and degeneracy of tiles.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::exact::{good_pairs, search, SearchOptions};
use super::insert::{witness_upper_with, InsertOptions};
use super::{verify_witness, CrossingSet, LowerCertificate};
use crate::graph::MultiGraph;
use crate::tile::{frame_gadget, is_perfect_tile, is_planar_tile, PerfectReport, Tile};

/// Per-edge default budget in planarity tests.
pub const EDGE_BUDGET: u64 = 1_000_000;

/// Levels this small are searched exactly before trying the heuristic.
const EXACT_FIRST: u128 = 20_000;

#[derive(Clone, Debug)]
pub struct CriticalOptions {
    /// Budget for establishing `cr ≥ k` by exhaustion.
    pub budget: u64,
    pub edge_budget: u64,
    /// An independently verified bound `cr ≥ k`; skips exhaustion.
    pub lower: Option<(usize, LowerCertificate)>,
    /// Construction-supplied witnesses for `G − e`, by edge index of `G`
    /// (pair indices refer to `G − e`).
    pub edge_seeds: BTreeMap<usize, Vec<CrossingSet>>,
    pub insert: InsertOptions,
    pub parallel: bool,
}

impl Default for CriticalOptions {
    fn default() -> Self {
        CriticalOptions {
            budget: super::DEFAULT_BUDGET,
            edge_budget: EDGE_BUDGET,
            lower: None,
            edge_seeds: BTreeMap::new(),
            insert: InsertOptions::default(),
            parallel: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "camelCase")]
pub enum EdgeCheck {
    /// Deleting the edge admits a drawing with fewer than `k` crossings.
    Witness { witness: CrossingSet },
    /// Deleting the edge keeps at least `k` crossings (exhaustion).
    NotBelow,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "camelCase")]
pub enum Verdict {
    Critical,
    /// `edge` is `None` when `cr < k` for the graph itself.
    NotCritical { edge: Option<usize> },
    Unknown { edges: Vec<usize>, lower_established: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalReport {
    pub k: usize,
    pub lower: Option<LowerCertificate>,
    pub edges: Vec<EdgeCheck>,
    pub verdict: Verdict,
}

impl CriticalReport {
    pub fn is_critical(&self) -> bool {
        self.verdict == Verdict::Critical
    }

    pub fn witnessed(&self) -> usize {
        self.edges
            .iter()
            .filter(|c| matches!(c, EdgeCheck::Witness { .. }))
            .count()
    }
}

/// Below-`k` check for one graph: seeds, then exact search when the level
/// is tiny, then the heuristic, then budgeted exact search.
fn below(
    h: &MultiGraph,
    allowed: &[bool],
    k: usize,
    seeds: &[CrossingSet],
    opts: &CriticalOptions,
) -> EdgeCheck {
    let mut ins = opts.insert.clone();
    ins.protected = allowed.iter().map(|a| !a).collect();
    let exact = |budget: u64| {
        let so = SearchOptions {
            budget,
            seed: None,
            parallel: false,
            max_level: Some(k - 1),
        };
        match search(h, allowed, &so) {
            Ok(r) if r.exact => EdgeCheck::Witness {
                witness: r.witness.unwrap(),
            },
            Ok(r) if r.lower >= k => EdgeCheck::NotBelow,
            _ => EdgeCheck::Unknown,
        }
    };
    if let Some(w) = seeds.iter().find(|w| {
        w.len() < k && w.pairs.iter().all(|&(a, b)| allowed[a] && allowed[b]) && verify_witness(h, w)
    }) {
        return EdgeCheck::Witness { witness: w.clone() };
    }
    ins.seeds.clear();
    let p = good_pairs(h, allowed).len();
    if k == 1 || binom_small(p, k - 1) {
        return exact(opts.edge_budget);
    }
    if let Some(w) = witness_upper_with(h, k - 1, &ins) {
        return EdgeCheck::Witness { witness: w };
    }
    exact(opts.edge_budget)
}

fn binom_small(n: usize, k: usize) -> bool {
    let mut r: u128 = 1;
    for i in 0..k.min(n) {
        r = r * (n - i) as u128 / (i as u128 + 1);
        if r > EXACT_FIRST {
            return false;
        }
    }
    true
}

fn summarize(k: usize, lower: Option<LowerCertificate>, ok: bool, edges: Vec<EdgeCheck>) -> CriticalReport {
    let verdict = if let Some(e) = edges.iter().position(|c| *c == EdgeCheck::NotBelow) {
        Verdict::NotCritical { edge: Some(e) }
    } else {
        let unknown: Vec<usize> = (0..edges.len())
            .filter(|&i| edges[i] == EdgeCheck::Unknown)
            .collect();
        if unknown.is_empty() && ok {
            Verdict::Critical
        } else {
            Verdict::Unknown {
                edges: unknown,
                lower_established: ok,
            }
        }
    };
    CriticalReport {
        k,
        lower,
        edges,
        verdict,
    }
}

fn sweep(m: usize, parallel: bool, f: impl Fn(usize) -> EdgeCheck + Sync + Send) -> Vec<EdgeCheck> {
    if parallel {
        (0..m).into_par_iter().map(f).collect()
    } else {
        (0..m).map(f).collect()
    }
}

/// `cr(g) ≥ k` and `cr(g − e) < k` for every edge `e`.
pub fn is_crossing_critical(g: &MultiGraph, k: usize, opts: &CriticalOptions) -> CriticalReport {
    let m = g.edge_count();
    if k == 0 {
        return summarize(0, None, true, vec![EdgeCheck::NotBelow; m.min(1)]);
    }
    let (ok, lower) = match &opts.lower {
        Some((b, c)) if *b >= k => (true, Some(c.clone())),
        _ => {
            let so = SearchOptions {
                budget: opts.budget,
                seed: None,
                parallel: opts.parallel,
                max_level: Some(k - 1),
            };
            match search(g, &vec![true; m], &so) {
                Ok(r) if r.exact => {
                    return CriticalReport {
                        k,
                        lower: Some(r.certificate),
                        edges: Vec::new(),
                        verdict: Verdict::NotCritical { edge: None },
                    };
                }
                Ok(r) => (r.lower >= k, Some(r.certificate)),
                Err(_) => (false, None),
            }
        }
    };
    let no_seeds = Vec::new();
    let edges = sweep(m, opts.parallel, |e| {
        let h = g.without_edges(&[e]);
        let seeds = opts.edge_seeds.get(&e).unwrap_or(&no_seeds);
        below(&h, &vec![true; m - 1], k, seeds, opts)
    });
    summarize(k, lower, ok, edges)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degeneracy {
    pub perfect: PerfectReport,
    pub planar: bool,
    pub report: Option<CriticalReport>,
}

impl Degeneracy {
    pub fn is_degenerate(&self) -> bool {
        self.perfect.perfect
            && self.planar
            && self.report.as_ref().is_some_and(|r| {
                r.edges
                    .iter()
                    .all(|c| matches!(c, EdgeCheck::Witness { .. }))
            })
    }
}

/// Perfect, planar, and `tcr(T↕ − e) < k` for every edge. Only the per-edge
/// upper bounds are checked; `tcr(T↕) ≥ k` is not part of the definition.
pub fn is_degenerate_tile(t: &Tile, k: usize, opts: &CriticalOptions) -> Degeneracy {
    let perfect = is_perfect_tile(t);
    let planar = is_planar_tile(t);
    if !perfect.perfect || !planar || k == 0 {
        return Degeneracy {
            perfect,
            planar,
            report: None,
        };
    }
    let twisted = t.invert_right();
    let m = t.graph.edge_count();
    let no_seeds = Vec::new();
    let edges = sweep(m, opts.parallel, |e| {
        let sub = Tile {
            graph: twisted.graph.without_edges(&[e]),
            left: twisted.left.clone(),
            right: twisted.right.clone(),
        };
        let (h, added) = frame_gadget(&sub, 1);
        let mut allowed = vec![true; h.edge_count()];
        for a in added {
            allowed[a] = false;
        }
        let seeds = opts.edge_seeds.get(&e).unwrap_or(&no_seeds);
        below(&h, &allowed, k, seeds, opts)
    });
    let report = summarize(k, None, true, edges);
    Degeneracy {
        perfect,
        planar,
        report: Some(report),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_not_critical() {
        let r = is_crossing_critical(&MultiGraph::cycle(5), 1, &CriticalOptions::default());
        assert_eq!(r.verdict, Verdict::NotCritical { edge: None });
    }

    #[test]
    fn kuratowski_graphs_are_critical() {
        for g in [MultiGraph::complete(5), MultiGraph::complete_bipartite(3, 3)] {
            let r = is_crossing_critical(&g, 1, &CriticalOptions::default());
            assert!(r.is_critical(), "{r:?}");
        }
    }

    #[test]
    fn k6_is_3_critical() {
        let r = is_crossing_critical(&MultiGraph::complete(6), 3, &CriticalOptions::default());
        assert!(r.is_critical(), "{:?}", r.verdict);
    }

    #[test]
    fn subdivided_edge_plus_pendant_not_critical() {
        let mut g = MultiGraph::complete(5);
        let x = g.add_fresh_vertex();
        g.add_edge(0, x).unwrap();
        let r = is_crossing_critical(&g, 1, &CriticalOptions::default());
        assert_eq!(r.verdict, Verdict::NotCritical { edge: Some(10) });
    }
}
