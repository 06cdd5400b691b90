//! Crossing sets and their planarizations, the exact crossing-number and
//! tile-crossing-number oracle, the upper-witness heuristic, and the
//! criticality and degeneracy checkers.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::CrossingError;
use crate::graph::planarity::planar_dense;
use crate::graph::{MultiGraph, VertexId};
use crate::report::Provenance;

mod critical;
mod exact;
mod insert;

pub use critical::{
    is_crossing_critical, is_degenerate_tile, CriticalOptions, CriticalReport, Degeneracy, EdgeCheck,
    Verdict, EDGE_BUDGET,
};
pub use exact::{cr_exact, good_pairs, tcr_exact, SearchOptions, DEFAULT_BUDGET};
pub use insert::{witness_upper, witness_upper_with, InsertOptions};

/// Crossings of a good drawing, as pairs of independent edge indices.
///
/// `order` fixes the sequence of crossings along an edge (indices into
/// `pairs`, read from `Edge::u` towards `Edge::v`); edges absent from it
/// take their crossings in ascending pair index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingSet {
    pub pairs: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub order: BTreeMap<usize, Vec<usize>>,
}

impl CrossingSet {
    pub fn new(pairs: Vec<(usize, usize)>) -> Self {
        CrossingSet {
            pairs,
            order: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pair indices on edge `e`, in drawing order.
    pub fn along(&self, e: usize) -> Vec<usize> {
        if let Some(o) = self.order.get(&e) {
            return o.clone();
        }
        (0..self.pairs.len())
            .filter(|&i| self.pairs[i].0 == e || self.pairs[i].1 == e)
            .collect()
    }

    pub fn validate(&self, g: &MultiGraph) -> Result<(), CrossingError> {
        let m = g.edge_count();
        let mut seen = std::collections::BTreeSet::new();
        for &(a, b) in &self.pairs {
            let bad = |msg: &str| Err(CrossingError::InvalidPair(a, b, msg.into()));
            if a >= m || b >= m {
                return bad("edge index out of range");
            }
            if a == b {
                return bad("edge paired with itself");
            }
            if g.edge(a).shares_endpoint(&g.edge(b)) {
                return bad("edges share an endpoint");
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return bad("pair repeated");
            }
        }
        for (&e, list) in &self.order {
            let mut want: Vec<usize> = (0..self.pairs.len())
                .filter(|&i| self.pairs[i].0 == e || self.pairs[i].1 == e)
                .collect();
            let mut have = list.clone();
            want.sort_unstable();
            have.sort_unstable();
            if e >= m || want != have {
                return Err(CrossingError::InvalidOrder(e));
            }
        }
        Ok(())
    }

    /// Same crossings on the graph with edge `e` deleted (indices above `e`
    /// shift down); `None` if `e` is crossed.
    pub fn without_edge(&self, e: usize) -> Option<CrossingSet> {
        if self.pairs.iter().any(|&(a, b)| a == e || b == e) {
            return None;
        }
        let f = |x: usize| if x > e { x - 1 } else { x };
        Some(CrossingSet {
            pairs: self.pairs.iter().map(|&(a, b)| (f(a), f(b))).collect(),
            order: self.order.iter().map(|(&k, v)| (f(k), v.clone())).collect(),
        })
    }
}

/// A planarization and the dummy vertex standing for each pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Planarized {
    pub graph: MultiGraph,
    pub dummies: Vec<VertexId>,
}

/// Replace each crossing pair by a degree-4 dummy vertex splitting both
/// edges, in the order fixed by `cs`.
pub fn planarize(g: &MultiGraph, cs: &CrossingSet) -> Result<Planarized, CrossingError> {
    cs.validate(g)?;
    let mut h = MultiGraph::new();
    for &v in g.vertices() {
        h.add_vertex(v);
    }
    let dummies: Vec<VertexId> = (0..cs.len()).map(|_| h.add_fresh_vertex()).collect();
    for (i, e) in g.edges().iter().enumerate() {
        let mut pts = vec![e.u];
        pts.extend(cs.along(i).into_iter().map(|p| dummies[p]));
        pts.push(e.v);
        for w in pts.windows(2) {
            h.add_edge(w[0], w[1]).expect("planarization endpoints exist");
        }
    }
    Ok(Planarized { graph: h, dummies })
}

/// Planarity of the planarization on dense positions; `along(e)` lists the
/// pair positions on edge `e` in order (empty for uncrossed edges).
pub(crate) fn planarization_is_planar(
    n: usize,
    ends: &[(usize, usize)],
    k: usize,
    along: impl Fn(usize) -> Option<Vec<usize>>,
) -> bool {
    let mut out = Vec::with_capacity(ends.len() + 2 * k);
    for (i, &(a, b)) in ends.iter().enumerate() {
        match along(i) {
            None => out.push((a, b)),
            Some(list) => {
                let mut prev = a;
                for p in list {
                    out.push((prev, n + p));
                    prev = n + p;
                }
                out.push((prev, b));
            }
        }
    }
    planar_dense(n + k, &out)
}

/// `cs` is valid for `g` and its planarization is planar.
pub fn verify_witness(g: &MultiGraph, cs: &CrossingSet) -> bool {
    if cs.validate(g).is_err() {
        return false;
    }
    let d = g.dense();
    let mut on: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..g.edge_count() {
        let l = cs.along(i);
        if !l.is_empty() {
            on.insert(i, l);
        }
    }
    planarization_is_planar(d.len(), &d.ends, cs.len(), |e| on.get(&e).cloned())
}

/// Why a lower bound holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum LowerCertificate {
    /// No crossing set smaller than `below` planarizes.
    Exhaustion { below: usize },
    TwistedFamily { size: usize },
    StaircaseStrip { width: usize, bound: usize },
    ZipAdditivity { parts: Vec<u64> },
    None,
}

/// Outcome of an exact or bounded crossing-number computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrResult {
    /// Set when the bounds meet.
    pub value: Option<usize>,
    pub exact: bool,
    pub lower: usize,
    pub upper: Option<usize>,
    pub witness: Option<CrossingSet>,
    pub certificate: LowerCertificate,
    pub provenance: Option<Provenance>,
    /// Planarity tests spent.
    pub tests: u64,
}

impl CrResult {
    pub(crate) fn bounds(
        lower: usize,
        witness: Option<CrossingSet>,
        certificate: LowerCertificate,
        tests: u64,
    ) -> Self {
        let upper = witness.as_ref().map(|w| w.len());
        let exact = upper == Some(lower);
        let provenance = exact.then(|| match certificate {
            LowerCertificate::Exhaustion { .. } | LowerCertificate::None => Provenance::OracleExact,
            _ => Provenance::CertificateLowerWitnessUpper,
        });
        CrResult {
            value: exact.then_some(lower),
            exact,
            lower,
            upper,
            witness,
            certificate,
            provenance,
            tests,
        }
    }

    /// Combine with an independently certified lower bound.
    pub fn with_lower(mut self, bound: usize, certificate: LowerCertificate) -> Self {
        if bound > self.lower {
            self = CrResult::bounds(bound, self.witness, certificate, self.tests);
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::planarity::is_planar;

    #[test]
    fn k5_single_crossing() {
        let g = MultiGraph::complete(5);
        // edges of K5 in order: 01 02 03 04 12 13 14 23 24 34
        let cs = CrossingSet::new(vec![(1, 5)]);
        let p = planarize(&g, &cs).unwrap();
        assert!(is_planar(&p.graph));
        assert!(verify_witness(&g, &cs));
        assert_eq!(planarize(&g, &CrossingSet::default()).unwrap().graph, g);
    }

    #[test]
    fn invalid_pairs() {
        let g = MultiGraph::complete(4);
        assert!(CrossingSet::new(vec![(0, 1)]).validate(&g).is_err());
        assert!(CrossingSet::new(vec![(0, 9)]).validate(&g).is_err());
        assert!(CrossingSet::new(vec![(0, 5), (5, 0)]).validate(&g).is_err());
        let mut cs = CrossingSet::new(vec![(0, 5)]);
        cs.order.insert(1, vec![0]);
        assert!(cs.validate(&g).is_err());
    }

    #[test]
    fn shared_edge_order_is_deterministic() {
        let g = MultiGraph::complete(6);
        // edge 0 = 01 crossed by 23 and 45
        let e23 = g.edges().iter().position(|e| e.key() == (2, 3)).unwrap();
        let e45 = g.edges().iter().position(|e| e.key() == (4, 5)).unwrap();
        let cs = CrossingSet::new(vec![(0, e23), (0, e45)]);
        let a = planarize(&g, &cs).unwrap();
        let b = planarize(&g, &cs).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.graph.vertex_count(), 8);
        assert_eq!(a.graph.edge_count(), g.edge_count() + 4);
        let mut rev = cs.clone();
        rev.order.insert(0, vec![1, 0]);
        assert_ne!(planarize(&g, &rev).unwrap(), a);
    }
}
