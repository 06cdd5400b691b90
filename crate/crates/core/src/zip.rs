//! Zip products, bundles and coherence, the neighbourhood sufficient
//! condition for homogeneity, iterated zips and the `R(d, d', p)` family.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::ZipError;
use crate::graph::canon::canonical_form;
use crate::graph::connectivity::{edge_disjoint_paths_in, vertex_connectivity_at_least, EdgePath};
use crate::graph::Dense;
use crate::graph::{MultiGraph, VertexId};
use crate::report::{CrValue, Provenance};

/// Largest degree whose `d!` bijections [`all_zips`] enumerates.
pub const ZIP_DEGREE_BUDGET: usize = 7;

/// Flow computations spent by [`find_two_coherent_bundles`] by default.
pub const BUNDLE_BUDGET: usize = 2_000;

/// Targets tried for `B_2` per choice of `B_1`.
const SECOND_TARGETS: usize = 32;

/// Graphs up to this size get direct connectivity checks in reports.
pub const DIRECT_CHECK_BOUND: usize = 3_000;

pub const BLACK: &str = "black";
pub const WHITE: &str = "white";

/// `G_1 ⊙_σ G_2` at `v1`, `v2`; `sigma` maps `N(v1)` onto `N(v2)`.
#[derive(Clone, Debug)]
pub struct ZipSpec<'a> {
    pub g1: &'a MultiGraph,
    pub v1: VertexId,
    pub g2: &'a MultiGraph,
    pub v2: VertexId,
    /// `None` pairs the sorted neighbourhoods in order.
    pub sigma: Option<BTreeMap<VertexId, VertexId>>,
}

/// Result of a zip: the graph and where `g2`'s surviving vertices went.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zipped {
    pub graph: MultiGraph,
    pub map2: BTreeMap<VertexId, VertexId>,
}

fn simple_neighbours(g: &MultiGraph, v: VertexId) -> Result<Vec<VertexId>, ZipError> {
    if !g.has_vertex(v) {
        return Err(crate::GraphError::MissingVertex(v).into());
    }
    let set: BTreeSet<VertexId> = g.neighbors(v).into_iter().collect();
    if set.len() != g.degree(v) {
        return Err(ZipError::NotSimple(v));
    }
    Ok(set.into_iter().collect())
}

pub fn default_sigma(g1: &MultiGraph, v1: VertexId, g2: &MultiGraph, v2: VertexId) -> Result<BTreeMap<VertexId, VertexId>, ZipError> {
    let (a, b) = (simple_neighbours(g1, v1)?, simple_neighbours(g2, v2)?);
    if a.len() != b.len() {
        return Err(ZipError::DegreeMismatch(a.len(), b.len()));
    }
    Ok(a.into_iter().zip(b).collect())
}

/// `g1`'s vertices keep their ids; `g2`'s are renumbered after them in id
/// order. Edges: `g1 - v1`, then `g2 - v2`, then `u σ(u)` by sorted `u`.
pub fn zip(spec: &ZipSpec) -> Result<Zipped, ZipError> {
    let (a, b) = (simple_neighbours(spec.g1, spec.v1)?, simple_neighbours(spec.g2, spec.v2)?);
    if a.len() != b.len() {
        return Err(ZipError::DegreeMismatch(a.len(), b.len()));
    }
    let sigma = match &spec.sigma {
        None => a.iter().copied().zip(b.iter().copied()).collect(),
        Some(s) => {
            let keys: Vec<VertexId> = s.keys().copied().collect();
            let vals: BTreeSet<VertexId> = s.values().copied().collect();
            if keys != a || vals.into_iter().collect::<Vec<_>>() != b {
                return Err(ZipError::BadSigma);
            }
            s.clone()
        }
    };
    let mut graph = spec.g1.without_vertices(&[spec.v1]);
    let map2 = graph.disjoint_union(&spec.g2.without_vertices(&[spec.v2]));
    for (u, w) in &sigma {
        graph.add_edge(*u, map2[w])?;
    }
    Ok(Zipped { graph, map2 })
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..d).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out.sort();
    out
}

/// One zip per isomorphism class over all `d!` bijections, ordered by
/// canonical form.
pub fn all_zips(g1: &MultiGraph, v1: VertexId, g2: &MultiGraph, v2: VertexId) -> Result<Vec<MultiGraph>, ZipError> {
    let (a, b) = (simple_neighbours(g1, v1)?, simple_neighbours(g2, v2)?);
    if a.len() != b.len() {
        return Err(ZipError::DegreeMismatch(a.len(), b.len()));
    }
    if a.len() > ZIP_DEGREE_BUDGET {
        return Err(ZipError::Budget(a.len()));
    }
    let found: Vec<(Vec<u8>, MultiGraph)> = permutations(a.len())
        .par_iter()
        .map(|p| {
            let sigma = a.iter().enumerate().map(|(i, &u)| (u, b[p[i]])).collect();
            let z = zip(&ZipSpec {
                g1,
                v1,
                g2,
                v2,
                sigma: Some(sigma),
            })?;
            Ok((canonical_form(&z.graph)?, z.graph))
        })
        .collect::<Result<_, ZipError>>()?;
    let mut classes: BTreeMap<Vec<u8>, MultiGraph> = BTreeMap::new();
    for (k, g) in found {
        classes.entry(k).or_insert(g);
    }
    Ok(classes.into_values().collect())
}

/// `deg(v)` edge-disjoint paths from `center` to `target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bundle {
    pub center: VertexId,
    pub target: VertexId,
    pub paths: Vec<EdgePath>,
}

impl Bundle {
    /// Edges of the bundle away from the center.
    pub fn outer_edges(&self, g: &MultiGraph) -> BTreeSet<usize> {
        self.paths
            .iter()
            .flat_map(|p| p.edges.iter().copied())
            .filter(|&e| !g.edge(e).touches(self.center))
            .collect()
    }
}

fn bundle_avoiding(g: &MultiGraph, d: &Dense, v: VertexId, u: VertexId, blocked: &[bool]) -> Option<Bundle> {
    let k = g.degree(v);
    let (Some(s), Some(t)) = (d.pos(v), d.pos(u)) else {
        return None;
    };
    if s == t || k == 0 || d.adj[t].iter().filter(|&&(_, e)| !blocked[e]).count() < k {
        return None;
    }
    let paths = edge_disjoint_paths_in(d, s, t, k, blocked);
    (paths.len() == k).then_some(Bundle { center: v, target: u, paths })
}

pub fn find_bundle(g: &MultiGraph, v: VertexId, u: VertexId) -> Option<Bundle> {
    bundle_avoiding(g, &g.dense(), v, u, &vec![false; g.edge_count()])
}

/// Two bundles whose edges away from the center are disjoint.
pub fn coherent(g: &MultiGraph, b1: &Bundle, b2: &Bundle) -> bool {
    let ok = |b: &Bundle| {
        b.paths.len() == g.degree(b.center)
            && b.paths.iter().all(|p| {
                p.vertices.first() == Some(&b.center)
                    && p.vertices.last() == Some(&b.target)
                    && crate::certificates::is_simple_path(g, p)
            })
            && {
                let all: Vec<usize> = b.paths.iter().flat_map(|p| p.edges.iter().copied()).collect();
                all.iter().collect::<BTreeSet<_>>().len() == all.len()
            }
    };
    b1.center == b2.center && ok(b1) && ok(b2) && b1.outer_edges(g).is_disjoint(&b2.outer_edges(g))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "camelCase")]
pub enum Coherence {
    Found { first: Bundle, second: Bundle },
    /// No bundle of `v` exists at all.
    Absent,
    /// The budget ran out before a pair was found.
    Unknown,
}

impl Coherence {
    pub fn found(&self) -> bool {
        matches!(self, Coherence::Found { .. })
    }
}

/// Targets by BFS distance from `v`, then id.
fn targets(g: &MultiGraph, v: VertexId) -> Vec<VertexId> {
    let mut seen = BTreeSet::from([v]);
    let mut q = VecDeque::from([v]);
    let mut out = Vec::new();
    while let Some(x) = q.pop_front() {
        let mut ns = g.neighbors(x);
        ns.sort_unstable();
        ns.dedup();
        for y in ns {
            if seen.insert(y) {
                out.push(y);
                q.push_back(y);
            }
        }
    }
    out
}

pub fn find_two_coherent_bundles(g: &MultiGraph, v: VertexId) -> Coherence {
    find_two_coherent_bundles_with(g, v, BUNDLE_BUDGET)
}

/// Search over targets `u1` (nearest first); `B_1` by flow, `B_2` by flow
/// with `B_1`'s outer edges removed, over the nearest admissible targets.
/// On failure `B_1` is re-routed once per outer edge by blocking that edge.
pub fn find_two_coherent_bundles_with(g: &MultiGraph, v: VertexId, budget: usize) -> Coherence {
    if !g.has_vertex(v) || g.degree(v) == 0 {
        return Coherence::Absent;
    }
    let ts = targets(g, v);
    let d = g.dense();
    let mut spent = 0usize;
    let mut any = false;
    let none = vec![false; g.edge_count()];
    let k = g.degree(v);
    let free = |u: VertexId, bl: &[bool]| d.pos(u).is_some_and(|t| d.adj[t].iter().filter(|&&(_, e)| !bl[e]).count() >= k);
    for &u1 in &ts {
        if !free(u1, &none) {
            continue;
        }
        spent += 1;
        if spent > budget {
            return Coherence::Unknown;
        }
        let Some(b1) = bundle_avoiding(g, &d, v, u1, &none) else {
            continue;
        };
        any = true;
        let mut firsts = vec![b1.clone()];
        for e in b1.outer_edges(g) {
            let mut bl = none.clone();
            bl[e] = true;
            if let Some(b) = bundle_avoiding(g, &d, v, u1, &bl) {
                firsts.push(b);
            }
            spent += 1;
        }
        for first in firsts {
            let mut bl = none.clone();
            for e in first.outer_edges(g) {
                bl[e] = true;
            }
            for &u2 in ts.iter().filter(|&&u| free(u, &bl)).take(SECOND_TARGETS) {
                spent += 1;
                if spent > budget {
                    return Coherence::Unknown;
                }
                if let Some(second) = bundle_avoiding(g, &d, v, u2, &bl) {
                    return Coherence::Found { first, second };
                }
            }
        }
    }
    if any {
        Coherence::Unknown
    } else {
        Coherence::Absent
    }
}

/// Every two neighbours `x, y` of `v` are twins (same multiplicities to
/// every third vertex), so any permutation of `N(v)` extends to an
/// automorphism fixing `v`.
pub fn homogeneous_sufficient(g: &MultiGraph, v: VertexId) -> bool {
    let Ok(ns) = simple_neighbours(g, v) else {
        return false;
    };
    let row = |x: VertexId| -> BTreeMap<VertexId, usize> {
        let mut m = BTreeMap::new();
        for y in g.neighbors(x) {
            *m.entry(y).or_insert(0) += 1;
        }
        m
    };
    let rows: Vec<BTreeMap<VertexId, usize>> = ns.iter().map(|&x| row(x)).collect();
    for i in 0..ns.len() {
        for j in i + 1..ns.len() {
            let (x, y) = (ns[i], ns[j]);
            let strip = |m: &BTreeMap<VertexId, usize>| -> BTreeMap<VertexId, usize> {
                m.iter().filter(|(&z, _)| z != x && z != y).map(|(&z, &c)| (z, c)).collect()
            };
            if strip(&rows[i]) != strip(&rows[j]) {
                return false;
            }
        }
    }
    true
}

/// Zarankiewicz's value `⌊d/2⌋⌊(d-1)/2⌋⌊d'/2⌋⌊(d'-1)/2⌋`.
pub fn zarankiewicz(d: u64, dp: u64) -> u64 {
    (d / 2) * ((d.max(1) - 1) / 2) * (dp / 2) * ((dp.max(1) - 1) / 2)
}

/// Certificate status of one zip site.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SiteReport {
    pub v1: VertexId,
    pub v2: VertexId,
    pub degree: usize,
    pub base: Coherence,
    pub attached: Coherence,
    /// The neighbourhood condition at `v2`; not needed when `degree == 3`.
    pub homogeneous: bool,
}

impl SiteReport {
    /// The two-coherent-bundles hypothesis holds on both sides.
    pub fn coherent(&self) -> bool {
        self.base.found() && self.attached.found()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ChainReport {
    pub sites: Vec<SiteReport>,
    /// Component values: the base first, then one per site.
    pub components: Vec<Option<CrValue>>,
    /// Sum of the component values when all are known.
    pub predicted: Option<CrValue>,
    /// Every site has coherent bundles on both sides.
    pub additive: bool,
    /// `Some` when the result was small enough to check directly.
    pub three_connected: Option<bool>,
}

/// One step of [`zip_chain`].
#[derive(Clone, Debug)]
pub struct ChainSite {
    /// Vertex of the accumulated graph; `None` picks [`choose_site`].
    pub v1: Option<VertexId>,
    pub graph: MultiGraph,
    /// Vertex of `graph`; `None` picks [`choose_site`].
    pub v2: Option<VertexId>,
    pub cr: Option<CrValue>,
}

/// Lowest-id degree-3 simple vertex with two coherent bundles.
pub fn choose_site(g: &MultiGraph) -> Option<(VertexId, Coherence)> {
    choose_site_of_degree(g, 3)
}

fn choose_site_of_degree(g: &MultiGraph, d: usize) -> Option<(VertexId, Coherence)> {
    g.vertices()
        .iter()
        .copied()
        .filter(|&v| g.degree(v) == d && simple_neighbours(g, v).is_ok())
        .find_map(|v| {
            let c = find_two_coherent_bundles(g, v);
            c.found().then_some((v, c))
        })
}

fn sum_values(vals: &[Option<CrValue>]) -> Option<CrValue> {
    let mut total = 0;
    let mut prov = Provenance::OracleExact;
    for v in vals {
        let v = v.as_ref()?;
        total += v.value;
        prov = prov.max(v.provenance);
    }
    Some(CrValue {
        value: total,
        provenance: prov,
    })
}

pub fn zip_chain(base: &MultiGraph, base_cr: Option<CrValue>, sites: &[ChainSite]) -> Result<(MultiGraph, ChainReport), ZipError> {
    let mut g = base.clone();
    let mut reports = Vec::new();
    let mut components = vec![base_cr];
    for (k, s) in sites.iter().enumerate() {
        let (v1, base_c) = match s.v1 {
            Some(v) => (v, find_two_coherent_bundles(&g, v)),
            None => choose_site(&g).ok_or_else(|| ZipError::Site(k, "no degree-3 vertex with two coherent bundles".into()))?,
        };
        let (v2, att_c) = match s.v2 {
            Some(v) => (v, find_two_coherent_bundles(&s.graph, v)),
            None => choose_site_of_degree(&s.graph, g.degree(v1))
                .ok_or_else(|| ZipError::Site(k, "no matching vertex with two coherent bundles in the attached graph".into()))?,
        };
        let z = zip(&ZipSpec {
            g1: &g,
            v1,
            g2: &s.graph,
            v2,
            sigma: None,
        })?;
        reports.push(SiteReport {
            v1,
            v2,
            degree: s.graph.degree(v2),
            base: base_c,
            attached: att_c,
            homogeneous: homogeneous_sufficient(&s.graph, v2),
        });
        components.push(s.cr.clone());
        g = z.graph;
    }
    let three_connected = (g.vertex_count() <= DIRECT_CHECK_BOUND).then(|| vertex_connectivity_at_least(&g, 3));
    let additive = reports.iter().all(SiteReport::coherent);
    let report = ChainReport {
        predicted: sum_values(&components),
        sites: reports,
        components,
        additive,
        three_connected,
    };
    Ok((g, report))
}

/// `K_{d,d'}` with degree-`d` vertices black and degree-`d'` vertices white.
pub fn colored_complete_bipartite(d: usize, dp: usize) -> MultiGraph {
    // ids 0..dp have degree d
    let mut g = MultiGraph::complete_bipartite(dp, d);
    for v in 0..(d + dp) as VertexId {
        g.set_label(v, if (v as usize) < dp { BLACK } else { WHITE });
    }
    g
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RReport {
    pub d: usize,
    pub dp: usize,
    pub p: usize,
    pub predicted: CrValue,
    pub sites: Vec<SiteReport>,
    pub three_connected: Option<bool>,
}

fn lowest_black(g: &MultiGraph) -> Option<VertexId> {
    g.vertices().iter().copied().find(|&v| g.label(v) == Some(BLACK))
}

/// A representative of `R(d, d', p)`: each step zips the current graph at
/// its lowest-id black vertex with a fresh `K_{d,d'}` at its lowest-id black
/// vertex.
pub fn build_r(d: usize, dp: usize, p: usize) -> Result<(MultiGraph, RReport), ZipError> {
    if d < 3 || dp < 3 || p < 1 {
        return Err(ZipError::Params(format!("R({d}, {dp}, {p}) needs d, d' >= 3 and p >= 1")));
    }
    let k = colored_complete_bipartite(d, dp);
    let kb = lowest_black(&k).expect("black vertex");
    let mut g = k.clone();
    let mut sites = Vec::new();
    for _ in 1..p {
        let v1 = lowest_black(&g).ok_or_else(|| ZipError::Site(sites.len(), "no black vertex left".into()))?;
        let base = find_two_coherent_bundles(&g, v1);
        let attached = find_two_coherent_bundles(&k, kb);
        g = zip(&ZipSpec {
            g1: &g,
            v1,
            g2: &k,
            v2: kb,
            sigma: None,
        })?
        .graph;
        sites.push(SiteReport {
            v1,
            v2: kb,
            degree: d,
            base,
            attached,
            homogeneous: homogeneous_sufficient(&k, kb),
        });
    }
    let three_connected = (g.vertex_count() <= DIRECT_CHECK_BOUND).then(|| vertex_connectivity_at_least(&g, 3));
    let report = RReport {
        d,
        dp,
        p,
        predicted: CrValue::paper(p as u64 * zarankiewicz(d as u64, dp as u64)),
        sites,
        three_connected,
    };
    Ok((g, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k33() -> MultiGraph {
        MultiGraph::complete_bipartite(3, 3)
    }

    #[test]
    fn zip_counts() {
        let (a, b) = (k33(), k33());
        let z = zip(&ZipSpec {
            g1: &a,
            v1: 0,
            g2: &b,
            v2: 0,
            sigma: None,
        })
        .unwrap();
        assert_eq!((z.graph.vertex_count(), z.graph.edge_count()), (10, 15));
        let k4 = MultiGraph::complete(4);
        let z = zip(&ZipSpec {
            g1: &k4,
            v1: 0,
            g2: &k4,
            v2: 0,
            sigma: None,
        })
        .unwrap();
        assert_eq!((z.graph.vertex_count(), z.graph.edge_count()), (6, 9));
    }

    #[test]
    fn zip_errors() {
        let k4 = MultiGraph::complete(4);
        let k5 = MultiGraph::complete(5);
        let spec = ZipSpec {
            g1: &k4,
            v1: 0,
            g2: &k5,
            v2: 0,
            sigma: None,
        };
        assert_eq!(zip(&spec), Err(ZipError::DegreeMismatch(3, 4)));
        let multi = MultiGraph::from_edges(3, &[(0, 1), (0, 1), (0, 2)]).unwrap();
        let c3 = MultiGraph::complete(4);
        let spec = ZipSpec {
            g1: &multi,
            v1: 0,
            g2: &c3,
            v2: 0,
            sigma: None,
        };
        assert_eq!(zip(&spec), Err(ZipError::NotSimple(0)));
        let bad = ZipSpec {
            g1: &k4,
            v1: 0,
            g2: &k4,
            v2: 0,
            sigma: Some(BTreeMap::from([(1, 1), (2, 1), (3, 3)])),
        };
        assert_eq!(zip(&bad), Err(ZipError::BadSigma));
    }

    #[test]
    fn zip_classes() {
        let k4 = MultiGraph::complete(4);
        let all = all_zips(&k4, 0, &k4, 0).unwrap();
        assert_eq!(all.len(), 1);
        let prism = MultiGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(canonical_form(&all[0]).unwrap(), canonical_form(&prism).unwrap());
        assert_eq!(all_zips(&prism, 0, &prism, 0).unwrap().len(), 2);
        assert_eq!(all_zips(&k33(), 0, &k33(), 0).unwrap().len(), 1);
        let k9 = MultiGraph::complete(9);
        assert_eq!(all_zips(&k9, 0, &k9, 0), Err(ZipError::Budget(8)));
    }

    #[test]
    fn bundles() {
        let k4 = MultiGraph::complete(4);
        assert_eq!(find_bundle(&k4, 0, 3).unwrap().paths.len(), 3);
        let star = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(find_bundle(&star, 0, 1).is_none());
        let g = k33();
        match find_two_coherent_bundles(&g, 0) {
            Coherence::Found { first, second } => assert!(coherent(&g, &first, &second)),
            c => panic!("{c:?}"),
        }
        let tree = MultiGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(find_two_coherent_bundles(&tree, 0), Coherence::Absent);
    }

    #[test]
    fn homogeneity() {
        let k35 = colored_complete_bipartite(3, 5);
        let b = lowest_black(&k35).unwrap();
        assert_eq!(k35.degree(b), 3);
        assert!(homogeneous_sufficient(&k35, b));
        assert!(homogeneous_sufficient(&MultiGraph::complete(5), 0));
        assert!(!homogeneous_sufficient(&MultiGraph::path(5), 2));
        // black vertices after one zip: their white neighbours gained distinct
        // zip edges, so the neighbourhood test no longer applies
        let (r, _) = build_r(3, 5, 2).unwrap();
        let b = lowest_black(&r).unwrap();
        assert!(!homogeneous_sufficient(&r, b));
    }

    #[test]
    fn r_family() {
        let (g, rep) = build_r(3, 3, 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), rep.predicted.value), (6, 9, 1));
        let (g, rep) = build_r(3, 3, 2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), rep.predicted.value), (10, 15, 2));
        assert!(rep.sites.iter().all(SiteReport::coherent));
        assert_eq!(rep.three_connected, Some(true));
        let (_, rep) = build_r(3, 5, 2).unwrap();
        assert_eq!(rep.predicted.value, 8);
        assert!(build_r(2, 3, 1).is_err());
        assert_eq!(zarankiewicz(6, 6), 36);
    }

    #[test]
    fn chain_sums() {
        let base = k33();
        let one = CrValue {
            value: 1,
            provenance: Provenance::OracleExact,
        };
        let site = ChainSite {
            v1: None,
            graph: k33(),
            v2: None,
            cr: Some(one.clone()),
        };
        let (g, rep) = zip_chain(&base, Some(one.clone()), &[site.clone(), site]).unwrap();
        assert_eq!(g.vertex_count(), 6 + 2 * 4);
        assert_eq!(rep.predicted.unwrap().value, 3);
        assert!(rep.additive);
        let (g, rep) = zip_chain(&base, Some(one), &[]).unwrap();
        assert_eq!(g, base);
        assert_eq!(rep.predicted.unwrap().value, 1);
    }
}
