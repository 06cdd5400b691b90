//! Lower-bound certificates: coherent pairs, traversing paths, twisted and
//! aligned families, propagation along tile sequences, and twisted
//! staircase strips.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::graph::connectivity::EdgePath;
use crate::graph::{MultiGraph, VertexId};
use crate::tile::{Tile, TileSequence};

mod strip;

pub use strip::{enumerate_u_v, ladder, verify_strip, Side, StripEntry, StripWitness};

/// A failed check, tagged with the condition it violates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[error("{condition}: {detail}")]
pub struct CertificateError {
    pub condition: String,
    pub detail: String,
}

pub(crate) fn violation<T>(condition: &str, detail: impl Into<String>) -> Result<T, CertificateError> {
    Err(CertificateError {
        condition: condition.into(),
        detail: detail.into(),
    })
}

/// Path through `verts`, taking the lowest-index edge between consecutive
/// vertices.
pub fn path_from_vertices(g: &MultiGraph, verts: &[VertexId]) -> Option<EdgePath> {
    let mut edges = Vec::with_capacity(verts.len().saturating_sub(1));
    for w in verts.windows(2) {
        let k = crate::graph::Edge { u: w[0], v: w[1] }.key();
        if !g.has_vertex(w[0]) {
            return None;
        }
        let e = g.incident_edges(w[0]).into_iter().filter(|&e| g.edge(e).key() == k).min()?;
        edges.push(e);
    }
    Some(EdgePath {
        vertices: verts.to_vec(),
        edges,
    })
}

/// A simple path whose edge list matches its vertex list in `g`.
pub fn is_simple_path(g: &MultiGraph, p: &EdgePath) -> bool {
    if p.vertices.is_empty() || p.edges.len() + 1 != p.vertices.len() {
        return false;
    }
    let distinct: BTreeSet<_> = p.vertices.iter().collect();
    if distinct.len() != p.vertices.len() || !p.vertices.iter().all(|&v| g.has_vertex(v)) {
        return false;
    }
    p.edges.iter().enumerate().all(|(k, &e)| {
        e < g.edge_count() && {
            let ed = g.edge(e);
            ed.key() == crate::graph::Edge { u: p.vertices[k], v: p.vertices[k + 1] }.key()
        }
    })
}

/// `{A, B}` and `{A2, B2}` are coherent: one of the four sets misses the
/// union of the opposite pair.
pub fn pairs_coherent<T: Ord>(a: &BTreeSet<T>, b: &BTreeSet<T>, a2: &BTreeSet<T>, b2: &BTreeSet<T>) -> bool {
    let misses = |x: &BTreeSet<T>, p: &BTreeSet<T>, q: &BTreeSet<T>| x.iter().all(|e| !p.contains(e) && !q.contains(e));
    misses(a, a2, b2) || misses(b, a2, b2) || misses(a2, a, b) || misses(b2, a, b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraversingPath {
    pub path: EdgePath,
    pub i: usize,
    pub j: usize,
}

impl TraversingPath {
    /// Validate `path` as a traversing path of `t` and read off its indices.
    pub fn new(t: &Tile, path: EdgePath) -> Result<Self, CertificateError> {
        if !is_simple_path(&t.graph, &path) {
            return violation("traversing", "not a simple path of the tile graph");
        }
        let (first, last) = (path.vertices[0], *path.vertices.last().unwrap());
        let Some(i) = t.left.iter().position(|&x| x == first) else {
            return violation("traversing", format!("path starts at {first}, not on the left wall"));
        };
        let Some(j) = t.right.iter().position(|&x| x == last) else {
            return violation("traversing", format!("path ends at {last}, not on the right wall"));
        };
        let inner = &path.vertices[1..path.vertices.len() - 1];
        if let Some(w) = inner.iter().find(|&&v| t.is_wall_vertex(v)) {
            return violation("traversing", format!("interior wall vertex {w}"));
        }
        Ok(TraversingPath { path, i, j })
    }

    pub fn from_vertices(t: &Tile, verts: &[VertexId]) -> Result<Self, CertificateError> {
        match path_from_vertices(&t.graph, verts) {
            Some(p) => TraversingPath::new(t, p),
            None => violation("traversing", "consecutive vertices are not adjacent"),
        }
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.path.vertices.iter().copied().collect()
    }

    pub fn edge_set(&self) -> BTreeSet<usize> {
        self.path.edges.iter().copied().collect()
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.path.vertices.iter().position(|&x| x == v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum PairKind {
    Twisted,
    Aligned,
    Intersecting,
}

pub fn classify_pair(p: &TraversingPath, q: &TraversingPath) -> Result<PairKind, CertificateError> {
    if !p.vertex_set().is_disjoint(&q.vertex_set()) {
        return Ok(PairKind::Intersecting);
    }
    if p.i == q.i || p.j == q.j {
        return violation("classify", "disjoint traversing paths with equal wall indices");
    }
    Ok(if (p.i < q.i) == (p.j < q.j) {
        PairKind::Aligned
    } else {
        PairKind::Twisted
    })
}

/// Pairs of traversing paths; pairwise coherent and all twisted (or all
/// aligned) once verified.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathFamily {
    pub pairs: Vec<(TraversingPath, TraversingPath)>,
}

impl PathFamily {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

pub type TwistedFamily = PathFamily;

fn check_family(t: &Tile, f: &PathFamily, want: PairKind) -> Result<(), CertificateError> {
    for (k, (p, q)) in f.pairs.iter().enumerate() {
        for x in [p, q] {
            let again = TraversingPath::new(t, x.path.clone())?;
            if again.i != x.i || again.j != x.j {
                return violation("traversing", format!("pair {k}: stored wall indices are wrong"));
            }
        }
        let kind = classify_pair(p, q)?;
        if kind != want {
            return violation("kind", format!("pair {k} is {kind:?}, expected {want:?}"));
        }
    }
    let sets: Vec<(BTreeSet<usize>, BTreeSet<usize>)> =
        f.pairs.iter().map(|(p, q)| (p.edge_set(), q.edge_set())).collect();
    for x in 0..sets.len() {
        for y in x + 1..sets.len() {
            if !pairs_coherent(&sets[x].0, &sets[x].1, &sets[y].0, &sets[y].1) {
                return violation("coherent", format!("pairs {x} and {y} are not coherent"));
            }
        }
    }
    Ok(())
}

/// On success the family certifies `tcr(t) ≥ |f|`.
pub fn verify_twisted_family(t: &Tile, f: &TwistedFamily) -> Result<usize, CertificateError> {
    check_family(t, f, PairKind::Twisted)?;
    Ok(f.len())
}

pub fn verify_aligned_family(t: &Tile, f: &PathFamily) -> Result<(), CertificateError> {
    check_family(t, f, PairKind::Aligned)
}

/// Traversing paths of `t`, at most `limit` of them (`None` if more exist).
pub fn enumerate_traversing_paths(t: &Tile, limit: usize) -> Option<Vec<TraversingPath>> {
    let d = t.graph.dense();
    let wall: Vec<bool> = d.ids.iter().map(|&v| t.is_wall_vertex(v)).collect();
    let right: BTreeMap<usize, usize> = t
        .right
        .iter()
        .enumerate()
        .map(|(j, &v)| (d.pos(v).unwrap(), j))
        .collect();
    let mut out = Vec::new();
    for (i, &s) in t.left.iter().enumerate() {
        let s = d.pos(s).unwrap();
        let mut on = vec![false; d.len()];
        let mut vs = vec![s];
        let mut es = Vec::new();
        on[s] = true;
        // iterative DFS over (vertex, next adjacency slot)
        let mut stack = vec![(s, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (x, slot) = *top;
            if slot >= d.adj[x].len() {
                stack.pop();
                on[x] = false;
                vs.pop();
                es.pop();
                continue;
            }
            top.1 += 1;
            let (y, e) = d.adj[x][slot];
            if on[y] {
                continue;
            }
            if let Some(&j) = right.get(&y) {
                let mut verts: Vec<VertexId> = vs.iter().map(|&p| d.ids[p]).collect();
                verts.push(d.ids[y]);
                let mut edges = es.clone();
                edges.push(e);
                out.push(TraversingPath {
                    path: EdgePath { vertices: verts, edges },
                    i,
                    j,
                });
                if out.len() > limit {
                    return None;
                }
                continue;
            }
            if wall[y] {
                continue;
            }
            on[y] = true;
            vs.push(y);
            es.push(e);
            stack.push((y, 0));
        }
    }
    Some(out)
}

/// Largest twisted family among the given paths, by backtracking with a
/// node budget; `None` when the budget runs out before completion.
pub fn max_twisted_family(t: &Tile, paths: &[TraversingPath], budget: usize) -> Option<TwistedFamily> {
    let mut pairs = Vec::new();
    for a in 0..paths.len() {
        for b in a + 1..paths.len() {
            if classify_pair(&paths[a], &paths[b]).ok() == Some(PairKind::Twisted) {
                pairs.push((a, b));
            }
        }
    }
    let _ = t;
    let sets: Vec<(BTreeSet<usize>, BTreeSet<usize>)> = pairs
        .iter()
        .map(|&(a, b)| (paths[a].edge_set(), paths[b].edge_set()))
        .collect();
    let ok = |x: usize, y: usize| pairs_coherent(&sets[x].0, &sets[x].1, &sets[y].0, &sets[y].1);
    let mut best: Vec<usize> = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let mut nodes = 0usize;
    fn rec(
        start: usize,
        n: usize,
        cur: &mut Vec<usize>,
        best: &mut Vec<usize>,
        nodes: &mut usize,
        budget: usize,
        ok: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        *nodes += 1;
        if *nodes > budget {
            return false;
        }
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        if cur.len() + (n - start) <= best.len() {
            return true;
        }
        for x in start..n {
            if cur.iter().all(|&y| ok(x, y)) {
                cur.push(x);
                if !rec(x + 1, n, cur, best, nodes, budget, ok) {
                    return false;
                }
                cur.pop();
            }
        }
        true
    }
    if !rec(0, pairs.len(), &mut cur, &mut best, &mut nodes, budget, &ok) {
        return None;
    }
    Some(PathFamily {
        pairs: best
            .iter()
            .map(|&x| (paths[pairs[x].0].clone(), paths[pairs[x].1].clone()))
            .collect(),
    })
}

/// An aligned family in one tile with the bijection `map[k]` from pair `k`
/// of the propagated family to a pair of this family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extension {
    pub family: PathFamily,
    pub map: Vec<usize>,
}

/// Extensions for propagation: `right[x]` is used when tile `x` lies to the
/// right of `l` in a cut, `left[x]` when it lies to the left.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Propagation {
    pub right: BTreeMap<usize, Extension>,
    pub left: BTreeMap<usize, Extension>,
}

/// Edge of the joined sequence: (tile index, edge index in that tile).
type SeqEdge = (usize, usize);

/// Check that `f` (a twisted family in tile `l`) propagates in the
/// cyclically compatible sequence `ts`: in every cut `ts/i`, `i ≠ l`, the
/// extensions are aligned, bijective and index-matching, and the composed
/// pairs form a twisted family of the joined cut. Returns `|f|`.
pub fn verify_propagation(
    ts: &TileSequence,
    l: usize,
    f: &TwistedFamily,
    ext: &Propagation,
) -> Result<usize, CertificateError> {
    let m = ts.len();
    if l >= m || !ts.cyclically_compatible() {
        return violation("sequence", "tile index out of range or sequence not cyclic");
    }
    let base = verify_twisted_family(&ts.tiles[l], f)?;
    for (dir, exts) in [("right", &ext.right), ("left", &ext.left)] {
        for (&x, e) in exts {
            if x >= m || x == l {
                return violation("extension", format!("{dir} extension at tile {x}"));
            }
            verify_aligned_family(&ts.tiles[x], &e.family)
                .map_err(|err| CertificateError {
                    condition: err.condition,
                    detail: format!("{dir} extension at tile {x}: {}", err.detail),
                })?;
            let img: BTreeSet<usize> = e.map.iter().copied().collect();
            if e.map.len() != f.len() || e.family.len() != f.len() || img.len() != f.len() || img.iter().any(|&k| k >= f.len()) {
                return violation("bijection", format!("{dir} extension at tile {x} is not a bijection"));
            }
        }
    }
    for cut in (0..m).filter(|&i| i != l) {
        // tiles l+1..cut-1 to the right, l-1 down to cut+1 to the left
        let mut comp: Vec<(BTreeSet<SeqEdge>, BTreeSet<SeqEdge>, (usize, usize), (usize, usize))> = f
            .pairs
            .iter()
            .map(|(p, q)| {
                let tag = |s: BTreeSet<usize>| s.into_iter().map(|e| (l, e)).collect();
                (tag(p.edge_set()), tag(q.edge_set()), (p.i, q.i), (p.j, q.j))
            })
            .collect();
        let mut x = (l + 1) % m;
        while x != cut {
            let Some(e) = ext.right.get(&x) else {
                return violation("propagation", format!("cut {cut}: missing right extension at tile {x}"));
            };
            for (k, c) in comp.iter_mut().enumerate() {
                let (p2, q2) = &e.family.pairs[e.map[k]];
                let (pn, qn) = if (p2.i, q2.i) == c.3 {
                    (p2, q2)
                } else if (q2.i, p2.i) == c.3 {
                    (q2, p2)
                } else {
                    return violation("index", format!("cut {cut}: tile {x} pair {} does not match on the left", e.map[k]));
                };
                c.0.extend(pn.path.edges.iter().map(|&z| (x, z)));
                c.1.extend(qn.path.edges.iter().map(|&z| (x, z)));
                c.3 = (pn.j, qn.j);
            }
            x = (x + 1) % m;
        }
        let mut x = (l + m - 1) % m;
        while x != cut {
            let Some(e) = ext.left.get(&x) else {
                return violation("propagation", format!("cut {cut}: missing left extension at tile {x}"));
            };
            for (k, c) in comp.iter_mut().enumerate() {
                let (p2, q2) = &e.family.pairs[e.map[k]];
                let (pn, qn) = if (p2.j, q2.j) == c.2 {
                    (p2, q2)
                } else if (q2.j, p2.j) == c.2 {
                    (q2, p2)
                } else {
                    return violation("index", format!("cut {cut}: tile {x} pair {} does not match on the right", e.map[k]));
                };
                c.0.extend(pn.path.edges.iter().map(|&z| (x, z)));
                c.1.extend(qn.path.edges.iter().map(|&z| (x, z)));
                c.2 = (pn.i, qn.i);
            }
            x = (x + m - 1) % m;
        }
        for (k, c) in comp.iter().enumerate() {
            if (c.2 .0 < c.2 .1) == (c.3 .0 < c.3 .1) {
                return violation("kind", format!("cut {cut}: composed pair {k} is not twisted"));
            }
        }
        for a in 0..comp.len() {
            for b in a + 1..comp.len() {
                if !pairs_coherent(&comp[a].0, &comp[a].1, &comp[b].0, &comp[b].1) {
                    return violation("coherent", format!("cut {cut}: composed pairs {a} and {b}"));
                }
            }
        }
    }
    Ok(base)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u32]) -> BTreeSet<u32> {
        v.iter().copied().collect()
    }

    #[test]
    fn coherence_examples() {
        assert!(pairs_coherent(&set(&[1]), &set(&[2]), &set(&[3]), &set(&[4])));
        assert!(!pairs_coherent(&set(&[1]), &set(&[2]), &set(&[1]), &set(&[2])));
        assert!(pairs_coherent(&set(&[1]), &set(&[2]), &set(&[3]), &set(&[1, 2])));
    }

    /// Coherent iff every quadruple a∈A, b∈B, a'∈A', b'∈B' gives distinct
    /// unordered pairs, over all set systems on a 3-element ground set.
    #[test]
    fn coherence_matches_quadruple_characterization() {
        let subsets: Vec<BTreeSet<u32>> = (0u32..8)
            .map(|mask| (0..3).filter(|b| mask >> b & 1 == 1).collect())
            .collect();
        for a in &subsets {
            for b in &subsets {
                for a2 in &subsets {
                    for b2 in &subsets {
                        let mut distinct = true;
                        for x in a {
                            for y in b {
                                for x2 in a2 {
                                    for y2 in b2 {
                                        if (x, y) == (x2, y2) || (x, y) == (y2, x2) {
                                            distinct = false;
                                        }
                                    }
                                }
                            }
                        }
                        assert_eq!(pairs_coherent(a, b, a2, b2), distinct, "{a:?} {b:?} {a2:?} {b2:?}");
                    }
                }
            }
        }
    }

    fn crossing_tile() -> Tile {
        // λ = (0, 1), ρ = (2, 3); paths 0-2 and 1-3 with the right wall swapped
        let g = MultiGraph::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        Tile::new(g, vec![0, 1], vec![3, 2]).unwrap()
    }

    #[test]
    fn classify() {
        let t = crossing_tile();
        let p = TraversingPath::from_vertices(&t, &[0, 2]).unwrap();
        let q = TraversingPath::from_vertices(&t, &[1, 3]).unwrap();
        assert_eq!((p.i, p.j, q.i, q.j), (0, 1, 1, 0));
        assert_eq!(classify_pair(&p, &q).unwrap(), PairKind::Twisted);
        let s = t.invert_right();
        let p = TraversingPath::from_vertices(&s, &[0, 2]).unwrap();
        let q = TraversingPath::from_vertices(&s, &[1, 3]).unwrap();
        assert_eq!(classify_pair(&p, &q).unwrap(), PairKind::Aligned);
        assert_eq!(classify_pair(&p, &p).unwrap(), PairKind::Intersecting);
        assert!(TraversingPath::from_vertices(&t, &[2, 0]).is_err());
    }

    #[test]
    fn single_twisted_pair_bound() {
        let t = crossing_tile();
        let paths = enumerate_traversing_paths(&t, 10).unwrap();
        assert_eq!(paths.len(), 2);
        let f = max_twisted_family(&t, &paths, 1000).unwrap();
        assert_eq!(verify_twisted_family(&t, &f), Ok(1));
        let mut bad = f.clone();
        bad.pairs.push(f.pairs[0].clone());
        assert_eq!(verify_twisted_family(&t, &bad).unwrap_err().condition, "coherent");
    }

    #[test]
    fn propagation_through_straight_tiles() {
        let twisted = crossing_tile();
        let straight = Tile::new(MultiGraph::from_edges(4, &[(0, 2), (1, 3)]).unwrap(), vec![0, 1], vec![2, 3]).unwrap();
        let seq = TileSequence::new(vec![twisted.clone(), straight.clone(), straight.clone()]).unwrap();
        let f = max_twisted_family(&twisted, &enumerate_traversing_paths(&twisted, 10).unwrap(), 100).unwrap();
        let p = TraversingPath::from_vertices(&straight, &[0, 2]).unwrap();
        let q = TraversingPath::from_vertices(&straight, &[1, 3]).unwrap();
        let e = Extension {
            family: PathFamily { pairs: vec![(p, q)] },
            map: vec![0],
        };
        let mut prop = Propagation::default();
        prop.right.insert(1, e.clone());
        prop.left.insert(2, e.clone());
        assert_eq!(verify_propagation(&seq, 0, &f, &prop), Ok(1));
        let mut missing = prop.clone();
        missing.left.clear();
        assert!(verify_propagation(&seq, 0, &f, &missing).is_err());
        let mut bad = prop.clone();
        bad.right.get_mut(&1).unwrap().map = vec![1];
        assert_eq!(verify_propagation(&seq, 0, &f, &bad).unwrap_err().condition, "bijection");
    }
}
