//! Tiles `(G, λ, ρ)`, tile sequences, join and cyclization, wall inversions,
//! the sequence operations, and the planar/perfect tile validators.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::TileError;
use crate::graph::paths::{two_disjoint_paths, DisjointPaths};
use crate::graph::planarity::is_planar;
use crate::graph::{MultiGraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tile {
    pub graph: MultiGraph,
    #[serde(rename = "leftWall")]
    pub left: Vec<VertexId>,
    #[serde(rename = "rightWall")]
    pub right: Vec<VertexId>,
}

/// Where the vertices of the right operand of a join ended up.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct JoinMap {
    /// right-tile id → result id; `None` for a suppressed vertex.
    pub right: BTreeMap<VertexId, Option<VertexId>>,
    /// left-tile vertices removed by suppression.
    pub suppressed_left: Vec<VertexId>,
}

impl Tile {
    pub fn new(graph: MultiGraph, left: Vec<VertexId>, right: Vec<VertexId>) -> Result<Self, TileError> {
        let t = Tile { graph, left, right };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<(), TileError> {
        self.graph.validate()?;
        let mut seen = BTreeSet::new();
        for &v in self.left.iter().chain(&self.right) {
            if !self.graph.has_vertex(v) {
                return Err(TileError::Wall(format!("wall vertex {v} not in graph")));
            }
            if !seen.insert(v) {
                return Err(TileError::Wall(format!("vertex {v} repeated in the walls")));
            }
        }
        let deg = self.graph.degrees();
        if let Some(v) = self.left.iter().chain(&self.right).find(|v| deg[v] == 0) {
            return Err(TileError::Wall(format!("wall vertex {v} has degree 0")));
        }
        Ok(())
    }

    pub fn invert_right(&self) -> Tile {
        let mut t = self.clone();
        t.right.reverse();
        t
    }

    pub fn invert_left(&self) -> Tile {
        let mut t = self.clone();
        t.left.reverse();
        t
    }

    pub fn invert(&self) -> Tile {
        self.invert_left().invert_right()
    }

    /// `(G, ρ, λ)`.
    pub fn reverse(&self) -> Tile {
        Tile {
            graph: self.graph.clone(),
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    pub fn is_wall_vertex(&self, v: VertexId) -> bool {
        self.left.contains(&v) || self.right.contains(&v)
    }

    /// Vertices not on the left wall ("net" size of one period).
    pub fn net_vertex_count(&self) -> usize {
        self.graph.vertex_count() - self.left.len()
    }

    pub fn cyclically_compatible(&self) -> bool {
        self.left.len() == self.right.len()
    }
}

/// `t1 ⊗ t2`: ρ_i of `t1` is identified with λ'_i of `t2` and keeps `t1`'s
/// id; the other vertices of `t2` get fresh ids in id order. Identified
/// vertices of degree two are suppressed; parallel edges are kept.
pub fn join(t1: &Tile, t2: &Tile) -> Result<(Tile, JoinMap), TileError> {
    if t1.right.len() != t2.left.len() {
        return Err(TileError::Incompatible {
            left: t1.right.len(),
            right: t2.left.len(),
        });
    }
    let mut g = t1.graph.clone();
    let mut next = g.fresh_id();
    let mut map: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    for (i, &v) in t2.left.iter().enumerate() {
        map.insert(v, t1.right[i]);
    }
    for &v in t2.graph.vertices() {
        if !map.contains_key(&v) {
            map.insert(v, next);
            g.add_vertex(next);
            next += 1;
        }
    }
    for e in t2.graph.edges() {
        g.add_edge(map[&e.u], map[&e.v])?;
    }
    for (v, tag) in t2.graph.labels() {
        if g.label(map[v]).is_none() {
            g.set_label(map[v], tag.clone());
        }
    }
    let ident: BTreeSet<VertexId> = t1.right.iter().copied().collect();
    g.suppress_degree2_among(Some(&ident));
    let suppressed_left: Vec<VertexId> = t1
        .right
        .iter()
        .copied()
        .filter(|v| !g.has_vertex(*v))
        .collect();
    let right_map = map
        .iter()
        .map(|(&k, &v)| (k, g.has_vertex(v).then_some(v)))
        .collect();
    let right: Vec<VertexId> = t2.right.iter().map(|v| map[v]).collect();
    let t = Tile {
        graph: g,
        left: t1.left.clone(),
        right,
    };
    Ok((
        t,
        JoinMap {
            right: right_map,
            suppressed_left,
        },
    ))
}

/// `∘T`: λ_i and ρ_i are identified (λ_i's id is kept), then identified
/// vertices of degree two are suppressed. An edge λ_i–ρ_i would become a
/// loop and is rejected.
pub fn cyclize(t: &Tile) -> Result<MultiGraph, TileError> {
    if !t.cyclically_compatible() {
        return Err(TileError::Incompatible {
            left: t.right.len(),
            right: t.left.len(),
        });
    }
    let mut g = t.graph.clone();
    for (i, (&l, &r)) in t.left.iter().zip(&t.right).enumerate() {
        if g.multiplicity(l, r) > 0 {
            return Err(TileError::Loop(t.left[i]));
        }
        g.identify(l, r)?;
    }
    let ident: BTreeSet<VertexId> = t.left.iter().copied().collect();
    g.suppress_degree2_among(Some(&ident));
    Ok(g)
}

/// A vertex of some component whose vertices all lie in `ident` and have
/// degree two.
fn bare_cycle(g: &MultiGraph, ident: &BTreeSet<VertexId>) -> Option<VertexId> {
    let deg = g.degrees();
    let mut seen = BTreeSet::new();
    for &s in ident {
        if seen.contains(&s) || deg[&s] != 2 {
            continue;
        }
        let (mut stack, mut bare) = (vec![s], true);
        seen.insert(s);
        while let Some(v) = stack.pop() {
            bare &= ident.contains(&v) && deg[&v] == 2;
            for w in g.neighbors(v) {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if bare {
            return Some(s);
        }
    }
    None
}

/// Tile-drawing gadget: `G` plus the frame cycle λ_0…λ_l ρ_r…ρ_0 and an apex
/// adjacent to every frame vertex. Each frame edge is realised by `bundle`
/// internally disjoint paths of length two (a single edge when `bundle == 0`).
/// Returns the gadget and the indices of the added (frame and apex) edges.
pub fn frame_gadget(t: &Tile, bundle: usize) -> (MultiGraph, Vec<usize>) {
    let mut g = t.graph.clone();
    let first_new = g.edge_count();
    let mut frame: Vec<VertexId> = t.left.clone();
    frame.extend(t.right.iter().rev());
    let k = frame.len();
    // a two-vertex frame is a digon
    let sides: Vec<(VertexId, VertexId)> = match k {
        0 | 1 => Vec::new(),
        2 => vec![(frame[0], frame[1]); 2],
        _ => (0..k).map(|i| (frame[i], frame[(i + 1) % k])).collect(),
    };
    for (a, b) in sides {
        if bundle == 0 {
            g.add_edge(a, b).unwrap();
        }
        for _ in 0..bundle {
            let m = g.add_fresh_vertex();
            g.add_edge(a, m).unwrap();
            g.add_edge(m, b).unwrap();
        }
    }
    if !frame.is_empty() {
        let apex = g.add_fresh_vertex();
        for &f in &frame {
            g.add_edge(apex, f).unwrap();
        }
    }
    let added = (first_new..g.edge_count()).collect();
    (g, added)
}

/// A 0-crossing tile drawing exists.
pub fn is_planar_tile(t: &Tile) -> bool {
    is_planar(&frame_gadget(t, 0).0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectReport {
    pub perfect: bool,
    pub violation: Option<Violation>,
    /// (p.iv) pairs whose answer came from a non-exhaustive search.
    pub unknown_pairs: Vec<(usize, usize)>,
}

fn fail(condition: &str, detail: String) -> PerfectReport {
    PerfectReport {
        perfect: false,
        violation: Some(Violation {
            condition: condition.into(),
            detail,
        }),
        unknown_pairs: Vec::new(),
    }
}

/// Reach a vertex of `targets` from `v` avoiding the vertices of `avoid`
/// (other than `v` itself) as interior vertices.
fn escapes(g: &MultiGraph, v: VertexId, targets: &[VertexId], avoid: &[VertexId]) -> bool {
    let d = g.dense();
    let tset: BTreeSet<usize> = targets.iter().filter_map(|&x| d.pos(x)).collect();
    let aset: BTreeSet<usize> = avoid.iter().filter_map(|&x| d.pos(x)).collect();
    let s = d.pos(v).unwrap();
    let mut seen = vec![false; d.len()];
    seen[s] = true;
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        for &(y, _) in &d.adj[x] {
            if seen[y] {
                continue;
            }
            if tset.contains(&y) {
                return true;
            }
            if aset.contains(&y) {
                continue;
            }
            seen[y] = true;
            q.push_back(y);
        }
    }
    false
}

/// Check (p.i)–(p.iv); the first violated condition is reported.
pub fn is_perfect_tile(t: &Tile) -> PerfectReport {
    if t.left.len() != t.right.len() {
        return fail(
            "p.i",
            format!("|lambda| = {} but |rho| = {}", t.left.len(), t.right.len()),
        );
    }
    for (name, wall) in [("lambda", &t.left), ("rho", &t.right)] {
        if !t.graph.without_vertices(wall).is_connected() {
            return fail("p.ii", format!("G - {name} is disconnected"));
        }
    }
    for &v in &t.left {
        if !escapes(&t.graph, v, &t.right, &t.left) {
            return fail("p.iii", format!("no escape path from lambda vertex {v}"));
        }
    }
    for &v in &t.right {
        if !escapes(&t.graph, v, &t.left, &t.right) {
            return fail("p.iii", format!("no escape path from rho vertex {v}"));
        }
    }
    let mut unknown = Vec::new();
    let l = t.left.len();
    for i in 0..l {
        for j in i + 1..l {
            match two_disjoint_paths(&t.graph, t.left[i], t.right[i], t.left[j], t.right[j]) {
                DisjointPaths::Found(..) => {}
                DisjointPaths::None => {
                    return fail("p.iv", format!("no disjoint path pair for indices ({i}, {j})"))
                }
                DisjointPaths::Unknown => unknown.push((i, j)),
            }
        }
    }
    if !t.graph.is_connected() {
        return fail("connected", "perfect tile is not connected".into());
    }
    PerfectReport {
        perfect: unknown.is_empty(),
        violation: None,
        unknown_pairs: unknown,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TileSequence {
    pub tiles: Vec<Tile>,
}

impl TileSequence {
    pub fn new(tiles: Vec<Tile>) -> Result<Self, TileError> {
        let s = TileSequence { tiles };
        s.check_compatible()?;
        Ok(s)
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn check_compatible(&self) -> Result<(), TileError> {
        for w in self.tiles.windows(2) {
            if w[0].right.len() != w[1].left.len() {
                return Err(TileError::Incompatible {
                    left: w[0].right.len(),
                    right: w[1].left.len(),
                });
            }
        }
        Ok(())
    }

    pub fn cyclically_compatible(&self) -> bool {
        match (self.tiles.first(), self.tiles.last()) {
            (Some(f), Some(l)) => l.right.len() == f.left.len(),
            _ => false,
        }
    }

    fn require_cyclic(&self) -> Result<(), TileError> {
        if self.cyclically_compatible() {
            Ok(())
        } else {
            let (f, l) = (&self.tiles[0], self.tiles.last().unwrap());
            Err(TileError::Incompatible {
                left: l.right.len(),
                right: f.left.len(),
            })
        }
    }

    fn index(&self, i: usize) -> Result<(), TileError> {
        if i < self.tiles.len() {
            Ok(())
        } else {
            Err(TileError::Index {
                index: i,
                len: self.tiles.len(),
            })
        }
    }

    /// `⊗T`, folded from the left.
    pub fn join_all(&self) -> Result<Tile, TileError> {
        let mut it = self.tiles.iter();
        let first = it.next().ok_or(TileError::Index { index: 0, len: 0 })?;
        let mut acc = first.clone();
        for t in it {
            acc = join(&acc, t)?.0;
        }
        Ok(acc)
    }

    /// `∘(⊗T)`, with every junction identified before any suppression so
    /// that equivalent sequences give isomorphic graphs. A cycle of
    /// identified degree-2 vertices would collapse to a loop and is rejected.
    pub fn cyclize(&self) -> Result<MultiGraph, TileError> {
        if self.tiles.len() < 2 {
            return cyclize(&self.join_all()?);
        }
        self.require_cyclic()?;
        let mut g = MultiGraph::new();
        let mut walls = Vec::new();
        for t in &self.tiles {
            let map = g.disjoint_union(&t.graph);
            let ids = |w: &[VertexId]| w.iter().map(|v| map[v]).collect::<Vec<_>>();
            walls.push((ids(&t.left), ids(&t.right)));
        }
        let mut ident = BTreeSet::new();
        for j in 0..walls.len() {
            let next = &walls[(j + 1) % walls.len()].0;
            for (&r, &l) in walls[j].1.iter().zip(next) {
                g.identify(r, l)?;
                ident.insert(r);
            }
        }
        if let Some(v) = bare_cycle(&g, &ident) {
            return Err(TileError::Loop(v));
        }
        g.suppress_degree2_among(Some(&ident));
        Ok(g.compact().0)
    }

    /// Right-invert the last tile.
    pub fn twist(&self) -> TileSequence {
        let mut s = self.clone();
        if let Some(l) = s.tiles.last_mut() {
            *l = l.invert_right();
        }
        s
    }

    /// Right-invert `T_i` and left-invert `T_{i+1}` (indices mod length).
    pub fn flip(&self, i: usize) -> Result<TileSequence, TileError> {
        self.index(i)?;
        let m = self.tiles.len();
        if i + 1 == m {
            self.require_cyclic()?;
        }
        let mut s = self.clone();
        s.tiles[i] = s.tiles[i].invert_right();
        let j = (i + 1) % m;
        s.tiles[j] = s.tiles[j].invert_left();
        Ok(s)
    }

    /// `(T_{i+1}, …, T_{m-1}, T_0, …, T_{i-1})`.
    pub fn cut(&self, i: usize) -> Result<TileSequence, TileError> {
        self.index(i)?;
        self.require_cyclic()?;
        let m = self.tiles.len();
        Ok(TileSequence {
            tiles: (1..m).map(|k| self.tiles[(i + k) % m].clone()).collect(),
        })
    }

    /// `(T_i, …, T_{m-1}, T_0, …, T_{i-1})`.
    pub fn shift(&self, i: usize) -> Result<TileSequence, TileError> {
        self.index(i)?;
        self.require_cyclic()?;
        let m = self.tiles.len();
        Ok(TileSequence {
            tiles: (0..m).map(|k| self.tiles[(i + k) % m].clone()).collect(),
        })
    }

    /// `(T_{m-1}^↔, …, T_0^↔)`.
    pub fn reverse(&self) -> TileSequence {
        TileSequence {
            tiles: self.tiles.iter().rev().map(|t| t.reverse()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canon::isomorphic;

    /// The width-3 staircase tile written out by hand.
    pub(crate) fn s3() -> Tile {
        // 0,1,2 = λ; 3,4,5 = ρ; 6 = z; 7 = x
        let g = MultiGraph::from_edges(
            8,
            &[(0, 7), (7, 3), (1, 6), (6, 7), (7, 4), (2, 5), (2, 6), (4, 5)],
        )
        .unwrap();
        Tile::new(g, vec![0, 1, 2], vec![3, 4, 5]).unwrap()
    }

    fn edge_tile() -> Tile {
        Tile::new(MultiGraph::path(2), vec![0], vec![1]).unwrap()
    }

    #[test]
    fn walls_validated() {
        let g = MultiGraph::path(3);
        assert!(Tile::new(g.clone(), vec![0], vec![0]).is_err());
        assert!(Tile::new(g.clone(), vec![0, 0], vec![2]).is_err());
        assert!(Tile::new(MultiGraph::with_vertices(2), vec![0], vec![1]).is_err());
        assert!(Tile::new(g, vec![0], vec![2]).is_ok());
    }

    #[test]
    fn join_counts() {
        let a = Tile::new(MultiGraph::cycle(4), vec![0, 1], vec![3, 2]).unwrap();
        let (j, _) = join(&a, &a).unwrap();
        assert_eq!(j.graph.vertex_count(), 6);
        let s = s3();
        let (j, _) = join(&s, &s.invert()).unwrap();
        assert_eq!(j.graph.vertex_count(), 13);
    }

    #[test]
    fn join_keeps_digons() {
        let a = Tile::new(MultiGraph::from_edges(2, &[(0, 1)]).unwrap(), vec![0], vec![1]).unwrap();
        let pair = Tile::new(MultiGraph::from_edges(2, &[(0, 1)]).unwrap(), vec![0, 1], vec![0, 1]);
        assert!(pair.is_err());
        // two tiles that both join their wall pair produce a double edge
        let l = Tile::new(
            MultiGraph::from_edges(4, &[(0, 2), (1, 3), (2, 3)]).unwrap(),
            vec![0, 1],
            vec![2, 3],
        )
        .unwrap();
        let r = Tile::new(
            MultiGraph::from_edges(4, &[(0, 1), (0, 2), (1, 3)]).unwrap(),
            vec![0, 1],
            vec![2, 3],
        )
        .unwrap();
        let (j, _) = join(&l, &r).unwrap();
        assert!(!j.graph.is_simple());
        assert!(join(&a, &l).is_err());
    }

    #[test]
    fn cyclize_edge_tiles() {
        let seq = TileSequence::new(vec![edge_tile(); 5]).unwrap();
        assert!(matches!(seq.cyclize(), Err(TileError::Loop(_))));
        let p = Tile::new(MultiGraph::path(4), vec![0], vec![3]).unwrap();
        let g = cyclize(&p).unwrap();
        // the identified vertex is suppressed, leaving a digon
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.multiplicity(1, 2), 2);
    }

    #[test]
    fn inversions_are_involutions() {
        let t = s3();
        assert_eq!(t.invert_right().invert_right(), t);
        assert_eq!(t.reverse().reverse(), t);
        assert_eq!(t.invert(), t.invert_right().invert_left());
    }

    #[test]
    fn s3_is_perfect_and_planar() {
        let t = s3();
        let r = is_perfect_tile(&t);
        assert!(r.perfect, "{r:?}");
        assert!(is_planar_tile(&t));
        assert!(!is_planar_tile(&t.invert_right()));
        assert!(is_planar_tile(&edge_tile()));
    }

    #[test]
    fn perfectness_violations() {
        let g = MultiGraph::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        let t = Tile::new(g, vec![0, 1], vec![2, 3]).unwrap();
        assert_eq!(is_perfect_tile(&t).violation.unwrap().condition, "p.ii");
        let g = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let t = Tile::new(g, vec![0], vec![1, 2]).unwrap();
        assert_eq!(is_perfect_tile(&t).violation.unwrap().condition, "p.i");
    }

    #[test]
    fn sequence_operations() {
        let t = s3();
        let seq = TileSequence::new(vec![t.clone(), t.invert(), t.clone()]).unwrap();
        assert_eq!(seq.twist().twist(), seq);
        assert_eq!(seq.cut(1).unwrap().len(), 2);
        assert!(seq.cut(3).is_err());
        let base = seq.twist().cyclize().unwrap();
        for other in [
            seq.twist().shift(1).unwrap(),
            seq.twist().flip(0).unwrap(),
            seq.twist().flip(2).unwrap(),
            seq.twist().reverse(),
        ] {
            assert!(isomorphic(&base, &other.cyclize().unwrap()).unwrap());
        }
    }
}
