//! Loopless multigraphs with stable integer vertex ids.

pub mod canon;
pub mod connectivity;
pub mod io;
mod lr;
pub mod paths;
pub mod planarity;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::Rational;

pub type VertexId = u32;

/// An undirected edge between two distinct vertices, stored as given.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    pub fn shares_endpoint(&self, o: &Edge) -> bool {
        self.touches(o.u) || self.touches(o.v)
    }

    pub fn key(&self) -> (VertexId, VertexId) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// Loopless multigraph. Vertex ids are kept sorted; edges keep insertion order,
/// and an edge's index is its position in [`MultiGraph::edges`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiGraph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    labels: BTreeMap<VertexId, String>,
}

/// Dense adjacency view: vertex positions `0..n` in id order, with
/// `adj[i]` listing `(neighbour position, edge index)`.
#[derive(Clone, Debug)]
pub struct Dense {
    pub ids: Vec<VertexId>,
    pub adj: Vec<Vec<(usize, usize)>>,
    pub ends: Vec<(usize, usize)>,
}

impl Dense {
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn pos(&self, id: VertexId) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }
}

impl MultiGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on vertices `0..n` with no edges.
    pub fn with_vertices(n: usize) -> Self {
        MultiGraph {
            vertices: (0..n as VertexId).collect(),
            ..Default::default()
        }
    }

    /// Graph on `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut g = Self::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::with_vertices(n);
        for u in 0..n as VertexId {
            for v in u + 1..n as VertexId {
                g.edges.push(Edge { u, v });
            }
        }
        g
    }

    /// K_{a,b}: ids `0..a` on one side, `a..a+b` on the other.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::with_vertices(a + b);
        for u in 0..a as VertexId {
            for v in a as VertexId..(a + b) as VertexId {
                g.edges.push(Edge { u, v });
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::with_vertices(n);
        for i in 0..n {
            g.edges.push(Edge {
                u: i as VertexId,
                v: ((i + 1) % n) as VertexId,
            });
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::with_vertices(n);
        for i in 1..n {
            g.edges.push(Edge {
                u: (i - 1) as VertexId,
                v: i as VertexId,
            });
        }
        g
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn max_id(&self) -> Option<VertexId> {
        self.vertices.last().copied()
    }

    /// Smallest id strictly greater than every present id.
    pub fn fresh_id(&self) -> VertexId {
        self.max_id().map_or(0, |m| m + 1)
    }

    pub fn add_vertex(&mut self, v: VertexId) -> bool {
        match self.vertices.binary_search(&v) {
            Ok(_) => false,
            Err(p) => {
                self.vertices.insert(p, v);
                true
            }
        }
    }

    pub fn add_fresh_vertex(&mut self) -> VertexId {
        let v = self.fresh_id();
        self.vertices.push(v);
        v
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<usize, GraphError> {
        if u == v {
            return Err(GraphError::Loop(u));
        }
        for x in [u, v] {
            if !self.has_vertex(x) {
                return Err(GraphError::MissingVertex(x));
            }
        }
        self.edges.push(Edge { u, v });
        Ok(self.edges.len() - 1)
    }

    pub fn labels(&self) -> &BTreeMap<VertexId, String> {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.get(&v).map(|s| s.as_str())
    }

    pub fn set_label(&mut self, v: VertexId, tag: impl Into<String>) {
        self.labels.insert(v, tag.into());
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    pub fn degrees(&self) -> BTreeMap<VertexId, usize> {
        let mut d: BTreeMap<VertexId, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for e in &self.edges {
            *d.get_mut(&e.u).unwrap() += 1;
            *d.get_mut(&e.v).unwrap() += 1;
        }
        d
    }

    /// Sorted, deduplicated neighbour ids.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let s: BTreeSet<VertexId> = self
            .edges
            .iter()
            .filter(|e| e.touches(v))
            .map(|e| e.other(v))
            .collect();
        s.into_iter().collect()
    }

    pub fn incident_edges(&self, v: VertexId) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| self.edges[i].touches(v))
            .collect()
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        let k = Edge { u, v }.key();
        self.edges.iter().filter(|e| e.key() == k).count()
    }

    pub fn dense(&self) -> Dense {
        let ids = self.vertices.clone();
        let index: HashMap<VertexId, usize> =
            ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![Vec::new(); ids.len()];
        let mut ends = Vec::with_capacity(self.edges.len());
        for (k, e) in self.edges.iter().enumerate() {
            let (a, b) = (index[&e.u], index[&e.v]);
            adj[a].push((b, k));
            adj[b].push((a, k));
            ends.push((a, b));
        }
        Dense { ids, adj, ends }
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert(e.key()))
    }

    /// Underlying simple graph (first edge of each parallel class kept).
    pub fn simplified(&self) -> MultiGraph {
        let mut seen = BTreeSet::new();
        MultiGraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| seen.insert(e.key()))
                .collect(),
            labels: self.labels.clone(),
        }
    }

    /// `2|E|/|V|` exactly.
    pub fn average_degree(&self) -> Result<Rational, GraphError> {
        if self.vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        Ok(Rational::new(
            BigInt::from(2 * self.edges.len()),
            BigInt::from(self.vertices.len()),
        ))
    }

    pub fn component_count(&self) -> usize {
        let d = self.dense();
        let mut seen = vec![false; d.len()];
        let mut count = 0;
        for s in 0..d.len() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &(y, _) in &d.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn remove_edge(&mut self, i: usize) -> Edge {
        self.edges.remove(i)
    }

    /// Copy without the given edge indices.
    pub fn without_edges(&self, drop: &[usize]) -> MultiGraph {
        let drop: BTreeSet<usize> = drop.iter().copied().collect();
        MultiGraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .enumerate()
                .filter(|(i, _)| !drop.contains(i))
                .map(|(_, e)| *e)
                .collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn remove_vertex(&mut self, v: VertexId) -> bool {
        match self.vertices.binary_search(&v) {
            Ok(p) => {
                self.vertices.remove(p);
                self.edges.retain(|e| !e.touches(v));
                self.labels.remove(&v);
                true
            }
            Err(_) => false,
        }
    }

    pub fn without_vertices(&self, drop: &[VertexId]) -> MultiGraph {
        let drop: BTreeSet<VertexId> = drop.iter().copied().collect();
        MultiGraph {
            vertices: self
                .vertices
                .iter()
                .copied()
                .filter(|v| !drop.contains(v))
                .collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| !drop.contains(&e.u) && !drop.contains(&e.v))
                .collect(),
            labels: self
                .labels
                .iter()
                .filter(|(v, _)| !drop.contains(v))
                .map(|(v, s)| (*v, s.clone()))
                .collect(),
        }
    }

    /// Merge `v` into `u`: edges at `v` are redirected to `u`, resulting loops
    /// are deleted and parallels kept. `u` keeps its id.
    pub fn identify(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        if u == v {
            return Ok(());
        }
        for x in [u, v] {
            if !self.has_vertex(x) {
                return Err(GraphError::MissingVertex(x));
            }
        }
        for e in self.edges.iter_mut() {
            if e.u == v {
                e.u = u;
            }
            if e.v == v {
                e.v = u;
            }
        }
        self.edges.retain(|e| e.u != e.v);
        if let Some(tag) = self.labels.remove(&v) {
            self.labels.entry(u).or_insert(tag);
        }
        let p = self.vertices.binary_search(&v).unwrap();
        self.vertices.remove(p);
        Ok(())
    }

    /// Contract edge `i`, keeping the id of its first endpoint.
    pub fn contract_edge(&mut self, i: usize) -> Result<VertexId, GraphError> {
        let e = *self.edges.get(i).ok_or(GraphError::MissingEdge(i))?;
        self.identify(e.u, e.v)?;
        Ok(e.u)
    }

    /// Suppress degree-2 vertices among `candidates` (all vertices when
    /// `None`) until none remains. A degree-2 vertex with distinct neighbours
    /// a, b is replaced by an edge a–b; one whose two edges are parallel
    /// keeps a single copy of that edge, so no loop is ever formed.
    pub fn suppress_degree2_among(&mut self, candidates: Option<&BTreeSet<VertexId>>) -> usize {
        let mut removed = 0;
        loop {
            let deg = self.degrees();
            let target = deg
                .iter()
                .find(|(v, &d)| d == 2 && candidates.map_or(true, |c| c.contains(v)));
            let Some((&v, _)) = target else { break };
            let inc = self.incident_edges(v);
            let (a, b) = (self.edges[inc[0]].other(v), self.edges[inc[1]].other(v));
            if a == b {
                self.edges.remove(inc[1]);
            } else {
                self.edges[inc[0]] = Edge { u: a, v: b };
                self.edges.remove(inc[1]);
                let p = self.vertices.binary_search(&v).unwrap();
                self.vertices.remove(p);
                self.labels.remove(&v);
            }
            removed += 1;
        }
        removed
    }

    pub fn suppress_degree2(&self) -> MultiGraph {
        let mut g = self.clone();
        g.suppress_degree2_among(None);
        g
    }

    /// Disjoint union; `other`'s vertices are renumbered from `fresh_id()` in
    /// id order. Returns the id map for `other`.
    pub fn disjoint_union(&mut self, other: &MultiGraph) -> BTreeMap<VertexId, VertexId> {
        let base = self.fresh_id();
        let map: BTreeMap<VertexId, VertexId> = other
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, base + i as VertexId))
            .collect();
        self.vertices.extend(other.vertices.iter().map(|v| map[v]));
        self.edges.extend(other.edges.iter().map(|e| Edge {
            u: map[&e.u],
            v: map[&e.v],
        }));
        for (v, t) in &other.labels {
            self.labels.insert(map[v], t.clone());
        }
        map
    }

    /// Renumber vertices to `0..n` in id order. Returns old → new.
    pub fn compact(&self) -> (MultiGraph, BTreeMap<VertexId, VertexId>) {
        let map: BTreeMap<VertexId, VertexId> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as VertexId))
            .collect();
        (self.relabel(&map), map)
    }

    /// Apply an injective relabeling defined on every vertex.
    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> MultiGraph {
        let mut vertices: Vec<VertexId> = self.vertices.iter().map(|v| map[v]).collect();
        vertices.sort_unstable();
        MultiGraph {
            vertices,
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    u: map[&e.u],
                    v: map[&e.v],
                })
                .collect(),
            labels: self.labels.iter().map(|(v, t)| (map[v], t.clone())).collect(),
        }
    }

    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for d in self.degrees().values() {
            *h.entry(*d).or_insert(0) += 1;
        }
        h
    }

    /// Check the structural invariants (no loops, endpoints present, sorted ids).
    pub fn validate(&self) -> Result<(), GraphError> {
        if self.vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(GraphError::Invalid("vertex ids not strictly increasing".into()));
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.u == e.v {
                return Err(GraphError::Loop(e.u));
            }
            if !self.has_vertex(e.u) || !self.has_vertex(e.v) {
                return Err(GraphError::Invalid(format!("edge {i} has a missing endpoint")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn average_degree_exact() {
        let g = MultiGraph::complete_bipartite(3, 3);
        assert_eq!(g.average_degree().unwrap(), Rational::from_integer(3.into()));
        let one = MultiGraph::with_vertices(1);
        assert_eq!(one.average_degree().unwrap(), Rational::from_integer(0.into()));
        assert!(MultiGraph::new().average_degree().is_err());
    }

    #[test]
    fn simplicity() {
        assert!(MultiGraph::complete(4).is_simple());
        let digon = MultiGraph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(!digon.is_simple());
        assert_eq!(digon.multiplicity(0, 1), 2);
    }

    #[test]
    fn loops_rejected() {
        let mut g = MultiGraph::with_vertices(2);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 5).is_err());
    }

    #[test]
    fn suppress_path() {
        let g = MultiGraph::path(3).suppress_degree2();
        assert_eq!(g.vertices(), &[0, 2]);
        assert_eq!(g.edges().len(), 1);
        assert_eq!(g.edges()[0].key(), (0, 2));
    }

    #[test]
    fn suppress_subdivided_triangle() {
        let mut h = MultiGraph::complete(4);
        let y = h.add_fresh_vertex();
        h.remove_edge(0);
        h.add_edge(0, y).unwrap();
        h.add_edge(y, 1).unwrap();
        let s = h.suppress_degree2();
        assert_eq!(s.vertices(), &[0, 1, 2, 3]);
        assert_eq!(s.edge_count(), 6);
        assert!(s.is_simple());
    }

    #[test]
    fn suppress_identity_without_degree_two() {
        let g = MultiGraph::complete(4);
        assert_eq!(g.suppress_degree2(), g);
    }

    #[test]
    fn suppress_digon_vertex_no_loop() {
        let g = MultiGraph::from_edges(3, &[(0, 2), (2, 0), (0, 1), (0, 1), (1, 0)]).unwrap();
        let s = g.suppress_degree2();
        assert!(s.validate().is_ok());
        assert_eq!(s.degree(2), 1);
        assert!(s.degrees().values().all(|&d| d != 2));
    }

    #[test]
    fn identify_drops_loops_keeps_parallels() {
        let mut g = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        g.identify(0, 1).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.multiplicity(0, 2), 2);
    }

    #[test]
    fn union_and_compact() {
        let mut g = MultiGraph::complete(3);
        let m = g.disjoint_union(&MultiGraph::cycle(4));
        assert_eq!(m[&0], 3);
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.component_count(), 2);
        let h = g.without_vertices(&[1]);
        let (c, _) = h.compact();
        assert_eq!(c.vertices(), &[0, 1, 2, 3, 4, 5]);
    }
}
