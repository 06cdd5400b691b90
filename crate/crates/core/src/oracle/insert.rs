//! Upper witnesses by greedy planar subgraph plus shortest dual-path edge
//! insertion, with remove-and-reinsert improvement and seeded restarts.

use std::collections::{BTreeMap, VecDeque};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{verify_witness, CrossingSet};
use crate::graph::planarity::{embed, planar_dense};
use crate::graph::{MultiGraph, VertexId};

#[derive(Clone, Debug)]
pub struct InsertOptions {
    pub restarts: usize,
    pub seed: u64,
    /// Edges that may not be crossed (empty: none).
    pub protected: Vec<bool>,
    /// Witnesses tried before the heuristic; the first valid one of size at
    /// most `k` is returned.
    pub seeds: Vec<CrossingSet>,
}

impl Default for InsertOptions {
    fn default() -> Self {
        InsertOptions {
            restarts: 16,
            seed: 0,
            protected: Vec::new(),
            seeds: Vec::new(),
        }
    }
}

/// A crossing set of size at most `k` with planar planarization, if the
/// heuristic finds one. Absence proves nothing.
pub fn witness_upper(g: &MultiGraph, k: usize) -> Option<CrossingSet> {
    witness_upper_with(g, k, &InsertOptions::default())
}

pub fn witness_upper_with(g: &MultiGraph, k: usize, opts: &InsertOptions) -> Option<CrossingSet> {
    let m = g.edge_count();
    let protected = if opts.protected.is_empty() {
        vec![false; m]
    } else {
        opts.protected.clone()
    };
    let ok = |cs: &CrossingSet| {
        cs.len() <= k
            && cs.pairs.iter().all(|&(a, b)| !protected[a] && !protected[b])
            && verify_witness(g, cs)
    };
    if let Some(s) = opts.seeds.iter().find(|s| ok(s)) {
        return Some(s.clone());
    }
    let d = g.dense();
    if planar_dense(d.len(), &d.ends) {
        return Some(CrossingSet::default());
    }
    let mut best: Option<CrossingSet> = None;
    for r in 0..opts.restarts.max(1) {
        let mut order: Vec<usize> = (0..m).collect();
        if r > 0 {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(r as u64));
            order.shuffle(&mut rng);
        }
        order.sort_by_key(|&e| !protected[e]);
        let Some(cs) = Drawing::build(g, &order, &protected) else {
            continue;
        };
        if best.as_ref().map_or(true, |b| cs.len() < b.len()) {
            best = Some(cs);
        }
        if best.as_ref().is_some_and(|b| b.len() <= k) {
            break;
        }
    }
    best.filter(|b| ok(b))
}

struct Drawing<'a> {
    g: &'a MultiGraph,
    protected: &'a [bool],
    drawn: Vec<bool>,
    cs: CrossingSet,
}

/// Planarization of the drawn edges with, for each planarization edge, the
/// original edge and segment index it came from.
struct Plan {
    graph: MultiGraph,
    seg: Vec<(usize, usize)>,
}

impl<'a> Drawing<'a> {
    fn build(g: &'a MultiGraph, order: &[usize], protected: &'a [bool]) -> Option<CrossingSet> {
        let m = g.edge_count();
        let mut dr = Drawing {
            g,
            protected,
            drawn: vec![false; m],
            cs: CrossingSet::default(),
        };
        let d = g.dense();
        let mut kept: Vec<(usize, usize)> = Vec::new();
        let mut rest = Vec::new();
        for &e in order {
            kept.push(d.ends[e]);
            if planar_dense(d.len(), &kept) {
                dr.drawn[e] = true;
            } else {
                kept.pop();
                if protected[e] {
                    return None;
                }
                rest.push(e);
            }
        }
        for e in rest {
            if !dr.insert(e) {
                return None;
            }
        }
        dr.improve();
        Some(dr.cs)
    }

    /// Remove and reinsert crossed edges while the total drops.
    fn improve(&mut self) {
        loop {
            let before = self.cs.len();
            let mut crossed: Vec<usize> = self
                .cs
                .pairs
                .iter()
                .flat_map(|&(a, b)| [a, b])
                .filter(|&e| !self.protected[e])
                .collect();
            crossed.sort_unstable();
            crossed.dedup();
            for e in crossed {
                let saved = (self.cs.clone(), self.drawn.clone());
                self.remove(e);
                if !self.insert(e) || self.cs.len() > saved.0.len() {
                    self.cs = saved.0;
                    self.drawn = saved.1;
                }
            }
            if self.cs.len() >= before {
                return;
            }
        }
    }

    fn remove(&mut self, e: usize) {
        let keep: Vec<usize> = (0..self.cs.len())
            .filter(|&i| self.cs.pairs[i].0 != e && self.cs.pairs[i].1 != e)
            .collect();
        let mut newidx = vec![usize::MAX; self.cs.len()];
        for (j, &i) in keep.iter().enumerate() {
            newidx[i] = j;
        }
        let mut order = BTreeMap::new();
        for f in 0..self.g.edge_count() {
            if f == e {
                continue;
            }
            let l: Vec<usize> = self
                .cs
                .along(f)
                .into_iter()
                .filter(|&i| newidx[i] != usize::MAX)
                .map(|i| newidx[i])
                .collect();
            if !l.is_empty() {
                order.insert(f, l);
            }
        }
        self.cs = CrossingSet {
            pairs: keep.iter().map(|&i| self.cs.pairs[i]).collect(),
            order,
        };
        self.drawn[e] = false;
    }

    fn plan(&self) -> Plan {
        let mut h = MultiGraph::new();
        for &v in self.g.vertices() {
            h.add_vertex(v);
        }
        let dummies: Vec<VertexId> = (0..self.cs.len()).map(|_| h.add_fresh_vertex()).collect();
        let mut seg = Vec::new();
        for (i, e) in self.g.edges().iter().enumerate() {
            if !self.drawn[i] {
                continue;
            }
            let mut pts = vec![e.u];
            pts.extend(self.cs.along(i).into_iter().map(|p| dummies[p]));
            pts.push(e.v);
            for (s, w) in pts.windows(2).enumerate() {
                h.add_edge(w[0], w[1]).expect("endpoints exist");
                seg.push((i, s));
            }
        }
        Plan { graph: h, seg }
    }

    /// Route edge `e` along a shortest path in the dual of an embedding of
    /// the current planarization.
    fn insert(&mut self, e: usize) -> bool {
        let edge = self.g.edge(e);
        let plan = self.plan();
        let h = &plan.graph;
        let Some(emb) = embed(h) else {
            return false;
        };
        let Ok(faces) = emb.faces(h) else {
            return false;
        };
        let mut face_of: BTreeMap<(usize, VertexId), usize> = BTreeMap::new();
        for (fi, f) in faces.iter().enumerate() {
            for &dart in f {
                face_of.insert(dart, fi);
            }
        }
        let is_u: Vec<bool> = faces.iter().map(|f| f.iter().any(|&(_, t)| t == edge.u)).collect();
        let is_v: Vec<bool> = faces.iter().map(|f| f.iter().any(|&(_, t)| t == edge.v)).collect();
        if !is_u.iter().any(|&x| x) || !is_v.iter().any(|&x| x) || separated(h, edge.u, edge.v) {
            // an isolated endpoint or separate components: no crossing needed
            self.drawn[e] = true;
            self.cs.order.remove(&e);
            return true;
        }
        // dual adjacency over crossable planarization edges
        let mut dual: Vec<Vec<(usize, usize)>> = vec![Vec::new(); faces.len()];
        for (pe, pedge) in h.edges().iter().enumerate() {
            let (f, _) = plan.seg[pe];
            if self.protected[f] || self.g.edge(f).shares_endpoint(&edge) {
                continue;
            }
            let a = face_of[&(pe, pedge.u)];
            let b = face_of[&(pe, pedge.v)];
            dual[a].push((b, pe));
            dual[b].push((a, pe));
        }
        let mut pred: Vec<Option<(usize, usize)>> = vec![None; faces.len()];
        let mut seen = vec![false; faces.len()];
        let mut q = VecDeque::new();
        for (fi, &s) in is_u.iter().enumerate() {
            if s {
                seen[fi] = true;
                q.push_back(fi);
            }
        }
        let mut hit = None;
        while let Some(x) = q.pop_front() {
            if is_v[x] {
                hit = Some(x);
                break;
            }
            for &(y, pe) in &dual[x] {
                if !seen[y] {
                    seen[y] = true;
                    pred[y] = Some((x, pe));
                    q.push_back(y);
                }
            }
        }
        let Some(mut x) = hit else {
            return false;
        };
        let mut crossed = Vec::new();
        while let Some((p, pe)) = pred[x] {
            crossed.push(pe);
            x = p;
        }
        crossed.reverse();
        let mut targets: Vec<usize> = crossed.iter().map(|&pe| plan.seg[pe].0).collect();
        targets.sort_unstable();
        if targets.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        // record the new crossings; segment positions shift as earlier
        // insertions on the same edge land in lower segments
        let mut along: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for f in 0..self.g.edge_count() {
            let l = self.cs.along(f);
            if !l.is_empty() {
                along.insert(f, l);
            }
        }
        let mut mine = Vec::new();
        for &pe in &crossed {
            let (f, s) = plan.seg[pe];
            let idx = self.cs.pairs.len();
            self.cs.pairs.push((e.min(f), e.max(f)));
            along.entry(f).or_default().insert(s, idx);
            mine.push(idx);
        }
        if !mine.is_empty() {
            along.insert(e, mine);
        }
        self.cs.order = along;
        self.drawn[e] = true;
        true
    }
}

/// `u` and `v` lie in different components of `h`.
fn separated(h: &MultiGraph, u: VertexId, v: VertexId) -> bool {
    let d = h.dense();
    let (Some(s), Some(t)) = (d.pos(u), d.pos(v)) else {
        return true;
    };
    let mut seen = vec![false; d.len()];
    seen[s] = true;
    let mut st = vec![s];
    while let Some(x) = st.pop() {
        if x == t {
            return false;
        }
        for &(y, _) in &d.adj[x] {
            if !seen[y] {
                seen[y] = true;
                st.push(y);
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs() {
        assert_eq!(witness_upper(&MultiGraph::complete(4), 0), Some(CrossingSet::default()));
        let w = witness_upper(&MultiGraph::complete(5), 1).unwrap();
        assert_eq!(w.len(), 1);
        let g6 = MultiGraph::complete(6);
        let w = witness_upper(&g6, 3).unwrap();
        assert!(w.len() <= 3 && verify_witness(&g6, &w));
        assert!(witness_upper(&g6, 2).is_none());
    }

    #[test]
    fn bipartite() {
        let g = MultiGraph::complete_bipartite(3, 5);
        let w = witness_upper(&g, 4).unwrap();
        assert!(verify_witness(&g, &w));
    }

    #[test]
    fn protected_edges_are_not_crossed() {
        let g = MultiGraph::complete(5);
        let mut protected = vec![false; g.edge_count()];
        protected[0] = true;
        protected[9] = true;
        let w = witness_upper_with(
            &g,
            1,
            &InsertOptions {
                protected: protected.clone(),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(w.pairs.iter().all(|&(a, b)| !protected[a] && !protected[b]));
    }
}
