//! Planarity answers with certificates: a rotation system when planar, a
//! Kuratowski subdivision when not (below a size bound).

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::lr::lr_planarity;
use super::{MultiGraph, VertexId};

/// Largest edge count for which a Kuratowski subdivision is extracted.
pub const KURATOWSKI_EDGE_BOUND: usize = 4000;

/// Rotation system: for each vertex, its incident edge indices in clockwise
/// order. Faces are derived on demand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub rotation: BTreeMap<VertexId, Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// Edge set of a subdivision of K5 or K3,3, with its branch vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Kuratowski {
    pub kind: KuratowskiKind,
    pub edges: Vec<usize>,
    pub branch: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Planarity {
    Planar(Embedding),
    NonPlanar(Option<Kuratowski>),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }
}

/// Planarity of a graph given on dense positions; parallel edges allowed.
pub fn planar_dense(n: usize, ends: &[(usize, usize)]) -> bool {
    let mut keys: Vec<(usize, usize)> = ends
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    keys.sort_unstable();
    keys.dedup();
    lr_planarity(n, &keys, false).is_some()
}

pub fn is_planar(g: &MultiGraph) -> bool {
    let d = g.dense();
    planar_dense(d.len(), &d.ends)
}

/// Full planarity answer with certificate.
pub fn planarity(g: &MultiGraph) -> Planarity {
    match embed(g) {
        Some(e) => Planarity::Planar(e),
        None => Planarity::NonPlanar(kuratowski(g)),
    }
}

/// A planar rotation system of `g`, or `None` when `g` is not planar.
pub fn embed(g: &MultiGraph) -> Option<Embedding> {
    let d = g.dense();
    let mut class: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, &(a, b)) in d.ends.iter().enumerate() {
        class.entry((a.min(b), a.max(b))).or_default().push(i);
    }
    let keys: Vec<(usize, usize)> = class.keys().copied().collect();
    let rot = lr_planarity(d.len(), &keys, true)?;
    let mut rotation = BTreeMap::new();
    for (v, simple) in rot.iter().enumerate() {
        let mut list = Vec::new();
        for &k in simple {
            let (a, b) = keys[k];
            let par = &class[&(a, b)];
            if v == a {
                list.extend(par.iter().copied());
            } else {
                list.extend(par.iter().rev().copied());
            }
        }
        rotation.insert(d.ids[v], list);
    }
    Some(Embedding { rotation })
}

impl Embedding {
    /// Face walks as sequences of `(edge, tail vertex)` darts.
    pub fn faces(&self, g: &MultiGraph) -> Result<Vec<Vec<(usize, VertexId)>>, String> {
        let mut pos: BTreeMap<(VertexId, usize), usize> = BTreeMap::new();
        for (&v, list) in &self.rotation {
            for (i, &e) in list.iter().enumerate() {
                if pos.insert((v, e), i).is_some() {
                    return Err(format!("edge {e} repeated in rotation of {v}"));
                }
            }
        }
        let mut used: BTreeSet<(usize, VertexId)> = BTreeSet::new();
        let mut faces = Vec::new();
        for (i, e) in g.edges().iter().enumerate() {
            for tail in [e.u, e.v] {
                if used.contains(&(i, tail)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut de, mut dt) = (i, tail);
                loop {
                    if !used.insert((de, dt)) {
                        return Err("face walk re-entered a used dart".into());
                    }
                    face.push((de, dt));
                    let head = g.edge(de).other(dt);
                    let list = &self.rotation[&head];
                    let p = pos[&(head, de)];
                    let nxt = list[(p + list.len() - 1) % list.len()];
                    de = nxt;
                    dt = head;
                    if (de, dt) == (i, tail) {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        Ok(faces)
    }

    /// Independent check: each rotation is a permutation of the incident
    /// edges, and every connected component satisfies V − E + F = 2.
    pub fn verify(&self, g: &MultiGraph) -> Result<(), String> {
        let d = g.dense();
        for (p, &v) in d.ids.iter().enumerate() {
            let mut want: Vec<usize> = d.adj[p].iter().map(|&(_, e)| e).collect();
            let mut have = self.rotation.get(&v).cloned().unwrap_or_default();
            want.sort_unstable();
            have.sort_unstable();
            if want != have {
                return Err(format!("rotation at {v} is not its incident edge set"));
            }
        }
        if self.rotation.keys().any(|v| !g.has_vertex(*v)) {
            return Err("rotation mentions a vertex outside the graph".into());
        }
        let faces = self.faces(g)?;
        let mut comp = vec![usize::MAX; d.len()];
        let mut nc = 0;
        for s in 0..d.len() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = nc;
            let mut st = vec![s];
            while let Some(x) = st.pop() {
                for &(y, _) in &d.adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = nc;
                        st.push(y);
                    }
                }
            }
            nc += 1;
        }
        let mut vc = vec![0i64; nc];
        let mut ec = vec![0i64; nc];
        let mut fc = vec![0i64; nc];
        for p in 0..d.len() {
            vc[comp[p]] += 1;
        }
        for &(a, _) in &d.ends {
            ec[comp[a]] += 1;
        }
        for f in &faces {
            let tail = d.pos(f[0].1).unwrap();
            fc[comp[tail]] += 1;
        }
        for c in 0..nc {
            let faces_c = if ec[c] == 0 { 1 } else { fc[c] };
            if vc[c] - ec[c] + faces_c != 2 {
                return Err(format!(
                    "Euler check failed on a component: V={} E={} F={}",
                    vc[c], ec[c], faces_c
                ));
            }
        }
        Ok(())
    }
}

/// Extract a Kuratowski subdivision by greedy edge deletion, keeping the
/// graph non-planar. Returns `None` when `g` is planar or too large.
pub fn kuratowski(g: &MultiGraph) -> Option<Kuratowski> {
    let s = g.simplified();
    if s.edge_count() > KURATOWSKI_EDGE_BOUND || is_planar(&s) {
        return None;
    }
    let d = s.dense();
    let mut keep: Vec<bool> = vec![true; d.ends.len()];
    for i in 0..d.ends.len() {
        keep[i] = false;
        let ends: Vec<(usize, usize)> = d
            .ends
            .iter()
            .zip(&keep)
            .filter(|(_, k)| **k)
            .map(|(e, _)| *e)
            .collect();
        if planar_dense(d.len(), &ends) {
            keep[i] = true;
        }
    }
    // map kept simple edges back to the first matching edge index of g
    let mut first: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    for (i, e) in g.edges().iter().enumerate() {
        first.entry(e.key()).or_insert(i);
    }
    let edges: Vec<usize> = s
        .edges()
        .iter()
        .zip(&keep)
        .filter(|(_, k)| **k)
        .map(|(e, _)| first[&e.key()])
        .collect();
    let sub = subgraph(g, &edges);
    let deg = sub.degrees();
    let branch: Vec<VertexId> = deg
        .iter()
        .filter(|(_, &x)| x >= 3)
        .map(|(v, _)| *v)
        .collect();
    let kind = if branch.len() == 5 {
        KuratowskiKind::K5
    } else {
        KuratowskiKind::K33
    };
    let k = Kuratowski {
        kind,
        edges,
        branch,
    };
    k.verify(g).ok().map(|_| k)
}

fn subgraph(g: &MultiGraph, edges: &[usize]) -> MultiGraph {
    let mut h = MultiGraph::new();
    for &i in edges {
        let e = g.edge(i);
        h.add_vertex(e.u);
        h.add_vertex(e.v);
    }
    for &i in edges {
        let e = g.edge(i);
        h.add_edge(e.u, e.v).unwrap();
    }
    h
}

impl Kuratowski {
    /// Check that the edge set is a subdivision of the declared graph.
    pub fn verify(&self, g: &MultiGraph) -> Result<(), String> {
        if self.edges.iter().any(|&i| i >= g.edge_count()) {
            return Err("edge index out of range".into());
        }
        let uniq: BTreeSet<usize> = self.edges.iter().copied().collect();
        if uniq.len() != self.edges.len() {
            return Err("repeated edge".into());
        }
        let sub = subgraph(g, &self.edges);
        if !sub.is_simple() {
            return Err("subdivision has parallel edges".into());
        }
        if !sub.is_connected() {
            return Err("subdivision is disconnected".into());
        }
        let deg = sub.degrees();
        let (want_n, want_d) = match self.kind {
            KuratowskiKind::K5 => (5, 4),
            KuratowskiKind::K33 => (6, 3),
        };
        let branch: BTreeSet<VertexId> = self.branch.iter().copied().collect();
        if branch.len() != want_n {
            return Err("wrong number of branch vertices".into());
        }
        for (v, &x) in &deg {
            let want = if branch.contains(v) { want_d } else { 2 };
            if x != want {
                return Err(format!("vertex {v} has degree {x}, expected {want}"));
            }
        }
        // follow threads between branch vertices
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for e in sub.edges() {
            adj.entry(e.u).or_default().push(e.v);
            adj.entry(e.v).or_default().push(e.u);
        }
        let mut links: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
        for &b in &branch {
            for &first in &adj[&b] {
                let (mut prev, mut cur) = (b, first);
                while !branch.contains(&cur) {
                    let nx = if adj[&cur][0] == prev {
                        adj[&cur][1]
                    } else {
                        adj[&cur][0]
                    };
                    prev = cur;
                    cur = nx;
                }
                if cur == b {
                    return Err("thread returns to its start".into());
                }
                links.insert((b.min(cur), b.max(cur)));
            }
        }
        let bl: Vec<VertexId> = branch.into_iter().collect();
        match self.kind {
            KuratowskiKind::K5 => {
                if links.len() != 10 {
                    return Err("branch vertices do not form K5".into());
                }
            }
            KuratowskiKind::K33 => {
                if links.len() != 9 {
                    return Err("branch vertices do not form K3,3".into());
                }
                // 2-colour the branch graph; each side must have size 3
                let mut side: BTreeMap<VertexId, bool> = BTreeMap::new();
                side.insert(bl[0], false);
                let mut changed = true;
                while changed {
                    changed = false;
                    for &(a, b) in &links {
                        match (side.get(&a).copied(), side.get(&b).copied()) {
                            (Some(x), None) => {
                                side.insert(b, !x);
                                changed = true;
                            }
                            (None, Some(x)) => {
                                side.insert(a, !x);
                                changed = true;
                            }
                            (Some(x), Some(y)) if x == y => {
                                return Err("branch graph not bipartite".into())
                            }
                            _ => {}
                        }
                    }
                }
                let left = side.values().filter(|x| **x).count();
                if side.len() != 6 || left != 3 {
                    return Err("branch graph is not K3,3".into());
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> MultiGraph {
        let mut e = Vec::new();
        for i in 0..5u32 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        MultiGraph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn small_answers() {
        assert!(is_planar(&MultiGraph::complete(4)));
        assert!(!is_planar(&MultiGraph::complete(5)));
        assert!(!is_planar(&MultiGraph::complete_bipartite(3, 3)));
        assert!(is_planar(&MultiGraph::complete_bipartite(2, 7)));
        assert!(!is_planar(&petersen()));
        assert!(is_planar(&MultiGraph::new()));
        assert!(is_planar(&MultiGraph::with_vertices(3)));
    }

    #[test]
    fn embeddings_verify() {
        let mut g = MultiGraph::complete(4);
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap();
        let mut u = g.clone();
        u.disjoint_union(&MultiGraph::cycle(5));
        u.disjoint_union(&MultiGraph::path(4));
        u.add_fresh_vertex();
        for h in [g, u, MultiGraph::complete_bipartite(2, 5)] {
            match planarity(&h) {
                Planarity::Planar(e) => e.verify(&h).unwrap(),
                _ => panic!("expected planar"),
            }
        }
    }

    #[test]
    fn kuratowski_witnesses() {
        for g in [
            MultiGraph::complete(5),
            MultiGraph::complete_bipartite(3, 3),
            petersen(),
            MultiGraph::complete(6),
        ] {
            match planarity(&g) {
                Planarity::NonPlanar(Some(k)) => k.verify(&g).unwrap(),
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn wheel_embeds() {
        let mut g = MultiGraph::cycle(8);
        let c = g.add_fresh_vertex();
        for i in 0..8 {
            g.add_edge(c, i).unwrap();
        }
        let e = embed(&g).unwrap();
        e.verify(&g).unwrap();
        assert_eq!(e.faces(&g).unwrap().len(), 9);
    }
}
