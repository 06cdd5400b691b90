//! Strip witnesses for staircase cuts: the lines give the traversing paths,
//! and the ladder paths are found greedily. `Q_u` leaves each path at the
//! first step down and `Q_v` at the last one, so `Q_u` stays to the left.

use std::collections::{BTreeMap, BTreeSet};

use super::staircase::EdgeRole;
use crate::certificates::{enumerate_u_v, ladder, Side, StripEntry, StripWitness, TraversingPath};
use crate::graph::connectivity::EdgePath;
use crate::graph::VertexId;
use crate::tile::Tile;

/// The line of each left-wall vertex, followed to the right wall.
pub fn trace_paths(t: &Tile, roles: &[EdgeRole]) -> Option<Vec<TraversingPath>> {
    let es = t.graph.edges();
    let mut at: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    for (i, e) in es.iter().enumerate() {
        if roles[i].line().is_some() {
            at.entry(e.u).or_default().push(i);
            at.entry(e.v).or_default().push(i);
        }
    }
    let right: BTreeSet<VertexId> = t.right.iter().copied().collect();
    let mut out = Vec::with_capacity(t.left.len());
    for &s in &t.left {
        let first = match at.get(&s)?[..] {
            [e] => e,
            _ => return None,
        };
        let mut p = EdgePath {
            vertices: vec![s],
            edges: Vec::new(),
        };
        let (mut y, mut e) = (s, first);
        loop {
            p.edges.push(e);
            y = es[e].other(y);
            p.vertices.push(y);
            if right.contains(&y) || p.edges.len() > es.len() {
                break;
            }
            let here = &at[&y];
            let same = here.iter().copied().find(|&f| f != e && roles[f].line() == roles[e].line());
            e = match same {
                Some(f) => f,
                None => match here.iter().copied().filter(|&f| f != e).collect::<Vec<_>>()[..] {
                    [f] => f,
                    _ => return None,
                },
            };
        }
        out.push(TraversingPath::new(t, p).ok()?);
    }
    Some(out)
}

struct System<'a> {
    t: &'a Tile,
    paths: Vec<&'a [VertexId]>,
    index: Vec<BTreeMap<VertexId, usize>>,
    /// Per path and position, the step target on the next and previous path.
    next: Vec<Vec<Option<VertexId>>>,
    prev: Vec<Vec<Option<VertexId>>>,
}

impl<'a> System<'a> {
    fn new(t: &'a Tile, paths: Vec<&'a TraversingPath>) -> System<'a> {
        let mut on: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        let mut path_edges = BTreeSet::new();
        let mut index: Vec<BTreeMap<VertexId, usize>> = Vec::new();
        for (k, p) in paths.iter().enumerate() {
            index.push(p.path.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect());
            for &v in &p.path.vertices {
                on.entry(v).or_default().push(k);
            }
            path_edges.extend(p.path.edges.iter().copied());
        }
        let alone = |v: &VertexId| on.get(v).is_some_and(|l| l.len() == 1);
        // a step from a private vertex `y` to a private vertex of path `to`
        let step = |y: VertexId, to: usize| -> Option<VertexId> {
            if !alone(&y) {
                return None;
            }
            let g = &t.graph;
            g.incident_edges(y)
                .into_iter()
                .filter(|e| !path_edges.contains(e))
                .map(|e| g.edge(e).other(y))
                .find(|z| alone(z) && index[to].contains_key(z))
        };
        let k = paths.len();
        let table = |d: isize| -> Vec<Vec<Option<VertexId>>> {
            (0..k)
                .map(|i| {
                    let to = i as isize + d;
                    paths[i]
                        .path
                        .vertices
                        .iter()
                        .map(|&y| if (0..k as isize).contains(&to) { step(y, to as usize) } else { None })
                        .collect()
                })
                .collect()
        };
        let (next, prev) = (table(1), table(-1));
        System {
            t,
            paths: paths.iter().map(|p| &p.path.vertices[..]).collect(),
            index,
            next,
            prev,
        }
    }

    /// `Q_u` from `a` (on paths 0 and 1) down to `b` (on paths n-2, n-1).
    fn down(&self, a: VertexId, b: VertexId) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
        let n = self.paths.len();
        let mut verts = vec![a];
        let mut marks = vec![a, a, a];
        let (mut cur, mut pos) = (1, *self.index[1].get(&a)?);
        while cur < n - 1 {
            let p = self.paths[cur];
            let (i, z) = (pos..p.len()).find_map(|i| self.next[cur][i].map(|z| (i, z)))?;
            verts.extend(&p[pos + 1..=i]);
            marks.push(p[i]);
            verts.push(z);
            marks.push(z);
            cur += 1;
            pos = self.index[cur][&z];
        }
        let last = self.paths[n - 1];
        let end = *self.index[n - 1].get(&b)?;
        if end < pos {
            return None;
        }
        verts.extend(&last[pos + 1..=end]);
        marks.push(b);
        Some((verts, marks))
    }

    /// `Q_v` from `a` along path 0, stepping down as late as possible to
    /// reach `b` along path n-2.
    fn late(&self, a: VertexId, b: VertexId) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
        let n = self.paths.len();
        // built backwards from b
        let mut rev = vec![b];
        let mut marks_rev = vec![b, b, b];
        let (mut cur, mut pos) = (n - 2, *self.index[n - 2].get(&b)?);
        while cur > 0 {
            let p = self.paths[cur];
            let (i, z) = (0..=pos).rev().find_map(|i| self.prev[cur][i].map(|z| (i, z)))?;
            rev.extend(p[i..pos].iter().rev());
            marks_rev.push(p[i]);
            rev.push(z);
            marks_rev.push(z);
            cur -= 1;
            pos = self.index[cur][&z];
        }
        let first = self.paths[0];
        let start = *self.index[0].get(&a)?;
        if start > pos {
            return None;
        }
        rev.extend(first[start..pos].iter().rev());
        marks_rev.push(a);
        rev.reverse();
        marks_rev.reverse();
        Some((rev, marks_rev))
    }

    fn entry(&self, a: VertexId, b: VertexId) -> Option<(EdgePath, EdgePath, Vec<VertexId>, Vec<VertexId>)> {
        let (qu, um) = self.down(a, b)?;
        let (qv, vm) = self.late(a, b)?;
        Some((ladder(self.t, &qu)?, ladder(self.t, &qv)?, um, vm))
    }
}

/// Ladder paths for every `(u, v)`; `None` if the greedy search fails for
/// some pair.
pub fn strip_ladders(t: &Tile, paths: Vec<TraversingPath>) -> Option<StripWitness> {
    let fwd = System::new(t, paths.iter().collect());
    let bwd = System::new(t, paths.iter().rev().collect());
    let mut entries = Vec::new();
    for (u, v) in enumerate_u_v(&paths) {
        let e = if let Some((qu, qv, um, vm)) = fwd.entry(u, v) {
            StripEntry {
                u,
                v,
                side: Side::Left,
                qu,
                qv,
                u_marks: um,
                v_marks: vm,
            }
        } else {
            let (qu, qv, um, vm) = bwd.entry(v, u)?;
            StripEntry {
                u,
                v,
                side: Side::Right,
                qu,
                qv,
                u_marks: um,
                v_marks: vm,
            }
        };
        entries.push(e);
    }
    Some(StripWitness { paths, entries })
}
