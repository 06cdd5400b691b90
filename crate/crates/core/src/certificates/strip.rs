//! Twisted staircase strips: the literal (s.i)–(s.x) checker.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{is_simple_path, path_from_vertices, violation, CertificateError, TraversingPath};
use crate::graph::connectivity::EdgePath;
use crate::graph::VertexId;
use crate::tile::Tile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Side {
    Left,
    Right,
}

/// Witness that `u` is left (or right) of `v`: the ladder paths and their
/// marked vertices `u_1, u_1', …, u_n, u_n'` and `v_1, v_1', …, v_n, v_n'`.
/// For [`Side::Right`] everything is stated in the vertically flipped
/// system (paths in reverse order, walls inverted), where `v` plays the
/// role of `u`: `qu` then runs from `v` to `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripEntry {
    pub u: VertexId,
    pub v: VertexId,
    pub side: Side,
    pub qu: EdgePath,
    pub qv: EdgePath,
    pub u_marks: Vec<VertexId>,
    pub v_marks: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripWitness {
    pub paths: Vec<TraversingPath>,
    pub entries: Vec<StripEntry>,
}

/// All `(u, v)` with `u ∈ V(P_1) ∩ V(P_2)` and `v ∈ V(P_{n-1}) ∩ V(P_n)`.
pub fn enumerate_u_v(paths: &[TraversingPath]) -> Vec<(VertexId, VertexId)> {
    let n = paths.len();
    if n < 3 {
        return Vec::new();
    }
    let top: BTreeSet<VertexId> = paths[0].vertex_set().intersection(&paths[1].vertex_set()).copied().collect();
    let bot: BTreeSet<VertexId> = paths[n - 2].vertex_set().intersection(&paths[n - 1].vertex_set()).copied().collect();
    let mut out = Vec::new();
    for &u in &top {
        for &v in &bot {
            out.push((u, v));
        }
    }
    out
}

/// Conditions on the path system itself.
fn check_paths(t: &Tile, paths: &[TraversingPath]) -> Result<(), CertificateError> {
    let n = paths.len();
    if n < 3 {
        return violation("strip", "width below 3");
    }
    for (k, p) in paths.iter().enumerate() {
        let again = TraversingPath::new(t, p.path.clone())?;
        if (again.i, again.j) != (p.i, p.j) {
            return violation("strip", format!("P_{} has wrong wall indices", k + 1));
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            let (p, q) = (&paths[a], &paths[b]);
            if p.i > q.i || p.j < q.j {
                return violation("strip", format!("wall order fails for P_{} and P_{}", a + 1, b + 1));
            }
            let sharing = (a == 0 && b == 1) || (a == n - 2 && b == n - 1);
            if sharing {
                if !p.edge_set().is_disjoint(&q.edge_set()) {
                    return violation("strip", format!("P_{} and P_{} share an edge", a + 1, b + 1));
                }
            } else if !p.vertex_set().is_disjoint(&q.vertex_set()) {
                return violation("strip", format!("P_{} and P_{} intersect", a + 1, b + 1));
            }
        }
    }
    Ok(())
}

/// Validate every entry and coverage of all `(u, v)`; on success the strip
/// certifies `tcr(t) ≥ (n choose 2) − 1`.
pub fn verify_strip(t: &Tile, w: &StripWitness) -> Result<usize, CertificateError> {
    check_paths(t, &w.paths)?;
    let n = w.paths.len();
    let need = enumerate_u_v(&w.paths);
    if need.is_empty() {
        return violation("strip", "P_1 ∩ P_2 or P_{n-1} ∩ P_n is empty");
    }
    let have: BTreeSet<(VertexId, VertexId)> = w.entries.iter().map(|e| (e.u, e.v)).collect();
    if let Some(&(u, v)) = need.iter().find(|p| !have.contains(p)) {
        return violation("strip", format!("no entry for u = {u}, v = {v}"));
    }
    let flipped: Vec<TraversingPath> = w
        .paths
        .iter()
        .rev()
        .map(|p| TraversingPath {
            path: p.path.clone(),
            i: t.left.len() - 1 - p.i,
            j: t.right.len() - 1 - p.j,
        })
        .collect();
    let (fwd, bwd) = (Indexed::new(&w.paths), Indexed::new(&flipped));
    w.entries.par_iter().try_for_each(|e| {
        let r = if !is_simple_path(&t.graph, &e.qu) || !is_simple_path(&t.graph, &e.qv) {
            violation("ladder", "ladder paths must be simple paths of the tile graph")
        } else {
            match e.side {
            Side::Left => left_of(&fwd, e.u, e.v, e),
            Side::Right => left_of(&bwd, e.v, e.u, e),
            }
        };
        r.map_err(|err| CertificateError {
            condition: err.condition,
            detail: format!("entry (u = {}, v = {}): {}", e.u, e.v, err.detail),
        })
    })?;
    Ok(n * (n - 1) / 2 - 1)
}

type Part = (BTreeSet<VertexId>, BTreeSet<usize>);

/// A path system with position lookups.
struct Indexed<'a> {
    ps: &'a [TraversingPath],
    vpos: Vec<HashMap<VertexId, usize>>,
    epos: Vec<HashMap<usize, usize>>,
    top: Vec<VertexId>,
    bot: Vec<VertexId>,
}

impl<'a> Indexed<'a> {
    fn new(ps: &'a [TraversingPath]) -> Indexed<'a> {
        let n = ps.len();
        let vpos: Vec<HashMap<VertexId, usize>> = ps
            .iter()
            .map(|p| p.path.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect())
            .collect();
        let epos = ps
            .iter()
            .map(|p| p.path.edges.iter().enumerate().map(|(i, &e)| (e, i)).collect())
            .collect();
        let both = |a: usize, b: usize| -> Vec<VertexId> {
            let mut v: Vec<VertexId> = ps[a].path.vertices.iter().copied().filter(|x| vpos[b].contains_key(x)).collect();
            v.sort_unstable();
            v
        };
        let (top, bot) = (both(0, 1), both(n - 2, n - 1));
        Indexed { ps, vpos, epos, top, bot }
    }

    fn pos(&self, i: usize, v: VertexId) -> Option<usize> {
        self.vpos[i].get(&v).copied()
    }

    /// Subpath of path `i` between the two vertices (inclusive).
    fn sub(&self, i: usize, a: VertexId, b: VertexId) -> Option<Part> {
        let (x, y) = (self.pos(i, a)?, self.pos(i, b)?);
        let (lo, hi) = (x.min(y), x.max(y));
        let p = &self.ps[i].path;
        Some((
            p.vertices[lo..=hi].iter().copied().collect(),
            p.edges[lo..hi].iter().copied().collect(),
        ))
    }

    fn meet(&self, i: usize, q: &EdgePath) -> Part {
        (
            q.vertices.iter().copied().filter(|v| self.vpos[i].contains_key(v)).collect(),
            q.edges.iter().copied().filter(|e| self.epos[i].contains_key(e)).collect(),
        )
    }

    fn split_pair(&self, common: &[VertexId], i: usize, j: usize, x: VertexId, y: VertexId) -> bool {
        let Some(px) = self.pos(i, x) else {
            return false;
        };
        let at: Vec<(usize, usize)> = common.iter().map(|a| (self.vpos[i][a], self.vpos[j][a])).collect();
        split_pair(&at, px, self.pos(j, y))
    }
}

/// Some pair of points `(p, q)` from `at` has `px` between the `p`s but
/// not `py` between the `q`s; a missing `py` is between nothing.
fn split_pair(at: &[(usize, usize)], px: usize, py: Option<usize>) -> bool {
    // seen[side][above]
    let mut seen = [[false; 2]; 2];
    let mut any = [false; 2];
    for &(pa, qa) in at {
        for (side, hit) in [(0, pa <= px), (1, pa >= px)] {
            if hit {
                any[side] = true;
                if let Some(py) = py {
                    seen[side][1] |= qa > py;
                    seen[side][0] |= qa < py;
                }
            }
        }
    }
    match py {
        None => any[0] && any[1],
        Some(_) => (seen[0][0] && seen[1][0]) || (seen[0][1] && seen[1][1]),
    }
}

fn contained(a: &Part, b: &Part) -> bool {
    a.0.is_subset(&b.0) && a.1.is_subset(&b.1)
}

/// `u` left of `v` for the path system `ps` (conditions (s.i)–(s.x)).
fn left_of(ix: &Indexed, u: VertexId, v: VertexId, e: &StripEntry) -> Result<(), CertificateError> {
    let ps = ix.ps;
    let n = ps.len();
    let (qu, qv) = (&e.qu, &e.qv);
    let um = &e.u_marks;
    let vm = &e.v_marks;
    if um.len() != 2 * n || vm.len() != 2 * n {
        return violation("marks", format!("expected {} marks on each ladder path", 2 * n));
    }
    // u_i = um[2i-2], u_i' = um[2i-1] with 1-based i
    let ui = |i: usize| um[2 * (i - 1)];
    let uip = |i: usize| um[2 * (i - 1) + 1];
    let vi = |i: usize| vm[2 * (i - 1)];
    let vip = |i: usize| vm[2 * (i - 1) + 1];
    for (name, q) in [("Q_u", qu), ("Q_v", qv)] {
        if q.vertices.first() != Some(&u) || q.vertices.last() != Some(&v) {
            return violation("ladder", format!("{name} does not run from u to v"));
        }
    }
    let inner_u: BTreeSet<VertexId> = qu.vertices[1..qu.vertices.len() - 1].iter().copied().collect();
    if qv.vertices[1..qv.vertices.len() - 1].iter().any(|x| inner_u.contains(x)) {
        return violation("ladder", "Q_u and Q_v are not internally disjoint");
    }
    let on_order = |q: &EdgePath, marks: &[VertexId], cond: &str| -> Result<(), CertificateError> {
        let mut last = 0;
        for (k, &x) in marks.iter().enumerate() {
            let Some(p) = q.vertices.iter().position(|&y| y == x) else {
                return violation(cond, format!("mark {k} ({x}) is not on the ladder path"));
            };
            if p < last {
                return violation(cond, format!("mark {k} ({x}) is out of order"));
            }
            last = p;
        }
        Ok(())
    };
    on_order(qu, um, "s.i")?;
    on_order(qv, vm, "s.ii")?;
    if !(u == ui(1) && u == uip(1) && u == ui(2) && u == vi(1)) {
        return violation("s.iii", "u = u_1 = u_1' = u_2 = v_1 fails");
    }
    if !(v == uip(n) && v == vip(n - 1) && v == vi(n) && v == vip(n)) {
        return violation("s.iii", "v = u_n' = v_{n-1}' = v_n = v_n' fails");
    }
    let top: BTreeSet<VertexId> = ix.top.iter().copied().collect();
    let bot: BTreeSet<VertexId> = ix.bot.iter().copied().collect();
    for (x, name) in [(vip(1), "v_1'"), (vi(2), "v_2"), (vip(2), "v_2'"), (uip(2), "u_2'")] {
        if top.contains(&x) {
            return violation("s.iv", format!("{name} lies in P_1 ∩ P_2"));
        }
    }
    for (x, name) in [(vi(n - 1), "v_{n-1}"), (ui(n - 1), "u_{n-1}"), (uip(n - 1), "u_{n-1}'"), (ui(n), "u_n")] {
        if bot.contains(&x) {
            return violation("s.iv", format!("{name} lies in P_{{n-1}} ∩ P_n"));
        }
    }
    let (qu_path, qv_path) = (qu, qv);
    let mut r = Vec::with_capacity(n);
    let mut s = Vec::with_capacity(n);
    for i in 1..=n {
        let Some(ri) = ix.sub(i - 1, ui(i), uip(i)) else {
            return violation("s.v", format!("u_{i} or u_{i}' is not on P_{i}"));
        };
        let mu = ix.meet(i - 1, qu_path);
        if !contained(&ri, &mu) {
            return violation("s.v", format!("R_{i} is not contained in P_{i} ∩ Q_u"));
        }
        if i != n - 1 && ri != mu {
            return violation("s.v", format!("R_{i} differs from P_{i} ∩ Q_u"));
        }
        let Some(si) = ix.sub(i - 1, vi(i), vip(i)) else {
            return violation("s.vi", format!("v_{i} or v_{i}' is not on P_{i}"));
        };
        let mv = ix.meet(i - 1, qv_path);
        if !contained(&si, &mv) {
            return violation("s.vi", format!("S_{i} is not contained in P_{i} ∩ Q_v"));
        }
        if i != 2 && si != mv {
            return violation("s.vi", format!("S_{i} differs from P_{i} ∩ Q_v"));
        }
        r.push(ri);
        s.push(si);
    }
    let minus = |a: &Part, b: &Part| -> Part {
        let vs: BTreeSet<VertexId> = a.0.difference(&b.0).copied().collect();
        let es: BTreeSet<usize> = a.1.difference(&b.1).copied().collect();
        (vs, es)
    };
    let rn1 = minus(&ix.meet(n - 2, qu_path), &r[n - 1]);
    if !same_up_to_dangling(&r[n - 2], &rn1, ix, n - 2) {
        return violation("s.vii", "R_{n-1} differs from (P_{n-1} ∩ Q_u) − R_n");
    }
    let s2 = minus(&ix.meet(1, qv_path), &s[0]);
    if !same_up_to_dangling(&s[1], &s2, ix, 1) {
        return violation("s.vii", "S_2 differs from (P_2 ∩ Q_v) − S_1");
    }
    // (s.viii) and (s.ix), over all pairs of intersection vertices
    if ix.split_pair(&ix.top, 0, 1, vip(1), vi(2)) {
        return violation("s.viii", "v_1' lies on P_1 between two vertices of P_1 ∩ P_2 but v_2 does not lie between them on P_2");
    }
    if ix.split_pair(&ix.bot, n - 1, n - 2, ui(n), uip(n - 1)) {
        return violation("s.ix", "u_n lies on P_n between two vertices of P_{n-1} ∩ P_n but u_{n-1}' does not lie between them on P_{n-1}");
    }
    for i in 1..=n {
        let p = &ps[i - 1];
        let seq = [p.path.vertices[0], ui(i), uip(i), vi(i), vip(i), *p.path.vertices.last().unwrap()];
        let mut last = 0;
        for x in seq {
            let Some(k) = ix.pos(i - 1, x) else {
                return violation("s.x", format!("a mark is not on P_{i}"));
            };
            if k < last {
                return violation("s.x", format!("marks out of order on P_{i}"));
            }
            last = k;
        }
    }
    Ok(())
}

/// Equality of two subgraphs of a path where `b` came from a set
/// difference: `b` may keep edges whose endpoint was removed, which a
/// subgraph cannot; those are dropped before comparing.
fn same_up_to_dangling(a: &Part, b: &Part, ix: &Indexed, i: usize) -> bool {
    let p = &ix.ps[i];
    let kept: BTreeSet<usize> = b
        .1
        .iter()
        .copied()
        .filter(|&e| {
            let k = ix.epos[i][&e];
            b.0.contains(&p.path.vertices[k]) && b.0.contains(&p.path.vertices[k + 1])
        })
        .collect();
    a.0 == b.0 && a.1 == kept
}

/// Resolve marks and ladder vertex lists into edge paths of `t`.
pub fn ladder(t: &Tile, verts: &[VertexId]) -> Option<EdgePath> {
    let p = path_from_vertices(&t.graph, verts)?;
    is_simple_path(&t.graph, &p).then_some(p)
}
