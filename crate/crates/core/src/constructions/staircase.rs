//! Staircase tiles `S_n`, the staircase graphs `S(n, m, c)` and the
//! `Q(a, b, n)` members.
//!
//! Line `k` of `S_n` runs from `λ_k` to `ρ_k`. Lines 0 and 1 meet at `x`.
//! The a-steps join `ρ_k` (line `k`) to line `k+1` for `k = 1..n-2` and the
//! b-steps join line `n-1-k` to line `n-2-k` for `k = 0..n-3`, so every
//! pair of consecutive lines below the top pair has one step of each kind.
//! In `T↕` every junction glues `ρ_k` to `λ_{n-1-k}` of the next tile.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::ladders::{strip_ladders, trace_paths};
use super::strands::StrandSystem;
use crate::certificates::{verify_strip, StripWitness};
use crate::error::BuildError;
use crate::oracle::{verify_witness, CrResult, CrossingSet, LowerCertificate};
use crate::graph::{MultiGraph, VertexId};
use crate::tile::{cyclize, is_perfect_tile, is_planar_tile, join, Tile, TileSequence};
use crate::Rational;

/// Role of an edge inside a staircase tile or graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "camelCase")]
pub enum EdgeRole {
    Line { tile: usize, line: usize },
    Step { tile: usize },
}

impl EdgeRole {
    pub fn line(&self) -> Option<(usize, usize)> {
        match *self {
            EdgeRole::Line { tile, line } => Some((tile, line)),
            EdgeRole::Step { .. } => None,
        }
    }

    fn in_tile(self, t: usize) -> EdgeRole {
        match self {
            EdgeRole::Line { line, .. } => EdgeRole::Line { tile: t, line },
            EdgeRole::Step { .. } => EdgeRole::Step { tile: t },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaircaseTile {
    pub n: usize,
    #[serde(rename = "contractedThick")]
    pub contracted: Vec<usize>,
    pub tile: Tile,
    /// Role of each tile edge (tile index 0).
    pub roles: Vec<EdgeRole>,
    /// Sweep time of every vertex off the left wall, within a period `2n`.
    pub times: BTreeMap<VertexId, i64>,
}

/// Sweep period of one tile.
pub fn period(n: usize) -> i64 {
    2 * n as i64
}

/// Number of thick-edge slots, `2(n-3)`.
pub fn thick_slots(n: usize) -> usize {
    2 * n.saturating_sub(3)
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Name {
    Lam(usize),
    Rho(usize),
    X,
    /// b-step `k` lower end (line `n-2-k`).
    Bb(usize),
    /// b-step `k` upper end (line `n-1-k`), `k ≥ 1`.
    Bt(usize),
    /// a-step `k` lower end (line `k+1`), `k ≤ n-3`.
    Ab(usize),
}

fn line_names(n: usize, k: usize) -> Vec<Name> {
    let j = n - 1 - k;
    let mut s = vec![Name::Lam(k)];
    if (1..=n - 2).contains(&j) {
        s.push(Name::Bb(j - 1));
    }
    if (1..=n.saturating_sub(3)).contains(&j) {
        s.push(Name::Bt(j));
    }
    if k <= 1 {
        s.push(Name::X);
    } else if k <= n - 2 {
        s.push(Name::Ab(k - 1));
    }
    s.push(Name::Rho(k));
    s
}

fn steps(n: usize) -> Vec<(Name, Name)> {
    let mut out = Vec::new();
    for k in 1..=n - 2 {
        let low = if k <= n - 3 { Name::Ab(k) } else { Name::Rho(n - 1) };
        out.push((Name::Rho(k), low));
    }
    for k in 0..=n - 3 {
        let up = if k == 0 { Name::Lam(n - 1) } else { Name::Bt(k) };
        out.push((up, Name::Bb(k)));
    }
    out
}

/// Slot `s < n-3`: a-side segment on line `s+2`; otherwise the b-side
/// segment on line `n-2-(s-(n-3))`. The first name is absorbed.
fn thick(n: usize, s: usize) -> (Name, Name) {
    if s < n - 3 {
        let k = s + 2;
        (Name::Ab(k - 1), Name::Rho(k))
    } else {
        let j = s - (n - 3) + 1;
        (Name::Bt(j), Name::Bb(j - 1))
    }
}

fn name_time(n: usize, x: Name) -> Option<i64> {
    let n_ = n as i64;
    match x {
        Name::Lam(_) => None,
        Name::Bb(k) | Name::Bt(k) => Some(2 + k as i64),
        Name::X => Some(n_),
        Name::Ab(k) => Some(n_ + k as i64),
        Name::Rho(0) => Some(period(n) + 2),
        Name::Rho(k) if k == n - 1 => Some(2 * n_ - 2),
        Name::Rho(k) => Some(n_ + k as i64),
    }
}

fn all_names(n: usize) -> Vec<Name> {
    let mut v: Vec<Name> = (0..n).map(Name::Lam).chain((0..n).map(Name::Rho)).collect();
    v.push(Name::X);
    v.extend((0..=n - 3).map(Name::Bb));
    v.extend((1..=n.saturating_sub(3)).map(Name::Bt));
    v.extend((1..=n.saturating_sub(3)).map(Name::Ab));
    v
}

/// `S_n` with the given thick slots contracted, without validation.
fn raw_tile(n: usize, contracted: &[usize]) -> StaircaseTile {
    let mut merged: BTreeMap<Name, Name> = BTreeMap::new();
    let mut thick_edges = Vec::new();
    for &s in contracted {
        let (gone, keep) = thick(n, s);
        merged.insert(gone, keep);
        thick_edges.push((gone, keep));
    }
    let rep = |x: Name| *merged.get(&x).unwrap_or(&x);
    let mut id: BTreeMap<Name, VertexId> = BTreeMap::new();
    let mut times: BTreeMap<VertexId, i64> = BTreeMap::new();
    let mut g = MultiGraph::new();
    for x in all_names(n) {
        if merged.contains_key(&x) {
            continue;
        }
        let v = id.len() as VertexId;
        id.insert(x, v);
        g.add_vertex(v);
    }
    for x in all_names(n) {
        if let Some(t) = name_time(n, x) {
            let v = id[&rep(x)];
            let e = times.entry(v).or_insert(t);
            *e = (*e).min(t);
        }
    }
    let mut roles = Vec::new();
    for k in 0..n {
        for w in line_names(n, k).windows(2) {
            if thick_edges.contains(&(w[0], w[1])) || thick_edges.contains(&(w[1], w[0])) {
                continue;
            }
            g.add_edge(id[&rep(w[0])], id[&rep(w[1])]).expect("named vertices exist");
            roles.push(EdgeRole::Line { tile: 0, line: k });
        }
    }
    for (a, b) in steps(n) {
        g.add_edge(id[&rep(a)], id[&rep(b)]).expect("named vertices exist");
        roles.push(EdgeRole::Step { tile: 0 });
    }
    // both ends of a step share one time; contractions chain steps together
    loop {
        let mut changed = false;
        for (e, r) in g.edges().iter().zip(&roles) {
            if let (EdgeRole::Step { .. }, Some(&a), Some(&b)) = (r, times.get(&e.u), times.get(&e.v)) {
                if a != b {
                    times.insert(e.u, a.min(b));
                    times.insert(e.v, a.min(b));
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let left = (0..n).map(|k| id[&Name::Lam(k)]).collect();
    let right = (0..n).map(|k| id[&Name::Rho(k)]).collect();
    StaircaseTile {
        n,
        contracted: contracted.to_vec(),
        tile: Tile { graph: g, left, right },
        roles,
        times,
    }
}

fn params<T>(msg: impl Into<String>) -> Result<T, BuildError> {
    Err(BuildError::Params(msg.into()))
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, BuildError> {
    Err(BuildError::Validation(msg.into()))
}

/// `S_n` with the thick slots in `contracted` contracted, checked against
/// the count contract and the perfect and planar validators.
pub fn build_s_tile(n: usize, contracted: &[usize]) -> Result<StaircaseTile, BuildError> {
    if n < 3 {
        return params(format!("staircase width {n} below 3"));
    }
    let mut c = contracted.to_vec();
    c.sort_unstable();
    c.dedup();
    if c.len() != contracted.len() || c.iter().any(|&s| s >= thick_slots(n)) {
        return params(format!(
            "thick slots {contracted:?} invalid for width {n} ({} slots)",
            thick_slots(n)
        ));
    }
    let st = raw_tile(n, &c);
    let t = &st.tile;
    t.validate()?;
    let (nv, ne) = (4 * n - 7 - c.len(), 6 * n - 10 - c.len());
    if t.net_vertex_count() != nv || t.graph.edge_count() != ne {
        return invalid(format!(
            "S_{n} counts {} / {} differ from {nv} / {ne}",
            t.net_vertex_count(),
            t.graph.edge_count()
        ));
    }
    if !is_planar_tile(t) {
        return invalid(format!("S_{n} is not a planar tile"));
    }
    let rep = is_perfect_tile(t);
    if !rep.perfect {
        return invalid(format!("S_{n} is not perfect: {:?}", rep.violation));
    }
    Ok(st)
}

/// `(n choose 2) - 1`.
pub fn predicted_cr(n: usize) -> usize {
    n * (n - 1) / 2 - 1
}

/// Contracted slots of tile `i` under the round-robin rule.
pub fn round_robin(n: usize, m: usize, c: usize, i: usize) -> Vec<usize> {
    (0..c).filter(|q| q % m == i).map(|q| q / m).filter(|&s| s < thick_slots(n)).collect()
}

/// `∘(T↕)` for the alternating staircase sequence, with the bookkeeping the
/// certificates need.
#[derive(Clone, Debug)]
pub struct StaircaseGraph {
    pub n: usize,
    pub m: usize,
    pub c: usize,
    pub tiles: Vec<StaircaseTile>,
    pub graph: MultiGraph,
    pub roles: Vec<EdgeRole>,
    /// Sweep time of every vertex, modulo `m · 2n`.
    pub times: BTreeMap<VertexId, i64>,
    /// Left wall of each tile of `T↕` in the graph's ids.
    pub lefts: Vec<Vec<VertexId>>,
}

/// Tile `i` of `T↕`: odd tiles inverted, the last one right-inverted on top.
fn oriented(st: &StaircaseTile, i: usize, m: usize) -> Tile {
    let mut t = if i % 2 == 1 { st.tile.invert() } else { st.tile.clone() };
    if i + 1 == m {
        t = t.invert_right();
    }
    t
}

/// Joined tiles with, per tile, the map from local to joined ids.
fn assemble(tiles: &[Tile]) -> Result<(Tile, Vec<BTreeMap<VertexId, VertexId>>), BuildError> {
    let mut acc = tiles[0].clone();
    let mut maps = vec![tiles[0].graph.vertices().iter().map(|&v| (v, v)).collect()];
    for t in &tiles[1..] {
        let before = acc.graph.edge_count();
        let (next, jm) = join(&acc, t)?;
        if next.graph.edge_count() != before + t.graph.edge_count() || !jm.suppressed_left.is_empty() {
            return invalid("join suppressed a wall vertex");
        }
        let mut map = BTreeMap::new();
        for (k, v) in jm.right {
            map.insert(k, v.expect("no suppression"));
        }
        maps.push(map);
        acc = next;
    }
    Ok((acc, maps))
}

pub fn build_s_graph(n: usize, m: usize, c: usize) -> Result<StaircaseGraph, BuildError> {
    if n < 3 {
        return params(format!("staircase width {n} below 3"));
    }
    if m % 2 == 0 || m < 3 {
        return params(format!("sequence length {m} must be odd and at least 3"));
    }
    if c > m * thick_slots(n) {
        return params(format!("{c} contractions exceed capacity {}", m * thick_slots(n)));
    }
    let mut cache: BTreeMap<Vec<usize>, StaircaseTile> = BTreeMap::new();
    let mut tiles = Vec::with_capacity(m);
    for i in 0..m {
        let slots = round_robin(n, m, c, i);
        if !cache.contains_key(&slots) {
            cache.insert(slots.clone(), build_s_tile(n, &slots)?);
        }
        tiles.push(cache[&slots].clone());
    }
    let seq: Vec<Tile> = tiles.iter().enumerate().map(|(i, st)| oriented(st, i, m)).collect();
    let (joined, maps) = assemble(&seq)?;
    let g = cyclize(&joined)?;
    if g.edge_count() != joined.graph.edge_count() {
        return invalid("cyclization dropped an edge");
    }
    // cyclization keeps λ ids; map ρ ids onto them
    let back: BTreeMap<VertexId, VertexId> = joined.right.iter().copied().zip(joined.left.iter().copied()).collect();
    let p = period(n);
    let total = p * m as i64;
    let mut times = BTreeMap::new();
    let mut roles = Vec::new();
    for (i, st) in tiles.iter().enumerate() {
        for (&v, &t) in &st.times {
            let j = maps[i][&v];
            let j = *back.get(&j).unwrap_or(&j);
            times.insert(j, (i as i64 * p + t).rem_euclid(total));
        }
        roles.extend(st.roles.iter().map(|r| r.in_tile(i)));
    }
    let lefts = seq
        .iter()
        .zip(&maps)
        .map(|(t, map)| {
            t.left
                .iter()
                .map(|v| {
                    let j = map[v];
                    *back.get(&j).unwrap_or(&j)
                })
                .collect()
        })
        .collect();
    let sg = StaircaseGraph {
        n,
        m,
        c,
        tiles,
        graph: g,
        roles,
        times,
        lefts,
    };
    let (nv, ne) = (m * (4 * n - 7) - c, m * (6 * n - 10) - c);
    if sg.graph.vertex_count() != nv || sg.graph.edge_count() != ne {
        return invalid(format!(
            "S({n},{m},{c}) counts {} / {} differ from {nv} / {ne}",
            sg.graph.vertex_count(),
            sg.graph.edge_count()
        ));
    }
    if sg.times.len() != nv {
        return invalid("sweep times do not cover the graph");
    }
    Ok(sg)
}

impl StaircaseGraph {
    pub fn predicted_cr(&self) -> usize {
        predicted_cr(self.n)
    }

    pub fn sequence(&self) -> TileSequence {
        TileSequence {
            tiles: self.tiles.iter().enumerate().map(|(i, st)| oriented(st, i, self.m)).collect(),
        }
    }

    /// `⊗(T↕/i)` with the roles of its edges (tiles numbered in cut
    /// order). The cut dropping the last tile is taken in the equivalent
    /// sequence flipped at `m-2`, which carries the twist on `T_{m-2}`.
    pub fn cut(&self, i: usize) -> Result<(Tile, Vec<EdgeRole>), BuildError> {
        let m = self.m;
        let seq = if i + 1 == m { self.sequence().flip(m - 2)? } else { self.sequence() };
        let order: Vec<usize> = (1..m).map(|k| (i + k) % m).collect();
        let tiles: Vec<Tile> = order.iter().map(|&j| seq.tiles[j].clone()).collect();
        let (t, _) = assemble(&tiles)?;
        let mut roles = Vec::new();
        for (pos, &j) in order.iter().enumerate() {
            roles.extend(self.tiles[j].roles.iter().map(|r| r.in_tile(pos)));
        }
        Ok((t, roles))
    }

    /// `⊗(T↕/i)` and a strip witness for it.
    pub fn strip_witness(&self, i: usize) -> Result<(Tile, StripWitness), BuildError> {
        let (t, roles) = self.cut(i)?;
        let paths = trace_paths(&t, &roles).ok_or(BuildError::Validation("lines do not trace the cut".into()))?;
        let w = strip_ladders(&t, paths).ok_or(BuildError::Validation("no ladder paths for the cut".into()))?;
        Ok((t, w))
    }

    /// The strand sweep of this graph, cut in front of tile `j`.
    pub fn strands(&self, j: usize) -> Result<StrandSystem, BuildError> {
        let line: Vec<Option<(usize, usize)>> = self.roles.iter().map(|r| r.line()).collect();
        let p = period(self.n);
        let total = p * self.m as i64;
        let shift = p * (j % self.m) as i64;
        let times = self.times.iter().map(|(&v, &t)| (v, (t - shift).rem_euclid(total))).collect();
        StrandSystem::new(&self.graph, &line, &times, total, &self.lefts[j % self.m]).map_err(BuildError::Validation)
    }

    /// Seed upper witness for `cr(G)`, checked by planarization.
    pub fn drawing_witness(&self) -> Option<CrossingSet> {
        let cs = self.strands(0).ok()?.draw(&self.graph, None)?;
        verify_witness(&self.graph, &cs).then_some(cs)
    }

    fn tile_of(&self, e: usize) -> usize {
        match self.roles[e] {
            EdgeRole::Line { tile, .. } | EdgeRole::Step { tile } => tile,
        }
    }

    /// Smallest verified upper witness for `cr(G − e)` over sweeps cut at
    /// `systems` (pairs of cut tile and system), indexed by the edges of
    /// `G − e`.
    pub fn edge_witness_with(&self, systems: &[(usize, StrandSystem)], e: usize) -> Option<CrossingSet> {
        let h = self.graph.without_edges(&[e]);
        let t = self.tile_of(e);
        let far = |j: usize| {
            let d = (j + self.m - t) % self.m;
            std::cmp::Reverse(d.min(self.m - d))
        };
        let mut order: Vec<&(usize, StrandSystem)> = systems.iter().collect();
        order.sort_by_key(|(j, _)| far(*j));
        let mut best: Option<CrossingSet> = None;
        for (_, sys) in order {
            let Some(cs) = sys.draw(&self.graph, Some(e)).and_then(|cs| cs.without_edge(e)) else {
                continue;
            };
            if best.as_ref().is_some_and(|b| b.len() <= cs.len()) || !verify_witness(&h, &cs) {
                continue;
            }
            let done = cs.len() < self.predicted_cr();
            best = Some(cs);
            if done {
                break;
            }
        }
        best
    }

    /// Sweeps cut in front of tiles 0 and `m / 2`.
    pub fn default_systems(&self) -> Result<Vec<(usize, StrandSystem)>, BuildError> {
        [0, self.m / 2].into_iter().map(|j| Ok((j, self.strands(j)?))).collect()
    }

    pub fn edge_witness(&self, e: usize) -> Option<CrossingSet> {
        self.edge_witness_with(&self.default_systems().ok()?, e)
    }

    pub fn average_degree(&self) -> Rational {
        self.graph.average_degree().expect("nonempty")
    }

    /// Strip bound of the cut at `i` against the strand drawing.
    pub fn certified_cr(&self, i: usize) -> Result<CrResult, BuildError> {
        let (t, w) = self.strip_witness(i)?;
        let bound = verify_strip(&t, &w).map_err(|e| BuildError::Validation(e.to_string()))?;
        let cert = LowerCertificate::StaircaseStrip { width: self.n, bound };
        Ok(CrResult::bounds(bound, self.drawing_witness(), cert, 0))
    }
}

/// Report data of a `Q(a, b, n)` member.
#[derive(Clone, Debug)]
pub struct QMember {
    pub a: u64,
    pub b: u64,
    pub t: u64,
    pub staircase: StaircaseGraph,
}

/// `S(n, (2t+1)(a+b), (2t+1)((4n-7)a - b))`, of average degree `3 + a/b`.
pub fn build_q_member(a: u64, b: u64, n: usize, t: u64) -> Result<QMember, BuildError> {
    if a < 1 || a >= b {
        return params(format!("need 1 <= a < b, got a = {a}, b = {b}"));
    }
    if (a + b) % 2 == 0 {
        return params(format!("a + b = {} is even; the members would not be critical", a + b));
    }
    let nn = n as u64;
    // n ≥ (5b−a)/(2(b−a)), n ≥ (7a+b)/(4a), n ≥ 4
    if nn < 4 || 2 * (b - a) * nn < 5 * b - a || 4 * a * nn < 7 * a + b {
        return params(format!("width {n} below the bound for a = {a}, b = {b}"));
    }
    if t < nn * nn {
        return params(format!("t = {t} below n^2 = {}", nn * nn));
    }
    let odd = 2 * t + 1;
    let m = odd * (a + b);
    let per = (4 * nn - 7) * a;
    if per < b {
        return params("negative contraction count");
    }
    let c = odd * (per - b);
    let sg = build_s_graph(n, m as usize, c as usize)?;
    let want = Rational::from_integer((3 * b + a).into()) / Rational::from_integer(b.into());
    if sg.average_degree() != want {
        return invalid(format!("average degree {} differs from {want}", sg.average_degree()));
    }
    Ok(QMember { a, b, t, staircase: sg })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_matches_counts() {
        let st = build_s_tile(3, &[]).unwrap();
        assert_eq!(st.tile.net_vertex_count(), 5);
        assert_eq!(st.tile.graph.edge_count(), 8);
        assert!(build_s_tile(3, &[0]).is_err());
    }

    #[test]
    fn contractions_reduce_counts() {
        for n in 4..=6 {
            for k in 0..=thick_slots(n) {
                let slots: Vec<usize> = (0..k).collect();
                let st = build_s_tile(n, &slots).unwrap();
                assert_eq!(st.tile.net_vertex_count(), 4 * n - 7 - k);
                let deg = st.tile.graph.degrees();
                let four = st.tile.graph.vertices().iter().filter(|v| !st.tile.left.contains(v) && !st.tile.right.contains(v) && deg[v] == 4).count();
                assert!(four >= 1);
            }
        }
        assert_eq!(build_s_tile(5, &[0, 3]).unwrap().tile.net_vertex_count(), 11);
    }

    #[test]
    fn graph_counts_and_degrees() {
        let sg = build_s_graph(3, 7, 0).unwrap();
        assert_eq!((sg.graph.vertex_count(), sg.graph.edge_count()), (35, 56));
        for c in [0, 5, 16, 28] {
            let sg = build_s_graph(5, 7, c).unwrap();
            assert_eq!(sg.graph.vertex_count(), 7 * 13 - c);
            assert!(sg.graph.degrees().values().all(|&d| d == 3 || d == 4));
            assert!(sg.graph.is_simple());
        }
        assert!(build_s_graph(3, 6, 0).is_err());
        assert!(build_s_graph(4, 5, 11).is_err());
    }

    #[test]
    fn drawings_reach_the_prediction() {
        for (n, m, c) in [(3, 7, 0), (3, 9, 0), (4, 15, 0), (4, 15, 7), (5, 11, 0), (5, 11, 20)] {
            let sg = build_s_graph(n, m, c).unwrap();
            let w = sg.drawing_witness().expect("witness");
            assert_eq!(w.len(), predicted_cr(n), "S({n},{m},{c})");
        }
    }

    #[test]
    fn q_parameters() {
        assert!(build_q_member(1, 3, 5, 25).is_err());
        assert!(build_q_member(1, 2, 5, 24).is_err());
        assert!(build_q_member(1, 2, 3, 25).is_err());
    }
}
