//! Drawings of ladder-like cyclic graphs by a sweep over strand orders.
//!
//! The line edges form `n` strands that wind around a cylinder; every other
//! edge is a step whose two ends carry the same sweep time. A drawing is a
//! radial order of the strands at each moment: adjacent strands swap at the
//! cost of one crossing, strands sharing a vertex may swap there for free,
//! and a step crosses every strand lying between its ends. Dynamic
//! programming over the `n!` orders gives the cheapest such drawing; with an
//! edge deleted, swaps and steps across it become free.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::graph::{MultiGraph, VertexId};
use crate::oracle::CrossingSet;

const INF: u32 = u32::MAX;
const NONE: u32 = u32::MAX;

/// One pass of a strand between two crossings of the cut at time 0.
#[derive(Clone, Debug)]
struct Label {
    verts: Vec<(i64, VertexId)>,
    /// `edges[i]` follows the `i`-th vertex; `edges[0]` crosses the cut into
    /// the first vertex and the last one crosses it out of the last vertex.
    edges: Vec<usize>,
    /// Tail of each edge in sweep direction.
    tails: Vec<VertexId>,
}

#[derive(Clone, Debug, Default)]
struct Event {
    time: i64,
    /// `(edge, label of one end, label of the other)`.
    steps: Vec<(usize, usize, usize, VertexId)>,
    touches: Vec<(usize, usize)>,
    members: BTreeSet<usize>,
}

#[derive(Clone, Debug)]
pub struct StrandSystem {
    n: usize,
    labels: Vec<Label>,
    events: Vec<Event>,
    /// The pass `l` leaves the sweep on the edge that `sigma[l]` enters by.
    sigma: Vec<usize>,
}

struct Perms {
    list: Vec<Vec<u8>>,
    pos: Vec<Vec<u8>>,
    swap: Vec<Vec<u32>>,
    index: HashMap<Vec<u8>, u32>,
}

impl Perms {
    fn new(n: usize) -> Perms {
        let mut list = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            list.push(cur.clone());
            if !next_perm(&mut cur) {
                break;
            }
        }
        let index: HashMap<Vec<u8>, u32> = list.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let pos = list
            .iter()
            .map(|p| {
                let mut q = vec![0u8; n];
                for (r, &l) in p.iter().enumerate() {
                    q[l as usize] = r as u8;
                }
                q
            })
            .collect();
        let swap = list
            .iter()
            .map(|p| {
                (0..n.saturating_sub(1))
                    .map(|r| {
                        let mut q = p.clone();
                        q.swap(r, r + 1);
                        index[&q]
                    })
                    .collect()
            })
            .collect();
        Perms { list, pos, swap, index }
    }
}

fn next_perm(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// How the sweep moved from one state to the next.
enum Stage {
    /// Per post-gap state: `(pre-swap state, swapped position)`.
    Gap { pred: Vec<(u32, u8)> },
    /// Per post-event state: the pre-event state.
    Event { pred: Vec<u32> },
}

impl StrandSystem {
    /// `line` groups the line edges into lines (`None` for steps); a strand
    /// continues along its line and, where the line ends, into the only other
    /// line edge at that vertex. `start` lists one vertex per strand pass in
    /// the radial order at the cut.
    pub fn new(
        g: &MultiGraph,
        line: &[Option<(usize, usize)>],
        times: &BTreeMap<VertexId, i64>,
        total: i64,
        start: &[VertexId],
    ) -> Result<StrandSystem, String> {
        let n = start.len();
        let es = g.edges();
        let mut at: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for (i, e) in es.iter().enumerate() {
            if line[i].is_some() {
                at.entry(e.u).or_default().push(i);
                at.entry(e.v).or_default().push(i);
            }
        }
        let time = |v: VertexId| times.get(&v).copied().ok_or(format!("vertex {v} has no sweep time"));
        let ahead = |a: i64, b: i64| (b - a).rem_euclid(total);
        let next = |y: VertexId, e: usize| -> Result<usize, String> {
            let here = &at[&y];
            if let Some(&f) = here.iter().find(|&&f| f != e && line[f] == line[e]) {
                return Ok(f);
            }
            let others: Vec<usize> = here.iter().copied().filter(|&f| f != e).collect();
            match others[..] {
                [f] => Ok(f),
                _ => Err(format!("strand through vertex {y} is ambiguous")),
            }
        };
        // the cut edge nearest to each start vertex
        let mut entry = Vec::with_capacity(n);
        for &s in start {
            let here = at.get(&s).ok_or(format!("start vertex {s} is not on a line"))?;
            if here.len() != 2 {
                return Err(format!("start vertex {s} lies on {} line edges", here.len()));
            }
            let ts = time(s)?;
            let (mut fwd, mut bwd) = (here[0], here[1]);
            if ahead(ts, time(es[fwd].other(s))?) > total / 2 {
                std::mem::swap(&mut fwd, &mut bwd);
            }
            let walk = |mut y: VertexId, mut e: usize, forward: bool| -> Result<(usize, i64), String> {
                let mut dist = 0;
                for _ in 0..es.len() {
                    let z = es[e].other(y);
                    let (ty, tz) = (time(y)?, time(z)?);
                    let wraps = if forward { tz < ty } else { ty < tz };
                    if wraps {
                        return Ok((e, dist));
                    }
                    dist += (tz - ty).abs();
                    e = next(z, e)?;
                    y = z;
                }
                Err("strand never crosses the cut".into())
            };
            let (ef, df) = walk(s, fwd, true)?;
            let (eb, db) = walk(s, bwd, false)?;
            entry.push(if db <= df { eb } else { ef });
        }
        let mut labels = Vec::with_capacity(n);
        let mut exit = Vec::with_capacity(n);
        for &e0 in &entry {
            let (a, b) = (es[e0].u, es[e0].v);
            // head of the cut edge: the endpoint with the smaller time
            let (tail, mut y) = if time(a)? > time(b)? { (a, b) } else { (b, a) };
            let mut lab = Label {
                verts: Vec::new(),
                edges: vec![e0],
                tails: vec![tail],
            };
            let mut e = e0;
            loop {
                let ty = time(y)?;
                if lab.verts.last().is_some_and(|&(t, _)| t >= ty) {
                    return Err(format!("sweep times decrease along the strand at {y}"));
                }
                lab.verts.push((ty, y));
                e = next(y, e)?;
                lab.edges.push(e);
                lab.tails.push(y);
                let z = es[e].other(y);
                if time(z)? < ty {
                    break;
                }
                y = z;
                if lab.verts.len() > es.len() {
                    return Err("strand does not close".into());
                }
            }
            exit.push(e);
            labels.push(lab);
        }
        let sigma: Vec<usize> = exit
            .iter()
            .map(|e| entry.iter().position(|f| f == e).ok_or("strand passes do not match up".to_string()))
            .collect::<Result<_, _>>()?;
        let mut owner: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for (l, lab) in labels.iter().enumerate() {
            for &(_, v) in &lab.verts {
                owner.entry(v).or_default().push(l);
            }
        }
        if owner.len() != g.vertex_count() {
            return Err("some vertex lies on no strand".into());
        }
        let mut by_time: BTreeMap<i64, Event> = BTreeMap::new();
        for (&v, ls) in &owner {
            let t = time(v)?;
            let ev = by_time.entry(t).or_insert_with(|| Event { time: t, ..Default::default() });
            ev.members.extend(ls.iter().copied());
            match ls[..] {
                [_] => {}
                [a, b] => ev.touches.push((a, b)),
                _ => return Err(format!("vertex {v} lies on {} strand passes", ls.len())),
            }
        }
        for (i, e) in es.iter().enumerate() {
            if line[i].is_some() {
                continue;
            }
            let (tu, tv) = (time(e.u)?, time(e.v)?);
            if tu != tv {
                return Err(format!("step {i} joins times {tu} and {tv}"));
            }
            let (lu, lv) = (&owner[&e.u], &owner[&e.v]);
            if lu.len() != 1 || lv.len() != 1 {
                return Err(format!("step {i} ends at a shared vertex"));
            }
            by_time.get_mut(&tu).unwrap().steps.push((i, lu[0], lv[0], e.u));
        }
        Ok(StrandSystem {
            n,
            labels,
            events: by_time.into_values().collect(),
            sigma,
        })
    }

    /// Edge of pass `l` once every event up to index `k` (exclusive) is done.
    fn edge_after(&self, l: usize, k: usize) -> usize {
        let t = if k == 0 { i64::MIN } else { self.events[k - 1].time };
        let lab = &self.labels[l];
        lab.edges[lab.verts.partition_point(|&(tv, _)| tv <= t)]
    }

    /// Tail vertex of that edge and whether it is the cut edge leaving the
    /// sweep.
    fn place_after(&self, l: usize, k: usize) -> (usize, bool) {
        let t = if k == 0 { i64::MIN } else { self.events[k - 1].time };
        let lab = &self.labels[l];
        let i = lab.verts.partition_point(|&(tv, _)| tv <= t);
        (i, i == lab.verts.len())
    }

    /// Cheapest drawing in this family, optionally with edge `deleted`
    /// removed (its index is then skipped, not renumbered).
    pub fn draw(&self, g: &MultiGraph, deleted: Option<usize>) -> Option<CrossingSet> {
        let n = self.n;
        let perms = Perms::new(n);
        let ns = perms.list.len();
        let id: Vec<u8> = (0..n as u8).collect();
        let mut cost = vec![INF; ns];
        cost[perms.index[&id] as usize] = 0;
        let broken = |l: usize, k: usize| deleted == Some(self.edge_after(l, k));
        let mut stages: Vec<Stage> = Vec::new();
        let es = g.edges();
        for k in 0..=self.events.len() {
            // gap after event k-1
            let cur: Vec<usize> = (0..n).map(|l| self.edge_after(l, k)).collect();
            let free: Vec<bool> = (0..n).map(|l| broken(l, k)).collect();
            let mut pred = vec![(NONE, 0u8); ns];
            let mut dq: VecDeque<u32> = VecDeque::new();
            let mut order: Vec<u32> = (0..ns as u32).filter(|&s| cost[s as usize] != INF).collect();
            order.sort_by_key(|&s| cost[s as usize]);
            dq.extend(order);
            while let Some(s) = dq.pop_front() {
                let c = cost[s as usize];
                let p = &perms.list[s as usize];
                for r in 0..n - 1 {
                    let (a, b) = (p[r] as usize, p[r + 1] as usize);
                    let w = if free[a] || free[b] {
                        0
                    } else if es[cur[a]].shares_endpoint(&es[cur[b]]) {
                        continue;
                    } else {
                        1
                    };
                    let t = perms.swap[s as usize][r];
                    if c + w < cost[t as usize] {
                        cost[t as usize] = c + w;
                        pred[t as usize] = (s, r as u8);
                        if w == 0 {
                            dq.push_front(t);
                        } else {
                            dq.push_back(t);
                        }
                    }
                }
            }
            stages.push(Stage::Gap { pred });
            if k == self.events.len() {
                break;
            }
            let ev = &self.events[k];
            let mut next = vec![INF; ns];
            let mut epred = vec![NONE; ns];
            let steps: Vec<&(usize, usize, usize, VertexId)> =
                ev.steps.iter().filter(|s| deleted != Some(s.0)).collect();
            let mut cluster: BTreeMap<usize, usize> = BTreeMap::new();
            for s in &steps {
                *cluster.entry(s.1).or_default() += 1;
                *cluster.entry(s.2).or_default() += 1;
            }
            let in_cluster = |s: &(usize, usize, usize, VertexId)| cluster[&s.1] > 1 || cluster[&s.2] > 1;
            for s in 0..ns {
                let c = cost[s];
                if c == INF {
                    continue;
                }
                let pos = &perms.pos[s];
                let p = &perms.list[s];
                let adjacent = |a: usize, b: usize| (pos[a] as i32 - pos[b] as i32).abs() == 1;
                if ev.touches.iter().any(|&(a, b)| !adjacent(a, b)) {
                    continue;
                }
                let mut extra = 0;
                let mut ok = true;
                for st in &steps {
                    let (a, b) = (st.1, st.2);
                    if in_cluster(st) && !adjacent(a, b) {
                        ok = false;
                        break;
                    }
                    let (lo, hi) = (pos[a].min(pos[b]) as usize, pos[a].max(pos[b]) as usize);
                    for &l in &p[lo + 1..hi] {
                        let l = l as usize;
                        if ev.members.contains(&l) {
                            ok = false;
                        } else if !broken(l, k) {
                            extra += 1;
                        }
                    }
                }
                if !ok {
                    continue;
                }
                let c = c + extra;
                let mut outs = vec![s as u32];
                for &(a, b) in &ev.touches {
                    let r = pos[a].min(pos[b]) as usize;
                    let more: Vec<u32> = outs.iter().map(|&o| perms.swap[o as usize][r]).collect();
                    outs.extend(more);
                }
                for o in outs {
                    if c < next[o as usize] {
                        next[o as usize] = c;
                        epred[o as usize] = s as u32;
                    }
                }
            }
            cost = next;
            stages.push(Stage::Event { pred: epred });
        }
        // the pass l must end where sigma(l) began
        let mut fin = vec![0u8; n];
        for l in 0..n {
            fin[self.sigma[l]] = l as u8;
        }
        let end = perms.index[&fin];
        if cost[end as usize] == INF {
            return None;
        }
        // replay backwards: the state entering each stage
        let mut before = vec![0u32; stages.len()];
        let mut swaps: Vec<Vec<u8>> = vec![Vec::new(); stages.len()];
        let mut s = end;
        for (i, st) in stages.iter().enumerate().rev() {
            match st {
                Stage::Gap { pred } => {
                    while pred[s as usize].0 != NONE {
                        let (p, r) = pred[s as usize];
                        swaps[i].push(r);
                        s = p;
                    }
                    swaps[i].reverse();
                }
                Stage::Event { pred } => s = pred[s as usize],
            }
            before[i] = s;
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut marks: BTreeMap<usize, Vec<((u8, usize, usize), usize)>> = BTreeMap::new();
        let mut push = |e: usize, f: usize, ke: (u8, usize, usize), kf: (u8, usize, usize)| {
            let i = pairs.len();
            pairs.push((e.min(f), e.max(f)));
            marks.entry(e).or_default().push((ke, i));
            marks.entry(f).or_default().push((kf, i));
        };
        // crossings on the cut edge before the sweep wraps come first along it
        let flag = |l: usize, k: usize| u8::from(!self.place_after(l, k).1);
        for (i, st) in stages.iter().enumerate() {
            let k = i / 2;
            match st {
                Stage::Gap { .. } => {
                    let mut state = perms.list[before[i] as usize].clone();
                    for (q, &r) in swaps[i].iter().enumerate() {
                        let (a, b) = (state[r as usize] as usize, state[r as usize + 1] as usize);
                        if !(broken(a, k) || broken(b, k)) {
                            let (ea, eb) = (self.edge_after(a, k), self.edge_after(b, k));
                            push(ea, eb, (flag(a, k), 2 * k, q), (flag(b, k), 2 * k, q));
                        }
                        state.swap(r as usize, r as usize + 1);
                    }
                }
                Stage::Event { .. } => {
                    let at = &perms.list[before[i] as usize];
                    let pos = &perms.pos[before[i] as usize];
                    for st in self.events[k].steps.iter().filter(|s| deleted != Some(s.0)) {
                        let (a, b) = (st.1, st.2);
                        let (lo, hi) = (pos[a].min(pos[b]) as usize, pos[a].max(pos[b]) as usize);
                        for (d, &l) in at[lo + 1..hi].iter().enumerate() {
                            let l = l as usize;
                            if broken(l, k) {
                                continue;
                            }
                            // distance from the step's u end, which lies on pass a
                            let rank = if pos[a] < pos[b] { d } else { hi - lo - d };
                            let el = self.edge_after(l, k);
                            push(st.0, el, (1, 0, rank), (flag(l, k), 2 * k + 1, 0));
                        }
                    }
                }
            }
        }
        let mut cs = CrossingSet::new(pairs);
        for (e, mut ms) in marks {
            if ms.len() < 2 {
                continue;
            }
            ms.sort();
            let mut o: Vec<usize> = ms.into_iter().map(|(_, i)| i).collect();
            if self.is_line(e) {
                let tail = self.tail_of(e);
                if es[e].u != tail {
                    o.reverse();
                }
            }
            cs.order.insert(e, o);
        }
        Some(cs)
    }

    fn is_line(&self, e: usize) -> bool {
        self.labels.iter().any(|l| l.edges.contains(&e))
    }

    fn tail_of(&self, e: usize) -> VertexId {
        for l in &self.labels {
            if let Some(i) = l.edges.iter().position(|&f| f == e) {
                return l.tails[i];
            }
        }
        unreachable!("line edge on a strand")
    }
}
