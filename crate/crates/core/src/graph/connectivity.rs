//! Max-flow based connectivity: edge-disjoint paths, vertex and edge
//! connectivity thresholds, articulation points.

use std::collections::VecDeque;

use super::{Dense, MultiGraph, VertexId};

/// A path given by its vertex ids and the edge indices between them.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct EdgePath {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<usize>,
}

/// Up to `limit` pairwise edge-disjoint `s`–`t` paths (maximum when
/// `limit` is not reached), found by unit-capacity augmenting paths.
/// `blocked` edges are unusable.
pub fn edge_disjoint_paths(
    g: &MultiGraph,
    s: VertexId,
    t: VertexId,
    limit: usize,
    blocked: &[bool],
) -> Vec<EdgePath> {
    let d = g.dense();
    let (Some(s), Some(t)) = (d.pos(s), d.pos(t)) else {
        return Vec::new();
    };
    if s == t {
        return Vec::new();
    }
    let flow = unit_flow(&d, s, t, limit, blocked);
    decompose(&d, s, t, &flow)
}

/// [`edge_disjoint_paths`] on a prebuilt dense view, by positions.
pub fn edge_disjoint_paths_in(d: &Dense, s: usize, t: usize, limit: usize, blocked: &[bool]) -> Vec<EdgePath> {
    if s == t {
        return Vec::new();
    }
    let flow = unit_flow(d, s, t, limit, blocked);
    decompose(d, s, t, &flow)
}

/// Flow value only.
pub fn edge_flow_value(d: &Dense, s: usize, t: usize, limit: usize) -> usize {
    let blocked = vec![false; d.ends.len()];
    let f = unit_flow(d, s, t, limit, &blocked);
    d.adj[s]
        .iter()
        .map(|&(_, e)| out_of(d, &f, e, s))
        .sum::<i32>()
        .max(0) as usize
}

fn out_of(d: &Dense, f: &[i8], e: usize, x: usize) -> i32 {
    let (a, _) = d.ends[e];
    if a == x {
        f[e] as i32
    } else {
        -(f[e] as i32)
    }
}

/// Per-edge flow in the stored direction (`+1` means `u → v`).
fn unit_flow(d: &Dense, s: usize, t: usize, limit: usize, blocked: &[bool]) -> Vec<i8> {
    let mut f = vec![0i8; d.ends.len()];
    let mut pred: Vec<Option<(usize, usize)>> = vec![None; d.len()];
    let mut found = 0;
    while found < limit {
        pred.iter_mut().for_each(|p| *p = None);
        let mut seen = vec![false; d.len()];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        'bfs: while let Some(x) = q.pop_front() {
            for &(y, e) in &d.adj[x] {
                if seen[y] || blocked.get(e).copied().unwrap_or(false) {
                    continue;
                }
                if 1 - out_of(d, &f, e, x) <= 0 {
                    continue;
                }
                seen[y] = true;
                pred[y] = Some((x, e));
                if y == t {
                    break 'bfs;
                }
                q.push_back(y);
            }
        }
        if !seen[t] {
            break;
        }
        let mut y = t;
        while let Some((x, e)) = pred[y] {
            let (a, _) = d.ends[e];
            f[e] += if a == x { 1 } else { -1 };
            y = x;
        }
        found += 1;
    }
    f
}

fn decompose(d: &Dense, s: usize, t: usize, f: &[i8]) -> Vec<EdgePath> {
    let mut used = vec![false; f.len()];
    let mut paths = Vec::new();
    loop {
        // walk from s along unused positive-flow edges; cut cycles when revisiting
        let mut verts = vec![s];
        let mut edges: Vec<usize> = Vec::new();
        let mut at = s;
        let mut ok = false;
        loop {
            if at == t {
                ok = true;
                break;
            }
            let next = d.adj[at]
                .iter()
                .find(|&&(_, e)| !used[e] && out_of(d, f, e, at) > 0);
            let Some(&(y, e)) = next else { break };
            used[e] = true;
            if let Some(p) = verts.iter().position(|&v| v == y) {
                verts.truncate(p + 1);
                edges.truncate(p);
            } else {
                verts.push(y);
                edges.push(e);
            }
            at = y;
        }
        if !ok {
            break;
        }
        paths.push(EdgePath {
            vertices: verts.iter().map(|&p| d.ids[p]).collect(),
            edges,
        });
    }
    paths
}

/// Articulation points (dense positions) of the graph restricted to
/// `alive` vertices.
pub fn articulation_points(d: &Dense, alive: &[bool]) -> Vec<usize> {
    let n = d.len();
    let mut disc = vec![u32::MAX; n];
    let mut low = vec![0u32; n];
    let mut is_art = vec![false; n];
    let mut time = 0u32;
    for root in 0..n {
        if !alive[root] || disc[root] != u32::MAX {
            continue;
        }
        let mut children = 0;
        // (vertex, parent edge, next adjacency index)
        let mut st: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(top) = st.last_mut() {
            let (x, pe, i) = *top;
            if i < d.adj[x].len() {
                let (y, e) = d.adj[x][i];
                top.2 += 1;
                if !alive[y] || e == pe {
                    continue;
                }
                if disc[y] == u32::MAX {
                    disc[y] = time;
                    low[y] = time;
                    time += 1;
                    if x == root {
                        children += 1;
                    }
                    st.push((y, e, 0));
                } else {
                    low[x] = low[x].min(disc[y]);
                }
            } else {
                st.pop();
                if let Some(&(p, _, _)) = st.last() {
                    low[p] = low[p].min(low[x]);
                    if p != root && low[x] >= disc[p] {
                        is_art[p] = true;
                    }
                }
            }
        }
        if children > 1 {
            is_art[root] = true;
        }
    }
    (0..n).filter(|&v| is_art[v]).collect()
}

fn alive_connected(d: &Dense, alive: &[bool]) -> bool {
    let Some(s) = (0..d.len()).find(|&v| alive[v]) else {
        return true;
    };
    let mut seen = vec![false; d.len()];
    seen[s] = true;
    let mut st = vec![s];
    while let Some(x) = st.pop() {
        for &(y, _) in &d.adj[x] {
            if alive[y] && !seen[y] {
                seen[y] = true;
                st.push(y);
            }
        }
    }
    (0..d.len()).all(|v| !alive[v] || seen[v])
}

fn biconnected_alive(d: &Dense, alive: &[bool]) -> bool {
    let count = alive.iter().filter(|a| **a).count();
    count >= 3 && alive_connected(d, alive) && articulation_points(d, alive).is_empty()
}

/// Local vertex connectivity between nonadjacent `s`, `t` (dense positions),
/// capped at `limit`.
fn local_vertex_connectivity(d: &Dense, s: usize, t: usize, limit: usize) -> usize {
    // split x into x_in = 2x, x_out = 2x+1
    let n = d.len();
    let mut net = Net::new(2 * n);
    for x in 0..n {
        let cap = if x == s || x == t { limit as i32 } else { 1 };
        net.arc(2 * x, 2 * x + 1, cap);
    }
    for &(a, b) in &d.ends {
        net.arc(2 * a + 1, 2 * b, 1);
        net.arc(2 * b + 1, 2 * a, 1);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// `true` iff `g` is k-connected: more than k vertices and no separating set
/// of fewer than k vertices.
pub fn vertex_connectivity_at_least(g: &MultiGraph, k: usize) -> bool {
    let d = g.dense();
    let n = d.len();
    if k == 0 {
        return true;
    }
    if n <= k {
        return false;
    }
    let all = vec![true; n];
    match k {
        1 => alive_connected(&d, &all),
        2 => biconnected_alive(&d, &all),
        3 => {
            if !biconnected_alive(&d, &all) {
                return false;
            }
            let mut alive = all.clone();
            for v in 0..n {
                alive[v] = false;
                let ok = biconnected_alive(&d, &alive);
                alive[v] = true;
                if !ok {
                    return false;
                }
            }
            true
        }
        _ => {
            let mut adj = vec![vec![false; n]; n];
            for &(a, b) in &d.ends {
                adj[a][b] = true;
                adj[b][a] = true;
            }
            for s in 0..n {
                for t in s + 1..n {
                    if !adj[s][t] && local_vertex_connectivity(&d, s, t, k) < k {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// `true` iff at least two vertices and every cut has at least k edges.
pub fn edge_connectivity_at_least(g: &MultiGraph, k: usize) -> bool {
    let d = g.dense();
    if k == 0 {
        return true;
    }
    if d.len() < 2 {
        return false;
    }
    (1..d.len()).all(|t| edge_flow_value(&d, 0, t, k) >= k)
}

/// Small directed network with integer capacities.
struct Net {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i32>,
}

impl Net {
    fn new(n: usize) -> Self {
        Net {
            head: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn arc(&mut self, a: usize, b: usize, c: i32) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let n = self.head.len();
        let mut flow = 0;
        while flow < limit {
            let mut pred = vec![usize::MAX; n];
            let mut seen = vec![false; n];
            seen[s] = true;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for &a in &self.head[x] {
                    let y = self.to[a];
                    if !seen[y] && self.cap[a] > 0 {
                        seen[y] = true;
                        pred[y] = a;
                        q.push_back(y);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut y = t;
            while y != s {
                let a = pred[y];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                y = self.to[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_connectivity_examples() {
        assert!(vertex_connectivity_at_least(&MultiGraph::complete(4), 3));
        assert!(!vertex_connectivity_at_least(&MultiGraph::complete(4), 4));
        assert!(!vertex_connectivity_at_least(&MultiGraph::path(3), 2));
        assert!(vertex_connectivity_at_least(&MultiGraph::cycle(5), 2));
        assert!(!vertex_connectivity_at_least(&MultiGraph::cycle(5), 3));
        let k33 = MultiGraph::complete_bipartite(3, 3);
        assert!(vertex_connectivity_at_least(&k33, 3));
        assert!(vertex_connectivity_at_least(&MultiGraph::complete(6), 5));
        assert!(vertex_connectivity_at_least(&MultiGraph::complete_bipartite(4, 4), 4));
        assert!(!vertex_connectivity_at_least(&MultiGraph::complete_bipartite(4, 4), 5));
    }

    #[test]
    fn edge_connectivity_examples() {
        assert!(edge_connectivity_at_least(&MultiGraph::cycle(4), 2));
        assert!(!edge_connectivity_at_least(&MultiGraph::cycle(4), 3));
        assert!(!edge_connectivity_at_least(&MultiGraph::path(5), 2));
        let digon = MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert!(edge_connectivity_at_least(&digon, 3));
    }

    #[test]
    fn disjoint_paths_k4() {
        let g = MultiGraph::complete(4);
        let p = edge_disjoint_paths(&g, 0, 3, 10, &[]);
        assert_eq!(p.len(), 3);
        let mut all: Vec<usize> = p.iter().flat_map(|x| x.edges.clone()).collect();
        let n = all.len();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), n);
        for q in &p {
            assert_eq!(q.vertices[0], 0);
            assert_eq!(*q.vertices.last().unwrap(), 3);
        }
    }

    #[test]
    fn articulation() {
        let g = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let d = g.dense();
        assert_eq!(articulation_points(&d, &vec![true; 5]), vec![2, 3]);
    }
}
