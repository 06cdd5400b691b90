//! Two vertex-disjoint paths with prescribed endpoints, by backtracking.

use super::{Dense, MultiGraph, VertexId};

/// Default vertex bound below which the search is exhaustive.
pub const DISJOINT_PATHS_BOUND: usize = 64;

/// Step budget used above the bound.
const STEP_BUDGET: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DisjointPaths {
    Found(Vec<VertexId>, Vec<VertexId>),
    /// Exhaustive search found nothing.
    None,
    /// Search was not exhaustive and found nothing.
    Unknown,
}

impl DisjointPaths {
    pub fn found(&self) -> bool {
        matches!(self, DisjointPaths::Found(..))
    }
}

pub fn two_disjoint_paths(
    g: &MultiGraph,
    s1: VertexId,
    t1: VertexId,
    s2: VertexId,
    t2: VertexId,
) -> DisjointPaths {
    two_disjoint_paths_bounded(g, s1, t1, s2, t2, DISJOINT_PATHS_BOUND)
}

/// As [`two_disjoint_paths`] with an explicit exhaustiveness bound.
pub fn two_disjoint_paths_bounded(
    g: &MultiGraph,
    s1: VertexId,
    t1: VertexId,
    s2: VertexId,
    t2: VertexId,
    bound: usize,
) -> DisjointPaths {
    let d = g.dense();
    let ends = [s1, t1, s2, t2].map(|x| d.pos(x));
    let [Some(a), Some(b), Some(c), Some(e)] = ends else {
        return DisjointPaths::None;
    };
    let mut distinct = [a, b, c, e];
    distinct.sort_unstable();
    if distinct.windows(2).any(|w| w[0] == w[1]) {
        return DisjointPaths::None;
    }
    let exhaustive = d.len() <= bound;
    let mut s = Search {
        d: &d,
        used: vec![false; d.len()],
        path: vec![a],
        t1: b,
        s2: c,
        t2: e,
        steps: 0,
        budget: if exhaustive { usize::MAX } else { STEP_BUDGET },
        second: None,
    };
    s.used[a] = true;
    s.used[c] = true;
    s.used[e] = true;
    if s.dfs(a) {
        let p1 = s.path.iter().map(|&x| d.ids[x]).collect();
        let p2 = s.second.unwrap().iter().map(|&x| d.ids[x]).collect();
        return DisjointPaths::Found(p1, p2);
    }
    if exhaustive && s.steps <= s.budget {
        DisjointPaths::None
    } else {
        DisjointPaths::Unknown
    }
}

struct Search<'a> {
    d: &'a Dense,
    used: Vec<bool>,
    path: Vec<usize>,
    t1: usize,
    s2: usize,
    t2: usize,
    steps: usize,
    budget: usize,
    second: Option<Vec<usize>>,
}

impl<'a> Search<'a> {
    /// BFS from `from` to `to` through vertices with `blocked[x] == false`.
    fn reach(&self, from: usize, to: usize, blocked: &[bool]) -> Option<Vec<usize>> {
        let n = self.d.len();
        let mut pred = vec![usize::MAX; n];
        pred[from] = from;
        let mut q = std::collections::VecDeque::from([from]);
        while let Some(x) = q.pop_front() {
            if x == to {
                let mut p = vec![to];
                let mut y = to;
                while y != from {
                    y = pred[y];
                    p.push(y);
                }
                p.reverse();
                return Some(p);
            }
            for &(y, _) in &self.d.adj[x] {
                if pred[y] == usize::MAX && (y == to || !blocked[y]) {
                    pred[y] = x;
                    q.push_back(y);
                }
            }
        }
        None
    }

    fn second_path(&self) -> Option<Vec<usize>> {
        let mut blocked = vec![false; self.d.len()];
        for &x in &self.path {
            blocked[x] = true;
        }
        blocked[self.s2] = false;
        self.reach(self.s2, self.t2, &blocked)
    }

    fn dfs(&mut self, x: usize) -> bool {
        self.steps += 1;
        if self.steps > self.budget {
            return false;
        }
        if self.second_path().is_none() {
            return false;
        }
        // head must still reach t1 avoiding the path and the second pair
        if self.reach(x, self.t1, &self.used).is_none() {
            return false;
        }
        let nbrs: Vec<usize> = self.d.adj[x].iter().map(|&(y, _)| y).collect();
        for y in nbrs {
            if y == self.t1 {
                self.path.push(y);
                if let Some(p2) = self.second_path() {
                    self.second = Some(p2);
                    return true;
                }
                self.path.pop();
                continue;
            }
            if self.used[y] {
                continue;
            }
            self.used[y] = true;
            self.path.push(y);
            if self.dfs(y) {
                return true;
            }
            self.path.pop();
            self.used[y] = false;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle() {
        let g = MultiGraph::cycle(4);
        match two_disjoint_paths(&g, 0, 1, 3, 2) {
            DisjointPaths::Found(p, q) => {
                assert_eq!(p, vec![0, 1]);
                assert_eq!(q, vec![3, 2]);
            }
            other => panic!("{other:?}"),
        }
        // crossing pairing on a 4-cycle is impossible
        assert_eq!(two_disjoint_paths(&g, 0, 2, 1, 3), DisjointPaths::None);
    }

    #[test]
    fn star_fails() {
        let g = MultiGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(two_disjoint_paths(&g, 1, 2, 3, 4), DisjointPaths::None);
    }

    #[test]
    fn k5_any_pairing() {
        let g = MultiGraph::complete(5);
        assert!(two_disjoint_paths(&g, 0, 2, 1, 3).found());
    }
}
