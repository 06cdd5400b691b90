//! Left-right planarity test with embedding (Brandes' formulation), on dense
//! simple graphs. All recursion is replaced by explicit stacks.

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Default)]
struct Interval {
    low: Option<u32>,
    high: Option<u32>,
}

impl Interval {
    fn empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Default)]
struct Pair {
    left: Interval,
    right: Interval,
}

impl Pair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct State<'a> {
    ends: &'a [(usize, usize)],
    adj: Vec<Vec<u32>>,
    height: Vec<u32>,
    parent: Vec<u32>,
    src: Vec<u32>,
    dst: Vec<u32>,
    oriented: Vec<bool>,
    lowpt: Vec<u32>,
    lowpt2: Vec<u32>,
    nesting: Vec<i64>,
    out: Vec<Vec<u32>>,
    refs: Vec<u32>,
    side: Vec<i8>,
    stack: Vec<Pair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<u32>,
    roots: Vec<usize>,
}

impl<'a> State<'a> {
    fn new(n: usize, ends: &'a [(usize, usize)]) -> Self {
        let m = ends.len();
        let mut adj = vec![Vec::new(); n];
        for (i, &(a, b)) in ends.iter().enumerate() {
            adj[a].push(i as u32);
            adj[b].push(i as u32);
        }
        State {
            ends,
            adj,
            height: vec![NONE; n],
            parent: vec![NONE; n],
            src: vec![NONE; m],
            dst: vec![NONE; m],
            oriented: vec![false; m],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting: vec![0; m],
            out: vec![Vec::new(); n],
            refs: vec![NONE; m],
            side: vec![1; m],
            stack: Vec::new(),
            stack_bottom: vec![0; m],
            lowpt_edge: vec![NONE; m],
            roots: Vec::new(),
        }
    }

    fn other(&self, e: u32, v: usize) -> usize {
        let (a, b) = self.ends[e as usize];
        if a == v {
            b
        } else {
            a
        }
    }

    fn orient(&mut self, root: usize, ind: &mut [usize], skip: &mut [bool]) {
        let mut st = vec![root];
        while let Some(v) = st.pop() {
            let e = self.parent[v];
            while ind[v] < self.adj[v].len() {
                let ed = self.adj[v][ind[v]];
                let w = self.other(ed, v);
                let x = ed as usize;
                if !skip[x] {
                    if self.oriented[x] {
                        ind[v] += 1;
                        continue;
                    }
                    self.oriented[x] = true;
                    self.src[x] = v as u32;
                    self.dst[x] = w as u32;
                    self.out[v].push(ed);
                    self.lowpt[x] = self.height[v];
                    self.lowpt2[x] = self.height[v];
                    if self.height[w] == NONE {
                        self.parent[w] = ed;
                        self.height[w] = self.height[v] + 1;
                        st.push(v);
                        st.push(w);
                        skip[x] = true;
                        break;
                    } else {
                        self.lowpt[x] = self.height[w];
                    }
                }
                self.nesting[x] = 2 * self.lowpt[x] as i64;
                if self.lowpt2[x] < self.height[v] {
                    self.nesting[x] += 1;
                }
                if e != NONE {
                    let pe = e as usize;
                    if self.lowpt[x] < self.lowpt[pe] {
                        self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[x]);
                        self.lowpt[pe] = self.lowpt[x];
                    } else if self.lowpt[x] > self.lowpt[pe] {
                        self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[x]);
                    } else {
                        self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[x]);
                    }
                }
                ind[v] += 1;
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: u32) -> bool {
        !i.empty() && self.lowpt[i.high.unwrap() as usize] > self.lowpt[b as usize]
    }

    fn lowest(&self, p: &Pair) -> u32 {
        if p.left.empty() {
            return self.lowpt[p.right.low.unwrap() as usize];
        }
        if p.right.empty() {
            return self.lowpt[p.left.low.unwrap() as usize];
        }
        self.lowpt[p.left.low.unwrap() as usize].min(self.lowpt[p.right.low.unwrap() as usize])
    }

    fn set_ref(&mut self, e: Option<u32>, r: Option<u32>) {
        if let Some(e) = e {
            self.refs[e as usize] = r.unwrap_or(NONE);
        }
    }

    fn add_constraints(&mut self, ei: u32, e: u32) -> bool {
        let mut p = Pair::default();
        loop {
            let Some(mut q) = self.stack.pop() else { break };
            if !q.left.empty() {
                q.swap();
            }
            if !q.left.empty() {
                return false;
            }
            if self.lowpt[q.right.low.unwrap() as usize] > self.lowpt[e as usize] {
                if p.right.empty() {
                    p.right = q.right;
                } else {
                    self.set_ref(p.right.low, q.right.high);
                }
                p.right.low = q.right.low;
            } else {
                let le = self.lowpt_edge[e as usize];
                self.set_ref(q.right.low, Some(le));
            }
            if self.stack.len() == self.stack_bottom[ei as usize] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.set_ref(p.right.low, q.right.high);
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.empty() {
                p.left = q.left;
            } else {
                self.set_ref(p.left.low, q.left.high);
            }
            p.left.low = q.left.low;
        }
        if !(p.left.empty() && p.right.empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: u32) {
        let u = self.src[e as usize];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u as usize] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l as usize] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h as usize] != u {
                    break;
                }
                let r = self.refs[h as usize];
                p.left.high = (r != NONE).then_some(r);
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.set_ref(Some(l), p.right.low);
                    self.side[l as usize] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.dst[h as usize] != u {
                    break;
                }
                let r = self.refs[h as usize];
                p.right.high = (r != NONE).then_some(r);
            }
            if p.right.high.is_none() {
                if let Some(l) = p.right.low {
                    self.set_ref(Some(l), p.left.low);
                    self.side[l as usize] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e as usize] < self.height[u as usize] {
            if let Some(top) = self.stack.last() {
                let hl = top.left.high;
                let hr = top.right.high;
                let pick = match (hl, hr) {
                    (Some(l), None) => Some(l),
                    (Some(l), Some(r)) if self.lowpt[l as usize] > self.lowpt[r as usize] => {
                        Some(l)
                    }
                    _ => hr,
                };
                self.set_ref(Some(e), pick);
            }
        }
    }

    fn test(&mut self, root: usize, ind: &mut [usize], skip: &mut [bool]) -> bool {
        let mut st = vec![root];
        while let Some(v) = st.pop() {
            let e = self.parent[v];
            let mut skip_final = false;
            while ind[v] < self.out[v].len() {
                let ei = self.out[v][ind[v]];
                let x = ei as usize;
                let w = self.dst[x] as usize;
                if !skip[x] {
                    self.stack_bottom[x] = self.stack.len();
                    if ei == self.parent[w] {
                        st.push(v);
                        st.push(w);
                        skip[x] = true;
                        skip_final = true;
                        break;
                    } else {
                        self.lowpt_edge[x] = ei;
                        self.stack.push(Pair {
                            left: Interval::default(),
                            right: Interval {
                                low: Some(ei),
                                high: Some(ei),
                            },
                        });
                    }
                }
                if self.lowpt[x] < self.height[v] {
                    if ei == self.out[v][0] {
                        if e != NONE {
                            self.lowpt_edge[e as usize] = self.lowpt_edge[x];
                        }
                    } else if !self.add_constraints(ei, e) {
                        return false;
                    }
                }
                ind[v] += 1;
            }
            if !skip_final && e != NONE {
                self.remove_back_edges(e);
            }
        }
        true
    }

    fn sign(&mut self, e: u32) -> i8 {
        let mut st = vec![e];
        let mut old: Vec<(u32, u32)> = Vec::new();
        while let Some(x) = st.pop() {
            let r = self.refs[x as usize];
            if r != NONE {
                st.push(x);
                st.push(r);
                old.push((x, r));
                self.refs[x as usize] = NONE;
            } else if let Some(pos) = old.iter().rposition(|&(a, _)| a == x) {
                let (_, r) = old.swap_remove(pos);
                self.side[x as usize] *= self.side[r as usize];
            }
        }
        self.side[e as usize]
    }
}

/// Circular doubly linked rotation lists over darts `2e` (at `src`) and
/// `2e+1` (at `dst`).
struct Rot {
    cw: Vec<u32>,
    ccw: Vec<u32>,
    leftmost: Vec<u32>,
}

impl Rot {
    fn first(&mut self, v: usize, d: u32) {
        self.cw[d as usize] = d;
        self.ccw[d as usize] = d;
        self.leftmost[v] = d;
    }

    /// Insert `d` immediately clockwise after `r`.
    fn after(&mut self, d: u32, r: u32) {
        let rc = self.cw[r as usize];
        self.cw[d as usize] = rc;
        self.ccw[d as usize] = r;
        self.ccw[rc as usize] = d;
        self.cw[r as usize] = d;
    }

    /// Insert `d` immediately clockwise before `r`.
    fn before(&mut self, v: usize, d: u32, r: u32) {
        let rc = self.ccw[r as usize];
        self.cw[d as usize] = r;
        self.ccw[d as usize] = rc;
        self.cw[rc as usize] = d;
        self.ccw[r as usize] = d;
        if self.leftmost[v] == r {
            self.leftmost[v] = d;
        }
    }

    fn push_first(&mut self, v: usize, d: u32) {
        let l = self.leftmost[v];
        if l == NONE {
            self.first(v, d);
        } else {
            self.before(v, d, l);
        }
    }
}

/// Test planarity of the simple graph on `0..n` with edge list `ends`.
/// With `embed`, a planar answer carries, for every vertex, its incident edge
/// indices in clockwise order.
pub(crate) fn lr_planarity(
    n: usize,
    ends: &[(usize, usize)],
    embed: bool,
) -> Option<Vec<Vec<usize>>> {
    if n > 2 && ends.len() > 3 * n - 6 {
        return None;
    }
    let m = ends.len();
    let mut s = State::new(n, ends);
    let mut ind = vec![0usize; n];
    let mut skip = vec![false; m];
    for v in 0..n {
        if s.height[v] == NONE {
            s.height[v] = 0;
            s.roots.push(v);
            s.orient(v, &mut ind, &mut skip);
        }
    }
    for v in 0..n {
        let mut o = std::mem::take(&mut s.out[v]);
        o.sort_by_key(|&e| s.nesting[e as usize]);
        s.out[v] = o;
    }
    ind.iter_mut().for_each(|x| *x = 0);
    skip.iter_mut().for_each(|x| *x = false);
    let roots = s.roots.clone();
    for &r in &roots {
        if !s.test(r, &mut ind, &mut skip) {
            return None;
        }
    }
    if !embed {
        return Some(Vec::new());
    }
    for e in 0..m as u32 {
        let sg = s.sign(e) as i64;
        s.nesting[e as usize] *= sg;
    }
    for v in 0..n {
        let mut o = std::mem::take(&mut s.out[v]);
        o.sort_by_key(|&e| s.nesting[e as usize]);
        s.out[v] = o;
    }
    let mut rot = Rot {
        cw: vec![NONE; 2 * m],
        ccw: vec![NONE; 2 * m],
        leftmost: vec![NONE; n],
    };
    for v in 0..n {
        let mut prev = NONE;
        for &e in &s.out[v] {
            let d = 2 * e;
            if prev == NONE {
                rot.first(v, d);
            } else {
                rot.after(d, prev);
            }
            prev = d;
        }
    }
    let mut left_ref = vec![NONE; n];
    let mut right_ref = vec![NONE; n];
    ind.iter_mut().for_each(|x| *x = 0);
    for &r in &roots {
        let mut st = vec![r];
        while let Some(v) = st.pop() {
            while ind[v] < s.out[v].len() {
                let ei = s.out[v][ind[v]];
                ind[v] += 1;
                let w = s.dst[ei as usize] as usize;
                let at_w = 2 * ei + 1;
                if ei == s.parent[w] {
                    rot.push_first(w, at_w);
                    left_ref[v] = 2 * ei;
                    right_ref[v] = 2 * ei;
                    st.push(v);
                    st.push(w);
                    break;
                } else if s.side[ei as usize] == 1 {
                    rot.after(at_w, right_ref[w]);
                } else {
                    rot.before(w, at_w, left_ref[w]);
                    left_ref[w] = at_w;
                }
            }
        }
    }
    let mut out = vec![Vec::new(); n];
    for v in 0..n {
        let start = rot.leftmost[v];
        if start == NONE {
            continue;
        }
        let mut d = start;
        loop {
            out[v].push((d / 2) as usize);
            d = rot.cw[d as usize];
            if d == start {
                break;
            }
        }
    }
    Some(out)
}
