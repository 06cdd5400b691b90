//! Iterative deepening over good crossing sets.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::{planarization_is_planar, verify_witness, CrResult, CrossingSet, LowerCertificate};
use crate::error::CrossingError;
use crate::graph::planarity::planar_dense;
use crate::graph::MultiGraph;
use crate::tile::{frame_gadget, Tile};

/// Default budget in planarity tests.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Planarity tests allowed; checked against the size of each level
    /// before it starts.
    pub budget: u64,
    /// A verified witness: levels below its size are exhausted and it is
    /// returned as the upper bound.
    pub seed: Option<CrossingSet>,
    pub parallel: bool,
    /// Exhaust at most this level, giving a lower bound of `max_level + 1`.
    pub max_level: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            seed: None,
            parallel: true,
            max_level: None,
        }
    }
}

/// Independent edge pairs `(e, f)`, `e < f`, both allowed.
pub fn good_pairs(g: &MultiGraph, allowed: &[bool]) -> Vec<(usize, usize)> {
    let es = g.edges();
    let mut out = Vec::new();
    for a in 0..es.len() {
        if !allowed[a] {
            continue;
        }
        for b in a + 1..es.len() {
            if allowed[b] && !es[a].shares_endpoint(&es[b]) {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn cr_exact(g: &MultiGraph, opts: &SearchOptions) -> Result<CrResult, CrossingError> {
    search(g, &vec![true; g.edge_count()], opts)
}

/// Tile crossing number via the frame gadget; frame and apex edges are never
/// crossed. Witness indices refer to the tile's own edges.
pub fn tcr_exact(t: &Tile, bundle: usize, opts: &SearchOptions) -> Result<CrResult, CrossingError> {
    let (h, added) = frame_gadget(t, bundle);
    let mut allowed = vec![true; h.edge_count()];
    for e in added {
        allowed[e] = false;
    }
    search(&h, &allowed, opts)
}

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    r
}

pub(crate) fn search(
    g: &MultiGraph,
    allowed: &[bool],
    opts: &SearchOptions,
) -> Result<CrResult, CrossingError> {
    let d = g.dense();
    let mut tests = 1u64;
    if planar_dense(d.len(), &d.ends) {
        return Ok(CrResult::bounds(
            0,
            Some(CrossingSet::default()),
            LowerCertificate::Exhaustion { below: 0 },
            tests,
        ));
    }
    let seed = match &opts.seed {
        Some(s) => {
            if !verify_witness(g, s) || s.pairs.iter().any(|&(a, b)| !allowed[a] || !allowed[b]) {
                return Err(CrossingError::InvalidSeed);
            }
            tests += 1;
            Some(s.clone())
        }
        None => None,
    };
    let pairs = good_pairs(g, allowed);
    let mut k = 1;
    loop {
        let stop = seed.as_ref().is_some_and(|s| s.len() == k)
            || opts.max_level.is_some_and(|m| k > m)
            || k > pairs.len()
            || (tests as u128).saturating_add(binom(pairs.len(), k)) > opts.budget as u128;
        if stop {
            return Ok(CrResult::bounds(
                k,
                seed,
                LowerCertificate::Exhaustion { below: k },
                tests,
            ));
        }
        let (found, spent) = level(d.len(), &d.ends, &pairs, k, opts.parallel);
        tests += spent;
        if let Some(w) = found {
            return Ok(CrResult::bounds(
                k,
                Some(w),
                LowerCertificate::Exhaustion { below: k },
                tests,
            ));
        }
        k += 1;
    }
}

/// Lexicographically first planarizing `k`-subset of `pairs` (over all
/// crossing orders) and the number of tests a sequential scan spends to
/// reach it; the count does not depend on `parallel`.
fn level(
    n: usize,
    ends: &[(usize, usize)],
    pairs: &[(usize, usize)],
    k: usize,
    parallel: bool,
) -> (Option<CrossingSet>, u64) {
    let firsts = pairs.len() + 1 - k;
    let best = AtomicUsize::new(usize::MAX);
    let run = |i: usize| -> (Option<CrossingSet>, u64, bool) {
        let r = chunk(n, ends, pairs, k, i, &best);
        if r.0.is_some() {
            best.fetch_min(i, Ordering::Relaxed);
        }
        r
    };
    let results: Vec<(Option<CrossingSet>, u64, bool)> = if parallel {
        (0..firsts).into_par_iter().map(run).collect()
    } else {
        let mut v = Vec::new();
        for i in 0..firsts {
            let r = run(i);
            let hit = r.0.is_some();
            v.push(r);
            if hit {
                break;
            }
        }
        v
    };
    let mut spent = 0;
    for (found, t, _) in results {
        spent += t;
        if found.is_some() {
            return (found, spent);
        }
    }
    (None, spent)
}

/// Subsets whose first element is `pairs[first]`; aborts once a smaller
/// first index has succeeded.
fn chunk(
    n: usize,
    ends: &[(usize, usize)],
    pairs: &[(usize, usize)],
    k: usize,
    first: usize,
    best: &AtomicUsize,
) -> (Option<CrossingSet>, u64, bool) {
    let mut tests = 0u64;
    let p = pairs.len();
    let mut idx: Vec<usize> = std::iter::once(first).chain(first + 1..first + k).collect();
    loop {
        if best.load(Ordering::Relaxed) < first {
            return (None, tests, true);
        }
        let combo: Vec<(usize, usize)> = idx.iter().map(|&i| pairs[i]).collect();
        if let Some(w) = try_orders(n, ends, &combo, &mut tests) {
            return (Some(w), tests, false);
        }
        // advance positions 1..k
        let mut j = k;
        loop {
            if j == 1 {
                return (None, tests, false);
            }
            j -= 1;
            if idx[j] < p - (k - j) {
                idx[j] += 1;
                for l in j + 1..k {
                    idx[l] = idx[l - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Try every crossing order on the edges carrying two or more pairs.
pub(crate) fn try_orders(
    n: usize,
    ends: &[(usize, usize)],
    combo: &[(usize, usize)],
    tests: &mut u64,
) -> Option<CrossingSet> {
    let mut on: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &(a, b)) in combo.iter().enumerate() {
        on.entry(a).or_default().push(i);
        on.entry(b).or_default().push(i);
    }
    let multi: Vec<usize> = on
        .iter()
        .filter(|(_, v)| v.len() > 1)
        .map(|(&e, _)| e)
        .collect();
    loop {
        *tests += 1;
        if planarization_is_planar(n, ends, combo.len(), |e| on.get(&e).cloned()) {
            let mut cs = CrossingSet::new(combo.to_vec());
            for &e in &multi {
                let o = on[&e].clone();
                if o.windows(2).any(|w| w[0] > w[1]) {
                    cs.order.insert(e, o);
                }
            }
            return Some(cs);
        }
        // odometer over per-edge permutations
        let mut advanced = false;
        for &e in &multi {
            let v = on.get_mut(&e).unwrap();
            if next_permutation(v) {
                advanced = true;
                break;
            }
            v.sort_unstable();
        }
        if !advanced {
            return None;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
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
