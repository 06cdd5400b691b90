//! Canonical forms for small multigraphs: colour refinement plus
//! individualisation backtracking, keeping the lexicographically least
//! adjacency encoding over all leaves.

use super::MultiGraph;
use crate::error::GraphError;

pub const CANON_BOUND: usize = 64;

const LEAF_BUDGET: usize = 5_000_000;

/// Canonical byte string: equal iff the graphs are isomorphic (labels are
/// ignored).
pub fn canonical_form(g: &MultiGraph) -> Result<Vec<u8>, GraphError> {
    let n = g.vertex_count();
    if n > CANON_BOUND {
        return Err(GraphError::TooLarge {
            size: n,
            bound: CANON_BOUND,
        });
    }
    let d = g.dense();
    let mut mult = vec![vec![0u16; n]; n];
    for &(a, b) in &d.ends {
        mult[a][b] += 1;
        mult[b][a] += 1;
    }
    let mut st = Canon {
        n,
        mult,
        best: None,
        leaves: 0,
    };
    let colors = st.refine(vec![0; n]);
    st.search(colors);
    if st.leaves > LEAF_BUDGET {
        return Err(GraphError::TooLarge {
            size: st.leaves,
            bound: LEAF_BUDGET,
        });
    }
    Ok(st.best.unwrap_or_else(|| encode_header(0)))
}

pub fn isomorphic(a: &MultiGraph, b: &MultiGraph) -> Result<bool, GraphError> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

fn encode_header(n: usize) -> Vec<u8> {
    (n as u32).to_be_bytes().to_vec()
}

struct Canon {
    n: usize,
    mult: Vec<Vec<u16>>,
    best: Option<Vec<u8>>,
    leaves: usize,
}

impl Canon {
    /// Stable colour refinement; colours are renumbered `0..k` in an
    /// isomorphism-invariant order.
    fn refine(&self, mut c: Vec<usize>) -> Vec<usize> {
        let n = self.n;
        let mut classes = count_classes(&c);
        loop {
            let mut sigs: Vec<(usize, Vec<(usize, u16)>, usize)> = (0..n)
                .map(|v| {
                    let mut s: Vec<(usize, u16)> = (0..n)
                        .filter(|&w| self.mult[v][w] > 0)
                        .map(|w| (c[w], self.mult[v][w]))
                        .collect();
                    s.sort_unstable();
                    (c[v], s, v)
                })
                .collect();
            sigs.sort();
            let mut next = vec![0; n];
            let mut color = 0;
            for i in 0..n {
                if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                    color += 1;
                }
                next[sigs[i].2] = color;
            }
            let k = count_classes(&next);
            c = next;
            if k == classes {
                return c;
            }
            classes = k;
        }
    }

    fn search(&mut self, c: Vec<usize>) {
        if self.leaves > LEAF_BUDGET {
            return;
        }
        let n = self.n;
        let k = count_classes(&c);
        if k == n {
            self.leaves += 1;
            let code = self.encode(&c);
            if self.best.as_ref().map_or(true, |b| code < *b) {
                self.best = Some(code);
            }
            return;
        }
        // first non-singleton class in colour order
        let mut size = vec![0; k];
        for &x in &c {
            size[x] += 1;
        }
        let target = (0..k).find(|&x| size[x] > 1).unwrap();
        let members: Vec<usize> = (0..n).filter(|&v| c[v] == target).collect();
        for &v in &members {
            // v gets a colour just below the rest of its class
            let split: Vec<usize> = (0..n)
                .map(|x| 2 * c[x] + usize::from(c[x] == target && x != v))
                .collect();
            let child = self.refine(split);
            self.search(child);
        }
    }

    fn encode(&self, c: &[usize]) -> Vec<u8> {
        let n = self.n;
        let mut inv = vec![0; n];
        for v in 0..n {
            inv[c[v]] = v;
        }
        let mut out = encode_header(n);
        for i in 0..n {
            for j in i + 1..n {
                out.extend_from_slice(&self.mult[inv[i]][inv[j]].to_be_bytes());
            }
        }
        out
    }
}

fn count_classes(c: &[usize]) -> usize {
    let mut v: Vec<usize> = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use std::collections::BTreeMap;

    fn shuffled(g: &MultiGraph, seed: u64) -> MultiGraph {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut ids: Vec<u32> = g.vertices().to_vec();
        ids.shuffle(&mut rng);
        let map: BTreeMap<u32, u32> = g.vertices().iter().copied().zip(ids).collect();
        g.relabel(&map)
    }

    #[test]
    fn relabelings_agree() {
        let g = MultiGraph::complete(4);
        assert_eq!(
            canonical_form(&g).unwrap(),
            canonical_form(&shuffled(&g, 3)).unwrap()
        );
        assert_ne!(
            canonical_form(&g).unwrap(),
            canonical_form(&MultiGraph::cycle(4)).unwrap()
        );
    }

    #[test]
    fn prism_vs_k33() {
        let k33 = MultiGraph::complete_bipartite(3, 3);
        let prism = MultiGraph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert!(!isomorphic(&k33, &prism).unwrap());
        assert!(isomorphic(&prism, &shuffled(&prism, 9)).unwrap());
    }

    #[test]
    fn multiplicity_matters() {
        let a = MultiGraph::from_edges(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        let b = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (1, 2)]).unwrap();
        let c = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(isomorphic(&a, &b).unwrap());
        assert!(!isomorphic(&a, &c).unwrap());
    }

    #[test]
    fn regular_non_isomorphic() {
        // two 3-regular graphs on 8 vertices: cube vs. two disjoint K4
        let cube = MultiGraph::from_edges(
            8,
            &[
                (0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
                (0, 4), (1, 5), (2, 6), (3, 7),
            ],
        )
        .unwrap();
        let mut two = MultiGraph::complete(4);
        two.disjoint_union(&MultiGraph::complete(4));
        assert!(!isomorphic(&cube, &two).unwrap());
        for s in 0..20 {
            assert!(isomorphic(&cube, &shuffled(&cube, s)).unwrap());
        }
    }

    #[test]
    fn bound_enforced() {
        assert!(canonical_form(&MultiGraph::cycle(CANON_BOUND + 1)).is_err());
    }
}
