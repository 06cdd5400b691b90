//! The H provider: a count-contract tile `H_w` and the graphs `H(w, s)`.
//!
//! `H_0` is a triangulated strip of three rows and four columns; the outer
//! columns are the walls and carry no column edges. `H_w` stacks a chain of
//! `4w` degree-3 vertices into one triangle of the middle square.

use serde::{Deserialize, Serialize};

use crate::certificates::{verify_twisted_family, PathFamily, TraversingPath};
use crate::error::BuildError;
use crate::graph::{MultiGraph, VertexId};
use crate::report::CrValue;
use crate::tile::{is_perfect_tile, is_planar_tile, Tile, TileSequence};

/// `32w² + 56w + 31`.
pub fn h_crossings(w: u64) -> u64 {
    32 * w * w + 56 * w + 31
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HTile {
    pub w: usize,
    pub tile: Tile,
    /// The three row pairs of the right-inverted tile.
    pub family: PathFamily,
    /// Declared tile crossing number of the right-inverted tile.
    pub declared: CrValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HGraph {
    pub w: usize,
    pub s: usize,
    pub graph: MultiGraph,
    pub predicted: CrValue,
}

fn at(c: usize, r: usize) -> VertexId {
    (3 * c + r) as VertexId
}

/// Rows, columns and diagonals of `H_0`, then the stacked chain.
fn h_edges(w: usize) -> Vec<(VertexId, VertexId)> {
    let mut es = Vec::new();
    for r in 0..3 {
        for c in 0..3 {
            es.push((at(c, r), at(c + 1, r)));
        }
    }
    for c in 1..3 {
        for r in 0..2 {
            es.push((at(c, r), at(c, r + 1)));
        }
    }
    // per gap, whether the diagonal of each square falls to the right
    let down = [[true, false], [true, true], [true, false]];
    for (c, d) in down.iter().enumerate() {
        for (r, &fall) in d.iter().enumerate() {
            es.push(if fall {
                (at(c, r), at(c + 1, r + 1))
            } else {
                (at(c, r + 1), at(c + 1, r))
            });
        }
    }
    let mut last = vec![at(1, 0), at(2, 1), at(2, 0)];
    for k in 0..4 * w {
        let v = (12 + k) as VertexId;
        let l = last.len();
        for &x in &last[l - 3..] {
            es.push((x, v));
        }
        last.push(v);
    }
    es
}

/// Three disjoint rows of `t`, as traversing paths.
fn rows(t: &Tile) -> Result<Vec<TraversingPath>, BuildError> {
    (0..3)
        .map(|r| {
            let verts: Vec<VertexId> = (0..4).map(|c| at(c, r)).collect();
            TraversingPath::from_vertices(t, &verts).map_err(|e| BuildError::Validation(e.to_string()))
        })
        .collect()
}

pub fn build_h_tile(w: usize) -> Result<HTile, BuildError> {
    let n = 12 + 4 * w;
    let g = MultiGraph::from_edges(n, &h_edges(w))?;
    let tile = Tile::new(g, vec![at(0, 0), at(0, 1), at(0, 2)], vec![at(3, 0), at(3, 1), at(3, 2)])?;
    let (nv, ne) = (tile.net_vertex_count(), tile.graph.edge_count());
    if nv != 4 * w + 9 || ne != 12 * w + 19 {
        return Err(BuildError::Validation(format!("H_{w} has {nv} net vertices and {ne} edges")));
    }
    if !is_planar_tile(&tile) {
        return Err(BuildError::Validation(format!("H_{w} is not a planar tile")));
    }
    let p = is_perfect_tile(&tile);
    if !p.perfect {
        return Err(BuildError::Validation(format!("H_{w} is not perfect: {:?}", p.violation)));
    }
    let inv = tile.invert_right();
    let r = rows(&inv)?;
    let family = PathFamily {
        pairs: vec![(r[0].clone(), r[1].clone()), (r[0].clone(), r[2].clone()), (r[1].clone(), r[2].clone())],
    };
    verify_twisted_family(&inv, &family).map_err(|e| BuildError::Validation(e.to_string()))?;
    Ok(HTile {
        w,
        tile,
        family,
        declared: CrValue::paper(h_crossings(w as u64)),
    })
}

/// `∘` of the twisted sequence of `s` copies of `H_w`.
pub fn build_h_graph(w: usize, s: usize) -> Result<HGraph, BuildError> {
    let k = h_crossings(w as u64);
    if (s as u64) < 4 * k {
        return Err(BuildError::Params(format!("H({w}, {s}) needs s >= {}", 4 * k)));
    }
    let h = build_h_tile(w)?;
    let graph = TileSequence::new(vec![h.tile; s])?.twist().cyclize()?;
    let (v, e) = (graph.vertex_count(), graph.edge_count());
    if v != s * (4 * w + 9) || e != s * (12 * w + 19) {
        return Err(BuildError::Validation(format!("H({w}, {s}) has {v} vertices and {e} edges")));
    }
    if !graph.is_simple() {
        return Err(BuildError::Validation(format!("H({w}, {s}) is not simple")));
    }
    Ok(HGraph {
        w,
        s,
        graph,
        predicted: CrValue::paper(k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn tile_counts() {
        for w in 0..4 {
            let h = build_h_tile(w).unwrap();
            assert_eq!(h.tile.net_vertex_count(), 4 * w + 9);
            assert_eq!(h.tile.graph.edge_count(), 12 * w + 19);
            let avg = Rational::new((2 * (12 * w + 19)).into(), (4 * w + 9).into());
            assert_eq!(avg, Rational::new((24 * w + 38).into(), (4 * w + 9).into()));
        }
        assert_eq!(build_h_tile(0).unwrap().declared.value, 31);
        assert_eq!(h_crossings(1), 119);
    }

    #[test]
    fn graphs() {
        let g = build_h_graph(0, 124).unwrap();
        assert_eq!(g.graph.vertex_count(), 124 * 9);
        assert_eq!(g.predicted.value, 31);
        assert!(g.graph.degrees().values().all(|&d| d >= 3));
        assert!(g.graph.is_connected());
        assert_eq!(build_h_graph(1, 476).unwrap().predicted.value, 119);
        assert!(matches!(build_h_graph(0, 100), Err(BuildError::Params(_))));
    }
}
