use ccrit::graph::canon::canonical_form;
use ccrit::{MultiGraph, Tile, TileSequence};
use proptest::prelude::*;

fn tile_strategy(w: usize) -> impl Strategy<Value = Tile> {
    (2 * w..=10).prop_flat_map(move |n| {
        prop::collection::vec((0..n as u32, 0..n as u32), n..=2 * n).prop_filter_map("wall vertex isolated", move |pairs| {
            let mut g = MultiGraph::with_vertices(n);
            for (a, b) in pairs {
                if a != b && g.multiplicity(a, b) == 0 {
                    g.add_edge(a, b).unwrap();
                }
            }
            let left = (0..w as u32).collect();
            let right = (w as u32..2 * w as u32).collect();
            Tile::new(g, left, right).ok()
        })
    })
}

fn sequence_strategy() -> impl Strategy<Value = TileSequence> {
    (1usize..=3).prop_flat_map(|w| {
        prop::collection::vec(tile_strategy(w), 2..=4).prop_map(|ts| TileSequence::new(ts).unwrap())
    })
}

fn form(s: &TileSequence) -> Option<Vec<u8>> {
    s.cyclize().ok().and_then(|g| canonical_form(&g).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn equivalent_sequences_cyclize_alike(s in sequence_strategy(), i in any::<prop::sample::Index>()) {
        let i = i.index(s.len());
        let base = form(&s);
        prop_assert_eq!(&form(&s.flip(i).unwrap()), &base);
        prop_assert_eq!(&form(&s.shift(i).unwrap()), &base);
        prop_assert_eq!(&form(&s.reverse()), &base);
        prop_assert_eq!(&form(&s.twist().twist()), &base);
    }

    #[test]
    fn inversions_are_involutions(t in tile_strategy(2)) {
        prop_assert_eq!(&t.invert_right().invert_right(), &t);
        prop_assert_eq!(&t.invert_left().invert_left(), &t);
        prop_assert_eq!(&t.reverse().reverse(), &t);
    }

    #[test]
    fn cyclized_counts(s in sequence_strategy()) {
        if let Ok(g) = s.cyclize() {
            let raw: usize = s.tiles.iter().map(|t| t.graph.edge_count()).sum();
            prop_assert!(g.edge_count() <= raw);
            let walls: usize = s.tiles.iter().map(|t| t.left.len()).sum();
            let verts: usize = s.tiles.iter().map(|t| t.graph.vertex_count()).sum();
            prop_assert!(g.vertex_count() <= verts - walls);
        }
    }
}
