use std::collections::BTreeMap;

use ccrit::graph::canon::canonical_form;
use ccrit::graph::connectivity::{edge_connectivity_at_least, vertex_connectivity_at_least};
use ccrit::graph::planarity::{planarity, Planarity};
use ccrit::MultiGraph;
use proptest::prelude::*;

fn graph_strategy(max_n: usize, max_m: usize) -> impl Strategy<Value = MultiGraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n as u32, 0..n as u32), 0..=max_m).prop_map(move |pairs| {
            let mut g = MultiGraph::with_vertices(n);
            for (a, b) in pairs {
                if a != b {
                    g.add_edge(a, b).unwrap();
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn planarity_answers_are_certified(g in graph_strategy(10, 30)) {
        match planarity(&g) {
            Planarity::Planar(e) => prop_assert!(e.verify(&g).is_ok()),
            Planarity::NonPlanar(k) => {
                let k = k.expect("kuratowski witness");
                prop_assert!(k.verify(&g).is_ok());
            }
        }
    }

    #[test]
    fn euler_bound(g in graph_strategy(10, 30)) {
        let s = g.simplified();
        if s.vertex_count() >= 3 && planarity(&s).is_planar() {
            prop_assert!(s.edge_count() <= 3 * s.vertex_count() - 6);
        }
    }

    #[test]
    fn degree_sum(g in graph_strategy(12, 40)) {
        let sum: usize = g.degrees().values().sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn suppression_idempotent(g in graph_strategy(10, 20)) {
        let s = g.suppress_degree2();
        prop_assert!(s.validate().is_ok());
        prop_assert!(s.degrees().values().all(|&d| d != 2));
        prop_assert_eq!(s.suppress_degree2(), s.clone());
    }

    #[test]
    fn vertex_implies_edge_connectivity(g in graph_strategy(8, 20), k in 1usize..4) {
        if vertex_connectivity_at_least(&g, k) {
            prop_assert!(edge_connectivity_at_least(&g, k));
        }
    }

    #[test]
    fn canonical_form_relabel_invariant(g in graph_strategy(9, 18), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let base = canonical_form(&g).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut ids: Vec<u32> = g.vertices().to_vec();
        ids.shuffle(&mut rng);
        let map: BTreeMap<u32, u32> = g.vertices().iter().copied().zip(ids).collect();
        prop_assert_eq!(canonical_form(&g.relabel(&map)).unwrap(), base);
    }
}

#[test]
fn canonical_form_hundred_relabelings() {
    use rand::{seq::SliceRandom, SeedableRng};
    let graphs = [
        MultiGraph::complete(5),
        MultiGraph::complete_bipartite(3, 4),
        MultiGraph::cycle(9),
        MultiGraph::from_edges(6, &[(0, 1), (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
            .unwrap(),
    ];
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for g in &graphs {
        let base = canonical_form(g).unwrap();
        for _ in 0..100 {
            let mut ids: Vec<u32> = g.vertices().to_vec();
            ids.shuffle(&mut rng);
            let map: BTreeMap<u32, u32> = g.vertices().iter().copied().zip(ids).collect();
            assert_eq!(canonical_form(&g.relabel(&map)).unwrap(), base);
        }
    }
}
