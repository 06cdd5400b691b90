use ccrit::certificates::{verify_strip, verify_twisted_family};
use ccrit::constructions::{build_h_graph, build_h_tile, build_q_member, build_s_graph, build_s_tile, predicted_cr};
use ccrit::oracle::{tcr_exact, verify_witness, SearchOptions};
use ccrit::zip::build_r;
use ccrit::{Rational, Tile};

fn capped(t: &Tile, level: usize) -> usize {
    let opts = SearchOptions {
        max_level: Some(level),
        ..SearchOptions::default()
    };
    tcr_exact(t, 3, &opts).unwrap().lower
}

#[test]
fn s3_inverted_tile_crossing_number() {
    let t = build_s_tile(3, &[]).unwrap().tile.invert_right();
    for bundle in 1..=3 {
        let r = tcr_exact(&t, bundle, &SearchOptions::default()).unwrap();
        assert_eq!(r.value, Some(2));
    }
}

#[test]
fn strip_certificates_on_every_cut() {
    let sg = build_s_graph(4, 15, 0).unwrap();
    for i in 0..15 {
        let (t, w) = sg.strip_witness(i).unwrap();
        assert_eq!(verify_strip(&t, &w).unwrap(), 5, "cut {i}");
    }
    let sg = build_s_graph(5, 11, 20).unwrap();
    for i in [0, 5, 10] {
        let (t, w) = sg.strip_witness(i).unwrap();
        assert_eq!(verify_strip(&t, &w).unwrap(), 9, "cut {i}");
    }
}

#[test]
fn strip_rejects_a_foreign_tile() {
    let sg = build_s_graph(4, 15, 0).unwrap();
    let (_, w) = sg.strip_witness(0).unwrap();
    let other = build_s_graph(4, 17, 3).unwrap();
    let (t, _) = other.strip_witness(0).unwrap();
    assert!(verify_strip(&t, &w).is_err());
}

#[test]
fn drawing_witnesses_are_planarizing() {
    let sg = build_s_graph(4, 15, 7).unwrap();
    let w = sg.drawing_witness().unwrap();
    assert!(verify_witness(&sg.graph, &w));
    assert_eq!(w.len(), predicted_cr(4));
    for e in [0, 10, 40] {
        let cs = sg.edge_witness(e).unwrap();
        assert!(cs.len() < predicted_cr(4));
    }
}

#[test]
fn h_family_is_below_the_exhaustive_bound() {
    let h = build_h_tile(0).unwrap();
    let inv = h.tile.invert_right();
    let f = verify_twisted_family(&inv, &h.family).unwrap();
    assert_eq!(f, 3);
    assert!(capped(&inv, 2) >= f);
}

#[test]
fn h_graph_average_degree() {
    let g = build_h_graph(1, 476).unwrap();
    let avg = g.graph.average_degree().unwrap();
    assert_eq!(avg, Rational::new(62.into(), 13.into()));
}

#[test]
fn q_members_have_the_target_degree() {
    for t in [25, 26] {
        let q = build_q_member(1, 2, 5, t).unwrap();
        let g = &q.staircase.graph;
        assert_eq!(g.vertex_count() as u64, 28 * (2 * t + 1));
        assert_eq!(g.edge_count() as u64, 49 * (2 * t + 1));
        assert_eq!(g.average_degree().unwrap(), Rational::new(7.into(), 2.into()));
    }
}

#[test]
fn r_chain_counts() {
    for (d, dp, p) in [(3, 3, 2), (3, 5, 3), (3, 3, 5)] {
        let (g, rep) = build_r(d, dp, p).unwrap();
        let (v, e) = (d + dp, d * dp);
        assert_eq!(g.vertex_count(), p * v - 2 * (p - 1));
        assert_eq!(g.edge_count(), p * e - 3 * (p - 1));
        assert_eq!(rep.sites.len(), p - 1);
        assert!(g.is_simple());
    }
}

#[test]
fn certified_values() {
    for (n, m, c, k) in [(3, 7, 0, 2), (4, 15, 0, 5), (5, 11, 20, 9)] {
        let r = build_s_graph(n, m, c).unwrap().certified_cr(0).unwrap();
        assert_eq!(r.value, Some(k));
        assert_eq!(r.provenance.unwrap().as_str(), "certificate-lower+witness-upper");
    }
}
