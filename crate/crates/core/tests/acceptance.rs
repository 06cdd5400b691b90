//! One line per acceptance criterion, then a single assertion over all of them.

use std::io::Write;
use std::time::Instant;

use ccrit::certificates::{enumerate_traversing_paths, max_twisted_family, verify_twisted_family};
use ccrit::constructions::{build_q_member, build_s_graph};
use ccrit::gamma::{build_gamma, f_threshold, minimal_t, predict, solve_params, GammaParams};
use ccrit::graph::canon::canonical_form;
use ccrit::graph::connectivity::vertex_connectivity_at_least;
use ccrit::graph::io::write_edge_list;
use ccrit::oracle::{cr_exact, is_crossing_critical, tcr_exact, CriticalOptions, LowerCertificate, SearchOptions};
use ccrit::zip::build_r;
use ccrit::{MultiGraph, Rational, Tile, TileSequence};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed;

struct Outcome {
    pass: bool,
    detail: String,
    artifact: Vec<u8>,
}

fn outcome(pass: bool, detail: impl Into<String>, artifact: Vec<u8>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
        artifact,
    }
}

fn r(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

fn bytes<T: serde::Serialize>(g: &MultiGraph, extra: &T) -> Vec<u8> {
    let mut out = write_edge_list(g).into_bytes();
    out.extend(serde_json::to_vec(extra).unwrap());
    out
}

fn cr(g: &MultiGraph) -> Option<usize> {
    cr_exact(g, &SearchOptions::default()).ok()?.value
}

fn c1() -> Outcome {
    let cases = [
        ("K4", MultiGraph::complete(4), 0),
        ("K5", MultiGraph::complete(5), 1),
        ("K33", MultiGraph::complete_bipartite(3, 3), 1),
        ("K6", MultiGraph::complete(6), 3),
        ("K35", MultiGraph::complete_bipartite(3, 5), 4),
    ];
    let got: Vec<String> = cases.iter().map(|(n, g, _)| format!("{n}={:?}", cr(g))).collect();
    let pass = cases.iter().all(|(_, g, k)| cr(g) == Some(*k));
    outcome(pass, got.join(" "), Vec::new())
}

fn c2() -> Outcome {
    let sg = build_s_graph(3, 7, 0).unwrap();
    let value = cr(&sg.graph);
    let rep = is_crossing_critical(&sg.graph, 2, &CriticalOptions::default());
    let pass = value == Some(2) && rep.is_critical() && rep.witnessed() == 56 && sg.graph.edge_count() == 56;
    let detail = format!("cr={value:?} critical={} witnessed={}/{}", rep.is_critical(), rep.witnessed(), sg.graph.edge_count());
    outcome(pass, detail, bytes(&sg.graph, &rep))
}

fn c3() -> Outcome {
    let sg = build_s_graph(4, 15, 0).unwrap();
    let res = sg.certified_cr(0).unwrap();
    let systems = sg.default_systems().unwrap();
    let sizes: Vec<Option<usize>> =
        (0..sg.graph.edge_count()).map(|e| sg.edge_witness_with(&systems, e).map(|w| w.len())).collect();
    let small = sizes.iter().filter(|s| s.is_some_and(|k| k <= 4)).count();
    let total = sizes.len();
    let strip = matches!(res.certificate, LowerCertificate::StaircaseStrip { bound: 5, .. });
    let pass = res.value == Some(5) && strip && res.upper == Some(5) && small * 100 >= 95 * total;
    let detail = format!("cr={:?} strip={strip} per-edge<=4: {small}/{total}, unknown {}", res.value, total - small);
    outcome(pass, detail, bytes(&sg.graph, &(res, sizes)))
}

fn c4() -> Outcome {
    let (g, rep) = build_r(3, 3, 2).unwrap();
    let res = cr_exact(&g, &SearchOptions::default()).unwrap();
    let level1 = res.certificate == LowerCertificate::Exhaustion { below: 2 };
    let conn = vertex_connectivity_at_least(&g, 3);
    let crit = is_crossing_critical(&g, 2, &CriticalOptions::default());
    let pass = res.value == Some(2) && level1 && conn && g.is_simple() && crit.is_critical() && rep.predicted.value == 2;
    let detail = format!(
        "cr={:?} exhausted-below-2={level1} 3-connected={conn} simple={} critical={}",
        res.value,
        g.is_simple(),
        crit.is_critical()
    );
    outcome(pass, detail, bytes(&g, &(res, crit, rep)))
}

fn c5() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    let mut art = Vec::new();
    for t in [25u64, 26, 30] {
        let q = build_q_member(1, 2, 5, t).unwrap();
        let g = &q.staircase.graph;
        let degs = g.degrees().values().all(|&d| d == 3 || d == 4);
        let ok = g.average_degree().unwrap() == r(7, 2)
            && degs
            && g.vertex_count() as u64 == 28 * (2 * t + 1)
            && g.edge_count() as u64 == 49 * (2 * t + 1);
        pass &= ok;
        notes.push(format!("t={t}:{ok}"));
        art.extend(write_edge_list(g).into_bytes());
    }
    let q = build_q_member(1, 2, 5, 25).unwrap();
    let res = q.staircase.certified_cr(0).unwrap();
    pass &= res.value == Some(9);
    notes.push(format!("cr(t=25)={:?}", res.value));
    art.extend(serde_json::to_vec(&res).unwrap());
    outcome(pass, notes.join(" "), art)
}

fn vector(p: &GammaParams) -> (i128, i128, i128, i128, i128, i128, i128) {
    (p.n, p.m, p.c, p.w, p.s, p.p, p.q)
}

fn c6() -> Outcome {
    let a = solve_params(3, 2, 645, 645, false);
    let b = solve_params(1, 2, 498, 498, false);
    let (Ok(a), Ok(b)) = (a, b) else {
        return outcome(false, "solve_params rejected a listed instance", Vec::new());
    };
    let va = vector(&a) == (4, 38 * 645 - 159, 129, 2, 50 * 645, 349, 5)
        && (a.b_prime, a.b_r, a.b_double_prime, a.b_bar, a.b_bar_r, a.k_prime, a.k_r) == (0, 2, 0, 2, 2, 81, 0);
    let vb = vector(&b) == (4, 66 * 498 - 161, 131, 1, 14 * 498, 354, 5);
    let eq11 = a.crossing_number() == 645 && b.crossing_number() == 498;
    let cons = a.constraints().iter().chain(&b.constraints()).all(|c| c.holds);
    let f = f_threshold(&r(9, 2)).unwrap();
    let f_ok = f == r(231929, 360);
    let pass = va && vb && eq11 && cons && f_ok;
    let detail = format!("vectors={} eq11={eq11} constraints={cons} f(9/2)={f} (expected 231929/360)", va && vb);
    let art = serde_json::to_vec(&(predict(&a), predict(&b))).unwrap();
    outcome(pass, detail, art)
}

fn c7() -> Outcome {
    let t = minimal_t(1, 2, 498).unwrap();
    let p = solve_params(1, 2, 498, t, true).unwrap();
    let (g, b) = match build_gamma(&p) {
        Ok(x) => x,
        Err(e) => return outcome(false, format!("t={t}: {e}"), Vec::new()),
    };
    let rep = predict(&p);
    let avg = g.average_degree().unwrap();
    let counts = g.vertex_count() as i128 == rep.vertices && g.edge_count() as i128 == rep.edges;
    let sites = b.chain.sites.iter().all(|s| s.coherent());
    let exact = avg == r(7, 2);
    let pass = g.is_simple() && counts && sites && exact;
    let detail = format!(
        "t={t} V={} E={} counts=(D,3D-2N):{counts} simple={} sites-coherent={sites} avg={avg} (7/2: {exact})",
        g.vertex_count(),
        g.edge_count(),
        g.is_simple()
    );
    outcome(pass, detail, bytes(&g, &b))
}

fn random_tile(rng: &mut ChaCha8Rng) -> Tile {
    loop {
        let n = rng.gen_range(4..=12);
        let w = rng.gen_range(1..=3.min(n / 2));
        let mut g = MultiGraph::with_vertices(n);
        let m = rng.gen_range(n..=2 * n);
        for _ in 0..m {
            let (a, b) = (rng.gen_range(0..n as u32), rng.gen_range(0..n as u32));
            if a != b && g.multiplicity(a, b) == 0 {
                g.add_edge(a, b).unwrap();
            }
        }
        let left: Vec<u32> = (0..w as u32).collect();
        let right: Vec<u32> = (w as u32..2 * w as u32).collect();
        if let Ok(t) = Tile::new(g, left, right) {
            return t;
        }
    }
}

fn c8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut tiles, mut families, mut violations, mut unknown) = (0, 0, 0, 0);
    while tiles < 200 {
        let t = random_tile(&mut rng);
        tiles += 1;
        let Some(paths) = enumerate_traversing_paths(&t, 200) else { continue };
        let Some(fam) = max_twisted_family(&t, &paths, 20_000) else { continue };
        let Ok(f) = verify_twisted_family(&t, &fam) else {
            violations += 1;
            continue;
        };
        if f == 0 {
            continue;
        }
        families += 1;
        let opts = SearchOptions {
            max_level: Some(f - 1),
            budget: 2_000_000,
            ..SearchOptions::default()
        };
        match tcr_exact(&t, 1, &opts) {
            Ok(res) if res.upper.is_some_and(|u| u < f) => violations += 1,
            Ok(res) if res.lower < f => unknown += 1,
            Ok(_) => {}
            Err(_) => unknown += 1,
        }
    }
    let mut seq_bad = 0;
    for _ in 0..200 {
        let len = rng.gen_range(2..=4);
        let w = rng.gen_range(1..=2);
        let ts: Vec<Tile> = (0..len)
            .map(|_| loop {
                let t = random_tile(&mut rng);
                if t.left.len() == w {
                    break t;
                }
            })
            .collect();
        let seq = TileSequence::new(ts.clone()).unwrap();
        let base = seq.cyclize().ok().and_then(|g| canonical_form(&g).ok());
        let i = rng.gen_range(0..len);
        for other in [seq.flip(i).ok(), seq.shift(i).ok(), Some(seq.reverse())] {
            let c = other.and_then(|s| s.cyclize().ok()).and_then(|g| canonical_form(&g).ok());
            if c != base {
                seq_bad += 1;
            }
        }
        if ts.iter().any(|t| t.invert_right().invert_right() != *t) {
            seq_bad += 1;
        }
    }
    let pass = violations == 0 && seq_bad == 0;
    let detail = format!(
        "tiles=200 families={families} violations={violations} unresolved={unknown} sequences=200 identity-violations={seq_bad}"
    );
    outcome(pass, detail, Vec::new())
}

fn report(i: usize, name: &str, o: &Outcome, t: Instant) {
    let verdict = if o.pass { "PASS" } else { "FAIL" };
    let mut err = std::io::stderr();
    writeln!(err, "criterion {i} [{verdict}] {name}: {} ({:.1?})", o.detail, t.elapsed()).unwrap();
}

#[test]
fn acceptance() {
    let runs: [(&str, fn() -> Outcome); 8] = [
        ("oracle calibration", c1),
        ("S(3,7,0) exact and critical", c2),
        ("S(4,15,0) certificate and per-edge witnesses", c3),
        ("R(3,3,2) exact, 3-connected, critical", c4),
        ("Q(1,2,5) structure and certified value", c5),
        ("gamma arithmetic", c6),
        ("gamma structure", c7),
        ("certificate soundness and tile identities", c8),
    ];
    let mut passes = Vec::new();
    let mut artifacts = Vec::new();
    for (i, (name, f)) in runs.iter().enumerate() {
        let t = Instant::now();
        let o = f();
        report(i + 1, name, &o, t);
        passes.push(o.pass);
        artifacts.push(o.artifact);
    }
    let t = Instant::now();
    let same: Vec<bool> = (1..7).map(|i| (runs[i].1)().artifact == artifacts[i]).collect();
    let det = same.iter().all(|&s| s);
    let o = outcome(det, format!("criteria 2-7 byte-identical on rerun: {same:?}"), Vec::new());
    report(9, "determinism", &o, t);
    passes.push(det);
    let failed: Vec<usize> = passes.iter().enumerate().filter(|(_, p)| !**p).map(|(i, _)| i + 1).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
