use std::collections::BTreeMap;

use ccrit::constructions::{build_h_graph, build_h_tile, build_q_member, build_s_graph, build_s_tile, StaircaseGraph};
use ccrit::gamma::{build_gamma, minimal_t, predict, solve_params, GammaParams};
use ccrit::graph::connectivity::{edge_connectivity_at_least, vertex_connectivity_at_least};
use ccrit::oracle::{cr_exact, is_crossing_critical, tcr_exact, CrResult, CriticalOptions, SearchOptions, Verdict};
use ccrit::report::{CrValue, SCHEMA_VERSION};
use ccrit::zip::{all_zips, build_r, find_two_coherent_bundles, homogeneous_sufficient, zip, Coherence, ZipSpec};
use ccrit::{BuildError, CrossingError, GammaError, MultiGraph, Tile, ZipError};
use serde_json::{json, Value};

use crate::io::{emit, json, read_graph, read_json, render_graph, Failure, Res};
use crate::{
    BuildArgs, Cli, Command, CrArgs, Family, GammaAction, Global, Output, SolveArgs, TcrArgs, TileArgs,
    TileFamily, VerifyArgs, ZipArgs, EXIT_FAILED, EXIT_UNKNOWN,
};

pub fn run(cli: &Cli) -> Res<u8> {
    let g = &cli.global;
    match &cli.command {
        Command::Build(a) => cmd_build(g, a),
        Command::Verify(a) => cmd_verify(g, a),
        Command::Cr(a) => cmd_cr(g, a),
        Command::Tcr(a) => cmd_tcr(g, a),
        Command::Tile(a) => cmd_tile(a),
        Command::Zip(a) => cmd_zip(g, a),
        Command::Solve(a) => cmd_solve(a, false),
        Command::Gamma { action } => match action {
            GammaAction::Solve(a) => cmd_solve(a, false),
            GammaAction::Predict(a) => cmd_solve(a, true),
            GammaAction::Build { solve, output } => cmd_gamma_build(g, solve, output),
        },
    }
}

fn failed(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_FAILED,
        message: message.to_string(),
    }
}

fn build_err(e: BuildError) -> Failure {
    match e {
        BuildError::Params(_) | BuildError::Zip(ZipError::Params(_)) => Failure::params(e),
        _ => failed(e),
    }
}

fn zip_err(e: ZipError) -> Failure {
    match e {
        ZipError::Graph(_) => failed(e),
        _ => Failure::params(e),
    }
}

fn gamma_err(e: GammaError) -> Failure {
    match e {
        GammaError::Params(_) => Failure::params(e),
        GammaError::Constraints(v) => failed(format!("constraints fail: {}", v.join(", "))),
        _ => failed(e),
    }
}

fn cr_err(e: CrossingError) -> Failure {
    failed(e)
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: &str) -> Res<T> {
    v.ok_or_else(|| Failure::params(format!("{family} needs -{flag}")))
}

fn measure(g: &MultiGraph) -> Value {
    json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "averageDegree": g.average_degree().map(|r| r.to_string()).ok(),
        "simple": g.is_simple(),
        "degrees": g.degree_histogram(),
    })
}

fn report(command: &str, g: &Global, body: Value) -> Value {
    let mut v = json!({ "schemaVersion": SCHEMA_VERSION, "command": command, "seed": g.seed });
    if let (Value::Object(m), Value::Object(b)) = (&mut v, body) {
        m.extend(b);
    }
    v
}

fn write_outputs(g: &Global, graph: &MultiGraph, name: &str, rep: &Value, out: &Output) -> Res<()> {
    emit(&render_graph(graph, g.format, name), out.out.as_deref(), false)?;
    emit(&json(rep), out.report.as_deref(), true)
}

fn certify(sg: &StaircaseGraph) -> Res<CrResult> {
    sg.certified_cr(0).map_err(build_err)
}

fn cmd_build(g: &Global, a: &BuildArgs) -> Res<u8> {
    let mut extra = BTreeMap::new();
    let (graph, name, params, predicted): (MultiGraph, &str, Value, Option<CrValue>) = match a.family {
        Family::S => {
            let (n, m, c) = (need(a.n, "n", "S")?, need(a.m, "m", "S")?, a.c.unwrap_or(0));
            let sg = build_s_graph(n, m, c).map_err(build_err)?;
            if a.certify {
                extra.insert("cr", serde_json::to_value(certify(&sg)?).unwrap());
            }
            let pred = CrValue::paper(sg.predicted_cr() as u64);
            (sg.graph, "S", json!({ "n": n, "m": m, "c": c }), Some(pred))
        }
        Family::Q => {
            let (qa, qb, n, t) = (need(a.a, "a", "Q")?, need(a.b, "b", "Q")?, need(a.n, "n", "Q")?, need(a.t, "t", "Q")?);
            let q = build_q_member(qa, qb, n, t).map_err(build_err)?;
            let sg = q.staircase;
            if a.certify {
                extra.insert("cr", serde_json::to_value(certify(&sg)?).unwrap());
            }
            let pred = CrValue::paper(sg.predicted_cr() as u64);
            let params = json!({ "a": qa, "b": qb, "n": n, "t": t, "m": sg.m, "c": sg.c });
            (sg.graph, "Q", params, Some(pred))
        }
        Family::H => {
            let (w, s) = (need(a.w, "w", "H")?, need(a.s, "s", "H")?);
            let h = build_h_graph(w, s).map_err(build_err)?;
            (h.graph, "H", json!({ "w": w, "s": s }), Some(h.predicted))
        }
        Family::R => {
            let (d, dp, p) = (need(a.d, "d", "R")?, need(a.dp, "D", "R")?, need(a.p, "p", "R")?);
            let (graph, rep) = build_r(d, dp, p).map_err(zip_err)?;
            extra.insert("threeConnected", json!(rep.three_connected));
            extra.insert("sites", serde_json::to_value(&rep.sites).unwrap());
            (graph, "R", json!({ "d": d, "D": dp, "p": p }), Some(rep.predicted))
        }
        Family::K => {
            let n = need(a.n, "n", "K")?;
            (MultiGraph::complete(n), "K", json!({ "n": n }), None)
        }
        Family::Kb => {
            let (d, dp) = (need(a.d, "d", "Kb")?, need(a.dp, "D", "Kb")?);
            (MultiGraph::complete_bipartite(d, dp), "Kb", json!({ "d": d, "D": dp }), None)
        }
    };
    let mut body = json!({ "family": name, "params": params, "measured": measure(&graph), "predictedCr": predicted });
    if let Value::Object(m) = &mut body {
        m.extend(extra.into_iter().map(|(k, v)| (k.to_string(), v)));
    }
    write_outputs(g, &graph, name, &report("build", g, body), &a.output)?;
    Ok(0)
}

fn search(g: &Global, max_level: Option<usize>) -> SearchOptions {
    SearchOptions {
        budget: g.budget,
        max_level,
        ..SearchOptions::default()
    }
}

fn cr_value(r: &CrResult) -> Value {
    match r.value {
        Some(v) => json!(v),
        None => json!("unknown"),
    }
}

fn cmd_verify(g: &Global, a: &VerifyArgs) -> Res<u8> {
    let graph = read_graph(&a.graph)?;
    let mut checks = serde_json::Map::new();
    let (mut fail, mut unknown) = (false, false);
    if a.planar {
        checks.insert("planar".into(), json!(ccrit::is_planar(&graph)));
    }
    if a.simple {
        checks.insert("simple".into(), json!(graph.is_simple()));
    }
    if let Some(k) = a.connectivity {
        let (v, e) = (vertex_connectivity_at_least(&graph, k), edge_connectivity_at_least(&graph, k));
        fail |= !(v && e);
        checks.insert("connectivity".into(), json!({ "k": k, "vertex": v, "edge": e }));
    }
    if a.average_degree {
        checks.insert("averageDegree".into(), json!(graph.average_degree().map(|r| r.to_string()).ok()));
    }
    if a.cr_exact {
        let r = cr_exact(&graph, &search(g, None)).map_err(cr_err)?;
        unknown |= !r.exact;
        checks.insert("crExact".into(), json!({ "value": cr_value(&r), "result": r }));
    }
    if let Some(k) = a.critical {
        let mut opts = CriticalOptions {
            budget: g.budget,
            ..CriticalOptions::default()
        };
        opts.insert.seed = g.seed;
        let rep = is_crossing_critical(&graph, k, &opts);
        match rep.verdict {
            Verdict::Critical => {}
            Verdict::NotCritical { .. } => fail = true,
            Verdict::Unknown { .. } => unknown = true,
        }
        let word = match rep.verdict {
            Verdict::Critical => "critical",
            Verdict::NotCritical { .. } => "not-critical",
            Verdict::Unknown { .. } => "unknown",
        };
        checks.insert("critical".into(), json!({ "verdict": word, "report": rep }));
    }
    let body = json!({ "graph": a.graph.display().to_string(), "measured": measure(&graph), "checks": checks });
    emit(&json(&report("verify", g, body)), None, false)?;
    Ok(if fail {
        EXIT_FAILED
    } else if unknown {
        EXIT_UNKNOWN
    } else {
        0
    })
}

fn print_cr(g: &Global, command: &str, r: &CrResult) -> Res<u8> {
    let body = json!({ "value": cr_value(r), "result": r });
    emit(&json(&report(command, g, body)), None, false)?;
    Ok(if r.exact { 0 } else { EXIT_UNKNOWN })
}

fn cmd_cr(g: &Global, a: &CrArgs) -> Res<u8> {
    let graph = read_graph(&a.graph)?;
    let r = cr_exact(&graph, &search(g, a.max_level)).map_err(cr_err)?;
    print_cr(g, "cr", &r)
}

fn cmd_tcr(g: &Global, a: &TcrArgs) -> Res<u8> {
    let t: Tile = read_json(&a.tile)?;
    t.validate().map_err(Failure::params)?;
    let r = tcr_exact(&t, a.bundle, &search(g, a.max_level)).map_err(cr_err)?;
    print_cr(g, "tcr", &r)
}

fn cmd_tile(a: &TileArgs) -> Res<u8> {
    let t = match a.family {
        TileFamily::S => build_s_tile(need(a.n, "n", "S")?, &a.contract).map_err(build_err)?.tile,
        TileFamily::H => build_h_tile(need(a.w, "w", "H")?).map_err(build_err)?.tile,
    };
    let t = if a.invert_right { t.invert_right() } else { t };
    emit(&json(&t), a.out.as_deref(), false)?;
    Ok(0)
}

fn parse_sigma(pairs: &[String]) -> Res<Option<BTreeMap<u32, u32>>> {
    if pairs.is_empty() {
        return Ok(None);
    }
    let mut m = BTreeMap::new();
    for p in pairs {
        let (x, y) = p.split_once(':').ok_or_else(|| Failure::params(format!("sigma entry {p:?} is not x:y")))?;
        let num = |s: &str| s.trim().parse::<u32>().map_err(|e| Failure::params(format!("sigma entry {p:?}: {e}")));
        m.insert(num(x)?, num(y)?);
    }
    Ok(Some(m))
}

fn coherence_word(c: &Coherence) -> &'static str {
    match c {
        Coherence::Found { .. } => "found",
        Coherence::Absent => "absent",
        Coherence::Unknown => "unknown",
    }
}

fn cmd_zip(g: &Global, a: &ZipArgs) -> Res<u8> {
    let (g1, g2) = (read_graph(&a.g1)?, read_graph(&a.g2)?);
    if a.classes {
        let classes = all_zips(&g1, a.v1, &g2, a.v2).map_err(zip_err)?;
        let body = json!({ "classes": classes.len() });
        emit(&json(&report("zip", g, body)), None, false)?;
        return Ok(0);
    }
    let sigma = parse_sigma(&a.sigma)?;
    let spec = ZipSpec {
        g1: &g1,
        v1: a.v1,
        g2: &g2,
        v2: a.v2,
        sigma,
    };
    let z = zip(&spec).map_err(zip_err)?;
    let site = |h: &MultiGraph, v: u32| {
        json!({
            "vertex": v,
            "degree": h.degree(v),
            "homogeneous": homogeneous_sufficient(h, v),
            "coherentBundles": coherence_word(&find_two_coherent_bundles(h, v)),
        })
    };
    let body = json!({ "sites": [site(&g1, a.v1), site(&g2, a.v2)], "measured": measure(&z.graph) });
    write_outputs(g, &z.graph, "zip", &report("zip", g, body), &a.output)?;
    Ok(0)
}

fn solve(a: &SolveArgs) -> Res<GammaParams> {
    if a.minimal_t {
        let t = minimal_t(a.a, a.b, a.k).map_err(gamma_err)?;
        return solve_params(a.a, a.b, a.k, t, true).map_err(gamma_err);
    }
    solve_params(a.a, a.b, a.k, a.t.unwrap_or(a.k), a.expert).map_err(gamma_err)
}

fn cmd_solve(a: &SolveArgs, full: bool) -> Res<u8> {
    let p = solve(a)?;
    let text = if full { json(&predict(&p)) } else { json(&p) };
    emit(&text, None, false)?;
    Ok(0)
}

fn cmd_gamma_build(g: &Global, a: &SolveArgs, out: &Output) -> Res<u8> {
    let p = solve(a)?;
    let (graph, b) = build_gamma(&p).map_err(gamma_err)?;
    let body = serde_json::to_value(&b).unwrap();
    write_outputs(g, &graph, "gamma", &report("gamma build", g, json!({ "build": body })), out)?;
    Ok(0)
}
