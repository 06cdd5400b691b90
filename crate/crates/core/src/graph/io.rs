//! Edge-list text, DOT and JSON formats.

use std::fmt::Write as _;

use super::MultiGraph;
use crate::error::GraphError;

/// `V E` on the first line, then one `u v` line per edge. Vertex ids are
/// written as their positions `0..V` in id order.
pub fn write_edge_list(g: &MultiGraph) -> String {
    let d = g.dense();
    let mut s = String::new();
    writeln!(s, "{} {}", d.len(), d.ends.len()).unwrap();
    for &(a, b) in &d.ends {
        writeln!(s, "{a} {b}").unwrap();
    }
    s
}

pub fn read_edge_list(text: &str) -> Result<MultiGraph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    let nums = parse_pair(ln, header)?;
    let (n, m) = (nums.0 as usize, nums.1 as usize);
    let mut g = MultiGraph::with_vertices(n);
    for (ln, l) in lines {
        let (u, v) = parse_pair(ln, l)?;
        g.add_edge(u, v).map_err(|e| GraphError::Parse {
            line: ln,
            msg: e.to_string(),
        })?;
    }
    if g.edge_count() != m {
        return Err(GraphError::Parse {
            line: 1,
            msg: format!("header declares {m} edges, found {}", g.edge_count()),
        });
    }
    Ok(g)
}

fn parse_pair(line: usize, l: &str) -> Result<(u32, u32), GraphError> {
    let parts: Vec<&str> = l.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(GraphError::Parse {
            line,
            msg: "expected two integers".into(),
        });
    }
    let p = |s: &str| {
        s.parse::<u32>().map_err(|e| GraphError::Parse {
            line,
            msg: e.to_string(),
        })
    };
    Ok((p(parts[0])?, p(parts[1])?))
}

pub fn write_dot(g: &MultiGraph, name: &str) -> String {
    let mut s = String::new();
    writeln!(s, "graph {name} {{").unwrap();
    for &v in g.vertices() {
        match g.label(v) {
            Some(t) => writeln!(s, "  {v} [label=\"{v}:{t}\"];").unwrap(),
            None => writeln!(s, "  {v};").unwrap(),
        }
    }
    for e in g.edges() {
        writeln!(s, "  {} -- {};", e.u, e.v).unwrap();
    }
    s.push_str("}\n");
    s
}

pub fn to_json(g: &MultiGraph) -> serde_json::Value {
    serde_json::to_value(g).expect("graph serialises")
}

pub fn from_json(v: &serde_json::Value) -> Result<MultiGraph, GraphError> {
    let g: MultiGraph =
        serde_json::from_value(v.clone()).map_err(|e| GraphError::Invalid(e.to_string()))?;
    g.validate()?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let mut g = MultiGraph::complete(4);
        g.add_edge(0, 1).unwrap();
        let text = write_edge_list(&g);
        assert!(text.starts_with("4 7\n"));
        let h = read_edge_list(&text).unwrap();
        assert_eq!(g, h);
        assert_eq!(write_edge_list(&h), text);
    }

    #[test]
    fn bad_input() {
        assert!(read_edge_list("").is_err());
        assert!(read_edge_list("2 1\n0 0\n").is_err());
        assert!(read_edge_list("2 2\n0 1\n").is_err());
        assert!(read_edge_list("2 1\n0 x\n").is_err());
    }

    #[test]
    fn json_round_trip() {
        let mut g = MultiGraph::complete_bipartite(2, 3);
        g.set_label(0, "white");
        let h = from_json(&to_json(&g)).unwrap();
        assert_eq!(g, h);
        assert!(write_dot(&g, "g").contains("0 -- 2"));
    }
}
