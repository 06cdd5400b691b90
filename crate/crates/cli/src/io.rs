use std::fs;
use std::path::Path;

use ccrit::graph::io::{from_json, read_edge_list, to_json, write_dot, write_edge_list};
use ccrit::MultiGraph;
use serde::Serialize;

use crate::{Format, EXIT_PARAMS};

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn params(message: impl ToString) -> Self {
        Failure {
            code: EXIT_PARAMS,
            message: message.to_string(),
        }
    }
}

pub type Res<T> = Result<T, Failure>;

fn read_text(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| Failure::params(format!("{}: {e}", path.display())))
}

/// JSON when the file starts with `{`, edge list otherwise.
pub fn read_graph(path: &Path) -> Res<MultiGraph> {
    let text = read_text(path)?;
    let parsed = if text.trim_start().starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(&text).map_err(Failure::params)?;
        from_json(&v)
    } else {
        read_edge_list(&text)
    };
    parsed.map_err(|e| Failure::params(format!("{}: {e}", path.display())))
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Res<T> {
    serde_json::from_str(&read_text(path)?).map_err(|e| Failure::params(format!("{}: {e}", path.display())))
}

pub fn render_graph(g: &MultiGraph, format: Format, name: &str) -> String {
    match format {
        Format::Edgelist => write_edge_list(g),
        Format::Dot => write_dot(g, name),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&to_json(g)).expect("json");
            s.push('\n');
            s
        }
    }
}

pub fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serialises");
    s.push('\n');
    s
}

/// Write `text` to `path`, or to stdout (`stderr` false) or stderr.
pub fn emit(text: &str, path: Option<&Path>, stderr: bool) -> Res<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::params(format!("{}: {e}", p.display()))),
        None if stderr => {
            eprint!("{text}");
            Ok(())
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
